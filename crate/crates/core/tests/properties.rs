use orbidiss::text::{
    emit_curve, emit_dissection, emit_quiver, emit_word, parse_curve, parse_dissection, parse_quiver, parse_word,
};
use orbidiss::{
    enumerate_bands, enumerate_strings, fixtures, is_skew_gentle, skein_normalize, skewgentle_to_orbifold, Curve,
    CurveShape, HomotopyBand, HomotopyWord, Mark, Presentation, Sign,
};
use proptest::prelude::*;

/// Arrows as (source, target) indices, relation candidates and special
/// flags, turned into whatever presentation those choices allow.
fn presentation() -> impl Strategy<Value = Option<Presentation>> {
    (1usize..=4)
        .prop_flat_map(|n| {
            (
                Just(n),
                prop::collection::vec((0..n, 0..n), 0..=5),
                prop::collection::vec((0usize..5, 0usize..5), 0..=4),
                prop::collection::vec(any::<bool>(), 5),
            )
        })
        .prop_map(|(n, arrows, rels, special)| {
            let vertices: Vec<String> = (1..=n).map(|v| v.to_string()).collect();
            let arrows: Vec<(String, String, String)> = arrows
                .iter()
                .enumerate()
                .map(|(i, (s, t))| (format!("a{i}"), vertices[*s].clone(), vertices[*t].clone()))
                .collect();
            let special: Vec<String> = arrows
                .iter()
                .zip(&special)
                .filter(|((_, s, t), flag)| **flag && s == t)
                .map(|((id, _, _), _)| id.clone())
                .collect();
            let rels: Vec<(String, String)> = rels
                .iter()
                .filter(|(a, b)| *a < arrows.len() && *b < arrows.len() && arrows[*a].2 == arrows[*b].1)
                .map(|(a, b)| (arrows[*a].0.clone(), arrows[*b].0.clone()))
                .filter(|(a, b)| !special.contains(a) && !special.contains(b))
                .collect();
            let v: Vec<&str> = vertices.iter().map(String::as_str).collect();
            let a: Vec<(&str, &str, &str)> = arrows
                .iter()
                .map(|(i, s, t)| (i.as_str(), s.as_str(), t.as_str()))
                .collect();
            let r: Vec<(&str, &str)> = rels.iter().map(|(x, y)| (x.as_str(), y.as_str())).collect();
            let s: Vec<&str> = special.iter().map(String::as_str).collect();
            Presentation::from_parts(&v, &a, &r, &s).ok()
        })
}

fn mark() -> impl Strategy<Value = Mark> {
    let sign = prop_oneof![Just(Sign::Plus), Just(Sign::Minus)];
    prop_oneof![
        (1u8..=3, sign.clone()).prop_map(|(e, s)| Mark::cross(format!("e{e}"), s)),
        (1u8..=2).prop_map(|w| Mark::Through(format!("w{w}"))),
        (1u8..=2, sign).prop_map(|(w, s)| Mark::Around(format!("w{w}"), s)),
    ]
}

fn curve() -> impl Strategy<Value = Curve> {
    (any::<bool>(), prop::collection::vec(mark(), 0..12)).prop_map(|(closed, marks)| Curve {
        shape: if closed {
            CurveShape::Closed
        } else {
            CurveShape::Open {
                start: orbidiss::Endpoint::Marked("m1".into()),
                end: orbidiss::Endpoint::Orbifold("w1".into(), Sign::Minus),
            }
        },
        marks,
    })
}

fn word_corpus() -> Vec<(Presentation, Vec<HomotopyWord>)> {
    [
        fixtures::a3_rel(),
        fixtures::kronecker(),
        fixtures::square(),
        fixtures::one_special(),
        fixtures::two_special(),
    ]
    .into_iter()
    .map(|p| {
        let words = enumerate_strings(&p, 4, 2)
            .into_iter()
            .map(HomotopyWord::String)
            .chain(enumerate_bands(&p, 4, 2).into_iter().map(HomotopyWord::Band))
            .collect();
        (p, words)
    })
    .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn quiver_text_round_trips(p in presentation()) {
        let Some(p) = p else { return Ok(()) };
        let text = emit_quiver(&p);
        let back = parse_quiver(&text).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(emit_quiver(&back), text);
    }

    #[test]
    fn dissection_text_round_trips(p in presentation()) {
        let Some(p) = p else { return Ok(()) };
        if !p.quiver().is_connected() || !is_skew_gentle(&p).ok() {
            return Ok(());
        }
        let text = emit_dissection(&skewgentle_to_orbifold(&p).unwrap());
        prop_assert_eq!(emit_dissection(&parse_dissection(&text).unwrap()), text);
    }

    #[test]
    fn curve_text_round_trips(c in curve()) {
        prop_assert_eq!(parse_curve(&emit_curve(&c)).unwrap(), c);
    }

    #[test]
    fn skein_normal_forms_are_reduced(c in curve()) {
        let n = skein_normalize(&c);
        prop_assert_eq!(skein_normalize(&n), n.clone());
        prop_assert!(n.marks.iter().all(|m| !matches!(m, Mark::Through(_) | Mark::Around(_, Sign::Minus))));
        let len = n.marks.len();
        let pairs = if n.shape == CurveShape::Closed && len > 1 { len } else { len.saturating_sub(1) };
        for i in 0..pairs {
            let (a, b) = (&n.marks[i], &n.marks[(i + 1) % len]);
            let crossing_back = matches!((a, b), (Mark::Cross { edge: e, sign: s }, Mark::Cross { edge: f, sign: t }) if e == f && s != t);
            let twice_around = matches!((a, b), (Mark::Around(v, _), Mark::Around(w, _)) if v == w);
            prop_assert!(!crossing_back && !twice_around, "{:?}", n);
        }
    }

    #[test]
    fn canonical_forms_are_stable(pick in any::<prop::sample::Index>(), turn in 0usize..8, flip in any::<bool>()) {
        let corpus = word_corpus();
        let all: Vec<(&Presentation, &HomotopyWord)> =
            corpus.iter().flat_map(|(p, ws)| ws.iter().map(move |w| (p, w))).collect();
        let (p, w) = all[pick.index(all.len())];
        prop_assert_eq!(&w.canonicalize(p), w);
        let moved = match w {
            HomotopyWord::String(s) => HomotopyWord::String(if flip { s.reversed(p) } else { s.clone() }),
            HomotopyWord::Band(b) => {
                let mut letters = if flip { b.reversed().letters } else { b.letters.clone() };
                let k = turn % letters.len();
                letters.rotate_left(k);
                HomotopyWord::Band(HomotopyBand { letters })
            }
        };
        let c = moved.canonicalize(p);
        prop_assert_eq!(&c, w);
        prop_assert_eq!(c.canonicalize(p), c);
    }

    #[test]
    fn word_text_round_trips(pick in any::<prop::sample::Index>()) {
        let corpus = word_corpus();
        let all: Vec<(&Presentation, &HomotopyWord)> =
            corpus.iter().flat_map(|(p, ws)| ws.iter().map(move |w| (p, w))).collect();
        let (p, w) = all[pick.index(all.len())];
        prop_assert_eq!(&parse_word(p, &emit_word(w)).unwrap(), w);
    }
}
