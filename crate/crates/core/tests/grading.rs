mod common;

use common::closed_curves;
use orbidiss::ribbon::Ribbon;
use orbidiss::{
    dualize, enumerate_bands, enumerate_strings, fixtures, grade, skewgentle_to_orbifold, winding_number, Curve,
    CurveModel, CurveShape, Endpoint, Error, HomotopyString, HomotopyWord, Mark, PolygonComplex, Side, Sign,
};

/// The step across the region between two crossings, read off the dual
/// polygon: +1 iff its boundary segment lies on the counterclockwise walk
/// strictly between the exit side and the entry side.
fn walk_step(d: &PolygonComplex, r: &Ribbon, from: &Mark, to: &Mark) -> i64 {
    let (Mark::Cross { edge: e, sign: s }, Mark::Cross { edge: f, sign: t }) = (from, to) else {
        panic!("only crossings")
    };
    let entry = (e.as_str(), u8::from(*s == Sign::Plus));
    let exit = (f.as_str(), u8::from(*t == Sign::Minus));
    let vertex = r.vertex_of(r.dart(entry.0, entry.1).unwrap());
    assert_eq!(vertex, r.vertex_of(r.dart(exit.0, exit.1).unwrap()));
    let k = r.vertices[..vertex]
        .iter()
        .filter(|v| v.kind != orbidiss::ribbon::VertexKind::Orbifold)
        .count();
    let dual = dualize(d).unwrap();
    let sides = &dual.polygons[k].sides;
    let find = |(edge, end): (&str, u8)| {
        sides
            .iter()
            .position(|s| *s == Side::internal(edge, end == 1))
            .expect("side of the region")
    };
    let (i, j) = (find(entry), find(exit));
    let n = sides.len();
    let left = (1..n)
        .map(|k| (j + k) % n)
        .take_while(|&k| k != i)
        .any(|k| matches!(sides[k], Side::BoundarySegment(_)));
    if left {
        1
    } else {
        -1
    }
}

fn reversed(c: &Curve) -> Curve {
    let marks = c
        .marks
        .iter()
        .rev()
        .map(|m| match m {
            Mark::Cross { edge, sign } => Mark::cross(edge.clone(), sign.flip()),
            other => other.clone(),
        })
        .collect();
    let shape = match &c.shape {
        CurveShape::Open { start, end } => CurveShape::Open {
            start: end.clone(),
            end: start.clone(),
        },
        CurveShape::Closed => CurveShape::Closed,
    };
    Curve { shape, marks }
}

#[test]
fn steps_follow_the_marked_point_side() {
    let mut checked = 0;
    for p in [
        fixtures::a2(),
        fixtures::a3(),
        fixtures::a3_rel(),
        fixtures::kronecker(),
        fixtures::square(),
    ] {
        let d = skewgentle_to_orbifold(&p).unwrap();
        let r = d.ribbon().unwrap();
        let model = CurveModel::new(&p, &d).unwrap();
        let words = enumerate_strings(&p, 4, 2)
            .into_iter()
            .map(HomotopyWord::String)
            .chain(enumerate_bands(&p, 4, 2).into_iter().map(HomotopyWord::Band));
        for w in words {
            let g = match model.string_to_curve(&w) {
                Ok(g) => g,
                Err(Error::InteriorRegion(_)) => continue,
                Err(e) => panic!("{w:?}: {e}"),
            };
            let marks = &g.curve.marks;
            for (k, pair) in marks.windows(2).enumerate() {
                let step = walk_step(&d, &r, &pair[0], &pair[1]);
                assert_eq!(g.grading[k + 1] - g.grading[k], step, "{w:?}");
                checked += 1;
            }
            if g.curve.shape == CurveShape::Closed {
                let wrap = walk_step(&d, &r, marks.last().unwrap(), &marks[0]);
                assert_eq!(g.grading.last().unwrap() + wrap - g.grading[0], g.defect);
            }
        }
    }
    assert!(checked > 50);
}

#[test]
fn backward_sweep_raises_the_grading() {
    let p = fixtures::a2();
    let d = skewgentle_to_orbifold(&p).unwrap();
    let model = CurveModel::new(&p, &d).unwrap();
    let s = enumerate_strings(&p, 1, 1)
        .into_iter()
        .find(|s| s.letters.len() == 1)
        .unwrap();
    let g = model.string_to_curve(&HomotopyWord::String(s)).unwrap();
    let forward = grade(&d, &g.curve, 0).unwrap();
    let back = grade(&d, &reversed(&g.curve), 0).unwrap();
    let rise = |f: &[i64]| f.windows(2).map(|w| w[1] - w[0]).collect::<Vec<_>>();
    let mut expected = rise(&forward.grading);
    expected.reverse();
    assert_eq!(rise(&back.grading), expected.iter().map(|x| -x).collect::<Vec<_>>());
}

#[test]
fn a2_one_letter_string_crosses_both_arcs() {
    let p = fixtures::a2();
    let d = skewgentle_to_orbifold(&p).unwrap();
    let model = CurveModel::new(&p, &d).unwrap();
    let s = enumerate_strings(&p, 1, 1)
        .into_iter()
        .find(|s| s.letters.len() == 1)
        .unwrap();
    let g = model.string_to_curve(&HomotopyWord::String(s)).unwrap();
    assert_eq!(g.curve.marks.len(), 2);
    assert_eq!(g.grading.len(), 2);
}

#[test]
fn no_crossings_no_grading() {
    let p = fixtures::one_special();
    let d = skewgentle_to_orbifold(&p).unwrap();
    let model = CurveModel::new(&p, &d).unwrap();
    let w = HomotopyWord::String(HomotopyString::trivial("1", Some(Sign::Plus)));
    let c = model.string_to_curve(&w).unwrap().curve;
    assert!(c.marks.is_empty());
    let g = grade(&d, &c, 7).unwrap();
    assert!(g.grading.is_empty());
    assert_eq!(g.defect, 0);
}

#[test]
fn kronecker_core_curve() {
    let d = skewgentle_to_orbifold(&fixtures::kronecker()).unwrap();
    let cores: Vec<Curve> = closed_curves(&d, 2)
        .into_iter()
        .filter(|c| c.marks.len() == 2)
        .collect();
    assert_eq!(cores.len(), 1);
    let core = &cores[0];
    assert_eq!(winding_number(&d, core).unwrap(), 0);
    let mut gradings = Vec::new();
    for c in [core.clone(), reversed(core)] {
        for k in 0..2 {
            let mut r = c.clone();
            r.marks.rotate_left(k);
            let g = grade(&d, &r, 0).unwrap();
            assert_eq!(g.defect, 0);
            gradings.push(g.grading);
        }
    }
    assert!(gradings.contains(&vec![0, 1]) && gradings.contains(&vec![0, -1]));

    let mut doubled = core.clone();
    doubled.marks.extend(core.marks.clone());
    assert_eq!(winding_number(&d, &doubled).unwrap(), 0);
}

#[test]
fn winding_is_antisymmetric_and_linear() {
    let d = skewgentle_to_orbifold(&fixtures::three_cycle()).unwrap();
    let curves = closed_curves(&d, 4);
    assert!(curves.iter().any(|c| winding_number(&d, c).unwrap() != 0));
    for c in &curves {
        let w = winding_number(&d, c).unwrap();
        assert_eq!(winding_number(&d, &reversed(c)).unwrap(), -w);
        let mut doubled = c.clone();
        doubled.marks.extend(c.marks.clone());
        assert_eq!(winding_number(&d, &doubled).unwrap(), 2 * w);
        for k in 0..c.marks.len() {
            let mut r = c.clone();
            r.marks.rotate_left(k);
            assert_eq!(winding_number(&d, &r).unwrap(), w);
        }
    }
}

#[test]
fn grading_shifts_with_the_start_value() {
    let d = skewgentle_to_orbifold(&fixtures::three_cycle()).unwrap();
    for c in closed_curves(&d, 3) {
        let base = grade(&d, &c, 0).unwrap();
        for k in [-3, 5] {
            let g = grade(&d, &c, k).unwrap();
            assert_eq!(g.grading, base.grading.iter().map(|f| f + k).collect::<Vec<_>>());
            assert_eq!(g.defect, base.defect);
        }
    }
}

#[test]
fn winding_rejects_open_curves() {
    let d = skewgentle_to_orbifold(&fixtures::a2()).unwrap();
    let c = Curve {
        shape: CurveShape::Open {
            start: Endpoint::Marked("x".into()),
            end: Endpoint::Marked("y".into()),
        },
        marks: vec![],
    };
    assert!(winding_number(&d, &c).is_err());
}
