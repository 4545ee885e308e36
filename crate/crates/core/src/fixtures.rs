//! Small named presentations used throughout tests, docs and the CLI.

use crate::presentation::Presentation;

fn build(
    vertices: &[&str],
    arrows: &[(&str, &str, &str)],
    relations: &[(&str, &str)],
    special: &[&str],
) -> Presentation {
    Presentation::from_parts(vertices, arrows, relations, special).expect("fixture is well formed")
}

/// `1 -a-> 2`
pub fn a2() -> Presentation {
    build(&["1", "2"], &[("a", "1", "2")], &[], &[])
}

/// Two parallel arrows `a, b: 1 -> 2`.
pub fn kronecker() -> Presentation {
    build(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2")], &[], &[])
}

/// `1 -a-> 2 -b-> 3`, no relations.
pub fn a3() -> Presentation {
    build(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")], &[], &[])
}

/// `1 -a-> 2 -b-> 3` with `ab = 0`.
pub fn a3_rel() -> Presentation {
    build(
        &["1", "2", "3"],
        &[("a", "1", "2"), ("b", "2", "3")],
        &[("a", "b")],
        &[],
    )
}

/// Oriented 3-cycle with all three compositions zero.
pub fn three_cycle() -> Presentation {
    build(
        &["1", "2", "3"],
        &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1")],
        &[("a", "b"), ("b", "c"), ("c", "a")],
        &[],
    )
}

/// A single loop without relations (infinite dimensional).
pub fn one_loop() -> Presentation {
    build(&["1"], &[("a", "1", "1")], &[], &[])
}

/// A single loop with `a² = 0`.
pub fn nil_loop() -> Presentation {
    build(&["1"], &[("a", "1", "1")], &[("a", "a")], &[])
}

/// `1 -a-> 2` with a special loop `e` at the source.
pub fn one_special() -> Presentation {
    build(&["1", "2"], &[("a", "1", "2"), ("e", "1", "1")], &[], &["e"])
}

/// `1 -a-> 2 -b-> 3`, `ab = 0`, special loop `e` at 2.
pub fn transit_special() -> Presentation {
    build(
        &["1", "2", "3"],
        &[("a", "1", "2"), ("b", "2", "3"), ("e", "2", "2")],
        &[("a", "b")],
        &["e"],
    )
}

/// `1 -a-> 2 <-b- 3` with special loops at 1 and 3.
pub fn two_special() -> Presentation {
    build(
        &["1", "2", "3"],
        &[("a", "1", "2"), ("b", "3", "2"), ("e", "1", "1"), ("f", "3", "3")],
        &[],
        &["e", "f"],
    )
}

/// A gentle algebra of type Ã with four vertices.
pub fn square() -> Presentation {
    build(
        &["1", "2", "3", "4"],
        &[("a", "1", "2"), ("b", "2", "3"), ("c", "1", "4"), ("d", "4", "3")],
        &[("a", "b")],
        &[],
    )
}

/// Every named fixture, with its name.
pub fn all() -> Vec<(&'static str, Presentation)> {
    vec![
        ("a2", a2()),
        ("kronecker", kronecker()),
        ("a3", a3()),
        ("a3_rel", a3_rel()),
        ("three_cycle", three_cycle()),
        ("one_loop", one_loop()),
        ("nil_loop", nil_loop()),
        ("one_special", one_special()),
        ("transit_special", transit_special()),
        ("two_special", two_special()),
        ("square", square()),
    ]
}
