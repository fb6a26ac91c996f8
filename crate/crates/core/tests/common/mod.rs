#![allow(dead_code)]

use equindex_core::{
    parse, AbelianGroup, DiagonalRepresentation, EquationSystem, EquivariantFunction, EquivariantOneForm, KProfile,
    Problem, ProfileEntry, Rational,
};

pub struct Pair<'a> {
    pub character: &'a [i64],
    pub k: u32,
    /// One map per form, from variable name to coefficient.
    pub forms: &'a [&'a [(&'a str, &'a str)]],
}

pub fn problem(orders: &[u32], vars: &[(&str, &[i64])], equations: &[(&[i64], &str)], pairs: &[Pair]) -> Problem {
    let group = AbelianGroup::new(orders.to_vec()).unwrap();
    let names: Vec<&str> = vars.iter().map(|(n, _)| *n).collect();
    let weights = vars.iter().map(|(_, w)| group.character(w).unwrap()).collect();
    let rep =
        DiagonalRepresentation::new(group.clone(), weights, names.iter().map(|s| s.to_string()).collect()).unwrap();
    let poly = |s: &str| parse::<Rational>(s, &names).unwrap();
    let equations = EquationSystem::new(
        equations
            .iter()
            .map(|(c, p)| EquivariantFunction { character: group.character(c).unwrap(), poly: poly(p) })
            .collect(),
    );
    let profile = KProfile::new(
        pairs.iter().map(|p| ProfileEntry { character: group.character(p.character).unwrap(), k: p.k }).collect(),
    );
    let forms = pairs
        .iter()
        .map(|p| {
            p.forms
                .iter()
                .map(|f| {
                    let coefficients = names
                        .iter()
                        .map(|n| f.iter().find(|(v, _)| v == n).map_or_else(|| poly("0"), |(_, c)| poly(c)))
                        .collect();
                    EquivariantOneForm { character: group.character(p.character).unwrap(), coefficients }
                })
                .collect()
        })
        .collect();
    Problem::new(rep, equations, profile, forms)
}

pub fn a1(form: &[(&str, &str)]) -> Problem {
    problem(&[], &[("x", &[]), ("y", &[])], &[(&[], "x^2 + y^2")], &[Pair { character: &[], k: 1, forms: &[form] }])
}

pub fn z2_sign_pair() -> Problem {
    problem(
        &[2],
        &[("x", &[0]), ("y", &[0]), ("z", &[1])],
        &[(&[0], "x^2 + y^2 + z^2")],
        &[Pair { character: &[1], k: 1, forms: &[&[("z", "x")]] }],
    )
}

pub fn z2_trivial_pair() -> Problem {
    problem(
        &[2],
        &[("x", &[0]), ("y", &[0]), ("z", &[1])],
        &[(&[0], "x^2 + y^2 + z^2")],
        &[Pair { character: &[0], k: 1, forms: &[&[("x", "x"), ("y", "-y")]] }],
    )
}

pub fn smooth(power: u32) -> Problem {
    let c = format!("x^{power}");
    problem(&[], &[("x", &[])], &[], &[Pair { character: &[], k: 1, forms: &[&[("x", c.as_str())]] }])
}

/// Problems with finite index, each paired with its expected value.
pub fn corpus() -> Vec<(&'static str, Problem, u64)> {
    vec![
        ("smooth x dx", smooth(1), 1),
        ("smooth x^3 dx", smooth(3), 3),
        ("a1 dx", a1(&[("x", "1")]), 2),
        ("a1 x dx - y dy", a1(&[("x", "x"), ("y", "-y")]), 4),
        (
            "a2 dx",
            problem(
                &[],
                &[("x", &[]), ("y", &[])],
                &[(&[], "x^2 + y^3")],
                &[Pair { character: &[], k: 1, forms: &[&[("x", "1")]] }],
            ),
            4,
        ),
        ("z2 sign pair", z2_sign_pair(), 2),
        ("z2 trivial pair", z2_trivial_pair(), 4),
        (
            "plane k=2 one form",
            problem(
                &[],
                &[("x", &[]), ("y", &[])],
                &[],
                &[Pair { character: &[], k: 2, forms: &[&[("x", "x + y^3"), ("y", "y^2")]] }],
            ),
            2,
        ),
    ]
}

/// The ICIS entries of the corpus (at least one equation).
pub fn icis_corpus() -> Vec<(&'static str, Problem)> {
    corpus().into_iter().filter(|(_, p, _)| !p.equations().is_empty()).map(|(n, p, _)| (n, p)).collect()
}
