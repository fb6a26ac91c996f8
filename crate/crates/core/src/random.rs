//! Seeded random equivariant problems, for fuzzing the index pipeline
//! against the oracle.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::equivariant::{
    EquationSystem, EquivariantFunction, EquivariantOneForm, IndexProblem, KProfile, ProfileEntry,
};
use crate::group_rep::{AbelianGroup, Character, DiagonalRepresentation};
use crate::polyring::{Monomial, Polynomial};
use crate::scalar::ExactField;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RandomProblemParams {
    pub max_vars: usize,
    pub coefficient_bound: i64,
    /// Maximal total degree of a form coefficient monomial.
    pub max_form_degree: u32,
    /// Maximal total degree of an equation monomial.
    pub max_equation_degree: u32,
    pub max_terms: usize,
}

impl Default for RandomProblemParams {
    fn default() -> Self {
        RandomProblemParams {
            max_vars: 4,
            coefficient_bound: 5,
            max_form_degree: 2,
            max_equation_degree: 3,
            max_terms: 3,
        }
    }
}

fn monomials_up_to(nvars: usize, min_degree: u32, max_degree: u32) -> Vec<Monomial> {
    let mut out = vec![Vec::new()];
    for _ in 0..nvars {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<u32>| {
                (0..=max_degree).map(move |e| {
                    let mut v = prefix.clone();
                    v.push(e);
                    v
                })
            })
            .filter(|v| v.iter().sum::<u32>() <= max_degree)
            .collect();
    }
    out.into_iter().map(Monomial::new).filter(|m| m.degree() >= min_degree).collect()
}

fn random_poly<C: ExactField>(
    rng: &mut ChaCha8Rng,
    rep: &DiagonalRepresentation,
    target: &Character,
    min_degree: u32,
    max_degree: u32,
    params: &RandomProblemParams,
) -> Polynomial<C> {
    let n = rep.nvars();
    let candidates: Vec<Monomial> = monomials_up_to(n, min_degree, max_degree)
        .into_iter()
        .filter(|m| &rep.char_of_monomial(m).expect("arity") == target)
        .collect();
    let mut p = Polynomial::zero(n);
    if candidates.is_empty() {
        return p;
    }
    let terms = rng.random_range(1..=params.max_terms);
    for _ in 0..terms {
        let m = candidates.choose(rng).expect("nonempty").clone();
        let c = rng.random_range(-params.coefficient_bound..=params.coefficient_bound);
        p.add_term(m, C::from_i64(c));
    }
    p
}

/// A valid problem drawn from `seed`: a group among `1`, `Z/2`, `Z/3`, at
/// most one trivial-character equation, and random equivariant forms.
pub fn random_problem<C: ExactField>(seed: u64, params: &RandomProblemParams) -> IndexProblem<C> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let group = match rng.random_range(0..3) {
            0 => AbelianGroup::trivial(),
            1 => AbelianGroup::cyclic(2).expect("order 2"),
            _ => AbelianGroup::cyclic(3).expect("order 3"),
        };
        let nvars = rng.random_range(2.min(params.max_vars)..=params.max_vars);
        let chars = group.characters();
        // keep at least one fixed coordinate
        let mut weights: Vec<Character> = (0..nvars).map(|_| chars.choose(&mut rng).expect("chars").clone()).collect();
        weights[0] = group.trivial_character();
        let names = (0..nvars)
            .map(|i| ["x", "y", "z", "w", "u", "v"].get(i).map_or(format!("t{i}"), |s| s.to_string()))
            .collect();
        let rep = DiagonalRepresentation::new(group.clone(), weights, names).expect("valid representation");

        let trivial = group.trivial_character();
        let m1 = rep.multiplicity(&trivial);
        let mut equations = Vec::new();
        if m1 >= 2 && rng.random_bool(0.5) {
            let poly = random_poly::<C>(&mut rng, &rep, &trivial, 2, params.max_equation_degree, params);
            if !poly.is_zero() {
                equations.push(EquivariantFunction { character: trivial.clone(), poly });
            }
        }
        let equations = EquationSystem::new(equations);

        let mut remaining = m1 - equations.count(&trivial);
        let mut entries = Vec::new();
        let mut stuck = false;
        while remaining > 0 {
            let options: Vec<&Character> =
                chars.iter().filter(|c| rep.multiplicity(c) as i64 - equations.count(c) as i64 >= 1).collect();
            let Some(chi) = options.choose(&mut rng) else {
                stuck = true;
                break;
            };
            let free = rep.multiplicity(chi) - equations.count(chi);
            let k = rng.random_range(1..=free.min(remaining));
            entries.push(ProfileEntry { character: (*chi).clone(), k: k as u32 });
            remaining -= k;
        }
        if stuck {
            continue;
        }
        let profile = KProfile::new(entries);

        let mut forms = Vec::new();
        for entry in profile.entries() {
            let count = crate::equivariant::required_forms(&rep, &equations, entry);
            let mut pair_forms = Vec::new();
            for _ in 0..count {
                let coefficients = (0..nvars)
                    .map(|s| {
                        let target = entry.character.add(&rep.weight(s).neg()).expect("same group");
                        if rng.random_bool(0.15) {
                            Polynomial::zero(nvars)
                        } else {
                            random_poly::<C>(&mut rng, &rep, &target, 1, params.max_form_degree, params)
                        }
                    })
                    .collect();
                pair_forms.push(EquivariantOneForm { character: entry.character.clone(), coefficients });
            }
            forms.push(pair_forms);
        }
        let problem = IndexProblem::new(rep, equations, profile, forms);
        debug_assert!(problem.validate().is_valid(), "{}", problem.validate());
        return problem;
    }
}
