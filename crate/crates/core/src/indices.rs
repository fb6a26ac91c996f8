//! Equivariant GSV-index, smooth-point index, and the Chern obstruction of an
//! ICIS computed as the difference against a generic linear collection.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::equivariant::{
    free_dimension, required_forms, EquationSystem, EquivariantOneForm, IndexProblem, KProfile, ValidationReport,
};
use crate::group_rep::DiagonalRepresentation;
use crate::local_algebra::{standard_basis, vanishing_axis, AlgebraError, Budget, Colength, DEFAULT_STEP_BUDGET};
use crate::polyring::{MonomialOrder, Polynomial};
use crate::scalar::ExactField;

pub const DEFAULT_COEFFICIENT_BOUND: u32 = 97;
pub const DEFAULT_RESAMPLE_LIMIT: u32 = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexOptions {
    pub budget: u64,
    pub coefficient_bound: u32,
    pub resample_limit: u32,
}

impl Default for IndexOptions {
    fn default() -> Self {
        IndexOptions {
            budget: DEFAULT_STEP_BUDGET,
            coefficient_bound: DEFAULT_COEFFICIENT_BOUND,
            resample_limit: DEFAULT_RESAMPLE_LIMIT,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IndexError {
    #[error("invalid problem:\n{0}")]
    Invalid(ValidationReport),
    #[error("the collection has a non-isolated special point (infinite colength)")]
    NonIsolated { generators: Vec<String> },
    #[error(transparent)]
    Budget(#[from] AlgebraError),
    #[error("genericity check failed: {0}")]
    GenericityFailure(String),
}

/// Whether the Macaulay oracle was consulted for this report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum OracleStatus {
    Skipped,
    Ran { verdict: String, oracle_value: Option<u64>, max_degree: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    pub value: u64,
    pub fixed_variables: Vec<String>,
    pub generators: Vec<String>,
    pub basis_size: usize,
    pub leading_exponents: Vec<Vec<u32>>,
    pub standard_monomials: Vec<String>,
    pub standard_monomial_count: u64,
    pub oracle: OracleStatus,
}

fn render<C: ExactField>(polys: &[Polynomial<C>], names: &[&str]) -> Vec<String> {
    polys.iter().map(|p| p.to_string_with(names)).collect()
}

/// Local colength of the assembled ideal at the origin of the fixed subspace.
pub fn gsv_index<C: ExactField>(problem: &IndexProblem<C>, options: &IndexOptions) -> Result<IndexReport, IndexError> {
    let generators = problem.assemble_ideal().map_err(IndexError::Invalid)?;
    let names = problem.rep().fixed_names();
    let nvars = names.len();
    if vanishing_axis(nvars, &generators).is_some() {
        return Err(IndexError::NonIsolated { generators: render(&generators, &names) });
    }
    let mut budget = Budget::new(options.budget);
    let basis = standard_basis(nvars, &generators, MonomialOrder::LocalNegDegRevLex, &mut budget)?;
    let staircase = basis.staircase();
    let Some(standard) = staircase.standard_monomials() else {
        return Err(IndexError::NonIsolated { generators: render(&generators, &names) });
    };
    debug_assert_eq!(basis.colength(), Colength::Finite(standard.len() as u64));
    let one = C::one();
    Ok(IndexReport {
        value: standard.len() as u64,
        fixed_variables: names.iter().map(|s| s.to_string()).collect(),
        generators: render(&generators, &names),
        basis_size: basis.generators().len(),
        leading_exponents: staircase.minimal().iter().map(|m| m.exponents().to_vec()).collect(),
        standard_monomials: standard
            .iter()
            .map(|m| Polynomial::term(m.clone(), one.clone()).to_string_with(&names))
            .collect(),
        standard_monomial_count: standard.len() as u64,
        oracle: OracleStatus::Skipped,
    })
}

/// Index at a smooth point: [`gsv_index`] with no equations.
pub fn smooth_index<C: ExactField>(
    rep: &DiagonalRepresentation,
    profile: &KProfile,
    forms: Vec<Vec<EquivariantOneForm<C>>>,
    options: &IndexOptions,
) -> Result<IndexReport, IndexError> {
    let problem = IndexProblem::new(rep.clone(), EquationSystem::empty(), profile.clone(), forms);
    gsv_index(&problem, options)
}

/// Constant-coefficient equivariant forms drawn from a seeded stream.
#[derive(Debug, Clone, PartialEq)]
pub struct GenericSample<C> {
    pub seed: u64,
    pub bound: u32,
    pub forms: Vec<Vec<EquivariantOneForm<C>>>,
}

/// Deterministic source of successive generic linear collections.
pub struct GenericSampler<'a, C> {
    rep: &'a DiagonalRepresentation,
    equations: &'a EquationSystem<C>,
    profile: &'a KProfile,
    seed: u64,
    bound: u32,
    rng: ChaCha8Rng,
}

impl<'a, C: ExactField> GenericSampler<'a, C> {
    pub fn new(
        rep: &'a DiagonalRepresentation,
        equations: &'a EquationSystem<C>,
        profile: &'a KProfile,
        seed: u64,
        bound: u32,
    ) -> Self {
        GenericSampler { rep, equations, profile, seed, bound, rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Draws the next collection. A form whose coefficient vector comes out
    /// zero is redrawn.
    pub fn next_sample(&mut self) -> GenericSample<C> {
        let n = self.rep.nvars();
        let b = self.bound as i64;
        let mut forms = Vec::with_capacity(self.profile.len());
        for entry in self.profile.entries() {
            let coords = self.rep.coordinates_of(&entry.character);
            let count = required_forms(self.rep, self.equations, entry);
            let mut pair_forms = Vec::with_capacity(count);
            for _ in 0..count {
                let values = loop {
                    let v: Vec<i64> = coords.iter().map(|_| self.rng.random_range(-b..=b)).collect();
                    if v.iter().any(|&c| c != 0) || coords.is_empty() {
                        break v;
                    }
                };
                let mut coefficients = vec![Polynomial::zero(n); n];
                for (&s, &c) in coords.iter().zip(&values) {
                    coefficients[s] = Polynomial::constant(n, C::from_i64(c));
                }
                pair_forms.push(EquivariantOneForm { character: entry.character.clone(), coefficients });
            }
            forms.push(pair_forms);
        }
        GenericSample { seed: self.seed, bound: self.bound, forms }
    }
}

/// The first collection drawn from `seed`.
pub fn sample_generic_linear<C: ExactField>(
    rep: &DiagonalRepresentation,
    equations: &EquationSystem<C>,
    profile: &KProfile,
    seed: u64,
    bound: u32,
) -> GenericSample<C> {
    GenericSampler::new(rep, equations, profile, seed, bound).next_sample()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChernReport {
    pub value: i64,
    pub index: u64,
    pub generic_index: u64,
    pub seeds: [u64; 2],
    /// Draws consumed per seed before a finite generic index was found.
    pub attempts: [u32; 2],
}

fn generic_index<C: ExactField>(
    problem: &IndexProblem<C>,
    seed: u64,
    options: &IndexOptions,
) -> Result<(u64, u32), IndexError> {
    let mut sampler =
        GenericSampler::new(problem.rep(), problem.equations(), problem.profile(), seed, options.coefficient_bound);
    for attempt in 1..=options.resample_limit.max(1) {
        let sample = sampler.next_sample();
        match gsv_index(&problem.with_forms(sample.forms), options) {
            Ok(report) => return Ok((report.value, attempt)),
            Err(IndexError::NonIsolated { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(IndexError::GenericityFailure(format!(
        "seed {seed}: no isolated generic linear collection after {} draws",
        options.resample_limit
    )))
}

/// `ind(omega) - ind(lambda)` for a generic equivariant linear collection
/// `lambda`; two independently seeded samples (`seed`, `seed + 1`) must agree.
pub fn chern_obstruction<C: ExactField>(
    problem: &IndexProblem<C>,
    seed: u64,
    options: &IndexOptions,
) -> Result<ChernReport, IndexError> {
    let index = gsv_index(problem, options)?.value;
    let seeds = [seed, seed.wrapping_add(1)];
    let (first, second) = std::thread::scope(|scope| {
        let other = scope.spawn(|| generic_index(problem, seeds[1], options));
        let first = generic_index(problem, seeds[0], options);
        (first, other.join().expect("generic index worker panicked"))
    });
    let (a, attempts_a) = first?;
    let (b, attempts_b) = second?;
    if a != b {
        return Err(IndexError::GenericityFailure(format!(
            "generic indices disagree: {a} (seed {}) vs {b} (seed {})",
            seeds[0], seeds[1]
        )));
    }
    Ok(ChernReport {
        value: index as i64 - a as i64,
        index,
        generic_index: a,
        seeds,
        attempts: [attempts_a, attempts_b],
    })
}

/// `n_alpha` for every profile entry, mostly for reports.
pub fn free_dimensions<C: ExactField>(problem: &IndexProblem<C>) -> Vec<i64> {
    problem
        .profile()
        .entries()
        .iter()
        .map(|e| free_dimension(problem.rep(), problem.equations(), &e.character))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equivariant::{EquivariantFunction, ProfileEntry};
    use crate::group_rep::AbelianGroup;
    use crate::{parse, Rational};

    fn trivial_problem(names: &[&str], eqs: &[&str], k: u32, forms: &[&[&str]]) -> IndexProblem<Rational> {
        let rep = DiagonalRepresentation::trivial(names).unwrap();
        let g = rep.group().trivial_character();
        let p = |s: &str| parse::<Rational>(s, names).unwrap();
        IndexProblem::new(
            rep.clone(),
            EquationSystem::new(eqs.iter().map(|e| EquivariantFunction { character: g.clone(), poly: p(e) }).collect()),
            KProfile::new(vec![ProfileEntry { character: g.clone(), k }]),
            vec![forms
                .iter()
                .map(|f| EquivariantOneForm { character: g.clone(), coefficients: f.iter().map(|s| p(s)).collect() })
                .collect()],
        )
    }

    fn index(p: &IndexProblem<Rational>) -> Result<u64, IndexError> {
        gsv_index(p, &IndexOptions::default()).map(|r| r.value)
    }

    #[test]
    fn a1_indices() {
        assert_eq!(index(&trivial_problem(&["x", "y"], &["x^2+y^2"], 1, &[&["1", "0"]])).unwrap(), 2);
        let r = gsv_index(&trivial_problem(&["x", "y"], &["x^2+y^2"], 1, &[&["x", "-y"]]), &IndexOptions::default())
            .unwrap();
        assert_eq!(r.value, 4);
        assert_eq!(r.standard_monomial_count, 4);
        assert_eq!(r.generators, vec!["x^2 + y^2", "-4*x*y"]);
    }

    #[test]
    fn exact_differential_is_non_isolated() {
        let err = index(&trivial_problem(&["x", "y"], &["x^2+y^2"], 1, &[&["2*x", "2*y"]])).unwrap_err();
        assert!(matches!(err, IndexError::NonIsolated { .. }));
    }

    #[test]
    fn smooth_indices() {
        assert_eq!(index(&trivial_problem(&["x"], &[], 1, &[&["x"]])).unwrap(), 1);
        assert_eq!(index(&trivial_problem(&["x"], &[], 1, &[&["x^3"]])).unwrap(), 3);
        let g = AbelianGroup::cyclic(2).unwrap();
        let rep = DiagonalRepresentation::new(
            g.clone(),
            vec![g.character(&[0]).unwrap(), g.character(&[1]).unwrap()],
            vec!["x".into(), "y".into()],
        )
        .unwrap();
        let sign = g.character(&[1]).unwrap();
        let p = |s: &str| parse::<Rational>(s, &["x", "y"]).unwrap();
        let report = smooth_index(
            &rep,
            &KProfile::new(vec![ProfileEntry { character: sign.clone(), k: 1 }]),
            vec![vec![EquivariantOneForm { character: sign, coefficients: vec![p("0"), p("x")] }]],
            &IndexOptions::default(),
        )
        .unwrap();
        assert_eq!(report.value, 1);
        assert_eq!(report.generators, vec!["x"]);
    }

    #[test]
    fn smooth_index_is_gsv_without_equations() {
        let prob = trivial_problem(&["x", "y"], &[], 2, &[&["x^2 + y", "y^3 - x"]]);
        let direct = gsv_index(&prob, &IndexOptions::default()).unwrap();
        let smooth = smooth_index(prob.rep(), prob.profile(), prob.forms().to_vec(), &IndexOptions::default()).unwrap();
        assert_eq!(direct, smooth);
    }

    #[test]
    fn sampling_shapes_and_determinism() {
        let prob = trivial_problem(&["x", "y"], &[], 1, &[&["x", "y"], &["y", "x"]]);
        let a = sample_generic_linear(prob.rep(), prob.equations(), prob.profile(), 5, 97);
        let b = sample_generic_linear(prob.rep(), prob.equations(), prob.profile(), 5, 97);
        assert_eq!(a, b);
        assert_eq!(a.forms[0].len(), 2);
        for f in &a.forms[0] {
            assert!(f.coefficients.iter().all(|c| c.degree().unwrap_or(0) == 0));
            assert!(f.coefficients.iter().any(|c| !c.is_zero()));
        }
        let c = sample_generic_linear(prob.rep(), prob.equations(), prob.profile(), 6, 97);
        assert_ne!(a, c);
    }

    #[test]
    fn sign_pair_sample_is_dz_only() {
        let g = AbelianGroup::cyclic(2).unwrap();
        let names = ["x", "y", "z"];
        let rep = DiagonalRepresentation::new(
            g.clone(),
            vec![g.character(&[0]).unwrap(), g.character(&[0]).unwrap(), g.character(&[1]).unwrap()],
            names.iter().map(|s| s.to_string()).collect(),
        )
        .unwrap();
        let eqs = EquationSystem::new(vec![EquivariantFunction {
            character: g.trivial_character(),
            poly: parse::<Rational>("x^2+y^2+z^2", &names).unwrap(),
        }]);
        let profile = KProfile::new(vec![ProfileEntry { character: g.character(&[1]).unwrap(), k: 1 }]);
        let s = sample_generic_linear(&rep, &eqs, &profile, 0, 5);
        let f = &s.forms[0][0];
        assert!(f.coefficients[0].is_zero() && f.coefficients[1].is_zero());
        assert!(!f.coefficients[2].is_zero());
        assert!(f.coefficients[2].constant_term().numer().magnitude() <= &5u32.into());
    }

    #[test]
    fn chern_examples() {
        let a1 = trivial_problem(&["x", "y"], &["x^2+y^2"], 1, &[&["x", "-y"]]);
        for seed in 0..5 {
            let r = chern_obstruction(&a1, seed, &IndexOptions::default()).unwrap();
            assert_eq!((r.value, r.index, r.generic_index), (2, 4, 2));
        }
        let smooth = trivial_problem(&["x"], &[], 1, &[&["x^3"]]);
        assert_eq!(chern_obstruction(&smooth, 3, &IndexOptions::default()).unwrap().value, 3);
    }

    #[test]
    fn budget_errors_propagate() {
        let prob = trivial_problem(&["x", "y"], &["x^2+y^2"], 1, &[&["x", "-y"]]);
        let opts = IndexOptions { budget: 1, ..IndexOptions::default() };
        assert!(matches!(gsv_index(&prob, &opts), Err(IndexError::Budget(_))));
    }
}
