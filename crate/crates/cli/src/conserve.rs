//! Conservation-of-number harness.
//!
//! The local index at the origin is compared with the global colength of a
//! deformed ideal, which counts the special points of the deformed collection
//! anywhere in the fixed subspace with multiplicity. When nothing arrives
//! from or leaves for infinity the two numbers coincide.

use equindex_core::{
    global_colength, gsv_index, AlgebraError, Budget, Colength, IndexError, IndexOptions, Poly, Problem, Rational,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

/// Bound on the random constants of a constant shift.
pub const SHIFT_BOUND: i64 = 97;

#[derive(Debug, Clone, PartialEq)]
pub enum DeformationMode {
    /// Subtract `epsilon * c_i` from generator `i`, with nonzero integers
    /// `c_i` drawn from `seed`.
    ConstantShift { seed: u64 },
    /// Add `epsilon * p_i` to generator `i`.
    User { perturbations: Vec<Poly> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct DeformationSpec {
    pub epsilon: Rational,
    pub mode: DeformationMode,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Conserved,
    Escaped,
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Conserved => "CONSERVED",
            Verdict::Escaped => "ESCAPED",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConservationReport {
    pub local: u64,
    pub global_deformed: u64,
    pub verdict: Verdict,
    pub mode: String,
    pub epsilon: String,
    pub seed: Option<u64>,
    pub deformed_generators: Vec<String>,
    pub note: Option<String>,
}

#[derive(Debug, Error)]
pub enum ConserveError {
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error(transparent)]
    Budget(#[from] AlgebraError),
    #[error("epsilon must be nonzero")]
    ZeroEpsilon,
    #[error("{found} perturbations given for {expected} ideal generators")]
    PerturbationCount { expected: usize, found: usize },
    #[error("the deformed ideal has infinite global colength")]
    DeformedInfinite { generators: Vec<String> },
}

/// Parses `p/q` or an integer.
pub fn parse_epsilon(text: &str) -> Option<Rational> {
    text.trim().parse().ok()
}

pub fn shift_constants(seed: u64, count: usize) -> Vec<i64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let c = rng.random_range(1..=SHIFT_BOUND);
            if rng.random_bool(0.5) {
                -c
            } else {
                c
            }
        })
        .collect()
}

pub fn deform(generators: &[Poly], spec: &DeformationSpec) -> Result<Vec<Poly>, ConserveError> {
    if spec.epsilon == Rational::from_integer(0.into()) {
        return Err(ConserveError::ZeroEpsilon);
    }
    match &spec.mode {
        DeformationMode::ConstantShift { seed } => Ok(generators
            .iter()
            .zip(shift_constants(*seed, generators.len()))
            .map(|(g, c)| {
                let shift = Poly::constant(g.nvars(), spec.epsilon.clone() * Rational::from_integer(c.into()));
                g - &shift
            })
            .collect()),
        DeformationMode::User { perturbations } => {
            if perturbations.len() != generators.len() {
                return Err(ConserveError::PerturbationCount {
                    expected: generators.len(),
                    found: perturbations.len(),
                });
            }
            Ok(generators.iter().zip(perturbations).map(|(g, p)| g + &p.scale(&spec.epsilon)).collect())
        }
    }
}

pub fn conserve(
    problem: &Problem,
    spec: &DeformationSpec,
    options: &IndexOptions,
) -> Result<ConservationReport, ConserveError> {
    let local = gsv_index(problem, options)?.value;
    let generators = problem.assemble_ideal().map_err(IndexError::Invalid)?;
    let deformed = deform(&generators, spec)?;
    let names = problem.rep().fixed_names();
    let rendered: Vec<String> = deformed.iter().map(|g| g.to_string_with(&names)).collect();
    let global = match global_colength(names.len(), &deformed, &mut Budget::new(options.budget))? {
        Colength::Finite(n) => n,
        Colength::Infinite => return Err(ConserveError::DeformedInfinite { generators: rendered }),
    };
    let (verdict, note) = match global.cmp(&local) {
        std::cmp::Ordering::Equal => (Verdict::Conserved, None),
        std::cmp::Ordering::Greater => (
            Verdict::Escaped,
            Some(format!(
                "{} special point(s) of the deformed collection stay away from the origin \
                 (for instance escaping to infinity as epsilon tends to 0); \
                 conservation of number is a local statement and is not contradicted",
                global - local
            )),
        ),
        std::cmp::Ordering::Less => (
            Verdict::Inconclusive,
            Some(
                "the deformed ideal counts fewer points than the local index, so this deformation is not flat; \
                 no conclusion is drawn"
                    .to_string(),
            ),
        ),
    };
    let (mode, seed) = match &spec.mode {
        DeformationMode::ConstantShift { seed } => ("CONSTANT_SHIFT", Some(*seed)),
        DeformationMode::User { .. } => ("USER", None),
    };
    Ok(ConservationReport {
        local,
        global_deformed: global,
        verdict,
        mode: mode.to_string(),
        epsilon: spec.epsilon.to_string(),
        seed,
        deformed_generators: rendered,
        note,
    })
}
