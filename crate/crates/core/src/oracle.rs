//! Brute-force local colength by truncated linear algebra.
//!
//! `q_D = dim O / (I + m^D)` is the number of monomials of degree `< D` minus
//! the rank of the truncations of `m * g` (deg m < D, g a generator). When
//! `q_D = q_{D+1}`, Nakayama gives `m^D ⊆ I` in the local ring, so `q_D` is
//! the colength. Everything is exact; no standard bases are involved.

use std::collections::HashMap;

use serde::Serialize;

use crate::equivariant::IndexProblem;
use crate::indices::{gsv_index, IndexError, IndexOptions};
use crate::polyring::{Monomial, Polynomial};
use crate::scalar::ExactField;

pub const DEFAULT_MAX_DEGREE: u32 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MacaulayOutcome {
    Colength(u64),
    NotStabilized,
}

/// All monomials of degree `< bound` in `nvars` variables, by ascending degree.
fn monomials_below(nvars: usize, bound: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for d in 0..bound {
        let mut current = vec![0u32; nvars];
        of_degree(nvars, d, 0, &mut current, &mut out);
    }
    out
}

fn of_degree(nvars: usize, remaining: u32, var: usize, current: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if nvars == 0 {
        if remaining == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return;
    }
    if var == nvars - 1 {
        current[var] = remaining;
        out.push(Monomial::new(current.clone()));
        current[var] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        current[var] = e;
        of_degree(nvars, remaining - e, var + 1, current, out);
    }
    current[var] = 0;
}

type SparseRow<C> = Vec<(usize, C)>;

/// Truncated multiples of the generators below a degree bound.
pub struct TruncationTableau<C> {
    degree_bound: u32,
    columns: usize,
    rows: Vec<SparseRow<C>>,
}

impl<C: ExactField> TruncationTableau<C> {
    pub fn build(nvars: usize, generators: &[Polynomial<C>], degree_bound: u32) -> Self {
        let basis = monomials_below(nvars, degree_bound);
        let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rows = Vec::new();
        for g in generators {
            let Some(ord) = g.order() else { continue };
            for m in &basis {
                if m.degree() + ord >= degree_bound {
                    continue;
                }
                let mut row: SparseRow<C> = g
                    .terms()
                    .filter_map(|(t, c)| {
                        let prod = t.mul(m);
                        index.get(&prod).map(|&col| (col, c.clone()))
                    })
                    .collect();
                row.sort_by_key(|(col, _)| *col);
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
        TruncationTableau { degree_bound, columns: basis.len(), rows }
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    pub fn rank(&self) -> usize {
        let mut pivots: HashMap<usize, SparseRow<C>> = HashMap::new();
        for row in &self.rows {
            let mut row = row.clone();
            while let Some((col, lead)) = row.first().cloned() {
                match pivots.get(&col) {
                    Some(pivot) => row = sub_scaled(&row, pivot, &lead),
                    None => {
                        let inv = C::one() / lead;
                        let normalized = row.into_iter().map(|(c, v)| (c, v * inv.clone())).collect();
                        pivots.insert(col, normalized);
                        break;
                    }
                }
            }
        }
        pivots.len()
    }

    /// `dim O / (I + m^D)`.
    pub fn quotient_dimension(&self) -> u64 {
        (self.columns - self.rank()) as u64
    }
}

// a - factor * b, both sorted by column
fn sub_scaled<C: ExactField>(a: &[(usize, C)], b: &[(usize, C)], factor: &C) -> SparseRow<C> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(b[j].1.clone() * factor.clone())));
            j += 1;
        } else {
            let v = a[i].1.clone() - b[j].1.clone() * factor.clone();
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// `q_D` for one degree bound.
pub fn truncated_quotient_dimension<C: ExactField>(
    nvars: usize,
    generators: &[Polynomial<C>],
    degree_bound: u32,
) -> u64 {
    TruncationTableau::build(nvars, generators, degree_bound).quotient_dimension()
}

/// Local colength from the first `D >= 2` with `q_D = q_{D+1}`, `D + 1 <= max_degree`.
pub fn macaulay_colength<C: ExactField>(
    nvars: usize,
    generators: &[Polynomial<C>],
    max_degree: u32,
) -> MacaulayOutcome {
    let mut previous = None;
    for d in 2..=max_degree {
        let q = truncated_quotient_dimension(nvars, generators, d);
        if previous == Some(q) {
            return MacaulayOutcome::Colength(q);
        }
        previous = Some(q);
    }
    MacaulayOutcome::NotStabilized
}

/// Outcome of running both colength routes on one problem.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum CrossCheck {
    Agree(u64),
    Disagree {
        index: Option<u64>,
        oracle: u64,
    },
    /// The oracle did not stabilize; `index` is `None` when the standard-basis
    /// route also reported a non-isolated point.
    Inconclusive {
        index: Option<u64>,
    },
}

impl CrossCheck {
    pub fn verdict(&self) -> &'static str {
        match self {
            CrossCheck::Agree(_) => "AGREE",
            CrossCheck::Disagree { .. } => "DISAGREE",
            CrossCheck::Inconclusive { .. } => "INCONCLUSIVE",
        }
    }
}

/// Compares [`gsv_index`] against [`macaulay_colength`] on the same generators.
pub fn cross_check<C: ExactField>(
    problem: &IndexProblem<C>,
    max_degree: u32,
    options: &IndexOptions,
) -> Result<CrossCheck, IndexError> {
    let generators = problem.assemble_ideal().map_err(IndexError::Invalid)?;
    let nvars = problem.rep().fixed_block().len();
    let index = match gsv_index(problem, options) {
        Ok(report) => Some(report.value),
        Err(IndexError::NonIsolated { .. }) => None,
        Err(e) => return Err(e),
    };
    let oracle = macaulay_colength(nvars, &generators, max_degree);
    Ok(match (index, oracle) {
        (Some(a), MacaulayOutcome::Colength(b)) if a == b => CrossCheck::Agree(a),
        (index, MacaulayOutcome::Colength(b)) => CrossCheck::Disagree { index, oracle: b },
        (index, MacaulayOutcome::NotStabilized) => CrossCheck::Inconclusive { index },
    })
}
