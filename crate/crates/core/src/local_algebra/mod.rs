//! Standard bases and quotient dimensions.
//!
//! For the global degree-revlex order this is Buchberger's algorithm with
//! ordinary (full) division. Local standard bases are computed from the
//! homogenized generators, see [`standard_basis`]. Mora's normal form, where
//! reducers are chosen by minimal ecart and intermediate remainders join the
//! reducer set, is what [`normal_form`] uses under the local order and what
//! [`mora_standard_basis`] completes with.
//!
//! Pair selection uses the normal strategy: the pending pair whose lcm has
//! the smallest total degree goes first, ties broken by creation order.

mod staircase;

use std::collections::HashSet;

use serde::Serialize;
use thiserror::Error;

use crate::polyring::{Monomial, MonomialOrder, Polynomial};
use crate::scalar::ExactField;

pub use staircase::Staircase;

pub const DEFAULT_STEP_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("reduction budget of {limit} steps exceeded")]
    BudgetExceeded { limit: u64 },
}

/// Counts reduction steps across one computation.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn unlimited() -> Self {
        Self::new(u64::MAX)
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn tick(&mut self) -> Result<(), AlgebraError> {
        self.used += 1;
        if self.used > self.limit {
            return Err(AlgebraError::BudgetExceeded { limit: self.limit });
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::new(DEFAULT_STEP_BUDGET)
    }
}

/// Dimension of a quotient ring, possibly infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Colength {
    Finite(u64),
    Infinite,
}

impl Colength {
    pub fn finite(self) -> Option<u64> {
        match self {
            Colength::Finite(n) => Some(n),
            Colength::Infinite => None,
        }
    }
}

impl std::fmt::Display for Colength {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Colength::Finite(n) => write!(f, "{n}"),
            Colength::Infinite => f.write_str("INFINITE"),
        }
    }
}

// A reducer with its leading data cached.
#[derive(Clone)]
struct Reducer<C> {
    poly: Polynomial<C>,
    lm: Monomial,
    lc: C,
    ecart: u32,
}

impl<C: ExactField> Reducer<C> {
    fn new(poly: Polynomial<C>, order: MonomialOrder) -> Option<Self> {
        let (lm, lc) = poly.leading_term(order).map(|(m, c)| (m.clone(), c.clone()))?;
        let ecart = poly.degree().unwrap_or(0) - lm.degree();
        Some(Reducer { poly, lm, lc, ecart })
    }
}

fn ecart<C: ExactField>(p: &Polynomial<C>, lm: &Monomial) -> u32 {
    p.degree().unwrap_or(0) - lm.degree()
}

/// Normal form of `p` with respect to `basis`, without a step limit.
///
/// Under the local order the result is only defined up to a unit multiple of
/// `p`, which is all ideal membership and leading ideals need.
pub fn normal_form<C: ExactField>(p: &Polynomial<C>, basis: &[Polynomial<C>], order: MonomialOrder) -> Polynomial<C> {
    let reducers: Vec<_> = basis.iter().filter_map(|g| Reducer::new(g.clone(), order)).collect();
    normal_form_inner(p, &reducers, order, &mut Budget::unlimited()).expect("unlimited budget")
}

fn normal_form_inner<C: ExactField>(
    p: &Polynomial<C>,
    reducers: &[Reducer<C>],
    order: MonomialOrder,
    budget: &mut Budget,
) -> Result<Polynomial<C>, AlgebraError> {
    if order.is_local() {
        mora_normal_form(p, reducers, order, budget)
    } else {
        full_reduction(p, reducers, order, budget)
    }
}

fn full_reduction<C: ExactField>(
    p: &Polynomial<C>,
    reducers: &[Reducer<C>],
    order: MonomialOrder,
    budget: &mut Budget,
) -> Result<Polynomial<C>, AlgebraError> {
    let mut h = p.clone();
    let mut remainder = Polynomial::zero(p.nvars());
    while let Some((lm, lc)) = h.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) {
        match reducers.iter().find(|g| g.lm.divides(&lm)) {
            Some(g) => {
                budget.tick()?;
                let q = g.lm.quotient_of(&lm).expect("divides");
                h.sub_mul_term(&g.poly, &q, &(lc / g.lc.clone()));
            }
            None => {
                h.add_term(lm.clone(), -lc.clone());
                remainder.add_term(lm, lc);
            }
        }
    }
    Ok(remainder)
}

fn mora_normal_form<C: ExactField>(
    p: &Polynomial<C>,
    reducers: &[Reducer<C>],
    order: MonomialOrder,
    budget: &mut Budget,
) -> Result<Polynomial<C>, AlgebraError> {
    let mut extra: Vec<Reducer<C>> = Vec::new();
    let mut h = p.clone();
    loop {
        let Some((lm, lc)) = h.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) else {
            return Ok(h);
        };
        let h_ecart = ecart(&h, &lm);
        let chosen = reducers.iter().chain(extra.iter()).filter(|g| g.lm.divides(&lm)).min_by_key(|g| g.ecart).cloned();
        let Some(g) = chosen else {
            return Ok(h);
        };
        budget.tick()?;
        if g.ecart > h_ecart {
            extra.push(Reducer { poly: h.clone(), lm: lm.clone(), lc: lc.clone(), ecart: h_ecart });
        }
        let q = g.lm.quotient_of(&lm).expect("divides");
        h.sub_mul_term(&g.poly, &q, &(lc / g.lc.clone()));
    }
}

fn s_polynomial<C: ExactField>(a: &Reducer<C>, b: &Reducer<C>) -> Polynomial<C> {
    let lcm = a.lm.lcm(&b.lm);
    let qa = a.lm.quotient_of(&lcm).expect("lcm");
    let qb = b.lm.quotient_of(&lcm).expect("lcm");
    let mut s = a.poly.mul_term(&qa, &(C::one() / a.lc.clone()));
    s.sub_mul_term(&b.poly, &qb, &(C::one() / b.lc.clone()));
    s
}

/// A generating set certified for normal forms under `order`.
#[derive(Debug, Clone, PartialEq)]
pub struct StandardBasis<C> {
    nvars: usize,
    generators: Vec<Polynomial<C>>,
    order: MonomialOrder,
    certified: bool,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    seq: usize,
}

/// Completes `generators` to a standard basis under `order`.
///
/// Local bases are computed by homogenizing: a Gröbner basis of the
/// homogenized generators under [`MonomialOrder::HomogenizedLocal`]
/// dehomogenizes to a local standard basis. As soon as the leading
/// monomials found so far leave finitely many standard monomials, every
/// monomial of the corner degree lies in the ideal of germs and is added,
/// which truncates all later arithmetic.
pub fn standard_basis<C: ExactField>(
    nvars: usize,
    generators: &[Polynomial<C>],
    order: MonomialOrder,
    budget: &mut Budget,
) -> Result<StandardBasis<C>, AlgebraError> {
    for g in generators {
        assert_eq!(g.nvars(), nvars, "generator ring mismatch");
    }
    if order.is_local() {
        return lazard_standard_basis(nvars, generators, budget);
    }
    let gens = complete(generators, order, budget, |_| Vec::new())?;
    Ok(StandardBasis { nvars, generators: gens, order, certified: true })
}

/// Local standard basis by Mora's tangent-cone algorithm.
///
/// Exposed for comparison; [`standard_basis`] is usually much faster.
pub fn mora_standard_basis<C: ExactField>(
    nvars: usize,
    generators: &[Polynomial<C>],
    budget: &mut Budget,
) -> Result<StandardBasis<C>, AlgebraError> {
    let order = MonomialOrder::LocalNegDegRevLex;
    let gens = complete(generators, order, budget, |_| Vec::new())?;
    Ok(StandardBasis { nvars, generators: gens, order, certified: true })
}

fn lazard_standard_basis<C: ExactField>(
    nvars: usize,
    generators: &[Polynomial<C>],
    budget: &mut Budget,
) -> Result<StandardBasis<C>, AlgebraError> {
    let order = MonomialOrder::LocalNegDegRevLex;
    let homogeneous: Vec<_> = generators.iter().map(homogenize).collect();
    let mut corner = u32::MAX;
    let hom_gens = complete(&homogeneous, MonomialOrder::HomogenizedLocal, budget, |basis| {
        let affine: Vec<_> = basis.iter().map(|r| r.lm.without(&[nvars])).collect();
        let Some(d) = Staircase::new(nvars, affine).corner_degree() else {
            return Vec::new();
        };
        if d >= corner {
            return Vec::new();
        }
        corner = d;
        monomials_of_degree(nvars, d)
            .into_iter()
            .map(|m| Monomial::new(m.exponents().iter().copied().chain([0]).collect()))
            .filter(|m| !basis.iter().any(|r| r.lm.divides(m)))
            .map(|m| Polynomial::term(m, C::one()))
            .collect()
    })?;

    let mut gens: Vec<Polynomial<C>> = Vec::new();
    for g in &hom_gens {
        let g = dehomogenize(g).make_monic(order);
        if g.is_zero() || gens.contains(&g) {
            continue;
        }
        if g.leading_monomial(order).is_some_and(Monomial::is_one) {
            return Ok(StandardBasis { nvars, generators: vec![Polynomial::one(nvars)], order, certified: true });
        }
        gens.push(g);
    }
    Ok(StandardBasis { nvars, generators: gens, order, certified: true })
}

fn homogenize<C: ExactField>(p: &Polynomial<C>) -> Polynomial<C> {
    let top = p.degree().unwrap_or(0);
    Polynomial::from_terms(
        p.nvars() + 1,
        p.terms().map(|(m, c)| {
            let exps = m.exponents().iter().copied().chain([top - m.degree()]).collect();
            (Monomial::new(exps), c.clone())
        }),
    )
}

fn dehomogenize<C: ExactField>(p: &Polynomial<C>) -> Polynomial<C> {
    let n = p.nvars() - 1;
    Polynomial::from_terms(n, p.terms().map(|(m, c)| (m.without(&[n]), c.clone())))
}

fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn fill(var: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if var + 1 == cur.len() {
            cur[var] = left;
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[var] = e;
            fill(var + 1, left - e, cur, out);
        }
        cur[var] = 0;
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    fill(0, d, &mut vec![0; nvars], &mut out);
    out
}

// Buchberger's loop. `extra` sees the basis after each insertion and may
// return further ideal elements to add.
fn complete<C: ExactField>(
    generators: &[Polynomial<C>],
    order: MonomialOrder,
    budget: &mut Budget,
    mut extra: impl FnMut(&[Reducer<C>]) -> Vec<Polynomial<C>>,
) -> Result<Vec<Polynomial<C>>, AlgebraError> {
    let Some(nvars) = generators.first().map(Polynomial::nvars) else {
        return Ok(Vec::new());
    };
    let unit = || Ok(vec![Polynomial::one(nvars)]);
    let mut basis: Vec<Reducer<C>> = Vec::new();
    let mut pending: Vec<Pair> = Vec::new();
    let mut open: HashSet<(usize, usize)> = HashSet::new();
    let mut seq = 0;

    let mut queue: Vec<Polynomial<C>> = generators.iter().map(|g| g.make_monic(order)).collect();
    queue.reverse();
    loop {
        while let Some(g) = queue.pop() {
            if g.is_zero() || basis.iter().any(|b| b.poly == g) {
                continue;
            }
            let Some(r) = Reducer::new(g, order) else { continue };
            if is_unit(&r, order) {
                return unit();
            }
            let k = basis.len();
            for (i, b) in basis.iter().enumerate() {
                pending.push(Pair { i, j: k, lcm: b.lm.lcm(&r.lm), seq });
                open.insert((i, k));
                seq += 1;
            }
            basis.push(r);
            let more = extra(&basis);
            queue.extend(more.into_iter().rev());
        }

        let Some(pos) = (0..pending.len()).min_by_key(|&k| (pending[k].lcm.degree(), pending[k].seq)) else {
            break;
        };
        let Pair { i, j, lcm, .. } = pending.swap_remove(pos);
        open.remove(&(i, j));
        if !order.is_local() {
            if basis[i].lm.is_coprime(&basis[j].lm) {
                continue;
            }
            let key = |a: usize, b: usize| (a.min(b), a.max(b));
            let chain = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && basis[k].lm.divides(&lcm)
                    && !open.contains(&key(i, k))
                    && !open.contains(&key(j, k))
            });
            if chain {
                continue;
            }
        }
        budget.tick()?;
        let s = s_polynomial(&basis[i], &basis[j]);
        let h = normal_form_inner(&s, &basis, order, budget)?;
        if !h.is_zero() {
            queue.push(h.make_monic(order));
        }
    }
    Ok(basis.into_iter().map(|r| r.poly).collect())
}

fn is_unit<C>(r: &Reducer<C>, order: MonomialOrder) -> bool {
    match order {
        MonomialOrder::HomogenizedLocal => r.lm.exponents().iter().rev().skip(1).all(|&e| e == 0),
        _ => r.lm.is_one(),
    }
}

impl<C: ExactField> StandardBasis<C> {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial<C>] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn is_certified(&self) -> bool {
        self.certified
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators.iter().filter_map(|g| g.leading_monomial(self.order).cloned()).collect()
    }

    pub fn staircase(&self) -> Staircase {
        Staircase::new(self.nvars, self.leading_monomials())
    }

    pub fn colength(&self) -> Colength {
        self.staircase().colength()
    }

    pub fn normal_form(&self, p: &Polynomial<C>) -> Polynomial<C> {
        normal_form(p, &self.generators, self.order)
    }

    /// Re-derives certification: every S-polynomial must reduce to zero.
    pub fn audit(&self, budget: &mut Budget) -> Result<bool, AlgebraError> {
        let reducers: Vec<_> = self.generators.iter().filter_map(|g| Reducer::new(g.clone(), self.order)).collect();
        for j in 0..reducers.len() {
            for i in 0..j {
                let s = s_polynomial(&reducers[i], &reducers[j]);
                if !normal_form_inner(&s, &reducers, self.order, budget)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Colength of the ideal in the polynomial ring (all affine points together).
pub fn global_colength<C: ExactField>(
    nvars: usize,
    generators: &[Polynomial<C>],
    budget: &mut Budget,
) -> Result<Colength, AlgebraError> {
    Ok(standard_basis(nvars, generators, MonomialOrder::GlobalDegRevLex, budget)?.colength())
}

/// A coordinate axis on which every generator vanishes identically.
///
/// Such an axis lies in the zero set, so the local colength is infinite.
pub fn vanishing_axis<C: ExactField>(nvars: usize, generators: &[Polynomial<C>]) -> Option<usize> {
    (0..nvars).find(|&i| {
        generators
            .iter()
            .all(|g| g.terms().all(|(m, _)| m.exponents().iter().enumerate().any(|(j, &e)| j != i && e > 0)))
    })
}

/// Colength of the ideal in the ring of germs at the origin.
pub fn local_colength<C: ExactField>(
    nvars: usize,
    generators: &[Polynomial<C>],
    budget: &mut Budget,
) -> Result<Colength, AlgebraError> {
    if vanishing_axis(nvars, generators).is_some() {
        return Ok(Colength::Infinite);
    }
    Ok(standard_basis(nvars, generators, MonomialOrder::LocalNegDegRevLex, budget)?.colength())
}
