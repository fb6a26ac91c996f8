use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

/// Dense exponent vector; its length is the number of ring variables.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// The monomial `x_index`.
    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// If this is a pure power `x_i^a` (a > 0), returns `(i, a)`.
    pub fn pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    /// Drops the listed coordinates. Callers must ensure the dropped exponents are zero.
    pub(crate) fn without(&self, dropped: &[usize]) -> Monomial {
        Monomial(self.0.iter().enumerate().filter(|(i, _)| !dropped.contains(i)).map(|(_, &e)| e).collect())
    }
}

/// The two monomial orders used by the crate.
///
/// `Greater` from [`MonomialOrder::compare`] means "leads".
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum MonomialOrder {
    /// Degree reverse lexicographic; `1` is the smallest monomial.
    GlobalDegRevLex,
    /// Negative degree reverse lexicographic; `1` is the largest monomial.
    LocalNegDegRevLex,
    /// Order on `(x_1, ..., x_n, t)` with `t` the last variable: total degree
    /// first, then the local order on the `x` part. Homogenizing with `t`
    /// turns local standard-basis computations into global ones.
    HomogenizedLocal,
}

impl MonomialOrder {
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        let by_degree = a.degree().cmp(&b.degree());
        match self {
            MonomialOrder::GlobalDegRevLex => by_degree.then_with(|| revlex(&a.0, &b.0)),
            MonomialOrder::LocalNegDegRevLex => by_degree.reverse().then_with(|| revlex(&a.0, &b.0)),
            MonomialOrder::HomogenizedLocal => {
                let n = a.0.len().saturating_sub(1);
                let (xa, xb) = (&a.0[..n], &b.0[..n]);
                let dx = xa.iter().sum::<u32>().cmp(&xb.iter().sum::<u32>());
                by_degree.then_with(|| dx.reverse()).then_with(|| revlex(xa, xb))
            }
        }
    }

    pub fn is_local(self) -> bool {
        matches!(self, MonomialOrder::LocalNegDegRevLex)
    }
}

// the smaller exponent in the last differing variable wins
fn revlex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn degrevlex_ties() {
        let o = MonomialOrder::GlobalDegRevLex;
        // x > y > z among variables
        assert_eq!(o.compare(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[0, 1, 0]), &m(&[0, 0, 1])), Ordering::Greater);
        // x*z < y^2 in degrevlex
        assert_eq!(o.compare(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.compare(&m(&[2, 0]), &m(&[0, 0])), Ordering::Greater);
    }

    #[test]
    fn local_order_puts_one_first() {
        let o = MonomialOrder::LocalNegDegRevLex;
        assert_eq!(o.compare(&m(&[0, 0]), &m(&[1, 0])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[2, 0]), &m(&[3, 0])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[1, 0]), &m(&[0, 1])), Ordering::Greater);
    }

    #[test]
    fn homogenized_order_refines_local() {
        let o = MonomialOrder::HomogenizedLocal;
        // same total degree: fewer x's (more t) wins
        assert_eq!(o.compare(&m(&[0, 0, 2]), &m(&[1, 0, 1])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[1, 0, 1]), &m(&[0, 1, 1])), Ordering::Greater);
        // higher total degree always wins
        assert_eq!(o.compare(&m(&[3, 0, 0]), &m(&[0, 0, 2])), Ordering::Greater);
    }

    #[test]
    fn pure_powers() {
        assert_eq!(m(&[0, 3]).pure_power(), Some((1, 3)));
        assert_eq!(m(&[1, 3]).pure_power(), None);
        assert_eq!(m(&[0, 0]).pure_power(), None);
    }

    fn mono3() -> impl Strategy<Value = Monomial> {
        prop::collection::vec(0u32..5, 3).prop_map(Monomial::new)
    }

    proptest! {
        #[test]
        fn orders_are_total_and_multiplicative(a in mono3(), b in mono3(), c in mono3()) {
            for o in [MonomialOrder::GlobalDegRevLex, MonomialOrder::LocalNegDegRevLex, MonomialOrder::HomogenizedLocal] {
                let ab = o.compare(&a, &b);
                prop_assert_eq!(ab, o.compare(&b, &a).reverse());
                prop_assert_eq!(ab == Ordering::Equal, a == b);
                prop_assert_eq!(o.compare(&c.mul(&a), &c.mul(&b)), ab);
                if ab == Ordering::Greater && o.compare(&b, &c) == Ordering::Greater {
                    prop_assert_eq!(o.compare(&a, &c), Ordering::Greater);
                }
            }
        }
    }
}
