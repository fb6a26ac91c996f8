use super::Colength;
use crate::polyring::Monomial;

/// Minimal leading exponents of a standard basis and the monomials under them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Staircase {
    nvars: usize,
    minimal: Vec<Monomial>,
}

impl Staircase {
    pub fn new(nvars: usize, leading: Vec<Monomial>) -> Self {
        let mut sorted = leading;
        sorted.sort_by_key(|m| (m.degree(), m.clone()));
        sorted.dedup();
        let mut minimal: Vec<Monomial> = Vec::new();
        for m in sorted {
            if !minimal.iter().any(|k| k.divides(&m)) {
                minimal.push(m);
            }
        }
        minimal.sort();
        Staircase { nvars, minimal }
    }

    pub fn minimal(&self) -> &[Monomial] {
        &self.minimal
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.minimal.iter().any(|k| k.divides(m))
    }

    // per-axis pure-power bounds, None if some axis is unbounded
    fn axis_bounds(&self) -> Option<Vec<u32>> {
        if self.minimal.iter().any(Monomial::is_one) {
            return Some(vec![0; self.nvars]);
        }
        let mut bounds = vec![None; self.nvars];
        for m in &self.minimal {
            if let Some((i, a)) = m.pure_power() {
                bounds[i] = Some(a);
            }
        }
        bounds.into_iter().collect()
    }

    /// Standard monomials in lexicographic exponent order, when finitely many.
    pub fn standard_monomials(&self) -> Option<Vec<Monomial>> {
        let bounds = self.axis_bounds()?;
        let mut out = Vec::new();
        let mut current = vec![0u32; self.nvars];
        self.enumerate(&bounds, 0, &mut current, &mut out);
        Some(out)
    }

    fn enumerate(&self, bounds: &[u32], var: usize, current: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if var == self.nvars {
            let m = Monomial::new(current.clone());
            if self.is_standard(&m) {
                out.push(m);
            }
            return;
        }
        for e in 0..bounds[var] {
            current[var] = e;
            // prune: once the prefix is divisible, larger exponents stay divisible
            let mut probe = current.clone();
            for slot in probe.iter_mut().skip(var + 1) {
                *slot = 0;
            }
            if !self.is_standard(&Monomial::new(probe)) {
                break;
            }
            self.enumerate(bounds, var + 1, current, out);
        }
        current[var] = 0;
    }

    /// Smallest `d` such that every monomial of degree `d` is non-standard.
    pub fn corner_degree(&self) -> Option<u32> {
        let standard = self.standard_monomials()?;
        Some(standard.iter().map(|m| m.degree() + 1).max().unwrap_or(0))
    }

    pub fn colength(&self) -> Colength {
        match self.standard_monomials() {
            Some(s) => Colength::Finite(s.len() as u64),
            None => Colength::Infinite,
        }
    }
}
