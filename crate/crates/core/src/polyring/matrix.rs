use std::collections::HashMap;

use super::Polynomial;
use crate::scalar::Coefficient;

/// Dense row-major matrix of polynomials in a fixed ring.
#[derive(Clone, PartialEq, Debug)]
pub struct PolyMatrix<C> {
    nvars: usize,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial<C>>,
}

impl<C: Coefficient> PolyMatrix<C> {
    pub fn zeros(nvars: usize, rows: usize, cols: usize) -> Self {
        PolyMatrix { nvars, rows, cols, entries: vec![Polynomial::zero(nvars); rows * cols] }
    }

    pub fn from_rows(nvars: usize, rows: Vec<Vec<Polynomial<C>>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols, "ragged matrix");
            for p in row {
                assert_eq!(p.nvars(), nvars, "entry ring mismatch");
                entries.push(p);
            }
        }
        PolyMatrix { nvars, rows: nrows, cols: ncols, entries }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial<C> {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: Polynomial<C>) {
        assert_eq!(p.nvars(), self.nvars);
        self.entries[r * self.cols + c] = p;
    }

    pub fn to_rows(&self) -> Vec<Vec<Polynomial<C>>> {
        self.entries.chunks(self.cols.max(1)).take(self.rows).map(<[_]>::to_vec).collect()
    }

    pub fn scale_column(&mut self, c: usize, factor: &C) {
        for r in 0..self.rows {
            let p = self.get(r, c).scale(factor);
            self.set(r, c, p);
        }
    }

    pub fn swap_columns(&mut self, a: usize, b: usize) {
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// Square submatrix on the given rows, all columns.
    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            for c in 0..self.cols {
                entries.push(self.get(r, c).clone());
            }
        }
        PolyMatrix { nvars: self.nvars, rows: rows.len(), cols: self.cols, entries }
    }

    /// Exact determinant by Laplace expansion along columns, memoized on the
    /// set of remaining rows. Costs O(n 2^n) polynomial products.
    pub fn determinant(&self) -> Polynomial<C> {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        assert!(n < 64, "matrix too large for subset memoization");
        let mut memo: HashMap<u64, Polynomial<C>> = HashMap::new();
        let all = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
        self.minor_det(all, 0, &mut memo)
    }

    // determinant of rows `mask` against columns `col..n`
    fn minor_det(&self, mask: u64, col: usize, memo: &mut HashMap<u64, Polynomial<C>>) -> Polynomial<C> {
        if mask == 0 {
            return Polynomial::one(self.nvars);
        }
        if let Some(p) = memo.get(&mask) {
            return p.clone();
        }
        let mut acc = Polynomial::zero(self.nvars);
        let mut position = 0;
        for r in 0..self.rows {
            if mask & (1 << r) == 0 {
                continue;
            }
            let entry = self.get(r, col);
            if !entry.is_zero() {
                let sub = self.minor_det(mask & !(1 << r), col + 1, memo);
                if !sub.is_zero() {
                    let prod = entry * &sub;
                    acc = if position % 2 == 0 { &acc + &prod } else { &acc - &prod };
                }
            }
            position += 1;
        }
        memo.insert(mask, acc.clone());
        acc
    }

    /// All maximal minors of a tall matrix (`cols <= rows`), one per row
    /// subset in lexicographic order.
    pub fn maximal_minors(&self) -> Vec<Polynomial<C>> {
        assert!(self.cols <= self.rows, "maximal minors need cols <= rows");
        row_subsets(self.rows, self.cols).map(|rows| self.select_rows(&rows).determinant()).collect()
    }
}

/// k-subsets of `0..n` in lexicographic order.
pub fn row_subsets(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut current: Option<Vec<usize>> = if k <= n { Some((0..k).collect()) } else { None };
    std::iter::from_fn(move || {
        let out = current.clone()?;
        // advance
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                current = None;
                break;
            }
            i -= 1;
            if next[i] < n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                current = Some(next);
                break;
            }
        }
        Some(out)
    })
}
