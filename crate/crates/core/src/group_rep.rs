//! Finite abelian groups `Z/d1 x ... x Z/dr`, their characters, and diagonal
//! representations on coordinate spaces.
//!
//! A character is stored by its exponent vector: the character sending the
//! j-th generator to `exp(2 pi i c_j / d_j)` is `[c_1, ..., c_r]`. Roots of
//! unity are never materialized; every equivariance question reduces to
//! congruences between these exponents.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polyring::Monomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("cyclic factor order {0} is smaller than 2")]
    InvalidOrder(u32),
    #[error("character {found} does not belong to the group with orders {expected:?}")]
    GroupMismatch { expected: Vec<u32>, found: String },
    #[error("expected {expected} entries, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("duplicate coordinate name `{0}`")]
    DuplicateName(String),
    #[error("a representation needs at least one coordinate")]
    NoCoordinates,
}

/// `Z/d1 x ... x Z/dr`; `r = 0` is the trivial group.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct AbelianGroup {
    orders: Vec<u32>,
}

impl AbelianGroup {
    pub fn new(orders: Vec<u32>) -> Result<Self, GroupError> {
        if let Some(&d) = orders.iter().find(|&&d| d < 2) {
            return Err(GroupError::InvalidOrder(d));
        }
        Ok(AbelianGroup { orders })
    }

    pub fn trivial() -> Self {
        AbelianGroup { orders: Vec::new() }
    }

    pub fn cyclic(order: u32) -> Result<Self, GroupError> {
        Self::new(vec![order])
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn cardinality(&self) -> u64 {
        self.orders.iter().map(|&d| d as u64).product()
    }

    /// Builds a character, reducing each exponent modulo its order.
    pub fn character(&self, exponents: &[i64]) -> Result<Character, GroupError> {
        if exponents.len() != self.orders.len() {
            return Err(GroupError::LengthMismatch { expected: self.orders.len(), found: exponents.len() });
        }
        let exponents = exponents.iter().zip(&self.orders).map(|(&c, &d)| c.rem_euclid(d as i64) as u32).collect();
        Ok(Character { orders: self.orders.clone(), exponents })
    }

    pub fn trivial_character(&self) -> Character {
        Character { orders: self.orders.clone(), exponents: vec![0; self.orders.len()] }
    }

    /// Every character of the group, lexicographic in the exponents.
    pub fn characters(&self) -> Vec<Character> {
        let mut out = vec![Vec::new()];
        for &d in &self.orders {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<u32>| {
                    (0..d).map(move |c| {
                        let mut v = prefix.clone();
                        v.push(c);
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(|exponents| Character { orders: self.orders.clone(), exponents }).collect()
    }

    pub fn contains(&self, chi: &Character) -> bool {
        chi.orders == self.orders
    }
}

/// A one-dimensional character of an [`AbelianGroup`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Character {
    orders: Vec<u32>,
    exponents: Vec<u32>,
}

impl Character {
    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Character) -> Result<Character, GroupError> {
        if self.orders != other.orders {
            return Err(GroupError::GroupMismatch { expected: self.orders.clone(), found: other.to_string() });
        }
        let exponents =
            self.exponents.iter().zip(&other.exponents).zip(&self.orders).map(|((a, b), d)| (a + b) % d).collect();
        Ok(Character { orders: self.orders.clone(), exponents })
    }

    pub fn neg(&self) -> Character {
        let exponents = self.exponents.iter().zip(&self.orders).map(|(a, d)| (d - a) % d).collect();
        Character { orders: self.orders.clone(), exponents }
    }

    /// `self` taken `k` times.
    pub fn times(&self, k: u32) -> Character {
        let exponents =
            self.exponents.iter().zip(&self.orders).map(|(&a, &d)| ((a as u64 * k as u64) % d as u64) as u32).collect();
        Character { orders: self.orders.clone(), exponents }
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.exponents.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `char_add` as a free function.
pub fn char_add(a: &Character, b: &Character) -> Result<Character, GroupError> {
    a.add(b)
}

/// The group acting diagonally on `C^N`, coordinate `s` scaled by `weights[s]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiagonalRepresentation {
    group: AbelianGroup,
    weights: Vec<Character>,
    names: Vec<String>,
}

impl DiagonalRepresentation {
    pub fn new(group: AbelianGroup, weights: Vec<Character>, names: Vec<String>) -> Result<Self, GroupError> {
        if weights.is_empty() {
            return Err(GroupError::NoCoordinates);
        }
        if weights.len() != names.len() {
            return Err(GroupError::LengthMismatch { expected: weights.len(), found: names.len() });
        }
        for w in &weights {
            if !group.contains(w) {
                return Err(GroupError::GroupMismatch { expected: group.orders.clone(), found: w.to_string() });
            }
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(GroupError::DuplicateName(n.clone()));
            }
        }
        Ok(DiagonalRepresentation { group, weights, names })
    }

    /// Trivial group acting on the named coordinates.
    pub fn trivial(names: &[&str]) -> Result<Self, GroupError> {
        let g = AbelianGroup::trivial();
        let weights = names.iter().map(|_| g.trivial_character()).collect();
        Self::new(g, weights, names.iter().map(|s| s.to_string()).collect())
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name_refs(&self) -> Vec<&str> {
        self.names.iter().map(String::as_str).collect()
    }

    pub fn weights(&self) -> &[Character] {
        &self.weights
    }

    pub fn weight(&self, s: usize) -> &Character {
        &self.weights[s]
    }

    /// Number of coordinates of weight `chi` (the multiplicity `m_chi`).
    pub fn multiplicity(&self, chi: &Character) -> usize {
        self.weights.iter().filter(|w| *w == chi).count()
    }

    /// Coordinates of weight `chi`, in declaration order.
    pub fn coordinates_of(&self, chi: &Character) -> Vec<usize> {
        (0..self.nvars()).filter(|&s| &self.weights[s] == chi).collect()
    }

    /// Coordinates of trivial weight, in declaration order.
    pub fn fixed_block(&self) -> Vec<usize> {
        (0..self.nvars()).filter(|&s| self.weights[s].is_trivial()).collect()
    }

    /// Coordinates of nontrivial weight, in declaration order.
    pub fn moving_coordinates(&self) -> Vec<usize> {
        (0..self.nvars()).filter(|&s| !self.weights[s].is_trivial()).collect()
    }

    pub fn fixed_names(&self) -> Vec<&str> {
        self.fixed_block().into_iter().map(|s| self.names[s].as_str()).collect()
    }

    /// Isotypic blocks: the fixed block first, then the other occurring
    /// characters in lexicographic exponent order.
    pub fn blocks(&self) -> Vec<(Character, Vec<usize>)> {
        let mut chars: Vec<Character> = self.weights.clone();
        chars.sort();
        chars.dedup();
        chars.sort_by_key(|c| !c.is_trivial());
        chars
            .into_iter()
            .map(|c| {
                let coords = self.coordinates_of(&c);
                (c, coords)
            })
            .collect()
    }

    /// Weight of a monomial: `sum_s e_s * w_s` in the character group.
    pub fn char_of_monomial(&self, m: &Monomial) -> Result<Character, GroupError> {
        if m.nvars() != self.nvars() {
            return Err(GroupError::LengthMismatch { expected: self.nvars(), found: m.nvars() });
        }
        let mut acc = self.group.trivial_character();
        for (w, &e) in self.weights.iter().zip(m.exponents()) {
            acc = acc.add(&w.times(e))?;
        }
        Ok(acc)
    }
}
