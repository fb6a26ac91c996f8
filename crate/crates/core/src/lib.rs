//! Exact computation of equivariant GSV-indices and Chern obstructions of
//! collections of equivariant 1-forms on isolated complete intersection
//! singularities with a finite abelian symmetry group.
//!
//! The polynomial, matrix, standard-basis and oracle layers are generic over
//! the coefficient type (see [`scalar`]); [`Rational`] and the aliases below
//! fix it to arbitrary-precision rationals, which is what every index
//! computation uses.

pub mod equivariant;
pub mod group_rep;
pub mod indices;
pub mod local_algebra;
pub mod oracle;
pub mod polyring;
pub mod random;
pub mod scalar;

pub use equivariant::{
    EquationSystem, EquivariantFunction, EquivariantOneForm, IndexProblem, KProfile, ProfileEntry, ValidationReport,
    Violation,
};
pub use group_rep::{char_add, AbelianGroup, Character, DiagonalRepresentation, GroupError};
pub use indices::{
    chern_obstruction, gsv_index, sample_generic_linear, smooth_index, ChernReport, GenericSample, IndexError,
    IndexOptions, IndexReport, OracleStatus,
};
pub use local_algebra::{
    global_colength, local_colength, mora_standard_basis, normal_form, standard_basis, vanishing_axis, AlgebraError,
    Budget, Colength, Staircase, StandardBasis,
};
pub use oracle::{cross_check, macaulay_colength, CrossCheck, MacaulayOutcome};
pub use polyring::{parse, Monomial, MonomialOrder, ParseError, PolyMatrix, Polynomial};
pub use scalar::{Coefficient, ExactField};

/// Arbitrary-precision rationals.
pub type Rational = num_rational::BigRational;
pub type Poly = Polynomial<Rational>;
pub type Matrix = PolyMatrix<Rational>;
pub type Problem = IndexProblem<Rational>;
pub type OneForm = EquivariantOneForm<Rational>;
pub type Function = EquivariantFunction<Rational>;
pub type Equations = EquationSystem<Rational>;
pub type RationalBasis = StandardBasis<Rational>;
