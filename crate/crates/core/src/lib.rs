//! Exact computations on finite effect algebras, effect-clans and their
//! state spaces.

pub mod algebra;
pub mod clans;
pub mod error;
pub mod linalg;
pub mod represent;
pub mod scalar;
pub mod states;
pub mod structure;

pub use algebra::{EffectAlgebra, EffectAlgebraTable, Elem};
pub use error::{Error, ParseError, Result};
pub use scalar::{BigRational, Rational64, Scalar};

/// The scalar used by the command-line tools and the type aliases below.
pub type Rational = BigRational;

pub type StateVector = states::StateVector<Rational>;
pub type PolytopeV = states::PolytopeV<Rational>;
pub type DiscreteMeasure = represent::DiscreteMeasure<Rational>;
pub type FunctionFamily = clans::FunctionFamily<Rational>;
pub type RationalPair = represent::RationalPair<Rational>;
