//! Finite effect algebras as partial Cayley tables.

mod axioms;
pub mod corpus;
mod order;
mod table;

pub use axioms::{is_effect_algebra, verify_axioms, AxiomId, AxiomReport, Violation};
pub use corpus::{corpus, CorpusEntry};
pub use order::{EffectAlgebra, HomomorphismCheck};
pub use table::{EffectAlgebraTable, Elem, TableBuilder, ONE_NAME, ZERO_NAME};
