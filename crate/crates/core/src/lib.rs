//! Finite BCK-algebras: axiom validation, the BCK-union and Iséki extension
//! constructions, exact commuting degrees, the families realizing every
//! achievable degree, and enumeration up to isomorphism.

pub mod algebra;
pub mod classify;
pub mod commuting;
pub mod construct;
pub mod error;
pub mod expr;
pub mod family;
pub mod format;
pub mod iso;
pub mod ratio;
pub mod table;

pub use algebra::{pi, standard_algebras, tc, two, validate, validate_rows, BckAlgebra, StandardAlgebras};
pub use classify::{
    degree_census, enumerate, enumerate_with, find_maximal_subalgebra, verify_unique_minimum, Catalog,
    ClassEntry, DegreeCensus, EnumerationConfig, EnumerationError, MinimumReport,
};
pub use commuting::CommutingReport;
pub use construct::{b_star, extend_top, m_chain, predict_extend_top, predict_union_two, union};
pub use error::{Axiom, AxiomViolation, FormatError, ValidationError};
pub use expr::{Base, ConstructionExpr, Step};
pub use family::{cd_set, family, synthesize, trace_family_index, FamilyEntry, FamilyLevel, Synthesis};
pub use iso::{canonical_form, is_isomorphic, CanonicalForm, IsoWitness};
pub use ratio::Ratio;
pub use table::{CayleyTable, Element};
