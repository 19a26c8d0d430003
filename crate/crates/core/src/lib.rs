//! Exact invariants of gentle quivers with relations and of the completed
//! path algebras they present over `k⟦c⟧`.

pub mod algebra;
pub mod cli;
pub mod combinatorics;
pub mod dot;
pub mod dsl;
pub mod error;
pub mod fibres;
pub mod lattices;
pub mod presentation;
pub mod report;
pub mod samples;
pub mod singularity;

pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use presentation::{
    classify_strict, validate, ArrowId, GentlePresentation, Quiver, RelationSet,
    StrictPresentation, VertexClass, VertexId, Violation,
};
