//! Constant-rank subspaces of symmetric bilinear forms over finite fields of
//! odd characteristic: exact field arithmetic, form analysis, subspace
//! censuses, constructions, verification checks and an exhaustive search.

pub mod construct;
pub mod error;
pub mod extension;
pub mod field;
pub mod forms;
pub mod io;
pub mod linalg;
pub mod search;
pub mod subspace;
pub mod verify;

pub use error::{Error, Result};
pub use extension::Extension;
pub use field::{make_field, parse_field_spec, ArithOp, Field, FieldCtx, FieldElement, Gf};
pub use forms::{FormType, SymForm};
pub use subspace::{FormSpace, Limits, PartitionSpec, TypeCensus, VecSubspace};
