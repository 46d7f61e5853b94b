//! Exact JUE correlators, monotone Hurwitz numbers and the bridge between them.

pub mod error;
pub mod exact;
pub mod hurwitz;
pub mod jacobi;
pub mod schur;
pub mod symgroup;
pub mod topo;

pub use error::{Error, Result};
pub use exact::{RationalFunction, Rational, VarSet};
pub use jacobi::{Point, Sign};
pub use symgroup::Partition;
