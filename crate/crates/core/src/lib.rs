//! Graver bases, indispensable elements and strong robustness of toric ideals,
//! with bouquet decompositions, the strongly robust complex of a monomial
//! curve and generalized Lawrence matrices.

pub mod bouquet;
pub mod cache;
pub mod complex;
pub mod error;
pub mod graver;
pub mod integer;
pub mod lawrence;
pub mod linalg;
pub mod oracle;
pub mod robustness;
pub mod search;

pub use error::{Error, Result};
pub use integer::Integer;
pub use linalg::{IntMat, IntVec, LatticeBasis};
