//! Self-orthogonal J-affine variety codes over finite fields, their
//! subfield-subcodes, and the quantum stabilizer parameters they yield.

pub mod affine;
pub mod cyclo;
pub mod designer;
pub mod error;
pub mod fixtures;
pub mod galois;
pub mod hyper;
pub mod linalg;
pub mod oracle;
pub mod ortho;
pub mod quantum;

pub use error::{Error, Result};
