//! Sedenion arithmetic, zero-divisor structure, slice geometry and star-product
//! power series over the Cayley-Dickson algebras up to dimension 16.

pub mod algebra;
pub mod error;
pub mod figure;
pub mod series;
pub mod slice;
pub mod zero;

pub use algebra::{CDElement, ComplexPoint};
pub use error::{Error, Result};
