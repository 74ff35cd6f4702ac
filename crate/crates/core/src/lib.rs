//! Truncated variation, the p-TV seminorms built from it, and Young-type
//! integration and integral equations on sampled paths.

// `!(x >= 0.0)` style guards are used on purpose so that NaN is rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bound;
pub mod error;
pub mod exec;
pub mod norms;
pub mod ode;
pub mod oracle;
pub mod path;
pub mod tv;
pub mod young;

pub use bound::BoundReport;
pub use error::{Error, Result};
pub use exec::Execution;
pub use path::{Interpolation, SampledPath};
