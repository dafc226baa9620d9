//! Maximum modulus sets of complex polynomials: circle maxima, radius sweeps
//! with discontinuity and singleton detection, and certified constructions of
//! polynomials with prescribed discontinuities or singleton components.

pub mod circlemax;
pub mod cli;
pub mod constructor;
mod ddouble;
pub mod error;
pub mod export;
pub mod oracle;
pub mod plot;
pub mod poly;
pub mod roots;
pub mod tracer;
pub mod verify;

pub use circlemax::{global_maximizers, max_modulus, RadialMaxima, Tolerances};
pub use constructor::{build, certify_a, Certificate, ConstructionKind, ConstructionSpec};
pub use error::{Error, Result};
pub use poly::{odd_product_t1, odd_product_t2, Polynomial, TrigProfile};
pub use tracer::{
    detect_discontinuities, detect_singletons, global_discontinuities, trace, AnnulusWindow,
    MaxModSet,
};
