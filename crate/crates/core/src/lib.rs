//! Boolean-function complexity workbench with a certified junta-size bound
//! pipeline.
//!
//! * [`boolfn`]: truth tables, restrictions, multilinear and Fourier expansions.
//! * [`measures`]: degree, influence, sensitivity, block sensitivity, `W`, `S`.
//! * [`lp`]: exact-rational moment LPs bounding block sensitivity by degree.
//! * [`wrec`]: the `W(b, d)` recursion, tail sums and the final constants.
//! * [`oracle`]: exhaustive verification of the inequalities over small arities.

pub mod boolfn;
pub mod error;
pub mod lp;
pub mod measures;
pub mod oracle;
pub mod ratio;
pub mod wrec;

pub use boolfn::{Assignment, BooleanFunction, FourierCoeffs, Mask, MultilinearCoeffs};
pub use error::{Error, Result};
pub use ratio::Rational;
