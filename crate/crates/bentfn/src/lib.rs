//! Analysis and construction toolkit for bent Boolean functions.
//!
//! The crate provides packed truth tables with ANF conversion, the fast
//! Walsh-Hadamard transform with nonlinearity and bentness classification,
//! restricted balancedness and restricted bentness over the even/odd
//! Hamming-weight partition of the domain, the parity-based r=1 extended
//! Maiorana-McFarland construction that turns a bent function on `n`
//! variables into one on `n + 2` variables with a chosen balanced parity
//! class, and brute-force oracles plus exhaustive enumerators that validate
//! every fast path at desk scale.

pub mod anf;
pub mod construct;
pub mod error;
pub mod function;
pub mod oracle;
pub mod restricted;
pub mod walsh;

pub use anf::AnfPolynomial;
pub use error::{Error, Result};
pub use function::{AffineFunctionSpec, BooleanFunction};
pub use restricted::ParityClass;
pub use walsh::WalshSpectrum;
