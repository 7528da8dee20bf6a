//! Kronecker symbols, automatic sequences and mock characters.
//!
//! The crate is organised bottom-up:
//!
//! - [`kronecker`]: the Kronecker symbol on all of `Z x Z`, with oracle routes.
//! - [`arithfun`]: exact-valued arithmetic functions, Dirichlet characters,
//!   period reduction and the prime-power structure of mock characters.
//! - [`automata`]: `q`-kernels, automata with output and period detection.
//! - [`classify`]: Dirichlet / mock character verdicts.
//! - [`analysis`]: pretentious distance, Dirichlet series and infinite products.
//! - [`ffseries`]: power series over the four-element field.

pub mod analysis;
pub mod arithfun;
pub mod automata;
pub mod classify;
pub mod ffseries;
pub mod kronecker;
pub mod primes;
