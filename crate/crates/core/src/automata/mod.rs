//! `q`-kernels, automata with output, and eventual-period detection.
//!
//! Kernel classes are identified by fingerprints (a fixed number of leading
//! terms), so a closed kernel is evidence of automaticity at the chosen
//! parameters rather than a proof. Every automaton built from a kernel should
//! be replayed against the source sequence before it is trusted.

mod dfao;
mod kernel;
mod period;

pub use dfao::{kernel_to_dfao, Dfao, DigitOrder};
pub use kernel::{compute_kernel, KernelClass, KernelError, KernelParams, OverflowCause, QKernel};
pub use period::{detect_eventual_period, PeriodError, PeriodVerdict};
