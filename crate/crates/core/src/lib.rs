//! Exact arithmetic over two-way binary sequences and the objects built on them.
//!
//! - [`bitseq`]: eventually-periodic left/right/two-way bit sequences and their
//!   exact rational values (two's complement on the left, geometric series on
//!   the right), complement, flip and index-set views.
//! - [`streams`]: computable numbers in `(0,1)` as on-demand certified bit
//!   streams with dyadic prefix intervals and diagonalization.
//! - [`hyperops`]: the explosive operators `m ⊗^k n` on naturals under an
//!   explicit bit-length budget.
//! - [`ordinals`]: Cantor normal form arithmetic below ε₀.
//! - [`cardinals`]: hereditarily finite sets and a symbolic rewriter for
//!   transfinite cardinal expressions.
//!
//! Batch operations (sweeps, grid checks, confluence exploration) take an
//! [`Exec`] mode; with the `parallel` feature they run on rayon.

pub mod bitseq;
pub mod cardinals;
mod error;
mod exec;
pub mod hyperops;
pub mod ordinals;
pub mod rational;
pub mod streams;

pub use error::{Error, Result};
pub use exec::Exec;
