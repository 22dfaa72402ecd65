//! Jacobi theta and elliptic functions over complex arguments, and the Witt
//! (vector-field) and 2×2 matrix realizations of the four Cayley-Klein
//! algebras with non-zero curvatures that they generate.
//!
//! The crate is organised bottom-up:
//!
//! - [`theta`]: the four classical theta series, nome and modulus conversions.
//! - [`jacobi`]: `sn`, `cn`, `dn` and the nine Glaisher quotients, their
//!   derivatives, quarter periods, pole geometry and degenerate limits.
//! - [`modular`]: modular-group action on the lattice parameter and the
//!   `k ↔ k′` and `λ = ik/k′` function identities.
//! - [`witt`]: one-variable vector fields `f(z) d/dz`, their Lie bracket and
//!   residual checks on sample grids.
//! - [`biortho`]: bi-orthogonal vector pairs, deformed `σ^γ` matrices and the
//!   matrix generator triples.
//! - [`ck`]: algebra types, structure constants, the realization catalog,
//!   verification and both Casimir notions.
//! - [`flow`]: the generating quadratic ODE triplet, its first integrals and a
//!   Runge–Kutta oracle.
//! - [`cli`]: the command-line front end used by the `ckwitt` binary.

pub mod biortho;
pub mod ck;
pub mod cli;
pub mod error;
pub mod flow;
pub mod jacobi;
pub mod modular;
pub mod theta;
pub mod witt;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// The imaginary unit.
pub const I: Complex64 = Complex64::new(0.0, 1.0);
