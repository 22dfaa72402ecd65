//! Cayley-Klein algebras with two non-zero curvatures and their realizations.
//!
//! Each realization is a triple `(J, P₁, P₂)` of vector fields `f(z) d/dz`
//! built from Jacobi functions, or of 2×2 matrices built from `σ^γ`. The
//! catalog stores coefficients symbolically (`prefactor · function`, with
//! prefactors in `γ` and `ω`), so a report prints exactly what was checked.
//!
//! Four printed table rows do not satisfy the relations of their type; the
//! catalog carries a corrected row and keeps the printed one as
//! [`Provenance::Corrected`]. Rows of the k′ and λ families other than the
//! elliptic one are generated from the base rows and marked
//! [`Provenance::Derived`].

mod algebra;
mod catalog;
mod verify;

pub use algebra::*;
pub use catalog::*;
pub use verify::*;
