//! Exact symbolic computation of orbifold Jacobian algebras of
//! Landau-Ginzburg orbifolds `(W, H)` with diagonal finite abelian symmetry.
//!
//! The coefficient field is a truncated Laurent series ring in `q` over a
//! cyclotomic number field `Q(zeta_m)`, so every identity this crate verifies
//! is checked by exact arithmetic up to a tracked `q`-precision.
//!
//! Module layout:
//! - [`scalar`]: cyclotomic numbers and truncated Laurent `q`-series.
//! - [`poly`]: multivariate polynomials, diagonal group actions, difference
//!   quotients.
//! - [`cliff`]: exterior / graded Clifford algebra with Koszul signs and the
//!   `Upsilon` contraction.
//! - [`jacobian`]: Groebner bases, normal forms, Jacobian (Milnor) rings.
//! - [`orbjac`]: twisted and orbifold Jacobian algebras with structure
//!   constants `sigma_{g,h}`.
//! - [`mf`]: Koszul matrix factorizations, equivariant kernels, sector
//!   complexes.
//! - [`t2`]: the elliptic-curve (two-torus) worked example: the series
//!   `phi`, `psi`, `gamma`, the modular identity, and the Kodaira-Spencer
//!   ring-homomorphism verification.
//! - [`problem`]: JSON problem descriptions consumed by the CLI.

pub mod scalar;
pub mod poly;
pub mod cliff;
pub mod jacobian;
pub mod orbjac;
pub mod mf;
pub mod t2;
pub mod problem;

pub use scalar::{CycNum, Prec, QSeries};
