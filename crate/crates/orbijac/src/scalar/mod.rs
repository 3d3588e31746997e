//! Exact coefficient arithmetic: cyclotomic numbers and truncated Laurent
//! series in `q`.
//!
//! A [`CycNum`] is an element of `Q(zeta_m)` stored in the power basis
//! `1, zeta, ..., zeta^(phi(m)-1)` reduced modulo the m-th cyclotomic
//! polynomial, so equality is coefficient equality. A [`QSeries`] is a
//! Laurent series in `q` with [`CycNum`] coefficients and an explicit
//! precision bound: exponents at or beyond the bound are undetermined and
//! asking for them is an error, never a silent zero.

mod cyc;
mod series;

pub use cyc::{CycNum, Rat};
pub use series::{DerivMode, Prec, QSeries};

use thiserror::Error;

/// Errors from scalar arithmetic.
#[derive(Debug, Clone, Error)]
pub enum ScalarError {
    #[error("division by zero in Q(zeta_{m})")]
    DivisionByZero { m: u32 },
    #[error("series is zero up to its precision and cannot be inverted")]
    ZeroSeries,
    #[error("series with more than one term is exact; inversion needs an explicit precision")]
    ExactInversion,
    #[error("coefficient of q^{exp} requested but series is only determined below q^{prec}")]
    PrecisionViolation { exp: i64, prec: i64 },
    #[error("cyclotomic order mismatch: {lhs} vs {rhs}")]
    OrderMismatch { lhs: u32, rhs: u32 },
}
