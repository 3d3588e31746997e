//! Truncated Laurent series in `q` over `Q(zeta_m)` with pessimistic
//! precision tracking.
//!
//! A series stores only nonzero coefficients at exponents strictly below its
//! precision. Arithmetic propagates the precision so that no operation ever
//! claims a coefficient it cannot actually determine; a pure polynomial (in
//! particular a constant) carries the infinite precision sentinel
//! [`Prec::Exact`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;

use super::cyc::{rat_int, CycNum, Rat};
use super::ScalarError;

/// Precision bound of a series: coefficients at exponents `>= Finite(n)` are
/// undetermined; `Exact` means all coefficients are known (a Laurent
/// polynomial).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Prec {
    Finite(i64),
    Exact,
}

impl Prec {
    pub fn min(self, other: Prec) -> Prec {
        match (self, other) {
            (Prec::Exact, p) | (p, Prec::Exact) => p,
            (Prec::Finite(a), Prec::Finite(b)) => Prec::Finite(a.min(b)),
        }
    }

    pub fn add(self, k: i64) -> Prec {
        match self {
            Prec::Exact => Prec::Exact,
            Prec::Finite(n) => Prec::Finite(n + k),
        }
    }

    pub fn admits(self, exp: i64) -> bool {
        match self {
            Prec::Exact => true,
            Prec::Finite(n) => exp < n,
        }
    }

    pub fn at_least(self, floor: i64) -> bool {
        match self {
            Prec::Exact => true,
            Prec::Finite(n) => n >= floor,
        }
    }
}

impl PartialOrd for Prec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(match (self, other) {
            (Prec::Exact, Prec::Exact) => Ordering::Equal,
            (Prec::Exact, _) => Ordering::Greater,
            (_, Prec::Exact) => Ordering::Less,
            (Prec::Finite(a), Prec::Finite(b)) => a.cmp(b),
        })
    }
}

impl fmt::Display for Prec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Prec::Exact => write!(f, "inf"),
            Prec::Finite(n) => write!(f, "{n}"),
        }
    }
}

/// Derivative flavors: `d/dq` and the logarithmic `q d/dq`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DerivMode {
    DDq,
    QDDq,
}

/// Truncated Laurent series in `q` with coefficients in `Q(zeta_m)`.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct QSeries {
    m: u32,
    terms: BTreeMap<i64, CycNum>,
    prec: Prec,
}

impl QSeries {
    pub fn zero(m: u32) -> Self {
        QSeries { m, terms: BTreeMap::new(), prec: Prec::Exact }
    }

    pub fn one(m: u32) -> Self {
        Self::constant(CycNum::one(m))
    }

    pub fn constant(c: CycNum) -> Self {
        Self::monomial(0, c)
    }

    pub fn from_int(m: u32, n: i64) -> Self {
        Self::constant(CycNum::from_int(m, n))
    }

    pub fn from_rat(m: u32, r: Rat) -> Self {
        Self::constant(CycNum::from_rat(m, r))
    }

    /// `c * q^exp`, exact.
    pub fn monomial(exp: i64, c: CycNum) -> Self {
        let m = c.order();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        QSeries { m, terms, prec: Prec::Exact }
    }

    pub fn from_terms(m: u32, terms: Vec<(i64, CycNum)>, prec: Prec) -> Self {
        let mut s = QSeries { m, terms: BTreeMap::new(), prec };
        for (e, c) in terms {
            s.add_term(e, c);
        }
        s
    }

    fn add_term(&mut self, exp: i64, c: CycNum) {
        if c.is_zero() || !self.prec.admits(exp) {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn order(&self) -> u32 {
        self.m
    }

    pub fn precision(&self) -> Prec {
        self.prec
    }

    /// Smallest exponent with a stored (nonzero) coefficient.
    pub fn valuation(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Valuation used in precision propagation: a series with no stored
    /// terms is treated as vanishing up to its precision.
    fn val_for_prec(&self) -> Prec {
        match self.valuation() {
            Some(v) => Prec::Finite(v),
            None => self.prec,
        }
    }

    /// True when no nonzero coefficient is stored (zero up to precision).
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).map_or(false, |c| c.is_one())
    }

    /// If the series is a constant, its value.
    pub fn as_constant(&self) -> Option<CycNum> {
        match self.terms.len() {
            0 => Some(CycNum::zero(self.m)),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &CycNum)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `q^exp`; asking at or beyond the precision is an
    /// error, never a silent zero.
    pub fn coeff(&self, exp: i64) -> Result<CycNum, ScalarError> {
        if !self.prec.admits(exp) {
            let prec = match self.prec {
                Prec::Finite(n) => n,
                Prec::Exact => unreachable!(),
            };
            return Err(ScalarError::PrecisionViolation { exp, prec });
        }
        Ok(self
            .terms
            .get(&exp)
            .cloned()
            .unwrap_or_else(|| CycNum::zero(self.m)))
    }

    pub fn truncate(&self, prec: Prec) -> Self {
        let prec = self.prec.min(prec);
        let terms = self
            .terms
            .iter()
            .filter(|(&e, _)| prec.admits(e))
            .map(|(&e, c)| (e, c.clone()))
            .collect();
        QSeries { m: self.m, terms, prec }
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(self.m, other.m, "series cyclotomic order mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_order(other);
        let prec = self.prec.min(other.prec);
        let mut out = QSeries { m: self.m, terms: BTreeMap::new(), prec };
        for (&e, c) in &self.terms {
            out.add_term(e, c.clone());
        }
        for (&e, c) in &other.terms {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        QSeries {
            m: self.m,
            terms: self.terms.iter().map(|(&e, c)| (e, c.neg())).collect(),
            prec: self.prec,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_order(other);
        // prec(a*b) = min(prec_a + val_b, prec_b + val_a)
        let prec = match self.prec.min(other.prec) {
            Prec::Exact => Prec::Exact,
            _ => {
                let pa = match (self.prec, other.val_for_prec()) {
                    (Prec::Exact, _) => Prec::Exact,
                    (Prec::Finite(p), Prec::Finite(v)) => Prec::Finite(p + v),
                    (Prec::Finite(_), Prec::Exact) => Prec::Exact, // other is exactly 0
                };
                let pb = match (other.prec, self.val_for_prec()) {
                    (Prec::Exact, _) => Prec::Exact,
                    (Prec::Finite(p), Prec::Finite(v)) => Prec::Finite(p + v),
                    (Prec::Finite(_), Prec::Exact) => Prec::Exact,
                };
                pa.min(pb)
            }
        };
        let mut out = QSeries { m: self.m, terms: BTreeMap::new(), prec };
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &other.terms {
                if out.prec.admits(e1 + e2) {
                    out.add_term(e1 + e2, c1.mul(c2));
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &CycNum) -> Self {
        if c.is_zero() {
            return QSeries { m: self.m, terms: BTreeMap::new(), prec: self.prec };
        }
        QSeries {
            m: self.m,
            terms: self.terms.iter().map(|(&e, x)| (e, x.mul(c))).collect(),
            prec: self.prec,
        }
    }

    pub fn scale_rat(&self, r: &Rat) -> Self {
        self.scale(&CycNum::from_rat(self.m, r.clone()))
    }

    pub fn mul_q_pow(&self, k: i64) -> Self {
        QSeries {
            m: self.m,
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
            prec: self.prec.add(k),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.m);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse. A series of finite precision inverts to the
    /// precision arithmetic supports; an exact series must be a monomial
    /// (otherwise the inverse is an infinite series and needs
    /// [`QSeries::invert_to`]).
    pub fn invert(&self) -> Result<Self, ScalarError> {
        match self.prec {
            Prec::Exact => {
                if self.terms.is_empty() {
                    Err(ScalarError::ZeroSeries)
                } else if self.terms.len() == 1 {
                    let (&e, c) = self.terms.iter().next().unwrap();
                    Ok(Self::monomial(-e, c.inv()?))
                } else {
                    Err(ScalarError::ExactInversion)
                }
            }
            Prec::Finite(n) => {
                let v = self.valuation().ok_or(ScalarError::ZeroSeries)?;
                self.invert_impl(v, n - v)
            }
        }
    }

    /// Inverse computed to the given number of known coefficients starting
    /// at `-valuation`, for exact inputs with several terms.
    pub fn invert_to(&self, prec: i64) -> Result<Self, ScalarError> {
        let v = self.valuation().ok_or(ScalarError::ZeroSeries)?;
        let len = match self.prec {
            Prec::Exact => prec + v,
            Prec::Finite(n) => (n - v).min(prec + v),
        };
        self.invert_impl(v, len)
    }

    /// Inverse of `q^v * u` with `u` a unit whose first `len` coefficients
    /// are known: standard recurrence on `u^{-1}`.
    fn invert_impl(&self, v: i64, len: i64) -> Result<Self, ScalarError> {
        if len <= 0 {
            return Err(ScalarError::ZeroSeries);
        }
        let lead = self.terms.get(&v).unwrap().clone();
        let lead_inv = lead.inv()?;
        let mut inv: Vec<CycNum> = Vec::with_capacity(len as usize);
        inv.push(lead_inv.clone());
        for k in 1..len {
            // u^{-1}_k = -lead^{-1} * sum_{j=1..k} u_j * u^{-1}_{k-j}
            let mut s = CycNum::zero(self.m);
            for j in 1..=k {
                if let Some(uj) = self.terms.get(&(v + j)) {
                    s = s.add(&uj.mul(&inv[(k - j) as usize]));
                }
            }
            inv.push(lead_inv.mul(&s).neg());
        }
        let terms = inv
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (-v + k as i64, c))
            .collect();
        Ok(QSeries { m: self.m, terms, prec: Prec::Finite(-v + len) })
    }

    pub fn div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul(&other.invert()?))
    }

    /// Termwise derivative; `d/dq` lowers the precision by one, the
    /// logarithmic derivative keeps it.
    pub fn derivative(&self, mode: DerivMode) -> Self {
        let (shift, prec) = match mode {
            DerivMode::DDq => (-1, self.prec.add(-1)),
            DerivMode::QDDq => (0, self.prec),
        };
        let mut out = QSeries { m: self.m, terms: BTreeMap::new(), prec };
        for (&e, c) in &self.terms {
            out.add_term(e + shift, c.scale(&rat_int(e)));
        }
        out
    }

    /// Compare all coefficients below both precisions; returns the verdict
    /// together with the effective precision of the comparison.
    pub fn eq_to_prec(&self, other: &Self) -> (bool, Prec) {
        let d = self.sub(other);
        (d.is_zero(), d.precision())
    }

    /// JSON encoding `{"val": v, "terms": [{"exp": n, "cyc": [...]}], "prec": N}`.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(&e, c)| {
                serde_json::json!({
                    "exp": e,
                    "cyc": c.coeffs().iter().map(rat_string).collect::<Vec<_>>(),
                })
            })
            .collect();
        let prec = match self.prec {
            Prec::Exact => serde_json::Value::String("inf".into()),
            Prec::Finite(n) => serde_json::json!(n),
        };
        serde_json::json!({
            "val": self.valuation(),
            "terms": terms,
            "prec": prec,
        })
    }
}

pub(crate) fn rat_string(r: &Rat) -> String {
    use num::One;
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `"a/b"` or `"a"` into a rational.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d == BigInt::from(0) {
            return None;
        }
        Some(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(BigRational::from_integer(n))
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            write!(f, "0")?;
        } else {
            let mut first = true;
            for (&e, c) in &self.terms {
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                match e {
                    0 => write!(f, "({c})")?,
                    1 => write!(f, "({c})*q")?,
                    _ => write!(f, "({c})*q^{e}")?,
                }
            }
        }
        if let Prec::Finite(n) = self.prec {
            write!(f, " + O(q^{n})")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(m: u32) -> QSeries {
        QSeries::monomial(1, CycNum::one(m))
    }

    #[test]
    fn monomial_products() {
        let mq = q(1).neg();
        let sq = mq.mul(&mq);
        assert_eq!(sq, QSeries::monomial(2, CycNum::one(1)));
        assert_eq!(sq.precision(), Prec::Exact);
    }

    #[test]
    fn truncated_cube() {
        // (-q^9 + 3 q^81)^3 truncated at q^100 = -q^27 + 9 q^99
        let m = 1;
        let a = QSeries::from_terms(
            m,
            vec![(9, CycNum::from_int(m, -1)), (81, CycNum::from_int(m, 3))],
            Prec::Finite(100),
        );
        let c = a.pow(3);
        assert_eq!(c.coeff(27).unwrap(), CycNum::from_int(m, -1));
        assert_eq!(c.coeff(99).unwrap(), CycNum::from_int(m, 9));
        assert_eq!(c.num_terms(), 2);
        // precision: min over the three-fold product
        assert_eq!(c.precision(), Prec::Finite(118));
        assert!(c.coeff(119).is_err());
    }

    #[test]
    fn q_zero_is_identity() {
        let a = QSeries::from_terms(
            12,
            vec![(-3, CycNum::zeta(12, 5)), (4, CycNum::from_int(12, 7))],
            Prec::Finite(10),
        );
        let one = QSeries::one(12);
        assert_eq!(one.mul(&a), a);
    }

    #[test]
    fn precision_violation_is_an_error() {
        let a = QSeries::from_terms(1, vec![(0, CycNum::one(1))], Prec::Finite(5));
        assert!(a.coeff(4).is_ok());
        assert!(matches!(
            a.coeff(5),
            Err(ScalarError::PrecisionViolation { exp: 5, prec: 5 })
        ));
    }

    #[test]
    fn geometric_inverse() {
        // 1 - q inverts to 1 + q + q^2 + ...
        let m = 1;
        let a = QSeries::one(m).sub(&q(m));
        assert!(matches!(a.invert(), Err(ScalarError::ExactInversion)));
        let inv = a.invert_to(6).unwrap();
        for k in 0..6 {
            assert!(inv.coeff(k).unwrap().is_one());
        }
        assert_eq!(inv.precision(), Prec::Finite(6));
    }

    #[test]
    fn monomial_inverse() {
        let a = QSeries::monomial(9, CycNum::from_int(1, -1));
        let inv = a.invert().unwrap();
        assert_eq!(inv, QSeries::monomial(-9, CycNum::from_int(1, -1)));
    }

    #[test]
    fn phi_like_inverse_roundtrip() {
        let m = 1;
        let phi = QSeries::from_terms(
            m,
            vec![(9, CycNum::from_int(m, -1)), (81, CycNum::from_int(m, 3))],
            Prec::Finite(200),
        );
        let inv = phi.invert().unwrap();
        assert_eq!(inv.valuation(), Some(-9));
        let prod = phi.mul(&inv);
        let (eq, prec) = prod.eq_to_prec(&QSeries::one(m));
        assert!(eq);
        assert!(prec.at_least(150));
        // double inversion returns the original up to precision
        let twice = inv.invert().unwrap();
        let (eq2, _) = twice.eq_to_prec(&phi);
        assert!(eq2);
    }

    #[test]
    fn derivatives() {
        let m = 1;
        let a = QSeries::monomial(9, CycNum::from_int(m, -1));
        assert_eq!(
            a.derivative(DerivMode::QDDq),
            QSeries::monomial(9, CycNum::from_int(m, -9))
        );
        let c = QSeries::from_int(m, 5);
        assert!(c.derivative(DerivMode::QDDq).is_zero());
        assert!(c.derivative(DerivMode::DDq).is_zero());
        // psi = -q - 5q^25 + ... termwise d/dq
        let psi = QSeries::from_terms(
            m,
            vec![(1, CycNum::from_int(m, -1)), (25, CycNum::from_int(m, -5))],
            Prec::Finite(49),
        );
        let d = psi.derivative(DerivMode::DDq);
        assert_eq!(d.coeff(0).unwrap(), CycNum::from_int(m, -1));
        assert_eq!(d.coeff(24).unwrap(), CycNum::from_int(m, -125));
        assert_eq!(d.precision(), Prec::Finite(48));
    }
}
