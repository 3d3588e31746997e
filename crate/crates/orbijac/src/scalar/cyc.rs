//! Elements of the cyclotomic field `Q(zeta_m)` in canonical form.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use once_cell::sync::Lazy;

use super::ScalarError;

/// Arbitrary-precision rational scalar.
pub type Rat = BigRational;

pub(crate) fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Euler totient by trial-division factorization.
fn euler_phi(m: u32) -> usize {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result = result / p * (p - 1);
        }
        p += 1;
    }
    if n > 1 {
        result = result / n * (n - 1);
    }
    result as usize
}

/// Dense univariate polynomial over `Q`, lowest degree first.
type Poly = Vec<Rat>;

fn poly_trim(p: &mut Poly) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

/// Quotient of exact polynomial division; panics on nonzero remainder
/// (only used for cyclotomic polynomials where divisibility is guaranteed).
fn poly_div_exact(num: &Poly, den: &Poly) -> Poly {
    let mut rem = num.clone();
    poly_trim(&mut rem);
    let mut den = den.clone();
    poly_trim(&mut den);
    assert!(!den.is_empty(), "division by zero polynomial");
    let dl = den.len() - 1;
    let lead = den[dl].clone();
    let mut quot = vec![Rat::zero(); rem.len().saturating_sub(dl)];
    while rem.len() > dl {
        let rl = rem.len() - 1;
        let c = &rem[rl] / &lead;
        let shift = rl - dl;
        for (i, d) in den.iter().enumerate() {
            let v = &rem[shift + i] - &c * d;
            rem[shift + i] = v;
        }
        quot[shift] = c;
        poly_trim(&mut rem);
        if rem.is_empty() {
            break;
        }
    }
    assert!(rem.is_empty(), "nonzero remainder in exact polynomial division");
    quot
}

/// The m-th cyclotomic polynomial as `(x^m - 1) / prod_{d|m, d<m} Phi_d(x)`.
fn cyclotomic_poly(m: u32) -> Poly {
    if m == 1 {
        return vec![-Rat::one(), Rat::one()];
    }
    let mut num = vec![Rat::zero(); m as usize + 1];
    num[0] = -Rat::one();
    num[m as usize] = Rat::one();
    let mut result = num;
    for d in 1..m {
        if m % d == 0 {
            let phi_d = cached_cyclotomic(d);
            result = poly_div_exact(&result, &phi_d);
        }
    }
    result
}

static CYC_CACHE: Lazy<Mutex<HashMap<u32, Poly>>> = Lazy::new(|| Mutex::new(HashMap::new()));

fn cached_cyclotomic(m: u32) -> Poly {
    if let Some(p) = CYC_CACHE.lock().unwrap().get(&m) {
        return p.clone();
    }
    let p = cyclotomic_poly(m);
    CYC_CACHE.lock().unwrap().insert(m, p.clone());
    p
}

/// An element of `Q(zeta_m)` in the power basis `1, zeta, ..., zeta^(phi(m)-1)`
/// reduced modulo the m-th cyclotomic polynomial. The representation is
/// canonical, so `==` is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycNum {
    m: u32,
    coeffs: Vec<Rat>,
}

impl CycNum {
    /// Degree of the extension, `phi(m)`.
    pub fn degree(m: u32) -> usize {
        euler_phi(m)
    }

    pub fn zero(m: u32) -> Self {
        CycNum { m, coeffs: vec![Rat::zero(); euler_phi(m)] }
    }

    pub fn one(m: u32) -> Self {
        Self::from_rat(m, Rat::one())
    }

    pub fn from_rat(m: u32, r: Rat) -> Self {
        let mut c = vec![Rat::zero(); euler_phi(m)];
        c[0] = r;
        CycNum { m, coeffs: c }
    }

    pub fn from_int(m: u32, n: i64) -> Self {
        Self::from_rat(m, rat_int(n))
    }

    /// The root of unity `zeta_m^k`.
    pub fn zeta(m: u32, k: i64) -> Self {
        let k = k.rem_euclid(m as i64) as usize;
        let mut raw = vec![Rat::zero(); k + 1];
        raw[k] = Rat::one();
        Self::reduce_raw(m, raw)
    }

    /// The imaginary unit, available whenever `4 | m`.
    pub fn i_unit(m: u32) -> Self {
        assert!(m % 4 == 0, "i requires 4 | m (got m = {m})");
        Self::zeta(m, (m / 4) as i64)
    }

    fn reduce_raw(m: u32, mut raw: Poly) -> Self {
        let modulus = cached_cyclotomic(m);
        let deg = modulus.len() - 1;
        // The cyclotomic polynomial is monic: x^deg = -(lower part).
        while raw.len() > deg {
            let top = raw.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = raw.len() - deg;
            for i in 0..deg {
                let v = &raw[shift + i] - &top * &modulus[i];
                raw[shift + i] = v;
            }
        }
        raw.resize(deg, Rat::zero());
        CycNum { m, coeffs: raw }
    }

    pub fn order(&self) -> u32 {
        self.m
    }

    /// Basis coefficients (length `phi(m)`).
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// If the element lies in `Q`, its rational value.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(
            self.m, other.m,
            "cyclotomic order mismatch: {} vs {}",
            self.m, other.m
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_order(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CycNum { m: self.m, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_order(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        CycNum { m: self.m, coeffs }
    }

    pub fn neg(&self) -> Self {
        CycNum { m: self.m, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_order(other);
        let mut raw = vec![Rat::zero(); 2 * self.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let v = &raw[i + j] + a * b;
                raw[i + j] = v;
            }
        }
        Self::reduce_raw(self.m, raw)
    }

    pub fn scale(&self, r: &Rat) -> Self {
        CycNum { m: self.m, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// the (irreducible) cyclotomic modulus.
    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero { m: self.m });
        }
        let modulus = cached_cyclotomic(self.m);
        // Bezout: s*a + t*modulus = gcd = const; then a^{-1} = s / const.
        let mut r0 = modulus;
        let mut r1 = self.coeffs.clone();
        poly_trim(&mut r1);
        let mut s0: Poly = vec![];
        let mut s1: Poly = vec![Rat::one()];
        while r1.len() > 1 {
            let (q, r) = poly_divmod(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        assert!(!r1.is_empty(), "cyclotomic modulus must be coprime to nonzero element");
        let c = r1[0].clone();
        let inv_coeffs: Poly = s1.iter().map(|x| x / &c).collect();
        Ok(Self::reduce_raw(self.m, inv_coeffs))
    }

    pub fn div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, k: i64) -> Result<Self, ScalarError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one(self.m);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    /// Smallest `k >= 1` with `self^k = 1`, if `self` is a root of unity
    /// (only orders dividing `m` are possible for torsion in `Q(zeta_m)^*`,
    /// up to sign, so `2m` is a safe search bound).
    pub fn root_of_unity_order(&self) -> Option<u32> {
        let mut p = self.clone();
        for k in 1..=(2 * self.m) {
            if p.is_one() {
                return Some(k);
            }
            p = p.mul(self);
        }
        None
    }
}

fn poly_divmod(num: &Poly, den: &Poly) -> (Poly, Poly) {
    let mut rem = num.clone();
    poly_trim(&mut rem);
    let dl = den.len() - 1;
    let lead = den[dl].clone();
    let mut quot = vec![Rat::zero(); rem.len().saturating_sub(dl)];
    while rem.len() > dl {
        let rl = rem.len() - 1;
        let c = &rem[rl] / &lead;
        let shift = rl - dl;
        for (i, d) in den.iter().enumerate() {
            let v = &rem[shift + i] - &c * d;
            rem[shift + i] = v;
        }
        quot[shift] = c;
        poly_trim(&mut rem);
    }
    (quot, rem)
}

fn poly_sub(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![Rat::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] = c.clone();
    }
    for (i, c) in b.iter().enumerate() {
        let v = &out[i] - c;
        out[i] = v;
    }
    poly_trim(&mut out);
    out
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let v = &out[i + j] + x * y;
            out[i + j] = v;
        }
    }
    out
}

fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
            } else if c.is_positive() {
                write!(f, "+")?;
            }
            match k {
                0 => write!(f, "{}", fmt_rat(c))?,
                1 => write!(f, "{}*z", fmt_rat(c))?,
                _ => write!(f, "{}*z^{}", fmt_rat(c), k)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum(m={}, {})", self.m, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polys() {
        // Phi_12 = x^4 - x^2 + 1
        let p = cached_cyclotomic(12);
        let want: Vec<i64> = vec![1, 0, -1, 0, 1];
        assert_eq!(p.len(), 5);
        for (c, w) in p.iter().zip(want) {
            assert_eq!(c, &rat_int(w));
        }
        assert_eq!(cached_cyclotomic(3).len(), 3); // x^2 + x + 1
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(1), 1);
    }

    #[test]
    fn zeta3_relation() {
        // zeta3 + zeta3^2 + 1 = 0
        let z = CycNum::zeta(3, 1);
        let s = z.add(&z.mul(&z)).add(&CycNum::one(3));
        assert!(s.is_zero());
    }

    #[test]
    fn cube_of_one_minus_zeta3() {
        // (1 - zeta3)^3 = -3 - 6*zeta3 in the zeta3 power basis
        let z = CycNum::zeta(3, 1);
        let a = CycNum::one(3).sub(&z);
        let c = a.mul(&a).mul(&a);
        let want = CycNum::from_int(3, -3).add(&z.scale(&rat_int(-6)));
        assert_eq!(c, want);
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = CycNum::i_unit(12);
        assert_eq!(i, CycNum::zeta(12, 3));
        assert_eq!(i.mul(&i), CycNum::from_int(12, -1));
    }

    #[test]
    fn chi_and_i_coexist_at_m12() {
        let chi = CycNum::zeta(12, 4); // e^{2 pi i / 3}
        let one = CycNum::one(12);
        assert!(chi.mul(&chi).mul(&chi).is_one());
        assert!(!chi.is_one());
        // 1 + chi + chi^2 = 0
        assert!(one.add(&chi).add(&chi.mul(&chi)).is_zero());
        assert_eq!(chi.root_of_unity_order(), Some(3));
        assert_eq!(CycNum::i_unit(12).root_of_unity_order(), Some(4));
    }

    #[test]
    fn inverse_roundtrip() {
        let x = CycNum::zeta(12, 5)
            .scale(&rat_int(3))
            .add(&CycNum::from_rat(12, Rat::new(BigInt::from(7), BigInt::from(2))));
        let inv = x.inv().unwrap();
        assert!(x.mul(&inv).is_one());
        assert!(CycNum::zero(12).inv().is_err());
    }

    #[test]
    fn cyclotomic_identity_for_ks_chain() {
        // (1 + chi) / (3 (1 - chi)) = 1 / (1 - chi)^3 in Q(zeta_12)
        let chi = CycNum::zeta(12, 4);
        let one = CycNum::one(12);
        let lhs = one
            .add(&chi)
            .div(&one.sub(&chi).scale(&rat_int(3)))
            .unwrap();
        let d = one.sub(&chi);
        let rhs = d.mul(&d).mul(&d).inv().unwrap();
        assert_eq!(lhs, rhs);
    }
}
