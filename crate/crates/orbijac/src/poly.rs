//! Multivariate polynomial arithmetic over the series scalars, variable-set
//! management for the single / doubled / tripled rings, diagonal group
//! actions, and difference quotients.
//!
//! A [`VarSet`] fixes `n` base variable names and a number of copies: copy 0
//! is the `x`-ring, copy 1 the `y`-ring, copy 2 the `z`-ring. Exponent
//! vectors are dense and flat, ordered `x_1..x_n, y_1..y_n, z_1..z_n`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::scalar::{CycNum, Prec, QSeries};

#[derive(Debug, Clone, Error)]
pub enum PolyError {
    #[error("variable set mismatch")]
    VarSetMismatch,
    #[error("group element arity {got} does not match {want} variables")]
    ArityMismatch { got: usize, want: usize },
    #[error("polynomial is not invariant under the group element {element}")]
    NotInvariant { element: String },
    #[error("group entry is not a root of unity")]
    NotRootOfUnity,
    #[error("group closure exceeded the configured bound {bound}")]
    ClosureBound { bound: usize },
}

/// Ordered variable names replicated over 1, 2 or 3 copies.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VarSet {
    names: Arc<Vec<String>>,
    copies: u8,
}

const COPY_PREFIX: [&str; 3] = ["x", "y", "z"];

impl VarSet {
    pub fn new<S: Into<String>>(names: Vec<S>, copies: u8) -> Self {
        assert!((1..=3).contains(&copies));
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut seen = std::collections::HashSet::new();
        for n in &names {
            assert!(seen.insert(n.clone()), "duplicate variable name {n}");
        }
        VarSet { names: Arc::new(names), copies }
    }

    /// `n` variables named `x1..xn`.
    pub fn anon(n: usize, copies: u8) -> Self {
        Self::new((1..=n).map(|i| format!("x{i}")).collect::<Vec<_>>(), copies)
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn copies(&self) -> u8 {
        self.copies
    }

    pub fn dim(&self) -> usize {
        self.n() * self.copies as usize
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Flat index of base variable `i` in the given copy.
    pub fn flat(&self, copy: u8, i: usize) -> usize {
        assert!(copy < self.copies && i < self.n());
        copy as usize * self.n() + i
    }

    pub fn copy_of(&self, flat: usize) -> u8 {
        (flat / self.n()) as u8
    }

    pub fn base_of(&self, flat: usize) -> usize {
        flat % self.n()
    }

    pub fn display_name(&self, flat: usize) -> String {
        let base = self.base_of(flat);
        if self.copies == 1 {
            self.names[base].clone()
        } else {
            format!("{}{}", COPY_PREFIX[self.copy_of(flat) as usize], base + 1)
        }
    }

    /// Same names with a different number of copies.
    pub fn with_copies(&self, copies: u8) -> Self {
        VarSet { names: self.names.clone(), copies }
    }
}

/// Target of a single-variable substitution.
#[derive(Clone, Debug)]
pub enum Subst {
    Zero,
    /// `c * v` for a flat variable index `v` of the same varset.
    Scaled(CycNum, usize),
}

/// Multivariate polynomial with [`QSeries`] coefficients; no zero
/// coefficients are stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    vars: VarSet,
    m: u32,
    terms: BTreeMap<Vec<u32>, QSeries>,
}

impl MultiPoly {
    pub fn zero(vars: VarSet, m: u32) -> Self {
        MultiPoly { vars, m, terms: BTreeMap::new() }
    }

    pub fn one(vars: VarSet, m: u32) -> Self {
        Self::constant(vars, QSeries::one(m))
    }

    pub fn constant(vars: VarSet, c: QSeries) -> Self {
        let m = c.order();
        let mut p = Self::zero(vars, m);
        let e = vec![0; p.vars.dim()];
        p.add_term(e, c);
        p
    }

    /// Monomial `c * prod v_i^{e_i}` over flat exponents.
    pub fn monomial(vars: VarSet, exps: Vec<u32>, c: QSeries) -> Self {
        assert_eq!(exps.len(), vars.dim());
        let m = c.order();
        let mut p = Self::zero(vars, m);
        p.add_term(exps, c);
        p
    }

    /// The variable with the given flat index.
    pub fn var(vars: VarSet, flat: usize, m: u32) -> Self {
        let mut e = vec![0; vars.dim()];
        e[flat] = 1;
        Self::monomial(vars, e, QSeries::one(m))
    }

    fn add_term(&mut self, exps: Vec<u32>, c: QSeries) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
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

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn cyc_order(&self) -> u32 {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u32>, &QSeries)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> QSeries {
        self.terms
            .get(exps)
            .cloned()
            .unwrap_or_else(|| QSeries::zero(self.m))
    }

    /// Minimum precision over all stored coefficients.
    pub fn min_prec(&self) -> Prec {
        self.terms
            .values()
            .fold(Prec::Exact, |p, c| p.min(c.precision()))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    fn check_compat(&self, other: &Self) {
        assert_eq!(self.vars, other.vars, "variable set mismatch");
        assert_eq!(self.m, other.m, "cyclotomic order mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_compat(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            m: self.m,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Difference together with the minimum coefficient precision that
    /// entered the comparison, for honest equality-to-precision reporting.
    pub fn sub_report(&self, other: &Self) -> (Self, Prec) {
        let d = self.sub(other);
        let p = self.min_prec().min(other.min_prec()).min(d.min_prec());
        (d, p)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_compat(other);
        let mut out = Self::zero(self.vars.clone(), self.m);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &QSeries) -> Self {
        let mut out = Self::zero(self.vars.clone(), self.m);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x.mul(c));
        }
        out
    }

    pub fn scale_cyc(&self, c: &CycNum) -> Self {
        let mut out = Self::zero(self.vars.clone(), self.m);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x.scale(c));
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.vars.clone(), self.m);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Formal partial derivative with respect to the flat variable.
    pub fn partial(&self, flat: usize) -> Self {
        let mut out = Self::zero(self.vars.clone(), self.m);
        for (e, c) in &self.terms {
            let k = e[flat];
            if k == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[flat] = k - 1;
            out.add_term(e2, c.scale(&CycNum::from_int(self.m, k as i64)));
        }
        out
    }

    /// Reinterpret over the same base names with more copies (the new
    /// variables do not occur).
    pub fn extend_copies(&self, copies: u8) -> Self {
        assert!(copies >= self.vars.copies);
        if copies == self.vars.copies {
            return self.clone();
        }
        let vars = self.vars.with_copies(copies);
        let pad = vars.dim() - self.vars.dim();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e2 = e.clone();
                e2.extend(std::iter::repeat(0).take(pad));
                (e2, c.clone())
            })
            .collect();
        MultiPoly { vars, m: self.m, terms }
    }

    /// Drop trailing copies whose variables do not occur.
    pub fn shrink_copies(&self, copies: u8) -> Self {
        assert!(copies <= self.vars.copies);
        if copies == self.vars.copies {
            return self.clone();
        }
        let vars = self.vars.with_copies(copies);
        let keep = vars.dim();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                assert!(e[keep..].iter().all(|&k| k == 0), "variable in dropped copy");
                (e[..keep].to_vec(), c.clone())
            })
            .collect();
        MultiPoly { vars, m: self.m, terms }
    }

    /// Apply a per-variable substitution map (flat index -> target);
    /// unmapped variables stay put.
    pub fn substitute(&self, map: &BTreeMap<usize, Subst>) -> Self {
        let mut out = Self::zero(self.vars.clone(), self.m);
        'term: for (e, c) in &self.terms {
            let mut e2 = vec![0u32; e.len()];
            let mut factor = CycNum::one(self.m);
            for (v, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                match map.get(&v) {
                    None => e2[v] += k,
                    Some(Subst::Zero) => continue 'term,
                    Some(Subst::Scaled(s, target)) => {
                        e2[*target] += k;
                        factor = factor.mul(&s.pow(k as i64).expect("substitution scalar"));
                    }
                }
            }
            out.add_term(e2, c.scale(&factor));
        }
        out
    }

    /// Substitute every variable of `from_copy` by `scale_i * (same base
    /// variable in to_copy)`; `scale = None` means coefficient 1.
    pub fn subst_copy(&self, from_copy: u8, to_copy: u8, scale: Option<&GroupElement>) -> Self {
        let mut map = BTreeMap::new();
        for i in 0..self.vars.n() {
            let s = match scale {
                None => CycNum::one(self.m),
                Some(g) => g.entries()[i].clone(),
            };
            map.insert(
                self.vars.flat(from_copy, i),
                Subst::Scaled(s, self.vars.flat(to_copy, i)),
            );
        }
        self.substitute(&map)
    }

    /// Set the listed base variables to zero in the given copy.
    pub fn kill_vars(&self, copy: u8, base_indices: &[usize]) -> Self {
        let map: BTreeMap<usize, Subst> = base_indices
            .iter()
            .map(|&i| (self.vars.flat(copy, i), Subst::Zero))
            .collect();
        self.substitute(&map)
    }

    /// Diagonal group action on every copy: each monomial is scaled by
    /// `prod_i g_i^(total exponent of base i)`. A ring automorphism.
    pub fn act(&self, g: &GroupElement) -> Self {
        assert_eq!(g.len(), self.vars.n(), "group arity mismatch");
        let mut out = Self::zero(self.vars.clone(), self.m);
        for (e, c) in &self.terms {
            let mut s = CycNum::one(self.m);
            for (v, &k) in e.iter().enumerate() {
                if k > 0 {
                    s = s.mul(&g.entries()[self.vars.base_of(v)].pow(k as i64).unwrap());
                }
            }
            out.add_term(e.clone(), c.scale(&s));
        }
        out
    }

    /// Group action on a single copy only (for differentials like `d(h x, y)`).
    pub fn act_on_copy(&self, g: &GroupElement, copy: u8) -> Self {
        assert_eq!(g.len(), self.vars.n(), "group arity mismatch");
        let mut out = Self::zero(self.vars.clone(), self.m);
        for (e, c) in &self.terms {
            let mut s = CycNum::one(self.m);
            for (v, &k) in e.iter().enumerate() {
                if k > 0 && self.vars.copy_of(v) == copy {
                    s = s.mul(&g.entries()[self.vars.base_of(v)].pow(k as i64).unwrap());
                }
            }
            out.add_term(e.clone(), c.scale(&s));
        }
        out
    }

    pub fn is_invariant(&self, g: &GroupElement) -> bool {
        self.act(g).sub(self).is_zero()
    }

    /// Difference quotient in slot `j` (0-based) from `src_copy` to
    /// `dst_copy`:
    /// `[f(.., src_{j-1}, dst_j, ..) - f(.., src_j, dst_{j+1}, ..)] / (dst_j - src_j)`.
    ///
    /// The polynomial must already live over a varset containing `dst_copy`.
    /// Divisibility is guaranteed by construction; a nonzero remainder is an
    /// internal bug and aborts.
    pub fn diff_quotient(&self, j: usize, src_copy: u8, dst_copy: u8) -> Self {
        let n = self.vars.n();
        assert!(j < n);
        assert!(dst_copy < self.vars.copies && src_copy < dst_copy);
        let sub_from = |start: usize| -> Self {
            let mut map = BTreeMap::new();
            for i in start..n {
                map.insert(
                    self.vars.flat(src_copy, i),
                    Subst::Scaled(CycNum::one(self.m), self.vars.flat(dst_copy, i)),
                );
            }
            self.substitute(&map)
        };
        let numerator = sub_from(j).sub(&sub_from(j + 1));
        let src = Self::var(self.vars.clone(), self.vars.flat(src_copy, j), self.m);
        let dst = Self::var(self.vars.clone(), self.vars.flat(dst_copy, j), self.m);
        numerator
            .div_exact(&dst.sub(&src))
            .expect("difference-quotient numerator must be divisible")
    }

    /// Exact polynomial division by a single divisor under grevlex;
    /// `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        self.check_compat(divisor);
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let (lt_e, lt_c) = leading_term(divisor, MonomialOrder::GrevLex)?;
        let lt_c_inv = lt_c.invert().ok()?;
        let mut rem = self.clone();
        let mut quot = Self::zero(self.vars.clone(), self.m);
        while let Some((e, c)) = leading_term(&rem, MonomialOrder::GrevLex) {
            if !divides(&lt_e, &e) {
                return None;
            }
            let qe: Vec<u32> = e.iter().zip(&lt_e).map(|(a, b)| a - b).collect();
            let qc = c.mul(&lt_c_inv);
            let qt = Self::monomial(self.vars.clone(), qe, qc);
            rem = rem.sub(&qt.mul(divisor));
            quot = quot.add(&qt);
        }
        Some(quot)
    }
}

/// Monomial orders used by the Groebner machinery.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MonomialOrder {
    GrevLex,
    Lex,
}

impl MonomialOrder {
    /// `Greater` when `a` is the larger monomial.
    pub fn cmp(self, a: &[u32], b: &[u32]) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrevLex => {
                let da: u64 = a.iter().map(|&x| x as u64).sum();
                let db: u64 = b.iter().map(|&x| x as u64).sum();
                match da.cmp(&db) {
                    Ordering::Equal => {
                        for i in (0..a.len()).rev() {
                            match a[i].cmp(&b[i]) {
                                Ordering::Equal => continue,
                                // smaller last exponent = larger monomial
                                Ordering::Less => return Ordering::Greater,
                                Ordering::Greater => return Ordering::Less,
                            }
                        }
                        Ordering::Equal
                    }
                    other => other,
                }
            }
        }
    }
}

pub fn divides(d: &[u32], e: &[u32]) -> bool {
    d.iter().zip(e).all(|(a, b)| a <= b)
}

/// Leading term of a polynomial in the given order.
pub fn leading_term(p: &MultiPoly, order: MonomialOrder) -> Option<(Vec<u32>, QSeries)> {
    p.iter()
        .max_by(|(e1, _), (e2, _)| order.cmp(e1, e2))
        .map(|(e, c)| (e.clone(), c.clone()))
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (v, &k) in e.iter().enumerate() {
                if k == 1 {
                    write!(f, "*{}", self.vars.display_name(v))?;
                } else if k > 1 {
                    write!(f, "*{}^{}", self.vars.display_name(v), k)?;
                }
            }
        }
        Ok(())
    }
}

/// A diagonal symmetry: a tuple of roots of unity acting coordinatewise.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupElement {
    entries: Vec<CycNum>,
}

impl GroupElement {
    pub fn new(entries: Vec<CycNum>) -> Result<Self, PolyError> {
        for e in &entries {
            if e.root_of_unity_order().is_none() {
                return Err(PolyError::NotRootOfUnity);
            }
        }
        Ok(GroupElement { entries })
    }

    pub fn identity(m: u32, n: usize) -> Self {
        GroupElement { entries: vec![CycNum::one(m); n] }
    }

    /// Entries `zeta_m^{k_i}`.
    pub fn from_zeta_exponents(m: u32, ks: &[i64]) -> Self {
        GroupElement { entries: ks.iter().map(|&k| CycNum::zeta(m, k)).collect() }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[CycNum] {
        &self.entries
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len());
        GroupElement {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.mul(b))
                .collect(),
        }
    }

    pub fn inv(&self) -> Self {
        GroupElement { entries: self.entries.iter().map(|e| e.inv().unwrap()).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().all(|e| e.is_one())
    }

    /// Indices moved by the element (`I_h`).
    pub fn moved(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| !self.entries[i].is_one()).collect()
    }

    /// Indices fixed by the element (`I^h`).
    pub fn fixed(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.entries[i].is_one()).collect()
    }

    /// Codimension of the fixed subspace, `d_h = |I_h|`.
    pub fn d(&self) -> usize {
        self.moved().len()
    }

    /// Order of the element in the group.
    pub fn element_order(&self) -> u32 {
        self.entries
            .iter()
            .map(|e| e.root_of_unity_order().unwrap())
            .fold(1, num::integer::lcm)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// A finite diagonal abelian group given by generators, with its enumerated
/// closure. Element 0 is always the identity.
#[derive(Clone, Debug)]
pub struct DiagonalGroup {
    generators: Vec<GroupElement>,
    elements: Vec<GroupElement>,
}

impl DiagonalGroup {
    pub fn generate(
        m: u32,
        n: usize,
        generators: Vec<GroupElement>,
        bound: usize,
    ) -> Result<Self, PolyError> {
        for g in &generators {
            if g.len() != n {
                return Err(PolyError::ArityMismatch { got: g.len(), want: n });
            }
        }
        let mut elements = vec![GroupElement::identity(m, n)];
        let mut frontier = vec![GroupElement::identity(m, n)];
        while let Some(e) = frontier.pop() {
            for g in &generators {
                let prod = e.mul(g);
                if !elements.contains(&prod) {
                    if elements.len() >= bound {
                        return Err(PolyError::ClosureBound { bound });
                    }
                    elements.push(prod.clone());
                    frontier.push(prod);
                }
            }
        }
        Ok(DiagonalGroup { generators, elements })
    }

    pub fn trivial(m: u32, n: usize) -> Self {
        DiagonalGroup { generators: vec![], elements: vec![GroupElement::identity(m, n)] }
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        self.elements.iter().position(|e| e == g)
    }

    /// Exponent of the group: lcm of all element orders.
    pub fn exponent(&self) -> u32 {
        self.elements
            .iter()
            .map(|e| e.element_order())
            .fold(1, num::integer::lcm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p_var(vars: &VarSet, flat: usize) -> MultiPoly {
        MultiPoly::var(vars.clone(), flat, 12)
    }

    #[test]
    fn diff_quotient_of_cube() {
        // x^3 over (x, y): quotient is y^2 + x y + x^2
        let vars = VarSet::anon(1, 2);
        let x = p_var(&vars, 0);
        let y = p_var(&vars, 1);
        let q = x.pow(3).diff_quotient(0, 0, 1);
        let want = y.pow(2).add(&x.mul(&y)).add(&x.pow(2));
        assert!(q.sub(&want).is_zero());
    }

    #[test]
    fn diff_quotient_no_dependence() {
        // p = x2, quotient in slot 1 vanishes
        let vars = VarSet::anon(2, 2);
        let p = p_var(&vars, 1);
        assert!(p.diff_quotient(0, 0, 1).is_zero());
    }

    #[test]
    fn telescoping_identity() {
        // sum_j diff_quotient(W, j) * (y_j - x_j) = W(y) - W(x)
        let vars = VarSet::anon(3, 2);
        let x: Vec<_> = (0..3).map(|i| p_var(&vars, i)).collect();
        let w = x[0]
            .pow(3)
            .add(&x[1].pow(2).mul(&x[2]))
            .add(&x[0].mul(&x[1]).mul(&x[2]));
        let mut lhs = MultiPoly::zero(vars.clone(), 12);
        for j in 0..3 {
            let quot = w.diff_quotient(j, 0, 1);
            let yj = p_var(&vars, vars.flat(1, j));
            let xj = p_var(&vars, vars.flat(0, j));
            lhs = lhs.add(&quot.mul(&yj.sub(&xj)));
        }
        let w_y = w.subst_copy(0, 1, None);
        assert!(lhs.sub(&w_y.sub(&w)).is_zero());
    }

    #[test]
    fn restriction_of_quotient_is_partial() {
        // diff_quotient then y := x equals the partial derivative
        let vars = VarSet::anon(2, 2);
        let x0 = p_var(&vars, 0);
        let x1 = p_var(&vars, 1);
        let p = x0.pow(4).mul(&x1).add(&x1.pow(3));
        for j in 0..2 {
            let q = p.diff_quotient(j, 0, 1).subst_copy(1, 0, None);
            assert!(q.sub(&p.partial(j)).is_zero());
        }
    }

    #[test]
    fn chi_action_on_cubics() {
        let m = 12;
        let vars = VarSet::anon(3, 1);
        let chi = GroupElement::from_zeta_exponents(m, &[4, 4, 4]);
        let x: Vec<_> = (0..3).map(|i| p_var(&vars, i)).collect();
        let xyz = x[0].mul(&x[1]).mul(&x[2]);
        assert!(xyz.act(&chi).sub(&xyz).is_zero());
        let sq = x[0].pow(2);
        let scaled = sq.scale_cyc(&CycNum::zeta(m, 8));
        assert!(sq.act(&chi).sub(&scaled).is_zero());
        let ferm = x[0].pow(3).add(&x[1].pow(3)).add(&x[2].pow(3));
        assert!(ferm.is_invariant(&chi));
    }

    #[test]
    fn substitution_examples() {
        let m = 12;
        let vars = VarSet::anon(2, 2);
        let x1 = p_var(&vars, 0);
        let y1 = p_var(&vars, vars.flat(1, 0));
        let chi = GroupElement::from_zeta_exponents(m, &[4, 4]);
        // y := chi x applied to y1 - x1 gives (zeta3 - 1) x1
        let p = y1.sub(&x1).subst_copy(1, 0, Some(&chi));
        let want = x1.scale_cyc(&CycNum::zeta(m, 4).sub(&CycNum::one(m)));
        assert!(p.sub(&want).is_zero());
        // x^g with g = chi kills every moved coordinate
        let q = x1.mul(&p_var(&vars, 1));
        assert!(q.kill_vars(0, &chi.moved()).is_zero());
    }

    #[test]
    fn partial_derivative_commutes() {
        let vars = VarSet::anon(3, 1);
        let x: Vec<_> = (0..3).map(|i| p_var(&vars, i)).collect();
        let p = x[0].pow(2).mul(&x[1]).add(&x[1].mul(&x[2]).pow(2));
        let a = p.partial(0).partial(1);
        let b = p.partial(1).partial(0);
        assert!(a.sub(&b).is_zero());
        assert!(p_var(&vars, 1).pow(3).partial(0).is_zero());
    }

    #[test]
    fn group_closure_z3() {
        let m = 12;
        let chi = GroupElement::from_zeta_exponents(m, &[4, 4, 4]);
        let grp = DiagonalGroup::generate(m, 3, vec![chi.clone()], 64).unwrap();
        assert_eq!(grp.order(), 3);
        assert_eq!(grp.exponent(), 3);
        assert_eq!(chi.d(), 3);
        assert_eq!(chi.moved(), vec![0, 1, 2]);
        assert!(grp.elements()[0].is_identity());
        // action is a homomorphism
        let vars = VarSet::anon(3, 1);
        let p = p_var(&vars, 0).pow(2).mul(&p_var(&vars, 2));
        for g in grp.elements() {
            for h in grp.elements() {
                let a = p.act(h).act(g);
                let b = p.act(&g.mul(h));
                assert!(a.sub(&b).is_zero());
            }
        }
    }

    #[test]
    fn grevlex_order_examples() {
        let ord = MonomialOrder::GrevLex;
        assert_eq!(ord.cmp(&[2, 0, 0], &[1, 0, 0]), std::cmp::Ordering::Greater);
        assert_eq!(ord.cmp(&[2, 0, 0], &[0, 1, 1]), std::cmp::Ordering::Greater);
        assert_eq!(ord.cmp(&[0, 0, 2], &[1, 1, 0]), std::cmp::Ordering::Less);
    }

    #[test]
    fn exact_division_detects_failure() {
        let vars = VarSet::anon(2, 1);
        let x = p_var(&vars, 0);
        let y = p_var(&vars, 1);
        let q = x.pow(2).sub(&y.pow(2)).div_exact(&x.sub(&y)).unwrap();
        assert!(q.sub(&x.add(&y)).is_zero());
        let one = MultiPoly::one(vars.clone(), 12);
        assert!(x.pow(2).add(&one).div_exact(&x.sub(&y)).is_none());
    }
}
