//! Sparse multivariate polynomials over the rationals in canonical form.
//!
//! A polynomial is a map from monomials to nonzero rational coefficients;
//! monomials are exponent maps ordered graded-lexicographically (total
//! degree first, then variable names ascending with the earlier name
//! dominating). Two polynomials are equal exactly when their
//! representations are equal.

mod gcd;

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::values::fmt_rational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("unbound variable `{0}` in evaluation point")]
    UnboundVar(String),
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
}

/// A power product such as `x^2*y`. The exponent map stores only
/// positive exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(BTreeMap<String, u32>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(name: &str) -> Monomial {
        let mut m = BTreeMap::new();
        m.insert(name.to_string(), 1);
        Monomial(m)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn exponent(&self, var: &str) -> u32 {
        self.0.get(var).copied().unwrap_or(0)
    }

    /// Iterates `(variable, exponent)` pairs in name order.
    pub fn iter(&self) -> impl Iterator<Item = (&String, &u32)> {
        self.0.iter()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.0.clone();
        for (v, e) in &other.0 {
            *out.entry(v.clone()).or_insert(0) += e;
        }
        Monomial(out)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().all(|(v, e)| other.exponent(v) >= *e)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn div_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let mut out = other.0.clone();
        for (v, e) in &self.0 {
            let cur = out.get_mut(v).expect("divisibility checked");
            *cur -= e;
            if *cur == 0 {
                out.remove(v);
            }
        }
        Monomial(out)
    }

    fn without(&self, var: &str) -> Monomial {
        let mut out = self.0.clone();
        out.remove(var);
        Monomial(out)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // Lexicographic tie-break: on the first differing variable name,
        // the monomial with the higher exponent is the larger one.
        let mut names: Vec<&String> = self.0.keys().chain(other.0.keys()).collect();
        names.sort();
        names.dedup();
        for name in names {
            match self.exponent(name).cmp(&other.exponent(name)) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (v, e) in &self.0 {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{}", v)?;
            } else {
                write!(f, "{}^{}", v, e)?;
            }
        }
        Ok(())
    }
}

/// An exact multivariate polynomial with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl MultiPoly {
    pub fn zero() -> MultiPoly {
        MultiPoly::default()
    }

    pub fn one() -> MultiPoly {
        MultiPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> MultiPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        MultiPoly { terms }
    }

    pub fn from_int(n: i64) -> MultiPoly {
        MultiPoly::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn var(name: &str) -> MultiPoly {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(name), BigRational::one());
        MultiPoly { terms }
    }

    pub fn monomial(m: Monomial, c: BigRational) -> MultiPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(Monomial::is_one)
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            Some(BigRational::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    /// Leading term under the graded-lexicographic order.
    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn vars(&self) -> BTreeSet<String> {
        self.terms
            .keys()
            .flat_map(|m| m.0.keys().cloned())
            .collect()
    }

    pub fn degree_in(&self, var: &str) -> u32 {
        self.terms.keys().map(|m| m.exponent(var)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    fn insert_term(terms: &mut BTreeMap<Monomial, BigRational>, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            Self::insert_term(&mut terms, m.clone(), c.clone());
        }
        MultiPoly { terms }
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                Self::insert_term(&mut terms, ma.mul(mb), ca * cb);
            }
        }
        MultiPoly { terms }
    }

    pub fn mul_scalar(&self, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact evaluation; the point must bind every variable.
    pub fn eval(&self, point: &BTreeMap<String, BigRational>) -> Result<BigRational, PolyError> {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, e) in &m.0 {
                let val = point.get(v).ok_or_else(|| PolyError::UnboundVar(v.clone()))?;
                term *= rat_pow(val, *e);
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Partial evaluation of a single variable.
    pub fn substitute(&self, var: &str, value: &BigRational) -> MultiPoly {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            let coeff = if e == 0 { c.clone() } else { c * rat_pow(value, e) };
            Self::insert_term(&mut terms, m.without(var), coeff);
        }
        MultiPoly { terms }
    }

    /// Formal partial derivative.
    pub fn derivative(&self, var: &str) -> MultiPoly {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            if e == 0 {
                continue;
            }
            let mut reduced = m.0.clone();
            if e == 1 {
                reduced.remove(var);
            } else {
                reduced.insert(var.to_string(), e - 1);
            }
            Self::insert_term(
                &mut terms,
                Monomial(reduced),
                c * BigRational::from_integer(BigInt::from(e)),
            );
        }
        MultiPoly { terms }
    }

    /// The positive rational `c` with `self = c * p` for `p` an
    /// integer-coefficient polynomial of content 1.
    fn rational_content(&self) -> BigRational {
        debug_assert!(!self.is_zero());
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        BigRational::new(num_gcd, den_lcm)
    }

    /// Scales to integer coefficients of content 1 with a positive
    /// leading coefficient, returning `(p, c)` with `self = c * p`.
    pub fn primitive_positive_with_scale(&self) -> Result<(MultiPoly, BigRational), PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut scale = self.rational_content();
        let mut p = self.mul_scalar(&scale.recip());
        if p.leading().expect("nonzero").1.is_negative() {
            p = p.neg();
            scale = -scale;
        }
        Ok((p, scale))
    }

    /// Primitive-positive normal form: integer coefficients of content 1,
    /// positive leading coefficient.
    pub fn primitive_positive(&self) -> Result<MultiPoly, PolyError> {
        Ok(self.primitive_positive_with_scale()?.0)
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        let (dm, dc) = {
            let (m, c) = divisor.leading().expect("nonzero");
            (m.clone(), c.clone())
        };
        while !rem.is_zero() {
            let (rm, rc) = rem.leading().expect("nonzero");
            if !dm.divides(rm) {
                return None;
            }
            let t = MultiPoly::monomial(dm.div_into(rm), rc / &dc);
            quot = quot.add(&t);
            rem = rem.sub(&t.mul(divisor));
        }
        Some(quot)
    }

    /// Greatest common divisor in primitive-positive normal form;
    /// `gcd(0, b)` is the normalization of `b`, and any nonzero constant
    /// argument gives 1.
    pub fn gcd(&self, other: &MultiPoly) -> MultiPoly {
        gcd::gcd(self, other)
    }

    /// Squarefree part: `self / gcd(self, all partial derivatives)`,
    /// primitive-positive normalized. Nonzero constants map to 1.
    pub fn radical(&self) -> Result<MultiPoly, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        if self.is_constant() {
            return Ok(MultiPoly::one());
        }
        let mut g = self.clone();
        for v in self.vars() {
            g = g.gcd(&self.derivative(&v));
        }
        let rad = self
            .div_exact(&g)
            .expect("gcd with derivatives divides the polynomial");
        rad.primitive_positive()
    }
}

pub(crate) fn rat_pow(base: &BigRational, exp: u32) -> BigRational {
    let mut acc = BigRational::one();
    let mut base = base.clone();
    let mut exp = exp;
    while exp > 0 {
        if exp & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                fmt_rational(&mag, f)?;
            } else if mag.is_one() {
                write!(f, "{}", m)?;
            } else {
                fmt_rational(&mag, f)?;
                write!(f, "*{}", m)?;
            }
        }
        Ok(())
    }
}
