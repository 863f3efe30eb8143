//! Integer fraction pairs under the congruence
//! `(x*z)/(y*(z*z)) = x/(y*z)`.
//!
//! A pair `p/q` keeps numerator and denominator separate; `q = 0` is
//! allowed and all such pairs collapse into one class, the absorbing
//! value. Unlike ordinary fractions, common factors do NOT cancel:
//! `2/2` and `1/1` are distinct elements. The canonical representative
//! removes a prime `l` only while `l` divides `p` and `l*l` divides `q`,
//! and fixes the sign so `q > 0`.
//!
//! Mapping each pair to the rational `p/q` (and the `q = 0` class to the
//! absorbing value) is a homomorphism onto the totalized rationals.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::values::QBot;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FracpairError {
    /// Canonicalization factors the denominator by trial division and is
    /// capped at 2^63.
    #[error("denominator {0} exceeds the canonicalization cap of 2^63")]
    DenominatorTooLarge(BigInt),
}

/// A canonical fraction pair over the integers, or the class of all
/// pairs with zero denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Fracpair {
    Bot,
    Pair { num: BigInt, den: BigInt },
}

impl Fracpair {
    pub fn from_int(n: i64) -> Fracpair {
        Fracpair::Pair { num: BigInt::from(n), den: BigInt::from(1) }
    }

    pub fn bot() -> Fracpair {
        Fracpair::Bot
    }

    pub fn is_bot(&self) -> bool {
        matches!(self, Fracpair::Bot)
    }

    /// Numerator and denominator of the canonical representative; the
    /// absorbing class is represented by `1/0`.
    pub fn parts(&self) -> (BigInt, BigInt) {
        match self {
            Fracpair::Bot => (BigInt::from(1), BigInt::zero()),
            Fracpair::Pair { num, den } => (num.clone(), den.clone()),
        }
    }

    /// Canonical form of an arbitrary pair: zero denominators collapse to
    /// the absorbing class; otherwise the sign moves to the numerator and
    /// every prime `l` with `l | p` and `l*l | q` is divided out.
    pub fn canon(p: BigInt, q: BigInt) -> Result<Fracpair, FracpairError> {
        if q.is_zero() {
            return Ok(Fracpair::Bot);
        }
        let (mut p, mut q) = if q.is_negative() { (-p, -q) } else { (p, q) };
        let q_small = q
            .to_u64()
            .filter(|v| *v <= i64::MAX as u64)
            .ok_or_else(|| FracpairError::DenominatorTooLarge(q.clone()))?;
        for (prime, q_mult) in squareful_primes(q_small) {
            debug_assert!(q_mult >= 2);
            let l = BigInt::from(prime);
            let p_mult = if p.is_zero() { u32::MAX } else { multiplicity(&p, &l) };
            let steps = p_mult.min(q_mult - 1);
            if steps > 0 {
                let divisor = l.pow(steps);
                p /= &divisor;
                q /= &divisor;
            }
        }
        Ok(Fracpair::Pair { num: p, den: q })
    }

    pub fn canon_i64(p: i64, q: i64) -> Fracpair {
        Fracpair::canon(BigInt::from(p), BigInt::from(q)).expect("i64 denominator is under the cap")
    }

    /// `(p/q) + (r/s) = (p*s + r*q)/(q*s)`.
    pub fn add(&self, other: &Fracpair) -> Result<Fracpair, FracpairError> {
        let (p, q) = self.parts();
        let (r, s) = other.parts();
        Fracpair::canon(&p * &s + &r * &q, q * s)
    }

    /// `(p/q) * (r/s) = (p*r)/(q*s)`.
    pub fn mul(&self, other: &Fracpair) -> Result<Fracpair, FracpairError> {
        let (p, q) = self.parts();
        let (r, s) = other.parts();
        Fracpair::canon(p * r, q * s)
    }

    /// `-(p/q) = (-p)/q`; keeps the form canonical.
    pub fn neg(&self) -> Fracpair {
        match self {
            Fracpair::Bot => Fracpair::Bot,
            Fracpair::Pair { num, den } => Fracpair::Pair { num: -num, den: den.clone() },
        }
    }

    /// `(p/q)^-1 = (q*q)/(p*q)`; inverts `0/1` into the absorbing class.
    pub fn inv(&self) -> Result<Fracpair, FracpairError> {
        let (p, q) = self.parts();
        Fracpair::canon(&q * &q, p * q)
    }

    /// The homomorphism onto the totalized rationals: `p/q` reduces to
    /// lowest terms, the absorbing class maps to the absorbing value.
    pub fn to_qbot(&self) -> QBot {
        match self {
            Fracpair::Bot => QBot::Bot,
            Fracpair::Pair { num, den } => QBot::Rat(BigRational::new(num.clone(), den.clone())),
        }
    }
}

impl fmt::Display for Fracpair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fracpair::Bot => write!(f, "_|_"),
            Fracpair::Pair { num, den } => write!(f, "{}/{}", num, den),
        }
    }
}

fn multiplicity(n: &BigInt, l: &BigInt) -> u32 {
    let mut n = n.abs();
    let mut count = 0;
    loop {
        let (div, rem) = n.div_rem(l);
        if !rem.is_zero() {
            return count;
        }
        count += 1;
        n = div;
    }
}

/// The primes dividing `q` at least twice, with their full multiplicity
/// in `q`. Trial division runs to the cube root; the remaining cofactor
/// has at most two prime factors, so only a perfect square can still
/// contribute.
fn squareful_primes(q: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut rest = q;
    let mut record = |l: u64, rest: &mut u64| {
        let mut mult = 0;
        while *rest % l == 0 {
            *rest /= l;
            mult += 1;
        }
        if mult >= 2 {
            out.push((l, mult));
        }
    };
    record(2, &mut rest);
    let mut l: u64 = 3;
    while l.saturating_mul(l).saturating_mul(l) <= rest {
        record(l, &mut rest);
        l += 2;
    }
    if rest > 1 {
        let root = rest.isqrt();
        if root * root == rest {
            out.push((root, 2));
        }
    }
    out
}
