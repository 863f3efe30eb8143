//! Decides whether two terms are equal in every cancellation model of
//! characteristic zero.
//!
//! Both terms are brought to fraction normal form. Terms that collapse
//! to the absorbing value are equal exactly to each other; otherwise
//! `n_t/d_t` equals `n_r/d_r` precisely when
//!
//! * the supports coincide (`p2`) — otherwise assigning the absorbing
//!   value to a variable on one side only distinguishes them;
//! * the denominators have the same zero sets (`p1`), checked as
//!   equality of primitive-positive squarefree parts; and
//! * cross-multiplication agrees (`p3`): `n_t * d_r = n_r * d_t` as
//!   polynomials.
//!
//! Failed verdicts carry, where possible, a concrete distinguishing
//! assignment over the totalized rationals. Support and bottom
//! mismatches always admit one; `p1`/`p3` witnesses come from a rational
//! grid search and may be absent (the denominators may only separate at
//! irrational points).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::normal::{to_fraction, Fnf};
use crate::poly::MultiPoly;
use crate::terms::{eval, Assignment, Term};
use crate::values::{Model, QBot, Value};

/// Default sample budget for the rational witness search.
pub const DEFAULT_WITNESS_BUDGET: usize = 2000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reason {
    /// Exactly one side collapses to the absorbing value.
    BottomMismatch,
    /// Denominator zero sets differ.
    P1,
    /// Variable supports differ.
    P2,
    /// Cross-multiplication differs.
    P3,
}

impl Reason {
    pub fn as_str(&self) -> &'static str {
        match self {
            Reason::BottomMismatch => "bottom-mismatch",
            Reason::P1 => "p1",
            Reason::P2 => "p2",
            Reason::P3 => "p3",
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    NotEqual {
        reason: Reason,
        /// A distinguishing assignment over the totalized rationals,
        /// verified by evaluation before being reported.
        counterexample: Option<Assignment>,
        /// The differing polynomial pair behind a `p1` or `p3` verdict.
        details: Option<(MultiPoly, MultiPoly)>,
    },
}

impl Verdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, Verdict::Equal)
    }
}

/// Decides equality in all cancellation models of characteristic zero,
/// spending the default budget on witness search.
pub fn equal_ccm0(t: &Term, r: &Term) -> Verdict {
    equal_ccm0_with_budget(t, r, DEFAULT_WITNESS_BUDGET)
}

pub fn equal_ccm0_with_budget(t: &Term, r: &Term, budget: usize) -> Verdict {
    let ft = to_fraction(t);
    let fr = to_fraction(r);
    match (&ft, &fr) {
        (Fnf::Bottom, Fnf::Bottom) => Verdict::Equal,
        (Fnf::Bottom, Fnf::Frac { den, .. }) | (Fnf::Frac { den, .. }, Fnf::Bottom) => {
            Verdict::NotEqual {
                reason: Reason::BottomMismatch,
                counterexample: verified(t, r, bottom_witness(t, r, den)),
                details: None,
            }
        }
        (
            Fnf::Frac { num: nt, den: dt, support: st },
            Fnf::Frac { num: nr, den: dr, support: sr },
        ) => {
            if st != sr {
                return Verdict::NotEqual {
                    reason: Reason::P2,
                    counterexample: verified(t, r, support_witness(t, r, &ft, &fr)),
                    details: None,
                };
            }
            let rad_t = dt.radical().expect("denominators are nonzero");
            let rad_r = dr.radical().expect("denominators are nonzero");
            if rad_t != rad_r {
                return Verdict::NotEqual {
                    reason: Reason::P1,
                    counterexample: grid_search(t, r, budget),
                    details: Some((rad_t, rad_r)),
                };
            }
            let cross_t = nt.mul(dr);
            let cross_r = nr.mul(dt);
            if cross_t != cross_r {
                return Verdict::NotEqual {
                    reason: Reason::P3,
                    counterexample: grid_search(t, r, budget),
                    details: Some((cross_t, cross_r)),
                };
            }
            Verdict::Equal
        }
    }
}

/// Best-effort search for an assignment over the totalized rationals on
/// which the two terms evaluate differently.
pub fn counterexample_search(t: &Term, r: &Term, budget: usize) -> Option<Assignment> {
    match equal_ccm0_with_budget(t, r, budget) {
        Verdict::Equal => None,
        Verdict::NotEqual { counterexample, .. } => counterexample,
    }
}

fn distinguishes(t: &Term, r: &Term, asg: &Assignment) -> bool {
    let m = Model::QBot;
    match (eval(t, asg, &m), eval(r, asg, &m)) {
        (Ok(a), Ok(b)) => a != b,
        _ => false,
    }
}

fn verified(t: &Term, r: &Term, asg: Assignment) -> Option<Assignment> {
    distinguishes(t, r, &asg).then_some(asg)
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A rational point where the polynomial does not vanish, found by
/// substituting one variable at a time. At most `deg + 1` candidate
/// values per variable can kill the whole polynomial, so the sweep
/// always succeeds.
fn nonvanishing_point(d: &MultiPoly) -> BTreeMap<String, BigRational> {
    let mut point = BTreeMap::new();
    let mut cur = d.clone();
    while let Some(v) = cur.vars().into_iter().next() {
        let deg = cur.degree_in(&v);
        for a in 0..=i64::from(deg) {
            let sub = cur.substitute(&v, &rat(a));
            if !sub.is_zero() {
                point.insert(v.clone(), rat(a));
                cur = sub;
                break;
            }
        }
    }
    debug_assert!(!cur.is_zero());
    point
}

/// Witness for a bottom mismatch: keep the surviving side's denominator
/// away from zero and assign plain rationals everywhere else; the
/// collapsed side is the absorbing value under every assignment.
fn bottom_witness(t: &Term, r: &Term, surviving_den: &MultiPoly) -> Assignment {
    let mut asg: Assignment = nonvanishing_point(surviving_den)
        .into_iter()
        .map(|(v, q)| (v, Value::Q(QBot::Rat(q))))
        .collect();
    for v in t.vars().union(&r.vars()) {
        asg.entry(v.clone()).or_insert_with(|| Value::Q(QBot::from_int(1)));
    }
    asg
}

/// Witness for a support mismatch: a variable private to one side gets
/// the absorbing value, while the other side is kept denominator-safe.
fn support_witness(t: &Term, r: &Term, ft: &Fnf, fr: &Fnf) -> Assignment {
    let (st, sr) = (ft.support().expect("frac"), fr.support().expect("frac"));
    let (bot_var, other) = match st.difference(sr).next() {
        Some(v) => (v.clone(), fr),
        None => (
            sr.difference(st).next().expect("supports differ").clone(),
            ft,
        ),
    };
    let other_den = match other {
        Fnf::Frac { den, .. } => den,
        Fnf::Bottom => unreachable!("both sides are fractions here"),
    };
    let mut asg: Assignment = nonvanishing_point(other_den)
        .into_iter()
        .map(|(v, q)| (v, Value::Q(QBot::Rat(q))))
        .collect();
    for v in t.vars().union(&r.vars()) {
        asg.entry(v.clone()).or_insert_with(|| Value::Q(QBot::from_int(1)));
    }
    asg.insert(bot_var, Value::Q(QBot::Bot));
    asg
}

/// Grid candidates ordered by complexity: integers by magnitude, then
/// fractions by denominator. Numerators and denominators stay within
/// [-12, 12], which covers every zero `b/a` of small linear factors.
fn grid_values() -> Vec<BigRational> {
    let mut out = vec![rat(0)];
    for n in 1..=12i64 {
        out.push(rat(n));
        out.push(rat(-n));
    }
    for d in 2..=12i64 {
        for n in 1..=12i64 {
            if num_integer::Integer::gcd(&n, &d) == 1 {
                out.push(BigRational::new(BigInt::from(n), BigInt::from(d)));
                out.push(BigRational::new(BigInt::from(-n), BigInt::from(d)));
            }
        }
    }
    out
}

/// Tries grid assignments in rings of increasing complexity until the
/// budget runs out.
fn grid_search(t: &Term, r: &Term, budget: usize) -> Option<Assignment> {
    let vars: Vec<String> = t.vars().union(&r.vars()).cloned().collect();
    if vars.is_empty() {
        let empty = Assignment::new();
        return (budget > 0 && distinguishes(t, r, &empty)).then_some(empty);
    }
    let values = grid_values();
    let mut tried = 0usize;
    for radius in 0..values.len() {
        let mut idx = vec![0usize; vars.len()];
        'tuples: loop {
            if idx.iter().any(|i| *i == radius) {
                tried += 1;
                if tried > budget {
                    return None;
                }
                let asg: Assignment = vars
                    .iter()
                    .zip(&idx)
                    .map(|(v, i)| (v.clone(), Value::Q(QBot::Rat(values[*i].clone()))))
                    .collect();
                if distinguishes(t, r, &asg) {
                    return Some(asg);
                }
            }
            let mut pos = vars.len();
            loop {
                if pos == 0 {
                    break 'tuples;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] <= radius {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }
    None
}
