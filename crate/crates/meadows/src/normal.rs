//! Fraction normal form: every term rewrites to
//! `num * den^-1 + 0 * (v1 + ... + vk)` with `num`, `den` polynomials and
//! `{v1, .., vk}` the variables of the original term, or to the absorbing
//! value outright.
//!
//! The support set carries the variables whose values must stay
//! observable: `x + (-x)` normalizes to numerator 0 but still yields the
//! absorbing value when `x` does. Numerator and denominator are *not*
//! reduced by their polynomial gcd — `x^2 * x^-1` and `x + 0 * x^-1`
//! share the form `(x^2, x)`, which differs from `(x, 1)` at `x = 0`.
//! The denominator is primitive-positive normalized and the residual
//! rational scale folds into the numerator, so equal forms are
//! structurally equal.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::poly::MultiPoly;
use crate::terms::{Assignment, EvalError, Term, NUMERAL_MAX};
use crate::values::{Model, Value};

/// A term in fraction normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Fnf {
    /// The class of terms that denote the absorbing value everywhere.
    Bottom,
    Frac {
        num: MultiPoly,
        den: MultiPoly,
        support: BTreeSet<String>,
    },
}

impl Fnf {
    pub fn is_bottom(&self) -> bool {
        matches!(self, Fnf::Bottom)
    }

    fn normalize(num: MultiPoly, den: MultiPoly, support: BTreeSet<String>) -> Fnf {
        if den.is_zero() {
            return Fnf::Bottom;
        }
        let (den, scale) = den
            .primitive_positive_with_scale()
            .expect("nonzero denominator");
        let num = num.mul_scalar(&scale.recip());
        Fnf::Frac { num, den, support }
    }

    /// Fraction sum: `(n1*d2 + n2*d1) / (d1*d2)` over the united support.
    pub fn add(&self, other: &Fnf) -> Fnf {
        match (self, other) {
            (Fnf::Frac { num: n1, den: d1, support: s1 }, Fnf::Frac { num: n2, den: d2, support: s2 }) => {
                Fnf::normalize(
                    n1.mul(d2).add(&n2.mul(d1)),
                    d1.mul(d2),
                    s1.union(s2).cloned().collect(),
                )
            }
            _ => Fnf::Bottom,
        }
    }

    /// Componentwise product.
    pub fn mul(&self, other: &Fnf) -> Fnf {
        match (self, other) {
            (Fnf::Frac { num: n1, den: d1, support: s1 }, Fnf::Frac { num: n2, den: d2, support: s2 }) => {
                Fnf::normalize(n1.mul(n2), d1.mul(d2), s1.union(s2).cloned().collect())
            }
            _ => Fnf::Bottom,
        }
    }

    pub fn neg(&self) -> Fnf {
        match self {
            Fnf::Frac { num, den, support } => Fnf::Frac {
                num: num.neg(),
                den: den.clone(),
                support: support.clone(),
            },
            Fnf::Bottom => Fnf::Bottom,
        }
    }

    /// Inverse of `n/d` is `d*d / (n*d)` — not the plain swap `d/n`,
    /// which would drop the absorbing behaviour of the old denominator's
    /// zeros. A zero numerator therefore collapses to Bottom.
    pub fn inv(&self) -> Fnf {
        match self {
            Fnf::Frac { num, den, support } => {
                Fnf::normalize(den.mul(den), num.mul(den), support.clone())
            }
            Fnf::Bottom => Fnf::Bottom,
        }
    }

    pub fn support(&self) -> Option<&BTreeSet<String>> {
        match self {
            Fnf::Frac { support, .. } => Some(support),
            Fnf::Bottom => None,
        }
    }
}

/// Rewrites a term to fraction normal form by structural induction.
pub fn to_fraction(t: &Term) -> Fnf {
    match t {
        Term::Zero => Fnf::Frac {
            num: MultiPoly::zero(),
            den: MultiPoly::one(),
            support: BTreeSet::new(),
        },
        Term::One => Fnf::Frac {
            num: MultiPoly::one(),
            den: MultiPoly::one(),
            support: BTreeSet::new(),
        },
        Term::Bot => Fnf::Bottom,
        Term::Var(v) => Fnf::Frac {
            num: MultiPoly::var(v),
            den: MultiPoly::one(),
            support: std::iter::once(v.clone()).collect(),
        },
        Term::Add(l, r) => to_fraction(l).add(&to_fraction(r)),
        Term::Mul(l, r) => to_fraction(l).mul(&to_fraction(r)),
        Term::Neg(x) => to_fraction(x).neg(),
        Term::Inv(x) => to_fraction(x).inv(),
    }
}

/// Evaluates a normal form in a model: `num(a) * inv(den(a)) +
/// 0 * (sum of support values)`, with polynomial coefficients mapped
/// through the model's rational embedding.
pub fn eval_fnf(f: &Fnf, asg: &Assignment, m: &Model) -> Result<Value, EvalError> {
    match f {
        Fnf::Bottom => Ok(m.bot()?),
        Fnf::Frac { num, den, support } => {
            let num_v = eval_poly(num, asg, m)?;
            let den_v = eval_poly(den, asg, m)?;
            let mut acc = m.mul(&num_v, &m.inv(&den_v)?)?;
            if !support.is_empty() {
                let mut sum = m.zero();
                for v in support {
                    let val = asg.get(v).ok_or_else(|| EvalError::UnboundVar(v.clone()))?;
                    sum = m.add(&sum, val)?;
                }
                acc = m.add(&acc, &m.mul(&m.zero(), &sum)?)?;
            }
            Ok(acc)
        }
    }
}

fn eval_poly(p: &MultiPoly, asg: &Assignment, m: &Model) -> Result<Value, EvalError> {
    let mut acc = m.zero();
    for (mono, coeff) in p.terms() {
        let mut v = m.value_from_rational(coeff)?;
        for (var, e) in mono.iter() {
            let val = asg.get(var).ok_or_else(|| EvalError::UnboundVar(var.clone()))?;
            for _ in 0..*e {
                v = m.mul(&v, val)?;
            }
        }
        acc = m.add(&acc, &v)?;
    }
    Ok(acc)
}

/// Renders a normal form back into a term whose normal form is `self`.
/// Returns `None` when a coefficient exceeds the numeral range.
pub fn fnf_to_term(f: &Fnf) -> Option<Term> {
    match f {
        Fnf::Bottom => Some(Term::Bot),
        Fnf::Frac { num, den, support } => {
            let base = Term::mul(poly_to_term(num)?, Term::inv(poly_to_term(den)?));
            if support.is_empty() {
                return Some(base);
            }
            let mut vars = support.iter();
            let mut sum = Term::var(vars.next().expect("nonempty"));
            for v in vars {
                sum = Term::add(sum, Term::var(v));
            }
            Some(Term::add(base, Term::mul(Term::Zero, sum)))
        }
    }
}

fn poly_to_term(p: &MultiPoly) -> Option<Term> {
    if p.is_zero() {
        return Some(Term::Zero);
    }
    let mut acc: Option<Term> = None;
    for (mono, coeff) in p.terms() {
        let mono_term = mono
            .iter()
            .flat_map(|(v, e)| std::iter::repeat(Term::var(v)).take(*e as usize))
            .reduce(Term::mul);
        let numer = small_numeral(&coeff.numer().abs())?;
        let denom = small_numeral(coeff.denom())?;
        let coeff_term = match (numer, denom) {
            (1, d) if d != 1 => Some(Term::inv(Term::numeral(d))),
            (n, d) if d != 1 => Some(Term::mul(Term::numeral(n), Term::inv(Term::numeral(d)))),
            (n, _) if n != 1 || mono_term.is_none() => Some(Term::numeral(n)),
            _ => None,
        };
        let mut piece = match (coeff_term, mono_term) {
            (Some(c), Some(m)) => Term::mul(c, m),
            (Some(c), None) => c,
            (None, Some(m)) => m,
            (None, None) => Term::One,
        };
        if coeff.is_negative() {
            piece = Term::neg(piece);
        }
        acc = Some(match acc {
            Some(t) => Term::add(t, piece),
            None => piece,
        });
    }
    acc
}

fn small_numeral(n: &BigInt) -> Option<u64> {
    u64::try_from(n.clone()).ok().filter(|n| *n <= NUMERAL_MAX)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::terms::parse;
    use crate::values::QBot;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn frac(num: MultiPoly, den: MultiPoly, support: &[&str]) -> Fnf {
        Fnf::Frac {
            num,
            den,
            support: support.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn x() -> MultiPoly {
        MultiPoly::var("x")
    }

    fn y() -> MultiPoly {
        MultiPoly::var("y")
    }

    #[test]
    fn fraction_sum_of_two_inverses() {
        let f = to_fraction(&parse("1/x + 1/y").unwrap());
        assert_eq!(f, frac(x().add(&y()), x().mul(&y()), &["x", "y"]));
    }

    #[test]
    fn cancelling_sum_keeps_support() {
        let f = to_fraction(&parse("x + (-x)").unwrap());
        assert_eq!(f, frac(MultiPoly::zero(), MultiPoly::one(), &["x"]));
    }

    #[test]
    fn bot_collapses_everything() {
        assert_eq!(to_fraction(&parse("bot + x").unwrap()), Fnf::Bottom);
        assert_eq!(to_fraction(&parse("bot * 0").unwrap()), Fnf::Bottom);
        assert_eq!(to_fraction(&parse("1/0").unwrap()), Fnf::Bottom);
    }

    #[test]
    fn zero_times_square_collapses_polynomially() {
        let f = to_fraction(&parse("0 * (x * x)").unwrap());
        assert_eq!(f, frac(MultiPoly::zero(), MultiPoly::one(), &["x"]));
    }

    #[test]
    fn add_examples() {
        let a = frac(x(), MultiPoly::one(), &["x"]);
        let b = frac(MultiPoly::zero(), x(), &["x"]);
        assert_eq!(a.add(&b), frac(x().mul(&x()), x(), &["x"]));

        let half = frac(MultiPoly::one(), MultiPoly::from_int(2), &[]);
        assert_eq!(
            half.add(&half),
            frac(MultiPoly::one(), MultiPoly::one(), &[])
        );

        assert_eq!(Fnf::Bottom.add(&a), Fnf::Bottom);
    }

    #[test]
    fn mul_and_neg_examples() {
        let a = frac(x(), MultiPoly::one(), &["x"]);
        let b = frac(MultiPoly::one(), x(), &["x"]);
        assert_eq!(a.mul(&b), frac(x(), x(), &["x"]));
        assert_eq!(a.neg(), frac(x().neg(), MultiPoly::one(), &["x"]));
        assert_eq!(Fnf::Bottom.mul(&frac(MultiPoly::one(), MultiPoly::one(), &[])), Fnf::Bottom);
    }

    #[test]
    fn inv_examples() {
        let a = frac(x(), MultiPoly::one(), &["x"]);
        assert_eq!(a.inv(), frac(MultiPoly::one(), x(), &["x"]));

        let zero_num = frac(MultiPoly::zero(), MultiPoly::one(), &["x"]);
        assert_eq!(zero_num.inv(), Fnf::Bottom);
        assert_eq!(Fnf::Bottom.inv(), Fnf::Bottom);

        // (x^-1)^-1 keeps the zero of x in the denominator
        let f = to_fraction(&parse("(x^-1)^-1").unwrap());
        assert_eq!(f, frac(x().mul(&x()), x(), &["x"]));
    }

    #[test]
    fn support_tracks_term_variables() {
        for text in ["x * y^-1 + u", "0 * z", "x * x^-1", "(x + y) * (x + y)^-1"] {
            let t = parse(text).unwrap();
            let f = to_fraction(&t);
            assert_eq!(f.support().unwrap(), &t.vars());
        }
    }

    #[test]
    fn rendered_form_normalizes_to_itself() {
        let mut rng = StdRng::seed_from_u64(5);
        for text in [
            "1/x + 1/y",
            "x + (-x)",
            "(x^-1)^-1",
            "2 * x + 1/3",
            "x * y * z^-1 + u",
            "0 * (x * x)",
        ] {
            let f = to_fraction(&parse(text).unwrap());
            let back = fnf_to_term(&f).unwrap();
            assert_eq!(to_fraction(&back), f, "term {text}");
        }
        // and for random small normal forms
        for _ in 0..50 {
            let t = crate::lawcheck::sampling::random_term(&mut rng, &["x", "y"], 4);
            let f = to_fraction(&t);
            if let Some(back) = fnf_to_term(&f) {
                assert_eq!(to_fraction(&back), f, "term {t}");
            }
        }
    }

    #[test]
    fn soundness_spot_checks() {
        let mut rng = StdRng::seed_from_u64(99);
        let vars = ["x", "y", "z"];
        let models = [Model::QBot, Model::fp(7).unwrap()];
        for _ in 0..300 {
            let t = crate::lawcheck::sampling::random_term(&mut rng, &vars, 5);
            let f = to_fraction(&t);
            for m in &models {
                let mut asg = Assignment::new();
                for v in vars {
                    let val = if rng.gen_bool(0.2) {
                        m.bot().unwrap()
                    } else {
                        m.value_from_rational(&num_rational::BigRational::from_integer(
                            num_bigint::BigInt::from(rng.gen_range(-4i64..=4)),
                        ))
                        .unwrap()
                    };
                    asg.insert(v.to_string(), val);
                }
                let direct = crate::terms::eval(&t, &asg, m).unwrap();
                let via_fnf = eval_fnf(&f, &asg, m).unwrap();
                assert_eq!(direct, via_fnf, "term {t} in {}", m.name());
            }
        }
    }

    #[test]
    fn bottom_evaluates_to_bot() {
        let m = Model::QBot;
        assert_eq!(
            eval_fnf(&Fnf::Bottom, &Assignment::new(), &m).unwrap(),
            Value::Q(QBot::Bot)
        );
    }
}
