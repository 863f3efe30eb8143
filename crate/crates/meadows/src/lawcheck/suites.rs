//! The builtin law suites.
//!
//! * `md` — the ten involutive meadow axioms (zero-totalized inverse).
//! * `md_bot` — the seventeen axioms of totalized fields with an
//!   absorbing value.
//! * `derived` — equations e1..e10 that follow from `md_bot`.
//! * `conditional` — conditional equations ce1..ce7.
//! * `laws` — NVL, AVL, CIL, ICL and the plain cancellation law CL.
//! * `law_consequences` — element-level consequences of NVL.
//! * `c0` — the characteristic-zero instances `n * n^-1 = 1`.

use super::{Law, Premise};
use crate::terms::Term;

/// A named list of laws.
#[derive(Debug, Clone)]
pub struct Suite {
    pub name: &'static str,
    pub laws: Vec<Law>,
}

fn x() -> Term {
    Term::var("x")
}

fn y() -> Term {
    Term::var("y")
}

fn z() -> Term {
    Term::var("z")
}

fn eq(name: &str, lhs: Term, rhs: Term) -> Law {
    Law::equation(name, lhs, rhs)
}

/// The ten axioms of involutive meadows: a commutative ring with
/// `(x^-1)^-1 = x` and `x * (x * x^-1) = x`.
pub fn md_axioms() -> Vec<Law> {
    use Term::{One, Zero};
    vec![
        eq("add_assoc", Term::add(Term::add(x(), y()), z()), Term::add(x(), Term::add(y(), z()))),
        eq("add_comm", Term::add(x(), y()), Term::add(y(), x())),
        eq("add_zero", Term::add(x(), Zero), x()),
        eq("add_neg", Term::add(x(), Term::neg(x())), Zero),
        eq("mul_assoc", Term::mul(Term::mul(x(), y()), z()), Term::mul(x(), Term::mul(y(), z()))),
        eq("mul_comm", Term::mul(x(), y()), Term::mul(y(), x())),
        eq("mul_one", Term::mul(One, x()), x()),
        eq("distrib", Term::mul(x(), Term::add(y(), z())), Term::add(Term::mul(x(), y()), Term::mul(x(), z()))),
        eq("inv_involution", Term::inv(Term::inv(x())), x()),
        eq("mul_mul_inv", Term::mul(x(), Term::mul(x(), Term::inv(x()))), x()),
    ]
}

/// The seventeen axioms of totalized fields with absorbing value.
pub fn md_bot_axioms() -> Vec<Law> {
    use Term::{Bot, One, Zero};
    vec![
        eq("add_assoc", Term::add(Term::add(x(), y()), z()), Term::add(x(), Term::add(y(), z()))),
        eq("add_comm", Term::add(x(), y()), Term::add(y(), x())),
        eq("add_zero", Term::add(x(), Zero), x()),
        eq("add_neg", Term::add(x(), Term::neg(x())), Term::mul(Zero, x())),
        eq("mul_assoc", Term::mul(Term::mul(x(), y()), z()), Term::mul(x(), Term::mul(y(), z()))),
        eq("mul_comm", Term::mul(x(), y()), Term::mul(y(), x())),
        eq("mul_one", Term::mul(One, x()), x()),
        eq("distrib", Term::mul(x(), Term::add(y(), z())), Term::add(Term::mul(x(), y()), Term::mul(x(), z()))),
        eq("neg_neg", Term::neg(Term::neg(x())), x()),
        eq("zero_mul_square", Term::mul(Zero, Term::mul(x(), x())), Term::mul(Zero, x())),
        eq("inv_inv", Term::inv(Term::inv(x())), Term::add(x(), Term::mul(Zero, Term::inv(x())))),
        eq("mul_inv", Term::mul(x(), Term::inv(x())), Term::add(One, Term::mul(Zero, Term::inv(x())))),
        eq("inv_mul", Term::inv(Term::mul(x(), y())), Term::mul(Term::inv(x()), Term::inv(y()))),
        eq("inv_one", Term::inv(One), One),
        eq("inv_zero", Term::inv(Zero), Bot),
        eq("add_bot", Term::add(x(), Bot), Bot),
        eq("mul_bot", Term::mul(x(), Bot), Bot),
    ]
}

/// Equations derivable from the `md_bot` axioms.
pub fn derived_equations() -> Vec<Law> {
    use Term::{Bot, One, Zero};
    vec![
        eq("e1", Term::mul(Zero, Zero), Zero),
        eq("e2", Term::neg(Zero), Zero),
        eq("e3", Term::mul(Zero, x()), Term::mul(Zero, Term::neg(x()))),
        eq("e4", Term::mul(Zero, Term::mul(x(), y())), Term::mul(Zero, Term::add(x(), y()))),
        eq("e5", Term::neg(Term::mul(x(), y())), Term::mul(x(), Term::neg(y()))),
        eq("e6", Term::mul(Term::neg(One), x()), Term::neg(x())),
        eq("e7", Term::inv(Term::neg(x())), Term::neg(Term::inv(x()))),
        eq("e8", Term::mul(Term::mul(x(), Term::inv(x())), Term::inv(x())), Term::inv(x())),
        eq("e9", Term::neg(Bot), Bot),
        eq("e10", Term::inv(Bot), Bot),
    ]
}

/// Conditional equations derivable from the `md_bot` axioms.
pub fn conditional_equations() -> Vec<Law> {
    use Term::{Bot, One, Zero};
    vec![
        Law::conditional(
            "ce1",
            vec![Premise::Eq(Term::mul(x(), y()), One)],
            Term::mul(Zero, y()),
            Zero,
        ),
        Law::conditional(
            "ce2",
            vec![Premise::Eq(Term::mul(x(), y()), One)],
            Term::inv(x()),
            y(),
        ),
        Law::conditional(
            "ce3",
            vec![Premise::Eq(Term::mul(Zero, x()), Term::mul(Zero, y()))],
            Term::mul(Zero, Term::mul(x(), y())),
            Term::mul(Zero, x()),
        ),
        Law::conditional(
            "ce4",
            vec![Premise::Eq(Term::mul(Term::mul(Zero, x()), y()), Zero)],
            Term::mul(Zero, x()),
            Zero,
        ),
        Law::conditional(
            "ce5",
            vec![Premise::Eq(Term::mul(Zero, Term::add(x(), y())), Zero)],
            Term::mul(Zero, x()),
            Zero,
        ),
        Law::conditional(
            "ce6",
            vec![Premise::Eq(Term::mul(Zero, Term::inv(x())), Zero)],
            Term::mul(Zero, x()),
            Zero,
        ),
        Law::conditional(
            "ce7",
            vec![Premise::Eq(Term::mul(Zero, x()), Bot)],
            x(),
            Bot,
        ),
    ]
}

/// The value laws: NVL (normal values annihilate with zero), AVL
/// (only zero inverts to the absorbing value), CIL (nonzero normal
/// values cancel with their inverse), the inverse cancellation law ICL,
/// and the plain cancellation law CL of involutive meadows.
pub fn value_laws() -> Vec<Law> {
    use Term::{Bot, One, Zero};
    vec![
        Law::conditional(
            "NVL",
            vec![Premise::Neq(x(), Bot)],
            Term::mul(Zero, x()),
            Zero,
        ),
        Law::conditional(
            "AVL",
            vec![Premise::Eq(Term::inv(x()), Bot)],
            Term::mul(Zero, x()),
            x(),
        ),
        Law::conditional(
            "CIL",
            vec![Premise::Neq(x(), Zero), Premise::Neq(x(), Bot)],
            Term::mul(x(), Term::inv(x())),
            One,
        ),
        Law::conditional(
            "ICL",
            vec![
                Premise::Neq(x(), Zero),
                Premise::Neq(x(), Bot),
                Premise::Eq(Term::mul(Term::inv(x()), y()), Term::mul(Term::inv(x()), z())),
            ],
            y(),
            z(),
        ),
        Law::conditional(
            "CL",
            vec![
                Premise::Neq(x(), Zero),
                Premise::Eq(Term::mul(x(), y()), Term::mul(x(), z())),
            ],
            y(),
            z(),
        ),
    ]
}

/// Element-level consequences of the value laws.
pub fn law_consequences() -> Vec<Law> {
    use Term::{Bot, Zero};
    vec![
        Law::conditional(
            "bot_factor",
            vec![Premise::Eq(Term::mul(x(), y()), Bot), Premise::Neq(x(), Bot)],
            y(),
            Bot,
        ),
        Law::conditional(
            "inv_normal",
            vec![Premise::Neq(Term::inv(x()), Bot)],
            Term::mul(Zero, x()),
            Zero,
        ),
    ]
}

/// Characteristic-zero instances `n * n^-1 = 1` for `n` in `1..=nmax+1`,
/// as closed equations over numeral chains.
pub fn c0_suite(nmax: u64) -> Suite {
    let laws = (0..=nmax)
        .map(|n| {
            let numeral = Term::numeral(n + 1);
            Law::equation(
                &format!("c0_{}", n + 1),
                Term::mul(numeral.clone(), Term::inv(numeral)),
                Term::One,
            )
        })
        .collect();
    Suite { name: "c0", laws }
}

/// Every builtin suite; `c0` defaults to instances up to 21.
pub fn builtin_suites() -> Vec<Suite> {
    vec![
        Suite { name: "md", laws: md_axioms() },
        Suite { name: "md_bot", laws: md_bot_axioms() },
        Suite { name: "derived", laws: derived_equations() },
        Suite { name: "conditional", laws: conditional_equations() },
        Suite { name: "laws", laws: value_laws() },
        Suite { name: "law_consequences", laws: law_consequences() },
        c0_suite(20),
    ]
}

pub fn suite_by_name(name: &str) -> Option<Suite> {
    builtin_suites().into_iter().find(|s| s.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_sizes() {
        assert_eq!(md_axioms().len(), 10);
        assert_eq!(md_bot_axioms().len(), 17);
        assert_eq!(derived_equations().len(), 10);
        assert_eq!(conditional_equations().len(), 7);
        assert_eq!(value_laws().len(), 5);
        assert_eq!(c0_suite(20).laws.len(), 21);
        assert!(suite_by_name("md_bot").is_some());
        assert!(suite_by_name("nonesuch").is_none());
    }

    #[test]
    fn law_variables_are_closed() {
        for suite in builtin_suites() {
            for law in suite.laws {
                for v in law.vars() {
                    assert!(["x", "y", "z"].contains(&v.as_str()), "{}: {}", law.name, v);
                }
            }
        }
    }
}
