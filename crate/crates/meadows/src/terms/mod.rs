//! Abstract syntax, parser, printer and evaluator for the expression
//! language over `0`, `1`, `bot`, variables, `+`, `*`, unary `-` and the
//! postfix inverse `^-1`.
//!
//! Precedence, tightest first: `^-1`, unary `-`, `*` and `/`, then `+`
//! and binary `-`. `a/b` is sugar for `a * b^-1`, `a - b` for
//! `a + (-b)`, and a natural-number literal `n` expands to the numeral
//! chain `0`, `1`, `1 + 1`, ...

mod parse;

pub use parse::{parse, ParseError, NUMERAL_MAX};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::values::{Model, ModelError, Value};

/// A finite map from variable names to model values.
pub type Assignment = BTreeMap<String, Value>;

/// A term tree. Structural equality is the derived one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Zero,
    One,
    Bot,
    Var(String),
    Add(Box<Term>, Box<Term>),
    Mul(Box<Term>, Box<Term>),
    Neg(Box<Term>),
    Inv(Box<Term>),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    pub fn add(l: Term, r: Term) -> Term {
        Term::Add(Box::new(l), Box::new(r))
    }

    pub fn mul(l: Term, r: Term) -> Term {
        Term::Mul(Box::new(l), Box::new(r))
    }

    pub fn neg(t: Term) -> Term {
        Term::Neg(Box::new(t))
    }

    pub fn inv(t: Term) -> Term {
        Term::Inv(Box::new(t))
    }

    /// `a - b` as sugar for `a + (-b)`.
    pub fn sub(l: Term, r: Term) -> Term {
        Term::add(l, Term::neg(r))
    }

    /// `a / b` as sugar for `a * b^-1`.
    pub fn div(l: Term, r: Term) -> Term {
        Term::mul(l, Term::inv(r))
    }

    /// The numeral chain: `0`, `1`, and `n = (n-1) + 1` for `n >= 2`.
    pub fn numeral(n: u64) -> Term {
        if n == 0 {
            return Term::Zero;
        }
        let mut acc = Term::One;
        for _ in 1..n {
            acc = Term::add(acc, Term::One);
        }
        acc
    }

    /// The set of variable names occurring in the term.
    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Zero | Term::One | Term::Bot => {}
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Add(l, r) | Term::Mul(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
            Term::Neg(t) | Term::Inv(t) => t.collect_vars(out),
        }
    }

    /// Rendering with minimal parentheses; `parse(t.render())` returns a
    /// structurally equal tree.
    pub fn render(&self) -> String {
        let mut s = String::new();
        self.render_prec(&mut s, 0);
        s
    }

    // Precedence levels: 1 additive, 2 multiplicative, 3 unary minus,
    // 4 postfix inverse, 5 atoms.
    fn render_prec(&self, out: &mut String, min: u8) {
        let prec = match self {
            Term::Add(..) => 1,
            Term::Mul(..) => 2,
            Term::Neg(_) => 3,
            Term::Inv(_) => 4,
            _ => 5,
        };
        let parens = prec < min;
        if parens {
            out.push('(');
        }
        match self {
            Term::Zero => out.push('0'),
            Term::One => out.push('1'),
            Term::Bot => out.push_str("bot"),
            Term::Var(v) => out.push_str(v),
            Term::Add(l, r) => {
                l.render_prec(out, 1);
                if let Term::Neg(inner) = r.as_ref() {
                    out.push_str(" - ");
                    inner.render_prec(out, 2);
                } else {
                    out.push_str(" + ");
                    r.render_prec(out, 2);
                }
            }
            Term::Mul(l, r) => {
                l.render_prec(out, 2);
                out.push_str(" * ");
                r.render_prec(out, 3);
            }
            Term::Neg(t) => {
                out.push('-');
                t.render_prec(out, 3);
            }
            Term::Inv(t) => {
                t.render_prec(out, 5);
                out.push_str("^-1");
            }
        }
        if parens {
            out.push(')');
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("unbound variable `{0}`")]
    UnboundVar(String),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Homomorphic evaluation of a term in a model. The assignment must
/// cover every variable of the term with values of that model.
pub fn eval(t: &Term, asg: &Assignment, m: &Model) -> Result<Value, EvalError> {
    Ok(match t {
        Term::Zero => m.zero(),
        Term::One => m.one(),
        Term::Bot => m.bot()?,
        Term::Var(v) => {
            let val = asg.get(v).ok_or_else(|| EvalError::UnboundVar(v.clone()))?;
            if !m.contains(val) {
                return Err(ModelError::ModelMismatch.into());
            }
            val.clone()
        }
        Term::Add(l, r) => m.add(&eval(l, asg, m)?, &eval(r, asg, m)?)?,
        Term::Mul(l, r) => m.mul(&eval(l, asg, m)?, &eval(r, asg, m)?)?,
        Term::Neg(x) => m.neg(&eval(x, asg, m)?)?,
        Term::Inv(x) => m.inv(&eval(x, asg, m)?)?,
    })
}
