//! Checking equations and conditional laws against models: exhaustively
//! on finite carriers, seeded-randomized on infinite ones.
//!
//! A failing report re-verifies its witness by direct evaluation before
//! it is emitted, and randomized reports record their seed so reruns are
//! byte-for-byte reproducible.

pub mod sampling;
mod suites;

pub use suites::{
    builtin_suites, c0_suite, conditional_equations, derived_equations, law_consequences,
    md_axioms, md_bot_axioms, suite_by_name, value_laws, Suite,
};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::terms::{eval, Assignment, EvalError, Term};
use crate::values::{eval_on_tables, MeadowTables, Model, ModelError};

/// Seed used by randomized strategies unless the caller overrides it.
pub const DEFAULT_SEED: u64 = 1729;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CheckError {
    #[error("exhaustive strategy needs a finite carrier; model `{0}` is infinite")]
    InfiniteCarrier(String),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

/// A premise of a conditional law; disequations are evaluated directly
/// per assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Premise {
    Eq(Term, Term),
    Neq(Term, Term),
}

/// A named law: optional premises and an equational conclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Law {
    pub name: String,
    pub premises: Vec<Premise>,
    pub lhs: Term,
    pub rhs: Term,
}

impl Law {
    pub fn equation(name: &str, lhs: Term, rhs: Term) -> Law {
        Law { name: name.to_string(), premises: Vec::new(), lhs, rhs }
    }

    pub fn conditional(name: &str, premises: Vec<Premise>, lhs: Term, rhs: Term) -> Law {
        Law { name: name.to_string(), premises, lhs, rhs }
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = self.lhs.vars();
        out.extend(self.rhs.vars());
        for p in &self.premises {
            let (Premise::Eq(l, r) | Premise::Neq(l, r)) = p;
            out.extend(l.vars());
            out.extend(r.vars());
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Exhaustive,
    Random { n: usize, seed: u64 },
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strategy::Exhaustive => write!(f, "exhaustive"),
            Strategy::Random { n, seed } => write!(f, "random({}, seed={})", n, seed),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail { assignment: Assignment },
}

/// Result of checking one law against one model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub law: String,
    pub model: Model,
    pub strategy: Strategy,
    pub cases: usize,
    pub outcome: Outcome,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        matches!(self.outcome, Outcome::Pass)
    }

    pub fn witness(&self) -> Option<&Assignment> {
        match &self.outcome {
            Outcome::Pass => None,
            Outcome::Fail { assignment } => Some(assignment),
        }
    }
}

pub fn render_assignment(asg: &Assignment) -> String {
    if asg.is_empty() {
        return "(empty assignment)".to_string();
    }
    asg.iter()
        .map(|(k, v)| format!("{}={}", k, v))
        .collect::<Vec<_>>()
        .join(", ")
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let outcome = match &self.outcome {
            Outcome::Pass => "pass".to_string(),
            Outcome::Fail { assignment } => format!("FAIL  {}", render_assignment(assignment)),
        };
        write!(
            f,
            "{:<14} {:<10} {:<24} {:>8}  {}",
            self.law,
            self.model.name(),
            self.strategy.to_string(),
            self.cases,
            outcome
        )
    }
}

/// Checks a plain equation.
pub fn check_equation(
    m: &Model,
    name: &str,
    lhs: &Term,
    rhs: &Term,
    strategy: Strategy,
) -> Result<CheckReport, CheckError> {
    check_law(m, &Law::equation(name, lhs.clone(), rhs.clone()), strategy)
}

/// Checks a conditional law: every assignment satisfying all premises
/// must satisfy the conclusion.
pub fn check_conditional(m: &Model, law: &Law, strategy: Strategy) -> Result<CheckReport, CheckError> {
    check_law(m, law, strategy)
}

struct Runner<'a> {
    model: &'a Model,
    law: &'a Law,
    cases: usize,
    outcome: Outcome,
}

impl Runner<'_> {
    /// Tries one assignment; returns `false` once a failure is recorded.
    fn visit(&mut self, asg: &Assignment) -> Result<bool, CheckError> {
        let m = self.model;
        self.cases += 1;
        for p in &self.law.premises {
            let holds = match p {
                Premise::Eq(l, r) => eval(l, asg, m)? == eval(r, asg, m)?,
                Premise::Neq(l, r) => eval(l, asg, m)? != eval(r, asg, m)?,
            };
            if !holds {
                return Ok(true);
            }
        }
        if eval(&self.law.lhs, asg, m)? == eval(&self.law.rhs, asg, m)? {
            return Ok(true);
        }
        // re-verify the witness before reporting it
        if eval(&self.law.lhs, asg, m)? != eval(&self.law.rhs, asg, m)? {
            self.outcome = Outcome::Fail { assignment: asg.clone() };
            return Ok(false);
        }
        Ok(true)
    }
}

pub fn check_law(m: &Model, law: &Law, strategy: Strategy) -> Result<CheckReport, CheckError> {
    let vars: Vec<String> = law.vars().into_iter().collect();
    let mut runner = Runner { model: m, law, cases: 0, outcome: Outcome::Pass };

    match strategy {
        Strategy::Exhaustive => {
            let carrier = m
                .carrier()
                .ok_or_else(|| CheckError::InfiniteCarrier(m.name()))?;
            if vars.is_empty() {
                runner.visit(&Assignment::new())?;
            } else {
                let mut idx = vec![0usize; vars.len()];
                'outer: loop {
                    let asg: Assignment = vars
                        .iter()
                        .zip(&idx)
                        .map(|(v, i)| (v.clone(), carrier[*i].clone()))
                        .collect();
                    if !runner.visit(&asg)? {
                        break;
                    }
                    let mut pos = vars.len();
                    loop {
                        if pos == 0 {
                            break 'outer;
                        }
                        pos -= 1;
                        idx[pos] += 1;
                        if idx[pos] < carrier.len() {
                            break;
                        }
                        idx[pos] = 0;
                    }
                }
            }
        }
        Strategy::Random { n, seed } => {
            if vars.is_empty() {
                // A closed equation has a single case.
                runner.visit(&Assignment::new())?;
            } else {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut stopped = false;
                for asg in sampling::forced_assignments(m, &vars).iter().take(n) {
                    if !runner.visit(asg)? {
                        stopped = true;
                        break;
                    }
                }
                while !stopped && runner.cases < n {
                    let asg: Assignment = vars
                        .iter()
                        .map(|v| (v.clone(), sampling::sample_value(m, &mut rng)))
                        .collect();
                    if !runner.visit(&asg)? {
                        break;
                    }
                }
            }
        }
    }

    Ok(CheckReport {
        law: law.name.clone(),
        model: *m,
        strategy,
        cases: runner.cases,
        outcome: runner.outcome,
    })
}

/// Runs every law of a suite against a model.
pub fn check_suite(m: &Model, suite: &Suite, strategy: Strategy) -> Result<Vec<CheckReport>, CheckError> {
    suite.laws.iter().map(|law| check_law(m, law, strategy)).collect()
}

/// Exhaustively checks an equation over finite involutive tables.
/// Returns `None` on pass, or a failing assignment of carrier indices.
pub fn check_equation_on_tables(
    tables: &MeadowTables,
    lhs: &Term,
    rhs: &Term,
) -> Result<Option<BTreeMap<String, u64>>, ModelError> {
    let mut vars: Vec<String> = lhs.vars().into_iter().collect();
    for v in rhs.vars() {
        if !vars.contains(&v) {
            vars.push(v);
        }
    }
    vars.sort();
    let p = tables.modulus;
    let mut idx = vec![0u64; vars.len()];
    loop {
        let asg: BTreeMap<String, u64> =
            vars.iter().cloned().zip(idx.iter().copied()).collect();
        if eval_on_tables(lhs, &asg, tables)? != eval_on_tables(rhs, &asg, tables)? {
            return Ok(Some(asg));
        }
        let mut pos = vars.len();
        loop {
            if pos == 0 {
                return Ok(None);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < p {
                break;
            }
            idx[pos] = 0;
        }
    }
}
