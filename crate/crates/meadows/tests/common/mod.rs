//! Shared helpers for integration tests: structural pattern matching and
//! random axiom-instance rewriting over terms.

use std::collections::BTreeMap;

use meadows::terms::Term;
use rand::Rng;

pub type Bindings = BTreeMap<String, Term>;

/// Paths to every subterm, root included; 0 descends left (or into the
/// only child), 1 descends right.
pub fn subterm_positions(t: &Term) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    match t {
        Term::Add(l, r) | Term::Mul(l, r) => {
            for (i, child) in [l, r].into_iter().enumerate() {
                for mut path in subterm_positions(child) {
                    path.insert(0, i as u8);
                    out.push(path);
                }
            }
        }
        Term::Neg(inner) | Term::Inv(inner) => {
            for mut path in subterm_positions(inner) {
                path.insert(0, 0);
                out.push(path);
            }
        }
        _ => {}
    }
    out
}

pub fn subterm_at<'a>(t: &'a Term, path: &[u8]) -> &'a Term {
    let Some((step, rest)) = path.split_first() else {
        return t;
    };
    match (t, step) {
        (Term::Add(l, _), 0) | (Term::Mul(l, _), 0) => subterm_at(l, rest),
        (Term::Add(_, r), 1) | (Term::Mul(_, r), 1) => subterm_at(r, rest),
        (Term::Neg(inner), 0) | (Term::Inv(inner), 0) => subterm_at(inner, rest),
        _ => panic!("bad path into {t}"),
    }
}

pub fn replace_at(t: &Term, path: &[u8], replacement: Term) -> Term {
    let Some((step, rest)) = path.split_first() else {
        return replacement;
    };
    match (t, step) {
        (Term::Add(l, r), 0) => Term::add(replace_at(l, rest, replacement), (**r).clone()),
        (Term::Add(l, r), 1) => Term::add((**l).clone(), replace_at(r, rest, replacement)),
        (Term::Mul(l, r), 0) => Term::mul(replace_at(l, rest, replacement), (**r).clone()),
        (Term::Mul(l, r), 1) => Term::mul((**l).clone(), replace_at(r, rest, replacement)),
        (Term::Neg(inner), 0) => Term::neg(replace_at(inner, rest, replacement)),
        (Term::Inv(inner), 0) => Term::inv(replace_at(inner, rest, replacement)),
        _ => panic!("bad path into {t}"),
    }
}

/// Structural matching; pattern variables bind subterms, repeated
/// variables must bind equal subterms.
pub fn match_pattern(pattern: &Term, subject: &Term, bind: &mut Bindings) -> bool {
    match (pattern, subject) {
        (Term::Var(v), s) => match bind.get(v) {
            Some(bound) => bound == s,
            None => {
                bind.insert(v.clone(), s.clone());
                true
            }
        },
        (Term::Zero, Term::Zero) | (Term::One, Term::One) | (Term::Bot, Term::Bot) => true,
        (Term::Add(a, b), Term::Add(c, d)) | (Term::Mul(a, b), Term::Mul(c, d)) => {
            match_pattern(a, c, bind) && match_pattern(b, d, bind)
        }
        (Term::Neg(a), Term::Neg(b)) | (Term::Inv(a), Term::Inv(b)) => match_pattern(a, b, bind),
        _ => false,
    }
}

/// Instantiates a pattern under bindings; variables the match left open
/// (a reversed absorption axiom introduces one) get a random leaf.
pub fn instantiate<R: Rng>(pattern: &Term, bind: &mut Bindings, rng: &mut R) -> Term {
    match pattern {
        Term::Var(v) => bind
            .entry(v.clone())
            .or_insert_with(|| match rng.gen_range(0..4) {
                0 => Term::Zero,
                1 => Term::One,
                2 => Term::var("x"),
                _ => Term::var("y"),
            })
            .clone(),
        Term::Zero | Term::One | Term::Bot => pattern.clone(),
        Term::Add(l, r) => Term::add(instantiate(l, bind, rng), instantiate(r, bind, rng)),
        Term::Mul(l, r) => Term::mul(instantiate(l, bind, rng), instantiate(r, bind, rng)),
        Term::Neg(inner) => Term::neg(instantiate(inner, bind, rng)),
        Term::Inv(inner) => Term::inv(instantiate(inner, bind, rng)),
    }
}

/// Applies one random rule instance (either direction) at a random
/// position. The reversed `x + 0 = x` matches everywhere, so a candidate
/// always exists.
pub fn rewrite_step<R: Rng>(rng: &mut R, t: &Term, rules: &[(Term, Term)]) -> Term {
    let mut candidates = Vec::new();
    for path in subterm_positions(t) {
        let sub = subterm_at(t, &path);
        for (i, (lhs, rhs)) in rules.iter().enumerate() {
            if match_pattern(lhs, sub, &mut Bindings::new()) {
                candidates.push((path.clone(), i, false));
            }
            if match_pattern(rhs, sub, &mut Bindings::new()) {
                candidates.push((path.clone(), i, true));
            }
        }
    }
    let (path, rule, reversed) = candidates[rng.gen_range(0..candidates.len())].clone();
    let (from, to) = if reversed {
        (&rules[rule].1, &rules[rule].0)
    } else {
        (&rules[rule].0, &rules[rule].1)
    };
    let sub = subterm_at(t, &path);
    let mut bind = Bindings::new();
    assert!(match_pattern(from, sub, &mut bind), "candidate must rematch");
    let replacement = instantiate(to, &mut bind, rng);
    replace_at(t, &path, replacement)
}
