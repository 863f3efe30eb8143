//! Seeded value and term generators for randomized checking.
//!
//! Rational sampling draws numerators and denominators uniformly from
//! [-9, 9] and yields the absorbing value with probability 0.15. A small
//! set of boundary values per model (zero, one, minus one, the absorbing
//! value, and for fracpairs also `2/1` and `2/2`) is forced in first,
//! cartesian over up to three variables, since the interesting cases
//! cluster there.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use crate::fracpair::Fracpair;
use crate::terms::{Assignment, Term};
use crate::values::{Model, QBot, Value};

fn random_rational<R: Rng>(rng: &mut R) -> BigRational {
    let num = rng.gen_range(-9i64..=9);
    let den = loop {
        let d = rng.gen_range(-9i64..=9);
        if d != 0 {
            break d;
        }
    };
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// One random carrier element of the model.
pub fn sample_value<R: Rng>(m: &Model, rng: &mut R) -> Value {
    match m {
        Model::QBot => {
            if rng.gen_bool(0.15) {
                Value::Q(QBot::Bot)
            } else {
                Value::Q(QBot::Rat(random_rational(rng)))
            }
        }
        Model::QZero => Value::QZero(random_rational(rng)),
        Model::Fp(p) => {
            let r = rng.gen_range(0..=*p);
            if r == *p {
                m.bot().expect("prime-field model has an absorbing value")
            } else {
                m.parse_value(&r.to_string()).expect("residue literal")
            }
        }
        Model::FracpairZ => {
            if rng.gen_bool(0.15) {
                Value::Frac(Fracpair::bot())
            } else {
                let p = rng.gen_range(-1000i64..=1000);
                let q = rng.gen_range(-1000i64..=1000);
                Value::Frac(Fracpair::canon_i64(p, q))
            }
        }
    }
}

/// Boundary values tried before random sampling.
pub fn forced_values(m: &Model) -> Vec<Value> {
    match m {
        Model::QBot => vec![
            Value::Q(QBot::from_int(0)),
            Value::Q(QBot::from_int(1)),
            Value::Q(QBot::from_int(-1)),
            Value::Q(QBot::Bot),
        ],
        Model::QZero => vec![
            Value::QZero(BigRational::from_integer(BigInt::from(0))),
            Value::QZero(BigRational::from_integer(BigInt::from(1))),
            Value::QZero(BigRational::from_integer(BigInt::from(-1))),
        ],
        // exhaustive checking is the natural mode for finite carriers
        Model::Fp(_) => Vec::new(),
        Model::FracpairZ => vec![
            Value::Frac(Fracpair::from_int(0)),
            Value::Frac(Fracpair::from_int(1)),
            Value::Frac(Fracpair::from_int(-1)),
            Value::Frac(Fracpair::from_int(2)),
            Value::Frac(Fracpair::canon_i64(2, 2)),
            Value::Frac(Fracpair::bot()),
        ],
    }
}

/// All combinations of forced boundary values over the variables, in a
/// fixed order; empty when there are more than three variables.
pub fn forced_assignments(m: &Model, vars: &[String]) -> Vec<Assignment> {
    let values = forced_values(m);
    if vars.is_empty() || vars.len() > 3 || values.is_empty() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; vars.len()];
    'outer: loop {
        out.push(
            vars.iter()
                .zip(&idx)
                .map(|(v, i)| (v.clone(), values[*i].clone()))
                .collect(),
        );
        let mut pos = vars.len();
        loop {
            if pos == 0 {
                break 'outer;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < values.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
    out
}

/// A random term over the given variables, depth-bounded. Leaves are
/// mostly variables with occasional constants; `bot` appears rarely.
pub fn random_term<R: Rng>(rng: &mut R, vars: &[&str], max_depth: u32) -> Term {
    if max_depth == 0 || rng.gen_bool(0.25) {
        return match rng.gen_range(0..10) {
            0 => Term::Zero,
            1 | 2 => Term::One,
            3 if !vars.is_empty() => Term::var(vars[rng.gen_range(0..vars.len())]),
            4 => {
                if rng.gen_bool(0.2) {
                    Term::Bot
                } else {
                    Term::Zero
                }
            }
            _ if !vars.is_empty() => Term::var(vars[rng.gen_range(0..vars.len())]),
            _ => Term::One,
        };
    }
    let l = random_term(rng, vars, max_depth - 1);
    match rng.gen_range(0..10) {
        0..=3 => Term::add(l, random_term(rng, vars, max_depth - 1)),
        4..=6 => Term::mul(l, random_term(rng, vars, max_depth - 1)),
        7 => Term::neg(l),
        _ => Term::inv(l),
    }
}

/// A random assignment over the variables; the absorbing value appears
/// with probability `bot_prob`, other values are small rationals mapped
/// through the model's rational embedding.
pub fn random_assignment<R: Rng>(
    m: &Model,
    vars: &[&str],
    bot_prob: f64,
    rng: &mut R,
) -> Assignment {
    vars.iter()
        .map(|v| {
            let value = if bot_prob > 0.0 && rng.gen_bool(bot_prob) {
                m.bot().expect("model with absorbing value")
            } else {
                m.value_from_rational(&random_rational(rng))
                    .expect("rational embeds into every model")
            };
            (v.to_string(), value)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn forced_assignments_cover_the_cartesian_product() {
        let vars = vec!["x".to_string(), "y".to_string()];
        let combos = forced_assignments(&Model::QBot, &vars);
        assert_eq!(combos.len(), 16);
        assert!(combos.iter().all(|a| a.len() == 2));
    }

    #[test]
    fn sampling_is_deterministic_per_seed() {
        let mut a = StdRng::seed_from_u64(3);
        let mut b = StdRng::seed_from_u64(3);
        for _ in 0..100 {
            assert_eq!(
                sample_value(&Model::QBot, &mut a),
                sample_value(&Model::QBot, &mut b)
            );
        }
    }

    #[test]
    fn random_terms_respect_the_variable_pool() {
        let mut rng = StdRng::seed_from_u64(9);
        for _ in 0..200 {
            let t = random_term(&mut rng, &["x", "y"], 5);
            assert!(t.vars().iter().all(|v| v == "x" || v == "y"));
        }
    }
}
