//! Executable models of totalized field arithmetic.
//!
//! Every model interprets the five signature operations (`add`, `mul`,
//! `neg`, `inv`) plus numerals over its carrier. The carriers:
//!
//! * [`Model::QBot`] — exact rationals extended with the absorbing value.
//! * [`Model::Fp`] — a prime field extended with the absorbing value.
//! * [`Model::QZero`] — exact rationals with zero-totalized inverse
//!   (`inv(0) = 0`, no absorbing value in the carrier).
//! * [`Model::FracpairZ`] — integer pairs under the fracpair congruence.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::fracpair::{self, Fracpair};

/// Errors raised by model construction and dispatch.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ModelError {
    #[error("values belong to different models")]
    ModelMismatch,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("model `{0}` has no absorbing value")]
    NoBottom(String),
    #[error("cannot parse `{0}` as a value of model `{1}`")]
    BadValue(String, String),
    #[error("{0}/{1} is not a residue modulo {2}")]
    NotAResidue(BigInt, BigInt, u64),
    #[error("unknown model `{0}` (expected qbot, qzero, fp:<prime> or fracpair)")]
    UnknownModel(String),
    #[error(transparent)]
    Fracpair(#[from] fracpair::FracpairError),
}

/// An element of the rationals extended with the absorbing value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum QBot {
    Bot,
    Rat(BigRational),
}

impl QBot {
    pub fn from_int(n: i64) -> Self {
        QBot::Rat(BigRational::from_integer(BigInt::from(n)))
    }

    /// Builds `num/den` in lowest terms. `den` must be nonzero.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        QBot::Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn is_bot(&self) -> bool {
        matches!(self, QBot::Bot)
    }

    pub fn add(&self, other: &QBot) -> QBot {
        match (self, other) {
            (QBot::Rat(a), QBot::Rat(b)) => QBot::Rat(a + b),
            _ => QBot::Bot,
        }
    }

    pub fn mul(&self, other: &QBot) -> QBot {
        match (self, other) {
            (QBot::Rat(a), QBot::Rat(b)) => QBot::Rat(a * b),
            _ => QBot::Bot,
        }
    }

    pub fn neg(&self) -> QBot {
        match self {
            QBot::Rat(a) => QBot::Rat(-a),
            QBot::Bot => QBot::Bot,
        }
    }

    /// Total inverse: `inv(0)` and `inv(bot)` are both the absorbing value.
    pub fn inv(&self) -> QBot {
        match self {
            QBot::Rat(a) if !a.is_zero() => QBot::Rat(a.recip()),
            _ => QBot::Bot,
        }
    }
}

impl fmt::Display for QBot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QBot::Bot => write!(f, "_|_"),
            QBot::Rat(r) => fmt_rational(r, f),
        }
    }
}

pub(crate) fn fmt_rational(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// An element of a prime field extended with the absorbing value.
/// `residue == None` encodes the absorbing value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FpBot {
    modulus: u64,
    residue: Option<u64>,
}

impl FpBot {
    /// A residue class; the modulus must be prime (checked by [`Model::fp`]).
    pub fn new(modulus: u64, value: i64) -> Self {
        let m = modulus as i64;
        let r = value.rem_euclid(m) as u64;
        FpBot { modulus, residue: Some(r) }
    }

    pub fn bot(modulus: u64) -> Self {
        FpBot { modulus, residue: None }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn residue(&self) -> Option<u64> {
        self.residue
    }

    pub fn is_bot(&self) -> bool {
        self.residue.is_none()
    }

    fn binop(&self, other: &FpBot, f: impl FnOnce(u64, u64, u64) -> u64) -> FpBot {
        debug_assert_eq!(self.modulus, other.modulus);
        let residue = match (self.residue, other.residue) {
            (Some(a), Some(b)) => Some(f(a, b, self.modulus)),
            _ => None,
        };
        FpBot { modulus: self.modulus, residue }
    }

    pub fn add(&self, other: &FpBot) -> FpBot {
        self.binop(other, |a, b, m| (a + b) % m)
    }

    pub fn mul(&self, other: &FpBot) -> FpBot {
        self.binop(other, |a, b, m| a * b % m)
    }

    pub fn neg(&self) -> FpBot {
        let residue = self.residue.map(|a| if a == 0 { 0 } else { self.modulus - a });
        FpBot { modulus: self.modulus, residue }
    }

    pub fn inv(&self) -> FpBot {
        let residue = match self.residue {
            Some(0) | None => None,
            Some(a) => Some(mod_inv(a, self.modulus)),
        };
        FpBot { modulus: self.modulus, residue }
    }
}

impl fmt::Display for FpBot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.residue {
            Some(r) => write!(f, "{}", r),
            None => write!(f, "_|_"),
        }
    }
}

/// Modular inverse by Fermat: `a^(p-2) mod p` for prime `p`, `a != 0`.
fn mod_inv(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u64 = 1;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// A value in one of the four models.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Value {
    Q(QBot),
    QZero(BigRational),
    Fp(FpBot),
    Frac(Fracpair),
}

impl Value {
    pub fn is_bot(&self) -> bool {
        match self {
            Value::Q(q) => q.is_bot(),
            Value::QZero(_) => false,
            Value::Fp(v) => v.is_bot(),
            Value::Frac(p) => p.is_bot(),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Q(q) => q.fmt(f),
            Value::QZero(r) => fmt_rational(r, f),
            Value::Fp(v) => v.fmt(f),
            Value::Frac(p) => p.fmt(f),
        }
    }
}

/// Tag selecting one of the executable models; all operations are total
/// on the model's carrier.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    QBot,
    QZero,
    Fp(u64),
    FracpairZ,
}

impl Model {
    /// A prime-field model with absorbing value; errors on composite moduli.
    pub fn fp(p: u64) -> Result<Model, ModelError> {
        if is_prime(p) {
            Ok(Model::Fp(p))
        } else {
            Err(ModelError::NotPrime(p))
        }
    }

    pub fn from_name(name: &str) -> Result<Model, ModelError> {
        match name {
            "qbot" => Ok(Model::QBot),
            "qzero" => Ok(Model::QZero),
            "fracpair" => Ok(Model::FracpairZ),
            _ => {
                if let Some(p) = name.strip_prefix("fp:") {
                    let p: u64 = p
                        .parse()
                        .map_err(|_| ModelError::UnknownModel(name.to_string()))?;
                    Model::fp(p)
                } else {
                    Err(ModelError::UnknownModel(name.to_string()))
                }
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            Model::QBot => "qbot".to_string(),
            Model::QZero => "qzero".to_string(),
            Model::Fp(p) => format!("fp:{}", p),
            Model::FracpairZ => "fracpair".to_string(),
        }
    }

    pub fn zero(&self) -> Value {
        match self {
            Model::QBot => Value::Q(QBot::from_int(0)),
            Model::QZero => Value::QZero(BigRational::zero()),
            Model::Fp(p) => Value::Fp(FpBot::new(*p, 0)),
            Model::FracpairZ => Value::Frac(Fracpair::from_int(0)),
        }
    }

    pub fn one(&self) -> Value {
        match self {
            Model::QBot => Value::Q(QBot::from_int(1)),
            Model::QZero => Value::QZero(BigRational::one()),
            Model::Fp(p) => Value::Fp(FpBot::new(*p, 1)),
            Model::FracpairZ => Value::Frac(Fracpair::from_int(1)),
        }
    }

    /// The absorbing value, or an error for carriers without one.
    pub fn bot(&self) -> Result<Value, ModelError> {
        match self {
            Model::QBot => Ok(Value::Q(QBot::Bot)),
            Model::QZero => Err(ModelError::NoBottom(self.name())),
            Model::Fp(p) => Ok(Value::Fp(FpBot::bot(*p))),
            Model::FracpairZ => Ok(Value::Frac(Fracpair::bot())),
        }
    }

    pub fn contains(&self, v: &Value) -> bool {
        match (self, v) {
            (Model::QBot, Value::Q(_)) => true,
            (Model::QZero, Value::QZero(_)) => true,
            (Model::Fp(p), Value::Fp(x)) => x.modulus() == *p,
            (Model::FracpairZ, Value::Frac(_)) => true,
            _ => false,
        }
    }

    fn check2(&self, a: &Value, b: &Value) -> Result<(), ModelError> {
        if self.contains(a) && self.contains(b) {
            Ok(())
        } else {
            Err(ModelError::ModelMismatch)
        }
    }

    fn check1(&self, a: &Value) -> Result<(), ModelError> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(ModelError::ModelMismatch)
        }
    }

    pub fn add(&self, a: &Value, b: &Value) -> Result<Value, ModelError> {
        self.check2(a, b)?;
        Ok(match (a, b) {
            (Value::Q(x), Value::Q(y)) => Value::Q(x.add(y)),
            (Value::QZero(x), Value::QZero(y)) => Value::QZero(x + y),
            (Value::Fp(x), Value::Fp(y)) => Value::Fp(x.add(y)),
            (Value::Frac(x), Value::Frac(y)) => Value::Frac(x.add(y)?),
            _ => unreachable!(),
        })
    }

    pub fn mul(&self, a: &Value, b: &Value) -> Result<Value, ModelError> {
        self.check2(a, b)?;
        Ok(match (a, b) {
            (Value::Q(x), Value::Q(y)) => Value::Q(x.mul(y)),
            (Value::QZero(x), Value::QZero(y)) => Value::QZero(x * y),
            (Value::Fp(x), Value::Fp(y)) => Value::Fp(x.mul(y)),
            (Value::Frac(x), Value::Frac(y)) => Value::Frac(x.mul(y)?),
            _ => unreachable!(),
        })
    }

    pub fn neg(&self, a: &Value) -> Result<Value, ModelError> {
        self.check1(a)?;
        Ok(match a {
            Value::Q(x) => Value::Q(x.neg()),
            Value::QZero(x) => Value::QZero(-x),
            Value::Fp(x) => Value::Fp(x.neg()),
            Value::Frac(x) => Value::Frac(x.neg()),
        })
    }

    pub fn inv(&self, a: &Value) -> Result<Value, ModelError> {
        self.check1(a)?;
        Ok(match a {
            Value::Q(x) => Value::Q(x.inv()),
            // Zero-totalized inverse: inv(0) = 0.
            Value::QZero(x) => Value::QZero(if x.is_zero() { x.clone() } else { x.recip() }),
            Value::Fp(x) => Value::Fp(x.inv()),
            Value::Frac(x) => Value::Frac(x.inv()?),
        })
    }

    /// The numeral chain `0`, `1`, `n-1 + 1`, folded through the model's
    /// own addition.
    pub fn numeral(&self, n: u64) -> Value {
        let mut acc = self.zero();
        let one = self.one();
        for _ in 0..n {
            acc = self.add(&acc, &one).expect("numeral operands are same-model");
        }
        acc
    }

    /// Maps an exact rational into the model: `a/b` becomes
    /// `a * inv(b)`, so a denominator hit by the characteristic yields
    /// the absorbing value.
    pub fn value_from_rational(&self, r: &BigRational) -> Result<Value, ModelError> {
        match self {
            Model::QBot => Ok(Value::Q(QBot::Rat(r.clone()))),
            Model::QZero => Ok(Value::QZero(r.clone())),
            Model::Fp(p) => {
                let num = big_mod(r.numer(), *p);
                let den = big_mod(r.denom(), *p);
                if den == 0 {
                    Ok(Value::Fp(FpBot::bot(*p)))
                } else {
                    let v = num * mod_inv(den, *p) % *p;
                    Ok(Value::Fp(FpBot { modulus: *p, residue: Some(v) }))
                }
            }
            Model::FracpairZ => Ok(Value::Frac(Fracpair::canon(
                r.numer().clone(),
                r.denom().clone(),
            )?)),
        }
    }

    /// Parses the textual value forms: `p/q`, `p`, `_|_` or `bot`.
    pub fn parse_value(&self, text: &str) -> Result<Value, ModelError> {
        let bad = || ModelError::BadValue(text.to_string(), self.name());
        let text = text.trim();
        if text == "_|_" || text == "bot" {
            return self.bot();
        }
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    // Only the fracpair model has q = 0 representatives.
                    if let Model::FracpairZ = self {
                        return Ok(Value::Frac(Fracpair::canon(n, d)?));
                    }
                    return Err(bad());
                }
                (n, d)
            }
            None => {
                let n: BigInt = text.parse().map_err(|_| bad())?;
                (n, BigInt::one())
            }
        };
        match self {
            Model::FracpairZ => Ok(Value::Frac(Fracpair::canon(num, den)?)),
            Model::Fp(p) => {
                let d = big_mod(&den, *p);
                if d == 0 {
                    return Err(ModelError::NotAResidue(num, den, *p));
                }
                let v = big_mod(&num, *p) * mod_inv(d, *p) % *p;
                Ok(Value::Fp(FpBot { modulus: *p, residue: Some(v) }))
            }
            _ => self.value_from_rational(&BigRational::new(num, den)),
        }
    }

    /// Finite carriers in enumeration order (residues ascending, then the
    /// absorbing value); `None` for infinite carriers.
    pub fn carrier(&self) -> Option<Vec<Value>> {
        match self {
            Model::Fp(p) => {
                let mut vs: Vec<Value> =
                    (0..*p).map(|r| Value::Fp(FpBot { modulus: *p, residue: Some(r) })).collect();
                vs.push(Value::Fp(FpBot::bot(*p)));
                Some(vs)
            }
            _ => None,
        }
    }
}

fn big_mod(n: &BigInt, p: u64) -> u64 {
    let m = n % BigInt::from(p);
    let m = if m.is_negative() { m + BigInt::from(p) } else { m };
    let (_, digits) = m.to_u64_digits();
    *digits.first().unwrap_or(&0)
}

/// Extends the prime field `F_p` with the absorbing value.
pub fn totalize_field(p: u64) -> Result<Model, ModelError> {
    Model::fp(p)
}

/// Operation tables of a finite involutive meadow: carrier `{0, .., p-1}`
/// with `inv(0) = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeadowTables {
    pub modulus: u64,
    pub add: Vec<Vec<u64>>,
    pub mul: Vec<Vec<u64>>,
    pub neg: Vec<u64>,
    pub inv: Vec<u64>,
}

/// Operation tables of a finite model with absorbing value; index `p`
/// encodes the absorbing element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BotTables {
    pub modulus: u64,
    pub add: Vec<Vec<u64>>,
    pub mul: Vec<Vec<u64>>,
    pub neg: Vec<u64>,
    pub inv: Vec<u64>,
}

/// Removes the absorbing value from a prime-field model and redefines
/// `inv(0) = 0`, producing the involutive operation tables.
pub fn strip_bottom(m: &Model) -> Result<MeadowTables, ModelError> {
    let p = match m {
        Model::Fp(p) => *p,
        _ => return Err(ModelError::ModelMismatch),
    };
    let n = p as usize;
    let mut add = vec![vec![0u64; n]; n];
    let mut mul = vec![vec![0u64; n]; n];
    let mut neg = vec![0u64; n];
    let mut inv = vec![0u64; n];
    for a in 0..p {
        let fa = FpBot::new(p, a as i64);
        neg[a as usize] = fa.neg().residue().unwrap();
        inv[a as usize] = if a == 0 { 0 } else { fa.inv().residue().unwrap() };
        for b in 0..p {
            let fb = FpBot::new(p, b as i64);
            add[a as usize][b as usize] = fa.add(&fb).residue().unwrap();
            mul[a as usize][b as usize] = fa.mul(&fb).residue().unwrap();
        }
    }
    Ok(MeadowTables { modulus: p, add, mul, neg, inv })
}

/// Re-adjoins an absorbing value to involutive tables: one extra carrier
/// element (index `p`) absorbing every operation, and `inv(0)` redirected
/// to it.
pub fn totalize_tables(t: &MeadowTables) -> BotTables {
    let p = t.modulus as usize;
    let bot = p as u64;
    let n = p + 1;
    let mut add = vec![vec![bot; n]; n];
    let mut mul = vec![vec![bot; n]; n];
    let mut neg = vec![bot; n];
    let mut inv = vec![bot; n];
    for a in 0..p {
        neg[a] = t.neg[a];
        inv[a] = if a == 0 { bot } else { t.inv[a] };
        for b in 0..p {
            add[a][b] = t.add[a][b];
            mul[a][b] = t.mul[a][b];
        }
    }
    BotTables { modulus: t.modulus, add, mul, neg, inv }
}

/// The operation tables of a finite model with absorbing value, as
/// computed directly from the model's own operations.
pub fn bot_tables(m: &Model) -> Result<BotTables, ModelError> {
    let p = match m {
        Model::Fp(p) => *p,
        _ => return Err(ModelError::ModelMismatch),
    };
    let elems: Vec<FpBot> = (0..p)
        .map(|r| FpBot { modulus: p, residue: Some(r) })
        .chain(std::iter::once(FpBot::bot(p)))
        .collect();
    let idx = |v: &FpBot| v.residue().unwrap_or(p);
    let n = elems.len();
    let mut add = vec![vec![0u64; n]; n];
    let mut mul = vec![vec![0u64; n]; n];
    let mut neg = vec![0u64; n];
    let mut inv = vec![0u64; n];
    for (i, a) in elems.iter().enumerate() {
        neg[i] = idx(&a.neg());
        inv[i] = idx(&a.inv());
        for (j, b) in elems.iter().enumerate() {
            add[i][j] = idx(&a.add(b));
            mul[i][j] = idx(&a.mul(b));
        }
    }
    Ok(BotTables { modulus: p, add, mul, neg, inv })
}

/// Evaluates a term over involutive tables; assignments map variables to
/// carrier indices. The term may not contain `bot`.
pub fn eval_on_tables(
    t: &crate::terms::Term,
    asg: &BTreeMap<String, u64>,
    tables: &MeadowTables,
) -> Result<u64, ModelError> {
    use crate::terms::Term;
    Ok(match t {
        Term::Zero => 0,
        Term::One => 1 % tables.modulus,
        Term::Bot => return Err(ModelError::NoBottom("involutive tables".to_string())),
        Term::Var(v) => *asg
            .get(v)
            .ok_or_else(|| ModelError::BadValue(v.clone(), "tables".to_string()))?,
        Term::Add(l, r) => {
            let a = eval_on_tables(l, asg, tables)?;
            let b = eval_on_tables(r, asg, tables)?;
            tables.add[a as usize][b as usize]
        }
        Term::Mul(l, r) => {
            let a = eval_on_tables(l, asg, tables)?;
            let b = eval_on_tables(r, asg, tables)?;
            tables.mul[a as usize][b as usize]
        }
        Term::Neg(x) => tables.neg[eval_on_tables(x, asg, tables)? as usize],
        Term::Inv(x) => tables.inv[eval_on_tables(x, asg, tables)? as usize],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Value {
        Value::Q(QBot::ratio(n, d))
    }

    #[test]
    fn rational_addition_stays_reduced() {
        let m = Model::QBot;
        let v = m.add(&q(1, 2), &q(1, 3)).unwrap();
        assert_eq!(v, q(5, 6));
        assert_eq!(v.to_string(), "5/6");
    }

    #[test]
    fn bot_absorbs_every_operation() {
        let m = Model::QBot;
        let bot = m.bot().unwrap();
        assert_eq!(m.add(&bot, &q(7, 1)).unwrap(), bot);
        assert_eq!(m.mul(&m.zero(), &bot).unwrap(), bot);
        assert_eq!(m.neg(&bot).unwrap(), bot);
        assert_eq!(m.inv(&bot).unwrap(), bot);
    }

    #[test]
    fn inverse_of_zero_is_bot() {
        let m = Model::QBot;
        assert_eq!(m.inv(&m.zero()).unwrap(), m.bot().unwrap());
    }

    #[test]
    fn zero_totalized_inverse() {
        let m = Model::QZero;
        assert_eq!(m.inv(&m.zero()).unwrap(), m.zero());
        let half = m.parse_value("1/2").unwrap();
        assert_eq!(m.inv(&half).unwrap(), m.parse_value("2").unwrap());
    }

    #[test]
    fn fp_arithmetic() {
        let m = Model::fp(5).unwrap();
        let three = m.parse_value("3").unwrap();
        let four = m.parse_value("4").unwrap();
        assert_eq!(m.add(&three, &four).unwrap().to_string(), "2");
        let two = m.parse_value("2").unwrap();
        assert_eq!(m.mul(&two, &three).unwrap().to_string(), "1");
        assert_eq!(m.inv(&three).unwrap(), two);
    }

    #[test]
    fn totalize_rejects_composites() {
        assert_eq!(totalize_field(4).unwrap_err(), ModelError::NotPrime(4));
        assert!(totalize_field(2).is_ok());
        assert!(totalize_field(5).is_ok());
    }

    #[test]
    fn numerals() {
        assert_eq!(Model::QBot.numeral(5).to_string(), "5");
        assert_eq!(Model::fp(5).unwrap().numeral(5).to_string(), "0");
        assert_eq!(Model::QBot.numeral(0), Model::QBot.zero());
    }

    #[test]
    fn carrier_of_f2() {
        let m = Model::fp(2).unwrap();
        let c = m.carrier().unwrap();
        assert_eq!(c.len(), 3);
        assert!(c.contains(&m.bot().unwrap()));
    }

    #[test]
    fn strip_then_totalize_round_trips() {
        for p in [2u64, 3, 5, 7] {
            let m = Model::fp(p).unwrap();
            let stripped = strip_bottom(&m).unwrap();
            assert_eq!(totalize_tables(&stripped), bot_tables(&m).unwrap());
        }
    }

    #[test]
    fn stripped_inverse_is_involutive() {
        let t = strip_bottom(&Model::fp(5).unwrap()).unwrap();
        assert_eq!(t.inv[0], 0);
        for a in 0..5u64 {
            assert_eq!(t.inv[t.inv[a as usize] as usize], a);
        }
    }

    #[test]
    fn model_mismatch_is_rejected() {
        let m = Model::QBot;
        let foreign = Model::fp(5).unwrap().zero();
        assert_eq!(m.add(&m.zero(), &foreign).unwrap_err(), ModelError::ModelMismatch);
    }

    #[test]
    fn inv_inv_identity_on_finite_carrier() {
        // inv(inv(x)) = x + 0 * inv(x), exhaustively
        for p in [2u64, 3, 5, 7] {
            let m = Model::fp(p).unwrap();
            for x in m.carrier().unwrap() {
                let lhs = m.inv(&m.inv(&x).unwrap()).unwrap();
                let rhs = m
                    .add(&x, &m.mul(&m.zero(), &m.inv(&x).unwrap()).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn bot_absorbs_exhaustively_on_finite_carriers() {
        for p in [2u64, 3, 5, 7] {
            let m = Model::fp(p).unwrap();
            let bot = m.bot().unwrap();
            assert_eq!(m.neg(&bot).unwrap(), bot);
            assert_eq!(m.inv(&bot).unwrap(), bot);
            for v in m.carrier().unwrap() {
                assert_eq!(m.add(&v, &bot).unwrap(), bot);
                assert_eq!(m.add(&bot, &v).unwrap(), bot);
                assert_eq!(m.mul(&v, &bot).unwrap(), bot);
                assert_eq!(m.mul(&bot, &v).unwrap(), bot);
            }
        }
    }

    #[test]
    fn rational_results_stay_canonical() {
        use num_integer::Integer;
        use num_traits::Signed;
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};

        let m = Model::QBot;
        let mut rng = StdRng::seed_from_u64(17);
        let assert_canonical = |v: &Value| {
            if let Value::Q(QBot::Rat(r)) = v {
                assert!(r.denom().is_positive());
                assert!(r.numer().gcd(r.denom()).is_one() || r.numer().is_zero());
            }
        };
        for _ in 0..2000 {
            let a = q(rng.gen_range(-30..=30), rng.gen_range(1..=30));
            let b = if rng.gen_bool(0.1) { m.bot().unwrap() } else { q(rng.gen_range(-30..=30), rng.gen_range(1..=30)) };
            for v in [
                m.add(&a, &b).unwrap(),
                m.mul(&a, &b).unwrap(),
                m.neg(&b).unwrap(),
                m.inv(&b).unwrap(),
            ] {
                assert_canonical(&v);
            }
            // inv(inv(x)) = x + 0 * inv(x)
            let lhs = m.inv(&m.inv(&b).unwrap()).unwrap();
            let rhs = m.add(&b, &m.mul(&m.zero(), &m.inv(&b).unwrap()).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn value_parsing_round_trips() {
        let m = Model::QBot;
        for text in ["5/6", "-3", "0", "_|_"] {
            let v = m.parse_value(text).unwrap();
            assert_eq!(v.to_string(), text.to_string());
        }
        assert_eq!(m.parse_value("bot").unwrap(), m.bot().unwrap());
        assert!(m.parse_value("1/0").is_err());
        assert!(Model::QZero.parse_value("bot").is_err());
    }
}
