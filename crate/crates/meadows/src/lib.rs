//! Exact arithmetic for fields totalized with an absorbing error value.
//!
//! Division by zero yields a distinguished element `_|_` that propagates
//! through every operation. The crate provides:
//!
//! * [`values`] — executable models: rationals with `_|_`, prime fields
//!   with `_|_`, rationals with zero-totalized inverse, and the
//!   field/totalized-model constructions between them.
//! * [`terms`] — a small expression language (parser, printer, evaluator)
//!   over `0`, `1`, `bot`, variables, `+`, `*`, unary `-` and postfix `^-1`.
//! * [`poly`] — sparse multivariate polynomials over the rationals with
//!   exact gcd, derivatives and squarefree parts.
//! * [`normal`] — rewriting of any term to a fraction normal form
//!   `num * den^-1 + 0 * (sum of support variables)`.
//! * [`decide`] — a decision procedure for equational validity in all
//!   cancellation models of characteristic zero.
//! * [`fracpair`] — the initial model as integer pairs `p/q` under the
//!   congruence `(x*z)/(y*(z*z)) = x/(y*z)`.
//! * [`lawcheck`] — exhaustive and randomized checking of equations and
//!   conditional laws against the models.

pub mod decide;
pub mod fracpair;
pub mod lawcheck;
pub mod normal;
pub mod poly;
pub mod terms;
pub mod values;

pub use decide::{counterexample_search, equal_ccm0, equal_ccm0_with_budget, Reason, Verdict};
pub use fracpair::Fracpair;
pub use normal::{to_fraction, Fnf};
pub use poly::MultiPoly;
pub use terms::{eval, parse, Assignment, Term};
pub use values::{totalize_field, Model, QBot, Value};
