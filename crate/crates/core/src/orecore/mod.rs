//! Ore algebras in normal form, their action on polynomial(-exponential)
//! signals, and operator rebasing.

mod action;
mod algebra;
mod poly;
mod rebase;

pub use action::{act, action_axioms_check, check_lambda, PolySignal};
pub(crate) use action::diff_var;
pub use algebra::{AlgebraFamily, AlgebraSpec, Operator, OperatorKind};
pub use poly::{leading_twist, mul, pow, Exponents, OreMonomial, OrePoly};
pub(crate) use poly::{commute as poly_commute, mul_unchecked};
pub use rebase::{affine_substitute, rebase, rebased_kind};
