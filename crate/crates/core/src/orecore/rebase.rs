use super::algebra::{AlgebraSpec, OperatorKind};
use super::poly::{Exponents, OreMonomial, OrePoly};
use crate::coeffs::{FieldElem, Rational};
use crate::error::{Error, Result};

/// Substitutes `d_i -> scale * d_i + offset` in every term. Scalars commute
/// with all operators, so the result is again in normal form.
pub fn affine_substitute(
    spec: &AlgebraSpec,
    a: &OrePoly,
    i: usize,
    scale: &FieldElem,
    offset: &FieldElem,
) -> OrePoly {
    let slot = spec.nvars() + i;
    let mut out = OrePoly::zero();
    for (m, c) in a.terms() {
        let b = m.exps()[slot];
        if b == 0 {
            out.add_term(m.clone(), c.clone());
            continue;
        }
        // (scale d + offset)^b = sum_k C(b,k) scale^k offset^(b-k) d^k
        let mut binom = Rational::one();
        for k in 0..=b {
            let coef = &(c * &scale.pow(k as u32)) * &offset.pow((b - k) as u32);
            let mut exps: Exponents = m.exps().into();
            exps[slot] = k;
            out.add_term(OreMonomial::from_exps(&exps), coef.scale(&binom));
            binom = &(&binom * &Rational::from((b - k) as i64)) / &Rational::from(k as i64 + 1);
        }
    }
    out
}

/// Rewrites `a` over the rebased generator `d_i - alpha`, i.e. substitutes
/// `d_i = (d_i - alpha) + alpha`. For the shift operator and `alpha = 1` this
/// expresses `a` through the difference operator `D = s - 1`.
///
/// `rebase(rebase(a, i, alpha), i, -alpha) == a`.
pub fn rebase(spec: &AlgebraSpec, a: &OrePoly, i: usize, alpha: &FieldElem) -> Result<OrePoly> {
    a.check(spec)?;
    if i >= spec.nops() {
        return Err(Error::Domain(format!("operator index {i} out of range")));
    }
    if alpha.kind() != spec.field() {
        return Err(Error::FieldMismatch(alpha.kind(), spec.field()));
    }
    Ok(affine_substitute(spec, a, i, &FieldElem::one(spec.field()), alpha))
}

/// The algebra in which a rebased element lives, when it is again one of the
/// supported kinds: shift and difference are exchanged by `alpha = 1` and
/// `alpha = -1` respectively, Weyl operators are unchanged by any constant.
pub fn rebased_kind(kind: OperatorKind, alpha: &FieldElem) -> Option<OperatorKind> {
    let minus_one = -&FieldElem::one(alpha.kind());
    match kind {
        _ if alpha.is_zero() => Some(kind),
        OperatorKind::Weyl => Some(OperatorKind::Weyl),
        OperatorKind::Shift if alpha.is_one() => Some(OperatorKind::Difference),
        OperatorKind::Difference if *alpha == minus_one => Some(OperatorKind::Shift),
        _ => None,
    }
}
