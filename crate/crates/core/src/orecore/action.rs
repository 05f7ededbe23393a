use std::collections::HashMap;

use super::algebra::{AlgebraFamily, AlgebraSpec, OperatorKind};
use super::poly::{mul_unchecked, Exponents, OreMonomial, OrePoly};
use crate::coeffs::{FieldElem, Rational};
use crate::error::{Error, Result};

/// A polynomial signal `p(t)`, optionally multiplied by an exponential
/// `exp_lambda`. Under Weyl operators `exp_lambda = exp(sum lambda_i t_i)`;
/// under discrete operators it is `prod lambda_i^(t_i)`.
///
/// The exponential is carried symbolically: `poly` holds only the
/// polynomial part.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PolySignal {
    pub poly: OrePoly,
    pub lambda: Option<Vec<FieldElem>>,
}

impl PolySignal {
    pub fn new(spec: &AlgebraSpec, poly: OrePoly) -> Result<Self> {
        if !poly.is_polynomial(spec) {
            return Err(Error::Domain("a signal must not contain operators".into()));
        }
        poly.check(spec)?;
        Ok(PolySignal { poly, lambda: None })
    }

    pub fn with_exp(spec: &AlgebraSpec, poly: OrePoly, lambda: Vec<FieldElem>) -> Result<Self> {
        let mut s = PolySignal::new(spec, poly)?;
        s.lambda = Some(lambda);
        check_lambda(spec, s.lambda.as_deref())?;
        Ok(s)
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Frequency as seen by the algebra: the implicit value for a plain
    /// polynomial is 0 under Weyl operators and 1 under discrete ones.
    pub fn effective_lambda(&self, spec: &AlgebraSpec) -> Vec<FieldElem> {
        match &self.lambda {
            Some(l) => l.clone(),
            None => {
                let v = if spec.ops().iter().any(|op| op.kind.is_discrete()) { 1 } else { 0 };
                vec![FieldElem::from_int(spec.field(), v); spec.nvars()]
            }
        }
    }
}

/// Checks that an exponential factor is meaningful for `spec`.
pub fn check_lambda(spec: &AlgebraSpec, lambda: Option<&[FieldElem]>) -> Result<()> {
    let Some(lambda) = lambda else { return Ok(()) };
    if lambda.len() != spec.nvars() {
        return Err(Error::DimensionMismatch {
            expected: spec.nvars(),
            found: lambda.len(),
        });
    }
    for l in lambda {
        if l.kind() != spec.field() {
            return Err(Error::FieldMismatch(l.kind(), spec.field()));
        }
    }
    match spec.family() {
        AlgebraFamily::Sw => {
            return Err(Error::Unsupported(
                "exponential signals are not defined for the mixed SW algebra".into(),
            ))
        }
        AlgebraFamily::QDiff => {
            return Err(Error::Unsupported(
                "exponential signals are not defined for the q-difference algebra".into(),
            ))
        }
        _ => {}
    }
    for op in spec.ops() {
        if op.kind.is_discrete() && lambda[op.var].is_zero() {
            return Err(Error::Domain(format!(
                "discrete exponential needs a nonzero base for t{}",
                op.var + 1
            )));
        }
    }
    Ok(())
}

/// `f(t) -> f(t + e_j)`
pub(crate) fn shift_var(f: &OrePoly, j: usize) -> OrePoly {
    let mut out = OrePoly::zero();
    for (m, c) in f.terms() {
        let k = m.exps()[j];
        let mut binom = Rational::one();
        for i in 0..=k {
            // C(k, i) t_j^i
            let mut exps: Exponents = m.exps().into();
            exps[j] = i;
            out.add_term(OreMonomial::from_exps(&exps), c.scale(&binom));
            binom = &(&binom * &Rational::from((k - i) as i64)) / &Rational::from(i as i64 + 1);
        }
    }
    out
}

/// `f(t) -> f(.., q t_j, ..)`
pub(crate) fn qscale_var(f: &OrePoly, j: usize) -> OrePoly {
    let q = FieldElem::q();
    OrePoly::from_terms(f.terms().map(|(m, c)| (m.clone(), c * &q.pow(m.exps()[j] as u32))))
}

/// `df/dt_j`
pub(crate) fn diff_var(f: &OrePoly, j: usize) -> OrePoly {
    let mut out = OrePoly::zero();
    for (m, c) in f.terms() {
        let k = m.exps()[j];
        if k == 0 {
            continue;
        }
        let mut exps: Exponents = m.exps().into();
        exps[j] -= 1;
        out.add_term(OreMonomial::from_exps(&exps), c.scale(&Rational::from(k as i64)));
    }
    out
}

/// Applies a single operator to the polynomial part of `f * exp_lambda`.
fn apply_op(spec: &AlgebraSpec, i: usize, f: &OrePoly, lambda: Option<&[FieldElem]>) -> OrePoly {
    let op = spec.op(i);
    let j = op.var;
    match op.kind {
        OperatorKind::Weyl => {
            let d = diff_var(f, j);
            match lambda {
                Some(l) if !l[j].is_zero() => d.add(&f.scale(&l[j])),
                _ => d,
            }
        }
        OperatorKind::Shift => {
            let s = shift_var(f, j);
            match lambda {
                Some(l) => s.scale(&l[j]),
                None => s,
            }
        }
        OperatorKind::Difference => {
            let s = shift_var(f, j);
            let s = match lambda {
                Some(l) => s.scale(&l[j]),
                None => s,
            };
            s.sub(f)
        }
        OperatorKind::QDiff => qscale_var(f, j).sub(f),
    }
}

/// The action `a • p`. The exponential factor of `p` is preserved and the
/// polynomial part carries the twist.
pub fn act(spec: &AlgebraSpec, a: &OrePoly, p: &PolySignal) -> Result<PolySignal> {
    a.check(spec)?;
    p.poly.check(spec)?;
    if !p.poly.is_polynomial(spec) {
        return Err(Error::Domain("a signal must not contain operators".into()));
    }
    check_lambda(spec, p.lambda.as_deref())?;
    Ok(PolySignal {
        poly: act_poly(spec, a, &p.poly, p.lambda.as_deref()),
        lambda: p.lambda.clone(),
    })
}

/// Action on a bare polynomial part; inputs are assumed valid.
pub(crate) fn act_poly(spec: &AlgebraSpec, a: &OrePoly, f: &OrePoly, lambda: Option<&[FieldElem]>) -> OrePoly {
    let n = spec.nvars();
    let mut cache: HashMap<Vec<u16>, OrePoly> = HashMap::new();
    let mut out = OrePoly::zero();
    for (m, c) in a.terms() {
        let beta = m.beta(spec).to_vec();
        let applied = cache.entry(beta.clone()).or_insert_with(|| {
            let mut g = f.clone();
            for (i, &e) in beta.iter().enumerate() {
                for _ in 0..e {
                    if g.is_zero() {
                        break;
                    }
                    g = apply_op(spec, i, &g, lambda);
                }
            }
            g
        });
        if applied.is_zero() {
            continue;
        }
        let alpha_only = OreMonomial::from_parts(&m.exps()[..n], &vec![0; spec.nops()]);
        for (pm, pc) in applied.terms() {
            out.add_term(alpha_only.mul(pm), c * pc);
        }
    }
    out
}

/// Checks the three module axioms of the action on concrete inputs:
/// `(o1 o2)•p = o1•(o2•p)`, `(o1+o2)•p = o1•p + o2•p`, `o1•(p+q) = o1•p + o1•q`.
/// `p` and `q` must share their exponential factor.
pub fn action_axioms_check(
    spec: &AlgebraSpec,
    o1: &OrePoly,
    o2: &OrePoly,
    p: &PolySignal,
    q: &PolySignal,
) -> Result<bool> {
    if p.lambda != q.lambda {
        return Err(Error::Domain("signals with different exponentials cannot be added".into()));
    }
    o1.check(spec)?;
    o2.check(spec)?;
    let prod = mul_unchecked(spec, o1, o2);
    let lhs1 = act(spec, &prod, p)?;
    let rhs1 = act(spec, o1, &act(spec, o2, p)?)?;
    let lhs2 = act(spec, &o1.add(o2), p)?;
    let rhs2 = act(spec, o1, p)?.poly.add(&act(spec, o2, p)?.poly);
    let sum = PolySignal {
        poly: p.poly.add(&q.poly),
        lambda: p.lambda.clone(),
    };
    let lhs3 = act(spec, o1, &sum)?;
    let rhs3 = act(spec, o1, p)?.poly.add(&act(spec, o1, q)?.poly);
    Ok(lhs1 == rhs1 && lhs2.poly == rhs2 && lhs3.poly == rhs3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orecore::poly::pow;

    fn t(spec: &AlgebraSpec) -> OrePoly {
        OrePoly::var(spec, 0)
    }

    fn sig(spec: &AlgebraSpec, p: OrePoly) -> PolySignal {
        PolySignal::new(spec, p).unwrap()
    }

    #[test]
    fn second_derivative_of_cube() {
        let w = AlgebraSpec::weyl(1);
        let d2 = pow(&w, &OrePoly::op(&w, 0), 2);
        let t3 = pow(&w, &t(&w), 3);
        let r = act(&w, &d2, &sig(&w, t3)).unwrap();
        assert_eq!(r.poly, t(&w).scale(&FieldElem::from_int(w.field(), 6)));
    }

    #[test]
    fn forward_difference_of_square() {
        let s = AlgebraSpec::difference(1);
        let t2 = pow(&s, &t(&s), 2);
        let r = act(&s, &OrePoly::op(&s, 0), &sig(&s, t2)).unwrap();
        let expected = t(&s).scale(&FieldElem::from_int(s.field(), 2)).add(&OrePoly::one(&s));
        assert_eq!(r.poly, expected);
    }

    #[test]
    fn exponential_twists() {
        let w = AlgebraSpec::weyl(1);
        let two = FieldElem::from_int(w.field(), 2);
        let p = PolySignal::with_exp(&w, t(&w), vec![two.clone()]).unwrap();
        let r = act(&w, &OrePoly::op(&w, 0), &p).unwrap();
        assert_eq!(r.poly, OrePoly::one(&w).add(&t(&w).scale(&two)));
        assert_eq!(r.lambda, Some(vec![two]));

        let s = AlgebraSpec::difference(1);
        let three = FieldElem::from_int(s.field(), 3);
        let p = PolySignal::with_exp(&s, t(&s), vec![three]).unwrap();
        let r = act(&s, &OrePoly::op(&s, 0), &p).unwrap();
        let expected = t(&s).scale(&FieldElem::from_int(s.field(), 2)).add(&OrePoly::from_int(&s, 3));
        assert_eq!(r.poly, expected);
    }

    #[test]
    fn zero_base_rejected_for_discrete() {
        let s = AlgebraSpec::difference(1);
        let err = PolySignal::with_exp(&s, t(&s), vec![FieldElem::from_int(s.field(), 0)]);
        assert!(matches!(err, Err(Error::Domain(_))));
    }

    #[test]
    fn operators_kill_constants_except_shift() {
        for spec in [AlgebraSpec::weyl(2), AlgebraSpec::difference(2), AlgebraSpec::qdiff(2), AlgebraSpec::sw(2)] {
            for i in 0..spec.nops() {
                let r = act(&spec, &OrePoly::op(&spec, i), &sig(&spec, OrePoly::one(&spec))).unwrap();
                assert!(r.is_zero());
            }
        }
        let sh = AlgebraSpec::shift(2);
        for i in 0..2 {
            let r = act(&sh, &OrePoly::op(&sh, i), &sig(&sh, OrePoly::one(&sh))).unwrap();
            assert_eq!(r.poly, OrePoly::one(&sh));
        }
    }

    #[test]
    fn axioms_on_named_cases() {
        let w = AlgebraSpec::weyl(1);
        let p = sig(&w, pow(&w, &t(&w), 2));
        assert!(action_axioms_check(&w, &OrePoly::op(&w, 0), &t(&w), &p, &p).unwrap());

        let s = AlgebraSpec::difference(1);
        let d = OrePoly::op(&s, 0);
        let o1 = pow(&s, &d, 2);
        let o2 = mul_unchecked(&s, &t(&s), &d);
        let p = sig(&s, pow(&s, &t(&s), 3));
        let q = sig(&s, t(&s));
        assert!(action_axioms_check(&s, &o1, &o2, &p, &q).unwrap());
        assert!(action_axioms_check(&s, &OrePoly::zero(), &OrePoly::zero(), &p, &q).unwrap());
    }
}
