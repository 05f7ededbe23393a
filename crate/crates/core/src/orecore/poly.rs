use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};

use smallvec::SmallVec;

use super::algebra::{AlgebraSpec, OperatorKind};
use crate::coeffs::{FieldElem, FieldKind};
use crate::error::{Error, Result};

pub type Exponents = SmallVec<[u16; 8]>;

/// `t^alpha d^beta`, stored as one combined exponent vector: the `n` variable
/// exponents followed by the `s` operator exponents.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct OreMonomial {
    exps: Exponents,
}

impl OreMonomial {
    pub fn one(width: usize) -> Self {
        OreMonomial {
            exps: SmallVec::from_elem(0, width),
        }
    }

    pub fn from_exps(exps: &[u16]) -> Self {
        OreMonomial {
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn from_parts(alpha: &[u16], beta: &[u16]) -> Self {
        let mut exps: Exponents = SmallVec::from_slice(alpha);
        exps.extend_from_slice(beta);
        OreMonomial { exps }
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn alpha<'a>(&'a self, spec: &AlgebraSpec) -> &'a [u16] {
        &self.exps[..spec.nvars()]
    }

    pub fn beta<'a>(&'a self, spec: &AlgebraSpec) -> &'a [u16] {
        &self.exps[spec.nvars()..]
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Exponent-wise sum.
    pub fn mul(&self, other: &OreMonomial) -> OreMonomial {
        OreMonomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn divides(&self, other: &OreMonomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient(&self, other: &OreMonomial) -> OreMonomial {
        OreMonomial {
            exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn lcm(&self, other: &OreMonomial) -> OreMonomial {
        OreMonomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    pub fn is_coprime(&self, other: &OreMonomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// An element of an Ore algebra in normal form `sum c t^alpha d^beta`.
///
/// Terms are kept in a map keyed by monomial, so two polynomials are equal
/// exactly when their term maps are equal. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct OrePoly {
    terms: BTreeMap<OreMonomial, FieldElem>,
}

impl OrePoly {
    pub fn zero() -> Self {
        OrePoly::default()
    }

    pub fn constant(spec: &AlgebraSpec, c: FieldElem) -> Self {
        OrePoly::term(OreMonomial::one(spec.width()), c)
    }

    pub fn one(spec: &AlgebraSpec) -> Self {
        OrePoly::constant(spec, FieldElem::one(spec.field()))
    }

    pub fn from_int(spec: &AlgebraSpec, n: i64) -> Self {
        OrePoly::constant(spec, FieldElem::from_int(spec.field(), n))
    }

    pub fn term(m: OreMonomial, c: FieldElem) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        OrePoly { terms }
    }

    /// The variable `t_{j+1}`.
    pub fn var(spec: &AlgebraSpec, j: usize) -> Self {
        let mut m = OreMonomial::one(spec.width());
        m.exps[j] = 1;
        OrePoly::term(m, FieldElem::one(spec.field()))
    }

    /// The operator with index `i`.
    pub fn op(spec: &AlgebraSpec, i: usize) -> Self {
        let mut m = OreMonomial::one(spec.width());
        m.exps[spec.nvars() + i] = 1;
        OrePoly::term(m, FieldElem::one(spec.field()))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (OreMonomial, FieldElem)>) -> Self {
        let mut p = OrePoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&OreMonomial, &FieldElem)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (OreMonomial, FieldElem)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, m: &OreMonomial) -> Option<&FieldElem> {
        self.terms.get(m)
    }

    /// Adds `c * m` in place.
    pub fn add_term(&mut self, m: OreMonomial, c: FieldElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &OrePoly) -> OrePoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &OrePoly) -> OrePoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> OrePoly {
        OrePoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &FieldElem) -> OrePoly {
        if c.is_zero() {
            return OrePoly::zero();
        }
        OrePoly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Highest total degree of a term in the combined exponents; 0 for zero.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(OreMonomial::total_degree).max().unwrap_or(0)
    }

    /// True if no term contains an operator.
    pub fn is_polynomial(&self, spec: &AlgebraSpec) -> bool {
        self.terms.keys().all(|m| m.beta(spec).iter().all(|&e| e == 0))
    }

    /// Field tag of the coefficients, if any term is present.
    pub fn field(&self) -> Option<FieldKind> {
        self.terms.values().next().map(FieldElem::kind)
    }

    /// Fails if a coefficient is not tagged with `spec`'s field or an
    /// exponent vector has the wrong width.
    pub fn check(&self, spec: &AlgebraSpec) -> Result<()> {
        for (m, c) in &self.terms {
            if c.kind() != spec.field() {
                return Err(Error::FieldMismatch(c.kind(), spec.field()));
            }
            if m.exps.len() != spec.width() {
                return Err(Error::AlgebraMismatch);
            }
        }
        Ok(())
    }

    /// Re-tags rational coefficients into `spec`'s field and widens or
    /// narrows exponent vectors to `spec` (extra operator slots must be zero).
    pub fn embed(&self, spec: &AlgebraSpec) -> Result<OrePoly> {
        let mut out = OrePoly::zero();
        for (m, c) in &self.terms {
            let c = c.convert(spec.field())?;
            let mut exps: Exponents = SmallVec::from_elem(0, spec.width());
            for (k, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if k >= spec.width() {
                    return Err(Error::AlgebraMismatch);
                }
                exps[k] = e;
            }
            out.add_term(OreMonomial { exps }, c);
        }
        Ok(out)
    }
}

/// Dense univariate polynomial in one variable, used while commuting operator
/// powers past powers of that variable.
#[derive(Clone)]
struct Univ(Vec<FieldElem>);

impl Univ {
    fn monomial(deg: usize, kind: FieldKind) -> Univ {
        let mut v = vec![FieldElem::zero(kind); deg + 1];
        v[deg] = FieldElem::one(kind);
        Univ(v)
    }

    fn is_zero(&self) -> bool {
        self.0.iter().all(FieldElem::is_zero)
    }

    fn sub(&self, other: &Univ, kind: FieldKind) -> Univ {
        let len = self.0.len().max(other.0.len());
        let z = FieldElem::zero(kind);
        Univ(
            (0..len)
                .map(|k| self.0.get(k).unwrap_or(&z) - other.0.get(k).unwrap_or(&z))
                .collect(),
        )
    }

    /// p(t) -> p(t + 1)
    fn shift(&self, kind: FieldKind) -> Univ {
        let n = self.0.len();
        let mut out = vec![FieldElem::zero(kind); n];
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut binom = crate::coeffs::Rational::one();
            for j in 0..=k {
                // coefficient of t^j in (t+1)^k is C(k, j)
                out[j] = &out[j] + &c.scale(&binom);
                binom = &(&binom * &crate::coeffs::Rational::from((k - j) as i64))
                    / &crate::coeffs::Rational::from((j + 1) as i64);
            }
        }
        Univ(out)
    }

    /// p(t) -> p(q t)
    fn qscale(&self) -> Univ {
        let q = FieldElem::q();
        Univ(
            self.0
                .iter()
                .enumerate()
                .map(|(k, c)| c * &q.pow(k as u32))
                .collect(),
        )
    }

    fn derivative(&self, kind: FieldKind) -> Univ {
        if self.0.len() <= 1 {
            return Univ(vec![FieldElem::zero(kind)]);
        }
        Univ(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&crate::coeffs::Rational::from(k as i64)))
                .collect(),
        )
    }

    fn sigma(&self, op: OperatorKind, kind: FieldKind) -> Univ {
        match op {
            OperatorKind::Weyl => self.clone(),
            OperatorKind::Shift | OperatorKind::Difference => self.shift(kind),
            OperatorKind::QDiff => self.qscale(),
        }
    }

    fn delta(&self, op: OperatorKind, kind: FieldKind) -> Univ {
        match op {
            OperatorKind::Weyl => self.derivative(kind),
            OperatorKind::Shift => Univ(vec![FieldElem::zero(kind)]),
            OperatorKind::Difference => self.shift(kind).sub(self, kind),
            OperatorKind::QDiff => self.qscale().sub(self, kind),
        }
    }
}

fn binomial(n: u32, k: u32) -> crate::coeffs::Rational {
    let mut acc = crate::coeffs::Rational::one();
    for j in 0..k {
        acc = &(&acc * &crate::coeffs::Rational::from((n - j) as i64))
            / &crate::coeffs::Rational::from((j + 1) as i64);
    }
    acc
}

/// Normal form of `D^b p(t)` for a single operator `D` whose sigma and delta
/// commute: `sum_k C(b,k) sigma^k(delta^(b-k)(p)) D^k`.
fn push_operator(op: OperatorKind, b: u32, p: &Univ, kind: FieldKind) -> Vec<(u32, Univ)> {
    // delta_pows[j] = delta^j(p)
    let mut delta_pows = vec![p.clone()];
    for _ in 0..b {
        let next = delta_pows.last().unwrap().delta(op, kind);
        delta_pows.push(next);
    }
    let mut out = Vec::new();
    for k in 0..=b {
        let mut v = delta_pows[(b - k) as usize].clone();
        if v.is_zero() {
            continue;
        }
        for _ in 0..k {
            v = v.sigma(op, kind);
        }
        let c = binomial(b, k);
        v = Univ(v.0.iter().map(|x| x.scale(&c)).collect());
        out.push((k, v));
    }
    out
}

/// Terms of `(ops on var j)^beta * t_j^c`, each as (t_j exponent, operator
/// exponents in the order of `spec.ops_on_var(j)`, coefficient).
fn commute_one_var(spec: &AlgebraSpec, j: usize, beta: &[u16], c: u16) -> Vec<(u16, Vec<u16>, FieldElem)> {
    let kind = spec.field();
    let on_var = spec.ops_on_var(j);
    // state: (operator exponents already pushed through, polynomial in t_j)
    let mut state: Vec<(Vec<u16>, Univ)> = vec![(vec![0; on_var.len()], Univ::monomial(c as usize, kind))];
    // apply the rightmost operator first; operators commute so order is free
    for (slot, &i) in on_var.iter().enumerate().rev() {
        let b = beta[i] as u32;
        if b == 0 {
            continue;
        }
        let op = spec.op(i).kind;
        let mut next = Vec::new();
        for (exps, p) in state {
            for (k, v) in push_operator(op, b, &p, kind) {
                let mut e = exps.clone();
                e[slot] = k as u16;
                next.push((e, v));
            }
        }
        state = next;
    }
    let mut out = Vec::new();
    for (exps, p) in state {
        for (deg, coef) in p.0.into_iter().enumerate() {
            if !coef.is_zero() {
                out.push((deg as u16, exps.clone(), coef));
            }
        }
    }
    out
}

/// Normal form of `d^beta t^gamma` as (monomial, coefficient) pairs.
pub(crate) fn commute(spec: &AlgebraSpec, beta: &[u16], gamma: &[u16]) -> Vec<(OreMonomial, FieldElem)> {
    let n = spec.nvars();
    let width = spec.width();
    let mut acc: Vec<(Exponents, FieldElem)> = {
        let mut e: Exponents = SmallVec::from_elem(0, width);
        // operators on variables with gamma_j = 0 pass through unchanged
        for (i, &b) in beta.iter().enumerate() {
            if gamma[spec.op(i).var] == 0 {
                e[n + i] = b;
            }
        }
        vec![(e, FieldElem::one(spec.field()))]
    };
    for j in 0..n {
        if gamma[j] == 0 {
            continue;
        }
        let on_var = spec.ops_on_var(j);
        let factor = if on_var.iter().all(|&i| beta[i] == 0) {
            vec![(gamma[j], vec![0; on_var.len()], FieldElem::one(spec.field()))]
        } else {
            commute_one_var(spec, j, beta, gamma[j])
        };
        let mut next = Vec::with_capacity(acc.len() * factor.len());
        for (e, c) in &acc {
            for (tdeg, opexps, fc) in &factor {
                let mut e2 = e.clone();
                e2[j] += tdeg;
                for (slot, &i) in on_var.iter().enumerate() {
                    e2[n + i] += opexps[slot];
                }
                next.push((e2, c * fc));
            }
        }
        acc = next;
    }
    acc.into_iter()
        .map(|(exps, c)| (OreMonomial { exps }, c))
        .collect()
}

/// Product of two normal-form elements.
pub fn mul(spec: &AlgebraSpec, a: &OrePoly, b: &OrePoly) -> Result<OrePoly> {
    a.check(spec)?;
    b.check(spec)?;
    Ok(mul_unchecked(spec, a, b))
}

pub(crate) fn mul_unchecked(spec: &AlgebraSpec, a: &OrePoly, b: &OrePoly) -> OrePoly {
    let n = spec.nvars();
    let mut out = OrePoly::zero();
    let mut cache: HashMap<(Exponents, Exponents), Vec<(OreMonomial, FieldElem)>> = HashMap::new();
    for (ma, ca) in &a.terms {
        let beta = ma.beta(spec);
        let alpha = ma.alpha(spec);
        for (mb, cb) in &b.terms {
            let gamma = mb.alpha(spec);
            let eps = mb.beta(spec);
            let cab = ca * cb;
            let middle_trivial = beta.iter().enumerate().all(|(i, &e)| e == 0 || gamma[spec.op(i).var] == 0);
            if middle_trivial {
                out.add_term(ma.mul(mb), cab);
                continue;
            }
            let key = (SmallVec::from_slice(beta), SmallVec::from_slice(gamma));
            let middle = cache
                .entry(key)
                .or_insert_with(|| commute(spec, beta, gamma));
            for (m, c) in middle.iter() {
                let mut exps: Exponents = SmallVec::with_capacity(spec.width());
                for k in 0..n {
                    exps.push(alpha[k] + m.exps[k]);
                }
                for (i, &e) in eps.iter().enumerate() {
                    exps.push(m.exps[n + i] + e);
                }
                out.add_term(OreMonomial { exps }, &cab * c);
            }
        }
    }
    out
}

/// Coefficient of the leading term of `t^alpha d^beta * t^gamma d^eps`
/// relative to `t^(alpha+gamma) d^(beta+eps)`: a power of q for q-difference
/// operators and 1 otherwise.
pub fn leading_twist(spec: &AlgebraSpec, left: &OreMonomial, right: &OreMonomial) -> FieldElem {
    let mut power = 0u32;
    let beta = left.beta(spec);
    let gamma = right.alpha(spec);
    for (i, op) in spec.ops().iter().enumerate() {
        if op.kind == OperatorKind::QDiff {
            power += beta[i] as u32 * gamma[op.var] as u32;
        }
    }
    if power == 0 {
        FieldElem::one(spec.field())
    } else {
        FieldElem::q().pow(power)
    }
}

pub fn pow(spec: &AlgebraSpec, a: &OrePoly, e: u32) -> OrePoly {
    let mut acc = OrePoly::one(spec);
    for _ in 0..e {
        acc = mul_unchecked(spec, &acc, a);
    }
    acc
}
