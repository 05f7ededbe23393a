//! Commutative routes to `ker(kappa_p)` used to cross-check the Ore pipeline.
//!
//! For the Weyl algebra the kernel is the image of the polynomial syzygies of
//! all partial derivatives of `p`; for the difference algebra the derivatives
//! are replaced by the difference shifts `delta^mu p`, computed in the
//! binomial basis `p_nu(t) = prod C(t_i, nu_i)`.

use std::collections::BTreeMap;

use crate::coeffs::{FieldElem, Rational};
use crate::error::{Error, Result};
use crate::gb::{ModuleVector, Submodule};
use crate::modops::{left_syzygy, OpConfig};
use crate::orecore::{diff_var, AlgebraSpec, OperatorKind, OreMonomial, OrePoly};

/// Multi-index in `N_0^n`.
pub type MultiIndex = Vec<u16>;

/// `sum c_nu p_nu` with `p_nu(t) = prod_i C(t_i, nu_i)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinomialPoly {
    nvars: usize,
    coeffs: BTreeMap<MultiIndex, FieldElem>,
}

impl BinomialPoly {
    pub fn zero(nvars: usize) -> Self {
        BinomialPoly {
            nvars,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_coeffs(nvars: usize, coeffs: impl IntoIterator<Item = (MultiIndex, FieldElem)>) -> Self {
        let mut out = BinomialPoly::zero(nvars);
        for (nu, c) in coeffs {
            out.add_term(nu, c);
        }
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn coeffs(&self) -> &BTreeMap<MultiIndex, FieldElem> {
        &self.coeffs
    }

    pub fn coeff(&self, nu: &[u16]) -> Option<&FieldElem> {
        self.coeffs.get(nu)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_term(&mut self, nu: MultiIndex, c: FieldElem) {
        debug_assert_eq!(nu.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&nu) {
            Some(old) => {
                let s = &*old + &c;
                if s.is_zero() {
                    self.coeffs.remove(&nu);
                } else {
                    *old = s;
                }
            }
            None => {
                self.coeffs.insert(nu, c);
            }
        }
    }
}

/// Coefficients (lowest degree first) of `C(t, k) = t (t-1) ... (t-k+1) / k!`.
fn binomial_expansion(k: u16) -> Vec<Rational> {
    let mut poly = vec![Rational::one()];
    for i in 0..k {
        // multiply by (t - i) / (i + 1)
        let mut next = vec![Rational::zero(); poly.len() + 1];
        let shift = Rational::from(i as i64);
        let scale = Rational::new(1, i as i64 + 1);
        for (d, c) in poly.iter().enumerate() {
            next[d + 1] = &next[d + 1] + &(c * &scale);
            next[d] = &next[d] - &(&(c * &shift) * &scale);
        }
        poly = next;
    }
    poly
}

fn factorial(k: u16) -> Rational {
    (1..=k as i64).fold(Rational::one(), |acc, i| &acc * &Rational::from(i))
}

/// `p_nu` expanded in the monomial basis of `spec`.
fn binomial_poly(spec: &AlgebraSpec, nu: &[u16]) -> OrePoly {
    let mut out = OrePoly::one(spec);
    for (j, &k) in nu.iter().enumerate() {
        let mut factor = OrePoly::zero();
        for (d, c) in binomial_expansion(k).into_iter().enumerate() {
            let mut exps = vec![0u16; spec.width()];
            exps[j] = d as u16;
            factor.add_term(OreMonomial::from_exps(&exps), FieldElem::from_rational(spec.field(), c));
        }
        // distinct variables commute, so the product stays in normal form
        out = crate::orecore::mul(spec, &out, &factor).expect("same field");
    }
    out
}

fn check_polynomial(spec: &AlgebraSpec, p: &OrePoly) -> Result<()> {
    p.check(spec)?;
    if !p.is_polynomial(spec) {
        return Err(Error::Domain("expected a polynomial without operators".into()));
    }
    Ok(())
}

/// Binomial representation of a polynomial by the triangular change of
/// basis: repeatedly peel off the lexicographically greatest monomial
/// `c t^nu`, whose only source is `nu! c p_nu`.
pub fn to_binomial(spec: &AlgebraSpec, p: &OrePoly) -> Result<BinomialPoly> {
    check_polynomial(spec, p)?;
    let n = spec.nvars();
    let mut rest = p.clone();
    let mut out = BinomialPoly::zero(n);
    while let Some((m, c)) = rest
        .terms()
        .max_by(|a, b| a.0.alpha(spec).cmp(b.0.alpha(spec)))
        .map(|(m, c)| (m.clone(), c.clone()))
    {
        let nu: MultiIndex = m.alpha(spec).to_vec();
        let scale = nu.iter().fold(Rational::one(), |acc, &k| &acc * &factorial(k));
        let cnu = c.scale(&scale);
        rest = rest.sub(&binomial_poly(spec, &nu).scale(&cnu));
        out.add_term(nu, cnu);
    }
    Ok(out)
}

/// Back to the monomial basis of `spec`.
pub fn from_binomial(spec: &AlgebraSpec, b: &BinomialPoly) -> Result<OrePoly> {
    if b.nvars != spec.nvars() {
        return Err(Error::DimensionMismatch {
            expected: spec.nvars(),
            found: b.nvars,
        });
    }
    let mut out = OrePoly::zero();
    for (nu, c) in &b.coeffs {
        if c.kind() != spec.field() {
            return Err(Error::FieldMismatch(c.kind(), spec.field()));
        }
        out = out.add(&binomial_poly(spec, nu).scale(c));
    }
    Ok(out)
}

/// Coefficient tables of the falling factorials `g^(nu) = t (t-1) ... (t-nu+1)`:
/// `g[nu][j]` is the coefficient of `t^j`, built by
/// `g_j^(nu) = g_{j-1}^(nu-1) - (nu-1) g_j^(nu-1)`.
fn falling_factorial_table(max: usize) -> Vec<Vec<Rational>> {
    let mut g = vec![vec![Rational::one()]];
    for nu in 1..=max {
        let prev = &g[nu - 1];
        let factor = Rational::from(nu as i64 - 1);
        let row = (0..=nu)
            .map(|j| {
                let left = if j >= 1 { prev[j - 1].clone() } else { Rational::zero() };
                let right = prev.get(j).map_or(Rational::zero(), |c| c * &factor);
                &left - &right
            })
            .collect();
        g.push(row);
    }
    g
}

/// `t^v = g^(v) + sum_{i=1}^{v-1} k_v(i) g^(v-i)`, with
/// `k_v(l) = -g_{v-l}^(v) - sum_{i<l} k_v(i) g_{v-l}^(v-i)`.
fn k_coefficients(v: usize, g: &[Vec<Rational>]) -> Vec<Rational> {
    let mut k = vec![Rational::zero(); v];
    for l in 1..v {
        let mut acc = -&g[v][v - l];
        for i in 1..l {
            acc = &acc - &(&k[i] * &g[v - i][v - l]);
        }
        k[l] = acc;
    }
    k
}

/// `t^v` in the binomial basis: `(nu, coefficient)` pairs.
fn power_in_binomials(v: usize, g: &[Vec<Rational>]) -> Vec<(u16, Rational)> {
    let mut out = vec![(v as u16, factorial(v as u16))];
    for (i, ki) in k_coefficients(v, g).into_iter().enumerate().skip(1) {
        if !ki.is_zero() {
            out.push(((v - i) as u16, &ki * &factorial((v - i) as u16)));
        }
    }
    out
}

/// Binomial representation through the falling-factorial recursions,
/// expanding each monomial one variable at a time.
pub fn to_binomial_recursive(spec: &AlgebraSpec, p: &OrePoly) -> Result<BinomialPoly> {
    check_polynomial(spec, p)?;
    let n = spec.nvars();
    let max = p
        .terms()
        .flat_map(|(m, _)| m.alpha(spec).to_vec())
        .max()
        .unwrap_or(0) as usize;
    let g = falling_factorial_table(max);
    let mut out = BinomialPoly::zero(n);
    for (m, c) in p.terms() {
        let mut partial: Vec<(MultiIndex, FieldElem)> = vec![(Vec::new(), c.clone())];
        for &v in m.alpha(spec) {
            let expansion = power_in_binomials(v as usize, &g);
            partial = partial
                .into_iter()
                .flat_map(|(nu, c)| {
                    expansion.iter().map(move |(k, r)| {
                        let mut nu = nu.clone();
                        nu.push(*k);
                        (nu, c.scale(r))
                    })
                })
                .collect();
        }
        for (nu, c) in partial {
            out.add_term(nu, c);
        }
    }
    Ok(out)
}

/// `delta^mu` on the binomial basis: `p_nu -> p_{nu - mu}` when `mu <= nu`
/// componentwise, `0` otherwise.
pub fn delta_action_binomial(mu: &[u16], p: &BinomialPoly) -> Result<BinomialPoly> {
    if mu.len() != p.nvars {
        return Err(Error::DimensionMismatch {
            expected: p.nvars,
            found: mu.len(),
        });
    }
    let mut out = BinomialPoly::zero(p.nvars);
    for (nu, c) in &p.coeffs {
        if mu.iter().zip(nu).all(|(a, b)| a <= b) {
            out.add_term(nu.iter().zip(mu).map(|(b, a)| b - a).collect(), c.clone());
        }
    }
    Ok(out)
}

/// All multi-indices `alpha <= bound` componentwise, in lexicographic order.
fn index_box(bound: &[u16]) -> Vec<MultiIndex> {
    let mut out = vec![Vec::new()];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=b).map(move |e| {
                    let mut v = prefix.clone();
                    v.push(e);
                    v
                })
            })
            .collect();
    }
    out
}

/// The list `Der_p` (or `Shift_p`) with the bookkeeping that maps
/// polynomial syzygies back to operator rows.
#[derive(Clone, Debug)]
pub struct DerivativeFamily {
    /// `d_ij`: highest degree of `t_j` in `p_i` (`None` for `p_i = 0`).
    pub bounds: Vec<Option<Vec<u16>>>,
    /// `E_{p_i}` in lexicographic order, starting with the zero index.
    pub index_sets: Vec<Vec<MultiIndex>>,
    /// The stacked list of derivatives (or shifts), over `K[t]`.
    pub elements: Vec<OrePoly>,
    /// For each element: the component `i` and operator exponent `alpha`.
    pub tags: Vec<(usize, MultiIndex)>,
    base: AlgebraSpec,
}

impl DerivativeFamily {
    fn build(
        spec: &AlgebraSpec,
        p: &[OrePoly],
        mut apply: impl FnMut(&AlgebraSpec, &OrePoly, &[u16]) -> Result<OrePoly>,
    ) -> Result<Self> {
        if p.is_empty() {
            return Err(Error::Domain("signal vector has no components".into()));
        }
        let base = spec.commutative_base();
        let n = spec.nvars();
        let mut fam = DerivativeFamily {
            bounds: Vec::new(),
            index_sets: Vec::new(),
            elements: Vec::new(),
            tags: Vec::new(),
            base: base.clone(),
        };
        for (i, pi) in p.iter().enumerate() {
            check_polynomial(spec, pi)?;
            let pi = pi.embed(&base)?;
            let bound = (!pi.is_zero()).then(|| {
                (0..n)
                    .map(|j| pi.terms().map(|(m, _)| m.exps()[j]).max().unwrap_or(0))
                    .collect::<Vec<_>>()
            });
            let set = match &bound {
                Some(d) => index_box(&d.iter().map(|x| x + 1).collect::<Vec<_>>()),
                None => vec![vec![0; n]],
            };
            for alpha in &set {
                fam.elements.push(apply(&base, &pi, alpha)?);
                fam.tags.push((i, alpha.clone()));
            }
            fam.bounds.push(bound);
            fam.index_sets.push(set);
        }
        Ok(fam)
    }

    /// Partial derivatives `d^alpha p_i / dt^alpha`.
    pub fn derivatives(spec: &AlgebraSpec, p: &[OrePoly]) -> Result<Self> {
        DerivativeFamily::build(spec, p, |_, f, alpha| {
            let mut g = f.clone();
            for (j, &a) in alpha.iter().enumerate() {
                for _ in 0..a {
                    g = diff_var(&g, j);
                }
            }
            Ok(g)
        })
    }

    /// Difference shifts `delta^mu p_i`, computed in the binomial basis.
    pub fn shifts(spec: &AlgebraSpec, p: &[OrePoly]) -> Result<Self> {
        DerivativeFamily::build(spec, p, |base, f, mu| {
            let b = to_binomial(base, f)?;
            from_binomial(base, &delta_action_binomial(mu, &b)?)
        })
    }

    /// Commutative ring `K[t]` the elements live in.
    pub fn base(&self) -> &AlgebraSpec {
        &self.base
    }

    /// `(q_1, ..., q_l) -> sum_k q_k op^{alpha_k} e_{i_k}` into `spec^{1 x m}`.
    pub fn lift(&self, spec: &AlgebraSpec, syzygy: &ModuleVector) -> Result<ModuleVector> {
        let n = spec.nvars();
        let m = self.index_sets.len();
        let mut out = ModuleVector::zero(m);
        for (q, (i, alpha)) in syzygy.entries().iter().zip(&self.tags) {
            for (mono, c) in q.terms() {
                let mut exps = vec![0u16; spec.width()];
                exps[..n].copy_from_slice(&mono.exps()[..n]);
                for (j, &a) in alpha.iter().enumerate() {
                    let slot = spec.ops_on_var(j).first().copied().ok_or(Error::AlgebraMismatch)?;
                    exps[n + slot] = a;
                }
                out.0[*i].add_term(OreMonomial::from_exps(&exps), c.convert(spec.field())?);
            }
        }
        Ok(out)
    }

    /// Image of the polynomial syzygy module of `elements` in `spec^{1 x m}`.
    pub fn kernel(&self, spec: &AlgebraSpec, cfg: &OpConfig) -> Result<Submodule> {
        let vectors: Vec<_> = self.elements.iter().map(|e| ModuleVector(vec![e.clone()])).collect();
        let syz = left_syzygy(&self.base, &vectors, &OpConfig { monomial: None, gb: cfg.gb })?;
        let rows = syz.gens().iter().map(|s| self.lift(spec, s)).collect::<Result<Vec<_>>>()?;
        Submodule::new(spec, self.index_sets.len(), rows)
    }
}

/// `ker(kappa_p)` over a Weyl algebra from polynomial syzygies of `Der_p`.
pub fn weyl_oracle_kernel(spec: &AlgebraSpec, p: &[OrePoly], cfg: &OpConfig) -> Result<Submodule> {
    if !spec.is_pure(OperatorKind::Weyl) {
        return Err(Error::AlgebraMismatch);
    }
    DerivativeFamily::derivatives(spec, p)?.kernel(spec, cfg)
}

/// `ker(kappa_p)` over a difference algebra from polynomial syzygies of
/// `Shift_p`.
pub fn difference_oracle_kernel(spec: &AlgebraSpec, p: &[OrePoly], cfg: &OpConfig) -> Result<Submodule> {
    if !spec.is_pure(OperatorKind::Difference) {
        return Err(Error::AlgebraMismatch);
    }
    DerivativeFamily::shifts(spec, p)?.kernel(spec, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_poly;
    use crate::gb::module_equal;
    use crate::orecore::{act, PolySignal};
    use crate::vmpum::kernel_kappa;
    use proptest::prelude::*;

    fn q(n: i64) -> FieldElem {
        FieldElem::from_int(crate::coeffs::FieldKind::Rational, n)
    }

    fn univariate(b: &BinomialPoly) -> Vec<(u16, FieldElem)> {
        let mut v: Vec<_> = b.coeffs().iter().map(|(nu, c)| (nu[0], c.clone())).collect();
        v.reverse();
        v
    }

    #[test]
    fn cubic_in_binomials() {
        let c = AlgebraSpec::commutative(1, crate::coeffs::FieldKind::Rational);
        let p = parse_poly(&c, "t^3 + t^2 + 1").unwrap();
        let expected = vec![(3, q(6)), (2, q(8)), (1, q(2)), (0, q(1))];
        assert_eq!(univariate(&to_binomial(&c, &p).unwrap()), expected);
        assert_eq!(univariate(&to_binomial_recursive(&c, &p).unwrap()), expected);
    }

    #[test]
    fn recursion_tables() {
        let g = falling_factorial_table(3);
        let r = |v: &[i64]| v.iter().map(|&x| Rational::from(x)).collect::<Vec<_>>();
        assert_eq!(g[3], r(&[0, 2, -3, 1]));
        assert_eq!(g[2], r(&[0, -1, 1]));
        assert_eq!(k_coefficients(3, &g)[1..], r(&[3, 1])[..]);
        assert_eq!(k_coefficients(2, &g)[1..], r(&[1])[..]);
    }

    #[test]
    fn small_cases() {
        let c = AlgebraSpec::commutative(2, crate::coeffs::FieldKind::Rational);
        let b = to_binomial(&c, &parse_poly(&c, "5").unwrap()).unwrap();
        assert_eq!(b, BinomialPoly::from_coeffs(2, [(vec![0, 0], q(5))]));
        let b = to_binomial(&c, &parse_poly(&c, "t1*t2").unwrap()).unwrap();
        assert_eq!(b, BinomialPoly::from_coeffs(2, [(vec![1, 1], q(1))]));
        assert!(to_binomial(&c, &OrePoly::zero()).unwrap().is_zero());
    }

    #[test]
    fn delta_on_binomials() {
        let p3 = BinomialPoly::from_coeffs(1, [(vec![3], q(1))]);
        assert_eq!(delta_action_binomial(&[1], &p3).unwrap(), BinomialPoly::from_coeffs(1, [(vec![2], q(1))]));
        let p1 = BinomialPoly::from_coeffs(1, [(vec![1], q(1))]);
        assert!(delta_action_binomial(&[2], &p1).unwrap().is_zero());

        let s = AlgebraSpec::difference(1);
        let p = parse_poly(&s, "t^3 + t^2 + 1").unwrap();
        let b = to_binomial(&s, &p).unwrap();
        let shifted = delta_action_binomial(&[1], &b).unwrap();
        assert_eq!(shifted, BinomialPoly::from_coeffs(1, [(vec![2], q(6)), (vec![1], q(8)), (vec![0], q(2))]));
        let direct = act(&s, &OrePoly::op(&s, 0), &PolySignal::new(&s, p).unwrap()).unwrap();
        assert_eq!(to_binomial(&s, &direct.poly).unwrap(), shifted);
    }

    #[test]
    fn shift_family_of_vector_signal() {
        let s = AlgebraSpec::difference(1);
        let p = [parse_poly(&s, "t^3").unwrap(), parse_poly(&s, "t").unwrap()];
        let fam = DerivativeFamily::shifts(&s, &p).unwrap();
        let c = fam.base().clone();
        let shown: Vec<_> = fam.elements.iter().filter(|e| !e.is_zero()).cloned().collect();
        let expected: Vec<_> = ["t^3", "3*t^2 + 3*t + 1", "6*t + 6", "6", "t", "1"]
            .iter()
            .map(|e| parse_poly(&c, e).unwrap())
            .collect();
        assert_eq!(shown, expected);
        assert_eq!(fam.index_sets[0].len(), 5);
        assert_eq!(fam.tags[0], (0, vec![0]));
    }

    #[test]
    fn oracle_kernels_match_examples() {
        let w = AlgebraSpec::weyl(1);
        let k = weyl_oracle_kernel(&w, &[parse_poly(&w, "t").unwrap()], &OpConfig::default()).unwrap();
        let direct = kernel_kappa(&w, &[parse_poly(&w, "t").unwrap()], &OpConfig::default()).unwrap();
        assert!(module_equal(&k, &direct).unwrap());
        let k = weyl_oracle_kernel(&w, &[parse_poly(&w, "1").unwrap()], &OpConfig::default()).unwrap();
        let d = Submodule::ideal(&w, vec![OrePoly::op(&w, 0)]).unwrap();
        assert!(module_equal(&k, &d).unwrap());

        let s = AlgebraSpec::difference(1);
        let k = difference_oracle_kernel(&s, &[parse_poly(&s, "1").unwrap()], &OpConfig::default()).unwrap();
        assert!(module_equal(&k, &Submodule::ideal(&s, vec![OrePoly::op(&s, 0)]).unwrap()).unwrap());
        let t2 = [parse_poly(&s, "t^2").unwrap()];
        let k = difference_oracle_kernel(&s, &t2, &OpConfig::default()).unwrap();
        assert!(module_equal(&k, &kernel_kappa(&s, &t2, &OpConfig::default()).unwrap()).unwrap());
    }

    #[test]
    fn lifted_syzygies_annihilate() {
        let w = AlgebraSpec::weyl(2);
        let p = [parse_poly(&w, "t1^2*t2 - t2").unwrap(), parse_poly(&w, "t1").unwrap()];
        let k = weyl_oracle_kernel(&w, &p, &OpConfig::default()).unwrap();
        let sig: Vec<_> = p.iter().map(|x| PolySignal::new(&w, x.clone()).unwrap()).collect();
        for g in k.gens() {
            let mut total = OrePoly::zero();
            for (a, s) in g.entries().iter().zip(&sig) {
                total = total.add(&act(&w, a, s).unwrap().poly);
            }
            assert!(total.is_zero());
        }
        assert!(module_equal(&k, &kernel_kappa(&w, &p, &OpConfig::default()).unwrap()).unwrap());
    }

    #[test]
    fn oracles_require_matching_algebra() {
        let s = AlgebraSpec::difference(1);
        assert!(weyl_oracle_kernel(&s, &[OrePoly::one(&s)], &OpConfig::default()).is_err());
        let w = AlgebraSpec::weyl(1);
        assert!(difference_oracle_kernel(&w, &[OrePoly::one(&w)], &OpConfig::default()).is_err());
    }

    fn arb_poly(n: usize) -> impl Strategy<Value = OrePoly> {
        prop::collection::vec((prop::collection::vec(0u16..7, n), -9i64..10), 0..6).prop_map(move |terms| {
            let mut p = OrePoly::zero();
            for (mut e, k) in terms {
                let total: u16 = e.iter().sum();
                if total > 6 {
                    e = e.iter().map(|x| x / 2).collect();
                }
                p = p.add(&OrePoly::term(OreMonomial::from_exps(&e), q(k)));
            }
            p
        })
    }

    fn eval(spec: &AlgebraSpec, p: &OrePoly, at: &[i64]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in p.terms() {
            let mut v = c.as_rational().unwrap();
            for (j, &e) in m.alpha(spec).iter().enumerate() {
                v = &v * &Rational::from(at[j]).pow(e as u32);
            }
            acc = &acc + &v;
        }
        acc
    }

    fn eval_binomial(b: &BinomialPoly, at: &[i64]) -> Rational {
        let mut acc = Rational::zero();
        for (nu, c) in b.coeffs() {
            let mut v = c.as_rational().unwrap();
            for (j, &k) in nu.iter().enumerate() {
                let e = binomial_expansion(k);
                let x = Rational::from(at[j]);
                let val = e.iter().rev().fold(Rational::zero(), |a, ci| &(&a * &x) + ci);
                v = &v * &val;
            }
            acc = &acc + &v;
        }
        acc
    }

    proptest! {
        #[test]
        fn binomial_round_trip(p in arb_poly(2)) {
            let c = AlgebraSpec::commutative(2, crate::coeffs::FieldKind::Rational);
            let b = to_binomial(&c, &p).unwrap();
            prop_assert_eq!(&b, &to_binomial_recursive(&c, &p).unwrap());
            prop_assert_eq!(from_binomial(&c, &b).unwrap(), p.clone());
            for x in 0..=6 {
                for y in 0..=6 {
                    prop_assert_eq!(eval(&c, &p, &[x, y]), eval_binomial(&b, &[x, y]));
                }
            }
        }

        #[test]
        fn binomial_round_trip_univariate(p in arb_poly(1)) {
            let c = AlgebraSpec::commutative(1, crate::coeffs::FieldKind::Rational);
            let b = to_binomial_recursive(&c, &p).unwrap();
            prop_assert_eq!(from_binomial(&c, &b).unwrap(), p);
        }
    }
}
