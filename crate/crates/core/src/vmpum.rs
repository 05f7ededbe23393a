//! Most powerful unfalsified models of finite sets of polynomial and
//! polynomial-exponential signals: kernels of `o -> o • p`, their
//! intersections across signals, twisted lifts for exponential factors and
//! generator minimization.

use std::cmp::Ordering;

use crate::coeffs::FieldElem;
use crate::error::{Error, Result};
use crate::expr::format_vector;
use crate::gb::{leading_term, ModuleOrder, ModuleVector, MonomialOrder, Submodule};
use crate::modops::{intersect, kernel_of_hom, left_syzygy, Homomorphism, OpConfig};
use crate::orecore::{affine_substitute, AlgebraFamily, AlgebraSpec, OperatorKind, OrePoly, PolySignal};

/// A finite set of `m`-vector signals over one algebra.
#[derive(Clone, Debug)]
pub struct SignalSet {
    spec: AlgebraSpec,
    signals: Vec<Vec<PolySignal>>,
}

impl SignalSet {
    pub fn new(spec: &AlgebraSpec, signals: Vec<Vec<PolySignal>>) -> Result<Self> {
        let m = signals
            .first()
            .ok_or_else(|| Error::Domain("empty signal set".into()))?
            .len();
        if m == 0 {
            return Err(Error::Domain("signals must have at least one component".into()));
        }
        for w in &signals {
            if w.len() != m {
                return Err(Error::DimensionMismatch { expected: m, found: w.len() });
            }
            for s in w {
                if !s.poly.is_polynomial(spec) {
                    return Err(Error::Domain("a signal must not contain operators".into()));
                }
                s.poly.check(spec)?;
                crate::orecore::check_lambda(spec, s.lambda.as_deref())?;
            }
        }
        Ok(SignalSet { spec: spec.clone(), signals })
    }

    /// Set of pure polynomial vectors.
    pub fn from_polys(spec: &AlgebraSpec, signals: Vec<Vec<OrePoly>>) -> Result<Self> {
        let signals = signals
            .into_iter()
            .map(|w| w.into_iter().map(|p| PolySignal::new(spec, p)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        SignalSet::new(spec, signals)
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn dim(&self) -> usize {
        self.signals[0].len()
    }

    pub fn signals(&self) -> &[Vec<PolySignal>] {
        &self.signals
    }
}

/// Rows `R` of a kernel representation `{w | R • w = 0}`.
#[derive(Clone, Debug)]
pub struct KernelRepresentation {
    pub spec: AlgebraSpec,
    pub order: MonomialOrder,
    pub rows: Vec<ModuleVector>,
    /// How the rows were obtained, one entry per construction step.
    pub notes: Vec<String>,
}

impl KernelRepresentation {
    pub fn dim(&self) -> usize {
        self.rows.first().map_or(0, ModuleVector::rank)
    }

    pub fn submodule(&self, rank: usize) -> Result<Submodule> {
        Submodule::new(&self.spec, rank, self.rows.clone())
    }

    pub fn format_rows(&self) -> Vec<Vec<String>> {
        self.rows.iter().map(|r| format_vector(&self.spec, r, &self.order)).collect()
    }
}

/// Generators of the left annihilator of `1` in the polynomial module:
/// `d_i` for derivative-like operators and `s_i - 1` for shifts.
pub fn presentation_rows(spec: &AlgebraSpec) -> Vec<OrePoly> {
    (0..spec.nops())
        .map(|i| {
            let op = OrePoly::op(spec, i);
            match spec.op(i).kind {
                OperatorKind::Shift => op.sub(&OrePoly::one(spec)),
                _ => op,
            }
        })
        .collect()
}

/// `ker(o -> sum o_i • p_i)` for polynomials `p_1..p_m`, as a submodule of O^{1 x m}.
pub fn kernel_kappa(spec: &AlgebraSpec, p: &[OrePoly], cfg: &OpConfig) -> Result<Submodule> {
    if p.is_empty() {
        return Err(Error::Domain("signal vector has no components".into()));
    }
    for pi in p {
        pi.check(spec)?;
        if !pi.is_polynomial(spec) {
            return Err(Error::Domain("a signal must not contain operators".into()));
        }
    }
    let h = Homomorphism {
        spec: spec.clone(),
        target_rank: 1,
        relations: presentation_rows(spec).into_iter().map(|r| ModuleVector(vec![r])).collect(),
        images: p.iter().map(|pi| ModuleVector(vec![pi.clone()])).collect(),
    };
    kernel_of_hom(&h, cfg)
}

fn check_lambda_len(spec: &AlgebraSpec, lambda: &[FieldElem]) -> Result<()> {
    if lambda.len() != spec.nvars() {
        return Err(Error::DimensionMismatch {
            expected: spec.nvars(),
            found: lambda.len(),
        });
    }
    match lambda.iter().find(|l| l.kind() != spec.field()) {
        Some(l) => Err(Error::FieldMismatch(l.kind(), spec.field())),
        None => Ok(()),
    }
}

/// `d_i -> d_i - lambda_i` on the Weyl algebra.
pub fn sigma_lambda(spec: &AlgebraSpec, a: &OrePoly, lambda: &[FieldElem]) -> Result<OrePoly> {
    if !spec.is_pure(OperatorKind::Weyl) {
        return Err(Error::AlgebraMismatch);
    }
    check_lambda_len(spec, lambda)?;
    a.check(spec)?;
    let one = FieldElem::one(spec.field());
    let mut out = a.clone();
    for (i, l) in lambda.iter().enumerate() {
        out = affine_substitute(spec, &out, i, &one, &-l);
    }
    Ok(out)
}

/// Inverse of [`sigma_lambda`].
pub fn sigma_lambda_inv(spec: &AlgebraSpec, a: &OrePoly, lambda: &[FieldElem]) -> Result<OrePoly> {
    let neg: Vec<_> = lambda.iter().map(|l| -l).collect();
    sigma_lambda(spec, a, &neg)
}

fn chi_parts(spec: &AlgebraSpec, lambda: &[FieldElem]) -> Result<()> {
    if !spec.is_pure(OperatorKind::Difference) {
        return Err(Error::AlgebraMismatch);
    }
    check_lambda_len(spec, lambda)?;
    if lambda.iter().any(FieldElem::is_zero) {
        return Err(Error::Domain("exponential base must be nonzero".into()));
    }
    Ok(())
}

/// `D_i -> (D_i - lambda_i + 1) / lambda_i` on the difference algebra.
pub fn chi_lambda(spec: &AlgebraSpec, a: &OrePoly, lambda: &[FieldElem]) -> Result<OrePoly> {
    chi_parts(spec, lambda)?;
    a.check(spec)?;
    let one = FieldElem::one(spec.field());
    let mut out = a.clone();
    for (i, l) in lambda.iter().enumerate() {
        let inv = l.inv()?;
        let offset = &(&one - l) * &inv;
        out = affine_substitute(spec, &out, i, &inv, &offset);
    }
    Ok(out)
}

/// Inverse of [`chi_lambda`]: `D_i -> lambda_i D_i + lambda_i - 1`.
pub fn chi_lambda_inv(spec: &AlgebraSpec, a: &OrePoly, lambda: &[FieldElem]) -> Result<OrePoly> {
    chi_parts(spec, lambda)?;
    a.check(spec)?;
    let one = FieldElem::one(spec.field());
    let mut out = a.clone();
    for (i, l) in lambda.iter().enumerate() {
        out = affine_substitute(spec, &out, i, l, &(l - &one));
    }
    Ok(out)
}

/// Twist matching the exponential factor `exp_lambda` of the algebra.
fn twist(spec: &AlgebraSpec, a: &OrePoly, lambda: &[FieldElem]) -> Result<OrePoly> {
    if spec.is_pure(OperatorKind::Weyl) {
        sigma_lambda(spec, a, lambda)
    } else {
        chi_lambda(spec, a, lambda)
    }
}

/// `ker(kappa_w)` for one signal vector, handling exponential factors by
/// grouping components of equal frequency and twisting each block kernel.
fn signal_kernel(spec: &AlgebraSpec, w: &[PolySignal], cfg: &OpConfig, notes: &mut Vec<String>) -> Result<Vec<ModuleVector>> {
    let m = w.len();
    if w.iter().all(|s| s.lambda.is_none()) {
        let polys: Vec<_> = w.iter().map(|s| s.poly.clone()).collect();
        return Ok(kernel_kappa(spec, &polys, cfg)?.into_gens());
    }
    match spec.family() {
        AlgebraFamily::Weyl => {}
        AlgebraFamily::Difference => {
            if w.iter().any(|s| s.lambda.is_none()) {
                return Err(Error::Domain(
                    "difference signals must give every component an exponential factor".into(),
                ));
            }
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "exponential signals in the {} algebra",
                spec.family().name()
            )))
        }
    }
    let mut groups: Vec<(Vec<FieldElem>, Vec<usize>)> = Vec::new();
    for (k, s) in w.iter().enumerate() {
        let lambda = s.effective_lambda(spec);
        match groups.iter_mut().find(|(l, _)| *l == lambda) {
            Some((_, idx)) => idx.push(k),
            None => groups.push((lambda, vec![k])),
        }
    }
    let mut rows = Vec::new();
    for (lambda, idx) in &groups {
        let polys: Vec<_> = idx.iter().map(|&k| w[k].poly.clone()).collect();
        let block = kernel_kappa(spec, &polys, cfg)?;
        let shown: Vec<_> = lambda.iter().map(ToString::to_string).collect();
        notes.push(format!(
            "components {:?}: kernel lifted to frequency ({})",
            idx.iter().map(|k| k + 1).collect::<Vec<_>>(),
            shown.join(", ")
        ));
        for g in block.gens() {
            let mut row = ModuleVector::zero(m);
            for (a, &k) in g.entries().iter().zip(idx) {
                row.0[k] = twist(spec, a, lambda)?;
            }
            rows.push(row);
        }
    }
    Ok(rows)
}

/// Sorts rows ascending by leading term, then by their printed form.
fn canonical_sort(spec: &AlgebraSpec, order: &MonomialOrder, rows: &mut [ModuleVector]) {
    let mo = ModuleOrder::new(order.clone());
    rows.sort_by(|a, b| {
        let la = leading_term(a, &mo).ok();
        let lb = leading_term(b, &mo).ok();
        let c = match (&la, &lb) {
            (Some(x), Some(y)) => mo.cmp((x.0, &x.1), (y.0, &y.1)),
            (None, None) => Ordering::Equal,
            (None, _) => Ordering::Less,
            (_, None) => Ordering::Greater,
        };
        c.then_with(|| format_vector(spec, a, order).cmp(&format_vector(spec, b, order)))
    });
}

/// Kernel representation of the most powerful unfalsified model of `set`.
pub fn vmpum_of(set: &SignalSet, cfg: &OpConfig) -> Result<KernelRepresentation> {
    let spec = set.spec();
    let m = set.dim();
    let mut notes = Vec::new();
    let mut kernels = Vec::new();
    for (i, w) in set.signals().iter().enumerate() {
        let rows = signal_kernel(spec, w, cfg, &mut notes)?;
        notes.push(format!("signal {}: {} kernel generators", i + 1, rows.len()));
        kernels.push(Submodule::new(spec, m, rows)?);
    }
    let mut rows = if kernels.len() == 1 {
        kernels.pop().expect("one kernel").into_gens()
    } else {
        notes.push(format!("intersection of {} signal kernels", kernels.len()));
        intersect(&kernels, cfg)?.into_gens()
    };
    let order = cfg.monomial.clone().unwrap_or_else(|| MonomialOrder::default_for(spec));
    canonical_sort(spec, &order, &mut rows);
    Ok(KernelRepresentation {
        spec: spec.clone(),
        order,
        rows,
        notes,
    })
}

/// Strategy for [`minimize_generators`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Minimizer {
    /// Drop a row whenever the remaining rows still generate it.
    #[default]
    Greedy,
    /// Drop a row that carries a constant coefficient in some syzygy.
    Syzygy,
}

fn submodule_of(spec: &AlgebraSpec, rank: usize, rows: &[ModuleVector]) -> Result<Submodule> {
    Submodule::new(spec, rank, rows.to_vec())
}

fn greedy(spec: &AlgebraSpec, rank: usize, mut rows: Vec<ModuleVector>, cfg: &OpConfig) -> Result<Vec<ModuleVector>> {
    let order = cfg.module_order(spec);
    let mut i = 0;
    while i < rows.len() {
        let rest: Vec<_> = rows.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, r)| r.clone()).collect();
        let others = crate::gb::left_groebner_with(&submodule_of(spec, rank, &rest)?, &order, cfg.gb)?;
        if others.contains(&rows[i])? {
            rows.remove(i);
        } else {
            i += 1;
        }
    }
    Ok(rows)
}

fn syzygy_pass(spec: &AlgebraSpec, mut rows: Vec<ModuleVector>, cfg: &OpConfig) -> Result<Vec<ModuleVector>> {
    loop {
        let syz = left_syzygy(spec, &rows, cfg)?;
        let unit = syz.gens().iter().find_map(|g| {
            g.entries()
                .iter()
                .position(|a| !a.is_zero() && a.total_degree() == 0)
        });
        match unit {
            Some(i) => {
                rows.remove(i);
            }
            None => return Ok(rows),
        }
    }
}

/// A generating set of the same module in which no row is redundant.
pub fn minimize_generators(r: &KernelRepresentation, how: Minimizer, cfg: &OpConfig) -> Result<KernelRepresentation> {
    let spec = &r.spec;
    let rank = r.dim();
    let mut rows: Vec<ModuleVector> = Vec::new();
    for row in &r.rows {
        if !row.is_zero() && !rows.contains(row) {
            rows.push(row.clone());
        }
    }
    let rows = match how {
        Minimizer::Greedy => greedy(spec, rank, rows, cfg)?,
        // the syzygy pass removes the obvious dependencies cheaply; the greedy
        // pass then certifies that no row is left redundant
        Minimizer::Syzygy => greedy(spec, rank, syzygy_pass(spec, rows, cfg)?, cfg)?,
    };
    let mut notes = r.notes.clone();
    notes.push(format!("minimized from {} to {} rows", r.rows.len(), rows.len()));
    Ok(KernelRepresentation {
        spec: spec.clone(),
        order: r.order.clone(),
        rows,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::Rational;
    use crate::expr::{parse_poly, parse_signal};
    use crate::gb::module_equal;
    use crate::orecore::act;

    fn fe(spec: &AlgebraSpec, n: i64, d: i64) -> FieldElem {
        FieldElem::from_rational(spec.field(), Rational::new(n, d))
    }

    fn p(spec: &AlgebraSpec, s: &str) -> OrePoly {
        parse_poly(spec, s).unwrap()
    }

    fn rows(spec: &AlgebraSpec, rows: &[&[&str]]) -> Submodule {
        let gens: Vec<_> = rows
            .iter()
            .map(|r| ModuleVector(r.iter().map(|e| p(spec, e)).collect()))
            .collect();
        Submodule::new(spec, gens[0].rank(), gens).unwrap()
    }

    fn annihilates(r: &KernelRepresentation, set: &SignalSet) -> bool {
        r.rows.iter().all(|row| {
            set.signals().iter().all(|w| {
                let mut total: Option<PolySignal> = None;
                for (a, s) in row.entries().iter().zip(w) {
                    let v = act(&r.spec, a, s).unwrap();
                    if v.is_zero() {
                        continue;
                    }
                    // components with different frequencies cannot cancel
                    match &mut total {
                        Some(t) if t.lambda == v.lambda => t.poly = t.poly.add(&v.poly),
                        Some(_) => return false,
                        None => total = Some(v),
                    }
                }
                total.is_none_or(|t| t.is_zero())
            })
        })
    }

    #[test]
    fn kernel_of_t() {
        let w = AlgebraSpec::weyl(1);
        let k = kernel_kappa(&w, &[p(&w, "t")], &OpConfig::default()).unwrap();
        assert!(module_equal(&k, &rows(&w, &[&["d1^2"], &["t1*d1 - 1"]])).unwrap());
    }

    #[test]
    fn constant_vector_kernel() {
        let w = AlgebraSpec::weyl(1);
        let k = kernel_kappa(&w, &[p(&w, "1"), p(&w, "2"), p(&w, "3")], &OpConfig::default()).unwrap();
        let expected = rows(&w, &[&["0", "3", "-2"], &["3", "0", "-1"], &["0", "0", "d1"]]);
        assert!(module_equal(&k, &expected).unwrap());
    }

    #[test]
    fn discrete_vector_kernel() {
        let s = AlgebraSpec::difference(1);
        let k = kernel_kappa(&s, &[p(&s, "t^3"), p(&s, "t")], &OpConfig::default()).unwrap();
        let expected = rows(&s, &[&["0", "D1^2"], &["0", "t1*D1 - 1"], &["1", "-t1^2"]]);
        assert!(module_equal(&k, &expected).unwrap());
    }

    #[test]
    fn shift_kernel_uses_s_minus_one() {
        let s = AlgebraSpec::shift(1);
        let k = kernel_kappa(&s, &[p(&s, "1")], &OpConfig::default()).unwrap();
        assert!(module_equal(&k, &rows(&s, &[&["s1 - 1"]])).unwrap());
        let k = kernel_kappa(&s, &[p(&s, "t")], &OpConfig::default()).unwrap();
        let sig = PolySignal::new(&s, p(&s, "t")).unwrap();
        for g in k.gens() {
            assert!(act(&s, &g.entries()[0], &sig).unwrap().is_zero());
        }
        assert!(k.contains(&ModuleVector(vec![p(&s, "s1^2 - 2*s1 + 1")])).unwrap());
    }

    #[test]
    fn sigma_examples() {
        let w = AlgebraSpec::weyl(1);
        let c = vec![fe(&w, 5, 3)];
        assert_eq!(sigma_lambda(&w, &p(&w, "d1"), &c).unwrap(), p(&w, "d1 - 5/3"));
        assert_eq!(sigma_lambda(&w, &p(&w, "d1^2"), &c).unwrap(), p(&w, "d1^2 - 10/3*d1 + 25/9"));
        assert_eq!(sigma_lambda(&w, &p(&w, "t1*d1"), &c).unwrap(), p(&w, "t1*d1 - 5/3*t1"));
        let a = p(&w, "t1^2*d1^3 - d1 + t1");
        assert_eq!(sigma_lambda_inv(&w, &sigma_lambda(&w, &a, &c).unwrap(), &c).unwrap(), a);
        assert!(matches!(sigma_lambda(&AlgebraSpec::difference(1), &OrePoly::zero(), &c), Err(Error::AlgebraMismatch)));
    }

    #[test]
    fn chi_examples() {
        let s = AlgebraSpec::difference(1);
        let two = vec![fe(&s, 2, 1)];
        assert_eq!(chi_lambda(&s, &p(&s, "D1"), &two).unwrap(), p(&s, "1/2*D1 - 1/2"));
        assert_eq!(chi_lambda(&s, &p(&s, "t1*D1 - 1"), &two).unwrap(), p(&s, "1/2*t1*D1 - 1/2*t1 - 1"));
        let a = chi_lambda(&s, &p(&s, "D1^2"), &two).unwrap();
        let sig = parse_signal(&s, "t1 * exp(2*t1)").unwrap();
        assert!(act(&s, &a, &sig).unwrap().is_zero());
        let b = p(&s, "t1^2*D1^2 + 3*D1 - t1");
        assert_eq!(chi_lambda_inv(&s, &chi_lambda(&s, &b, &two).unwrap(), &two).unwrap(), b);
        assert!(matches!(chi_lambda(&s, &b, &[fe(&s, 0, 1)]), Err(Error::Domain(_))));
    }

    #[test]
    fn chi_is_multiplicative_twist() {
        let s = AlgebraSpec::difference(1);
        let l = vec![fe(&s, -3, 2)];
        let sig = parse_signal(&s, "(t1^2 - 1) * exp(-3/2*t1)").unwrap();
        let plain = PolySignal::new(&s, p(&s, "t1^2 - 1")).unwrap();
        for a in ["D1", "t1*D1^2 - D1 + 2", "t1^3*D1"] {
            let a = p(&s, a);
            let lhs = act(&s, &chi_lambda(&s, &a, &l).unwrap(), &sig).unwrap();
            let rhs = act(&s, &a, &plain).unwrap();
            assert_eq!(lhs.poly, rhs.poly);
        }
    }

    #[test]
    fn intersection_of_two_signals() {
        let w = AlgebraSpec::weyl(1);
        let set = SignalSet::from_polys(&w, vec![vec![p(&w, "t")], vec![p(&w, "2*t - t^2")]]).unwrap();
        let r = vmpum_of(&set, &OpConfig::default()).unwrap();
        let expected = rows(&w, &[&["t1^2*d1^2 - 2*t1*d1 + 2"], &["d1^3"]]);
        assert!(module_equal(&r.submodule(1).unwrap(), &expected).unwrap());
        assert!(annihilates(&r, &set));
    }

    #[test]
    fn weyl_exponential_lift() {
        let w = AlgebraSpec::weyl(1);
        let set = SignalSet::new(&w, vec![vec![parse_signal(&w, "t1*exp(2*t1)").unwrap()]]).unwrap();
        let r = vmpum_of(&set, &OpConfig::default()).unwrap();
        let expected = rows(&w, &[&["d1^2 - 4*d1 + 4"], &["t1*d1 - 2*t1 - 1"]]);
        assert!(module_equal(&r.submodule(1).unwrap(), &expected).unwrap());
        assert!(annihilates(&r, &set));
    }

    #[test]
    fn block_diagonal_frequencies() {
        let s = AlgebraSpec::difference(1);
        let set = SignalSet::new(
            &s,
            vec![vec![parse_signal(&s, "exp(2*t1)").unwrap(), parse_signal(&s, "exp(3*t1)").unwrap()]],
        )
        .unwrap();
        let r = vmpum_of(&set, &OpConfig::default()).unwrap();
        let expected = rows(&s, &[&["1/2*D1 - 1/2", "0"], &["0", "1/3*D1 - 2/3"]]);
        assert!(module_equal(&r.submodule(2).unwrap(), &expected).unwrap());
        assert!(annihilates(&r, &set));
    }

    #[test]
    fn shared_frequency_is_one_block() {
        let w = AlgebraSpec::weyl(1);
        let set = SignalSet::new(
            &w,
            vec![vec![parse_signal(&w, "t1*exp(t1)").unwrap(), parse_signal(&w, "exp(t1)").unwrap(), parse_signal(&w, "t1").unwrap()]],
        )
        .unwrap();
        let r = vmpum_of(&set, &OpConfig::default()).unwrap();
        assert!(annihilates(&r, &set));
        // [1, -t, 0] relates the two components with the same exponential
        let m = r.submodule(3).unwrap();
        assert!(m.contains(&ModuleVector(vec![p(&w, "1"), p(&w, "-t1"), OrePoly::zero()])).unwrap());
        assert!(m.contains(&ModuleVector(vec![OrePoly::zero(), OrePoly::zero(), p(&w, "d1^2")])).unwrap());
    }

    #[test]
    fn mixed_difference_signal_rejected() {
        let s = AlgebraSpec::difference(1);
        let set = SignalSet::new(&s, vec![vec![parse_signal(&s, "exp(2*t1)").unwrap(), parse_signal(&s, "t1").unwrap()]]).unwrap();
        assert!(matches!(vmpum_of(&set, &OpConfig::default()), Err(Error::Domain(_))));
        let sh = AlgebraSpec::shift(1);
        let set = SignalSet::new(&sh, vec![vec![parse_signal(&sh, "exp(2*t1)").unwrap()]]).unwrap();
        assert!(matches!(vmpum_of(&set, &OpConfig::default()), Err(Error::Unsupported(_))));
    }

    #[test]
    fn signal_set_validation() {
        let w = AlgebraSpec::weyl(1);
        assert!(SignalSet::new(&w, vec![]).is_err());
        assert!(SignalSet::new(&w, vec![vec![]]).is_err());
        let one = PolySignal::new(&w, p(&w, "1")).unwrap();
        assert!(matches!(
            SignalSet::new(&w, vec![vec![one.clone()], vec![one.clone(), one]]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(kernel_kappa(&w, &[p(&w, "d1")], &OpConfig::default()).is_err());
    }

    #[test]
    fn minimize_drops_duplicates_and_keeps_minimal_sets() {
        let w = AlgebraSpec::weyl(1);
        let base = KernelRepresentation {
            spec: w.clone(),
            order: MonomialOrder::default_for(&w),
            rows: vec![
                ModuleVector(vec![p(&w, "d1^2")]),
                ModuleVector(vec![p(&w, "t1*d1 - 1")]),
            ],
            notes: vec![],
        };
        for how in [Minimizer::Greedy, Minimizer::Syzygy] {
            let same = minimize_generators(&base, how, &OpConfig::default()).unwrap();
            assert_eq!(same.rows.len(), 2);
            let mut dup = base.clone();
            dup.rows.push(dup.rows[0].clone());
            dup.rows.push(ModuleVector(vec![p(&w, "t1*d1^2")]));
            let min = minimize_generators(&dup, how, &OpConfig::default()).unwrap();
            assert_eq!(min.rows.len(), 2);
            assert!(module_equal(&min.submodule(1).unwrap(), &base.submodule(1).unwrap()).unwrap());
        }
    }
}
