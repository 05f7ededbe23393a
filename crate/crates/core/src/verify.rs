//! Exact checks of kernel representations against signals: residuals of
//! every row on every signal, and a randomized probe that the model rejects
//! polynomials that are not multiples of the modeled signal.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::coeffs::FieldElem;
use crate::error::{Error, Result};
use crate::gb::ModuleVector;
use crate::orecore::{act, AlgebraSpec, OreMonomial, OrePoly, PolySignal};
use crate::vmpum::{KernelRepresentation, SignalSet};

/// Seed used by the falsifiability probe unless another one is given.
pub const DEFAULT_SEED: u64 = 20_240_601;

/// `row • w`, split by exponential factor; zero parts are dropped, so an
/// empty residual means the row annihilates the signal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residual {
    pub parts: Vec<PolySignal>,
}

impl Residual {
    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }
}

/// Residual of one row on one signal vector.
pub fn residual(spec: &AlgebraSpec, row: &ModuleVector, w: &[PolySignal]) -> Result<Residual> {
    if row.rank() != w.len() {
        return Err(Error::DimensionMismatch {
            expected: w.len(),
            found: row.rank(),
        });
    }
    let mut parts: Vec<PolySignal> = Vec::new();
    for (a, s) in row.entries().iter().zip(w) {
        let v = act(spec, a, s)?;
        let lambda = v.effective_lambda(spec);
        match parts.iter_mut().find(|p| p.effective_lambda(spec) == lambda) {
            Some(p) => p.poly = p.poly.add(&v.poly),
            None => parts.push(v),
        }
    }
    parts.retain(|p| !p.is_zero());
    Ok(Residual { parts })
}

#[derive(Clone, Debug)]
pub struct AnnihilationReport {
    /// `residuals[r][s]` is row `r` applied to signal `s`.
    pub residuals: Vec<Vec<Residual>>,
    pub pass: bool,
}

impl AnnihilationReport {
    /// `(row, signal)` pairs with a nonzero residual.
    pub fn failures(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (r, row) in self.residuals.iter().enumerate() {
            for (s, res) in row.iter().enumerate() {
                if !res.is_zero() {
                    out.push((r, s));
                }
            }
        }
        out
    }
}

/// Applies every row to every signal exactly.
pub fn check_annihilation(r: &KernelRepresentation, set: &SignalSet) -> Result<AnnihilationReport> {
    if r.spec != *set.spec() {
        return Err(Error::AlgebraMismatch);
    }
    let residuals = r
        .rows
        .iter()
        .map(|row| set.signals().iter().map(|w| residual(&r.spec, row, w)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let pass = residuals.iter().flatten().all(Residual::is_zero);
    Ok(AnnihilationReport { residuals, pass })
}

#[derive(Clone, Debug)]
pub struct ProbeTrial {
    pub candidate: Vec<OrePoly>,
    /// First row with a nonzero residual on the candidate.
    pub falsified_by: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct ProbeReport {
    pub seed: u64,
    pub trials: Vec<ProbeTrial>,
    /// Candidates discarded for being scalar multiples of the signal.
    pub skipped_proportional: usize,
    pub pass: bool,
}

/// True if `q = c p` for some scalar `c` (including `c = 0`).
pub fn is_proportional(p: &[OrePoly], q: &[OrePoly]) -> bool {
    let Some((k, pivot)) = p.iter().enumerate().find(|(_, x)| !x.is_zero()) else {
        return q.iter().all(OrePoly::is_zero);
    };
    let (m, pc) = pivot.terms().next().expect("nonzero");
    let qc = match q[k].coeff(m) {
        Some(c) => c.clone(),
        None => return q.iter().all(OrePoly::is_zero),
    };
    let c = &qc / pc;
    p.iter().zip(q).all(|(a, b)| a.scale(&c) == *b)
}

fn monomials_up_to(n: usize, width: usize, degree: u32) -> Vec<OreMonomial> {
    let mut out = vec![vec![0u16; width]];
    for j in 0..n {
        out = out
            .into_iter()
            .flat_map(|e| {
                let used: u32 = e.iter().map(|&x| x as u32).sum();
                (0..=(degree - used) as u16).map(move |k| {
                    let mut e = e.clone();
                    e[j] = k;
                    e
                })
            })
            .collect();
    }
    out.iter().map(|e| OreMonomial::from_exps(e)).collect()
}

fn random_poly(spec: &AlgebraSpec, monos: &[OreMonomial], rng: &mut StdRng) -> OrePoly {
    let mut p = OrePoly::zero();
    for m in monos {
        let c: i64 = rng.gen_range(-3..=3);
        p.add_term(m.clone(), FieldElem::from_int(spec.field(), c));
    }
    p
}

/// Draws `trials` random polynomial vectors of total degree at most `degree`
/// with coefficients in `-3..=3`, skipping multiples of `p`, and checks that
/// each one is rejected by some row of `r`.
pub fn falsifiability_probe(
    r: &KernelRepresentation,
    p: &[OrePoly],
    trials: usize,
    degree: u32,
    seed: u64,
) -> Result<ProbeReport> {
    let spec = &r.spec;
    if p.len() != r.dim() {
        return Err(Error::DimensionMismatch {
            expected: r.dim(),
            found: p.len(),
        });
    }
    if p.iter().all(OrePoly::is_zero) {
        return Err(Error::ZeroVector);
    }
    for x in p {
        PolySignal::new(spec, x.clone())?;
    }
    let monos = monomials_up_to(spec.nvars(), spec.width(), degree);
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(trials);
    let mut skipped = 0;
    while out.len() < trials {
        let q: Vec<_> = p.iter().map(|_| random_poly(spec, &monos, &mut rng)).collect();
        if is_proportional(p, &q) {
            skipped += 1;
            if skipped > 1000 * (trials + 1) {
                return Err(Error::Domain("could not draw non-proportional candidates".into()));
            }
            continue;
        }
        let signal = q.iter().map(|x| PolySignal::new(spec, x.clone())).collect::<Result<Vec<_>>>()?;
        let mut falsified_by = None;
        for (i, row) in r.rows.iter().enumerate() {
            if !residual(spec, row, &signal)?.is_zero() {
                falsified_by = Some(i);
                break;
            }
        }
        out.push(ProbeTrial {
            candidate: q,
            falsified_by,
        });
    }
    let pass = out.iter().all(|t| t.falsified_by.is_some());
    Ok(ProbeReport {
        seed,
        trials: out,
        skipped_proportional: skipped,
        pass,
    })
}
