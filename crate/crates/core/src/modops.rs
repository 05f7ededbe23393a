//! Module-theoretic constructions on top of the Groebner engine: left
//! syzygies, elimination of module components, kernels of homomorphisms into
//! finitely presented modules, annihilators and intersections.
//!
//! Everything reduces to one Groebner basis computation of a "tagged" module
//! under a position-over-term ordering, followed by keeping the basis rows
//! that vanish on the leading block of components.

use crate::error::{Error, Result};
use crate::gb::{left_groebner_with, GbOptions, ModuleOrder, ModuleVector, MonomialOrder, Submodule};
use crate::orecore::{AlgebraSpec, OrePoly};

/// Ordering and safety options shared by the constructions in this module.
#[derive(Clone, Debug, Default)]
pub struct OpConfig {
    /// Monomial tie-break inside a component; `None` means the spec default.
    pub monomial: Option<MonomialOrder>,
    pub gb: GbOptions,
}

impl OpConfig {
    pub fn with_order(monomial: MonomialOrder) -> Self {
        OpConfig {
            monomial: Some(monomial),
            gb: GbOptions::default(),
        }
    }

    pub fn module_order(&self, spec: &AlgebraSpec) -> ModuleOrder {
        ModuleOrder::new(
            self.monomial
                .clone()
                .unwrap_or_else(|| MonomialOrder::default_for(spec)),
        )
    }
}

/// Groebner basis of `rows` (rank `lead + tail`), then the basis rows whose
/// first `lead` components vanish, restricted to the remaining components.
fn eliminate_leading_block(
    spec: &AlgebraSpec,
    rows: Vec<ModuleVector>,
    lead: usize,
    tail: usize,
    cfg: &OpConfig,
) -> Result<Submodule> {
    let tagged = Submodule::new(spec, lead + tail, rows)?;
    let gb = left_groebner_with(&tagged, &cfg.module_order(spec), cfg.gb)?;
    let (_, basis) = gb.basis().expect("basis computed");
    let kept = basis
        .iter()
        .filter(|v| v.entries()[..lead].iter().all(OrePoly::is_zero))
        .map(|v| v.slice(lead..lead + tail))
        .collect();
    Submodule::new(spec, tail, kept)
}

fn common_rank(vectors: &[ModuleVector]) -> Result<usize> {
    let rank = vectors.first().map_or(0, ModuleVector::rank);
    for v in vectors {
        if v.rank() != rank {
            return Err(Error::DimensionMismatch {
                expected: rank,
                found: v.rank(),
            });
        }
    }
    Ok(rank)
}

/// Generators of `{ a in O^{1 x s} | sum a_i f_i = 0 }` for `f_1..f_s`.
pub fn left_syzygy(spec: &AlgebraSpec, f: &[ModuleVector], cfg: &OpConfig) -> Result<Submodule> {
    let n = common_rank(f)?;
    let s = f.len();
    let rows = f
        .iter()
        .enumerate()
        .map(|(i, fi)| fi.concat(&ModuleVector::unit(spec, s, i)))
        .collect();
    eliminate_leading_block(spec, rows, n, s, cfg)
}

/// Generators of `S ∩ (O e_k ⊕ ... ⊕ O e_l)` (components `k..` counted from
/// zero), kept at full rank with zeros in the eliminated components.
pub fn eliminate_components(s: &Submodule, k: usize, cfg: &OpConfig) -> Result<Submodule> {
    let spec = s.spec();
    if k > s.rank() {
        return Err(Error::DimensionMismatch {
            expected: s.rank(),
            found: k,
        });
    }
    let gb = left_groebner_with(s, &cfg.module_order(spec), cfg.gb)?;
    let (_, basis) = gb.basis().expect("basis computed");
    let kept = basis
        .iter()
        .filter(|v| v.entries()[..k].iter().all(OrePoly::is_zero))
        .cloned()
        .collect();
    Submodule::new(spec, s.rank(), kept)
}

/// `psi: O^{1 x s} -> O^{1 x n} / O^{1 x m} P`, `e_i -> [images_i]`.
#[derive(Clone, Debug)]
pub struct Homomorphism {
    pub spec: AlgebraSpec,
    pub target_rank: usize,
    /// Rows of the presentation matrix `P` (each of rank `target_rank`).
    pub relations: Vec<ModuleVector>,
    /// `Psi_1..Psi_s` (each of rank `target_rank`).
    pub images: Vec<ModuleVector>,
}

impl Homomorphism {
    pub fn source_rank(&self) -> usize {
        self.images.len()
    }

    fn validate(&self) -> Result<()> {
        for v in self.relations.iter().chain(&self.images) {
            if v.rank() != self.target_rank {
                return Err(Error::DimensionMismatch {
                    expected: self.target_rank,
                    found: v.rank(),
                });
            }
            v.check(&self.spec)?;
        }
        Ok(())
    }

    /// `psi(b)` as a vector of the free module O^{1 x n} (before reducing by P).
    pub fn apply(&self, b: &ModuleVector) -> ModuleVector {
        let mut out = ModuleVector::zero(self.target_rank);
        for (bi, psi) in b.entries().iter().zip(&self.images) {
            out = out.add(&psi.left_mul(&self.spec, bi));
        }
        out
    }
}

/// Generators of `ker psi`: the `b` for which some `a` satisfies
/// `sum b_i Psi_i + sum a_k P_k = 0`.
pub fn kernel_of_hom(h: &Homomorphism, cfg: &OpConfig) -> Result<Submodule> {
    h.validate()?;
    let spec = &h.spec;
    let n = h.target_rank;
    let s = h.source_rank();
    let mut rows: Vec<ModuleVector> = h
        .images
        .iter()
        .enumerate()
        .map(|(i, psi)| psi.concat(&ModuleVector::unit(spec, s, i)))
        .collect();
    rows.extend(h.relations.iter().map(|p| p.concat(&ModuleVector::zero(s))));
    eliminate_leading_block(spec, rows, n, s, cfg)
}

/// Kernel of the induced map on `O^{1 x s} / O^{1 x r} Q`: representatives
/// obtained by reducing a Groebner basis of `ker psi + Q` modulo `Q`.
pub fn kernel_of_hom_quotient(h: &Homomorphism, source_relations: &[ModuleVector], cfg: &OpConfig) -> Result<Submodule> {
    let spec = &h.spec;
    let s = h.source_rank();
    let ker = kernel_of_hom(h, cfg)?;
    let q = Submodule::new(spec, s, source_relations.to_vec())?;
    let mut sum_gens = ker.into_gens();
    sum_gens.extend(source_relations.iter().cloned());
    let order = cfg.module_order(spec);
    let sum = left_groebner_with(&Submodule::new(spec, s, sum_gens)?, &order, cfg.gb)?;
    let q = left_groebner_with(&q, &order, cfg.gb)?;
    let mut out = Vec::new();
    for v in sum.basis().expect("basis computed").1 {
        let r = crate::gb::left_normal_form(v, &q, &order)?;
        if !r.is_zero() && !out.contains(&r) {
            out.push(r);
        }
    }
    Submodule::new(spec, s, out)
}

/// `{ a in O | a [v] = 0 in O^{1 x n} / O^{1 x m} P }` as a left ideal.
pub fn annihilator(spec: &AlgebraSpec, v: &ModuleVector, relations: &[ModuleVector], cfg: &OpConfig) -> Result<Submodule> {
    let h = Homomorphism {
        spec: spec.clone(),
        target_rank: v.rank(),
        relations: relations.to_vec(),
        images: vec![v.clone()],
    };
    kernel_of_hom(&h, cfg)
}

/// `N_1 ∩ ... ∩ N_m` as the kernel of `e_i -> ([e_i], ..., [e_i])` into
/// `⊕ O^{1 x r} / N_j`, in one Groebner computation.
pub fn intersect(modules: &[Submodule], cfg: &OpConfig) -> Result<Submodule> {
    let first = modules
        .first()
        .ok_or_else(|| Error::Domain("intersection of an empty family".into()))?;
    let spec = first.spec();
    let r = first.rank();
    for m in modules {
        if m.spec() != spec {
            return Err(Error::AlgebraMismatch);
        }
        if m.rank() != r {
            return Err(Error::DimensionMismatch {
                expected: r,
                found: m.rank(),
            });
        }
    }
    if modules.len() == 1 {
        return Ok(first.basis_module());
    }
    let blocks = modules.len();
    let target = r * blocks;
    let images = (0..r)
        .map(|i| {
            let mut v = ModuleVector::zero(target);
            for b in 0..blocks {
                v.0[b * r + i] = OrePoly::one(spec);
            }
            v
        })
        .collect();
    let mut relations = Vec::new();
    for (b, m) in modules.iter().enumerate() {
        for g in m.gens() {
            let mut v = ModuleVector::zero(target);
            for (i, e) in g.entries().iter().enumerate() {
                v.0[b * r + i] = e.clone();
            }
            relations.push(v);
        }
    }
    kernel_of_hom(
        &Homomorphism {
            spec: spec.clone(),
            target_rank: target,
            relations,
            images,
        },
        cfg,
    )
}
