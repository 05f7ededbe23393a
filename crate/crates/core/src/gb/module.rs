use std::sync::Arc;

use crate::coeffs::FieldElem;
use crate::error::{Error, Result};
use crate::orecore::{mul_unchecked, AlgebraSpec, OrePoly};

use super::engine::Basis;
use super::order::ModuleOrder;

/// A row vector in the free module O^{1 x l}.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ModuleVector(pub Vec<OrePoly>);

impl ModuleVector {
    pub fn zero(rank: usize) -> Self {
        ModuleVector(vec![OrePoly::zero(); rank])
    }

    /// The canonical basis vector `e_i`.
    pub fn unit(spec: &AlgebraSpec, rank: usize, i: usize) -> Self {
        let mut v = ModuleVector::zero(rank);
        v.0[i] = OrePoly::one(spec);
        v
    }

    pub fn from_entries(entries: Vec<OrePoly>) -> Self {
        ModuleVector(entries)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[OrePoly] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(OrePoly::is_zero)
    }

    pub fn add(&self, other: &ModuleVector) -> ModuleVector {
        ModuleVector(self.0.iter().zip(&other.0).map(|(a, b)| a.add(b)).collect())
    }

    pub fn sub(&self, other: &ModuleVector) -> ModuleVector {
        ModuleVector(self.0.iter().zip(&other.0).map(|(a, b)| a.sub(b)).collect())
    }

    pub fn scale(&self, c: &FieldElem) -> ModuleVector {
        ModuleVector(self.0.iter().map(|a| a.scale(c)).collect())
    }

    /// `a * v` (left scalar multiplication by an algebra element).
    pub fn left_mul(&self, spec: &AlgebraSpec, a: &OrePoly) -> ModuleVector {
        ModuleVector(self.0.iter().map(|e| mul_unchecked(spec, a, e)).collect())
    }

    /// Concatenation `[self | other]`.
    pub fn concat(&self, other: &ModuleVector) -> ModuleVector {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        ModuleVector(v)
    }

    /// Entries `range` as a new vector.
    pub fn slice(&self, range: std::ops::Range<usize>) -> ModuleVector {
        ModuleVector(self.0[range].to_vec())
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(OrePoly::total_degree).max().unwrap_or(0)
    }

    pub fn check(&self, spec: &AlgebraSpec) -> Result<()> {
        self.0.iter().try_for_each(|p| p.check(spec))
    }
}

/// A finitely generated left submodule of O^{1 x rank}, optionally carrying
/// a cached reduced Groebner basis.
#[derive(Clone, Debug)]
pub struct Submodule {
    spec: AlgebraSpec,
    rank: usize,
    gens: Vec<ModuleVector>,
    pub(crate) basis: Option<Arc<Basis>>,
}

impl Submodule {
    pub fn new(spec: &AlgebraSpec, rank: usize, gens: Vec<ModuleVector>) -> Result<Self> {
        for g in &gens {
            if g.rank() != rank {
                return Err(Error::DimensionMismatch {
                    expected: rank,
                    found: g.rank(),
                });
            }
            g.check(spec)?;
        }
        Ok(Submodule {
            spec: spec.clone(),
            rank,
            gens,
            basis: None,
        })
    }

    /// A left ideal given by generators.
    pub fn ideal(spec: &AlgebraSpec, gens: Vec<OrePoly>) -> Result<Self> {
        Submodule::new(spec, 1, gens.into_iter().map(|g| ModuleVector(vec![g])).collect())
    }

    pub fn zero(spec: &AlgebraSpec, rank: usize) -> Self {
        Submodule {
            spec: spec.clone(),
            rank,
            gens: Vec::new(),
            basis: None,
        }
    }

    /// The whole free module, generated by `e_1..e_rank`.
    pub fn free(spec: &AlgebraSpec, rank: usize) -> Self {
        let gens = (0..rank).map(|i| ModuleVector::unit(spec, rank, i)).collect();
        Submodule {
            spec: spec.clone(),
            rank,
            gens,
            basis: None,
        }
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gens(&self) -> &[ModuleVector] {
        &self.gens
    }

    pub fn into_gens(self) -> Vec<ModuleVector> {
        self.gens
    }

    /// Cached basis rows and the ordering they were computed under.
    pub fn basis(&self) -> Option<(&ModuleOrder, &[ModuleVector])> {
        self.basis.as_ref().map(|b| (&b.order, b.vectors.as_slice()))
    }

    /// A submodule generated by the cached basis (or the generators if no
    /// basis is cached), without the cache.
    pub fn basis_module(&self) -> Submodule {
        let gens = match &self.basis {
            Some(b) => b.vectors.clone(),
            None => self.gens.clone(),
        };
        Submodule {
            spec: self.spec.clone(),
            rank: self.rank,
            gens,
            basis: None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.gens.iter().all(ModuleVector::is_zero)
    }
}
