//! Left Groebner bases of submodules of free modules over Ore algebras,
//! under position-over-term orderings.

mod engine;
mod module;
mod order;

use std::sync::Arc;

pub use engine::GbOptions;
pub use module::{ModuleVector, Submodule};
pub use order::{BaseOrder, ModuleOrder, MonomialOrder};

use crate::coeffs::FieldElem;
use crate::error::{Error, Result};
use crate::orecore::{AlgebraSpec, OreMonomial};
use engine::{Basis, Engine};

/// The greatest term of `v` under `ord`: (component, monomial, coefficient).
pub fn leading_term(v: &ModuleVector, ord: &ModuleOrder) -> Result<(usize, OreMonomial, FieldElem)> {
    let mut best: Option<(usize, &OreMonomial, &FieldElem)> = None;
    for (comp, p) in v.entries().iter().enumerate() {
        for (m, c) in p.terms() {
            let better = match best {
                None => true,
                Some((bc, bm, _)) => ord.cmp((comp, m), (bc, bm)).is_gt(),
            };
            if better {
                best = Some((comp, m, c));
            }
        }
    }
    best.map(|(c, m, k)| (c, m.clone(), k.clone())).ok_or(Error::ZeroVector)
}

/// Computes (or reuses) a reduced Groebner basis of `s` under `ord`.
pub fn left_groebner(s: &Submodule, ord: &ModuleOrder) -> Result<Submodule> {
    left_groebner_with(s, ord, GbOptions::default())
}

pub fn left_groebner_with(s: &Submodule, ord: &ModuleOrder, opts: GbOptions) -> Result<Submodule> {
    if let Some(b) = &s.basis {
        if &b.order == ord {
            return Ok(s.clone());
        }
    }
    let spec = s.spec();
    let mut engine = Engine::new(spec, ord);
    let rows: Vec<_> = s.gens().iter().map(|g| engine.to_row(g)).collect();
    let basis_rows = engine.groebner(&rows, opts)?;
    let vectors = basis_rows
        .iter()
        .map(|r| engine.to_vector(r, s.rank()))
        .collect();
    let mut out = s.clone();
    out.basis = Some(Arc::new(Basis {
        order: ord.clone(),
        rank: s.rank(),
        rows: basis_rows,
        vectors,
    }));
    Ok(out)
}

fn ensure_basis(g: &Submodule, ord: &ModuleOrder) -> Result<Arc<Basis>> {
    let with = left_groebner(g, ord)?;
    Ok(with.basis.clone().expect("basis just computed"))
}

/// Remainder of `v` after full left reduction by a Groebner basis of `g`
/// under `ord` (computed on demand if `g` has no matching cached basis).
/// The result is zero exactly when `v` lies in the module.
pub fn left_normal_form(v: &ModuleVector, g: &Submodule, ord: &ModuleOrder) -> Result<ModuleVector> {
    if v.rank() != g.rank() {
        return Err(Error::DimensionMismatch {
            expected: g.rank(),
            found: v.rank(),
        });
    }
    v.check(g.spec())?;
    let basis = ensure_basis(g, ord)?;
    let mut engine = Engine::new(g.spec(), ord);
    let row = engine.to_row(v);
    let r = engine.reduce(row, &basis.rows);
    Ok(engine.to_vector(&r, basis.rank))
}

impl Submodule {
    /// Membership test under the default ordering (or the cached one).
    pub fn contains(&self, v: &ModuleVector) -> Result<bool> {
        let ord = self.preferred_order();
        Ok(left_normal_form(v, self, &ord)?.is_zero())
    }

    /// Every generator of `other` lies in `self`.
    pub fn contains_module(&self, other: &Submodule) -> Result<bool> {
        if self.spec() != other.spec() {
            return Err(Error::AlgebraMismatch);
        }
        if self.rank() != other.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: other.rank(),
            });
        }
        let ord = self.preferred_order();
        let basis = ensure_basis(self, &ord)?;
        let mut engine = Engine::new(self.spec(), &ord);
        for g in other.gens() {
            let row = engine.to_row(g);
            if !engine.reduce(row, &basis.rows).is_empty() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn preferred_order(&self) -> ModuleOrder {
        match &self.basis {
            Some(b) => b.order.clone(),
            None => ModuleOrder::default_for(self.spec()),
        }
    }

    /// Checks that the cached basis is a Groebner basis (all S-pairs reduce
    /// to zero). Returns `false` if no basis is cached.
    pub fn verify_basis(&self) -> bool {
        match &self.basis {
            None => false,
            Some(b) => Engine::new(self.spec(), &b.order).is_groebner(&b.rows),
        }
    }
}

/// Equality of generated left submodules, by mutual reduction to zero.
pub fn module_equal(a: &Submodule, b: &Submodule) -> Result<bool> {
    Ok(a.contains_module(b)? && b.contains_module(a)?)
}

/// Convenience: a spec's default module ordering.
pub fn default_order(spec: &AlgebraSpec) -> ModuleOrder {
    ModuleOrder::default_for(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orecore::{mul, pow, OrePoly};

    fn w1() -> (AlgebraSpec, OrePoly, OrePoly) {
        let w = AlgebraSpec::weyl(1);
        let t = OrePoly::var(&w, 0);
        let d = OrePoly::op(&w, 0);
        (w, t, d)
    }

    fn vec1(p: OrePoly) -> ModuleVector {
        ModuleVector(vec![p])
    }

    #[test]
    fn leading_terms() {
        let (w, t, d) = w1();
        let ord = default_order(&w);
        let v = ModuleVector(vec![pow(&w, &d, 2).add(&t), OrePoly::zero()]);
        let (c, m, k) = leading_term(&v, &ord).unwrap();
        assert_eq!((c, m.exps().to_vec(), k.is_one()), (0, vec![0, 2], true));

        let s = AlgebraSpec::difference(1);
        let (ts, ds) = (OrePoly::var(&s, 0), OrePoly::op(&s, 0));
        let ords = default_order(&s);
        let v = ModuleVector(vec![OrePoly::zero(), mul(&s, &ts, &ds).unwrap().sub(&OrePoly::one(&s))]);
        let (c, m, _) = leading_term(&v, &ords).unwrap();
        assert_eq!((c, m.exps().to_vec()), (1, vec![1, 1]));
        let v = ModuleVector(vec![OrePoly::one(&s), pow(&s, &ts, 2).neg()]);
        let (c, m, _) = leading_term(&v, &ords).unwrap();
        assert_eq!((c, m.exps().to_vec()), (0, vec![0, 0]));

        assert_eq!(leading_term(&ModuleVector::zero(2), &ord), Err(Error::ZeroVector));
    }

    #[test]
    fn annihilator_of_t_is_already_a_basis() {
        let (w, t, d) = w1();
        let td1 = mul(&w, &t, &d).unwrap().sub(&OrePoly::one(&w));
        let d2 = pow(&w, &d, 2);
        let s = Submodule::ideal(&w, vec![d2.clone(), td1.clone()]).unwrap();
        let g = left_groebner(&s, &default_order(&w)).unwrap();
        let (_, rows) = g.basis().unwrap();
        assert_eq!(rows.len(), 2);
        assert!(rows.contains(&vec1(d2)));
        assert!(rows.contains(&vec1(td1.clone())));
        assert!(g.verify_basis());
        assert!(left_normal_form(&vec1(td1), &g, &default_order(&w)).unwrap().is_zero());
    }

    #[test]
    fn t_and_d_generate_everything() {
        let (w, t, d) = w1();
        let s = Submodule::ideal(&w, vec![t, d]).unwrap();
        let g = left_groebner(&s, &default_order(&w)).unwrap();
        let (_, rows) = g.basis().unwrap();
        assert_eq!(rows, &[vec1(OrePoly::one(&w))]);
    }

    #[test]
    fn zero_module_has_empty_basis() {
        let w = AlgebraSpec::weyl(1);
        let g = left_groebner(&Submodule::zero(&w, 2), &default_order(&w)).unwrap();
        assert!(g.basis().unwrap().1.is_empty());
    }

    #[test]
    fn irreducible_remainder() {
        let (w, _, d) = w1();
        let s = Submodule::ideal(&w, vec![pow(&w, &d, 2)]).unwrap();
        let r = left_normal_form(&vec1(d.clone()), &s, &default_order(&w)).unwrap();
        assert_eq!(r, vec1(d));
    }

    #[test]
    fn equality_examples() {
        let (w, t, d) = w1();
        let td1 = mul(&w, &t, &d).unwrap().sub(&OrePoly::one(&w));
        let d2 = pow(&w, &d, 2);
        // t d^2 = d (t d - 1) is redundant; t d^2 - d is not (it maps t to -1)
        let td2 = mul(&w, &t, &d2).unwrap();
        let a = Submodule::ideal(&w, vec![d2.clone(), td1.clone()]).unwrap();
        let b = Submodule::ideal(&w, vec![td1.clone(), d2.clone(), td2.clone()]).unwrap();
        assert!(module_equal(&a, &b).unwrap());
        let b2 = Submodule::ideal(&w, vec![td1, d2.clone(), td2.sub(&d)]).unwrap();
        assert!(!module_equal(&a, &b2).unwrap());
        let c = Submodule::ideal(&w, vec![d2]).unwrap();
        let e = Submodule::ideal(&w, vec![pow(&w, &d, 3)]).unwrap();
        assert!(!module_equal(&c, &e).unwrap());
    }

    #[test]
    fn degree_cap_aborts() {
        let (w, t, d) = w1();
        let s = Submodule::ideal(&w, vec![pow(&w, &t, 3), pow(&w, &d, 3)]).unwrap();
        let r = left_groebner_with(&s, &default_order(&w), GbOptions { degree_cap: 3 });
        assert!(matches!(r, Err(Error::DegreeCap { cap: 3, .. })));
    }
}
