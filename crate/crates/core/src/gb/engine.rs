//! Left Buchberger algorithm for submodules of free modules over a solvable
//! Ore algebra. Rows are kept sparse and sorted ascending under the module
//! ordering so the leading term is always the last entry.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::coeffs::FieldElem;
use crate::error::{Error, Result};
use crate::orecore::{AlgebraSpec, Exponents, OreMonomial};

use super::module::ModuleVector;
use super::order::ModuleOrder;

#[derive(Clone, Debug)]
pub(crate) struct Term {
    pub comp: usize,
    pub mon: OreMonomial,
    pub coef: FieldElem,
}

pub(crate) type Row = Vec<Term>;

/// A reduced Groebner basis together with the ordering it belongs to.
#[derive(Debug)]
pub(crate) struct Basis {
    pub order: ModuleOrder,
    pub rank: usize,
    pub rows: Vec<Row>,
    pub vectors: Vec<ModuleVector>,
}

/// Tuning and safety options for Groebner computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GbOptions {
    /// Abort once a basis element exceeds this total degree.
    pub degree_cap: u32,
}

impl Default for GbOptions {
    fn default() -> Self {
        GbOptions { degree_cap: 40 }
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    comp: usize,
    lcm: OreMonomial,
    /// Degree the S-polynomial would have without cancellation.
    sugar: u32,
}

pub(crate) struct Engine<'a> {
    spec: &'a AlgebraSpec,
    order: &'a ModuleOrder,
    commute_cache: HashMap<(Exponents, Exponents), Vec<(OreMonomial, FieldElem)>>,
}

impl<'a> Engine<'a> {
    pub fn new(spec: &'a AlgebraSpec, order: &'a ModuleOrder) -> Self {
        Engine {
            spec,
            order,
            commute_cache: HashMap::new(),
        }
    }

    fn cmp_terms(&self, a: &Term, b: &Term) -> Ordering {
        self.order.cmp((a.comp, &a.mon), (b.comp, &b.mon))
    }

    pub fn to_row(&self, v: &ModuleVector) -> Row {
        let mut row: Row = v
            .entries()
            .iter()
            .enumerate()
            .flat_map(|(comp, p)| {
                p.terms().map(move |(m, c)| Term {
                    comp,
                    mon: m.clone(),
                    coef: c.clone(),
                })
            })
            .collect();
        row.sort_by(|a, b| self.cmp_terms(a, b));
        row
    }

    pub fn to_vector(&self, row: &Row, rank: usize) -> ModuleVector {
        let mut v = ModuleVector::zero(rank);
        for t in row {
            v.0[t.comp].add_term(t.mon.clone(), t.coef.clone());
        }
        v
    }

    /// `a - c * b`
    fn sub_scaled(&self, a: Row, c: &FieldElem, b: &Row) -> Row {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let mut ia = a.into_iter().peekable();
        let mut ib = b.iter().peekable();
        loop {
            match (ia.peek(), ib.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(ia.next().unwrap()),
                (None, Some(_)) => {
                    let t = ib.next().unwrap();
                    out.push(Term {
                        comp: t.comp,
                        mon: t.mon.clone(),
                        coef: -&(c * &t.coef),
                    });
                }
                (Some(x), Some(y)) => match self.cmp_terms(x, y) {
                    Ordering::Less => out.push(ia.next().unwrap()),
                    Ordering::Greater => {
                        let t = ib.next().unwrap();
                        out.push(Term {
                            comp: t.comp,
                            mon: t.mon.clone(),
                            coef: -&(c * &t.coef),
                        });
                    }
                    Ordering::Equal => {
                        let mut x = ia.next().unwrap();
                        let y = ib.next().unwrap();
                        x.coef = &x.coef - &(c * &y.coef);
                        if !x.coef.is_zero() {
                            out.push(x);
                        }
                    }
                },
            }
        }
        out
    }

    /// `u * row` for a monomial `u = t^a d^b`.
    fn mul_monomial(&mut self, u: &OreMonomial, row: &Row) -> Row {
        let spec = self.spec;
        let n = spec.nvars();
        let ubeta = u.beta(spec);
        let ualpha = u.alpha(spec);
        let mut acc: HashMap<(usize, OreMonomial), FieldElem> = HashMap::with_capacity(row.len() * 2);
        let mut push = |comp: usize, mon: OreMonomial, coef: FieldElem| {
            use std::collections::hash_map::Entry;
            match acc.entry((comp, mon)) {
                Entry::Vacant(v) => {
                    v.insert(coef);
                }
                Entry::Occupied(mut o) => {
                    let s = o.get() + &coef;
                    *o.get_mut() = s;
                }
            }
        };
        for t in row {
            let gamma = t.mon.alpha(spec);
            let trivial = ubeta
                .iter()
                .enumerate()
                .all(|(i, &e)| e == 0 || gamma[spec.op(i).var] == 0);
            if trivial {
                push(t.comp, u.mul(&t.mon), t.coef.clone());
                continue;
            }
            let key: (Exponents, Exponents) = (ubeta.into(), gamma.into());
            let middle = self
                .commute_cache
                .entry(key)
                .or_insert_with(|| crate::orecore::poly_commute(spec, ubeta, gamma));
            let eps = t.mon.beta(spec);
            for (m, c) in middle.iter() {
                let mut exps: Exponents = Exponents::with_capacity(spec.width());
                for k in 0..n {
                    exps.push(ualpha[k] + m.exps()[k]);
                }
                for (i, &e) in eps.iter().enumerate() {
                    exps.push(m.exps()[n + i] + e);
                }
                push(t.comp, OreMonomial::from_exps(&exps), &t.coef * c);
            }
        }
        let mut out: Row = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((comp, mon), coef)| Term { comp, mon, coef })
            .collect();
        out.sort_by(|a, b| self.cmp_terms(a, b));
        out
    }

    fn find_reducer(&self, t: &Term, basis: &[Row]) -> Option<usize> {
        basis.iter().position(|g| {
            let lead = g.last().unwrap();
            lead.comp == t.comp && lead.mon.divides(&t.mon)
        })
    }

    /// Reduces the leading term of `f` until it is irreducible modulo `basis`.
    fn reduce_top(&mut self, mut f: Row, basis: &[Row]) -> Row {
        while let Some(top) = f.last() {
            let Some(k) = self.find_reducer(top, basis) else { break };
            let g = &basis[k];
            let u = g.last().unwrap().mon.quotient(&top.mon);
            let prod = self.mul_monomial(&u, g);
            let c = &top.coef / &prod.last().unwrap().coef;
            f = self.sub_scaled(f, &c, &prod);
        }
        f
    }

    /// Full left reduction of `f` modulo `basis`.
    pub fn reduce(&mut self, mut f: Row, basis: &[Row]) -> Row {
        let mut done: Vec<Term> = Vec::new();
        while let Some(top) = f.last() {
            match self.find_reducer(top, basis) {
                Some(k) => {
                    let g = &basis[k];
                    let glead = g.last().unwrap();
                    let u = glead.mon.quotient(&top.mon);
                    let prod = self.mul_monomial(&u, g);
                    let c = &top.coef / &prod.last().unwrap().coef;
                    f = self.sub_scaled(f, &c, &prod);
                }
                None => done.push(f.pop().unwrap()),
            }
        }
        done.reverse();
        done
    }

    fn make_monic(&self, row: &mut Row) {
        if let Some(lead) = row.last() {
            if lead.coef.is_one() {
                return;
            }
            let inv = lead.coef.inv().expect("nonzero leading coefficient");
            for t in row.iter_mut() {
                t.coef = &t.coef * &inv;
            }
        }
    }

    fn s_poly(&mut self, gi: &Row, gj: &Row, lcm: &OreMonomial) -> Row {
        let li = gi.last().unwrap();
        let lj = gj.last().unwrap();
        let ui = li.mon.quotient(lcm);
        let uj = lj.mon.quotient(lcm);
        let mut pi = self.mul_monomial(&ui, gi);
        let pj = self.mul_monomial(&uj, gj);
        self.make_monic(&mut pi);
        let c = pj.last().unwrap().coef.inv().unwrap();
        // pi - pj / lc(pj)
        self.sub_scaled(pi, &c, &pj)
    }

    fn row_degree(row: &Row) -> u32 {
        row.iter().map(|t| t.mon.total_degree()).max().unwrap_or(0)
    }

    /// Reduced left Groebner basis of the module generated by `gens`,
    /// sorted ascending by leading term.
    ///
    /// Pairs are selected by the sugar strategy (smallest sugar degree, then
    /// smallest lcm); S-polynomials are only top-reduced until the final
    /// interreduction.
    pub fn groebner(&mut self, gens: &[Row], opts: GbOptions) -> Result<Vec<Row>> {
        let mut basis: Vec<Row> = Vec::new();
        let mut sugar: Vec<u32> = Vec::new();
        let mut pairs: Vec<Pair> = Vec::new();
        for g in gens {
            let mut r = self.reduce_top(g.clone(), &basis);
            if r.is_empty() {
                continue;
            }
            self.make_monic(&mut r);
            let d = Self::row_degree(&r);
            self.insert(&mut basis, &mut sugar, &mut pairs, r, d, opts)?;
        }
        while !pairs.is_empty() {
            let best = (0..pairs.len())
                .min_by(|&a, &b| {
                    let (pa, pb) = (&pairs[a], &pairs[b]);
                    pa.sugar
                        .cmp(&pb.sugar)
                        .then_with(|| self.order.cmp((pa.comp, &pa.lcm), (pb.comp, &pb.lcm)))
                        .then((pa.j, pa.i).cmp(&(pb.j, pb.i)))
                })
                .unwrap();
            let pair = pairs.swap_remove(best);
            let s = self.s_poly(&basis[pair.i], &basis[pair.j], &pair.lcm);
            let mut r = self.reduce_top(s, &basis);
            if r.is_empty() {
                continue;
            }
            self.make_monic(&mut r);
            let d = pair.sugar.max(Self::row_degree(&r));
            self.insert(&mut basis, &mut sugar, &mut pairs, r, d, opts)?;
        }
        Ok(self.interreduce(basis))
    }

    fn insert(
        &mut self,
        basis: &mut Vec<Row>,
        sugar: &mut Vec<u32>,
        pairs: &mut Vec<Pair>,
        row: Row,
        row_sugar: u32,
        opts: GbOptions,
    ) -> Result<()> {
        let degree = Self::row_degree(&row);
        if degree > opts.degree_cap {
            return Err(Error::DegreeCap {
                cap: opts.degree_cap,
                degree,
            });
        }
        let k = basis.len();
        let lead = row.last().unwrap().clone();
        // chain criterion on pending pairs
        pairs.retain(|p| {
            if p.comp != lead.comp || !lead.mon.divides(&p.lcm) {
                return true;
            }
            let li = &basis[p.i].last().unwrap().mon;
            let lj = &basis[p.j].last().unwrap().mon;
            li.lcm(&lead.mon) == p.lcm || lj.lcm(&lead.mon) == p.lcm
        });
        // new pairs, pruned by the chain criterion among themselves
        let mut fresh: Vec<Pair> = basis
            .iter()
            .enumerate()
            .filter(|(_, g)| g.last().unwrap().comp == lead.comp)
            .map(|(i, g)| {
                let gl = &g.last().unwrap().mon;
                let lcm = gl.lcm(&lead.mon);
                let lcm_deg = lcm.total_degree();
                let si = sugar[i] + lcm_deg - gl.total_degree();
                let sk = row_sugar + lcm_deg - lead.mon.total_degree();
                Pair {
                    i,
                    j: k,
                    comp: lead.comp,
                    lcm,
                    sugar: si.max(sk),
                }
            })
            .collect();
        let mut keep = vec![true; fresh.len()];
        for a in 0..fresh.len() {
            for b in 0..fresh.len() {
                if a == b || !keep[b] {
                    continue;
                }
                let (la, lb) = (&fresh[a].lcm, &fresh[b].lcm);
                if lb.divides(la) && (lb != la || b < a) {
                    keep[a] = false;
                    break;
                }
            }
        }
        let mut idx = 0;
        fresh.retain(|_| {
            idx += 1;
            keep[idx - 1]
        });
        pairs.extend(fresh);
        basis.push(row);
        sugar.push(row_sugar);
        Ok(())
    }

    fn interreduce(&mut self, basis: Vec<Row>) -> Vec<Row> {
        // drop elements whose leading term is divisible by another one
        let mut minimal: Vec<Row> = Vec::new();
        for (i, g) in basis.iter().enumerate() {
            let lg = g.last().unwrap();
            let redundant = basis.iter().enumerate().any(|(j, h)| {
                let lh = h.last().unwrap();
                j != i && lh.comp == lg.comp && lh.mon.divides(&lg.mon) && (lh.mon != lg.mon || j < i)
            });
            if !redundant {
                minimal.push(g.clone());
            }
        }
        let mut reduced = Vec::with_capacity(minimal.len());
        for i in 0..minimal.len() {
            let mut g = minimal[i].clone();
            let lead = g.pop().unwrap();
            let others: Vec<Row> = minimal
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, r)| r.clone())
                .collect();
            let mut tail = self.reduce(g, &others);
            tail.push(lead);
            self.make_monic(&mut tail);
            reduced.push(tail);
        }
        reduced.sort_by(|a, b| self.cmp_terms(a.last().unwrap(), b.last().unwrap()));
        reduced
    }

    /// All S-pairs of `basis` reduce to zero.
    pub fn is_groebner(&mut self, basis: &[Row]) -> bool {
        for i in 0..basis.len() {
            for j in (i + 1)..basis.len() {
                let (li, lj) = (basis[i].last().unwrap(), basis[j].last().unwrap());
                if li.comp != lj.comp {
                    continue;
                }
                let lcm = li.mon.lcm(&lj.mon);
                let s = self.s_poly(&basis[i], &basis[j], &lcm);
                if !self.reduce(s, basis).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}
