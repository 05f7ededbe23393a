use std::cmp::Ordering;
use std::fmt;

use crate::orecore::{AlgebraFamily, AlgebraSpec, OperatorKind, OreMonomial};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum BaseOrder {
    DegRevLex,
    DegLex,
}

impl BaseOrder {
    pub fn name(self) -> &'static str {
        match self {
            BaseOrder::DegRevLex => "degrevlex",
            BaseOrder::DegLex => "deglex",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "degrevlex" => Some(BaseOrder::DegRevLex),
            "deglex" => Some(BaseOrder::DegLex),
            _ => None,
        }
    }
}

impl fmt::Display for BaseOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A degree-compatible monomial ordering on the combined exponents (t, d).
///
/// `precedence` lists combined indices from the greatest variable to the
/// least. Degree compatibility makes every supported commutation rule
/// lower the order of the non-leading terms, so leading monomials multiply.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialOrder {
    base: BaseOrder,
    precedence: Vec<usize>,
}

impl MonomialOrder {
    /// Operators above variables; in the SW algebra `opvars_first` puts the
    /// difference operators above the derivations (otherwise the reverse).
    pub fn new(spec: &AlgebraSpec, base: BaseOrder, opvars_first: bool) -> Self {
        let n = spec.nvars();
        let mut ops: Vec<usize> = (0..spec.nops()).collect();
        if spec.family() == AlgebraFamily::Sw && !opvars_first {
            ops.sort_by_key(|&i| spec.op(i).kind != OperatorKind::Weyl);
        }
        let mut precedence: Vec<usize> = ops.into_iter().map(|i| n + i).collect();
        precedence.extend(0..n);
        MonomialOrder { base, precedence }
    }

    pub fn default_for(spec: &AlgebraSpec) -> Self {
        MonomialOrder::new(spec, BaseOrder::DegRevLex, true)
    }

    pub fn base(&self) -> BaseOrder {
        self.base
    }

    pub fn precedence(&self) -> &[usize] {
        &self.precedence
    }

    pub fn cmp(&self, a: &OreMonomial, b: &OreMonomial) -> Ordering {
        let (ea, eb) = (a.exps(), b.exps());
        let da: u32 = ea.iter().map(|&e| e as u32).sum();
        let db: u32 = eb.iter().map(|&e| e as u32).sum();
        if da != db {
            return da.cmp(&db);
        }
        match self.base {
            BaseOrder::DegLex => {
                for &k in &self.precedence {
                    if ea[k] != eb[k] {
                        return ea[k].cmp(&eb[k]);
                    }
                }
                Ordering::Equal
            }
            BaseOrder::DegRevLex => {
                for &k in self.precedence.iter().rev() {
                    if ea[k] != eb[k] {
                        return eb[k].cmp(&ea[k]);
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// Position-over-term ordering on a free module: `e_1 > e_2 > ...`, ties
/// broken by the monomial ordering.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ModuleOrder {
    pub monomial: MonomialOrder,
}

impl ModuleOrder {
    pub fn new(monomial: MonomialOrder) -> Self {
        ModuleOrder { monomial }
    }

    pub fn default_for(spec: &AlgebraSpec) -> Self {
        ModuleOrder::new(MonomialOrder::default_for(spec))
    }

    /// Compares `(component, monomial)` module terms.
    pub fn cmp(&self, a: (usize, &OreMonomial), b: (usize, &OreMonomial)) -> Ordering {
        match b.0.cmp(&a.0) {
            Ordering::Equal => self.monomial.cmp(a.1, b.1),
            other => other,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u16]) -> OreMonomial {
        OreMonomial::from_exps(e)
    }

    #[test]
    fn operators_dominate_variables() {
        let w = AlgebraSpec::weyl(1);
        let ord = MonomialOrder::default_for(&w);
        // d > t at equal degree, both orders
        assert_eq!(ord.cmp(&mono(&[0, 1]), &mono(&[1, 0])), Ordering::Greater);
        let lex = MonomialOrder::new(&w, BaseOrder::DegLex, true);
        assert_eq!(lex.cmp(&mono(&[0, 1]), &mono(&[1, 0])), Ordering::Greater);
        // degree first
        assert_eq!(ord.cmp(&mono(&[2, 0]), &mono(&[0, 1])), Ordering::Greater);
    }

    #[test]
    fn sw_precedence_switch() {
        let sw = AlgebraSpec::sw(1);
        // exps: t1, D1, d1
        let big_d = mono(&[0, 1, 0]);
        let d = mono(&[0, 0, 1]);
        let first = MonomialOrder::new(&sw, BaseOrder::DegLex, true);
        assert_eq!(first.cmp(&big_d, &d), Ordering::Greater);
        let second = MonomialOrder::new(&sw, BaseOrder::DegLex, false);
        assert_eq!(second.cmp(&big_d, &d), Ordering::Less);
    }

    #[test]
    fn position_over_term() {
        let w = AlgebraSpec::weyl(1);
        let ord = ModuleOrder::default_for(&w);
        let one = mono(&[0, 0]);
        let t2 = mono(&[2, 0]);
        assert_eq!(ord.cmp((0, &one), (1, &t2)), Ordering::Greater);
    }

    #[test]
    fn degrevlex_and_deglex_differ() {
        // three variables: commutative K[t1,t2,t3], precedence t1 > t2 > t3
        let c = AlgebraSpec::commutative(3, crate::coeffs::FieldKind::Rational);
        let a = mono(&[1, 0, 1]); // t1 t3
        let b = mono(&[0, 2, 0]); // t2^2
        let rev = MonomialOrder::new(&c, BaseOrder::DegRevLex, true);
        let lex = MonomialOrder::new(&c, BaseOrder::DegLex, true);
        assert_eq!(lex.cmp(&a, &b), Ordering::Greater);
        assert_eq!(rev.cmp(&a, &b), Ordering::Less);
    }
}
