use std::fmt;

use crate::coeffs::FieldKind;
use crate::error::{Error, Result};

/// How an operator commutes with the variable it acts on.
///
/// | kind       | commutation with its variable t      | action on p        |
/// |------------|--------------------------------------|--------------------|
/// | Weyl       | d t = t d + 1                        | dp/dt              |
/// | Shift      | s t = t s + s                        | p(t+1)             |
/// | Difference | D t = t D + D + 1                    | p(t+1) - p(t)      |
/// | QDiff      | d t = q t d + (q-1) t                | p(qt) - p(t)       |
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum OperatorKind {
    Weyl,
    Shift,
    Difference,
    QDiff,
}

impl OperatorKind {
    pub fn symbol(self) -> &'static str {
        match self {
            OperatorKind::Weyl | OperatorKind::QDiff => "d",
            OperatorKind::Difference => "D",
            OperatorKind::Shift => "s",
        }
    }

    /// Discrete operators act through `t -> t+1` and twist discrete exponentials.
    pub fn is_discrete(self) -> bool {
        matches!(self, OperatorKind::Shift | OperatorKind::Difference)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Operator {
    pub kind: OperatorKind,
    /// Index of the variable `t_var` this operator does not commute with.
    pub var: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum AlgebraFamily {
    /// K[t_1..t_n] with no operators.
    Commutative,
    Weyl,
    Shift,
    Difference,
    /// Difference operators D_1..D_n together with derivations d_1..d_n.
    Sw,
    QDiff,
}

impl AlgebraFamily {
    pub fn name(self) -> &'static str {
        match self {
            AlgebraFamily::Commutative => "commutative",
            AlgebraFamily::Weyl => "weyl",
            AlgebraFamily::Shift => "shift",
            AlgebraFamily::Difference => "difference",
            AlgebraFamily::Sw => "sw",
            AlgebraFamily::QDiff => "qdiff",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "commutative" => AlgebraFamily::Commutative,
            "weyl" => AlgebraFamily::Weyl,
            "shift" => AlgebraFamily::Shift,
            "difference" => AlgebraFamily::Difference,
            "sw" => AlgebraFamily::Sw,
            "qdiff" => AlgebraFamily::QDiff,
            _ => return None,
        })
    }
}

impl fmt::Display for AlgebraFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A polynomial Ore algebra K[t_1..t_n][d_1; s_1, delta_1]...[d_s; s_s, delta_s]
/// whose operators each act on exactly one variable and commute pairwise.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AlgebraSpec {
    family: AlgebraFamily,
    nvars: usize,
    ops: Vec<Operator>,
    field: FieldKind,
    ops_by_var: Vec<Vec<usize>>,
}

impl AlgebraSpec {
    fn build(family: AlgebraFamily, nvars: usize, ops: Vec<Operator>, field: FieldKind) -> Self {
        let mut ops_by_var = vec![Vec::new(); nvars];
        for (i, op) in ops.iter().enumerate() {
            ops_by_var[op.var].push(i);
        }
        AlgebraSpec {
            family,
            nvars,
            ops,
            field,
            ops_by_var,
        }
    }

    fn uniform(family: AlgebraFamily, kind: OperatorKind, nvars: usize, field: FieldKind) -> Self {
        let ops = (0..nvars).map(|var| Operator { kind, var }).collect();
        AlgebraSpec::build(family, nvars, ops, field)
    }

    pub fn weyl(nvars: usize) -> Self {
        AlgebraSpec::uniform(AlgebraFamily::Weyl, OperatorKind::Weyl, nvars, FieldKind::Rational)
    }

    pub fn shift(nvars: usize) -> Self {
        AlgebraSpec::uniform(AlgebraFamily::Shift, OperatorKind::Shift, nvars, FieldKind::Rational)
    }

    pub fn difference(nvars: usize) -> Self {
        AlgebraSpec::uniform(
            AlgebraFamily::Difference,
            OperatorKind::Difference,
            nvars,
            FieldKind::Rational,
        )
    }

    pub fn qdiff(nvars: usize) -> Self {
        AlgebraSpec::uniform(AlgebraFamily::QDiff, OperatorKind::QDiff, nvars, FieldKind::RatFunc)
    }

    /// Operators D_1..D_n (difference) followed by d_1..d_n (Weyl).
    pub fn sw(nvars: usize) -> Self {
        let mut ops: Vec<Operator> = (0..nvars)
            .map(|var| Operator {
                kind: OperatorKind::Difference,
                var,
            })
            .collect();
        ops.extend((0..nvars).map(|var| Operator {
            kind: OperatorKind::Weyl,
            var,
        }));
        AlgebraSpec::build(AlgebraFamily::Sw, nvars, ops, FieldKind::Rational)
    }

    /// The commutative polynomial ring K[t_1..t_n].
    pub fn commutative(nvars: usize, field: FieldKind) -> Self {
        AlgebraSpec::build(AlgebraFamily::Commutative, nvars, Vec::new(), field)
    }

    pub fn from_family(family: AlgebraFamily, nvars: usize) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::Domain("an algebra needs at least one variable".into()));
        }
        Ok(match family {
            AlgebraFamily::Commutative => AlgebraSpec::commutative(nvars, FieldKind::Rational),
            AlgebraFamily::Weyl => AlgebraSpec::weyl(nvars),
            AlgebraFamily::Shift => AlgebraSpec::shift(nvars),
            AlgebraFamily::Difference => AlgebraSpec::difference(nvars),
            AlgebraFamily::Sw => AlgebraSpec::sw(nvars),
            AlgebraFamily::QDiff => AlgebraSpec::qdiff(nvars),
        })
    }

    /// The same variables and field without any operators.
    pub fn commutative_base(&self) -> AlgebraSpec {
        AlgebraSpec::commutative(self.nvars, self.field)
    }

    pub fn family(&self) -> AlgebraFamily {
        self.family
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn nops(&self) -> usize {
        self.ops.len()
    }

    /// Length of a combined exponent vector (variables, then operators).
    pub fn width(&self) -> usize {
        self.nvars + self.ops.len()
    }

    pub fn ops(&self) -> &[Operator] {
        &self.ops
    }

    pub fn op(&self, i: usize) -> Operator {
        self.ops[i]
    }

    pub fn ops_on_var(&self, var: usize) -> &[usize] {
        &self.ops_by_var[var]
    }

    pub fn field(&self) -> FieldKind {
        self.field
    }

    pub fn is_commutative(&self) -> bool {
        self.ops.is_empty()
    }

    /// All operators are of the given kind (and there is at least one).
    pub fn is_pure(&self, kind: OperatorKind) -> bool {
        !self.ops.is_empty() && self.ops.iter().all(|op| op.kind == kind)
    }

    pub fn var_name(&self, j: usize) -> String {
        format!("t{}", j + 1)
    }

    pub fn op_name(&self, i: usize) -> String {
        let op = self.ops[i];
        format!("{}{}", op.kind.symbol(), op.var + 1)
    }

    /// Name of combined index `k` (variables first, then operators).
    pub fn symbol_name(&self, k: usize) -> String {
        if k < self.nvars {
            self.var_name(k)
        } else {
            self.op_name(k - self.nvars)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sw_layout() {
        let sw = AlgebraSpec::sw(2);
        assert_eq!(sw.nops(), 4);
        assert_eq!(sw.width(), 6);
        assert_eq!(sw.ops_on_var(1), &[1, 3]);
        let names: Vec<_> = (0..6).map(|k| sw.symbol_name(k)).collect();
        assert_eq!(names, ["t1", "t2", "D1", "D2", "d1", "d2"]);
    }

    #[test]
    fn qdiff_uses_rational_functions() {
        assert_eq!(AlgebraSpec::qdiff(1).field(), FieldKind::RatFunc);
        assert_eq!(AlgebraSpec::weyl(3).field(), FieldKind::Rational);
    }
}
