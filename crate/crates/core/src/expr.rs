//! Text form of operator polynomials, module rows and signals.
//!
//! Printing lists terms in descending order of a monomial ordering, with
//! variables `t1..tn` before operator symbols inside each monomial. The parser
//! accepts the same syntax (plus parentheses, `^`, scalar division and an
//! `exp(...)` factor for signals) and multiplies with the Ore commutation
//! rules, so `d1*t1` parses to `t1*d1 + 1` in the Weyl algebra.

use std::fmt::Write as _;

use num_bigint::BigInt;

use crate::coeffs::{FieldElem, FieldKind, Rational};
use crate::error::{Error, Result};
use crate::gb::{ModuleVector, MonomialOrder};
use crate::orecore::{mul, AlgebraFamily, AlgebraSpec, OreMonomial, OrePoly, PolySignal};

fn write_monomial(out: &mut String, spec: &AlgebraSpec, m: &OreMonomial) {
    let mut first = true;
    for (k, &e) in m.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(&spec.symbol_name(k));
        if e > 1 {
            let _ = write!(out, "^{e}");
        }
    }
}

/// Prints `p` with its terms in descending order under `order`.
pub fn format_poly(spec: &AlgebraSpec, p: &OrePoly, order: &MonomialOrder) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by(|a, b| order.cmp(b.0, a.0));
    let mut out = String::new();
    for (i, (m, c)) in terms.into_iter().enumerate() {
        let (neg, coef) = match c.signed_parts() {
            Some((neg, mag)) => (neg, if mag == "1" { None } else { Some(mag) }),
            None => {
                let text = c.to_string();
                (false, Some(if text.starts_with('(') { text } else { format!("({text})") }))
            }
        };
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        match coef {
            Some(coef) if m.is_one() => out.push_str(&coef),
            Some(coef) => {
                out.push_str(&coef);
                out.push('*');
                write_monomial(&mut out, spec, m);
            }
            None if m.is_one() => out.push('1'),
            None => write_monomial(&mut out, spec, m),
        }
    }
    out
}

/// Prints every entry of a module row.
pub fn format_vector(spec: &AlgebraSpec, v: &ModuleVector, order: &MonomialOrder) -> Vec<String> {
    v.entries().iter().map(|p| format_poly(spec, p, order)).collect()
}

/// Prints a signal component, appending `* exp(...)` for a non-trivial frequency.
pub fn format_signal(spec: &AlgebraSpec, s: &PolySignal, order: &MonomialOrder) -> String {
    let base = format_poly(spec, &s.poly, order);
    let Some(lambda) = &s.lambda else { return base };
    let mut arg = OrePoly::zero();
    for (j, c) in lambda.iter().enumerate() {
        arg = arg.add(&OrePoly::var(spec, j).scale(c));
    }
    let arg = format_poly(spec, &arg, order);
    if s.poly.len() > 1 {
        format!("({base}) * exp({arg})")
    } else {
        format!("{base} * exp({arg})")
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
    End,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((Tok::Num(digits.parse().expect("digits")), col));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Sym(c), col));
            i += 1;
        } else {
            return Err(parse_err(col, format!("unexpected character '{c}'")));
        }
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

fn parse_err(col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line: 1,
        col,
        msg: msg.into(),
    }
}

/// Polynomial part together with an optional `exp` coefficient vector.
#[derive(Clone, Debug)]
struct Val {
    poly: OrePoly,
    exp: Option<Vec<FieldElem>>,
}

struct Parser<'a> {
    spec: &'a AlgebraSpec,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    allow_exp: bool,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn col(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            Ok(())
        } else {
            Err(parse_err(self.col(), format!("expected '{c}'")))
        }
    }

    fn plain(&self, poly: OrePoly) -> Val {
        Val { poly, exp: None }
    }

    fn combine_sum(&self, a: Val, b: Val, col: usize, negate: bool) -> Result<Val> {
        let b_poly = if negate { b.poly.neg() } else { b.poly };
        let exp = match (a.exp, b.exp) {
            (x, y) if a.poly.is_zero() => y.or(x),
            (x, _) if b_poly.is_zero() => x,
            (x, y) if x == y => x,
            _ => return Err(parse_err(col, "sum of terms with different exponential factors")),
        };
        Ok(Val {
            poly: a.poly.add(&b_poly),
            exp,
        })
    }

    fn expr(&mut self) -> Result<Val> {
        let mut acc = self.term()?;
        loop {
            let col = self.col();
            match self.peek() {
                Tok::Sym('+') => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = self.combine_sum(acc, rhs, col, false)?;
                }
                Tok::Sym('-') => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = self.combine_sum(acc, rhs, col, true)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Val> {
        let mut acc = self.unary()?;
        loop {
            let col = self.col();
            match self.peek() {
                Tok::Sym('*') => {
                    self.bump();
                    let rhs = self.unary()?;
                    let exp = match (acc.exp.take(), rhs.exp) {
                        (Some(_), Some(_)) => return Err(parse_err(col, "at most one exponential factor per term")),
                        (x, y) => x.or(y),
                    };
                    acc = Val {
                        poly: mul(self.spec, &acc.poly, &rhs.poly).map_err(|e| parse_err(col, e.to_string()))?,
                        exp,
                    };
                }
                Tok::Sym('/') => {
                    self.bump();
                    let rhs = self.unary()?;
                    let c = self.scalar_of(&rhs).ok_or_else(|| parse_err(col, "division by a non-constant"))?;
                    let inv = c.inv().map_err(|_| parse_err(col, "division by zero"))?;
                    acc.poly = acc.poly.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn scalar_of(&self, v: &Val) -> Option<FieldElem> {
        if v.exp.is_some() {
            return None;
        }
        let one = OreMonomial::one(self.spec.width());
        match v.poly.len() {
            0 => Some(FieldElem::zero(self.spec.field())),
            1 => v.poly.coeff(&one).cloned(),
            _ => None,
        }
    }

    fn unary(&mut self) -> Result<Val> {
        match self.peek() {
            Tok::Sym('-') => {
                self.bump();
                let v = self.unary()?;
                Ok(Val {
                    poly: v.poly.neg(),
                    exp: v.exp,
                })
            }
            Tok::Sym('+') => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Val> {
        let base = self.atom()?;
        if *self.peek() != Tok::Sym('^') {
            return Ok(base);
        }
        self.bump();
        let col = self.col();
        let e = match self.bump() {
            Tok::Num(n) => u32::try_from(n).map_err(|_| parse_err(col, "exponent too large"))?,
            _ => return Err(parse_err(col, "expected a non-negative integer exponent")),
        };
        if base.exp.is_some() {
            return Err(parse_err(col, "powers of exponential factors are not supported"));
        }
        Ok(self.plain(crate::orecore::pow(self.spec, &base.poly, e)))
    }

    fn atom(&mut self) -> Result<Val> {
        let col = self.col();
        match self.bump() {
            Tok::Num(n) => Ok(self.plain(OrePoly::constant(
                self.spec,
                FieldElem::from_rational(self.spec.field(), Rational::new(n, 1)),
            ))),
            Tok::Sym('(') => {
                let v = self.expr()?;
                self.expect(')')?;
                Ok(v)
            }
            Tok::Ident(name) => self.ident(&name, col),
            Tok::End => Err(parse_err(col, "unexpected end of input")),
            Tok::Sym(c) => Err(parse_err(col, format!("unexpected '{c}'"))),
        }
    }

    fn ident(&mut self, name: &str, col: usize) -> Result<Val> {
        let spec = self.spec;
        if name == "q" {
            if spec.field() != FieldKind::RatFunc {
                return Err(parse_err(col, "q is only available in the q-difference algebra"));
            }
            return Ok(self.plain(OrePoly::constant(spec, FieldElem::q())));
        }
        if name == "exp" {
            if !self.allow_exp {
                return Err(parse_err(col, "exp(...) is only allowed in signals"));
            }
            self.expect('(')?;
            let arg = self.expr()?;
            self.expect(')')?;
            return Ok(Val {
                poly: OrePoly::one(spec),
                exp: Some(self.linear_coeffs(&arg, col)?),
            });
        }
        if spec.nvars() == 1 {
            if name == "t" {
                return Ok(self.plain(OrePoly::var(spec, 0)));
            }
            if let Some(i) = (0..spec.nops()).find(|&i| spec.op(i).kind.symbol() == name) {
                return Ok(self.plain(OrePoly::op(spec, i)));
            }
        }
        (0..spec.width())
            .find(|&k| spec.symbol_name(k) == name)
            .map(|k| {
                let p = if k < spec.nvars() {
                    OrePoly::var(spec, k)
                } else {
                    OrePoly::op(spec, k - spec.nvars())
                };
                self.plain(p)
            })
            .ok_or_else(|| {
                let kind = if name.starts_with('t') { "variable" } else { "symbol" };
                parse_err(col, format!("unknown {kind} '{name}'"))
            })
    }

    fn linear_coeffs(&self, arg: &Val, col: usize) -> Result<Vec<FieldElem>> {
        let spec = self.spec;
        let bad = || parse_err(col, "exp argument must be c1*t1 + ... + cn*tn");
        if arg.exp.is_some() {
            return Err(bad());
        }
        let mut lambda = vec![FieldElem::zero(spec.field()); spec.nvars()];
        for (m, c) in arg.poly.terms() {
            let e = m.exps();
            let hit: Vec<usize> = (0..spec.width()).filter(|&k| e[k] != 0).collect();
            match hit.as_slice() {
                [k] if *k < spec.nvars() && e[*k] == 1 => lambda[*k] = c.clone(),
                _ => return Err(bad()),
            }
        }
        Ok(lambda)
    }
}

fn run_parser(spec: &AlgebraSpec, text: &str, allow_exp: bool) -> Result<Val> {
    let mut p = Parser {
        spec,
        toks: tokenize(text)?,
        pos: 0,
        allow_exp,
    };
    let v = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(parse_err(p.col(), "unexpected trailing input"));
    }
    Ok(v)
}

/// Parses an operator polynomial of `spec`.
pub fn parse_poly(spec: &AlgebraSpec, text: &str) -> Result<OrePoly> {
    Ok(run_parser(spec, text, false)?.poly)
}

/// Parses a signal component `poly` or `poly * exp(c1*t1 + ... + cn*tn)`.
///
/// Over the Weyl algebra the signal is `p * exp(c . t)`; over the shift and
/// difference algebras the coefficients are the bases of `lambda^t`.
pub fn parse_signal(spec: &AlgebraSpec, text: &str) -> Result<PolySignal> {
    let v = run_parser(spec, text, true)?;
    if !v.poly.is_polynomial(spec) {
        return Err(parse_err(1, "signals may not contain operator symbols"));
    }
    match v.exp {
        None => PolySignal::new(spec, v.poly),
        Some(lambda) => {
            if matches!(spec.family(), AlgebraFamily::Sw | AlgebraFamily::QDiff) {
                return Err(Error::Unsupported(format!(
                    "exponential signals in the {} algebra",
                    spec.family().name()
                )));
            }
            PolySignal::with_exp(spec, v.poly, lambda)
        }
    }
}
