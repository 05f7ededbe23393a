//! Problem files.
//!
//! ```text
//! # cuspidal cubic
//! algebra weyl
//! nvars 2
//! signal [t1^3 - t2^2]
//! order degrevlex
//! minimize
//! ```
//!
//! Each non-empty line is a directive followed by its argument. `signal`
//! and `expect` may repeat; every other directive appears at most once.
//! `expect [r1, ..., rm]` lists one row of a kernel the computation must
//! reproduce up to module equality. Boolean options accept a bare keyword
//! (meaning `true`) or one of `true/false/on/off`.

use ore_vmpum::expr::{parse_poly, parse_signal};
use ore_vmpum::gb::{BaseOrder, ModuleVector};
use ore_vmpum::orecore::{AlgebraFamily, AlgebraSpec, PolySignal};
use ore_vmpum::Error;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Options {
    pub order: Option<BaseOrder>,
    pub opvars_first: Option<bool>,
    pub minimize: Option<bool>,
    pub verify: Option<bool>,
    pub oracle: Option<bool>,
    pub seed: Option<u64>,
}

#[derive(Clone, Debug)]
pub struct ProblemFile {
    pub spec: AlgebraSpec,
    pub signals: Vec<Vec<PolySignal>>,
    /// Rows declared with `expect`; empty when none were given.
    pub expected: Vec<ModuleVector>,
    pub options: Options,
}

fn err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

/// One directive: 1-based line, column where the argument starts, keyword
/// and argument text.
struct Directive<'a> {
    line: usize,
    arg_col: usize,
    key: &'a str,
    arg: &'a str,
}

fn directives(text: &str) -> Vec<Directive<'_>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = match raw.find('#') {
            Some(k) => &raw[..k],
            None => raw,
        };
        let trimmed = content.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let start = content.len() - trimmed.len();
        let key_len = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
        let rest = &trimmed[key_len..];
        let arg = rest.trim();
        let lead = rest.len() - rest.trim_start().len();
        out.push(Directive {
            line: i + 1,
            arg_col: col_of(raw, start + key_len + lead),
            key: &trimmed[..key_len],
            arg,
        });
    }
    out
}

/// 1-based character column of byte offset `b`.
fn col_of(s: &str, b: usize) -> usize {
    s[..b].chars().count() + 1
}

fn parse_bool(d: &Directive) -> Result<bool, Error> {
    match d.arg {
        "" | "true" | "on" | "yes" => Ok(true),
        "false" | "off" | "no" => Ok(false),
        other => Err(err(d.line, d.arg_col, format!("expected a boolean, found '{other}'"))),
    }
}

fn set_once<T>(slot: &mut Option<T>, value: T, d: &Directive) -> Result<(), Error> {
    if slot.is_some() {
        return Err(err(d.line, 1, format!("duplicate '{}' directive", d.key)));
    }
    *slot = Some(value);
    Ok(())
}

/// Splits `[a, b, c]` at top-level commas, returning each component with the
/// byte offset where it starts inside `arg`.
fn split_components(arg: &str) -> Option<Vec<(usize, &str)>> {
    let (base, inner) = match arg.strip_prefix('[') {
        Some(rest) => (1, rest.strip_suffix(']')?),
        None => (0, arg),
    };
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (k, ch) in inner.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push((base + start, &inner[start..k]));
                start = k + 1;
            }
            _ => {}
        }
    }
    parts.push((base + start, &inner[start..]));
    Some(parts)
}

fn parse_components<T>(
    d: &Directive,
    what: &str,
    parse: impl Fn(&str) -> Result<T, Error>,
) -> Result<Vec<T>, Error> {
    let parts = split_components(d.arg).ok_or_else(|| err(d.line, d.arg_col, format!("unbalanced '[' in {what}")))?;
    let mut out = Vec::with_capacity(parts.len());
    for (offset, text) in parts {
        let lead = text.len() - text.trim_start().len();
        let col = d.arg_col + d.arg[..offset + lead].chars().count();
        let text = text.trim();
        if text.is_empty() {
            return Err(err(d.line, col, format!("empty {what} component")));
        }
        let s = parse(text).map_err(|e| match e {
            Error::Parse { col: c, msg, .. } => err(d.line, col + c - 1, msg),
            other => err(d.line, col, other.to_string()),
        })?;
        out.push(s);
    }
    Ok(out)
}

/// Parses a problem file. Errors carry 1-based line and column numbers.
pub fn parse_problem(text: &str) -> Result<ProblemFile, Error> {
    let mut family = None;
    let mut nvars = None;
    let mut signal_lines = Vec::new();
    let mut expect_lines = Vec::new();
    let mut options = Options::default();
    let mut last_line = 0;
    for d in directives(text) {
        last_line = d.line;
        match d.key {
            "algebra" => {
                let f = AlgebraFamily::from_name(d.arg)
                    .filter(|f| *f != AlgebraFamily::Commutative)
                    .ok_or_else(|| err(d.line, d.arg_col, format!("unknown algebra '{}'", d.arg)))?;
                set_once(&mut family, f, &d)?;
            }
            "nvars" => {
                let n: usize = d
                    .arg
                    .parse()
                    .ok()
                    .filter(|&n| n >= 1)
                    .ok_or_else(|| err(d.line, d.arg_col, "nvars must be a positive integer"))?;
                set_once(&mut nvars, n, &d)?;
            }
            "signal" => signal_lines.push(d),
            "expect" => expect_lines.push(d),
            "order" => {
                let o = BaseOrder::from_name(d.arg)
                    .ok_or_else(|| err(d.line, d.arg_col, format!("unknown order '{}'", d.arg)))?;
                set_once(&mut options.order, o, &d)?;
            }
            "opvars_first" => set_once(&mut options.opvars_first, parse_bool(&d)?, &d)?,
            "minimize" => set_once(&mut options.minimize, parse_bool(&d)?, &d)?,
            "verify" => set_once(&mut options.verify, parse_bool(&d)?, &d)?,
            "oracle" => set_once(&mut options.oracle, parse_bool(&d)?, &d)?,
            "seed" => {
                let s = d
                    .arg
                    .parse()
                    .map_err(|_| err(d.line, d.arg_col, "seed must be a non-negative integer"))?;
                set_once(&mut options.seed, s, &d)?;
            }
            other => return Err(err(d.line, 1, format!("unknown directive '{other}'"))),
        }
    }
    let end = last_line.max(1);
    let family = family.ok_or_else(|| err(end, 1, "missing 'algebra' directive"))?;
    let nvars = nvars.ok_or_else(|| err(end, 1, "missing 'nvars' directive"))?;
    let spec = AlgebraSpec::from_family(family, nvars)?;
    if signal_lines.is_empty() {
        return Err(err(end, 1, "no signals given"));
    }
    let mut signals: Vec<Vec<PolySignal>> = Vec::new();
    for d in &signal_lines {
        let w = parse_components(d, "signal", |t| parse_signal(&spec, t))?;
        if let Some(first) = signals.first() {
            if first.len() != w.len() {
                return Err(err(
                    d.line,
                    d.arg_col,
                    format!("signal has {} components, expected {}", w.len(), first.len()),
                ));
            }
        }
        signals.push(w);
    }
    let m = signals[0].len();
    let mut expected = Vec::new();
    for d in &expect_lines {
        let row = parse_components(d, "row", |t| parse_poly(&spec, t))?;
        if row.len() != m {
            return Err(err(
                d.line,
                d.arg_col,
                format!("row has {} components, expected {m}", row.len()),
            ));
        }
        expected.push(ModuleVector::from_entries(row));
    }
    Ok(ProblemFile {
        spec,
        signals,
        expected,
        options,
    })
}
