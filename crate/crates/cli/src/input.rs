//! Input parsing: JSON support sets or polynomial text such as
//! `x1^2 + x2^3`.

use std::collections::BTreeMap;

use serde::Deserialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputSpec {
    pub n: usize,
    pub support: Vec<Vec<i64>>,
    pub warnings: Vec<String>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("parse error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("invalid JSON input: {0}")]
    Json(String),
    #[error("dimension {0} is outside 2..=6")]
    Dimension(usize),
}

fn syntax(pos: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax { pos, msg: msg.into() }
}

#[derive(Deserialize)]
struct JsonSupport {
    n: usize,
    #[serde(alias = "vertices")]
    support: Vec<Vec<i64>>,
    #[serde(default)]
    coefficients: Option<Vec<Value>>,
}

pub fn parse_input(text: &str, format: Option<Format>) -> Result<InputSpec, ParseError> {
    let format = format.unwrap_or(if text.trim_start().starts_with('{') { Format::Json } else { Format::Text });
    match format {
        Format::Json => parse_json(text),
        Format::Text => parse_polynomial(text),
    }
}

fn parse_json(text: &str) -> Result<InputSpec, ParseError> {
    let mut value: Value = serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    // Output of the `newton` command can be fed back in.
    if let Some(result) = value.get_mut("result") {
        value = result.take();
    }
    let spec: JsonSupport = serde_json::from_value(value).map_err(|e| ParseError::Json(e.to_string()))?;
    if !(2..=6).contains(&spec.n) {
        return Err(ParseError::Dimension(spec.n));
    }
    let mut warnings = Vec::new();
    if spec.coefficients.is_some() {
        warnings.push("coefficients are ignored; only the support is used".to_string());
    }
    Ok(InputSpec { n: spec.n, support: spec.support, warnings })
}

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Lexer<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(syntax(start, "expected a number"));
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| syntax(start, "number too large"))
    }
}

/// Monomial exponents and the summed integer coefficient of each.
fn parse_terms(text: &str) -> Result<Vec<(BTreeMap<usize, i64>, i64, usize)>, ParseError> {
    let mut lx = Lexer { s: text.as_bytes(), pos: 0 };
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        let mut sign = 1;
        match lx.peek() {
            None if first => return Err(syntax(lx.pos, "empty polynomial")),
            None => break,
            Some(b'+') => lx.pos += 1,
            Some(b'-') => {
                sign = -1;
                lx.pos += 1;
            }
            Some(_) if first => {}
            Some(c) => return Err(syntax(lx.pos, format!("expected '+' or '-', found '{}'", c as char))),
        }
        first = false;
        let start = lx.pos;
        let mut coeff: i64 = 1;
        let mut explicit = false;
        if lx.peek().is_some_and(|c| c.is_ascii_digit()) {
            let at = lx.pos;
            coeff = i64::try_from(lx.number()?).map_err(|_| syntax(at, "coefficient too large"))?;
            explicit = true;
            if lx.peek() == Some(b'*') {
                lx.pos += 1;
            }
        }
        let mut exps: BTreeMap<usize, i64> = BTreeMap::new();
        while lx.peek() == Some(b'x') {
            lx.pos += 1;
            let at = lx.pos;
            let var = lx.number().map_err(|_| syntax(at, "expected a variable index after 'x'"))? as usize;
            if var == 0 {
                return Err(syntax(at, "variables are numbered from x1"));
            }
            let mut e = 1;
            if lx.peek() == Some(b'^') {
                lx.pos += 1;
                if lx.peek() == Some(b'-') {
                    return Err(syntax(lx.pos, "negative exponent"));
                }
                let at = lx.pos;
                e = i64::try_from(lx.number()?).map_err(|_| syntax(at, "exponent too large"))?;
            }
            *exps.entry(var - 1).or_insert(0) += e;
            if lx.peek() == Some(b'*') {
                lx.pos += 1;
                if lx.peek() != Some(b'x') {
                    return Err(syntax(lx.pos, "expected a variable after '*'"));
                }
            }
        }
        if !explicit && exps.is_empty() {
            return Err(syntax(lx.pos, "malformed monomial"));
        }
        exps.retain(|_, e| *e != 0);
        terms.push((exps, sign * coeff, start));
    }
    Ok(terms)
}

pub fn parse_polynomial(text: &str) -> Result<InputSpec, ParseError> {
    let terms = parse_terms(text)?;
    let n = terms.iter().flat_map(|(e, _, _)| e.keys().copied()).max().map_or(0, |m| m + 1).max(2);
    if n > 6 {
        return Err(ParseError::Dimension(n));
    }
    let mut merged: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    let mut order = Vec::new();
    let mut warnings = Vec::new();
    for (exps, c, _) in &terms {
        let mut v = vec![0; n];
        for (&i, &e) in exps {
            v[i] = e;
        }
        if c.abs() != 1 {
            warnings.push("coefficients are ignored; only the support is used".to_string());
        }
        if !merged.contains_key(&v) {
            order.push(v.clone());
        }
        *merged.entry(v).or_insert(0) += c;
    }
    let support: Vec<Vec<i64>> = order.into_iter().filter(|v| merged[v] != 0).collect();
    if support.len() < merged.len() {
        warnings.push("monomials with cancelling coefficients were dropped".to_string());
    }
    warnings.dedup();
    Ok(InputSpec { n, support, warnings })
}
