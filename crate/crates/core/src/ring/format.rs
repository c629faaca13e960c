//! Text renderings of [`LaurentPoly`] and [`SkeinScalar`] and their parsers.
//!
//! Terms are always written in ascending `(ev, es)` order and denominator
//! factors in ascending `k`, so a parsed rendering re-renders identically.
//!
//! plain: `(v^-1*s - v*s^-1) / ((s - s^-1)^2 * (s^2 - s^-2))`
//! latex: `\frac{v^{-1} s - v s^{-1}}{(s - s^{-1})^{2} (s^{2} - s^{-2})}`

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use super::laurent::LaurentPoly;
use super::scalar::{DenomFactor, SkeinScalar};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("unexpected character {0:?} at offset {1}")]
    BadChar(char, usize),
    #[error("unexpected {found} at token {pos}, expected {expected}")]
    Unexpected {
        found: String,
        expected: &'static str,
        pos: usize,
    },
    #[error("integer out of range: {0}")]
    Range(String),
    #[error("denominator factor must have k >= 1 and multiplicity >= 1")]
    BadFactor,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Style {
    Plain,
    Latex,
}

fn render_exp(style: Style, e: i32) -> String {
    match style {
        Style::Plain => format!("^{e}"),
        Style::Latex => format!("^{{{e}}}"),
    }
}

fn render_poly(p: &LaurentPoly, style: Style) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mul = match style {
        Style::Plain => "*",
        Style::Latex => " ",
    };
    let mut out = String::new();
    for (i, ((ev, es), c)) in p.terms().enumerate() {
        let neg = c.is_negative();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = c.abs();
        let mut factors: Vec<String> = Vec::new();
        if ev != 0 {
            factors.push(if ev == 1 {
                "v".into()
            } else {
                format!("v{}", render_exp(style, ev))
            });
        }
        if es != 0 {
            factors.push(if es == 1 {
                "s".into()
            } else {
                format!("s{}", render_exp(style, es))
            });
        }
        if factors.is_empty() || !abs.is_one() {
            factors.insert(0, abs.to_string());
        }
        out.push_str(&factors.join(mul));
    }
    out
}

fn render_factor(f: DenomFactor, style: Style) -> String {
    let base = if f.k == 1 {
        match style {
            Style::Plain => "(s - s^-1)".to_string(),
            Style::Latex => "(s - s^{-1})".to_string(),
        }
    } else {
        let k = f.k as i32;
        format!("(s{} - s{})", render_exp(style, k), render_exp(style, -k))
    };
    if f.mult == 1 {
        base
    } else {
        format!("{base}{}", render_exp(style, f.mult as i32))
    }
}

pub fn render_poly_plain(p: &LaurentPoly) -> String {
    render_poly(p, Style::Plain)
}

/// Plain-text form; the denominator is written out factor by factor.
pub fn render_plain(x: &SkeinScalar) -> String {
    let num = render_poly(x.num(), Style::Plain);
    let factors: Vec<DenomFactor> = x.den().collect();
    if factors.is_empty() {
        return num;
    }
    let den: Vec<String> = factors.iter().map(|f| render_factor(*f, Style::Plain)).collect();
    if factors.len() == 1 && factors[0].mult == 1 {
        format!("({num}) / {}", den[0])
    } else {
        format!("({num}) / ({})", den.join(" * "))
    }
}

pub fn render_latex(x: &SkeinScalar) -> String {
    let num = render_poly(x.num(), Style::Latex);
    let factors: Vec<String> = x.den().map(|f| render_factor(f, Style::Latex)).collect();
    if factors.is_empty() {
        num
    } else {
        format!("\\frac{{{num}}}{{{}}}", factors.join(" "))
    }
}

pub fn render_json(x: &SkeinScalar) -> String {
    serde_json::to_string(x).expect("scalar serialization cannot fail")
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(String),
    Var(char),
    Sym(char),
    Frac,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(s) => format!("integer {s}"),
            Tok::Var(c) => format!("variable {c}"),
            Tok::Sym(c) => format!("{c:?}"),
            Tok::Frac => "\\frac".to_string(),
        }
    }
}

fn tokenize(src: &str) -> Result<Vec<Tok>, ParseError> {
    let mut toks = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                toks.push(Tok::Int(chars[start..i].iter().collect()));
            }
            'v' | 's' => {
                toks.push(Tok::Var(c));
                i += 1;
            }
            '+' | '-' | '*' | '/' | '^' | '(' | ')' | '{' | '}' => {
                toks.push(Tok::Sym(c));
                i += 1;
            }
            '\\' if chars[i..].starts_with(&['\\', 'f', 'r', 'a', 'c']) => {
                toks.push(Tok::Frac);
                i += 5;
            }
            _ => return Err(ParseError::BadChar(c, i)),
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn peek_at(&self, offset: usize) -> Option<&Tok> {
        self.toks.get(self.pos + offset)
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        ParseError::Unexpected {
            found: self.peek().map(Tok::describe).unwrap_or_else(|| "end of input".into()),
            expected,
            pos: self.pos,
        }
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_sym(&mut self, c: char, expected: &'static str) -> Result<(), ParseError> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            Err(self.unexpected(expected))
        }
    }

    fn expect_var(&mut self, c: char) -> Result<(), ParseError> {
        if self.peek() == Some(&Tok::Var(c)) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.unexpected("variable"))
        }
    }

    fn int(&mut self) -> Result<BigInt, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Int(s)) => {
                self.pos += 1;
                BigInt::from_str(&s).map_err(|_| ParseError::Range(s))
            }
            _ => Err(self.unexpected("integer")),
        }
    }

    fn small_int(&mut self) -> Result<i32, ParseError> {
        let neg = self.eat_sym('-');
        let n = self.int()?;
        let n = if neg { -n } else { n };
        i32::try_from(&n).map_err(|_| ParseError::Range(n.to_string()))
    }

    /// `^e`, `^-e` or `^{e}`; absent means 1.
    fn exponent(&mut self) -> Result<i32, ParseError> {
        if !self.eat_sym('^') {
            return Ok(1);
        }
        if self.eat_sym('{') {
            let e = self.small_int()?;
            self.expect_sym('}', "'}'")?;
            Ok(e)
        } else {
            self.small_int()
        }
    }

    fn at_term_start(&self) -> bool {
        matches!(self.peek(), Some(Tok::Int(_)) | Some(Tok::Var(_)))
    }

    fn term(&mut self) -> Result<(BigInt, i32, i32), ParseError> {
        let mut coeff = BigInt::one();
        let mut saw_any = false;
        if let Some(Tok::Int(_)) = self.peek() {
            coeff = self.int()?;
            saw_any = true;
        }
        let (mut ev, mut es) = (0, 0);
        loop {
            let save = self.pos;
            if saw_any {
                self.eat_sym('*');
            }
            match self.peek() {
                Some(Tok::Var('v')) => {
                    self.pos += 1;
                    ev += self.exponent()?;
                }
                Some(Tok::Var('s')) => {
                    self.pos += 1;
                    es += self.exponent()?;
                }
                _ => {
                    self.pos = save;
                    break;
                }
            }
            saw_any = true;
        }
        if !saw_any {
            return Err(self.unexpected("term"));
        }
        Ok((coeff, ev, es))
    }

    fn poly(&mut self) -> Result<LaurentPoly, ParseError> {
        let mut p = LaurentPoly::zero();
        let mut first = true;
        loop {
            let neg = if self.eat_sym('-') {
                true
            } else if first || self.eat_sym('+') {
                false
            } else {
                break;
            };
            if !self.at_term_start() {
                return Err(self.unexpected("term"));
            }
            let (c, ev, es) = self.term()?;
            p.add_term((ev, es), if neg { -c } else { c });
            first = false;
        }
        Ok(p)
    }

    /// `(s^k - s^-k)` with optional multiplicity.
    fn factor(&mut self) -> Result<DenomFactor, ParseError> {
        self.expect_sym('(', "'('")?;
        self.expect_var('s')?;
        let k = self.exponent()?;
        self.expect_sym('-', "'-'")?;
        self.expect_var('s')?;
        let neg_k = self.exponent()?;
        self.expect_sym(')', "')'")?;
        let mult = self.exponent()?;
        if k < 1 || neg_k != -k || mult < 1 {
            return Err(ParseError::BadFactor);
        }
        Ok(DenomFactor {
            k: k as u32,
            mult: mult as u32,
        })
    }

    fn starts_factor(&self) -> bool {
        self.peek() == Some(&Tok::Sym('(')) && self.peek_at(1) == Some(&Tok::Var('s'))
    }

    fn finish(&self) -> Result<(), ParseError> {
        if self.pos == self.toks.len() {
            Ok(())
        } else {
            Err(self.unexpected("end of input"))
        }
    }

    fn plain_scalar(&mut self) -> Result<SkeinScalar, ParseError> {
        // `(NUM) / DEN` or bare `NUM`; a bare numerator never starts with '('.
        if !self.eat_sym('(') {
            let p = self.poly()?;
            self.finish()?;
            return Ok(SkeinScalar::from_poly(p));
        }
        let num = self.poly()?;
        self.expect_sym(')', "')'")?;
        self.expect_sym('/', "'/'")?;
        let mut den = Vec::new();
        if self.starts_factor() {
            den.push(self.factor()?);
        } else {
            self.expect_sym('(', "'('")?;
            den.push(self.factor()?);
            while self.eat_sym('*') {
                den.push(self.factor()?);
            }
            self.expect_sym(')', "')'")?;
        }
        self.finish()?;
        Ok(SkeinScalar::new(num, den))
    }

    fn latex_scalar(&mut self) -> Result<SkeinScalar, ParseError> {
        if self.peek() != Some(&Tok::Frac) {
            let p = self.poly()?;
            self.finish()?;
            return Ok(SkeinScalar::from_poly(p));
        }
        self.pos += 1;
        self.expect_sym('{', "'{'")?;
        let num = self.poly()?;
        self.expect_sym('}', "'}'")?;
        self.expect_sym('{', "'{'")?;
        let mut den = vec![self.factor()?];
        while self.starts_factor() {
            den.push(self.factor()?);
        }
        self.expect_sym('}', "'}'")?;
        self.finish()?;
        Ok(SkeinScalar::new(num, den))
    }
}

pub fn parse_plain(src: &str) -> Result<SkeinScalar, ParseError> {
    Parser {
        toks: tokenize(src)?,
        pos: 0,
    }
    .plain_scalar()
}

pub fn parse_latex(src: &str) -> Result<SkeinScalar, ParseError> {
    Parser {
        toks: tokenize(src)?,
        pos: 0,
    }
    .latex_scalar()
}

pub fn parse_poly(src: &str) -> Result<LaurentPoly, ParseError> {
    let mut p = Parser {
        toks: tokenize(src)?,
        pos: 0,
    };
    let poly = p.poly()?;
    p.finish()?;
    Ok(poly)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermWire {
    v: i32,
    s: i32,
    c: serde_json::Number,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScalarWire {
    num: Vec<TermWire>,
    den: Vec<DenomFactor>,
}

impl Serialize for SkeinScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let num = self
            .num()
            .terms()
            .map(|((v, s), c)| TermWire {
                v,
                s,
                c: serde_json::Number::from_str(&c.to_string()).expect("integer literal"),
            })
            .collect();
        ScalarWire {
            num,
            den: self.den().collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SkeinScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let wire = ScalarWire::deserialize(deserializer)?;
        let mut num = LaurentPoly::zero();
        for t in wire.num {
            let c = BigInt::from_str(&t.c.to_string())
                .map_err(|_| D::Error::custom(format!("coefficient {} is not an integer", t.c)))?;
            if c.is_zero() {
                return Err(D::Error::custom("zero coefficient in numerator"));
            }
            num.add_term((t.v, t.s), c);
        }
        if wire.den.iter().any(|f| f.k == 0 || f.mult == 0) {
            return Err(D::Error::custom("denominator factor needs k >= 1 and mult >= 1"));
        }
        Ok(SkeinScalar::new(num, wire.den))
    }
}
