//! Input parsing: polynomials in x/y (bivariate) or z (univariate) with
//! exact rational coefficients, and complex numbers in "a+bi" notation.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::CliError;
use crate::numkernel::{BiPoly, Rational, UniPoly};

#[derive(Clone, Debug, PartialEq)]
pub struct ParseError {
    pub position: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

impl std::error::Error for ParseError {}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "at position {}: found {}, expected one of [{}]",
            self.position,
            self.found,
            self.expected.join(", ")
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    Var(char),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(_) => "number".into(),
            Tok::Var(v) => format!("variable '{v}'"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                toks.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                toks.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                toks.push((i, Tok::Star));
                i += 1;
            }
            '^' => {
                toks.push((i, Tok::Caret));
                i += 1;
            }
            '(' => {
                toks.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            'x' | 'y' | 'z' => {
                toks.push((i, Tok::Var(c)));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                let digits = |i: &mut usize| {
                    let s = *i;
                    while *i < bytes.len() && bytes[*i].is_ascii_digit() {
                        *i += 1;
                    }
                    *i > s
                };
                digits(&mut i);
                let mut numer: BigInt = text[start..i].parse().unwrap();
                let mut denom = BigInt::one();
                if i < bytes.len() && bytes[i] == b'.' {
                    i += 1;
                    let fs = i;
                    if !digits(&mut i) {
                        return Err(ParseError {
                            position: i,
                            expected: vec!["decimal digits"],
                            found: "end of decimal".into(),
                        });
                    }
                    let frac: BigInt = text[fs..i].parse().unwrap();
                    let shift = BigInt::from(10u32).pow((i - fs) as u32);
                    numer = numer * &shift + frac;
                    denom *= shift;
                } else if i < bytes.len() && bytes[i] == b'/' {
                    i += 1;
                    let ds = i;
                    if !digits(&mut i) {
                        return Err(ParseError {
                            position: i,
                            expected: vec!["denominator digits"],
                            found: "end of fraction".into(),
                        });
                    }
                    denom = text[ds..i].parse().unwrap();
                    if denom.is_zero() {
                        return Err(ParseError {
                            position: ds,
                            expected: vec!["nonzero denominator"],
                            found: "0".into(),
                        });
                    }
                }
                toks.push((start, Tok::Num(Rational::new(numer, denom))));
            }
            _ => {
                return Err(ParseError {
                    position: i,
                    expected: vec!["number", "variable x/y/z", "operator", "parenthesis"],
                    found: format!("'{c}'"),
                })
            }
        }
    }
    Ok(toks)
}

/// Dense bivariate scratch polynomial: `c[i][j]` is the coefficient of
/// v^i·x^j, where v is whichever of y/z the input uses.
#[derive(Clone, Debug)]
struct PolyXY {
    c: Vec<Vec<Rational>>,
}

impl PolyXY {
    fn constant(r: Rational) -> Self {
        PolyXY { c: vec![vec![r]] }
    }

    fn var_x() -> Self {
        PolyXY {
            c: vec![vec![Rational::zero(), Rational::one()]],
        }
    }

    fn var_v() -> Self {
        PolyXY {
            c: vec![vec![Rational::zero()], vec![Rational::one()]],
        }
    }

    fn coeff(&self, i: usize, j: usize) -> Rational {
        self.c
            .get(i)
            .and_then(|row| row.get(j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    fn binop(&self, other: &PolyXY, f: impl Fn(Rational, Rational) -> Rational) -> PolyXY {
        let rows = self.c.len().max(other.c.len());
        let cols = |p: &PolyXY| p.c.iter().map(|r| r.len()).max().unwrap_or(0);
        let cols = cols(self).max(cols(other));
        let c = (0..rows)
            .map(|i| (0..cols).map(|j| f(self.coeff(i, j), other.coeff(i, j))).collect())
            .collect();
        PolyXY { c }
    }

    fn add(&self, other: &PolyXY) -> PolyXY {
        self.binop(other, |a, b| a + b)
    }

    fn sub(&self, other: &PolyXY) -> PolyXY {
        self.binop(other, |a, b| a - b)
    }

    fn neg(&self) -> PolyXY {
        PolyXY {
            c: self.c.iter().map(|r| r.iter().map(|v| -v.clone()).collect()).collect(),
        }
    }

    fn mul(&self, other: &PolyXY) -> PolyXY {
        let rows = self.c.len() + other.c.len() - 1;
        let cols_of = |p: &PolyXY| p.c.iter().map(|r| r.len()).max().unwrap_or(1);
        let cols = cols_of(self) + cols_of(other) - 1;
        let mut c = vec![vec![Rational::zero(); cols]; rows];
        for (i1, r1) in self.c.iter().enumerate() {
            for (j1, v1) in r1.iter().enumerate() {
                if v1.is_zero() {
                    continue;
                }
                for (i2, r2) in other.c.iter().enumerate() {
                    for (j2, v2) in r2.iter().enumerate() {
                        if v2.is_zero() {
                            continue;
                        }
                        c[i1 + i2][j1 + j2] += v1 * v2;
                    }
                }
            }
        }
        PolyXY { c }
    }

    fn pow(&self, e: usize) -> PolyXY {
        let mut out = PolyXY::constant(Rational::one());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    fn deg_v(&self) -> usize {
        self.c
            .iter()
            .enumerate()
            .rev()
            .find(|(_, r)| r.iter().any(|v| !v.is_zero()))
            .map_or(0, |(i, _)| i)
    }

    fn deg_x(&self) -> usize {
        self.c
            .iter()
            .flat_map(|r| {
                r.iter()
                    .enumerate()
                    .rev()
                    .find(|(_, v)| !v.is_zero())
                    .map(|(j, _)| j)
            })
            .max()
            .unwrap_or(0)
    }

    fn row_poly(&self, i: usize) -> UniPoly {
        UniPoly::new(self.c.get(i).cloned().unwrap_or_default())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsedPoly {
    Uni(UniPoly),
    Bi(BiPoly),
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    /// Which of y/z the input uses; mixing them is rejected.
    second_var: Option<char>,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn err(&self, expected: Vec<&'static str>) -> ParseError {
        match self.toks.get(self.pos) {
            Some((p, t)) => ParseError {
                position: *p,
                expected,
                found: t.describe(),
            },
            None => ParseError {
                position: self.end,
                expected,
                found: "end of input".into(),
            },
        }
    }

    fn expr(&mut self) -> Result<PolyXY, CliError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<PolyXY, CliError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                // Juxtaposition multiplies: "2x", "(x-1)(x-2)".
                Some(Tok::Num(_)) | Some(Tok::Var(_)) | Some(Tok::LParen) => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<PolyXY, CliError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let e = match self.peek() {
            Some(Tok::Num(n)) if n.is_integer() && !n.is_negative() => {
                let e = n.numer().to_usize().filter(|&e| e <= 512);
                self.pos += 1;
                e.ok_or_else(|| CliError::BadInput("exponent exceeds 512".into()))?
            }
            _ => return Err(self.err(vec!["nonnegative integer exponent"]).into()),
        };
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> Result<PolyXY, CliError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(PolyXY::constant(n))
            }
            Some(Tok::Var('x')) => {
                self.pos += 1;
                Ok(PolyXY::var_x())
            }
            Some(Tok::Var(v)) => {
                self.pos += 1;
                match self.second_var {
                    Some(prev) if prev != v => Err(CliError::BadInput(format!(
                        "cannot mix variables '{prev}' and '{v}' in one polynomial"
                    ))),
                    _ => {
                        self.second_var = Some(v);
                        Ok(PolyXY::var_v())
                    }
                }
            }
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(self.factor()?.neg())
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.factor()
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.err(vec!["')'"]).into());
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(self.err(vec!["number", "variable", "'('", "'-'"]).into()),
        }
    }
}

/// "y^5 + y - x" → BiPoly in (x, y); "z^2 - 2" (or x-only input) → UniPoly.
pub fn parse_polynomial(text: &str) -> Result<ParsedPoly, CliError> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(CliError::BadInput("empty polynomial".into()));
    }
    let mut parser = Parser {
        toks,
        pos: 0,
        end: text.len(),
        second_var: None,
    };
    let poly = parser.expr()?;
    if parser.pos < parser.toks.len() {
        return Err(parser.err(vec!["'+'", "'-'", "'*'", "'^'", "end of input"]).into());
    }
    let uses_x = poly.deg_x() > 0;
    match parser.second_var {
        Some('y') => {
            let rows = (0..=poly.deg_v()).map(|i| poly.row_poly(i)).collect();
            Ok(ParsedPoly::Bi(BiPoly::new(rows)))
        }
        Some('z') if uses_x => Err(CliError::BadInput(
            "'z' is the univariate variable; use y for bivariate input".into(),
        )),
        Some('z') => {
            let coeffs = (0..=poly.deg_v()).map(|i| poly.coeff(i, 0)).collect();
            Ok(ParsedPoly::Uni(UniPoly::new(coeffs)))
        }
        None => Ok(ParsedPoly::Uni(poly.row_poly(0))),
        Some(other) => unreachable!("lexer only admits x/y/z, got {other}"),
    }
}

/// Round-trippable rendering; bivariate terms are grouped by powers of y
/// with fully parenthesized x-coefficients.
pub fn polynomial_to_string(p: &ParsedPoly) -> String {
    match p {
        ParsedPoly::Uni(u) => u.display_with_var("z"),
        ParsedPoly::Bi(f) => {
            let mut parts = Vec::new();
            for (j, cj) in f.y_coeffs().iter().enumerate().rev() {
                if cj.is_zero() {
                    continue;
                }
                let inner = cj.display_with_var("x");
                parts.push(match j {
                    0 => format!("({inner})"),
                    1 => format!("({inner})*y"),
                    _ => format!("({inner})*y^{j}"),
                });
            }
            if parts.is_empty() {
                "0".into()
            } else {
                parts.join(" + ")
            }
        }
    }
}

/// "a+bi" with decimal parts; also accepts bare reals, "i", "-i", "2i".
pub fn parse_complex(text: &str) -> Result<num_complex::Complex64, CliError> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || CliError::BadInput(format!("malformed complex number {text:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    let part = |t: &str, imag: bool| -> Result<f64, CliError> {
        let t = if imag {
            let t = t.strip_suffix('i').ok_or_else(bad)?;
            match t {
                "" | "+" => return Ok(1.0),
                "-" => return Ok(-1.0),
                _ => t,
            }
        } else {
            t
        };
        t.parse::<f64>().map_err(|_| bad())
    };
    // Split before the last top-level sign that is not an exponent sign.
    let bytes = s.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| {
            (bytes[k] == b'+' || bytes[k] == b'-')
                && bytes[k - 1] != b'e'
                && bytes[k - 1] != b'E'
        });
    match split {
        Some(k) if s.ends_with('i') => Ok(num_complex::Complex64::new(
            part(&s[..k], false)?,
            part(&s[k..], true)?,
        )),
        _ => {
            if s.ends_with('i') {
                Ok(num_complex::Complex64::new(0.0, part(&s, true)?))
            } else {
                Ok(num_complex::Complex64::new(part(&s, false)?, 0.0))
            }
        }
    }
}
