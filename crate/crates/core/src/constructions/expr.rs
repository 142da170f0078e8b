//! Ring-spec expressions:
//!
//! ```text
//! expr := F2 | F3 | F5 | F7 | Z<n>
//!       | M(n, expr) | T(n, expr) | S(n, expr) | D(n, expr) | V(n, expr)
//!       | prod(expr, expr, ...) | quotpoly(expr, n) | fp("file.ring")
//! ```

use std::path::{Path, PathBuf};

use crate::constructions::{matrix_ring, prime_field, product, quotient_poly, zmod, Family, Limits, MatrixShape};
use crate::error::{Error, Result};
use crate::fpalg::{complete_rewrite, parse_presentation, realize_finite, DEFAULT_COMPLETION_CAP};
use crate::ring::FiniteRing;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingExpr {
    PrimeField(u32),
    Zmod(u32),
    Matrix(Family, usize, Box<RingExpr>),
    Product(Vec<RingExpr>),
    QuotPoly(Box<RingExpr>, usize),
    Presentation(String),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Num(u64),
    Str(String),
    LParen,
    RParen,
    Comma,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |col: usize, msg: String| Error::Parse { line: 1, col, msg };
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
            let s: String = chars[start..i].iter().collect();
            let n = s.parse().map_err(|_| err(col, format!("bad number {s}")))?;
            out.push((Tok::Num(n), col));
        } else if c.is_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if c == '"' {
            let start = i + 1;
            i += 1;
            while i < chars.len() && chars[i] != '"' {
                i += 1;
            }
            if i == chars.len() {
                return Err(err(col, "unterminated string".into()));
            }
            out.push((Tok::Str(chars[start..i].iter().collect()), col));
            i += 1;
        } else {
            let tok = match c {
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                ',' => Tok::Comma,
                _ => return Err(err(col, format!("unexpected character {c:?}"))),
            };
            out.push((tok, col));
            i += 1;
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end_col: usize,
}

impl Parser {
    fn err(&self, msg: impl Into<String>) -> Error {
        let col = self.toks.get(self.pos).map(|t| t.1).unwrap_or(self.end_col);
        Error::Parse {
            line: 1,
            col,
            msg: msg.into(),
        }
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.0.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if self.toks.get(self.pos).map(|t| &t.0) == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected {what}")))
        }
    }

    fn number(&mut self) -> Result<usize> {
        match self.toks.get(self.pos).map(|t| t.0.clone()) {
            Some(Tok::Num(n)) if n >= 1 && n <= 64 => {
                self.pos += 1;
                Ok(n as usize)
            }
            _ => Err(self.err("expected a dimension in 1..=64")),
        }
    }

    fn expr(&mut self) -> Result<RingExpr> {
        let start = self.pos;
        let name = match self.next() {
            Some(Tok::Ident(s)) => s,
            _ => {
                self.pos = start;
                return Err(self.err("expected a ring expression"));
            }
        };
        let family = match name.as_str() {
            "M" => Some(Family::Full),
            "T" => Some(Family::UpperTriangular),
            "S" => Some(Family::Diagonal),
            "D" => Some(Family::ConstantDiagonal),
            "V" => Some(Family::ConstantDiagonals),
            _ => None,
        };
        if let Some(family) = family {
            self.expect(Tok::LParen, "`(`")?;
            let n = self.number()?;
            self.expect(Tok::Comma, "`,`")?;
            let inner = self.expr()?;
            self.expect(Tok::RParen, "`)`")?;
            return Ok(RingExpr::Matrix(family, n, Box::new(inner)));
        }
        match name.as_str() {
            "prod" => {
                self.expect(Tok::LParen, "`(`")?;
                let mut parts = vec![self.expr()?];
                while self.toks.get(self.pos).map(|t| &t.0) == Some(&Tok::Comma) {
                    self.pos += 1;
                    parts.push(self.expr()?);
                }
                self.expect(Tok::RParen, "`)`")?;
                Ok(RingExpr::Product(parts))
            }
            "quotpoly" => {
                self.expect(Tok::LParen, "`(`")?;
                let inner = self.expr()?;
                self.expect(Tok::Comma, "`,`")?;
                let n = self.number()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(RingExpr::QuotPoly(Box::new(inner), n))
            }
            "fp" => {
                self.expect(Tok::LParen, "`(`")?;
                let path = match self.next() {
                    Some(Tok::Str(s)) => s,
                    _ => {
                        self.pos -= 1;
                        return Err(self.err("expected a quoted path"));
                    }
                };
                self.expect(Tok::RParen, "`)`")?;
                Ok(RingExpr::Presentation(path))
            }
            s if s.len() > 1 && (s.starts_with('F') || s.starts_with('Z')) => {
                let n: u32 = s[1..].parse().map_err(|_| {
                    self.pos = start;
                    self.err(format!("unknown ring `{s}`"))
                })?;
                if s.starts_with('F') {
                    if ![2, 3, 5, 7].contains(&n) {
                        self.pos = start;
                        return Err(self.err(format!("unsupported prime field `{s}`")));
                    }
                    Ok(RingExpr::PrimeField(n))
                } else {
                    if !(1..=256).contains(&n) {
                        self.pos = start;
                        return Err(self.err(format!("modulus of `{s}` must be in 1..=256")));
                    }
                    Ok(RingExpr::Zmod(n))
                }
            }
            other => {
                self.pos = start;
                Err(self.err(format!("unknown ring `{other}`")))
            }
        }
    }
}

pub fn parse_ring_expr(text: &str) -> Result<RingExpr> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end_col: text.chars().count() + 1,
    };
    let e = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

impl RingExpr {
    /// Builds the ring; relative `fp` paths resolve against `base_dir`.
    pub fn build(&self, limits: &Limits, base_dir: &Path) -> Result<FiniteRing> {
        match self {
            RingExpr::PrimeField(p) => prime_field(*p),
            RingExpr::Zmod(n) => zmod(*n),
            RingExpr::Matrix(family, n, inner) => {
                let base = inner.build(limits, base_dir)?;
                matrix_ring(&MatrixShape::new(*family, *n, base), limits)
            }
            RingExpr::Product(parts) => {
                let rings = parts
                    .iter()
                    .map(|p| p.build(limits, base_dir))
                    .collect::<Result<Vec<_>>>()?;
                product(&rings, limits)
            }
            RingExpr::QuotPoly(inner, n) => quotient_poly(&inner.build(limits, base_dir)?, *n, limits),
            RingExpr::Presentation(path) => {
                let full: PathBuf = base_dir.join(path);
                let text = std::fs::read_to_string(&full)
                    .map_err(|e| Error::Io(format!("{}: {e}", full.display())))?;
                let pres = parse_presentation(&text)?;
                let rs = complete_rewrite(&pres, DEFAULT_COMPLETION_CAP)?;
                realize_finite(&rs, limits).map(|a| a.ring)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingView;

    fn build(s: &str) -> Result<FiniteRing> {
        parse_ring_expr(s)?.build(&Limits::default(), Path::new("."))
    }

    #[test]
    fn grammar() {
        assert_eq!(build("T(2, F2)").unwrap().size(), 8);
        assert_eq!(build("prod(F2, T(2, F2))").unwrap().size(), 16);
        assert_eq!(build("quotpoly(F3, 2)").unwrap().size(), 9);
        assert_eq!(build("D(2, T(2, F2))").unwrap().size(), 64);
        assert_eq!(build("Z4").unwrap().size(), 4);
        assert_eq!(
            parse_ring_expr("M(2, F2)").unwrap(),
            RingExpr::Matrix(Family::Full, 2, Box::new(RingExpr::PrimeField(2)))
        );
    }

    #[test]
    fn errors_carry_columns() {
        assert!(build("M(4, M(4, F3))").unwrap_err().is_capacity());
        match parse_ring_expr("M(2, G2)").unwrap_err() {
            Error::Parse { col, .. } => assert_eq!(col, 6),
            e => panic!("{e:?}"),
        }
        assert!(parse_ring_expr("M(2, F2").is_err());
        assert!(parse_ring_expr("F4").is_err());
        assert!(parse_ring_expr("prod()").is_err());
        assert!(matches!(build("fp(\"/nonexistent.ring\")"), Err(Error::Io(_))));
    }
}
