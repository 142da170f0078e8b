//! The `.ring` presentation format.
//!
//! ```text
//! field F2
//! generators x y z
//! relations
//!   x*x = x, y*x = x
//!   z*z = 0
//! ```
//!
//! Statements may also be separated by `;`. Relations are separated by
//! commas, semicolons or newlines; a chain `a = b = c` stands for `a = b`
//! and `b = c`. Terms are products of an optional integer coefficient and
//! generator names (`2*x*y^2`), `0` and `1` are literals, `#` starts a
//! comment.

use std::fmt;

use crate::error::{Error, Result};
use crate::fpalg::poly::{Word, WordPoly};
use crate::linalg::is_prime;

pub const MAX_CHARACTERISTIC: u32 = 7;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub characteristic: u32,
    pub generators: Vec<String>,
    pub relations: Vec<(WordPoly, WordPoly)>,
}

impl Presentation {
    pub fn free(characteristic: u32, generators: &[&str]) -> Self {
        Self {
            characteristic,
            generators: generators.iter().map(|g| g.to_string()).collect(),
            relations: Vec::new(),
        }
    }

    /// Parses a word polynomial over this presentation's generators.
    pub fn parse_expr(&self, text: &str) -> Result<WordPoly> {
        let tokens = tokenize(text)?;
        let mut p = Parser {
            tokens,
            pos: 0,
            generators: &self.generators,
            characteristic: self.characteristic,
        };
        let poly = p.sum()?;
        p.skip_newlines();
        if let Some(t) = p.peek() {
            return Err(p.error_at(t, "unexpected trailing input"));
        }
        Ok(poly)
    }
}

/// Canonical serialization; `parse_presentation(&p.to_string())` returns `p`.
impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "field F{}", self.characteristic)?;
        writeln!(f, "generators {}", self.generators.join(" "))?;
        writeln!(f, "relations")?;
        for (lhs, rhs) in &self.relations {
            writeln!(
                f,
                "{} = {}",
                lhs.render(&self.generators, "*"),
                rhs.render(&self.generators, "*")
            )?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Num(u64),
    Star,
    Plus,
    Minus,
    Eq,
    Caret,
    Sep,
    Newline,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut col) = (1usize, 1usize);
    while let Some(&c) = chars.peek() {
        let (tl, tc) = (line, col);
        let push = |out: &mut Vec<Token>, tok| out.push(Token { tok, line: tl, col: tc });
        match c {
            '\n' => {
                chars.next();
                push(&mut out, Tok::Newline);
                line += 1;
                col = 1;
                continue;
            }
            '#' => {
                while chars.peek().is_some_and(|&c| c != '\n') {
                    chars.next();
                }
                continue;
            }
            c if c.is_whitespace() => {
                chars.next();
                col += 1;
                continue;
            }
            c if c.is_ascii_digit() => {
                let mut n: u64 = 0;
                while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    n = n
                        .checked_mul(10)
                        .and_then(|n| n.checked_add(d.to_digit(10).unwrap() as u64))
                        .ok_or(Error::Parse {
                            line: tl,
                            col: tc,
                            msg: "number too large".into(),
                        })?;
                    chars.next();
                    col += 1;
                }
                push(&mut out, Tok::Num(n));
                continue;
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut s = String::new();
                while let Some(&d) = chars.peek().filter(|d| d.is_alphanumeric() || **d == '_') {
                    s.push(d);
                    chars.next();
                    col += 1;
                }
                push(&mut out, Tok::Ident(s));
                continue;
            }
            _ => {}
        }
        let tok = match c {
            '*' => Tok::Star,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '=' => Tok::Eq,
            '^' => Tok::Caret,
            ',' | ';' => Tok::Sep,
            other => {
                return Err(Error::Parse {
                    line,
                    col,
                    msg: format!("unexpected character {other:?}"),
                })
            }
        };
        chars.next();
        col += 1;
        push(&mut out, tok);
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    generators: &'a [String],
    characteristic: u32,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn error_at(&self, t: &Token, msg: impl Into<String>) -> Error {
        Error::Parse {
            line: t.line,
            col: t.col,
            msg: msg.into(),
        }
    }

    fn error_eof(&self, msg: impl Into<String>) -> Error {
        let (line, col) = self
            .tokens
            .last()
            .map(|t| (t.line, t.col + 1))
            .unwrap_or((1, 1));
        Error::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }

    fn skip_newlines(&mut self) {
        while matches!(self.peek().map(|t| &t.tok), Some(Tok::Newline | Tok::Sep)) {
            self.pos += 1;
        }
    }

    fn at_terminator(&self) -> bool {
        matches!(self.peek().map(|t| &t.tok), None | Some(Tok::Newline | Tok::Sep))
    }

    fn keyword(&mut self, kw: &str) -> Result<()> {
        self.skip_newlines();
        match self.next() {
            Some(Token {
                tok: Tok::Ident(s), ..
            }) if s == kw => Ok(()),
            Some(t) => Err(self.error_at(&t, format!("expected `{kw}`"))),
            None => Err(self.error_eof(format!("expected `{kw}`"))),
        }
    }

    fn sum(&mut self) -> Result<WordPoly> {
        let p = self.characteristic;
        let mut out = WordPoly::zero();
        let mut sign = 1;
        if matches!(self.peek().map(|t| &t.tok), Some(Tok::Minus)) {
            self.pos += 1;
            sign = p - 1;
        }
        loop {
            let term = self.term()?;
            out.add_scaled(&term, sign, p);
            match self.peek().map(|t| &t.tok) {
                Some(Tok::Plus) => sign = 1,
                Some(Tok::Minus) => sign = p - 1,
                _ => return Ok(out),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<WordPoly> {
        let p = self.characteristic;
        let mut coeff: u64 = 1;
        let mut word = Vec::new();
        loop {
            let t = self.next().ok_or_else(|| self.error_eof("expected a term"))?;
            match &t.tok {
                Tok::Num(n) => coeff = coeff * (n % p as u64) % p as u64,
                Tok::Ident(name) => {
                    let g = self
                        .generators
                        .iter()
                        .position(|g| g == name)
                        .ok_or_else(|| self.error_at(&t, format!("unknown generator `{name}`")))?;
                    let mut power = 1;
                    if matches!(self.peek().map(|t| &t.tok), Some(Tok::Caret)) {
                        self.pos += 1;
                        match self.next() {
                            Some(Token { tok: Tok::Num(k), .. }) if k <= 64 => power = k,
                            Some(t) => return Err(self.error_at(&t, "expected an exponent up to 64")),
                            None => return Err(self.error_eof("expected an exponent")),
                        }
                    }
                    word.extend(std::iter::repeat_n(g as u8, power as usize));
                }
                _ => return Err(self.error_at(&t, "malformed term")),
            }
            if matches!(self.peek().map(|t| &t.tok), Some(Tok::Star)) {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(WordPoly::monomial(Word(word), coeff as u32, p))
    }
}

/// Parses the `.ring` format.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        generators: &[],
        characteristic: 2,
    };
    parser.keyword("field")?;
    let characteristic = match parser.next() {
        Some(t) => match &t.tok {
            Tok::Ident(s) if s.starts_with('F') => {
                let p: u32 = s[1..]
                    .parse()
                    .map_err(|_| parser.error_at(&t, format!("bad field name `{s}`")))?;
                if !is_prime(p) {
                    return Err(parser.error_at(&t, format!("characteristic {p} is not prime")));
                }
                if p > MAX_CHARACTERISTIC {
                    return Err(parser.error_at(
                        &t,
                        format!("characteristic {p} exceeds the supported maximum {MAX_CHARACTERISTIC}"),
                    ));
                }
                p
            }
            _ => return Err(parser.error_at(&t, "expected a field name like F2")),
        },
        None => return Err(parser.error_eof("expected a field name")),
    };
    if !parser.at_terminator() {
        let t = parser.peek().unwrap().clone();
        return Err(parser.error_at(&t, "expected end of statement"));
    }

    parser.keyword("generators")?;
    let mut generators: Vec<String> = Vec::new();
    while !parser.at_terminator() {
        let t = parser.next().unwrap();
        match &t.tok {
            Tok::Ident(name) if ["field", "generators", "relations"].contains(&name.as_str()) => {
                return Err(parser.error_at(&t, format!("`{name}` is a keyword")))
            }
            Tok::Ident(name) => {
                if generators.contains(name) {
                    return Err(parser.error_at(&t, format!("duplicate generator `{name}`")));
                }
                if generators.len() == u8::MAX as usize {
                    return Err(parser.error_at(&t, "too many generators"));
                }
                generators.push(name.clone());
            }
            _ => return Err(parser.error_at(&t, "expected a generator name")),
        }
    }

    let mut relations = Vec::new();
    parser.skip_newlines();
    if parser.peek().is_some() {
        parser.keyword("relations")?;
        let mut rel = Parser {
            tokens: std::mem::take(&mut parser.tokens),
            pos: parser.pos,
            generators: &generators,
            characteristic,
        };
        loop {
            rel.skip_newlines();
            if rel.peek().is_none() {
                break;
            }
            let mut sides = vec![rel.sum()?];
            while matches!(rel.peek().map(|t| &t.tok), Some(Tok::Eq)) {
                rel.pos += 1;
                sides.push(rel.sum()?);
            }
            if sides.len() < 2 {
                return match rel.peek().cloned() {
                    Some(t) => Err(rel.error_at(&t, "expected `=`")),
                    None => Err(rel.error_eof("expected `=`")),
                };
            }
            if !rel.at_terminator() {
                let t = rel.peek().unwrap().clone();
                return Err(rel.error_at(&t, "expected `,` or end of line after relation"));
            }
            for pair in sides.windows(2) {
                relations.push((pair[0].clone(), pair[1].clone()));
            }
        }
    }
    Ok(Presentation {
        characteristic,
        generators,
        relations,
    })
}
