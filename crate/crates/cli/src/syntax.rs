//! Tokens with positions, diagnostics, and the two small grammars shared by
//! domain files and ideal expressions: coefficient arithmetic and
//! operation terms.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use semistar_core::algebra::{BaseField, ExtensionField, FieldElem, Scalar};
use semistar_core::semistar::{OverringTag, PrimeTag, SemistarOp};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl ParseError {
    pub fn new(line: usize, col: usize, expected: &[&str], found: impl Into<String>) -> ParseError {
        ParseError { line, col, expected: expected.iter().map(|s| s.to_string()).collect(), found: found.into() }
    }

    /// A semantic problem at a position; `expected` holds the explanation.
    pub fn semantic(at: &Token, msg: impl Into<String>) -> ParseError {
        ParseError { line: at.line, col: at.col, expected: vec![msg.into()], found: at.tok.to_string() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: expected {}, found {}", self.line, self.col, self.expected.join(" | "), self.found)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Int(n) => write!(f, "'{n}'"),
            Tok::Sym(c) => write!(f, "'{c}'"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

const SYMBOLS: &str = "<>,()[]{}+-*/^&:";

/// Splits `src` into tokens; positions are 1-based. `line`/`col` give the
/// position of the first character, for text embedded in a larger file.
pub fn lex_at(src: &str, line: usize, col: usize) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let (mut line, mut col) = (line, col);
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            i += 1;
            continue;
        }
        let start = i;
        let tok = if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            Tok::Int(s.parse().expect("digits"))
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            Tok::Ident(chars[start..i].iter().collect())
        } else if SYMBOLS.contains(c) {
            i += 1;
            Tok::Sym(c)
        } else {
            return Err(ParseError::new(l0, c0, &["a token"], format!("'{c}'")));
        };
        col += i - start;
        out.push(Token { tok, line: l0, col: c0 });
    }
    out.push(Token { tok: Tok::End, line, col });
    Ok(out)
}

pub fn lex(src: &str) -> Result<Vec<Token>, ParseError> {
    lex_at(src, 1, 1)
}

/// A cursor over a token slice that always ends with `Tok::End`.
pub struct Cursor<'t> {
    toks: &'t [Token],
    pos: usize,
}

impl<'t> Cursor<'t> {
    pub fn new(toks: &'t [Token]) -> Cursor<'t> {
        Cursor { toks, pos: 0 }
    }

    pub fn peek(&self) -> &'t Token {
        &self.toks[self.pos.min(self.toks.len() - 1)]
    }

    pub fn peek_at(&self, k: usize) -> &'t Token {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)]
    }

    pub fn bump(&mut self) -> &'t Token {
        let t = self.peek();
        if self.pos < self.toks.len() - 1 {
            self.pos += 1;
        }
        t
    }

    pub fn is_sym(&self, c: char) -> bool {
        self.peek().tok == Tok::Sym(c)
    }

    pub fn is_ident(&self, s: &str) -> bool {
        matches!(&self.peek().tok, Tok::Ident(x) if x == s)
    }

    pub fn eat_sym(&mut self, c: char) -> bool {
        let hit = self.is_sym(c);
        if hit {
            self.bump();
        }
        hit
    }

    pub fn fail(&self, expected: &[&str]) -> ParseError {
        let t = self.peek();
        ParseError::new(t.line, t.col, expected, t.tok.to_string())
    }

    pub fn expect_sym(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            Err(self.fail(&[&format!("'{c}'")]))
        }
    }

    pub fn expect_end(&self) -> Result<(), ParseError> {
        if self.peek().tok == Tok::End {
            Ok(())
        } else {
            Err(self.fail(&["end of input"]))
        }
    }

    pub fn ident(&mut self, expected: &[&str]) -> Result<(&'t Token, &'t str), ParseError> {
        let t = self.peek();
        match &t.tok {
            Tok::Ident(s) => {
                self.bump();
                Ok((t, s.as_str()))
            }
            _ => Err(self.fail(expected)),
        }
    }

    pub fn int(&mut self) -> Result<BigInt, ParseError> {
        match &self.peek().tok {
            Tok::Int(n) => {
                let n = n.clone();
                self.bump();
                Ok(n)
            }
            _ => Err(self.fail(&["an integer"])),
        }
    }

    pub fn signed_int(&mut self) -> Result<BigInt, ParseError> {
        let neg = self.eat_sym('-');
        let n = self.int()?;
        Ok(if neg { -n } else { n })
    }

    pub fn small_int(&mut self) -> Result<i64, ParseError> {
        let t = self.peek();
        let n = self.signed_int()?;
        i64::try_from(n).map_err(|_| ParseError::semantic(t, "an integer in the 64-bit range"))
    }
}

/// Arithmetic in the adjoined root `a`: `1+a`, `-2*a^2`, `(1+a)/3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldExpr {
    Num(BigInt),
    Root,
    Neg(Box<FieldExpr>),
    Add(Box<FieldExpr>, Box<FieldExpr>),
    Sub(Box<FieldExpr>, Box<FieldExpr>),
    Mul(Box<FieldExpr>, Box<FieldExpr>),
    Div(Box<FieldExpr>, Box<FieldExpr>),
    Pow(Box<FieldExpr>, u32),
}

pub fn field_expr(c: &mut Cursor) -> Result<FieldExpr, ParseError> {
    let mut lhs = field_term(c)?;
    loop {
        if c.eat_sym('+') {
            lhs = FieldExpr::Add(Box::new(lhs), Box::new(field_term(c)?));
        } else if c.eat_sym('-') {
            lhs = FieldExpr::Sub(Box::new(lhs), Box::new(field_term(c)?));
        } else {
            return Ok(lhs);
        }
    }
}

fn field_term(c: &mut Cursor) -> Result<FieldExpr, ParseError> {
    let mut lhs = field_unary(c)?;
    loop {
        if c.eat_sym('*') {
            lhs = FieldExpr::Mul(Box::new(lhs), Box::new(field_unary(c)?));
        } else if c.eat_sym('/') {
            lhs = FieldExpr::Div(Box::new(lhs), Box::new(field_unary(c)?));
        } else {
            return Ok(lhs);
        }
    }
}

fn field_unary(c: &mut Cursor) -> Result<FieldExpr, ParseError> {
    if c.eat_sym('-') {
        return Ok(FieldExpr::Neg(Box::new(field_unary(c)?)));
    }
    let base = match &c.peek().tok {
        Tok::Int(_) => FieldExpr::Num(c.int()?),
        Tok::Ident(s) if s == "a" => {
            c.bump();
            FieldExpr::Root
        }
        Tok::Sym('(') => {
            c.bump();
            let e = field_expr(c)?;
            c.expect_sym(')')?;
            e
        }
        _ => return Err(c.fail(&["an integer", "'a'", "'('"])),
    };
    if c.eat_sym('^') {
        let t = c.peek();
        let n = c.int()?;
        let n = u32::try_from(n).map_err(|_| ParseError::semantic(t, "a small exponent"))?;
        return Ok(FieldExpr::Pow(Box::new(base), n));
    }
    Ok(base)
}

impl FieldExpr {
    pub fn eval(&self, k: &ExtensionField) -> Result<FieldElem, String> {
        let r = |e: &FieldExpr| e.eval(k);
        Ok(match self {
            FieldExpr::Num(n) => {
                let q = k.base().embed(&BigRational::from_integer(n.clone())).map_err(|e| e.to_string())?;
                k.from_base(q)
            }
            FieldExpr::Root => k.generator(),
            FieldExpr::Neg(x) => k.neg(&r(x)?),
            FieldExpr::Add(x, y) => k.add(&r(x)?, &r(y)?),
            FieldExpr::Sub(x, y) => k.sub(&r(x)?, &r(y)?),
            FieldExpr::Mul(x, y) => k.mul(&r(x)?, &r(y)?),
            FieldExpr::Div(x, y) => k.div(&r(x)?, &r(y)?).map_err(|e| e.to_string())?,
            FieldExpr::Pow(x, n) => k.pow(&r(x)?, *n),
        })
    }

    /// As a polynomial in `a` over the rationals, low degree first.
    pub fn polynomial(&self) -> Result<Vec<Scalar>, String> {
        fn add(x: &[Scalar], y: &[Scalar], sign: i32) -> Vec<Scalar> {
            let n = x.len().max(y.len());
            (0..n)
                .map(|i| {
                    let a = x.get(i).cloned().unwrap_or_else(Scalar::zero);
                    let b = y.get(i).cloned().unwrap_or_else(Scalar::zero);
                    if sign > 0 {
                        a + b
                    } else {
                        a - b
                    }
                })
                .collect()
        }
        fn mul(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
            let mut out = vec![Scalar::zero(); x.len() + y.len() - 1];
            for (i, a) in x.iter().enumerate() {
                for (j, b) in y.iter().enumerate() {
                    out[i + j] += a * b;
                }
            }
            out
        }
        Ok(match self {
            FieldExpr::Num(n) => vec![BigRational::from_integer(n.clone())],
            FieldExpr::Root => vec![Scalar::zero(), Scalar::one()],
            FieldExpr::Neg(x) => x.polynomial()?.into_iter().map(|c| -c).collect(),
            FieldExpr::Add(x, y) => add(&x.polynomial()?, &y.polynomial()?, 1),
            FieldExpr::Sub(x, y) => add(&x.polynomial()?, &y.polynomial()?, -1),
            FieldExpr::Mul(x, y) => mul(&x.polynomial()?, &y.polynomial()?),
            FieldExpr::Div(x, y) => {
                let d = y.polynomial()?;
                let c = match d.iter().rposition(|c| !c.is_zero()) {
                    Some(0) => d[0].clone(),
                    Some(_) => return Err("division by a polynomial".into()),
                    None => return Err("division by zero".into()),
                };
                x.polynomial()?.into_iter().map(|a| a / &c).collect()
            }
            FieldExpr::Pow(x, n) => {
                let p = x.polynomial()?;
                (0..*n).fold(vec![Scalar::one()], |acc, _| mul(&acc, &p))
            }
        })
    }
}

pub fn overring_tag(c: &mut Cursor) -> Result<OverringTag, ParseError> {
    const TAGS: [&str; 3] = ["'V'", "'ic'", "'K'"];
    let (_, s) = c.ident(&TAGS)?;
    match s {
        "V" => Ok(OverringTag::ValuationHull),
        "ic" => Ok(OverringTag::IntegralClosure),
        "K" => Ok(OverringTag::FullQuotientField),
        _ => {
            c.pos -= 1;
            Err(c.fail(&TAGS))
        }
    }
}

fn prime_tag(c: &mut Cursor) -> Result<PrimeTag, ParseError> {
    let (_, s) = c.ident(&["'M'", "'P1'"])?;
    match s {
        "M" => Ok(PrimeTag::Maximal),
        "P1" => Ok(PrimeTag::Height1),
        _ => {
            c.pos -= 1;
            Err(c.fail(&["'M'", "'P1'"]))
        }
    }
}

const OPS: [&str; 11] = ["'d'", "'v'", "'t'", "'w'", "'st'", "'spec'", "'ft'", "'bar'", "'tilde'", "'asc'", "'desc'"];

/// Operation terms as printed by `SemistarOp`'s `Display`.
pub fn op_term(c: &mut Cursor) -> Result<SemistarOp, ParseError> {
    let (_, s) = c.ident(&OPS)?;
    let inner = |c: &mut Cursor| -> Result<SemistarOp, ParseError> {
        c.expect_sym('(')?;
        let op = op_term(c)?;
        c.expect_sym(')')?;
        Ok(op)
    };
    let tag = |c: &mut Cursor| -> Result<OverringTag, ParseError> {
        c.expect_sym('[')?;
        let t = overring_tag(c)?;
        c.expect_sym(']')?;
        Ok(t)
    };
    Ok(match s {
        "d" => SemistarOp::Identity,
        "v" => SemistarOp::V,
        "t" => SemistarOp::t(),
        "w" => SemistarOp::w(),
        "st" => SemistarOp::StarOverring(tag(c)?),
        "spec" => {
            c.expect_sym('{')?;
            let mut primes = vec![prime_tag(c)?];
            while c.eat_sym(',') {
                primes.push(prime_tag(c)?);
            }
            c.expect_sym('}')?;
            SemistarOp::spectral(&primes)
        }
        "ft" => SemistarOp::ft(inner(c)?),
        "bar" => SemistarOp::bar(inner(c)?),
        "tilde" => SemistarOp::tilde(inner(c)?),
        "asc" => {
            let t = tag(c)?;
            SemistarOp::ascent(inner(c)?, t)
        }
        "desc" => {
            let t = tag(c)?;
            SemistarOp::descent(inner(c)?, t)
        }
        _ => {
            c.pos -= 1;
            return Err(c.fail(&OPS));
        }
    })
}

pub fn parse_op(text: &str) -> Result<SemistarOp, ParseError> {
    let toks = lex(text)?;
    let mut c = Cursor::new(&toks);
    let op = op_term(&mut c)?;
    c.expect_end()?;
    Ok(op)
}

/// `Q` or `Fp:<p>`.
pub fn base_field(text: &str, line: usize, col: usize) -> Result<BaseField, ParseError> {
    if text == "Q" {
        return Ok(BaseField::Rationals);
    }
    let bad = || ParseError::new(line, col, &["'Q'", "'Fp:<prime>'"], format!("'{text}'"));
    let p: u64 = text.strip_prefix("Fp:").ok_or_else(bad)?.parse().map_err(|_| bad())?;
    BaseField::prime_field(p).map_err(|e| ParseError::new(line, col, &["a prime"], e.to_string()))
}
