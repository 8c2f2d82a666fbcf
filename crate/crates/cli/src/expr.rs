//! Ideal expressions over a fixed domain.
//!
//! Binary operators bind `:` < `&` < `+` < `*`, all left associative.
//! Atoms are `<gen, ...>`, `D`, `M`, `V` and `K`. Generators are `x^n` in a
//! semigroup ring and `coeff*t(level)` otherwise.

use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use semistar_core::algebra::{GroupElement, ValueGroup};
use semistar_core::dplusm::Generator;
use semistar_core::semistar::{apply, DomainHandle, Family, IdealHandle, OverringTag, SemistarOp};

use crate::syntax::{field_expr, lex, op_term, overring_tag, Cursor, ParseError, Tok};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Colon,
    Meet,
    Sum,
    Product,
}

impl BinOp {
    fn prec(self) -> u8 {
        match self {
            BinOp::Colon => 1,
            BinOp::Meet => 2,
            BinOp::Sum => 3,
            BinOp::Product => 4,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            BinOp::Colon => " : ",
            BinOp::Meet => " & ",
            BinOp::Sum => " + ",
            BinOp::Product => "*",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Func {
    V,
    T,
    W,
    Inv,
    Ft(SemistarOp),
    Bar(SemistarOp),
    Tilde(SemistarOp),
    Star(OverringTag),
    Apply(SemistarOp),
}

impl Func {
    /// The operation applied, or `None` for `inv`.
    pub fn op(&self) -> Option<SemistarOp> {
        Some(match self {
            Func::V => SemistarOp::V,
            Func::T => SemistarOp::t(),
            Func::W => SemistarOp::w(),
            Func::Inv => return None,
            Func::Ft(o) => SemistarOp::ft(o.clone()),
            Func::Bar(o) => SemistarOp::bar(o.clone()),
            Func::Tilde(o) => SemistarOp::tilde(o.clone()),
            Func::Star(t) => SemistarOp::StarOverring(*t),
            Func::Apply(o) => o.clone(),
        })
    }
}

impl fmt::Display for Func {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Func::V => f.write_str("v"),
            Func::T => f.write_str("t"),
            Func::W => f.write_str("w"),
            Func::Inv => f.write_str("inv"),
            Func::Ft(o) => write!(f, "ft[{o}]"),
            Func::Bar(o) => write!(f, "bar[{o}]"),
            Func::Tilde(o) => write!(f, "tilde[{o}]"),
            Func::Star(t) => write!(f, "st[{}]", t.name()),
            Func::Apply(o) => write!(f, "apply[{o}]"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Gen {
    Power(i64),
    Term(Generator),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Ring,
    Maximal,
    Hull,
    Field,
    Gens(Vec<Gen>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

struct Parser<'t> {
    c: Cursor<'t>,
    d: &'t Arc<DomainHandle>,
}

const PRIMARY: [&str; 15] = [
    "'<'", "'('", "'D'", "'M'", "'V'", "'K'", "'v'", "'t'", "'w'", "'inv'", "'ft'", "'bar'", "'tilde'", "'st'", "'apply'",
];

impl<'t> Parser<'t> {
    fn binary(&mut self, level: u8) -> Result<Expr, ParseError> {
        if level > 4 {
            return self.primary();
        }
        let (op, sym) = match level {
            1 => (BinOp::Colon, ':'),
            2 => (BinOp::Meet, '&'),
            3 => (BinOp::Sum, '+'),
            _ => (BinOp::Product, '*'),
        };
        let mut lhs = self.binary(level + 1)?;
        while self.c.eat_sym(sym) {
            let rhs = self.binary(level + 1)?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn bracketed_op(&mut self) -> Result<SemistarOp, ParseError> {
        self.c.expect_sym('[')?;
        let op = op_term(&mut self.c)?;
        self.c.expect_sym(']')?;
        Ok(op)
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let t = self.c.peek();
        match &t.tok {
            Tok::Sym('<') => {
                self.c.bump();
                let mut gens = vec![self.generator()?];
                while self.c.eat_sym(',') {
                    gens.push(self.generator()?);
                }
                self.c.expect_sym('>')?;
                Ok(Expr::Gens(gens))
            }
            Tok::Sym('(') => {
                self.c.bump();
                let e = self.binary(1)?;
                self.c.expect_sym(')')?;
                Ok(e)
            }
            Tok::Ident(s) => {
                self.c.bump();
                let func = match s.as_str() {
                    "D" => return Ok(Expr::Ring),
                    "M" => return Ok(Expr::Maximal),
                    "K" => return Ok(Expr::Field),
                    "V" if matches!(self.d.family(), Family::SemigroupRing(_)) => {
                        return Err(ParseError::semantic(t, "D or M (a semigroup ring has no overring V)"));
                    }
                    "V" => return Ok(Expr::Hull),
                    "v" => Func::V,
                    "t" => Func::T,
                    "w" => Func::W,
                    "inv" => Func::Inv,
                    "ft" => Func::Ft(self.bracketed_op()?),
                    "bar" => Func::Bar(self.bracketed_op()?),
                    "tilde" => Func::Tilde(self.bracketed_op()?),
                    "apply" => Func::Apply(self.bracketed_op()?),
                    "st" => {
                        self.c.expect_sym('[')?;
                        let tag = overring_tag(&mut self.c)?;
                        self.c.expect_sym(']')?;
                        Func::Star(tag)
                    }
                    _ => return Err(ParseError::new(t.line, t.col, &PRIMARY, t.tok.to_string())),
                };
                self.c.expect_sym('(')?;
                let e = self.binary(1)?;
                self.c.expect_sym(')')?;
                Ok(Expr::Call(func, Box::new(e)))
            }
            _ => Err(self.c.fail(&PRIMARY)),
        }
    }

    fn generator(&mut self) -> Result<Gen, ParseError> {
        if matches!(self.d.family(), Family::SemigroupRing(_)) {
            let (t, s) = self.c.ident(&["'x'"])?;
            if s != "x" {
                return Err(ParseError::new(t.line, t.col, &["'x'"], t.tok.to_string()));
            }
            let n = if self.c.eat_sym('^') { self.c.small_int()? } else { 1 };
            return Ok(Gen::Power(n));
        }
        let k = self.d.field();
        // the coefficient runs up to the `*t(` that opens the level
        let coeff = if self.c.is_ident("t") && self.c.peek_at(1).tok == Tok::Sym('(') {
            k.one()
        } else {
            let start = self.c.peek();
            let e = field_expr_until_level(&mut self.c)?;
            let x = e.eval(&k).map_err(|m| ParseError::semantic(start, format!("a coefficient in K ({m})")))?;
            if x.is_zero() {
                return Err(ParseError::semantic(start, "a nonzero coefficient"));
            }
            self.c.expect_sym('*')?;
            x
        };
        let (t, _) = self.c.ident(&["'t'"])?;
        if !matches!(&t.tok, Tok::Ident(s) if s == "t") {
            return Err(ParseError::new(t.line, t.col, &["'t'"], t.tok.to_string()));
        }
        self.c.expect_sym('(')?;
        let level = self.level()?;
        self.c.expect_sym(')')?;
        Ok(Gen::Term(Generator::new(coeff, level)))
    }

    fn level(&mut self) -> Result<GroupElement, ParseError> {
        let t = self.c.peek();
        match self.d.group() {
            ValueGroup::Integers => Ok(GroupElement::Int(self.c.small_int()?)),
            ValueGroup::Rationals => {
                let n = self.c.signed_int()?;
                let den = if self.c.eat_sym('/') { self.c.int()? } else { 1.into() };
                if den == 0.into() {
                    return Err(ParseError::semantic(t, "a nonzero denominator"));
                }
                Ok(GroupElement::Rat(BigRational::new(n, den)))
            }
            ValueGroup::LexProduct => {
                let a = self.c.small_int()?;
                self.c.expect_sym(',')?;
                let b = self.c.small_int()?;
                Ok(GroupElement::Lex(a, b))
            }
        }
    }
}

/// Parses a coefficient, stopping before the `*` of `*t(`.
fn field_expr_until_level(c: &mut Cursor) -> Result<crate::syntax::FieldExpr, ParseError> {
    // field_expr consumes `*` greedily, so feed it a truncated token list
    let mut depth = 0i32;
    let mut k = 0;
    loop {
        let t = c.peek_at(k);
        match &t.tok {
            Tok::End => break,
            Tok::Sym('(') => depth += 1,
            Tok::Sym(')') => depth -= 1,
            Tok::Sym('*') if depth == 0 => {
                let is_t = matches!(&c.peek_at(k + 1).tok, Tok::Ident(s) if s == "t");
                if is_t && c.peek_at(k + 2).tok == Tok::Sym('(') {
                    break;
                }
            }
            Tok::Sym(',' | '>') if depth == 0 => break,
            _ => {}
        }
        k += 1;
    }
    let mut slice: Vec<_> = (0..k).map(|i| c.peek_at(i).clone()).collect();
    let end = c.peek_at(k);
    slice.push(crate::syntax::Token { tok: Tok::End, line: end.line, col: end.col });
    let mut sub = Cursor::new(&slice);
    let e = field_expr(&mut sub)?;
    if sub.peek().tok != Tok::End {
        return Err(sub.fail(&["'*t('"]));
    }
    for _ in 0..k {
        c.bump();
    }
    Ok(e)
}

/// Parses `text` as an expression over `d`.
pub fn parse_expr(text: &str, d: &Arc<DomainHandle>) -> Result<Expr, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { c: Cursor::new(&toks), d };
    let e = p.binary(1)?;
    p.c.expect_end()?;
    Ok(e)
}

fn print_into(e: &Expr, d: &DomainHandle, out: &mut String) {
    match e {
        Expr::Ring => out.push('D'),
        Expr::Maximal => out.push('M'),
        Expr::Hull => out.push('V'),
        Expr::Field => out.push('K'),
        Expr::Gens(gens) => {
            let k = d.field();
            let parts: Vec<String> = gens
                .iter()
                .map(|g| match g {
                    Gen::Power(n) => format!("x^{n}"),
                    Gen::Term(g) => g.format(&k),
                })
                .collect();
            out.push('<');
            out.push_str(&parts.join(", "));
            out.push('>');
        }
        Expr::Bin(op, l, r) => {
            let side = |x: &Expr, strict: bool, out: &mut String| {
                let paren = match x {
                    Expr::Bin(o, ..) => o.prec() < op.prec() || (strict && o.prec() == op.prec()),
                    _ => false,
                };
                if paren {
                    out.push('(');
                }
                print_into(x, d, out);
                if paren {
                    out.push(')');
                }
            };
            side(l, false, out);
            out.push_str(op.symbol());
            side(r, true, out);
        }
        Expr::Call(f, x) => {
            out.push_str(&f.to_string());
            out.push('(');
            print_into(x, d, out);
            out.push(')');
        }
    }
}

/// Canonical text; reparses to the same tree.
pub fn print_expr(e: &Expr, d: &DomainHandle) -> String {
    let mut s = String::new();
    print_into(e, d, &mut s);
    s
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalError {
    pub expr: String,
    pub error: semistar_core::Error,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "in {}: {}", self.expr, self.error)
    }
}

impl std::error::Error for EvalError {}

pub fn eval(e: &Expr, d: &Arc<DomainHandle>) -> Result<IdealHandle, EvalError> {
    let here = |error| EvalError { expr: print_expr(e, d), error };
    match e {
        Expr::Ring => Ok(IdealHandle::ring(d)),
        Expr::Maximal => Ok(IdealHandle::maximal(d)),
        Expr::Field => Ok(IdealHandle::quotient_field(d)),
        Expr::Hull => apply(&SemistarOp::StarOverring(OverringTag::ValuationHull), &IdealHandle::ring(d)).map_err(here),
        Expr::Gens(gens) => {
            let one = d.field().one();
            let gens: Vec<Generator> = gens
                .iter()
                .map(|g| match g {
                    Gen::Power(n) => Generator::new(one.clone(), GroupElement::Int(*n)),
                    Gen::Term(g) => g.clone(),
                })
                .collect();
            IdealHandle::from_generators(d, &gens).map_err(here)
        }
        Expr::Bin(op, l, r) => {
            let (a, b) = (eval(l, d)?, eval(r, d)?);
            match op {
                BinOp::Colon => a.colon(&b),
                BinOp::Meet => a.intersect(&b),
                BinOp::Sum => a.sum(&b),
                BinOp::Product => a.mul(&b),
            }
            .map_err(here)
        }
        Expr::Call(f, x) => {
            let a = eval(x, d)?;
            match f.op() {
                Some(op) => apply(&op, &a),
                None => a.inverse(),
            }
            .map_err(here)
        }
    }
}

/// Parses and evaluates, reporting either failure as a string.
pub fn eval_text(text: &str, d: &Arc<DomainHandle>) -> Result<IdealHandle, String> {
    let e = parse_expr(text, d).map_err(|e| e.to_string())?;
    eval(&e, d).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::parse_domain;

    fn numsgr() -> Arc<DomainHandle> {
        parse_domain("family=numsgr generators=[3,4,5]").unwrap()
    }

    fn pullback() -> Arc<DomainHandle> {
        parse_domain("family=pullback extension=a^2-2 group=Q").unwrap()
    }

    #[test]
    fn precedence() {
        let d = numsgr();
        let e = parse_expr("<x^3> : <x^4> & D + M * M", &d).unwrap();
        let Expr::Bin(BinOp::Colon, _, r) = &e else { panic!("{e:?}") };
        let Expr::Bin(BinOp::Meet, _, r) = &**r else { panic!("{r:?}") };
        let Expr::Bin(BinOp::Sum, _, r) = &**r else { panic!("{r:?}") };
        assert!(matches!(&**r, Expr::Bin(BinOp::Product, ..)));
        assert_eq!(print_expr(&e, &d), "<x^3> : <x^4> & D + M*M");
        let e = parse_expr("(D : M) : (M : M)", &d).unwrap();
        assert_eq!(print_expr(&e, &d), "D : M : (M : M)");
    }

    #[test]
    fn generators_with_coefficients() {
        let d = pullback();
        let e = parse_expr("st[V](<t(1)> & <a*t(1)>)", &d).unwrap();
        assert_eq!(print_expr(&e, &d), "st[V](<1*t(1)> & <a*t(1)>)");
        let e = parse_expr("<(1+a)*t(1/2), -2*a^2*t(-3)>", &d).unwrap();
        assert_eq!(print_expr(&e, &d), "<(1+a)*t(1/2), -4*t(-3)>");
        assert_eq!(parse_expr(&print_expr(&e, &d), &d).unwrap(), e);
    }

    #[test]
    fn semantic_errors() {
        let d = numsgr();
        let err = parse_expr("v(V)", &d).unwrap_err();
        assert_eq!((err.line, err.col), (1, 3));
        assert!(parse_expr("<1*t(1)>", &d).is_err());
        assert!(parse_expr("<x^1/2>", &d).is_err());
        let p = parse_domain("family=pullback extension=a^2-2 group=Z").unwrap();
        assert!(parse_expr("<t(1/2)>", &p).is_err());
        assert!(parse_expr("<0*t(1)>", &p).is_err());
        let err = parse_expr("v(<x^3>", &d).unwrap_err();
        assert_eq!(err.expected, vec!["')'".to_string()]);
    }

    #[test]
    fn evaluation() {
        let d = numsgr();
        assert_eq!(eval_text("v(<x^3,x^4>)", &d).unwrap().to_expr(), "<x^3, x^4, x^5>");
        assert_eq!(eval_text("D", &d).unwrap().to_expr(), "<x^0>");
        let p = pullback();
        assert_eq!(eval_text("D", &p).unwrap().to_expr(), "<1*t(0)>");
        assert_eq!(eval_text("<t(1)> & <a*t(1)>", &p).unwrap().to_expr(), "M*<1*t(1)>");
        let err = eval_text("D : K", &p).unwrap_err();
        assert!(err.starts_with("in D : K"), "{err}");
    }
}
