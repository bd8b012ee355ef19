//! Textual element and matrix expressions.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := atom ('^' uint)?
//! atom     := rational | symbol | '(' expr ')' | '-' atom
//! rational := int ('/' uint)?
//! symbol   := letter (letter | digit)*
//! ```
//!
//! Juxtaposition is not multiplication: `v1v2` is a single symbol.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::matpoly::RingMatrix;
use crate::ringcore::{Rational, Ring};

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementExpr {
    Rational(Rational),
    Symbol(String),
    Sum(Box<ElementExpr>, Box<ElementExpr>),
    Difference(Box<ElementExpr>, Box<ElementExpr>),
    Product(Box<ElementExpr>, Box<ElementExpr>),
    Power(Box<ElementExpr>, u32),
    Negation(Box<ElementExpr>),
    Parenthesized(Box<ElementExpr>),
}

impl ElementExpr {
    pub fn eval<R: Ring>(&self, ring: &R) -> Result<R::Elem> {
        Ok(match self {
            ElementExpr::Rational(q) => ring.from_rational(q),
            ElementExpr::Symbol(s) => ring.generator(s).ok_or_else(|| Error::UnknownGenerator(s.clone()))?,
            ElementExpr::Sum(a, b) => ring.add(&a.eval(ring)?, &b.eval(ring)?),
            ElementExpr::Difference(a, b) => ring.sub(&a.eval(ring)?, &b.eval(ring)?),
            ElementExpr::Product(a, b) => ring.mul(&a.eval(ring)?, &b.eval(ring)?),
            ElementExpr::Power(a, e) => ring.pow(&a.eval(ring)?, *e),
            ElementExpr::Negation(a) => ring.neg(&a.eval(ring)?),
            ElementExpr::Parenthesized(a) => a.eval(ring)?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semicolon,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        let mut advance = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next().expect("peeked");
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };
        let tok = if c.is_whitespace() {
            advance(&mut chars);
            continue;
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while chars.peek().is_some_and(|c| c.is_ascii_digit()) {
                s.push(advance(&mut chars));
            }
            Tok::Int(s.parse().expect("digits"))
        } else if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while chars.peek().is_some_and(|c| c.is_alphanumeric() || *c == '_') {
                s.push(advance(&mut chars));
            }
            Tok::Ident(s)
        } else {
            advance(&mut chars);
            match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                ',' => Tok::Comma,
                ';' => Tok::Semicolon,
                other => {
                    return Err(Error::Syntax {
                        line: l,
                        column: col,
                        message: format!("unexpected character `{other}`"),
                    })
                }
            }
        };
        out.push(Token {
            tok,
            line: l,
            column: col,
        });
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn new(text: &str) -> Result<Self> {
        let tokens = lex(text)?;
        let line = text.lines().count().max(1);
        let column = text.lines().last().map_or(0, |l| l.chars().count()) + 1;
        Ok(Parser {
            tokens,
            pos: 0,
            end: (line, column),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        let (line, column) = self
            .tokens
            .get(self.pos)
            .map_or(self.end, |t| (t.line, t.column));
        Error::Syntax {
            line,
            column,
            message: message.into(),
        }
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &Tok, what: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.error(format!("expected {what}")))
        }
    }

    fn expr(&mut self) -> Result<ElementExpr> {
        let mut acc = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                acc = ElementExpr::Sum(Box::new(acc), Box::new(self.term()?));
            } else if self.eat(&Tok::Minus) {
                acc = ElementExpr::Difference(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<ElementExpr> {
        let mut acc = self.factor()?;
        while self.eat(&Tok::Star) {
            acc = ElementExpr::Product(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<ElementExpr> {
        let atom = self.atom()?;
        if !self.eat(&Tok::Caret) {
            return Ok(atom);
        }
        match self.peek().cloned() {
            Some(Tok::Int(e)) => {
                let e = u32::try_from(&e)
                    .ok()
                    .filter(|e| *e <= MAX_EXPONENT)
                    .ok_or_else(|| Error::ExponentOverflow(format!("{e} exceeds {MAX_EXPONENT}")))?;
                self.pos += 1;
                Ok(ElementExpr::Power(Box::new(atom), e))
            }
            _ => Err(self.error("expected a nonnegative integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<ElementExpr> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                if self.eat(&Tok::Slash) {
                    match self.peek().cloned() {
                        Some(Tok::Int(d)) => {
                            if d == BigInt::from(0) {
                                return Err(self.error("zero denominator"));
                            }
                            self.pos += 1;
                            let q = Rational::from_bigint(n) * Rational::from_bigint(d).recip()?;
                            Ok(ElementExpr::Rational(q))
                        }
                        _ => Err(self.error("expected an unsigned integer denominator")),
                    }
                } else {
                    Ok(ElementExpr::Rational(Rational::from_bigint(n)))
                }
            }
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(ElementExpr::Symbol(s))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(ElementExpr::Parenthesized(Box::new(e)))
            }
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(ElementExpr::Negation(Box::new(self.atom()?)))
            }
            _ => Err(self.error("expected a number, a generator, `(` or `-`")),
        }
    }

    fn finish(&self) -> Result<()> {
        if self.pos < self.tokens.len() {
            Err(self.error("unexpected trailing input"))
        } else {
            Ok(())
        }
    }
}

/// Parses text into an expression tree without evaluating it.
pub fn parse_expr(text: &str) -> Result<ElementExpr> {
    let mut p = Parser::new(text)?;
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

pub fn parse_element<R: Ring>(text: &str, ring: &R) -> Result<R::Elem> {
    parse_expr(text)?.eval(ring)
}

/// Parses `[[a, b], [c, d]]` (rows may also be separated by `;`). With
/// `n = Some(size)`, the matrix must have exactly that size.
pub fn parse_matrix<R: Ring>(text: &str, ring: &R, n: Option<usize>) -> Result<RingMatrix<R::Elem>> {
    let mut p = Parser::new(text)?;
    p.expect(&Tok::LBracket, "`[`")?;
    let mut rows: Vec<Vec<ElementExpr>> = Vec::new();
    loop {
        p.expect(&Tok::LBracket, "`[` opening a row")?;
        let mut row = vec![p.expr()?];
        while p.eat(&Tok::Comma) {
            row.push(p.expr()?);
        }
        p.expect(&Tok::RBracket, "`]` closing a row")?;
        rows.push(row);
        if !(p.eat(&Tok::Comma) || p.eat(&Tok::Semicolon)) {
            break;
        }
    }
    p.expect(&Tok::RBracket, "`]`")?;
    p.finish()?;
    let size = n.unwrap_or(rows.len());
    if rows.len() != size {
        return Err(Error::SizeMismatch(rows.len(), size));
    }
    let mut out = Vec::with_capacity(size);
    for (i, row) in rows.into_iter().enumerate() {
        if row.len() != size {
            return Err(Error::RaggedMatrix {
                row: i,
                found: row.len(),
                expected: size,
            });
        }
        let mut cells = Vec::with_capacity(size);
        for (j, e) in row.into_iter().enumerate() {
            cells.push(e.eval(ring).map_err(|source| Error::Cell {
                row: i,
                col: j,
                source: Box::new(source),
            })?);
        }
        out.push(cells);
    }
    RingMatrix::from_rows(out)
}

/// Parses `[[1, 2], [3, 4]]` into rational rows.
pub fn parse_rational_matrix(text: &str, n: Option<usize>) -> Result<Vec<Vec<Rational>>> {
    Ok(parse_matrix(text, &crate::ringcore::RationalField, n)?.rows())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::findim::AlgebraElement;
    use crate::grassmann::{GrassmannAlgebra, GrassmannElement};
    use crate::relfree;
    use crate::ringcore::{RationalField, SampleSpec, Sampler};
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn grassmann_expressions() {
        let e = GrassmannAlgebra::new(2).unwrap();
        let x = parse_element("v1*v2 - v2*v1", &e).unwrap();
        assert_eq!(x, GrassmannElement::monomial(2, 0b11, q(2, 1)));
        assert_eq!(
            parse_element("v3", &e).unwrap_err(),
            Error::UnknownGenerator("v3".into())
        );
        assert_eq!(
            parse_element("v1v2", &e).unwrap_err(),
            Error::UnknownGenerator("v1v2".into())
        );
    }

    #[test]
    fn relfree_expression() {
        let rf = relfree::build(2, 3, 5).unwrap();
        let alg = rf.algebra();
        let x = parse_element("(1/2)*x^2 + y", alg).unwrap();
        let labels = alg.labels();
        let mut expected = vec![Rational::zero(); alg.dim()];
        expected[labels.iter().position(|l| l == "x*x").unwrap()] = q(1, 2);
        expected[labels.iter().position(|l| l == "y").unwrap()] = q(1, 1);
        assert_eq!(x, AlgebraElement::new(expected));
    }

    #[test]
    fn precedence_and_negation() {
        let r = RationalField;
        assert_eq!(parse_element("1 + 2*3^2", &r).unwrap(), q(19, 1));
        assert_eq!(parse_element("-2^2", &r).unwrap(), q(4, 1));
        assert_eq!(parse_element("-(2^2)", &r).unwrap(), q(-4, 1));
        assert_eq!(parse_element("1 - 2 - 3", &r).unwrap(), q(-4, 1));
        assert_eq!(parse_element("3/4 * 2", &r).unwrap(), q(3, 2));
        assert_eq!(parse_element("2^0", &r).unwrap(), q(1, 1));
    }

    #[test]
    fn syntax_errors_have_positions() {
        let r = RationalField;
        match parse_element("1 +\n  * 2", &r).unwrap_err() {
            Error::Syntax { line, column, .. } => assert_eq!((line, column), (2, 3)),
            e => panic!("{e:?}"),
        }
        assert!(matches!(parse_element("1 +", &r), Err(Error::Syntax { .. })));
        assert!(matches!(parse_element("(1", &r), Err(Error::Syntax { .. })));
        assert!(matches!(parse_element("1 # 2", &r), Err(Error::Syntax { .. })));
        assert!(matches!(parse_element("1/0", &r), Err(Error::Syntax { .. })));
        assert!(matches!(parse_element("2^99999999999", &r), Err(Error::ExponentOverflow(_))));
        assert!(matches!(parse_element("2^-1", &r), Err(Error::Syntax { .. })));
    }

    #[test]
    fn matrices() {
        let e = GrassmannAlgebra::new(4).unwrap();
        let a = parse_matrix("[[v1,v2],[v3,v4]]", &e, Some(2)).unwrap();
        assert_eq!(a.get(1, 0), &e.v(3));
        let p = parse_matrix("[[0,1];[1,0]]", &e, Some(2)).unwrap();
        assert_eq!(p.get(0, 1), &e.one());
        assert!(matches!(
            parse_matrix("[[v1],[v2]]", &e, Some(2)),
            Err(Error::RaggedMatrix { row: 0, found: 1, expected: 2 })
        ));
        match parse_matrix("[[v1,v9],[0,0]]", &e, None).unwrap_err() {
            Error::Cell { row, col, source } => {
                assert_eq!((row, col), (0, 1));
                assert_eq!(*source, Error::UnknownGenerator("v9".into()));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            parse_rational_matrix("[[1,2],[3,4]]", None).unwrap()[1][0],
            q(3, 1)
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn render_parse_round_trip_grassmann(seed in any::<u64>()) {
            let e = GrassmannAlgebra::new(4).unwrap();
            let x = Sampler::new(SampleSpec::new(seed)).element(&e);
            prop_assert_eq!(parse_element(&e.render(&x), &e).unwrap(), x);
        }

        #[test]
        fn render_parse_round_trip_relfree(seed in any::<u64>()) {
            let rf = relfree::build(2, 2, 3).unwrap();
            let alg = rf.algebra();
            let x = Sampler::new(SampleSpec::new(seed)).element(alg);
            prop_assert_eq!(parse_element(&alg.render(&x), alg).unwrap(), x);
        }

        #[test]
        fn render_parse_round_trip_rational(n in -1000i64..1000, d in 1i64..50) {
            let x = q(n, d);
            prop_assert_eq!(parse_element(&RationalField.render(&x), &RationalField).unwrap(), x);
        }
    }
}
