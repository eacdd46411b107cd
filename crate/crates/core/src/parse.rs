//! Parser for cubic expressions such as `x^3 - 48x - 64*sqrt(2) = 0`.
//!
//! ```text
//! equation := poly ( '=' '0' )?
//! poly     := sign? term ( sign term )*
//! term     := factor ( '*'? factor )*
//! factor   := number ( '/' number )? | 'sqrt(' integer ')' | 'x' ( '^' integer )?
//!           | '(' sign? number ( '/' number )? ')' | '/' number
//! ```
//!
//! Whitespace is ignored and only `.` is accepted as a decimal point.
//! Coefficients stay exact unless a non-square radicand appears.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::exact::{square_free_part, ExactRational};
use crate::reduction::GeneralCubic;

/// `rational · √radicand` with a square-free radicand (1 when absent).
#[derive(Debug, Clone, PartialEq)]
pub struct Coefficient {
    pub rational: ExactRational,
    pub radicand: BigInt,
}

impl Coefficient {
    fn one() -> Self {
        Self {
            rational: ExactRational::one(),
            radicand: BigInt::one(),
        }
    }

    pub fn is_rational(&self) -> bool {
        self.radicand.is_one()
    }

    pub fn value(&self) -> f64 {
        let m = self.radicand.to_f64().unwrap_or(f64::NAN);
        self.rational.to_f64() * m.sqrt()
    }

    fn multiply_sqrt(&mut self, n: BigInt) {
        let (k, m) = square_free_part(&(&self.radicand * n));
        self.rational = &self.rational * &ExactRational::from_integer(k);
        self.radicand = m;
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub coeff: Coefficient,
    pub power: u32,
    /// Byte offset of the term in the source text.
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExpressionAst {
    pub terms: Vec<Term>,
}

/// A numeric literal: its float value plus the exact rational when it has one.
#[derive(Debug, Clone, PartialEq)]
pub struct Scalar {
    pub value: f64,
    pub exact: Option<ExactRational>,
}

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Self {
            src,
            bytes: src.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, position: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            let at = self.pos;
            self.err(at, format!("expected '{}'", c as char))
        }
    }

    fn number(&mut self) -> Result<ExactRational> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && (self.bytes[self.pos].is_ascii_digit() || self.bytes[self.pos] == b'.') {
            self.pos += 1;
        }
        let mantissa_end = self.pos;
        if mantissa_end > start && matches!(self.bytes.get(self.pos), Some(b'e' | b'E')) {
            let mut end = self.pos + 1;
            if matches!(self.bytes.get(end), Some(b'+' | b'-')) {
                end += 1;
            }
            if self.bytes.get(end).is_some_and(u8::is_ascii_digit) {
                while self.bytes.get(end).is_some_and(u8::is_ascii_digit) {
                    end += 1;
                }
                self.pos = end;
            }
        }
        let text = &self.src[start..self.pos];
        let mantissa = &self.src[start..mantissa_end];
        if mantissa.is_empty() || mantissa == "." || mantissa.matches('.').count() > 1 {
            return self.err(start, "expected a number");
        }
        text.parse().or_else(|_| self.err(start, "malformed number"))
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err(start, "expected an integer");
        }
        Ok(self.src[start..self.pos].parse().expect("digits"))
    }

    fn divisor(&mut self) -> Result<ExactRational> {
        let at = self.pos;
        let d = self.number()?;
        if d.is_zero() {
            return self.err(at, "division by zero");
        }
        Ok(d)
    }

    fn term(&mut self, negative: bool) -> Result<Term> {
        let position = {
            self.skip_ws();
            self.pos
        };
        let mut coeff = Coefficient::one();
        let mut power = 0u32;
        let mut factors = 0;
        while let Some(c) = self.peek() {
            let at = self.pos;
            match c {
                b'0'..=b'9' | b'.' => {
                    let n = self.number()?;
                    coeff.rational = &coeff.rational * &n;
                }
                b'/' => {
                    if factors == 0 {
                        return self.err(at, "unexpected '/'");
                    }
                    self.pos += 1;
                    coeff.rational = &coeff.rational / &self.divisor()?;
                    continue;
                }
                b'*' => {
                    if factors == 0 {
                        return self.err(at, "unexpected '*'");
                    }
                    self.pos += 1;
                    if matches!(self.peek(), None | Some(b'+' | b'-' | b'=' | b'*' | b'/')) {
                        let at = self.pos;
                        return self.err(at, "expected a factor after '*'");
                    }
                    continue;
                }
                b'(' => {
                    self.pos += 1;
                    let neg = if self.eat(b'-') {
                        true
                    } else {
                        self.eat(b'+');
                        false
                    };
                    let mut n = self.number()?;
                    if self.eat(b'/') {
                        n = &n / &self.divisor()?;
                    }
                    self.expect(b')')?;
                    if neg {
                        n = -n;
                    }
                    coeff.rational = &coeff.rational * &n;
                }
                b's' => {
                    if !self.src[self.pos..].starts_with("sqrt") {
                        return self.err(at, "unknown identifier");
                    }
                    self.pos += 4;
                    self.expect(b'(')?;
                    let n = self.integer()?;
                    self.expect(b')')?;
                    coeff.multiply_sqrt(n);
                }
                b'x' | b'X' => {
                    self.pos += 1;
                    let mut k = 1u32;
                    if self.eat(b'^') {
                        let at = self.pos;
                        k = self
                            .integer()?
                            .to_u32()
                            .filter(|k| *k <= 64)
                            .map_or_else(|| self.err(at, "exponent too large"), Ok)?;
                    }
                    power += k;
                }
                b'+' | b'-' | b'=' => break,
                _ => {
                    let ch = self.src[at..].chars().next().unwrap_or('?');
                    return self.err(at, format!("unexpected character '{ch}'"));
                }
            }
            factors += 1;
        }
        if factors == 0 {
            return self.err(position, "expected a term");
        }
        if negative {
            coeff.rational = -coeff.rational;
        }
        Ok(Term { coeff, power, position })
    }

    fn polynomial(&mut self) -> Result<ExpressionAst> {
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                None | Some(b'=') if !first => break,
                _ if first => false,
                Some(_) => {
                    let at = self.pos;
                    return self.err(at, "expected '+' or '-'");
                }
                None => break,
            };
            terms.push(self.term(negative)?);
            first = false;
        }
        if self.eat(b'=') {
            self.skip_ws();
            let at = self.pos;
            let rhs = self.number().or_else(|_| self.err(at, "expected '0' after '='"))?;
            if !rhs.is_zero() {
                return self.err(at, "right-hand side must be 0");
            }
        }
        if let Some(c) = self.peek() {
            let at = self.pos;
            return self.err(at, format!("unexpected '{}'", c as char));
        }
        Ok(ExpressionAst { terms })
    }
}

pub fn parse_expression(text: &str) -> Result<ExpressionAst> {
    let mut p = Parser::new(text);
    if p.peek().is_none() {
        return p.err(0, "empty expression");
    }
    p.polynomial()
}

/// Collected coefficients of `x⁰..x³` (float, plus exact when available).
fn collect(ast: &ExpressionAst) -> Result<([f64; 4], Option<[ExactRational; 4]>)> {
    let mut floats = [0.0f64; 4];
    let mut exact: [ExactRational; 4] = std::array::from_fn(|_| ExactRational::zero());
    let mut all_exact = true;
    for t in &ast.terms {
        if t.power > 3 && !t.coeff.rational.is_zero() {
            return Err(Error::Parse {
                position: t.position,
                message: format!("degree {} term; only cubics are supported", t.power),
            });
        }
        if t.power > 3 {
            continue;
        }
        let k = t.power as usize;
        floats[k] += t.coeff.value();
        if t.coeff.is_rational() {
            exact[k] = &exact[k] + &t.coeff.rational;
        } else {
            all_exact = false;
        }
    }
    Ok((floats, all_exact.then_some(exact)))
}

pub fn parse_cubic(text: &str) -> Result<GeneralCubic> {
    let ast = parse_expression(text)?;
    let (floats, exact) = collect(&ast)?;
    let lead_zero = match &exact {
        Some(e) => e[3].is_zero(),
        None => floats[3] == 0.0,
    };
    if lead_zero {
        return Err(Error::Parse {
            position: 0,
            message: "no x^3 term; the expression is not a cubic".into(),
        });
    }
    match exact {
        Some([c0, c1, c2, c3]) => GeneralCubic::from_rationals(c3, c2, c1, c0),
        None => GeneralCubic::new(floats[3], floats[2], floats[1], floats[0]),
    }
}

/// A constant such as `-6`, `9/2`, `0.125` or `64*sqrt(2)`.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let ast = parse_expression(text)?;
    if let Some(t) = ast.terms.iter().find(|t| t.power != 0) {
        return Err(Error::Parse {
            position: t.position,
            message: "expected a constant".into(),
        });
    }
    let (floats, exact) = collect(&ast)?;
    Ok(Scalar {
        value: floats[0],
        exact: exact.map(|[c0, ..]| c0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> ExactRational {
        s.parse().unwrap()
    }

    #[test]
    fn exponent_literals_stay_exact() {
        let c = parse_cubic("x^3 - 1.5e-3x + 2E2").unwrap();
        assert_eq!(c.exact, Some([q("0"), q("-3/2000"), q("200")]));
        assert_eq!(parse_scalar("-1e300").unwrap().value, -1e300);
        // a bare `e` after a number is not an exponent
        assert!(parse_cubic("x^3 + 2e").is_err());
    }

    #[test]
    fn worked_examples() {
        let c = parse_cubic("x^3-12x+16=0").unwrap();
        assert_eq!((c.a, c.b, c.c), (0.0, -12.0, 16.0));
        assert_eq!(c.exact, Some([q("0"), q("-12"), q("16")]));

        let c = parse_cubic("x^3-48x-64*sqrt(2)").unwrap();
        assert_eq!((c.a, c.b), (0.0, -48.0));
        assert!((c.c + 90.50966799187809).abs() < 1e-12);
        assert!(c.exact.is_none());

        let c = parse_cubic("x^3").unwrap();
        assert_eq!((c.a, c.b, c.c), (0.0, 0.0, 0.0));
    }

    #[test]
    fn coefficient_forms() {
        let c = parse_cubic("x^3 - (3/4)x + sqrt(3)/8").unwrap();
        assert_eq!(c.b, -0.75);
        assert!((c.c - 3f64.sqrt() / 8.0).abs() < 1e-16);

        let c = parse_cubic("x^3-0.75x+0.125").unwrap();
        assert_eq!(c.exact, Some([q("0"), q("-3/4"), q("1/8")]));

        let c = parse_cubic("2x^3 - 12 x^2 + 22*x - 12 = 0").unwrap();
        assert_eq!(c.exact, Some([q("-6"), q("11"), q("-6")]));

        let c = parse_cubic("-x^3 + 3/4 x").unwrap();
        assert_eq!(c.exact, Some([q("0"), q("-3/4"), q("0")]));

        let c = parse_cubic("x^3 + 2*sqrt(4)x - 1/3").unwrap();
        assert_eq!(c.exact, Some([q("0"), q("4"), q("-1/3")]));

        let c = parse_cubic("x*x^2 + x^2 + x^2 - x").unwrap();
        assert_eq!(c.exact, Some([q("2"), q("-1"), q("0")]));
    }

    #[test]
    fn errors_carry_positions() {
        match parse_cubic("x^3 + 2y") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 7),
            other => panic!("{other:?}"),
        }
        match parse_cubic("x^3 + ") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 6),
            other => panic!("{other:?}"),
        }
        match parse_cubic("x^3 = 1") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 6),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_cubic("x^2 + 1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_cubic("x^4 + x^3"), Err(Error::Parse { position: 0, .. })));
        assert!(matches!(parse_cubic("x^3 - x^3 + x"), Err(Error::Parse { .. })));
        assert!(matches!(parse_cubic(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_cubic("x^3 + 1/0"), Err(Error::Parse { .. })));
        assert!(matches!(parse_cubic("x^3 + 1,5x"), Err(Error::Parse { .. })));
        assert!(matches!(parse_cubic("x^3 + 1.2.3"), Err(Error::Parse { .. })));
        assert!(matches!(parse_cubic("x^3 +* 2"), Err(Error::Parse { .. })));
    }

    #[test]
    fn scalars() {
        assert_eq!(parse_scalar("9/2").unwrap().exact, Some(q("9/2")));
        assert_eq!(parse_scalar("-6").unwrap().value, -6.0);
        let s = parse_scalar("-64*sqrt(2)").unwrap();
        assert!(s.exact.is_none());
        assert!((s.value + 90.50966799187809).abs() < 1e-12);
        assert!(parse_scalar("2x").is_err());
    }
}
