//! Exact field elements: arbitrary-precision rationals, optionally extended
//! by a single square root `sqrt(D)` with `D` a square-free integer > 1.
//!
//! Values are kept in a canonical form: a quadratic element with vanishing
//! irrational part is stored as a plain rational, and rationals are always
//! reduced with a positive denominator. Structural equality therefore
//! coincides with field equality.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("invalid scalar syntax: {0}")]
    Syntax(String),
    #[error("zero denominator in {0}")]
    ZeroDenominator(String),
    #[error("radicand {0} must be a square-free integer greater than 1")]
    BadRadicand(u64),
    #[error("scalar {0} does not lie in the {1} field context")]
    ContextMismatch(String, String),
}

/// The coefficient field of a representation: the rationals, or the
/// quadratic extension obtained by adjoining `sqrt(d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldContext {
    Rational,
    Quadratic(u64),
}

impl FieldContext {
    /// A quadratic context; `d` must be square-free and greater than 1.
    pub fn quadratic(d: u64) -> Result<Self, ScalarError> {
        if d <= 1 || !is_square_free(d) {
            return Err(ScalarError::BadRadicand(d));
        }
        Ok(FieldContext::Quadratic(d))
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (_, Scalar::Rational(_)) => true,
            (FieldContext::Quadratic(d), Scalar::Quad { d: sd, .. }) => d == sd,
            (FieldContext::Rational, Scalar::Quad { .. }) => false,
        }
    }

    /// Canonical text form of a scalar belonging to this context. In a
    /// quadratic context both parts are always written, even when the
    /// irrational part is zero, so the syntax never depends on the value.
    pub fn render(&self, s: &Scalar) -> String {
        match (self, s) {
            (FieldContext::Rational, Scalar::Rational(r)) => format_rational(r),
            (FieldContext::Quadratic(d), Scalar::Rational(r)) => {
                format!("{}+0*sqrt({})", format_rational(r), d)
            }
            (FieldContext::Quadratic(d), Scalar::Quad { a, b, d: sd }) if d == sd => {
                format_quad(a, b, *sd)
            }
            _ => panic!("scalar {s} rendered outside its field context {self:?}"),
        }
    }
}

impl fmt::Display for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldContext::Rational => write!(f, "rational"),
            FieldContext::Quadratic(d) => write!(f, "quadratic {d}"),
        }
    }
}

fn is_square_free(d: u64) -> bool {
    let mut n = d;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// An exact field element.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    /// `a + b*sqrt(d)` with `b != 0`.
    Quad { a: BigRational, b: BigRational, d: u64 },
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Scalar::Rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Scalar::Rational(r)
    }

    /// `a + b*sqrt(d)`, normalized: a vanishing irrational part collapses to
    /// the rational variant.
    pub fn quad(a: BigRational, b: BigRational, d: u64) -> Self {
        if b.is_zero() {
            Scalar::Rational(a)
        } else {
            Scalar::Quad { a, b, d }
        }
    }

    pub fn sqrt(d: u64) -> Self {
        Scalar::Quad { a: BigRational::zero(), b: BigRational::one(), d }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_one())
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Scalar::Rational(_))
    }

    /// The value as a rational, if it is one.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Quad { .. } => None,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn invert(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(r) => {
                if r.is_zero() {
                    None
                } else {
                    Some(Scalar::Rational(r.recip()))
                }
            }
            Scalar::Quad { a, b, d } => {
                // (a + b*sqrt(d))^-1 = (a - b*sqrt(d)) / (a^2 - d*b^2).
                // The norm only vanishes at zero because d is not a square.
                let norm = a * a - b * b * BigRational::from_integer(BigInt::from(*d));
                if norm.is_zero() {
                    return None;
                }
                let ninv = norm.recip();
                Some(Scalar::quad(a * &ninv, -(b * &ninv), *d))
            }
        }
    }

    /// Parse, additionally reporting which radicand the *syntax* mentioned
    /// (even if the value collapsed to a rational). Used by context-checked
    /// file parsing.
    pub fn parse_with_radicand(input: &str) -> Result<(Scalar, Option<u64>), ScalarError> {
        Parser::new(input).parse()
    }

    pub fn parse(input: &str) -> Result<Scalar, ScalarError> {
        Ok(Self::parse_with_radicand(input)?.0)
    }

    /// Parse and enforce that both the syntax and the value belong to `ctx`.
    pub fn parse_in_context(input: &str, ctx: &FieldContext) -> Result<Scalar, ScalarError> {
        let (value, radicand) = Self::parse_with_radicand(input)?;
        match (ctx, radicand) {
            (FieldContext::Rational, Some(_)) => Err(ScalarError::ContextMismatch(
                input.trim().to_string(),
                ctx.to_string(),
            )),
            (FieldContext::Quadratic(d), Some(sd)) if *d != sd => Err(
                ScalarError::ContextMismatch(input.trim().to_string(), ctx.to_string()),
            ),
            _ => Ok(value),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{}", format_rational(r)),
            Scalar::Quad { a, b, d } => write!(f, "{}", format_quad(a, b, *d)),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn format_quad(a: &BigRational, b: &BigRational, d: u64) -> String {
    let (sign, mag) = if b.is_negative() { ("-", -b) } else { ("+", b.clone()) };
    format!("{}{}{}*sqrt({})", format_rational(a), sign, format_rational(&mag), d)
}

/// Lift both operands into a common quadratic presentation. Panics when the
/// operands live in extensions with different radicands; representations
/// never mix radicands, so this is a programming error.
fn promote(x: &Scalar, y: &Scalar) -> (BigRational, BigRational, BigRational, BigRational, u64) {
    match (x, y) {
        (Scalar::Rational(a1), Scalar::Quad { a, b, d }) => {
            (a1.clone(), BigRational::zero(), a.clone(), b.clone(), *d)
        }
        (Scalar::Quad { a, b, d }, Scalar::Rational(a2)) => {
            (a.clone(), b.clone(), a2.clone(), BigRational::zero(), *d)
        }
        (Scalar::Quad { a: a1, b: b1, d: d1 }, Scalar::Quad { a: a2, b: b2, d: d2 }) => {
            assert_eq!(d1, d2, "mixed quadratic field contexts: sqrt({d1}) vs sqrt({d2})");
            (a1.clone(), b1.clone(), a2.clone(), b2.clone(), *d1)
        }
        (Scalar::Rational(_), Scalar::Rational(_)) => unreachable!("handled by callers"),
    }
}

fn add_impl(x: &Scalar, y: &Scalar) -> Scalar {
    if let (Scalar::Rational(a), Scalar::Rational(b)) = (x, y) {
        return Scalar::Rational(a + b);
    }
    let (a1, b1, a2, b2, d) = promote(x, y);
    Scalar::quad(a1 + a2, b1 + b2, d)
}

fn sub_impl(x: &Scalar, y: &Scalar) -> Scalar {
    if let (Scalar::Rational(a), Scalar::Rational(b)) = (x, y) {
        return Scalar::Rational(a - b);
    }
    let (a1, b1, a2, b2, d) = promote(x, y);
    Scalar::quad(a1 - a2, b1 - b2, d)
}

fn mul_impl(x: &Scalar, y: &Scalar) -> Scalar {
    if let (Scalar::Rational(a), Scalar::Rational(b)) = (x, y) {
        return Scalar::Rational(a * b);
    }
    let (a1, b1, a2, b2, d) = promote(x, y);
    let rad = BigRational::from_integer(BigInt::from(d));
    Scalar::quad(&a1 * &a2 + &b1 * &b2 * rad, &a1 * &b2 + &a2 * &b1, d)
}

fn div_impl(x: &Scalar, y: &Scalar) -> Scalar {
    let inv = y.invert().expect("scalar division by zero");
    mul_impl(x, &inv)
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $impl_fn:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $impl_fn(self, rhs)
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $impl_fn(&self, &rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $impl_fn(&self, rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $impl_fn(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_impl);
forward_binop!(Sub, sub, sub_impl);
forward_binop!(Mul, mul, mul_impl);
forward_binop!(Div, div, div_impl);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Quad { a, b, d } => Scalar::Quad { a: -a, b: -b, d: *d },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Recursive-descent parser for the scalar text syntax:
///
/// ```text
/// expr     := term (('+' | '-') term)*
/// term     := rational ('*' root)? | root
/// root     := 'sqrt' '(' digits ')'
/// rational := '-'? digits ('/' '-'? digits)?
/// ```
///
/// Whitespace is allowed between any two tokens.
struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    input: &'a str,
    radicand: Option<u64>,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Self {
        Parser { chars: input.chars().collect(), pos: 0, input, radicand: None }
    }

    fn error(&self, msg: &str) -> ScalarError {
        ScalarError::Syntax(format!("{msg} in \"{}\"", self.input.trim()))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ScalarError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn digits(&mut self) -> Result<BigInt, ScalarError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        BigInt::from_str(&text).map_err(|_| self.error("bad integer"))
    }

    fn integer(&mut self) -> Result<BigInt, ScalarError> {
        let neg = self.eat('-');
        let mag = self.digits()?;
        Ok(if neg { -mag } else { mag })
    }

    fn rational(&mut self) -> Result<BigRational, ScalarError> {
        let numer = self.integer()?;
        if self.eat('/') {
            let denom = self.integer()?;
            if denom.is_zero() {
                return Err(ScalarError::ZeroDenominator(self.input.trim().to_string()));
            }
            Ok(BigRational::new(numer, denom))
        } else {
            Ok(BigRational::from_integer(numer))
        }
    }

    fn at_sqrt(&mut self) -> bool {
        self.skip_ws();
        self.chars[self.pos..].starts_with(&['s', 'q', 'r', 't'])
    }

    fn root(&mut self) -> Result<u64, ScalarError> {
        self.pos += 4; // "sqrt"
        self.expect('(')?;
        let rad = self.digits()?;
        self.expect(')')?;
        let d: u64 = rad.to_string().parse().map_err(|_| self.error("radicand too large"))?;
        if d <= 1 || !is_square_free(d) {
            return Err(ScalarError::BadRadicand(d));
        }
        match self.radicand {
            Some(existing) if existing != d => {
                Err(self.error("mixed radicands in one scalar"))
            }
            _ => {
                self.radicand = Some(d);
                Ok(d)
            }
        }
    }

    fn term(&mut self, negated: bool) -> Result<Scalar, ScalarError> {
        let value = if self.at_sqrt() {
            let d = self.root()?;
            Scalar::sqrt(d)
        } else {
            let coeff = self.rational()?;
            if self.eat('*') {
                if !self.at_sqrt() {
                    return Err(self.error("expected sqrt(...) after '*'"));
                }
                let d = self.root()?;
                Scalar::quad(BigRational::zero(), coeff, d)
            } else {
                Scalar::Rational(coeff)
            }
        };
        Ok(if negated { -value } else { value })
    }

    fn parse(mut self) -> Result<(Scalar, Option<u64>), ScalarError> {
        let negated = self.eat('-');
        let mut acc = self.term(negated)?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    let t = self.term(false)?;
                    acc = acc + t;
                }
                Some('-') => {
                    self.pos += 1;
                    let t = self.term(true)?;
                    acc = acc + t;
                }
                Some(c) => return Err(self.error(&format!("unexpected '{c}'"))),
                None => break,
            }
        }
        Ok((acc, self.radicand))
    }
}
