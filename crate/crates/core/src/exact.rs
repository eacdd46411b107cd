//! Exact rational arithmetic for the parts of the pipeline that can stay
//! exact: depressing a rational cubic, rational (r, s) pairs, rational-root
//! detection, and quadratic surds left after deflating a rational root.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Upper bound on candidate evaluations (and trial divisions) spent in
/// [`rational_root_near`].
pub const CANDIDATE_BUDGET: u64 = 1_000_000;

/// A reduced rational `num/den` with `den > 0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(BigRational);

impl ExactRational {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        Ok(Self(BigRational::new(num.into(), den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Self(self.0.abs())
    }

    pub fn pow(&self, e: i32) -> Self {
        Self(self.0.pow(e))
    }

    pub fn recip(&self) -> Self {
        Self(self.0.recip())
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    /// Exact square root when both numerator and denominator are perfect squares.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = exact_isqrt(self.numer())?;
        let d = exact_isqrt(self.denom())?;
        Some(Self(BigRational::new(n, d)))
    }

    /// Exact real cube root when numerator and denominator are perfect cubes.
    pub fn cbrt_exact(&self) -> Option<Self> {
        let n = self.numer().cbrt();
        let d = self.denom().cbrt();
        if &(&n * &n * &n) == self.numer() && &(&d * &d * &d) == self.denom() {
            Some(Self(BigRational::new(n, d)))
        } else {
            None
        }
    }
}

fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for ExactRational {
    type Err = Error;

    /// Accepts `n`, `n/d` and decimals such as `-0.75` or `2.5e-3`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidInput(format!("not a rational number: {s:?}"));
        if let Some((m, e)) = s.split_once(['e', 'E']) {
            let e: i32 = e.parse().map_err(|_| bad())?;
            if e.abs() > 1000 {
                return Err(bad());
            }
            let ten = Self::from_integer(10);
            return Ok(m.parse::<Self>()? * ten.pow(e));
        }
        if let Some((n, d)) = s.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            return Self::new(n, d);
        }
        let (neg, body) = match s.as_bytes().first() {
            Some(b'-') => (true, &s[1..]),
            Some(b'+') => (false, &s[1..]),
            _ => (false, s),
        };
        let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let digits = format!("{int_part}{frac_part}");
        let mut num: BigInt = digits.parse().map_err(|_| bad())?;
        if neg {
            num = -num;
        }
        let den = BigInt::from(10u32).pow(frac_part.len() as u32);
        Self::new(num, den)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for ExactRational {
            type Output = ExactRational;
            fn $m(self, rhs: ExactRational) -> ExactRational {
                ExactRational(self.0.$m(rhs.0))
            }
        }
        impl<'a> $tr<&'a ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $m(self, rhs: &'a ExactRational) -> ExactRational {
                ExactRational(self.0.$m(&rhs.0))
            }
        }
        impl<'a> $tr<&'a ExactRational> for &'a ExactRational {
            type Output = ExactRational;
            fn $m(self, rhs: &'a ExactRational) -> ExactRational {
                ExactRational((&self.0).$m(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-self.0)
    }
}

impl Neg for &ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-&self.0)
    }
}

/// An exact root: a rational, or `base + coeff·√radicand` with a square-free
/// integer radicand (negative radicands denote the principal imaginary root).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactRoot {
    Rational(ExactRational),
    Surd {
        base: ExactRational,
        coeff: ExactRational,
        radicand: BigInt,
    },
}

impl ExactRoot {
    pub fn to_complex(&self) -> num_complex::Complex64 {
        use num_complex::Complex64;
        match self {
            ExactRoot::Rational(q) => Complex64::new(q.to_f64(), 0.0),
            ExactRoot::Surd { base, coeff, radicand } => {
                let m = radicand.to_f64().unwrap_or(f64::NAN);
                let c = coeff.to_f64();
                if m >= 0.0 {
                    Complex64::new(base.to_f64() + c * m.sqrt(), 0.0)
                } else {
                    Complex64::new(base.to_f64(), c * (-m).sqrt())
                }
            }
        }
    }
}

impl fmt::Display for ExactRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactRoot::Rational(q) => write!(f, "{q}"),
            ExactRoot::Surd { base, coeff, radicand } => {
                let sign = if coeff.is_negative() { '-' } else { '+' };
                let c = coeff.abs();
                let term = if c == ExactRational::one() {
                    format!("sqrt({radicand})")
                } else {
                    format!("{c}*sqrt({radicand})")
                };
                if base.is_zero() {
                    if coeff.is_negative() {
                        write!(f, "-{term}")
                    } else {
                        write!(f, "{term}")
                    }
                } else {
                    write!(f, "{base} {sign} {term}")
                }
            }
        }
    }
}

/// Outcome of the bounded rational-root search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootSearch {
    Found(ExactRational),
    NotFound,
    /// The candidate budget ran out before the search completed.
    Exhausted,
}

/// Clears denominators of `coeffs` (highest degree first) and removes the
/// common content, giving a primitive integer polynomial.
pub fn integerize(coeffs: &[ExactRational]) -> Vec<BigInt> {
    let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() || content.is_one() {
        ints
    } else {
        ints.into_iter().map(|c| c / &content).collect()
    }
}

/// Evaluates an integer polynomial (highest degree first) at `num/den`,
/// scaled by `den^degree` so the result is an integer.
fn eval_homogeneous(coeffs: &[BigInt], num: &BigInt, den: &BigInt) -> BigInt {
    let degree = coeffs.len() - 1;
    let mut acc = BigInt::zero();
    for (i, c) in coeffs.iter().enumerate() {
        let k = (degree - i) as u32;
        acc += c * num.pow(k) * den.pow(degree as u32 - k);
    }
    acc
}

pub fn is_rational_root(coeffs: &[ExactRational], x: &ExactRational) -> bool {
    let ints = integerize(coeffs);
    eval_homogeneous(&ints, x.numer(), x.denom()).is_zero()
}

/// Divisors of `n > 0` by trial division, or `None` once `budget` is spent.
fn divisors(n: &BigInt, budget: &mut u64) -> Option<Vec<BigInt>> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if *budget == 0 {
            return None;
        }
        *budget -= 1;
        if (&n % &d).is_zero() {
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

/// Rational-root-theorem search restricted to candidates within `tol` of a
/// known numeric root `target`.
///
/// Every rational root `n/e` of the primitive integer polynomial has `e`
/// dividing the leading coefficient and `n` dividing the constant term. For
/// each admissible `e` only the numerators nearest `target·e` can lie within
/// `tol`, so those are the only candidates tested.
pub fn rational_root_near(coeffs: &[ExactRational], target: f64, tol: f64) -> RootSearch {
    if !target.is_finite() || coeffs.is_empty() || coeffs[0].is_zero() {
        return RootSearch::NotFound;
    }
    let ints = integerize(coeffs);
    let lead = &ints[0];
    let constant = ints.last().expect("non-empty");
    let mut budget = CANDIDATE_BUDGET;

    if constant.is_zero() && target.abs() <= tol {
        return RootSearch::Found(ExactRational::zero());
    }
    let Some(dens) = divisors(lead, &mut budget) else {
        return RootSearch::Exhausted;
    };
    for e in dens {
        let e_f = e.to_f64().unwrap_or(f64::INFINITY);
        let guess = (target * e_f).round();
        if !guess.is_finite() {
            continue;
        }
        let Some(centre) = BigRational::from_float(guess).map(|r| r.to_integer()) else {
            continue;
        };
        for offset in [0i32, -1, 1] {
            if budget == 0 {
                return RootSearch::Exhausted;
            }
            budget -= 1;
            let n = &centre + offset;
            if n.is_zero() && !constant.is_zero() {
                continue;
            }
            if !n.is_zero() && !(constant % &n).is_zero() {
                continue;
            }
            let candidate = BigRational::new(n.clone(), e.clone());
            let value = candidate.to_f64().unwrap_or(f64::NAN);
            if (value - target).abs() > tol * target.abs().max(1.0) {
                continue;
            }
            if eval_homogeneous(&ints, &n, &e).is_zero() {
                return RootSearch::Found(ExactRational(candidate));
            }
        }
    }
    RootSearch::NotFound
}

/// Splits `n` into `k²·m` with `m` square-free as far as trial division up
/// to the budget allows. Returns `(k, m)`; the sign stays with `m`.
pub fn square_free_part(n: &BigInt) -> (BigInt, BigInt) {
    if n.is_zero() {
        return (BigInt::zero(), BigInt::zero());
    }
    let sign = n.sign();
    let mut rest = n.abs();
    let mut k = BigInt::one();
    let mut p = BigInt::from(2u32);
    let mut budget = CANDIDATE_BUDGET;
    while &p * &p <= rest && budget > 0 {
        budget -= 1;
        let sq = &p * &p;
        while (&rest % &sq).is_zero() {
            rest /= &sq;
            k *= &p;
        }
        p += 1;
    }
    if let Some(r) = exact_isqrt(&rest) {
        k *= r;
        rest = BigInt::one();
    }
    let m = if sign == Sign::Minus { -rest } else { rest };
    (k, m)
}

/// Exact roots of `x² + b·x + c`.
pub fn quadratic_roots(b: &ExactRational, c: &ExactRational) -> [ExactRoot; 2] {
    let four = ExactRational::from_integer(4);
    let two = ExactRational::from_integer(2);
    let disc = &(b * b) - &(&four * c);
    let base = &(-b) / &two;
    if let Some(root) = disc.sqrt_exact() {
        let half = &root / &two;
        return [
            ExactRoot::Rational(&base - &half),
            ExactRoot::Rational(&base + &half),
        ];
    }
    // √(n/d) = √(n·d)/d
    let nd = disc.numer() * disc.denom();
    let (k, m) = square_free_part(&nd);
    let coeff = ExactRational(BigRational::new(k, disc.denom() * BigInt::from(2u32)));
    [
        ExactRoot::Surd { base: base.clone(), coeff: -&coeff, radicand: m.clone() },
        ExactRoot::Surd { base, coeff, radicand: m },
    ]
}
