//! General cubic → depressed cubic, and the inverse shift on roots.

use crate::error::{Error, Result};
use crate::exact::{ExactRational, ExactRoot};
use crate::roots::RootTriple;

/// Monic cubic `x³ + a·x² + b·x + c`.
///
/// Non-monic input is divided through by the leading coefficient on
/// construction. When built from rationals the exact coefficients are kept
/// alongside the floating-point ones.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralCubic {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub exact: Option<[ExactRational; 3]>,
}

impl GeneralCubic {
    pub fn new(lead: f64, a: f64, b: f64, c: f64) -> Result<Self> {
        if ![lead, a, b, c].iter().all(|v| v.is_finite()) {
            return Err(Error::InvalidInput("coefficients must be finite".into()));
        }
        if lead == 0.0 {
            return Err(Error::InvalidInput("leading coefficient is zero".into()));
        }
        Ok(Self {
            a: a / lead,
            b: b / lead,
            c: c / lead,
            exact: None,
        })
    }

    pub fn monic(a: f64, b: f64, c: f64) -> Result<Self> {
        Self::new(1.0, a, b, c)
    }

    pub fn from_rationals(
        lead: ExactRational,
        a: ExactRational,
        b: ExactRational,
        c: ExactRational,
    ) -> Result<Self> {
        if lead.is_zero() {
            return Err(Error::InvalidInput("leading coefficient is zero".into()));
        }
        let a = &a / &lead;
        let b = &b / &lead;
        let c = &c / &lead;
        let floats = [a.to_f64(), b.to_f64(), c.to_f64()];
        if !floats.iter().all(|v| v.is_finite()) {
            return Err(Error::InvalidInput("coefficients out of floating-point range".into()));
        }
        Ok(Self {
            a: floats[0],
            b: floats[1],
            c: floats[2],
            exact: Some([a, b, c]),
        })
    }

    pub fn eval(&self, x: num_complex::Complex64) -> num_complex::Complex64 {
        ((x + self.a) * x + self.b) * x + self.c
    }

    pub fn derivative(&self, x: num_complex::Complex64) -> num_complex::Complex64 {
        (x * 3.0 + 2.0 * self.a) * x + self.b
    }

    /// `max(1, |a|, |b|, |c|)²`, the scale used for residual bounds on
    /// lifted roots.
    pub fn residual_scale(&self) -> f64 {
        let m = 1f64.max(self.a.abs()).max(self.b.abs()).max(self.c.abs());
        m * m
    }
}

/// `x³ + p·x + q`.
#[derive(Debug, Clone, PartialEq)]
pub struct DepressedCubic {
    pub p: f64,
    pub q: f64,
    pub exact: Option<(ExactRational, ExactRational)>,
}

impl DepressedCubic {
    pub fn new(p: f64, q: f64) -> Result<Self> {
        if !p.is_finite() || !q.is_finite() {
            return Err(Error::InvalidInput("p and q must be finite".into()));
        }
        Ok(Self { p, q, exact: None })
    }

    pub fn from_rationals(p: ExactRational, q: ExactRational) -> Result<Self> {
        let (pf, qf) = (p.to_f64(), q.to_f64());
        if !pf.is_finite() || !qf.is_finite() {
            return Err(Error::InvalidInput("p and q out of floating-point range".into()));
        }
        Ok(Self {
            p: pf,
            q: qf,
            exact: Some((p, q)),
        })
    }

    pub fn eval(&self, x: num_complex::Complex64) -> num_complex::Complex64 {
        (x * x + self.p) * x + self.q
    }

    pub fn derivative(&self, x: num_complex::Complex64) -> num_complex::Complex64 {
        x * x * 3.0 + self.p
    }

    /// `max(1, |p|, |q|)^(3/2)`.
    pub fn residual_scale(&self) -> f64 {
        1f64.max(self.p.abs()).max(self.q.abs()).powf(1.5)
    }
}

/// Translation between the general and depressed variables:
/// `original_root = depressed_root − delta`.
#[derive(Debug, Clone, PartialEq)]
pub struct Shift {
    pub delta: f64,
    pub exact: Option<ExactRational>,
}

pub fn depress(c: &GeneralCubic) -> Result<(DepressedCubic, Shift)> {
    let (a, b, cc) = (c.a, c.b, c.c);
    if ![a, b, cc].iter().all(|v| v.is_finite()) {
        return Err(Error::InvalidInput("coefficients must be finite".into()));
    }
    let p = -a * a / 3.0 + b;
    let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + cc;
    let delta = a / 3.0;
    let mut depressed = DepressedCubic::new(p, q)?;
    let mut shift = Shift { delta, exact: None };

    if let Some([ea, eb, ec]) = &c.exact {
        let three = ExactRational::from_integer(3);
        let two = ExactRational::from_integer(2);
        let twenty_seven = ExactRational::from_integer(27);
        let a2 = ea * ea;
        let a3 = &a2 * ea;
        let ep = &(-&(&a2 / &three)) + eb;
        let eq = &(&(&(&two * &a3) / &twenty_seven) - &(&(ea * eb) / &three)) + ec;
        let ed = ea / &three;
        // exact values are authoritative for the float copies as well
        depressed = DepressedCubic::from_rationals(ep, eq)?;
        shift = Shift {
            delta: ed.to_f64(),
            exact: Some(ed),
        };
    }
    Ok((depressed, shift))
}

/// Moves roots of the depressed cubic back to the original variable.
pub fn lift_roots(mut roots: RootTriple, s: &Shift) -> RootTriple {
    if s.delta == 0.0 && s.exact.as_ref().is_none_or(|e| e.is_zero()) {
        return roots;
    }
    for z in roots.roots.iter_mut() {
        z.re -= s.delta;
    }
    if let Some(t) = roots.trig.as_mut() {
        t.translation -= s.delta;
    }
    match (&mut roots.exact, &s.exact) {
        (Some(exact), Some(d)) => {
            for e in exact.iter_mut() {
                match e {
                    ExactRoot::Rational(q) => *q = &*q - d,
                    ExactRoot::Surd { base, .. } => *base = &*base - d,
                }
            }
        }
        (exact @ Some(_), None) => *exact = None,
        _ => {}
    }
    roots
}
