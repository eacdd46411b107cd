//! Recovering the pair (r, s) with `p = −3rs`, `q = rs(r + s)`.
//!
//! `r` and `s` are the roots of `t² + (3q/p)·t − p/3 = 0`, whose
//! discriminant is `(4p³ + 27q²)/(3p²)`. The sign of `4p³ + 27q²` decides
//! whether the pair is real and distinct, equal, or complex conjugate.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::exact::ExactRational;
use crate::numerics::ComplexValue;
use crate::reduction::DepressedCubic;

/// Relative tolerance under which `4p³ + 27q²` counts as zero.
pub const EQUAL_CASE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseTag {
    Equal,
    RealDistinct,
    ConjugatePair,
    DegenerateP0,
    DegenerateQ0,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::Equal => "equal",
            CaseTag::RealDistinct => "real_distinct",
            CaseTag::ConjugatePair => "conjugate_pair",
            CaseTag::DegenerateP0 => "degenerate_p0",
            CaseTag::DegenerateQ0 => "degenerate_q0",
        }
    }
}

impl std::fmt::Display for CaseTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The decomposition pair. `values` is `None` for the degenerate tags.
///
/// Ordering is canonical: `r ≥ s` for real distinct pairs, `Im(r) > 0` for
/// conjugate pairs (with `s` the bit-exact conjugate of `r`).
#[derive(Debug, Clone, PartialEq)]
pub struct RsPair {
    pub values: Option<(ComplexValue, ComplexValue)>,
    pub case: CaseTag,
    /// Rational `(r, s)` when the inputs were exact and the quadratic's
    /// discriminant is a perfect rational square.
    pub exact: Option<(ExactRational, ExactRational)>,
}

impl RsPair {
    pub fn r(&self) -> Option<ComplexValue> {
        self.values.map(|v| v.0)
    }

    pub fn s(&self) -> Option<ComplexValue> {
        self.values.map(|v| v.1)
    }
}

/// `4p³ + 27q²`.
pub fn discriminant(d: &DepressedCubic) -> f64 {
    4.0 * d.p * d.p * d.p + 27.0 * d.q * d.q
}

fn exact_discriminant(p: &ExactRational, q: &ExactRational) -> ExactRational {
    let four = ExactRational::from_integer(4);
    let twenty_seven = ExactRational::from_integer(27);
    &(&four * &p.pow(3)) + &(&twenty_seven * &(q * q))
}

pub fn classify(d: &DepressedCubic) -> CaseTag {
    if d.p == 0.0 {
        return CaseTag::DegenerateP0;
    }
    if d.q == 0.0 {
        return CaseTag::DegenerateQ0;
    }
    if let Some((ep, eq)) = &d.exact {
        let disc = exact_discriminant(ep, eq);
        return if disc.is_zero() {
            CaseTag::Equal
        } else if disc.is_negative() {
            CaseTag::ConjugatePair
        } else {
            CaseTag::RealDistinct
        };
    }
    // Δ/(3p²) has the sign of Δ and stays finite whenever p, q and q/p are
    let (lin, _, disc) = rs_quadratic(d.p, d.q);
    let (square, linear) = (lin * lin, 4.0 * d.p / 3.0);
    if disc.abs() <= EQUAL_CASE_TOLERANCE * (square + linear.abs()) {
        CaseTag::Equal
    } else if disc > 0.0 {
        CaseTag::RealDistinct
    } else {
        CaseTag::ConjugatePair
    }
}

/// `(lin, constant, lin² − 4·constant)` for `t² + lin·t + constant`, whose
/// roots are `r` and `s`.
fn rs_quadratic(p: f64, q: f64) -> (f64, f64, f64) {
    let lin = 3.0 * q / p;
    let constant = -p / 3.0;
    (lin, constant, lin * lin - 4.0 * constant)
}

/// Exact rational `(r, s)` with `r ≥ s`, if the quadratic in `t` splits over ℚ.
pub fn compute_rs_exact(p: &ExactRational, q: &ExactRational) -> Option<(ExactRational, ExactRational)> {
    if p.is_zero() || q.is_zero() {
        return None;
    }
    let two = ExactRational::from_integer(2);
    let three = ExactRational::from_integer(3);
    let four = ExactRational::from_integer(4);
    let lin = &(&three * q) / p;
    let constant = -&(p / &three);
    let disc = &(&lin * &lin) - &(&four * &constant);
    let root = disc.sqrt_exact()?;
    let r = &(&(-&lin) + &root) / &two;
    let s = &(&(-&lin) - &root) / &two;
    Some((r, s))
}

pub fn compute_rs(d: &DepressedCubic) -> RsPair {
    let case = classify(d);
    let (p, q) = (d.p, d.q);
    let exact = d.exact.as_ref().and_then(|(ep, eq)| compute_rs_exact(ep, eq));
    let values = match case {
        CaseTag::DegenerateP0 | CaseTag::DegenerateQ0 => None,
        _ if exact.is_some() => {
            let (r, s) = exact.as_ref().expect("checked");
            Some((Complex64::new(r.to_f64(), 0.0), Complex64::new(s.to_f64(), 0.0)))
        }
        CaseTag::Equal => {
            let r = -3.0 * q / (2.0 * p);
            Some((Complex64::new(r, 0.0), Complex64::new(r, 0.0)))
        }
        CaseTag::RealDistinct => {
            // t² + lin·t + constant, larger-magnitude root first to avoid cancellation
            let (lin, constant, disc) = rs_quadratic(p, q);
            let sq = disc.max(0.0).sqrt();
            let t1 = -0.5 * (lin + sq.copysign(lin));
            let t2 = constant / t1;
            let (r, s) = if t1 >= t2 { (t1, t2) } else { (t2, t1) };
            Some((Complex64::new(r, 0.0), Complex64::new(s, 0.0)))
        }
        CaseTag::ConjugatePair => {
            let (lin, _, disc) = rs_quadratic(p, q);
            let im = 0.5 * (-disc).max(0.0).sqrt();
            let r = Complex64::new(-0.5 * lin, im);
            Some((r, r.conj()))
        }
    };
    RsPair { values, case, exact }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn dc(p: f64, q: f64) -> DepressedCubic {
        DepressedCubic::new(p, q).unwrap()
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(discriminant(&dc(-12.0, 16.0)), 0.0);
        assert_eq!(discriminant(&dc(-6.0, -9.0)), 1323.0);
        assert_eq!(discriminant(&dc(0.0, 0.0)), 0.0);
    }

    #[test]
    fn equal_pair() {
        let rs = compute_rs(&dc(-12.0, 16.0));
        assert_eq!(rs.case, CaseTag::Equal);
        assert_eq!(rs.values, Some((Complex64::new(2.0, 0.0), Complex64::new(2.0, 0.0))));
    }

    #[test]
    fn real_distinct_pair() {
        let rs = compute_rs(&dc(-6.0, -9.0));
        assert_eq!(rs.case, CaseTag::RealDistinct);
        let (r, s) = rs.values.unwrap();
        assert!((r.re + 0.5).abs() < 1e-15 && r.im == 0.0);
        assert!((s.re + 4.0).abs() < 1e-15 && s.im == 0.0);
    }

    #[test]
    fn conjugate_pairs() {
        let rs = compute_rs(&dc(-48.0, -64.0 * 2f64.sqrt()));
        assert_eq!(rs.case, CaseTag::ConjugatePair);
        let (r, s) = rs.values.unwrap();
        let expected = Complex64::from_polar(4.0, 3.0 * PI / 4.0);
        assert!((r - expected).norm() < 1e-13);
        assert_eq!(s, r.conj());

        let rs = compute_rs(&dc(-0.75, 0.125));
        let (r, _) = rs.values.unwrap();
        assert!((r - Complex64::new(0.25, 3f64.sqrt() / 4.0)).norm() < 1e-15);
        assert!((r - Complex64::from_polar(0.5, PI / 3.0)).norm() < 1e-15);
    }

    #[test]
    fn degenerate_tags() {
        let rs = compute_rs(&dc(0.0, 5.0));
        assert_eq!((rs.case, rs.values), (CaseTag::DegenerateP0, None));
        let rs = compute_rs(&dc(0.0, 0.0));
        assert_eq!(rs.case, CaseTag::DegenerateP0);
        let rs = compute_rs(&dc(-1.0, 0.0));
        assert_eq!((rs.case, rs.values), (CaseTag::DegenerateQ0, None));
    }

    #[test]
    fn exact_pair_when_discriminant_is_square() {
        let d = DepressedCubic::from_rationals("-6".parse().unwrap(), "-9".parse().unwrap()).unwrap();
        let rs = compute_rs(&d);
        let (r, s) = rs.exact.unwrap();
        assert_eq!((r.to_string(), s.to_string()), ("-1/2".to_string(), "-4".to_string()));
        // x³ + 3x − 2 gives t² − 2t − 1, discriminant 8: no rational pair
        let d = DepressedCubic::from_rationals("3".parse().unwrap(), "-2".parse().unwrap()).unwrap();
        assert!(compute_rs(&d).exact.is_none());
    }

    #[test]
    fn near_zero_discriminant_is_equal() {
        let r = 1.1f64;
        let d = dc(-3.0 * r * r, 2.0 * r * r * r);
        assert_eq!(classify(&d), CaseTag::Equal);
    }
}
