//! Independent checks on solver output.
//!
//! Nothing here calls the solvers. The brute-force oracle brackets a real
//! root by bisection, deflates to a quadratic, and polishes with Newton
//! steps, so it shares no formulas with the closed-form paths.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::decomposition::classify;
use crate::numerics::ComplexValue;
use crate::reduction::DepressedCubic;
use crate::roots::RootTriple;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    /// `|x³ + p·x + q|` per root.
    pub residuals: [f64; 3],
    /// `|Σx|`, `|Σxᵢxⱼ − p|`, `|Πx + q|`.
    pub vieta_errors: [f64; 3],
    pub identity_errors: Option<Vec<f64>>,
    pub tolerance: f64,
    pub pass: bool,
}

impl VerificationReport {
    /// Attaches extra identity errors, checked against the same tolerance.
    pub fn with_identity_errors(mut self, errors: Vec<f64>) -> Self {
        self.pass = self.pass && errors.iter().all(|e| e.is_finite() && *e <= self.tolerance);
        self.identity_errors = Some(errors);
        self
    }
}

pub fn verify_roots(d: &DepressedCubic, roots: &RootTriple, tol: f64) -> VerificationReport {
    let [x1, x2, x3] = roots.roots;
    let residuals = roots.roots.map(|x| d.eval(x).norm());
    let vieta_errors = [
        (x1 + x2 + x3).norm(),
        (x1 * x2 + x1 * x3 + x2 * x3 - d.p).norm(),
        (x1 * x2 * x3 + d.q).norm(),
    ];
    // an overflowed tolerance or residual proves nothing
    let pass = tol.is_finite() && residuals.iter().chain(vieta_errors.iter()).all(|e| *e <= tol);
    VerificationReport {
        residuals,
        vieta_errors,
        identity_errors: None,
        tolerance: tol,
        pass,
    }
}

/// `|x³ − 3rs·x + rs(r+s) − [s/(s−r)·(x−r)³ + r/(r−s)·(x−s)³]|` for `r ≠ s`.
pub fn decomposition_identity_residual(r: ComplexValue, s: ComplexValue, x: ComplexValue) -> f64 {
    let rs = r * s;
    let lhs = x * x * x - rs * x * 3.0 + rs * (r + s);
    let xr = x - r;
    let xs = x - s;
    let rhs = s / (s - r) * xr * xr * xr + r / (r - s) * xs * xs * xs;
    (lhs - rhs).norm()
}

/// `|((x − r)/(x − s))³ − r/s|`, the cube-ratio condition every root meets.
pub fn ratio_cube_residual(r: ComplexValue, s: ComplexValue, x: ComplexValue) -> f64 {
    let w = (x - r) / (x - s);
    (w * w * w - r / s).norm()
}

/// `[Σc, Σ_{j<k} c_j c_k, Πc, Σc³]` for `c_k = cos(θ/3 + 2πk/3)`.
pub fn trig_symmetric_functions(theta: f64) -> [f64; 4] {
    let c = [0.0, 1.0, 2.0].map(|k: f64| (theta / 3.0 + 2.0 * PI * k / 3.0).cos());
    [
        c[0] + c[1] + c[2],
        c[0] * c[1] + c[0] * c[2] + c[1] * c[2],
        c[0] * c[1] * c[2],
        c[0].powi(3) + c[1].powi(3) + c[2].powi(3),
    ]
}

/// Deviations of the cosine identities implied by Vieta's relations:
/// `Σc = 0`, `Σc_j c_k = −3/4`, `Πc = cos(θ)/4`, `Σc³ = (3/4)·cos(θ)`.
pub fn trig_identity_residuals(theta: f64) -> [f64; 4] {
    let [sum, pairs, product, cubes] = trig_symmetric_functions(theta);
    let cos = theta.cos();
    [
        sum.abs(),
        (pairs + 0.75).abs(),
        (product - 0.25 * cos).abs(),
        (cubes - 0.75 * cos).abs(),
    ]
}

fn newton_steps(d: &DepressedCubic, mut x: Complex64, steps: usize) -> Complex64 {
    for _ in 0..steps {
        let f = d.eval(x);
        let fp = d.derivative(x);
        if f.norm() == 0.0 || fp.norm() == 0.0 {
            break;
        }
        let next = x - f / fp;
        if d.eval(next).norm().partial_cmp(&f.norm()) != Some(std::cmp::Ordering::Less) {
            break;
        }
        x = next;
    }
    x
}

/// Bisection for one real root, deflation to a quadratic, Newton polishing.
pub fn brute_force_roots(d: &DepressedCubic) -> RootTriple {
    let (p, q) = (d.p, d.q);
    let f = |x: f64| (x * x + p) * x + q;

    let bound = 1.0 + p.abs().max(q.abs());
    let (mut lo, mut hi) = (-bound, bound);
    let mut x0 = 0.0;
    if q != 0.0 {
        loop {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                x0 = if f(lo).abs() <= f(hi).abs() { lo } else { hi };
                break;
            }
            let fm = f(mid);
            if fm == 0.0 {
                x0 = mid;
                break;
            }
            if fm < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        x0 = newton_steps(d, Complex64::new(x0, 0.0), 3).re;
    }

    // x³ + px + q = (x − x₀)(x² + x₀x + c); pick the less sensitive form of c
    let c = if x0 != 0.0 && (q / (x0 * x0)).abs() < 2.0 * x0.abs() {
        -q / x0
    } else {
        x0 * x0 + p
    };
    let disc = x0 * x0 - 4.0 * c;
    let (y1, y2) = if disc >= 0.0 {
        let sq = disc.sqrt();
        let t1 = -0.5 * (x0 + sq.copysign(x0));
        let t2 = if t1 != 0.0 { c / t1 } else { -0.5 * (x0 - sq.copysign(x0)) };
        (Complex64::new(t1, 0.0), Complex64::new(t2, 0.0))
    } else {
        let im = 0.5 * (-disc).sqrt();
        (Complex64::new(-0.5 * x0, im), Complex64::new(-0.5 * x0, -im))
    };
    let roots = [
        Complex64::new(x0, 0.0),
        newton_steps(d, y1, 3),
        newton_steps(d, y2, 3),
    ];
    RootTriple::from_parts(roots, classify(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::matching_distance;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn dc(p: f64, q: f64) -> DepressedCubic {
        DepressedCubic::new(p, q).unwrap()
    }

    #[test]
    fn overflow_never_passes() {
        let d = dc(1e300, 1e300);
        let t = RootTriple::from_parts([c(-1.0, 0.0), c(0.5, -1e150), c(0.5, 1e150)], classify(&d));
        assert!(!verify_roots(&d, &t, f64::INFINITY).pass);
        assert!(!verify_roots(&d, &t, 1e300).pass);
    }

    #[test]
    fn verify_exact_roots() {
        let t = RootTriple::from_parts([c(2.0, 0.0), c(2.0, 0.0), c(-4.0, 0.0)], classify(&dc(-12.0, 16.0)));
        let r = verify_roots(&dc(-12.0, 16.0), &t, 1e-12);
        assert_eq!(r.residuals, [0.0; 3]);
        assert_eq!(r.vieta_errors, [0.0; 3]);
        assert!(r.pass);

        let t = RootTriple::from_parts([c(0.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0)], classify(&dc(-1.0, 0.0)));
        let r = verify_roots(&dc(-1.0, 0.0), &t, 1e-12);
        assert_eq!(r.residuals, [0.0; 3]);
        assert_eq!(r.vieta_errors, [0.0; 3]);
    }

    #[test]
    fn verify_worked_complex_roots() {
        let s3 = 3f64.sqrt();
        let d = dc(-6.0, -9.0);
        let t = RootTriple::from_parts([c(3.0, 0.0), c(-1.5, s3 / 2.0), c(-1.5, -s3 / 2.0)], classify(&d));
        let r = verify_roots(&d, &t, 1e-14);
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn failing_report() {
        let d = dc(-6.0, -9.0);
        let t = RootTriple::from_parts([c(3.1, 0.0), c(0.0, 0.0), c(0.0, 0.0)], classify(&d));
        assert!(!verify_roots(&d, &t, 1e-6).pass);
        let ok = verify_roots(&d, &crate::chen::solve_depressed(&d), 1e-12);
        assert!(!ok.clone().with_identity_errors(vec![1.0]).pass);
        assert!(ok.with_identity_errors(vec![0.0]).pass);
    }

    #[test]
    fn trig_identities_at_zero() {
        let [sum, pairs, product, cubes] = trig_symmetric_functions(0.0);
        assert!(sum.abs() < 1e-15);
        assert!((pairs + 0.75).abs() < 1e-15);
        assert!((product - 0.25).abs() < 1e-15);
        assert!((cubes - 0.75).abs() < 1e-15);
        for e in trig_identity_residuals(0.0) {
            assert!(e < 1e-15);
        }
    }

    #[test]
    fn trig_identities_other_angles() {
        for e in trig_identity_residuals(PI / 2.0) {
            assert!(e <= 1e-15);
        }
        let [_, _, product, _] = trig_symmetric_functions(3.0 * PI / 4.0);
        assert!((product + 2f64.sqrt() / 8.0).abs() <= 1e-15);
    }

    #[test]
    fn identity_and_ratio_checks() {
        let (r, s) = (c(-0.5, 0.0), c(-4.0, 0.0));
        assert!(decomposition_identity_residual(r, s, c(1.7, -0.3)) < 1e-12);
        assert!(ratio_cube_residual(r, s, c(3.0, 0.0)) < 1e-15);
    }

    #[test]
    fn brute_force_examples() {
        let t = brute_force_roots(&dc(-12.0, 16.0));
        assert!(matching_distance(&t.roots, &[c(2.0, 0.0), c(2.0, 0.0), c(-4.0, 0.0)]) < 1e-12);

        let t = brute_force_roots(&dc(-6.0, -9.0));
        assert!((t.roots[0] - c(3.0, 0.0)).norm() < 1e-13);

        let t = brute_force_roots(&dc(-48.0, -64.0 * 2f64.sqrt()));
        let expected = [-5.656854249, -2.070552361, 7.727406611].map(|x| c(x, 0.0));
        assert!(matching_distance(&t.roots, &expected) < 1e-9);

        let t = brute_force_roots(&dc(0.0, 0.0));
        assert_eq!(t.roots, [c(0.0, 0.0); 3]);
        let t = brute_force_roots(&dc(4.0, 0.0));
        assert!(matching_distance(&t.roots, &[c(0.0, 0.0), c(0.0, 2.0), c(0.0, -2.0)]) < 1e-14);
    }
}
