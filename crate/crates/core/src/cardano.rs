//! Cardano's formula, kept as an independent baseline.
//!
//! Roots are `∛A + ∛B`, `ω∛A + ω²∛B`, `ω²∛A + ω∛B` with
//! `A, B = −q/2 ± √((q/2)² + (p/3)³)`. The two cube roots are paired so that
//! `∛A·∛B = −p/3`; picking them independently breaks the formula whenever
//! the discriminant term is negative.

use num_complex::Complex64;

use crate::chen::expected_real_count;
use crate::decomposition::{classify, CaseTag};
use crate::numerics::{self, ComplexValue, OMEGA, OMEGA_SQ};
use crate::reduction::DepressedCubic;
use crate::roots::{match_roots, RootTriple};

#[derive(Debug, Clone, PartialEq)]
pub struct CardanoIntermediates {
    /// `(q/2)² + (p/3)³`.
    pub disc: f64,
    pub sqrt_disc: ComplexValue,
    pub a: ComplexValue,
    pub b: ComplexValue,
    pub cbrt_a: ComplexValue,
    pub cbrt_b: ComplexValue,
}

pub fn cardano_solve(d: &DepressedCubic) -> (RootTriple, CardanoIntermediates) {
    let half_q = 0.5 * d.q;
    let third_p = d.p / 3.0;
    let third_p_cubed = third_p * third_p * third_p;
    let disc = half_q * half_q + third_p_cubed;
    let real = |x: f64| Complex64::new(x, 0.0);

    let inter = if disc >= 0.0 {
        let sd = disc.sqrt();
        // A·B = −(p/3)³; form the larger-magnitude term directly and derive the other
        let (a, b) = if half_q <= 0.0 {
            let a = -half_q + sd;
            let b = if a != 0.0 { -third_p_cubed / a } else { -half_q - sd };
            (a, b)
        } else {
            let b = -half_q - sd;
            let a = if b != 0.0 { -third_p_cubed / b } else { -half_q + sd };
            (a, b)
        };
        let (cbrt_a, cbrt_b) = if a.abs() >= b.abs() {
            let ca = numerics::real_cube_root(a);
            let cb = if ca != 0.0 { -third_p / ca } else { numerics::real_cube_root(b) };
            (ca, cb)
        } else {
            let cb = numerics::real_cube_root(b);
            let ca = if cb != 0.0 { -third_p / cb } else { numerics::real_cube_root(a) };
            (ca, cb)
        };
        CardanoIntermediates {
            disc,
            sqrt_disc: real(sd),
            a: real(a),
            b: real(b),
            cbrt_a: real(cbrt_a),
            cbrt_b: real(cbrt_b),
        }
    } else {
        let sd = numerics::principal_sqrt(disc);
        let a = Complex64::new(-half_q, sd.im);
        let b = Complex64::new(-half_q, -sd.im);
        let cbrt_a = numerics::principal_cube_root(a);
        let cbrt_b = -third_p / cbrt_a;
        CardanoIntermediates { disc, sqrt_disc: sd, a, b, cbrt_a, cbrt_b }
    };

    let (ca, cb) = (inter.cbrt_a, inter.cbrt_b);
    let raw = [ca + cb, OMEGA * ca + OMEGA_SQ * cb, OMEGA_SQ * ca + OMEGA * cb];
    let case = classify(d);
    let triple = RootTriple::canonical(raw, case, expected_real_count(d, case));
    (triple, inter)
}

/// Agreement between the decomposition solver and Cardano's formula.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub case: CaseTag,
    pub chen: RootTriple,
    pub cardano: RootTriple,
    pub intermediates: CardanoIntermediates,
    /// Largest distance under the optimal matching of the two root sets.
    pub max_distance: f64,
    /// `chen.roots[i]` is matched with `cardano.roots[matching[i]]`.
    pub matching: [usize; 3],
    pub chen_residuals: [f64; 3],
    pub cardano_residuals: [f64; 3],
}

pub fn compare_methods(d: &DepressedCubic) -> ComparisonReport {
    let chen = crate::chen::solve_depressed(d);
    let (cardano, intermediates) = cardano_solve(d);
    let (max_distance, matching) = match_roots(&chen.roots, &cardano.roots);
    let residuals = |t: &RootTriple| t.roots.map(|z| d.eval(z).norm());
    ComparisonReport {
        case: chen.case,
        chen_residuals: residuals(&chen),
        cardano_residuals: residuals(&cardano),
        chen,
        cardano,
        intermediates,
        max_distance,
        matching,
    }
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
    fn worked_intermediates() {
        let (t, i) = cardano_solve(&dc(-6.0, -9.0));
        assert_eq!(i.disc, 12.25);
        assert_eq!(i.sqrt_disc, c(3.5, 0.0));
        assert_eq!((i.a, i.b), (c(8.0, 0.0), c(1.0, 0.0)));
        assert_eq!((i.cbrt_a, i.cbrt_b), (c(2.0, 0.0), c(1.0, 0.0)));
        let s3 = 3f64.sqrt();
        assert!(matching_distance(&t.roots, &[c(3.0, 0.0), c(-1.5, s3 / 2.0), c(-1.5, -s3 / 2.0)]) < 1e-14);
    }

    #[test]
    fn double_root_pairing() {
        let (t, i) = cardano_solve(&dc(-12.0, 16.0));
        assert_eq!(i.disc, 0.0);
        assert_eq!((i.a, i.b), (c(-8.0, 0.0), c(-8.0, 0.0)));
        assert_eq!(i.cbrt_a, c(-2.0, 0.0));
        assert_eq!(t.roots, [c(-4.0, 0.0), c(2.0, 0.0), c(2.0, 0.0)]);
    }

    #[test]
    fn zero_p() {
        let (t, i) = cardano_solve(&dc(0.0, -8.0));
        assert_eq!((i.a, i.b), (c(8.0, 0.0), c(0.0, 0.0)));
        let s3 = 3f64.sqrt();
        assert!(matching_distance(&t.roots, &[c(2.0, 0.0), c(-1.0, s3), c(-1.0, -s3)]) < 1e-14);
    }

    #[test]
    fn casus_irreducibilis_pairing() {
        let d = dc(-48.0, -64.0 * 2f64.sqrt());
        let (t, i) = cardano_solve(&d);
        assert!(i.disc < 0.0);
        assert!((i.cbrt_a * i.cbrt_b - c(16.0, 0.0)).norm() < 1e-10 * 48.0);
        assert_eq!(t.real_count(), 3);
        let r = compare_methods(&d);
        assert!(r.max_distance <= 1e-9);
    }

    #[test]
    fn comparisons_agree() {
        for (p, q) in [(-6.0, -9.0), (-12.0, 16.0)] {
            let r = compare_methods(&dc(p, q));
            assert!(r.max_distance <= 1e-10, "{p} {q}: {}", r.max_distance);
        }
    }

    #[test]
    fn nonnegative_disc_is_real_valued() {
        for (p, q) in [(3.0, -4.0), (-6.0, 9.0), (1.0, 1.0), (0.0, 5.0)] {
            let (_, i) = cardano_solve(&dc(p, q));
            assert!(i.disc >= 0.0);
            for z in [i.a, i.b, i.cbrt_a, i.cbrt_b] {
                assert_eq!(z.im, 0.0);
            }
        }
    }
}
