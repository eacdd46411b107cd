//! Complex arithmetic helpers, branch-controlled cube roots and the cube
//! roots of unity.
//!
//! Complex values are plain [`num_complex::Complex64`]. The principal
//! argument is taken in `(-π, π]`: a value on the negative real axis has
//! argument `+π` even when its imaginary part is `-0.0`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub type ComplexValue = Complex64;

const SQRT3_2: f64 = 0.866_025_403_784_438_6;

/// ω = (−1 + √3 i)/2, a primitive cube root of unity.
pub const OMEGA: ComplexValue = Complex64::new(-0.5, SQRT3_2);

/// ω² = ω̄ = (−1 − √3 i)/2.
pub const OMEGA_SQ: ComplexValue = Complex64::new(-0.5, -SQRT3_2);

/// Which cube root to pick when a formula asks for `z^(1/3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CubeRootBranch {
    Principal,
    PrincipalTimesOmega,
    PrincipalTimesOmegaSq,
    /// Real cube root for real input, principal root otherwise.
    RealPreferring,
}

impl CubeRootBranch {
    pub const ALL: [CubeRootBranch; 4] = [
        CubeRootBranch::Principal,
        CubeRootBranch::PrincipalTimesOmega,
        CubeRootBranch::PrincipalTimesOmegaSq,
        CubeRootBranch::RealPreferring,
    ];

    pub fn cube_root(self, z: ComplexValue) -> ComplexValue {
        match self {
            CubeRootBranch::Principal => principal_cube_root(z),
            CubeRootBranch::PrincipalTimesOmega => principal_cube_root(z) * OMEGA,
            CubeRootBranch::PrincipalTimesOmegaSq => principal_cube_root(z) * OMEGA_SQ,
            CubeRootBranch::RealPreferring => {
                if z.im == 0.0 {
                    Complex64::new(real_cube_root(z.re), 0.0)
                } else {
                    principal_cube_root(z)
                }
            }
        }
    }
}

pub fn modulus(z: ComplexValue) -> f64 {
    z.re.hypot(z.im)
}

/// Principal argument in `(-π, π]`. Zero maps to zero.
pub fn arg(z: ComplexValue) -> f64 {
    if z.im == 0.0 {
        if z.re < 0.0 {
            PI
        } else {
            0.0
        }
    } else {
        z.im.atan2(z.re)
    }
}

/// `|z|^(1/3) · e^{i·Arg(z)/3}`, with `0 ↦ 0`.
pub fn principal_cube_root(z: ComplexValue) -> ComplexValue {
    if z.re == 0.0 && z.im == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    if z.im == 0.0 && z.re > 0.0 {
        return Complex64::new(z.re.cbrt(), 0.0);
    }
    let r = modulus(z).cbrt();
    let theta = arg(z) / 3.0;
    Complex64::new(r * theta.cos(), r * theta.sin())
}

/// Sign-preserving real cube root.
pub fn real_cube_root(x: f64) -> f64 {
    x.cbrt()
}

/// The three cube roots `principal · {1, ω, ω²}`.
pub fn cube_roots_all(z: ComplexValue) -> [ComplexValue; 3] {
    let c = principal_cube_root(z);
    [c, c * OMEGA, c * OMEGA_SQ]
}

/// Complex square root with the principal branch, `√(negative real) = +i·√|x|`.
pub fn principal_sqrt(x: f64) -> ComplexValue {
    if x >= 0.0 {
        Complex64::new(x.sqrt(), 0.0)
    } else {
        Complex64::new(0.0, (-x).sqrt())
    }
}
