//! Roots of `x³ + p·x + q` through the decomposition
//! `x³ − 3rs·x + rs(r + s) = s/(s−r)·(x−r)³ + r/(r−s)·(x−s)³`.
//!
//! Three specialised paths follow the sign of `4p³ + 27q²`:
//!
//! * equal pair `r = s`: the cubic factors as `(x − r)²(x + 2r)`;
//! * distinct real pair: one real root `−∛r·∛s·(∛r + ∛s)` and a conjugate pair;
//! * conjugate pair: three real roots `−2√(rs)·cos(θ/3 + 2πk/3)`, `θ = Arg(r)`.
//!
//! [`solve_unified`] evaluates the single expression that covers all three
//! cases for any cube-root branch, and [`solve_moebius`] uses the
//! parameterisation `x = (r − s·u)/(1 − u)` over the cube roots `u` of `r/s`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::cardano;
use crate::decomposition::{compute_rs, CaseTag};
use crate::error::{Error, Result};
use crate::exact::{self, ExactRational, ExactRoot, RootSearch};
use crate::numerics::{self, ComplexValue, CubeRootBranch, OMEGA, OMEGA_SQ};
use crate::reduction::{depress, lift_roots, DepressedCubic, GeneralCubic};
use crate::roots::{match_roots, RootTriple, TrigForm};

const SQRT3_2: f64 = 0.866_025_403_784_438_6;

/// How many real roots a depressed cubic with this tag has.
pub fn expected_real_count(d: &DepressedCubic, case: CaseTag) -> usize {
    match case {
        CaseTag::Equal | CaseTag::ConjugatePair => 3,
        CaseTag::RealDistinct => 1,
        CaseTag::DegenerateQ0 => {
            if d.p <= 0.0 {
                3
            } else {
                1
            }
        }
        CaseTag::DegenerateP0 => {
            if d.q == 0.0 {
                3
            } else {
                1
            }
        }
    }
}

/// Roots `{r, r, −2r}` of `(x − r)²(x + 2r)`.
pub fn solve_equal(r: f64) -> RootTriple {
    let z = |x: f64| Complex64::new(x, 0.0);
    RootTriple::from_parts([z(r), z(r), z(-2.0 * r)], CaseTag::Equal)
}

/// Distinct real `r`, `s`: real cube roots throughout, so the real root and
/// the conjugate pair come out structurally exact.
pub fn solve_real_distinct(r: f64, s: f64) -> RootTriple {
    real_distinct_with_sum(r, s, r + s)
}

/// `sum` is `r + s` computed independently of `r` and `s`, which matters when
/// `r ≈ −s` and `α + β` would cancel.
fn real_distinct_with_sum(r: f64, s: f64, sum: f64) -> RootTriple {
    let alpha = numerics::real_cube_root(r);
    let beta = numerics::real_cube_root(s);
    let k = alpha * beta;
    let alpha_plus_beta = if k < 0.0 {
        // α³ + β³ = (α + β)(α² − αβ + β²) and every term of the second factor is positive
        sum / (alpha * alpha - k + beta * beta)
    } else {
        alpha + beta
    };
    let real = -k * alpha_plus_beta;
    // −k(ω²α + ωβ) = k(α + β)/2 + i·k(√3/2)(α − β)
    let re = -0.5 * real;
    let im = (k * SQRT3_2 * (alpha - beta)).abs();
    RootTriple::from_parts(
        [
            Complex64::new(real, 0.0),
            Complex64::new(re, -im),
            Complex64::new(re, im),
        ],
        CaseTag::RealDistinct,
    )
}

/// Conjugate pair `r`, `r̄`: three real roots in trigonometric form.
pub fn solve_conjugate(r: ComplexValue) -> RootTriple {
    let amplitude = -2.0 * numerics::modulus(r);
    let theta = numerics::arg(r);
    let offsets = [0.0, 1.0, 2.0].map(|k: f64| theta / 3.0 + 2.0 * PI * k / 3.0);
    let roots = offsets.map(|o| Complex64::new(amplitude * o.cos(), 0.0));
    let mut t = RootTriple {
        roots,
        case: CaseTag::ConjugatePair,
        multiplicity: Vec::new(),
        trig: Some(TrigForm {
            amplitude,
            theta,
            offsets,
            translation: 0.0,
        }),
        exact: None,
    };
    t.reorder();
    t
}

/// `−∛r∛s(∛r + ∛s)`, `−∛r∛s(ω∛r + ω²∛s)`, `−∛r∛s(ω²∛r + ω∛s)` with the cube
/// roots taken on `branch`. Any consistent choice of cube roots yields the
/// same root set.
pub fn unified_roots(r: ComplexValue, s: ComplexValue, branch: CubeRootBranch) -> [ComplexValue; 3] {
    let alpha = branch.cube_root(r);
    let beta = branch.cube_root(s);
    let k = alpha * beta;
    [
        -k * (alpha + beta),
        -k * (OMEGA * alpha + OMEGA_SQ * beta),
        -k * (OMEGA_SQ * alpha + OMEGA * beta),
    ]
}

pub fn solve_unified(d: &DepressedCubic, branch: CubeRootBranch) -> RootTriple {
    let rs = compute_rs(d);
    match rs.values {
        None => solve_degenerate(d),
        Some((r, s)) => {
            let raw = unified_roots(r, s, branch);
            RootTriple::canonical(raw, rs.case, expected_real_count(d, rs.case))
        }
    }
}

/// `x = (r − s·u)/(1 − u)` for the three cube roots `u` of `r/s`.
pub fn solve_moebius(r: ComplexValue, s: ComplexValue) -> Result<RootTriple> {
    if r == s {
        return Err(Error::InvalidCase("Möbius form needs r ≠ s".into()));
    }
    if s.re == 0.0 && s.im == 0.0 {
        return Err(Error::InvalidCase("Möbius form needs s ≠ 0".into()));
    }
    let u0 = CubeRootBranch::RealPreferring.cube_root(r / s);
    let us = [u0, u0 * OMEGA, u0 * OMEGA_SQ];
    let mut raw = [Complex64::new(0.0, 0.0); 3];
    for (x, u) in raw.iter_mut().zip(us) {
        let denom = Complex64::new(1.0, 0.0) - u;
        if denom.re == 0.0 && denom.im == 0.0 {
            return Err(Error::InvalidCase("cube root of r/s equals 1".into()));
        }
        *x = (r - s * u) / denom;
    }
    let (case, real_count) = if r.im == 0.0 && s.im == 0.0 {
        (CaseTag::RealDistinct, 1)
    } else {
        (CaseTag::ConjugatePair, 3)
    };
    Ok(RootTriple::canonical(raw, case, real_count))
}

/// `q = 0`: `{0, ±√(−p)}`; `p = 0`: the cube roots of `−q`.
pub fn solve_degenerate(d: &DepressedCubic) -> RootTriple {
    let z = |re: f64, im: f64| Complex64::new(re, im);
    if d.q == 0.0 {
        let case = if d.p == 0.0 { CaseTag::DegenerateP0 } else { CaseTag::DegenerateQ0 };
        let roots = if d.p <= 0.0 {
            let w = (-d.p).sqrt();
            [z(-w, 0.0), z(0.0, 0.0), z(w, 0.0)]
        } else {
            let w = d.p.sqrt();
            [z(0.0, 0.0), z(0.0, -w), z(0.0, w)]
        };
        return RootTriple::from_parts(roots, case);
    }
    let c = numerics::real_cube_root(-d.q);
    let im = (c * SQRT3_2).abs();
    RootTriple::from_parts([z(c, 0.0), z(-0.5 * c, -im), z(-0.5 * c, im)], CaseTag::DegenerateP0)
}

/// Case-specific solver for a depressed cubic.
pub fn solve_depressed(d: &DepressedCubic) -> RootTriple {
    let rs = compute_rs(d);
    match (rs.case, rs.values) {
        (CaseTag::Equal, Some((r, _))) => solve_equal(r.re),
        (CaseTag::RealDistinct, Some((r, s))) => real_distinct_with_sum(r.re, s.re, -3.0 * d.q / d.p),
        (CaseTag::ConjugatePair, Some((r, _))) => solve_conjugate(r),
        _ => solve_degenerate(d),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Chen,
    Moebius,
    Cardano,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Chen => "chen",
            Method::Moebius => "moebius",
            Method::Cardano => "cardano",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveOptions {
    pub method: Method,
    /// `None` selects the case-specific formulas; `Some(branch)` evaluates the
    /// unified expression with that cube-root branch.
    pub branch: Option<CubeRootBranch>,
    /// One Newton step per root against the original cubic.
    pub polish: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            method: Method::Chen,
            branch: None,
            polish: false,
        }
    }
}

/// Depressed-cubic dispatch for every method. The Möbius form degenerates
/// when `r = s` or `p·q = 0`; those inputs use the case-specific formulas.
pub fn solve_depressed_with(d: &DepressedCubic, opts: &SolveOptions) -> RootTriple {
    match opts.method {
        Method::Cardano => cardano::cardano_solve(d).0,
        Method::Chen => match opts.branch {
            Some(branch) => solve_unified(d, branch),
            None => solve_depressed(d),
        },
        Method::Moebius => {
            let rs = compute_rs(d);
            match (rs.case, rs.values) {
                (CaseTag::RealDistinct | CaseTag::ConjugatePair, Some((r, s))) => {
                    solve_moebius(r, s).unwrap_or_else(|_| solve_depressed(d))
                }
                _ => solve_depressed(d),
            }
        }
    }
}

pub fn solve(c: &GeneralCubic) -> Result<RootTriple> {
    solve_with(c, &SolveOptions::default())
}

/// depress → decompose → dispatch → exact annotation → lift → optional polish.
pub fn solve_with(c: &GeneralCubic, opts: &SolveOptions) -> Result<RootTriple> {
    let (d, shift) = depress(c)?;
    let mut t = solve_depressed_with(&d, opts);
    if t.roots.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::NumericFailure("non-finite root".into()));
    }
    t.exact = exact_roots(&d, &t.roots);
    let mut t = lift_roots(t, &shift);
    if opts.polish {
        polish(c, &mut t);
    }
    Ok(t)
}

/// One guarded Newton step per root: the step is kept only when it lowers
/// the residual. Conjugate symmetry is preserved bit-for-bit.
pub fn polish(c: &GeneralCubic, t: &mut RootTriple) {
    for x in t.roots.iter_mut() {
        let f = c.eval(*x);
        let fp = c.derivative(*x);
        if fp.norm() == 0.0 || f.norm() == 0.0 {
            continue;
        }
        let next = *x - f / fp;
        if next.re.is_finite() && next.im.is_finite() && c.eval(next).norm() < f.norm() {
            *x = next;
        }
    }
    t.reorder();
}

/// Exact roots for rational `(p, q)`: a rational root found near one of the
/// numeric real roots, and the quadratic factor left after deflating it.
/// The result is aligned with `numeric`.
pub fn exact_roots(d: &DepressedCubic, numeric: &[ComplexValue; 3]) -> Option<[ExactRoot; 3]> {
    let (p, q) = d.exact.as_ref()?;
    let coeffs = [ExactRational::one(), ExactRational::zero(), p.clone(), q.clone()];
    let rho = numeric.iter().filter(|z| z.im == 0.0).find_map(|z| {
        match exact::rational_root_near(&coeffs, z.re, 1e-9) {
            RootSearch::Found(rho) => Some(rho),
            _ => None,
        }
    })?;
    // x³ + px + q = (x − ρ)(x² + ρx + ρ² + p)
    let c = &(&rho * &rho) + p;
    let [lo, hi] = exact::quadratic_roots(&rho, &c);
    let candidates = [ExactRoot::Rational(rho), lo, hi];
    let values = [0, 1, 2].map(|i| candidates[i].to_complex());
    let (dist, perm) = match_roots(numeric, &values);
    let scale = 1f64.max(numeric.iter().map(|z| z.norm()).fold(0.0, f64::max));
    if dist > 1e-6 * scale {
        return None;
    }
    Some(perm.map(|j| candidates[j].clone()))
}
