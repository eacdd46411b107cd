//! Simplifying `∛(a + √b) + ∛(a − √b)`.
//!
//! With `A = a + √b`, `B = a − √b` and `x = ∛A + ∛B`,
//! `x³ = A + B + 3∛(AB)·x = 2a + 3∛(a² − b)·x`, so `x` is the real root of
//! `x³ + p·x + q` with `p = −3∛(a² − b)` and `q = −2a`. Solving that cubic
//! with the decomposition gives the value without manipulating radicals; a
//! rational-root search then recovers an exact value when one exists.

use crate::chen::solve_depressed;
use crate::decomposition::CaseTag;
use crate::error::{Error, Result};
use crate::exact::{self, ExactRational, RootSearch};
use crate::numerics::real_cube_root;
use crate::reduction::DepressedCubic;

#[derive(Debug, Clone, PartialEq)]
pub struct NestedRadical {
    pub a: f64,
    pub b: f64,
    pub exact: Option<(ExactRational, ExactRational)>,
}

impl NestedRadical {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::InvalidInput("a and b must be finite".into()));
        }
        if b < 0.0 {
            return Err(Error::InvalidInput("b must be non-negative".into()));
        }
        Ok(Self { a, b, exact: None })
    }

    pub fn from_rationals(a: ExactRational, b: ExactRational) -> Result<Self> {
        if b.is_negative() {
            return Err(Error::InvalidInput("b must be non-negative".into()));
        }
        let mut n = Self::new(a.to_f64(), b.to_f64())?;
        n.exact = Some((a, b));
        Ok(n)
    }

    /// Evaluates the expression as written, with real cube roots.
    pub fn direct_value(&self) -> f64 {
        let root = self.b.sqrt();
        real_cube_root(self.a + root) + real_cube_root(self.a - root)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DenestResult {
    pub cubic: DepressedCubic,
    pub value: f64,
    pub exact: Option<ExactRational>,
    pub search: Option<RootSearch>,
}

impl DenestResult {
    pub fn note(&self) -> Option<&'static str> {
        match self.search {
            Some(RootSearch::Exhausted) => Some("search exhausted"),
            Some(RootSearch::NotFound) => Some("no rational value"),
            None if self.exact.is_none() => Some("coefficients not rational"),
            _ => None,
        }
    }
}

pub fn radical_to_cubic(n: &NestedRadical) -> Result<DepressedCubic> {
    if n.b < 0.0 {
        return Err(Error::InvalidInput("b must be non-negative".into()));
    }
    if let Some((a, b)) = &n.exact {
        let inner = &(a * a) - b;
        if let Some(k) = inner.cbrt_exact() {
            let p = -(&ExactRational::from_integer(3) * &k);
            let q = -(&ExactRational::from_integer(2) * a);
            return DepressedCubic::from_rationals(p, q);
        }
    }
    let inner = n.a * n.a - n.b;
    DepressedCubic::new(-3.0 * real_cube_root(inner), -2.0 * n.a)
}

/// The real root of the reconstructed cubic that equals the radical.
///
/// `4p³ + 27q² = 108·b ≥ 0`, so there is one real root, or for `b = 0` a
/// double root `−∛a` next to the simple root `2∛a` that the radical takes.
fn radical_root(d: &DepressedCubic) -> f64 {
    let t = solve_depressed(d);
    match t.case {
        CaseTag::Equal => t
            .multiplicity
            .iter()
            .find(|(_, count)| *count == 1)
            .map(|(i, _)| t.roots[*i].re)
            .unwrap_or(t.roots[0].re),
        _ => t.roots[0].re,
    }
}

pub fn denest(n: &NestedRadical) -> Result<DenestResult> {
    let cubic = radical_to_cubic(n)?;
    let value = radical_root(&cubic);
    let (exact, search) = match &cubic.exact {
        Some((p, q)) => {
            let coeffs = [ExactRational::one(), ExactRational::zero(), p.clone(), q.clone()];
            match exact::rational_root_near(&coeffs, value, 1e-9) {
                RootSearch::Found(rho) => (Some(rho.clone()), Some(RootSearch::Found(rho))),
                other => (None, Some(other)),
            }
        }
        None => (None, None),
    };
    Ok(DenestResult { cubic, value, exact, search })
}
