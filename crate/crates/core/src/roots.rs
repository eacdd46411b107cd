//! The three roots of a cubic plus the annotations the solvers attach.

use std::cmp::Ordering;

use num_complex::Complex64;

use crate::decomposition::CaseTag;
use crate::exact::ExactRoot;
use crate::numerics::ComplexValue;

/// Trigonometric form of three real roots:
/// `roots[k] = amplitude · cos(offsets[k]) + translation`.
///
/// For a depressed cubic `amplitude = −2√(rs)`, `theta = Arg(r)` and the
/// offsets are `θ/3 + 2πk/3`, stored in the same order as the roots.
#[derive(Debug, Clone, PartialEq)]
pub struct TrigForm {
    pub amplitude: f64,
    pub theta: f64,
    pub offsets: [f64; 3],
    pub translation: f64,
}

impl TrigForm {
    pub fn evaluate(&self, k: usize) -> f64 {
        self.amplitude * self.offsets[k].cos() + self.translation
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RootTriple {
    pub roots: [ComplexValue; 3],
    pub case: CaseTag,
    /// `(index of first occurrence, count)` for each distinct root.
    pub multiplicity: Vec<(usize, usize)>,
    pub trig: Option<TrigForm>,
    /// Exact values aligned index-by-index with `roots`.
    pub exact: Option<[ExactRoot; 3]>,
}

impl RootTriple {
    /// Orders `roots` and computes multiplicities. No snapping is applied.
    pub fn from_parts(roots: [ComplexValue; 3], case: CaseTag) -> Self {
        let mut t = Self {
            // adding +0 turns −0 into +0
            roots: roots.map(|z| Complex64::new(z.re + 0.0, z.im + 0.0)),
            case,
            multiplicity: Vec::new(),
            trig: None,
            exact: None,
        };
        t.reorder();
        t
    }

    /// Builds a triple from raw solver output, forcing the real/complex
    /// structure implied by `real_count` (1 or 3): the real roots get an
    /// exactly zero imaginary part and a complex pair is made exactly
    /// conjugate.
    pub fn canonical(mut roots: [ComplexValue; 3], case: CaseTag, real_count: usize) -> Self {
        if real_count == 3 {
            for z in roots.iter_mut() {
                z.im = 0.0;
            }
        } else {
            let real_idx = (0..3)
                .min_by(|&i, &j| roots[i].im.abs().total_cmp(&roots[j].im.abs()))
                .expect("three roots");
            let others: Vec<usize> = (0..3).filter(|&i| i != real_idx).collect();
            let (a, b) = (roots[others[0]], roots[others[1]]);
            let re = 0.5 * (a.re + b.re);
            let im = 0.5 * (a.im.abs() + b.im.abs());
            roots = [
                Complex64::new(roots[real_idx].re, 0.0),
                Complex64::new(re, -im),
                Complex64::new(re, im),
            ];
        }
        Self::from_parts(roots, case)
    }

    /// Real roots ascending, then complex roots by ascending imaginary part.
    /// Annotations are permuted along with the roots.
    pub fn reorder(&mut self) {
        let mut idx = [0usize, 1, 2];
        idx.sort_by(|&i, &j| root_order(&self.roots[i], &self.roots[j]));
        self.roots = idx.map(|i| self.roots[i]);
        if let Some(t) = self.trig.as_mut() {
            t.offsets = idx.map(|i| t.offsets[i]);
        }
        if let Some(e) = self.exact.take() {
            self.exact = Some(idx.map(|i| e[i].clone()));
        }
        self.multiplicity = multiplicities(&self.roots);
    }

    pub fn real_count(&self) -> usize {
        self.roots.iter().filter(|z| z.im == 0.0).count()
    }

    pub fn max_modulus(&self) -> f64 {
        self.roots.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

fn root_order(a: &Complex64, b: &Complex64) -> Ordering {
    let (ar, br) = (a.im == 0.0, b.im == 0.0);
    match (ar, br) {
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        (true, true) => a.re.total_cmp(&b.re),
        (false, false) => a.im.total_cmp(&b.im).then(a.re.total_cmp(&b.re)),
    }
}

fn multiplicities(roots: &[Complex64; 3]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for (i, z) in roots.iter().enumerate() {
        match out.iter_mut().find(|(j, _)| roots[*j] == *z) {
            Some(entry) => entry.1 += 1,
            None => out.push((i, 1)),
        }
    }
    out
}

const PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// Optimal bipartite matching between two root triples minimising the
/// largest matched distance. Returns that distance and the permutation
/// `perm` such that `a[i]` is matched with `b[perm[i]]`.
pub fn match_roots(a: &[ComplexValue; 3], b: &[ComplexValue; 3]) -> (f64, [usize; 3]) {
    PERMUTATIONS
        .iter()
        .map(|perm| {
            let d = (0..3).map(|i| (a[i] - b[perm[i]]).norm()).fold(0.0, f64::max);
            (d, *perm)
        })
        .min_by(|x, y| x.0.total_cmp(&y.0))
        .expect("non-empty")
}

pub fn matching_distance(a: &[ComplexValue; 3], b: &[ComplexValue; 3]) -> f64 {
    match_roots(a, b).0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn ordering_real_first() {
        let t = RootTriple::from_parts([c(-1.5, 0.8), c(3.0, 0.0), c(-1.5, -0.8)], CaseTag::RealDistinct);
        assert_eq!(t.roots, [c(3.0, 0.0), c(-1.5, -0.8), c(-1.5, 0.8)]);
        assert_eq!(t.multiplicity, vec![(0, 1), (1, 1), (2, 1)]);
    }

    #[test]
    fn canonical_snaps_structure() {
        let t = RootTriple::canonical([c(1.0, 1e-17), c(-2.0, -1e-16), c(1.0, -1e-17)], CaseTag::Equal, 3);
        assert_eq!(t.roots, [c(-2.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)]);
        assert_eq!(t.multiplicity, vec![(0, 1), (1, 2)]);

        let t = RootTriple::canonical([c(-1.5, 0.86), c(3.0, 1e-16), c(-1.5000000000000002, -0.8600000000000001)], CaseTag::RealDistinct, 1);
        assert_eq!(t.roots[0], c(3.0, 0.0));
        assert_eq!(t.roots[1], t.roots[2].conj());
        assert!(t.roots[1].im < 0.0);
    }

    #[test]
    fn reorder_carries_trig_offsets() {
        let mut t = RootTriple {
            roots: [c(2.0, 0.0), c(-1.0, 0.0), c(0.5, 0.0)],
            case: CaseTag::ConjugatePair,
            multiplicity: vec![],
            trig: Some(TrigForm { amplitude: 1.0, theta: 0.0, offsets: [10.0, 20.0, 30.0], translation: 0.0 }),
            exact: None,
        };
        t.reorder();
        assert_eq!(t.trig.unwrap().offsets, [20.0, 30.0, 10.0]);
    }

    #[test]
    fn matching_finds_permutation() {
        let a = [c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)];
        let b = [c(3.0, 1e-12), c(1.0, 0.0), c(2.0, 0.0)];
        let (d, perm) = match_roots(&a, &b);
        assert!(d <= 1e-12);
        assert_eq!(perm, [1, 2, 0]);
    }
}
