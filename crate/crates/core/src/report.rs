//! Serializable per-input record shared by the CLI's JSON and text output.

use serde::{Deserialize, Serialize};

use crate::cardano::compare_methods;
use crate::chen::{solve_with, SolveOptions};
use crate::decomposition::{compute_rs, CaseTag};
use crate::error::Result;
use crate::numerics::ComplexValue;
use crate::reduction::{depress, GeneralCubic};
use crate::roots::RootTriple;
use crate::verify::{verify_roots, VerificationReport};

/// Residual tolerance factor applied to the cubic's residual scale.
pub const RESIDUAL_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexRecord {
    pub re: f64,
    pub im: f64,
}

impl From<ComplexValue> for ComplexRecord {
    fn from(z: ComplexValue) -> Self {
        Self { re: z.re, im: z.im }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DepressedRecord {
    pub p: f64,
    pub q: f64,
    /// `original_root = depressed_root − shift`.
    pub shift: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RsRecord {
    pub r: ComplexRecord,
    pub s: ComplexRecord,
    pub exact: Option<[String; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrigRecord {
    pub amplitude: f64,
    pub theta: f64,
    pub offsets: [f64; 3],
    pub translation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonRecord {
    pub max_distance: f64,
    pub cardano_roots: Vec<ComplexRecord>,
    pub cardano_residuals: [f64; 3],
    /// `(q/2)² + (p/3)³` from Cardano's formula.
    pub cardano_disc: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub input: String,
    pub method: String,
    pub depressed: DepressedRecord,
    pub case: CaseTag,
    pub rs: Option<RsRecord>,
    pub roots: Vec<ComplexRecord>,
    pub multiplicity: Vec<(usize, usize)>,
    pub trig: Option<TrigRecord>,
    pub exact: Option<Vec<String>>,
    pub residuals: [f64; 3],
    pub comparison: Option<ComparisonRecord>,
    pub verification: Option<VerificationReport>,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RecordOptions {
    pub solve: SolveOptions,
    pub compare: bool,
    pub verify: bool,
}

impl OutputRecord {
    pub fn build(input: &str, cubic: &GeneralCubic, opts: &RecordOptions) -> Result<Self> {
        let (d, shift) = depress(cubic)?;
        let triple: RootTriple = solve_with(cubic, &opts.solve)?;
        let rs = compute_rs(&d);

        let comparison = opts.compare.then(|| {
            let report = compare_methods(&d);
            ComparisonRecord {
                max_distance: report.max_distance,
                cardano_roots: report
                    .cardano
                    .roots
                    .iter()
                    .map(|z| ComplexRecord::from(*z - shift.delta))
                    .collect(),
                cardano_residuals: report.cardano_residuals,
                cardano_disc: report.intermediates.disc,
            }
        });

        let verification = opts.verify.then(|| {
            let mut depressed_roots = triple.clone();
            for z in depressed_roots.roots.iter_mut() {
                z.re += shift.delta;
            }
            verify_roots(&d, &depressed_roots, RESIDUAL_TOLERANCE * d.residual_scale())
        });

        let method = match (opts.compare, opts.solve.branch) {
            (true, _) => "both".to_string(),
            (false, Some(b)) if opts.solve.method == crate::chen::Method::Chen => {
                format!("chen-unified-{}", serde_plain(&b))
            }
            _ => opts.solve.method.as_str().to_string(),
        };

        Ok(Self {
            input: input.to_string(),
            method,
            depressed: DepressedRecord {
                p: d.p,
                q: d.q,
                shift: shift.delta,
            },
            case: rs.case,
            rs: rs.values.map(|(r, s)| RsRecord {
                r: r.into(),
                s: s.into(),
                exact: rs.exact.as_ref().map(|(r, s)| [r.to_string(), s.to_string()]),
            }),
            roots: triple.roots.iter().map(|z| (*z).into()).collect(),
            multiplicity: triple.multiplicity.clone(),
            trig: triple.trig.as_ref().map(|t| TrigRecord {
                amplitude: t.amplitude,
                theta: t.theta,
                offsets: t.offsets,
                translation: t.translation,
            }),
            exact: triple
                .exact
                .as_ref()
                .map(|e| e.iter().map(|x| x.to_string()).collect()),
            residuals: triple.roots.map(|z| cubic.eval(z).norm()),
            comparison,
            verification,
        })
    }

    pub fn passed_verification(&self) -> bool {
        self.verification.as_ref().is_none_or(|v| v.pass)
    }
}

fn serde_plain(b: &crate::numerics::CubeRootBranch) -> &'static str {
    use crate::numerics::CubeRootBranch::*;
    match b {
        Principal => "principal",
        PrincipalTimesOmega => "principal_times_omega",
        PrincipalTimesOmegaSq => "principal_times_omega_sq",
        RealPreferring => "real",
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_cubic;

    #[test]
    fn record_for_worked_example() {
        let c = parse_cubic("x^3-6x-9").unwrap();
        let opts = RecordOptions { compare: true, verify: true, ..Default::default() };
        let r = OutputRecord::build("x^3-6x-9", &c, &opts).unwrap();
        assert_eq!(r.case, CaseTag::RealDistinct);
        assert_eq!(r.method, "both");
        assert_eq!(r.exact.as_ref().unwrap()[0], "3");
        assert_eq!(r.rs.as_ref().unwrap().exact, Some(["-1/2".to_string(), "-4".to_string()]));
        assert!(r.passed_verification());
        assert_eq!(r.comparison.as_ref().unwrap().cardano_disc, 12.25);
    }

    #[test]
    fn missing_exact_serializes_as_null() {
        let c = parse_cubic("x^3-48x-64*sqrt(2)").unwrap();
        let r = OutputRecord::build("e", &c, &RecordOptions::default()).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert!(json["exact"].is_null());
        assert_eq!(json["case"], "conjugate_pair");
    }
}
