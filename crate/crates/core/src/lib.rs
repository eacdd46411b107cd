//! Real cubic equations `x³ + a·x² + b·x + c = 0` solved by writing the
//! depressed cubic as `x³ − 3rs·x + rs(r + s)` and splitting it into two
//! perfect cubes.
//!
//! The crate also carries Cardano's formula as a baseline, an exact rational
//! path (rational roots and quadratic surds), simplification of nested cube
//! radicals `∛(a + √b) + ∛(a − √b)`, and a set of independent checks.
//!
//! ```
//! use cubicsolve::{parse_cubic, solve};
//!
//! let cubic = parse_cubic("x^3 - 6x - 9 = 0").unwrap();
//! let roots = solve(&cubic).unwrap();
//! assert!((roots.roots[0].re - 3.0).abs() < 1e-12);
//! assert_eq!(roots.exact.unwrap()[0].to_string(), "3");
//! ```

pub mod batch;
pub mod cardano;
pub mod chen;
pub mod decomposition;
pub mod denest;
pub mod error;
pub mod exact;
pub mod numerics;
pub mod parse;
pub mod reduction;
pub mod report;
pub mod roots;
pub mod verify;

pub use cardano::{cardano_solve, compare_methods, CardanoIntermediates, ComparisonReport};
pub use chen::{
    solve, solve_conjugate, solve_degenerate, solve_depressed, solve_equal, solve_moebius,
    solve_real_distinct, solve_unified, solve_with, Method, SolveOptions,
};
pub use decomposition::{compute_rs, discriminant, CaseTag, RsPair};
pub use denest::{denest, radical_to_cubic, DenestResult, NestedRadical};
pub use error::{Error, Result};
pub use exact::{ExactRational, ExactRoot};
pub use numerics::{ComplexValue, CubeRootBranch};
pub use parse::{parse_cubic, parse_scalar};
pub use reduction::{depress, lift_roots, DepressedCubic, GeneralCubic, Shift};
pub use report::{OutputRecord, RecordOptions};
pub use roots::{match_roots, matching_distance, RootTriple, TrigForm};
pub use verify::{brute_force_roots, trig_identity_residuals, verify_roots, VerificationReport};
