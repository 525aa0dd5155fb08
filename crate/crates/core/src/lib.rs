//! Tropical optimization of span objectives.
//!
//! The crate maximizes `q⁻Bx(Ax)⁻p` over regular vectors of an idempotent
//! semifield in closed form, returning the optimum together with every
//! maximizer, and specializes the result to project scheduling: maximizing
//! the deviation of completion or initiation times under start-finish and
//! start-start precedence lags in max-plus algebra.
//!
//! ```
//! use maxspan::{scheduling, Matrix, MaxPlus, Vector};
//!
//! let a = Matrix::from_ints(&[&[4, 1, 1], &[2, 2, 0], &[0, 1, 3]]).unwrap();
//! let report = scheduling::max_completion_spread(&a).unwrap();
//! assert_eq!(report.delta, MaxPlus::finite(4));
//!
//! let latest = scheduling::latest_schedule(&report, None, Some(&a), MaxPlus::ONE).unwrap();
//! assert_eq!(latest[0].initiation, Vector::from_ints(&[0, -1, -3]).unwrap());
//! ```

pub mod error;
pub mod matvec;
pub mod optimizer;
pub mod project_file;
pub mod scheduling;
pub mod semiring;
pub mod solvers;
pub mod verification;

pub use error::{Error, Result};
pub use matvec::{Matrix, Vector};
pub use optimizer::{
    solve_constrained, solve_norm_form, solve_unconstrained, ConstrainedReport, IndexPair, ProblemInstance,
    SolutionReport,
};
pub use semiring::{MaxPlus, MaxTimes, MinPlus, Semifield};
pub use solvers::{solve_scalar_equation, solve_subeigen, BoxFamily, SubeigenGenerator};
