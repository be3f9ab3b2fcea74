//! Claim registry, suite runner and reports on top of `braidforge-core`.

pub mod bounds;
pub mod checks;
pub mod registry;
pub mod report;
pub mod suite;
pub mod table;

pub use bounds::lower_and_upper_bound_check;
pub use checks::{Ctx, Strength, DEFAULT_SEED};
pub use registry::{registry, ClaimSpec, Suite};
pub use report::{emit_report, exit_code, Format};
pub use suite::{parse_range, run_suite, CheckResult, Status};
pub use table::{claimed, GroupFamily, Invariants, TheoremTable};
