//! Batch jobs: a `key = value` specification, a pipeline of analyses and a report.
//!
//! ```text
//! type = A2
//! kac = 1,1,1
//! analyses = all          # or a comma-separated subset; dependencies are added
//! seed = 0
//! cap_group_order = 200000
//! ```

mod report;
mod run;
mod spec;

pub use report::{Report, Section, Status, SCHEMA};
pub use run::{run, RunOptions};
pub use spec::{parse_job, Analysis, Caps, Format, JobParseError, JobSpec, MAX_ORDER};
