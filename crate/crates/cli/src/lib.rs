//! Library face of the CLI: job parsing, command dispatch, and output
//! rendering, shared between the binary and the golden-file tests.

pub mod job;
pub mod output;
pub mod run;

pub use job::{parse_job, Job, JobError};
pub use output::Format;
pub use run::{execute, run_job, RunOutput};
