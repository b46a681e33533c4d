//! Job parsing, dispatch and report rendering for the `branchlaw` binary.

pub mod commands;
pub mod job;
pub mod report;
pub mod verify;

pub use commands::run_job;
pub use job::{parse_job, Command, JobSpec, OutputFormat, ParseError, Value};
pub use report::{job_from_report, Report, Row, Status};

/// Exit code for usage and engine errors.
pub const EXIT_USAGE: i32 = 2;

/// Renders a report in the job's output format.
pub fn render(report: &Report) -> String {
    match report.job.output_format {
        OutputFormat::Table => report.render_table(),
        OutputFormat::Machine => report.render_machine(),
    }
}
