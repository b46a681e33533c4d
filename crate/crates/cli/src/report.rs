//! Report rows and the two renderings. The machine format is documented in
//! `docs/machine-format.md`.

use std::fmt::Write;

use crate::job::{parse_job, Command, JobSpec, ParseError};

pub const SCHEMA: &str = "branchlaw-report/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// A computed value contradicts a check; exit code 1.
    Counterexample,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Counterexample => "counterexample",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Counterexample => 1,
        }
    }
}

/// One computed quantity. `rule` names the formula or check that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub quantity: String,
    pub value: String,
    pub rule: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub job: JobSpec,
    pub rows: Vec<Row>,
    pub status: Status,
}

impl Report {
    pub fn new(job: JobSpec) -> Self {
        Report { job, rows: Vec::new(), status: Status::Ok }
    }

    pub fn row(&mut self, quantity: impl Into<String>, value: impl ToString, rule: &'static str) {
        let value = value.to_string();
        debug_assert!(!value.contains('\n'));
        self.rows.push(Row { quantity: quantity.into(), value, rule });
    }

    /// Records a pass/fail check; a failure turns the report into a counterexample.
    pub fn check(&mut self, quantity: impl Into<String>, ok: bool, rule: &'static str) {
        self.row(quantity, if ok { "pass" } else { "fail" }, rule);
        if !ok {
            self.status = Status::Counterexample;
        }
    }

    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    pub fn render_machine(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "schema={SCHEMA}");
        for (k, v) in self.job.echo() {
            if k == "command" {
                let _ = writeln!(out, "command={v}");
            } else {
                let _ = writeln!(out, "input.{k}={v}");
            }
        }
        let _ = writeln!(out, "row.count={}", self.rows.len());
        for (i, r) in self.rows.iter().enumerate() {
            let _ = writeln!(out, "row.{i}.quantity={}", r.quantity);
            let _ = writeln!(out, "row.{i}.value={}", r.value);
            let _ = writeln!(out, "row.{i}.rule={}", r.rule);
        }
        let _ = writeln!(out, "status={}", self.status.name());
        let _ = writeln!(out, "exit_code={}", self.exit_code());
        out
    }

    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let inputs: Vec<String> = self
            .job
            .echo()
            .into_iter()
            .filter(|(k, _)| k != "command" && k != "format")
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        if inputs.is_empty() {
            let _ = writeln!(out, "{}", self.job.command);
        } else {
            let _ = writeln!(out, "{}  {}", self.job.command, inputs.join(" "));
        }
        let headers = ["quantity", "value", "rule"];
        let mut widths = headers.map(str::len);
        for r in &self.rows {
            widths[0] = widths[0].max(r.quantity.chars().count());
            widths[1] = widths[1].max(r.value.chars().count());
            widths[2] = widths[2].max(r.rule.len());
        }
        let line = |out: &mut String, cells: [&str; 3]| {
            let _ = writeln!(
                out,
                "  {:<w0$}  {:<w1$}  {}",
                cells[0],
                cells[1],
                cells[2],
                w0 = widths[0],
                w1 = widths[1]
            );
        };
        line(&mut out, headers);
        let rule: [String; 3] = widths.map(|w| "-".repeat(w));
        line(&mut out, [&rule[0], &rule[1], &rule[2]]);
        for r in &self.rows {
            line(&mut out, [&r.quantity, &r.value, r.rule]);
        }
        let _ = writeln!(out, "status: {}", self.status.name());
        out
    }
}

/// Recovers the job from a machine report via its `command=` and `input.*` lines.
pub fn job_from_report(text: &str) -> Result<JobSpec, ParseError> {
    let mut doc = String::new();
    for line in text.lines() {
        if let Some(rest) = line.strip_prefix("input.") {
            doc.push_str(rest);
            doc.push('\n');
        } else if line.starts_with("command=") {
            doc.push_str(line);
            doc.push('\n');
        }
    }
    parse_job(&doc)
}

/// Looks up `key` in a machine report.
pub fn report_field<'a>(text: &'a str, key: &str) -> Option<&'a str> {
    text.lines().find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix('=')))
}

pub fn report_command(text: &str) -> Option<Command> {
    report_field(text, "command").and_then(Command::from_name)
}
