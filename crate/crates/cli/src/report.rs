//! Line-oriented `key = value` reports with a final summary block.

use std::fmt;
use std::time::Duration;

use indexmap::IndexMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        })
    }
}

#[derive(Clone, Debug)]
pub struct TaskResult {
    pub index: usize,
    pub command: String,
    pub arguments: Vec<(String, String)>,
    pub status: Status,
    pub metrics: IndexMap<String, String>,
    pub witnesses: Vec<String>,
    pub error: Option<String>,
    pub duration: Duration,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub tasks: Vec<TaskResult>,
}

/// Keeps a value on one line.
fn flat(s: &str) -> String {
    s.replace('\n', " | ")
}

impl Report {
    pub fn count(&self, status: Status) -> usize {
        self.tasks.iter().filter(|t| t.status == status).count()
    }

    pub fn all_pass(&self) -> bool {
        self.tasks.iter().all(|t| t.status == Status::Pass)
    }

    /// Renders the report; timing lines are left out when `timings` is false,
    /// which makes the output byte-identical across runs.
    pub fn render(&self, timings: bool) -> String {
        let mut s = String::new();
        for t in &self.tasks {
            s.push_str(&format!("[task {}]\n", t.index));
            s.push_str(&format!("command = {}\n", t.command));
            for (k, v) in &t.arguments {
                s.push_str(&format!("{k} = {v}\n"));
            }
            s.push_str(&format!("status = {}\n", t.status));
            for (k, v) in &t.metrics {
                s.push_str(&format!("{k} = {}\n", flat(v)));
            }
            for w in &t.witnesses {
                s.push_str(&format!("witness = {}\n", flat(w)));
            }
            if let Some(e) = &t.error {
                s.push_str(&format!("error = {}\n", flat(e)));
            }
            if timings {
                s.push_str(&format!(
                    "duration_ms = {:.3}\n",
                    t.duration.as_secs_f64() * 1e3
                ));
            }
            s.push('\n');
        }
        s.push_str(&self.summary());
        s
    }

    /// The machine-readable summary block; it never contains timings.
    pub fn summary(&self) -> String {
        let failed: Vec<String> = self
            .tasks
            .iter()
            .filter(|t| t.status != Status::Pass)
            .map(|t| t.index.to_string())
            .collect();
        format!(
            "[summary]\ntasks = {}\npass = {}\nfail = {}\nerror = {}\nnot_passing = {}\nresult = {}\n",
            self.tasks.len(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Error),
            if failed.is_empty() { "-".to_string() } else { failed.join(",") },
            if self.all_pass() { "pass" } else { "fail" },
        )
    }
}
