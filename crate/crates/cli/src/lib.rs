//! Declarative input format, bundled fixtures and task runner behind the
//! `catalg` command-line tool.

pub mod bundled;
pub mod report;
pub mod run;
pub mod spec;

pub use report::{Report, Status, TaskResult};
pub use run::{run, run_task};
pub use spec::{
    parse_field, parse_spec, Command, SpecError, SpecErrorKind, TaskArgs, WorkbenchSpec,
};
