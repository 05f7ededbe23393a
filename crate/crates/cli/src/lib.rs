//! Problem-file front end for the `ore-vmpum` kernel representation engine.

pub mod problem;
pub mod run;

pub use problem::{parse_problem, Options, ProblemFile};
pub use run::{render_json, render_text, run, ExitStatus, Flags, Outcome, OutputFormat, Report};
