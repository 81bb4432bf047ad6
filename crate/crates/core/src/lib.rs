//! Equitable list coloring of complete bipartite graphs `K_{n,m}`.
//!
//! * [`types`] and [`check`]: k-assignments, colorings and the definitional
//!   checker for equitable L-colorings.
//! * [`criteria`]: exact arithmetic criteria, a verdict classifier and
//!   per-k spectra.
//! * [`colorer`]: constructive colorings whenever the criteria promise one.
//! * [`search`] and [`oracle`]: complete backtracking search and a full
//!   decision procedure by canonical enumeration of k-assignments.
//! * [`cli`]: the `equichoose` command line.
//!
//! With the default `parallel` feature, spectra and oracle enumeration run
//! on rayon; without it the same code runs sequentially.

pub mod check;
pub mod cli;
pub mod colorer;
pub mod criteria;
pub mod error;
pub mod oracle;
pub mod par;
pub mod search;
pub mod types;

pub use check::{check_equitable, CheckReport, Violation};
pub use criteria::{classify, spectrum, Rule, SpectrumReport, Status, Verdict};
pub use error::{ColorerError, Contradiction, ModelError, OracleError, StructuralError};
pub use oracle::{badk_counterexample, decide_choosable, DecideConfig, OracleStatus, OracleVerdict};
pub use par::Parallelism;
pub use search::find_equitable_coloring;
pub use types::{equity_bound, Color, Coloring, EquityBound, Instance, KAssignment, Side, Vertex};
