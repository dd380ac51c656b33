//! Command-line front end: the braiding-count table, admissible index
//! values, graph screens, doubles and verdicts in pretty, JSON or TSV form.
//!
//! Exit status is 0 on success, 1 when a command's own assertion fails,
//! 2 on a usage or parse error and 3 when a data file is missing.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use serde::Serialize;

mod commands;
pub mod table1;
pub mod verify;

/// Environment variable naming the data directory. `--data-dir` wins.
pub const DATA_ENV: &str = "ADE_FUSION_DATA";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Json,
    Tsv,
}

#[derive(Debug, Parser)]
#[command(
    name = "ade-fusion",
    version,
    about = "Braiding counts, index values and screens for A-D-E subfactor systems"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "pretty")]
    pub format: Format,
    /// Directory with e6_double.json, e8_double.json and kl_table.json,
    /// replacing the bundled copies.
    #[arg(long, global = true, env = DATA_ENV)]
    pub data_dir: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Braiding counts by diagram class; fails on any mismatch.
    Table1,
    /// Admissible index values up to a bound.
    IndexValues {
        /// Upper bound, e.g. 4.8, 9/2 or 3+sqrt(3). Bounds above 3+sqrt(3)
        /// are lowered to it.
        #[arg(long, default_value = "3+sqrt(3)")]
        max: String,
    },
    /// Pendant and triple-point screens of a graph.
    GraphCheck {
        /// A file in the graph text format, or a builtin: A2..A30, D4..D30,
        /// E6, E7, E8, Ainf, haagerup:<name> or haagerup:*.
        target: String,
        /// Window depth for Ainf.
        #[arg(long, default_value_t = ade_fusion::graph::DEFAULT_AINF_DEPTH)]
        depth: usize,
    },
    /// Embeddings of the even part into its double.
    Braidings { diagram: String },
    /// Objects, dimensions and restriction edges of a double.
    DoubleShow { diagram: String },
    /// Admissibility verdict with its chain of reasons.
    Classify { diagram: String },
    /// Runs the invariant suite; fails if any check fails.
    Verify,
}

/// Why a command did not complete.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    MissingData(PathBuf),
    Other(String),
}

impl From<ade_fusion::Error> for Failure {
    fn from(e: ade_fusion::Error) -> Self {
        use ade_fusion::Error as E;
        match e {
            E::MissingData { path } => Failure::MissingData(path),
            E::InvalidArgument(_) | E::UnknownName(_) => Failure::Usage(e.to_string()),
            other => Failure::Other(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Other(format!("write failed: {e}"))
    }
}

pub type CmdResult = Result<bool, Failure>;

/// Shared state handed to every command.
pub struct Ctx<'a> {
    pub format: Format,
    pub data_dir: Option<&'a Path>,
    pub out: &'a mut dyn Write,
    pub err: &'a mut dyn Write,
}

impl Ctx<'_> {
    /// Writes JSON through a `Value`, so keys come out sorted and the text
    /// is stable under parse and re-serialization.
    pub fn json<T: Serialize>(&mut self, value: &T) -> Result<(), Failure> {
        let v = serde_json::to_value(value).map_err(|e| Failure::Other(e.to_string()))?;
        let text = serde_json::to_string_pretty(&v).map_err(|e| Failure::Other(e.to_string()))?;
        writeln!(self.out, "{text}")?;
        Ok(())
    }
}

/// Parses `argv` (program name first), runs the command and returns the
/// exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let mut ctx = Ctx { format: cli.format, data_dir: cli.data_dir.as_deref(), out, err };
    let result = match &cli.command {
        Command::Table1 => table1::run(&mut ctx),
        Command::IndexValues { max } => commands::index_values(&mut ctx, max),
        Command::GraphCheck { target, depth } => commands::graph_check(&mut ctx, target, *depth),
        Command::Braidings { diagram } => commands::braidings(&mut ctx, diagram),
        Command::DoubleShow { diagram } => commands::double_show(&mut ctx, diagram),
        Command::Classify { diagram } => commands::classify(&mut ctx, diagram),
        Command::Verify => verify::run(&mut ctx),
    };
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Usage(msg)) => {
            let usage = Cli::command().render_usage();
            let _ = writeln!(ctx.err, "error: {msg}\n\n{usage}");
            2
        }
        Err(Failure::MissingData(path)) => {
            let _ = writeln!(ctx.err, "error: data file {} not found", path.display());
            3
        }
        Err(Failure::Other(msg)) => {
            let _ = writeln!(ctx.err, "error: {msg}");
            1
        }
    }
}

/// Parses a diagram name, reporting failures as usage errors.
pub(crate) fn parse_diagram(text: &str) -> Result<ade_fusion::graph::Diagram, Failure> {
    text.parse().map_err(Failure::from)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn library_errors_map_to_exit_classes() {
        let missing = ade_fusion::Error::MissingData { path: "x.json".into() };
        assert!(matches!(Failure::from(missing), Failure::MissingData(p) if p == Path::new("x.json")));
        let unknown = ade_fusion::Error::UnknownName("Q7".into());
        assert!(matches!(Failure::from(unknown), Failure::Usage(_)));
        let broken = ade_fusion::Error::Double("bad".into());
        assert!(matches!(Failure::from(broken), Failure::Other(_)));
    }

    #[test]
    fn unknown_verbs_are_rejected_before_running() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(run(["ade-fusion", "tabel1"], &mut out, &mut err), 2);
        assert!(out.is_empty());
    }
}
