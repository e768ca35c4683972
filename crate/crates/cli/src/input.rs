use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use subsample::graph_core::io::{read_edge_seq, read_label_seq, read_vertex_graph, seed_header};
use subsample::graph_core::{KeyKind, Partition};
use subsample::samplers::InputKind;
use subsample::{Error, Sample};

/// Failure of a command, carrying its exit status.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags or values, or a violated precondition. Exit 2.
    Usage(String),
    /// Unreadable, unwritable or malformed files. Exit 3.
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
        }
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    /// Maps a library error raised while reading `path`.
    pub fn in_file(path: &Path, e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::Io(_) => CliError::Io(format!("{}: {e}", path.display())),
            other => CliError::Usage(format!("{}: {other}", path.display())),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::Io(_) => CliError::Io(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub fn read_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

pub fn load_input(path: &Path, kind: InputKind) -> CliResult<Sample> {
    let text = read_text(path)?;
    let parsed = match kind {
        InputKind::Vertex => read_vertex_graph(&text).map(Sample::Vertex),
        InputKind::EdgeSeq => read_edge_seq(&text).map(Sample::EdgeSeq),
        InputKind::Sequence => read_label_seq(&text).map(Sample::Sequence),
        InputKind::Partition => read_label_seq(&text).map(|s| Sample::Partition(Partition::of_sequence(&s))),
    };
    parsed.map_err(|e| CliError::in_file(path, e))
}

/// Reads a pattern in the text format of outputs of kind `kind`.
pub fn load_pattern(path: &Path, kind: KeyKind) -> CliResult<Sample> {
    let text = read_text(path)?;
    let parsed = match kind {
        KeyKind::VertexGraph => read_vertex_graph(&text).map(Sample::Vertex),
        KeyKind::EdgeSeq => read_edge_seq(&text).map(Sample::EdgeSeq),
        KeyKind::Sequence => read_label_seq(&text).map(Sample::Sequence),
        KeyKind::Partition => {
            read_label_seq(&text).and_then(|s| Partition::from_labels(s.entries().to_vec()).map(Sample::Partition))
        }
        other => return Err(CliError::usage(format!("patterns of kind {other:?} cannot be read from a file"))),
    };
    parsed.map_err(|e| CliError::in_file(path, e))
}

/// Writes `# seed=S` and `body` to `out`, or to stdout when `out` is absent.
pub fn emit(out: Option<&PathBuf>, seed: u64, body: &str) -> CliResult<()> {
    let text = format!("{}{body}", seed_header(seed));
    match out {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|e| CliError::Io(format!("stdout: {e}")))
        }
    }
}
