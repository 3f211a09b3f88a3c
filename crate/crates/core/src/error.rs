use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("unknown environment id `{0}` (expected toy, gridworld20 or cartpole)")]
    UnknownEnv(String),

    #[error("unknown advice id `{0}`")]
    UnknownAdvice(String),

    #[error("unknown shaping mode `{0}` (expected none|static_pbrs|dpba|corrected_dpba|pies)")]
    UnknownMode(String),

    #[error("advice `{advice}` does not apply to environment `{env}`")]
    AdviceMismatch { advice: String, env: String },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("goal is unreachable from the start cell")]
    Unreachable,

    #[error("cannot step from a terminal state")]
    TerminalStep,

    #[error("action {action} out of range for {num_actions} actions")]
    InvalidAction { action: usize, num_actions: usize },

    #[error("state has {got} dimensions, tile coder expects {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid tile coder: {0}")]
    InvalidTileCoder(String),

    #[error("empty action set")]
    EmptyActions,

    #[error("non-finite value encountered: {0}")]
    NonFinite(&'static str),

    #[error("invalid MDP: {0}")]
    InvalidMdp(String),

    #[error("value iteration did not converge within {0} sweeps")]
    NoConvergence(usize),

    #[error("potential must be zero at terminal state {0}")]
    TerminalPotential(usize),

    #[error("invalid config: {0}")]
    Config(String),

    #[error("nothing to plot")]
    EmptyPlot,

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    Toml {
        path: PathBuf,
        #[source]
        source: toml::de::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
