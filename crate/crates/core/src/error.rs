use thiserror::Error;

/// Errors raised across the toolkit.
///
/// The variants map onto the CLI exit codes: `Capacity` is exit 3, the
/// others are usage/input errors.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("capacity exceeded: {what} is {actual}, cap is {cap}")]
    Capacity {
        what: String,
        actual: String,
        cap: String,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error at {path}: {kind}: {message}")]
    Parse {
        kind: ParseErrorKind,
        path: String,
        message: String,
    },

    #[error("corrupt character table: {0}")]
    TableCorrupt(String),
}

/// Distinct rejection reasons for group and table files.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    Schema,
    NotBijection,
    SizeSum,
    Orthogonality,
    DegreeDivisibility,
}

impl std::fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ParseErrorKind::Syntax => "syntax",
            ParseErrorKind::Schema => "schema",
            ParseErrorKind::NotBijection => "not-a-bijection",
            ParseErrorKind::SizeSum => "size-sum",
            ParseErrorKind::Orthogonality => "orthogonality",
            ParseErrorKind::DegreeDivisibility => "degree-divisibility",
        };
        f.write_str(s)
    }
}

impl Error {
    pub(crate) fn capacity(what: impl Into<String>, actual: impl ToString, cap: impl ToString) -> Self {
        Error::Capacity {
            what: what.into(),
            actual: actual.to_string(),
            cap: cap.to_string(),
        }
    }

    pub(crate) fn parse(kind: ParseErrorKind, path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            kind,
            path: path.into(),
            message: message.into(),
        }
    }

    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
