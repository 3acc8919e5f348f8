//! Command-line layer over `gins-core`: ideal files, result records,
//! reproduction of worked examples and seeded verification campaigns.

pub mod commands;
pub mod parse;
pub mod record;
pub mod reproduce;
pub mod verify;

use gins_core::{Coeff, TermOrder, Tiebreak};
use thiserror::Error;

pub use commands::{run, Cli};
pub use parse::{format_ideal, format_polynomial, parse_ideal, IdealFile, ParseError};
pub use record::Record;

/// Environment variable supplying the default seed.
pub const SEED_ENV: &str = "GINS_SEED";

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] gins_core::Error),
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 0 success, 2 mismatch, 3 genericity, 4 parse; everything else 1.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(gins_core::Error::GenericityNotReached { .. } | gins_core::Error::KoszulGenericity(..)) => 3,
            CliError::Parse { .. } => 4,
            _ => 1,
        }
    }
}

pub const EXIT_MISMATCH: i32 = 2;

/// `lex`, `revlex` or `weight:w1,...,wn` (revlex tiebreak).
pub fn parse_order(s: &str, n: usize) -> Result<TermOrder, CliError> {
    match s {
        "lex" => Ok(TermOrder::Lex),
        "revlex" => Ok(TermOrder::RevLex),
        _ => {
            let body = s.strip_prefix("weight:").ok_or_else(|| {
                CliError::Usage(format!("unknown order {s:?}; expected lex, revlex or weight:w1,...,wn"))
            })?;
            let w: Vec<Coeff> = body
                .split(',')
                .map(|t| t.trim().parse::<Coeff>().map_err(|_| CliError::Usage(format!("bad weight entry {t:?}"))))
                .collect::<Result<_, _>>()?;
            if w.len() != n {
                return Err(CliError::Usage(format!("weight has {} entries but the ring has {n} variables", w.len())));
            }
            Ok(TermOrder::weight(w, Tiebreak::RevLex)?)
        }
    }
}
