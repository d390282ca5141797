//! Run configuration: guards, parallelism and output format.

use crcodes::Guards;

use crate::error::{CliError, CliResult};

/// Environment variables that override the default guards, in the order
/// (variable, setter).
pub const GUARD_VARS: &[(&str, fn(&mut Guards, u64))] = &[
    ("CRCODES_MAX_SYNDROMES", |g, v| g.max_syndromes = v),
    ("CRCODES_MAX_VECTORS", |g, v| g.max_vectors = v),
    ("CRCODES_MAX_CODEWORDS", |g, v| g.max_codewords = v),
    ("CRCODES_MAX_COUNT_OPS", |g, v| g.max_count_ops = v),
    ("CRCODES_MAX_QUADRATIC_SYNDROMES", |g, v| g.max_quadratic_syndromes = v),
    ("CRCODES_MAX_PAIR_OPS", |g, v| g.max_pair_ops = v),
];

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub guards: Guards,
    /// Worker threads for regression; `None` lets rayon decide.
    pub threads: Option<usize>,
    pub json: bool,
}

impl RunConfig {
    /// Defaults overridden by `CRCODES_MAX_*` variables from `lookup`.
    pub fn from_lookup(lookup: impl Fn(&str) -> Option<String>) -> CliResult<Self> {
        let mut guards = Guards::default();
        for (name, set) in GUARD_VARS {
            if let Some(raw) = lookup(name) {
                let v: u64 = raw
                    .trim()
                    .parse()
                    .map_err(|_| CliError::Usage(format!("{name}={raw} is not a positive integer")))?;
                if v == 0 {
                    return Err(CliError::Usage(format!("{name} must be positive")));
                }
                set(&mut guards, v);
            }
        }
        Ok(RunConfig { guards, threads: None, json: false })
    }

    pub fn from_env() -> CliResult<Self> {
        Self::from_lookup(|k| std::env::var(k).ok())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn env_overrides() {
        let c = RunConfig::from_lookup(|k| (k == "CRCODES_MAX_SYNDROMES").then(|| "1024".to_string())).unwrap();
        assert_eq!(c.guards.max_syndromes, 1024);
        assert_eq!(c.guards.max_vectors, Guards::default().max_vectors);
        assert!(RunConfig::from_lookup(|_| Some("x".into())).is_err());
        assert!(RunConfig::from_lookup(|_| Some("0".into())).is_err());
    }
}
