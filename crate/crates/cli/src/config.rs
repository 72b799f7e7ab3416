use std::fmt;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use semigroup_forge::report::{DEFAULT_SAMPLES, DEFAULT_SEED};
use semigroup_forge::{CheckMode, ConstructionId, FamilyId};

pub const THREADS_VAR: &str = "SEMIGROUP_FORGE_THREADS";

#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<semigroup_forge::Error> for UsageError {
    fn from(e: semigroup_forge::Error) -> Self {
        UsageError(e.to_string())
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "semigroup-forge",
    version,
    about = "Build monoids of partial permutations and check the decomposition claims"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run every claim for each chain size (n ≥ 3).
    Claims {
        #[command(flatten)]
        run: RunArgs,
        /// Corrupt one output of the POI right action (self-test; must exit 1).
        #[arg(long)]
        mutate: bool,
    },
    /// Run the action axioms of one construction.
    Verify {
        #[arg(long, short)]
        construction: ConstructionId,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Family cardinalities, optionally with structural properties.
    Table {
        /// Comma-separated family tags.
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "i,poi,podi,odp,dp,poi-minus"
        )]
        families: Vec<FamilyId>,
        /// Comma-separated property columns.
        #[arg(long, value_delimiter = ',')]
        props: Vec<Property>,
        #[arg(long, default_value = "3")]
        n: NRange,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Predicates, domain, image and inverse of one element.
    Inspect {
        /// Two-row rendering such as "[1 3 / 2 1]", or "∅".
        element: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Also report membership and Green class sizes in this family.
        #[arg(long)]
        family: Option<FamilyId>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
pub struct RunArgs {
    /// Chain size `k` or inclusive range `a..b`.
    #[arg(long, default_value = "3")]
    pub n: NRange,
    /// Defaults to exhaustive for n ≤ 4 and sampled for n ≥ 5.
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
    #[arg(long)]
    pub samples: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl RunArgs {
    pub fn mode_for(&self, n: usize) -> Result<CheckMode, UsageError> {
        let tuned = self.samples.is_some() || self.seed.is_some();
        let mode = match self.mode {
            Some(m) => m,
            None if tuned || n >= 5 => ModeArg::Sampled,
            None => ModeArg::Exhaustive,
        };
        match mode {
            ModeArg::Exhaustive if tuned => Err(UsageError(
                "--samples and --seed require --mode sampled".into(),
            )),
            ModeArg::Exhaustive => Ok(CheckMode::Exhaustive),
            ModeArg::Sampled => {
                let samples = self.samples.unwrap_or(DEFAULT_SAMPLES);
                if samples == 0 {
                    return Err(UsageError("--samples must be positive".into()));
                }
                Ok(CheckMode::Sampled {
                    samples,
                    seed: self.seed.unwrap_or(DEFAULT_SEED),
                })
            }
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ModeArg {
    Exhaustive,
    Sampled,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Property {
    Inverse,
    Regular,
    Aperiodic,
    JTrivial,
}

impl Property {
    pub fn name(self) -> &'static str {
        match self {
            Property::Inverse => "inverse",
            Property::Regular => "regular",
            Property::Aperiodic => "aperiodic",
            Property::JTrivial => "j-trivial",
        }
    }
}

/// Inclusive range of chain sizes: `4`, `3..6` or `3..=6`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NRange(pub RangeInclusive<usize>);

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("bad chain size {t:?}"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let k = num(s)?;
                (k, k)
            }
        };
        if lo == 0 || lo > hi {
            return Err(format!("need 1 ≤ a ≤ b, got {s:?}"));
        }
        Ok(NRange(lo..=hi))
    }
}

/// Caps the rayon pool at `SEMIGROUP_FORGE_THREADS` when set.
pub fn init_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| format!("{THREADS_VAR} must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n_ranges() {
        assert_eq!("4".parse::<NRange>().unwrap().0, 4..=4);
        assert_eq!("3..6".parse::<NRange>().unwrap().0, 3..=6);
        assert_eq!("3..=6".parse::<NRange>().unwrap().0, 3..=6);
        assert!("0".parse::<NRange>().is_err());
        assert!("5..3".parse::<NRange>().is_err());
        assert!("x".parse::<NRange>().is_err());
    }

    fn args(mode: Option<ModeArg>, samples: Option<u64>, seed: Option<u64>) -> RunArgs {
        RunArgs {
            n: NRange(3..=3),
            mode,
            samples,
            seed,
            format: Format::Text,
            out: None,
        }
    }

    #[test]
    fn default_modes() {
        let a = args(None, None, None);
        assert_eq!(a.mode_for(4).unwrap(), CheckMode::Exhaustive);
        assert_eq!(
            a.mode_for(5).unwrap(),
            CheckMode::Sampled {
                samples: DEFAULT_SAMPLES,
                seed: DEFAULT_SEED
            }
        );
        let seeded = args(None, Some(10), Some(42));
        assert_eq!(
            seeded.mode_for(3).unwrap(),
            CheckMode::Sampled {
                samples: 10,
                seed: 42
            }
        );
        assert!(args(Some(ModeArg::Exhaustive), None, Some(1))
            .mode_for(3)
            .is_err());
        assert!(args(Some(ModeArg::Sampled), Some(0), None)
            .mode_for(3)
            .is_err());
    }
}
