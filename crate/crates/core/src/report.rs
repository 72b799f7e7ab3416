//! Law-check results and the tuple sweep engine behind every check.
//!
//! A law is a predicate over tuples of indices `(i_1, ..., i_k)` with
//! `i_j < dims[j]`. Exhaustive sweeps visit tuples in lexicographic order and
//! report the first failing tuple in that order, regardless of how the work
//! is split across threads. Sampled sweeps draw tuples from a seeded ChaCha
//! stream in fixed-size blocks so that the result depends only on the seed.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Tuple spaces up to this size are swept exhaustively in `Auto` mode.
pub const EXHAUSTIVE_LIMIT: u128 = 100_000_000;
pub const DEFAULT_SAMPLES: u64 = 1_000_000;
pub const DEFAULT_SEED: u64 = 0x5eed;

const MAX_ARITY: usize = 4;
const SAMPLE_BLOCK: u64 = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CheckMode {
    /// Exhaustive when the tuple space is at most [`EXHAUSTIVE_LIMIT`],
    /// otherwise [`DEFAULT_SAMPLES`] samples with [`DEFAULT_SEED`].
    #[default]
    Auto,
    Exhaustive,
    Sampled {
        samples: u64,
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepKind {
    Exhaustive,
    Sampled,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub law: String,
    pub holds: bool,
    pub mode: SweepKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub checked: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<String>>,
    /// Element indices of the counterexample, for re-checking in code.
    #[serde(skip)]
    pub witness: Option<Vec<usize>>,
}

impl VerificationReport {
    /// A report for a claim decided by a single computation.
    pub fn claim(law: impl Into<String>, holds: bool, counterexample: Option<Vec<String>>) -> Self {
        Self {
            law: law.into(),
            holds,
            mode: SweepKind::Exhaustive,
            seed: None,
            checked: 1,
            counterexample: if holds {
                None
            } else {
                counterexample.or_else(|| Some(vec![]))
            },
            witness: None,
        }
    }

    /// Sequential conjunction of sub-checks under one law name. The first
    /// failing part supplies the counterexample; later parts count as unchecked.
    pub fn all_of(law: impl Into<String>, parts: Vec<VerificationReport>) -> Self {
        let mut out = Self {
            law: law.into(),
            holds: true,
            mode: SweepKind::Exhaustive,
            seed: None,
            checked: 0,
            counterexample: None,
            witness: None,
        };
        for part in parts {
            out.checked += part.checked;
            if part.mode == SweepKind::Sampled {
                out.mode = SweepKind::Sampled;
                out.seed = part.seed;
            }
            if !part.holds {
                out.holds = false;
                out.counterexample = part.counterexample;
                out.witness = part.witness;
                break;
            }
        }
        out
    }

    pub fn renamed(mut self, law: impl Into<String>) -> Self {
        self.law = law.into();
        self
    }
}

#[inline]
fn decode(mut linear: u128, dims: &[usize], out: &mut [usize; MAX_ARITY]) {
    for (slot, &d) in out[..dims.len()].iter_mut().zip(dims).rev() {
        *slot = (linear % d as u128) as usize;
        linear /= d as u128;
    }
}

/// Sweeps `holds` over the index tuples described by `dims`.
///
/// `render` turns a failing tuple into the counterexample strings.
pub fn check_tuples<P, R>(
    law: &str,
    dims: &[usize],
    mode: CheckMode,
    holds: P,
    render: R,
) -> VerificationReport
where
    P: Fn(&[usize]) -> bool + Sync,
    R: Fn(&[usize]) -> Vec<String>,
{
    assert!(dims.len() <= MAX_ARITY, "law arity above {MAX_ARITY}");
    let arity = dims.len();
    let space: u128 = dims.iter().map(|&d| d as u128).product();
    let (samples, seed) = match mode {
        CheckMode::Exhaustive => (None, None),
        CheckMode::Auto if space <= EXHAUSTIVE_LIMIT => (None, None),
        CheckMode::Auto => (Some(DEFAULT_SAMPLES), Some(DEFAULT_SEED)),
        CheckMode::Sampled { samples, seed } => (Some(samples), Some(seed)),
    };
    let fail = |tuple: &[usize], checked: u64| VerificationReport {
        law: law.to_string(),
        holds: false,
        mode: if seed.is_some() {
            SweepKind::Sampled
        } else {
            SweepKind::Exhaustive
        },
        seed,
        checked,
        counterexample: Some(render(tuple)),
        witness: Some(tuple.to_vec()),
    };
    let pass = |checked: u64| VerificationReport {
        law: law.to_string(),
        holds: true,
        mode: if seed.is_some() {
            SweepKind::Sampled
        } else {
            SweepKind::Exhaustive
        },
        seed,
        checked,
        counterexample: None,
        witness: None,
    };

    match (samples, seed) {
        (Some(samples), Some(seed)) if space > 0 => {
            let blocks = samples.div_ceil(SAMPLE_BLOCK);
            let first = (0..blocks).into_par_iter().find_map_first(|block| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(block);
                let start = block * SAMPLE_BLOCK;
                let end = (start + SAMPLE_BLOCK).min(samples);
                let mut t = [0usize; MAX_ARITY];
                for k in start..end {
                    for (slot, &d) in t[..arity].iter_mut().zip(dims) {
                        *slot = rng.random_range(0..d);
                    }
                    if !holds(&t[..arity]) {
                        return Some((k, t));
                    }
                }
                None
            });
            match first {
                Some((k, t)) => fail(&t[..arity], k + 1),
                None => pass(samples),
            }
        }
        _ => {
            if space == 0 {
                return pass(0);
            }
            let first = (0..space as u64).into_par_iter().find_first(|&i| {
                let mut t = [0usize; MAX_ARITY];
                decode(i as u128, dims, &mut t);
                !holds(&t[..arity])
            });
            match first {
                Some(i) => {
                    let mut t = [0usize; MAX_ARITY];
                    decode(i as u128, dims, &mut t);
                    fail(&t[..arity], i + 1)
                }
                None => pass(space as u64),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn render(t: &[usize]) -> Vec<String> {
        t.iter().map(|i| i.to_string()).collect()
    }

    #[test]
    fn exhaustive_reports_lexicographically_first_failure() {
        let r = check_tuples(
            "sum",
            &[5, 7],
            CheckMode::Exhaustive,
            |t| t[0] + t[1] < 8,
            render,
        );
        assert!(!r.holds);
        // (2, 6) is the first pair in row-major order with sum 8
        assert_eq!(r.witness, Some(vec![2, 6]));
        assert_eq!(r.checked, 2 * 7 + 6 + 1);
        assert_eq!(r.counterexample, Some(vec!["2".into(), "6".into()]));
    }

    #[test]
    fn exhaustive_pass_counts_everything() {
        let r = check_tuples("true", &[3, 4, 5], CheckMode::Auto, |_| true, render);
        assert!(r.holds);
        assert_eq!(r.checked, 60);
        assert_eq!(r.mode, SweepKind::Exhaustive);
        assert!(r.counterexample.is_none());
    }

    #[test]
    fn empty_space_holds_vacuously() {
        let r = check_tuples("empty", &[3, 0], CheckMode::Auto, |_| false, render);
        assert!(r.holds);
        assert_eq!(r.checked, 0);
    }

    #[test]
    fn sampled_is_deterministic_per_seed() {
        let mode = CheckMode::Sampled {
            samples: 20_000,
            seed: 42,
        };
        let law = |t: &[usize]| !(t[0] == 3 && t[1] == 3 && t[2] == 3);
        let a = check_tuples("rare", &[10, 10, 10], mode, law, render);
        let b = check_tuples("rare", &[10, 10, 10], mode, law, render);
        assert_eq!(a, b);
        assert_eq!(a.seed, Some(42));
        assert_eq!(a.mode, SweepKind::Sampled);
        assert!(!a.holds, "a 1/1000 event should show up in 20000 draws");
        let c = check_tuples("all", &[10, 10, 10], mode, |_| true, render);
        assert_eq!(c.checked, 20_000);
    }

    #[test]
    fn all_of_stops_at_first_failure() {
        let ok = VerificationReport::claim("a", true, None);
        let bad = VerificationReport::claim("b", false, Some(vec!["x".into()]));
        let r = VerificationReport::all_of("both", vec![ok.clone(), bad, ok]);
        assert!(!r.holds);
        assert_eq!(r.checked, 2);
        assert_eq!(r.counterexample, Some(vec!["x".into()]));
    }

    #[test]
    fn json_shape() {
        let r = check_tuples("sum", &[2, 2], CheckMode::Exhaustive, |t| t[0] == 0, render);
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["mode"], "exhaustive");
        assert_eq!(v["holds"], false);
        assert!(v.get("seed").is_none());
        assert!(v.get("witness").is_none());
        assert_eq!(v["counterexample"], serde_json::json!(["1", "0"]));
    }
}
