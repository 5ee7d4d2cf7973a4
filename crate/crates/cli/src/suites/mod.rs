//! Verification suites. Each one enumerates its cases in a fixed order,
//! evaluates them (in parallel where possible) and collects the results in
//! enumeration order, so the report does not depend on scheduling.

mod analogue;
mod fan;
mod graded;
mod main_thm;
mod pbwstring;

use std::fmt;
use std::str::FromStr;

use qcanon_core::algebra::{exponents_of_weight, weights_up_to, Algebra};
use qcanon_core::tropical::ParamVector;
use qcanon_core::weyl::Word;
use qcanon_core::{Error, Result};
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config::RunConfig;
use crate::report::Report;

pub use fan::tropical_invariants;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Analogue,
    PbwString,
    Fan,
    Graded,
    Main,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Analogue,
        Suite::PbwString,
        Suite::Fan,
        Suite::Graded,
        Suite::Main,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Analogue => "analogue",
            Suite::PbwString => "pbwstring",
            Suite::Fan => "fan",
            Suite::Graded => "graded",
            Suite::Main => "main",
        }
    }

    pub fn run(self, alg: &Algebra, cfg: &RunConfig) -> Result<Report> {
        cfg.validate(alg.caps())?;
        let mut report = Report::new(self.name(), cfg);
        if cfg.exhaustive() {
            report.note("every case within the bound is enumerated");
        } else {
            report.note(format!(
                "cases are sampled without replacement, at most {} from the full enumeration",
                cfg.samples.unwrap_or(0)
            ));
        }
        match self {
            Suite::Analogue => analogue::run(alg, cfg, &mut report)?,
            Suite::PbwString => pbwstring::run(alg, cfg, &mut report)?,
            Suite::Fan => fan::run(alg, cfg, &mut report)?,
            Suite::Graded => graded::run(alg, cfg, &mut report)?,
            Suite::Main => main_thm::run(alg, cfg, &mut report)?,
        }
        Ok(report)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown suite {s:?}")))
    }
}

/// Every exponent over `w` with `tr <= bound`, by weight height and then lexicographically.
pub(crate) fn exponents_up_to(w: &Word, bound: usize) -> Result<Vec<ParamVector>> {
    let roots = w.roots()?;
    Ok(weights_up_to(w.rank(), bound)
        .iter()
        .flat_map(|wt| exponents_of_weight(&roots, wt))
        .collect())
}

/// `tr` of an exponent: the height of its weight.
pub(crate) fn tr_of(w: &Word, m: &ParamVector) -> Result<usize> {
    Ok(m.weight(&w.roots()?).height() as usize)
}

/// All items when exhaustive; otherwise a seeded sample without replacement,
/// kept in enumeration order. `salt` separates the streams of one run.
pub(crate) fn select<T>(items: Vec<T>, cfg: &RunConfig, salt: u64) -> Vec<T> {
    match cfg.samples {
        Some(k) if k < items.len() => {
            let mut rng =
                ChaCha8Rng::seed_from_u64(cfg.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15));
            let mut idx = sample(&mut rng, items.len(), k).into_vec();
            idx.sort_unstable();
            let mut keep = vec![false; items.len()];
            for i in idx {
                keep[i] = true;
            }
            items
                .into_iter()
                .zip(keep)
                .filter_map(|(x, k)| k.then_some(x))
                .collect()
        }
        _ => items,
    }
}

pub(crate) fn letters(w: &Word) -> Vec<u8> {
    w.letters().to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampling_is_seeded_and_ordered() {
        let mut cfg = RunConfig::new(3);
        cfg.samples = Some(5);
        let a = select((0..100).collect::<Vec<_>>(), &cfg, 1);
        assert_eq!(a, select((0..100).collect::<Vec<_>>(), &cfg, 1));
        assert_eq!(a.len(), 5);
        assert!(a.windows(2).all(|p| p[0] < p[1]));
        assert_ne!(a, select((0..100).collect::<Vec<_>>(), &cfg, 2));
        cfg.samples = None;
        assert_eq!(select(vec![1, 2, 3], &cfg, 1), vec![1, 2, 3]);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
