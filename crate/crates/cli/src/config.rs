use std::path::PathBuf;
use std::str::FromStr;

use qcanon_core::algebra::Caps;
use qcanon_core::weyl::{adapted_word, is_adapted, reduced_words_w0, Quiver, Word};
use qcanon_core::{Error, Result};
use serde::Serialize;

/// Default number of sampled cases per suite at rank 3 and above.
pub const DEFAULT_SAMPLES: usize = 1000;
pub const DEFAULT_SEED: u64 = 20_240_601;

/// Which reduced words a command works over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordSel {
    /// Every reduced word for `w0` (every adapted word, where only those make sense).
    All,
    /// One explicit reduced word.
    Explicit(Vec<u8>),
    /// The adapted word of a quiver orientation.
    Adapted(Quiver),
}

impl FromStr for WordSel {
    type Err = Error;

    /// `all`, comma-separated letters such as `1,2,1`, or `adapted:EDGELIST`
    /// with one `lr`/`rl` token per edge of the Dynkin diagram.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "all" {
            return Ok(WordSel::All);
        }
        if let Some(edges) = s.strip_prefix("adapted:") {
            return Ok(WordSel::Adapted(edges.parse()?));
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u8>()
                    .map_err(|_| Error::Precondition(format!("bad letter {t:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(WordSel::Explicit)
    }
}

impl Serialize for WordSel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            WordSel::All => s.serialize_str("all"),
            WordSel::Explicit(l) => {
                let t: Vec<String> = l.iter().map(|a| a.to_string()).collect();
                s.serialize_str(&t.join(","))
            }
            WordSel::Adapted(q) => s.serialize_str(&format!("adapted:{q:?}")),
        }
    }
}

/// Settings shared by all commands.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub rank: usize,
    /// Largest weight height `tr` considered.
    pub bound: usize,
    pub word: WordSel,
    #[serde(skip)]
    pub cache_dir: Option<PathBuf>,
    #[serde(skip)]
    pub report_path: Option<PathBuf>,
    pub seed: u64,
    /// Cases per sampled suite; `None` enumerates everything.
    pub samples: Option<usize>,
}

impl RunConfig {
    /// Defaults for one rank: the largest bound the caps allow, every word,
    /// exhaustive below rank 3 and [`DEFAULT_SAMPLES`] cases from rank 3 on.
    pub fn new(rank: usize) -> Self {
        RunConfig {
            rank,
            bound: Caps::default().tr_cap(rank),
            word: WordSel::All,
            cache_dir: None,
            report_path: None,
            seed: DEFAULT_SEED,
            samples: if rank >= 3 {
                Some(DEFAULT_SAMPLES)
            } else {
                None
            },
        }
    }

    /// Rejects ranks and bounds outside the caps.
    pub fn validate(&self, caps: &Caps) -> Result<()> {
        if self.rank == 0 || self.rank > caps.max_rank {
            return Err(Error::Capacity(format!(
                "rank {} outside 1..={}",
                self.rank, caps.max_rank
            )));
        }
        let cap = caps.tr_cap(self.rank);
        if self.bound > cap {
            return Err(Error::Capacity(format!(
                "bound {} above the rank-{} cap {cap}",
                self.bound, self.rank
            )));
        }
        self.words().map(|_| ())
    }

    /// The selected reduced words, sorted.
    pub fn words(&self) -> Result<Vec<Word>> {
        match &self.word {
            WordSel::All => Ok(reduced_words_w0(self.rank)?.to_vec()),
            WordSel::Explicit(l) => Ok(vec![Word::w0(self.rank, l.clone())?]),
            WordSel::Adapted(q) => {
                if q.rank() != self.rank {
                    return Err(Error::RankMismatch(self.rank, q.rank()));
                }
                Ok(vec![adapted_word(q)])
            }
        }
    }

    /// The selected words that are adapted to some quiver; with `All`, every adapted word.
    pub fn adapted_words(&self) -> Result<Vec<Word>> {
        let ws = self.words()?;
        let adapted: Vec<Word> = ws.into_iter().filter(is_adapted).collect();
        if adapted.is_empty() {
            return Err(Error::Precondition("no adapted word selected".into()));
        }
        Ok(adapted)
    }

    pub fn exhaustive(&self) -> bool {
        self.samples.is_none()
    }
}
