//! Exact computations in the positive part `U^+` of the quantized enveloping
//! algebra of type `A_n`.
//!
//! Elements are word-model sums ([`WordElt`]). Nothing is ever rewritten by
//! the Serre relations; equality, zero tests and coordinates all go through
//! the pairing with `U^-`, whose radical on the free algebra is exactly the
//! Serre ideal.

mod dual;
mod element;
mod flag;
mod pairing;
mod pbw;
mod strings;
mod table;

pub use dual::PbwVector;
pub use element::WordElt;
pub use flag::{d_form, flag_exponent};
pub use pairing::WeightSpace;
pub use pbw::{divided_power, exponents_of_weight};
pub use table::{psi_product, TransitionTable};

use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, RwLock};

use crate::coeff::LaurentPoly;
use crate::error::{Error, Result};
use crate::weyl::{Root, Word};

/// Size limits. Tables above the limits are refused, never approximated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Caps {
    pub max_rank: usize,
    /// `max_tr[r - 1]` bounds the weight height of tables at rank `r`.
    pub max_tr: Vec<usize>,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_rank: 4,
            max_tr: vec![12, 8, 6, 4],
        }
    }
}

impl Caps {
    pub fn tr_cap(&self, rank: usize) -> usize {
        self.max_tr.get(rank.wrapping_sub(1)).copied().unwrap_or(0)
    }
}

/// Persistent backing for transition tables.
pub trait TableStore: Send + Sync {
    fn load(&self, word: &Word, weight: &Root) -> Option<TransitionTable>;
    fn store(&self, table: &TransitionTable);
}

#[derive(Default, Debug)]
pub(crate) struct Stats {
    pub built: AtomicUsize,
    pub loaded: AtomicUsize,
}

type RowKey = (usize, Vec<u8>);

/// Computation context: caps plus memo tables shared by all operations.
///
/// All caches are append-only and safe to share across threads.
#[derive(Default)]
pub struct Algebra {
    caps: Caps,
    spaces: RwLock<HashMap<Root, Arc<WeightSpace>>>,
    rows: RwLock<HashMap<RowKey, Arc<Vec<LaurentPoly>>>>,
    root_vectors: RwLock<HashMap<Word, Arc<Vec<WordElt>>>>,
    tables: RwLock<HashMap<(Word, Root), Arc<TransitionTable>>>,
    store: Option<Box<dyn TableStore>>,
    stats: Stats,
}

impl Algebra {
    pub fn new(caps: Caps) -> Self {
        Algebra {
            caps,
            ..Default::default()
        }
    }

    pub fn with_store(caps: Caps, store: Box<dyn TableStore>) -> Self {
        Algebra {
            caps,
            store: Some(store),
            ..Default::default()
        }
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    /// Tables computed from scratch so far.
    pub fn tables_built(&self) -> usize {
        self.stats.built.load(Ordering::Relaxed)
    }

    /// Tables taken from the attached store so far.
    pub fn tables_loaded(&self) -> usize {
        self.stats.loaded.load(Ordering::Relaxed)
    }

    pub(crate) fn check_rank(&self, rank: usize) -> Result<()> {
        if rank == 0 || rank > self.caps.max_rank {
            return Err(Error::Capacity(format!(
                "rank {rank} outside 1..={}",
                self.caps.max_rank
            )));
        }
        Ok(())
    }

    pub(crate) fn check_tr(&self, rank: usize, weight: &Root) -> Result<()> {
        let cap = self.caps.tr_cap(rank);
        if weight.height() > cap as i64 {
            return Err(Error::Capacity(format!(
                "weight {weight:?} has height {} above the rank-{rank} cap {cap}",
                weight.height()
            )));
        }
        Ok(())
    }

    /// `B(m)` for every exponent of the weight: the canonical basis table.
    pub fn canonical_basis(&self, w: &Word, weight: &Root) -> Result<Arc<TransitionTable>> {
        self.table(w, weight)
    }
}

/// All weights `sum_i c_i alpha_i` with `c_i >= 0` and `0 < sum c_i <= bound`,
/// ordered by height and then lexicographically.
pub fn weights_up_to(rank: usize, bound: usize) -> Vec<Root> {
    let mut out = vec![vec![]];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                let used: i64 = v.iter().sum();
                (0..=bound as i64 - used).map(move |c| {
                    let mut v = v.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    let mut roots: Vec<Root> = out
        .into_iter()
        .map(Root)
        .filter(|r| r.height() > 0)
        .collect();
    roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
    roots
}
