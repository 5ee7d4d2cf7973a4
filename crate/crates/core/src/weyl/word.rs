use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Serialize, Serializer};

use super::Root;
use crate::error::{Error, Result};

/// Largest rank for which `R(w0)` is enumerated by default (A4 has 768 words).
pub const DEFAULT_RANK_CAP: usize = 4;

/// Word in the simple reflections `s_1, ..., s_n` of type `A_n`.
///
/// Letters are 1-based. Ordering is lexicographic in the letters.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<u8>,
    rank: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BraidMove {
    /// `(i, j) -> (j, i)` with `|i - j| >= 2`.
    #[serde(rename = "2-move")]
    Commute,
    /// `(i, j, i) -> (j, i, j)` with `|i - j| = 1`.
    #[serde(rename = "3-move")]
    Braid,
}

/// `N = n(n+1)/2`, the length of `w0` in type `A_n`.
pub fn num_positive_roots(rank: usize) -> usize {
    rank * (rank + 1) / 2
}

impl Word {
    pub fn new(rank: usize, letters: Vec<u8>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::Precondition("rank must be at least 1".into()));
        }
        if let Some(&bad) = letters.iter().find(|&&a| a == 0 || a as usize > rank) {
            return Err(Error::Precondition(format!(
                "letter {bad} outside 1..={rank}"
            )));
        }
        Ok(Word { letters, rank })
    }

    /// A word for `w0` that is checked to be reduced.
    pub fn w0(rank: usize, letters: Vec<u8>) -> Result<Self> {
        let w = Word::new(rank, letters)?;
        if !w.is_reduced_w0() {
            return Err(Error::Precondition(format!(
                "{w:?} is not a reduced word for w0"
            )));
        }
        Ok(w)
    }

    /// The seed `(1, 2,1, 3,2,1, ..., n,...,1)`.
    pub fn seed_w0(rank: usize) -> Self {
        let mut letters = Vec::with_capacity(num_positive_roots(rank));
        for top in 1..=rank as u8 {
            letters.extend((1..=top).rev());
        }
        Word { letters, rank }
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// One-line notation of the product `s_{i_1} ... s_{i_k}` acting on `1..=n+1`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (1..=self.rank + 1).collect();
        // right multiplication by s_i swaps positions i, i+1
        for &a in &self.letters {
            perm.swap(a as usize - 1, a as usize);
        }
        perm
    }

    pub fn is_reduced(&self) -> bool {
        inversions(&self.permutation()) == self.letters.len()
    }

    pub fn is_reduced_w0(&self) -> bool {
        self.letters.len() == num_positive_roots(self.rank) && self.is_reduced()
    }

    /// Applies a braid move at the 1-based `position`.
    pub fn apply_braid_move(&self, position: usize, kind: BraidMove) -> Result<Self> {
        let l = &self.letters;
        let p = position
            .checked_sub(1)
            .ok_or_else(|| Error::Precondition("positions are 1-based".into()))?;
        let mut out = l.clone();
        match kind {
            BraidMove::Commute => {
                if p + 1 >= l.len() || l[p].abs_diff(l[p + 1]) < 2 {
                    return Err(Error::Precondition(format!(
                        "no commuting pair at position {position} of {self:?}"
                    )));
                }
                out.swap(p, p + 1);
            }
            BraidMove::Braid => {
                if p + 2 >= l.len() || l[p] != l[p + 2] || l[p].abs_diff(l[p + 1]) != 1 {
                    return Err(Error::Precondition(format!(
                        "no (i,j,i) pattern at position {position} of {self:?}"
                    )));
                }
                out[p] = l[p + 1];
                out[p + 1] = l[p];
                out[p + 2] = l[p + 1];
            }
        }
        Ok(Word {
            letters: out,
            rank: self.rank,
        })
    }

    /// All braid moves applicable to this word, with 1-based positions.
    pub fn braid_moves(&self) -> Vec<(usize, BraidMove, Word)> {
        let mut out = Vec::new();
        let l = &self.letters;
        for p in 0..l.len() {
            if p + 1 < l.len() && l[p].abs_diff(l[p + 1]) >= 2 {
                out.push((
                    p + 1,
                    BraidMove::Commute,
                    self.apply_braid_move(p + 1, BraidMove::Commute).unwrap(),
                ));
            }
            if p + 2 < l.len() && l[p] == l[p + 2] && l[p].abs_diff(l[p + 1]) == 1 {
                out.push((
                    p + 1,
                    BraidMove::Braid,
                    self.apply_braid_move(p + 1, BraidMove::Braid).unwrap(),
                ));
            }
        }
        out
    }

    /// `(w_2, ..., w_N, w_1^*)`: the rotation used to conjugate by `T_{w_1}`.
    pub fn rotate(&self) -> Self {
        let mut letters = self.letters[1..].to_vec();
        letters.push(chevalley_dual(self.letters[0], self.rank));
        Word {
            letters,
            rank: self.rank,
        }
    }

    /// `(beta_1, ..., beta_N)` with `beta_t = s_{i_1} ... s_{i_{t-1}}(alpha_{i_t})`.
    pub fn roots(&self) -> Result<Vec<Root>> {
        if !self.is_reduced_w0() {
            return Err(Error::Precondition(format!(
                "{self:?} is not a reduced word for w0"
            )));
        }
        Ok((0..self.len())
            .map(|t| {
                let mut b = Root::simple(self.letters[t], self.rank);
                for &a in self.letters[..t].iter().rev() {
                    b = b.reflect(a);
                }
                b
            })
            .collect())
    }
}

/// `beta_t` for every position of a reduced word for `w0`.
pub fn roots_of_word(w: &Word) -> Result<Vec<Root>> {
    w.roots()
}

pub fn apply_braid_move(w: &Word, position: usize, kind: BraidMove) -> Result<Word> {
    w.apply_braid_move(position, kind)
}

/// `i -> n + 1 - i`, the diagram automorphism induced by `-w0`.
pub fn chevalley_dual(i: u8, rank: usize) -> u8 {
    assert!(
        i >= 1 && i as usize <= rank,
        "letter {i} outside 1..={rank}"
    );
    rank as u8 + 1 - i
}

fn inversions(perm: &[usize]) -> usize {
    let mut n = 0;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if perm[a] > perm[b] {
                n += 1;
            }
        }
    }
    n
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, a) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.letters.serialize(s)
    }
}

fn word_cache() -> &'static Mutex<HashMap<usize, Arc<Vec<Word>>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<Word>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `R(w0)` for type `A_n`, sorted lexicographically, with the default rank cap.
pub fn reduced_words_w0(rank: usize) -> Result<Arc<Vec<Word>>> {
    reduced_words_w0_capped(rank, DEFAULT_RANK_CAP)
}

/// Breadth-first closure of the seed word under braid moves.
pub fn reduced_words_w0_capped(rank: usize, cap: usize) -> Result<Arc<Vec<Word>>> {
    if rank == 0 {
        return Err(Error::Precondition("rank must be at least 1".into()));
    }
    if rank > cap {
        return Err(Error::Capacity(format!(
            "R(w0) enumeration refused for rank {rank} > cap {cap}"
        )));
    }
    if let Some(ws) = word_cache().lock().unwrap().get(&rank) {
        return Ok(ws.clone());
    }
    let seed = Word::seed_w0(rank);
    let mut seen = BTreeSet::from([seed.clone()]);
    let mut queue = VecDeque::from([seed]);
    while let Some(w) = queue.pop_front() {
        for (_, _, v) in w.braid_moves() {
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    let words = Arc::new(seen.into_iter().collect::<Vec<_>>());
    word_cache().lock().unwrap().insert(rank, words.clone());
    Ok(words)
}

/// Shortest braid-move path from `from` to `to`; among shortest paths the
/// one whose sequence of intermediate words is lexicographically least.
pub fn braid_path(from: &Word, to: &Word) -> Result<Vec<(usize, BraidMove, Word)>> {
    if from.rank != to.rank {
        return Err(Error::RankMismatch(from.rank, to.rank));
    }
    if !from.is_reduced_w0() || !to.is_reduced_w0() {
        return Err(Error::Precondition(
            "both words must be reduced words for w0".into(),
        ));
    }
    // BFS from `to` gives distances; then walk greedily from `from` choosing the least next word.
    let mut dist: HashMap<Word, usize> = HashMap::from([(to.clone(), 0)]);
    let mut queue = VecDeque::from([to.clone()]);
    while let Some(w) = queue.pop_front() {
        if w == *from {
            break;
        }
        let d = dist[&w];
        for (_, _, v) in w.braid_moves() {
            if !dist.contains_key(&v) {
                dist.insert(v.clone(), d + 1);
                queue.push_back(v);
            }
        }
    }
    let mut path = Vec::new();
    let mut cur = from.clone();
    let mut d = *dist
        .get(from)
        .ok_or_else(|| Error::Invariant("words not connected by braid moves".into()))?;
    while d > 0 {
        let step = cur
            .braid_moves()
            .into_iter()
            .filter(|(_, _, v)| dist.get(v) == Some(&(d - 1)))
            .min_by(|a, b| a.2.cmp(&b.2))
            .ok_or_else(|| Error::Invariant("broken BFS distances".into()))?;
        cur = step.2.clone();
        path.push(step);
        d -= 1;
    }
    Ok(path)
}
