use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::word::{num_positive_roots, BraidMove, Word};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeDir {
    /// `i -> i+1`
    LeftToRight,
    /// `i+1 -> i`
    RightToLeft,
}

/// Orientation of the `A_n` Dynkin diagram; `edges[k]` joins vertices `k+1` and `k+2`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quiver {
    edges: Vec<EdgeDir>,
}

impl Quiver {
    pub fn new(edges: Vec<EdgeDir>) -> Self {
        Quiver { edges }
    }

    pub fn rank(&self) -> usize {
        self.edges.len() + 1
    }

    pub fn edges(&self) -> &[EdgeDir] {
        &self.edges
    }

    /// All `2^{n-1}` orientations, in a fixed order.
    pub fn all(rank: usize) -> Vec<Quiver> {
        (0..1usize << (rank - 1))
            .map(|bits| {
                Quiver::new(
                    (0..rank - 1)
                        .map(|k| {
                            if bits >> k & 1 == 0 {
                                EdgeDir::LeftToRight
                            } else {
                                EdgeDir::RightToLeft
                            }
                        })
                        .collect(),
                )
            })
            .collect()
    }

    /// A vertex with no outgoing arrow.
    pub fn is_sink(&self, v: u8) -> bool {
        let k = v as usize;
        let out_right = k < self.rank() && self.edges[k - 1] == EdgeDir::LeftToRight;
        let out_left = k > 1 && self.edges[k - 2] == EdgeDir::RightToLeft;
        !out_right && !out_left
    }

    pub fn sinks(&self) -> Vec<u8> {
        (1..=self.rank() as u8)
            .filter(|&v| self.is_sink(v))
            .collect()
    }

    /// Reverses every arrow at `v`.
    pub fn reflect(&self, v: u8) -> Self {
        let mut edges = self.edges.clone();
        let k = v as usize;
        let flip = |d: EdgeDir| match d {
            EdgeDir::LeftToRight => EdgeDir::RightToLeft,
            EdgeDir::RightToLeft => EdgeDir::LeftToRight,
        };
        if k < self.rank() {
            edges[k - 1] = flip(edges[k - 1]);
        }
        if k > 1 {
            edges[k - 2] = flip(edges[k - 2]);
        }
        Quiver { edges }
    }
}

impl FromStr for Quiver {
    type Err = Error;

    /// Comma-separated `lr` / `rl` tokens, one per edge from left to right;
    /// the empty string is the rank-1 quiver.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(Quiver::new(vec![]));
        }
        s.split(',')
            .map(|t| match t.trim() {
                "lr" => Ok(EdgeDir::LeftToRight),
                "rl" => Ok(EdgeDir::RightToLeft),
                other => Err(Error::Precondition(format!("bad edge direction {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Quiver::new)
    }
}

impl fmt::Debug for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self
            .edges
            .iter()
            .map(|d| match d {
                EdgeDir::LeftToRight => "lr",
                EdgeDir::RightToLeft => "rl",
            })
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

impl Serialize for Quiver {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let parts: Vec<&str> = self
            .edges
            .iter()
            .map(|d| match d {
                EdgeDir::LeftToRight => "lr",
                EdgeDir::RightToLeft => "rl",
            })
            .collect();
        parts.serialize(s)
    }
}

/// Reduced word for `w0` whose letters are successive sinks of the reflected
/// quivers, preferring the smallest available sink.
///
/// Sink choices that would make the prefix non-reduced are skipped
/// (depth-first, so the result is the lexicographically least adapted word).
pub fn adapted_word(q: &Quiver) -> Word {
    let rank = q.rank();
    let target = num_positive_roots(rank);
    fn go(q: &Quiver, prefix: &mut Vec<u8>, rank: usize, target: usize) -> bool {
        if prefix.len() == target {
            return true;
        }
        for v in q.sinks() {
            prefix.push(v);
            if Word::new(rank, prefix.clone()).unwrap().is_reduced()
                && go(&q.reflect(v), prefix, rank, target)
            {
                return true;
            }
            prefix.pop();
        }
        false
    }
    let mut letters = Vec::with_capacity(target);
    let found = go(q, &mut letters, rank, target);
    assert!(found, "no adapted reduced word for quiver {q:?}");
    Word::new(rank, letters).unwrap()
}

/// The commutation class of a word: closure under 2-moves.
pub fn commutation_class(w: &Word) -> Vec<Word> {
    let mut seen = BTreeSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(x) = queue.pop_front() {
        for (_, kind, y) in x.braid_moves() {
            if kind == BraidMove::Commute && seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// Returns a quiver `Q` with `w` in `R(Q)`, if one exists.
pub fn adapted_quiver(w: &Word) -> Option<Quiver> {
    Quiver::all(w.rank()).into_iter().find(|q| {
        // adapted to q iff each letter is a sink of the successively reflected quiver
        let mut cur = q.clone();
        for &a in w.letters() {
            if !cur.is_sink(a) {
                return false;
            }
            cur = cur.reflect(a);
        }
        true
    })
}

pub fn is_adapted(w: &Word) -> bool {
    w.is_reduced_w0() && adapted_quiver(w).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::word::reduced_words_w0;

    #[test]
    fn a2_adapted_words() {
        let lr: Quiver = "lr".parse().unwrap();
        let rl: Quiver = "rl".parse().unwrap();
        assert_eq!(adapted_word(&lr).letters(), &[2, 1, 2]);
        assert_eq!(adapted_word(&rl).letters(), &[1, 2, 1]);
    }

    #[test]
    fn adapted_words_are_reduced_and_start_with_sink() {
        for n in 1..=4 {
            for q in Quiver::all(n) {
                let w = adapted_word(&q);
                assert!(w.is_reduced_w0(), "{q:?}");
                assert!(q.is_sink(w.letters()[0]));
                for v in commutation_class(&w) {
                    assert!(is_adapted(&v));
                    assert_eq!(adapted_quiver(&v).as_ref(), Some(&q));
                }
            }
        }
    }

    #[test]
    fn not_every_rank3_word_is_adapted() {
        let words = reduced_words_w0(3).unwrap();
        let adapted = words.iter().filter(|w| is_adapted(w)).count();
        assert!(adapted > 0 && adapted < words.len());
    }

    #[test]
    fn parse_round_trip() {
        let q: Quiver = "lr,rl,lr".parse().unwrap();
        assert_eq!(format!("{q:?}"), "lr,rl,lr");
        assert_eq!(serde_json::to_string(&q).unwrap(), r#"["lr","rl","lr"]"#);
        assert!("lr,xx".parse::<Quiver>().is_err());
    }
}
