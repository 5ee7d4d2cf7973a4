//! Lusztig's piecewise-linear reparametrization maps, PBW walls and
//! linearity domains. Pure integer arithmetic throughout.

mod fan;

pub use fan::{rank2_fan, FanReport};

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weyl::{braid_path, reduced_words_w0, BraidMove, Root, Word};

/// Exponent tuple indexed by the positions of a reduced word for `w0`.
///
/// Ordered lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(transparent)]
pub struct ParamVector(pub Vec<i64>);

impl ParamVector {
    pub fn zero(len: usize) -> Self {
        ParamVector(vec![0; len])
    }

    /// The unit vector `e_t` (1-based `t`).
    pub fn unit(len: usize, t: usize) -> Self {
        let mut v = vec![0; len];
        v[t - 1] = 1;
        ParamVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&a| a >= 0)
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `sum_t m_t beta_t`.
    pub fn weight(&self, roots: &[Root]) -> Root {
        let rank = roots[0].rank();
        self.0
            .iter()
            .zip(roots)
            .fold(Root::zero(rank), |acc, (&m, b)| &acc + &(m * b))
    }
}

impl Add for &ParamVector {
    type Output = ParamVector;
    fn add(self, rhs: Self) -> ParamVector {
        assert_eq!(self.len(), rhs.len());
        ParamVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Mul<&ParamVector> for i64 {
    type Output = ParamVector;
    fn mul(self, rhs: &ParamVector) -> ParamVector {
        ParamVector(rhs.0.iter().map(|a| self * a).collect())
    }
}

impl fmt::Debug for ParamVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Reparametrization across a 3-move `(i,j,i) -> (j,i,j)`, in the continuous
/// min-form. It is an involution, so the same formula serves both directions.
pub fn r_move3(a: i64, b: i64, c: i64) -> (i64, i64, i64) {
    let m = a.min(c);
    (b + c - m, m, a + b - m)
}

fn apply_move(m: &mut [i64], position: usize, kind: BraidMove) {
    let k = position - 1;
    match kind {
        BraidMove::Commute => m.swap(k, k + 1),
        BraidMove::Braid => {
            let (x, y, z) = r_move3(m[k], m[k + 1], m[k + 2]);
            m[k] = x;
            m[k + 1] = y;
            m[k + 2] = z;
        }
    }
}

fn check_vector(w: &Word, m: &ParamVector) -> Result<()> {
    if m.len() != w.len() {
        return Err(Error::Precondition(format!(
            "parameter of length {} for a word of length {}",
            m.len(),
            w.len()
        )));
    }
    Ok(())
}

/// `R_from^to(m)` along the shortest braid-move path.
pub fn reparametrize(from: &Word, to: &Word, m: &ParamVector) -> Result<ParamVector> {
    check_vector(from, m)?;
    let path = braid_path(from, to)?;
    Ok(reparametrize_along(m, &path))
}

/// Applies the elementary updates of an explicit move path.
pub fn reparametrize_along(m: &ParamVector, path: &[(usize, BraidMove, Word)]) -> ParamVector {
    let mut v = m.0.clone();
    for (pos, kind, _) in path {
        apply_move(&mut v, *pos, *kind);
    }
    ParamVector(v)
}

/// `R_base^{i'}(m)` for every `i'` in `R(w0)`, in the sorted order of `R(w0)`.
///
/// Computed along a breadth-first spanning tree of the move graph; path
/// independence makes the tree irrelevant.
pub fn images_all(base: &Word, m: &ParamVector) -> Result<Vec<(Word, ParamVector)>> {
    check_vector(base, m)?;
    if !base.is_reduced_w0() {
        return Err(Error::Precondition(format!(
            "{base:?} is not a reduced word for w0"
        )));
    }
    let words = reduced_words_w0(base.rank())?;
    let mut image: HashMap<Word, Vec<i64>> = HashMap::from([(base.clone(), m.0.clone())]);
    let mut queue = VecDeque::from([base.clone()]);
    while let Some(w) = queue.pop_front() {
        for (pos, kind, v) in w.braid_moves() {
            if !image.contains_key(&v) {
                let mut x = image[&w].clone();
                apply_move(&mut x, pos, kind);
                image.insert(v.clone(), x);
                queue.push_back(v);
            }
        }
    }
    Ok(words
        .iter()
        .map(|w| {
            (
                w.clone(),
                ParamVector(image.remove(w).expect("R(w0) is connected")),
            )
        })
        .collect())
}

/// 1-based indices `k` with `w_k = w_{k+2} = w_{k+1} +- 1`; each is the wall `a_k = a_{k+2}`.
pub fn walls(w: &Word) -> Vec<usize> {
    let l = w.letters();
    (0..l.len().saturating_sub(2))
        .filter(|&k| l[k] == l[k + 2] && l[k].abs_diff(l[k + 1]) == 1)
        .map(|k| k + 1)
        .collect()
}

/// Off every PBW wall in every parametrization.
pub fn is_regular(base: &Word, m: &ParamVector) -> Result<bool> {
    for (w, img) in images_all(base, m)? {
        for k in walls(&w) {
            if img.0[k - 1] == img.0[k + 1] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Result of comparing two parameters against the linearity-domain structure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DomainVerdict {
    pub pair: (ParamVector, ParamVector),
    pub verdict: bool,
    /// A word carrying a separating wall, when the verdict is false.
    pub witness_word: Option<Word>,
    /// The separating wall index (1-based) in `witness_word`.
    pub witness_wall: Option<usize>,
}

/// Decides whether `m` and `m2` lie in one PBW linearity domain for `base`.
///
/// Both characterizations are evaluated: additivity of every `R_base^{i'}`
/// on the pair, and the weak-side condition on every wall of every `i'`.
/// Disagreement is an invariant violation.
pub fn same_linearity_domain_report(
    base: &Word,
    m: &ParamVector,
    m2: &ParamVector,
) -> Result<DomainVerdict> {
    if !m.is_nonnegative() || !m2.is_nonnegative() {
        return Err(Error::Precondition(
            "linearity domains live in the nonnegative orthant".into(),
        ));
    }
    check_vector(base, m2)?;
    let sum = m + m2;
    let im = images_all(base, m)?;
    let im2 = images_all(base, m2)?;
    let isum = images_all(base, &sum)?;

    let additive = im
        .iter()
        .zip(&im2)
        .zip(&isum)
        .all(|(((_, a), (_, b)), (_, s))| &(a + b) == s);

    let mut witness = None;
    'outer: for ((w, a), (_, b)) in im.iter().zip(&im2) {
        for k in walls(w) {
            let sa = (a.0[k - 1] - a.0[k + 1]).signum();
            let sb = (b.0[k - 1] - b.0[k + 1]).signum();
            if sa * sb < 0 {
                witness = Some((w.clone(), k));
                break 'outer;
            }
        }
    }
    let weak_sides = witness.is_none();
    if additive != weak_sides {
        return Err(Error::Invariant(format!(
            "additivity ({additive}) and weak-side test ({weak_sides}) disagree on {m:?}, {m2:?} for {base:?}"
        )));
    }
    let (witness_word, witness_wall) = match witness {
        Some((w, k)) => (Some(w), Some(k)),
        None => (None, None),
    };
    Ok(DomainVerdict {
        pair: (m.clone(), m2.clone()),
        verdict: additive,
        witness_word,
        witness_wall,
    })
}

pub fn same_linearity_domain(base: &Word, m: &ParamVector, m2: &ParamVector) -> Result<bool> {
    same_linearity_domain_report(base, m, m2).map(|r| r.verdict)
}

/// Checks the conclusion of the "same domain" propagation property on one instance.
///
/// Preconditions: the parts and their sum pairwise share a domain, and the sum
/// shares a domain with `q`. Returns whether every pair among parts, sum and `q`
/// shares a domain (which must be `true`).
pub fn samedomain_triple_check(
    base: &Word,
    parts: &[ParamVector],
    q: &ParamVector,
) -> Result<bool> {
    if parts.is_empty() {
        return Err(Error::Precondition("at least one part is required".into()));
    }
    let mut sum = ParamVector::zero(base.len());
    for p in parts {
        check_vector(base, p)?;
        sum = &sum + p;
    }
    let mut group: Vec<ParamVector> = parts.to_vec();
    group.push(sum.clone());
    for a in 0..group.len() {
        for b in a + 1..group.len() {
            if !same_linearity_domain(base, &group[a], &group[b])? {
                return Err(Error::Precondition(
                    "parts and their sum do not share a domain".into(),
                ));
            }
        }
    }
    if !same_linearity_domain(base, &sum, q)? {
        return Err(Error::Precondition(
            "sum and q do not share a domain".into(),
        ));
    }
    group.push(q.clone());
    for a in 0..group.len() {
        for b in a + 1..group.len() {
            if !same_linearity_domain(base, &group[a], &group[b])? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::reduced_words_w0;

    fn pv(v: &[i64]) -> ParamVector {
        ParamVector(v.to_vec())
    }

    fn w(rank: usize, l: &[u8]) -> Word {
        Word::new(rank, l.to_vec()).unwrap()
    }

    #[test]
    fn r_move3_examples() {
        assert_eq!(r_move3(2, 1, 0), (1, 0, 3));
        assert_eq!(r_move3(0, 1, 2), (3, 0, 1));
        assert_eq!(r_move3(1, 1, 1), (1, 1, 1));
    }

    #[test]
    fn r_move3_involution() {
        for a in 0..=5 {
            for b in 0..=5 {
                for c in 0..=5 {
                    let (x, y, z) = r_move3(a, b, c);
                    assert_eq!(r_move3(x, y, z), (a, b, c));
                }
            }
        }
    }

    #[test]
    fn reparametrize_examples() {
        let a = w(2, &[1, 2, 1]);
        let b = w(2, &[2, 1, 2]);
        assert_eq!(
            reparametrize(&a, &b, &pv(&[1, 0, 0])).unwrap(),
            pv(&[0, 0, 1])
        );
        assert_eq!(
            reparametrize(&a, &b, &pv(&[0, 1, 0])).unwrap(),
            pv(&[1, 0, 1])
        );
        assert_eq!(
            reparametrize(&a, &a, &pv(&[3, 1, 4])).unwrap(),
            pv(&[3, 1, 4])
        );
        assert!(reparametrize(&a, &w(3, &[1, 2, 1, 3, 2, 1]), &pv(&[0, 0, 0])).is_err());
        assert!(reparametrize(&a, &b, &pv(&[0, 0])).is_err());
    }

    #[test]
    fn walls_examples() {
        assert_eq!(walls(&w(2, &[1, 2, 1])), vec![1]);
        assert_eq!(walls(&w(3, &[1, 3, 2, 1, 3, 2])), Vec::<usize>::new());
        assert_eq!(walls(&w(3, &[1, 2, 1, 3, 2, 1])), vec![1]);
        assert_eq!(walls(&w(3, &[2, 1, 2, 3, 2, 1])), vec![1, 3]);
    }

    #[test]
    fn regularity_examples() {
        let a = w(2, &[1, 2, 1]);
        assert!(is_regular(&a, &pv(&[1, 0, 0])).unwrap());
        assert!(!is_regular(&a, &pv(&[1, 0, 1])).unwrap());
        assert!(!is_regular(&a, &pv(&[0, 0, 0])).unwrap());
    }

    #[test]
    fn domain_examples() {
        let a = w(2, &[1, 2, 1]);
        let m = pv(&[2, 1, 0]);
        assert!(same_linearity_domain(&a, &m, &m).unwrap());
        assert!(same_linearity_domain(&a, &m, &(2 * &m)).unwrap());
        let r = same_linearity_domain_report(&a, &m, &pv(&[0, 1, 2])).unwrap();
        assert!(!r.verdict);
        assert_eq!(r.witness_word, Some(a.clone()));
        assert_eq!(r.witness_wall, Some(1));
    }

    #[test]
    fn triple_check_examples() {
        let a = w(2, &[1, 2, 1]);
        let m = pv(&[1, 2, 0]);
        assert!(samedomain_triple_check(&a, std::slice::from_ref(&m), &m).unwrap());
        assert!(samedomain_triple_check(&a, &[m.clone(), m.clone()], &(2 * &m)).unwrap());
        assert!(matches!(
            samedomain_triple_check(&a, std::slice::from_ref(&m), &pv(&[0, 0, 3])),
            Err(Error::Precondition(_))
        ));
    }

    fn all_vectors(len: usize, max: i64) -> Vec<ParamVector> {
        let mut out = vec![vec![]];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..=max).map(move |x| {
                        let mut v = v.clone();
                        v.push(x);
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(ParamVector).collect()
    }

    #[test]
    fn path_independence_rank3() {
        // compare the shortest-path answer with the spanning-tree answer
        let words = reduced_words_w0(3).unwrap();
        let sample: Vec<_> = all_vectors(6, 2).into_iter().step_by(7).collect();
        for base in words.iter() {
            for m in &sample {
                for (to, img) in images_all(base, m).unwrap() {
                    assert_eq!(reparametrize(base, &to, m).unwrap(), img);
                }
            }
        }
    }

    #[test]
    fn weight_preserved_and_bijective_rank2() {
        let words = reduced_words_w0(2).unwrap();
        for m in all_vectors(3, 5) {
            for from in words.iter() {
                for to in words.iter() {
                    let r = reparametrize(from, to, &m).unwrap();
                    assert_eq!(
                        m.weight(&from.roots().unwrap()),
                        r.weight(&to.roots().unwrap())
                    );
                    assert_eq!(reparametrize(to, from, &r).unwrap(), m);
                    assert_eq!(reparametrize(from, to, &(3 * &m)).unwrap(), 3 * &r);
                }
            }
        }
    }
}
