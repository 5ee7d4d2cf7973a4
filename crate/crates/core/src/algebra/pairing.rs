//! The Hopf pairing between `U^+` and `U^-`, evaluated on words.
//!
//! With `Delta(F_i) = F_i (x) K_{-alpha_i} + 1 (x) F_i` the form satisfies
//! `(x, F_j y) = (delta_j x, y)`, where `delta_j` is the left `q`-derivation
//! with Leibniz factor `q^{-(gamma, alpha_j)}` and `delta_j(E_j) = (1-q^2)^{-1}`.
//! Unwinding this on words gives
//!
//! ```text
//! (E_u, F_v) = (1-q^2)^{-k} sum over letter-matchings of u and v of q^{-c}
//! ```
//!
//! where `c` sums `(alpha_{u_p}, alpha_{u_r})` over pairs `r < p` in `u` whose
//! partners appear in the opposite order in `v`. The matrix `P[u][v]` of these
//! sums (without the `(1-q^2)^{-k}`) is symmetric and integral; the image of
//! an element `x` is the vector `v -> sum_u x_u P[u][v]`. The image is
//! injective on `U^+`, so it decides equality.

use std::collections::HashMap;
use std::sync::Arc;

use crate::coeff::{uniform_proportionality, LaurentPoly, RationalFunction, Sign};
use crate::error::{Error, Result};
use crate::weyl::Root;

use super::element::{one_minus_q2, WordElt};
use super::Algebra;

/// All words with a given letter multiset, sorted lexicographically.
#[derive(Debug)]
pub struct WeightSpace {
    pub weight: Root,
    pub words: Vec<Vec<u8>>,
    pub index: HashMap<Vec<u8>, usize>,
}

impl WeightSpace {
    fn new(weight: Root) -> Self {
        let mut words = Vec::new();
        let mut counts: Vec<i64> = weight.0.clone();
        let len = weight.height().max(0) as usize;
        fn go(counts: &mut [i64], cur: &mut Vec<u8>, len: usize, out: &mut Vec<Vec<u8>>) {
            if cur.len() == len {
                out.push(cur.clone());
                return;
            }
            for k in 0..counts.len() {
                if counts[k] > 0 {
                    counts[k] -= 1;
                    cur.push(k as u8 + 1);
                    go(counts, cur, len, out);
                    cur.pop();
                    counts[k] += 1;
                }
            }
        }
        if weight.is_nonnegative() {
            go(&mut counts, &mut Vec::with_capacity(len), len, &mut words);
        }
        let index = words
            .iter()
            .enumerate()
            .map(|(k, w)| (w.clone(), k))
            .collect();
        WeightSpace {
            weight,
            words,
            index,
        }
    }

    pub fn dim_free(&self) -> usize {
        self.words.len()
    }
}

/// `(1-q^2)^k`.
pub(crate) fn norm_factor(k: usize) -> LaurentPoly {
    one_minus_q2().pow(k as u32)
}

impl Algebra {
    pub fn weight_space(&self, weight: &Root) -> Arc<WeightSpace> {
        if let Some(s) = self.spaces.read().unwrap().get(weight) {
            return s.clone();
        }
        let s = Arc::new(WeightSpace::new(weight.clone()));
        self.spaces
            .write()
            .unwrap()
            .entry(weight.clone())
            .or_insert(s)
            .clone()
    }

    /// Row `v -> P[u][v]` over the words of the weight of `u`.
    pub(crate) fn word_row(&self, rank: usize, u: &[u8]) -> Arc<Vec<LaurentPoly>> {
        let key = (rank, u.to_vec());
        if let Some(r) = self.rows.read().unwrap().get(&key) {
            return r.clone();
        }
        let weight = Root::letter_multiset(u, rank);
        let space = self.weight_space(&weight);
        let row: Vec<LaurentPoly> = if u.is_empty() {
            vec![LaurentPoly::one()]
        } else {
            // removals of each letter a, with the prefix exponent and the shorter row
            let mut removals: HashMap<u8, Vec<(i64, Arc<Vec<LaurentPoly>>)>> = HashMap::new();
            let mut prefix = Root::zero(rank);
            for p in 0..u.len() {
                let a = u[p];
                let mut rest = u[..p].to_vec();
                rest.extend_from_slice(&u[p + 1..]);
                removals
                    .entry(a)
                    .or_default()
                    .push((-prefix.pair_simple(a), self.word_row(rank, &rest)));
                prefix.0[a as usize - 1] += 1;
            }
            let mut sub_spaces: HashMap<u8, Arc<WeightSpace>> = HashMap::new();
            for &a in removals.keys() {
                sub_spaces.insert(a, self.weight_space(&(&weight - &Root::simple(a, rank))));
            }
            space
                .words
                .iter()
                .map(|v| {
                    let a = v[0];
                    let idx = sub_spaces[&a].index[&v[1..]];
                    let mut acc = LaurentPoly::zero();
                    for (e, r) in &removals[&a] {
                        if !r[idx].is_zero() {
                            acc += &r[idx].shift(*e);
                        }
                    }
                    acc
                })
                .collect()
        };
        let row = Arc::new(row);
        self.rows.write().unwrap().entry(key).or_insert(row).clone()
    }

    /// `v -> (1-q^2)^k (x, F_v)` over the words `v` of the weight of `x`.
    pub fn image(&self, x: &WordElt) -> Vec<RationalFunction> {
        let space = self.weight_space(x.weight());
        let n = space.words.len();
        // accumulate numerators per distinct denominator
        let mut groups: Vec<(LaurentPoly, Vec<LaurentPoly>)> = Vec::new();
        for (u, c) in x.terms() {
            let row = self.word_row(x.rank(), u);
            let g = match groups.iter().position(|(d, _)| d == c.denom()) {
                Some(g) => g,
                None => {
                    groups.push((c.denom().clone(), vec![LaurentPoly::zero(); n]));
                    groups.len() - 1
                }
            };
            let acc = &mut groups[g].1;
            for (k, p) in row.iter().enumerate() {
                if !p.is_zero() {
                    acc[k] += &(c.numer() * p);
                }
            }
        }
        let mut out = vec![RationalFunction::zero(); n];
        for (den, nums) in groups {
            for (k, num) in nums.into_iter().enumerate() {
                if !num.is_zero() {
                    out[k] += &RationalFunction::new(num, den.clone());
                }
            }
        }
        out
    }

    /// `(x, F_{j_1} ... F_{j_k})`; zero when the weights differ.
    pub fn pairing(&self, x: &WordElt, fword: &[u8]) -> RationalFunction {
        if Root::letter_multiset(fword, x.rank()) != *x.weight() {
            return RationalFunction::zero();
        }
        let mut acc = RationalFunction::zero();
        for (u, c) in x.terms() {
            let space = self.weight_space(x.weight());
            let p = &self.word_row(x.rank(), u)[space.index[fword]];
            acc += &c.mul_laurent(p);
        }
        acc.checked_div(&norm_factor(fword.len()).into())
            .expect("nonzero")
    }

    /// `(x, F-image of y)`: symmetric in `x` and `y`.
    pub fn form(&self, x: &WordElt, y: &WordElt) -> RationalFunction {
        if x.weight() != y.weight() || x.is_empty() || y.is_empty() {
            return RationalFunction::zero();
        }
        let (small, big) = if x.len() <= y.len() { (x, y) } else { (y, x) };
        let img = self.image(big);
        let space = self.weight_space(x.weight());
        let mut acc = RationalFunction::zero();
        for (u, c) in small.terms() {
            acc += &(c * &img[space.index[u]]);
        }
        acc.checked_div(&norm_factor(x.tr()).into())
            .expect("nonzero")
    }

    /// Zero in `U^+`.
    pub fn is_zero(&self, x: &WordElt) -> bool {
        x.is_empty() || self.image(x).iter().all(|c| c.is_zero())
    }

    /// Equality in `U^+`.
    pub fn equal(&self, x: &WordElt, y: &WordElt) -> Result<bool> {
        if x.rank() != y.rank() {
            return Err(Error::RankMismatch(x.rank(), y.rank()));
        }
        if x.weight() != y.weight() {
            return Ok(self.is_zero(x) && self.is_zero(y));
        }
        Ok(self.is_zero(&x.sub(y)?))
    }

    /// `(s, n)` with `x = s q^n y` in `U^+`, if such a relation holds.
    pub fn proportionality(&self, x: &WordElt, y: &WordElt) -> Option<(Sign, i64)> {
        if x.rank() != y.rank() {
            return None;
        }
        if x.weight() != y.weight() {
            return (self.is_zero(x) && self.is_zero(y)).then_some((1, 0));
        }
        let a = self.image(x);
        let b = self.image(y);
        uniform_proportionality(a.iter().zip(&b))
    }
}
