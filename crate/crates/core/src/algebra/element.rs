use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::coeff::{LaurentPoly, RationalFunction};
use crate::error::{Error, Result};
use crate::weyl::Root;

/// Homogeneous element of the free algebra on `E_1, ..., E_n`, read in `U^+`.
///
/// Words are stored as letter vectors; zero coefficients are never stored.
/// Two elements may differ syntactically and still be equal in `U^+`; use the
/// pairing (see [`super::Algebra::equal`]) to compare.
#[derive(Clone, PartialEq, Eq)]
pub struct WordElt {
    rank: usize,
    weight: Root,
    terms: BTreeMap<Vec<u8>, RationalFunction>,
}

impl WordElt {
    pub fn zero(rank: usize, weight: Root) -> Self {
        WordElt {
            rank,
            weight,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(rank: usize) -> Self {
        Self::monomial(rank, vec![]).expect("empty word is valid")
    }

    /// The generator `E_i`.
    pub fn generator(i: u8, rank: usize) -> Self {
        Self::monomial(rank, vec![i]).expect("letter in range")
    }

    /// A single word with coefficient 1.
    pub fn monomial(rank: usize, word: Vec<u8>) -> Result<Self> {
        Self::from_terms(rank, [(word, RationalFunction::one())])
    }

    /// Builds an element from `(word, coefficient)` pairs, summing repeats.
    ///
    /// All words must share one letter multiset; an empty input is rejected
    /// because its weight is undetermined.
    pub fn from_terms(
        rank: usize,
        terms: impl IntoIterator<Item = (Vec<u8>, RationalFunction)>,
    ) -> Result<Self> {
        let mut iter = terms.into_iter().peekable();
        let first = iter
            .peek()
            .ok_or_else(|| Error::Precondition("cannot infer the weight of an empty sum".into()))?;
        check_letters(&first.0, rank)?;
        let weight = Root::letter_multiset(&first.0, rank);
        let mut out = WordElt::zero(rank, weight);
        for (w, c) in iter {
            out.add_term(w, &c)?;
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn weight(&self) -> &Root {
        &self.weight
    }

    /// Sum of the weight coordinates; the common word length.
    pub fn tr(&self) -> usize {
        self.weight.height().max(0) as usize
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u8>, &RationalFunction)> {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &[u8]) -> RationalFunction {
        self.terms.get(word).cloned().unwrap_or_default()
    }

    /// Number of stored words.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// No stored words. An element can be zero in `U^+` without being empty.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, word: Vec<u8>, c: &RationalFunction) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        check_letters(&word, self.rank)?;
        if Root::letter_multiset(&word, self.rank) != self.weight {
            return Err(Error::Precondition(format!(
                "word {word:?} has the wrong weight for {:?}",
                self.weight
            )));
        }
        match self.terms.get_mut(&word) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&word);
                }
            }
            None => {
                self.terms.insert(word, c.clone());
            }
        }
        Ok(())
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        if self.weight != other.weight && !self.is_empty() && !other.is_empty() {
            return Err(Error::Precondition(format!(
                "cannot add elements of weights {:?} and {:?}",
                self.weight, other.weight
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        if self.is_empty() {
            return Ok(other.clone());
        }
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| -c)
    }

    pub fn scale(&self, s: &RationalFunction) -> Self {
        if s.is_zero() {
            return WordElt::zero(self.rank, self.weight.clone());
        }
        self.map_coeffs(|c| c * s)
    }

    pub fn scale_laurent(&self, s: &LaurentPoly) -> Self {
        if s.is_zero() {
            return WordElt::zero(self.rank, self.weight.clone());
        }
        self.map_coeffs(|c| c.mul_laurent(s))
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        self.map_coeffs(|c| c.shift(k))
    }

    fn map_coeffs(&self, f: impl Fn(&RationalFunction) -> RationalFunction) -> Self {
        WordElt {
            rank: self.rank,
            weight: self.weight.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.clone(), f(c))).collect(),
        }
    }

    /// Concatenation product, extended bilinearly.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        let mut terms: BTreeMap<Vec<u8>, RationalFunction> = BTreeMap::new();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let mut w = Vec::with_capacity(u.len() + v.len());
                w.extend_from_slice(u);
                w.extend_from_slice(v);
                let c = a * b;
                let slot = terms.entry(w).or_default();
                *slot += &c;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(WordElt {
            rank: self.rank,
            weight: &self.weight + &other.weight,
            terms,
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(WordElt::unit(self.rank), |acc, _| {
            acc.mul(self).expect("same rank")
        })
    }

    /// Bar involution: `q -> q^{-1}` on coefficients, words fixed.
    pub fn eta(&self) -> Self {
        self.map_coeffs(|c| c.bar())
    }

    /// Anti-automorphism fixing each `E_i`: reverses every word.
    pub fn sigma(&self) -> Self {
        WordElt {
            rank: self.rank,
            weight: self.weight.clone(),
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.iter().rev().copied().collect(), c.clone()))
                .collect(),
        }
    }

    pub fn sigma_eta(&self) -> Self {
        self.sigma().eta()
    }

    /// The `q`-derivation `delta_i`, applied word by word.
    ///
    /// Removing the letter `i` at position `p` of a word contributes
    /// `q^{-(alpha_i, wt(prefix))} (1-q^2)^{-1}` times the remaining word.
    pub fn delta(&self, i: u8) -> Self {
        let alpha = Root::simple(i, self.rank);
        let mut out = WordElt::zero(self.rank, &self.weight - &alpha);
        let inv = RationalFunction::new(LaurentPoly::one(), one_minus_q2());
        let mut acc: BTreeMap<Vec<u8>, RationalFunction> = BTreeMap::new();
        for (w, c) in &self.terms {
            let mut prefix = Root::zero(self.rank);
            for p in 0..w.len() {
                if w[p] == i {
                    let e = -prefix.pair_simple(i);
                    let mut rest = w[..p].to_vec();
                    rest.extend_from_slice(&w[p + 1..]);
                    *acc.entry(rest).or_default() += &c.shift(e);
                }
                prefix.0[w[p] as usize - 1] += 1;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        out.terms = acc.into_iter().map(|(w, c)| (w, &c * &inv)).collect();
        out
    }
}

pub(crate) fn one_minus_q2() -> LaurentPoly {
    LaurentPoly::from_terms([(0, 1), (2, -1)])
}

fn check_letters(word: &[u8], rank: usize) -> Result<()> {
    if let Some(&bad) = word.iter().find(|&&a| a == 0 || a as usize > rank) {
        return Err(Error::Precondition(format!(
            "letter {bad} outside 1..={rank}"
        )));
    }
    Ok(())
}

impl fmt::Debug for WordElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let letters: Vec<String> = w.iter().map(|a| a.to_string()).collect();
            write!(f, "({c})E[{}]", letters.join(","))?;
        }
        Ok(())
    }
}

impl Serialize for WordElt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (w, c) in &self.terms {
            seq.serialize_element(&(w, c))?;
        }
        seq.end()
    }
}

/// Serialized form including the ambient data that the bare term list omits.
#[derive(Serialize, Deserialize)]
pub(crate) struct WordEltRepr {
    pub rank: usize,
    pub weight: Root,
    pub terms: Vec<(Vec<u8>, RationalFunction)>,
}

impl WordElt {
    pub(crate) fn to_repr(&self) -> WordEltRepr {
        WordEltRepr {
            rank: self.rank,
            weight: self.weight.clone(),
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    pub(crate) fn from_repr(r: WordEltRepr) -> Result<Self> {
        let mut out = WordElt::zero(r.rank, r.weight);
        for (w, c) in r.terms {
            out.add_term(w, &c)?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: u8) -> WordElt {
        WordElt::generator(i, 2)
    }

    #[test]
    fn products() {
        let x = e(1).mul(&e(2)).unwrap();
        assert_eq!(x.len(), 1);
        assert!(x.coeff(&[1, 2]).is_one());
        let y = e(1).add(&WordElt::zero(2, Root::simple(1, 2))).unwrap();
        assert_eq!(y, e(1));
        assert!(e(1).add(&e(2)).is_err());
        assert!(e(1).mul(&WordElt::generator(1, 3)).is_err());
    }

    #[test]
    fn involutions() {
        let x = e(1).mul(&e(2)).unwrap().shift(1);
        assert_eq!(x.eta(), e(1).mul(&e(2)).unwrap().shift(-1));
        assert_eq!(e(1).mul(&e(2)).unwrap().sigma(), e(2).mul(&e(1)).unwrap());
        assert_eq!(x.eta().eta(), x);
        assert_eq!(x.sigma().sigma(), x);
    }

    #[test]
    fn delta_on_generators() {
        let d = e(1).delta(1);
        assert_eq!(d.weight(), &Root::zero(2));
        assert_eq!(
            d.coeff(&[]),
            RationalFunction::new(LaurentPoly::one(), one_minus_q2())
        );
        assert!(e(2).delta(1).is_empty());
    }

    #[test]
    fn serialization_is_sorted_pairs() {
        let x = e(2)
            .mul(&e(1))
            .unwrap()
            .add(&e(1).mul(&e(2)).unwrap().shift(1))
            .unwrap();
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(
            s,
            r#"[[[1,2],{"num":{"1":"1"},"den":{"0":"1"}}],[[2,1],{"num":{"0":"1"},"den":{"0":"1"}}]]"#
        );
    }
}
