//! Per-(word, weight) transition data between PBW, canonical and dual bases.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coeff::{psi, LaurentPoly, RationalFunction};
use crate::error::{invariant, Error, Result};
use crate::tropical::ParamVector;
use crate::weyl::{Root, Word};

use super::element::WordElt;
use super::pairing::norm_factor;
use super::pbw::exponents_of_weight;
use super::Algebra;

/// PBW, canonical and dual canonical data for one weight space and one word.
///
/// Rows and columns are indexed by `exponents`, in increasing lexicographic
/// order. `canonical[m][n]` is the coefficient of `E(n)` in `B(m)`; it is
/// upper unitriangular. `dual[m][k]` is the coefficient of `E(k)^*` in
/// `B(m)^*`; it is lower unitriangular.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TransitionTable {
    #[serde(with = "word_repr")]
    pub word: Word,
    pub weight: Root,
    pub exponents: Vec<ParamVector>,
    #[serde(with = "monomials_repr")]
    pub monomials: Vec<WordElt>,
    /// Pairing images of the monomials (see [`Algebra::image`]).
    pub images: Vec<Vec<RationalFunction>>,
    pub gram: Vec<Vec<RationalFunction>>,
    /// `bar[m][n]`: coefficient of `E(n)` in `eta(E(m))`.
    pub bar: Vec<Vec<LaurentPoly>>,
    pub canonical: Vec<Vec<LaurentPoly>>,
    pub dual: Vec<Vec<LaurentPoly>>,
}

mod word_repr {
    use super::*;

    #[derive(Serialize, Deserialize)]
    struct Repr {
        rank: usize,
        letters: Vec<u8>,
    }

    pub fn serialize<S: Serializer>(w: &Word, s: S) -> std::result::Result<S::Ok, S::Error> {
        Repr {
            rank: w.rank(),
            letters: w.letters().to_vec(),
        }
        .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Word, D::Error> {
        let r = Repr::deserialize(d)?;
        Word::new(r.rank, r.letters).map_err(serde::de::Error::custom)
    }
}

mod monomials_repr {
    use super::*;
    use crate::algebra::element::WordEltRepr;

    pub fn serialize<S: Serializer>(v: &[WordElt], s: S) -> std::result::Result<S::Ok, S::Error> {
        v.iter()
            .map(|x| x.to_repr())
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<WordElt>, D::Error> {
        let v = Vec::<WordEltRepr>::deserialize(d)?;
        v.into_iter()
            .map(|r| WordElt::from_repr(r).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// `prod_t psi_{m_t}(q^2)`.
pub fn psi_product(m: &ParamVector) -> LaurentPoly {
    m.entries()
        .iter()
        .fold(LaurentPoly::one(), |acc, &e| &acc * &psi(e as u32))
}

fn positive_part(p: &LaurentPoly) -> LaurentPoly {
    LaurentPoly::from_terms(
        p.terms()
            .filter(|(e, _)| *e > 0)
            .map(|(e, c)| (e, c.clone())),
    )
}

impl TransitionTable {
    pub fn dim(&self) -> usize {
        self.exponents.len()
    }

    pub fn index_of(&self, m: &ParamVector) -> Option<usize> {
        self.exponents.binary_search(m).ok()
    }

    fn check_weight(&self, x: &WordElt) -> Result<()> {
        if x.weight() != &self.weight || x.rank() != self.word.rank() {
            return Err(Error::Precondition(format!(
                "element of weight {:?} used with a table of weight {:?}",
                x.weight(),
                self.weight
            )));
        }
        Ok(())
    }

    fn pair_index(&self, alg: &Algebra, x: &WordElt, n: usize) -> RationalFunction {
        let space = alg.weight_space(&self.weight);
        let mut acc = RationalFunction::zero();
        for (u, c) in x.terms() {
            let p = &self.images[n][space.index[u]];
            if !p.is_zero() {
                acc += &(c * p);
            }
        }
        acc.checked_div(&norm_factor(x.tr()).into())
            .expect("nonzero")
    }

    /// `(x, E(n))` for every exponent: the coordinates of `x` in the dual PBW basis.
    pub fn dual_pbw_coords(&self, alg: &Algebra, x: &WordElt) -> Result<Vec<RationalFunction>> {
        self.check_weight(x)?;
        Ok((0..self.dim())
            .map(|n| self.pair_index(alg, x, n))
            .collect())
    }

    /// Coordinates of `x` in the PBW basis.
    pub fn pbw_coords(&self, alg: &Algebra, x: &WordElt) -> Result<Vec<RationalFunction>> {
        let d = self.dual_pbw_coords(alg, x)?;
        Ok(d.iter()
            .zip(&self.exponents)
            .map(|(c, m)| c.mul_laurent(&psi_product(m)))
            .collect())
    }

    /// Coordinates of `x` in the dual canonical basis.
    pub fn dual_canonical_coords(
        &self,
        alg: &Algebra,
        x: &WordElt,
    ) -> Result<Vec<RationalFunction>> {
        let d = self.dual_pbw_coords(alg, x)?;
        Ok(self
            .canonical
            .iter()
            .map(|row| {
                let mut acc = RationalFunction::zero();
                for (p, c) in row.iter().zip(&d) {
                    if !p.is_zero() && !c.is_zero() {
                        acc += &c.mul_laurent(p);
                    }
                }
                acc
            })
            .collect())
    }

    /// `sum_n c_n E(n)` as a word-model element.
    pub fn combine(&self, coeffs: &[RationalFunction]) -> WordElt {
        let mut out = WordElt::zero(self.word.rank(), self.weight.clone());
        for (c, x) in coeffs.iter().zip(&self.monomials) {
            if !c.is_zero() {
                out = out.add(&x.scale(c)).expect("same weight");
            }
        }
        out
    }

    /// `B(m)` for the exponent at `m`.
    pub fn canonical_element(&self, m: usize) -> WordElt {
        let c: Vec<RationalFunction> = self.canonical[m].iter().cloned().map(Into::into).collect();
        self.combine(&c)
    }

    /// `B(m)^* = sum_k dual[m][k] psi(k) E(k)`.
    pub fn dual_element(&self, m: usize) -> WordElt {
        let c: Vec<RationalFunction> = self.dual[m]
            .iter()
            .zip(&self.exponents)
            .map(|(d, k)| (d * &psi_product(k)).into())
            .collect();
        self.combine(&c)
    }

    /// Re-checks the structural invariants, e.g. after loading from disk.
    pub fn validate(&self) -> Result<()> {
        let n = self.dim();
        invariant!(
            self.monomials.len() == n
                && self.images.len() == n
                && self.gram.len() == n
                && self.bar.len() == n
                && self.canonical.len() == n
                && self.dual.len() == n,
            "table dimensions disagree"
        );
        invariant!(
            self.exponents.windows(2).all(|p| p[0] < p[1]),
            "exponents not sorted"
        );
        for m in 0..n {
            for k in 0..n {
                let g = &self.gram[m][k];
                if m == k {
                    let law =
                        RationalFunction::new(LaurentPoly::one(), psi_product(&self.exponents[m]));
                    invariant!(*g == law, "Gram diagonal at {:?} is {g}", self.exponents[m]);
                } else {
                    invariant!(g.is_zero(), "Gram matrix not diagonal at {m},{k}");
                }
                let (b, p, d) = (&self.bar[m][k], &self.canonical[m][k], &self.dual[m][k]);
                if m == k {
                    invariant!(
                        b.is_one() && p.is_one() && d.is_one(),
                        "diagonal entry not 1 at {m}"
                    );
                } else if k < m {
                    invariant!(
                        b.is_zero() && p.is_zero(),
                        "upper triangularity fails at {m},{k}"
                    );
                    invariant!(d.in_q_zq(), "dual coefficient {d} outside qZ[q] at {m},{k}");
                } else {
                    invariant!(d.is_zero(), "lower triangularity fails at {m},{k}");
                    invariant!(
                        p.in_q_zq(),
                        "canonical coefficient {p} outside qZ[q] at {m},{k}"
                    );
                }
            }
        }
        Ok(())
    }
}

impl Algebra {
    /// The transition table for `(w, weight)`, from memory, the attached store, or freshly built.
    pub fn table(&self, w: &Word, weight: &Root) -> Result<std::sync::Arc<TransitionTable>> {
        let key = (w.clone(), weight.clone());
        if let Some(t) = self.tables.read().unwrap().get(&key) {
            return Ok(t.clone());
        }
        self.check_rank(w.rank())?;
        self.check_tr(w.rank(), weight)?;
        let loaded = self
            .store
            .as_ref()
            .and_then(|s| s.load(w, weight))
            .filter(|t| t.word == *w && t.weight == *weight && t.validate().is_ok());
        let table = match loaded {
            Some(t) => {
                self.stats
                    .loaded
                    .fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                t
            }
            None => {
                let t = self.build_table(w, weight)?;
                self.stats
                    .built
                    .fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                if let Some(s) = &self.store {
                    s.store(&t);
                }
                t
            }
        };
        let t = std::sync::Arc::new(table);
        Ok(self.tables.write().unwrap().entry(key).or_insert(t).clone())
    }

    /// Computes a table from scratch, checking every invariant along the way.
    pub fn build_table(&self, w: &Word, weight: &Root) -> Result<TransitionTable> {
        if weight.rank() != w.rank() {
            return Err(Error::RankMismatch(w.rank(), weight.rank()));
        }
        let roots = w.roots()?;
        let exponents = exponents_of_weight(&roots, weight);
        let monomials: Vec<WordElt> = exponents
            .iter()
            .map(|m| self.pbw_monomial(w, m))
            .collect::<Result<_>>()?;
        let images: Vec<Vec<RationalFunction>> = monomials.iter().map(|x| self.image(x)).collect();
        let n = exponents.len();
        let mut t = TransitionTable {
            word: w.clone(),
            weight: weight.clone(),
            exponents,
            monomials,
            images,
            gram: Vec::new(),
            bar: Vec::new(),
            canonical: Vec::new(),
            dual: Vec::new(),
        };

        t.gram = (0..n)
            .map(|m| {
                (0..n)
                    .map(|k| t.pair_index(self, &t.monomials[m], k))
                    .collect()
            })
            .collect();
        for m in 0..n {
            for k in 0..n {
                if m != k {
                    invariant!(
                        t.gram[m][k].is_zero(),
                        "Gram matrix of {w:?} at {weight:?} is not diagonal"
                    );
                }
            }
            let law = RationalFunction::new(LaurentPoly::one(), psi_product(&t.exponents[m]));
            invariant!(
                t.gram[m][m] == law,
                "dual PBW law fails for {w:?} at {:?}: norm {}",
                t.exponents[m],
                t.gram[m][m]
            );
        }

        let mut bar = vec![vec![LaurentPoly::zero(); n]; n];
        for m in 0..n {
            let coords = t.pbw_coords(self, &t.monomials[m].eta())?;
            for (k, c) in coords.into_iter().enumerate() {
                bar[m][k] = c.into_laurent().ok_or_else(|| {
                    Error::Invariant(format!(
                        "bar coefficient not a Laurent polynomial in {w:?} at {weight:?}"
                    ))
                })?;
            }
            invariant!(
                bar[m][m].is_one(),
                "bar matrix diagonal is {} at {:?} in {w:?}",
                bar[m][m],
                t.exponents[m]
            );
            for k in 0..m {
                invariant!(
                    bar[m][k].is_zero(),
                    "bar matrix not triangular in {w:?} at {weight:?}"
                );
            }
        }
        t.bar = bar;

        // p_mk - bar(p_mk) = sum_{m <= j < k} bar(p_mj) a_jk, solved in increasing k
        let mut p = vec![vec![LaurentPoly::zero(); n]; n];
        for m in 0..n {
            p[m][m] = LaurentPoly::one();
            for k in m + 1..n {
                let mut r = LaurentPoly::zero();
                for j in m..k {
                    if !p[m][j].is_zero() && !t.bar[j][k].is_zero() {
                        r += &(&p[m][j].bar() * &t.bar[j][k]);
                    }
                }
                invariant!(
                    r.bar() == -&r && r.coeff(0) == 0.into(),
                    "canonical solve: residue {r} is not bar-antisymmetric in {w:?} at {:?}",
                    t.exponents[m]
                );
                p[m][k] = positive_part(&r);
            }
        }
        t.canonical = p;

        // dual = (canonical^T)^{-1}
        let mut c = vec![vec![LaurentPoly::zero(); n]; n];
        for m in 0..n {
            c[m][m] = LaurentPoly::one();
            for k in (0..m).rev() {
                let mut acc = LaurentPoly::zero();
                for j in k + 1..=m {
                    if !c[m][j].is_zero() && !t.canonical[k][j].is_zero() {
                        acc += &(&c[m][j] * &t.canonical[k][j]);
                    }
                }
                c[m][k] = -acc;
            }
        }
        t.dual = c;
        t.validate()?;
        Ok(t)
    }
}
