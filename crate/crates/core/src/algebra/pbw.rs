//! Root vectors and PBW monomials attached to a reduced word.

use std::sync::Arc;

use crate::coeff::{quantum_factorial, LaurentPoly, RationalFunction};
use crate::error::{invariant, Error, Result};
use crate::tropical::ParamVector;
use crate::weyl::{cartan_pairing, Root, Word};

use super::element::{one_minus_q2, WordElt};
use super::Algebra;

/// All `m >= 0` with `sum_t m_t beta_t = weight`, sorted lexicographically.
pub fn exponents_of_weight(roots: &[Root], weight: &Root) -> Vec<ParamVector> {
    fn go(roots: &[Root], t: usize, rest: &Root, cur: &mut Vec<i64>, out: &mut Vec<ParamVector>) {
        if t == roots.len() {
            if rest.is_zero() {
                out.push(ParamVector(cur.clone()));
            }
            return;
        }
        let mut r = rest.clone();
        let mut k = 0;
        loop {
            cur.push(k);
            go(roots, t + 1, &r, cur, out);
            cur.pop();
            r = &r - &roots[t];
            if !r.is_nonnegative() {
                break;
            }
            k += 1;
        }
    }
    let mut out = Vec::new();
    if weight.is_nonnegative() {
        go(
            roots,
            0,
            weight,
            &mut Vec::with_capacity(roots.len()),
            &mut out,
        );
    }
    out.sort();
    out
}

/// `x^e / [e]!`.
pub fn divided_power(x: &WordElt, e: u32) -> WordElt {
    x.pow(e).scale(&RationalFunction::new(
        LaurentPoly::one(),
        quantum_factorial(e),
    ))
}

impl Algebra {
    /// `E_{beta_1}, ..., E_{beta_N}` for `w`.
    ///
    /// A non-simple `beta_t` is built from the pair `r < t < s` with
    /// `beta_r + beta_s = beta_t`, largest `r` then smallest `s`, as
    /// `E_{beta_s} E_{beta_r} - q^{-(beta_r, beta_s)} E_{beta_r} E_{beta_s}`,
    /// rescaled by a power of `q` so that its norm is `(1-q^2)^{-1}`.
    pub fn root_vectors(&self, w: &Word) -> Result<Arc<Vec<WordElt>>> {
        if let Some(v) = self.root_vectors.read().unwrap().get(w) {
            return Ok(v.clone());
        }
        self.check_rank(w.rank())?;
        let roots = w.roots()?;
        let n = roots.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&t| roots[t].height());
        let mut vecs: Vec<Option<WordElt>> = vec![None; n];
        let target = RationalFunction::new(LaurentPoly::one(), one_minus_q2());
        for t in order {
            let beta = &roots[t];
            if beta.height() == 1 {
                let j = beta.0.iter().position(|&c| c == 1).unwrap() as u8 + 1;
                vecs[t] = Some(WordElt::generator(j, w.rank()));
                continue;
            }
            let (r, s) = (0..t)
                .rev()
                .find_map(|r| {
                    (t + 1..n)
                        .find(|&s| &(&roots[r] + &roots[s]) == beta)
                        .map(|s| (r, s))
                })
                .ok_or_else(|| {
                    Error::Invariant(format!("no splitting pair for root {beta:?} in {w:?}"))
                })?;
            let er = vecs[r].as_ref().expect("lower height");
            let es = vecs[s].as_ref().expect("lower height");
            let c = -cartan_pairing(&roots[r], &roots[s]);
            let x = es.mul(er)?.sub(&er.mul(es)?.shift(c))?;
            let ratio = self.form(&x, &x).checked_div(&target).ok_or_else(|| {
                Error::Invariant(format!("root vector for {beta:?} has norm zero"))
            })?;
            let mono = ratio
                .as_laurent()
                .and_then(|p| p.as_monomial().map(|(c, e)| (c.clone(), e)));
            let e = match mono {
                Some((c, e)) if c == 1.into() && e % 2 == 0 => e,
                _ => {
                    return Err(Error::Invariant(format!(
                        "root vector for {beta:?} in {w:?} has norm ratio {ratio}, not an even power of q"
                    )))
                }
            };
            let x = x.shift(-e / 2);
            invariant!(
                self.form(&x, &x) == target,
                "normalization failed for {beta:?}"
            );
            vecs[t] = Some(x);
        }
        let vecs = Arc::new(vecs.into_iter().map(|v| v.unwrap()).collect::<Vec<_>>());
        self.root_vectors
            .write()
            .unwrap()
            .insert(w.clone(), vecs.clone());
        Ok(vecs)
    }

    /// `E_{beta_t}` (1-based `t`).
    pub fn root_vector(&self, w: &Word, t: usize) -> Result<WordElt> {
        if t == 0 || t > w.len() {
            return Err(Error::Precondition(format!(
                "position {t} outside 1..={}",
                w.len()
            )));
        }
        Ok(self.root_vectors(w)?[t - 1].clone())
    }

    /// `E(m) = prod_t E_{beta_t}^{(m_t)}` in increasing `t`.
    pub fn pbw_monomial(&self, w: &Word, m: &ParamVector) -> Result<WordElt> {
        if m.len() != w.len() || !m.is_nonnegative() {
            return Err(Error::Precondition(format!("bad exponent {m:?} for {w:?}")));
        }
        let rv = self.root_vectors(w)?;
        let mut out = WordElt::unit(w.rank());
        for (t, &e) in m.entries().iter().enumerate() {
            if e > 0 {
                out = out.mul(&divided_power(&rv[t], e as u32))?;
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(rank: usize, l: &[u8]) -> Word {
        Word::new(rank, l.to_vec()).unwrap()
    }

    #[test]
    fn a2_root_vectors() {
        let alg = Algebra::default();
        let a = w(2, &[1, 2, 1]);
        assert_eq!(alg.root_vector(&a, 1).unwrap(), WordElt::generator(1, 2));
        assert_eq!(alg.root_vector(&a, 3).unwrap(), WordElt::generator(2, 2));
        let mid = alg.root_vector(&a, 2).unwrap();
        let expected = WordElt::from_terms(
            2,
            [
                (vec![2, 1], RationalFunction::one()),
                (vec![1, 2], -RationalFunction::q_power(1)),
            ],
        )
        .unwrap();
        assert_eq!(mid, expected);
        let b = w(2, &[2, 1, 2]);
        let mid_b = alg.root_vector(&b, 2).unwrap();
        assert!(!alg.equal(&mid, &mid_b).unwrap());
        assert!(alg.root_vector(&a, 4).is_err());
    }

    #[test]
    fn monomials() {
        let alg = Algebra::default();
        let a = w(2, &[1, 2, 1]);
        assert_eq!(
            alg.pbw_monomial(&a, &ParamVector(vec![0, 0, 0])).unwrap(),
            WordElt::unit(2)
        );
        let x = alg.pbw_monomial(&a, &ParamVector(vec![2, 0, 0])).unwrap();
        assert_eq!(
            x.coeff(&[1, 1]),
            RationalFunction::new(LaurentPoly::one(), quantum_factorial(2))
        );
        assert_eq!(
            alg.pbw_monomial(&a, &ParamVector(vec![0, 1, 0])).unwrap(),
            alg.root_vector(&a, 2).unwrap()
        );
    }

    #[test]
    fn exponent_enumeration() {
        let a = w(2, &[1, 2, 1]);
        let ex = exponents_of_weight(&a.roots().unwrap(), &Root(vec![1, 1]));
        assert_eq!(
            ex,
            vec![ParamVector(vec![0, 1, 0]), ParamVector(vec![1, 0, 1])]
        );
    }

    #[test]
    fn rank3_root_vectors_have_unit_norm() {
        let alg = Algebra::default();
        for word in crate::weyl::reduced_words_w0(3).unwrap().iter() {
            assert_eq!(alg.root_vectors(word).unwrap().len(), 6);
        }
    }
}
