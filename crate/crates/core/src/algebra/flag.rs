//! Quantum flag minors of adapted words and the bilinear form that governs
//! their `q`-commutation.

use crate::error::{Error, Result};
use crate::tropical::ParamVector;
use crate::weyl::{cartan_pairing, is_adapted, Word};

use super::element::WordElt;
use super::Algebra;

/// `d(m, n) = sum_{j < i} (beta_i, beta_j) m_i n_j + sum_i m_i n_i`.
pub fn d_form(w: &Word, m: &ParamVector, n: &ParamVector) -> Result<i64> {
    let roots = w.roots()?;
    if m.len() != roots.len() || n.len() != roots.len() {
        return Err(Error::Precondition(
            "exponent length differs from the word length".into(),
        ));
    }
    let (m, n) = (m.entries(), n.entries());
    let mut s = 0;
    for i in 0..roots.len() {
        if m[i] == 0 {
            continue;
        }
        s += m[i] * n[i];
        for j in 0..i {
            s += cartan_pairing(&roots[i], &roots[j]) * m[i] * n[j];
        }
    }
    Ok(s)
}

/// `n_k = sum of e_t over t <= k with w_t = w_k` (1-based `k`).
pub fn flag_exponent(w: &Word, k: usize) -> Result<ParamVector> {
    if k == 0 || k > w.len() {
        return Err(Error::Precondition(format!(
            "position {k} outside 1..={}",
            w.len()
        )));
    }
    let l = w.letters();
    Ok(ParamVector(
        (0..l.len())
            .map(|t| i64::from(t < k && l[t] == l[k - 1]))
            .collect(),
    ))
}

impl Algebra {
    /// The quantum flag minor `B(n_k)^*` of an adapted word.
    pub fn flag_minor(&self, w: &Word, k: usize) -> Result<WordElt> {
        if !is_adapted(w) {
            return Err(Error::Precondition(format!(
                "{w:?} is not adapted to a quiver"
            )));
        }
        self.dual_canonical(w, &flag_exponent(w, k)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::LaurentPoly;

    fn e(len: usize, t: usize) -> ParamVector {
        ParamVector::unit(len, t)
    }

    #[test]
    fn d_form_examples() {
        let w = Word::new(2, vec![1, 2, 1]).unwrap();
        assert_eq!(d_form(&w, &e(3, 2), &e(3, 1)).unwrap(), 1);
        assert_eq!(d_form(&w, &e(3, 1), &e(3, 1)).unwrap(), 1);
        assert_eq!(d_form(&w, &e(3, 1), &e(3, 2)).unwrap(), 0);
    }

    #[test]
    fn flag_minor_examples() {
        let alg = Algebra::default();
        let w = Word::new(2, vec![1, 2, 1]).unwrap();
        let psi1 = LaurentPoly::from_terms([(0, 1), (2, -1)]);
        assert_eq!(
            alg.flag_minor(&w, 1).unwrap(),
            WordElt::generator(1, 2).scale_laurent(&psi1)
        );
        assert_eq!(flag_exponent(&w, 3).unwrap(), ParamVector(vec![1, 0, 1]));
        let x = alg.flag_minor(&w, 3).unwrap();
        assert_eq!(
            alg.lusztig_parameter(&x, &w).unwrap(),
            ParamVector(vec![1, 0, 1])
        );
        let non_adapted = Word::new(3, vec![2, 1, 3, 2, 3, 1]);
        if let Ok(v) = non_adapted {
            if v.is_reduced_w0() && !is_adapted(&v) {
                assert!(alg.flag_minor(&v, 1).is_err());
            }
        }
    }
}
