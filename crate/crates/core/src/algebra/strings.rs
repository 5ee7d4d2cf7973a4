//! `delta`-strings, braid-group rotations and PBW strings.

use crate::coeff::{quantum_factorial, LaurentPoly, RationalFunction};
use crate::error::{invariant, Error, Result};
use crate::tropical::ParamVector;
use crate::weyl::{reduced_words_w0, Word};

use super::element::WordElt;
use super::Algebra;

impl Algebra {
    pub fn delta(&self, i: u8, x: &WordElt) -> WordElt {
        x.delta(i)
    }

    /// `(delta_i^{(r)}(x), r)` with `r = phi_i(x)` the largest order such that `delta_i^r(x) != 0`.
    pub fn delta_max(&self, i: u8, x: &WordElt) -> Result<(WordElt, u32)> {
        if self.is_zero(x) {
            return Err(Error::Precondition("phi is undefined on zero".into()));
        }
        let mut cur = x.clone();
        let mut r = 0u32;
        loop {
            let next = cur.delta(i);
            if self.is_zero(&next) {
                break;
            }
            cur = next;
            r += 1;
        }
        let div = RationalFunction::new(LaurentPoly::one(), quantum_factorial(r));
        Ok((cur.scale(&div), r))
    }

    /// Iterated `delta_max` along the letters of `w`.
    pub fn string(&self, x: &WordElt, w: &Word) -> Result<ParamVector> {
        let mut cur = x.clone();
        let mut out = Vec::with_capacity(w.len());
        for &i in w.letters() {
            let (next, r) = self.delta_max(i, &cur)?;
            out.push(r as i64);
            cur = next;
        }
        invariant!(
            cur.tr() == 0 && cur.weight().is_zero() && !self.is_zero(&cur),
            "string residue is not a nonzero scalar: {cur:?}"
        );
        Ok(ParamVector(out))
    }

    /// `T_i^{-1}(x)` for `x` in the kernel of `delta_i`, using the least
    /// reduced word for `w0` that starts with `i`.
    pub fn saito_rotation(&self, x: &WordElt, i: u8) -> Result<WordElt> {
        let w = reduced_words_w0(x.rank())?
            .iter()
            .find(|w| w.letters()[0] == i)
            .cloned()
            .ok_or_else(|| Error::Precondition(format!("letter {i} outside the rank")))?;
        self.rotate_along(x, &w)
    }

    /// `T_{w_1}^{-1}(x)` through the PBW basis of `w`: coordinates at
    /// `(0, m_2, ..., m_N)` move to `(m_2, ..., m_N, 0)` over the rotated word.
    pub fn rotate_along(&self, x: &WordElt, w: &Word) -> Result<WordElt> {
        let i = w.letters()[0];
        if !self.is_zero(&x.delta(i)) {
            return Err(Error::Precondition(format!(
                "element is not in the kernel of delta_{i}"
            )));
        }
        let target = x.weight().reflect(i);
        let rotated = w.rotate();
        let mut out = WordElt::zero(x.rank(), target);
        for (m, c) in self.to_pbw(x, w)?.terms {
            invariant!(
                m.entries()[0] == 0,
                "kernel element has PBW support at {m:?}"
            );
            let mut n = m.entries()[1..].to_vec();
            n.push(0);
            out = out.add(&self.pbw_monomial(&rotated, &ParamVector(n))?.scale(&c))?;
        }
        Ok(out)
    }

    /// `m_k = phi_{w_k}` of the successively peeled and rotated element.
    ///
    /// The first peel is computed in the word model. After that the element
    /// is carried in PBW coordinates: over a word starting with `i`,
    /// `E(m) = E_i^{(m_1)} Y` with `delta_i(Y) = 0`, so `phi_i` is the largest
    /// `m_1` in the support and `delta_i^{(r)}` acts on the top terms by the
    /// scalar `q^{-r(r-1)/2} (1-q^2)^{-r} / [r]!`. Rotation then shifts exponents.
    /// This keeps every table at or below the weight of `x`; rotated weights can
    /// be almost twice as high.
    pub fn pbw_string(&self, x: &WordElt, w: &Word) -> Result<ParamVector> {
        let i = w.letters()[0];
        let (peeled, r) = self.delta_max(i, x)?;
        let mut out = vec![r as i64];
        let mut terms: Vec<(Vec<i64>, RationalFunction)> = Vec::new();
        for (m, c) in self.to_pbw(&peeled, w)?.terms {
            invariant!(
                m.entries()[0] == 0,
                "peeled element has PBW support at {m:?}"
            );
            terms.push((m.entries().to_vec(), c));
        }
        for _ in 1..w.len() {
            // rotate: (0, m_2, ..., m_N) -> (m_2, ..., m_N, 0)
            for (m, _) in terms.iter_mut() {
                m.remove(0);
                m.push(0);
            }
            let top = terms.iter().map(|(m, _)| m[0]).max().unwrap_or(0);
            let scale = peel_scalar(top as u32);
            terms = terms
                .into_iter()
                .filter(|(m, _)| m[0] == top)
                .map(|(mut m, c)| {
                    m[0] = 0;
                    (m, &c * &scale)
                })
                .collect();
            out.push(top);
        }
        invariant!(
            terms.len() == 1 && terms[0].0.iter().all(|&e| e == 0) && !terms[0].1.is_zero(),
            "PBW string residue is not a nonzero scalar"
        );
        Ok(ParamVector(out))
    }

    /// The same string with every intermediate element materialized in the
    /// word model and rotated through [`Algebra::rotate_along`]. Needs tables
    /// at the rotated weights, so it is only practical for small weights.
    pub fn pbw_string_materialized(&self, x: &WordElt, w: &Word) -> Result<ParamVector> {
        let mut cur = x.clone();
        let mut word = w.clone();
        let mut out = Vec::with_capacity(w.len());
        for step in 0..w.len() {
            let i = word.letters()[0];
            let (peeled, r) = self.delta_max(i, &cur)?;
            out.push(r as i64);
            if step + 1 < w.len() {
                cur = self.rotate_along(&peeled, &word)?;
                word = word.rotate();
            } else {
                cur = peeled;
            }
        }
        invariant!(
            cur.weight().is_zero() && !self.is_zero(&cur),
            "PBW string residue is not a nonzero scalar"
        );
        Ok(ParamVector(out))
    }
}

/// `delta_i^{(r)}(E_i^{(r)})`.
fn peel_scalar(r: u32) -> RationalFunction {
    let e = -((r as i64) * (r as i64 - 1)) / 2;
    let den = &crate::algebra::element::one_minus_q2().pow(r) * &quantum_factorial(r);
    RationalFunction::new(LaurentPoly::monomial(1, e), den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::Root;

    fn psi1() -> LaurentPoly {
        LaurentPoly::from_terms([(0, 1), (2, -1)])
    }

    #[test]
    fn delta_examples() {
        let alg = Algebra::default();
        let e1 = WordElt::generator(1, 2);
        let d = alg.delta(1, &e1);
        assert_eq!(
            d.coeff(&[]),
            RationalFunction::new(LaurentPoly::one(), psi1())
        );
        assert!(alg.is_zero(&alg.delta(1, &WordElt::generator(2, 2))));
        for r in 1..5u32 {
            let x = super::super::divided_power(&e1, r);
            let expected = super::super::divided_power(&e1, r - 1).scale(&RationalFunction::new(
                LaurentPoly::monomial(1, 1 - r as i64),
                psi1(),
            ));
            assert!(alg.equal(&alg.delta(1, &x), &expected).unwrap());
        }
        assert!(alg
            .delta_max(1, &WordElt::zero(2, Root(vec![1, 0])))
            .is_err());
    }

    #[test]
    fn string_examples() {
        let alg = Algebra::default();
        let w = Word::new(2, vec![1, 2, 1]).unwrap();
        let x = WordElt::generator(1, 2).scale_laurent(&psi1());
        assert_eq!(alg.string(&x, &w).unwrap(), ParamVector(vec![1, 0, 0]));
        assert_eq!(alg.pbw_string(&x, &w).unwrap(), ParamVector(vec![1, 0, 0]));
        assert_eq!(
            alg.pbw_string_materialized(&x, &w).unwrap(),
            ParamVector(vec![1, 0, 0])
        );
        let y = WordElt::generator(2, 2).scale_laurent(&psi1());
        assert_eq!(alg.string(&y, &w).unwrap(), ParamVector(vec![0, 1, 0]));
    }

    #[test]
    fn rotation_examples() {
        let alg = Algebra::default();
        let e2 = WordElt::generator(2, 2);
        let r = alg.saito_rotation(&e2, 1).unwrap();
        assert_eq!(r.weight(), &Root(vec![1, 1]));
        assert!(alg.saito_rotation(&WordElt::generator(1, 2), 1).is_err());
        // E_{beta_2} for (1,2,1) rotates to the first root vector of (2,1,2)
        let a = Word::new(2, vec![1, 2, 1]).unwrap();
        let mid = alg.root_vector(&a, 2).unwrap();
        if alg.is_zero(&mid.delta(1)) {
            let r = alg.rotate_along(&mid, &a).unwrap();
            let v = alg.to_pbw(&r, &a.rotate()).unwrap();
            assert_eq!(
                v.terms.keys().cloned().collect::<Vec<_>>(),
                vec![ParamVector(vec![1, 0, 0])]
            );
        }
    }
}

#[cfg(test)]
mod peel_tests {
    use super::*;

    #[test]
    fn peel_scalar_matches_word_model() {
        let alg = Algebra::default();
        let e1 = WordElt::generator(1, 1);
        for r in 0..5u32 {
            let (res, phi) = alg
                .delta_max(1, &crate::algebra::divided_power(&e1, r))
                .unwrap();
            assert_eq!(phi, r);
            assert!(alg
                .equal(&res, &WordElt::unit(1).scale(&peel_scalar(r)))
                .unwrap());
        }
    }
}
