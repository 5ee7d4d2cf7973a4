use std::collections::BTreeMap;

use serde::Serialize;

use crate::coeff::{uniform_proportionality, RationalFunction};
use crate::error::{invariant, Error, Result};
use crate::tropical::ParamVector;
use crate::weyl::{cartan_pairing, Word};

use super::element::WordElt;
use super::Algebra;

/// An element written in the PBW basis of one reduced word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PbwVector {
    pub word: Word,
    pub terms: BTreeMap<ParamVector, RationalFunction>,
}

impl PbwVector {
    pub fn to_word_elt(&self, alg: &Algebra) -> Result<WordElt> {
        let mut out: Option<WordElt> = None;
        for (m, c) in &self.terms {
            let x = alg.pbw_monomial(&self.word, m)?.scale(c);
            out = Some(match out {
                None => x,
                Some(acc) => acc.add(&x)?,
            });
        }
        out.ok_or_else(|| Error::Precondition("empty PBW vector has no weight".into()))
    }
}

impl Algebra {
    /// Coordinates of `x` in the PBW basis of `w`.
    pub fn to_pbw(&self, x: &WordElt, w: &Word) -> Result<PbwVector> {
        let t = self.table(w, x.weight())?;
        let coords = t.pbw_coords(self, x)?;
        Ok(PbwVector {
            word: w.clone(),
            terms: t
                .exponents
                .iter()
                .zip(coords)
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (m.clone(), c))
                .collect(),
        })
    }

    /// `B(m)^*`, checked against its characterization by the bar-twist
    /// eigenvalue and the leading dual PBW term.
    pub fn dual_canonical(&self, w: &Word, m: &ParamVector) -> Result<WordElt> {
        let roots = w.roots()?;
        if m.len() != roots.len() || !m.is_nonnegative() {
            return Err(Error::Precondition(format!("bad exponent {m:?} for {w:?}")));
        }
        let weight = m.weight(&roots);
        let t = self.table(w, &weight)?;
        let idx = t.index_of(m).expect("exponent of its own weight");
        let x = t.dual_element(idx);

        // eta(X) = (-1)^tr q^{-(wt,wt)/2} q^{-tr} sigma(X)
        let tr = x.tr() as i64;
        let e = -cartan_pairing(&weight, &weight) / 2 - tr;
        let mut rhs = x.sigma().shift(e);
        if tr % 2 == 1 {
            rhs = rhs.neg();
        }
        invariant!(
            self.equal(&x.eta(), &rhs)?,
            "bar-twist eigenvalue fails for B({m:?})* over {w:?}"
        );
        let d = t.dual_pbw_coords(self, &x)?;
        for (k, c) in d.iter().enumerate() {
            if k == idx {
                invariant!(
                    c.is_one(),
                    "leading dual PBW coefficient of B({m:?})* is {c}"
                );
            } else {
                let ok = c.is_zero() || (k < idx && c.as_laurent().is_some_and(|p| p.in_q_zq()));
                invariant!(
                    ok,
                    "B({m:?})* has dual PBW coefficient {c} at {:?}",
                    t.exponents[k]
                );
            }
        }
        Ok(x)
    }

    /// Returns `(m, k)` if `x = q^k (E(m)^* + q sum_{n < m} c_n E(n)^*)` with
    /// `c_n` in `Z[q]` and `sigma(eta(x))` proportional to `x`; these two
    /// conditions characterize `q^Z B^*`. Strict mode also requires `k = 0`.
    pub fn is_dual_canonical(
        &self,
        x: &WordElt,
        w: &Word,
        strict: bool,
    ) -> Result<Option<(ParamVector, i64)>> {
        let t = self.table(w, x.weight())?;
        let d = t.dual_pbw_coords(self, x)?;
        let Some(lead) = d.iter().rposition(|c| !c.is_zero()) else {
            return Ok(None);
        };
        let k = match d[lead]
            .as_laurent()
            .and_then(|p| p.as_monomial().map(|(c, e)| (c.clone(), e)))
        {
            Some((c, e)) if c == 1.into() => e,
            _ => return Ok(None),
        };
        for c in &d[..lead] {
            if !c.is_zero() && !c.shift(-k).as_laurent().is_some_and(|p| p.in_q_zq()) {
                return Ok(None);
            }
        }
        let twisted = t.dual_pbw_coords(self, &x.sigma_eta())?;
        if uniform_proportionality(twisted.iter().zip(&d)).is_none() {
            return Ok(None);
        }
        if strict && k != 0 {
            return Ok(None);
        }
        Ok(Some((t.exponents[lead].clone(), k)))
    }

    /// The Lusztig parameter of an element of `q^Z B^*`.
    pub fn lusztig_parameter(&self, x: &WordElt, w: &Word) -> Result<ParamVector> {
        self.is_dual_canonical(x, w, false)?
            .map(|(m, _)| m)
            .ok_or_else(|| {
                Error::Precondition(format!(
                    "element is not dual canonical up to a power of q: {x:?}"
                ))
            })
    }

    /// `n` with `yx = q^n xy` in `U^+`, if it exists.
    pub fn q_commutation(&self, x: &WordElt, y: &WordElt) -> Result<Option<i64>> {
        let xy = x.mul(y)?;
        let yx = y.mul(x)?;
        let a = self.image(&yx);
        let b = self.image(&xy);
        Ok(match uniform_proportionality(a.iter().zip(&b)) {
            Some((1, n)) => Some(n),
            _ => None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::LaurentPoly;
    use crate::weyl::Root;

    fn w(l: &[u8]) -> Word {
        Word::new(2, l.to_vec()).unwrap()
    }

    fn pv(v: &[i64]) -> ParamVector {
        ParamVector(v.to_vec())
    }

    #[test]
    fn dual_of_generator() {
        let alg = Algebra::default();
        let x = alg.dual_canonical(&w(&[1, 2, 1]), &pv(&[1, 0, 0])).unwrap();
        let expected =
            WordElt::generator(1, 2).scale_laurent(&LaurentPoly::from_terms([(0, 1), (2, -1)]));
        assert_eq!(x, expected);
        assert_eq!(
            alg.is_dual_canonical(&x, &w(&[1, 2, 1]), true).unwrap(),
            Some((pv(&[1, 0, 0]), 0))
        );
    }

    #[test]
    fn q_powers_and_sums() {
        let alg = Algebra::default();
        let a = w(&[1, 2, 1]);
        let x = alg.dual_canonical(&a, &pv(&[0, 1, 0])).unwrap();
        let y = alg.dual_canonical(&a, &pv(&[1, 0, 1])).unwrap();
        assert_eq!(
            alg.is_dual_canonical(&x, &a, true).unwrap(),
            Some((pv(&[0, 1, 0]), 0))
        );
        assert_eq!(
            alg.is_dual_canonical(&x.shift(3), &a, false).unwrap(),
            Some((pv(&[0, 1, 0]), 3))
        );
        assert_eq!(alg.is_dual_canonical(&x.shift(3), &a, true).unwrap(), None);
        assert_eq!(
            alg.is_dual_canonical(&x.add(&y).unwrap(), &a, false)
                .unwrap(),
            None
        );
        assert_eq!(
            alg.lusztig_parameter(&x.shift(5), &a).unwrap(),
            pv(&[0, 1, 0])
        );
    }

    #[test]
    fn to_pbw_examples() {
        let alg = Algebra::default();
        let a = w(&[1, 2, 1]);
        let e12 = WordElt::monomial(2, vec![1, 2]).unwrap();
        let v = alg.to_pbw(&e12, &a).unwrap();
        // E1 E2 is itself the monomial E(1,0,1); E2 E1 needs both exponents
        assert_eq!(
            v.terms.keys().cloned().collect::<Vec<_>>(),
            vec![pv(&[1, 0, 1])]
        );
        assert!(alg.equal(&v.to_word_elt(&alg).unwrap(), &e12).unwrap());
        let e21 = WordElt::monomial(2, vec![2, 1]).unwrap();
        let v = alg.to_pbw(&e21, &a).unwrap();
        assert_eq!(
            v.terms.keys().cloned().collect::<Vec<_>>(),
            vec![pv(&[0, 1, 0]), pv(&[1, 0, 1])]
        );
        assert!(v.terms[&pv(&[0, 1, 0])].is_one());
        assert_eq!(v.terms[&pv(&[1, 0, 1])], RationalFunction::q_power(1));
        let m = pv(&[1, 1, 0]);
        let x = alg.pbw_monomial(&a, &m).unwrap();
        let v = alg.to_pbw(&x, &a).unwrap();
        assert_eq!(v.terms.len(), 1);
        assert!(v.terms[&m].is_one());
        let zero = WordElt::zero(2, Root(vec![1, 1]));
        assert!(alg.to_pbw(&zero, &a).unwrap().terms.is_empty());
    }

    #[test]
    fn commutation_of_generators() {
        let alg = Algebra::default();
        let psi1 = LaurentPoly::from_terms([(0, 1), (2, -1)]);
        let e1 = WordElt::generator(1, 2).scale_laurent(&psi1);
        let e2 = WordElt::generator(2, 2).scale_laurent(&psi1);
        assert_eq!(alg.q_commutation(&e1, &e1).unwrap(), Some(0));
        assert_eq!(alg.q_commutation(&e1, &e2).unwrap(), None);
    }
}
