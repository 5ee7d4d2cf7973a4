//! Algebraic and tropical invariants on random inputs.

use proptest::prelude::*;
use qcanon_core::algebra::{Algebra, WordElt};
use qcanon_core::coeff::{LaurentPoly, RationalFunction};
use qcanon_core::tropical::{r_move3, reparametrize, ParamVector};
use qcanon_core::weyl::{cartan_pairing, reduced_words_w0, Root, Word};

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..=4, -3i64..=3), 0..4).prop_map(LaurentPoly::from_terms)
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentPoly> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}

fn rational() -> impl Strategy<Value = RationalFunction> {
    (laurent(), nonzero_laurent()).prop_map(|(n, d)| RationalFunction::new(n, d))
}

/// A homogeneous rank-2 element: a few rearrangements of one letter multiset.
fn element(max_letters: usize) -> impl Strategy<Value = WordElt> {
    prop::collection::vec(1u8..=2, 0..=max_letters).prop_flat_map(|letters| {
        let perms = prop::collection::vec(Just(letters.clone()).prop_shuffle(), 1..4);
        (perms, prop::collection::vec(laurent(), 3)).prop_map(|(ws, cs)| {
            WordElt::from_terms(
                2,
                ws.into_iter()
                    .zip(cs)
                    .map(|(w, c)| (w, RationalFunction::from(c))),
            )
            .unwrap()
        })
    })
}

fn word(rank: usize) -> impl Strategy<Value = Word> {
    let words = reduced_words_w0(rank).unwrap();
    (0..words.len()).prop_map(move |k| words[k].clone())
}

fn params(rank: usize, max: i64) -> impl Strategy<Value = ParamVector> {
    prop::collection::vec(0..=max, rank * (rank + 1) / 2).prop_map(ParamVector)
}

fn serre(alg: &Algebra) -> WordElt {
    let two = RationalFunction::from(LaurentPoly::from_terms([(-1, 1), (1, 1)]));
    let a = WordElt::monomial(2, vec![1, 1, 2]).unwrap();
    let b = WordElt::monomial(2, vec![1, 2, 1]).unwrap().scale(&two);
    let c = WordElt::monomial(2, vec![2, 1, 1]).unwrap();
    let s = a.sub(&b).unwrap().add(&c).unwrap();
    assert!(alg.is_zero(&s));
    s
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
    }

    #[test]
    fn laurent_exact_division(a in laurent(), b in nonzero_laurent()) {
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
    }

    #[test]
    fn rational_field_laws(x in rational(), y in rational()) {
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        prop_assert_eq!(x.bar().bar(), x.clone());
        prop_assert_eq!((&x * &y).bar(), &x.bar() * &y.bar());
        if let Some(inv) = y.inv() {
            prop_assert!((&y * &inv).is_one());
            prop_assert_eq!(&(&x / &y) * &y, x);
        }
    }

    #[test]
    fn twists_are_involutions(x in element(5), y in element(3)) {
        prop_assert_eq!(x.eta().eta(), x.clone());
        prop_assert_eq!(x.sigma().sigma(), x.clone());
        prop_assert_eq!(x.mul(&y).unwrap().eta(), x.eta().mul(&y.eta()).unwrap());
        prop_assert_eq!(x.mul(&y).unwrap().sigma(), y.sigma().mul(&x.sigma()).unwrap());
    }

    #[test]
    fn product_is_associative_and_graded(x in element(3), y in element(3), z in element(3)) {
        let left = x.mul(&y).unwrap().mul(&z).unwrap();
        prop_assert_eq!(&left, &x.mul(&y.mul(&z).unwrap()).unwrap());
        prop_assert_eq!(left.weight(), &(&(x.weight() + y.weight()) + z.weight()));
        prop_assert_eq!(left.tr(), x.tr() + y.tr() + z.tr());
    }

    #[test]
    fn delta_is_a_twisted_derivation(x in element(4), y in element(4), i in 1u8..=2) {
        let alpha = Root::simple(i, 2);
        let lhs = x.mul(&y).unwrap().delta(i);
        prop_assert_eq!(lhs.weight(), &(&(x.weight() + y.weight()) - &alpha));
        // delta_i(xy) = delta_i(x) y + q^{-(alpha_i, wt x)} x delta_i(y)
        let rhs = x
            .delta(i)
            .mul(&y)
            .unwrap()
            .add(&x.mul(&y.delta(i)).unwrap().shift(-cartan_pairing(&alpha, x.weight())))
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn serre_ideal_is_invisible(x in element(2), y in element(2)) {
        let alg = Algebra::default();
        let s = serre(&alg);
        let sandwiched = x.mul(&s).unwrap().mul(&y).unwrap();
        prop_assert!(alg.is_zero(&sandwiched));
        let z = WordElt::monomial(2, vec![2, 1, 1]).unwrap();
        let xzy = x.mul(&z).unwrap().mul(&y).unwrap();
        prop_assert!(alg.equal(&x.mul(&z.add(&s).unwrap()).unwrap().mul(&y).unwrap(), &xzy).unwrap());
    }

    #[test]
    fn braid_update_is_a_piecewise_linear_involution(a in 0i64..50, b in 0i64..50, c in 0i64..50, k in 1i64..5) {
        let (x, y, z) = r_move3(a, b, c);
        prop_assert_eq!(r_move3(x, y, z), (a, b, c));
        prop_assert_eq!(r_move3(k * a, k * b, k * c), (k * x, k * y, k * z));
        // roots (a_i, a_i+a_j, a_j) become (a_j, a_i+a_j, a_i): the weight is kept
        prop_assert_eq!((a + b, b + c), (y + z, x + y));
    }

    #[test]
    fn reparametrization_round_trips(from in word(3), mid in word(3), to in word(3), m in params(3, 6)) {
        let there = reparametrize(&from, &to, &m).unwrap();
        prop_assert_eq!(reparametrize(&to, &from, &there).unwrap(), m.clone());
        let via = reparametrize(&mid, &to, &reparametrize(&from, &mid, &m).unwrap()).unwrap();
        prop_assert_eq!(&via, &there);
        prop_assert!(there.is_nonnegative());
        prop_assert_eq!(there.weight(&to.roots().unwrap()), m.weight(&from.roots().unwrap()));
    }

    #[test]
    fn reparametrization_is_homogeneous(from in word(4), to in word(4), m in params(4, 4), k in 1i64..4) {
        let there = reparametrize(&from, &to, &m).unwrap();
        prop_assert_eq!(reparametrize(&from, &to, &(k * &m)).unwrap(), k * &there);
    }
}
