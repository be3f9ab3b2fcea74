//! Free reduction and homomorphism laws.

use braidforge_core::{evaluate_perm, Letter, Permutation, Word};
use proptest::prelude::*;

fn letters(arity: usize, max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec((1..=arity, any::<bool>()).prop_map(|(g, pos)| Letter::new(g, pos)), 0..max_len)
}

fn words(arity: usize) -> impl Strategy<Value = Word> {
    letters(arity, 30).prop_map(Word::reduced)
}

fn is_reduced(w: &Word) -> bool {
    w.letters().windows(2).all(|p| p[0] != p[1].inverse())
}

/// Images of `s1, s2, s3` in S4.
fn images() -> Vec<Permutation> {
    vec![
        Permutation::transposition(4, 1, 2),
        Permutation::cycle(4, &[2, 3, 4]),
        Permutation::transposition(4, 1, 4),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, ..ProptestConfig::default() })]

    #[test]
    fn reduction_is_idempotent(raw in letters(3, 40)) {
        let w = Word::reduced(raw);
        prop_assert!(is_reduced(&w));
        prop_assert_eq!(Word::reduced(w.letters().to_vec()), w);
    }

    #[test]
    fn inverse_cancels(w in words(3)) {
        prop_assert!(w.concat(&w.inverse()).is_empty());
        prop_assert_eq!(w.inverse().inverse(), w);
    }

    #[test]
    fn concatenation_is_associative(u in words(3), v in words(3), w in words(3)) {
        prop_assert_eq!(u.concat(&v).concat(&w), u.concat(&v.concat(&w)));
    }

    #[test]
    fn evaluation_is_a_homomorphism(u in words(3), v in words(3)) {
        let im = images();
        let uv = evaluate_perm(&u.concat(&v), &im).unwrap();
        let pu = evaluate_perm(&u, &im).unwrap();
        let pv = evaluate_perm(&v, &im).unwrap();
        prop_assert_eq!(uv, pu.compose(&pv));
        let inv = evaluate_perm(&u.inverse(), &im).unwrap();
        prop_assert!(inv.compose(&pu).is_identity());
    }

    #[test]
    fn substitution_is_a_homomorphism(u in words(2), v in words(2), a in words(3), b in words(3)) {
        let im = [a, b];
        prop_assert_eq!(u.concat(&v).substitute(&im), u.substitute(&im).concat(&v.substitute(&im)));
        prop_assert_eq!(u.inverse().substitute(&im), u.substitute(&im).inverse());
    }

    #[test]
    fn powers_add(w in words(3), j in -4i64..5, k in -4i64..5) {
        prop_assert_eq!(w.power(j).concat(&w.power(k)), w.power(j + k));
    }
}
