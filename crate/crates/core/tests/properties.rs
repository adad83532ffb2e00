//! Randomized checks at ranks beyond the exhaustive sweeps.

use hessgkm::hessenberg::{
    admissible_representative, cell_dimension, h_length, is_admissible, HessenbergFunction,
};
use hessgkm::perm::{bruhat_leq, compose, Permutation};
use hessgkm::verify::oracle_bruhat;
use proptest::prelude::*;

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_slice(&v).unwrap())
}

/// Nondecreasing h with h(i) >= i, built from random lower bounds.
fn hessenberg(n: usize) -> impl Strategy<Value = HessenbergFunction> {
    prop::collection::vec(0..=n, n).prop_map(move |raw| {
        let mut vals = Vec::with_capacity(n);
        let mut prev = 1;
        for (i, r) in raw.into_iter().enumerate() {
            let v = r.max(i + 1).max(prev).min(n);
            vals.push(v);
            prev = v;
        }
        HessenbergFunction::new(vals).unwrap()
    })
}

fn pair_with_h(
    lo: usize,
    hi: usize,
) -> impl Strategy<Value = (Permutation, Permutation, HessenbergFunction)> {
    (lo..=hi).prop_flat_map(|n| (permutation(n), permutation(n), hessenberg(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bruhat_matches_chain_oracle((u, v, _) in pair_with_h(5, 7)) {
        prop_assert_eq!(bruhat_leq(&u, &v).unwrap(), oracle_bruhat(&u, &v).unwrap());
    }

    #[test]
    fn composition_lengths((u, v, _) in pair_with_h(2, 8)) {
        let uv = compose(&u, &v).unwrap();
        prop_assert!(uv.length() <= u.length() + v.length());
        prop_assert_eq!((u.length() + v.length() - uv.length()) % 2, 0);
        prop_assert!(compose(&u, &u.inverse()).unwrap().is_identity());
    }

    #[test]
    fn representative_is_admissible((w, _, h) in pair_with_h(2, 8)) {
        let (rep, _) = admissible_representative(&w, &h).unwrap();
        prop_assert!(is_admissible(&rep, &h).unwrap());
        let d: usize = (1..=h.n()).map(|i| h.at(i) - i).sum();
        prop_assert_eq!(cell_dimension(&w, &h).unwrap() + h_length(&w, &h).unwrap(), d);
    }
}
