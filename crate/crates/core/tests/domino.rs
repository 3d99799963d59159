use std::collections::BTreeMap;

use proptest::prelude::*;

use typeb_core::combinat::{core_and_quotient, delta_core, enumerate_bipartitions, Partition};
use typeb_core::domino::{
    insert, qtilde_r, s_t_lambda, standard_bitableaux, verify_insertion_bijection,
};
use typeb_core::orders::OrderParam;
use typeb_core::weyl::{SignedPermutation, WeylGroup};
use typeb_core::Bounds;

fn hook_count(p: &Partition) -> u64 {
    let rows = p.parts();
    let cols = p.conjugate();
    let n = p.size() as u64;
    let mut num: u64 = (1..=n).product();
    for (i, &len) in rows.iter().enumerate() {
        for j in 0..len as usize {
            let hook = len as u64 - j as u64 + cols.parts()[j] as u64 - i as u64 - 1;
            num /= hook;
        }
    }
    num
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn small_shapes() {
    for r in [0, 1, 3] {
        let (p, _) = insert(&SignedPermutation::identity(3), OrderParam::Finite(r)).unwrap();
        let mut rows = delta_core(r).parts().to_vec();
        if rows.is_empty() {
            assert_eq!(p.shape().parts(), [6]);
        } else {
            rows[0] += 6;
            assert_eq!(p.shape().parts(), rows.as_slice());
        }
        let (_, _, lambda) =
            s_t_lambda(&SignedPermutation::identity(3), OrderParam::Finite(r)).unwrap();
        assert_eq!(lambda.to_string(), "(3;∅)");
    }
    let t = SignedPermutation::generator(1, 0);
    assert_eq!(t.window(), [-1]);
    let (p, _) = insert(&t, OrderParam::Finite(0)).unwrap();
    assert_eq!(p.shape().parts(), [1, 1]);
    let (p, _) = insert(&t, OrderParam::Finite(1)).unwrap();
    assert_eq!(p.shape().parts(), [1, 1, 1]);
    let (_, _, lambda) = s_t_lambda(&t, OrderParam::Finite(0)).unwrap();
    assert_eq!(lambda.to_string(), "(∅;1)");
}

#[test]
fn bitableau_counts_follow_hook_formula() {
    for n in 0..=5 {
        for shape in enumerate_bipartitions(n) {
            let (a, b) = (shape.component(0), shape.component(1));
            let expected = binomial(n as u64, a.size() as u64) * hook_count(a) * hook_count(b);
            let tabs = standard_bitableaux(&shape);
            assert_eq!(tabs.len() as u64, expected, "{shape}");
            assert!(tabs.iter().all(|t| t.is_standard() && t.shape() == shape));
        }
    }
}

#[test]
fn fibres_are_products_of_tableaux() {
    for n in 1..=3 {
        let group = WeylGroup::new(n);
        for r in [
            OrderParam::Finite(0),
            OrderParam::Finite(1),
            OrderParam::Finite(2),
            OrderParam::Infinity,
        ] {
            let mut count: BTreeMap<String, usize> = BTreeMap::new();
            for w in group.elements() {
                let (_, _, lambda) = s_t_lambda(w, r).unwrap();
                *count.entry(lambda.to_string()).or_default() += 1;
            }
            for shape in enumerate_bipartitions(n) {
                let f = standard_bitableaux(&shape).len();
                assert_eq!(count.get(&shape.to_string()).copied().unwrap_or(0), f * f);
            }
        }
    }
}

#[test]
fn exhaustive_bijection_reports() {
    let bounds = Bounds::default();
    let r2 = verify_insertion_bijection(2, OrderParam::Finite(0), &bounds).unwrap();
    assert_eq!(r2.elements, 8);
    assert!(r2.passed(), "{:?}", r2.failures);
    for r in 0..=3 {
        let rep = verify_insertion_bijection(3, OrderParam::Finite(r), &bounds).unwrap();
        assert!(rep.passed(), "r={r} {:?}", rep.failures);
    }
}

fn signed_permutation(n: usize) -> impl Strategy<Value = SignedPermutation> {
    (
        Just((1..=n as i32).collect::<Vec<_>>()).prop_shuffle(),
        prop::collection::vec(any::<bool>(), n),
    )
        .prop_map(|(perm, signs)| {
            let window = perm
                .into_iter()
                .zip(signs)
                .map(|(x, neg)| if neg { -x } else { x })
                .collect();
            SignedPermutation::new(window).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn insertion_invariants(w in (1usize..=6).prop_flat_map(signed_permutation), r in 0usize..4) {
        let r = OrderParam::Finite(r);
        let (p, q) = insert(&w, r).unwrap();
        let (p_inv, q_inv) = insert(&w.inverse(), r).unwrap();
        prop_assert_eq!(&q, &p_inv);
        prop_assert_eq!(&p, &q_inv);
        prop_assert_eq!(p.shape(), q.shape());
        let (core, _) = core_and_quotient(&p.shape());
        prop_assert_eq!(core, p.core().clone());
        let s = qtilde_r(&p).unwrap();
        prop_assert!(s.is_standard());
        prop_assert_eq!(s.size(), w.rank());
    }
}
