use proptest::prelude::*;

use typeb_core::combinat::{
    core_and_quotient, delta_core, enumerate_bipartitions, enumeration_cmp, partitions, q_r,
    q_r_inverse, Bipartition, Partition,
};
use typeb_core::orders::{dominance_partitions, dominance_r, OrderParam};

fn part(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

// Oracle: strip rim dominoes one at a time until none is left.
fn core_by_stripping(p: &[u32]) -> Vec<u32> {
    let mut rows: Vec<u32> = p.to_vec();
    'outer: loop {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        for i in 0..rows.len() {
            let next = rows.get(i + 1).copied().unwrap_or(0);
            if rows[i] >= next + 2 {
                rows[i] -= 2;
                continue 'outer;
            }
            let after = rows.get(i + 2).copied().unwrap_or(0);
            if i + 1 < rows.len() && rows[i] == next && next > after {
                rows[i] -= 1;
                rows[i + 1] -= 1;
                continue 'outer;
            }
        }
        return rows;
    }
}

// Oracle: 2-quotient from an even bead count, odd runner first.
fn quotient_by_beads(p: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let k = p.len() + p.len() % 2;
    let beads: Vec<i64> = (0..k)
        .map(|i| p.get(i).copied().unwrap_or(0) as i64 + (k - 1 - i) as i64)
        .collect();
    let runner = |parity: i64| -> Vec<u32> {
        let mut pos: Vec<i64> = beads
            .iter()
            .filter(|b| *b % 2 == parity)
            .map(|b| (b - parity) / 2)
            .collect();
        pos.sort_unstable_by(|a, b| b.cmp(a));
        let m = pos.len() as i64;
        let mut parts: Vec<u32> = pos
            .iter()
            .enumerate()
            .map(|(j, &c)| (c - (m - 1 - j as i64)) as u32)
            .collect();
        parts.retain(|&x| x > 0);
        parts
    };
    (runner(1), runner(0))
}

fn partition_strategy(max_size: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=max_size, 0..6).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn bipartition_strategy() -> impl Strategy<Value = Bipartition> {
    (partition_strategy(5), partition_strategy(5)).prop_map(|(a, b)| Bipartition::new(a, b))
}

#[test]
fn abacus_examples() {
    let (core, quo) = core_and_quotient(&part(&[2, 2]));
    assert_eq!(core, Partition::empty());
    assert_eq!(quo.to_string(), "(1;1)");
    let (core, quo) = core_and_quotient(&part(&[3, 1]));
    assert_eq!(core, Partition::empty());
    assert_eq!(quo.to_string(), "(∅;2)");
    assert_eq!(q_r(&part(&[4]), 0).unwrap().to_string(), "(2;∅)");
    assert_eq!(q_r(&part(&[3]), 1).unwrap().to_string(), "(1;∅)");
    assert_eq!(q_r_inverse(&"(2;∅)".parse().unwrap(), 0), part(&[4]));
    assert_eq!(q_r_inverse(&"(1;∅)".parse().unwrap(), 1), part(&[3]));
    assert_eq!(delta_core(0), Partition::empty());
    assert_eq!(delta_core(3), part(&[3, 2, 1]));
}

#[test]
fn quotient_agrees_with_oracles_up_to_ten() {
    for n in 0..=10 {
        for p in partitions(n) {
            let (core, quo) = core_and_quotient(&p);
            assert_eq!(
                core.parts(),
                core_by_stripping(p.parts()).as_slice(),
                "core of {p}"
            );
            let (q0, q1) = quotient_by_beads(p.parts());
            assert_eq!(quo.component(0).parts(), q0.as_slice(), "λ⁰ of {p}");
            assert_eq!(quo.component(1).parts(), q1.as_slice(), "λ¹ of {p}");
        }
    }
}

#[test]
fn bipartition_counts() {
    let p: Vec<usize> = (0..=8).map(|k| partitions(k).len()).collect();
    for n in 0..=8 {
        let expected: usize = (0..=n).map(|k| p[k] * p[n - k]).sum();
        assert_eq!(enumerate_bipartitions(n).len(), expected);
    }
    let two: Vec<String> = enumerate_bipartitions(2)
        .iter()
        .map(|b| b.to_string())
        .collect();
    assert_eq!(two, ["(2;∅)", "(11;∅)", "(1;1)", "(∅;2)", "(∅;11)"]);
    assert_eq!(enumerate_bipartitions(3).len(), 10);
}

#[test]
fn dominance_incomparable_pair() {
    let a = part(&[2, 2, 2]);
    let b = part(&[3, 1, 1, 1]);
    assert!(!dominance_partitions(&a, &b).unwrap());
    assert!(!dominance_partitions(&b, &a).unwrap());
}

proptest! {
    #[test]
    fn q_r_round_trip(b in bipartition_strategy(), r in 0usize..5) {
        let p = q_r_inverse(&b, r);
        prop_assert_eq!(p.size(), delta_core(r).size() + 2 * b.size());
        prop_assert_eq!(core_and_quotient(&p).0, delta_core(r));
        prop_assert_eq!(q_r(&p, r).unwrap(), b);
    }

    #[test]
    fn conjugation_is_an_involution(p in partition_strategy(7)) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
    }

    #[test]
    fn text_round_trip(b in bipartition_strategy()) {
        let text = b.to_string();
        prop_assert_eq!(text.parse::<Bipartition>().unwrap(), b);
    }

    #[test]
    fn enumeration_is_a_linear_extension(n in 0usize..6) {
        let bips = enumerate_bipartitions(n);
        for (i, a) in bips.iter().enumerate() {
            for b in &bips[i + 1..] {
                prop_assert_eq!(enumeration_cmp(a, b), std::cmp::Ordering::Less);
                // Later entries never strictly dominate earlier ones in ⊴_∞.
                let above = dominance_r(a, b, OrderParam::Infinity).unwrap();
                prop_assert!(!above || a == b, "{} ⊴ {} but listed first", a, b);
            }
        }
    }
}
