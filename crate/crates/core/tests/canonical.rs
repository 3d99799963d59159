use typeb_core::canonical::{
    canonical_basis, canonical_basis_with, charge_from, decomposition_matrix, gamma, gamma_table,
    StringPolicy,
};
use typeb_core::combinat::{enumerate_bipartitions, Bipartition};
use typeb_core::crystal::uglov_bipartitions;
use typeb_core::fock::{Charge, FockVector};
use typeb_core::orders::{dominance_r, OrderParam};
use typeb_core::{Bounds, VPoly};

fn bip(s: &str) -> Bipartition {
    s.parse().unwrap()
}

fn v(k: i32) -> VPoly {
    VPoly::v_power(k)
}

const S00: Charge = Charge { s0: 0, s1: 0 };

#[test]
fn size_two_by_hand() {
    let basis = canonical_basis(2, S00, 2, &Bounds::default()).unwrap();
    let labels: Vec<String> = basis.iter().map(|g| g.index.to_string()).collect();
    assert_eq!(labels, ["(2;∅)", "(1;1)"]);
    let mut g2 = FockVector::basis(bip("(2;∅)"), S00, 2);
    g2.add_term(bip("(11;∅)"), &v(1));
    g2.add_term(bip("(∅;2)"), &v(1));
    g2.add_term(bip("(∅;11)"), &v(2));
    assert_eq!(basis[0].vector, g2);
    assert_eq!(basis[1].vector, FockVector::basis(bip("(1;1)"), S00, 2));
}

#[test]
fn size_one_column() {
    let m = decomposition_matrix(1, S00, 2, &Bounds::default()).unwrap();
    assert_eq!(m.columns, [bip("(1;∅)")]);
    assert_eq!(m.entries, [[v(0)], [v(1)]]);
    assert_eq!(m.at_one(), [[1], [1]]);
}

#[test]
fn charge_examples() {
    assert_eq!(charge_from(2, 0, 2), Charge::new(2, 0));
    assert_eq!(charge_from(0, 0, 2), Charge::new(0, 0));
    assert_eq!(charge_from(1, 0, 2), Charge::new(0, 0));
    assert_eq!(charge_from(0, 1, 2), Charge::new(-1, 0));
    assert_eq!(charge_from(4, 1, 3), Charge::new(4, 0));
}

#[test]
fn characterization_and_policy_invariance() {
    let bounds = Bounds::default();
    for e in [2usize, 3] {
        for d in 0..e as i64 {
            for r in 0..=3 {
                let s = charge_from(r, d, e);
                for n in 0..=3 {
                    let small = canonical_basis(n, s, e, &bounds).unwrap();
                    let large =
                        canonical_basis_with(n, s, e, StringPolicy::LargestResidue, &bounds)
                            .unwrap();
                    assert_eq!(small.len(), large.len());
                    let uglov = uglov_bipartitions(n, s, e, &bounds).unwrap();
                    assert_eq!(small.len(), uglov.len());
                    for (g, h) in small.iter().zip(&large) {
                        assert_eq!(g.index, h.index);
                        assert_eq!(g.vector, h.vector, "s={s} e={e} μ={}", g.index);
                        assert_eq!(g.vector.coeff(&g.index), v(0));
                        for (lambda, c) in g.vector.terms() {
                            if lambda == &g.index {
                                continue;
                            }
                            assert!(c.in_v_z_v(), "s={s} e={e} μ={} λ={lambda}", g.index);
                            assert!(dominance_r(lambda, &g.index, OrderParam::Finite(r)).unwrap());
                            assert!(c.terms().all(|(_, &k)| k > 0));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn decomposition_matrix_is_unitriangular_at_one() {
    let bounds = Bounds::default();
    let s = charge_from(1, 0, 3);
    let m = decomposition_matrix(3, s, 3, &bounds).unwrap();
    assert_eq!(m.rows, enumerate_bipartitions(3));
    let ones = m.at_one();
    for (j, mu) in m.columns.iter().enumerate() {
        let i = m.rows.iter().position(|x| x == mu).unwrap();
        assert_eq!(ones[i][j], 1);
    }
}

#[test]
fn gamma_is_a_bijection_of_uglov_sets() {
    let bounds = Bounds::default();
    let (s1, s2) = (S00, Charge::new(2, 0));
    for n in 0..=4 {
        let table = gamma_table(n, s1, s2, 2, &bounds).unwrap();
        let mut image: Vec<Bipartition> = table.values().cloned().collect();
        image.sort();
        let mut target = uglov_bipartitions(n, s2, 2, &bounds).unwrap();
        target.sort();
        assert_eq!(image, target);
    }
    assert_eq!(gamma(&bip("(1;1)"), s1, s2, 2).unwrap(), bip("(1;1)"));
    assert!(gamma(&bip("(1;∅)"), S00, Charge::new(1, 0), 2).is_err());
}
