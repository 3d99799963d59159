use std::cmp::Ordering;
use std::sync::Arc;

use num_traits::{One, Zero};

use typeb_core::cells::{
    all_cells, cell_datum, cells, cellularity_check, conjecture_a_report, Side,
};
use typeb_core::hecke::{kl_basis, kl_basis_in, HeckeAlgebra, HeckeElement, XiOrder};
use typeb_core::{ACoeff, Bounds, Gamma};

fn mono(alpha: i32, beta: i32, c: i64) -> ACoeff {
    ACoeff::monomial(Gamma::new(alpha, beta), c)
}

/// `c` with its non-negative part replaced by the matching bar-invariant element.
fn bar_invariant_completion(c: &ACoeff, xi: XiOrder) -> ACoeff {
    let mut out = ACoeff::zero();
    for (&g, &k) in c.terms() {
        match xi.sign(g).unwrap() {
            Ordering::Less => {}
            Ordering::Equal => out.add_term(g, k),
            Ordering::Greater => {
                out.add_term(g, k);
                out.add_term(Gamma::new(-g.alpha, -g.beta), k);
            }
        }
    }
    out
}

/// Second route: `C_w = C_s C_{sw} − Σ μ C_y`, reducing from the top length down.
fn kl_by_left_multiplication(alg: &HeckeAlgebra, xi: XiOrder) -> Vec<HeckeElement> {
    let g = alg.group();
    let mut c: Vec<Option<HeckeElement>> = vec![None; g.order()];
    c[0] = Some(HeckeElement::basis(0));
    for w in 1..g.order() {
        let s = (0..g.num_generators())
            .find(|&s| g.length(g.left_mul(w, s)) < g.length(w))
            .unwrap();
        let x = g.left_mul(w, s);
        let mut h = alg.mul(&alg.c_generator(s), c[x].as_ref().unwrap());
        let mut below: Vec<usize> = h.support().filter(|&y| y != w).collect();
        below.sort_by_key(|&y| std::cmp::Reverse((g.length(y), y)));
        for y in below {
            let mu = bar_invariant_completion(&h.coeff(y), xi);
            if !mu.is_zero() {
                h.add_scaled(c[y].as_ref().unwrap(), &(-mu));
            }
        }
        c[w] = Some(h);
    }
    c.into_iter().map(Option::unwrap).collect()
}

#[test]
fn generator_elements() {
    let b = kl_basis(2, XiOrder::from_r(0), &Bounds::default()).unwrap();
    let g = b.group();
    let t = g.generator_index(0);
    let s1 = g.generator_index(1);
    let mut ct = HeckeElement::basis(t);
    ct.add_term(0, &mono(0, -1, 1));
    assert_eq!(b.element(t), &ct);
    let mut cs = HeckeElement::basis(s1);
    cs.add_term(0, &mono(-1, 0, 1));
    assert_eq!(b.element(s1), &cs);
}

#[test]
fn bar_and_dagger_of_t() {
    let alg = HeckeAlgebra::new(1);
    let t = alg.group().generator_index(0);
    let q_minus = mono(0, 1, 1) - mono(0, -1, 1);
    let mut expected = HeckeElement::basis(t);
    expected.add_term(0, &(-q_minus.clone()));
    assert_eq!(alg.bar(&HeckeElement::basis(t)), expected);
    let mut dagger = HeckeElement::monomial(t, -ACoeff::one());
    dagger.add_term(0, &q_minus);
    assert_eq!(alg.dagger(&HeckeElement::basis(t)), dagger);
}

#[test]
fn two_routes_agree() {
    for n in 1..=3 {
        for xi in [
            XiOrder::from_r(0),
            XiOrder::from_r(1),
            XiOrder::from_r(2),
            XiOrder::new(7, 3).unwrap(),
        ] {
            let alg = Arc::new(HeckeAlgebra::new(n));
            let basis = kl_basis_in(alg.clone(), xi).unwrap();
            let oracle = kl_by_left_multiplication(&alg, xi);
            for (w, c) in oracle.iter().enumerate() {
                assert_eq!(
                    basis.element(w),
                    c,
                    "n={n} ξ={xi} w={}",
                    alg.group().element(w)
                );
            }
        }
    }
}

#[test]
fn defining_conditions() {
    let b = kl_basis(3, XiOrder::from_r(1), &Bounds::default()).unwrap();
    let alg = b.algebra();
    for (w, c) in b.elements().iter().enumerate() {
        assert_eq!(&alg.bar(c), c);
        assert!(c.coeff(w).is_one());
        for (&y, p) in c.terms() {
            if y != w {
                assert!(b.xi().in_negative_part(p).unwrap());
                assert!(b.group().length(y) < b.group().length(w));
            }
        }
    }
}

#[test]
fn cells_in_small_rank() {
    let b = kl_basis(1, XiOrder::from_r(0), &Bounds::default()).unwrap();
    assert_eq!(cells(&b, Side::Left).classes.len(), 2);
    let b2 = kl_basis(2, XiOrder::from_r(0), &Bounds::default()).unwrap();
    let two = all_cells(&b2).two_sided;
    assert_eq!(two.classes.len(), 5);
    assert_eq!(two.classes.iter().map(Vec::len).sum::<usize>(), 8);
    let mut sizes: Vec<usize> = two.classes.iter().map(Vec::len).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, [1, 1, 1, 1, 4]);
}

#[test]
fn conjecture_a_and_cellularity_examples() {
    let bounds = Bounds::default();
    for (n, r) in [(1, 0), (1, 3), (2, 0), (3, 0), (3, 1), (3, 3)] {
        let b = kl_basis(n, XiOrder::from_r(r), &bounds).unwrap();
        assert!(conjecture_a_report(&b).unwrap().passed(), "n={n} r={r}");
    }
    for (n, r) in [(1, 0), (2, 0), (2, 2), (3, 1)] {
        let b = Arc::new(kl_basis(n, XiOrder::from_r(r), &bounds).unwrap());
        let datum = cell_datum(b).unwrap();
        assert!(cellularity_check(&datum).passed(), "n={n} r={r}");
    }
}

#[test]
fn rank_one_cell_datum() {
    let b = Arc::new(kl_basis(1, XiOrder::from_r(0), &Bounds::default()).unwrap());
    let datum = cell_datum(b).unwrap();
    assert_eq!(datum.shapes().len(), 2);
    for shape in datum.shapes() {
        assert_eq!(datum.tableaux(shape).len(), 1);
    }
}
