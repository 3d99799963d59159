use typeb_core::canonical::{charge_from, decomposition_matrix};
use typeb_core::combinat::{enumerate_bipartitions, Bipartition};
use typeb_core::domino::standard_bitableaux;
use typeb_core::hecke::XiOrder;
use typeb_core::linalg::Matrix;
use typeb_core::orders::{dominance_r, OrderParam};
use typeb_core::specht::{
    theorem41_check, CellModuleData, CheckStatus, CycloSpecialization, SpechtData,
};
use typeb_core::{ACoeff, Bounds, Gamma};

fn data(n: usize, r: usize) -> SpechtData {
    SpechtData::new(n, XiOrder::from_r(r), &Bounds::default()).unwrap()
}

fn scalar(m: &Matrix<ACoeff>, c: &ACoeff) -> Matrix<ACoeff> {
    m.map(|x| x.clone() * c.clone())
}

fn sum(a: &Matrix<ACoeff>, b: &Matrix<ACoeff>) -> Matrix<ACoeff> {
    Matrix::from_fn(a.rows(), a.cols(), |i, j| {
        a[(i, j)].clone() + b[(i, j)].clone()
    })
}

fn word(m: &CellModuleData, gens: &[usize]) -> Matrix<ACoeff> {
    gens.iter().fold(Matrix::identity(m.dim()), |acc, &s| {
        acc.mul(&m.generators[s])
    })
}

// T_s² = (e^γ − e^{−γ}) T_s + 1 with γ = b for t and a otherwise.
fn check_relations(m: &CellModuleData, n: usize) {
    for (s, g) in m.generators.iter().enumerate() {
        let gamma = if s == 0 {
            Gamma::new(0, 1)
        } else {
            Gamma::new(1, 0)
        };
        let shift =
            ACoeff::monomial(gamma, 1) - ACoeff::monomial(Gamma::new(-gamma.alpha, -gamma.beta), 1);
        let rhs = sum(&scalar(g, &shift), &Matrix::identity(m.dim()));
        assert_eq!(
            g.mul(g),
            rhs,
            "quadratic relation for s{s} on S_{}",
            m.shape
        );
    }
    if n >= 2 {
        assert_eq!(
            word(m, &[0, 1, 0, 1]),
            word(m, &[1, 0, 1, 0]),
            "S_{}",
            m.shape
        );
    }
    for i in 1..n.saturating_sub(1) {
        assert_eq!(
            word(m, &[i, i + 1, i]),
            word(m, &[i + 1, i, i + 1]),
            "S_{}",
            m.shape
        );
    }
    for i in 0..n {
        for j in i + 2..n {
            assert_eq!(word(m, &[i, j]), word(m, &[j, i]), "S_{}", m.shape);
        }
    }
}

#[test]
fn modules_are_representations_with_adjoint_forms() {
    for n in 1..=3 {
        for r in 0..=2 {
            let sd = data(n, r);
            assert_eq!(sd.modules().len(), enumerate_bipartitions(n).len());
            let total: usize = sd.modules().iter().map(|m| m.dim() * m.dim()).sum();
            assert_eq!(total, (1..=n).product::<usize>() << n);
            for m in sd.modules() {
                assert_eq!(m.dim(), standard_bitableaux(&m.shape).len());
                assert!(m.adjointness_holds(), "n={n} r={r} S_{}", m.shape);
                assert!(m.gram.is_symmetric());
                check_relations(m, n);
            }
        }
    }
}

#[test]
fn generic_point_is_semisimple() {
    for (n, r) in [(2, 1), (3, 0), (3, 2)] {
        let sd = data(n, r);
        let spec = CycloSpecialization::generic();
        assert_eq!(sd.nonzero_simples(&spec).len(), sd.modules().len());
        let dn = sd.decomposition_numbers(&spec).unwrap();
        for (i, row) in dn.entries.iter().enumerate() {
            for (j, &k) in row.iter().enumerate() {
                assert_eq!(k, (i == j) as i64);
            }
        }
    }
}

#[test]
fn decomposition_numbers_are_unitriangular() {
    for (n, r, e, d) in [(2, 0, 2, 0), (3, 1, 2, 0), (3, 0, 3, 1), (3, 2, 2, 1)] {
        let sd = data(n, r);
        let spec = CycloSpecialization::root_of_unity(e, d);
        let dn = sd.decomposition_numbers(&spec).unwrap();
        for (j, mu) in dn.columns.iter().enumerate() {
            let simple = sd
                .module(mu)
                .unwrap()
                .specialize(&spec)
                .simple_head()
                .unwrap()
                .unwrap();
            assert_eq!(dn.entry(mu, mu), Some(1));
            for (i, lambda) in dn.rows.iter().enumerate() {
                if dn.entries[i][j] != 0 && lambda != mu {
                    assert!(dominance_r(lambda, mu, OrderParam::Finite(r)).unwrap());
                }
            }
            assert!(simple.dim() > 0);
        }
        // Dimensions add up along every row.
        let dims: Vec<usize> = dn
            .columns
            .iter()
            .map(|mu| sd.module(mu).unwrap().specialize(&spec).gram_rank())
            .collect();
        for (i, lambda) in dn.rows.iter().enumerate() {
            let total: i64 = dn.entries[i]
                .iter()
                .zip(&dims)
                .map(|(&k, &d)| k * d as i64)
                .sum();
            assert_eq!(
                total as usize,
                sd.module(lambda).unwrap().dim(),
                "n={n} r={r} λ={lambda}"
            );
        }
    }
}

#[test]
fn rank_one_at_minus_one() {
    let sd = data(1, 0);
    let spec = CycloSpecialization::root_of_unity(2, 0);
    let simples = sd.nonzero_simples(&spec);
    assert_eq!(simples, ["(1;∅)".parse::<Bipartition>().unwrap()]);
    let dn = sd.decomposition_numbers(&spec).unwrap();
    assert_eq!(dn.entries, [[1], [1]]);
    let g = sd.module(&"(∅;1)".parse().unwrap()).unwrap();
    // C_t C_t = (Q + Q⁻¹) C_t, which vanishes at Q² = −1.
    let expected = ACoeff::monomial(Gamma::new(0, 1), 1) + ACoeff::monomial(Gamma::new(0, -1), 1);
    assert_eq!(g.gram[(0, 0)], expected);
}

#[test]
fn theorem_examples() {
    let bounds = Bounds::default();
    for (n, e, d, r) in [
        (1, 2, 0, 0),
        (2, 2, 0, 0),
        (2, 2, 0, 2),
        (3, 2, 0, 1),
        (2, 3, 1, 1),
    ] {
        let report = theorem41_check(n, e, d, r, &bounds).unwrap();
        assert_eq!(report.status, CheckStatus::Pass, "{:?}", report.detail);
        assert!(report.simples_match && report.matrices_match);
        let s = charge_from(r, d, e);
        let expected = decomposition_matrix(n, s, e, &bounds).unwrap();
        assert_eq!(report.expected, expected.at_one());
        assert_eq!(report.uglov, expected.columns);
    }
}
