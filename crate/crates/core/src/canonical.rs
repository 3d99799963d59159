//! Canonical basis of the submodule `M[s]` generated by `|∅,s⟩`, computed by
//! reducing principal monomials, plus decomposition matrices, the charge
//! attached to `(r, d, e)` and the crystal bijection between charges.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::bounds::Bounds;
use crate::combinat::{enumerate_bipartitions, enumeration_cmp, Bipartition};
use crate::crystal::{crystal_e, crystal_f, e_path, epsilon, uglov_bipartitions};
use crate::error::{Error, Result};
use crate::fock::{divided_power_f, fock_modules_isomorphic, Charge, FockVector};
use crate::orders::{dominance_r, OrderParam};
use crate::VPoly;

/// Which residue to peel off first when reading the string of `μ`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum StringPolicy {
    #[default]
    SmallestResidue,
    LargestResidue,
}

/// Strings `(i_1, a_1), …, (i_k, a_k)` with `μ = f̃_{i_k}^{a_k} ⋯ f̃_{i_1}^{a_1} ∅`.
pub fn residue_strings(
    mu: &Bipartition,
    s: Charge,
    e: usize,
    policy: StringPolicy,
) -> Result<Vec<(usize, u32)>> {
    let mut cur = mu.clone();
    let mut strings = Vec::new();
    while cur.size() > 0 {
        let mut choice = None;
        for k in 0..e {
            let i = match policy {
                StringPolicy::SmallestResidue => k,
                StringPolicy::LargestResidue => e - 1 - k,
            };
            let eps = epsilon(&cur, i, s, e)?;
            if eps > 0 {
                choice = Some((i, eps));
                break;
            }
        }
        let Some((i, a)) = choice else {
            return Err(Error::NotUglov(mu.to_string()));
        };
        for _ in 0..a {
            cur = crystal_e(&cur, i, s, e)?
                .ok_or_else(|| Error::Internal("ε_i > 0 but ẽ_i = 0".into()))?;
        }
        strings.push((i, a as u32));
    }
    strings.reverse();
    Ok(strings)
}

/// `A(μ) = f_{i_k}^{(a_k)} ⋯ f_{i_1}^{(a_1)} |∅,s⟩`.
pub fn principal_monomial(mu: &Bipartition, s: Charge, e: usize) -> Result<FockVector> {
    principal_monomial_with(mu, s, e, StringPolicy::default())
}

pub fn principal_monomial_with(
    mu: &Bipartition,
    s: Charge,
    e: usize,
    policy: StringPolicy,
) -> Result<FockVector> {
    let mut x = FockVector::vacuum(s, e);
    for (i, a) in residue_strings(mu, s, e, policy)? {
        x = divided_power_f(i, a, &x)?;
    }
    Ok(x)
}

#[derive(Clone, Debug, Serialize)]
pub struct CanonicalBasisElement {
    pub index: Bipartition,
    pub vector: FockVector,
}

/// The `r` whose order `⊴_r` drives the reduction at charge `s`: `max(s0 - s1, 0)`.
///
/// For `s = charge_from(r, d, e)` every admissible `r` lies in `[s0, s0 + e)`,
/// and this choice is one of them.
pub fn adapted_r(s: Charge) -> usize {
    (s.s0 as i64 - s.s1 as i64).max(0) as usize
}

/// `a_0 + Σ_{j>0} a_{-j}(v^j + v^{-j})` for `c = Σ a_j v^j`.
fn bar_symmetric_completion(c: &VPoly) -> VPoly {
    let mut beta = VPoly::zero();
    for (&j, &a) in c.terms() {
        if j == 0 {
            beta.add_term(0, a);
        } else if j < 0 {
            beta.add_term(j, a);
            beta.add_term(-j, a);
        }
    }
    beta
}

/// Linear extension of `⊴_r` on `items`, smallest first; ties by enumeration order.
pub fn ascending_linear_extension(items: &[Bipartition], r: usize) -> Vec<Bipartition> {
    let mut rest: Vec<Bipartition> = items.to_vec();
    rest.sort_by(enumeration_cmp);
    rest.reverse();
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let pos = (0..rest.len())
            .find(|&k| {
                !rest.iter().enumerate().any(|(j, other)| {
                    j != k && dominance_r(other, &rest[k], OrderParam::Finite(r)).unwrap_or(false)
                })
            })
            .expect("a finite poset has a minimal element");
        out.push(rest.remove(pos));
    }
    out
}

/// Subtracts bar-invariant multiples of known basis vectors from the
/// bar-invariant `x` until every coefficient other than that of `mu` lies in
/// `vZ[v]`, always correcting a `⊴_r`-maximal offender first.
fn reduce(
    mut x: FockVector,
    mu: &Bipartition,
    r: usize,
    known: &HashMap<Bipartition, FockVector>,
) -> Result<FockVector> {
    loop {
        let offenders: Vec<Bipartition> = x
            .terms()
            .filter(|(l, c)| *l != mu && !c.in_v_z_v())
            .map(|(l, _)| l.clone())
            .collect();
        if offenders.is_empty() {
            break;
        }
        let mut top: Vec<Bipartition> = offenders
            .iter()
            .filter(|nu| {
                !offenders
                    .iter()
                    .any(|o| o != *nu && dominance_r(nu, o, OrderParam::Finite(r)).unwrap_or(false))
            })
            .cloned()
            .collect();
        top.sort_by(enumeration_cmp);
        let nu = top
            .into_iter()
            .next()
            .expect("finite set of offenders has a maximal element");
        let g = known.get(&nu).ok_or_else(|| {
            Error::ConventionViolation(format!(
                "offender {nu} while reducing {mu} is not an already computed Uglov index"
            ))
        })?;
        let beta = bar_symmetric_completion(&x.coeff(&nu));
        x.add_scaled(g, &(-beta));
    }
    if x.coeff(mu) != VPoly::one() {
        return Err(Error::ConventionViolation(format!(
            "coefficient of {mu} in its own basis vector is {}",
            x.coeff(mu)
        )));
    }
    Ok(x)
}

pub fn canonical_basis(
    n: usize,
    s: Charge,
    e: usize,
    bounds: &Bounds,
) -> Result<Vec<CanonicalBasisElement>> {
    canonical_basis_with(n, s, e, StringPolicy::default(), bounds)
}

/// Computes `G(μ,s)` for the Uglov bipartitions of size `n`, rank by rank.
///
/// For `μ` of rank `k`, let `a = max_i ε_i(μ)` and `i` a residue attaining it
/// (chosen by `policy`). Then `f_i^(a) G(ẽ_i^a μ)` is bar-invariant and equals
/// `G(μ)` plus bar-invariant multiples of `G(β)` with `ε_i(β) > a`; processing
/// each rank by decreasing `a` makes those `G(β)` available for the reduction.
pub fn canonical_basis_with(
    n: usize,
    s: Charge,
    e: usize,
    policy: StringPolicy,
    bounds: &Bounds,
) -> Result<Vec<CanonicalBasisElement>> {
    Bounds::check("canonical_basis", n, bounds.canonical)?;
    let r = adapted_r(s);
    let graph = crate::crystal::crystal_graph(
        s,
        e,
        n,
        &Bounds {
            crystal: n.max(bounds.crystal),
            ..*bounds
        },
    )?;
    let mut known: HashMap<Bipartition, FockVector> =
        HashMap::from([(Bipartition::empty(), FockVector::vacuum(s, e))]);
    for rank in graph.ranks.iter().skip(1) {
        let mut items: Vec<(usize, usize, Bipartition)> = Vec::with_capacity(rank.len());
        for mu in rank {
            let eps: Vec<usize> = (0..e)
                .map(|i| epsilon(mu, i, s, e))
                .collect::<Result<_>>()?;
            let a = *eps.iter().max().expect("e >= 1");
            let candidates = (0..e).filter(|&i| eps[i] == a);
            let i = match policy {
                StringPolicy::SmallestResidue => candidates.min(),
                StringPolicy::LargestResidue => candidates.max(),
            }
            .expect("some residue attains the maximum");
            items.push((a, i, mu.clone()));
        }
        items.sort_by(|x, y| y.0.cmp(&x.0).then_with(|| enumeration_cmp(&x.2, &y.2)));
        let mut current: HashMap<Bipartition, FockVector> = HashMap::new();
        for (a, i, mu) in items {
            let mut base = mu.clone();
            for _ in 0..a {
                base = crystal_e(&base, i, s, e)?
                    .ok_or_else(|| Error::Internal("ε_i > 0 but ẽ_i = 0".into()))?;
            }
            let g = known
                .get(&base)
                .ok_or_else(|| Error::NotUglov(base.to_string()))?;
            let x = divided_power_f(i, a as u32, g)?;
            let reduced = reduce(x, &mu, r, &current)?;
            current.insert(mu, reduced);
        }
        known.extend(current);
    }
    let mut out: Vec<CanonicalBasisElement> = known
        .into_iter()
        .filter(|(mu, _)| mu.size() == n)
        .map(|(index, vector)| CanonicalBasisElement { index, vector })
        .collect();
    out.sort_by(|a, b| enumeration_cmp(&a.index, &b.index));
    Ok(out)
}

/// Matrix `(d_{λμ}(v))` with rows `Bip(n)` and columns the Uglov bipartitions.
#[derive(Clone, Debug, Serialize)]
pub struct DecompositionMatrix {
    pub charge: Charge,
    pub e: usize,
    pub rows: Vec<Bipartition>,
    pub columns: Vec<Bipartition>,
    pub entries: Vec<Vec<VPoly>>,
}

impl DecompositionMatrix {
    pub fn entry(&self, row: &Bipartition, col: &Bipartition) -> Option<&VPoly> {
        let i = self.rows.iter().position(|x| x == row)?;
        let j = self.columns.iter().position(|x| x == col)?;
        Some(&self.entries[i][j])
    }

    /// Specialization `v = 1`.
    pub fn at_one(&self) -> Vec<Vec<i64>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|c| c.at_one()).collect())
            .collect()
    }

    pub fn to_tsv(&self, specialize: bool) -> String {
        let mut out = String::from("λ\\μ");
        for c in &self.columns {
            out.push('\t');
            out.push_str(&c.to_string());
        }
        out.push('\n');
        let ones = self.at_one();
        for ((r, row), row_at_one) in self.rows.iter().zip(&self.entries).zip(&ones) {
            out.push_str(&r.to_string());
            for (c, c1) in row.iter().zip(row_at_one) {
                out.push('\t');
                if specialize {
                    out.push_str(&c1.to_string());
                } else {
                    out.push_str(&c.to_string());
                }
            }
            out.push('\n');
        }
        out
    }
}

pub fn decomposition_matrix(
    n: usize,
    s: Charge,
    e: usize,
    bounds: &Bounds,
) -> Result<DecompositionMatrix> {
    let basis = canonical_basis(n, s, e, bounds)?;
    let rows = enumerate_bipartitions(n);
    let columns: Vec<Bipartition> = basis.iter().map(|g| g.index.clone()).collect();
    let entries = rows
        .iter()
        .map(|l| basis.iter().map(|g| g.vector.coeff(l)).collect())
        .collect();
    Ok(DecompositionMatrix {
        charge: s,
        e,
        rows,
        columns,
        entries,
    })
}

/// `s = (d + pe, 0)` with `d + pe <= r < d + (p+1)e`.
pub fn charge_from(r: usize, d: i64, e: usize) -> Charge {
    let e = e as i64;
    let p = (r as i64 - d).div_euclid(e);
    Charge::new((d + p * e) as i32, 0)
}

/// Replays an `ẽ`-path of `μ` in the `s1`-crystal as `f̃`-moves in the `s2`-crystal.
pub fn gamma(mu: &Bipartition, s1: Charge, s2: Charge, e: usize) -> Result<Bipartition> {
    if !fock_modules_isomorphic(s1, s2, e) {
        return Err(Error::IncompatibleCharges(s1.to_string(), s2.to_string()));
    }
    let path = e_path(mu, s1, e)?.ok_or_else(|| Error::NotUglov(mu.to_string()))?;
    let mut cur = Bipartition::empty();
    for i in path {
        cur = crystal_f(&cur, i, s2, e)?
            .ok_or_else(|| Error::IncompatibleCharges(s1.to_string(), s2.to_string()))?;
    }
    Ok(cur)
}

/// `γ` on all Uglov bipartitions of size `n`.
pub fn gamma_table(
    n: usize,
    s1: Charge,
    s2: Charge,
    e: usize,
    bounds: &Bounds,
) -> Result<BTreeMap<Bipartition, Bipartition>> {
    uglov_bipartitions(n, s1, e, bounds)?
        .into_iter()
        .map(|mu| gamma(&mu, s1, s2, e).map(|g| (mu, g)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(s: &str) -> Bipartition {
        s.parse().unwrap()
    }

    #[test]
    fn charges() {
        assert_eq!(charge_from(0, 0, 2), Charge::new(0, 0));
        assert_eq!(charge_from(2, 0, 2), Charge::new(2, 0));
        assert_eq!(charge_from(5, 1, 3), Charge::new(4, 0));
        assert_eq!(charge_from(1, 0, 2), Charge::new(0, 0));
    }

    #[test]
    fn small_canonical_bases() {
        let s = Charge::new(0, 0);
        let b = Bounds::default();
        let g0 = canonical_basis(0, s, 2, &b).unwrap();
        assert_eq!(g0.len(), 1);
        let g1 = canonical_basis(1, s, 2, &b).unwrap();
        assert_eq!(g1.len(), 1);
        assert_eq!(g1[0].index, bp("(1;∅)"));
        assert_eq!(g1[0].vector.coeff(&bp("(∅;1)")), VPoly::v_power(1));
        let m = decomposition_matrix(1, s, 2, &b).unwrap();
        assert_eq!(m.at_one(), vec![vec![1], vec![1]]);
    }

    #[test]
    fn gamma_example() {
        let g = gamma(&bp("(2;2)"), Charge::new(0, 0), Charge::new(2, 0), 2).unwrap();
        assert_eq!(g, bp("(21;1)"));
        for x in ["(4;∅)", "(31;∅)", "(3;1)"] {
            assert_eq!(
                gamma(&bp(x), Charge::new(0, 0), Charge::new(2, 0), 2).unwrap(),
                bp(x)
            );
        }
        assert!(gamma(&bp("(1;∅)"), Charge::new(0, 0), Charge::new(1, 0), 2).is_err());
    }
}
