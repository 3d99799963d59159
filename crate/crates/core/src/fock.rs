//! The level-2 Fock space `F^s`: nodes, residues, the actions of `e_i`, `f_i`,
//! divided powers and highest weight data.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::combinat::{Bipartition, Cell};
use crate::error::{Error, Result};
use crate::VPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Charge {
    pub s0: i32,
    pub s1: i32,
}

impl Charge {
    pub const fn new(s0: i32, s1: i32) -> Self {
        Charge { s0, s1 }
    }

    pub fn get(&self, c: usize) -> i32 {
        if c == 0 {
            self.s0
        } else {
            self.s1
        }
    }
}

impl fmt::Display for Charge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.s0, self.s1)
    }
}

impl FromStr for Charge {
    type Err = Error;
    /// `s0,s1` with optional parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (a, b) = t
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("charge must be 's0,s1': {s}")))?;
        let p = |x: &str| {
            x.trim()
                .parse::<i32>()
                .map_err(|e| Error::Parse(format!("{x}: {e}")))
        };
        Ok(Charge::new(p(a)?, p(b)?))
    }
}

/// A box `(row, col)` (0-based) of component `component`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub component: usize,
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(component: usize, (row, col): Cell) -> Self {
        Node {
            component,
            row,
            col,
        }
    }

    pub fn cell(&self) -> Cell {
        (self.row, self.col)
    }

    pub fn content(&self, s: Charge) -> i64 {
        self.col as i64 - self.row as i64 + s.get(self.component) as i64
    }

    pub fn residue(&self, s: Charge, e: usize) -> usize {
        self.content(s).rem_euclid(e as i64) as usize
    }
}

/// Node order: by content, and for equal content component 1 before component 0.
pub fn node_cmp(a: &Node, b: &Node, s: Charge) -> Ordering {
    a.content(s)
        .cmp(&b.content(s))
        .then(b.component.cmp(&a.component))
}

fn check_residue(i: usize, e: usize) -> Result<()> {
    if e == 0 || i >= e {
        Err(Error::BadResidue { i, e })
    } else {
        Ok(())
    }
}

/// Addable `i`-nodes of `lambda` in increasing node order.
pub fn addable_nodes(lambda: &Bipartition, i: usize, s: Charge, e: usize) -> Vec<Node> {
    let mut v: Vec<Node> = (0..2)
        .flat_map(|c| {
            lambda
                .component(c)
                .addable_cells()
                .into_iter()
                .map(move |x| Node::new(c, x))
        })
        .filter(|n| n.residue(s, e) == i)
        .collect();
    v.sort_by(|a, b| node_cmp(a, b, s));
    v
}

/// Removable `i`-nodes of `lambda` in increasing node order.
pub fn removable_nodes(lambda: &Bipartition, i: usize, s: Charge, e: usize) -> Vec<Node> {
    let mut v: Vec<Node> = (0..2)
        .flat_map(|c| {
            lambda
                .component(c)
                .removable_cells()
                .into_iter()
                .map(move |x| Node::new(c, x))
        })
        .filter(|n| n.residue(s, e) == i)
        .collect();
    v.sort_by(|a, b| node_cmp(a, b, s));
    v
}

pub fn add_node(lambda: &Bipartition, n: Node) -> Option<Bipartition> {
    lambda.with_cell(n.component, n.cell())
}

pub fn remove_node(lambda: &Bipartition, n: Node) -> Option<Bipartition> {
    lambda.without_cell(n.component, n.cell())
}

/// `N_i(λ)`: addable minus removable `i`-nodes.
pub fn weight_ni(lambda: &Bipartition, i: usize, s: Charge, e: usize) -> i64 {
    addable_nodes(lambda, i, s, e).len() as i64 - removable_nodes(lambda, i, s, e).len() as i64
}

/// `Δ(s) = ½ Σ_j (s_j − s̄_j)/e · (s_j + s̄_j − e)`, with `s̄_j = s_j mod e`.
pub fn delta_s(s: Charge, e: usize) -> Ratio<i64> {
    let e = e as i64;
    let mut total = Ratio::zero();
    for sj in [s.s0 as i64, s.s1 as i64] {
        let bar = sj.rem_euclid(e);
        total += Ratio::new((sj - bar) * (sj + bar - e), 2 * e);
    }
    total
}

/// Highest weight `−Δ(s)δ + Λ_{s̄₀} + Λ_{s̄₁}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HighestWeight {
    pub delta_coeff: String,
    pub lambda_indices: [usize; 2],
}

pub fn highest_weight(s: Charge, e: usize) -> HighestWeight {
    let d = -delta_s(s, e);
    let mut idx = [
        s.s0.rem_euclid(e as i32) as usize,
        s.s1.rem_euclid(e as i32) as usize,
    ];
    idx.sort_unstable();
    HighestWeight {
        delta_coeff: d.to_string(),
        lambda_indices: idx,
    }
}

/// Whether the submodules generated by `|∅,s⟩` and `|∅,s'⟩` are isomorphic.
pub fn fock_modules_isomorphic(s: Charge, t: Charge, e: usize) -> bool {
    let m = |x: i32| x.rem_euclid(e as i32);
    (m(s.s0) == m(t.s0) && m(s.s1) == m(t.s1)) || (m(s.s0) == m(t.s1) && m(s.s1) == m(t.s0))
}

/// A finite `Z[v, v^-1]`-combination of the `|λ, s⟩`.
#[derive(Clone, PartialEq, Eq)]
pub struct FockVector {
    charge: Charge,
    e: usize,
    terms: BTreeMap<Bipartition, VPoly>,
}

impl FockVector {
    pub fn zero(charge: Charge, e: usize) -> Self {
        FockVector {
            charge,
            e,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(lambda: Bipartition, charge: Charge, e: usize) -> Self {
        let mut x = Self::zero(charge, e);
        x.add_term(lambda, &VPoly::one());
        x
    }

    pub fn vacuum(charge: Charge, e: usize) -> Self {
        Self::basis(Bipartition::empty(), charge, e)
    }

    pub fn charge(&self) -> Charge {
        self.charge
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Bipartition) -> VPoly {
        self.terms.get(lambda).cloned().unwrap_or_else(VPoly::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Bipartition, &VPoly)> + '_ {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Bipartition> + '_ {
        self.terms.keys()
    }

    pub fn add_term(&mut self, lambda: Bipartition, c: &VPoly) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda.clone()).or_insert_with(VPoly::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &FockVector, c: &VPoly) {
        for (l, x) in &other.terms {
            self.add_term(l.clone(), &(x * c));
        }
    }

    pub fn sub(&self, other: &FockVector) -> FockVector {
        let mut x = self.clone();
        x.add_scaled(other, &(-VPoly::one()));
        x
    }

    pub fn scale(&self, c: &VPoly) -> FockVector {
        let mut x = FockVector::zero(self.charge, self.e);
        x.add_scaled(self, c);
        x
    }

    /// Exact division of every coefficient.
    pub fn div_exact(&self, d: &VPoly) -> Option<FockVector> {
        let mut x = FockVector::zero(self.charge, self.e);
        for (l, c) in &self.terms {
            x.add_term(l.clone(), &c.div_exact(d)?);
        }
        Some(x)
    }
}

impl fmt::Display for FockVector {
    /// `c(v)·|(λ⁰;λ¹),s⟩ + …`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(l, c)| format!("({c})·|{l},{}⟩", self.charge))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for FockVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(self.terms.len()))?;
        for (l, c) in &self.terms {
            m.serialize_entry(&l.to_string(), &c.to_string())?;
        }
        m.end()
    }
}

/// `f_i` on a single basis vector.
fn f_basis(lambda: &Bipartition, i: usize, s: Charge, e: usize) -> Vec<(Bipartition, i32)> {
    addable_nodes(lambda, i, s, e)
        .into_iter()
        .map(|g| {
            let bigger = add_node(lambda, g).expect("addable");
            let above_a = addable_nodes(lambda, i, s, e)
                .iter()
                .filter(|x| node_cmp(x, &g, s) == Ordering::Greater)
                .count() as i32;
            let above_r = removable_nodes(&bigger, i, s, e)
                .iter()
                .filter(|x| node_cmp(x, &g, s) == Ordering::Greater)
                .count() as i32;
            (bigger, above_a - above_r)
        })
        .collect()
}

/// `e_i` on a single basis vector.
fn e_basis(lambda: &Bipartition, i: usize, s: Charge, e: usize) -> Vec<(Bipartition, i32)> {
    removable_nodes(lambda, i, s, e)
        .into_iter()
        .map(|g| {
            let smaller = remove_node(lambda, g).expect("removable");
            let below_a = addable_nodes(&smaller, i, s, e)
                .iter()
                .filter(|x| node_cmp(x, &g, s) == Ordering::Less)
                .count() as i32;
            let below_r = removable_nodes(lambda, i, s, e)
                .iter()
                .filter(|x| node_cmp(x, &g, s) == Ordering::Less)
                .count() as i32;
            (smaller, below_r - below_a)
        })
        .collect()
}

/// Images of one basis vector with their `v`-exponents.
type BasisAction = fn(&Bipartition, usize, Charge, usize) -> Vec<(Bipartition, i32)>;

fn act(i: usize, x: &FockVector, op: BasisAction) -> Result<FockVector> {
    check_residue(i, x.e)?;
    let mut out = FockVector::zero(x.charge, x.e);
    for (l, c) in &x.terms {
        for (m, k) in op(l, i, x.charge, x.e) {
            out.add_term(m, &c.shift(k));
        }
    }
    Ok(out)
}

pub fn f_action(i: usize, x: &FockVector) -> Result<FockVector> {
    act(i, x, f_basis)
}

pub fn e_action(i: usize, x: &FockVector) -> Result<FockVector> {
    act(i, x, e_basis)
}

/// `f_i^(a) = f_i^a / [a]!`.
pub fn divided_power_f(i: usize, a: u32, x: &FockVector) -> Result<FockVector> {
    let mut y = x.clone();
    for _ in 0..a {
        y = f_action(i, &y)?;
    }
    y.div_exact(&VPoly::quantum_factorial(a))
        .ok_or(Error::NonIntegralDivision { i, a })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(s: &str) -> Bipartition {
        s.parse().unwrap()
    }

    #[test]
    fn first_steps_from_vacuum() {
        let s = Charge::new(0, 0);
        let x = f_action(0, &FockVector::vacuum(s, 2)).unwrap();
        assert_eq!(x.coeff(&bp("(1;∅)")), VPoly::one());
        assert_eq!(x.coeff(&bp("(∅;1)")), VPoly::v_power(1));
        let y = divided_power_f(0, 2, &FockVector::vacuum(s, 2)).unwrap();
        assert_eq!(y, FockVector::basis(bp("(1;1)"), s, 2));
        assert!(f_action(2, &x).is_err());
    }

    #[test]
    fn commutator_on_vacuum() {
        let s = Charge::new(0, 0);
        let vac = FockVector::vacuum(s, 2);
        let ef = e_action(0, &f_action(0, &vac).unwrap()).unwrap();
        let fe = f_action(0, &e_action(0, &vac).unwrap()).unwrap();
        assert_eq!(ef.sub(&fe), vac.scale(&VPoly::quantum_integer(2)));
    }

    #[test]
    fn delta_values() {
        assert_eq!(delta_s(Charge::new(0, 0), 2), Ratio::from_integer(0));
        assert_eq!(delta_s(Charge::new(2, 0), 2), Ratio::from_integer(0));
        assert_eq!(delta_s(Charge::new(3, 0), 2), Ratio::from_integer(1));
        assert!(fock_modules_isomorphic(
            Charge::new(0, 0),
            Charge::new(2, 0),
            2
        ));
        assert!(!fock_modules_isomorphic(
            Charge::new(0, 0),
            Charge::new(1, 0),
            2
        ));
        assert_eq!(weight_ni(&Bipartition::empty(), 0, Charge::new(0, 0), 2), 2);
        assert_eq!(weight_ni(&Bipartition::empty(), 1, Charge::new(0, 0), 2), 0);
    }
}
