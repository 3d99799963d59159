//! Crystal operators on bipartitions via the signature rule, the crystal
//! component of the empty bipartition and the FLOTW description.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::bounds::Bounds;
use crate::combinat::{enumeration_cmp, Bipartition};
use crate::error::{Error, Result};
use crate::fock::{add_node, addable_nodes, node_cmp, removable_nodes, remove_node, Charge, Node};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Letter {
    A,
    R,
}

/// Signature of `λ` at residue `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    /// All addable and removable `i`-nodes in increasing node order.
    pub word: Vec<(Node, Letter)>,
    /// The word after cancelling `RA` pairs: `A…AR…R`.
    pub reduced: Vec<(Node, Letter)>,
}

impl Signature {
    pub fn epsilon(&self) -> usize {
        self.reduced.iter().filter(|(_, l)| *l == Letter::R).count()
    }

    pub fn phi(&self) -> usize {
        self.reduced.iter().filter(|(_, l)| *l == Letter::A).count()
    }

    /// Node added by `f̃_i`: the rightmost residual `A`.
    pub fn good_addable(&self) -> Option<Node> {
        self.reduced
            .iter()
            .rev()
            .find(|(_, l)| *l == Letter::A)
            .map(|(n, _)| *n)
    }

    /// Node removed by `ẽ_i`: the leftmost residual `R`.
    pub fn good_removable(&self) -> Option<Node> {
        self.reduced
            .iter()
            .find(|(_, l)| *l == Letter::R)
            .map(|(n, _)| *n)
    }

    pub fn word_string(&self) -> String {
        self.word
            .iter()
            .map(|(_, l)| if *l == Letter::A { 'A' } else { 'R' })
            .collect()
    }

    pub fn reduced_string(&self) -> String {
        self.reduced
            .iter()
            .map(|(_, l)| if *l == Letter::A { 'A' } else { 'R' })
            .collect()
    }
}

pub fn signature_word(lambda: &Bipartition, i: usize, s: Charge, e: usize) -> Result<Signature> {
    if e == 0 || i >= e {
        return Err(Error::BadResidue { i, e });
    }
    let mut word: Vec<(Node, Letter)> = addable_nodes(lambda, i, s, e)
        .into_iter()
        .map(|n| (n, Letter::A))
        .chain(
            removable_nodes(lambda, i, s, e)
                .into_iter()
                .map(|n| (n, Letter::R)),
        )
        .collect();
    word.sort_by(|a, b| node_cmp(&a.0, &b.0, s));
    let mut reduced: Vec<(Node, Letter)> = Vec::new();
    for &(n, l) in &word {
        if l == Letter::A && reduced.last().is_some_and(|(_, x)| *x == Letter::R) {
            reduced.pop();
        } else {
            reduced.push((n, l));
        }
    }
    Ok(Signature { word, reduced })
}

pub fn crystal_f(
    lambda: &Bipartition,
    i: usize,
    s: Charge,
    e: usize,
) -> Result<Option<Bipartition>> {
    let sig = signature_word(lambda, i, s, e)?;
    Ok(sig.good_addable().and_then(|n| add_node(lambda, n)))
}

pub fn crystal_e(
    lambda: &Bipartition,
    i: usize,
    s: Charge,
    e: usize,
) -> Result<Option<Bipartition>> {
    let sig = signature_word(lambda, i, s, e)?;
    Ok(sig.good_removable().and_then(|n| remove_node(lambda, n)))
}

pub fn epsilon(lambda: &Bipartition, i: usize, s: Charge, e: usize) -> Result<usize> {
    Ok(signature_word(lambda, i, s, e)?.epsilon())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrystalEdge {
    pub source: Bipartition,
    pub label: usize,
    pub target: Bipartition,
}

/// The connected component of `∅` up to a maximal rank.
#[derive(Clone, Debug, Serialize)]
pub struct CrystalGraph {
    pub charge: Charge,
    pub e: usize,
    pub max_rank: usize,
    pub ranks: Vec<Vec<Bipartition>>,
    pub edges: Vec<CrystalEdge>,
}

pub fn crystal_graph(s: Charge, e: usize, nmax: usize, bounds: &Bounds) -> Result<CrystalGraph> {
    Bounds::check("crystal", nmax, bounds.crystal)?;
    if e == 0 {
        return Err(Error::BadResidue { i: 0, e });
    }
    let mut ranks = vec![vec![Bipartition::empty()]];
    let mut edges = Vec::new();
    for _ in 0..nmax {
        let current = ranks.last().expect("non-empty");
        let mut next = BTreeSet::new();
        for lambda in current {
            for i in 0..e {
                if let Some(mu) = crystal_f(lambda, i, s, e)? {
                    edges.push(CrystalEdge {
                        source: lambda.clone(),
                        label: i,
                        target: mu.clone(),
                    });
                    next.insert(mu);
                }
            }
        }
        let mut next: Vec<Bipartition> = next.into_iter().collect();
        next.sort_by(enumeration_cmp);
        ranks.push(next);
    }
    Ok(CrystalGraph {
        charge: s,
        e,
        max_rank: nmax,
        ranks,
        edges,
    })
}

impl CrystalGraph {
    pub fn vertices(&self) -> impl Iterator<Item = &Bipartition> + '_ {
        self.ranks.iter().flatten()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n  rankdir=TB;\n");
        let mut ids = std::collections::HashMap::new();
        for (k, rank) in self.ranks.iter().enumerate() {
            out.push_str("  { rank=same;");
            for (j, v) in rank.iter().enumerate() {
                let id = format!("r{k}_{j}");
                out.push_str(&format!(" {id};"));
                ids.insert(v.clone(), id);
            }
            out.push_str(" }\n");
        }
        for rank in &self.ranks {
            for v in rank {
                out.push_str(&format!("  {} [label=\"{v}\"];\n", ids[v]));
            }
        }
        for edge in &self.edges {
            out.push_str(&format!(
                "  {} -> {} [label=\"{}\"];\n",
                ids[&edge.source], ids[&edge.target], edge.label
            ));
        }
        out.push_str("}\n");
        out
    }

    /// One `source -i-> target` line per edge, after a rank-by-rank vertex list.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, rank) in self.ranks.iter().enumerate() {
            let vs: Vec<String> = rank.iter().map(|b| b.to_string()).collect();
            out.push_str(&format!("rank {k}: {}\n", vs.join(" ")));
        }
        for edge in &self.edges {
            out.push_str(&format!(
                "{} -{}-> {}\n",
                edge.source, edge.label, edge.target
            ));
        }
        out
    }
}

impl fmt::Display for CrystalGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// Rank-`n` vertices of the crystal component of `∅`, in enumeration order.
pub fn uglov_bipartitions(
    n: usize,
    s: Charge,
    e: usize,
    bounds: &Bounds,
) -> Result<Vec<Bipartition>> {
    let g = crystal_graph(s, e, n, bounds)?;
    Ok(g.ranks.into_iter().nth(n).unwrap_or_default())
}

/// Whether `λ` lies in the component of `∅`, by following `ẽ` back to `∅`.
pub fn is_uglov(lambda: &Bipartition, s: Charge, e: usize) -> Result<bool> {
    Ok(e_path(lambda, s, e)?.is_some())
}

/// Residues `i_1, …, i_n` with `λ = f̃_{i_n} ⋯ f̃_{i_1} ∅`, if `λ` is in the component of `∅`.
///
/// At each step the smallest `i` with `ε_i > 0` is removed.
pub fn e_path(lambda: &Bipartition, s: Charge, e: usize) -> Result<Option<Vec<usize>>> {
    let mut cur = lambda.clone();
    let mut path = Vec::new();
    while cur.size() > 0 {
        let mut moved = false;
        for i in 0..e {
            if let Some(prev) = crystal_e(&cur, i, s, e)? {
                path.push(i);
                cur = prev;
                moved = true;
                break;
            }
        }
        if !moved {
            return Ok(None);
        }
    }
    path.reverse();
    Ok(Some(path))
}

/// The FLOTW conditions for a charge with `0 <= s1 - s0 < e`:
/// `λ⁰_i >= λ¹_{i+s1-s0}`, `λ¹_i >= λ⁰_{i+e-s1+s0}`, and for every `k > 0`
/// the residues of the last nodes of rows of length `k` miss some class mod `e`.
pub fn flotw_oracle(lambda: &Bipartition, s: Charge, e: usize) -> Result<bool> {
    let diff = s.s1 as i64 - s.s0 as i64;
    if e == 0 || diff < 0 || diff >= e as i64 {
        return Err(Error::ChargeOutOfRange(
            s.to_string(),
            format!("need 0 <= s1 - s0 < {e}"),
        ));
    }
    let (l0, l1) = (&lambda.first, &lambda.second);
    let d = diff as usize;
    let len = l0.length().max(l1.length()) + e + 1;
    for i in 0..len {
        if l0.row(i) < l1.row(i + d) {
            return Ok(false);
        }
        if l1.row(i) < l0.row(i + e - d) {
            return Ok(false);
        }
    }
    let max_part = l0.row(0).max(l1.row(0));
    for k in 1..=max_part {
        let mut seen = vec![false; e];
        for c in 0..2 {
            let p = lambda.component(c);
            for i in 0..p.length() {
                if p.row(i) == k {
                    let content = k as i64 - 1 - i as i64 + s.get(c) as i64;
                    seen[content.rem_euclid(e as i64) as usize] = true;
                }
            }
        }
        if seen.iter().all(|&x| x) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(s: &str) -> Bipartition {
        s.parse().unwrap()
    }

    #[test]
    fn signatures() {
        let s = Charge::new(0, 0);
        let sig = signature_word(&bp("(1;∅)"), 0, s, 2).unwrap();
        assert_eq!(sig.word_string(), "AR");
        assert_eq!(sig.reduced_string(), "AR");
        let sig = signature_word(&bp("(2;1)"), 0, s, 2).unwrap();
        assert_eq!(sig.word_string(), "RA");
        assert_eq!(sig.reduced_string(), "");
        assert_eq!(crystal_f(&bp("(1;∅)"), 1, s, 2).unwrap(), Some(bp("(2;∅)")));
        assert_eq!(crystal_f(&bp("(1;1)"), 1, s, 2).unwrap(), Some(bp("(2;1)")));
        for i in 0..2 {
            assert_eq!(crystal_e(&Bipartition::empty(), i, s, 2).unwrap(), None);
        }
    }

    #[test]
    fn rank_four_sets() {
        let b = Bounds::default();
        let u = uglov_bipartitions(4, Charge::new(0, 0), 2, &b).unwrap();
        let names: Vec<String> = u.iter().map(|x| x.to_string()).collect();
        assert_eq!(names, ["(4;∅)", "(31;∅)", "(3;1)", "(2;2)"]);
        let u = uglov_bipartitions(4, Charge::new(2, 0), 2, &b).unwrap();
        let names: Vec<String> = u.iter().map(|x| x.to_string()).collect();
        assert_eq!(names, ["(4;∅)", "(31;∅)", "(3;1)", "(21;1)"]);
    }
}
