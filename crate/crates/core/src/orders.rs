//! Dominance orders on partitions and bipartitions, and their Hasse diagrams.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bounds::Bounds;
use crate::combinat::{enumerate_bipartitions, q_r_inverse, Bipartition, Partition};
use crate::error::{Error, Result};

/// The parameter `r` of `⊴_r`: a natural number or infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderParam {
    Finite(usize),
    Infinity,
}

impl OrderParam {
    /// Finite value used for bipartitions of size `n`; infinity becomes `n - 1`.
    pub fn resolve(self, n: usize) -> usize {
        match self {
            OrderParam::Finite(r) => r,
            OrderParam::Infinity => n.saturating_sub(1),
        }
    }
}

impl From<usize> for OrderParam {
    fn from(r: usize) -> Self {
        OrderParam::Finite(r)
    }
}

impl fmt::Display for OrderParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderParam::Finite(r) => write!(f, "{r}"),
            OrderParam::Infinity => write!(f, "inf"),
        }
    }
}

impl FromStr for OrderParam {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(OrderParam::Infinity),
            t => t
                .parse::<usize>()
                .map(OrderParam::Finite)
                .map_err(|_| Error::Parse(format!("r must be a natural number or 'inf': {s}"))),
        }
    }
}

/// `p ⊴ q` in the dominance order.
pub fn dominance_partitions(p: &Partition, q: &Partition) -> Result<bool> {
    if p.size() != q.size() {
        return Err(Error::SizeMismatch(p.size(), q.size()));
    }
    let (mut sp, mut sq) = (0usize, 0usize);
    for i in 0..p.length().max(q.length()) {
        sp += p.row(i);
        sq += q.row(i);
        if sp > sq {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `a ⊴_r b`, pulled back from partitions through `q_r^{-1}`.
pub fn dominance_r(a: &Bipartition, b: &Bipartition, r: OrderParam) -> Result<bool> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch(a.size(), b.size()));
    }
    let r = r.resolve(a.size());
    dominance_partitions(&q_r_inverse(a, r), &q_r_inverse(b, r))
}

/// Classical dominance on bipartitions, evaluated directly.
pub fn dominance_inf_explicit(a: &Bipartition, b: &Bipartition) -> Result<bool> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch(a.size(), b.size()));
    }
    let prefix_ok = |x: &Partition, y: &Partition, ox: usize, oy: usize| {
        let (mut sx, mut sy) = (ox, oy);
        if sx > sy {
            return false;
        }
        for i in 0..x.length().max(y.length()) {
            sx += x.row(i);
            sy += y.row(i);
            if sx > sy {
                return false;
            }
        }
        true
    };
    Ok(prefix_ok(&a.first, &b.first, 0, 0)
        && prefix_ok(&a.second, &b.second, a.first.size(), b.first.size()))
}

/// Covering relations of `⊴_r` on `Bip(n)`, as arrows larger → smaller.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HasseDiagram {
    pub vertices: Vec<Bipartition>,
    pub edges: Vec<(usize, usize)>,
}

/// The relation matrix `leq[i][j] = vertices[i] ⊴_r vertices[j]`.
pub fn relation_matrix(vertices: &[Bipartition], r: OrderParam) -> Vec<Vec<bool>> {
    let n = vertices.first().map_or(0, |b| b.size());
    let r = r.resolve(n);
    let parts: Vec<Partition> = vertices.iter().map(|b| q_r_inverse(b, r)).collect();
    parts
        .iter()
        .map(|p| {
            parts
                .iter()
                .map(|q| dominance_partitions(p, q).unwrap_or(false))
                .collect()
        })
        .collect()
}

pub fn hasse(n: usize, r: OrderParam, bounds: &Bounds) -> Result<HasseDiagram> {
    Bounds::check("hasse", n, bounds.hasse)?;
    let vertices = enumerate_bipartitions(n);
    let leq = relation_matrix(&vertices, r);
    let m = vertices.len();
    let lt = |i: usize, j: usize| i != j && leq[i][j];
    let mut edges = Vec::new();
    for big in 0..m {
        for small in 0..m {
            if lt(small, big) && !(0..m).any(|k| lt(small, k) && lt(k, big)) {
                edges.push((big, small));
            }
        }
    }
    Ok(HasseDiagram { vertices, edges })
}

impl HasseDiagram {
    /// Vertices from smallest to largest when the order is total.
    pub fn as_chain(&self) -> Option<Vec<&Bipartition>> {
        let m = self.vertices.len();
        if m == 0 || self.edges.len() + 1 != m {
            return if m == 1 {
                Some(vec![&self.vertices[0]])
            } else {
                None
            };
        }
        let mut down = vec![None; m];
        let mut indeg = vec![0; m];
        for &(a, b) in &self.edges {
            if down[a].is_some() {
                return None;
            }
            down[a] = Some(b);
            indeg[b] += 1;
        }
        let top = (0..m).find(|&i| indeg[i] == 0)?;
        let mut chain = vec![&self.vertices[top]];
        let mut cur = top;
        while let Some(nx) = down[cur] {
            chain.push(&self.vertices[nx]);
            cur = nx;
        }
        if chain.len() != m {
            return None;
        }
        chain.reverse();
        Some(chain)
    }

    /// Labelled edges `(larger, smaller)`.
    pub fn labelled_edges(&self) -> Vec<(String, String)> {
        self.edges
            .iter()
            .map(|&(a, b)| (self.vertices[a].to_string(), self.vertices[b].to_string()))
            .collect()
    }

    /// Chain `x ◁ y ◁ …` for total orders, otherwise one `larger -> smaller` edge per line.
    pub fn to_text(&self) -> String {
        if let Some(chain) = self.as_chain() {
            let s: Vec<String> = chain.iter().map(|b| b.to_string()).collect();
            return format!("{}\n", s.join(" ◁ "));
        }
        let mut out = String::new();
        for (a, b) in self.labelled_edges() {
            out.push_str(&format!("{a} -> {b}\n"));
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph hasse {\n  rankdir=TB;\n");
        for (i, v) in self.vertices.iter().enumerate() {
            out.push_str(&format!("  v{i} [label=\"{v}\"];\n"));
        }
        for &(a, b) in &self.edges {
            out.push_str(&format!("  v{a} -> v{b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(s: &str) -> Bipartition {
        s.parse().unwrap()
    }

    #[test]
    fn partition_dominance() {
        let p = |s: &str| s.parse::<Partition>().unwrap();
        assert!(dominance_partitions(&p("31"), &p("4")).unwrap());
        assert!(!dominance_partitions(&p("222"), &p("3111")).unwrap());
        assert!(!dominance_partitions(&p("3111"), &p("222")).unwrap());
        assert!(dominance_partitions(&p("3"), &p("2")).is_err());
    }

    #[test]
    fn small_chains() {
        let b = Bounds::default();
        let zero = hasse(2, OrderParam::Finite(0), &b).unwrap().to_text();
        assert_eq!(zero, "(∅;11) ◁ (11;∅) ◁ (1;1) ◁ (∅;2) ◁ (2;∅)\n");
        let inf = hasse(2, OrderParam::Infinity, &b).unwrap().to_text();
        assert_eq!(inf, "(∅;11) ◁ (∅;2) ◁ (1;1) ◁ (11;∅) ◁ (2;∅)\n");
        assert_eq!(hasse(0, OrderParam::Finite(3), &b).unwrap().edges.len(), 0);
    }

    #[test]
    fn incomparable_at_zero() {
        let (a, c) = (bp("(1;2)"), bp("(21;∅)"));
        assert!(!dominance_r(&a, &c, OrderParam::Finite(0)).unwrap());
        assert!(!dominance_r(&c, &a, OrderParam::Finite(0)).unwrap());
    }

    #[test]
    fn explicit_infinity_agrees() {
        for n in 0..=4 {
            let v = enumerate_bipartitions(n);
            for a in &v {
                for b in &v {
                    assert_eq!(
                        dominance_r(a, b, OrderParam::Infinity).unwrap(),
                        dominance_inf_explicit(a, b).unwrap(),
                        "{a} {b}"
                    );
                }
            }
        }
    }
}
