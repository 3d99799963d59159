//! Standard domino tableaux, domino insertion and standard bitableaux.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::Bounds;
use crate::combinat::{delta_core, q_r, Bipartition, Cell, Partition};
use crate::error::{Error, Result};
use crate::orders::OrderParam;
use crate::weyl::{SignedPermutation, WeylGroup};

/// A standard domino tableau on a staircase core.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DominoTableau {
    core: Partition,
    dominoes: BTreeMap<u32, [Cell; 2]>,
}

impl DominoTableau {
    pub fn empty(r: usize) -> Self {
        DominoTableau {
            core: delta_core(r),
            dominoes: BTreeMap::new(),
        }
    }

    /// Builds a tableau and checks standardness.
    pub fn new(core: Partition, dominoes: BTreeMap<u32, [Cell; 2]>) -> Result<Self> {
        let t = DominoTableau { core, dominoes };
        t.validate()?;
        Ok(t)
    }

    pub fn core(&self) -> &Partition {
        &self.core
    }

    pub fn dominoes(&self) -> &BTreeMap<u32, [Cell; 2]> {
        &self.dominoes
    }

    pub fn len(&self) -> usize {
        self.dominoes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dominoes.is_empty()
    }

    /// Shape of the core together with the dominoes labelled `<= k`.
    pub fn shape_upto(&self, k: u32) -> Option<Partition> {
        let cells = self.core.cells().chain(
            self.dominoes
                .range(..=k)
                .flat_map(|(_, d)| d.iter().copied()),
        );
        Partition::from_cells(cells)
    }

    pub fn shape(&self) -> Partition {
        self.shape_upto(u32::MAX)
            .expect("validated tableau has partition shape")
    }

    fn validate(&self) -> Result<()> {
        let mut used: HashSet<Cell> = self.core.cells().collect();
        for (&k, d) in &self.dominoes {
            let [a, b] = *d;
            let adjacent =
                (a.0 == b.0 && a.1.abs_diff(b.1) == 1) || (a.1 == b.1 && a.0.abs_diff(b.0) == 1);
            if !adjacent {
                return Err(Error::MalformedTableau(format!(
                    "entry {k} is not a domino"
                )));
            }
            if !used.insert(a) || !used.insert(b) {
                return Err(Error::MalformedTableau(format!("entry {k} overlaps")));
            }
            if self.shape_upto(k).is_none() {
                return Err(Error::MalformedTableau(format!(
                    "entries <= {k} do not form a partition"
                )));
            }
        }
        Ok(())
    }

    /// ASCII picture: one row per line, core cells as `.`, domino cells by label.
    pub fn render(&self) -> String {
        let shape = self.shape();
        let mut grid: HashMap<Cell, String> =
            self.core.cells().map(|c| (c, ".".to_string())).collect();
        for (k, d) in &self.dominoes {
            for c in d {
                grid.insert(*c, k.to_string());
            }
        }
        let width = grid.values().map(|s| s.len()).max().unwrap_or(1);
        let mut out = String::new();
        for r in 0..shape.length() {
            let row: Vec<String> = (0..shape.row(r))
                .map(|c| format!("{:>width$}", grid[&(r, c)]))
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

fn horizontal(r: usize, c: usize) -> [Cell; 2] {
    [(r, c), (r, c + 1)]
}

fn vertical(r: usize, c: usize) -> [Cell; 2] {
    [(r, c), (r + 1, c)]
}

fn is_horizontal(d: &[Cell; 2]) -> bool {
    d[0].0 == d[1].0
}

fn normalized(mut d: [Cell; 2]) -> [Cell; 2] {
    d.sort();
    d
}

/// Inserts the signed letter `x` into `p`, returning the new tableau and the
/// domino of cells added to the shape.
pub fn insert_letter(p: &DominoTableau, x: i32) -> Result<(DominoTableau, [Cell; 2])> {
    let m = x.unsigned_abs();
    if m == 0 || p.dominoes.contains_key(&m) {
        return Err(Error::MalformedTableau(format!("cannot insert {x}")));
    }
    let below = Partition::from_cells(
        p.core
            .cells()
            .chain(p.dominoes.range(..m).flat_map(|(_, d)| d.iter().copied())),
    )
    .ok_or_else(|| Error::MalformedTableau("sub-tableau is not a partition".into()))?;
    let mut out = DominoTableau {
        core: p.core.clone(),
        dominoes: p.dominoes.range(..m).map(|(k, d)| (*k, *d)).collect(),
    };
    let mut current = below;
    let mut e = if x > 0 {
        horizontal(0, current.row(0))
    } else {
        vertical(current.column(0), 0)
    };
    let place = |out: &mut DominoTableau,
                 label: u32,
                 d: [Cell; 2],
                 current: &mut Partition|
     -> Result<()> {
        out.dominoes.insert(label, normalized(d));
        *current = Partition::from_cells(current.cells().chain(d.iter().copied()))
            .ok_or_else(|| Error::MalformedTableau(format!("placing {label} breaks the shape")))?;
        Ok(())
    };
    place(&mut out, m, e, &mut current)?;
    for (&k, d) in p.dominoes.range(m + 1..) {
        let overlap: Vec<Cell> = d.iter().filter(|c| e.contains(c)).copied().collect();
        match overlap.len() {
            0 => {
                place(&mut out, k, *d, &mut current)?;
            }
            2 => {
                let new = if is_horizontal(d) {
                    let row = d[0].0 + 1;
                    horizontal(row, current.row(row))
                } else {
                    let col = d[0].1 + 1;
                    vertical(current.column(col), col)
                };
                place(&mut out, k, new, &mut current)?;
                e = new;
            }
            _ => {
                let c = overlap[0];
                let c2 = if e[0] == c { e[1] } else { e[0] };
                let dd = if d[0] == c { d[1] } else { d[0] };
                let xr = dd.0 + c2.0 - c.0;
                let xc = dd.1 + c2.1 - c.1;
                let x = (xr, xc);
                place(&mut out, k, [dd, x], &mut current)?;
                e = [c2, x];
            }
        }
    }
    out.validate()?;
    Ok((out, normalized(e)))
}

/// Domino insertion `w ↦ (P_r(w), Q_r(w))`.
pub fn insert(w: &SignedPermutation, r: OrderParam) -> Result<(DominoTableau, DominoTableau)> {
    let r = r.resolve(w.rank());
    let mut p = DominoTableau::empty(r);
    let mut q = DominoTableau::empty(r);
    for (i, &x) in w.window().iter().enumerate() {
        let (np, added) = insert_letter(&p, x)?;
        p = np;
        q.dominoes.insert(i as u32 + 1, added);
    }
    q.validate()?;
    Ok((p, q))
}

/// A standard filling of a bipartition by `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct StandardBitableau {
    rows: [Vec<Vec<u32>>; 2],
}

impl StandardBitableau {
    pub fn empty() -> Self {
        StandardBitableau {
            rows: [Vec::new(), Vec::new()],
        }
    }

    pub fn rows(&self, c: usize) -> &[Vec<u32>] {
        &self.rows[c]
    }

    pub fn size(&self) -> usize {
        self.rows.iter().flatten().map(|r| r.len()).sum()
    }

    pub fn shape(&self) -> Bipartition {
        let p = |rows: &Vec<Vec<u32>>| {
            Partition::new(rows.iter().map(|r| r.len() as u32).collect()).expect("standard shape")
        };
        Bipartition::new(p(&self.rows[0]), p(&self.rows[1]))
    }

    fn push(&mut self, c: usize, (row, col): Cell, k: u32) -> Result<()> {
        let rows = &mut self.rows[c];
        if row == rows.len() {
            rows.push(Vec::new());
        }
        if row > rows.len() || rows[row].len() != col {
            return Err(Error::MalformedTableau(format!(
                "entry {k} not at a corner"
            )));
        }
        rows[row].push(k);
        Ok(())
    }

    /// Checks row/column strictness and that the entries are `1..=n`.
    pub fn is_standard(&self) -> bool {
        let mut all: Vec<u32> = self.rows.iter().flatten().flatten().copied().collect();
        all.sort_unstable();
        if all.iter().enumerate().any(|(i, &x)| x != i as u32 + 1) {
            return false;
        }
        self.rows.iter().all(|rows| {
            rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
                && rows
                    .windows(2)
                    .all(|p| p[1].len() <= p[0].len() && p[1].iter().zip(&p[0]).all(|(b, a)| a < b))
        })
    }
}

impl fmt::Display for StandardBitableau {
    /// Rows separated by `/`, entries by spaces, e.g. `(1 3/2;4)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comp = |rows: &Vec<Vec<u32>>| {
            if rows.is_empty() {
                return "∅".to_string();
            }
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect::<Vec<_>>()
                .join("/")
        };
        write!(f, "({};{})", comp(&self.rows[0]), comp(&self.rows[1]))
    }
}

impl Serialize for StandardBitableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// The bitableau read off from the chain of 2-quotients of a domino tableau.
pub fn qtilde_r(d: &DominoTableau) -> Result<StandardBitableau> {
    let r = d.core.length();
    let mut prev = Bipartition::empty();
    let mut out = StandardBitableau::empty();
    for (pos, (&k, _)) in d.dominoes.iter().enumerate() {
        let shape = d
            .shape_upto(k)
            .ok_or_else(|| Error::MalformedTableau(format!("entries <= {k} not a partition")))?;
        let next = q_r(&shape, r)
            .map_err(|_| Error::MalformedTableau(format!("entries <= {k} change the 2-core")))?;
        let mut placed = false;
        for c in 0..2 {
            let (a, b) = (prev.component(c), next.component(c));
            if b.size() == a.size() + 1 && prev.component(1 - c) == next.component(1 - c) {
                let cell = (0..b.length())
                    .find(|&i| b.row(i) != a.row(i))
                    .map(|i| (i, a.row(i)))
                    .ok_or_else(|| Error::Internal("quotient did not grow".into()))?;
                out.push(c, cell, pos as u32 + 1)?;
                placed = true;
            }
        }
        if !placed {
            return Err(Error::MalformedTableau(format!(
                "entry {k} does not add one box to the quotient"
            )));
        }
        prev = next;
    }
    Ok(out)
}

/// `(S_r(w), T_r(w), λ_r(w))`.
pub fn s_t_lambda(
    w: &SignedPermutation,
    r: OrderParam,
) -> Result<(StandardBitableau, StandardBitableau, Bipartition)> {
    let (p, q) = insert(w, r)?;
    let s = qtilde_r(&p)?;
    let t = qtilde_r(&q)?;
    let lambda = s.shape();
    Ok((s, t, lambda))
}

/// All standard bitableaux of the given shape, in lexicographic order.
pub fn standard_bitableaux(shape: &Bipartition) -> Vec<StandardBitableau> {
    fn rec(shape: &Bipartition) -> Vec<StandardBitableau> {
        let n = shape.size();
        if n == 0 {
            return vec![StandardBitableau::empty()];
        }
        let mut res = Vec::new();
        for c in 0..2 {
            for cell in shape.component(c).removable_cells() {
                let smaller = shape.without_cell(c, cell).expect("removable");
                for mut t in rec(&smaller) {
                    t.push(c, cell, n as u32).expect("corner");
                    res.push(t);
                }
            }
        }
        res
    }
    let mut v = rec(shape);
    v.sort();
    v
}

#[derive(Clone, Debug, Serialize)]
pub struct InsertionReport {
    pub n: usize,
    pub r: usize,
    pub elements: usize,
    pub distinct_pairs: usize,
    pub same_shape_pairs: usize,
    pub bijective: bool,
    pub symmetric: bool,
    pub diagram_commutes: bool,
    pub failures: Vec<String>,
}

impl InsertionReport {
    pub fn passed(&self) -> bool {
        self.bijective && self.symmetric && self.diagram_commutes
    }
}

/// `(S, T, Q_r(w) = P_r(w^{-1}), diagram commutes)` for one element.
type Checked = (StandardBitableau, StandardBitableau, bool, bool);

/// Exhaustive check of bijectivity, `Q_r(w) = P_r(w^{-1})` and the quotient diagram.
pub fn verify_insertion_bijection(
    n: usize,
    r: OrderParam,
    bounds: &Bounds,
) -> Result<InsertionReport> {
    Bounds::check("insertion", n, bounds.insertion)?;
    let rr = r.resolve(n);
    let group = WeylGroup::new(n);
    let results: Vec<(String, Result<Checked>)> = group
        .elements()
        .par_iter()
        .map(|w| {
            let res = (|| {
                let (p, q) = insert(w, r)?;
                let (pinv, _) = insert(&w.inverse(), r)?;
                let symmetric = q == pinv;
                let s = qtilde_r(&p)?;
                let t = qtilde_r(&q)?;
                let commutes = q_r(&p.shape(), rr).ok() == Some(s.shape())
                    && s.shape() == t.shape()
                    && s.is_standard()
                    && t.is_standard();
                Ok((s, t, symmetric, commutes))
            })();
            (w.to_string(), res)
        })
        .collect();
    let mut failures = Vec::new();
    let mut pairs = HashSet::new();
    let (mut symmetric, mut commutes) = (true, true);
    for (w, res) in results {
        match res {
            Ok((s, t, sym, com)) => {
                if !sym {
                    symmetric = false;
                    failures.push(format!("Q_r({w}) != P_r(w^-1)"));
                }
                if !com {
                    commutes = false;
                    failures.push(format!("quotient diagram fails at {w}"));
                }
                pairs.insert((s, t));
            }
            Err(e) => {
                commutes = false;
                failures.push(format!("{w}: {e}"));
            }
        }
    }
    let same_shape_pairs: usize = crate::combinat::enumerate_bipartitions(n)
        .iter()
        .map(|b| standard_bitableaux(b).len().pow(2))
        .sum();
    Ok(InsertionReport {
        n,
        r: rr,
        elements: group.order(),
        distinct_pairs: pairs.len(),
        same_shape_pairs,
        bijective: pairs.len() == group.order() && same_shape_pairs == group.order(),
        symmetric,
        diagram_commutes: commutes,
        failures,
    })
}
