//! Partitions, bipartitions, beta-numbers, 2-cores and 2-quotients.
//!
//! Cells are 0-based `(row, column)` pairs throughout the crate.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub type Cell = (usize, usize);

/// Weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!(
                "parts not weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition(parts))
    }

    /// Builds a partition from a sequence with trailing zeros allowed.
    pub fn from_trailing_zeros(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of row `i`, zero past the last row.
    pub fn row(&self, i: usize) -> usize {
        self.0.get(i).map_or(0, |&p| p as usize)
    }

    /// Length of column `j`.
    pub fn column(&self, j: usize) -> usize {
        self.0.iter().take_while(|&&p| p as usize > j).count()
    }

    pub fn contains(&self, (r, c): Cell) -> bool {
        c < self.row(r)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.row(0);
        Partition((0..w).map(|j| self.column(j) as u32).collect())
    }

    pub fn addable_cells(&self) -> Vec<Cell> {
        (0..=self.length())
            .filter(|&r| r == 0 || self.row(r) < self.row(r - 1))
            .map(|r| (r, self.row(r)))
            .collect()
    }

    pub fn removable_cells(&self) -> Vec<Cell> {
        (0..self.length())
            .filter(|&r| self.row(r) > self.row(r + 1))
            .map(|r| (r, self.row(r) - 1))
            .collect()
    }

    pub fn with_cell(&self, (r, c): Cell) -> Option<Partition> {
        if self.row(r) != c || (r > 0 && self.row(r - 1) <= c) {
            return None;
        }
        let mut v = self.0.clone();
        if r == v.len() {
            v.push(1);
        } else {
            v[r] += 1;
        }
        Some(Partition(v))
    }

    pub fn without_cell(&self, (r, c): Cell) -> Option<Partition> {
        if self.row(r) != c + 1 || self.row(r + 1) > c {
            return None;
        }
        let mut v = self.0.clone();
        v[r] -= 1;
        if v[r] == 0 {
            v.pop();
        }
        Some(Partition(v))
    }

    /// Builds a partition from an arbitrary finite cell set, if it is a Young diagram.
    pub fn from_cells<I: IntoIterator<Item = Cell>>(cells: I) -> Option<Partition> {
        let mut rows: Vec<Vec<usize>> = Vec::new();
        for (r, c) in cells {
            if rows.len() <= r {
                rows.resize(r + 1, Vec::new());
            }
            rows[r].push(c);
        }
        for row in &mut rows {
            row.sort_unstable();
            if row.iter().enumerate().any(|(i, &c)| i != c) {
                return None;
            }
        }
        Partition::from_trailing_zeros(rows.iter().map(|x| x.len() as u32).collect()).ok()
    }

    /// Beta-numbers with `n` beads (`n >= length`): `parts_i + n - 1 - i`.
    pub fn beta_numbers(&self, n: usize) -> Vec<u32> {
        assert!(n >= self.length());
        (0..n)
            .map(|i| self.row(i) as u32 + (n - 1 - i) as u32)
            .collect()
    }

    /// Inverse of [`Partition::beta_numbers`] for any set of distinct non-negative integers.
    pub fn from_beta_numbers(beta: &[u32]) -> Partition {
        let mut b = beta.to_vec();
        b.sort_unstable_by(|x, y| y.cmp(x));
        let n = b.len();
        let parts = b
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (n - 1 - i) as u32)
            .collect();
        Partition::from_trailing_zeros(parts).expect("beta-set gives a partition")
    }
}

impl fmt::Display for Partition {
    /// Concatenated parts as in `21`; parts `>= 10` force `.` separators; `∅` if empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let sep = if self.0.iter().any(|&p| p >= 10) {
            "."
        } else {
            ""
        };
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(sep))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `∅`, `-`, `0` or the empty string for the empty partition,
    /// separated parts (`2.1`, `2,1`, `2 1`) or concatenated digits (`21`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" || s == "-" || s == "0" || s == "()" {
            return Ok(Partition::empty());
        }
        let s = s.trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<u32> = if s.contains(['.', ',', ' ']) {
            s.split(['.', ',', ' '])
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|e| Error::Parse(format!("{t}: {e}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::Parse(format!("bad part '{c}'")))
                })
                .collect::<Result<_>>()?
        };
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// All partitions of `n`, in decreasing lexicographic order (`(n)` first).
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p as u32);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Ordered pair of partitions `(λ⁰, λ¹)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Bipartition { first, second }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn size(&self) -> usize {
        self.first.size() + self.second.size()
    }

    pub fn component(&self, c: usize) -> &Partition {
        match c {
            0 => &self.first,
            1 => &self.second,
            _ => panic!("bipartition component {c}"),
        }
    }

    pub fn component_mut(&mut self, c: usize) -> &mut Partition {
        match c {
            0 => &mut self.first,
            1 => &mut self.second,
            _ => panic!("bipartition component {c}"),
        }
    }

    pub fn swapped(&self) -> Bipartition {
        Bipartition::new(self.second.clone(), self.first.clone())
    }

    /// Adds the cell `(row, col)` to component `c`.
    pub fn with_cell(&self, c: usize, cell: Cell) -> Option<Bipartition> {
        let mut b = self.clone();
        *b.component_mut(c) = self.component(c).with_cell(cell)?;
        Some(b)
    }

    pub fn without_cell(&self, c: usize, cell: Cell) -> Option<Bipartition> {
        let mut b = self.clone();
        *b.component_mut(c) = self.component(c).without_cell(cell)?;
        Some(b)
    }
}

impl fmt::Display for Bipartition {
    /// Text form, e.g. `(21;∅)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};{})", self.first, self.second)
    }
}

impl fmt::Debug for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Bipartition {
    type Err = Error;

    /// Parses `(21;∅)`, `(2.1;1)`, `(1;11)`; `|` is accepted in place of `;`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("bipartition must be parenthesised: {s}")))?;
        let mut it = t.split([';', '|']);
        let (a, b) = match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => return Err(Error::Parse(format!("expected two components: {s}"))),
        };
        Ok(Bipartition::new(a.parse()?, b.parse()?))
    }
}

impl Serialize for Bipartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Strictly decreasing set of non-negative integers with an even number of beads.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BetaSet {
    entries: Vec<u32>,
}

impl BetaSet {
    /// Smallest even bead count that is at least `length(p)` (and at least `min_beads`).
    pub fn of(p: &Partition, min_beads: usize) -> Self {
        let mut n = p.length().max(min_beads);
        if n % 2 == 1 {
            n += 1;
        }
        BetaSet {
            entries: p.beta_numbers(n),
        }
    }

    pub fn from_entries(mut entries: Vec<u32>) -> Result<Self> {
        entries.sort_unstable_by(|a, b| b.cmp(a));
        if entries.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parse("repeated beta-number".into()));
        }
        if entries.len() % 2 == 1 {
            return Err(Error::Parse(
                "beta-set must have an even number of beads".into(),
            ));
        }
        Ok(BetaSet { entries })
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn cardinality(&self) -> usize {
        self.entries.len()
    }

    pub fn to_partition(&self) -> Partition {
        Partition::from_beta_numbers(&self.entries)
    }

    /// Shifts every bead up by two and adds beads `1, 0`.
    pub fn extended(&self) -> BetaSet {
        let mut entries: Vec<u32> = self.entries.iter().map(|b| b + 2).collect();
        entries.extend([1, 0]);
        BetaSet { entries }
    }

    /// Core and quotient read off the two runners of the abacus.
    ///
    /// λ⁰ comes from the odd beads (`(b-1)/2`), λ¹ from the even beads (`b/2`).
    pub fn core_and_quotient(&self) -> (Partition, Bipartition) {
        let odd: Vec<u32> = self
            .entries
            .iter()
            .filter(|b| *b % 2 == 1)
            .map(|b| (b - 1) / 2)
            .collect();
        let even: Vec<u32> = self
            .entries
            .iter()
            .filter(|b| *b % 2 == 0)
            .map(|b| b / 2)
            .collect();
        let quotient = Bipartition::new(
            Partition::from_beta_numbers(&odd),
            Partition::from_beta_numbers(&even),
        );
        let mut core_beads: Vec<u32> = (0..odd.len() as u32).map(|k| 2 * k + 1).collect();
        core_beads.extend((0..even.len() as u32).map(|k| 2 * k));
        (Partition::from_beta_numbers(&core_beads), quotient)
    }
}

/// The staircase 2-core `(r, r-1, ..., 1)`.
pub fn delta_core(r: usize) -> Partition {
    Partition((1..=r as u32).rev().collect())
}

pub fn core_and_quotient(p: &Partition) -> (Partition, Bipartition) {
    BetaSet::of(p, 0).core_and_quotient()
}

/// The `r` with 2-core of `p` equal to `δ_r`.
pub fn core_index(p: &Partition) -> usize {
    let (core, _) = core_and_quotient(p);
    core.length()
}

/// `q_r`: 2-quotient of `p`, components swapped when `r` is odd.
pub fn q_r(p: &Partition, r: usize) -> Result<Bipartition> {
    let (core, quotient) = core_and_quotient(p);
    if core != delta_core(r) {
        return Err(Error::CoreMismatch {
            partition: p.to_string(),
            r,
        });
    }
    Ok(if r % 2 == 1 {
        quotient.swapped()
    } else {
        quotient
    })
}

/// The partition with 2-core `δ_r` and `q_r` equal to `b`.
pub fn q_r_inverse(b: &Bipartition, r: usize) -> Partition {
    let (odd_part, even_part) = if r % 2 == 1 {
        (&b.second, &b.first)
    } else {
        (&b.first, &b.second)
    };
    let mut beta = BetaSet::of(&delta_core(r), 0);
    loop {
        let odd = beta.entries.iter().filter(|x| *x % 2 == 1).count();
        let even = beta.cardinality() - odd;
        if odd >= odd_part.length() && even >= even_part.length() {
            let mut beads: Vec<u32> = odd_part
                .beta_numbers(odd)
                .into_iter()
                .map(|c| 2 * c + 1)
                .collect();
            beads.extend(even_part.beta_numbers(even).into_iter().map(|c| 2 * c));
            return Partition::from_beta_numbers(&beads);
        }
        beta = beta.extended();
    }
}

/// The total order used by [`enumerate_bipartitions`].
pub fn enumeration_cmp(a: &Bipartition, b: &Bipartition) -> std::cmp::Ordering {
    b.first
        .size()
        .cmp(&a.first.size())
        .then_with(|| b.first.cmp(&a.first))
        .then_with(|| b.second.cmp(&a.second))
}

/// `Bip(n)` ordered by `|λ⁰|` descending, then λ⁰ and λ¹ in decreasing
/// lexicographic order.
pub fn enumerate_bipartitions(n: usize) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        let firsts = partitions(k);
        let seconds = partitions(n - k);
        for a in &firsts {
            for b in &seconds {
                out.push(Bipartition::new(a.clone(), b.clone()));
            }
        }
    }
    out
}
