//! Signed permutations and the Weyl group `W_n` of type B.
//!
//! Generator `0` is `t` (negate position 1); generator `i >= 1` is `s_i`
//! (swap positions `i` and `i+1`). Right multiplication by a generator acts
//! on positions of the window, left multiplication acts on values.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &x in &window {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::Parse(format!(
                    "not a signed permutation: {window:?}"
                )));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { window })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            window: (1..=n as i32).collect(),
        }
    }

    pub fn generator(n: usize, s: usize) -> Self {
        let mut w = Self::identity(n);
        w.apply_right(s);
        w
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// `w(i)` for `i` in `±1..=±n`.
    pub fn apply(&self, i: i32) -> i32 {
        let v = self.window[i.unsigned_abs() as usize - 1];
        if i < 0 {
            -v
        } else {
            v
        }
    }

    /// `self · other` as maps (`other` applied first).
    pub fn compose(&self, other: &Self) -> Self {
        SignedPermutation {
            window: other.window.iter().map(|&i| self.apply(i)).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.window.len()];
        for (i, &x) in self.window.iter().enumerate() {
            let pos = i as i32 + 1;
            inv[x.unsigned_abs() as usize - 1] = if x < 0 { -pos } else { pos };
        }
        SignedPermutation { window: inv }
    }

    fn apply_right(&mut self, s: usize) {
        if s == 0 {
            self.window[0] = -self.window[0];
        } else {
            self.window.swap(s - 1, s);
        }
    }

    pub fn times_generator(&self, s: usize) -> Self {
        let mut w = self.clone();
        w.apply_right(s);
        w
    }

    pub fn generator_times(&self, s: usize) -> Self {
        let g = Self::generator(self.rank(), s);
        g.compose(self)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.window.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", s.join(" "))
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;
    /// Window notation, e.g. `-1 3 2` or `-1,3,2`; `e` or empty for the rank-0 identity.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('[').trim_end_matches(']');
        if t.is_empty() {
            return Ok(SignedPermutation { window: Vec::new() });
        }
        let window = t
            .split([' ', ','])
            .filter(|x| !x.is_empty())
            .map(|x| {
                x.parse::<i32>()
                    .map_err(|e| Error::Parse(format!("{x}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(window)
    }
}

impl Serialize for SignedPermutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

pub fn generator_name(s: usize) -> String {
    if s == 0 {
        "t".into()
    } else {
        format!("s{s}")
    }
}

/// `W_n` enumerated by breadth-first search over right multiplication.
///
/// Elements are indexed in BFS order, so indices are sorted by length.
pub struct WeylGroup {
    n: usize,
    elements: Vec<SignedPermutation>,
    index: HashMap<SignedPermutation, usize>,
    length: Vec<usize>,
    words: Vec<Vec<usize>>,
    right: Vec<Vec<usize>>,
    left: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

impl WeylGroup {
    pub fn new(n: usize) -> Self {
        let gens = n;
        let e = SignedPermutation::identity(n);
        let mut elements = vec![e.clone()];
        let mut index = HashMap::from([(e, 0usize)]);
        let mut length = vec![0];
        let mut words = vec![Vec::new()];
        let mut head = 0;
        while head < elements.len() {
            let w = elements[head].clone();
            for s in 0..gens {
                let ws = w.times_generator(s);
                if !index.contains_key(&ws) {
                    index.insert(ws.clone(), elements.len());
                    length.push(length[head] + 1);
                    let mut word = words[head].clone();
                    word.push(s);
                    words.push(word);
                    elements.push(ws);
                }
            }
            head += 1;
        }
        let right = elements
            .iter()
            .map(|w| (0..gens).map(|s| index[&w.times_generator(s)]).collect())
            .collect();
        let left = elements
            .iter()
            .map(|w| (0..gens).map(|s| index[&w.generator_times(s)]).collect())
            .collect();
        let inverse = elements.iter().map(|w| index[&w.inverse()]).collect();
        WeylGroup {
            n,
            elements,
            index,
            length,
            words,
            right,
            left,
            inverse,
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn num_generators(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[SignedPermutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &SignedPermutation {
        &self.elements[i]
    }

    pub fn index_of(&self, w: &SignedPermutation) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn length(&self, i: usize) -> usize {
        self.length[i]
    }

    /// A reduced word for element `i`, as generator indices.
    pub fn reduced_word(&self, i: usize) -> &[usize] {
        &self.words[i]
    }

    /// Index of `w_i · s`.
    pub fn right_mul(&self, i: usize, s: usize) -> usize {
        self.right[i][s]
    }

    /// Index of `s · w_i`.
    pub fn left_mul(&self, i: usize, s: usize) -> usize {
        self.left[i][s]
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverse[i]
    }

    pub fn generator_index(&self, s: usize) -> usize {
        self.right[0][s]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders_and_longest_element() {
        for n in 0..=4 {
            let g = WeylGroup::new(n);
            let expected = (1..=n).product::<usize>() << n;
            assert_eq!(g.order(), expected);
            let longest = (0..g.order()).map(|i| g.length(i)).max().unwrap();
            assert_eq!(longest, n * n);
        }
    }

    #[test]
    fn coxeter_relations() {
        let n = 3;
        let t = SignedPermutation::generator(n, 0);
        let s1 = SignedPermutation::generator(n, 1);
        let s2 = SignedPermutation::generator(n, 2);
        let e = SignedPermutation::identity(n);
        let pow = |x: &SignedPermutation, k: usize| (0..k).fold(e.clone(), |acc, _| acc.compose(x));
        assert_eq!(pow(&t.compose(&s1), 4), e);
        assert_eq!(pow(&s1.compose(&s2), 3), e);
        assert_eq!(pow(&t.compose(&s2), 2), e);
        assert_eq!(t.window(), &[-1, 2, 3]);
    }

    #[test]
    fn inverses_and_parsing() {
        let w: SignedPermutation = "-2 3 -1".parse().unwrap();
        assert_eq!(w.compose(&w.inverse()), SignedPermutation::identity(3));
        assert_eq!(w.to_string(), "-2 3 -1");
        assert!("1 1".parse::<SignedPermutation>().is_err());
        let g = WeylGroup::new(3);
        for i in 0..g.order() {
            assert_eq!(g.length(g.inverse(i)), g.length(i));
        }
    }
}
