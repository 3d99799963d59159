//! Sparse Laurent polynomials over an exponent group.
//!
//! A [`Laurent<E, C>`] is a finitely supported map from an ordered exponent
//! group `E` to a coefficient ring `C`, i.e. an element of the group ring
//! `C[E]`. With `E = i32` this is `C[v, v^-1]`; with `E = Gamma` it is the
//! ring `C[Q^±1, q^±1]` used as the base ring of the Hecke algebra.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::scalar::Coeff;

/// An additive abelian group used as the exponent set of a group ring.
pub trait Exponent:
    Copy + Ord + fmt::Debug + std::hash::Hash + Add<Output = Self> + Neg<Output = Self> + Zero
{
}

impl Exponent for i32 {}

/// Element `(alpha, beta)` of `Z^2`, standing for `alpha*a + beta*b`.
///
/// Under `q = e^a`, `Q = e^b` the monomial `e^(alpha, beta)` is `q^alpha Q^beta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
pub struct Gamma {
    pub alpha: i32,
    pub beta: i32,
}

impl Gamma {
    pub const A: Gamma = Gamma { alpha: 1, beta: 0 };
    pub const B: Gamma = Gamma { alpha: 0, beta: 1 };

    pub const fn new(alpha: i32, beta: i32) -> Self {
        Gamma { alpha, beta }
    }
}

impl Add for Gamma {
    type Output = Gamma;
    fn add(self, o: Gamma) -> Gamma {
        Gamma::new(self.alpha + o.alpha, self.beta + o.beta)
    }
}

impl Neg for Gamma {
    type Output = Gamma;
    fn neg(self) -> Gamma {
        Gamma::new(-self.alpha, -self.beta)
    }
}

impl Zero for Gamma {
    fn zero() -> Self {
        Gamma::new(0, 0)
    }
    fn is_zero(&self) -> bool {
        self.alpha == 0 && self.beta == 0
    }
}

impl Exponent for Gamma {}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent<E: Exponent, C> {
    terms: BTreeMap<E, C>,
}

impl<E: Exponent, C: Coeff> Laurent<E, C> {
    pub fn monomial(exp: E, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Laurent { terms }
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(E::zero(), c)
    }

    pub fn from_terms<I: IntoIterator<Item = (E, C)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&E, &C)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &E) -> C {
        self.terms.get(exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, exp: E, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(x) => {
                let s = x.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&exp);
                } else {
                    *x = s;
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Self, c: &C) {
        for (e, x) in &other.terms {
            self.add_term(*e, x.clone() * c.clone());
        }
    }

    /// `self += m * other` for a polynomial multiplier `m`.
    pub fn add_product(&mut self, m: &Self, other: &Self) {
        for (e1, c1) in &m.terms {
            for (e2, c2) in &other.terms {
                self.add_term(*e1 + *e2, c1.clone() * c2.clone());
            }
        }
    }

    /// The involution `e^g -> e^-g`.
    pub fn bar(&self) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (-*e, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, x)| (*e, x.clone() * c.clone())))
    }

    /// Multiplies by the monomial `e^shift`.
    pub fn shift(&self, shift: E) -> Self {
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e + shift, c.clone()))
                .collect(),
        }
    }

    /// Keeps the terms whose exponent satisfies `pred`.
    pub fn filter(&self, mut pred: impl FnMut(&E) -> bool) -> Self {
        Laurent {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| pred(e))
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Evaluates the polynomial through a ring homomorphism given on monomials.
    pub fn eval<R: Coeff>(&self, mut mono: impl FnMut(E) -> R, conv: impl Fn(&C) -> R) -> R {
        let mut acc = R::zero();
        for (e, c) in &self.terms {
            acc = acc + conv(c) * mono(*e);
        }
        acc
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Laurent<E, D> {
        Laurent::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    pub fn is_bar_antisymmetric(&self) -> bool {
        *self == -self.bar()
    }
}

impl<C: Coeff> Laurent<i32, C> {
    /// Largest exponent with non-zero coefficient.
    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    /// `v^k`.
    pub fn v_power(k: i32) -> Self {
        Self::monomial(k, C::one())
    }

    /// Gaussian integer `[k] = (v^k - v^-k)/(v - v^-1)`.
    pub fn quantum_integer(k: u32) -> Self {
        let k = k as i32;
        Self::from_terms((0..k).map(|j| (k - 1 - 2 * j, C::one())))
    }

    pub fn quantum_factorial(k: u32) -> Self {
        (1..=k).fold(Self::one(), |acc, j| acc * Self::quantum_integer(j))
    }

    /// Exact division by a divisor whose top coefficient is a unit (`±1`).
    /// Returns `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dtop = divisor.max_degree()?;
        let lead = divisor.coeff(&dtop);
        let unit = if lead == C::one() {
            C::one()
        } else if lead == -C::one() {
            -C::one()
        } else {
            return None;
        };
        let dlow = divisor.min_degree()?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(top) = rem.max_degree() {
            if top - dtop < rem.min_degree().unwrap() - dlow {
                return None;
            }
            let c = rem.coeff(&top) * unit.clone();
            let m = Self::monomial(top - dtop, c);
            rem = rem - &m * divisor;
            quot = quot + m;
        }
        Some(quot)
    }

    /// Value at `v = 1`.
    pub fn at_one(&self) -> C {
        self.terms.values().fold(C::zero(), |a, c| a + c.clone())
    }

    /// Whether every exponent is strictly positive (element of `vZ[v]`).
    pub fn in_v_z_v(&self) -> bool {
        self.terms.keys().all(|&k| k > 0)
    }
}

impl<E: Exponent, C: Coeff> Zero for Laurent<E, C> {
    fn zero() -> Self {
        Laurent {
            terms: BTreeMap::new(),
        }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<E: Exponent, C: Coeff> One for Laurent<E, C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<E: Exponent, C: Coeff> Default for Laurent<E, C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<E: Exponent, C: Coeff> AddAssign<&Laurent<E, C>> for Laurent<E, C> {
    fn add_assign(&mut self, o: &Laurent<E, C>) {
        for (e, c) in &o.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<E: Exponent, C: Coeff> SubAssign<&Laurent<E, C>> for Laurent<E, C> {
    fn sub_assign(&mut self, o: &Laurent<E, C>) {
        for (e, c) in &o.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl<E: Exponent, C: Coeff> Add for Laurent<E, C> {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        self += &o;
        self
    }
}

impl<E: Exponent, C: Coeff> Add<&Laurent<E, C>> for &Laurent<E, C> {
    type Output = Laurent<E, C>;
    fn add(self, o: &Laurent<E, C>) -> Laurent<E, C> {
        let mut r = self.clone();
        r += o;
        r
    }
}

impl<E: Exponent, C: Coeff> Sub for Laurent<E, C> {
    type Output = Self;
    fn sub(mut self, o: Self) -> Self {
        self -= &o;
        self
    }
}

impl<E: Exponent, C: Coeff> Sub<&Laurent<E, C>> for &Laurent<E, C> {
    type Output = Laurent<E, C>;
    fn sub(self, o: &Laurent<E, C>) -> Laurent<E, C> {
        let mut r = self.clone();
        r -= o;
        r
    }
}

impl<E: Exponent, C: Coeff> Neg for Laurent<E, C> {
    type Output = Self;
    fn neg(self) -> Self {
        Laurent {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<E: Exponent, C: Coeff> Mul<&Laurent<E, C>> for &Laurent<E, C> {
    type Output = Laurent<E, C>;
    fn mul(self, o: &Laurent<E, C>) -> Laurent<E, C> {
        let mut r = Laurent::zero();
        r.add_product(self, o);
        r
    }
}

impl<E: Exponent, C: Coeff> Mul for Laurent<E, C> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        &self * &o
    }
}

impl<E: Exponent, C: Coeff> Coeff for Laurent<E, C> {
    fn from_i64(n: i64) -> Self {
        Self::constant(C::from_i64(n))
    }
}

impl<E: Exponent, C: Coeff> fmt::Debug for Laurent<E, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

/// Renders monomials of an exponent type as text.
pub trait MonomialDisplay {
    /// Text of the monomial without coefficient; empty for the identity.
    fn monomial_text(&self) -> String;
}

impl MonomialDisplay for i32 {
    fn monomial_text(&self) -> String {
        match *self {
            0 => String::new(),
            1 => "v".to_string(),
            k => format!("v^{k}"),
        }
    }
}

impl MonomialDisplay for Gamma {
    fn monomial_text(&self) -> String {
        let mut s = String::new();
        match self.beta {
            0 => {}
            1 => s.push('Q'),
            k => s.push_str(&format!("Q^{k}")),
        }
        match self.alpha {
            0 => {}
            1 => s.push('q'),
            k => s.push_str(&format!("q^{k}")),
        }
        s
    }
}

impl<E: Exponent + MonomialDisplay, C: Coeff + fmt::Display> fmt::Display for Laurent<E, C> {
    /// Terms in decreasing exponent order, e.g. `v^2 - 2v + 1 + v^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let one = C::one();
        let minus_one = -C::one();
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono = e.monomial_text();
            let neg = format!("{c}").starts_with('-');
            let abs = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if *c == one || *c == minus_one {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}{mono}")?;
            }
        }
        Ok(())
    }
}

impl<E: Exponent + MonomialDisplay, C: Coeff + fmt::Display> Serialize for Laurent<E, C> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
