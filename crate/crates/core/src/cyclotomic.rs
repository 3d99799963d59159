//! Exact arithmetic in cyclotomic fields `F(zeta_m)`.
//!
//! Elements are stored in the power basis `1, z, ..., z^(phi(m)-1)` modulo the
//! `m`-th cyclotomic polynomial. An element with `m = 0` is a base-field
//! constant and combines with elements of any conductor, which lets
//! [`Cyclotomic`] implement `Zero`/`One` without knowing `m` in advance.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::scalar::{AsInteger, Coeff, Field};

/// Integer coefficients of the `m`-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(m: u32) -> Vec<i64> {
    assert!(m >= 1);
    // x^m - 1 divided by Phi_d for every proper divisor d.
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in 1..m {
        if m.is_multiple_of(d) {
            let phi_d = cyclotomic_polynomial(d);
            num = div_monic_int(&num, &phi_d);
        }
    }
    num
}

fn div_monic_int(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        for (j, &dc) in den.iter().enumerate() {
            rem[k + j] -= c * dc;
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    quot
}

#[derive(Clone)]
pub struct Cyclotomic<F: Field> {
    m: u32,
    modulus: Option<Arc<Vec<i64>>>,
    coeffs: Vec<F>,
}

pub type CycloNumber = Cyclotomic<BigRational>;

impl<F: Field> Cyclotomic<F> {
    pub fn constant(c: F) -> Self {
        let mut x = Cyclotomic {
            m: 0,
            modulus: None,
            coeffs: vec![c],
        };
        x.trim();
        x
    }

    /// `zeta_m^k` for any integer `k`.
    pub fn zeta_power(m: u32, k: i64) -> Self {
        let modulus = Arc::new(cyclotomic_polynomial(m));
        let k = k.rem_euclid(m as i64) as usize;
        let mut coeffs = vec![F::zero(); k + 1];
        coeffs[k] = F::one();
        let mut x = Cyclotomic {
            m,
            modulus: Some(modulus),
            coeffs,
        };
        x.reduce();
        x
    }

    pub fn conductor(&self) -> u32 {
        self.m
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// The base-field value, when the element lies in the base field.
    pub fn to_base(&self) -> Option<F> {
        match self.coeffs.len() {
            0 => Some(F::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    fn reduce(&mut self) {
        if let Some(md) = &self.modulus {
            let deg = md.len() - 1;
            while self.coeffs.len() > deg {
                let top = self.coeffs.pop().unwrap();
                if top.is_zero() {
                    continue;
                }
                let base = self.coeffs.len() - deg;
                for (j, &mc) in md.iter().enumerate().take(deg) {
                    let t = self.coeffs[base + j].clone() - top.clone() * F::from_i64(mc);
                    self.coeffs[base + j] = t;
                }
            }
        }
        self.trim();
    }

    fn join(a: &Self, b: &Self) -> (u32, Option<Arc<Vec<i64>>>) {
        match (a.m, b.m) {
            (0, _) => (b.m, b.modulus.clone()),
            (_, 0) => (a.m, a.modulus.clone()),
            (x, y) => {
                assert_eq!(x, y, "mixing cyclotomic fields of different conductor");
                (x, a.modulus.clone())
            }
        }
    }

    fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        if let Some(c) = self.to_base() {
            return Self::constant(c.inv());
        }
        let md = self
            .modulus
            .as_ref()
            .expect("non-constant element has a modulus");
        // Extended Euclid in F[x]: find s with s*self = 1 mod Phi_m.
        let modpoly: Vec<F> = md.iter().map(|&c| F::from_i64(c)).collect();
        let (mut r0, mut r1) = (modpoly, self.coeffs.clone());
        let (mut s0, mut s1) = (Vec::<F>::new(), vec![F::one()]);
        while !(r1.is_empty()) {
            let (q, r) = poly_divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
        }
        // r0 is a non-zero constant since Phi_m is irreducible.
        assert_eq!(r0.len(), 1, "cyclotomic polynomial is not irreducible?");
        let c = r0[0].inv();
        let mut out = Cyclotomic {
            m: self.m,
            modulus: self.modulus.clone(),
            coeffs: s0.into_iter().map(|x| x * c.clone()).collect(),
        };
        out.reduce();
        out
    }
}

fn poly_trim<F: Field>(mut p: Vec<F>) -> Vec<F> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_sub<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let n = a.len().max(b.len());
    let r = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(F::zero);
            let y = b.get(i).cloned().unwrap_or_else(F::zero);
            x - y
        })
        .collect();
    poly_trim(r)
}

fn poly_mul<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![F::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            r[i + j] = r[i + j].clone() + x.clone() * y.clone();
        }
    }
    poly_trim(r)
}

fn poly_divrem<F: Field>(a: &[F], b: &[F]) -> (Vec<F>, Vec<F>) {
    let mut rem = poly_trim(a.to_vec());
    let db = b.len() - 1;
    let lead_inv = b[db].inv();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![F::zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let k = rem.len() - 1 - db;
        let c = rem[rem.len() - 1].clone() * lead_inv.clone();
        for (j, y) in b.iter().enumerate() {
            rem[k + j] = rem[k + j].clone() - c.clone() * y.clone();
        }
        quot[k] = c;
        rem = poly_trim(rem);
    }
    (poly_trim(quot), rem)
}

impl<F: Field> PartialEq for Cyclotomic<F> {
    fn eq(&self, o: &Self) -> bool {
        self.coeffs == o.coeffs
    }
}

impl<F: Field> Zero for Cyclotomic<F> {
    fn zero() -> Self {
        Cyclotomic {
            m: 0,
            modulus: None,
            coeffs: Vec::new(),
        }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<F: Field> One for Cyclotomic<F> {
    fn one() -> Self {
        Self::constant(F::one())
    }
}

impl<F: Field> Add for Cyclotomic<F> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let (m, modulus) = Self::join(&self, &o);
        let n = self.coeffs.len().max(o.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let x = self.coeffs.get(i).cloned().unwrap_or_else(F::zero);
                let y = o.coeffs.get(i).cloned().unwrap_or_else(F::zero);
                x + y
            })
            .collect();
        let mut r = Cyclotomic { m, modulus, coeffs };
        r.trim();
        r
    }
}

impl<F: Field> Neg for Cyclotomic<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Cyclotomic {
            m: self.m,
            modulus: self.modulus,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<F: Field> Sub for Cyclotomic<F> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<F: Field> Mul for Cyclotomic<F> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let (m, modulus) = Self::join(&self, &o);
        let mut r = Cyclotomic {
            m,
            modulus,
            coeffs: poly_mul(&self.coeffs, &o.coeffs),
        };
        r.reduce();
        r
    }
}

impl<F: Field> Div for Cyclotomic<F> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Self) -> Self {
        self * o.inverse()
    }
}

impl<F: Field> Coeff for Cyclotomic<F> {
    fn from_i64(n: i64) -> Self {
        Self::constant(F::from_i64(n))
    }
}

impl<F: Field> Field for Cyclotomic<F> {
    fn inv(&self) -> Self {
        self.inverse()
    }
}

impl<F: Field + AsInteger> AsInteger for Cyclotomic<F> {
    fn as_integer(&self) -> Option<i64> {
        self.to_base()?.as_integer()
    }
}

impl<F: Field + fmt::Display> fmt::Display for Cyclotomic<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("({c})z"),
                _ => format!("({c})z^{k}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<F: Field> fmt::Debug for Cyclotomic<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic(m={}, {:?})", self.m, self.coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type C = CycloNumber;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
    }

    #[test]
    fn root_of_unity_orders() {
        for m in [4u32, 8, 12, 20] {
            let z = C::zeta_power(m, 1);
            let mut p = C::one();
            for k in 1..=m {
                p = p * z.clone();
                assert_eq!(p == C::one(), k == m, "m={m} k={k}");
            }
        }
    }

    #[test]
    fn inverses() {
        let z = C::zeta_power(12, 1);
        let x = z.clone() + C::from_i64(3) + z.clone() * z.clone();
        let y = x.inv();
        assert_eq!(x * y, C::one());
        assert_eq!(C::zeta_power(8, -3) * C::zeta_power(8, 3), C::one());
    }
}
