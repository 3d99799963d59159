//! The Hecke algebra of type B over `Z[Q^±1, q^±1]`, its bar involution,
//! the involutions `†`, `*` and the Kazhdan–Lusztig basis for a ξ-order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::laurent::Gamma;
use crate::weyl::WeylGroup;
use crate::ACoeff;

/// Total order on `Z^2`: `(α, β) > 0` iff `α + ξβ > 0`, for a rational
/// non-integer `ξ = num/den > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct XiOrder {
    num: i64,
    den: i64,
}

impl XiOrder {
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 || num == 0 || (num < 0) != (den < 0) || num % den == 0 {
            return Err(Error::InvalidXi(format!("{num}/{den}")));
        }
        let g = num.gcd(&den);
        Ok(XiOrder {
            num: num.abs() / g,
            den: den.abs() / g,
        })
    }

    /// `ξ = r + 1/2`.
    pub fn from_r(r: usize) -> Self {
        XiOrder {
            num: 2 * r as i64 + 1,
            den: 2,
        }
    }

    /// `ξ = n - 1/2`, a representative of the asymptotic regime `b > (n-1)a`.
    pub fn asymptotic(n: usize) -> Self {
        Self::from_r(n.saturating_sub(1))
    }

    pub fn numer(&self) -> i64 {
        self.num
    }

    pub fn denom(&self) -> i64 {
        self.den
    }

    /// `r = ⌊ξ⌋`.
    pub fn r(&self) -> usize {
        (self.num / self.den) as usize
    }

    /// Sign of `γ` under the order; ties of a nonzero `γ` with zero are errors.
    pub fn sign(&self, g: Gamma) -> Result<Ordering> {
        let val = g.alpha as i64 * self.den + g.beta as i64 * self.num;
        if val == 0 && g != Gamma::zero() {
            return Err(Error::IrrationalityViolation {
                alpha: g.alpha,
                beta: g.beta,
                xi: self.to_string(),
            });
        }
        Ok(val.cmp(&0))
    }

    /// The part of `f` supported on negative exponents.
    pub fn negative_part(&self, f: &ACoeff) -> Result<ACoeff> {
        let mut out = ACoeff::zero();
        for (g, c) in f.terms() {
            if self.sign(*g)? == Ordering::Less {
                out.add_term(*g, *c);
            }
        }
        Ok(out)
    }

    /// True iff every exponent of `f` is negative.
    pub fn in_negative_part(&self, f: &ACoeff) -> Result<bool> {
        for (g, _) in f.terms() {
            if self.sign(*g)? != Ordering::Less {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for XiOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl std::str::FromStr for XiOrder {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s.split_once('/').unwrap_or((s, "1"));
        let p = |x: &str| {
            x.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidXi(s.to_string()))
        };
        XiOrder::new(p(a)?, p(b)?)
    }
}

/// A finite `A`-linear combination of the `T_w`, keyed by group element index.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct HeckeElement {
    terms: BTreeMap<usize, ACoeff>,
}

impl HeckeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(w: usize) -> Self {
        Self::monomial(w, ACoeff::one())
    }

    pub fn monomial(w: usize, c: ACoeff) -> Self {
        let mut h = Self::zero();
        h.add_term(w, &c);
        h
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: usize) -> ACoeff {
        self.terms.get(&w).cloned().unwrap_or_else(ACoeff::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&usize, &ACoeff)> + '_ {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.terms.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: usize, c: &ACoeff) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w).or_insert_with(ACoeff::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &HeckeElement, c: &ACoeff) {
        for (w, x) in &other.terms {
            self.add_term(*w, &(x * c));
        }
    }

    pub fn add(&self, other: &HeckeElement) -> HeckeElement {
        let mut h = self.clone();
        h.add_scaled(other, &ACoeff::one());
        h
    }

    pub fn sub(&self, other: &HeckeElement) -> HeckeElement {
        let mut h = self.clone();
        h.add_scaled(other, &(-ACoeff::one()));
        h
    }

    pub fn scale(&self, c: &ACoeff) -> HeckeElement {
        let mut h = HeckeElement::zero();
        h.add_scaled(self, c);
        h
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&ACoeff) -> ACoeff) -> HeckeElement {
        let mut h = HeckeElement::zero();
        for (w, c) in &self.terms {
            h.add_term(*w, &f(c));
        }
        h
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| format!("({c})T[{w}]"))
            .collect();
        write!(
            f,
            "{}",
            if parts.is_empty() {
                "0".into()
            } else {
                parts.join(" + ")
            }
        )
    }
}

/// The generic Hecke algebra `H_n` with parameters `γ_t = b`, `γ_{s_i} = a`.
pub struct HeckeAlgebra {
    group: Arc<WeylGroup>,
    bar_basis: Vec<HeckeElement>,
}

impl HeckeAlgebra {
    pub fn new(n: usize) -> Self {
        Self::with_group(Arc::new(WeylGroup::new(n)))
    }

    pub fn with_group(group: Arc<WeylGroup>) -> Self {
        let mut alg = HeckeAlgebra {
            group,
            bar_basis: Vec::new(),
        };
        let order = alg.group.order();
        let mut bars: Vec<HeckeElement> = Vec::with_capacity(order);
        bars.push(HeckeElement::basis(0));
        for w in 1..order {
            // BFS order: the reduced word's prefix has a smaller index.
            let word = alg.group.reduced_word(w);
            let s = *word.last().expect("non-identity has a reduced word");
            let prefix = alg.group.right_mul(w, s);
            let prev = &bars[prefix];
            // bar(T_w) = bar(T_{ws}) (T_s - (e^γ - e^-γ))
            let mut h = alg.mul_gen_right(prev, s);
            h.add_scaled(prev, &(-alg.quadratic_term(s)));
            bars.push(h);
        }
        alg.bar_basis = bars;
        alg
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn group_arc(&self) -> Arc<WeylGroup> {
        self.group.clone()
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    pub fn weight(&self, s: usize) -> Gamma {
        if s == 0 {
            Gamma::B
        } else {
            Gamma::A
        }
    }

    /// `e^{γ_s} - e^{-γ_s}`.
    pub fn quadratic_term(&self, s: usize) -> ACoeff {
        let g = self.weight(s);
        ACoeff::monomial(g, 1) - ACoeff::monomial(-g, 1)
    }

    pub fn t(&self, w: usize) -> HeckeElement {
        HeckeElement::basis(w)
    }

    pub fn t_generator(&self, s: usize) -> HeckeElement {
        HeckeElement::basis(self.group.generator_index(s))
    }

    /// `C_s = T_s + e^{-γ_s} T_e`.
    pub fn c_generator(&self, s: usize) -> HeckeElement {
        let mut h = self.t_generator(s);
        h.add_term(0, &ACoeff::monomial(-self.weight(s), 1));
        h
    }

    /// `h · T_s`.
    pub fn mul_gen_right(&self, h: &HeckeElement, s: usize) -> HeckeElement {
        let q = self.quadratic_term(s);
        let mut out = HeckeElement::zero();
        for (&w, c) in h.terms() {
            let ws = self.group.right_mul(w, s);
            out.add_term(ws, c);
            if self.group.length(ws) < self.group.length(w) {
                out.add_term(w, &(c * &q));
            }
        }
        out
    }

    /// `T_s · h`.
    pub fn mul_gen_left(&self, s: usize, h: &HeckeElement) -> HeckeElement {
        let q = self.quadratic_term(s);
        let mut out = HeckeElement::zero();
        for (&w, c) in h.terms() {
            let sw = self.group.left_mul(w, s);
            out.add_term(sw, c);
            if self.group.length(sw) < self.group.length(w) {
                out.add_term(w, &(c * &q));
            }
        }
        out
    }

    /// `h · T_w` along a reduced word of `w`.
    pub fn mul_basis_right(&self, h: &HeckeElement, w: usize) -> HeckeElement {
        self.group
            .reduced_word(w)
            .iter()
            .fold(h.clone(), |acc, &s| self.mul_gen_right(&acc, s))
    }

    pub fn mul(&self, x: &HeckeElement, y: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (&w, c) in y.terms() {
            out.add_scaled(&self.mul_basis_right(x, w), c);
        }
        out
    }

    pub fn bar_basis(&self, w: usize) -> &HeckeElement {
        &self.bar_basis[w]
    }

    /// The ring involution with `e^γ ↦ e^{-γ}` and `T_w ↦ T_{w^{-1}}^{-1}`.
    pub fn bar(&self, h: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (&w, c) in h.terms() {
            out.add_scaled(&self.bar_basis[w], &c.bar());
        }
        out
    }

    /// The `A`-algebra involution with `T_s ↦ -T_s^{-1}`.
    pub fn dagger(&self, h: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (&w, c) in h.terms() {
            let c = if self.group.length(w).is_multiple_of(2) {
                c.clone()
            } else {
                -c.clone()
            };
            out.add_scaled(&self.bar_basis[w], &c);
        }
        out
    }

    /// The `A`-linear anti-involution `T_w ↦ T_{w^{-1}}`.
    pub fn star(&self, h: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (&w, c) in h.terms() {
            out.add_term(self.group.inverse(w), c);
        }
        out
    }

    /// Renders `h` with signed-permutation labels, e.g. `T[-1] + (Q^-1)T[e]`.
    pub fn format(&self, h: &HeckeElement) -> String {
        if h.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = h
            .terms()
            .rev()
            .map(|(&w, c)| {
                let label = if w == 0 {
                    "e".to_string()
                } else {
                    self.group.element(w).to_string()
                };
                if c.is_one() {
                    format!("T[{label}]")
                } else {
                    format!("({c})T[{label}]")
                }
            })
            .collect();
        parts.join(" + ")
    }
}

/// The Kazhdan–Lusztig basis `C_w` for a ξ-order, with `C_w = Σ_y p_{y,w} T_y`.
pub struct KlBasis {
    algebra: Arc<HeckeAlgebra>,
    xi: XiOrder,
    elements: Vec<HeckeElement>,
}

impl KlBasis {
    pub fn algebra(&self) -> &HeckeAlgebra {
        &self.algebra
    }

    pub fn algebra_arc(&self) -> Arc<HeckeAlgebra> {
        self.algebra.clone()
    }

    pub fn xi(&self) -> XiOrder {
        self.xi
    }

    pub fn group(&self) -> &WeylGroup {
        self.algebra.group()
    }

    pub fn element(&self, w: usize) -> &HeckeElement {
        &self.elements[w]
    }

    pub fn elements(&self) -> &[HeckeElement] {
        &self.elements
    }

    /// `p_{y,w}`.
    pub fn p(&self, y: usize, w: usize) -> ACoeff {
        self.elements[w].coeff(y)
    }

    /// Coordinates of `h` in the C-basis (unitriangular solve by decreasing length).
    pub fn expand(&self, h: &HeckeElement) -> HeckeElement {
        let g = self.group();
        let mut rest = h.clone();
        let mut out = HeckeElement::zero();
        while let Some(top) = rest.support().max_by_key(|&w| (g.length(w), w)) {
            let c = rest.coeff(top);
            rest.add_scaled(&self.elements[top], &(-c.clone()));
            out.add_term(top, &c);
        }
        out
    }
}

/// Computes `C_w` for all `w ∈ W_n` by the triangular recursion on
/// `p_{x,w} - bar(p_{x,w}) = Σ_{y > x} r_{x,y} bar(p_{y,w})`.
pub fn kl_basis(n: usize, xi: XiOrder, bounds: &Bounds) -> Result<KlBasis> {
    Bounds::check("kl_basis", n, bounds.kl)?;
    kl_basis_in(Arc::new(HeckeAlgebra::new(n)), xi)
}

pub fn kl_basis_in(algebra: Arc<HeckeAlgebra>, xi: XiOrder) -> Result<KlBasis> {
    let g = algebra.group();
    let order = g.order();
    let max_len = (0..order).map(|w| g.length(w)).max().unwrap_or(0);
    let mut by_length: Vec<Vec<usize>> = vec![Vec::new(); max_len + 1];
    for w in 0..order {
        by_length[g.length(w)].push(w);
    }
    let mut elements = Vec::with_capacity(order);
    for w in 0..order {
        let lw = g.length(w);
        let mut acc: BTreeMap<usize, ACoeff> = BTreeMap::new();
        let mut c = HeckeElement::basis(w);
        let push = |acc: &mut BTreeMap<usize, ACoeff>, y: usize, p: &ACoeff| {
            let pb = p.bar();
            for (&x, r) in algebra.bar_basis(y).terms() {
                if x != y {
                    let e = acc.entry(x).or_insert_with(ACoeff::zero);
                    e.add_product(r, &pb);
                }
            }
        };
        push(&mut acc, w, &ACoeff::one());
        for level in (0..lw).rev() {
            for &x in &by_length[level] {
                let Some(f) = acc.remove(&x) else { continue };
                if f.is_zero() {
                    continue;
                }
                if !f.is_bar_antisymmetric() {
                    return Err(Error::Internal(format!(
                        "KL recursion: non-antisymmetric term at {x}"
                    )));
                }
                let p = xi.negative_part(&f)?;
                if !p.is_zero() {
                    push(&mut acc, x, &p);
                    c.add_term(x, &p);
                }
            }
        }
        elements.push(c);
    }
    Ok(KlBasis {
        algebra,
        xi,
        elements,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i32, b: i32) -> ACoeff {
        ACoeff::monomial(Gamma::new(a, b), 1)
    }

    #[test]
    fn quadratic_relations() {
        let h = HeckeAlgebra::new(2);
        for s in 0..2 {
            let ts = h.t_generator(s);
            let sq = h.mul(&ts, &ts);
            let mut expect = ts.scale(&h.quadratic_term(s));
            expect.add_term(0, &ACoeff::one());
            assert_eq!(sq, expect);
        }
    }

    #[test]
    fn bar_of_t() {
        let h = HeckeAlgebra::new(1);
        let t = h.t_generator(0);
        let mut expect = t.clone();
        expect.add_term(0, &(q(0, -1) - q(0, 1)));
        assert_eq!(h.bar(&t), expect);
        assert_eq!(h.bar(&h.bar(&t)), t);
        let mut dag = t.scale(&(-ACoeff::one()));
        dag.add_term(0, &(q(0, 1) - q(0, -1)));
        assert_eq!(h.dagger(&t), dag);
    }

    #[test]
    fn small_kl_elements() {
        let b = kl_basis(2, XiOrder::from_r(0), &Bounds::default()).unwrap();
        let g = b.group();
        let t = g.generator_index(0);
        let s1 = g.generator_index(1);
        assert_eq!(b.element(0), &HeckeElement::basis(0));
        assert_eq!(b.element(t), &b.algebra().c_generator(0));
        assert_eq!(b.element(s1), &b.algebra().c_generator(1));
    }

    #[test]
    fn xi_ties_are_reported() {
        let xi = XiOrder::new(3, 2).unwrap();
        assert!(xi.sign(Gamma::new(3, -2)).is_err());
        assert_eq!(xi.sign(Gamma::new(-1, 1)).unwrap(), Ordering::Greater);
        assert_eq!(xi.r(), 1);
        assert!(XiOrder::new(4, 2).is_err());
    }
}
