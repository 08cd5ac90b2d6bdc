//! The Weyl algebra in three variables `x, y, z` and its quotients by the six
//! monomial left ideals.
//!
//! Elements are stored normal-ordered: every coordinate factor to the left of
//! every derivative factor, positions ordered `x < y < z`. The only nontrivial
//! relations are `[dx, x] = [dy, y] = [dz, z] = 1`.

mod parse;
mod quotient;
mod render;

pub use parse::{parse_element, parse_vector};
pub use quotient::{act, graded_degree, reduce, Grading, Kill, ModuleMonomial, ModuleVector, QuotientSignature};
pub use render::{Presentation, Rendered};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::exact::{Coeff, Rational, Ring};

/// Variable positions, in normal order.
pub const POSITIONS: [usize; 3] = [0, 1, 2];

/// Names of the three coordinate positions.
pub const POSITION_NAMES: [&str; 3] = ["x", "y", "z"];

/// Normal-ordered word `x^a y^b z^c dx^d dy^e dz^f`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct WeylMonomial {
    pub coord: [u32; 3],
    pub deriv: [u32; 3],
}

impl WeylMonomial {
    pub const ONE: WeylMonomial = WeylMonomial {
        coord: [0; 3],
        deriv: [0; 3],
    };

    pub fn new(coord: [u32; 3], deriv: [u32; 3]) -> Self {
        Self { coord, deriv }
    }

    pub fn coordinate(pos: usize) -> Self {
        let mut m = Self::ONE;
        m.coord[pos] = 1;
        m
    }

    pub fn derivative(pos: usize) -> Self {
        let mut m = Self::ONE;
        m.deriv[pos] = 1;
        m
    }

    pub fn total_degree(&self) -> u32 {
        self.coord.iter().chain(self.deriv.iter()).sum()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::ONE
    }

    fn key(&self) -> (u32, [u32; 3], [u32; 3]) {
        (self.total_degree(), self.coord, self.deriv)
    }
}

impl PartialOrd for WeylMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Graded-lex: total degree first, then coordinate exponents, then derivative
/// exponents.
impl Ord for WeylMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

/// Finitely supported combination of normal-ordered monomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeylElement<C> {
    terms: BTreeMap<WeylMonomial, C>,
}

impl<C: Coeff> Default for WeylElement<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> WeylElement<C> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(WeylMonomial::ONE, c)
    }

    pub fn term(m: WeylMonomial, c: C) -> Self {
        let mut e = Self::zero();
        e.add_term(m, c);
        e
    }

    pub fn coordinate(pos: usize) -> Self {
        Self::term(WeylMonomial::coordinate(pos), C::one())
    }

    pub fn derivative(pos: usize) -> Self {
        Self::term(WeylMonomial::derivative(pos), C::one())
    }

    pub fn x() -> Self {
        Self::coordinate(0)
    }
    pub fn y() -> Self {
        Self::coordinate(1)
    }
    pub fn z() -> Self {
        Self::coordinate(2)
    }
    pub fn dx() -> Self {
        Self::derivative(0)
    }
    pub fn dy() -> Self {
        Self::derivative(1)
    }
    pub fn dz() -> Self {
        Self::derivative(2)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&WeylMonomial, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &WeylMonomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Constant term (coefficient of the empty word).
    pub fn constant_term(&self) -> C {
        self.coefficient(&WeylMonomial::ONE)
    }

    pub fn add_term(&mut self, m: WeylMonomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                slot.add_assign_ref(&c);
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        for (m, d) in &self.terms {
            out.add_term(*m, d.mul_ref(c));
        }
        out
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        let mut out = Self::zero();
        for (m, d) in &self.terms {
            out.add_term(*m, d.scale(r));
        }
        out
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> WeylElement<D> {
        let mut out = WeylElement::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, f(c));
        }
        out
    }

    /// Lifts into the parametric ring.
    pub fn to_param(&self) -> WeylElement<crate::exact::ParamPoly> {
        self.map_coeffs(|c| c.to_param())
    }

    /// Normal-ordered product `self * other`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let c = ca.mul_ref(cb);
                for (m, k) in mul_monomials(a, b) {
                    out.add_term(m, c.scale(&k));
                }
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &self.mul(other) - &other.mul(self)
    }

    /// Maximal total degree of a term, 0 for the zero element.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    /// True when no term contains a derivative.
    pub fn is_coordinate_polynomial(&self) -> bool {
        self.terms.keys().all(|m| m.deriv == [0; 3])
    }
}

/// Expands `(x^a dx^b) (x^c dx^d)` one position at a time using
/// `dx^b x^c = sum_k (b)_k C(c,k) x^(c-k) dx^(b-k)`.
pub(crate) fn mul_monomials(a: &WeylMonomial, b: &WeylMonomial) -> Vec<(WeylMonomial, Rational)> {
    let mut per_pos: [Vec<(u32, u32, u128)>; 3] = Default::default();
    for i in POSITIONS {
        let (bd, bc) = (a.deriv[i], b.coord[i]);
        for k in 0..=bd.min(bc) {
            let coef = falling_u128(bd, k) * binomial_u128(bc, k);
            per_pos[i].push((a.coord[i] + bc - k, bd + b.deriv[i] - k, coef));
        }
    }
    let mut out = Vec::with_capacity(per_pos.iter().map(Vec::len).product());
    for &(cx, dx, kx) in &per_pos[0] {
        for &(cy, dy, ky) in &per_pos[1] {
            for &(cz, dz, kz) in &per_pos[2] {
                let m = WeylMonomial::new([cx, cy, cz], [dx, dy, dz]);
                let k = BigInt::from(kx) * BigInt::from(ky) * BigInt::from(kz);
                out.push((m, Rational::from_integer(k)));
            }
        }
    }
    out
}

pub(crate) fn falling_u128(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| {
        acc.checked_mul(u128::from(n - i))
            .expect("falling factorial overflows u128")
    })
}

pub(crate) fn binomial_u128(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u128;
    for i in 0..k {
        acc = acc
            .checked_mul(u128::from(n - i))
            .expect("binomial overflows u128")
            / u128::from(i + 1);
    }
    acc
}

impl<'a, C: Coeff> Add<&'a WeylElement<C>> for &'a WeylElement<C> {
    type Output = WeylElement<C>;
    fn add(self, rhs: &WeylElement<C>) -> WeylElement<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a, C: Coeff> Sub<&'a WeylElement<C>> for &'a WeylElement<C> {
    type Output = WeylElement<C>;
    fn sub(self, rhs: &WeylElement<C>) -> WeylElement<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.neg_ref());
        }
        out
    }
}

impl<'a, C: Coeff> Mul<&'a WeylElement<C>> for &'a WeylElement<C> {
    type Output = WeylElement<C>;
    fn mul(self, rhs: &WeylElement<C>) -> WeylElement<C> {
        WeylElement::mul(self, rhs)
    }
}

impl<C: Coeff> Neg for &WeylElement<C> {
    type Output = WeylElement<C>;
    fn neg(self) -> WeylElement<C> {
        self.map_coeffs(|c| c.neg_ref())
    }
}

impl<C: Coeff> Add for WeylElement<C> {
    type Output = WeylElement<C>;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<C: Coeff> Sub for WeylElement<C> {
    type Output = WeylElement<C>;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<C: Coeff> Neg for WeylElement<C> {
    type Output = WeylElement<C>;
    fn neg(self) -> Self {
        -&self
    }
}

impl<C: Coeff> Ring for WeylElement<C> {
    fn zero() -> Self {
        WeylElement::zero()
    }
    fn one() -> Self {
        WeylElement::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        WeylElement::mul(self, other)
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_rational(r: Rational) -> Self {
        WeylElement::constant(C::from_rational(r))
    }
    fn scale(&self, r: &Rational) -> Self {
        self.scale_rational(r)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(*m, c.clone());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ParamPoly};

    type W = WeylElement<Rational>;

    /// Applies a Weyl element as a differential operator to a polynomial in
    /// `x` only, given as coefficient list.
    fn apply_in_x(e: &W, poly: &[Rational]) -> Vec<Rational> {
        let mut out = vec![int(0); poly.len() + 8];
        for (m, c) in e.terms() {
            assert_eq!(m.coord[1..], [0, 0]);
            assert_eq!(m.deriv[1..], [0, 0]);
            for (n, p) in poly.iter().enumerate() {
                let n = n as u32;
                if n < m.deriv[0] {
                    continue;
                }
                let k = crate::exact::falling(n, m.deriv[0]);
                let idx = (n - m.deriv[0] + m.coord[0]) as usize;
                out[idx] += c * p * k;
            }
        }
        while out.last().is_some_and(num_traits::Zero::is_zero) {
            out.pop();
        }
        out
    }

    #[test]
    fn canonical_commutation() {
        let e = W::dx().mul(&W::x());
        let expected = &W::x().mul(&W::dx()) + &W::one();
        assert_eq!(e, expected);
    }

    #[test]
    fn second_derivative_times_x_against_operator_oracle() {
        let lhs = W::dx().pow(2).mul(&W::x());
        let rhs = &W::x().mul(&W::dx().pow(2)) + &W::dx().scale_rational(&int(2));
        assert_eq!(lhs, rhs);
        // oracle: act on 1, x, x^2 as differential operators
        let x = W::x();
        let d2 = W::dx().pow(2);
        for poly in [vec![int(1)], vec![int(0), int(1)], vec![int(0), int(0), int(1)]] {
            let via_composition = apply_in_x(&d2, &apply_in_x(&x, &poly));
            assert_eq!(apply_in_x(&lhs, &poly), via_composition);
        }
    }

    #[test]
    fn commuting_factors() {
        let a = &W::x().mul(&W::dz()) - &W::dy().scale_rational(&int(2));
        let got = a.mul(&W::dz());
        let expected = &W::x().mul(&W::dz().pow(2)) - &W::dy().mul(&W::dz()).scale_rational(&int(2));
        assert_eq!(got, expected);
    }

    #[test]
    fn all_generator_commutators() {
        for i in POSITIONS {
            for j in POSITIONS {
                let c = W::derivative(i).commutator(&W::coordinate(j));
                if i == j {
                    assert_eq!(c, W::one());
                } else {
                    assert!(c.is_zero());
                }
                assert!(W::coordinate(i).commutator(&W::coordinate(j)).is_zero());
                assert!(W::derivative(i).commutator(&W::derivative(j)).is_zero());
            }
        }
    }

    #[test]
    fn parametric_coefficients_multiply() {
        let a = WeylElement::<ParamPoly>::x().scale(&ParamPoly::l1());
        let b = WeylElement::<ParamPoly>::dx();
        let ba = b.mul(&a);
        assert_eq!(ba.constant_term(), ParamPoly::l1());
    }

    #[test]
    fn small_binomials() {
        assert_eq!(binomial_u128(6, 3), 20);
        assert_eq!(binomial_u128(3, 5), 0);
        assert_eq!(falling_u128(4, 4), 24);
    }
}
