//! Exact coefficient arithmetic.
//!
//! Two coefficient rings are used throughout the crate: [`Rational`] for
//! concrete weights and [`ParamPoly`] for tables that keep the highest-weight
//! parameters `l1`, `l2` symbolic. Algebraic types are generic over
//! [`Coeff`], so a single computation never mixes the two; the only bridge
//! is specialization ([`ParamPoly::specialize`], [`Coeff::from_param`]).

mod param;
mod scalar;

pub use param::ParamPoly;
pub use scalar::{scalar_add, scalar_mul, specialize, Scalar};

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, always kept in lowest terms.
pub type Rational = num_rational::BigRational;

/// Commutative-ring operations shared by coefficients and by the coordinate
/// polynomials used while expanding the realization formula.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn from_rational(r: Rational) -> Self;
    fn scale(&self, r: &Rational) -> Self;

    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self = self.add_ref(other);
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }
}

/// A coefficient ring: rationals, or polynomials in the formal weight
/// parameters.
pub trait Coeff: Ring + fmt::Display {
    /// Evaluates a parameter polynomial at `(l1, l2) = (a, b)` inside this ring.
    fn from_param(p: &ParamPoly, a: &Self, b: &Self) -> Self;

    /// The symbol `l1` (index 0) or `l2` (index 1), when the ring has it.
    fn symbol(index: usize) -> Option<Self>;

    /// The value as a rational number, when it is constant.
    fn as_rational(&self) -> Option<Rational>;

    fn to_param(&self) -> ParamPoly;

    /// True when the leading coefficient is negative; drives sign extraction
    /// in the text renderer.
    fn is_negative(&self) -> bool;

    /// True when the coefficient prints without surrounding parentheses in a
    /// product.
    fn is_atomic(&self) -> bool;

    fn ring_name() -> &'static str;
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
}

impl Coeff for Rational {
    fn from_param(p: &ParamPoly, a: &Self, b: &Self) -> Self {
        p.specialize(a, b)
    }
    fn symbol(_index: usize) -> Option<Self> {
        None
    }
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn to_param(&self) -> ParamPoly {
        ParamPoly::constant(self.clone())
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn is_atomic(&self) -> bool {
        true
    }
    fn ring_name() -> &'static str {
        "rational"
    }
}

/// Shorthand for the rational `n / d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Falling factorial `n (n-1) ... (n-k+1)` of a nonnegative integer.
pub fn falling(n: u32, k: u32) -> Rational {
    if k > n {
        return <Rational as Zero>::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
    }
    Rational::from_integer(acc)
}

/// Binomial coefficient of nonnegative integers.
pub fn binomial(n: u32, k: u32) -> Rational {
    if k > n {
        return <Rational as Zero>::zero();
    }
    falling(n, k) / falling(k, k)
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if Zero::is_zero(&den) {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Returns the rational as a nonnegative integer, if it is one.
pub fn as_natural(r: &Rational) -> Option<u32> {
    if !r.is_integer() || Signed::is_negative(r) {
        return None;
    }
    u32::try_from(r.to_integer()).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_sum_reduces() {
        assert_eq!(rat(1, 2) + rat(1, 3), rat(5, 6));
        assert_eq!(rat(1, 2) * rat(2, 3), rat(1, 3));
        assert_eq!(rat(2, 4).to_string(), "1/2");
        assert_eq!(int(3).to_string(), "3");
    }

    #[test]
    fn combinatorics() {
        assert_eq!(falling(5, 2), int(20));
        assert_eq!(falling(2, 3), int(0));
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(0, 0), int(1));
    }

    #[test]
    fn parse_rationals() {
        assert_eq!(parse_rational("-3/6"), Some(rat(-1, 2)));
        assert_eq!(parse_rational(" 7 "), Some(int(7)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("l1"), None);
        assert_eq!(as_natural(&int(4)), Some(4));
        assert_eq!(as_natural(&rat(1, 2)), None);
        assert_eq!(as_natural(&int(-1)), None);
    }
}
