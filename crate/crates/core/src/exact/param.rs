use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{Coeff, Rational, Ring};

/// Sparse polynomial in the formal weight parameters `l1`, `l2` with rational
/// coefficients. Keys are exponent pairs `(d1, d2)`; no stored coefficient is
/// zero.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct ParamPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term((0, 0), c);
        p
    }

    pub fn l1() -> Self {
        Self::monomial((1, 0), <Rational as One>::one())
    }

    pub fn l2() -> Self {
        Self::monomial((0, 1), <Rational as One>::one())
    }

    pub fn monomial(exps: (u32, u32), c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(exps, c);
        p
    }

    /// Builds `a*l1 + b*l2 + c`.
    pub fn linear(a: Rational, b: Rational, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term((1, 0), a);
        p.add_term((0, 1), b);
        p.add_term((0, 0), c);
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&k| k == (0, 0))
    }

    pub fn constant_term(&self) -> Rational {
        self.terms.get(&(0, 0)).cloned().unwrap_or_else(<Rational as Zero>::zero)
    }

    fn add_term(&mut self, exps: (u32, u32), c: Rational) {
        if Zero::is_zero(&c) {
            return;
        }
        let slot = self.terms.entry(exps).or_insert_with(<Rational as Zero>::zero);
        *slot += c;
        if Zero::is_zero(slot) {
            self.terms.remove(&exps);
        }
    }

    /// Exact evaluation at `l1 = v1`, `l2 = v2`.
    pub fn specialize(&self, v1: &Rational, v2: &Rational) -> Rational {
        self.eval(v1, v2)
    }

    /// Evaluates at `(l1, l2) = (a, b)` in any ring containing the rationals.
    pub fn eval<R: Ring>(&self, a: &R, b: &R) -> R {
        let max1 = self.terms.keys().map(|k| k.0).max().unwrap_or(0) as usize;
        let max2 = self.terms.keys().map(|k| k.1).max().unwrap_or(0) as usize;
        let pa = powers(a, max1);
        let pb = powers(b, max2);
        let mut acc = R::zero();
        for (&(d1, d2), c) in &self.terms {
            let t = pa[d1 as usize].mul_ref(&pb[d2 as usize]).scale(c);
            acc.add_assign_ref(&t);
        }
        acc
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|&(a, b)| a + b).max().unwrap_or(0)
    }

    /// Terms in descending graded-lex order of `(d1, d2)`.
    fn ordered(&self) -> Vec<(&(u32, u32), &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| {
            let ka = (a.0 .0 + a.0 .1, a.0 .0);
            let kb = (b.0 .0 + b.0 .1, b.0 .0);
            kb.cmp(&ka)
        });
        v
    }

    fn leading_negative(&self) -> bool {
        self.ordered().first().is_some_and(|(_, c)| Signed::is_negative(*c))
    }
}

fn powers<R: Ring>(a: &R, n: usize) -> Vec<R> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(R::one());
    for i in 0..n {
        let next = out[i].mul_ref(a);
        out.push(next);
    }
    out
}

impl From<Rational> for ParamPoly {
    fn from(r: Rational) -> Self {
        Self::constant(r)
    }
}

impl<'a> Add<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, -c);
        }
        out
    }
}

impl<'a> Mul<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (&(a1, a2), c) in &self.terms {
            for (&(b1, b2), d) in &rhs.terms {
                out.add_term((a1 + b1, a2 + b2), c * d);
            }
        }
        out
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<ParamPoly> for ParamPoly {
            type Output = ParamPoly;
            fn $m(self, rhs: ParamPoly) -> ParamPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        -&self
    }
}

impl Ring for ParamPoly {
    fn zero() -> Self {
        ParamPoly::zero()
    }
    fn one() -> Self {
        ParamPoly::constant(<Rational as One>::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
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
        ParamPoly::constant(r)
    }
    fn scale(&self, r: &Rational) -> Self {
        if Zero::is_zero(r) {
            return ParamPoly::zero();
        }
        ParamPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, c * r)).collect(),
        }
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn add_assign_ref(&mut self, other: &Self) {
        for (&k, c) in &other.terms {
            self.add_term(k, c.clone());
        }
    }
}

impl Coeff for ParamPoly {
    fn from_param(p: &ParamPoly, a: &Self, b: &Self) -> Self {
        p.eval(a, b)
    }
    fn symbol(index: usize) -> Option<Self> {
        match index {
            0 => Some(ParamPoly::l1()),
            1 => Some(ParamPoly::l2()),
            _ => None,
        }
    }
    fn as_rational(&self) -> Option<Rational> {
        self.is_constant().then(|| self.constant_term())
    }
    fn to_param(&self) -> ParamPoly {
        self.clone()
    }
    fn is_negative(&self) -> bool {
        self.leading_negative()
    }
    fn is_atomic(&self) -> bool {
        self.terms.len() <= 1
    }
    fn ring_name() -> &'static str {
        "parametric"
    }
}

fn fmt_param_monomial(d1: u32, d2: u32) -> String {
    let mut parts = Vec::new();
    for (name, d) in [("l1", d1), ("l2", d2)] {
        match d {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{d}")),
        }
    }
    parts.join("*")
}

impl fmt::Display for ParamPoly {
    /// Graded-lex order, highest degree first: `l1^2 - 1/2*l1*l2 + l2 + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.ordered();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&(d1, d2), c)) in terms.into_iter().enumerate() {
            let neg = Signed::is_negative(c);
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mono = fmt_param_monomial(d1, d2);
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn additive_identity_and_merge() {
        let l1 = ParamPoly::l1();
        assert_eq!(&l1 + &ParamPoly::zero(), l1);
        let a = &ParamPoly::l1() + &ParamPoly::constant(int(1));
        let b = &ParamPoly::l2() + &ParamPoly::constant(int(1));
        assert_eq!((&a + &b).to_string(), "l1 + l2 + 2");
    }

    #[test]
    fn products() {
        assert_eq!((ParamPoly::l1() * ParamPoly::l2()).to_string(), "l1*l2");
        let d = ParamPoly::l1() - ParamPoly::l2();
        assert!((&d * &ParamPoly::zero()).is_zero());
        let sq = &d * &d;
        assert_eq!(sq.to_string(), "l1^2 - 2*l1*l2 + l2^2");
    }

    #[test]
    fn specialization() {
        let p = &ParamPoly::l1() + &ParamPoly::constant(int(2));
        assert_eq!(p.specialize(&int(1), &int(1)), int(3));
        let q = &(&ParamPoly::l1() * &ParamPoly::l2()) - &ParamPoly::l2();
        assert_eq!(q.specialize(&int(0), &int(5)), int(-5));
        let h = (ParamPoly::l1() - ParamPoly::l2()).scale(&rat(1, 2));
        assert_eq!(h.specialize(&int(3), &int(1)), int(1));
    }

    #[test]
    fn rendering_signs() {
        let p = ParamPoly::linear(int(-1), rat(1, 2), int(-3));
        assert_eq!(p.to_string(), "-l1 + 1/2*l2 - 3");
        assert!(Coeff::is_negative(&p));
        assert_eq!(ParamPoly::zero().to_string(), "0");
    }
}
