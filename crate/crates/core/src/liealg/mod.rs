//! The Lie algebra sl(3): basis matrices, brackets, weights and the Weyl
//! group with its twisting automorphisms.

mod weyl_group;

pub use weyl_group::{ad_twist, ad_twist_by_conjugation, WeylGroupElem};

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exact::{Coeff, Rational, Ring};

/// Basis `f1 = E21`, `f2 = E32`, `f12 = E31`, `e1 = E12`, `e2 = E23`,
/// `e12 = E13`, `h1 = diag(1,-1,0)`, `h2 = diag(0,1,-1)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum LieBasis {
    F1,
    F2,
    F12,
    E1,
    E2,
    E12,
    H1,
    H2,
}

pub type Matrix3 = [[i64; 3]; 3];

impl LieBasis {
    /// Table order: lowering, raising, Cartan.
    pub const ALL: [LieBasis; 8] = [
        LieBasis::F1,
        LieBasis::F2,
        LieBasis::F12,
        LieBasis::E1,
        LieBasis::E2,
        LieBasis::E12,
        LieBasis::H1,
        LieBasis::H2,
    ];

    pub const RAISING: [LieBasis; 3] = [LieBasis::E1, LieBasis::E2, LieBasis::E12];

    pub fn name(self) -> &'static str {
        match self {
            LieBasis::F1 => "f1",
            LieBasis::F2 => "f2",
            LieBasis::F12 => "f12",
            LieBasis::E1 => "e1",
            LieBasis::E2 => "e2",
            LieBasis::E12 => "e12",
            LieBasis::H1 => "h1",
            LieBasis::H2 => "h2",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|b| b.name() == s)
    }

    pub fn matrix(self) -> Matrix3 {
        let mut m = [[0; 3]; 3];
        match self {
            LieBasis::F1 => m[1][0] = 1,
            LieBasis::F2 => m[2][1] = 1,
            LieBasis::F12 => m[2][0] = 1,
            LieBasis::E1 => m[0][1] = 1,
            LieBasis::E2 => m[1][2] = 1,
            LieBasis::E12 => m[0][2] = 1,
            LieBasis::H1 => {
                m[0][0] = 1;
                m[1][1] = -1;
            }
            LieBasis::H2 => {
                m[1][1] = 1;
                m[2][2] = -1;
            }
        }
        m
    }

    /// The weight of the basis vector under the adjoint action, in
    /// fundamental-weight coordinates (zero for the Cartan elements).
    pub fn root(self) -> [i64; 2] {
        match self {
            LieBasis::E1 => [2, -1],
            LieBasis::E2 => [-1, 2],
            LieBasis::E12 => [1, 1],
            LieBasis::F1 => [-2, 1],
            LieBasis::F2 => [1, -2],
            LieBasis::F12 => [-1, -1],
            LieBasis::H1 | LieBasis::H2 => [0, 0],
        }
    }
}

impl fmt::Display for LieBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn mat_mul(a: &Matrix3, b: &Matrix3) -> Matrix3 {
    let mut c = [[0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            c[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    c
}

/// Coordinates of a traceless matrix in the basis; `diag(a1, a2, a3)`
/// contributes `a1*h1 - a3*h2`.
pub fn decompose(m: &Matrix3) -> Vec<(LieBasis, i64)> {
    let trace: i64 = (0..3).map(|i| m[i][i]).sum();
    assert_eq!(trace, 0, "matrix is not traceless");
    let entries = [
        (LieBasis::F1, m[1][0]),
        (LieBasis::F2, m[2][1]),
        (LieBasis::F12, m[2][0]),
        (LieBasis::E1, m[0][1]),
        (LieBasis::E2, m[1][2]),
        (LieBasis::E12, m[0][2]),
        (LieBasis::H1, m[0][0]),
        (LieBasis::H2, -m[2][2]),
    ];
    entries.into_iter().filter(|(_, c)| *c != 0).collect()
}

fn basis_bracket(a: LieBasis, b: LieBasis) -> Vec<(LieBasis, i64)> {
    let (ma, mb) = (a.matrix(), b.matrix());
    let ab = mat_mul(&ma, &mb);
    let ba = mat_mul(&mb, &ma);
    let mut c = [[0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            c[i][j] = ab[i][j] - ba[i][j];
        }
    }
    decompose(&c)
}

/// Finite linear combination of basis elements over a ring. The ring may be
/// a coefficient ring or the coordinate polynomials used in the realization
/// formula.
#[derive(Clone, PartialEq, Debug)]
pub struct LieElement<R> {
    terms: BTreeMap<LieBasis, R>,
}

impl<R: Ring> LieElement<R> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(b: LieBasis) -> Self {
        Self::term(b, R::one())
    }

    pub fn term(b: LieBasis, c: R) -> Self {
        let mut e = Self::zero();
        e.add_term(b, c);
        e
    }

    pub fn from_ints(terms: &[(LieBasis, i64)]) -> Self {
        let mut e = Self::zero();
        for (b, c) in terms {
            e.add_term(*b, R::from_int(*c));
        }
        e
    }

    pub fn add_term(&mut self, b: LieBasis, c: R) {
        if c.is_zero() {
            return;
        }
        let remove = match self.terms.get_mut(&b) {
            Some(slot) => {
                slot.add_assign_ref(&c);
                slot.is_zero()
            }
            None => {
                self.terms.insert(b, c);
                false
            }
        };
        if remove {
            self.terms.remove(&b);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LieBasis, &R)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, b: LieBasis) -> R {
        self.terms.get(&b).cloned().unwrap_or_else(R::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(*b, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&R::from_int(-1)))
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = Self::zero();
        for (b, d) in &self.terms {
            out.add_term(*b, d.mul_ref(c));
        }
        out
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        let mut out = Self::zero();
        for (b, d) in &self.terms {
            out.add_term(*b, d.scale(r));
        }
        out
    }

    /// Bilinear extension of the matrix commutator.
    pub fn bracket(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let c = ca.mul_ref(cb);
                for (k, n) in basis_bracket(*a, *b) {
                    out.add_term(k, c.scale(&Rational::from_integer(n.into())));
                }
            }
        }
        out
    }

    /// Lowering part (`f1, f2, f12` coordinates).
    pub fn nbar_part(&self) -> Self {
        self.filter(|b| matches!(b, LieBasis::F1 | LieBasis::F2 | LieBasis::F12))
    }

    /// Borel part (everything except the lowering coordinates).
    pub fn borel_part(&self) -> Self {
        self.filter(|b| !matches!(b, LieBasis::F1 | LieBasis::F2 | LieBasis::F12))
    }

    fn filter(&self, keep: impl Fn(LieBasis) -> bool) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| keep(**b))
                .map(|(b, c)| (*b, c.clone()))
                .collect(),
        }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> LieElement<S> {
        let mut out = LieElement::zero();
        for (b, c) in &self.terms {
            out.add_term(*b, f(c));
        }
        out
    }
}

impl<C: Coeff> fmt::Display for LieElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { c.neg_ref() } else { c.clone() };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if abs == C::one() {
                write!(f, "{b}")?;
            } else if abs.is_atomic() {
                write!(f, "{abs}*{b}")?;
            } else {
                write!(f, "({abs})*{b}")?;
            }
        }
        Ok(())
    }
}

/// A weight `c1*w1 + c2*w2` in fundamental-weight coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Weight<C> {
    pub c: [C; 2],
}

impl<C: Coeff> Weight<C> {
    pub fn new(c1: C, c2: C) -> Self {
        Self { c: [c1, c2] }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        Self::new(C::from_int(a), C::from_int(b))
    }

    pub fn rho() -> Self {
        Self::from_ints(1, 1)
    }

    /// The formal weight `(l1, l2)`; only in the parametric ring.
    pub fn symbolic() -> Option<Self> {
        Some(Self::new(C::symbol(0)?, C::symbol(1)?))
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(self.c[0].add_ref(&o.c[0]), self.c[1].add_ref(&o.c[1]))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(self.c[0].sub_ref(&o.c[0]), self.c[1].sub_ref(&o.c[1]))
    }

    pub fn scale_int(&self, n: i64) -> Self {
        let r = Rational::from_integer(n.into());
        Self::new(self.c[0].scale(&r), self.c[1].scale(&r))
    }

    /// `self + sum n_i * root_i` for integer root coordinates.
    pub fn shift(&self, delta: [i64; 2]) -> Self {
        self.add(&Self::from_ints(delta[0], delta[1]))
    }

    /// Simple reflection `s_i(l) = l - l_i alpha_i`.
    pub fn reflect(&self, i: usize) -> Self {
        let [a, b] = &self.c;
        match i {
            1 => Self::new(a.neg_ref(), a.add_ref(b)),
            2 => Self::new(a.add_ref(b), b.neg_ref()),
            _ => panic!("simple reflection index must be 1 or 2"),
        }
    }

    pub fn to_param(&self) -> Weight<crate::exact::ParamPoly> {
        Weight::new(self.c[0].to_param(), self.c[1].to_param())
    }

    pub fn as_rational(&self) -> Option<Weight<Rational>> {
        Some(Weight::new(self.c[0].as_rational()?, self.c[1].as_rational()?))
    }

    /// Pairing with `a*h1 + b*h2`.
    pub fn eval_cartan(&self, a: &C, b: &C) -> C {
        self.c[0].mul_ref(a).add_ref(&self.c[1].mul_ref(b))
    }
}

impl<C: Coeff> fmt::Display for Weight<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.c[0], self.c[1])
    }
}

/// `w(l)` in the linear action.
pub fn standard_action<C: Coeff>(w: WeylGroupElem, l: &Weight<C>) -> Weight<C> {
    w.word().iter().rev().fold(l.clone(), |acc, &i| acc.reflect(i))
}

/// The dot action `w.l = w(l + rho) - rho`.
pub fn rho_affine<C: Coeff>(w: WeylGroupElem, l: &Weight<C>) -> Weight<C> {
    standard_action(w, &l.add(&Weight::rho())).sub(&Weight::rho())
}
