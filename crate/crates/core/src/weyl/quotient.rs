use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{falling_u128, WeylElement, WeylMonomial, POSITIONS};
use crate::exact::{Coeff, Rational};

/// Which generator of a position lies in the left ideal.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Kill {
    /// The coordinate is in the ideal; the derivative survives.
    Coordinate,
    /// The derivative is in the ideal; the coordinate survives.
    Derivative,
}

/// A left ideal generated by one generator per position.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct QuotientSignature {
    pub kills: [Kill; 3],
}

use Kill::{Coordinate as KC, Derivative as KD};

impl QuotientSignature {
    /// `(x, y, z)`, realization `C[dx, dy, dz]`.
    pub const E: Self = Self { kills: [KC, KC, KC] };
    /// `(dx, y, z)`, realization `C[x, dy, dz]`.
    pub const S1: Self = Self { kills: [KD, KC, KC] };
    /// `(x, dy, z)`, realization `C[dx, y, dz]`.
    pub const S2: Self = Self { kills: [KC, KD, KC] };
    /// `(x, dy, dz)`, realization `C[dx, y, z]`.
    pub const S1S2: Self = Self { kills: [KC, KD, KD] };
    /// `(dx, y, dz)`, realization `C[x, dy, z]`.
    pub const S2S1: Self = Self { kills: [KD, KC, KD] };
    /// `(dx, dy, dz)`, realization `C[x, y, z]`.
    pub const S1S2S1: Self = Self { kills: [KD, KD, KD] };

    pub const ALL: [Self; 6] = [Self::E, Self::S1, Self::S2, Self::S1S2, Self::S2S1, Self::S1S2S1];

    pub fn kill(&self, pos: usize) -> Kill {
        self.kills[pos]
    }

    /// Generators of the left ideal, one per position.
    pub fn ideal_generators<C: Coeff>(&self) -> [WeylElement<C>; 3] {
        POSITIONS.map(|i| match self.kills[i] {
            KC => WeylElement::coordinate(i),
            KD => WeylElement::derivative(i),
        })
    }

    /// The signature with every position flipped at the given mask.
    pub fn flipped(&self, mask: [bool; 3]) -> Self {
        let mut kills = self.kills;
        for i in POSITIONS {
            if mask[i] {
                kills[i] = match kills[i] {
                    KC => KD,
                    KD => KC,
                };
            }
        }
        Self { kills }
    }
}

impl fmt::Display for QuotientSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = POSITIONS
            .iter()
            .map(|&i| match self.kills[i] {
                KC => super::POSITION_NAMES[i].to_string(),
                KD => format!("d{}", super::POSITION_NAMES[i]),
            })
            .collect();
        write!(f, "({})", gens.join(", "))
    }
}

/// Exponents of the three surviving variables of a quotient.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct ModuleMonomial(pub [u32; 3]);

impl ModuleMonomial {
    pub const ONE: ModuleMonomial = ModuleMonomial([0; 3]);

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        ModuleMonomial([self.0[0] + other.0[0], self.0[1] + other.0[1], self.0[2] + other.0[2]])
    }
}

impl PartialOrd for ModuleMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Graded-lex order on surviving exponents.
impl Ord for ModuleMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.total(), self.0).cmp(&(other.total(), other.0))
    }
}

/// Weights used to measure the degree of a surviving monomial.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Grading {
    pub weights: [u32; 3],
}

impl Grading {
    pub const TOTAL: Grading = Grading { weights: [1, 1, 1] };

    /// Height grading of the untwisted-presentation realization for this
    /// signature: each surviving variable is weighted by the height of the
    /// positive root it lowers by. For `(dx, y, z)` this is
    /// `deg x = 1, deg dy = 2, deg dz = 1`.
    pub fn for_signature(sig: &QuotientSignature) -> Grading {
        let weights = match *sig {
            s if s == QuotientSignature::E => [1, 1, 2],
            s if s == QuotientSignature::S1 => [1, 2, 1],
            s if s == QuotientSignature::S2 => [2, 1, 1],
            s if s == QuotientSignature::S1S2 => [1, 2, 1],
            s if s == QuotientSignature::S2S1 => [2, 1, 1],
            _ => [1, 1, 2],
        };
        Grading { weights }
    }

    pub fn degree(&self, m: &ModuleMonomial) -> u32 {
        (0..3).map(|i| self.weights[i] * m.0[i]).sum()
    }

    /// All exponent triples of degree at most `bound`, in graded-lex order.
    pub fn monomials_up_to(&self, bound: u32) -> Vec<ModuleMonomial> {
        let mut out = Vec::new();
        let w = self.weights;
        for a in 0..=bound / w[0] {
            for b in 0..=(bound - a * w[0]) / w[1] {
                for c in 0..=(bound - a * w[0] - b * w[1]) / w[2] {
                    out.push(ModuleMonomial([a, b, c]));
                }
            }
        }
        out.sort();
        out
    }

    /// Exponent triples of degree exactly `d`.
    pub fn monomials_of_degree(&self, d: u32) -> Vec<ModuleMonomial> {
        self.monomials_up_to(d)
            .into_iter()
            .filter(|m| self.degree(m) == d)
            .collect()
    }
}

/// Degree of a surviving monomial in the grading attached to `sig`.
pub fn graded_degree(sig: &QuotientSignature, m: &ModuleMonomial) -> u32 {
    Grading::for_signature(sig).degree(m)
}

/// An element of the quotient `A / I`, written in the surviving variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModuleVector<C> {
    pub signature: QuotientSignature,
    terms: BTreeMap<ModuleMonomial, C>,
}

impl<C: Coeff> ModuleVector<C> {
    pub fn zero(signature: QuotientSignature) -> Self {
        Self {
            signature,
            terms: BTreeMap::new(),
        }
    }

    /// The class of `1`.
    pub fn one(signature: QuotientSignature) -> Self {
        Self::monomial(signature, [0, 0, 0], C::one())
    }

    pub fn monomial(signature: QuotientSignature, exps: [u32; 3], c: C) -> Self {
        let mut v = Self::zero(signature);
        v.add_term(ModuleMonomial(exps), c);
        v
    }

    /// The surviving variable at `pos` (a coordinate or a derivative,
    /// depending on the signature).
    pub fn variable(signature: QuotientSignature, pos: usize) -> Self {
        let mut e = [0; 3];
        e[pos] = 1;
        Self::monomial(signature, e, C::one())
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ModuleMonomial, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &ModuleMonomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
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

    pub fn add_term(&mut self, m: ModuleMonomial, c: C) {
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

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.signature, other.signature);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&C::one().neg_ref()))
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.signature);
        for (m, d) in &self.terms {
            out.add_term(*m, d.mul_ref(c));
        }
        out
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        let mut out = Self::zero(self.signature);
        for (m, d) in &self.terms {
            out.add_term(*m, d.scale(r));
        }
        out
    }

    /// Product in the commutative polynomial ring of surviving variables.
    pub fn poly_mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.signature);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.mul(b), ca.mul_ref(cb));
            }
        }
        out
    }

    pub fn poly_pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.signature);
        for _ in 0..n {
            acc = acc.poly_mul(self);
        }
        acc
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> ModuleVector<D> {
        let mut out = ModuleVector::zero(self.signature);
        for (m, c) in &self.terms {
            out.add_term(*m, f(c));
        }
        out
    }

    pub fn to_param(&self) -> ModuleVector<crate::exact::ParamPoly> {
        self.map_coeffs(|c| c.to_param())
    }

    /// The normal-ordered representative in the Weyl algebra.
    pub fn lift(&self) -> WeylElement<C> {
        let mut out = WeylElement::zero();
        for (m, c) in &self.terms {
            let mut w = WeylMonomial::ONE;
            for i in POSITIONS {
                match self.signature.kills[i] {
                    KC => w.deriv[i] = m.0[i],
                    KD => w.coord[i] = m.0[i],
                }
            }
            out.add_term(w, c.clone());
        }
        out
    }

    /// Maximal degree of a term under `grading`.
    pub fn degree(&self, grading: &Grading) -> u32 {
        self.terms.keys().map(|m| grading.degree(m)).max().unwrap_or(0)
    }

    /// Drops every term of degree above `bound`.
    pub fn truncate(&self, grading: &Grading, bound: u32) -> Self {
        let mut out = Self::zero(self.signature);
        for (m, c) in &self.terms {
            if grading.degree(m) <= bound {
                out.add_term(*m, c.clone());
            }
        }
        out
    }

    /// Largest monomial in graded-lex order and its coefficient.
    pub fn leading(&self) -> Option<(&ModuleMonomial, &C)> {
        self.terms.iter().next_back()
    }

    /// Splits into components keyed by `key(monomial)`.
    pub fn split_by<K: Ord>(&self, key: impl Fn(&ModuleMonomial) -> K) -> BTreeMap<K, Self> {
        let mut out: BTreeMap<K, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(key(m))
                .or_insert_with(|| Self::zero(self.signature))
                .add_term(*m, c.clone());
        }
        out
    }
}

impl ModuleVector<Rational> {
    /// Rescales so that the leading coefficient is 1.
    pub fn normalized(&self) -> Self {
        match self.leading() {
            Some((_, c)) => {
                let inv = num_traits::Inv::inv(c.clone());
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }
}

/// Action of `x^a d^b` at one position on the surviving power `n`; returns the
/// new exponent and the integer factor.
fn act_position(kill: Kill, a: u32, b: u32, n: u32) -> Option<(u32, i128)> {
    match kill {
        // survivor x^n: d^b x^n = (n)_b x^(n-b) modulo A.d
        KD => {
            if n < b {
                None
            } else {
                let k = falling_u128(n, b) as i128;
                Some((n - b + a, k))
            }
        }
        // survivor d^n: x acts as -d/d(d) modulo A.x
        KC => {
            let m = b + n;
            if m < a {
                None
            } else {
                let k = falling_u128(m, a) as i128;
                let sign = if a.is_multiple_of(2) { 1 } else { -1 };
                Some((m - a, sign * k))
            }
        }
    }
}

/// Left multiplication by `op` on the quotient, i.e. the class of
/// `op * lift(v)`.
pub fn act<C: Coeff>(op: &WeylElement<C>, v: &ModuleVector<C>) -> ModuleVector<C> {
    let sig = v.signature;
    let mut out = ModuleVector::zero(sig);
    for (w, cw) in op.terms() {
        'terms: for (m, cm) in v.terms() {
            let mut exps = [0u32; 3];
            let mut factor: i128 = 1;
            for i in POSITIONS {
                match act_position(sig.kills[i], w.coord[i], w.deriv[i], m.0[i]) {
                    Some((e, k)) => {
                        exps[i] = e;
                        factor *= k;
                    }
                    None => continue 'terms,
                }
            }
            if factor == 0 {
                continue;
            }
            let k = Rational::from_integer(BigInt::from(factor));
            out.add_term(ModuleMonomial(exps), cw.mul_ref(cm).scale(&k));
        }
    }
    out
}

/// The class of `e` in `A / I_sig`.
pub fn reduce<C: Coeff>(e: &WeylElement<C>, sig: QuotientSignature) -> ModuleVector<C> {
    act(e, &ModuleVector::one(sig))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ParamPoly};
    use crate::weyl::{parse_element, WeylElement};
    use proptest::prelude::*;

    type W = WeylElement<Rational>;

    /// Brute-force anti-normal ordering for one position killed by its
    /// coordinate: rewrite every adjacent `x d` as `d x - 1` until all `d`
    /// stand left of all `x`, then drop words ending in `x` (they lie in A.x).
    fn anti_normal_reduce_x(a: u32, b: u32) -> BTreeMap<u32, i64> {
        // true = x, false = d
        let word: Vec<bool> = std::iter::repeat_n(true, a as usize)
            .chain(std::iter::repeat_n(false, b as usize))
            .collect();
        let mut pending = vec![(word, 1i64)];
        let mut out: BTreeMap<u32, i64> = BTreeMap::new();
        while let Some((w, c)) = pending.pop() {
            match w.windows(2).position(|p| p[0] && !p[1]) {
                Some(i) => {
                    let mut swapped = w.clone();
                    swapped.swap(i, i + 1);
                    pending.push((swapped, c));
                    let mut contracted = w.clone();
                    contracted.drain(i..i + 2);
                    pending.push((contracted, -c));
                }
                None => {
                    if w.last() == Some(&true) {
                        continue;
                    }
                    *out.entry(w.len() as u32).or_default() += c;
                }
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    #[test]
    fn reduce_examples() {
        let e: W = parse_element("x*dx").unwrap();
        assert_eq!(reduce(&e, QuotientSignature::E), ModuleVector::one(QuotientSignature::E).scale(&int(-1)));
        assert!(reduce(&W::dx(), QuotientSignature::S1).is_zero());
        let e: W = parse_element("x^2*dx^2").unwrap();
        assert_eq!(reduce(&e, QuotientSignature::E), ModuleVector::one(QuotientSignature::E).scale(&int(2)));
    }

    #[test]
    fn closed_form_matches_anti_normal_rewriting() {
        for a in 0..5 {
            for b in 0..6 {
                let mut m = WeylMonomial::ONE;
                m.coord[0] = a;
                m.deriv[0] = b;
                let got = reduce(&W::term(m, int(1)), QuotientSignature::E);
                let oracle = anti_normal_reduce_x(a, b);
                let mut expected = ModuleVector::zero(QuotientSignature::E);
                for (d, c) in oracle {
                    expected.add_term(ModuleMonomial([d, 0, 0]), int(c));
                }
                assert_eq!(got, expected, "x^{a} dx^{b}");
            }
        }
    }

    #[test]
    fn graded_degrees() {
        let sig = QuotientSignature::S1;
        assert_eq!(graded_degree(&sig, &ModuleMonomial([1, 0, 1])), 2);
        assert_eq!(graded_degree(&sig, &ModuleMonomial([0, 1, 0])), 2);
        assert_eq!(graded_degree(&sig, &ModuleMonomial::ONE), 0);
        assert_eq!(graded_degree(&sig, &ModuleMonomial([2, 1, 1])), 5);
        let g = Grading::for_signature(&sig);
        assert_eq!(g.monomials_of_degree(2).len(), 4);
    }

    #[test]
    fn act_on_one_with_parametric_operator() {
        let v = ModuleVector::<ParamPoly>::one(QuotientSignature::E);
        let h1: WeylElement<ParamPoly> = parse_element("2*x*dx - y*dy + z*dz + l1 + 2").unwrap();
        assert_eq!(act(&h1, &v), v.scale(&ParamPoly::l1()));
        assert!(act(&WeylElement::zero(), &v).is_zero());
    }

    fn arb_weyl(max_deg: u32) -> impl Strategy<Value = W> {
        let mono = (prop::array::uniform3(0..=max_deg), prop::array::uniform3(0..=max_deg))
            .prop_filter("degree", move |(a, b)| a.iter().chain(b.iter()).sum::<u32>() <= max_deg)
            .prop_map(|(a, b)| WeylMonomial::new(a, b));
        prop::collection::vec((mono, -3i64..=3), 0..4).prop_map(|ts| {
            let mut e = W::zero();
            for (m, c) in ts {
                e.add_term(m, int(c));
            }
            e
        })
    }

    fn arb_sig() -> impl Strategy<Value = QuotientSignature> {
        (0usize..6).prop_map(|i| QuotientSignature::ALL[i])
    }

    proptest! {
        #[test]
        fn associativity(a in arb_weyl(3), b in arb_weyl(3), c in arb_weyl(3)) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn left_ideal_absorbs(a in arb_weyl(3), sig in arb_sig(), pos in 0usize..3) {
            let g = &sig.ideal_generators::<Rational>()[pos];
            prop_assert!(reduce(&a.mul(g), sig).is_zero());
        }

        #[test]
        fn act_factors_through_reduce(op in arb_weyl(3), e in arb_weyl(3), sig in arb_sig()) {
            prop_assert_eq!(act(&op, &reduce(&e, sig)), reduce(&op.mul(&e), sig));
        }

        #[test]
        fn act_is_a_module_action(a in arb_weyl(2), b in arb_weyl(2), e in arb_weyl(2), sig in arb_sig()) {
            let v = reduce(&e, sig);
            prop_assert_eq!(act(&a.mul(&b), &v), act(&a, &act(&b, &v)));
        }
    }
}
