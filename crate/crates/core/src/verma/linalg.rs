//! Exact sparse row reduction over the rationals. Pivots are the largest
//! keys, so with graded-lex monomial keys a row's pivot is its leading term.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::exact::Rational;
use crate::weyl::{ModuleMonomial, ModuleVector, QuotientSignature};

pub type Sparse<K> = BTreeMap<K, Rational>;

pub fn axpy<K: Ord + Clone>(y: &mut Sparse<K>, a: &Rational, x: &Sparse<K>) {
    for (k, v) in x {
        let entry = y.entry(k.clone()).or_insert_with(Rational::zero);
        *entry += a * v;
        if entry.is_zero() {
            y.remove(k);
        }
    }
}

fn scale<K: Ord + Clone>(x: &mut Sparse<K>, a: &Rational) {
    for v in x.values_mut() {
        *v *= a;
    }
}

pub fn from_vector(v: &ModuleVector<Rational>) -> Sparse<ModuleMonomial> {
    v.terms().map(|(m, c)| (*m, c.clone())).collect()
}

pub fn to_vector(sig: QuotientSignature, s: &Sparse<ModuleMonomial>) -> ModuleVector<Rational> {
    let mut v = ModuleVector::zero(sig);
    for (m, c) in s {
        v.add_term(*m, c.clone());
    }
    v
}

/// A reduced row-echelon basis, each row scaled to leading coefficient 1.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord> {
    rows: BTreeMap<K, Sparse<K>>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Self { rows: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// The remainder of `v` after elimination against the rows.
    pub fn reduce(&self, mut v: Sparse<K>) -> Sparse<K> {
        loop {
            let hit = v
                .iter()
                .rev()
                .find(|(k, _)| self.rows.contains_key(*k))
                .map(|(k, c)| (k.clone(), c.clone()));
            let Some((k, c)) = hit else { return v };
            axpy(&mut v, &-c, &self.rows[&k]);
        }
    }

    pub fn contains(&self, v: &Sparse<K>) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: Sparse<K>) -> bool {
        let mut r = self.reduce(v);
        let Some((pivot, lead)) = r.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        scale(&mut r, &(Rational::one() / lead));
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(&pivot).cloned() {
                axpy(row, &-c, &r);
            }
        }
        self.rows.insert(pivot, r);
        true
    }

    /// Rows in decreasing pivot order.
    pub fn rows(&self) -> impl Iterator<Item = &Sparse<K>> {
        self.rows.values().rev()
    }
}

/// Kernel of the linear map sending the `j`th source key to `images[j]`,
/// as a reduced row-echelon basis.
pub fn kernel<K: Ord + Clone, L: Ord + Clone>(images: Vec<(K, Sparse<L>)>) -> Echelon<K> {
    // rows are (image, combination) pairs kept in echelon form on the image
    let mut rows: BTreeMap<L, (Sparse<L>, Sparse<K>)> = BTreeMap::new();
    let mut ker = Echelon::new();
    for (key, mut img) in images {
        let mut comb: Sparse<K> = BTreeMap::from([(key, Rational::one())]);
        loop {
            let hit = img
                .iter()
                .rev()
                .find(|(k, _)| rows.contains_key(*k))
                .map(|(k, c)| (k.clone(), c.clone()));
            let Some((k, c)) = hit else { break };
            let (ri, rc) = &rows[&k];
            axpy(&mut img, &-c.clone(), ri);
            axpy(&mut comb, &-c, rc);
        }
        match img.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) {
            None => {
                ker.insert(comb);
            }
            Some((pivot, lead)) => {
                let inv = Rational::one() / lead;
                scale(&mut img, &inv);
                scale(&mut comb, &inv);
                rows.insert(pivot, (img, comb));
            }
        }
    }
    ker
}
