use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{decompose, mat_mul, LieBasis, LieElement, Matrix3};
use crate::exact::Ring;
use crate::Error;

/// Element of the Weyl group of sl(3). Products read left to right as
/// composition: `S1S2` is `s1 o s2`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum WeylGroupElem {
    E,
    S1,
    S2,
    S1S2,
    S2S1,
    S1S2S1,
}

impl WeylGroupElem {
    pub const ALL: [WeylGroupElem; 6] = [
        WeylGroupElem::E,
        WeylGroupElem::S1,
        WeylGroupElem::S2,
        WeylGroupElem::S1S2,
        WeylGroupElem::S2S1,
        WeylGroupElem::S1S2S1,
    ];

    /// A reduced word in the simple reflections `1`, `2`.
    pub fn word(self) -> &'static [usize] {
        match self {
            WeylGroupElem::E => &[],
            WeylGroupElem::S1 => &[1],
            WeylGroupElem::S2 => &[2],
            WeylGroupElem::S1S2 => &[1, 2],
            WeylGroupElem::S2S1 => &[2, 1],
            WeylGroupElem::S1S2S1 => &[1, 2, 1],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            WeylGroupElem::E => "e",
            WeylGroupElem::S1 => "s1",
            WeylGroupElem::S2 => "s2",
            WeylGroupElem::S1S2 => "s1s2",
            WeylGroupElem::S2S1 => "s2s1",
            WeylGroupElem::S1S2S1 => "s1s2s1",
        }
    }

    /// The permutation of `{0, 1, 2}` realizing the element; `s1 = (0 1)`,
    /// `s2 = (1 2)`.
    pub fn permutation(self) -> [usize; 3] {
        self.word().iter().fold([0, 1, 2], |acc, &i| {
            let s = simple_permutation(i);
            [acc[s[0]], acc[s[1]], acc[s[2]]]
        })
    }

    fn from_permutation(p: [usize; 3]) -> Self {
        Self::ALL
            .into_iter()
            .find(|w| w.permutation() == p)
            .expect("every permutation of three letters is a Weyl group element")
    }

    pub fn compose(self, other: Self) -> Self {
        let (u, v) = (self.permutation(), other.permutation());
        Self::from_permutation([u[v[0]], u[v[1]], u[v[2]]])
    }

    pub fn inverse(self) -> Self {
        let p = self.permutation();
        let mut q = [0; 3];
        for i in 0..3 {
            q[p[i]] = i;
        }
        Self::from_permutation(q)
    }

    pub fn length(self) -> usize {
        let p = self.permutation();
        (0..3)
            .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count()
    }

    /// The representative matrix, the product of the simple representatives
    /// along the reduced word.
    pub fn representative(self) -> Matrix3 {
        self.word().iter().fold(IDENTITY, |acc, &i| {
            let s = if i == 1 { S1_DOT } else { S2_DOT };
            mat_mul(&acc, &s)
        })
    }
}

const IDENTITY: Matrix3 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
const S1_DOT: Matrix3 = [[0, 1, 0], [-1, 0, 0], [0, 0, 1]];
const S2_DOT: Matrix3 = [[1, 0, 0], [0, 0, 1], [0, -1, 0]];

fn simple_permutation(i: usize) -> [usize; 3] {
    match i {
        1 => [1, 0, 2],
        2 => [0, 2, 1],
        _ => panic!("simple reflection index must be 1 or 2"),
    }
}

fn transpose(m: &Matrix3) -> Matrix3 {
    let mut t = [[0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            t[i][j] = m[j][i];
        }
    }
    t
}

impl fmt::Display for WeylGroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WeylGroupElem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s == "s2s1s2" {
            return Ok(WeylGroupElem::S1S2S1);
        }
        Self::ALL
            .into_iter()
            .find(|w| w.name() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// `Ad(w^-1) X = w^-1 X w` computed with the representative matrices. The
/// representatives are signed permutation matrices, so the inverse is the
/// transpose.
pub fn ad_twist_by_conjugation<R: Ring>(w: WeylGroupElem, x: &LieElement<R>) -> LieElement<R> {
    let dot = w.representative();
    let inv = transpose(&dot);
    let mut out = LieElement::zero();
    for (b, c) in x.terms() {
        let m = mat_mul(&mat_mul(&inv, &b.matrix()), &dot);
        for (k, n) in decompose(&m) {
            out.add_term(k, c.scale(&crate::exact::Rational::from_integer(n.into())));
        }
    }
    out
}

/// Printed twist tables for `s1`, `s1s2`, `s1s2s1`.
fn tabulated(w: WeylGroupElem, b: LieBasis) -> Option<&'static [(LieBasis, i64)]> {
    use LieBasis::*;
    let row: &'static [(LieBasis, i64)] = match (w, b) {
        (WeylGroupElem::S1, E1) => &[(F1, -1)],
        (WeylGroupElem::S1, E12) => &[(E2, 1)],
        (WeylGroupElem::S1, E2) => &[(E12, -1)],
        (WeylGroupElem::S1, F1) => &[(E1, -1)],
        (WeylGroupElem::S1, F12) => &[(F2, 1)],
        (WeylGroupElem::S1, F2) => &[(F12, -1)],
        (WeylGroupElem::S1, H1) => &[(H1, -1)],
        (WeylGroupElem::S1, H2) => &[(H1, 1), (H2, 1)],

        (WeylGroupElem::S1S2, E1) => &[(F12, -1)],
        (WeylGroupElem::S1S2, E12) => &[(F2, -1)],
        (WeylGroupElem::S1S2, E2) => &[(E1, 1)],
        (WeylGroupElem::S1S2, F1) => &[(E12, -1)],
        (WeylGroupElem::S1S2, F12) => &[(E2, -1)],
        (WeylGroupElem::S1S2, F2) => &[(F1, 1)],
        (WeylGroupElem::S1S2, H1) => &[(H1, -1), (H2, -1)],
        (WeylGroupElem::S1S2, H2) => &[(H1, 1)],

        (WeylGroupElem::S1S2S1, E1) => &[(F2, -1)],
        (WeylGroupElem::S1S2S1, E12) => &[(F12, 1)],
        (WeylGroupElem::S1S2S1, E2) => &[(F1, -1)],
        (WeylGroupElem::S1S2S1, F1) => &[(E2, -1)],
        (WeylGroupElem::S1S2S1, F12) => &[(E12, 1)],
        (WeylGroupElem::S1S2S1, F2) => &[(E1, -1)],
        (WeylGroupElem::S1S2S1, H1) => &[(H2, -1)],
        (WeylGroupElem::S1S2S1, H2) => &[(H1, -1)],
        _ => return None,
    };
    Some(row)
}

/// `Ad(w^-1)` on a Lie element: the printed table where one exists, matrix
/// conjugation otherwise.
pub fn ad_twist<R: Ring>(w: WeylGroupElem, x: &LieElement<R>) -> LieElement<R> {
    if !matches!(w, WeylGroupElem::S1 | WeylGroupElem::S1S2 | WeylGroupElem::S1S2S1) {
        return ad_twist_by_conjugation(w, x);
    }
    let mut out = LieElement::zero();
    for (b, c) in x.terms() {
        for (k, n) in tabulated(w, *b).expect("table covers every basis element") {
            out.add_term(*k, c.scale(&crate::exact::Rational::from_integer((*n).into())));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, Rational};
    use crate::liealg::{standard_action, Weight};

    type L = LieElement<Rational>;
    use WeylGroupElem::*;

    #[test]
    fn group_law() {
        assert_eq!(S1.compose(S1), E);
        assert_eq!(S1.compose(S2).compose(S1), S2.compose(S1).compose(S2));
        assert_eq!(S1.compose(S2).compose(S1), S1S2S1);
        assert_eq!(S1S2.inverse(), S2S1);
        assert_eq!(S1.compose(S2), S1S2);
        for u in WeylGroupElem::ALL {
            assert_eq!(u.compose(u.inverse()), E);
            for v in WeylGroupElem::ALL {
                for w in WeylGroupElem::ALL {
                    assert_eq!(u.compose(v).compose(w), u.compose(v.compose(w)));
                }
            }
        }
        let lengths: Vec<usize> = WeylGroupElem::ALL.iter().map(|w| w.length()).collect();
        assert_eq!(lengths, [0, 1, 1, 2, 2, 3]);
    }

    #[test]
    fn length_counts_inverted_positive_roots() {
        let positive = [[2i64, -1], [-1, 2], [1, 1]];
        for w in WeylGroupElem::ALL {
            let inverted = positive
                .iter()
                .filter(|r| {
                    let img = standard_action(w.inverse(), &Weight::<Rational>::from_ints(r[0], r[1]));
                    // simple-root coordinates are (2p+q)/3, (p+2q)/3
                    let (p, q) = (img.c[0].clone(), img.c[1].clone());
                    let a = &p * int(2) + &q;
                    let b = p + q * int(2);
                    a <= int(0) && b <= int(0)
                })
                .count();
            assert_eq!(inverted, w.length(), "{w}");
        }
    }

    #[test]
    fn representatives_match_printed_matrices() {
        assert_eq!(S1S2.representative(), [[0, 0, 1], [-1, 0, 0], [0, -1, 0]]);
        assert_eq!(S2S1.representative(), [[0, 1, 0], [0, 0, 1], [1, 0, 0]]);
        assert_eq!(S1S2S1.representative(), [[0, 0, 1], [0, -1, 0], [1, 0, 0]]);
    }

    #[test]
    fn printed_twists_agree_with_conjugation() {
        for w in [S1, S1S2, S1S2S1] {
            for b in LieBasis::ALL {
                let x = L::basis(b);
                assert_eq!(ad_twist(w, &x), ad_twist_by_conjugation(w, &x), "{w} {b}");
            }
        }
    }

    #[test]
    fn twists_are_automorphisms() {
        for w in WeylGroupElem::ALL {
            for a in LieBasis::ALL {
                for b in LieBasis::ALL {
                    let (x, y) = (L::basis(a), L::basis(b));
                    assert_eq!(
                        ad_twist(w, &x.bracket(&y)),
                        ad_twist(w, &x).bracket(&ad_twist(w, &y))
                    );
                }
            }
        }
    }

    #[test]
    fn twist_examples() {
        let h2 = L::basis(LieBasis::H2);
        assert_eq!(ad_twist(S1, &h2), L::basis(LieBasis::H1).add(&h2));
        assert_eq!(ad_twist(E, &h2), h2);
        // E12 * s2-dot picks row 2 of s2-dot = (0, 0, 1), giving E13;
        // the transpose on the left fixes row 1, so the result is E13 = e12
        assert_eq!(ad_twist(S2, &L::basis(LieBasis::E1)), L::basis(LieBasis::E12));
    }
}
