//! Partial Fourier transform of the Weyl algebra.
//!
//! On each transformed position `x -> -d_xi`, `d_x -> xi`, and the other
//! positions are left alone. The map is an algebra isomorphism, so it carries
//! a realization on `A_3 / I` to one on `A_3 / F(I)`; choosing the
//! transformed positions to be the killed coordinates turns every twisted
//! quotient into a polynomial realization.

use std::collections::BTreeMap;

use crate::exact::{Coeff, ParamPoly};
use crate::liealg::{LieBasis, Weight, WeylGroupElem};
use crate::realize::{parse_printed, pi_table, RealizationTable};
use crate::report::{CheckRecord, Report};
use crate::weyl::{Kill, Presentation, QuotientSignature, WeylElement, WeylMonomial, POSITIONS};
use crate::Error;

/// A Fourier transform on a chosen set of positions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FourierMap {
    pub mask: [bool; 3],
}

impl FourierMap {
    /// Transforms the killed-coordinate positions of `sig`.
    pub fn for_signature(sig: &QuotientSignature) -> Self {
        Self {
            mask: POSITIONS.map(|i| sig.kill(i) == Kill::Coordinate),
        }
    }

    pub fn apply<C: Coeff>(&self, e: &WeylElement<C>) -> WeylElement<C> {
        let mut out = WeylElement::zero();
        for (m, c) in e.terms() {
            let mut t = WeylElement::constant(c.clone());
            for i in POSITIONS {
                let (a, b) = (m.coord[i], m.deriv[i]);
                let factor = if self.mask[i] {
                    let minus_d = -&WeylElement::derivative(i);
                    minus_d.pow(a).mul(&WeylElement::coordinate(i).pow(b))
                } else {
                    let mut coord = [0; 3];
                    let mut deriv = [0; 3];
                    coord[i] = a;
                    deriv[i] = b;
                    WeylElement::term(WeylMonomial::new(coord, deriv), C::one())
                };
                t = t.mul(&factor);
            }
            out = &out + &t;
        }
        out
    }

    pub fn signature(&self, sig: &QuotientSignature) -> QuotientSignature {
        sig.flipped(self.mask)
    }

    pub fn presentation(&self) -> Presentation {
        Presentation { dual: self.mask }
    }
}

/// `F(e)` with the transform chosen from `sig`.
pub fn fourier<C: Coeff>(e: &WeylElement<C>, sig: &QuotientSignature) -> WeylElement<C> {
    FourierMap::for_signature(sig).apply(e)
}

/// The transformed table `F o pi^w_l`, acting on polynomials.
pub fn hat_pi_table<C: Coeff>(w: WeylGroupElem, lambda: &Weight<C>) -> Result<RealizationTable<C>, Error> {
    let t = pi_table(w, lambda)?;
    Ok(transform_table(&t))
}

pub fn transform_table<C: Coeff>(t: &RealizationTable<C>) -> RealizationTable<C> {
    let f = FourierMap::for_signature(&t.signature);
    RealizationTable {
        w: t.w,
        lambda: t.lambda.clone(),
        signature: f.signature(&t.signature),
        presentation: f.presentation(),
        ops: t.ops.iter().map(|(b, e)| (*b, f.apply(e))).collect(),
    }
}

/// The printed transformed table, where one exists.
pub fn printed_hat_table<C: Coeff>(w: WeylGroupElem, lambda: &Weight<C>) -> Option<RealizationTable<C>> {
    let rows = crate::realize::printed::hat_table(w)?;
    let sig = crate::realize::signature_of(w);
    let f = FourierMap::for_signature(&sig);
    Some(RealizationTable {
        w,
        lambda: lambda.clone(),
        signature: f.signature(&sig),
        presentation: f.presentation(),
        ops: parse_printed(rows, lambda),
    })
}

/// Compares the printed transformed table for `w` with `F o pi^w` at
/// symbolic weight; one record per operator.
pub fn hat_table_fidelity(w: WeylGroupElem) -> Result<Report, Error> {
    let l = Weight::<ParamPoly>::symbolic().expect("parametric ring has symbols");
    let derived = hat_pi_table(w, &l)?;
    let Some(printed) = printed_hat_table(w, &l) else {
        return Ok(Report::new());
    };
    let p = derived.presentation;
    let ops: BTreeMap<_, _> = LieBasis::ALL
        .into_iter()
        .map(|b| (b, (printed.op(b).render(&p), derived.op(b).render(&p))))
        .collect();
    Ok(ops
        .into_iter()
        .map(|(b, (e, g))| CheckRecord::compare("transformed table fidelity", format!("hat pi^{w}({b})"), e, g))
        .collect())
}
