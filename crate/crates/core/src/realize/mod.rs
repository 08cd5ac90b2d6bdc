//! Realization tables `pi^w_l(X)` for the six Weyl group elements.
//!
//! Every table is derived from the embedding formula
//! `pi_mu(X) = -sum_a [T(Y_nbar)]_a d_a + mu'(Y_b)` with
//! `Y = exp(-ad u) X`, `u = x f1 + y f2 + z f12`, `T = t e^t / (e^t - 1)`
//! applied as `1 + t/2 + t^2/12`, and `mu'` the pairing with `mu + rho`.
//! Twisted tables use `pi^w_l = pi_{w^-1(l + rho)} o Ad(w^-1)`.

pub(crate) mod printed;

use std::collections::BTreeMap;

use crate::exact::{Coeff, ParamPoly, Rational};
use crate::liealg::{ad_twist, standard_action, LieBasis, LieElement, Weight, WeylGroupElem};
use crate::report::{CheckRecord, Report};
use crate::weyl::{act, parse_element, Grading, ModuleVector, Presentation, QuotientSignature, WeylElement};
use crate::Error;

/// The eight operators of a realization together with the data that
/// determines them.
#[derive(Clone, PartialEq, Debug)]
pub struct RealizationTable<C> {
    pub w: WeylGroupElem,
    pub lambda: Weight<C>,
    pub signature: QuotientSignature,
    pub presentation: Presentation,
    pub ops: BTreeMap<LieBasis, WeylElement<C>>,
}

impl<C: Coeff> RealizationTable<C> {
    pub fn op(&self, b: LieBasis) -> &WeylElement<C> {
        &self.ops[&b]
    }

    /// Image of a Lie element.
    pub fn image(&self, x: &LieElement<C>) -> WeylElement<C> {
        let mut out = WeylElement::zero();
        for (b, c) in x.terms() {
            out = &out + &self.op(*b).scale(c);
        }
        out
    }

    /// Applies `pi(b1) pi(b2) ... pi(bk)` to `v`, rightmost factor first.
    pub fn apply_word(&self, word: &[LieBasis], v: &ModuleVector<C>) -> ModuleVector<C> {
        word.iter().rev().fold(v.clone(), |acc, b| act(self.op(*b), &acc))
    }

    pub fn render(&self) -> Vec<(LieBasis, String)> {
        self.ops
            .iter()
            .map(|(b, e)| (*b, e.render(&self.presentation)))
            .collect()
    }

    pub fn grading(&self) -> Grading {
        Grading::for_signature(&self.signature)
    }
}

/// Signature of the realization of `M^w`.
pub fn signature_of(w: WeylGroupElem) -> QuotientSignature {
    match w {
        WeylGroupElem::E => QuotientSignature::E,
        WeylGroupElem::S1 => QuotientSignature::S1,
        WeylGroupElem::S2 => QuotientSignature::S2,
        WeylGroupElem::S1S2 => QuotientSignature::S1S2,
        WeylGroupElem::S2S1 => QuotientSignature::S2S1,
        WeylGroupElem::S1S2S1 => QuotientSignature::S1S2S1,
    }
}

fn nbar_position(b: LieBasis) -> Option<usize> {
    match b {
        LieBasis::F1 => Some(0),
        LieBasis::F2 => Some(1),
        LieBasis::F12 => Some(2),
        _ => None,
    }
}

/// The embedding `pi_mu` on an arbitrary Lie element; the realized highest
/// weight is `mu - rho`.
pub fn pi_generic_element<C: Coeff>(mu: &Weight<C>, x: &LieElement<C>) -> WeylElement<C> {
    type P<C> = WeylElement<C>;
    let lift: LieElement<P<C>> = x.map(|c| P::constant(c.clone()));
    let u: LieElement<P<C>> = LieElement::term(LieBasis::F1, P::x())
        .add(&LieElement::term(LieBasis::F2, P::y()))
        .add(&LieElement::term(LieBasis::F12, P::z()));

    // exp(-ad u) X; ad u is nilpotent so the series terminates
    let mut y = lift.clone();
    let mut term = lift;
    let mut k: i64 = 1;
    loop {
        term = u.bracket(&term).scale_rational(&Rational::new((-1).into(), k.into()));
        if term.is_zero() {
            break;
        }
        y = y.add(&term);
        k += 1;
    }

    let yn = y.nbar_part();
    let ad1 = u.bracket(&yn);
    let ad2 = u.bracket(&ad1);
    let t = yn
        .add(&ad1.scale_rational(&Rational::new(1.into(), 2.into())))
        .add(&ad2.scale_rational(&Rational::new(1.into(), 12.into())));

    let mut out = P::zero();
    for (b, coeff) in t.terms() {
        let pos = nbar_position(*b).expect("T preserves the lowering subalgebra");
        out = &out - &coeff.mul(&P::derivative(pos));
    }
    let shifted = mu.add(&Weight::rho());
    let yb = y.borel_part();
    out = &out + &yb.coefficient(LieBasis::H1).scale(&shifted.c[0]);
    out = &out + &yb.coefficient(LieBasis::H2).scale(&shifted.c[1]);
    out
}

/// `pi_mu(X)` on a basis element.
pub fn pi_generic<C: Coeff>(mu: &Weight<C>, x: LieBasis) -> WeylElement<C> {
    pi_generic_element(mu, &LieElement::basis(x))
}

/// The table obtained from the composition formula alone.
pub fn derived_table<C: Coeff>(w: WeylGroupElem, lambda: &Weight<C>) -> RealizationTable<C> {
    let mu = standard_action(w.inverse(), &lambda.add(&Weight::rho()));
    let ops = LieBasis::ALL
        .into_iter()
        .map(|b| (b, pi_generic_element(&mu, &ad_twist(w, &LieElement::basis(b)))))
        .collect();
    RealizationTable {
        w,
        lambda: lambda.clone(),
        signature: signature_of(w),
        presentation: Presentation::STANDARD,
        ops,
    }
}

/// Evaluates parametric coefficients at the given weight.
pub fn specialize_element<C: Coeff>(e: &WeylElement<ParamPoly>, lambda: &Weight<C>) -> WeylElement<C> {
    e.map_coeffs(|p| C::from_param(p, &lambda.c[0], &lambda.c[1]))
}

pub(crate) fn parse_printed<C: Coeff>(
    rows: [&'static str; 8],
    lambda: &Weight<C>,
) -> BTreeMap<LieBasis, WeylElement<C>> {
    LieBasis::ALL
        .into_iter()
        .zip(rows)
        .map(|(b, s)| {
            let e: WeylElement<ParamPoly> = parse_element(s).expect("printed tables parse");
            (b, specialize_element(&e, lambda))
        })
        .collect()
}

/// The printed table for `w`, where a reference list exists.
pub fn printed_table<C: Coeff>(w: WeylGroupElem, lambda: &Weight<C>) -> Option<RealizationTable<C>> {
    let rows = printed::table(w)?;
    Some(RealizationTable {
        w,
        lambda: lambda.clone(),
        signature: signature_of(w),
        presentation: Presentation::STANDARD,
        ops: parse_printed(rows, lambda),
    })
}

pub(crate) fn first_mismatch<C: Coeff>(
    name: &str,
    expected: &RealizationTable<C>,
    derived: &RealizationTable<C>,
) -> Result<(), Error> {
    for b in LieBasis::ALL {
        if expected.op(b) != derived.op(b) {
            return Err(Error::TableMismatch {
                table: name.to_string(),
                element: b.to_string(),
                expected: expected.op(b).render(&expected.presentation),
                derived: derived.op(b).render(&expected.presentation),
            });
        }
    }
    Ok(())
}

/// `pi^w_l`: the printed table when one exists (after checking it against
/// the derivation), the derived table otherwise.
pub fn pi_table<C: Coeff>(w: WeylGroupElem, lambda: &Weight<C>) -> Result<RealizationTable<C>, Error> {
    let derived = derived_table(w, lambda);
    match printed_table(w, lambda) {
        Some(printed) => {
            first_mismatch(&format!("pi^{w}"), &printed, &derived)?;
            Ok(printed)
        }
        None => Ok(derived),
    }
}

/// Term-by-term comparison of the printed and derived tables for `w` with
/// symbolic weight; one record per operator.
pub fn table_fidelity(w: WeylGroupElem) -> Report {
    let l = Weight::<ParamPoly>::symbolic().expect("parametric ring has symbols");
    let derived = derived_table(w, &l);
    let Some(printed) = printed_table(w, &l) else {
        return Report::new();
    };
    LieBasis::ALL
        .into_iter()
        .map(|b| {
            CheckRecord::compare(
                "table fidelity",
                format!("pi^{w}({b})"),
                printed.op(b).to_string(),
                derived.op(b).to_string(),
            )
        })
        .collect()
}

/// Checks `pi([X,Y]) = [pi(X), pi(Y)]` for all 28 basis pairs on every
/// monomial of graded degree at most `degree_bound`.
pub fn verify_homomorphism<C: Coeff>(t: &RealizationTable<C>, degree_bound: u32) -> Report {
    let monomials = t.grading().monomials_up_to(degree_bound);
    let mut report = Report::new();
    for (i, a) in LieBasis::ALL.into_iter().enumerate() {
        for b in LieBasis::ALL.into_iter().skip(i + 1) {
            let bracket = LieElement::<C>::basis(a).bracket(&LieElement::basis(b));
            let defect = &t.image(&bracket) - &t.op(a).commutator(t.op(b));
            let bad = monomials.iter().find(|m| {
                let v = ModuleVector::monomial(t.signature, m.0, C::one());
                !act(&defect, &v).is_zero()
            });
            let got = match bad {
                None => "0".to_string(),
                Some(m) => format!(
                    "nonzero on {}",
                    ModuleVector::monomial(t.signature, m.0, C::one()).render(&t.presentation)
                ),
            };
            report.push(CheckRecord::new(
                "bracket compatibility",
                format!("w={}, ({a}, {b}), degree<={degree_bound}", t.w),
                "0",
                got,
                bad.is_none(),
            ));
        }
    }
    report
}

/// The table with `1` added to the constant term of `pi(b)`; used to check
/// that verification catches a corrupted table.
pub fn mutate<C: Coeff>(t: &RealizationTable<C>, b: LieBasis) -> RealizationTable<C> {
    let mut out = t.clone();
    let e = &out.ops[&b] + &WeylElement::one();
    out.ops.insert(b, e);
    out
}

/// The eigenvalues of `pi(h1)`, `pi(h2)` on `1`.
pub fn weight_of_one<C: Coeff>(t: &RealizationTable<C>) -> Result<Weight<C>, Error> {
    let one = ModuleVector::one(t.signature);
    let mut c = Vec::with_capacity(2);
    for h in [LieBasis::H1, LieBasis::H2] {
        let v = act(t.op(h), &one);
        let k = v.coefficient(&crate::weyl::ModuleMonomial::ONE);
        if v != one.scale(&k) {
            return Err(Error::NotEigenvector {
                operator: format!("pi^{}({h})", t.w),
                vector: "1".into(),
            });
        }
        c.push(k);
    }
    let c2 = c.pop().unwrap();
    let c1 = c.pop().unwrap();
    Ok(Weight::new(c1, c2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn l() -> Weight<ParamPoly> {
        Weight::symbolic().unwrap()
    }

    fn p(s: &str) -> WeylElement<ParamPoly> {
        parse_element(s).unwrap()
    }

    #[test]
    fn generic_embedding_examples() {
        let mu = l();
        assert_eq!(pi_generic(&mu, LieBasis::F12), p("-dz"));
        assert_eq!(pi_generic(&mu, LieBasis::H1), p("2*x*dx - y*dy + z*dz + l1 + 1"));
        // with mu = l + rho the printed pi^e(e1) appears
        let shifted = mu.add(&Weight::rho());
        assert_eq!(
            pi_generic(&shifted, LieBasis::E1),
            p("x^2*dx + (z - 1/2*x*y)*dy + (1/4*x^2*y + 1/2*x*z)*dz + (l1 + 2)*x")
        );
    }

    #[test]
    fn generic_embedding_realizes_the_shifted_weight() {
        let mu = l();
        let one = ModuleVector::one(QuotientSignature::E);
        for (i, h) in [LieBasis::H1, LieBasis::H2].into_iter().enumerate() {
            let got = act(&pi_generic(&mu, h), &one);
            let expected = &mu.c[i] - &ParamPoly::constant(int(1));
            assert_eq!(got, one.scale(&expected));
        }
    }

    #[test]
    fn printed_examples() {
        let t = pi_table(WeylGroupElem::S1, &l()).unwrap();
        assert_eq!(t.op(LieBasis::H2).to_string(), "x*dx + y*dy + 2*z*dz + l2 + 3");
        let t = pi_table(WeylGroupElem::S1S2S1, &l()).unwrap();
        assert_eq!(
            t.op(LieBasis::F1),
            &p("-y^2*dy + (z + 1/2*x*y)*dx + (1/4*x*y^2 - 1/2*y*z)*dz + l1*y")
        );
    }

    #[test]
    fn weight_of_one_is_lambda_for_every_w() {
        for w in WeylGroupElem::ALL {
            let t = pi_table(w, &l()).unwrap();
            assert_eq!(weight_of_one(&t).unwrap(), l(), "{w}");
        }
    }

    #[test]
    fn constant_mutation_breaks_a_bracket() {
        let t = pi_table(WeylGroupElem::E, &l()).unwrap();
        assert!(verify_homomorphism(&t, 3).all_pass());
        let bad = verify_homomorphism(&mutate(&t, LieBasis::H1), 3);
        let failing: Vec<_> = bad.failures().map(|r| r.inputs.clone()).collect();
        assert!(failing.iter().any(|s| s.contains("(f1, e1)")), "{failing:?}");
    }

    #[test]
    fn rational_tables_specialize_parametric_ones() {
        let lam = Weight::<Rational>::from_ints(2, 1);
        for w in WeylGroupElem::ALL {
            let a = derived_table(w, &lam);
            let b = derived_table(w, &l());
            for x in LieBasis::ALL {
                assert_eq!(a.op(x), &specialize_element(b.op(x), &lam));
            }
        }
    }
}
