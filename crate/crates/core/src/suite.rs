//! The full verification suite, grouped by acceptance criterion.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{int, rat, ParamPoly, Rational};
use crate::fourier::{hat_pi_table, hat_table_fidelity, FourierMap};
use crate::liealg::{LieBasis, Weight, WeylGroupElem};
use crate::realize::{mutate, pi_table, table_fidelity, verify_homomorphism};
use crate::report::{CheckRecord, Report};
use crate::verma::{self, catalog, span};
use crate::weyl::{WeylElement, WeylMonomial, POSITIONS};
use crate::Error;

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Dominant integral weights for the singular-vector formulas.
    pub grid: Vec<[u32; 2]>,
    pub degree_bound: u32,
    pub depth: u32,
    /// Corrupts `pi^w(b)` in every bracket check.
    pub mutate: Option<LieBasis>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            grid: (0..4).flat_map(|a| (0..4).map(move |b| [a, b])).collect(),
            degree_bound: 8,
            depth: 6,
            mutate: None,
        }
    }
}

/// One criterion's records.
#[derive(Clone, Debug)]
pub struct Section {
    pub id: u8,
    pub title: &'static str,
    pub report: Report,
}

pub const TITLES: [&str; 9] = [
    "bracket compatibility",
    "table fidelity",
    "singular-vector formulas",
    "Fourier isomorphism",
    "generators and annihilator",
    "branching",
    "recurrence and homomorphism catalog",
    "character equality",
    "branching weight labels",
];

fn symbolic() -> Weight<ParamPoly> {
    Weight::symbolic().expect("parametric ring has symbols")
}

fn ints(l: [u32; 2]) -> Weight<Rational> {
    Weight::from_ints(l[0].into(), l[1].into())
}

pub fn bracket_compatibility(cfg: &SuiteConfig) -> Result<Report, Error> {
    let mut report = Report::new();
    for w in WeylGroupElem::ALL {
        let mut t = pi_table(w, &symbolic())?;
        if let Some(b) = cfg.mutate {
            t = mutate(&t, b);
        }
        report.extend(verify_homomorphism(&t, 6));
    }
    Ok(report)
}

pub fn fidelity() -> Result<Report, Error> {
    let mut report = Report::new();
    for w in [WeylGroupElem::E, WeylGroupElem::S1, WeylGroupElem::S1S2, WeylGroupElem::S1S2S1] {
        report.extend(table_fidelity(w));
    }
    for w in [WeylGroupElem::E, WeylGroupElem::S1, WeylGroupElem::S1S2] {
        report.extend(hat_table_fidelity(w)?);
    }
    Ok(report)
}

pub fn singular(cfg: &SuiteConfig) -> Result<Report, Error> {
    let mut report = Report::new();
    for l in &cfg.grid {
        report.extend(verma::check_singular_formulas(*l)?);
    }
    Ok(report)
}

fn random_element(rng: &mut ChaCha8Rng) -> WeylElement<Rational> {
    let mut e = WeylElement::zero();
    for _ in 0..rng.gen_range(1..5) {
        let mut exps = [0u32; 6];
        let degree = rng.gen_range(0..=4);
        for _ in 0..degree {
            exps[rng.gen_range(0..6)] += 1;
        }
        let m = WeylMonomial::new([exps[0], exps[1], exps[2]], [exps[3], exps[4], exps[5]]);
        e.add_term(m, rat(rng.gen_range(-9..=9), rng.gen_range(1..=4)));
    }
    e
}

pub fn fourier_checks(cfg: &SuiteConfig) -> Result<Report, Error> {
    let mut report = Report::new();
    for w in WeylGroupElem::ALL {
        let sig = crate::realize::signature_of(w);
        let f = FourierMap::for_signature(&sig);
        let mut ok = true;
        for i in POSITIONS {
            for j in POSITIONS {
                let (x, d) = (WeylElement::<Rational>::coordinate(j), WeylElement::<Rational>::derivative(i));
                let delta = if i == j { WeylElement::one() } else { WeylElement::zero() };
                ok &= f.apply(&d).commutator(&f.apply(&x)) == delta;
                ok &= f.apply(&WeylElement::<Rational>::coordinate(i)).commutator(&f.apply(&x)).is_zero();
                ok &= f.apply(&d).commutator(&f.apply(&WeylElement::derivative(j))).is_zero();
            }
        }
        report.push(CheckRecord::new(
            "Fourier canonical relations",
            format!("w={w}, transformed {:?}", f.mask),
            "preserved",
            if ok { "preserved" } else { "broken" },
            ok,
        ));
        let mut t = hat_pi_table(w, &symbolic())?;
        if let Some(b) = cfg.mutate {
            t = mutate(&t, b);
        }
        let r = verify_homomorphism(&t, 4);
        let bad = r.failures().count();
        report.push(CheckRecord::new(
            "Fourier bracket relations",
            format!("w={w}, degree<=4"),
            "28 pairs",
            format!("{} pairs, {bad} failing", r.len()),
            bad == 0 && r.len() == 28,
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut failures = 0;
    for _ in 0..100 {
        let (a, b) = (random_element(&mut rng), random_element(&mut rng));
        let mask = [rng.gen(), rng.gen(), rng.gen()];
        let f = FourierMap { mask };
        if f.apply(&a.mul(&b)) != f.apply(&a).mul(&f.apply(&b)) {
            failures += 1;
        }
    }
    report.push(CheckRecord::new(
        "Fourier multiplicativity",
        "100 random pairs of degree <= 4",
        "0 failures",
        format!("{failures} failures"),
        failures == 0,
    ));
    for w in [WeylGroupElem::E, WeylGroupElem::S1, WeylGroupElem::S1S2] {
        report.extend(hat_table_fidelity(w)?);
    }
    Ok(report)
}

pub fn generators(cfg: &SuiteConfig) -> Result<Report, Error> {
    let mut report = Report::new();
    for l1 in [rat(-1, 2), int(-2), rat(1, 3), int(0), int(1), int(2)] {
        let lam = Weight::new(l1, int(1));
        report.extend(span::generation_check(&lam, cfg.degree_bound)?);
        report.extend(span::annihilator_check(&lam)?);
    }
    report.extend(span::moment_check(6)?);
    Ok(report)
}

pub fn branching(cfg: &SuiteConfig) -> Result<Report, Error> {
    let mut report = Report::new();
    for l in [[1, 1], [0, 2]] {
        report.extend(span::branching_check(&ints(l), cfg.degree_bound)?);
    }
    report.extend(span::fischer_check(cfg.degree_bound));
    Ok(report)
}

pub fn catalog_checks() -> Result<Report, Error> {
    let mut report = Report::new();
    for l1 in 0..=5 {
        for l2 in 0..=5 {
            let r = catalog::recurrence_coeffs(l1, l2);
            let bad = r.residuals().iter().filter(|x| **x != int(0)).count();
            report.push(CheckRecord::new(
                "recurrence relation",
                format!("l1={l1}, l2={l2}"),
                "0 nonzero residuals",
                format!("{bad} nonzero residuals"),
                bad == 0 && r.a(-1) == int(0) && r.a(0) == int(1),
            ));
        }
    }
    for l in [[0, 0], [1, 1], [1, 2]] {
        report.extend(catalog::verify_catalog(l)?);
        report.extend(catalog::mutation_check(l)?);
        report.extend(catalog::diagram_check(l)?);
    }
    Ok(report)
}

pub fn characters(cfg: &SuiteConfig) -> Result<Report, Error> {
    let mut report = Report::new();
    for l in [[0, 0], [1, 1], [2, 1]] {
        report.extend(verma::character_check(&ints(l), cfg.depth)?);
    }
    Ok(report)
}

pub fn branching_labels(cfg: &SuiteConfig) -> Result<Report, Error> {
    span::branching_weights(&ints([1, 1]), cfg.degree_bound)
}

/// Runs criterion `id` (1 to 9).
pub fn criterion(id: u8, cfg: &SuiteConfig) -> Result<Section, Error> {
    let report = match id {
        1 => bracket_compatibility(cfg)?,
        2 => fidelity()?,
        3 => singular(cfg)?,
        4 => fourier_checks(cfg)?,
        5 => generators(cfg)?,
        6 => branching(cfg)?,
        7 => catalog_checks()?,
        8 => characters(cfg)?,
        9 => branching_labels(cfg)?,
        _ => return Err(Error::UnknownName(format!("criterion {id}"))),
    };
    Ok(Section {
        id,
        title: TITLES[usize::from(id) - 1],
        report,
    })
}

pub fn run_all(cfg: &SuiteConfig) -> Result<Vec<Section>, Error> {
    (1..=9).map(|id| criterion(id, cfg)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mutation_hook_breaks_the_bracket_check() {
        let cfg = SuiteConfig {
            mutate: Some(LieBasis::H1),
            ..SuiteConfig::default()
        };
        let r = bracket_compatibility(&cfg).unwrap();
        assert!(!r.all_pass());
        // [e1, f1] = h1 and [e12, f12] = h1 + h2 see the shifted constant
        let failing: Vec<&str> = r.failures().map(|f| f.inputs.as_str()).collect();
        assert!(failing.iter().all(|s| s.contains("(f1, e1)") || s.contains("(f12, e12)")), "{failing:?}");
        assert_eq!(failing.len(), 12);
    }

    #[test]
    fn unknown_criterion() {
        assert!(criterion(10, &SuiteConfig::default()).is_err());
    }
}
