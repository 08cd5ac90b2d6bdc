//! Submodule spans, the generator and annihilator of `M^{s1}(l)`, and the
//! branching to the `sl(2)` spanned by `e1, f1, h1`.

use std::collections::BTreeMap;
use std::fmt;

use crate::exact::{as_natural, int, Coeff, ParamPoly, Rational};
use crate::liealg::{LieBasis, Weight, WeylGroupElem};
use crate::report::{CheckRecord, Report};
use crate::weyl::{ModuleMonomial, ModuleVector, QuotientSignature};
use crate::Error;

use super::linalg::{self, Echelon};
use super::ModuleSpec;

/// A span truncated at a degree bound, kept as one echelon form per weight.
#[derive(Clone, Debug)]
pub struct SubmoduleSpan {
    pub signature: QuotientSignature,
    pub degree_bound: u32,
    spaces: BTreeMap<[u32; 2], Echelon<ModuleMonomial>>,
    lowers: [[u32; 2]; 3],
}

impl SubmoduleSpan {
    pub fn dim(&self) -> usize {
        self.spaces.values().map(Echelon::rank).sum()
    }

    /// The basis, weight space by weight space, each in reduced row-echelon
    /// form with leading coefficient 1.
    pub fn basis(&self) -> Vec<ModuleVector<Rational>> {
        self.spaces
            .values()
            .flat_map(|e| e.rows().map(|r| linalg::to_vector(self.signature, r)).collect::<Vec<_>>())
            .collect()
    }

    fn key(&self, m: &ModuleMonomial) -> [u32; 2] {
        let mut d = [0; 2];
        for i in 0..3 {
            d[0] += m.0[i] * self.lowers[i][0];
            d[1] += m.0[i] * self.lowers[i][1];
        }
        d
    }

    /// Exact membership by echelon reduction.
    pub fn contains(&self, v: &ModuleVector<Rational>) -> Result<bool, Error> {
        let grading = crate::weyl::Grading::for_signature(&self.signature);
        let deg = v.degree(&grading);
        if deg > self.degree_bound {
            return Err(Error::DegreeOverflow {
                degree: deg,
                bound: self.degree_bound,
            });
        }
        Ok(v.split_by(|m| self.key(m)).into_iter().all(|(k, part)| match self.spaces.get(&k) {
            Some(e) => e.contains(&linalg::from_vector(&part)),
            None => part.is_zero(),
        }))
    }

    /// Whether the span is the whole truncated module.
    pub fn saturates(&self) -> bool {
        let grading = crate::weyl::Grading::for_signature(&self.signature);
        self.dim() == grading.monomials_up_to(self.degree_bound).len()
    }
}

/// Closure of `generators` under the eight operators, discarding anything of
/// degree above `degree_bound`.
pub fn submodule_span(
    spec: &ModuleSpec<Rational>,
    generators: &[ModuleVector<Rational>],
    degree_bound: u32,
) -> SubmoduleSpan {
    let grading = spec.grading();
    let mut span = SubmoduleSpan {
        signature: spec.signature,
        degree_bound,
        spaces: BTreeMap::new(),
        lowers: spec.lowers,
    };
    let mut queue: Vec<ModuleVector<Rational>> = generators.iter().map(|g| g.truncate(&grading, degree_bound)).collect();
    while let Some(v) = queue.pop() {
        for (k, part) in v.split_by(|m| span.key(m)) {
            let echelon = span.spaces.entry(k).or_default();
            let before = echelon.rank();
            echelon.insert(linalg::from_vector(&part));
            if echelon.rank() > before {
                for b in LieBasis::ALL {
                    let image = spec.act(b, &part).truncate(&grading, degree_bound);
                    if !image.is_zero() {
                        queue.push(image);
                    }
                }
            }
        }
    }
    span.spaces.retain(|_, e| e.rank() > 0);
    span
}

/// `pi(f1)^k 1` in `M^{s1}(l)`.
pub fn lowering_moments<C: Coeff>(spec: &ModuleSpec<C>, k: u32) -> ModuleVector<C> {
    spec.table.apply_word(&vec![LieBasis::F1; k as usize], &spec.one())
}

/// `k! C(l1, k) x^k` with the generalized binomial, parametric in `l1`.
pub fn moment_formula(k: u32) -> ModuleVector<ParamPoly> {
    let mut c = ParamPoly::constant(int(1));
    for j in 0..k {
        c = &c * &(&ParamPoly::l1() - &ParamPoly::constant(int(j.into())));
    }
    ModuleVector::monomial(QuotientSignature::S1, [k, 0, 0], c)
}

/// The distinguished generator of `M^{s1}(l)`: `x^(l1+1)` when `l1` is a
/// natural number, `1` otherwise.
pub fn lemma_generator(lambda: &Weight<Rational>) -> ModuleVector<Rational> {
    match as_natural(&lambda.c[0]) {
        Some(n) => ModuleVector::monomial(QuotientSignature::S1, [n + 1, 0, 0], int(1)),
        None => ModuleVector::one(QuotientSignature::S1),
    }
}

/// A linear combination of words in the basis of `g`, read as an element of
/// `U(g)`; the empty word is the unit.
#[derive(Clone, PartialEq, Debug)]
pub struct UWord {
    pub terms: Vec<(Rational, Vec<LieBasis>)>,
}

impl UWord {
    pub fn word(w: &[LieBasis]) -> Self {
        Self {
            terms: vec![(int(1), w.to_vec())],
        }
    }

    pub fn power(b: LieBasis, n: u32) -> Self {
        Self::word(&vec![b; n as usize])
    }

    /// `b + c`.
    pub fn shifted(b: LieBasis, c: Rational) -> Self {
        Self {
            terms: vec![(int(1), vec![b]), (c, vec![])],
        }
    }

    pub fn apply(&self, spec: &ModuleSpec<Rational>, v: &ModuleVector<Rational>) -> ModuleVector<Rational> {
        self.terms.iter().fold(ModuleVector::zero(v.signature), |acc, (c, w)| {
            acc.add(&spec.table.apply_word(w, v).scale(c))
        })
    }
}

impl fmt::Display for UWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, w) in &self.terms {
            let body = (!w.is_empty()).then(|| render_word(w));
            let neg = c < &int(0);
            let abs = if c < &int(0) { -c.clone() } else { c.clone() };
            if !first {
                f.write_str(if neg { " - " } else { " + " })?;
            } else if neg {
                f.write_str("-")?;
            }
            match body {
                Some(b) if abs == int(1) => f.write_str(&b)?,
                Some(b) => write!(f, "{abs}*{b}")?,
                None => write!(f, "{abs}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// `e1 e1 f1` renders as `e1^2f1`.
fn render_word(w: &[LieBasis]) -> String {
    let mut out = String::new();
    let mut i = 0;
    while i < w.len() {
        let run = w[i..].iter().take_while(|b| **b == w[i]).count();
        out.push_str(w[i].name());
        if run > 1 {
            out.push_str(&format!("^{run}"));
        }
        i += run;
    }
    out
}

/// Generators of the left ideal annihilating the distinguished generator of
/// `M^{s1}(l)`.
pub fn annihilator_generators(lambda: &Weight<Rational>) -> Vec<UWord> {
    use LieBasis::*;
    let [l1, l2] = &lambda.c;
    match as_natural(l1) {
        Some(n) => vec![
            UWord::word(&[E2]),
            UWord::word(&[E12]),
            UWord::power(E1, n + 2),
            UWord::word(&[F1, E1]),
            UWord::shifted(H1, l1 + int(2)),
            UWord::shifted(H2, -(l1 + l2 + int(1))),
        ],
        None => vec![
            UWord::word(&[E1]),
            UWord::word(&[E2]),
            UWord::word(&[E12]),
            UWord::shifted(H1, -l1.clone()),
            UWord::shifted(H2, -l2.clone()),
        ],
    }
}

/// Applies every annihilator generator to the distinguished generator.
pub fn annihilator_check(lambda: &Weight<Rational>) -> Result<Report, Error> {
    let spec = ModuleSpec::new(WeylGroupElem::S1, lambda.clone())?;
    let v = lemma_generator(lambda);
    Ok(annihilator_generators(lambda)
        .into_iter()
        .map(|u| {
            let got = u.apply(&spec, &v);
            CheckRecord::new(
                "annihilator",
                format!("l={lambda}, ({u}) {}", v),
                "0",
                got.to_string(),
                got.is_zero(),
            )
        })
        .collect())
}

/// Saturation of the span of the distinguished generator, and for natural
/// `l1` properness of the span of `1`.
pub fn generation_check(lambda: &Weight<Rational>, degree_bound: u32) -> Result<Report, Error> {
    let spec = ModuleSpec::new(WeylGroupElem::S1, lambda.clone())?;
    let v = lemma_generator(lambda);
    let total = spec.grading().monomials_up_to(degree_bound).len();
    let span = submodule_span(&spec, std::slice::from_ref(&v), degree_bound);
    let mut report = Report::new();
    report.push(CheckRecord::compare(
        "generator saturates",
        format!("l={lambda}, generator {v}, degree<={degree_bound}"),
        total.to_string(),
        span.dim().to_string(),
    ));
    if as_natural(&lambda.c[0]).is_some() {
        let of_one = submodule_span(&spec, &[spec.one()], degree_bound);
        report.push(CheckRecord::new(
            "span of 1 is proper",
            format!("l={lambda}, degree<={degree_bound}"),
            format!("< {total}, without {v}"),
            format!("{}, contains {v}: {}", of_one.dim(), of_one.contains(&v)?),
            of_one.dim() < total && !of_one.contains(&v)?,
        ));
    }
    Ok(report)
}

/// `f1^k 1 = k! C(l1, k) x^k` in `M^{s1}(l)` with parametric `l`, for
/// `k <= k_max`.
pub fn moment_check(k_max: u32) -> Result<Report, Error> {
    let l = Weight::<ParamPoly>::symbolic().expect("parametric ring has symbols");
    let spec = ModuleSpec::new(WeylGroupElem::S1, l)?;
    Ok((0..=k_max)
        .map(|k| {
            CheckRecord::compare(
                "lowering moment",
                format!("k={k}"),
                moment_formula(k).to_string(),
                lowering_moments(&spec, k).to_string(),
            )
        })
        .collect())
}

/// Kernel of `pi^{s1}(e1)` on the truncation at `degree_bound`, weight space
/// by weight space.
pub fn branching_kernel(lambda: &Weight<Rational>, degree_bound: u32) -> Result<Vec<ModuleVector<Rational>>, Error> {
    let spec = ModuleSpec::new(WeylGroupElem::S1, lambda.clone())?;
    let mut by_weight: BTreeMap<[u32; 2], Vec<ModuleMonomial>> = BTreeMap::new();
    for m in spec.grading().monomials_up_to(degree_bound) {
        by_weight.entry(spec.depth_of(&m)).or_default().push(m);
    }
    let mut out = Vec::new();
    for ms in by_weight.into_values() {
        let images = ms
            .into_iter()
            .map(|m| {
                let v = ModuleVector::monomial(spec.signature, m.0, int(1));
                (m, linalg::from_vector(&spec.act(LieBasis::E1, &v)))
            })
            .collect();
        out.extend(linalg::kernel(images).rows().map(|r| linalg::to_vector(spec.signature, r)));
    }
    Ok(out)
}

fn dz() -> ModuleVector<Rational> {
    ModuleVector::monomial(QuotientSignature::S1, [0, 0, 1], int(1))
}

/// `x dz - 2 dy` in `M^{s1}`.
pub fn branching_quadric() -> ModuleVector<Rational> {
    let sig = QuotientSignature::S1;
    ModuleVector::monomial(sig, [1, 0, 1], int(1)).sub(&ModuleVector::monomial(sig, [0, 1, 0], int(2)))
}

/// `dz^i (x dz - 2 dy)^j`.
pub fn branching_product(i: u32, j: u32) -> ModuleVector<Rational> {
    dz().poly_pow(i).poly_mul(&branching_quadric().poly_pow(j))
}

/// The kernel of `e1` against the closed-form generators, degree by degree.
pub fn branching_check(lambda: &Weight<Rational>, degree_bound: u32) -> Result<Report, Error> {
    let spec = ModuleSpec::new(WeylGroupElem::S1, lambda.clone())?;
    let grading = spec.grading();
    let kernel = branching_kernel(lambda, degree_bound)?;
    let mut report = Report::new();

    let mut closed = Echelon::new();
    for d in 0..=degree_bound {
        let mut count = 0;
        for j in 0..=d / 2 {
            closed.insert(linalg::from_vector(&branching_product(d - 2 * j, j)));
            count += 1;
        }
        let in_degree = kernel.iter().filter(|v| v.degree(&grading) == d).count();
        report.push(CheckRecord::compare(
            "branching kernel dimension",
            format!("l={lambda}, degree {d}"),
            count.to_string(),
            in_degree.to_string(),
        ));
    }
    let mut found = Echelon::new();
    for v in &kernel {
        found.insert(linalg::from_vector(v));
    }
    let same = closed.rank() == found.rank() && kernel.iter().all(|v| closed.contains(&linalg::from_vector(v)));
    report.push(CheckRecord::new(
        "branching kernel span",
        format!("l={lambda}, degree<={degree_bound}"),
        format!("span of dz^i (x*dz - 2*dy)^j, dim {}", closed.rank()),
        format!("solver kernel, dim {}", found.rank()),
        same,
    ));
    for v in [branching_quadric(), dz()] {
        let got = spec.act(LieBasis::E1, &v);
        report.push(CheckRecord::new(
            "branching annihilated",
            format!("l={lambda}, e1 {v}"),
            "0",
            got.to_string(),
            got.is_zero(),
        ));
    }
    Ok(report)
}

/// Graded independence of `dz^i (x dz - 2 dy)^j x^k` and the matching count
/// of monomials of `C[x, dy, dz]`.
pub fn fischer_check(degree_bound: u32) -> Report {
    let grading = crate::weyl::Grading::for_signature(&QuotientSignature::S1);
    let x = ModuleVector::monomial(QuotientSignature::S1, [1, 0, 0], int(1));
    (0..=degree_bound)
        .map(|d| {
            let mut e = Echelon::new();
            let mut products = 0;
            for j in 0..=d / 2 {
                for i in 0..=d - 2 * j {
                    let k = d - 2 * j - i;
                    e.insert(linalg::from_vector(&branching_product(i, j).poly_mul(&x.poly_pow(k))));
                    products += 1;
                }
            }
            let monomials = grading.monomials_of_degree(d).len();
            CheckRecord::new(
                "fischer decomposition",
                format!("degree {d}"),
                format!("{monomials} independent"),
                format!("{products} products, rank {}", e.rank()),
                products == monomials && e.rank() == monomials,
            )
        })
        .collect()
}

/// The `h1`-eigenvalue of `dz^(a+2b) (x dz - 2 dy)^b`, computed from the
/// realization, for `b > 0` and `a + 3b <= degree_bound`.
pub fn branching_weights(lambda: &Weight<Rational>, degree_bound: u32) -> Result<Report, Error> {
    let spec = ModuleSpec::new(WeylGroupElem::S1, lambda.clone())?;
    let l1 = &lambda.c[0];
    let mut report = Report::new();
    for b in 1..=degree_bound / 4 {
        for a in 0..=degree_bound - 4 * b {
            let v = branching_product(a + 2 * b, b);
            let got = super::vector_weight(&spec, &v)?.c[0].clone();
            let computed = l1 + int((a + b).into());
            let printed = l1 + int(a.into());
            report.push(
                CheckRecord::compare(
                    "branching weight",
                    format!("l={lambda}, a={a}, b={b}"),
                    computed.to_string(),
                    got.to_string(),
                )
                .with_note(format!(
                    "computed h1-eigenvalue l1+a+b; the printed label (l1+a)w1 would give {printed}"
                )),
            );
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::weyl::parse_vector;

    fn s1(a: Rational, b: Rational) -> ModuleSpec<Rational> {
        ModuleSpec::new(WeylGroupElem::S1, Weight::new(a, b)).unwrap()
    }

    fn v(s: &str) -> ModuleVector<Rational> {
        parse_vector(s, QuotientSignature::S1).unwrap()
    }

    #[test]
    fn span_examples() {
        let spec = s1(rat(-1, 2), int(0));
        assert!(submodule_span(&spec, &[spec.one()], 5).saturates());
        let spec = s1(int(1), int(1));
        assert!(submodule_span(&spec, &[v("x^2")], 5).saturates());
        let span = submodule_span(&spec, &[spec.one()], 5);
        assert!(!span.saturates());
        assert!(span.contains(&v("dz")).unwrap());
        assert!(!span.contains(&v("x^2")).unwrap());
        assert!(span.contains(&ModuleVector::zero(QuotientSignature::S1)).unwrap());
        assert!(matches!(span.contains(&v("dz^6")), Err(Error::DegreeOverflow { .. })));
    }

    #[test]
    fn span_is_closed_under_the_operators() {
        let spec = s1(int(1), int(0));
        let span = submodule_span(&spec, &[spec.one()], 4);
        let grading = spec.grading();
        for b in span.basis() {
            for x in LieBasis::ALL {
                let img = spec.act(x, &b).truncate(&grading, 4);
                assert!(span.contains(&img).unwrap());
            }
        }
    }

    #[test]
    fn moments() {
        let r = moment_check(6).unwrap();
        assert!(r.all_pass(), "{r:#?}");
        let spec = s1(rat(5, 3), int(2));
        let got = lowering_moments(&spec, 2);
        assert_eq!(got, v("x^2").scale(&(rat(5, 3) * rat(2, 3))));
        assert_eq!(lowering_moments(&spec, 0), spec.one());
    }

    #[test]
    fn annihilator_examples() {
        let spec = s1(int(1), int(1));
        let x2 = v("x^2");
        use LieBasis::*;
        assert!(UWord::word(&[F1, E1]).apply(&spec, &x2).is_zero());
        assert!(UWord::power(E1, 3).apply(&spec, &x2).is_zero());
        assert!(!UWord::power(E1, 2).apply(&spec, &x2).is_zero());
        let spec = s1(rat(-1, 2), int(0));
        assert!(UWord::word(&[E1]).apply(&spec, &spec.one()).is_zero());
        for l in [(1, 1), (0, 2), (2, 0)] {
            assert!(annihilator_check(&Weight::from_ints(l.0, l.1)).unwrap().all_pass());
        }
        assert_eq!(UWord::power(E1, 3).to_string(), "e1^3");
        assert_eq!(UWord::shifted(H2, int(-3)).to_string(), "h2 - 3");
    }

    #[test]
    fn branching_examples() {
        let lam = Weight::from_ints(1, 1);
        let k = branching_kernel(&lam, 2).unwrap();
        let mut e = Echelon::new();
        for b in &k {
            e.insert(linalg::from_vector(b));
        }
        for good in ["dz", "dz^2", "x*dz - 2*dy"] {
            assert!(e.contains(&linalg::from_vector(&v(good))), "{good}");
        }
        for bad in ["x", "dy"] {
            assert!(!e.contains(&linalg::from_vector(&v(bad))), "{bad}");
        }
        let spec = s1(int(1), int(1));
        assert_eq!(spec.act(LieBasis::E1, &v("x")), spec.one());
        assert!(branching_check(&lam, 6).unwrap().all_pass());
    }

    #[test]
    fn fischer_small_degrees() {
        let r = fischer_check(4);
        assert!(r.all_pass());
        assert_eq!(r.records[2].expected, "4 independent");
        assert_eq!(r.records[1].expected, "2 independent");
        assert_eq!(r.records[0].expected, "1 independent");
    }

    #[test]
    fn branching_weight_uses_the_computed_eigenvalue() {
        let r = branching_weights(&Weight::from_ints(2, 0), 8).unwrap();
        assert!(r.all_pass());
        let first = &r.records[0];
        assert_eq!((first.expected.as_str(), first.got.as_str()), ("3", "3"));
        assert!(first.note.is_some());
    }
}
