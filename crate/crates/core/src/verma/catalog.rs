//! The `W`-orbit of a dominant integral weight, the closed-form vectors of
//! the `s1`-twisted diagrams, and the homomorphisms between `M^{s1}` modules.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exact::{as_natural, binomial, int, ParamPoly, Rational};
use crate::liealg::{rho_affine, LieBasis, Weight, WeylGroupElem};
use crate::report::{CheckRecord, Report};
use crate::weyl::{parse_element, parse_vector, ModuleVector, QuotientSignature};
use crate::Error;

use super::span::{annihilator_generators, lemma_generator};
use super::{depth_between, singular_vectors, vector_weight, ModuleSpec};

/// The six nodes of the orbit diagram, from the top `F = l` to the bottom
/// `A = w0.l`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum OrbitNode {
    A,
    B,
    C,
    D,
    E,
    F,
}

impl OrbitNode {
    pub const ALL: [OrbitNode; 6] = [
        OrbitNode::F,
        OrbitNode::E,
        OrbitNode::D,
        OrbitNode::C,
        OrbitNode::B,
        OrbitNode::A,
    ];

    /// The element whose dot action on `l` gives the node's weight.
    pub fn element(self) -> WeylGroupElem {
        match self {
            OrbitNode::F => WeylGroupElem::E,
            OrbitNode::E => WeylGroupElem::S1,
            OrbitNode::D => WeylGroupElem::S2,
            OrbitNode::C => WeylGroupElem::S2S1,
            OrbitNode::B => WeylGroupElem::S1S2,
            OrbitNode::A => WeylGroupElem::S1S2S1,
        }
    }

    pub fn weight(self, lambda: &Weight<Rational>) -> Weight<Rational> {
        rho_affine(self.element(), lambda)
    }

    pub fn name(self) -> &'static str {
        match self {
            OrbitNode::A => "A",
            OrbitNode::B => "B",
            OrbitNode::C => "C",
            OrbitNode::D => "D",
            OrbitNode::E => "E",
            OrbitNode::F => "F",
        }
    }
}

impl fmt::Display for OrbitNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `a_{-1}, a_0, ..., a_{l2+1}` for the recurrence
/// `(l1 + k + 3) a_{k+2} = l1 a_{k+1} + (k + 1) a_k`.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct RecurrenceCoeffs {
    pub l1: u32,
    pub l2: u32,
    /// `values[k + 1] = a_k`.
    pub values: Vec<Rational>,
}

impl RecurrenceCoeffs {
    pub fn a(&self, k: i64) -> Rational {
        self.values[(k + 1) as usize].clone()
    }

    /// Residuals of the defining relation at every applicable `k`.
    pub fn residuals(&self) -> Vec<Rational> {
        let top = self.values.len() as i64 - 2;
        let l1 = int(self.l1.into());
        (-1..=top - 2)
            .map(|k| (&l1 + int(k + 3)) * self.a(k + 2) - &l1 * self.a(k + 1) - int(k + 1) * self.a(k))
            .collect()
    }
}

pub fn recurrence_coeffs(l1: u32, l2: u32) -> RecurrenceCoeffs {
    let l1r = int(l1.into());
    let mut values = vec![int(0), int(1)];
    for k in -1..i64::from(l2) {
        let at = |j: i64| values[(j + 1) as usize].clone();
        let next = (&l1r * at(k + 1) + int(k + 1) * at(k)) / (&l1r + int(k + 3));
        values.push(next);
    }
    values.truncate(l2 as usize + 3);
    RecurrenceCoeffs { l1, l2, values }
}

/// `x^(l1+1) sum_k 2^-k C(l2+1, k) a_k (x dz)^k dy^(l2+1-k)` in `M^{s1}`.
pub fn recurrence_vector(lambda: [u32; 2]) -> ModuleVector<Rational> {
    let [l1, l2] = lambda;
    let a = recurrence_coeffs(l1, l2);
    let mut v = ModuleVector::zero(QuotientSignature::S1);
    for k in 0..=l2 + 1 {
        let c = binomial(l2 + 1, k) * a.a(k.into()) / int(1i64 << k);
        v = v.add(&ModuleVector::monomial(QuotientSignature::S1, [l1 + 1 + k, l2 + 1 - k, k], c));
    }
    v
}

pub const RECURRENCE_NAME: &str = "x^(l1+1)*recurrence_sum";

/// Evaluates a closed-form name in `M^{s1}` at dominant integral `l`.
///
/// Names use the parser's syntax with exponents of the form `^(expr)` in
/// `l1, l2`, for example `(x*dz - 2*dy)^(l1+l2+2)`; the special name
/// `x^(l1+1)*recurrence_sum` is the recurrence vector.
pub fn build_diagram_vector(name: &str, lambda: [u32; 2]) -> Result<ModuleVector<Rational>, Error> {
    if name == RECURRENCE_NAME {
        return Ok(recurrence_vector(lambda));
    }
    let mut text = String::new();
    let mut rest = name;
    while let Some(i) = rest.find("^(") {
        text.push_str(&rest[..=i]);
        let close = rest[i..].find(')').ok_or_else(|| Error::UnknownName(name.to_string()))? + i;
        let expr: crate::weyl::WeylElement<ParamPoly> = parse_element(&rest[i + 2..close])?;
        let value = expr
            .constant_term()
            .specialize(&int(lambda[0].into()), &int(lambda[1].into()));
        let n = as_natural(&value).ok_or_else(|| Error::UnknownName(format!("{name}: exponent {value}")))?;
        text.push_str(&n.to_string());
        rest = &rest[close + 1..];
    }
    text.push_str(rest);
    parse_vector(&text, QuotientSignature::S1)
}

/// One page of the `s1` diagram: the vectors of `M^{s1}(weight(page))`
/// sitting at the other nodes.
#[derive(Clone, Debug)]
pub struct DiagramPage {
    pub page: OrbitNode,
    pub entries: Vec<(OrbitNode, &'static str)>,
}

pub fn diagram_pages() -> Vec<DiagramPage> {
    use OrbitNode::*;
    vec![
        DiagramPage {
            page: F,
            entries: vec![
                (F, "1"),
                (E, "x^(l1+1)"),
                (D, "dz^(l2+1)"),
                (C, "x^(l1+1)*dz^(l1+l2+2)"),
                (B, RECURRENCE_NAME),
                (A, "(x*dz - 2*dy)^(l1+l2+2)"),
            ],
        },
        DiagramPage {
            page: E,
            entries: vec![
                (E, "1"),
                (C, "dz^(l1+l2+2)"),
                (B, "(x*dz - 2*dy)^(l2+1)"),
                (A, "(x*dz - 2*dy)^(l2+1)*dz^(l1+1)"),
            ],
        },
        DiagramPage {
            page: D,
            entries: vec![
                (D, "1"),
                (C, "(x*dz - 2*dy)^(l1+1)"),
                (B, "x^(l1+l2+2)"),
                (A, "x^(l1+l2+2)*dz^(l1+1)"),
            ],
        },
        DiagramPage {
            page: C,
            entries: vec![(C, "1"), (A, "x^(l2+1)")],
        },
        DiagramPage {
            page: B,
            entries: vec![(B, "1"), (A, "dz^(l1+1)")],
        },
        DiagramPage {
            page: A,
            entries: vec![(A, "1")],
        },
    ]
}

/// The entry at node `C` of the top page is printed with `dz` exponent
/// `l1+l2+1`; only `l1+l2+2` has the weight of `C`.
pub const PRINTED_TOP_C: &str = "x^(l1+1)*dz^(l1+l2+1)";

fn lambda_weight(lambda: [u32; 2]) -> Weight<Rational> {
    Weight::from_ints(lambda[0].into(), lambda[1].into())
}

/// Each diagram vector has the weight of its node.
pub fn diagram_check(lambda: [u32; 2]) -> Result<Report, Error> {
    let lam = lambda_weight(lambda);
    let mut report = Report::new();
    for page in diagram_pages() {
        let spec = ModuleSpec::new(WeylGroupElem::S1, page.page.weight(&lam))?;
        for (node, name) in &page.entries {
            let v = build_diagram_vector(name, lambda)?;
            let got = vector_weight(&spec, &v).map(|w| w.to_string()).unwrap_or_else(|e| e.to_string());
            let mut record = CheckRecord::compare(
                "diagram weight",
                format!("l=({}, {}), page {}, node {node}: {name}", lambda[0], lambda[1], page.page),
                node.weight(&lam).to_string(),
                got,
            );
            if page.page == OrbitNode::F && *node == OrbitNode::C {
                let printed = build_diagram_vector(PRINTED_TOP_C, lambda)?;
                let pw = vector_weight(&spec, &printed)?;
                record = record.with_note(format!("printed exponent l1+l2+1 gives {printed} of weight {pw}"));
            }
            report.push(record);
        }
    }
    Ok(report)
}

/// A homomorphism `M^{s1}(source) -> M^{s1}(target)` given by the image of
/// the source's distinguished generator.
#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    pub source: OrbitNode,
    pub target: OrbitNode,
    pub generator: &'static str,
    pub image: &'static str,
}

pub fn catalog() -> Vec<CatalogEntry> {
    use OrbitNode::*;
    let e = |source, target, generator, image| CatalogEntry {
        source,
        target,
        generator,
        image,
    };
    vec![
        e(B, E, "1", "(x*dz - 2*dy)^(l2+1)"),
        e(A, B, "1", "dz^(l1+1)"),
        e(A, F, "1", "(x*dz - 2*dy)^(l1+l2+2)"),
        e(C, A, "x^(l2+1)", "1"),
        e(C, D, "x^(l2+1)", "x^(l2+1)*(x*dz - 2*dy)^(l1+1)"),
        e(D, B, "x^(l1+l2+2)", "1"),
        e(D, F, "x^(l1+l2+2)", RECURRENCE_NAME),
        e(F, E, "x^(l1+1)", "1"),
    ]
}

/// Checks that `image` in `target` can be the image of the distinguished
/// generator of `source`: equal weights, and every annihilator generator of
/// the source kills the image under the target's operators.
pub fn verify_hom(
    source: &ModuleSpec<Rational>,
    target: &ModuleSpec<Rational>,
    image: &ModuleVector<Rational>,
) -> Result<Report, Error> {
    let generator = lemma_generator(&source.lambda);
    let inputs = format!("M({}) -> M({}), {generator} |-> {image}", source.lambda, target.lambda);
    let mut report = Report::new();
    let expected = vector_weight(source, &generator)?;
    let got = vector_weight(target, image).map(|w| w.to_string()).unwrap_or_else(|e| e.to_string());
    report.push(CheckRecord::compare(
        "homomorphism weight",
        inputs.clone(),
        expected.to_string(),
        got,
    ));
    for u in annihilator_generators(&source.lambda) {
        let r = u.apply(target, image);
        report.push(CheckRecord::new(
            "homomorphism annihilator",
            format!("{inputs}, {u}"),
            "0",
            r.to_string(),
            r.is_zero(),
        ));
    }
    Ok(report)
}

/// Source module, target module and the image of the source generator.
type EntrySpecs = (ModuleSpec<Rational>, ModuleSpec<Rational>, ModuleVector<Rational>);

fn entry_specs(e: &CatalogEntry, lambda: [u32; 2]) -> Result<EntrySpecs, Error> {
    let lam = lambda_weight(lambda);
    let source = ModuleSpec::new(WeylGroupElem::S1, e.source.weight(&lam))?;
    let target = ModuleSpec::new(WeylGroupElem::S1, e.target.weight(&lam))?;
    Ok((source, target, build_diagram_vector(e.image, lambda)?))
}

/// Every catalog entry at `l`, plus a check that the listed generator is the
/// distinguished one.
pub fn verify_catalog(lambda: [u32; 2]) -> Result<Report, Error> {
    let mut report = Report::new();
    for e in catalog() {
        let (source, target, image) = entry_specs(&e, lambda)?;
        let listed = build_diagram_vector(e.generator, lambda)?;
        let actual = lemma_generator(&source.lambda);
        report.push(CheckRecord::compare(
            "catalog generator",
            format!("l=({}, {}), {} -> {}", lambda[0], lambda[1], e.source, e.target),
            listed.to_string(),
            actual.to_string(),
        ));
        report.extend(verify_hom(&source, &target, &image)?);
    }
    Ok(report)
}

/// Single-term perturbations of an image: adding `dy`, and for images with
/// several terms adding 1 to each coefficient in turn.
pub fn mutations(image: &ModuleVector<Rational>) -> Vec<(String, ModuleVector<Rational>)> {
    let dy = ModuleVector::monomial(QuotientSignature::S1, [0, 1, 0], int(1));
    let mut out = vec![("+dy".to_string(), image.add(&dy))];
    if image.len() > 1 {
        for (m, _) in image.terms() {
            let bump = ModuleVector::monomial(QuotientSignature::S1, m.0, int(1));
            out.push((format!("+{bump}"), image.add(&bump)));
        }
    }
    out
}

/// Every mutation of every catalog image must fail `verify_hom`.
pub fn mutation_check(lambda: [u32; 2]) -> Result<Report, Error> {
    let mut report = Report::new();
    for e in catalog() {
        let (source, target, image) = entry_specs(&e, lambda)?;
        for (label, bad) in mutations(&image) {
            let r = verify_hom(&source, &target, &bad)?;
            let caught = !r.all_pass();
            report.push(CheckRecord::new(
                "catalog mutation rejected",
                format!("l=({}, {}), {} -> {}, image {label}", lambda[0], lambda[1], e.source, e.target),
                "fail",
                if caught { "fail" } else { "pass" },
                caught,
            ));
        }
    }
    Ok(report)
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct HasseNode {
    pub id: OrbitNode,
    pub element: String,
    pub weight: String,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct HasseEdge {
    pub source: OrbitNode,
    pub target: OrbitNode,
    pub generator: String,
    pub image: String,
    pub pass: bool,
}

/// The orbit diagram of `M^w(l)` modules with one edge per homomorphism.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct Hasse {
    pub w: WeylGroupElem,
    pub lambda: [u32; 2],
    pub nodes: Vec<HasseNode>,
    pub edges: Vec<HasseEdge>,
}

/// Edges of the untwisted diagram as (parent, child) pairs.
const UNTWISTED_EDGES: [(OrbitNode, OrbitNode); 8] = {
    use OrbitNode::*;
    [(F, E), (F, D), (E, C), (E, B), (D, C), (D, B), (C, A), (B, A)]
};

/// Orbit data for `w = e` (singular vectors from the solver) and `w = s1`
/// (the verified catalog).
pub fn hasse(w: WeylGroupElem, lambda: [u32; 2]) -> Result<Hasse, Error> {
    let lam = lambda_weight(lambda);
    let nodes = OrbitNode::ALL
        .into_iter()
        .map(|n| HasseNode {
            id: n,
            element: n.element().to_string(),
            weight: n.weight(&lam).to_string(),
        })
        .collect();
    let edges = match w {
        WeylGroupElem::E => UNTWISTED_EDGES
            .into_iter()
            .map(|(parent, child)| -> Result<HasseEdge, Error> {
                let spec = ModuleSpec::new(WeylGroupElem::E, parent.weight(&lam))?;
                let mu = child.weight(&lam);
                let bound = depth_between(&spec.lambda, &mu).map(|d| 2 * (d[0] + d[1])).unwrap_or(0);
                let kernel = singular_vectors(&spec, &mu, &LieBasis::RAISING, bound);
                Ok(HasseEdge {
                    source: child,
                    target: parent,
                    generator: "1".into(),
                    image: kernel.first().map(|v| v.to_string()).unwrap_or_else(|| "0".into()),
                    pass: kernel.len() == 1,
                })
            })
            .collect::<Result<Vec<_>, _>>()?,
        WeylGroupElem::S1 => catalog()
            .into_iter()
            .map(|e| -> Result<HasseEdge, Error> {
                let (source, target, image) = entry_specs(&e, lambda)?;
                let pass = verify_hom(&source, &target, &image)?.all_pass();
                Ok(HasseEdge {
                    source: e.source,
                    target: e.target,
                    generator: lemma_generator(&source.lambda).to_string(),
                    image: image.to_string(),
                    pass,
                })
            })
            .collect::<Result<Vec<_>, _>>()?,
        other => return Err(Error::Unsupported(format!("orbit diagram for w={other}"))),
    };
    Ok(Hasse { w, lambda, nodes, edges })
}

impl Hasse {
    /// Graphviz digraph text.
    pub fn to_dot(&self) -> String {
        let mut out = format!(
            "digraph orbit_{} {{\n  rankdir=TB;\n",
            self.w.name()
        );
        for n in &self.nodes {
            out.push_str(&format!("  {} [label=\"{} {}\\n{}\"];\n", n.id, n.id, n.element, n.weight));
        }
        for e in &self.edges {
            out.push_str(&format!(
                "  {} -> {} [label=\"{} |-> {}\", color={}];\n",
                e.source,
                e.target,
                e.generator,
                e.image,
                if e.pass { "black" } else { "red" }
            ));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("w={} l=({}, {})\n", self.w, self.lambda[0], self.lambda[1]);
        for n in &self.nodes {
            out.push_str(&format!("{} {} {}\n", n.id, n.element, n.weight));
        }
        for e in &self.edges {
            out.push_str(&format!(
                "{} -> {}: {} |-> {} [{}]\n",
                e.source,
                e.target,
                e.generator,
                e.image,
                if e.pass { "pass" } else { "FAIL" }
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn v(s: &str) -> ModuleVector<Rational> {
        parse_vector(s, QuotientSignature::S1).unwrap()
    }

    #[test]
    fn node_weights() {
        let l = Weight::from_ints(3, 5);
        let got: Vec<String> = OrbitNode::ALL.iter().map(|n| n.weight(&l).to_string()).collect();
        assert_eq!(got, ["(3, 5)", "(-5, 9)", "(9, -7)", "(5, -11)", "(-11, 3)", "(-7, -5)"]);
    }

    #[test]
    fn recurrence_examples() {
        let r = recurrence_coeffs(0, 3);
        assert_eq!(r.a(-1), int(0));
        assert_eq!(r.a(0), int(1));
        assert_eq!(r.a(1), int(0));
        assert_eq!(r.a(2), rat(1, 3));
        assert_eq!(recurrence_coeffs(1, 0).a(1), rat(1, 3));
        assert_eq!(recurrence_coeffs(2, 4).values.len(), 7);
        for l1 in 0..=5 {
            for l2 in 0..=5 {
                assert!(recurrence_coeffs(l1, l2).residuals().iter().all(|r| *r == int(0)));
            }
        }
    }

    #[test]
    fn diagram_vector_examples() {
        assert_eq!(build_diagram_vector("dz^(l2+1)", [1, 1]).unwrap(), v("dz^2"));
        assert_eq!(
            build_diagram_vector("(x*dz - 2*dy)^(l1+l2+2)", [0, 0]).unwrap(),
            v("(x*dz - 2*dy)^2")
        );
        assert_eq!(build_diagram_vector(RECURRENCE_NAME, [0, 0]).unwrap(), v("x*dy"));
        assert!(build_diagram_vector("q^(l1)", [0, 0]).is_err());
    }

    #[test]
    fn catalog_example_entries() {
        let r = verify_catalog([0, 0]).unwrap();
        let bad: Vec<_> = r.failures().collect();
        assert!(bad.is_empty(), "{bad:#?}");
    }

    #[test]
    fn mutated_images_fail() {
        let r = mutation_check([0, 0]).unwrap();
        assert!(r.all_pass(), "{:#?}", r.failures().collect::<Vec<_>>());
    }

    #[test]
    fn hasse_shapes() {
        let h = hasse(WeylGroupElem::S1, [0, 0]).unwrap();
        assert_eq!((h.nodes.len(), h.edges.len()), (6, 8));
        let h = hasse(WeylGroupElem::E, [0, 0]).unwrap();
        assert!(h.edges.iter().all(|e| e.pass), "{}", h.to_text());
        assert!(hasse(WeylGroupElem::S2, [0, 0]).is_err());
    }
}
