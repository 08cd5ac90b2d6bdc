use std::io::Write;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use twverma::exact::{parse_rational, Coeff, ParamPoly, Rational, Scalar};
use twverma::fourier::hat_pi_table;
use twverma::liealg::{LieBasis, Weight, WeylGroupElem};
use twverma::realize::{pi_table, RealizationTable};
use twverma::suite::{self, SuiteConfig};
use twverma::verma::{self, catalog, span, ModuleSpec};
use twverma::weyl::{parse_element, parse_vector};
use twverma::CheckRecord;

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(name = "twverma", version, about = "Twisted Verma modules of sl(3) in the Weyl algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Render the realization table of M^w(l), or its Fourier transform.
    Tables(TablesArgs),
    /// Run the verification suite; exits 1 if any record fails.
    VerifyAll(VerifyArgs),
    /// Singular vectors of a given weight, or the e1-kernel of M^{s1}(l).
    Singular(SingularArgs),
    /// Branching checks for M^{s1}(l) restricted to the first sl(2).
    Branch(BranchArgs),
    /// Apply a word in the Lie basis to a vector of M^w(l).
    Act(ActArgs),
    /// Truncated character of M^w(l).
    Character(CharacterArgs),
    /// Orbit diagram with one edge per homomorphism.
    Hasse(HasseArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Shorthand for --format json.
    #[arg(long)]
    json: bool,
    #[arg(long, default_value_t = 8)]
    degree_bound: u32,
    #[arg(long, default_value_t = 6)]
    depth: u32,
}

impl Common {
    fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else {
            self.format
        }
    }
}

#[derive(Args)]
struct TablesArgs {
    #[arg(long, default_value = "e")]
    w: String,
    /// Two components `a,b`, each a rational `p/q` or a symbol `l1`, `l2`.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Use the formal weight (l1, l2); the default when --lambda is absent.
    #[arg(long)]
    symbolic: bool,
    /// Render the Fourier-transformed table.
    #[arg(long)]
    fourier: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct VerifyArgs {
    /// Restrict the singular-formula grid to one dominant integral weight.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Run only these criteria (1 to 9); repeatable.
    #[arg(long)]
    criterion: Vec<u8>,
    /// Test hook: perturb pi^w(basis) in every bracket check.
    #[arg(long)]
    mutate: Option<String>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct SingularArgs {
    #[arg(long, default_value = "e")]
    w: String,
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<String>,
    /// Print the kernel of e1 on M^{s1}(l) instead.
    #[arg(long)]
    branch: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct BranchArgs {
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct ActArgs {
    #[arg(long, default_value = "e")]
    w: String,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Lie basis names separated by spaces or `*`, applied rightmost first.
    #[arg(long)]
    op: String,
    /// A vector in the surviving variables of M^w; defaults to `1`.
    #[arg(long, default_value = "1")]
    vector: String,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct CharacterArgs {
    #[arg(long, default_value = "e")]
    w: String,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct HasseArgs {
    #[arg(long, default_value = "s1")]
    w: String,
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    #[command(flatten)]
    common: Common,
}

/// JSON output shared by every subcommand.
#[derive(Serialize, Deserialize)]
struct Envelope<T> {
    version: String,
    command: String,
    inputs: serde_json::Value,
    records: Vec<T>,
}

#[derive(Serialize, Deserialize)]
struct TableRow {
    element: String,
    operator: String,
}

#[derive(Serialize, Deserialize)]
struct VectorRow {
    vector: String,
}

#[derive(Serialize, Deserialize)]
struct SuiteRow {
    criterion: u8,
    title: String,
    #[serde(flatten)]
    record: CheckRecord,
}

#[derive(Serialize, Deserialize)]
struct CharacterRow {
    depth: [u32; 2],
    weight: String,
    multiplicity: usize,
}

/// A weight whose ring is chosen by what was parsed.
enum Lambda {
    Rational(Weight<Rational>),
    Symbolic(Weight<ParamPoly>),
}

impl Lambda {
    fn rational(&self, why: &str) -> anyhow::Result<Weight<Rational>> {
        match self {
            Lambda::Rational(l) => Ok(l.clone()),
            Lambda::Symbolic(_) => Err(twverma::Error::NeedsRational(why.to_string()).into()),
        }
    }
}

fn parse_scalar(s: &str) -> anyhow::Result<Scalar> {
    if let Some(r) = parse_rational(s) {
        return Ok(Scalar::Rational(r));
    }
    let e = parse_element::<ParamPoly>(s).with_context(|| format!("bad weight component `{s}`"))?;
    if e.terms().any(|(m, _)| !m.is_one()) {
        bail!("weight component `{s}` is not a constant");
    }
    Ok(Scalar::Param(e.constant_term()))
}

fn parse_lambda(s: &str) -> anyhow::Result<Lambda> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| anyhow!("a weight is written `a,b`, got `{s}`"))?;
    Ok(match (parse_scalar(a)?, parse_scalar(b)?) {
        (Scalar::Rational(a), Scalar::Rational(b)) => Lambda::Rational(Weight::new(a, b)),
        (a, b) => {
            let lift = |x: Scalar| match x {
                Scalar::Rational(r) => r.to_param(),
                Scalar::Param(p) => p,
            };
            Lambda::Symbolic(Weight::new(lift(a), lift(b)))
        }
    })
}

fn parse_natural_lambda(s: &str) -> anyhow::Result<[u32; 2]> {
    let l = parse_lambda(s)?.rational("orbit data")?;
    let nat = |r: &Rational| twverma::exact::as_natural(r).ok_or_else(|| anyhow!("`{s}` is not dominant integral"));
    Ok([nat(&l.c[0])?, nat(&l.c[1])?])
}

fn parse_w(s: &str) -> anyhow::Result<WeylGroupElem> {
    Ok(s.parse()?)
}

fn parse_word(s: &str) -> anyhow::Result<Vec<LieBasis>> {
    s.split(|c: char| c == '*' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| LieBasis::from_name(t).ok_or_else(|| anyhow!("unknown Lie basis element `{t}`")))
        .collect()
}

/// What a command produced: its output text and whether every check passed.
struct Outcome {
    text: String,
    pass: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, pass: true }
    }
}

fn envelope<T: Serialize>(command: &str, inputs: serde_json::Value, records: Vec<T>) -> anyhow::Result<String> {
    let env = Envelope {
        version: VERSION.to_string(),
        command: command.to_string(),
        inputs,
        records,
    };
    Ok(serde_json::to_string_pretty(&env)? + "\n")
}

fn render_table<C: Coeff>(t: &RealizationTable<C>, format: Format, fourier: bool) -> anyhow::Result<String> {
    let rows = t.render();
    if format == Format::Json {
        let inputs = json!({
            "w": t.w,
            "lambda": t.lambda.to_string(),
            "signature": t.signature.to_string(),
            "presentation": t.presentation,
            "fourier": fourier,
        });
        let records = rows
            .into_iter()
            .map(|(b, s)| TableRow {
                element: b.name().to_string(),
                operator: s,
            })
            .collect();
        return envelope("tables", inputs, records);
    }
    let name = if fourier { "hat pi" } else { "pi" };
    let mut out = format!("{name}^{} at l = {}, quotient by {}\n", t.w, t.lambda, t.signature);
    for (b, s) in rows {
        out.push_str(&format!("  {name}({b}) = {s}\n"));
    }
    Ok(out)
}

fn table_for<C: Coeff>(w: WeylGroupElem, lambda: &Weight<C>, fourier: bool) -> anyhow::Result<RealizationTable<C>> {
    Ok(if fourier {
        hat_pi_table(w, lambda)?
    } else {
        pi_table(w, lambda)?
    })
}

fn cmd_tables(a: &TablesArgs) -> anyhow::Result<Outcome> {
    let w = parse_w(&a.w)?;
    let lambda = match (&a.lambda, a.symbolic) {
        (Some(_), true) => bail!("--lambda and --symbolic are exclusive"),
        (Some(s), false) => parse_lambda(s)?,
        (None, _) => Lambda::Symbolic(Weight::symbolic().expect("parametric ring has symbols")),
    };
    let format = a.common.format();
    let text = match lambda {
        Lambda::Rational(l) => render_table(&table_for(w, &l, a.fourier)?, format, a.fourier)?,
        Lambda::Symbolic(l) => render_table(&table_for(w, &l, a.fourier)?, format, a.fourier)?,
    };
    Ok(Outcome::ok(text))
}

fn cmd_verify_all(a: &VerifyArgs) -> anyhow::Result<Outcome> {
    let mut cfg = SuiteConfig {
        degree_bound: a.common.degree_bound,
        depth: a.common.depth,
        ..SuiteConfig::default()
    };
    if let Some(s) = &a.lambda {
        cfg.grid = vec![parse_natural_lambda(s)?];
    }
    if let Some(b) = &a.mutate {
        cfg.mutate = Some(LieBasis::from_name(b).ok_or_else(|| anyhow!("unknown Lie basis element `{b}`"))?);
    }
    let ids: Vec<u8> = if a.criterion.is_empty() {
        (1..=9).collect()
    } else {
        a.criterion.clone()
    };
    let mut sections = Vec::new();
    for id in ids {
        sections.push(suite::criterion(id, &cfg)?);
    }
    let pass = sections.iter().all(|s| s.report.all_pass());

    if a.common.format() == Format::Json {
        let inputs = json!({
            "grid": cfg.grid,
            "degree_bound": cfg.degree_bound,
            "depth": cfg.depth,
            "mutate": cfg.mutate,
            "criteria": sections.iter().map(|s| s.id).collect::<Vec<_>>(),
        });
        let records = sections
            .iter()
            .flat_map(|s| {
                s.report.records.iter().map(|r| SuiteRow {
                    criterion: s.id,
                    title: s.title.to_string(),
                    record: r.clone(),
                })
            })
            .collect();
        return Ok(Outcome {
            text: envelope("verify-all", inputs, records)?,
            pass,
        });
    }
    let mut out = String::new();
    for s in &sections {
        let failing: Vec<&CheckRecord> = s.report.failures().collect();
        out.push_str(&format!(
            "criterion {} [{}]: {} ({} records, {} failing)\n",
            s.id,
            s.title,
            if failing.is_empty() { "PASS" } else { "FAIL" },
            s.report.len(),
            failing.len()
        ));
        for r in failing {
            out.push_str(&format!("  FAIL {} | {} | expected {} | got {}\n", r.check, r.inputs, r.expected, r.got));
        }
        for r in s.report.records.iter().filter(|r| r.pass && r.note.is_some()) {
            out.push_str(&format!("  note {} | {}: {}\n", r.check, r.inputs, r.note.as_deref().unwrap_or("")));
        }
    }
    Ok(Outcome { text: out, pass })
}

fn render_vectors(command: &str, inputs: serde_json::Value, vs: &[String], format: Format) -> anyhow::Result<String> {
    if format == Format::Json {
        let records = vs.iter().map(|v| VectorRow { vector: v.clone() }).collect();
        return envelope(command, inputs, records);
    }
    if vs.is_empty() {
        return Ok("(empty)\n".to_string());
    }
    Ok(vs.iter().map(|v| format!("{v}\n")).collect())
}

fn cmd_singular(a: &SingularArgs) -> anyhow::Result<Outcome> {
    let lambda = parse_lambda(&a.lambda)?.rational("the singular-vector solver")?;
    let bound = a.common.degree_bound;
    if a.branch {
        let kernel = span::branching_kernel(&lambda, bound)?;
        let vs: Vec<String> = kernel.iter().map(|v| v.to_string()).collect();
        let inputs = json!({
            "w": WeylGroupElem::S1,
            "lambda": lambda.to_string(),
            "signature": kernel.first().map(|v| v.signature).unwrap_or(twverma::weyl::QuotientSignature::S1).to_string(),
            "raising": ["e1"],
            "degree_bound": bound,
        });
        return Ok(Outcome::ok(render_vectors("singular", inputs, &vs, a.common.format())?));
    }
    let w = parse_w(&a.w)?;
    let mu = a.mu.as_deref().ok_or_else(|| anyhow!("--mu is required unless --branch is given"))?;
    let mu = parse_lambda(mu)?.rational("the weight mu")?;
    let spec = ModuleSpec::new(w, lambda.clone())?;
    let kernel = verma::singular_vectors(&spec, &mu, &LieBasis::RAISING, bound);
    let vs: Vec<String> = kernel.iter().map(|v| v.to_string()).collect();
    let inputs = json!({
        "w": w,
        "lambda": lambda.to_string(),
        "mu": mu.to_string(),
        "signature": spec.signature.to_string(),
        "raising": ["e1", "e2", "e12"],
        "degree_bound": bound,
    });
    Ok(Outcome::ok(render_vectors("singular", inputs, &vs, a.common.format())?))
}

fn render_report(command: &str, inputs: serde_json::Value, records: Vec<CheckRecord>, format: Format) -> anyhow::Result<Outcome> {
    let pass = records.iter().all(|r| r.pass);
    if format == Format::Json {
        return Ok(Outcome {
            text: envelope(command, inputs, records)?,
            pass,
        });
    }
    let mut out = String::new();
    for r in &records {
        out.push_str(&format!(
            "{} {} | {} | expected {} | got {}\n",
            if r.pass { "pass" } else { "FAIL" },
            r.check,
            r.inputs,
            r.expected,
            r.got
        ));
        if let Some(n) = &r.note {
            out.push_str(&format!("  note: {n}\n"));
        }
    }
    Ok(Outcome { text: out, pass })
}

fn cmd_branch(a: &BranchArgs) -> anyhow::Result<Outcome> {
    let lambda = parse_lambda(&a.lambda)?.rational("the branching solver")?;
    let bound = a.common.degree_bound;
    let mut report = span::branching_check(&lambda, bound)?;
    report.extend(span::branching_weights(&lambda, bound)?);
    let inputs = json!({ "lambda": lambda.to_string(), "degree_bound": bound });
    render_report("branch", inputs, report.records, a.common.format())
}

fn act_in<C: Coeff>(w: WeylGroupElem, lambda: &Weight<C>, a: &ActArgs) -> anyhow::Result<Outcome> {
    let word = parse_word(&a.op)?;
    let spec = ModuleSpec::new(w, lambda.clone())?;
    let v = parse_vector::<C>(&a.vector, spec.signature)?;
    let image = spec.table.apply_word(&word, &v);
    let text = if a.common.format() == Format::Json {
        let inputs = json!({
            "w": w,
            "lambda": lambda.to_string(),
            "signature": spec.signature.to_string(),
            "op": word.iter().map(|b| b.name()).collect::<Vec<_>>(),
            "vector": v.to_string(),
        });
        envelope("act", inputs, vec![VectorRow { vector: image.to_string() }])?
    } else {
        format!("{image}\n")
    };
    Ok(Outcome::ok(text))
}

fn cmd_act(a: &ActArgs) -> anyhow::Result<Outcome> {
    let w = parse_w(&a.w)?;
    match a.lambda.as_deref().map(parse_lambda).transpose()? {
        Some(Lambda::Rational(l)) => act_in(w, &l, a),
        Some(Lambda::Symbolic(l)) => act_in(w, &l, a),
        None => act_in(w, &Weight::<ParamPoly>::symbolic().expect("parametric ring has symbols"), a),
    }
}

fn character_in<C: Coeff>(w: WeylGroupElem, lambda: &Weight<C>, a: &CharacterArgs) -> anyhow::Result<Outcome> {
    let spec = ModuleSpec::new(w, lambda.clone())?;
    let ch = verma::character_truncated(&spec, a.common.depth);
    let rows: Vec<CharacterRow> = ch
        .keys()
        .zip(verma::render_character(lambda, &ch))
        .map(|(d, (weight, multiplicity))| CharacterRow {
            depth: *d,
            weight,
            multiplicity,
        })
        .collect();
    let text = if a.common.format() == Format::Json {
        let inputs = json!({ "w": w, "lambda": lambda.to_string(), "depth": a.common.depth });
        envelope("character", inputs, rows)?
    } else {
        rows.iter().map(|r| format!("{}: {}\n", r.weight, r.multiplicity)).collect()
    };
    Ok(Outcome::ok(text))
}

fn cmd_character(a: &CharacterArgs) -> anyhow::Result<Outcome> {
    let w = parse_w(&a.w)?;
    match a.lambda.as_deref().map(parse_lambda).transpose()? {
        Some(Lambda::Rational(l)) => character_in(w, &l, a),
        Some(Lambda::Symbolic(l)) => character_in(w, &l, a),
        None => character_in(w, &Weight::<ParamPoly>::symbolic().expect("parametric ring has symbols"), a),
    }
}

fn cmd_hasse(a: &HasseArgs) -> anyhow::Result<Outcome> {
    let w = parse_w(&a.w)?;
    let lambda = parse_natural_lambda(&a.lambda)?;
    let h = catalog::hasse(w, lambda)?;
    let pass = h.edges.iter().all(|e| e.pass);
    let text = match a.common.format() {
        Format::Dot => h.to_dot(),
        Format::Text => h.to_text(),
        Format::Json => {
            let inputs = json!({ "w": w, "lambda": lambda, "nodes": h.nodes });
            envelope("hasse", inputs, h.edges)?
        }
    };
    Ok(Outcome { text, pass })
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    match &cli.command {
        Command::Tables(a) => cmd_tables(a),
        Command::VerifyAll(a) => cmd_verify_all(a),
        Command::Singular(a) => cmd_singular(a),
        Command::Branch(a) => cmd_branch(a),
        Command::Act(a) => cmd_act(a),
        Command::Character(a) => cmd_character(a),
        Command::Hasse(a) => cmd_hasse(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(outcome.text.as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            if outcome.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
