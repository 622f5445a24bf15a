//! The `knotform` command line: argument parsing, job configuration and
//! rendering of every command as text or JSON.

use std::ffi::OsString;
use std::fmt::Display;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use knotform::builtins::{self, BuiltinError};
use knotform::coloring::{count_by_rank, enumerate_finite, solve_colorings, Coloring, FiniteQuandle};
use knotform::exact_algebra::{parse_laurent, Involution, Poly, QuotElem, QuotRing, QuotRingRef, Q};
use knotform::knot_diagram::{parse_diagram, KnotDiagram};
use knotform::pairing_engine::{blanchfield, field_basis, gram, trace_gram, GramForm, PsiKind};
use knotform::quandle_cocycle::{cocycle_invariant, colorings, parse_mod_matrix, phi_from_psi, AlexanderQuandle, Bilinear, CocycleError};
use knotform::representation::{parse_rep_json, ArcRepresentation, Target};
use knotform::seifert_oracle::{blanchfield_from_seifert, crosscheck, delta_from_seifert, parse_seifert, signature_shortcut, SeifertMatrix};
use knotform::signature_lab::{HermitianSpace, SignatureError};
use knotform::twisted_alexander::twisted_delta;

pub mod complex;

pub use complex::parse_complex;

/// Environment variable holding the default number of decimals for floats.
pub const PRECISION_ENV: &str = "KNOTFORM_PRECISION";
pub const DEFAULT_PRECISION: usize = 9;
const ENUMERATION_GUARD: u128 = 50_000_000;

pub const COMMANDS: [&str; 11] = [
    "color",
    "pairing",
    "blanchfield",
    "cup-product",
    "twisted-alex",
    "cg-signature",
    "seifert",
    "crosscheck",
    "quandle-invariant",
    "builtin",
    "job",
];

#[derive(Debug, Parser)]
#[command(name = "knotform", version, about = "Twisted pairings of knots computed from diagrams")]
pub struct Cli {
    /// Decimal places for floating-point output.
    #[arg(long, global = true, env = PRECISION_ENV)]
    pub precision: Option<usize>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Default, Args)]
pub struct Input {
    /// Diagram file, PD or XRL.
    #[arg(long)]
    pub diagram: Option<String>,
    /// Builtin diagram name, see `builtin list`.
    #[arg(long)]
    pub builtin: Option<String>,
    /// Representation: a JSON file or `builtin:NAME`.
    #[arg(long)]
    pub rep: Option<String>,
    /// The modulus Δ of the coefficient ring, in the representation's field.
    #[arg(long, alias = "modulus", allow_hyphen_values = true)]
    pub ring: Option<String>,
    /// Coefficient form: psi0, killing or hermitian-i.
    #[arg(long)]
    pub psi: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduced coloring module, or finite coloring counts with --quandle.
    Color {
        #[command(flatten)]
        input: Input,
        /// Count colorings by a finite Alexander quandle `F_p,t=k`.
        #[arg(long)]
        quandle: Option<String>,
    },
    /// Gram matrix of Q_ψ on the coloring basis.
    Pairing {
        #[command(flatten)]
        input: Input,
        /// Also evaluate the entries at `t=c` for a complex `c`.
        #[arg(long)]
        value_at: Option<String>,
    },
    /// Blanchfield pairing (1−t)(1+t)⁻¹·Q_ψ0 on the coloring basis.
    Blanchfield {
        #[command(flatten)]
        input: Input,
        /// Also evaluate the entries at `t=c` for a complex `c`.
        #[arg(long)]
        value_at: Option<String>,
    },
    /// Gram matrix of Tr∘Q_ψ on the basis {t^k g}.
    CupProduct {
        #[command(flatten)]
        input: Input,
    },
    /// Twisted Alexander polynomial with its reciprocality certificate.
    TwistedAlex {
        #[command(flatten)]
        input: Input,
    },
    /// Signature difference at one unit w, or a sweep of the unit circle.
    CgSignature {
        #[command(flatten)]
        input: Input,
        /// A unit complex number `a+bi`.
        #[arg(long, allow_hyphen_values = true)]
        w: Option<String>,
        /// Number of equally spaced sample angles.
        #[arg(long)]
        sweep: Option<usize>,
        /// Print `theta,value` rows instead of the table.
        #[arg(long)]
        csv: bool,
    },
    /// Alexander polynomial and Blanchfield presentations of a Seifert matrix.
    Seifert {
        /// Integer matrix file or `builtin:NAME`.
        #[arg(long)]
        matrix: String,
    },
    /// Compare the diagram route with the Seifert route.
    Crosscheck {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        matrix: String,
    },
    /// Quandle cocycle invariant of an Alexander quandle 2-cocycle.
    QuandleInvariant {
        #[command(flatten)]
        input: Input,
        /// `F_p,t=k` or `F_p,T=a,b;c,d`.
        #[arg(long)]
        quandle: String,
    },
    /// Shipped diagrams, representations and Seifert matrices.
    Builtin {
        #[command(subcommand)]
        action: BuiltinAction,
    },
    /// Run a job described by a JSON file.
    Job { file: String },
}

#[derive(Debug, Subcommand)]
pub enum BuiltinAction {
    List,
}

/// A job file. Every field but `command` is optional.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    pub command: String,
    pub diagram: Option<String>,
    pub builtin: Option<String>,
    pub rep: Option<String>,
    pub ring: Option<String>,
    pub psi: Option<String>,
    /// `text`, `json` or `csv`.
    pub format: Option<String>,
    pub precision: Option<usize>,
    pub sweep: Option<usize>,
    pub w: Option<String>,
    pub matrix: Option<String>,
    pub quandle: Option<String>,
    pub value_at: Option<String>,
}

impl JobConfig {
    pub fn validate(&self) -> Result<(), String> {
        if !COMMANDS.contains(&self.command.as_str()) || self.command == "job" {
            return Err(format!("unknown command {:?}", self.command));
        }
        if let Some(f) = &self.format {
            if !matches!(f.as_str(), "text" | "json" | "csv") {
                return Err(format!("unknown format {f:?}"));
            }
            if f == "csv" && self.command != "cg-signature" {
                return Err("csv output is only available for cg-signature".into());
            }
        }
        if self.diagram.is_some() && self.builtin.is_some() {
            return Err("give either diagram or builtin, not both".into());
        }
        Ok(())
    }

    /// The equivalent command line.
    pub fn argv(&self) -> Vec<String> {
        let mut v = vec!["knotform".to_string()];
        if self.command == "builtin" {
            v.extend(["builtin".into(), "list".into()]);
        } else {
            v.push(self.command.clone());
        }
        let mut opt = |k: &str, x: &Option<String>| {
            if let Some(x) = x {
                v.push(format!("--{k}"));
                v.push(x.clone());
            }
        };
        opt("diagram", &self.diagram);
        opt("builtin", &self.builtin);
        opt("rep", &self.rep);
        opt("ring", &self.ring);
        opt("psi", &self.psi);
        opt("w", &self.w);
        opt("matrix", &self.matrix);
        opt("quandle", &self.quandle);
        opt("value-at", &self.value_at);
        opt("sweep", &self.sweep.map(|s| s.to_string()));
        opt("precision", &self.precision.map(|s| s.to_string()));
        match self.format.as_deref() {
            Some("json") => v.push("--json".into()),
            Some("csv") => v.push("--csv".into()),
            _ => {}
        }
        v
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Fail {
    Usage(String),
    Math(String),
}

fn usage(e: impl Display) -> Fail {
    Fail::Usage(e.to_string())
}

fn math(e: impl Display) -> Fail {
    Fail::Math(e.to_string())
}

fn builtin_fail(e: BuiltinError) -> Fail {
    match e {
        BuiltinError::Unknown(_) | BuiltinError::Params(..) => usage(e),
        _ => math(e),
    }
}

/// Parse `args` (program name first) and run the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { code: 2, stdout: String::new(), stderr: text }
            } else {
                Output { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    if let Command::Job { file } = &cli.command {
        return run_job(file, &cli);
    }
    let precision = cli.precision.unwrap_or(DEFAULT_PRECISION).min(17);
    let ctx = Ctx { json: cli.json, precision };
    match execute(&cli.command, &ctx) {
        Ok(Done { text, json, code }) => {
            let stdout = if ctx.json { format!("{}\n", serde_json::to_string_pretty(&json).unwrap()) } else { text };
            Output { code, stdout, stderr: String::new() }
        }
        Err(Fail::Usage(m)) => Output { code: 2, stdout: String::new(), stderr: format!("error: {m}\n") },
        Err(Fail::Math(m)) => Output { code: 1, stdout: String::new(), stderr: format!("error: {m}\n") },
    }
}

fn run_job(file: &str, cli: &Cli) -> Output {
    let fail = |m: String| Output { code: 2, stdout: String::new(), stderr: format!("error: {m}\n") };
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => return fail(format!("{file}: {e}")),
    };
    let mut job: JobConfig = match serde_json::from_str(&text) {
        Ok(j) => j,
        Err(e) => return fail(format!("{file}: {e}")),
    };
    if let Err(m) = job.validate() {
        return fail(m);
    }
    if job.precision.is_none() {
        job.precision = cli.precision;
    }
    if cli.json && job.format.is_none() {
        job.format = Some("json".into());
    }
    run(job.argv())
}

struct Ctx {
    json: bool,
    precision: usize,
}

impl Ctx {
    fn float(&self, x: f64) -> String {
        let s = format!("{:.*}", self.precision, x);
        match s.strip_prefix('-') {
            Some(rest) if rest.chars().all(|c| c == '0' || c == '.') => rest.to_string(),
            _ => s,
        }
    }

    fn complex(&self, z: Complex64) -> String {
        let im = if z.im < 0.0 { format!("-{}i", self.float(-z.im)) } else { format!("+{}i", self.float(z.im)) };
        format!("{}{}", self.float(z.re), im)
    }

    fn round(&self, x: f64) -> f64 {
        let s = 10f64.powi(self.precision as i32);
        let r = (x * s).round() / s;
        if r == 0.0 {
            0.0
        } else {
            r
        }
    }

    fn complex_json(&self, z: Complex64) -> Value {
        json!({"re": self.round(z.re), "im": self.round(z.im)})
    }
}

struct Done {
    text: String,
    json: Value,
    code: i32,
}

fn done(text: String, json: Value) -> Result<Done, Fail> {
    Ok(Done { text, json, code: 0 })
}

fn execute(cmd: &Command, ctx: &Ctx) -> Result<Done, Fail> {
    match cmd {
        Command::Color { input, quandle } => match quandle {
            Some(q) => color_finite(input, q),
            None => color(input),
        },
        Command::Pairing { input, value_at } => pairing(input, value_at.as_deref(), false, ctx),
        Command::Blanchfield { input, value_at } => pairing(input, value_at.as_deref(), true, ctx),
        Command::CupProduct { input } => cup_product(input),
        Command::TwistedAlex { input } => twisted_alex(input, ctx),
        Command::CgSignature { input, w, sweep, csv } => cg_signature(input, w.as_deref(), *sweep, *csv, ctx),
        Command::Seifert { matrix } => seifert(matrix),
        Command::Crosscheck { input, matrix } => cross(input, matrix),
        Command::QuandleInvariant { input, quandle } => quandle_invariant(input, quandle),
        Command::Builtin { action: BuiltinAction::List } => builtin_list(),
        Command::Job { .. } => Err(usage("nested job")),
    }
}

fn with_command(name: &str, result: Value) -> Value {
    json!({"command": name, "result": result})
}

// ---------------------------------------------------------------------------
// inputs

struct Loaded {
    name: String,
    diagram: KnotDiagram,
    rep: ArcRepresentation,
    rep_name: String,
    torus: Option<Coloring>,
}

fn read_file(path: &str) -> Result<String, Fail> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))
}

fn load_diagram(input: &Input) -> Result<(String, KnotDiagram, Option<String>, Option<Coloring>), Fail> {
    match (&input.diagram, &input.builtin) {
        (Some(_), Some(_)) => Err(usage("give either --diagram or --builtin, not both")),
        (None, None) => Err(usage("a diagram is required: --diagram FILE or --builtin NAME")),
        (Some(path), None) => {
            let d = parse_diagram(&read_file(path)?).map_err(|e| usage(format!("{path}: {e}")))?;
            Ok((path.clone(), d, None, None))
        }
        (None, Some(name)) => {
            let (d, implied) = builtins::diagram(name).map_err(builtin_fail)?;
            let torus = builtins::torus_coloring(name).map_err(builtin_fail)?;
            Ok((name.clone(), d, implied, torus))
        }
    }
}

fn load(input: &Input) -> Result<Loaded, Fail> {
    let (name, diagram, implied, torus) = load_diagram(input)?;
    let rep_name = input.rep.clone().or(implied.map(|n| format!("builtin:{n}"))).unwrap_or_else(|| "builtin:abelian".into());
    let rep = match rep_name.strip_prefix("builtin:") {
        Some(b) => builtins::representation(b, &diagram).map_err(builtin_fail)?,
        None => parse_rep_json(&read_file(&rep_name)?, &diagram).map_err(math)?.2,
    };
    Ok(Loaded { name, diagram, rep, rep_name, torus })
}

fn default_psi(rep: &ArcRepresentation) -> PsiKind {
    match (rep.target(), rep.field().involution()) {
        (Target::Abelian, _) => PsiKind::Psi0,
        (_, Involution::Table(_)) => PsiKind::HermitianI,
        (_, Involution::Identity) => PsiKind::Killing,
    }
}

fn psi_of(input: &Input, rep: &ArcRepresentation) -> Result<PsiKind, Fail> {
    match &input.psi {
        Some(s) => PsiKind::parse(s).ok_or_else(|| usage(format!("unknown --psi {s:?}; expected psi0, killing or hermitian-i"))),
        None => Ok(default_psi(rep)),
    }
}

/// The ring `F[t±1]/(Δ)` and a basis of the reduced colorings over it.
struct Solved {
    ring: QuotRingRef,
    basis: Vec<Coloring>,
    free: bool,
    divisors: Option<Vec<Poly>>,
}

fn ring_for(l: &Loaded, input: &Input) -> Result<QuotRingRef, Fail> {
    match &input.ring {
        Some(text) => {
            let p = parse_laurent(l.rep.field(), text).map_err(|e| usage(format!("--ring: {e}")))?;
            QuotRing::new(&p).map_err(math)
        }
        None => {
            let td = twisted_delta(&l.diagram, &l.rep).map_err(math)?;
            QuotRing::from_poly(&td.polynomial).map_err(math)
        }
    }
}

fn solve(l: &Loaded, input: &Input) -> Result<Solved, Fail> {
    if let (Some(g), None, Target::Abelian) = (&l.torus, &input.ring, l.rep.target()) {
        let ring = g[0][0].ring().clone();
        return Ok(Solved { ring, basis: vec![g.clone()], free: true, divisors: None });
    }
    let ring = ring_for(l, input)?;
    let m = solve_colorings(&l.diagram, &l.rep, &ring).map_err(math)?;
    Ok(Solved {
        ring,
        basis: m.basis().to_vec(),
        free: m.is_free(),
        divisors: m.elementary_divisors().map(|d| d.to_vec()),
    })
}

fn generator_names(n: usize) -> Vec<String> {
    if n == 1 {
        vec!["g".into()]
    } else {
        (1..=n).map(|i| format!("g{i}")).collect()
    }
}

// ---------------------------------------------------------------------------
// commands

fn color(input: &Input) -> Result<Done, Fail> {
    let l = load(input)?;
    let s = solve(&l, input)?;
    let names = generator_names(s.basis.len());
    let arcs = l.diagram.arcs();
    let mut text = format!("diagram: {}\nrepresentation: {}\nmodulus: {}\n", l.name, l.rep_name, s.ring.modulus());
    let rank = s.free.then_some(s.basis.len());
    match rank {
        Some(r) => text.push_str(&format!("rank: {r}\n")),
        None => text.push_str(&format!("rank: not free, {} generators\n", s.basis.len())),
    }
    let mut basis_json = Vec::new();
    for (c, g) in s.basis.iter().zip(&names) {
        text.push_str(&format!("{g}:\n"));
        let mut per_arc = serde_json::Map::new();
        for (label, v) in arcs.iter().zip(c) {
            let vals: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            text.push_str(&format!("  {label} = ({})\n", vals.join(", ")));
            per_arc.insert(label.clone(), json!(vals));
        }
        basis_json.push(Value::Object(per_arc));
    }
    let divisors = s.divisors.as_ref().map(|d| d.iter().map(|p| p.to_string()).collect::<Vec<_>>());
    if let Some(d) = &divisors {
        text.push_str(&format!("elementary divisors: {}\n", d.join(", ")));
    }
    let j = json!({
        "diagram": l.name,
        "representation": l.rep_name,
        "modulus": s.ring.modulus().to_string(),
        "rank": rank,
        "generators": s.basis.len(),
        "elementary_divisors": divisors,
        "basis": basis_json,
    });
    done(text, with_command("color", j))
}

fn color_finite(input: &Input, spec: &str) -> Result<Done, Fail> {
    let l = load(input)?;
    if l.rep.target() != Target::Abelian {
        return Err(usage("finite coloring counts use the abelian representation"));
    }
    let q = AlexanderQuandle::parse(spec).map_err(usage)?;
    if q.dim() != 1 {
        return Err(usage("finite coloring counts need a scalar quandle F_p,t=k"));
    }
    let fq = FiniteQuandle::new(q.p(), q.t()[0][0]).map_err(usage)?;
    let by_rank = count_by_rank(&l.diagram, &l.rep, fq.clone()).map_err(math)?;
    let exhaustive = enumerate_finite(&l.diagram, &l.rep, fq, ENUMERATION_GUARD).map_err(math)?;
    let agree = by_rank == exhaustive;
    let text = format!(
        "diagram: {}\nquandle: {spec}\ncolorings (linear algebra): {by_rank}\ncolorings (exhaustive): {exhaustive}\nagree: {agree}\n",
        l.name
    );
    let j = json!({"diagram": l.name, "quandle": spec, "by_rank": by_rank.to_string(), "exhaustive": exhaustive.to_string(), "agree": agree});
    let mut d = done(text, with_command("color", j))?;
    if !agree {
        d.code = 1;
    }
    Ok(d)
}

fn gram_rows(g: &GramForm) -> Vec<Vec<String>> {
    (0..g.dim()).map(|i| (0..g.dim()).map(|j| g.matrix.get(i, j).to_string()).collect()).collect()
}

fn pairing(input: &Input, value_at: Option<&str>, bl: bool, ctx: &Ctx) -> Result<Done, Fail> {
    let l = load(input)?;
    if bl && l.rep.target() != Target::Abelian {
        return Err(usage("blanchfield needs the abelian representation"));
    }
    let s = solve(&l, input)?;
    let (g, label, command) = if bl {
        (blanchfield(&l.diagram, &l.rep, &s.basis).map_err(math)?, "Bl", "blanchfield")
    } else {
        let psi = psi_of(input, &l.rep)?;
        (gram(&l.diagram, &l.rep, psi, &s.basis).map_err(math)?, "Q", "pairing")
    };
    let at = match value_at {
        None => None,
        Some(v) => {
            let c = v.strip_prefix("t=").ok_or_else(|| usage("--value-at expects t=c"))?;
            Some(parse_complex(c).map_err(usage)?)
        }
    };
    let names = generator_names(s.basis.len());
    let modulus = s.ring.modulus().to_string();
    let rows = gram_rows(&g);
    let mut text = String::new();
    let wrap = |x: &str| if g.sqrt_minus_one { format!("sqrt(-1)*({x})") } else { x.to_string() };
    for i in 0..g.dim() {
        for j in 0..g.dim() {
            text.push_str(&format!("{label}({},{}) = {} mod {modulus}\n", names[i], names[j], wrap(&rows[i][j])));
        }
    }
    if g.dim() == 0 {
        text.push_str(&format!("{label} is the empty form (modulus {modulus})\n"));
    }
    let symmetric = if bl { g.is_hermitian() } else { g.is_skew_hermitian() }.map_err(math)?;
    let sym_name = if bl { "hermitian" } else { "skew_hermitian" };
    if !g.sqrt_minus_one {
        text.push_str(&format!("{}: {symmetric}\n", sym_name.replace('_', "-")));
    }
    let mut j = json!({
        "diagram": l.name,
        "representation": l.rep_name,
        "psi": g.psi.name(),
        "modulus": modulus,
        "sqrt_minus_one": g.sqrt_minus_one,
        "generators": names,
        "gram": rows,
    });
    if !g.sqrt_minus_one {
        j[sym_name] = json!(symmetric);
    }
    if let Some(c) = at {
        let m = g.eval_at(c);
        let mut vals = Vec::new();
        for i in 0..g.dim() {
            let mut row = Vec::new();
            for k in 0..g.dim() {
                let z = if g.sqrt_minus_one { Complex64::i() * m[(i, k)] } else { m[(i, k)] };
                text.push_str(&format!("{label}({},{}) at t={} = {}\n", names[i], names[k], ctx.complex(c), ctx.complex(z)));
                row.push(ctx.complex_json(z));
            }
            vals.push(row);
        }
        j["value_at"] = json!({"t": ctx.complex_json(c), "gram": vals});
    }
    done(text, with_command(command, j))
}

fn cup_product(input: &Input) -> Result<Done, Fail> {
    let l = load(input)?;
    let psi = psi_of(input, &l.rep)?;
    let s = solve(&l, input)?;
    let tf = trace_gram(&l.diagram, &l.rep, psi, &s.basis).map_err(math)?;
    let deg = s.ring.degree();
    let gens = generator_names(s.basis.len());
    let labels: Vec<String> = field_basis(&s.basis)
        .iter()
        .enumerate()
        .map(|(k, _)| {
            let (blk, e) = (k / deg.max(1), k % deg.max(1));
            match e {
                0 => gens[blk].clone(),
                1 => format!("t*{}", gens[blk]),
                _ => format!("t^{e}*{}", gens[blk]),
            }
        })
        .collect();
    let n = tf.matrix.rows();
    let rows: Vec<Vec<String>> = (0..n).map(|i| (0..n).map(|j| tf.matrix.get(i, j).to_string()).collect()).collect();
    let mut text = format!("field: {}\nmodulus: {}\n", l.rep.field().name(), s.ring.modulus());
    for i in 0..n {
        for j in 0..n {
            let v = if tf.sqrt_minus_one { format!("sqrt(-1)*({})", rows[i][j]) } else { rows[i][j].clone() };
            text.push_str(&format!("b({},{}) = {v}\n", labels[i], labels[j]));
        }
    }
    let j = json!({
        "diagram": l.name,
        "representation": l.rep_name,
        "psi": psi.name(),
        "field": l.rep.field().name(),
        "modulus": s.ring.modulus().to_string(),
        "sqrt_minus_one": tf.sqrt_minus_one,
        "basis": labels,
        "gram": rows,
    });
    done(text, with_command("cup-product", j))
}

/// Rescale so that all rational coordinates are integers with gcd 1 and the
/// leading coordinate is positive.
pub fn primitive(p: &Poly) -> Poly {
    use num_integer::Integer;
    use num_traits::{One, Signed, Zero};
    let coords: Vec<&Q> = p.coeffs().iter().flat_map(|c| c.coords()).collect();
    let mut den = num_bigint::BigInt::one();
    let mut num = num_bigint::BigInt::zero();
    for c in &coords {
        den = den.lcm(c.denom());
        num = num.gcd(c.numer());
    }
    if num.is_zero() {
        return p.clone();
    }
    let lead_negative = p.coeffs().last().and_then(|c| c.coords().iter().rev().find(|x| !x.is_zero())).map(|x| x.is_negative()).unwrap_or(false);
    let mut s = Q::new(den, num);
    if lead_negative {
        s = -s;
    }
    let f = p.coeffs()[0].field().clone();
    Poly::new(&f, p.coeffs().iter().map(|c| c.scale(&s)).collect())
}

fn twisted_alex(input: &Input, ctx: &Ctx) -> Result<Done, Fail> {
    let l = load(input)?;
    let td = twisted_delta(&l.diagram, &l.rep).map_err(math)?;
    let prim = primitive(&td.polynomial);
    let roots = QuotRing::from_poly(&td.polynomial).map_err(math)?.roots();
    let mut text = format!("field: {}\nDelta = {}\nprimitive: {}\n", l.rep.field().name(), td.polynomial, prim);
    let rec = td.reciprocal();
    match &rec {
        Some((a, n)) => text.push_str(&format!("reciprocal: Delta = a*t^N*bar(Delta) with a = {a}, N = {n}\n")),
        None => text.push_str("reciprocal: no\n"),
    }
    if td.removed.degree() != Some(0) {
        text.push_str(&format!("removed factor: {}\n", td.removed));
    }
    for r in &roots {
        text.push_str(&format!("root: {}\n", ctx.complex(*r)));
    }
    let j = json!({
        "diagram": l.name,
        "representation": l.rep_name,
        "field": l.rep.field().name(),
        "polynomial": td.polynomial.to_string(),
        "primitive": prim.to_string(),
        "minor_gcd": td.minor_gcd.to_string(),
        "removed": td.removed.to_string(),
        "reciprocal": rec.as_ref().map(|(a, n)| json!({"a": a.to_string(), "N": n})),
        "roots": roots.iter().map(|r| ctx.complex_json(*r)).collect::<Vec<_>>(),
    });
    let mut d = done(text, with_command("twisted-alex", j))?;
    if rec.is_none() {
        d.code = 1;
    }
    Ok(d)
}

fn cg_signature(input: &Input, w: Option<&str>, sweep: Option<usize>, csv: bool, ctx: &Ctx) -> Result<Done, Fail> {
    if w.is_some() && sweep.is_some() {
        return Err(usage("give either --w or --sweep"));
    }
    let l = load(input)?;
    if l.rep.target() == Target::Abelian {
        return Err(usage("cg-signature needs a nontrivial representation"));
    }
    let psi = match &input.psi {
        Some(_) => psi_of(input, &l.rep)?,
        None => PsiKind::HermitianI,
    };
    let s = solve(&l, input)?;
    let h = HermitianSpace::from_colorings(&l.diagram, &l.rep, psi, &s.ring, &s.basis).map_err(math)?;
    let lambda = h.lambda().map_err(math)?;
    if let Some(w) = w {
        let z = parse_complex(w).map_err(usage)?;
        if (z.norm() - 1.0).abs() > 1e-9 {
            return Err(usage(format!("|w| = {} is not 1", z.norm())));
        }
        let v = match h.cg_difference(z) {
            Ok(v) => Some(v),
            Err(SignatureError::NonGeneric(_)) => None,
            Err(e) => return Err(math(e)),
        };
        let shown = v.map(|v| ctx.float(v)).unwrap_or_else(|| "?".into());
        let text = format!("lambda(H,b) = {}\nw = {}\ndifference = {shown}\n", ctx.float(lambda), ctx.complex(z));
        let j = json!({"diagram": l.name, "lambda": ctx.round(lambda), "w": ctx.complex_json(z), "value": v.map(|v| ctx.round(v))});
        return done(text, with_command("cg-signature", j));
    }
    let p = h.sweep(sweep.unwrap_or(360)).map_err(math)?;
    let text = if csv {
        let mut s = String::from("theta,value\n");
        for (th, v) in &p.samples {
            s.push_str(&format!("{},{}\n", ctx.float(*th), v.map(|v| ctx.float(v)).unwrap_or_else(|| "?".into())));
        }
        s
    } else {
        let mut s = format!("lambda(H,b) = {}\nbreakpoints:", ctx.float(lambda));
        for b in &p.breakpoints {
            s.push(' ');
            s.push_str(&ctx.float(*b));
        }
        s.push('\n');
        for a in &p.arcs {
            s.push_str(&format!("({}, {}): {}{}\n", ctx.float(a.from), ctx.float(a.to), ctx.float(a.value), if a.constant { "" } else { " (not constant)" }));
        }
        s.push_str(&format!("{p}\n"));
        s
    };
    let j = json!({
        "diagram": l.name,
        "lambda": ctx.round(lambda),
        "breakpoints": p.breakpoints.iter().map(|b| ctx.round(*b)).collect::<Vec<_>>(),
        "arcs": p.arcs.iter().map(|a| json!({"from": ctx.round(a.from), "to": ctx.round(a.to), "value": ctx.round(a.value), "constant": a.constant})).collect::<Vec<_>>(),
        "samples": p.samples.iter().map(|(th, v)| json!({"theta": ctx.round(*th), "value": v.map(|v| ctx.round(v))})).collect::<Vec<_>>(),
    });
    let mut d = done(text, with_command("cg-signature", j))?;
    if p.arcs.iter().any(|a| !a.constant) {
        d.code = 1;
    }
    Ok(d)
}

fn load_seifert(spec: &str) -> Result<SeifertMatrix, Fail> {
    match spec.strip_prefix("builtin:") {
        Some(name) => builtins::seifert(name).map_err(builtin_fail),
        None => parse_seifert(&read_file(spec)?).map_err(|e| usage(format!("{spec}: {e}"))),
    }
}

fn matrix_rows(m: &knotform::exact_algebra::Matrix<QuotElem>) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect()).collect()
}

fn seifert(spec: &str) -> Result<Done, Fail> {
    let v = load_seifert(spec)?;
    let delta = delta_from_seifert(&v);
    let forms = blanchfield_from_seifert(&v).map_err(math)?;
    let sig = signature_shortcut(&v);
    let hermitian = forms.is_hermitian().map_err(math)?;
    let homology = matrix_rows(&forms.homology);
    let cohomology = matrix_rows(&forms.cohomology);
    let gram = matrix_rows(&forms.cohomology_gram);
    let mut text = format!("genus: {}\nDelta = {delta}\n", v.genus());
    let show = |title: &str, rows: &[Vec<String>], text: &mut String| {
        text.push_str(&format!("{title}:\n"));
        for r in rows {
            text.push_str(&format!("  [{}]\n", r.join(", ")));
        }
    };
    show("homology presentation", &homology, &mut text);
    show("cohomology presentation", &cohomology, &mut text);
    show("cohomology Gram", &gram, &mut text);
    text.push_str(&format!(
        "hermitian: {hermitian}\nsignature at t=-1: {}\nsignature of V+V': {}\n",
        sig.shortcut, sig.classical
    ));
    let j = json!({
        "genus": v.genus(),
        "delta": delta.to_string(),
        "homology": homology,
        "cohomology": cohomology,
        "cohomology_gram": gram,
        "hermitian": hermitian,
        "signature_shortcut": sig.shortcut,
        "classical_signature": sig.classical,
    });
    done(text, with_command("seifert", j))
}

fn cross(input: &Input, spec: &str) -> Result<Done, Fail> {
    let (name, d, _, _) = load_diagram(input)?;
    let v = load_seifert(spec)?;
    let c = crosscheck(&d, &v).map_err(math)?;
    let s = |x: &Option<QuotElem>| x.as_ref().map(|x| x.to_string());
    let mut text = format!("diagram: {name}\nmatrix: {spec}\npassed: {}\n", c.passed);
    for (k, x) in [("diagram Bl(g,g)", s(&c.diagram_value)), ("Seifert Gram", s(&c.seifert_value)), ("witness c", s(&c.witness)), ("homology witness", s(&c.homology_witness))] {
        if let Some(x) = x {
            text.push_str(&format!("{k} = {x}\n"));
        }
    }
    for m in &c.diagnostics {
        text.push_str(&format!("note: {m}\n"));
    }
    let j = json!({
        "diagram": name,
        "matrix": spec,
        "passed": c.passed,
        "diagnostics": c.diagnostics,
        "diagram_value": s(&c.diagram_value),
        "seifert_value": s(&c.seifert_value),
        "witness": s(&c.witness),
        "homology_witness": s(&c.homology_witness),
    });
    let mut out = done(text, with_command("crosscheck", j))?;
    if !c.passed {
        out.code = 1;
    }
    Ok(out)
}

fn parse_psi_bilinear(text: &str, q: &AlexanderQuandle) -> Result<Bilinear, Fail> {
    match text.trim() {
        "xy" | "x*y" => Ok(Bilinear::product()),
        t => parse_mod_matrix(t, q.p()).map(|b| Bilinear { b }).ok_or_else(|| usage(format!("--psi {t:?}: expected xy or rows a,b;c,d"))),
    }
}

fn quandle_invariant(input: &Input, spec: &str) -> Result<Done, Fail> {
    let (name, d, _, _) = load_diagram(input)?;
    let q = AlexanderQuandle::parse(spec).map_err(usage)?;
    let psi = parse_psi_bilinear(input.psi.as_deref().unwrap_or("xy"), &q)?;
    let phi = match phi_from_psi(&q, &psi) {
        Ok(phi) => phi,
        Err(e @ CocycleError::Shape(_)) => return Err(usage(e)),
        Err(e) => return Err(math(format!("{e}; phi_psi is not a quandle 2-cocycle"))),
    };
    let inv = cocycle_invariant(&d, &q, &phi, ENUMERATION_GUARD).map_err(math)?;
    let total: u128 = inv.values().sum();
    let cols = colorings(&d, &q, ENUMERATION_GUARD).map_err(math)?.len() as u128;
    let terms: Vec<String> = inv.iter().map(|(v, c)| if *v == 0 { format!("{c}") } else { format!("{c}*u^{v}") }).collect();
    let text = format!("diagram: {name}\nquandle: {spec}\ncolorings: {cols}\nI_Phi = {}\n", terms.join(" + "));
    let j = json!({
        "diagram": name,
        "quandle": spec,
        "colorings": cols.to_string(),
        "invariant": inv.iter().map(|(v, c)| (v.to_string(), json!(c.to_string()))).collect::<serde_json::Map<_, _>>(),
    });
    debug_assert_eq!(total, cols);
    done(text, with_command("quandle-invariant", j))
}

fn builtin_list() -> Result<Done, Fail> {
    let list = builtins::list();
    let w = list.iter().map(|x| x.0.len()).max().unwrap_or(0);
    let text: String = list.iter().map(|(n, d)| format!("{n:w$}  {d}\n")).collect();
    let j = json!(list.iter().map(|(n, d)| json!({"name": n, "description": d})).collect::<Vec<_>>());
    done(text, with_command("builtin list", j))
}
