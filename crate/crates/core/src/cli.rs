//! The `hecke` command line.
//!
//! Exit codes: 0 on success, 1 on a domain error, 2 on a usage error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::assumption::{RepType, TypeAssumption};
use crate::bounds::{self, BoundResult};
use crate::datasource::{self, Dataset, Weierstrass};
use crate::dirichlet::{self, Side, Theorem};
use crate::error::{Error, Result};
use crate::poles::{certificate_render, tensor_power_pole};
use crate::repring::{cg_pair, reduce, tensor_power, AuxGroup, VirtualRep};

#[derive(Debug, Parser)]
#[command(name = "hecke", version, about = "Symmetric-power pole orders and one-sided Hecke eigenvalue bounds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decompose tensor powers, Clebsch–Gordan pairs or single atoms.
    Decompose(DecomposeArgs),
    /// Pole order at s = 1 of L(s, π^{×k}) with its factor certificate.
    Poles(PolesArgs),
    /// Thresholds from the Hölder/min-max arguments.
    Bounds(BoundsArgs),
    /// Generate a normalized eigenvalue dataset as CSV.
    Generate(GenerateArgs),
    /// Count witnesses for a one-sided bound on a dataset.
    Verify(VerifyArgs),
    /// Fit the k-th moment sum against log(1/(s−1)).
    Probe(ProbeArgs),
    /// Natural and Dirichlet-weighted proportion beyond a threshold.
    Density(DensityArgs),
}

#[derive(Debug, Args)]
struct AssumptionArgs {
    /// general, tetrahedral, octahedral or dihedral.
    #[arg(long = "type", default_value = "general")]
    rep_type: RepType,
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    self_dual: bool,
    /// Order of the central character; `inf` for infinite. Defaults to 1 when self-dual.
    #[arg(long)]
    omega_order: Option<String>,
}

impl AssumptionArgs {
    fn resolve(&self) -> Result<TypeAssumption> {
        let order = match self.omega_order.as_deref() {
            None if self.self_dual => Some(1),
            None | Some("inf") => None,
            Some(s) => Some(s.parse::<u32>().map_err(|_| Error::Parse {
                input: s.into(),
                reason: "expected a positive integer or `inf`".into(),
            })?),
        };
        TypeAssumption::new(self.rep_type, self.self_dual, order)
    }
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("what").required(true).args(["tensor", "cg", "reduce"])))]
pub struct DecomposeArgs {
    /// π^{⊗K}, 1 ≤ K ≤ 4.
    #[arg(long, value_name = "K")]
    tensor: Option<u32>,
    /// Sym^A π ⊗ Sym^B π.
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    cg: Option<Vec<u32>>,
    /// Reduce one atom, e.g. `Sym4(pi)*w`.
    #[arg(long, value_name = "ATOM")]
    reduce: Option<String>,
    #[command(flatten)]
    assumption: AssumptionArgs,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
pub struct PolesArgs {
    #[arg(long)]
    k: u32,
    #[command(flatten)]
    assumption: AssumptionArgs,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BoundSide {
    Pos,
    Neg,
    Nsd,
    Weak,
    All,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[arg(long, value_enum, default_value = "all")]
    side: BoundSide,
    #[arg(long, default_value_t = 2)]
    pole4: u32,
    #[arg(long, default_value_t = 14)]
    pole8: u32,
    #[arg(long, default_value_t = 5)]
    pole6: u32,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    phi: f64,
    /// Print the derivation steps.
    #[arg(long)]
    trace: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Ec,
    Tau,
    St,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    /// y² = x³ + A·x + B.
    #[arg(long, allow_negative_numbers = true)]
    a: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    b: Option<i64>,
    /// General Weierstrass coefficients `a1,a2,a3,a4,a6`, or `11a1`.
    #[arg(long, conflicts_with_all = ["a", "b"], allow_hyphen_values = true)]
    ainvs: Option<String>,
    #[arg(long)]
    x: Option<u64>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    theorem: Theorem,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    phi: f64,
    #[arg(long, default_value_t = dirichlet::DEFAULT_EPS)]
    eps: f64,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
pub struct ProbeArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    k: u32,
    #[arg(long, value_delimiter = ',', default_value = "1.5,1.25,1.1,1.05")]
    s_grid: Vec<f64>,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
pub struct DensityArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    c: f64,
    #[arg(long, value_enum, default_value = "above")]
    side: SideArg,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    phi: f64,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SideArg {
    Above,
    Below,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Above => Side::Above,
            SideArg::Below => Side::Below,
        }
    }
}

/// Parse `argv` (including the program name), run, and return the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn print_json(out: &mut dyn Write, value: &serde_json::Value) -> Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::Io(std::io::Error::other(e)))?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn to_value<T: serde::Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn execute(command: &Command, out: &mut dyn Write) -> Result<()> {
    match command {
        Command::Decompose(a) => decompose(a, out),
        Command::Poles(a) => poles(a, out),
        Command::Bounds(a) => bounds_cmd(a, out),
        Command::Generate(a) => generate(a, out),
        Command::Verify(a) => verify(a, out),
        Command::Probe(a) => probe(a, out),
        Command::Density(a) => density(a, out),
    }
}

fn decompose(args: &DecomposeArgs, out: &mut dyn Write) -> Result<()> {
    let (label, rep): (String, VirtualRep) = if let Some(k) = args.tensor {
        (format!("pi^{k}"), tensor_power(k)?)
    } else if let Some(ab) = &args.cg {
        (format!("Sym{}(pi) ⊗ Sym{}(pi)", ab[0], ab[1]), cg_pair(ab[0], ab[1]))
    } else {
        let text = args.reduce.as_deref().expect("clap enforces one of the three");
        let t = args.assumption.resolve()?;
        let atom = AuxGroup::for_assumption(&t).parse_atom(text)?;
        (format!("{atom} [{}]", t), reduce(&atom, &t)?)
    };
    if args.json {
        return print_json(out, &json!({ "input": label, "dim": rep.dim(), "terms": rep.to_json() }));
    }
    writeln!(out, "{label} = {rep}")?;
    writeln!(out, "dim = {}", rep.dim())?;
    Ok(())
}

fn poles(args: &PolesArgs, out: &mut dyn Write) -> Result<()> {
    let t = args.assumption.resolve()?;
    let cert = tensor_power_pole(args.k, &t)?;
    if args.json {
        let mut v = cert.to_json();
        v["k"] = json!(args.k);
        v["assumption"] = json!(t.to_string());
        v["note"] = json!(cert.note);
        return print_json(out, &v);
    }
    writeln!(out, "k = {} [{t}]", args.k)?;
    writeln!(out, "{}", certificate_render(&cert))?;
    writeln!(out, "multiplicities = {:?}", cert.multiplicities())?;
    writeln!(out, "pole order = {}", cert.total_order)?;
    if let Some(note) = &cert.note {
        writeln!(out, "note: {note}")?;
    }
    Ok(())
}

fn bounds_cmd(args: &BoundsArgs, out: &mut dyn Write) -> Result<()> {
    let mut results: Vec<(&str, BoundResult)> = Vec::new();
    let all = matches!(args.side, BoundSide::All);
    if all || matches!(args.side, BoundSide::Pos) {
        results.push(("positive", bounds::positive_side(args.pole4, args.pole8)?));
    }
    if all || matches!(args.side, BoundSide::Neg) {
        results.push(("negative", bounds::negative_side(args.pole6)?));
    }
    if all || matches!(args.side, BoundSide::Weak) {
        results.push(("positive-weak", bounds::positive_side_weak()));
    }
    if all || matches!(args.side, BoundSide::Nsd) {
        results.push(("non-self-dual", bounds::non_self_dual(args.phi)?));
    }
    if args.json {
        let mut v = serde_json::Map::new();
        for (name, r) in &results {
            v.insert(name.to_string(), to_value(r));
        }
        if all {
            v.insert("reference".into(), to_value(&bounds::reference_constants()));
        }
        return print_json(out, &serde_json::Value::Object(v));
    }
    for (name, r) in &results {
        let sign = if *name == "negative" { "a_p < -" } else { "> " };
        write!(out, "{name:<14} {sign}{:.12}", r.constant)?;
        if let Some(d) = r.optimizer {
            write!(out, "  (d* = {d:.12})")?;
        }
        writeln!(out)?;
        if args.trace {
            for line in &r.trace {
                writeln!(out, "    {line}")?;
            }
        }
    }
    if all {
        for (name, c) in bounds::reference_constants() {
            writeln!(out, "{:<14} > {c:.12}  (reference)", name)?;
        }
    }
    Ok(())
}

fn parse_ainvs(text: &str) -> Result<Weierstrass> {
    if text.eq_ignore_ascii_case("11a1") {
        return Ok(Weierstrass::curve_11a1());
    }
    let parsed: Vec<i64> = text
        .split(',')
        .map(|s| s.trim().parse::<i64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| Error::Parse { input: text.into(), reason: e.to_string() })?;
    match parsed[..] {
        [a1, a2, a3, a4, a6] => Ok(Weierstrass { a1, a2, a3, a4, a6 }),
        _ => Err(Error::Parse { input: text.into(), reason: "expected five coefficients".into() }),
    }
}

fn required<T: Copy>(v: Option<T>, flag: &str) -> Result<T> {
    v.ok_or_else(|| Error::InvalidArgument(format!("{flag} is required for this kind")))
}

fn generate(args: &GenerateArgs, out: &mut dyn Write) -> Result<()> {
    let ds: Dataset = match args.kind {
        Kind::Ec => {
            let x = required(args.x, "--x")?;
            match &args.ainvs {
                Some(text) => datasource::ec_ap_curve(&parse_ainvs(text)?, x)?,
                None => datasource::ec_ap(required(args.a, "--a")?, required(args.b, "--b")?, x)?,
            }
        }
        Kind::Tau => datasource::tau_ap(required(args.x, "--x")?)?,
        Kind::St => datasource::sato_tate_sample(required(args.n, "--n")?, args.seed)?,
    };
    match &args.output {
        Some(path) => datasource::write_csv(path, &ds),
        None => datasource::write_csv_to(out, &ds),
    }
}

fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<()> {
    let ds = datasource::read_csv(&args.input)?;
    let report = dirichlet::verify_theorem(&ds, args.theorem, args.phi, args.eps)?;
    if args.json {
        return print_json(out, &to_value(&report));
    }
    writeln!(out, "{:?} on {} ({} primes, X = {})", report.theorem, ds.header.source, report.total, ds.header.x)?;
    for side in &report.sides {
        let op = if side.side == Side::Above { ">" } else { "<" };
        writeln!(out, "  #{{p : value {op} {:.6}}} = {} (need {})", side.threshold, side.count, report.required)?;
        let w: Vec<String> = side.witnesses.iter().map(|(p, v)| format!("{p}:{v:.4}")).collect();
        writeln!(out, "  witnesses: {}", w.join(" "))?;
    }
    writeln!(out, "{}", if report.passed { "PASS" } else { "FAIL" })?;
    Ok(())
}

fn probe(args: &ProbeArgs, out: &mut dyn Write) -> Result<()> {
    let ds = datasource::read_csv(&args.input)?;
    let fit = dirichlet::pole_order_fit(&ds.records, args.k, &args.s_grid)?;
    let s0 = dirichlet::operating_point(ds.header.x);
    let ratio = dirichlet::normalized_ratio(&ds.records, args.k, s0, 0.0)?;
    if args.json {
        let mut v = to_value(&fit);
        v["operating_point"] = json!({ "s": s0, "normalized_ratio": ratio });
        return print_json(out, &v);
    }
    writeln!(out, "k = {} on {} ({} primes)", args.k, ds.header.source, ds.records.len())?;
    for (s, l, sum) in &fit.points {
        writeln!(out, "  s = {s:<6} ℓ(s) = {l:.6}  sum = {sum:.6}")?;
    }
    writeln!(out, "slope = {:.6}  intercept = {:.6}", fit.slope, fit.intercept)?;
    writeln!(out, "ratio at s = 1 + 1/log X = {s0:.6}: {ratio:.6}")?;
    Ok(())
}

fn density(args: &DensityArgs, out: &mut dyn Write) -> Result<()> {
    let ds = datasource::read_csv(&args.input)?;
    let r = dirichlet::density_profile(&ds, args.c, args.side.into(), args.phi)?;
    if args.json {
        return print_json(out, &to_value(&r));
    }
    writeln!(
        out,
        "{:?} {}: {} of {} primes, natural {:.6}, Dirichlet-weighted {:.6} at s = {:.6}",
        r.side, r.threshold, r.count, r.total, r.natural_proportion, r.dirichlet_weighted, r.s_used
    )?;
    Ok(())
}
