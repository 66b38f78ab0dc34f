//! Command-line front end for `gtcat-core`.
//!
//! [`run`] parses an argument vector, executes the command and returns the
//! exit code together with everything that would be printed, so the whole
//! tool can be driven in-process.
//!
//! Exit codes: `0` success, `1` domain error (bad input, no solution, …),
//! `2` internal-consistency failure (a proved identity did not hold), `64`
//! usage error.

use std::ffi::OsString;
use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gtcat_core::category::{
    enumerate_module_categories, fiber_functors, module_cat_simples, projective_cover_data,
    simple_dual, unimodularity_probe, validate_category, CategorySpec, ModuleCatSpec,
};
use gtcat_core::center::{center_blocks, center_dual, center_projectives, cross_check_via_double, CenterSpec};
use gtcat_core::cochain::{coboundary, is_cocycle, restrict, solve_d2_equals, Cochain};
use gtcat_core::group::{conjugacy_data, describe_subgroup, double_cosets, enumerate_subgroups, FiniteGroup};
use gtcat_core::{Options, DEFAULT_SEED};

pub mod json;
pub mod parse;
pub mod render;
pub mod selftest;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_CONSISTENCY: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    Usage(String),
    Domain(String),
    Consistency(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Domain(m) => write!(f, "error: {m}"),
            CliError::Consistency(m) => write!(f, "internal consistency failure (please report): {m}"),
        }
    }
}

impl From<gtcat_core::Error> for CliError {
    fn from(e: gtcat_core::Error) -> Self {
        if e.is_consistency() {
            CliError::Consistency(e.to_string())
        } else {
            CliError::Domain(e.to_string())
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Domain(_) => EXIT_DOMAIN,
            CliError::Consistency(_) => EXIT_CONSISTENCY,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "gtcat", version, about = "Simples, duals and projective covers of group-theoretical categories and twisted doubles")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
struct GlobalArgs {
    /// Seed for every randomized routine (decimal or 0x-hex).
    #[arg(long, global = true, default_value_t = DEFAULT_SEED, value_parser = parse_seed)]
    seed: u64,
    /// Tolerance of the complex irrep engine.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,
    /// Largest group accepted from presets and files.
    #[arg(long, global = true, default_value_t = gtcat_core::group::DEFAULT_ORDER_BOUND)]
    max_group_order: usize,
    /// Largest group whose subgroups are enumerated.
    #[arg(long, global = true, default_value_t = gtcat_core::group::DEFAULT_ENUMERATION_BOUND)]
    max_enumeration_order: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Worker threads for block-parallel work.
    #[arg(long, global = true, env = "GTCAT_THREADS")]
    threads: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Groups, subgroups, double cosets and conjugacy classes.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Cocycle checks, coboundaries and solving dψ = ω|_H.
    #[command(subcommand)]
    Cochain(CochainCmd),
    /// The category C(G, ω, H, ψ) and its module categories.
    #[command(subcommand)]
    Category(CategoryCmd),
    /// The center Z(G, ω).
    #[command(subcommand)]
    Center(CenterCmd),
    /// Runs the built-in invariant suites.
    Selftest {
        #[arg(long, conflicts_with = "full")]
        quick: bool,
        #[arg(long)]
        full: bool,
    },
}

#[derive(Debug, Args)]
struct GroupArg {
    /// `preset:sym:3`, `preset:cyclic:2xcyclic:2`, `file:g.json`, …
    #[arg(long)]
    group: String,
}

#[derive(Debug, Subcommand)]
enum GroupCmd {
    /// Prints a preset group as group JSON.
    Preset(GroupArg),
    /// Loads and validates a group JSON file.
    Load {
        #[arg(long)]
        file: String,
    },
    Subgroups(GroupArg),
    DoubleCosets {
        #[command(flatten)]
        g: GroupArg,
        #[arg(long = "H", default_value = "trivial")]
        h: String,
        #[arg(long = "K", default_value = "trivial")]
        k: String,
    },
    Classes(GroupArg),
}

#[derive(Debug, Subcommand)]
enum CochainCmd {
    /// Checks the cocycle condition, reporting a failing tuple.
    Verify {
        #[command(flatten)]
        g: GroupArg,
        /// `trivial:<degree>`, `preset:n:q` or `file:c.json`.
        #[arg(long)]
        cochain: String,
    },
    Coboundary {
        #[command(flatten)]
        g: GroupArg,
        #[arg(long)]
        cochain: String,
    },
    /// Solves dψ = ω|_H.
    Solve {
        #[command(flatten)]
        g: GroupArg,
        #[arg(long, default_value = "trivial")]
        omega: String,
        #[arg(long = "H", default_value = "whole")]
        h: String,
        /// Working modulus (default `|H|` times the modulus of ω).
        #[arg(long)]
        modulus: Option<u64>,
    },
    /// Representatives of H²(H, C^×) found at the working modulus.
    H2 {
        #[command(flatten)]
        g: GroupArg,
        #[arg(long = "H", default_value = "whole")]
        h: String,
        #[arg(long)]
        modulus: Option<u64>,
    },
    /// The 3-cocycle on Z/n with exponent q·a·n·⌊(b+c)/n⌋ modulo n².
    PresetOmega {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: usize,
    },
}

#[derive(Debug, Args)]
struct CategoryArgs {
    #[arg(long, required_unless_present = "bundle")]
    group: Option<String>,
    #[arg(long, default_value = "trivial")]
    omega: String,
    #[arg(long = "H", default_value = "trivial")]
    h: String,
    /// `trivial`, `solve`, `solve:i` or `file:psi.json`.
    #[arg(long, default_value = "trivial")]
    psi: String,
    /// A category JSON bundle replacing --group/--omega/--H/--psi.
    #[arg(long, conflicts_with = "group")]
    bundle: Option<String>,
    /// Characteristic (0 or a prime).
    #[arg(long = "char", default_value_t = 0)]
    characteristic: u64,
    /// Include irrep matrices in the output.
    #[arg(long)]
    with_matrices: bool,
}

#[derive(Debug, Subcommand)]
enum CategoryCmd {
    Simples(CategoryArgs),
    Projectives(CategoryArgs),
    /// The duality map on simples.
    Dual(CategoryArgs),
    FiberFunctors(CategoryArgs),
    /// Without --K: all module categories of Coh(G, ω) up to equivalence.
    /// With --K: the simples of M((H, ψ), (K, η)).
    ModuleCats {
        #[command(flatten)]
        cat: CategoryArgs,
        #[arg(long = "K")]
        k: Option<String>,
        #[arg(long, default_value = "trivial")]
        eta: String,
    },
    /// Compares the projective covers of the unit and of its dual.
    Unimodularity(CategoryArgs),
}

#[derive(Debug, Args)]
struct CenterArgs {
    #[arg(long)]
    group: String,
    #[arg(long, default_value = "trivial")]
    omega: String,
    #[arg(long = "char", default_value_t = 0)]
    characteristic: u64,
    #[arg(long)]
    with_matrices: bool,
}

#[derive(Debug, Subcommand)]
enum CenterCmd {
    Blocks(CenterArgs),
    Simples(CenterArgs),
    Projectives(CenterArgs),
    CrossCheck(CenterArgs),
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
                }
                _ => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text },
            };
        }
    };
    let result = match cli.global.threads {
        Some(0) => Err(CliError::Usage("--threads must be positive".into())),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| execute(&cli)),
            Err(e) => Err(CliError::Domain(format!("cannot start thread pool: {e}"))),
        },
        None => execute(&cli),
    };
    match result {
        Ok((value, code)) => {
            let text = match cli.global.format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&value).expect("JSON values serialize");
                    s.push('\n');
                    s
                }
                Format::Table => render::table(&value),
            };
            match &cli.global.output {
                Some(path) => match std::fs::write(path, &text) {
                    Ok(()) => Outcome { code, stdout: String::new(), stderr: String::new() },
                    Err(e) => Outcome {
                        code: EXIT_DOMAIN,
                        stdout: String::new(),
                        stderr: format!("error: cannot write {}: {e}\n", path.display()),
                    },
                },
                None => Outcome { code, stdout: text, stderr: String::new() },
            }
        }
        Err(e) => {
            let mut stderr = format!("{e}\n");
            if matches!(e, CliError::Usage(_)) {
                stderr.push_str("run `gtcat --help` for the command grammar\n");
            }
            Outcome { code: e.exit_code(), stdout: String::new(), stderr }
        }
    }
}

fn options(g: &GlobalArgs) -> Result<Options, CliError> {
    if !(g.tol > 0.0) {
        return Err(CliError::Usage("--tol must be positive".into()));
    }
    if g.max_group_order == 0 || g.max_enumeration_order == 0 {
        return Err(CliError::Usage("order bounds must be positive".into()));
    }
    Ok(Options { seed: g.seed, tol: g.tol, max_enumeration_order: g.max_enumeration_order, ..Options::default() })
}

type Output = Result<(Value, i32), CliError>;

fn ok(v: Value) -> Output {
    Ok((v, EXIT_OK))
}

fn execute(cli: &Cli) -> Output {
    let opts = options(&cli.global)?;
    let bound = cli.global.max_group_order;
    match &cli.command {
        Command::Group(cmd) => group_cmd(cmd, bound, &opts),
        Command::Cochain(cmd) => cochain_cmd(cmd, bound),
        Command::Category(cmd) => category_cmd(cmd, bound, &opts),
        Command::Center(cmd) => center_cmd(cmd, bound, &opts),
        Command::Selftest { full, .. } => {
            let report = selftest::run(&opts, *full);
            let code = if report.passed() { EXIT_OK } else { EXIT_CONSISTENCY };
            Ok((report.to_json(), code))
        }
    }
}

fn group_cmd(cmd: &GroupCmd, bound: usize, opts: &Options) -> Output {
    match cmd {
        GroupCmd::Preset(a) => ok(json::group_to_json(&parse::group(&a.group, bound)?)),
        GroupCmd::Load { file } => {
            let g = parse::group(&format!("file:{file}"), bound)?;
            ok(json!({ "group": json::group_to_json(&g), "abelian": g.is_abelian(), "exponent": g.exponent() }))
        }
        GroupCmd::Subgroups(a) => {
            let g = parse::group(&a.group, bound)?;
            let subs = enumerate_subgroups(&g, opts.max_enumeration_order)?;
            ok(json!({
                "count": subs.len(),
                "subgroups": subs.iter().map(|s| json!({
                    "elements": json::subgroup_to_json(s),
                    "order": s.order(),
                    "normal": s.is_normal(&g),
                    "labels": describe_subgroup(&g, s),
                })).collect::<Vec<_>>(),
            }))
        }
        GroupCmd::DoubleCosets { g: a, h, k } => {
            let g = parse::group(&a.group, bound)?;
            let (h, k) = (parse::subgroup(&g, h)?, parse::subgroup(&g, k)?);
            let cosets = double_cosets(&g, &h, &k)?;
            ok(json!({
                "H": json::subgroup_to_json(&h),
                "K": json::subgroup_to_json(&k),
                "double_cosets": cosets.iter().map(|z| json::double_coset_to_json(&g, z)).collect::<Vec<_>>(),
            }))
        }
        GroupCmd::Classes(a) => {
            let g = parse::group(&a.group, bound)?;
            let classes = conjugacy_data(&g);
            ok(json!({ "classes": classes.iter().map(|c| json::class_to_json(&g, c)).collect::<Vec<_>>() }))
        }
    }
}

fn default_modulus(omega: &Cochain, order: usize) -> u64 {
    omega.modulus() * order as u64
}

fn cochain_cmd(cmd: &CochainCmd, bound: usize) -> Output {
    match cmd {
        CochainCmd::Verify { g: a, cochain } => {
            let g = parse::group(&a.group, bound)?;
            let c = parse::cochain(&g, cochain)?;
            let cert = is_cocycle(&g, &c)?;
            let witness = cert
                .witness
                .as_ref()
                .map(|w| json!({ "indices": w, "labels": w.iter().map(|&x| g.label(x)).collect::<Vec<_>>() }));
            let code = if cert.is_cocycle { EXIT_OK } else { EXIT_DOMAIN };
            Ok((json!({ "degree": cert.degree, "is_cocycle": cert.is_cocycle, "witness": witness }), code))
        }
        CochainCmd::Coboundary { g: a, cochain } => {
            let g = parse::group(&a.group, bound)?;
            let c = parse::cochain(&g, cochain)?;
            ok(json::cochain_to_json(&coboundary(&g, &c)?))
        }
        CochainCmd::Solve { g: a, omega, h, modulus } => {
            let g = parse::group(&a.group, bound)?;
            let omega = parse::omega(&g, omega)?;
            let h = parse::subgroup(&g, h)?;
            let target = restrict(&g, &omega, &h)?;
            let m = modulus.unwrap_or_else(|| default_modulus(&omega, h.order()));
            match solve_d2_equals(&h.to_group(&g)?, &target, m)? {
                None => Ok((json!({ "H": json::subgroup_to_json(&h), "solvable": false }), EXIT_DOMAIN)),
                Some(sol) => ok(json!({
                    "H": json::subgroup_to_json(&h),
                    "solvable": true,
                    "modulus": sol.modulus,
                    "particular": json::cochain_to_json(&sol.particular),
                    "h2_transversal": sol.h2_transversal.iter().map(json::cochain_to_json).collect::<Vec<_>>(),
                })),
            }
        }
        CochainCmd::H2 { g: a, h, modulus } => {
            let g = parse::group(&a.group, bound)?;
            let h = parse::subgroup(&g, h)?;
            let hg = h.to_group(&g)?;
            let m = modulus.unwrap_or(h.order() as u64);
            let zero = Cochain::zero(3, h.order(), 1);
            let sol = solve_d2_equals(&hg, &zero, m)?
                .ok_or_else(|| CliError::Consistency("the zero target has no solution".into()))?;
            ok(json!({
                "H": json::subgroup_to_json(&h),
                "modulus": sol.modulus,
                "order": sol.h2_transversal.len(),
                "representatives": sol.h2_transversal.iter().map(json::cochain_to_json).collect::<Vec<_>>(),
            }))
        }
        CochainCmd::PresetOmega { n, q } => ok(json::cochain_to_json(&gtcat_core::cochain::preset_omega_cyclic(*n, *q)?)),
    }
}

fn category_spec(a: &CategoryArgs, bound: usize) -> Result<CategorySpec, CliError> {
    if let Some(path) = &a.bundle {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Domain(format!("cannot read {path}: {e}")))?;
        let v: Value = serde_json::from_str(&text).map_err(|e| CliError::Domain(format!("{path}: {e}")))?;
        let spec = json::bundle_from_json(&v)?;
        if spec.group().order() > bound {
            return Err(gtcat_core::Error::OrderTooLarge { order: spec.group().order(), bound }.into());
        }
        return Ok(spec);
    }
    let gs = a.group.as_deref().ok_or_else(|| CliError::Usage("--group or --bundle is required".into()))?;
    let g = parse::group(gs, bound)?;
    let omega = parse::omega(&g, &a.omega)?;
    let h = parse::subgroup(&g, &a.h)?;
    let psi = parse::psi(&g, &omega, &h, &a.psi)?;
    Ok(validate_category(&g, &omega, &h, &psi)?)
}

fn with_spec(spec: &CategorySpec, mut v: Value) -> Value {
    v["spec"] = json::bundle_to_json(spec);
    v
}

fn pairs_to_json(g: &FiniteGroup, pairs: &[gtcat_core::category::ModulePair]) -> Value {
    json!(pairs
        .iter()
        .map(|p| json!({
            "K": json::subgroup_to_json(&p.h),
            "K_labels": describe_subgroup(g, &p.h),
            "eta": json::cochain_to_json(&p.psi),
        }))
        .collect::<Vec<_>>())
}

fn category_cmd(cmd: &CategoryCmd, bound: usize, opts: &Options) -> Output {
    match cmd {
        CategoryCmd::Simples(a) => {
            let spec = category_spec(a, bound)?;
            let cls = projective_cover_data(&spec, a.characteristic, opts)?;
            ok(with_spec(&spec, json::classification_to_json(spec.group(), &cls, a.characteristic != 0, a.with_matrices)))
        }
        CategoryCmd::Projectives(a) => {
            let spec = category_spec(a, bound)?;
            let cls = projective_cover_data(&spec, a.characteristic, opts)?;
            ok(with_spec(&spec, json::classification_to_json(spec.group(), &cls, true, a.with_matrices)))
        }
        CategoryCmd::Dual(a) => {
            let spec = category_spec(a, bound)?;
            let cls = projective_cover_data(&spec, a.characteristic, opts)?;
            let duals = (0..cls.rank()).map(|i| simple_dual(&spec, &cls, i)).collect::<Result<Vec<_>, _>>()?;
            let mut v = json::classification_to_json(spec.group(), &cls, a.characteristic != 0, a.with_matrices);
            v["duals"] = json!(duals);
            ok(with_spec(&spec, v))
        }
        CategoryCmd::FiberFunctors(a) => {
            let spec = category_spec(a, bound)?;
            let ff = fiber_functors(&spec, opts)?;
            ok(with_spec(&spec, json!({ "count": ff.len(), "fiber_functors": pairs_to_json(spec.group(), &ff) })))
        }
        CategoryCmd::ModuleCats { cat, k, eta } => {
            let spec = category_spec(cat, bound)?;
            let g = spec.group();
            match k {
                None => {
                    let pairs = enumerate_module_categories(g, spec.omega(), opts)?;
                    ok(with_spec(&spec, json!({ "count": pairs.len(), "module_categories": pairs_to_json(g, &pairs) })))
                }
                Some(k) => {
                    let k = parse::subgroup(g, k)?;
                    let eta = parse::psi(g, spec.omega(), &k, eta)?;
                    let mspec = ModuleCatSpec::new(&spec, &k, &eta)?;
                    let cls = module_cat_simples(&mspec, opts)?;
                    let mut v = json::classification_to_json(g, &cls, false, cat.with_matrices);
                    v["K"] = json::subgroup_to_json(&k);
                    v["eta"] = json::cochain_to_json(&eta);
                    ok(with_spec(&spec, v))
                }
            }
        }
        CategoryCmd::Unimodularity(a) => {
            let spec = category_spec(a, bound)?;
            let r = unimodularity_probe(&spec, a.characteristic, opts)?;
            ok(with_spec(
                &spec,
                json!({
                    "characteristic": r.characteristic,
                    "unit": r.unit,
                    "dual_of_unit": r.dual_of_unit,
                    "unit_pcover_fpdim": r.unit_pcover_fpdim,
                    "dual_pcover_fpdim": r.dual_pcover_fpdim,
                    "consistent": r.consistent,
                }),
            ))
        }
    }
}

fn center_cmd(cmd: &CenterCmd, bound: usize, opts: &Options) -> Output {
    let a = match cmd {
        CenterCmd::Blocks(a) | CenterCmd::Simples(a) | CenterCmd::Projectives(a) | CenterCmd::CrossCheck(a) => a,
    };
    let g = parse::group(&a.group, bound)?;
    let omega = parse::omega(&g, &a.omega)?;
    let spec = CenterSpec::new(&g, &omega)?;
    let mut v = match cmd {
        CenterCmd::Blocks(_) => {
            if a.characteristic == 0 {
                let blocks = center_blocks(&spec, opts)?;
                json!({ "blocks": blocks.iter().map(|b| {
                    let mut v = json::class_to_json(&g, &b.class);
                    v["cocycle"] = json::cochain_to_json(&b.cocycle);
                    v["irrep_dims"] = json!(b.report.dimensions());
                    v
                }).collect::<Vec<_>>() })
            } else {
                let cls = center_projectives(&spec, a.characteristic, opts)?;
                json!({ "blocks": json::center_to_json(&g, &cls, true, a.with_matrices)["blocks"].clone() })
            }
        }
        CenterCmd::Simples(_) => {
            let cls = center_projectives(&spec, a.characteristic, opts)?;
            let mut v = json::center_to_json(&g, &cls, a.characteristic != 0, a.with_matrices);
            if a.characteristic == 0 {
                let duals = (0..cls.rank()).map(|i| center_dual(&spec, &cls, i)).collect::<Result<Vec<_>, _>>()?;
                v["duals"] = json!(duals);
            }
            v
        }
        CenterCmd::Projectives(_) => {
            let cls = center_projectives(&spec, a.characteristic, opts)?;
            json::center_to_json(&g, &cls, true, a.with_matrices)
        }
        CenterCmd::CrossCheck(_) => {
            let r = cross_check_via_double(&spec, opts)?;
            let v = json::cross_check_to_json(&g, &r);
            if !r.passed() {
                return Ok((v, EXIT_CONSISTENCY));
            }
            v
        }
    };
    v["group"] = json::group_to_json(&g);
    v["omega"] = json::cochain_to_json(&omega);
    ok(v)
}
