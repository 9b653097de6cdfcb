//! Command-line front end for the `f2alg` library.
//!
//! Output is byte-deterministic for a fixed invocation: tables use fixed
//! formatting, CSV is comma-separated with no quoting (every field is a
//! number or a bare identifier), and JSON keys keep a fixed order (struct
//! declaration order; numeric map keys ascend). Exit codes: 0 success,
//! 1 parameter or parse error, 2 resource guard, 3 verification failure.

mod verify;

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use f2alg::bounds::{all_bounds, best_bound, BoundKind, BoundQuery, BoundResult};
use f2alg::ideal::{
    expand_q, ideal_kernel_in_degree, in_truncation_ideal, monomial_generation_check, v_ctx,
    QPolynomial,
};
use f2alg::invariants::{dickson_upper_formula, expand_k_to_x, mui_h, restriction_v, Basis, BasisPoly};
use f2alg::parity::{binom_parity, key_condition, KeyQuery};
use f2alg::sw::{component, dual_image, top_nonzero_degree, witness_coefficient};

#[derive(Parser)]
#[command(name = "f2alg", version, about = "Exact mod-2 invariant-theory calculators")]
struct Cli {
    /// Largest number of live terms a polynomial operation may hold.
    #[arg(long, global = true, value_name = "N")]
    max_terms: Option<usize>,
    /// Largest number of rows a table sweep may emit.
    #[arg(long, global = true, value_name = "N", default_value_t = 100_000)]
    max_grid: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    X,
    K,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    KRegular,
    LSkew,
    Combined,
    ComplexKRegular,
    ComplexLSkew,
}

impl KindArg {
    fn kind(self) -> BoundKind {
        match self {
            KindArg::KRegular => BoundKind::KRegular,
            KindArg::LSkew => BoundKind::LSkew,
            KindArg::Combined => BoundKind::Combined,
            KindArg::ComplexKRegular => BoundKind::ComplexKRegular,
            KindArg::ComplexLSkew => BoundKind::ComplexLSkew,
        }
    }

    fn name(self) -> &'static str {
        match self {
            KindArg::KRegular => "k-regular",
            KindArg::LSkew => "l-skew",
            KindArg::Combined => "combined",
            KindArg::ComplexKRegular => "complex-k-regular",
            KindArg::ComplexLSkew => "complex-l-skew",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Dickson invariant d_{m,r} in the triangular (k) or elementary (x) basis.
    Dickson {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        r: u32,
        #[arg(long, value_enum, default_value = "k")]
        basis: BasisArg,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Triangular-subgroup generator h_i in the x basis.
    Mui {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        i: u32,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Restriction image of d_{m,r} along the diagonal subgroup (y basis).
    ResV {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        r: u32,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Dual class of the power-fold sum in the truncated V ring.
    DualSw {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        power: u64,
        /// Restrict the component listing to a single degree.
        #[arg(long)]
        degree: Option<u64>,
        /// Report the coefficient of this monomial (e.g. "V1*V2^3").
        #[arg(long)]
        witness: Option<String>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Truncation-ideal queries: membership, kernel slices, generation check.
    Ideal {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u32,
        #[arg(long, default_value_t = 12)]
        max_degree: u64,
        /// Test whether the ideal is generated by its vanishing monomials.
        #[arg(long)]
        check_monomial_generation: bool,
        /// Test membership of one polynomial in Q0..Q{n-1} (e.g. "Q0^2 + Q1^3").
        #[arg(long)]
        member: Option<String>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Key-condition parity for a twist and multiplicity vector.
    Key {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, allow_hyphen_values = true)]
        ell: i64,
        /// Comma-separated multiplicities r1,...,rm.
        #[arg(long)]
        r: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Binomial coefficient parity C(a, b) mod 2 with integer a.
    Binom2 {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long)]
        b: u64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Largest excluded target dimension for an embedding kind.
    Bounds {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        ell: Option<u64>,
        /// List every applicable case instead of the best one.
        #[arg(long)]
        all_theorems: bool,
        /// Sweep d and the multiplicity: "dmax,multmax" (combined: fix --ell).
        #[arg(long, value_name = "DMAX,MULTMAX")]
        table: Option<String>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Homology dimensions of the unordered configuration space of R^d.
    Homdim {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        k: u64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Planar homology dimensions via the weighted multiset count.
    Fuks {
        #[arg(long)]
        n: u64,
        /// Single homological degree; omit for the full vector.
        #[arg(long)]
        k: Option<u64>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Degree series of the product-decomposition basis, split by part.
    PeSeries {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        m: u32,
        /// Show the subalgebra/ideal split in the table output.
        #[arg(long)]
        split: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Run the golden verification suite (exit 3 on any failure).
    VerifyPaper {
        /// Only run checks whose section starts with this prefix (e.g. "4.1").
        #[arg(long)]
        section: Option<String>,
        /// Read golden files from this directory instead of the built-in copies.
        #[arg(long)]
        golden_dir: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

enum CliError {
    Parameter(String),
    Resource(String),
    Verification(String),
}

impl From<f2alg::Error> for CliError {
    fn from(e: f2alg::Error) -> Self {
        match e {
            f2alg::Error::Parameter(m) | f2alg::Error::Parse(m) => CliError::Parameter(m),
            f2alg::Error::Resource(m) => CliError::Resource(m),
        }
    }
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Parameter(_) => 1,
            CliError::Resource(_) => 2,
            CliError::Verification(_) => 3,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Parameter(m) => format!("parameter error: {m}"),
            CliError::Resource(m) => format!("resource guard: {m}"),
            CliError::Verification(m) => format!("verification failed: {m}"),
        }
    }
}

fn parameter(msg: impl Into<String>) -> CliError {
    CliError::Parameter(msg.into())
}

fn main() {
    // Die quietly when the read end of a pipe goes away (e.g. `... | head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(real_main());
}

fn real_main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            eprint!("{e}");
            return 1;
        }
    };
    if let Some(n) = cli.max_terms {
        f2alg::poly::set_default_term_guard(n);
    }
    match run(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("{}", e.message());
            e.code()
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let max_grid = cli.max_grid;
    match cli.command {
        Command::Dickson { m, r, basis, format } => cmd_dickson(m, r, basis, format),
        Command::Mui { m, i, format } => cmd_mui(m, i, format),
        Command::ResV { m, r, format } => cmd_res_v(m, r, format),
        Command::DualSw { d, m, power, degree, witness, format } => {
            cmd_dual_sw(d, m, power, degree, witness, format)
        }
        Command::Ideal { n, q, max_degree, check_monomial_generation, member, format } => {
            cmd_ideal(n, q, max_degree, check_monomial_generation, member, format)
        }
        Command::Key { d, m, ell, r, format } => cmd_key(d, m, ell, &r, format),
        Command::Binom2 { a, b, format } => cmd_binom2(a, b, format),
        Command::Bounds { kind, d, k, ell, all_theorems, table, format } => {
            cmd_bounds(max_grid, kind, d, k, ell, all_theorems, table, format)
        }
        Command::Homdim { d, k, format } => cmd_homdim(d, k, format),
        Command::Fuks { n, k, format } => cmd_fuks(n, k, format),
        Command::PeSeries { d, m, split, format } => cmd_pe_series(d, m, split, format),
        Command::VerifyPaper { section, golden_dir, format } => {
            cmd_verify_paper(section.as_deref(), golden_dir.as_deref(), format)
        }
    }
}

fn emit_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("output is serializable"));
}

/// Splits a canonical rendering into its monomial strings; zero has none.
fn terms_list(rendered: &str) -> Vec<String> {
    if rendered == "0" {
        Vec::new()
    } else {
        rendered.split(" + ").map(str::to_string).collect()
    }
}

fn no_csv() -> CliError {
    parameter("csv is not defined for this output; use table or json")
}

#[derive(Serialize)]
struct PolyOut {
    basis: &'static str,
    m: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    i: Option<u32>,
    terms: Vec<String>,
}

fn emit_poly(bp: &BasisPoly, r: Option<u32>, i: Option<u32>, format: Format) -> Result<(), CliError> {
    let rendered = bp.render();
    match format {
        Format::Table => println!("{rendered}"),
        Format::Json => emit_json(&PolyOut {
            basis: bp.basis.stem(),
            m: bp.m,
            r,
            i,
            terms: terms_list(&rendered),
        }),
        Format::Csv => return Err(no_csv()),
    }
    Ok(())
}

fn cmd_dickson(m: u32, r: u32, basis: BasisArg, format: Format) -> Result<(), CliError> {
    let kform = dickson_upper_formula(m, r)?;
    let bp = match basis {
        BasisArg::K => kform,
        BasisArg::X => BasisPoly { basis: Basis::X, m, poly: expand_k_to_x(m, &kform.poly)? },
    };
    emit_poly(&bp, Some(r), None, format)
}

fn cmd_mui(m: u32, i: u32, format: Format) -> Result<(), CliError> {
    emit_poly(&mui_h(m, i)?, None, Some(i), format)
}

fn cmd_res_v(m: u32, r: u32, format: Format) -> Result<(), CliError> {
    emit_poly(&restriction_v(m, r)?, Some(r), None, format)
}

#[derive(Serialize)]
struct WitnessOut {
    monomial: String,
    coefficient: u8,
}

#[derive(Serialize)]
struct DualSwOut {
    d: u32,
    m: u32,
    power: u64,
    top_nonzero: Option<u64>,
    components: BTreeMap<u64, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<WitnessOut>,
}

fn cmd_dual_sw(
    d: u32,
    m: u32,
    power: u64,
    degree: Option<u64>,
    witness: Option<String>,
    format: Format,
) -> Result<(), CliError> {
    let class = dual_image(d, m, power)?;
    let ctx = class.ctx()?;
    let top = top_nonzero_degree(&class)?;
    let mut components = BTreeMap::new();
    match degree {
        Some(n) => {
            components.insert(n, ctx.render(&component(&class, n)?));
        }
        None => {
            let degrees: BTreeSet<u64> =
                class.poly.terms().iter().map(|mono| ctx.degree(mono)).collect();
            for n in degrees {
                components.insert(n, ctx.render(&component(&class, n)?));
            }
        }
    }
    let witness = match witness {
        Some(text) => {
            let p = ctx.parse(&text)?;
            if p.num_terms() != 1 {
                return Err(parameter("--witness must be a single monomial"));
            }
            let coefficient = u8::from(witness_coefficient(&class, &p.terms()[0])?);
            Some(WitnessOut { monomial: ctx.render(&p), coefficient })
        }
        None => None,
    };
    match format {
        Format::Table => {
            println!("d = {d}");
            println!("m = {m}");
            println!("power = {power}");
            match top {
                Some(t) => println!("top_nonzero = {t}"),
                None => println!("top_nonzero = none"),
            }
            for (n, text) in &components {
                println!("component({n}) = {text}");
            }
            if let Some(w) = &witness {
                println!("witness({}) = {}", w.monomial, w.coefficient);
            }
        }
        Format::Json => emit_json(&DualSwOut { d, m, power, top_nonzero: top, components, witness }),
        Format::Csv => return Err(no_csv()),
    }
    Ok(())
}

#[derive(Serialize)]
struct MemberOut {
    n: u32,
    q: u32,
    member: String,
    in_ideal: bool,
    residue: String,
}

#[derive(Serialize)]
struct GenerationOut {
    n: u32,
    q: u32,
    max_degree: u64,
    holds: bool,
    counterexample: Option<String>,
    degree: Option<u64>,
}

#[derive(Serialize)]
struct KernelSlice {
    degree: u64,
    elements: Vec<String>,
}

#[derive(Serialize)]
struct KernelOut {
    n: u32,
    q: u32,
    max_degree: u64,
    kernel: Vec<KernelSlice>,
}

fn cmd_ideal(
    n: u32,
    q: u32,
    max_degree: u64,
    check_generation: bool,
    member: Option<String>,
    format: Format,
) -> Result<(), CliError> {
    if let Some(text) = member {
        let p = QPolynomial::parse(n, &text)?;
        let in_ideal = in_truncation_ideal(&p, q)?;
        let vctx = v_ctx(n, Some(q))?;
        let residue = vctx.render(&expand_q(&p, Some(q))?);
        let member = p.render()?;
        match format {
            Format::Table => {
                println!("member = {member}");
                println!("in_ideal = {in_ideal}");
                println!("residue = {residue}");
            }
            Format::Json => emit_json(&MemberOut { n, q, member, in_ideal, residue }),
            Format::Csv => return Err(no_csv()),
        }
        return Ok(());
    }
    if check_generation {
        let check = monomial_generation_check(n, q, max_degree)?;
        let counterexample = match &check.counterexample {
            Some(c) => Some(c.render()?),
            None => None,
        };
        match format {
            Format::Table => {
                println!("holds = {}", check.holds);
                println!(
                    "counterexample = {}",
                    counterexample.as_deref().unwrap_or("none")
                );
                match check.degree {
                    Some(deg) => println!("degree = {deg}"),
                    None => println!("degree = none"),
                }
            }
            Format::Json => emit_json(&GenerationOut {
                n,
                q,
                max_degree,
                holds: check.holds,
                counterexample,
                degree: check.degree,
            }),
            Format::Csv => return Err(no_csv()),
        }
        return Ok(());
    }
    let mut kernel = Vec::new();
    for degree in 1..=max_degree {
        let elements = ideal_kernel_in_degree(n, q, degree)?;
        if elements.is_empty() {
            continue;
        }
        let mut rendered = Vec::with_capacity(elements.len());
        for e in &elements {
            rendered.push(e.render()?);
        }
        kernel.push(KernelSlice { degree, elements: rendered });
    }
    match format {
        Format::Table => {
            if kernel.is_empty() {
                println!("kernel trivial through degree {max_degree}");
            }
            for slice in &kernel {
                for e in &slice.elements {
                    println!("degree {}: {}", slice.degree, e);
                }
            }
        }
        Format::Json => emit_json(&KernelOut { n, q, max_degree, kernel }),
        Format::Csv => return Err(no_csv()),
    }
    Ok(())
}

#[derive(Serialize)]
struct KeyOut {
    d: u32,
    m: u32,
    ell: i64,
    r: Vec<u64>,
    parity: u32,
}

fn cmd_key(d: u32, m: u32, ell: i64, r_text: &str, format: Format) -> Result<(), CliError> {
    let mut r = Vec::new();
    for part in r_text.split(',') {
        let part = part.trim();
        r.push(
            part.parse::<u64>()
                .map_err(|_| parameter(format!("--r expects nonnegative integers, got {part:?}")))?,
        );
    }
    if r.len() != m as usize {
        return Err(parameter(format!(
            "--r must list exactly m = {m} multiplicities, got {}",
            r.len()
        )));
    }
    let parity = key_condition(&KeyQuery { d, m, l: ell, r: r.clone() })?;
    match format {
        Format::Table => println!("parity = {parity}"),
        Format::Json => emit_json(&KeyOut { d, m, ell, r, parity }),
        Format::Csv => return Err(no_csv()),
    }
    Ok(())
}

#[derive(Serialize)]
struct Binom2Out {
    a: i64,
    b: u64,
    parity: u32,
}

fn cmd_binom2(a: i64, b: u64, format: Format) -> Result<(), CliError> {
    let parity = binom_parity(a, b);
    match format {
        Format::Table => println!("parity = {parity}"),
        Format::Json => emit_json(&Binom2Out { a, b, parity }),
        Format::Csv => return Err(no_csv()),
    }
    Ok(())
}

#[derive(Serialize)]
struct CaseOut {
    theorem: String,
    case: String,
    #[serde(rename = "excluded_N")]
    excluded_n: Option<i64>,
    formula: String,
}

impl CaseOut {
    fn new(r: &BoundResult) -> Self {
        CaseOut {
            theorem: r.theorem.to_string(),
            case: r.case.to_string(),
            excluded_n: r.value,
            formula: r.formula.clone(),
        }
    }
}

#[derive(Serialize)]
struct BoundsOut {
    kind: &'static str,
    d: u64,
    k: Option<u64>,
    ell: Option<u64>,
    results: Vec<CaseOut>,
}

#[derive(Serialize)]
struct RowOut {
    d: u64,
    k: Option<u64>,
    l: Option<u64>,
    theorem: String,
    case: String,
    #[serde(rename = "excluded_N")]
    excluded_n: Option<i64>,
}

#[derive(Serialize)]
struct BoundsTableOut {
    kind: &'static str,
    rows: Vec<RowOut>,
}

const BOUNDS_CSV_HEADER: &str = "d,k,l,theorem,case,excluded_N";

fn opt_cell<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

fn value_cell(v: Option<i64>) -> String {
    v.map_or_else(|| "none".to_string(), |x| x.to_string())
}

fn csv_row(d: u64, k: Option<u64>, l: Option<u64>, r: &BoundResult) -> String {
    format!(
        "{d},{},{},{},{},{}",
        opt_cell(&k),
        opt_cell(&l),
        r.theorem,
        r.case,
        value_cell(r.value)
    )
}

#[allow(clippy::too_many_arguments)]
fn cmd_bounds(
    max_grid: u64,
    kind_arg: KindArg,
    d: u64,
    k: Option<u64>,
    ell: Option<u64>,
    all_theorems: bool,
    table: Option<String>,
    format: Option<Format>,
) -> Result<(), CliError> {
    let kind = kind_arg.kind();
    if let Some(spec) = table {
        return cmd_bounds_table(max_grid, kind_arg, spec.as_str(), ell, all_theorems, format);
    }
    let format = format.unwrap_or(Format::Table);
    let query = BoundQuery { kind, d, k, l: ell };
    let results = if all_theorems { all_bounds(&query)? } else { vec![best_bound(&query)?] };
    match format {
        Format::Table => {
            for r in &results {
                println!(
                    "{} case {}: excluded_N = {} [{}]",
                    r.theorem,
                    r.case,
                    value_cell(r.value),
                    r.formula
                );
            }
        }
        Format::Csv => {
            println!("{BOUNDS_CSV_HEADER}");
            for r in &results {
                println!("{}", csv_row(d, k, ell, r));
            }
        }
        Format::Json => emit_json(&BoundsOut {
            kind: kind_arg.name(),
            d,
            k,
            ell,
            results: results.iter().map(CaseOut::new).collect(),
        }),
    }
    Ok(())
}

fn cmd_bounds_table(
    max_grid: u64,
    kind_arg: KindArg,
    spec: &str,
    ell: Option<u64>,
    all_theorems: bool,
    format: Option<Format>,
) -> Result<(), CliError> {
    let kind = kind_arg.kind();
    let (d_max, mult_max) = parse_grid_spec(spec)?;
    let d_min = match kind {
        BoundKind::KRegular | BoundKind::ComplexKRegular => 1,
        BoundKind::LSkew | BoundKind::Combined | BoundKind::ComplexLSkew => 2,
    };
    if matches!(kind, BoundKind::Combined) && ell.is_none() {
        return Err(parameter("a combined table sweeps d and k; fix the skew level with --ell"));
    }
    let d_count = d_max.saturating_sub(d_min - 1);
    let points = d_count.saturating_mul(mult_max);
    if points > max_grid {
        return Err(CliError::Resource(format!(
            "table would visit {points} grid points, above the --max-grid limit {max_grid}"
        )));
    }
    let mut rows = Vec::new();
    for d in d_min..=d_max {
        for mult in 1..=mult_max {
            let query = match kind {
                BoundKind::KRegular | BoundKind::ComplexKRegular => {
                    BoundQuery { kind, d, k: Some(mult), l: None }
                }
                BoundKind::LSkew | BoundKind::ComplexLSkew => {
                    BoundQuery { kind, d, k: None, l: Some(mult) }
                }
                BoundKind::Combined => BoundQuery { kind, d, k: Some(mult), l: ell },
            };
            let results =
                if all_theorems { all_bounds(&query)? } else { vec![best_bound(&query)?] };
            for r in results {
                rows.push(RowOut {
                    d,
                    k: query.k,
                    l: query.l,
                    theorem: r.theorem.to_string(),
                    case: r.case.to_string(),
                    excluded_n: r.value,
                });
            }
        }
    }
    match format.unwrap_or(Format::Csv) {
        Format::Csv => {
            println!("{BOUNDS_CSV_HEADER}");
            for row in &rows {
                println!(
                    "{},{},{},{},{},{}",
                    row.d,
                    opt_cell(&row.k),
                    opt_cell(&row.l),
                    row.theorem,
                    row.case,
                    value_cell(row.excluded_n)
                );
            }
        }
        Format::Json => emit_json(&BoundsTableOut { kind: kind_arg.name(), rows }),
        Format::Table => return Err(parameter("table sweeps print csv or json; pick one")),
    }
    Ok(())
}

fn parse_grid_spec(spec: &str) -> Result<(u64, u64), CliError> {
    let parts: Vec<&str> = spec.split(',').collect();
    if parts.len() != 2 {
        return Err(parameter(format!("--table expects \"dmax,multmax\", got {spec:?}")));
    }
    let parse = |s: &str| {
        s.trim()
            .parse::<u64>()
            .map_err(|_| parameter(format!("--table bounds must be positive integers, got {s:?}")))
    };
    let d_max = parse(parts[0])?;
    let mult_max = parse(parts[1])?;
    if d_max == 0 || mult_max == 0 {
        return Err(parameter("--table bounds must be at least 1"));
    }
    Ok((d_max, mult_max))
}

#[derive(Serialize)]
struct HomdimOut {
    d: u32,
    k: u64,
    dims: Vec<u128>,
}

fn cmd_homdim(d: u32, k: u64, format: Format) -> Result<(), CliError> {
    let dims = f2alg::homology::poincare_config(d, k)?;
    match format {
        Format::Table => {
            for (i, dim) in dims.iter().enumerate() {
                println!("{i} {dim}");
            }
        }
        Format::Csv => {
            println!("i,dim");
            for (i, dim) in dims.iter().enumerate() {
                println!("{i},{dim}");
            }
        }
        Format::Json => emit_json(&HomdimOut { d, k, dims }),
    }
    Ok(())
}

#[derive(Serialize)]
struct FuksOneOut {
    n: u64,
    k: u64,
    dim: u128,
}

#[derive(Serialize)]
struct FuksVecOut {
    n: u64,
    dims: Vec<u128>,
}

fn cmd_fuks(n: u64, k: Option<u64>, format: Format) -> Result<(), CliError> {
    if let Some(k) = k {
        let dim = f2alg::homology::fuks_dim(n, k)?;
        match format {
            Format::Table => println!("{dim}"),
            Format::Json => emit_json(&FuksOneOut { n, k, dim }),
            Format::Csv => return Err(no_csv()),
        }
        return Ok(());
    }
    let mut dims = Vec::new();
    for deg in 0..n {
        dims.push(f2alg::homology::fuks_dim(n, deg)?);
    }
    match format {
        Format::Table => {
            for (deg, dim) in dims.iter().enumerate() {
                println!("{deg} {dim}");
            }
        }
        Format::Csv => {
            println!("k,dim");
            for (deg, dim) in dims.iter().enumerate() {
                println!("{deg},{dim}");
            }
        }
        Format::Json => emit_json(&FuksVecOut { n, dims }),
    }
    Ok(())
}

#[derive(Serialize)]
struct PeSeriesOut {
    d: u32,
    m: u32,
    a_series: Vec<u128>,
    i_series: Vec<u128>,
    total: Vec<u128>,
}

fn cmd_pe_series(d: u32, m: u32, split: bool, format: Format) -> Result<(), CliError> {
    let series = f2alg::pe::pe_series_split(d, m)?;
    let total = series.total();
    match format {
        Format::Table => {
            if split {
                for (deg, t) in total.iter().enumerate() {
                    println!("{deg} {} {} {}", series.a_series[deg], series.i_series[deg], t);
                }
            } else {
                for (deg, t) in total.iter().enumerate() {
                    println!("{deg} {t}");
                }
            }
        }
        Format::Csv => {
            println!("degree,a,i,total");
            for (deg, t) in total.iter().enumerate() {
                println!("{deg},{},{},{}", series.a_series[deg], series.i_series[deg], t);
            }
        }
        Format::Json => emit_json(&PeSeriesOut {
            d,
            m,
            a_series: series.a_series,
            i_series: series.i_series,
            total,
        }),
    }
    Ok(())
}

#[derive(Serialize)]
struct CheckOut {
    id: &'static str,
    section: &'static str,
    description: &'static str,
    status: &'static str,
    detail: Option<String>,
}

#[derive(Serialize)]
struct VerifyOut {
    section: Option<String>,
    checks: Vec<CheckOut>,
    passed: usize,
    failed: usize,
}

fn cmd_verify_paper(
    section: Option<&str>,
    golden_dir: Option<&std::path::Path>,
    format: Format,
) -> Result<(), CliError> {
    let outcomes = verify::run_checks(section, golden_dir);
    let passed = outcomes.iter().filter(|o| o.error.is_none()).count();
    let failed = outcomes.len() - passed;
    match format {
        Format::Table => {
            for o in &outcomes {
                let status = if o.error.is_none() { "PASS" } else { "FAIL" };
                println!("{status} [{}] {} — {}", o.section, o.id, o.description);
                if let Some(e) = &o.error {
                    println!("     {e}");
                }
            }
            println!("passed = {passed}");
            println!("failed = {failed}");
        }
        Format::Json => emit_json(&VerifyOut {
            section: section.map(str::to_string),
            checks: outcomes
                .iter()
                .map(|o| CheckOut {
                    id: o.id,
                    section: o.section,
                    description: o.description,
                    status: if o.error.is_none() { "pass" } else { "fail" },
                    detail: o.error.clone(),
                })
                .collect(),
            passed,
            failed,
        }),
        Format::Csv => return Err(no_csv()),
    }
    if failed > 0 {
        let first = outcomes
            .iter()
            .find(|o| o.error.is_some())
            .expect("failed > 0 implies a failing check");
        return Err(CliError::Verification(format!(
            "{failed} of {} checks failed; first failure: {}",
            outcomes.len(),
            first.description
        )));
    }
    Ok(())
}
