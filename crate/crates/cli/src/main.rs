//! gfpoints: exact rational solutions of the coupled quadratic system
//! G(x, y, z) = 0 and G(f(x), f(y), f(z)) = 0 for the four built-in
//! (G, f) families, driven by the group law on the associated elliptic
//! curve. Output is deterministic JSON (one object per line for streams);
//! `--table` renders aligned columns instead.

use clap::{Args, Parser, Subcommand};
use gfp_core::families::{
    classify, curve_for_family, degenerate_parameterize, degenerate_union, expected_multiple,
    group_multiple, identity_check, paper_discriminant, rank_zero_catalog, recover_x, seed_points,
    special_k, verify_generic, verify_solution, Classification, DegenerateCase, FamilyError,
    FamilyId, FamilyParams, MultipleLabel, RankStatus, Solution,
};
use gfp_core::generator::SolutionStream;
use gfp_core::multipoly::MultiPoly;
use gfp_core::rational::Rational;
use gfp_core::sampling::SplitMix64;
use gfp_core::search::{search_curve_points, search_family_solutions};
use gfp_core::weierstrass::{CurvePoint, EllipticCurve};
use serde::Serialize;
use std::fmt;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "gfpoints",
    version,
    about = "Exact rational solutions of G(x,y,z) = 0 and G(f(x),f(y),f(z)) = 0"
)]
struct Cli {
    /// Render aligned columns instead of JSON.
    #[arg(long, global = true)]
    table: bool,
    #[command(subcommand)]
    command: Command,
}

/// Coefficients of f(v) = a·v² + b·v + c; all three must be nonzero.
#[derive(Args)]
struct CoeffFlags {
    #[arg(long, allow_hyphen_values = true)]
    a: Rational,
    #[arg(long, allow_hyphen_values = true)]
    b: Rational,
    #[arg(long, allow_hyphen_values = true)]
    c: Rational,
}

impl CoeffFlags {
    fn params(&self) -> Result<FamilyParams, CliError> {
        FamilyParams::new(self.a.clone(), self.b.clone(), self.c.clone()).map_err(domain)
    }
}

/// A point argument written as "X,Y".
#[derive(Clone)]
struct PointArg {
    x: Rational,
    y: Rational,
}

impl FromStr for PointArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (x, y) = s
            .split_once(',')
            .ok_or_else(|| format!("expected a point written as \"X,Y\", got {s:?}"))?;
        Ok(PointArg {
            x: x.trim().parse().map_err(|e| format!("X coordinate: {e}"))?,
            y: y.trim().parse().map_err(|e| format!("Y coordinate: {e}"))?,
        })
    }
}

/// A degenerate-case tag such as f1-4ac.
#[derive(Clone, Copy)]
struct CaseArg(DegenerateCase);

impl FromStr for CaseArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        DegenerateCase::from_cli_tag(s).map(CaseArg).ok_or_else(|| {
            format!(
                "unknown case tag {s:?} (expected one of f1-4ac, f2-2ac, f2-4ac, \
                 f3-4ac, f4-ac, f4-3ac, f4-4ac)"
            )
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build the family curve: coefficients, discriminant, classification, seeds.
    Curve {
        #[arg(long)]
        family: FamilyId,
        #[command(flatten)]
        coeffs: CoeffFlags,
    },
    /// Walk multiples of a base point and emit verified solutions.
    Solve {
        #[arg(long)]
        family: FamilyId,
        #[command(flatten)]
        coeffs: CoeffFlags,
        /// Number of solutions to emit.
        #[arg(long)]
        count: usize,
        /// Base point "X,Y" to walk instead of the default seed.
        #[arg(long, allow_hyphen_values = true)]
        base: Option<PointArg>,
    },
    /// Check that (x, y, z) solves the system; exit 0 iff valid.
    Verify {
        #[arg(long)]
        family: FamilyId,
        #[command(flatten)]
        coeffs: CoeffFlags,
        #[arg(long, allow_hyphen_values = true)]
        x: Rational,
        #[arg(long, allow_hyphen_values = true)]
        y: Rational,
        #[arg(long, allow_hyphen_values = true)]
        z: Rational,
    },
    /// Check G(f(x), f(y), f(z)) = 0 for user-supplied G (in x, y, z) and f (in t).
    VerifyGeneric {
        /// Polynomial G, e.g. "x^2 + y^2 - z^2".
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        /// Polynomial f, e.g. "1/2*t^2 + 1/2*t".
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        x: Rational,
        #[arg(long, allow_hyphen_values = true)]
        y: Rational,
        #[arg(long, allow_hyphen_values = true)]
        z: Rational,
    },
    /// Evaluate a degenerate-case parameterization at t.
    Param {
        #[arg(long)]
        family: FamilyId,
        /// Case tag: f1-4ac, f2-2ac, f2-4ac, f3-4ac, f4-ac, f4-3ac, f4-4ac.
        #[arg(long)]
        case: CaseArg,
        #[command(flatten)]
        coeffs: CoeffFlags,
        /// Curve parameter; for the union cases (f2-2ac, f4-3ac) this is the
        /// free y coordinate.
        #[arg(long, allow_hyphen_values = true)]
        t: Rational,
    },
    /// Torsion order of (X, Y) on Y² = X³ + AX + B, or a non-torsion certificate.
    Torsion {
        #[arg(long = "A", allow_hyphen_values = true)]
        a: Rational,
        #[arg(long = "B", allow_hyphen_values = true)]
        b: Rational,
        #[arg(long = "X", allow_hyphen_values = true)]
        x: Rational,
        #[arg(long = "Y", allow_hyphen_values = true)]
        y: Rational,
    },
    /// Rank-zero special curve for a recorded k, optionally cross-checked by search.
    Catalog {
        #[arg(long)]
        family: FamilyId,
        #[arg(long, allow_hyphen_values = true)]
        k: Rational,
        /// Cross-check the recorded points against a bounded search.
        #[arg(long)]
        check: bool,
        /// Numerator bound for the search's X = m/e².
        #[arg(long, default_value_t = 1000)]
        m_bound: u64,
        /// Denominator-root bound for the search.
        #[arg(long, default_value_t = 10)]
        e_bound: u64,
    },
    /// Exhaustive solution search up to a height bound on y.
    Search {
        #[arg(long)]
        family: FamilyId,
        #[command(flatten)]
        coeffs: CoeffFlags,
        /// Height bound on the canonical y = p/q (max of |p|, q).
        #[arg(long)]
        height: u64,
    },
    /// Run the built-in identity and closed-form-multiple checks.
    Selftest,
}

enum CliError {
    /// Malformed input: exit 2.
    Usage(String),
    /// Well-formed input outside the domain: exit 1.
    Domain(String),
}

fn domain(err: impl fmt::Display) -> CliError {
    CliError::Domain(err.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.table, cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(table: bool, command: Command) -> Result<u8, CliError> {
    match command {
        Command::Curve { family, coeffs } => run_curve(table, family, &coeffs.params()?),
        Command::Solve {
            family,
            coeffs,
            count,
            base,
        } => run_solve(table, family, coeffs.params()?, count, base),
        Command::Verify {
            family,
            coeffs,
            x,
            y,
            z,
        } => run_verify(family, &coeffs.params()?, &x, &y, &z),
        Command::VerifyGeneric { g, f, x, y, z } => run_verify_generic(&g, &f, &x, &y, &z),
        Command::Param {
            family,
            case,
            coeffs,
            t,
        } => run_param(table, family, case.0, &coeffs.params()?, &t),
        Command::Torsion { a, b, x, y } => run_torsion(table, a, b, x, y),
        Command::Catalog {
            family,
            k,
            check,
            m_bound,
            e_bound,
        } => run_catalog(table, family, &k, check.then_some((m_bound, e_bound))),
        Command::Search {
            family,
            coeffs,
            height,
        } => run_search(table, family, &coeffs.params()?, height),
        Command::Selftest => run_selftest(),
    }
}

#[derive(Serialize)]
struct PointJson {
    #[serde(rename = "X")]
    x: String,
    #[serde(rename = "Y")]
    y: String,
}

fn point_json(point: &CurvePoint) -> PointJson {
    match point {
        CurvePoint::Affine { x, y } => PointJson {
            x: x.to_string(),
            y: y.to_string(),
        },
        CurvePoint::Identity => unreachable!("rendered points are always affine"),
    }
}

#[derive(Serialize)]
struct ClassificationJson {
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<PointJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<String>,
}

#[derive(Serialize)]
struct CurveJson {
    #[serde(rename = "A")]
    a: String,
    #[serde(rename = "B")]
    b: String,
    delta_paper: String,
    classification: ClassificationJson,
    seeds: Vec<PointJson>,
}

#[derive(Serialize)]
struct SolveLineJson {
    x: String,
    y: String,
    z: String,
    n: i64,
}

#[derive(Serialize)]
struct TripleJson {
    x: String,
    y: String,
    z: String,
}

impl TripleJson {
    fn from_solution(s: &Solution) -> TripleJson {
        TripleJson {
            x: s.x.to_string(),
            y: s.y.to_string(),
            z: s.z.to_string(),
        }
    }
}

#[derive(Serialize)]
struct TorsionJson {
    order: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<&'static str>,
}

#[derive(Serialize)]
struct CatalogCheckJson {
    m_bound: u64,
    e_bound: u64,
    found: Vec<PointJson>,
    matches: Option<bool>,
}

#[derive(Serialize)]
struct CatalogJson {
    family: String,
    k: String,
    #[serde(rename = "A")]
    a: String,
    #[serde(rename = "B")]
    b: String,
    listed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'static str>,
    points: Vec<PointJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    check: Option<CatalogCheckJson>,
}

#[derive(Serialize)]
struct SearchJson {
    family: String,
    height_bound: u64,
    candidates_tested: u64,
    squares_found: u64,
    solutions: Vec<TripleJson>,
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string(value).expect("output structs serialize")
    );
}

fn render_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.chars().count());
        }
    }
    let format_row = |cells: &[String]| -> String {
        let padded: Vec<String> = cells
            .iter()
            .enumerate()
            .map(|(i, cell)| format!("{cell:<width$}", width = widths[i]))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let header: Vec<String> = headers.iter().map(|h| h.to_string()).collect();
    let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
    let mut lines = vec![format_row(&header), format_row(&rule)];
    lines.extend(rows.iter().map(|row| format_row(row)));
    lines.join("\n")
}

fn print_fields(rows: &[(&str, String)]) {
    let rows: Vec<Vec<String>> = rows
        .iter()
        .map(|(name, value)| vec![name.to_string(), value.clone()])
        .collect();
    println!("{}", render_table(&["field", "value"], &rows));
}

fn run_curve(table: bool, family: FamilyId, params: &FamilyParams) -> Result<u8, CliError> {
    let curve = curve_for_family(family, params).map_err(domain)?;
    let seeds = seed_points(family, params).map_err(domain)?;
    let classification = match classify(family, params) {
        Classification::NonSingular { rank_status, .. } => match rank_status {
            RankStatus::PositiveRankCertified { witness } => ClassificationJson {
                status: "positive-rank-certified",
                witness: Some(point_json(&witness)),
                k: None,
            },
            RankStatus::RankZeroCatalog { k } => ClassificationJson {
                status: "rank-zero-catalog",
                witness: None,
                k: Some(k.to_string()),
            },
            RankStatus::Undetermined => ClassificationJson {
                status: "undetermined",
                witness: None,
                k: None,
            },
        },
        Classification::Degenerate { .. } => {
            unreachable!("curve construction rejects degenerate parameters")
        }
    };
    let out = CurveJson {
        a: curve.a().to_string(),
        b: curve.b().to_string(),
        delta_paper: paper_discriminant(family, params).to_string(),
        classification,
        seeds: seeds.iter().map(point_json).collect(),
    };
    if table {
        let mut classification_text = out.classification.status.to_string();
        if let Some(w) = &out.classification.witness {
            classification_text.push_str(&format!(" (witness ({}, {}))", w.x, w.y));
        }
        if let Some(k) = &out.classification.k {
            classification_text.push_str(&format!(" (k = {k})"));
        }
        let seed_text = seeds
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        print_fields(&[
            ("A", out.a),
            ("B", out.b),
            ("delta_paper", out.delta_paper),
            ("classification", classification_text),
            ("seeds", seed_text),
        ]);
    } else {
        print_json(&out);
    }
    Ok(0)
}

fn run_solve(
    table: bool,
    family: FamilyId,
    params: FamilyParams,
    count: usize,
    base: Option<PointArg>,
) -> Result<u8, CliError> {
    let base = base.map(|p| CurvePoint::affine(p.x, p.y));
    let mut stream = SolutionStream::new(family, params, base).map_err(domain)?;
    let mut rows = Vec::new();
    let mut skips_reported = 0;
    let report_skips = |stream: &SolutionStream, upto: &mut usize| {
        for entry in &stream.skip_log()[*upto..] {
            eprintln!("note: n = {} skipped: {}", entry.n, entry.reason);
        }
        *upto = stream.skip_log().len();
    };
    for _ in 0..count {
        match stream.next_solution() {
            Ok(emission) => {
                report_skips(&stream, &mut skips_reported);
                let s = &emission.solution;
                if table {
                    rows.push(vec![
                        emission.n.to_string(),
                        s.x.to_string(),
                        s.y.to_string(),
                        s.z.to_string(),
                    ]);
                } else {
                    print_json(&SolveLineJson {
                        x: s.x.to_string(),
                        y: s.y.to_string(),
                        z: s.z.to_string(),
                        n: emission.n,
                    });
                }
            }
            Err(err) => {
                report_skips(&stream, &mut skips_reported);
                if table && !rows.is_empty() {
                    println!("{}", render_table(&["n", "x", "y", "z"], &rows));
                }
                return Err(domain(err));
            }
        }
    }
    if table {
        println!("{}", render_table(&["n", "x", "y", "z"], &rows));
    }
    Ok(0)
}

fn run_verify(
    family: FamilyId,
    params: &FamilyParams,
    x: &Rational,
    y: &Rational,
    z: &Rational,
) -> Result<u8, CliError> {
    let verdict = verify_solution(family, params, x, y, z);
    if verdict.valid {
        println!("valid");
        Ok(0)
    } else {
        println!(
            "invalid: {}",
            verdict.reason.unwrap_or_else(|| "unspecified".to_string())
        );
        Ok(1)
    }
}

fn run_verify_generic(
    g_text: &str,
    f_text: &str,
    x: &Rational,
    y: &Rational,
    z: &Rational,
) -> Result<u8, CliError> {
    let g = MultiPoly::parse(g_text, &["x", "y", "z"])
        .map_err(|e| CliError::Usage(format!("--g: {e}")))?;
    let f =
        MultiPoly::parse(f_text, &["t"]).map_err(|e| CliError::Usage(format!("--f: {e}")))?;
    let verdict = verify_generic(&g, &f, x, y, z).map_err(domain)?;
    if verdict.accepted() {
        println!("valid");
        Ok(0)
    } else {
        println!(
            "invalid: G(f(x), f(y), f(z)) = {} (expected 0); G(x, y, z) = {}",
            verdict.gf_value, verdict.g_value
        );
        Ok(1)
    }
}

fn run_param(
    table: bool,
    family: FamilyId,
    case: DegenerateCase,
    params: &FamilyParams,
    t: &Rational,
) -> Result<u8, CliError> {
    if case.family() != family {
        return Err(CliError::Usage(format!(
            "case {} belongs to {}, not {}",
            case.cli_tag(),
            case.family(),
            family
        )));
    }
    let solution = if case.is_union() {
        union_solution(case, params, t)?
    } else {
        degenerate_parameterize(case, params, t).map_err(domain)?
    };
    if table {
        print_fields(&[
            ("x", solution.x.to_string()),
            ("y", solution.y.to_string()),
            ("z", solution.z.to_string()),
        ]);
    } else {
        print_json(&TripleJson::from_solution(&solution));
    }
    Ok(0)
}

/// For the union cases --t is the free y coordinate; the z comes from the
/// non-constant branch (the constant branch z = -2c/b is shared by every y).
fn union_solution(
    case: DegenerateCase,
    params: &FamilyParams,
    y: &Rational,
) -> Result<Solution, CliError> {
    let branches = degenerate_union(case, params, y).map_err(domain)?;
    let z = branches.last().expect("both cases have a curve branch").clone();
    let x = recover_x(case.family(), y, &z).map_err(|err| match err {
        FamilyError::NoFiniteX { factor } => {
            CliError::Domain(format!("t = {y} is excluded: {factor} vanishes"))
        }
        other => domain(other),
    })?;
    let verdict = verify_solution(case.family(), params, &x, y, &z);
    if !verdict.valid {
        return Err(CliError::Domain(format!(
            "t = {y} lands on the trivial locus: {}",
            verdict.reason.unwrap_or_default()
        )));
    }
    Ok(Solution {
        x,
        y: y.clone(),
        z,
    })
}

fn run_torsion(
    table: bool,
    a: Rational,
    b: Rational,
    x: Rational,
    y: Rational,
) -> Result<u8, CliError> {
    let curve = EllipticCurve::new(a, b).map_err(domain)?;
    let point = CurvePoint::affine(x, y);
    let out = match curve.torsion_order(&point).map_err(domain)? {
        Some(order) => TorsionJson {
            order: Some(order),
            certificate: None,
        },
        None => TorsionJson {
            order: None,
            certificate: Some("non-torsion (Mazur bound)"),
        },
    };
    if table {
        match out.order {
            Some(order) => print_fields(&[("order", order.to_string())]),
            None => print_fields(&[
                ("order", "none".to_string()),
                ("certificate", out.certificate.unwrap().to_string()),
            ]),
        }
    } else {
        print_json(&out);
    }
    Ok(0)
}

fn run_catalog(
    table: bool,
    family: FamilyId,
    k: &Rational,
    check: Option<(u64, u64)>,
) -> Result<u8, CliError> {
    let catalog = rank_zero_catalog(family, k).map_err(domain)?;
    let check = check.map(|(m_bound, e_bound)| {
        let report = search_curve_points(&catalog.curve, m_bound, e_bound);
        let matches = catalog.listed.then(|| {
            report.found.len() == catalog.points.len()
                && catalog.points.iter().all(|p| report.found.contains(p))
        });
        CatalogCheckJson {
            m_bound,
            e_bound,
            found: report.found.iter().map(point_json).collect(),
            matches,
        }
    });
    let out = CatalogJson {
        family: family.to_string().to_ascii_lowercase(),
        k: k.to_string(),
        a: catalog.curve.a().to_string(),
        b: catalog.curve.b().to_string(),
        listed: catalog.listed,
        note: (!catalog.listed).then_some("rank 0; point catalog not recorded"),
        points: catalog.points.iter().map(point_json).collect(),
        check,
    };
    if table {
        let mut fields = vec![
            ("family", out.family.clone()),
            ("k", out.k.clone()),
            ("A", out.a.clone()),
            ("B", out.b.clone()),
            ("listed", out.listed.to_string()),
        ];
        if let Some(note) = out.note {
            fields.push(("note", note.to_string()));
        }
        print_fields(&fields);
        if !out.points.is_empty() {
            let rows: Vec<Vec<String>> = out
                .points
                .iter()
                .map(|p| vec![p.x.clone(), p.y.clone()])
                .collect();
            println!("{}", render_table(&["X", "Y"], &rows));
        }
        if let Some(check) = &out.check {
            let matches = match check.matches {
                Some(true) => "yes",
                Some(false) => "NO",
                None => "n/a (no recorded list)",
            };
            println!(
                "check: m_bound = {}, e_bound = {}, found {} points, matches = {}",
                check.m_bound,
                check.e_bound,
                check.found.len(),
                matches
            );
        }
    } else {
        print_json(&out);
    }
    match out.check {
        Some(CatalogCheckJson {
            matches: Some(false),
            ..
        }) => Ok(1),
        _ => Ok(0),
    }
}

fn run_search(
    table: bool,
    family: FamilyId,
    params: &FamilyParams,
    height: u64,
) -> Result<u8, CliError> {
    let report = search_family_solutions(family, params, height);
    let out = SearchJson {
        family: family.to_string().to_ascii_lowercase(),
        height_bound: report.height_bound,
        candidates_tested: report.candidates_tested,
        squares_found: report.squares_found,
        solutions: report.found.iter().map(TripleJson::from_solution).collect(),
    };
    if table {
        print_fields(&[
            ("family", out.family.clone()),
            ("height_bound", out.height_bound.to_string()),
            ("candidates_tested", out.candidates_tested.to_string()),
            ("squares_found", out.squares_found.to_string()),
            ("solutions", out.solutions.len().to_string()),
        ]);
        if !out.solutions.is_empty() {
            let rows: Vec<Vec<String>> = out
                .solutions
                .iter()
                .map(|s| vec![s.x.clone(), s.y.clone(), s.z.clone()])
                .collect();
            println!("{}", render_table(&["x", "y", "z"], &rows));
        }
    } else {
        print_json(&out);
    }
    Ok(0)
}

/// Parameters where every closed-form multiple is defined: nondegenerate and
/// away from the special k values (whose F1 denominators can vanish).
fn sample_defined_params(rng: &mut SplitMix64, family: FamilyId) -> FamilyParams {
    loop {
        let params = rng.nondegenerate_params(family, 20);
        if special_k(family, &params).is_none() {
            return params;
        }
    }
}

fn run_selftest() -> Result<u8, CliError> {
    for family in FamilyId::ALL {
        if !identity_check(family) {
            println!("identity {family}: FAILED");
            return Ok(1);
        }
        println!("identity {family}: ok");
    }
    let mut rng = SplitMix64::new(0x9f70_1e57);
    for family in FamilyId::ALL {
        let mut checks = 0;
        for _ in 0..10 {
            let params = sample_defined_params(&mut rng, family);
            for &label in MultipleLabel::valid_for(family) {
                let closed = expected_multiple(family, &params, label).map_err(domain)?;
                let walked = group_multiple(family, &params, label).map_err(domain)?;
                if closed != walked {
                    println!("multiples {family} {label} at {params}: FAILED");
                    return Ok(1);
                }
                checks += 1;
            }
        }
        println!("multiples {family}: ok ({checks} checks)");
    }
    println!("selftest: all passed");
    Ok(0)
}
