use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use super::document::{Body, InputDocument};
use crate::complexcore::{alexander_dual_ideal, polarize, MonomialIdeal, SimplicialComplex};
use crate::dualitylab::{
    check_binomial_bound, check_cohen_macaulay, check_doubly_cohen_macaulay, check_dual_sum_bound,
    check_exact_sequence_all, check_extremal_flip, check_gorenstein, check_terai, Check,
    VerificationReport,
};
use crate::error::{Error, Result};
use crate::ginlab::{corner_report, depth_report, gin, gin_comparison};
use crate::homology::PrimeField;
use crate::resolutions::{
    betti_via_koszul, dual_betti_via_links, hochster_betti, is_coarse_extremal,
    multigraded_extremal, BettiDiagram, BettiTable, Convention,
};

/// Seed used when neither `--seed` nor a `seed:` line is given.
pub const DEFAULT_SEED: u64 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNSTABLE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "extremal",
    version,
    about = "Betti tables, extremal Betti numbers and duality checks for monomial ideals and simplicial complexes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Input document; `-` or absent reads standard input.
    pub input: Option<PathBuf>,
    /// Field characteristic, overriding any `char:` line.
    #[arg(long = "char", value_name = "P")]
    pub characteristic: Option<u64>,
    /// Polarize non-square-free generators instead of rejecting them.
    #[arg(long)]
    pub polarize: bool,
    /// Emit JSON instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Quotient,
    Ideal,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Quotient => Convention::Quotient,
            ConventionArg::Ideal => Convention::Ideal,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Graded Betti diagram.
    Betti {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "quotient")]
        convention: ConventionArg,
        /// List multigraded entries `i b value` instead of the diagram.
        #[arg(long)]
        multigraded: bool,
    },
    /// Generators of the Alexander dual ideal.
    Dual {
        #[command(flatten)]
        common: Common,
        /// Also print the Betti diagram of the dual.
        #[arg(long)]
        diagram: bool,
    },
    /// Corners and multigraded extremal positions.
    Extremal {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "quotient")]
        convention: ConventionArg,
        /// Analyse the table of the Alexander dual instead.
        #[arg(long)]
        dual: bool,
    },
    /// Verify a statement: terai, cm, gorenstein, dcm, dual-sum (corF),
    /// binomial-sum (corG), extremal-flip (thmG), exact-sequence (thmE),
    /// gin-corners, gin-depth, or all.
    Check {
        which: String,
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Generic initial ideal in degrevlex.
    Gin {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        seed: Option<u64>,
        /// Also compare corners and depth of S/I and S/gin(I).
        #[arg(long)]
        compare: bool,
    },
}

/// Text written by a command and its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn error(e: &Error, json: bool) -> Self {
        let code = match e {
            Error::GinUnstable { .. } => EXIT_UNSTABLE,
            _ => EXIT_INPUT,
        };
        let mut stdout = String::new();
        if json {
            let mut v = json!({ "error": e.to_string() });
            if let Error::GinUnstable { first, second } = e {
                v["first"] = json!(first.to_string());
                v["second"] = json!(second.to_string());
            }
            stdout = format!("{v}\n");
        }
        Outcome {
            stdout,
            stderr: format!("error: {e}\n"),
            code,
        }
    }
}

fn read_input(path: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<String> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p)
                .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", p.display())))?;
        }
        _ => {
            stdin
                .read_to_string(&mut text)
                .map_err(|e| Error::InvalidArgument(format!("cannot read standard input: {e}")))?;
        }
    }
    Ok(text)
}

/// Parses arguments and runs one command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli.command, stdin),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                Outcome::ok(rendered)
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: rendered,
                    code,
                }
            }
        }
    }
}

pub fn execute(command: &Command, stdin: &mut dyn Read) -> Outcome {
    let common = match command {
        Command::Betti { common, .. }
        | Command::Dual { common, .. }
        | Command::Extremal { common, .. }
        | Command::Check { common, .. }
        | Command::Gin { common, .. } => common,
    };
    let prepared = read_input(&common.input, stdin).and_then(|text| {
        let doc = InputDocument::parse(&text)?;
        let field = doc.field(common.characteristic)?;
        Ok((doc, field))
    });
    let (doc, field) = match prepared {
        Ok(v) => v,
        Err(e) => return Outcome::error(&e, common.json),
    };
    let result = match command {
        Command::Betti {
            convention,
            multigraded,
            ..
        } => cmd_betti(&doc, &field, common, (*convention).into(), *multigraded),
        Command::Dual { diagram, .. } => cmd_dual(&doc, &field, common, *diagram),
        Command::Extremal {
            convention, dual, ..
        } => cmd_extremal(&doc, &field, common, (*convention).into(), *dual),
        Command::Check { which, seed, .. } => cmd_check(
            &doc,
            &field,
            common,
            which,
            seed.or(doc.seed).unwrap_or(DEFAULT_SEED),
        ),
        Command::Gin { seed, compare, .. } => cmd_gin(
            &doc,
            &field,
            common,
            seed.or(doc.seed).unwrap_or(DEFAULT_SEED),
            *compare,
        ),
    };
    result.unwrap_or_else(|e| Outcome::error(&e, common.json))
}

/// The monomial ideal of the document, polarized on request.
fn ideal_for_betti(doc: &InputDocument, polarize_gens: bool) -> Result<MonomialIdeal> {
    let ideal = doc.monomial_ideal()?;
    if ideal.is_square_free() || ideal.is_unit() {
        Ok(ideal)
    } else if polarize_gens {
        polarize(&ideal)
    } else {
        Err(Error::NotSquareFree)
    }
}

/// Multigraded table of `S/I` (quotient convention) for the document.
fn document_table(
    doc: &InputDocument,
    field: &PrimeField,
    polarize_gens: bool,
) -> Result<BettiTable> {
    match &doc.body {
        Body::Facets(x) if !x.is_void() => hochster_betti(x, field),
        _ => Ok(betti_via_koszul(&ideal_for_betti(doc, polarize_gens)?, field).to_quotient()),
    }
}

fn diagram_json(d: &BettiDiagram) -> Value {
    let entries: Vec<Value> = d.iter().map(|(i, j, v)| json!([i, j, v])).collect();
    json!({ "entries": entries, "totals": d.totals() })
}

fn multigraded_lines(table: &BettiTable) -> Vec<(usize, String, u64, Vec<u32>)> {
    let mut rows: Vec<_> = table.iter().map(|(i, b, v)| (i, b.clone(), v)).collect();
    rows.sort_by(|a, b| (a.0, a.1.total(), &a.1).cmp(&(b.0, b.1.total(), &b.1)));
    rows.into_iter()
        .map(|(i, b, v)| (i, b.to_string(), v, b.exps().to_vec()))
        .collect()
}

fn cmd_betti(
    doc: &InputDocument,
    field: &PrimeField,
    common: &Common,
    convention: Convention,
    multigraded: bool,
) -> Result<Outcome> {
    let table = document_table(doc, field, common.polarize)?.with_convention(convention);
    let diagram = table.coarse();
    let mut out = String::new();
    if common.json {
        let mut v = json!({
            "convention": convention.to_string(),
            "characteristic": field.characteristic(),
            "diagram": diagram_json(&diagram),
        });
        if multigraded {
            v["multigraded"] = multigraded_lines(&table)
                .into_iter()
                .map(|(i, _, value, b)| json!({ "i": i, "b": b, "value": value }))
                .collect();
        }
        writeln!(out, "{v}").expect("string write");
    } else if multigraded {
        for (i, b, v, _) in multigraded_lines(&table) {
            writeln!(out, "{i} {b} {v}").expect("string write");
        }
    } else {
        out.push_str(&diagram.render());
    }
    Ok(Outcome::ok(out))
}

fn cmd_dual(
    doc: &InputDocument,
    field: &PrimeField,
    common: &Common,
    with_diagram: bool,
) -> Result<Outcome> {
    let x = doc.complex(common.polarize)?;
    let dual = alexander_dual_ideal(&x);
    let diagram = if with_diagram {
        Some(betti_via_koszul(&dual, field).to_quotient().coarse())
    } else {
        None
    };
    let mut out = String::new();
    if common.json {
        let gens: Vec<Vec<u32>> = dual.gens().iter().map(|g| g.exps().to_vec()).collect();
        let mut v =
            json!({ "n": dual.n(), "gens": gens, "unit": dual.is_unit(), "zero": dual.is_zero() });
        if let Some(d) = &diagram {
            v["diagram"] = diagram_json(d);
        }
        writeln!(out, "{v}").expect("string write");
    } else {
        if dual.is_unit() {
            out.push_str("unit ideal: the dual complex is void\n");
        } else {
            writeln!(out, "{dual}").expect("string write");
        }
        if let Some(d) = diagram {
            out.push_str(&d.render());
        }
    }
    Ok(Outcome::ok(out))
}

fn cmd_extremal(
    doc: &InputDocument,
    field: &PrimeField,
    common: &Common,
    convention: Convention,
    dual: bool,
) -> Result<Outcome> {
    let table = if dual {
        let x = doc.complex(common.polarize)?;
        dual_betti_via_links(&x, field)?
    } else {
        document_table(doc, field, common.polarize)?
    }
    .with_convention(convention);
    let corners = table.coarse().corners();
    let extremal: Vec<(usize, crate::complexcore::Multidegree, u64, bool)> =
        multigraded_extremal(&table)
            .into_iter()
            .map(|(i, b)| {
                let v = table.get(i, &b);
                let coarse = is_coarse_extremal(&table, i, &b);
                (i, b, v, coarse)
            })
            .collect();
    let mut out = String::new();
    if common.json {
        let v = json!({
            "convention": convention.to_string(),
            "corners": corners.iter().map(|c| json!({ "l": c.l, "m": c.m, "value": c.value })).collect::<Vec<_>>(),
            "extremal": extremal
                .iter()
                .map(|(i, b, v, c)| json!({ "i": i, "b": b.exps(), "value": v, "coarse_extremal": c }))
                .collect::<Vec<_>>(),
        });
        writeln!(out, "{v}").expect("string write");
    } else {
        let shown: Vec<String> = corners.iter().map(ToString::to_string).collect();
        writeln!(
            out,
            "corners: {}",
            if shown.is_empty() {
                "none".to_string()
            } else {
                shown.join(" ")
            }
        )
        .expect("string write");
        if extremal.is_empty() {
            out.push_str("extremal: none\n");
        }
        for (i, b, v, coarse) in extremal {
            writeln!(
                out,
                "extremal: i={i} b={b} value={v} coarse={}",
                if coarse { "yes" } else { "no" }
            )
            .expect("string write");
        }
    }
    Ok(Outcome::ok(out))
}

/// Runs one complex-level check.
pub fn run_check(
    check: Check,
    x: &SimplicialComplex,
    field: &PrimeField,
) -> Result<VerificationReport> {
    match check {
        Check::Terai => check_terai(x, field),
        Check::CohenMacaulay => check_cohen_macaulay(x, field),
        Check::Gorenstein => check_gorenstein(x, field),
        Check::DoublyCohenMacaulay => check_doubly_cohen_macaulay(x, field),
        Check::DualSumBound => check_dual_sum_bound(x, field),
        Check::BinomialBound => check_binomial_bound(x, field),
        Check::ExtremalFlip => check_extremal_flip(x, field),
        Check::ExactSequence => check_exact_sequence_all(x, field),
        Check::GinCorners | Check::GinDepth => Err(Error::InvalidArgument(format!(
            "`{check}` applies to ideals; use `extremal gin --compare`"
        ))),
    }
}

enum Line {
    Report(VerificationReport),
    Skipped {
        check: Check,
        instance: String,
        reason: String,
    },
}

fn cmd_check(
    doc: &InputDocument,
    field: &PrimeField,
    common: &Common,
    which: &str,
    seed: u64,
) -> Result<Outcome> {
    let instance = doc.body_line();
    let mut lines = Vec::new();
    if which.eq_ignore_ascii_case("all") {
        let x = doc.complex(common.polarize)?;
        for check in Check::ALL_COMPLEX {
            lines.push(match run_check(check, &x, field) {
                Ok(r) => Line::Report(r),
                Err(e) => Line::Skipped {
                    check,
                    instance: instance.clone(),
                    reason: e.to_string(),
                },
            });
        }
    } else {
        let check: Check = which.parse()?;
        match check {
            Check::GinCorners | Check::GinDepth => {
                let polys = doc.polynomials(field)?;
                let cmp = gin_comparison(&polys, doc.n, field, seed)?;
                let r = if check == Check::GinCorners {
                    corner_report(&cmp, instance, field, seed)
                } else {
                    depth_report(&cmp, instance, field, seed)
                };
                lines.push(Line::Report(r));
            }
            _ => {
                let x = doc.complex(common.polarize)?;
                lines.push(Line::Report(run_check(check, &x, field)?));
            }
        }
    }
    let failed = lines
        .iter()
        .any(|l| matches!(l, Line::Report(r) if !r.passed));
    let mut out = String::new();
    for line in &lines {
        match (line, common.json) {
            (Line::Report(r), false) => writeln!(out, "{r}"),
            (Line::Report(r), true) => writeln!(out, "{}", r.to_json()),
            (Line::Skipped { check, instance, reason }, false) => writeln!(
                out,
                "{} instance=\"{instance}\" SKIP reason=\"{reason}\" char={}",
                check.id().to_ascii_uppercase(),
                field.characteristic()
            ),
            (Line::Skipped { check, instance, reason }, true) => writeln!(
                out,
                "{}",
                json!({ "check": check.id(), "instance": instance, "skipped": reason, "characteristic": field.characteristic() })
            ),
        }
        .expect("string write");
    }
    Ok(Outcome {
        stdout: out,
        stderr: String::new(),
        code: if failed { EXIT_FAILED } else { EXIT_OK },
    })
}

fn cmd_gin(
    doc: &InputDocument,
    field: &PrimeField,
    common: &Common,
    seed: u64,
    compare: bool,
) -> Result<Outcome> {
    let polys = doc.polynomials(field)?;
    let mut out = String::new();
    if !compare {
        let g = gin(&polys, doc.n, seed, field)?;
        if common.json {
            let gens: Vec<Vec<u32>> = g.gens().iter().map(|m| m.exps().to_vec()).collect();
            writeln!(
                out,
                "{}",
                json!({ "gin": gens, "seed": seed, "characteristic": field.characteristic() })
            )
        } else {
            writeln!(out, "{g}")
        }
        .expect("string write");
        return Ok(Outcome::ok(out));
    }
    let cmp = gin_comparison(&polys, doc.n, field, seed)?;
    let instance = doc.body_line();
    let reports = [
        corner_report(&cmp, instance.clone(), field, seed),
        depth_report(&cmp, instance, field, seed),
    ];
    let failed = reports.iter().any(|r| !r.passed);
    if common.json {
        let gens: Vec<Vec<u32>> = cmp.gin.gens().iter().map(|m| m.exps().to_vec()).collect();
        let v = json!({
            "gin": gens,
            "seed": seed,
            "characteristic": field.characteristic(),
            "original": diagram_json(&cmp.original),
            "generic": diagram_json(&cmp.generic),
            "reports": reports.iter().map(|r| serde_json::to_value(r).expect("report serializes")).collect::<Vec<_>>(),
        });
        writeln!(out, "{v}").expect("string write");
    } else {
        writeln!(out, "{}", cmp.gin).expect("string write");
        for r in &reports {
            writeln!(out, "{r}").expect("string write");
        }
    }
    Ok(Outcome {
        stdout: out,
        stderr: String::new(),
        code: if failed { EXIT_FAILED } else { EXIT_OK },
    })
}
