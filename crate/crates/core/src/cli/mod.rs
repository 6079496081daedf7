//! The `hirz` command-line front end.
//!
//! [`run`] takes the full argument vector (program name first) and returns
//! the exit code together with everything that would be printed, so the
//! binary is a thin wrapper and tests can drive the CLI in-process.

pub mod audit;
pub mod output;

use clap::{ArgGroup, Parser, Subcommand};

use crate::bundles::{self, Polarization};
use crate::cohomology;
use crate::natural::{self, Property, ScanEvidence, SheafModel, Verdict};
use crate::picard::{DivisorClass, SurfaceGeometry};
use crate::row;
use crate::sheaves::{IdealSheafModel, Locus, PointConfig};
use crate::Error;

pub use output::{Format, OutputRecord, Row, Scalar};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

/// Environment variable selecting the default output format.
pub const FORMAT_ENV: &str = "HIRZ_FORMAT";

/// Inputs beyond this magnitude are rejected before any arithmetic.
pub const MAX_COEFF: i64 = 1_000_000;

const MAX_CELLS: i64 = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pair(pub i64, pub i64);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span(pub i64, pub i64);

fn parse_int(tok: &str) -> Result<i64, String> {
    tok.trim()
        .parse::<i64>()
        .map_err(|_| format!("'{tok}' is not an integer"))
}

fn parse_pair(s: &str) -> Result<Pair, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("expected A,B, got '{s}'"));
    }
    Ok(Pair(parse_int(parts[0])?, parse_int(parts[1])?))
}

/// `FROM..TO` (inclusive) or a single integer.
fn parse_span(s: &str) -> Result<Span, String> {
    match s.split_once("..") {
        Some((a, b)) => {
            let (from, to) = (parse_int(a)?, parse_int(b)?);
            if from > to {
                return Err(format!("empty range '{s}': {from} > {to}"));
            }
            Ok(Span(from, to))
        }
        None => parse_int(s).map(|n| Span(n, n)),
    }
}

/// Summands of a direct sum; a newtype so clap treats it as one value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumArg(pub Vec<Pair>);

fn parse_sum(s: &str) -> Result<SumArg, String> {
    s.split(';')
        .filter(|p| !p.trim().is_empty())
        .map(parse_pair)
        .collect::<Result<Vec<_>, _>>()
        .and_then(|v| {
            if v.is_empty() {
                Err(format!("empty sum '{s}'"))
            } else {
                Ok(SumArg(v))
            }
        })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdealArg {
    pub locus: Locus,
    pub z: i64,
    pub class: Pair,
}

fn parse_ideal(s: &str) -> Result<IdealArg, String> {
    let mut it = s.splitn(3, ':');
    let (Some(l), Some(z), Some(c)) = (it.next(), it.next(), it.next()) else {
        return Err(format!("expected LOCUS:Z:U,V, got '{s}'"));
    };
    Ok(IdealArg {
        locus: l.parse()?,
        z: parse_int(z)?,
        class: parse_pair(c)?,
    })
}

fn parse_quad(s: &str) -> Result<[i64; 4], String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 4 {
        return Err(format!("expected U,V,M,S, got '{s}'"));
    }
    let mut out = [0; 4];
    for (o, p) in out.iter_mut().zip(parts) {
        *o = parse_int(p)?;
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Wrt {
    M,
    R,
    Class(Pair),
}

fn parse_wrt(s: &str) -> Result<Wrt, String> {
    match s {
        "M" | "m" => Ok(Wrt::M),
        "R" | "r" => Ok(Wrt::R),
        other => parse_pair(other)
            .map(Wrt::Class)
            .map_err(|_| format!("expected M, R or A,B, got '{other}'")),
    }
}

fn parse_polarization(s: &str) -> Result<Polarization, String> {
    match s {
        "R" | "r" => Ok(Polarization::R),
        "M" | "m" => Ok(Polarization::M),
        other => Err(format!("expected R or M, got '{other}'")),
    }
}

#[derive(Debug, Parser)]
#[command(name = "hirz", version, about = "Cohomology and natural-cohomology calculator for Hirzebruch surfaces")]
struct Cli {
    /// Output format [default: $HIRZ_FORMAT, else json; csv for enumerate]
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Cohomology of a line bundle, optionally along a range of twists.
    Coh {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_int)]
        e: i64,
        #[arg(long = "class", allow_hyphen_values = true, value_parser = parse_pair)]
        class: Pair,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_pair, requires = "t")]
        twist_by: Option<Pair>,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_span, requires = "twist_by")]
        t: Option<Span>,
    },
    /// Decide property £ (or ££ with --pp) for a sheaf model.
    #[command(group(ArgGroup::new("model").required(true).args(["line", "sum", "ideal", "extension"])))]
    Check {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_int)]
        e: i64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_pair)]
        line: Option<Pair>,
        /// Summands separated by semicolons: "U1,V1;U2,V2"
        #[arg(long, allow_hyphen_values = true, value_parser = parse_sum)]
        sum: Option<SumArg>,
        /// LOCUS:Z:U,V with LOCUS one of general, section, fiber
        #[arg(long, allow_hyphen_values = true, value_parser = parse_ideal)]
        ideal: Option<IdealArg>,
        /// U,V,M,S: the construction extension with c1 = (U,V), twist M, S general points
        #[arg(long, allow_hyphen_values = true, value_parser = parse_quad)]
        extension: Option<[i64; 4]>,
        /// Twisting class: M, R, or A,B
        #[arg(long, default_value = "M", allow_hyphen_values = true, value_parser = parse_wrt)]
        wrt: Wrt,
        /// Check ££ instead of £
        #[arg(long)]
        pp: bool,
        /// Twists scanned past the stabilization bound
        #[arg(long, default_value_t = 2, value_parser = parse_int)]
        extra_window: i64,
        /// Also emit one row per scanned twist
        #[arg(long)]
        evidence: bool,
    },
    /// Build the rank-2 construction datum with its certificates.
    Construct {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_int)]
        e: i64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_int)]
        u: i64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_int)]
        v: i64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_int)]
        m: i64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_int)]
        s: i64,
        /// Restrict stability reports to one polarization (R or M)
        #[arg(long, value_parser = parse_polarization)]
        polarization: Option<Polarization>,
    },
    /// Label (u, v) cells as NONEXISTENT, EXISTENT or UNKNOWN.
    Classify(ClassifyArgs),
    /// Same as classify, CSV by default.
    Enumerate(ClassifyArgs),
    /// Re-derive the checkable content of each claim and report findings.
    Audit {
        /// Comma-separated claim ids (default: all)
        #[arg(long, value_delimiter = ',')]
        claims: Option<Vec<String>>,
        #[arg(long, default_value = "1..4", allow_hyphen_values = true, value_parser = parse_span)]
        e: Span,
    },
    /// Compare closed forms with brute-force lattice counts over a grid.
    Oracle {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_span)]
        e: Span,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_span)]
        a: Span,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_span)]
        b: Span,
    },
}

#[derive(Debug, clap::Args)]
struct ClassifyArgs {
    #[arg(long, allow_hyphen_values = true, value_parser = parse_int)]
    e: i64,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_int)]
    r: i64,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_span)]
    u: Span,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_span)]
    v: Span,
    #[arg(long, default_value_t = 3, allow_hyphen_values = true, value_parser = parse_int)]
    m_max: i64,
}

/// Failure of a command after argument parsing succeeded.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type CmdResult = Result<(OutputRecord, i32), Failure>;

fn bounded(name: &str, x: i64) -> Result<i64, Error> {
    if x.abs() > MAX_COEFF {
        return Err(Error::Domain(format!("{name} = {x} exceeds |x| <= {MAX_COEFF}")));
    }
    Ok(x)
}

fn bounded_pair(name: &str, p: Pair) -> Result<DivisorClass, Error> {
    Ok(DivisorClass::new(bounded(name, p.0)?, bounded(name, p.1)?))
}

fn bounded_span(name: &str, s: Span) -> Result<(i64, i64), Error> {
    Ok((bounded(name, s.0)?, bounded(name, s.1)?))
}

fn span_len(s: (i64, i64)) -> i64 {
    s.1 - s.0 + 1
}

fn check_cells(cells: i64) -> Result<(), Error> {
    if cells > MAX_CELLS {
        return Err(Error::Domain(format!("{cells} cells exceed the limit of {MAX_CELLS}")));
    }
    Ok(())
}

fn surface(e: i64) -> Result<SurfaceGeometry, Error> {
    SurfaceGeometry::new(bounded("e", e)?)
}

fn class_text(c: DivisorClass) -> String {
    c.to_string()
}

fn span_text(s: (i64, i64)) -> String {
    format!("{}..{}", s.0, s.1)
}

/// Runs the CLI on `argv` (including the program name).
pub fn run<I, T>(argv: I) -> RunOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(err) => {
            use clap::error::ErrorKind;
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => RunOutcome {
                    code: EXIT_OK,
                    stdout: err.to_string(),
                    stderr: String::new(),
                },
                _ => usage_failure(err.to_string().lines().next().unwrap_or("usage error")),
            };
        }
    };
    let default_format = match &cli.command {
        Command::Enumerate(_) => Format::Csv,
        _ => Format::Json,
    };
    let format = match cli.format {
        Some(f) => f,
        None => match std::env::var(FORMAT_ENV) {
            Ok(v) if !v.is_empty() => match <Format as clap::ValueEnum>::from_str(&v, true) {
                Ok(f) => f,
                Err(_) => return usage_failure(&format!("error: invalid {FORMAT_ENV} value '{v}'")),
            },
            _ => default_format,
        },
    };
    let result = match cli.command {
        Command::Coh { e, class, twist_by, t } => cmd_coh(e, class, twist_by, t),
        Command::Check {
            e,
            line,
            sum,
            ideal,
            extension,
            wrt,
            pp,
            extra_window,
            evidence,
        } => {
            let model = match (line, sum, ideal, extension) {
                (Some(l), ..) => ModelArg::Line(l),
                (_, Some(s), ..) => ModelArg::Sum(s.0),
                (_, _, Some(i), _) => ModelArg::Ideal(i),
                (.., Some(x)) => ModelArg::Extension(x),
                _ => unreachable!("clap enforces exactly one model"),
            };
            cmd_check(e, model, wrt, pp, extra_window, evidence)
        }
        Command::Construct { e, u, v, m, s, polarization } => cmd_construct(e, u, v, m, s, polarization),
        Command::Classify(a) => cmd_classify("classify", a),
        Command::Enumerate(a) => cmd_classify("enumerate", a),
        Command::Audit { claims, e } => cmd_audit(claims, e),
        Command::Oracle { e, a, b } => cmd_oracle(e, a, b),
    };
    match result {
        Ok((record, code)) => {
            let stderr = if format == Format::Csv {
                record.findings.iter().map(|f| format!("finding: {f}\n")).collect()
            } else {
                String::new()
            };
            RunOutcome {
                code,
                stdout: record.render(format),
                stderr,
            }
        }
        Err(Failure::Usage(msg)) => usage_failure(&format!("error: {msg}")),
        Err(Failure::Lib(err)) => RunOutcome {
            code: match err {
                Error::Inconsistent(_) => EXIT_MISMATCH,
                _ => EXIT_DOMAIN,
            },
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        },
    }
}

fn usage_failure(line: &str) -> RunOutcome {
    RunOutcome {
        code: EXIT_USAGE,
        stdout: String::new(),
        stderr: format!("{line}\n"),
    }
}

fn triple_row(row: &mut Row, c: DivisorClass, g: &SurfaceGeometry) -> Result<(), Error> {
    let tr = cohomology::triple(g, c)?;
    row.insert("a".into(), c.a.into());
    row.insert("b".into(), c.b.into());
    row.insert("h0".into(), tr.h0.into());
    row.insert("h1".into(), tr.h1.into());
    row.insert("h2".into(), tr.h2.into());
    row.insert("chi".into(), cohomology::chi(g, c).into());
    Ok(())
}

fn cmd_coh(e: i64, class: Pair, twist_by: Option<Pair>, t: Option<Span>) -> CmdResult {
    let g = surface(e)?;
    let c = bounded_pair("class", class)?;
    let mut rec = OutputRecord::new("coh");
    rec.input("e", e);
    rec.input("class", class_text(c));
    match (twist_by, t) {
        (Some(by), Some(span)) => {
            let by = bounded_pair("twist-by", by)?;
            let span = bounded_span("t", span)?;
            check_cells(span_len(span))?;
            rec.input("twist_by", class_text(by));
            rec.input("t", span_text(span));
            for (t, _) in cohomology::cohomology_profile(&g, c, by, span.0, span.1)? {
                let mut row = row! { "t" => t };
                triple_row(&mut row, c.twist(t, by), &g)?;
                rec.results.push(row);
            }
        }
        _ => {
            let mut row = Row::new();
            triple_row(&mut row, c, &g)?;
            rec.results.push(row);
        }
    }
    Ok((rec, EXIT_OK))
}

enum ModelArg {
    Line(Pair),
    Sum(Vec<Pair>),
    Ideal(IdealArg),
    Extension([i64; 4]),
}

fn verdict_fields(row: &mut Row, v: &Verdict) {
    row.insert("verdict".into(), v.label().into());
    match v {
        Verdict::Fails(w) => {
            row.insert("witness_t".into(), w.t.into());
            row.insert("witness_h0".into(), w.h0.into());
            row.insert("witness_h1".into(), w.h1.into());
        }
        Verdict::Indeterminate { t } => {
            row.insert("indeterminate_t".into(), (*t).into());
        }
        Verdict::Holds => {}
    }
}

fn wrt_class(g: &SurfaceGeometry, wrt: Wrt) -> Result<DivisorClass, Error> {
    match wrt {
        Wrt::M => Ok(g.m_class()),
        Wrt::R => Ok(g.r_class()),
        Wrt::Class(p) => bounded_pair("wrt", p),
    }
}

fn wrt_text(wrt: Wrt) -> String {
    match wrt {
        Wrt::M => "M".into(),
        Wrt::R => "R".into(),
        Wrt::Class(p) => format!("{},{}", p.0, p.1),
    }
}

fn cmd_check(e: i64, model: ModelArg, wrt: Wrt, pp: bool, extra_window: i64, evidence: bool) -> CmdResult {
    let g = surface(e)?;
    let by = wrt_class(&g, wrt)?;
    let extra_window = bounded("extra-window", extra_window)?;
    let property = if pp { Property::PoundsPounds } else { Property::Pounds };
    let mut rec = OutputRecord::new("check");
    rec.input("e", e);
    rec.input("wrt", wrt_text(wrt));
    rec.input("property", if pp { "poundspounds" } else { "pounds" });

    if let ModelArg::Extension([u, v, m, s]) = model {
        rec.input("extension", format!("{u},{v},{m},{s}"));
        if wrt != Wrt::M || pp {
            return Err(Failure::Lib(Error::Domain(
                "extension bundles are audited for £ with respect to M only".into(),
            )));
        }
        let (u, v, m, s) = (bounded("u", u)?, bounded("v", v)?, bounded("m", m)?, bounded("s", s)?);
        let datum = bundles::thm_o2_construct(&g, u, v, m, s)?;
        let audit = bundles::audit_extension_pounds(&datum, extra_window)?;
        let mut row = row! {
            "kind" => "summary",
            "model" => "extension",
            "holds" => audit.verdict.holds(),
            "ext_forced_split" => datum.ext_forced_split,
        };
        verdict_fields(&mut row, &audit.verdict);
        rec.results.push(row);
        if evidence {
            for r in &audit.rows {
                let iv = r.interval;
                let mut row = row! {
                    "kind" => "twist",
                    "t" => r.t,
                    "h0_min" => iv.h0_min, "h0_max" => iv.h0_max,
                    "h1_min" => iv.h1_min, "h1_max" => iv.h1_max,
                    "h2_min" => iv.h2_min, "h2_max" => iv.h2_max,
                    "chi" => iv.chi,
                };
                verdict_fields(&mut row, &r.verdict);
                rec.results.push(row);
            }
        }
        if let Verdict::Fails(w) = audit.verdict {
            rec.findings.push(format!(
                "the extension fails £ with respect to M at t={} with h0 >= {} and h1 >= {}",
                w.t, w.h0, w.h1
            ));
        }
        return Ok((rec, EXIT_OK));
    }

    let (label, sheaf, closed): (&str, SheafModel, Option<bool>) = match model {
        ModelArg::Line(p) => {
            let c = bounded_pair("line", p)?;
            rec.input("line", class_text(c));
            let closed = match (wrt, property) {
                (Wrt::M, Property::Pounds) => natural::check_pounds_line_m(&g, c),
                (Wrt::M, Property::PoundsPounds) => natural::check_poundspounds_line_m(&g, c),
                (Wrt::R, Property::Pounds) => natural::check_pounds_line_r(&g, c),
                (_, Property::Pounds) => natural::check_pounds_line_general(&g, c, by)?,
                (_, Property::PoundsPounds) => natural::check_poundspounds_line_general(&g, c, by)?,
            };
            ("line", SheafModel::Line(c), Some(closed))
        }
        ModelArg::Sum(parts) => {
            let classes = parts
                .iter()
                .map(|p| bounded_pair("sum", *p))
                .collect::<Result<Vec<_>, _>>()?;
            rec.input(
                "sum",
                classes.iter().map(|c| format!("{},{}", c.a, c.b)).collect::<Vec<_>>().join(";"),
            );
            let closed = match (wrt, property) {
                (Wrt::M, Property::Pounds) => Some(natural::check_pounds_sum(&g, &classes)?),
                (_, Property::PoundsPounds) => Some(natural::check_poundspounds_sum(&g, &classes, by)?),
                _ => None,
            };
            ("sum", SheafModel::direct_sum(classes)?, closed)
        }
        ModelArg::Ideal(arg) => {
            let c = bounded_pair("ideal", arg.class)?;
            let z = bounded("z", arg.z)?;
            let m = IdealSheafModel::new(PointConfig::new(z, arg.locus)?, c);
            rec.input("ideal", format!("{}:{}:{},{}", arg.locus, z, c.a, c.b));
            let closed = match (wrt, property) {
                (Wrt::M, Property::Pounds) => Some(natural::check_pounds_ideal(&g, &m)),
                (_, Property::PoundsPounds) => Some(natural::check_poundspounds_ideal(&g, &m, by)?),
                _ => None,
            };
            ("ideal", SheafModel::Ideal(m), closed)
        }
        ModelArg::Extension(_) => unreachable!("handled above"),
    };

    let scan: ScanEvidence = match property {
        Property::Pounds => natural::scan_verdict(&g, &sheaf, by, extra_window)?,
        Property::PoundsPounds => natural::scan_all_twists(&g, &sheaf, by, extra_window)?,
    };
    let holds = closed.unwrap_or_else(|| scan.verdict.holds());
    let mut row = row! { "kind" => "summary", "model" => label, "holds" => holds };
    if let Some(c) = closed {
        row.insert("closed_form".into(), c.into());
    }
    verdict_fields(&mut row, &scan.verdict);
    if let Some(f) = scan.first_section {
        row.insert("first_section".into(), f.into());
    }
    if let Some(b) = scan.stabilization_bound {
        row.insert("stabilization_bound".into(), b.into());
    }
    rec.results.push(row);
    if evidence {
        for r in &scan.rows {
            rec.results.push(row! { "kind" => "twist", "t" => r.t, "h0" => r.h0, "h1" => r.h1 });
        }
    }
    if let Some(c) = closed {
        let determinate = !matches!(scan.verdict, Verdict::Indeterminate { .. });
        if determinate && c != scan.verdict.holds() {
            rec.findings.push(format!(
                "closed form says {c} but the twist scan says {}",
                scan.verdict.label()
            ));
            return Ok((rec, EXIT_MISMATCH));
        }
    }
    Ok((rec, EXIT_OK))
}

fn cmd_construct(e: i64, u: i64, v: i64, m: i64, s: i64, pol: Option<Polarization>) -> CmdResult {
    let g = surface(e)?;
    let (u, v, m, s) = (bounded("u", u)?, bounded("v", v)?, bounded("m", m)?, bounded("s", s)?);
    let mut rec = OutputRecord::new("construct");
    rec.input("e", e);
    rec.input("u", u);
    rec.input("v", v);
    rec.input("m", m);
    rec.input("s", s);
    let datum = bundles::thm_o2_construct(&g, u, v, m, s)?;
    let (a_tilde, b_tilde) = bundles::ab_tilde(&g, u, v, m)?;
    let mut row = row! {
        "kind" => "datum",
        "c1" => class_text(datum.c1()),
        "c2" => datum.chern().c2,
        "a_tilde" => a_tilde,
        "b_tilde" => b_tilde,
        "sub" => class_text(datum.sub),
        "quotient" => class_text(datum.quotient.class),
        "points" => datum.s,
        "section_min" => datum.certificates.section_min,
        "cayley_bacharach" => datum.certificates.cayley_bacharach,
        "cayley_bacharach_exact" => datum.certificates.cayley_bacharach_exact,
        "ext_forced_split" => datum.ext_forced_split,
    };
    let pols: Vec<Polarization> = match pol {
        Some(p) => vec![p],
        None => vec![Polarization::R, Polarization::M],
    };
    let mut candidate_rows = Vec::new();
    if m == 0 {
        for p in pols {
            let name = match p {
                Polarization::R => "R",
                Polarization::M => "M",
            };
            let rep = bundles::stability_certificate(&datum, p)?;
            row.insert(format!("stable_{name}"), rep.certified.into());
            for w in &rep.warnings {
                rec.findings.push(format!("{name}-stability hypothesis not met: {w}"));
            }
            if !rep.dichotomy_holds {
                rec.findings.push(format!(
                    "{name}: a candidate with h0(Delta) >= s has gamma > 0 and delta > 0"
                ));
            }
            for c in rep.candidates {
                let reason = match c.exclusion {
                    Some(bundles::Exclusion::Genericity { h0_delta, s }) => {
                        format!("h0(Delta)={h0_delta} <= s={s}")
                    }
                    None if c.maps_to_sub => "maps into the subbundle".to_string(),
                    None => format!("h0(Delta)={} > s={}", c.h0_delta, datum.s),
                };
                candidate_rows.push(row! {
                    "kind" => "candidate",
                    "polarization" => name,
                    "n" => class_text(c.n),
                    "extends_below" => c.extends_below,
                    "delta" => class_text(c.delta),
                    "h0_delta" => c.h0_delta,
                    "excluded" => c.exclusion.is_some(),
                    "reason" => reason,
                });
            }
        }
    } else {
        rec.findings.push("stability certificates need m = 0; skipped".to_string());
    }
    for a in &datum.assumptions {
        rec.findings.push(format!("assumed: {a}"));
    }
    rec.results.push(row);
    rec.results.extend(candidate_rows);
    Ok((rec, EXIT_OK))
}

fn witness_text(spans: &[(i64, i64)]) -> String {
    spans
        .iter()
        .map(|(a, b)| format!("{a}..{b}"))
        .collect::<Vec<_>>()
        .join(";")
}

fn cmd_classify(name: &str, a: ClassifyArgs) -> CmdResult {
    let g = surface(a.e)?;
    let r = bounded("r", a.r)?;
    let u = bounded_span("u", a.u)?;
    let v = bounded_span("v", a.v)?;
    let m_max = bounded("m-max", a.m_max)?;
    check_cells(span_len(u) * span_len(v))?;
    check_cells(span_len(u) * span_len(v) * (m_max.max(0) + 1))?;
    let mut rec = OutputRecord::new(name);
    rec.input("e", a.e);
    rec.input("r", r);
    rec.input("u", span_text(u));
    rec.input("v", span_text(v));
    rec.input("m_max", m_max);
    for cell in bundles::classify_region(&g, r, u, v, m_max)? {
        let mut row = row! { "u" => cell.u, "v" => cell.v, "label" => cell.label.as_str() };
        if !cell.witness.is_empty() {
            row.insert("witness".into(), witness_text(&cell.witness).into());
        }
        rec.results.push(row);
    }
    Ok((rec, EXIT_OK))
}

fn cmd_audit(claims: Option<Vec<String>>, e: Span) -> CmdResult {
    let (lo, hi) = bounded_span("e", e)?;
    SurfaceGeometry::new(lo)?;
    if hi > 64 {
        return Err(Failure::Lib(Error::Domain(format!("audit supports e <= 64, got {hi}"))));
    }
    let ids: Vec<String> = match claims {
        Some(list) => list.into_iter().map(|s| s.trim().to_string()).collect(),
        None => audit::CLAIMS.iter().map(|s| s.to_string()).collect(),
    };
    let mut rec = OutputRecord::new("audit");
    rec.input("claims", ids.join(","));
    rec.input("e", span_text((lo, hi)));
    for id in &ids {
        let Some(claim) = audit::Claim::parse(id) else {
            return Err(Failure::Usage(format!(
                "unknown claim '{id}' (known: {})",
                audit::CLAIMS.join(", ")
            )));
        };
        let report = audit::run_claim(claim, lo, hi)?;
        rec.results.push(row! {
            "claim" => report.claim,
            "status" => report.status(),
            "checked" => report.checked,
            "disagreements" => report.disagreements,
        });
        rec.findings.extend(report.findings.into_iter().map(|f| format!("{}: {f}", report.claim)));
    }
    Ok((rec, EXIT_OK))
}

fn cmd_oracle(e: Span, a: Span, b: Span) -> CmdResult {
    let e = bounded_span("e", e)?;
    let a = bounded_span("a", a)?;
    let b = bounded_span("b", b)?;
    SurfaceGeometry::new(e.0)?;
    check_cells(span_len(e) * span_len(a) * span_len(b))?;
    // the brute-force count is quadratic in the coefficients
    if a.0.abs().max(a.1.abs()).max(b.0.abs()).max(b.1.abs()) > 2_000 {
        return Err(Failure::Lib(Error::Domain("oracle coefficients must satisfy |x| <= 2000".into())));
    }
    let mut rec = OutputRecord::new("oracle");
    rec.input("e", span_text(e));
    rec.input("a", span_text(a));
    rec.input("b", span_text(b));
    let mut total = 0;
    for e in e.0..=e.1 {
        let g = SurfaceGeometry::new(e)?;
        let r = audit::oracle_grid(&g, a, b)?;
        total += r.mismatches();
        rec.results.push(row! {
            "e" => e,
            "classes" => r.classes,
            "h0_mismatches" => r.h0,
            "h2_mismatches" => r.h2,
            "chi_mismatches" => r.chi,
            "vanishing_mismatches" => r.vanishing,
        });
        rec.findings.extend(r.examples);
    }
    Ok((rec, if total == 0 { EXIT_OK } else { EXIT_MISMATCH }))
}
