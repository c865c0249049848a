//! Library half of the `invalg` command: argument types, report types and
//! rendering. The binary only parses arguments and maps errors to exit codes.

pub mod args;
pub mod report;

use std::fmt::Write as _;

use invalg::{verify_all, Error, FieldSpec, Int, Result, VerifyConfig};
use serde::Serialize;

use args::{Cli, Command, OutputFormat};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_CONSISTENCY: u8 = 3;
pub const EXIT_RESOURCE: u8 = 4;

pub fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Parse { .. } | Error::Precondition(_) => EXIT_INPUT,
        Error::Consistency(_) => EXIT_CONSISTENCY,
        Error::Overflow(_) | Error::Bound { .. } => EXIT_RESOURCE,
    }
}

/// Rendered command output and the exit code it should produce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub body: String,
    pub code: u8,
}

impl Output {
    fn ok(body: String) -> Self {
        Output { body, code: EXIT_OK }
    }
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| Error::Consistency(format!("json encoding: {e}")))?;
    text.push('\n');
    Ok(text)
}

fn csv_rows<T: Serialize>(rows: &[T]) -> Result<String> {
    let fail = |e: &dyn std::fmt::Display| Error::Consistency(format!("csv encoding: {e}"));
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).map_err(|e| fail(&e))?;
    }
    let bytes = w.into_inner().map_err(|e| fail(&e))?;
    String::from_utf8(bytes).map_err(|e| fail(&e))
}

fn join(values: &[Int]) -> String {
    values.iter().map(Int::to_string).collect::<Vec<_>>().join(",")
}

fn opt_bool(b: Option<bool>) -> String {
    b.map_or("n/a".to_string(), |b| b.to_string())
}

// Renders with `text` for text output, `row` for the single CSV row, and
// serde for JSON.
fn emit<T: Serialize, R: Serialize>(
    format: OutputFormat,
    value: &T,
    text: impl FnOnce(&T) -> String,
    rows: impl FnOnce(&T) -> Vec<R>,
) -> Result<String> {
    match format {
        OutputFormat::Text => Ok(text(value)),
        OutputFormat::Json => json(value),
        OutputFormat::Csv => csv_rows(&rows(value)),
    }
}

#[derive(Serialize)]
struct AnalyzeRow {
    partition: String,
    n: Int,
    s: usize,
    g_vector: String,
    h_vector: String,
    epsilon: String,
    dimension: Int,
    determinant: Int,
    det_lower: Int,
    det_upper: Int,
    semisimple: bool,
    wedderburn: String,
}

#[derive(Serialize)]
struct CompareRow {
    lambda: String,
    mu: String,
    equivalent: bool,
    isomorphic: String,
    morita: String,
    epsilon_lambda: String,
    epsilon_mu: String,
}

#[derive(Serialize)]
struct IsoRow {
    lambda: String,
    mu: String,
    isomorphic: bool,
    shape_lambda: String,
    shape_mu: String,
}

#[derive(Serialize)]
struct MoritaRow {
    lambda: String,
    mu: String,
    morita: bool,
    simple_blocks_lambda: Int,
    simple_blocks_mu: Int,
    signed_value_lambda: Int,
    signed_value_mu: Int,
}

#[derive(Serialize)]
struct PartsRow {
    parts: String,
}

#[derive(Serialize)]
struct CountRow {
    s: usize,
    n: usize,
    p: Int,
    i: usize,
    /// "size:count" pairs separated by ';'
    e: String,
}

#[derive(Serialize)]
struct FamilyRow {
    family: String,
    instances: usize,
    failures: usize,
    status: &'static str,
}

#[derive(Serialize)]
struct PermRow {
    permutation: String,
    degree: usize,
    cycle_type: String,
    pair_orbits: usize,
    commutant_nullity: String,
    wedderburn: String,
}

fn analyze_text(r: &report::AnalyzeReport) -> String {
    let mut out = String::new();
    let mut line = |k: &str, v: String| writeln!(out, "{k:<14} {v}").unwrap();
    line("partition", r.partition.to_string());
    line("n", r.n.to_string());
    line("s", r.s.to_string());
    line("g-vector", r.g_vector.to_string());
    line("h-vector", r.h_vector.to_string());
    line("epsilon", r.epsilon.clone());
    line("eigenvalues", format!("{} distinct", r.distinct_eigenvalues));
    line("dimension", r.dimension.to_string());
    let det = &r.determinant;
    if det.distinct {
        line(
            "det C",
            format!("{} (bounds {} <= det <= {})", det.determinant, det.lower, det.upper),
        );
    } else {
        line("det C", det.determinant.to_string());
    }
    let closed = if r.algebraically_closed { "algebraically closed" } else { "not algebraically closed" };
    line("field", format!("characteristic {}, {closed}", r.characteristic));
    if r.semisimple {
        line("semisimple", "yes".into());
    } else {
        line("semisimple", r.note.clone().unwrap_or_else(|| "no".into()));
    }
    match (&r.wedderburn_text, &r.note) {
        (Some(shape), _) => line("wedderburn", shape.clone()),
        (None, Some(note)) if r.semisimple => line("wedderburn", format!("unavailable: {note}")),
        _ => {}
    }
    out
}

fn compare_text(r: &report::CompareReport) -> String {
    let mut out = String::new();
    writeln!(out, "lambda      {}  epsilon {}", r.lambda, r.epsilon[0]).unwrap();
    writeln!(out, "mu          {}  epsilon {}", r.mu, r.epsilon[1]).unwrap();
    writeln!(out, "equivalent  {}", r.equivalent).unwrap();
    writeln!(out, "isomorphic  {} (n = {}, m = {})", opt_bool(r.isomorphic), r.degrees[0], r.degrees[1]).unwrap();
    match (r.simple_blocks, r.signed_values) {
        (Some(b), Some(v)) => writeln!(
            out,
            "morita      {} (simple blocks {} and {}, signed values {} and {})",
            opt_bool(r.morita),
            b[0],
            b[1],
            v[0],
            v[1]
        )
        .unwrap(),
        _ => writeln!(out, "morita      {}", opt_bool(r.morita)).unwrap(),
    }
    if let Some(note) = &r.note {
        writeln!(out, "note        {note}").unwrap();
    }
    out
}

fn classes_text(c: &invalg::EquivalenceClasses) -> String {
    let mut out = String::new();
    writeln!(out, "P({},{}): p = {}, i = {}", c.s, c.n, c.summary.p, c.summary.i).unwrap();
    let hist: Vec<String> = c.summary.e.iter().map(|(j, k)| format!("e({j}) = {k}")).collect();
    writeln!(out, "{}", hist.join(", ")).unwrap();
    for (id, class) in c.classes.iter().enumerate() {
        let members: Vec<String> = class.members.iter().map(ToString::to_string).collect();
        writeln!(out, "[{id}] g = {}  epsilon = {}", class.key, class.epsilon).unwrap();
        writeln!(out, "    {}", members.join(" ")).unwrap();
    }
    out
}

fn list_text(l: &report::PartitionList) -> String {
    l.partitions.iter().map(|p| format!("{p}\n")).collect()
}

fn list_rows(l: &report::PartitionList) -> Vec<PartsRow> {
    l.partitions.iter().map(|p| PartsRow { parts: join(p.parts()) }).collect()
}

fn perm_text(r: &report::PermReport) -> String {
    let mut out = String::new();
    let mut line = |k: &str, v: String| writeln!(out, "{k:<18} {v}").unwrap();
    line("permutation", r.permutation.clone());
    line("degree", r.degree.to_string());
    line("cycle type", r.cycle_type.to_string());
    line("pair orbits", r.pair_orbits.to_string());
    line("dimension", r.dimension.to_string());
    if let Some(k) = r.commutant_nullity {
        line("commutant nullity", k.to_string());
    }
    match (&r.wedderburn_text, &r.note) {
        (Some(shape), _) => line("wedderburn", shape.clone()),
        (None, Some(note)) => line("wedderburn", format!("unavailable: {note}")),
        _ => {}
    }
    out
}

pub fn run(cli: &Cli) -> Result<Output> {
    let g = &cli.global;
    let field = FieldSpec::new(g.characteristic, !g.not_closed)?;
    let format = g.format;
    let body = match &cli.command {
        Command::Analyze { partition } => {
            let r = report::analyze(partition, &field)?;
            emit(format, &r, analyze_text, |r| {
                vec![AnalyzeRow {
                    partition: join(r.partition.parts()),
                    n: r.n,
                    s: r.s,
                    g_vector: join(r.g_vector.values()),
                    h_vector: join(r.h_vector.values()),
                    epsilon: r.epsilon.clone(),
                    dimension: r.dimension,
                    determinant: r.determinant.determinant,
                    det_lower: r.determinant.lower,
                    det_upper: r.determinant.upper,
                    semisimple: r.semisimple,
                    wedderburn: r.wedderburn_text.clone().unwrap_or_default(),
                }]
            })?
        }
        Command::Compare { lambda, mu } => {
            let r = report::compare(lambda, mu, &field)?;
            emit(format, &r, compare_text, |r| {
                vec![CompareRow {
                    lambda: join(r.lambda.parts()),
                    mu: join(r.mu.parts()),
                    equivalent: r.equivalent,
                    isomorphic: opt_bool(r.isomorphic),
                    morita: opt_bool(r.morita),
                    epsilon_lambda: r.epsilon[0].clone(),
                    epsilon_mu: r.epsilon[1].clone(),
                }]
            })?
        }
        Command::Iso { lambda, mu } => {
            let r = report::iso(lambda, mu, &field)?;
            emit(
                format,
                &r,
                |r| {
                    format!(
                        "isomorphic  {}\n{}  {}\n{}  {}\n",
                        r.isomorphic, r.lambda, r.shape_text[0], r.mu, r.shape_text[1]
                    )
                },
                |r| {
                    vec![IsoRow {
                        lambda: join(r.lambda.parts()),
                        mu: join(r.mu.parts()),
                        isomorphic: r.isomorphic,
                        shape_lambda: r.shape_text[0].clone(),
                        shape_mu: r.shape_text[1].clone(),
                    }]
                },
            )?
        }
        Command::Morita { lambda, mu } => {
            let r = report::morita(lambda, mu, &field)?;
            let v = &r.verdict;
            emit(
                format,
                &r,
                |r| {
                    format!(
                        "{} vs {}\nmorita         {}\nsimple blocks  {} {}\nsigned values  {} {}\n",
                        r.lambda,
                        r.mu,
                        v.equivalent,
                        v.simple_blocks[0],
                        v.simple_blocks[1],
                        v.signed_values[0],
                        v.signed_values[1]
                    )
                },
                |r| {
                    vec![MoritaRow {
                        lambda: join(r.lambda.parts()),
                        mu: join(r.mu.parts()),
                        morita: v.equivalent,
                        simple_blocks_lambda: v.simple_blocks[0],
                        simple_blocks_mu: v.simple_blocks[1],
                        signed_value_lambda: v.signed_values[0],
                        signed_value_mu: v.signed_values[1],
                    }]
                },
            )?
        }
        Command::Classify { s, n } => {
            let (classes, rows) = report::classify_rows(*s, *n)?;
            emit(format, &classes, classes_text, |_| rows)?
        }
        Command::SelfEquivalent { s, n } => {
            let r = report::self_equivalent(*s, *n)?;
            emit(format, &r, list_text, list_rows)?
        }
        Command::Enumerate { s, n } => {
            let r = report::enumerate(*s, *n)?;
            emit(format, &r, list_text, list_rows)?
        }
        Command::Count { s, n } => {
            let r = report::count(*s, *n)?;
            let hist = |r: &report::CountReport| {
                r.e.iter().map(|(j, k)| format!("{j}:{k}")).collect::<Vec<_>>().join(";")
            };
            emit(
                format,
                &r,
                |r| format!("p = {}\ni = {}\ne = {}\n", r.p, r.i, hist(r)),
                |r| {
                    vec![CountRow {
                        s: r.s,
                        n: r.n,
                        p: r.p,
                        i: r.i,
                        e: hist(r),
                    }]
                },
            )?
        }
        Command::Perm {
            cycles,
            degree,
            matrix_cap,
        } => {
            let r = report::perm(cycles, *degree, *matrix_cap, &field)?;
            emit(format, &r, perm_text, |r| {
                vec![PermRow {
                    permutation: r.permutation.clone(),
                    degree: r.degree,
                    cycle_type: join(r.cycle_type.parts()),
                    pair_orbits: r.pair_orbits,
                    commutant_nullity: r.commutant_nullity.map_or(String::new(), |k| k.to_string()),
                    wedderburn: r.wedderburn_text.clone().unwrap_or_default(),
                }]
            })?
        }
        Command::Verify {
            nmax,
            matrix_cap,
            inject_fault,
        } => {
            let mut cfg = VerifyConfig::new(*nmax).with_matrix_cap(*matrix_cap);
            cfg.inject_fault = *inject_fault;
            let r = verify_all(&cfg)?;
            let code = if r.passed() { EXIT_OK } else { EXIT_VERIFY_FAILED };
            let body = emit(format, &r, |r| format!("{r}\n"), |r| {
                r.families
                    .iter()
                    .map(|f| FamilyRow {
                        family: f.family.clone(),
                        instances: f.instances,
                        failures: f.failures.len(),
                        status: if f.passed() { "pass" } else { "fail" },
                    })
                    .collect()
            })?;
            return Ok(Output { body, code });
        }
    };
    Ok(Output::ok(body))
}
