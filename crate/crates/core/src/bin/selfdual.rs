use std::collections::HashSet;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rayon::prelude::*;

use selfdual::chainring::{canonical_form, is_self_dual, CanonicalForm};
use selfdual::enumerator::{count_self_dual, find_case, sample_codes, to_negacyclic, CaseBuilder, CodeStream};
use selfdual::export::{count_rows, parse_params, read_code_records, total_of, write_count_csv, CodeRecord};
use selfdual::gmatrix::{build_g, g_for_len, upsilon, upsilon_range, MatrixFp};
use selfdual::{find_irreducible, ChainRing, CodeSpec, FieldSpec, RIdealGens, RVector};

#[derive(Parser)]
#[command(
    name = "selfdual",
    version,
    about = "Self-dual cyclic and negacyclic codes of length p^s over F_{p^m} + uF_{p^m}"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    /// G itself
    G,
    /// G + I
    Plus,
    /// G - I
    Minus,
    /// the Υ columns of G_l + I_l below row δ (needs --l and --delta)
    Upsilon,
}

#[derive(Args)]
struct FieldArgs {
    /// odd prime p
    #[arg(short = 'p')]
    p: u64,
    /// extension degree m of F_{p^m}
    #[arg(short = 'm', default_value_t = 1)]
    m: usize,
    /// code length is p^s
    #[arg(short = 's')]
    s: u32,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// write here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct Range {
    /// skip this many codes of the enumeration order
    #[arg(long, default_value = "0")]
    offset: BigUint,
    /// stop after this many codes
    #[arg(long)]
    limit: Option<u64>,
    /// draw this many codes uniformly at random instead (with replacement)
    #[arg(long, conflicts_with_all = ["offset", "limit"])]
    sample: Option<usize>,
    #[arg(long, default_value_t = 0, requires = "sample")]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Print G_{p^λ} or G_l (optionally ± I, or its Υ columns)
    Gmatrix {
        #[arg(short = 'p')]
        p: u32,
        #[arg(long, conflicts_with = "l", required_unless_present = "l")]
        lambda: Option<u32>,
        /// truncation size l (uses G_{p^λ} with the least p^λ ≥ l)
        #[arg(long)]
        l: Option<usize>,
        #[arg(long, value_enum, default_value_t = Which::G)]
        which: Which,
        #[arg(long)]
        delta: Option<usize>,
        /// print residues in [0, p) instead of signed representatives
        #[arg(long)]
        residues: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Number of self-dual cyclic codes, optionally per case
    Count {
        #[command(flatten)]
        field: FieldArgs,
        /// one line per case family (text format)
        #[arg(long)]
        by_case: bool,
        #[command(flatten)]
        output: Output,
    },
    /// List self-dual cyclic codes in enumeration order
    Enumerate {
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        range: Range,
        #[command(flatten)]
        output: Output,
    },
    /// Build the single code with the given k and parameters
    Build {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        k: usize,
        /// field elements separated by ',', coefficients of one element by ':'
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        params: String,
        #[command(flatten)]
        output: Output,
    },
    /// Check codes with the independent self-duality verifier
    Verify {
        #[arg(short = 'p', required_unless_present = "input")]
        p: Option<u64>,
        #[arg(short = 'm', default_value_t = 1)]
        m: usize,
        #[arg(short = 's', required_unless_present = "input")]
        s: Option<u32>,
        /// the whole family
        #[arg(long, conflicts_with_all = ["limit", "sample", "input"])]
        all: bool,
        /// also check the negacyclic image of each code
        #[arg(long)]
        negacyclic: bool,
        /// verify the records of a JSON file written by enumerate/build/negacyclic
        #[arg(long, conflicts_with_all = ["p", "s"])]
        input: Option<PathBuf>,
        #[command(flatten)]
        range: Range,
        #[command(flatten)]
        output: Output,
    },
    /// List the negacyclic images φ(C) of the self-dual cyclic codes
    Negacyclic {
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        range: Range,
        #[command(flatten)]
        output: Output,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn open_output(out: &Option<PathBuf>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => {
            Box::new(BufWriter::new(File::create(path).with_context(|| format!("cannot create {}", path.display()))?))
        }
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn field_of(args: &FieldArgs) -> anyhow::Result<FieldSpec> {
    if args.s == 0 {
        bail!("s must be at least 1");
    }
    Ok(find_irreducible(args.p, args.m)?)
}

/// The selected codes: a seeded sample, or an offset/limit window.
fn select_codes(
    field: &FieldSpec,
    s: u32,
    range: &Range,
) -> anyhow::Result<Box<dyn Iterator<Item = (BigUint, CodeSpec)>>> {
    if let Some(n) = range.sample {
        let codes = sample_codes(field, s, n, range.seed)?;
        return Ok(Box::new(codes.into_iter().enumerate().map(|(i, c)| (BigUint::from(i), c))));
    }
    let start = range.offset.clone();
    let stream =
        CodeStream::starting_at(field, s, &start)?.enumerate().map(move |(i, c)| (&start + BigUint::from(i), c));
    Ok(match range.limit {
        Some(n) => Box::new(stream.take(n as usize)),
        None => Box::new(stream),
    })
}

fn run(command: Command) -> anyhow::Result<bool> {
    match command {
        Command::Gmatrix { p, lambda, l, which, delta, residues, output } => {
            gmatrix(p, lambda, l, which, delta, residues, &output)
        }
        Command::Count { field, by_case, output } => count(&field, by_case, &output),
        Command::Enumerate { field, range, output } => list(&field, &range, &output, false),
        Command::Negacyclic { field, range, output } => list(&field, &range, &output, true),
        Command::Build { field, k, params, output } => build(&field, k, &params, &output),
        Command::Verify { p, m, s, all, negacyclic, input, range, output } => match input {
            Some(path) => verify_file(&path, &output),
            None => {
                let field = FieldArgs { p: p.expect("required"), m, s: s.expect("required") };
                if !all && range.limit.is_none() && range.sample.is_none() {
                    bail!("choose the codes to check with --all, --limit or --sample");
                }
                verify_family(&field, &range, negacyclic, &output)
            }
        },
    }
}

fn render_matrix(m: &MatrixFp, residues: bool) -> Vec<Vec<i64>> {
    if residues {
        m.to_rows().into_iter().map(|r| r.into_iter().map(i64::from).collect()).collect()
    } else {
        m.to_signed_rows()
    }
}

fn grid(rows: &[Vec<i64>]) -> String {
    let width = rows.iter().flatten().map(|v| v.to_string().len()).max().unwrap_or(1);
    rows.iter().map(|r| r.iter().map(|v| format!("{v:>width$}")).collect::<Vec<_>>().join(" ") + "\n").collect()
}

fn signed(v: u32, p: u32) -> i64 {
    if v > p / 2 {
        v as i64 - p as i64
    } else {
        v as i64
    }
}

fn gmatrix(
    p: u32,
    lambda: Option<u32>,
    l: Option<usize>,
    which: Which,
    delta: Option<usize>,
    residues: bool,
    output: &Output,
) -> anyhow::Result<bool> {
    let g = match (lambda, l) {
        (Some(lam), _) => build_g(p, lam)?,
        (None, Some(l)) => g_for_len(p, l)?,
        (None, None) => unreachable!("clap requires one of --lambda, --l"),
    };
    let mut out = open_output(&output.out)?;
    if which == Which::Upsilon {
        let delta = delta.context("--which upsilon needs --delta")?;
        let vecs = upsilon_range(g.rows(), delta).map(|j| upsilon(&g, j, delta)).collect::<Result<Vec<_>, _>>()?;
        let show = |v: u32| if residues { v as i64 } else { signed(v, p) };
        match output.format {
            OutputFormat::Json => {
                let items: Vec<_> = vecs
                    .iter()
                    .map(|u| {
                        serde_json::json!({
                            "index": u.source_index, "delta": u.delta, "l": u.l,
                            "values": u.values.iter().map(|&v| show(v)).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                writeln!(out, "{}", serde_json::to_string(&items)?)?;
            }
            OutputFormat::Text => {
                let rows: Vec<Vec<i64>> = vecs.iter().map(|u| u.values.iter().map(|&v| show(v)).collect()).collect();
                let lines = grid(&rows);
                for (u, line) in vecs.iter().zip(lines.lines()) {
                    writeln!(out, "Y{:<4}{line}", u.source_index)?;
                }
            }
            OutputFormat::Csv => bail!("csv output is only available for count"),
        }
        out.flush()?;
        return Ok(true);
    }
    let m = match which {
        Which::G => g,
        Which::Plus => g.shift_diagonal(1),
        Which::Minus => g.shift_diagonal(-1),
        Which::Upsilon => unreachable!(),
    };
    let rows = render_matrix(&m, residues);
    match output.format {
        OutputFormat::Text => write!(out, "{}", grid(&rows))?,
        OutputFormat::Json => writeln!(out, "{}", serde_json::to_string(&rows)?)?,
        OutputFormat::Csv => bail!("csv output is only available for count"),
    }
    out.flush()?;
    Ok(true)
}

fn count(field: &FieldArgs, by_case: bool, output: &Output) -> anyhow::Result<bool> {
    if field.s == 0 {
        bail!("s must be at least 1");
    }
    let mut out = open_output(&output.out)?;
    match output.format {
        OutputFormat::Text if !by_case => writeln!(out, "{}", count_self_dual(field.p, field.m, field.s)?)?,
        OutputFormat::Text => {
            let rows = count_rows(field.p, field.m, field.s)?;
            for r in &rows {
                writeln!(out, "{:<7} nu={:<3} k={:<4} {}", r.case, r.nu, r.k, r.count)?;
            }
            writeln!(out, "total {}", total_of(&rows))?;
        }
        OutputFormat::Csv => write_count_csv(&mut out, &count_rows(field.p, field.m, field.s)?)?,
        OutputFormat::Json => {
            let rows = count_rows(field.p, field.m, field.s)?;
            let doc = serde_json::json!({
                "p": field.p, "m": field.m, "s": field.s,
                "total": total_of(&rows).to_string(),
                "cases": rows,
            });
            writeln!(out, "{}", serde_json::to_string(&doc)?)?;
        }
    }
    out.flush()?;
    Ok(true)
}

fn std_poly(coeffs: &[selfdual::FqElem]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| match i {
            0 => c.to_string(),
            1 => format!("{c}*x"),
            _ => format!("{c}*x^{i}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn generator_text(g: &RVector) -> String {
    let a: Vec<_> = g.entries.iter().map(|e| e.a.clone()).collect();
    let b: Vec<_> = g.entries.iter().map(|e| e.b.clone()).collect();
    format!("({}) + u*({})", std_poly(&a), std_poly(&b))
}

fn write_code(
    out: &mut dyn Write,
    idx: &BigUint,
    code: &CodeSpec,
    format: OutputFormat,
    negacyclic: bool,
) -> anyhow::Result<()> {
    match format {
        OutputFormat::Json => {
            let rec = if negacyclic { CodeRecord::negacyclic_from_code(code) } else { CodeRecord::from_code(code) };
            writeln!(out, "{}", serde_json::to_string(&rec)?)?;
        }
        OutputFormat::Text => {
            let d = &code.descriptor;
            writeln!(out, "#{idx} {} nu={} k={}  {code}", d.sub, d.nu, d.k)?;
            if negacyclic {
                let gens = to_negacyclic(code);
                for g in &gens.generators {
                    writeln!(out, "    phi: {}", generator_text(g))?;
                }
            }
        }
        OutputFormat::Csv => bail!("csv output is only available for count"),
    }
    Ok(())
}

fn list(field: &FieldArgs, range: &Range, output: &Output, negacyclic: bool) -> anyhow::Result<bool> {
    let f = field_of(field)?;
    let mut out = open_output(&output.out)?;
    for (idx, code) in select_codes(&f, field.s, range)? {
        write_code(&mut out, &idx, &code, output.format, negacyclic)?;
    }
    out.flush()?;
    Ok(true)
}

fn build(field: &FieldArgs, k: usize, params: &str, output: &Output) -> anyhow::Result<bool> {
    let f = field_of(field)?;
    let desc = find_case(field.p, field.s, k)?;
    let params = parse_params(&f, params)?;
    let code = CaseBuilder::new(&f, field.s, desc)?.build(&params)?;
    let mut out = open_output(&output.out)?;
    match output.format {
        OutputFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&CodeRecord::from_code(&code))?)?,
        OutputFormat::Text => {
            writeln!(out, "{code}")?;
            for g in &code.generators.generators {
                writeln!(out, "    {}", generator_text(g))?;
            }
        }
        OutputFormat::Csv => bail!("csv output is only available for count"),
    }
    out.flush()?;
    Ok(true)
}

struct Verdict {
    self_dual: bool,
    form: CanonicalForm,
}

fn check(ring: &ChainRing, gens: &RIdealGens) -> Verdict {
    Verdict { self_dual: is_self_dual(ring, gens), form: canonical_form(ring, gens) }
}

/// Checked in parallel a batch at a time; results come back in input order.
const BATCH: usize = 256;

fn verify_family(field: &FieldArgs, range: &Range, negacyclic: bool, output: &Output) -> anyhow::Result<bool> {
    let f = field_of(field)?;
    let ring = ChainRing::new(f.clone());
    let mut codes = select_codes(&f, field.s, range)?;
    let mut out = open_output(&output.out)?;
    let (mut total, mut passed, mut neg_passed) = (0u64, 0u64, 0u64);
    let mut forms: HashSet<CanonicalForm> = HashSet::new();
    let mut failures = Vec::new();
    loop {
        let batch: Vec<(BigUint, CodeSpec)> = codes.by_ref().take(BATCH).collect();
        if batch.is_empty() {
            break;
        }
        let verdicts: Vec<(Verdict, bool)> = batch
            .par_iter()
            .map(|(_, c)| (check(&ring, &c.generators), !negacyclic || is_self_dual(&ring, &to_negacyclic(c))))
            .collect();
        for ((idx, code), (v, neg_ok)) in batch.iter().zip(verdicts) {
            total += 1;
            passed += v.self_dual as u64;
            neg_passed += (negacyclic && neg_ok) as u64;
            if !v.self_dual || !neg_ok {
                failures.push(format!("#{idx} {code}"));
            }
            forms.insert(v.form);
        }
    }
    let distinct = forms.len() as u64;
    let ok = failures.is_empty() && (range.sample.is_some() || distinct == total);
    match output.format {
        OutputFormat::Text => {
            for fail in &failures {
                writeln!(out, "FAIL {fail}")?;
            }
            writeln!(out, "{passed}/{total} self-dual")?;
            if negacyclic {
                writeln!(out, "{neg_passed}/{total} negacyclic images self-dual")?;
            }
            writeln!(out, "{distinct}/{total} distinct")?;
        }
        OutputFormat::Json => {
            let doc = serde_json::json!({
                "checked": total, "self_dual": passed, "distinct": distinct,
                "negacyclic_self_dual": if negacyclic { Some(neg_passed) } else { None },
                "failures": failures,
            });
            writeln!(out, "{}", serde_json::to_string(&doc)?)?;
        }
        OutputFormat::Csv => bail!("csv output is only available for count"),
    }
    out.flush()?;
    Ok(ok)
}

fn verify_file(path: &PathBuf, output: &Output) -> anyhow::Result<bool> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let records = read_code_records(&text)?;
    let results: Vec<Result<bool, String>> = records
        .par_iter()
        .map(|rec| {
            rec.to_code_spec().map_err(|e| e.to_string())?;
            let gens = rec.ideal().map_err(|e| e.to_string())?;
            let ring = ChainRing::new(rec.field().map_err(|e| e.to_string())?);
            Ok(is_self_dual(&ring, &gens))
        })
        .collect();
    let mut out = open_output(&output.out)?;
    let total = results.len();
    let mut passed = 0;
    let mut failures = Vec::new();
    for (i, r) in results.into_iter().enumerate() {
        match r {
            Ok(true) => passed += 1,
            Ok(false) => failures.push(format!("record {i}: not self-dual")),
            Err(e) => failures.push(format!("record {i}: {e}")),
        }
    }
    match output.format {
        OutputFormat::Text => {
            for fail in &failures {
                writeln!(out, "FAIL {fail}")?;
            }
            writeln!(out, "{passed}/{total} self-dual")?;
        }
        OutputFormat::Json => {
            let doc = serde_json::json!({ "checked": total, "self_dual": passed, "failures": failures });
            writeln!(out, "{}", serde_json::to_string(&doc)?)?;
        }
        OutputFormat::Csv => bail!("csv output is only available for count"),
    }
    out.flush()?;
    Ok(failures.is_empty())
}
