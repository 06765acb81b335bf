use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qvariety::affine::{build_code, subfield_subcode, ClassicalCode, DeltaSet, VarietySpec};
use qvariety::cyclo::{Axis, CyclotomicPartition};
use qvariety::designer::{design_univariate_with_budget, UniRule, UnivariateDesign};
use qvariety::fixtures::{compare_golden, fixture, to_csv, to_json, FIXTURES};
use qvariety::galois::{make_field, prime_power};
use qvariety::hyper::{design_multivariate_with_budget, design_subfield_multivariate_with_budget, MultiRule, SubfieldRule};
use qvariety::oracle::{min_distance_exact, no_word_below, Budget};
use qvariety::ortho::{certify_self_orthogonal, Metric};
use qvariety::Error;

#[derive(Parser)]
#[command(name = "qvariety", version, about = "Self-orthogonal J-affine variety codes and quantum stabilizer parameters")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal cyclotomic sets of a product of cyclic groups, as JSON.
    Cyclo {
        /// Moduli, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        moduli: Vec<u64>,
        #[arg(long)]
        base: u64,
    },
    /// Generator matrix of E_delta as discrete-log indices.
    Build(CodeArgs),
    /// Gram certification of E_delta.
    Check {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value_t = MetricArg::Euclidean)]
        metric: MetricArg,
    },
    /// Designed constructions.
    Design {
        #[command(subcommand)]
        kind: DesignKind,
    },
    /// Exhaustive distance checks on E_delta.
    Verify {
        #[command(flatten)]
        code: CodeArgs,
        /// Check that the dual has no nonzero word below this weight.
        #[arg(long, conflicts_with = "exact")]
        weight: Option<usize>,
        /// Exact minimum distance of the code and of its dual.
        #[arg(long)]
        exact: bool,
    },
    /// Reproduction fixtures, compared against the bundled golden tables.
    Fixture {
        name: Option<String>,
        #[arg(long, conflicts_with = "name")]
        all: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Output file, or directory with --all.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        list: bool,
    },
}

#[derive(Subcommand)]
enum DesignKind {
    /// Univariate cyclotomic design.
    Uni {
        #[arg(long)]
        rule: String,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        s: u32,
        #[arg(long = "N")]
        n: u64,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        t2: Option<usize>,
        #[arg(long)]
        with_zero: bool,
        #[arg(long)]
        strengthened: bool,
        #[arg(long)]
        relax_gap: bool,
    },
    /// Hyperbolic multivariate design.
    Multi {
        #[arg(long)]
        rule: String,
        #[arg(long = "J", value_delimiter = ',')]
        j: Vec<usize>,
        #[arg(long = "N", value_delimiter = ',', required = true)]
        n: Vec<u64>,
        #[arg(long = "Q")]
        q: u64,
        #[arg(long)]
        t: u64,
        #[arg(long)]
        sub_exp: Option<u32>,
        #[arg(long, value_enum)]
        metric: Option<MetricArg>,
    },
}

#[derive(Args)]
struct CodeArgs {
    #[arg(long = "Q")]
    q: u64,
    #[arg(long = "N", value_delimiter = ',', required = true)]
    n: Vec<u64>,
    #[arg(long = "J", value_delimiter = ',')]
    j: Vec<usize>,
    /// Exponent tuples, e.g. "1,1;2,1".
    #[arg(long, allow_hyphen_values = true)]
    delta: String,
    #[arg(long)]
    sub_exp: Option<u32>,
}

#[derive(Clone, Copy, ValueEnum)]
enum MetricArg {
    Euclidean,
    Hermitian,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn variety(q: u64, n: &[u64], j: &[usize]) -> Result<VarietySpec> {
    let (p, e) = prime_power(q)?;
    Ok(VarietySpec::new(Arc::new(make_field(p, e)?), n.to_vec(), j)?)
}

fn parse_delta(text: &str) -> Result<Vec<Vec<u64>>> {
    text.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|tuple| {
            tuple
                .split(',')
                .map(|x| x.trim().parse::<u64>().with_context(|| format!("bad exponent {x:?}")))
                .collect()
        })
        .collect()
}

fn code_from(args: &CodeArgs) -> Result<ClassicalCode> {
    let spec = variety(args.q, &args.n, &args.j)?;
    let delta = DeltaSet::new(&spec, parse_delta(&args.delta)?)?;
    let code = build_code(&spec, &delta)?;
    Ok(match args.sub_exp {
        Some(s) if s != spec.field().degree() => subfield_subcode(&code, s)?,
        _ => code,
    })
}

fn metric_for(kind: MetricArg, alphabet: u64) -> Result<Metric> {
    Ok(match kind {
        MetricArg::Euclidean => Metric::Euclidean,
        MetricArg::Hermitian => {
            let (p, e) = prime_power(alphabet)?;
            if e % 2 != 0 {
                return Err(Error::NonSquareField(alphabet).into());
            }
            Metric::Hermitian { q: p.pow(e / 2) }
        }
    })
}

/// Writes to stdout; a closed pipe ends output quietly.
fn emit(text: &str) -> Result<()> {
    match io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        r => Ok(r?),
    }
}

fn print_json(v: &Value) -> Result<()> {
    emit(&format!("{}\n", serde_json::to_string_pretty(v)?))
}

fn cyclo(moduli: &[u64], base: u64) -> Result<()> {
    let axes: Vec<Axis> = moduli.iter().map(|&m| Axis::Cyclic(m)).collect();
    let part = CyclotomicPartition::new(&axes, base)?;
    let flat = |t: &[u64]| if t.len() == 1 { json!(t[0]) } else { json!(t) };
    let sets: Vec<Value> = part
        .sets()
        .iter()
        .map(|s| json!({"rep": flat(s.representative()), "elements": s.elements.iter().map(|e| flat(e)).collect::<Vec<_>>()}))
        .collect();
    let modulus = if moduli.len() == 1 { json!(moduli[0]) } else { json!(moduli) };
    print_json(&json!({"modulus": modulus, "base": base, "sets": sets}))
}

fn build(args: &CodeArgs) -> Result<()> {
    let code = code_from(args)?;
    let f = code.field();
    let mut text = format!("GF({}^{}) {} {}\n", f.characteristic(), f.degree(), code.length(), code.dimension());
    for row in code.basis().rows() {
        let line: Vec<String> =
            row.iter().map(|&x| f.log(x).map_or_else(|| "-".to_string(), |l| l.to_string())).collect();
        text.push_str(&line.join(" "));
        text.push('\n');
    }
    emit(&text)
}

fn check(args: &CodeArgs, metric: MetricArg) -> Result<()> {
    let code = code_from(args)?;
    let cert = certify_self_orthogonal(&code, metric_for(metric, code.alphabet())?)?;
    print_json(&json!({"self_orthogonal": cert.self_orthogonal, "violations": cert.violations}))
}

fn verify(args: &CodeArgs, weight: Option<usize>, exact: bool) -> Result<()> {
    let code = code_from(args)?;
    let budget = Budget::from_env();
    if let Some(w) = weight {
        let ok = no_word_below(code.basis(), code.field(), w, budget)?;
        return print_json(&json!({"weight": w, "no_dual_word_below": ok}));
    }
    if !exact {
        bail!("pass --weight <w> or --exact");
    }
    let d = min_distance_exact(&code, budget)?;
    let dual = min_distance_exact(&code.dual(), budget)?;
    print_json(&json!({"distance": d, "dual_distance": dual}))
}

#[allow(clippy::too_many_arguments)]
fn design_uni(rule: &str, p: u64, r: u32, s: u32, n: u64, t: usize, t2: Option<usize>, flags: [bool; 3]) -> Result<()> {
    let rule = UniRule::parse(rule).ok_or_else(|| {
        anyhow!("unknown rule {rule}; expected one of {}", UniRule::ALL.map(UniRule::name).join(", "))
    })?;
    let mut design = UnivariateDesign::new(rule, p, r, s, n, t);
    design.t2 = t2;
    [design.with_zero, design.strengthened, design.relax_gap] = flags;
    let out = design_univariate_with_budget(design, Budget::from_env())?;
    print_json(&json!({
        "params": out.params,
        "representatives": out.representatives,
        "delta": out.delta,
        "inner_delta": out.inner_delta,
        "certificates": out.params.chain,
    }))
}

#[allow(clippy::too_many_arguments)]
fn design_multi(
    rule: &str,
    j: &[usize],
    n: &[u64],
    q: u64,
    t: u64,
    sub_exp: Option<u32>,
    metric: Option<MetricArg>,
) -> Result<()> {
    let spec = variety(q, n, j)?;
    let budget = Budget::from_env();
    let design = if let Some(rule) = SubfieldRule::parse(rule) {
        let sub = sub_exp.ok_or_else(|| anyhow!("subfield rules need --sub-exp"))?;
        let alphabet = spec.field().characteristic().pow(sub);
        let metric = metric_for(metric.unwrap_or(MetricArg::Euclidean), alphabet)?;
        design_subfield_multivariate_with_budget(&spec, t, sub, metric, rule, budget)?
    } else if let Some(rule) = MultiRule::parse(rule) {
        let default = match rule {
            MultiRule::EuclideanWindow | MultiRule::EuclideanBivariate => MetricArg::Euclidean,
            _ => MetricArg::Hermitian,
        };
        let metric = metric_for(metric.unwrap_or(default), q)?;
        design_multivariate_with_budget(&spec, t, rule, metric, budget)?
    } else {
        bail!("unknown rule {rule}");
    };
    print_json(&json!({
        "monomials": design.monomials,
        "delta": design.delta,
        "metric": design.metric.name(),
        "params": design.params,
        "certificates": design.params.chain,
    }))
}

fn render(rows: &[qvariety::quantum::StabilizerParams], format: Format) -> Result<String> {
    Ok(match format {
        Format::Csv => to_csv(rows)?,
        Format::Json => to_json(rows)?,
    })
}

/// Runs fixtures, writes their tables and returns whether all match.
fn fixtures(name: Option<String>, all: bool, format: Format, out: Option<PathBuf>) -> Result<bool> {
    let names: Vec<&str> = if all {
        FIXTURES.iter().map(|f| f.name).collect()
    } else {
        let name = name.ok_or_else(|| anyhow!("pass a fixture name or --all"))?;
        vec![fixture(&name)?.name]
    };
    let budget = Budget::from_env();
    let results: Vec<_> = if all {
        qvariety::fixtures::run_all(budget)
    } else {
        names.iter().map(|&n| (n, fixture(n).and_then(|f| f.run(budget)))).collect()
    };
    let ext = if format == Format::Csv { "csv" } else { "json" };
    let mut ok = true;
    for (name, rows) in results {
        let rows = rows.with_context(|| format!("fixture {name}"))?;
        let text = render(&rows, format)?;
        match (&out, all) {
            (Some(dir), true) => {
                std::fs::create_dir_all(dir)?;
                std::fs::write(dir.join(format!("{name}.{ext}")), &text)?;
            }
            (Some(path), false) => std::fs::write(path, &text)?,
            (None, true) => emit(&format!("# {name}\n{text}"))?,
            (None, false) => emit(&text)?,
        }
        match compare_golden(name, &rows) {
            Ok(()) => eprintln!("{name}: matches golden"),
            Err(e) => {
                eprintln!("{e}");
                ok = false;
            }
        }
    }
    Ok(ok)
}

fn run() -> Result<bool> {
    let cli = Cli::parse();
    match cli.command {
        Command::Cyclo { moduli, base } => cyclo(&moduli, base)?,
        Command::Build(args) => build(&args)?,
        Command::Check { code, metric } => check(&code, metric)?,
        Command::Verify { code, weight, exact } => verify(&code, weight, exact)?,
        Command::Design { kind } => match kind {
            DesignKind::Uni { rule, p, r, s, n, t, t2, with_zero, strengthened, relax_gap } => {
                design_uni(&rule, p, r, s, n, t, t2, [with_zero, strengthened, relax_gap])?
            }
            DesignKind::Multi { rule, j, n, q, t, sub_exp, metric } => design_multi(&rule, &j, &n, q, t, sub_exp, metric)?,
        },
        Command::Fixture { list: true, .. } => {
            let lines: String = FIXTURES.iter().map(|f| format!("{}\t{}\n", f.name, f.description)).collect();
            emit(&lines)?
        }
        Command::Fixture { name, all, format, out, .. } => return fixtures(name, all, format, out),
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
