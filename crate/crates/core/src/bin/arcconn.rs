use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use arcconn::constructions::{
    check_bounds, check_formula, class_table_value, hunt_tightness, lift_certificates, prop_certificates,
    random_factor_pair, render_class_table, undirected_product_lambda, ClassPair, DigraphClass, HuntConfig,
};
use arcconn::io::{certificate_to_dot, to_dot, to_json, to_text, CertificateJson, ProductShape};
use arcconn::{
    arc_connectivity, cartesian_product, lambda_2, random_connected_graph, verify_certificate, ArcSet, Error,
    InputSpec, Lambda2Mode, SeedPair, TreeShape,
};

// Output that tolerates a closed pipe, e.g. when piped into `head`.
macro_rules! say {
    ($($arg:tt)*) => {{
        let _ = writeln!(std::io::stdout(), $($arg)*);
    }};
}

macro_rules! put {
    ($($arg:tt)*) => {{
        let _ = write!(std::io::stdout(), $($arg)*);
    }};
}

/// Arc-strong connectivity and strong subgraph 2-arc-connectivity of
/// digraphs and their Cartesian products.
///
/// Digraphs are given as `cn:<n>`, `bcm:<m>`, `btm:<shape>:<m>`, `bkm:<m>`,
/// `rand:<n>:<p>:<seed>` or `file:<path>`; `A x B` denotes a product.
#[derive(Parser)]
#[command(name = "arcconn", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Arc-strong connectivity with a minimum cut.
    Lambda {
        #[arg(required = true, num_args = 1..)]
        input: Vec<String>,
    },
    /// Strong subgraph 2-arc-connectivity with a witness family.
    Lambda2 {
        #[arg(required = true, num_args = 1..)]
        input: Vec<String>,
        /// Examine only this many random seed pairs (gives an upper bound).
        #[arg(long, requires = "seed")]
        sample: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Print the witness as certificate JSON.
        #[arg(long)]
        json: bool,
    },
    /// Check a closed form or bound against computed values.
    Check {
        #[command(subcommand)]
        target: CheckTarget,
    },
    /// Build and verify an explicit certificate family.
    Construct(ConstructArgs),
    /// Write a digraph or certificate as DOT or JSON.
    Export(ExportArgs),
    /// Search random products whose λ₂ meets the lower bound.
    Hunt {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 2)]
        min_order: usize,
        #[arg(long, default_value_t = 4)]
        max_order: usize,
        #[arg(long)]
        seed: u64,
        /// Also run every pair of table classes.
        #[arg(long)]
        classes: bool,
        /// Directory for witness files.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify a certificate JSON file.
    Verify {
        #[arg(long)]
        cert: PathBuf,
        /// Host digraph; defaults to the arcs embedded in the certificate.
        #[arg(long)]
        graph: Option<String>,
    },
}

#[derive(Args)]
struct Sweep {
    #[arg(long, default_value_t = 50)]
    trials: usize,
    #[arg(long, default_value_t = 2)]
    min_order: usize,
    #[arg(long, default_value_t = 6)]
    max_order: usize,
    #[arg(long)]
    seed: u64,
}

#[derive(Subcommand)]
enum CheckTarget {
    /// Closed form of λ(G □ H) against max-flow.
    Thm31(Sweep),
    /// λ₂(G) + λ₂(H) − 1 ≤ λ₂(G □ H) ≤ λ(G □ H).
    Bounds(Sweep),
    /// Closed-form λ₂ table against exhaustive computation.
    Table1 {
        #[arg(long, default_value_t = 3)]
        min: usize,
        #[arg(long, default_value_t = 4)]
        max: usize,
    },
    /// λ₂(↔G □ ↔H) against the undirected product formula.
    Eq2(Sweep),
}

#[derive(Clone, Copy, ValueEnum)]
enum Prop {
    P51,
    P52,
    P53,
    P54,
    Lift,
}

#[derive(Args)]
struct ConstructArgs {
    prop: Prop,
    #[arg(short, default_value_t = 4)]
    n: usize,
    #[arg(short, default_value_t = 4)]
    m: usize,
    /// Seeds as `a,b:c,d`, i.e. vertices (a,b) and (c,d) of the product.
    #[arg(short = 'S', long = "seeds")]
    seeds: String,
    /// Tree shape for p53.
    #[arg(long, default_value = "path")]
    shape: String,
    /// First factor for lift.
    #[arg(long)]
    g: Option<String>,
    /// Second factor for lift.
    #[arg(long)]
    h: Option<String>,
    /// Write the certificate here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("format").required(true).args(["dot", "json", "text"])))]
struct ExportArgs {
    #[arg(num_args = 0.., required_unless_present = "cert")]
    input: Vec<String>,
    /// Certificate JSON to draw instead of a digraph.
    #[arg(long, conflicts_with = "input")]
    cert: Option<PathBuf>,
    #[arg(long)]
    dot: bool,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    text: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// A failure with its exit code: 1 for a failed check, 2 for bad input.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Construction(_) => 1,
            _ => 2,
        };
        Failure(code, e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn check_failed(msg: impl Into<String>) -> Failure {
    Failure(1, msg.into())
}

fn parse_input(tokens: &[String]) -> Result<InputSpec, Error> {
    tokens.join(" ").parse()
}

fn emit(out: &Option<PathBuf>, content: &str) -> Outcome {
    match out {
        Some(path) => std::fs::write(path, content).map_err(|e| Failure(2, format!("{}: {e}", path.display()))),
        None => {
            put!("{content}");
            Ok(())
        }
    }
}

fn fmt_arcs(arcs: &ArcSet) -> String {
    arcs.iter()
        .map(|(u, v)| format!("({u},{v})"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_lambda(input: &[String]) -> Outcome {
    let loaded = parse_input(input)?.load()?;
    let r = arc_connectivity(&loaded.digraph)?;
    if !r.strong {
        eprintln!("warning: digraph is not strong");
    }
    say!("lambda = {}", r.lambda);
    say!("delta+ = {}", r.delta_out);
    say!("delta- = {}", r.delta_in);
    say!("min cut: {}", fmt_arcs(&r.min_cut));
    Ok(())
}

fn cmd_lambda2(input: &[String], sample: Option<usize>, seed: Option<u64>, json: bool) -> Outcome {
    let loaded = parse_input(input)?.load()?;
    let mode = match (sample, seed) {
        (Some(count), Some(seed)) => Lambda2Mode::Sampled { count, seed },
        _ => Lambda2Mode::Exhaustive,
    };
    let r = lambda_2(&loaded.digraph, mode)?;
    if json {
        let cert = CertificateJson::new(&loaded.digraph, &r.witness, loaded.shape);
        say!("{}", cert.to_string_pretty()?);
        return Ok(());
    }
    if r.sampled {
        say!("lambda2 <= {} (upper bound from sampled pairs)", r.value);
    } else {
        say!("lambda2 = {}", r.value);
    }
    let show = |v: usize| match loaded.shape {
        Some(ProductShape { m, .. }) => format!("{v}=({},{})", v / m, v % m),
        None => v.to_string(),
    };
    say!("argmin = {{{}, {}}}", show(r.argmin.x()), show(r.argmin.y()));
    for (i, member) in r.witness.members.iter().enumerate() {
        say!("member {i}: {}", fmt_arcs(member));
    }
    Ok(())
}

fn sweep_config(s: &Sweep) -> HuntConfig {
    HuntConfig {
        trials: s.trials,
        min_order: s.min_order,
        max_order: s.max_order,
        seed: s.seed,
        include_classes: false,
    }
}

fn report_sweep(name: &str, failures: usize, total: usize) -> Outcome {
    say!("{name}: {} of {total} passed", total - failures);
    if failures > 0 {
        Err(check_failed(format!("{name}: {failures} failures")))
    } else {
        Ok(())
    }
}

fn cmd_check(target: &CheckTarget) -> Outcome {
    match target {
        CheckTarget::Thm31(s) => {
            let cfg = sweep_config(s);
            let mut failures = 0;
            for i in 0..s.trials {
                let (g, h) = random_factor_pair(&cfg, i)?;
                let r = check_formula(&g, &h)?;
                if !r.passed() {
                    failures += 1;
                    say!("FAIL trial {i}: formula {} flow {}", r.formula, r.flow.lambda);
                    put!("G:\n{}H:\n{}", to_text(&g, None), to_text(&h, None));
                }
            }
            report_sweep("thm31", failures, s.trials)
        }
        CheckTarget::Bounds(s) => {
            let cfg = sweep_config(s);
            let mut failures = 0;
            for i in 0..s.trials {
                let (g, h) = random_factor_pair(&cfg, i)?;
                let r = check_bounds(&g, &h, true)?;
                if !r.sandwich_holds() {
                    failures += 1;
                    say!("FAIL trial {i}: {} <= {:?} <= {}", r.lower, r.observed, r.upper);
                    put!("G:\n{}H:\n{}", to_text(&g, None), to_text(&h, None));
                }
            }
            report_sweep("bounds", failures, s.trials)
        }
        CheckTarget::Table1 { min, max } => {
            let mut failures = 0;
            let mut total = 0;
            for row in DigraphClass::ALL {
                for col in DigraphClass::ALL {
                    for n in (*min).max(row.min_order())..=*max {
                        for m in (*min).max(col.min_order())..=*max {
                            total += 1;
                            let expected = class_table_value(row, col, n, m)?;
                            let p = cartesian_product(&row.build(n)?, &col.build(m)?);
                            let got = lambda_2(p.digraph(), Lambda2Mode::Exhaustive)?.value;
                            let status = if got == expected { "ok" } else { "FAIL" };
                            failures += usize::from(got != expected);
                            say!("{status} {row}{n} x {col}{m}: table {expected}, computed {got}");
                        }
                    }
                }
            }
            put!("{}", render_class_table(*min, *max)?);
            report_sweep("table1", failures, total)
        }
        CheckTarget::Eq2(s) => {
            if s.min_order < 2 || s.max_order < s.min_order {
                return Err(Failure(2, "orders must satisfy 2 <= min <= max".into()));
            }
            let span = (s.max_order - s.min_order + 1) as u64;
            let mut failures = 0;
            for i in 0..s.trials as u64 {
                let base = s.seed.wrapping_mul(1_000_003).wrapping_add(4 * i);
                let ng = s.min_order + (base % span) as usize;
                let nh = s.min_order + ((base / span) % span) as usize;
                let g = random_connected_graph(ng, 0.5, base + 1)?;
                let h = random_connected_graph(nh, 0.5, base + 2)?;
                let expected = undirected_product_lambda(&g, &h)?;
                let p = cartesian_product(&g.biorient(), &h.biorient());
                let got = lambda_2(p.digraph(), Lambda2Mode::Exhaustive)?.value;
                if got != expected {
                    failures += 1;
                    say!("FAIL trial {i}: formula {expected}, lambda2 {got}");
                }
            }
            report_sweep("eq2", failures, s.trials)
        }
    }
}

fn parse_seeds(s: &str, n: usize, m: usize) -> Result<SeedPair, Failure> {
    let bad = || Failure(2, format!("seeds must look like `a,b:c,d`, got `{s}`"));
    let coords: Vec<(usize, usize)> = s
        .split(':')
        .map(|part| {
            let (i, j) = part.split_once(',').ok_or_else(bad)?;
            Ok((
                i.trim().parse().map_err(|_| bad())?,
                j.trim().parse().map_err(|_| bad())?,
            ))
        })
        .collect::<Result<_, Failure>>()?;
    let [(a, b), (c, d)] = coords.as_slice() else {
        return Err(bad());
    };
    for &(i, j) in &coords {
        if i >= n || j >= m {
            return Err(Failure(2, format!("vertex ({i},{j}) outside a {n}x{m} product")));
        }
    }
    Ok(SeedPair::new(a * m + b, c * m + d)?)
}

fn cmd_construct(args: &ConstructArgs) -> Outcome {
    let (host, cert, shape, label) = match args.prop {
        Prop::Lift => {
            let g = args.g.as_deref().ok_or_else(|| Failure(2, "lift needs --g".into()))?;
            let h = args.h.as_deref().ok_or_else(|| Failure(2, "lift needs --h".into()))?;
            let g = g.parse::<InputSpec>()?.load()?.digraph;
            let h = h.parse::<InputSpec>()?.load()?.digraph;
            let s = parse_seeds(&args.seeds, g.order(), h.order())?;
            let lifted = lift_certificates(&g, &h, s)?;
            let p = cartesian_product(&g, &h);
            let label = format!("{:?}, lower bound {}", lifted.case, lifted.lower_bound());
            (p.digraph().clone(), lifted.family, ProductShape::of(&p), label)
        }
        prop => {
            let class = match prop {
                Prop::P51 => ClassPair::CycleCycle,
                Prop::P52 => ClassPair::CycleBicycle,
                Prop::P53 => ClassPair::CycleTree(args.shape.parse::<TreeShape>()?),
                _ => ClassPair::CycleComplete,
            };
            let s = parse_seeds(&args.seeds, args.n, args.m)?;
            let r = prop_certificates(class, args.n, args.m, s)?;
            let label = format!("{:?} routing", r.routing);
            (
                r.product.digraph().clone(),
                r.family,
                ProductShape::of(&r.product),
                label,
            )
        }
    };
    let report = verify_certificate(&host, &cert);
    if !report.is_valid() {
        return Err(check_failed(report.to_string()));
    }
    eprintln!("{} members ({label}), verified", cert.len());
    let json = CertificateJson::new(&host, &cert, Some(shape)).to_string_pretty()? + "\n";
    emit(&args.out, &json)
}

fn cmd_export(args: &ExportArgs) -> Outcome {
    if let Some(path) = &args.cert {
        let src = std::fs::read_to_string(path).map_err(|e| Failure(2, format!("{}: {e}", path.display())))?;
        let cert_json = CertificateJson::parse(&src)?;
        let family = cert_json.family()?;
        let host = cert_json.host().transpose()?;
        let content = if args.dot {
            certificate_to_dot(host.as_ref(), cert_json.n, &family, cert_json.product)
        } else if args.json {
            cert_json.to_string_pretty()? + "\n"
        } else {
            return Err(Failure(2, "certificates export as --dot or --json".into()));
        };
        return emit(&args.out, &content);
    }
    let loaded = parse_input(&args.input)?.load()?;
    let content = if args.dot {
        to_dot(&loaded.digraph, loaded.shape)
    } else if args.json {
        to_json(&loaded.digraph, loaded.shape)? + "\n"
    } else {
        to_text(&loaded.digraph, loaded.shape)
    };
    emit(&args.out, &content)
}

fn cmd_hunt(config: HuntConfig, out: &Option<PathBuf>) -> Outcome {
    let report = hunt_tightness(&config)?;
    say!("trials: {}", report.trials.len());
    say!("gap histogram (observed - lower):");
    for (gap, count) in &report.gap_histogram {
        say!("  {gap}: {count}");
    }
    say!("witnesses: {}", report.witnesses.len());
    if let Some(dir) = out {
        std::fs::create_dir_all(dir).map_err(|e| Failure(2, format!("{}: {e}", dir.display())))?;
        for (k, w) in report.witnesses.iter().enumerate() {
            let p = cartesian_product(&w.trial.g, &w.trial.h);
            let cert = CertificateJson::new(p.digraph(), &w.certificate, Some(ProductShape::of(&p)));
            let write = |name: String, content: String| {
                let path = dir.join(name);
                std::fs::write(&path, content).map_err(|e| Failure(2, format!("{}: {e}", path.display())))
            };
            write(format!("witness{k}.cert.json"), cert.to_string_pretty()?)?;
            write(format!("witness{k}.g.dg"), to_text(&w.trial.g, None))?;
            write(format!("witness{k}.h.dg"), to_text(&w.trial.h, None))?;
        }
    }
    if report.all_sandwiched() {
        Ok(())
    } else {
        Err(check_failed("a trial violated the bound sandwich"))
    }
}

fn cmd_verify(cert: &PathBuf, graph: &Option<String>) -> Outcome {
    let src = std::fs::read_to_string(cert).map_err(|e| Failure(2, format!("{}: {e}", cert.display())))?;
    let cert_json = CertificateJson::parse(&src)?;
    let host = match graph {
        Some(spec) => spec.parse::<InputSpec>()?.load()?.digraph,
        None => cert_json
            .host()
            .ok_or_else(|| Failure(2, "certificate has no host arcs; pass --graph".into()))??,
    };
    let family = cert_json.family()?;
    let report = verify_certificate(&host, &family);
    put!("{report}");
    if report.is_valid() {
        say!("valid: {} members for {}", family.len(), family.seed);
        Ok(())
    } else {
        Err(check_failed("invalid certificate"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Lambda { input } => cmd_lambda(input),
        Command::Lambda2 {
            input,
            sample,
            seed,
            json,
        } => cmd_lambda2(input, *sample, *seed, *json),
        Command::Check { target } => cmd_check(target),
        Command::Construct(args) => cmd_construct(args),
        Command::Export(args) => cmd_export(args),
        Command::Hunt {
            trials,
            min_order,
            max_order,
            seed,
            classes,
            out,
        } => cmd_hunt(
            HuntConfig {
                trials: *trials,
                min_order: *min_order,
                max_order: *max_order,
                seed: *seed,
                include_classes: *classes,
            },
            out,
        ),
        Command::Verify { cert, graph } => cmd_verify(cert, graph),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
