use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use hek::cohomology::{ext, lie_cohomology, lie_homology, tor, BettiTable};
use hek::completion::{classify, profile_csv, tail_norm_profile, CoefficientStream};
use hek::expr::parse_element;
use hek::files::{load_lie_spec, load_module};
use hek::lie::{GModule, LieAlgebra};
use hek::scalar::{parse_scalar, Prime, Radius};
use hek::uenv::UAlgebra;
use hek::verify::{run_suite, RunConfig, Suite};
use hek::Error;

#[derive(Parser)]
#[command(
    name = "hek",
    version,
    about = "Exact norms and (co)homology for enveloping algebras of Lie algebras"
)]
struct Cli {
    /// Prime for the p-adic valuation.
    #[arg(long, global = true, env = "HEK_PRIME", default_value_t = 2)]
    prime: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Accept specs with non-integral structure constants.
    #[arg(long, global = true)]
    allow_invalid: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Lie algebra spec files.
    Lie {
        #[command(subcommand)]
        command: LieCommand,
    },
    /// Arithmetic in the enveloping algebra.
    U {
        #[command(subcommand)]
        command: UCommand,
    },
    /// Run a seeded property suite.
    Verify(VerifyArgs),
    /// Betti numbers of Lie algebra (co)homology, Ext or Tor.
    Cohomology {
        /// Preset name or spec file.
        lie: String,
        /// `trivial`, `adjoint` or a module file.
        module: String,
        /// Second module for `ext` and `tor`.
        module2: Option<String>,
        #[arg(long, value_enum, default_value_t = KindArg::Cohomology)]
        kind: KindArg,
    },
    /// Classify convergence of the stream with v(d_α) = ⌈a|α|² + b|α| + c⌉ in d variables.
    Converge {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
        d: usize,
        /// Emit the tail norm profile as CSV.
        #[arg(long)]
        profile: bool,
        /// Radius exponent for the profile.
        #[arg(long = "s", default_value = "1")]
        s: String,
        /// Last degree in the profile.
        #[arg(long, default_value_t = 20)]
        max_degree: u64,
    },
}

#[derive(Subcommand)]
enum LieCommand {
    /// Check antisymmetry, Jacobi and integrality.
    Validate { path: PathBuf },
}

#[derive(Subcommand)]
enum UCommand {
    /// Product of two elements in PBW form.
    Mul {
        lie: String,
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Gauss norm at each radius p^s.
    Norm {
        lie: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long = "s", default_value = "1")]
        s: Vec<String>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: SuiteArg,
    #[arg(long, conflicts_with = "lie", required_unless_present = "lie")]
    preset: Option<String>,
    #[arg(long)]
    lie: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long)]
    max_degree: Option<u32>,
    #[arg(long = "s", default_values = ["1/2", "1", "2"])]
    s: Vec<String>,
    /// Report elapsed_ms as 0 so reports compare byte for byte.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Norms,
    Complex,
    Homotopy,
    Hopf,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Norms => Suite::Norms,
            SuiteArg::Complex => Suite::Complex,
            SuiteArg::Homotopy => Suite::Homotopy,
            SuiteArg::Hopf => Suite::Hopf,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Cohomology,
    Homology,
    Ext,
    Tor,
}

/// Rendered output and whether the command's check passed.
struct Output {
    text: String,
    ok: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, ok: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = Prime::new(cli.prime).and_then(|p| run(&cli, p));
    match result {
        Ok(out) => {
            let mut text = out.text;
            if !text.ends_with('\n') {
                text.push('\n');
            }
            match &cli.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_input_error() { 2 } else { 1 })
        }
    }
}

fn run(cli: &Cli, p: Prime) -> hek::Result<Output> {
    match &cli.command {
        Command::Lie { command: LieCommand::Validate { path } } => lie_validate(cli, path),
        Command::U { command } => match command {
            UCommand::Mul { lie, left, right } => {
                let alg = UAlgebra::new(resolve_lie(cli, lie)?);
                let d = alg.dim();
                let product = alg.mul(&parse_element(left, d)?, &parse_element(right, d)?)?;
                Ok(Output::ok(match cli.format {
                    Format::Json => json!({ "product": product.to_string() }).to_string(),
                    Format::Csv => format!("product\n{product}"),
                    Format::Text => product.to_string(),
                }))
            }
            UCommand::Norm { lie, expr, s } => {
                let lie = resolve_lie(cli, lie)?;
                let u = parse_element(expr, lie.dim())?;
                let radii = parse_radii(s)?;
                let norms: Vec<(String, String)> =
                    radii.iter().map(|r| (r.to_string(), u.gauss_norm(p, r).exponent_string())).collect();
                let render = |e: &str| if e == "-inf" { "0 (p^-inf)".to_string() } else { format!("p^{e}") };
                Ok(Output::ok(match cli.format {
                    Format::Json => {
                        let rows: Vec<_> = norms.iter().map(|(s, e)| json!({ "s": s, "exponent": e })).collect();
                        json!({ "element": u.to_string(), "prime": p.get(), "norms": rows }).to_string()
                    }
                    Format::Csv => {
                        let mut out = String::from("s,exponent\n");
                        for (s, e) in &norms {
                            out.push_str(&format!("{s},{e}\n"));
                        }
                        out
                    }
                    Format::Text if norms.len() == 1 => render(&norms[0].1),
                    Format::Text => {
                        norms.iter().map(|(s, e)| format!("s = {s}: {}", render(e))).collect::<Vec<_>>().join("\n")
                    }
                }))
            }
        },
        Command::Verify(args) => verify(cli, p, args),
        Command::Cohomology { lie, module, module2, kind } => {
            let g = resolve_lie(cli, lie)?;
            let m = resolve_module(&g, module)?;
            let second = || -> hek::Result<GModule> {
                let name = module2.as_deref().ok_or_else(|| Error::Parse("ext and tor need a second module".into()))?;
                resolve_module(&g, name)
            };
            let table = match kind {
                KindArg::Cohomology => lie_cohomology(&g, &m)?.table,
                KindArg::Homology => lie_homology(&g, &m)?,
                KindArg::Ext => ext(&g, &m, &second()?)?.table,
                KindArg::Tor => tor(&g, &m, &second()?)?,
            };
            Ok(Output::ok(render_table(cli.format, &table)))
        }
        Command::Converge { a, b, c, d, profile, s, max_degree } => {
            let stream = CoefficientStream::new(parse_scalar(a)?, parse_scalar(b)?, parse_scalar(c)?, *d);
            let verdict = classify(&stream);
            let witness = verdict.witness(&stream);
            let prof = if *profile {
                let r = Radius::parse(s)?;
                Some((r.clone(), tail_norm_profile(&stream, &r, *max_degree)))
            } else {
                None
            };
            Ok(Output::ok(match cli.format {
                Format::Json => {
                    let mut v = json!({ "verdict": verdict.to_string(), "witness": witness });
                    if let Some((r, rows)) = &prof {
                        v["s"] = json!(r.to_string());
                        v["profile"] =
                            rows.iter().map(|(n, e)| json!({ "N": n, "exponent": e.exponent_string() })).collect();
                    }
                    v.to_string()
                }
                Format::Csv => match &prof {
                    Some((_, rows)) => profile_csv(rows),
                    None => format!("verdict\n{verdict}"),
                },
                Format::Text => {
                    let mut out = format!("{verdict}\n{witness}");
                    if let Some((_, rows)) = &prof {
                        out.push('\n');
                        out.push_str(&profile_csv(rows));
                    }
                    out
                }
            }))
        }
    }
}

fn lie_validate(cli: &Cli, path: &Path) -> hek::Result<Output> {
    let lie = load_lie_spec(path)?;
    let outcome = lie.validate();
    let ok = outcome.is_ok();
    let message = match &outcome {
        Ok(()) => "ok".to_string(),
        Err(e) => e.to_string(),
    };
    Ok(Output {
        text: match cli.format {
            Format::Json => json!({ "valid": ok, "dim": lie.dim(), "message": message }).to_string(),
            Format::Csv => format!("valid,message\n{ok},\"{message}\""),
            Format::Text => message,
        },
        ok,
    })
}

fn verify(cli: &Cli, p: Prime, args: &VerifyArgs) -> hek::Result<Output> {
    let (lie, label) = match (&args.preset, &args.lie) {
        (Some(name), _) => (LieAlgebra::preset(name)?, name.clone()),
        (None, Some(path)) => (load_lie_spec(path)?, path.display().to_string()),
        (None, None) => return Err(Error::Parse("give --preset or --lie".into())),
    };
    check_lie(cli, &lie)?;
    let config = RunConfig {
        prime: p,
        seed: args.seed,
        samples: args.samples,
        max_degree: args.max_degree,
        radii: parse_radii(&args.s)?,
    };
    let mut report = run_suite(args.suite.into(), &lie, &label, &config);
    if args.no_timing {
        report.elapsed_ms = 0;
    }
    Ok(Output {
        text: match cli.format {
            Format::Json => report.to_json(),
            Format::Csv => report.to_csv(),
            Format::Text => report.to_text(),
        },
        ok: report.passed(),
    })
}

fn parse_radii(list: &[String]) -> hek::Result<Vec<Radius>> {
    list.iter().map(|s| Radius::parse(s)).collect()
}

/// A preset name, or else a spec file.
fn resolve_lie(cli: &Cli, name: &str) -> hek::Result<LieAlgebra> {
    let lie = match LieAlgebra::preset(name) {
        Ok(lie) => lie,
        Err(_) if Path::new(name).exists() => load_lie_spec(Path::new(name))?,
        Err(e) => return Err(e),
    };
    check_lie(cli, &lie)?;
    Ok(lie)
}

fn check_lie(cli: &Cli, lie: &LieAlgebra) -> hek::Result<()> {
    lie.validate_structure()?;
    if !cli.allow_invalid {
        lie.validate_integrality()?;
    }
    Ok(())
}

fn resolve_module(g: &LieAlgebra, name: &str) -> hek::Result<GModule> {
    let module = match name {
        "trivial" => g.trivial_module(),
        "adjoint" => g.adjoint_module(),
        path => load_module(Path::new(path), g.dim())?,
    };
    module.validate(g)?;
    Ok(module)
}

fn render_table(format: Format, table: &BettiTable) -> String {
    match format {
        Format::Json => json!({
            "kind": table.kind,
            "betti": table.betti,
            "euler_characteristic": table.euler_characteristic(),
        })
        .to_string(),
        Format::Csv => table.to_csv(),
        Format::Text => table.to_string(),
    }
}
