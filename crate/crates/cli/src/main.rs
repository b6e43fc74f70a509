mod args;
mod commands;
mod input;
mod plot;
mod verdict;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use trophyp::curves::TropicalCurveFan;
use trophyp::matroids::Matroid;
use trophyp::par::Strategy;

use args::{Cli, Command};
use commands::Ctx;
use verdict::Report;

fn configure_threads(jobs: Option<usize>) -> anyhow::Result<Strategy> {
    match jobs {
        Some(0) => anyhow::bail!("--jobs must be at least 1"),
        Some(1) => Ok(Strategy::Sequential),
        #[cfg(feature = "parallel")]
        Some(j) => {
            rayon::ThreadPoolBuilder::new().num_threads(j).build_global()?;
            Ok(Strategy::Parallel)
        }
        #[cfg(not(feature = "parallel"))]
        Some(_) => Ok(Strategy::Sequential),
        None => Ok(Strategy::default()),
    }
}

fn plot(
    matroid: Option<&std::path::Path>,
    curve: Option<&std::path::Path>,
    complex: Option<&std::path::Path>,
) -> anyhow::Result<String> {
    if let Some(p) = matroid {
        plot::bergman_svg(&input::read_json::<Matroid>(p)?.0)
    } else if let Some(p) = curve {
        plot::curve_svg(&input::read_json::<TropicalCurveFan>(p)?.0)
    } else if let Some(p) = complex {
        plot::complex_svg(&input::read_json::<plot::Complex>(p)?.0)
    } else {
        anyhow::bail!("nothing to plot")
    }
}

fn run(cli: &Cli) -> anyhow::Result<Report> {
    let strategy = configure_threads(cli.jobs)?;
    let ctx = Ctx { seed: cli.seed, strategy };
    match &cli.command {
        Command::Var(v) => commands::var_cmd(&v.vec),
        Command::Varbar(v) => commands::varbar_cmd(&v.vec),
        Command::Grassmannian(i) => commands::grassmannian_cmd(&ctx, &i.path),
        Command::LinearHyp(i) => commands::linear_hyp_cmd(&ctx, &i.path),
        Command::Matroid(c) => commands::matroid_cmd(&ctx, c),
        Command::Positroid(i) => commands::positroid_cmd(&ctx, &i.path),
        Command::Bergman(c) => commands::bergman_cmd(&ctx, c),
        Command::Poly(c) => commands::poly_cmd(&ctx, c),
        Command::Curve(c) => commands::curve_cmd(&ctx, c),
        Command::Preservers { n, c } => commands::preservers_cmd(&ctx, *n, *c),
        Command::ToricCheck { matrix, trials } => commands::toric_cmd(&ctx, matrix, *trials),
        Command::Catalog(c) => commands::catalog_cmd(&ctx, c),
        Command::Plot { matroid, curve, complex, out } => {
            let svg = plot(matroid.as_deref(), curve.as_deref(), complex.as_deref())?;
            match out {
                Some(path) => {
                    std::fs::write(path, &svg)?;
                    Report::value(path.display().to_string())
                }
                None => {
                    emit(&svg);
                    Ok(Report { json: serde_json::Value::Null, code: 0 })
                }
            }
        }
        Command::Verify { certificate } => verify::verify(strategy, certificate),
    }
}

/// Writes to stdout; a closed pipe on the reading side is not an error.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if !report.json.is_null() {
                emit(&(serde_json::to_string_pretty(&report.json).expect("JSON values serialize") + "\n"));
            }
            ExitCode::from(report.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
