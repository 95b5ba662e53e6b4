mod args;
mod commands;
mod input;
mod render;

use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::Parser;
use serde_json::json;

use args::{CatalogCommand, Cli, Command, Format};
use commands::{versioned, Body, Outcome};
use input::Rejected;

fn configure_threads() -> Result<()> {
    let Ok(raw) = std::env::var("MFORGE_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .with_context(|| format!("MFORGE_THREADS must be a positive integer, got `{raw}`"))?;
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    #[cfg(not(feature = "parallel"))]
    let _ = n;
    Ok(())
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    if cli.format == Format::Dot && !matches!(cli.command, Command::Crystal(_)) {
        bail!("--format dot is only available for `crystal`");
    }
    match &cli.command {
        Command::Catalog(CatalogCommand::List) => Ok(commands::catalog_list()),
        Command::Catalog(CatalogCommand::Build(b)) | Command::Build(b) => commands::build(b),
        Command::Validate(i) => commands::validate(i),
        Command::Cartan(i) => commands::cartan(i),
        Command::Relations(r) => commands::relations(r),
        Command::Weights(i) => commands::weights(i),
        Command::Extremes(i) => commands::extremes(i),
        Command::Irreducible(i) => commands::irreducible(i),
        Command::Crystal(i) => commands::crystal(i, cli.format),
        Command::Poset(p) => commands::poset(p),
        Command::Orbits(o) => commands::orbits(o),
        Command::Delpezzo(d) => commands::delpezzo(d),
        Command::Slice(i) => {
            if i.pipeline.slice_normal.is_none() {
                bail!("`slice` needs --slice-normal and --slice-level");
            }
            commands::emit_system(i)
        }
    }
}

fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn render(body: Body, format: Format) -> String {
    match body {
        Body::Raw(s) => s,
        Body::Json(v) => {
            let v = versioned(v);
            match format {
                Format::Text => render::text(&v),
                _ => serde_json::to_string_pretty(&v).expect("json value") + "\n",
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = match &cli.command {
        Command::Build(b) | Command::Catalog(CatalogCommand::Build(b)) => {
            b.emit.as_deref().or(cli.output.as_deref())
        }
        _ => cli.output.as_deref(),
    };

    let result = configure_threads().and_then(|_| dispatch(&cli));
    let (text, code) = match result {
        Ok(outcome) => (render(outcome.body, cli.format), if outcome.passed { 0 } else { 1 }),
        Err(err) => match err.downcast::<Rejected>() {
            Ok(Rejected(report)) => {
                let body = json!({ "valid": false, "violations": report.violations });
                (render(Body::Json(body), cli.format), 1)
            }
            Err(err) => {
                eprintln!("error: {err:#}");
                return ExitCode::from(2);
            }
        },
    };
    if let Err(err) = write_out(output, &text) {
        eprintln!("error: {err:#}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
