use std::io::Read;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use mforge::catalog::{slice, CatalogEntry, Parity, SliceSpec};
use mforge::json::parse_system_file;
use mforge::{validate_system, IntVector, MinusculeSystem};

use crate::args::{Builder, Input, Pipeline};

/// A system that failed validation; reported with exit status 1.
#[derive(Debug)]
pub struct Rejected(pub mforge::ValidationReport);

impl std::fmt::Display for Rejected {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "system fails the minuscule axioms ({} violations)", self.0.violations.len())
    }
}

impl std::error::Error for Rejected {}

fn parse_parity(s: &str) -> Result<Parity> {
    match s {
        "+" | "even" => Ok(Parity::Even),
        "-" | "odd" => Ok(Parity::Odd),
        _ => bail!("--parity must be `+` or `-`, got `{s}`"),
    }
}

pub fn entry(name: &str, b: &Builder) -> Result<CatalogEntry> {
    let parity = b.parity.as_deref().map(parse_parity).transpose()?;
    Ok(CatalogEntry::from_parts(name, b.n, parity, b.level, b.affine)?)
}

fn parse_vector(s: &str) -> Result<IntVector> {
    let coords = s
        .split(',')
        .map(|t| t.trim().parse::<i64>().with_context(|| format!("bad coordinate `{t}` in `{s}`")))
        .collect::<Result<Vec<_>>>()?;
    Ok(IntVector::new(coords)?)
}

/// `no-a,no-b` drops roots; `a,b` keeps them.
fn restrict(sys: &MinusculeSystem, spec: &str) -> Result<MinusculeSystem> {
    let items: Vec<&str> = spec.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    let drops: Vec<&str> = items.iter().filter_map(|s| s.strip_prefix("no-")).collect();
    let keep: Vec<&str> = if drops.is_empty() {
        items
    } else if drops.len() == items.len() {
        for d in &drops {
            if sys.delta().position(d).is_none() {
                bail!(mforge::Error::UnknownLabel(d.to_string()));
            }
        }
        sys.delta().labels().filter(|l| !drops.contains(l)).collect()
    } else {
        bail!("--restrict mixes kept and dropped labels: `{spec}`");
    };
    Ok(sys.restrict(&keep)?)
}

pub fn apply_pipeline(mut sys: MinusculeSystem, p: &Pipeline) -> Result<MinusculeSystem> {
    if let (Some(normal), Some(level)) = (&p.slice_normal, p.slice_level) {
        sys = slice(&sys, &SliceSpec::new(parse_vector(normal)?, level))?;
    }
    if let Some(spec) = &p.restrict {
        sys = restrict(&sys, spec)?;
    }
    Ok(sys)
}

fn read_text(path: Option<&Path>) -> Result<(String, String)> {
    match path {
        None => read_stdin(),
        Some(p) if p == Path::new("-") => read_stdin(),
        Some(p) => {
            let text = std::fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))?;
            Ok((text, p.display().to_string()))
        }
    }
}

fn read_stdin() -> Result<(String, String)> {
    let mut text = String::new();
    std::io::stdin().read_to_string(&mut text).context("cannot read standard input")?;
    Ok((text, "<stdin>".into()))
}

/// Validated system with the pipeline applied.
pub fn load(input: &Input) -> Result<MinusculeSystem> {
    if let Some(name) = &input.system {
        return apply_pipeline(entry(name, &input.builder)?.build()?, &input.pipeline);
    }
    if input.builder.is_set() {
        bail!("--n, --parity, --level and --affine need --system");
    }
    let (text, origin) = read_text(input.file.as_deref())?;
    let file = parse_system_file(&text).with_context(|| origin.clone())?;
    let (psi, delta) = file.into_parts().with_context(|| origin.clone())?;
    let sys = match validate_system(psi, delta) {
        Ok(sys) => sys,
        Err(mforge::Error::Invalid(report)) => return Err(anyhow!(Rejected(*report))),
        Err(e) => return Err(e.into()),
    };
    apply_pipeline(sys, &input.pipeline)
}
