use std::collections::BTreeMap;

use anyhow::{bail, Result};
use mforge::analysis::{crystal_graph, extreme_vectors, irreducibility_certificate, weight, weight_poset};
use mforge::catalog::CATALOG;
use mforge::geometry::{cubic_incidence, degree2_incidence};
use mforge::json::{SystemFile, FORMAT_VERSION};
use mforge::ops::{build_operators, check_lemma_3_1, check_presentation, GeneratorKind, RelationReport};
use mforge::weyl::{edge_root_system, orbits_on_pairs, vertex_orbits};
use mforge::{cartan_matrix, classify_cartan, MinusculeSystem};
use serde_json::{json, Map, Value};

use crate::args::{BuildArgs, DelpezzoArgs, Format, Input, OrbitsArgs, PosetArgs, RelationsArgs};
use crate::input::{apply_pipeline, entry, load};

pub enum Body {
    Json(Value),
    Raw(String),
}

/// A report plus whether the command's check passed.
pub struct Outcome {
    pub body: Body,
    pub passed: bool,
}

impl Outcome {
    fn ok(v: Value) -> Self {
        Outcome { body: Body::Json(v), passed: true }
    }
}

/// Adds the version field in front of the report's own fields.
pub fn versioned(v: Value) -> Value {
    let mut out = Map::new();
    out.insert("format".into(), json!(FORMAT_VERSION));
    match v {
        Value::Object(m) => out.extend(m),
        other => {
            out.insert("result".into(), other);
        }
    }
    Value::Object(out)
}

fn type_label(sys: &MinusculeSystem) -> Result<String> {
    Ok(classify_cartan(&cartan_matrix(sys.delta())?).to_string())
}

pub fn catalog_list() -> Outcome {
    Outcome::ok(json!({ "entries": CATALOG }))
}

pub fn build(args: &BuildArgs) -> Result<Outcome> {
    let sys = apply_pipeline(entry(&args.name, &args.builder)?.build()?, &args.pipeline)?;
    Ok(Outcome::ok(serde_json::to_value(SystemFile::from_system(&sys))?))
}

pub fn emit_system(input: &Input) -> Result<Outcome> {
    let sys = load(input)?;
    Ok(Outcome::ok(serde_json::to_value(SystemFile::from_system(&sys))?))
}

pub fn validate(input: &Input) -> Result<Outcome> {
    let sys = load(input)?;
    Ok(Outcome::ok(json!({
        "valid": true,
        "vertices": sys.len(),
        "roots": sys.rank(),
        "violations": [],
    })))
}

pub fn cartan(input: &Input) -> Result<Outcome> {
    let sys = load(input)?;
    let a = cartan_matrix(sys.delta())?;
    let sym: Vec<String> = a.symmetrizer.iter().map(ToString::to_string).collect();
    Ok(Outcome::ok(json!({
        "labels": a.labels,
        "matrix": a.entries,
        "symmetrizer": sym,
        "symmetrized": a.is_symmetrized(),
        "type": classify_cartan(&a).to_string(),
    })))
}

fn summarize(report: &RelationReport, all: bool) -> Value {
    let mut counts: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for v in &report.verdicts {
        let c = counts.entry(v.relation.as_str()).or_default();
        c.0 += 1;
        if !v.passed {
            c.1 += 1;
        }
    }
    let counts: Map<String, Value> =
        counts.into_iter().map(|(k, (n, f))| (k.to_owned(), json!({ "checked": n, "failed": f }))).collect();
    let listed: Vec<_> = if all { report.verdicts.iter().collect() } else { report.failures().collect() };
    json!({
        "checked": report.verdicts.len(),
        "failed": report.failure_count(),
        "relations": counts,
        if all { "verdicts" } else { "failures" }: listed,
    })
}

pub fn relations(args: &RelationsArgs) -> Result<Outcome> {
    let sys = load(&args.input)?;
    let fam = build_operators(&sys);
    let a = cartan_matrix(sys.delta())?;
    let lemma = check_lemma_3_1(&fam);
    let presentation = check_presentation(&fam, &a)?;
    let passed = lemma.all_passed() && presentation.all_passed();
    let mut out = json!({
        "type": classify_cartan(&a).to_string(),
        "all_passed": passed,
        "lemma": summarize(&lemma, args.all),
        "presentation": summarize(&presentation, args.all),
    });
    if let Some(label) = &args.matrix {
        let Some(i) = fam.position(label) else {
            bail!(mforge::Error::UnknownLabel(label.clone()));
        };
        let dense = |k| fam.get(k, i).to_dense().expect("generators are integral");
        out["matrix"] = json!({
            "label": label,
            "basis": sys.psi(),
            "E": dense(GeneratorKind::E),
            "F": dense(GeneratorKind::F),
            "H": dense(GeneratorKind::H),
        });
    }
    Ok(Outcome { body: Body::Json(out), passed })
}

pub fn weights(input: &Input) -> Result<Outcome> {
    let sys = load(input)?;
    let rows = sys
        .psi()
        .iter()
        .map(|v| {
            let w = weight(&sys, v)?;
            Ok(json!({ "vertex": v, "weight": w.values, "fundamental": w.fundamental() }))
        })
        .collect::<Result<Vec<_>>>()?;
    let labels: Vec<&str> = sys.delta().labels().collect();
    Ok(Outcome::ok(json!({ "labels": labels, "weights": rows })))
}

pub fn extremes(input: &Input) -> Result<Outcome> {
    let sys = load(input)?;
    Ok(Outcome::ok(serde_json::to_value(extreme_vectors(&sys))?))
}

pub fn irreducible(input: &Input) -> Result<Outcome> {
    let sys = load(input)?;
    let cert = irreducibility_certificate(&sys)?;
    let mut out = serde_json::to_value(&cert)?;
    out["type"] = json!(type_label(&sys)?);
    Ok(Outcome::ok(out))
}

pub fn crystal(input: &Input, format: Format) -> Result<Outcome> {
    let sys = load(input)?;
    let g = crystal_graph(&sys);
    if format == Format::Dot {
        return Ok(Outcome { body: Body::Raw(g.to_dot()), passed: true });
    }
    let mut out = serde_json::to_value(&g)?;
    out["connected"] = json!(g.is_connected());
    Ok(Outcome::ok(out))
}

pub fn poset(args: &PosetArgs) -> Result<Outcome> {
    let sys = load(&args.input)?;
    let p = weight_poset(&sys)?;
    let n = p.len();
    let covers: Vec<[usize; 2]> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| {
            x != y && p.leq[x][y] && !(0..n).any(|z| z != x && z != y && p.leq[x][z] && p.leq[z][y])
        })
        .map(|(x, y)| [x, y])
        .collect();
    let mut out = json!({
        "vertices": p.vertices,
        "covers": covers,
        "maximum": p.maximum(),
        "minimum": p.minimum(),
    });
    let mut passed = true;
    if args.check_lattice {
        out["is_lattice"] = json!(p.is_lattice);
        out["is_distributive"] = json!(p.is_distributive);
        passed = p.is_lattice && p.is_distributive;
    }
    Ok(Outcome { body: Body::Json(out), passed })
}

pub fn orbits(args: &OrbitsArgs) -> Result<Outcome> {
    let sys = load(&args.input)?;
    let mut out = Map::new();
    if args.pairs {
        let parts = orbits_on_pairs(&sys);
        let rows: Vec<Value> = parts
            .orbits
            .iter()
            .map(|o| json!({ "representative": [&o.representative.0, &o.representative.1], "size": o.len(), "sq_dist": o.sq_dist() }))
            .collect();
        out.insert("pair_orbits".into(), json!(rows));
    }
    if let Some(d) = args.sqdist {
        if d <= 0 {
            bail!("--sqdist must be positive");
        }
        let stats = edge_root_system(&sys, d);
        let roots: Vec<Value> =
            stats.multiplicity.iter().map(|(r, m)| json!({ "root": r, "multiplicity": m })).collect();
        out.insert(
            "edge_roots".into(),
            json!({
                "sq_dist": d,
                "edge_count": stats.edge_count,
                "undirected_edge_count": stats.undirected_edge_count(),
                "distinct_roots": stats.multiplicity.len(),
                "uniform_multiplicity": stats.uniform_multiplicity(),
                "roots": roots,
            }),
        );
    }
    if !args.pairs && args.sqdist.is_none() {
        let parts = vertex_orbits(&sys);
        let rows: Vec<Value> = parts
            .orbits
            .iter()
            .map(|o| json!({ "representative": o.representative, "size": o.len() }))
            .collect();
        out.insert("vertex_orbits".into(), json!(rows));
    }
    Ok(Outcome::ok(Value::Object(out)))
}

pub fn delpezzo(args: &DelpezzoArgs) -> Result<Outcome> {
    let table = if args.slice { cubic_incidence() } else { degree2_incidence() };
    Ok(Outcome::ok(serde_json::to_value(&table)?))
}
