use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;
use serde_json::json;

use antimagic_core::builders::RecipeTag;
use antimagic_core::design::{
    kotzig_array, magic_rectangle, magic_rectangle_set, nearly_magic_rectangle, quasi_kotzig_array,
    verify_array, ArrayKind,
};
use antimagic_core::graph::{
    check_local_antimagic, chi_la_bounds, construct_labeling, make_graph, vertex_weights,
    ChiBounds, GraphFamily, PartiteGraph, Source,
};
use antimagic_core::io::{
    blanked_to_json, labels_to_csv, matrices_to_csv, parse_family, to_json, verify_document,
    weights_to_csv, Document, FamilyJson, LabelingJson, MatrixJson, OracleJson,
};
use antimagic_core::oracle::{exact_chi_la_with, OracleOptions};
use antimagic_core::{Error, IntMatrix};

use crate::manifest::{manifest_path, RunManifest};
use crate::{ConstructKind, Dims, Failure, Format, Outcome, Output};

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::io(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> Outcome {
    std::fs::write(path, contents)
        .map_err(|e| Failure::io(format!("cannot write {}: {e}", path.display())))
}

/// Status lines go to stdout when the document goes to a file, otherwise
/// to stderr so stdout stays a clean document.
fn say(output: &Output, msg: &str) {
    if output.out.is_some() {
        println!("{msg}");
    } else {
        eprintln!("{msg}");
    }
}

/// Writes the document to `--out` plus its manifest, or prints it.
fn finish(out: Option<&Path>, doc: &str, mut manifest: RunManifest) -> Outcome {
    let Some(path) = out else {
        print!("{doc}");
        return Ok(());
    };
    write(path, doc)?;
    manifest.record(path, doc.as_bytes());
    write(&manifest_path(path), &to_json(&manifest))
}

/// Positional dimensions, or `--m --n --r` in that order.
fn resolve(d: &Dims, what: &str, min: usize, max: usize) -> Result<Vec<usize>, Failure> {
    let flags = [d.m, d.n, d.r];
    let v = if d.dims.is_empty() {
        let given = flags.iter().rposition(Option::is_some).map_or(0, |k| k + 1);
        flags[..given]
            .iter()
            .map(|x| x.ok_or_else(|| Failure::io("--r needs --m and --n, and --n needs --m")))
            .collect::<Result<Vec<_>, _>>()?
    } else if flags.iter().any(Option::is_some) {
        return Err(Failure::io(
            "give dimensions positionally or with --m/--n/--r, not both",
        ));
    } else {
        d.dims.clone()
    };
    if v.len() < min || v.len() > max {
        let count = if min == max {
            min.to_string()
        } else {
            format!("{min} to {max}")
        };
        return Err(Failure::io(format!(
            "{what} takes {count} dimensions, got {}",
            v.len()
        )));
    }
    Ok(v)
}

fn graph_family(name: &str, d: &Dims) -> Result<GraphFamily, Failure> {
    let (min, max) = if name == "rkmn" { (3, 3) } else { (2, 2) };
    let v = resolve(d, name, min, max)?;
    Ok(parse_family(name, v[0], v[1], v.get(2).copied())?)
}

fn design(kind: ConstructKind, d: &Dims) -> Result<(ArrayKind, Vec<IntMatrix>), Failure> {
    Ok(match kind {
        ConstructKind::MagicSquare => {
            let v = resolve(d, "magic-square", 1, 1)?;
            (ArrayKind::MagicSquare, vec![magic_rectangle(v[0], v[0])?])
        }
        ConstructKind::MagicRectangle => {
            let v = resolve(d, "magic-rectangle", 2, 2)?;
            (
                ArrayKind::MagicRectangle,
                vec![magic_rectangle(v[0], v[1])?],
            )
        }
        ConstructKind::Nmr => {
            let v = resolve(d, "nmr", 2, 2)?;
            (
                ArrayKind::NearlyMagicRectangle,
                vec![nearly_magic_rectangle(v[0], v[1])?],
            )
        }
        ConstructKind::Ka => {
            let v = resolve(d, "ka", 2, 2)?;
            (ArrayKind::Kotzig, vec![kotzig_array(v[0], v[1])?.matrix])
        }
        ConstructKind::Qka => {
            let v = resolve(d, "qka", 2, 2)?;
            (
                ArrayKind::QuasiKotzig,
                vec![quasi_kotzig_array(v[0], v[1])?.matrix],
            )
        }
        ConstructKind::Mrs => {
            let v = resolve(d, "mrs", 3, 3)?;
            (
                ArrayKind::MagicRectangleSet,
                magic_rectangle_set(v[0], v[1], v[2])?,
            )
        }
    })
}

pub fn construct(kind: ConstructKind, dims: &Dims, output: &Output) -> Outcome {
    let (kind, ms) = design(kind, dims)?;
    let report = verify_array(&ms, kind);
    let doc = match output.format {
        Format::Json => to_json(&MatrixJson::from_matrices(kind.name(), &ms)),
        Format::Csv => matrices_to_csv(&ms)?,
    };
    let manifest = RunManifest::new(
        json!({ "kind": kind.name(), "dims": resolve(dims, kind.name(), 1, 3)? }),
        None,
    );
    finish(output.out.as_deref(), &doc, manifest)?;
    say(
        output,
        &format!(
            "{} {}x{} (x{}): {}; row sums {:?}; column sums {:?}",
            kind.name(),
            ms[0].rows(),
            ms[0].cols(),
            ms.len(),
            if report.passed { "verified" } else { "FAILED" },
            report.row_sums,
            report.col_sums
        ),
    );
    if report.passed {
        Ok(())
    } else {
        Err(Failure::verification(report.violations.join("; ")))
    }
}

fn describe_bounds(b: &ChiBounds) -> String {
    match b.upper {
        Some(u) if u == b.lower => format!("chi_la = {u}"),
        Some(u) => format!("{} <= chi_la <= {u}", b.lower),
        None => format!("chi_la >= {} (no upper bound known)", b.lower),
    }
}

/// Explains why nothing covers `family` and lists the recipes for that
/// kind of graph.
fn near_misses(family: GraphFamily) -> String {
    let b = chi_la_bounds(family);
    let mut msg = format!("no construction covers {family}; {}", describe_bounds(&b));
    match family {
        GraphFamily::Rkmn { m, n, r } if r > 1 && m.min(n) >= 2 && m % 2 != n % 2 => {
            msg.push_str(
                "\nopen problem: chi_la of rK_{m,n} with r > 1 and m, n of different parity is undetermined",
            );
        }
        GraphFamily::Rkmn { m, n, r: 1 } if m.min(n) == 1 && m.max(n) == 1 => {
            msg.push_str("\nK_2 has no local antimagic labeling");
        }
        GraphFamily::Rkmn { m, n, r: 1 } if m.min(n) == 1 => {
            let _ = write!(
                msg,
                "\nstars K_{{1,{0}}} have chi_la = {1} but no array construction",
                m.max(n),
                m.max(n) + 1
            );
        }
        _ => {}
    }
    let tripartite = matches!(family, GraphFamily::K1mn { .. });
    msg.push_str("\nrecipes for this kind of graph:");
    for t in RecipeTag::ALL
        .into_iter()
        .filter(|t| t.is_tripartite() == tripartite)
    {
        let _ = write!(msg, "\n  {t}: {}", t.scope());
    }
    msg
}

pub fn label(
    family: &str,
    dims: &Dims,
    recipe: Option<&str>,
    matrices: Option<&Path>,
    output: &Output,
) -> Outcome {
    let family = graph_family(family, dims)?;
    let forced = recipe.map(str::parse::<RecipeTag>).transpose()?;
    let built = match construct_labeling(family, forced) {
        Ok(c) => c,
        Err(Error::OutOfScope(_)) => return Err(Failure::scope(near_misses(family))),
        Err(Error::InvalidParameters(msg)) if forced.is_some() => return Err(Failure::scope(msg)),
        Err(e) => return Err(e.into()),
    };
    let tag = built.source.recipe().tag;
    let mut manifest = RunManifest::new(json!({ "family": family }), Some(tag.to_string()));
    if let Some(path) = matrices {
        let doc = match &built.source {
            Source::Family(f) => to_json(&FamilyJson::from(f)),
            Source::Blanked(b) => to_json(&blanked_to_json(b)),
        };
        write(path, &doc)?;
        manifest.record(path, doc.as_bytes());
    }
    let doc = LabelingJson::from(&built.labeling);
    let text = match output.format {
        Format::Json => to_json(&doc),
        Format::Csv => labels_to_csv(&doc)?,
    };
    finish(output.out.as_deref(), &text, manifest)?;
    let bounds = chi_la_bounds(family);
    say(
        output,
        &format!(
            "{family} via {tag}: {} classes {:?}; {}",
            doc.classes.len(),
            doc.classes,
            describe_bounds(&bounds)
        ),
    );
    if !bounds.contains(doc.classes.len()) {
        return Err(Failure::verification(
            "class count falls outside the known bounds",
        ));
    }
    Ok(())
}

pub fn label_document(path: &Path, output: &Output) -> Outcome {
    let l = Document::parse(&read(path)?)?.labeling()?;
    let doc = LabelingJson::from(&l);
    let text = match output.format {
        Format::Json => to_json(&doc),
        Format::Csv => labels_to_csv(&doc)?,
    };
    let manifest = RunManifest::new(json!({ "from": path.display().to_string() }), None);
    finish(output.out.as_deref(), &text, manifest)?;
    let bad = check_local_antimagic(&l);
    say(
        output,
        &format!(
            "{}: {} classes {:?}; {} improper edges",
            l.graph.family,
            doc.classes.len(),
            doc.classes,
            bad.len()
        ),
    );
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Failure::verification("the labeling is not local antimagic"))
    }
}

pub fn verify(path: &Path) -> Outcome {
    let report = verify_document(&read(path)?)?;
    print!("{}", to_json(&report));
    if report.passed {
        Ok(())
    } else {
        Err(Failure::verification(format!(
            "{} failed verification",
            path.display()
        )))
    }
}

#[derive(Serialize)]
struct WeightsDoc {
    graph: String,
    weights: BTreeMap<String, u64>,
    classes: Vec<u64>,
    proper: bool,
}

pub fn weights(path: &Path, output: &Output) -> Outcome {
    let l = Document::parse(&read(path)?)?.labeling()?;
    let w = vertex_weights(&l);
    let doc = WeightsDoc {
        graph: l.graph.family.to_string(),
        weights: w.by_name(&l.graph),
        classes: w.classes.clone(),
        proper: w.proper,
    };
    let text = match output.format {
        Format::Json => to_json(&doc),
        Format::Csv => weights_to_csv(&doc.weights)?,
    };
    let manifest = RunManifest::new(json!({ "from": path.display().to_string() }), None);
    finish(output.out.as_deref(), &text, manifest)?;
    say(
        output,
        &format!("{} classes; proper: {}", w.color_count(), w.proper),
    );
    Ok(())
}

pub fn bounds(family: &str, dims: &Dims) -> Outcome {
    let family = graph_family(family, dims)?;
    let b = chi_la_bounds(family);
    let doc = json!({ "graph": family.to_string(), "bounds": b });
    print!("{}", to_json(&doc));
    eprintln!("{family}: {}", describe_bounds(&b));
    Ok(())
}

fn oracle_graph(family: &str, dims: &Dims) -> Result<PartiteGraph, Failure> {
    if family == "path" {
        let v = resolve(dims, "path", 1, 1)?;
        return Ok(PartiteGraph::path(v[0])?);
    }
    Ok(make_graph(graph_family(family, dims)?)?)
}

pub fn oracle(
    family: &str,
    dims: &Dims,
    max_edges: usize,
    max_labelings: Option<u64>,
    output: &Output,
) -> Outcome {
    if output.format == Format::Csv {
        return Err(Failure::io(
            "oracle results are JSON only; export the file to get the witness as CSV",
        ));
    }
    let g = oracle_graph(family, dims)?;
    let r = exact_chi_la_with(
        &g,
        &OracleOptions {
            max_edges,
            max_labelings,
        },
    )?;
    let manifest = RunManifest::new(
        json!({ "graph": g.family.to_string(), "edges": g.edge_count(), "max_edges": max_edges, "max_labelings": max_labelings }),
        None,
    );
    finish(
        output.out.as_deref(),
        &to_json(&OracleJson::from(&r)),
        manifest,
    )?;
    let value = r.chi_la.map_or("none".to_string(), |k| k.to_string());
    let mut msg = format!(
        "{}: chi_la = {value} after {} labelings",
        g.family, r.explored
    );
    if r.budget_hit {
        msg.push_str(" (budget hit: upper bound only)");
    }
    say(output, &msg);
    Ok(())
}

pub fn export(path: &Path, out: Option<&Path>) -> Outcome {
    let csv = match Document::parse(&read(path)?)? {
        Document::Matrix(m) => matrices_to_csv(&m.to_matrices()?)?,
        Document::Family(f) => matrices_to_csv(&f.to_family()?.copies)?,
        Document::Labeling(l) => labels_to_csv(&l)?,
        Document::Oracle(o) => match &o.witness {
            Some(w) => labels_to_csv(w)?,
            None => return Err(Failure::io("oracle document has no witness to export")),
        },
    };
    let manifest = RunManifest::new(json!({ "from": path.display().to_string() }), None);
    finish(out, &csv, manifest)
}
