//! JSON documents, CSV export, and verification of documents read back in.
//!
//! Verification recomputes every sum and weight from the entries or labels
//! in the document; claimed values are only compared against, never used.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::builders::{blanked_structure, BlankedMatrix, BuildRecipe, MatrixFamily, RecipeTag};
use crate::design::{verify_array, ArrayKind};
use crate::error::{Error, Result};
use crate::graph::labeling::labeling_from_blanked;
use crate::graph::{
    chi_la_bounds, labeling_from_matrix_family, make_graph, vertex_weights, EdgeLabeling,
    GraphFamily, PartiteGraph,
};
use crate::matrix::{distinct, IntMatrix};
use crate::oracle::OracleResult;

/// Kind string of a blanked `K_{1,m,n}` matrix.
pub const B_MATRIX_KIND: &str = "b-matrix";
/// Kind string of the copies inside a family document.
pub const FAMILY_COPY_KIND: &str = "family-copy";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecipeJson {
    pub theorem: String,
    pub m: usize,
    pub n: usize,
    pub r: usize,
}

impl From<&BuildRecipe> for RecipeJson {
    fn from(r: &BuildRecipe) -> Self {
        RecipeJson {
            theorem: r.tag.name().to_string(),
            m: r.m,
            n: r.n,
            r: r.r,
        }
    }
}

/// One array, or a set of equally shaped arrays. `entries` holds one
/// row-major list per array; `blank` is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub kind: String,
    pub rows: usize,
    pub cols: usize,
    pub count: usize,
    pub entries: Vec<Vec<u32>>,
    pub blank: Option<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub recipe: Option<RecipeJson>,
}

impl MatrixJson {
    pub fn from_matrices(kind: &str, ms: &[IntMatrix]) -> Self {
        let first = &ms[0];
        MatrixJson {
            kind: kind.to_string(),
            rows: first.rows(),
            cols: first.cols(),
            count: ms.len(),
            entries: ms.iter().map(|m| m.entries().to_vec()).collect(),
            blank: first.blank().map(|(i, j)| [i + 1, j + 1]),
            recipe: None,
        }
    }

    pub fn to_matrices(&self) -> Result<Vec<IntMatrix>> {
        if self.entries.len() != self.count {
            return Err(Error::Format(format!(
                "count is {} but {} entry lists are present",
                self.count,
                self.entries.len()
            )));
        }
        if self.count == 0 {
            return Err(Error::Format("document holds no arrays".into()));
        }
        let blank = match self.blank {
            Some([i, j]) if i == 0 || j == 0 => {
                return Err(Error::Format("blank coordinates are 1-based".into()))
            }
            Some([i, j]) => Some((i - 1, j - 1)),
            None => None,
        };
        self.entries
            .iter()
            .map(|e| {
                let mut m = IntMatrix::new(self.rows, self.cols, e.clone())
                    .map_err(|e| Error::Format(e.to_string()))?;
                m.set_blank(blank)
                    .map_err(|e| Error::Format(e.to_string()))?;
                Ok(m)
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyJson {
    pub copies: Vec<MatrixJson>,
    pub claimed_row_sums: Vec<u64>,
    pub claimed_col_sums: Vec<u64>,
    pub recipe: RecipeJson,
}

impl From<&MatrixFamily> for FamilyJson {
    fn from(f: &MatrixFamily) -> Self {
        FamilyJson {
            copies: f
                .copies
                .iter()
                .map(|c| MatrixJson::from_matrices(FAMILY_COPY_KIND, std::slice::from_ref(c)))
                .collect(),
            claimed_row_sums: f.claimed_row_sums.clone(),
            claimed_col_sums: f.claimed_col_sums.clone(),
            recipe: (&f.recipe).into(),
        }
    }
}

impl FamilyJson {
    pub fn to_family(&self) -> Result<MatrixFamily> {
        let copies = self
            .copies
            .iter()
            .map(|c| match c.to_matrices()?.as_slice() {
                [one] => Ok(one.clone()),
                _ => Err(Error::Format("each family copy must hold one array".into())),
            })
            .collect::<Result<Vec<_>>>()?;
        if copies.is_empty() {
            return Err(Error::Format("family has no copies".into()));
        }
        let tag: RecipeTag = self.recipe.theorem.parse()?;
        Ok(MatrixFamily {
            copies,
            recipe: BuildRecipe {
                tag,
                m: self.recipe.m,
                n: self.recipe.n,
                r: self.recipe.r,
                claimed_colors: distinct(
                    &[self.claimed_row_sums.clone(), self.claimed_col_sums.clone()].concat(),
                )
                .len(),
            },
            claimed_row_sums: self.claimed_row_sums.clone(),
            claimed_col_sums: self.claimed_col_sums.clone(),
        })
    }
}

pub fn blanked_to_json(b: &BlankedMatrix) -> MatrixJson {
    MatrixJson {
        recipe: Some((&b.recipe).into()),
        ..MatrixJson::from_matrices(B_MATRIX_KIND, std::slice::from_ref(&b.matrix))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphParams {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    /// Vertex count of a custom graph.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub family: String,
    pub params: GraphParams,
}

impl From<&PartiteGraph> for GraphJson {
    fn from(g: &PartiteGraph) -> Self {
        let (family, params) = match g.family {
            GraphFamily::Rkmn { m, n, r: 1 } => (
                "kmn",
                GraphParams {
                    m: Some(m),
                    n: Some(n),
                    ..Default::default()
                },
            ),
            GraphFamily::Rkmn { m, n, r } => (
                "rkmn",
                GraphParams {
                    m: Some(m),
                    n: Some(n),
                    r: Some(r),
                    ..Default::default()
                },
            ),
            GraphFamily::K1mn { m, n } => (
                "k1mn",
                GraphParams {
                    m: Some(m),
                    n: Some(n),
                    ..Default::default()
                },
            ),
            GraphFamily::Custom => (
                "custom",
                GraphParams {
                    vertices: Some(g.vertex_count()),
                    ..Default::default()
                },
            ),
        };
        GraphJson {
            family: family.into(),
            params,
        }
    }
}

/// Parses a family name as used on the command line and in documents.
pub fn parse_family(name: &str, m: usize, n: usize, r: Option<usize>) -> Result<GraphFamily> {
    match name {
        "kmn" => Ok(GraphFamily::Rkmn { m, n, r: 1 }),
        "rkmn" => Ok(GraphFamily::Rkmn {
            m,
            n,
            r: r.unwrap_or(1),
        }),
        "k1mn" => Ok(GraphFamily::K1mn { m, n }),
        other => Err(Error::Format(format!(
            "unknown graph family {other:?} (expected kmn, rkmn or k1mn)"
        ))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingJson {
    pub graph: GraphJson,
    /// `[endpoint, endpoint, label]` in edge order.
    pub labels: Vec<(String, String, u32)>,
    pub weights: BTreeMap<String, u64>,
    pub classes: Vec<u64>,
    pub proper: bool,
}

impl From<&EdgeLabeling> for LabelingJson {
    fn from(l: &EdgeLabeling) -> Self {
        let g = &l.graph;
        let w = vertex_weights(l);
        LabelingJson {
            graph: g.into(),
            labels: g
                .edges
                .iter()
                .zip(&l.labels)
                .map(|(&(a, b), &x)| (g.vertices[a].name.clone(), g.vertices[b].name.clone(), x))
                .collect(),
            weights: w.by_name(g),
            classes: w.classes,
            proper: w.proper,
        }
    }
}

impl LabelingJson {
    fn graph(&self) -> Result<PartiteGraph> {
        let p = &self.graph.params;
        let need = |v: Option<usize>, what: &str| {
            v.ok_or_else(|| Error::Format(format!("graph params lack {what}")))
        };
        if self.graph.family == "custom" {
            let k = need(p.vertices, "vertices")?;
            let index = |name: &str| -> Result<usize> {
                name.strip_prefix('n')
                    .and_then(|s| s.parse::<usize>().ok())
                    .filter(|&i| (1..=k).contains(&i))
                    .map(|i| i - 1)
                    .ok_or_else(|| Error::Format(format!("unknown vertex {name:?}")))
            };
            let edges = self
                .labels
                .iter()
                .map(|(a, b, _)| Ok((index(a)?, index(b)?)))
                .collect::<Result<Vec<_>>>()?;
            return PartiteGraph::custom(k, edges).map_err(|e| Error::Format(e.to_string()));
        }
        let family = parse_family(&self.graph.family, need(p.m, "m")?, need(p.n, "n")?, p.r)?;
        make_graph(family).map_err(|e| Error::Format(e.to_string()))
    }

    /// Rebuilds the labeling. Edge endpoints must match the canonical edge
    /// order of the family; a label that breaks bijectivity is reported as
    /// `InvalidParameters`.
    pub fn to_labeling(&self) -> Result<EdgeLabeling> {
        let g = self.graph()?;
        if self.labels.len() != g.edge_count() {
            return Err(Error::Format(format!(
                "{} labels for a graph with {} edges",
                self.labels.len(),
                g.edge_count()
            )));
        }
        for ((a, b, _), &(x, y)) in self.labels.iter().zip(&g.edges) {
            let (ex, ey) = (&g.vertices[x].name, &g.vertices[y].name);
            if !((a == ex && b == ey) || (a == ey && b == ex)) {
                return Err(Error::Format(format!(
                    "edge [{a}, {b}] is out of order; expected [{ex}, {ey}]"
                )));
            }
        }
        EdgeLabeling::new(g, self.labels.iter().map(|l| l.2).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleJson {
    pub chi_la: Option<usize>,
    pub witness: Option<LabelingJson>,
    pub explored: u64,
    pub budget_hit: bool,
}

impl From<&OracleResult> for OracleJson {
    fn from(r: &OracleResult) -> Self {
        OracleJson {
            chi_la: r.chi_la,
            witness: r.witness.as_ref().map(Into::into),
            explored: r.explored,
            budget_hit: r.budget_hit,
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("document types always serialize");
    s.push('\n');
    s
}

fn csv_err(e: impl std::fmt::Display) -> Error {
    Error::Format(e.to_string())
}

fn finish_csv(w: csv::Writer<Vec<u8>>) -> Result<String> {
    String::from_utf8(w.into_inner().map_err(csv_err)?).map_err(csv_err)
}

/// One array as CSV: no header, blank cell left empty.
pub fn to_csv(m: &IntMatrix) -> Result<String> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols())
            .map(|j| {
                if m.is_blank(i, j) {
                    String::new()
                } else {
                    m.get(i, j).to_string()
                }
            })
            .collect();
        w.write_record(&row).map_err(csv_err)?;
    }
    finish_csv(w)
}

/// Several arrays as CSV, separated by an empty line.
pub fn matrices_to_csv(ms: &[IntMatrix]) -> Result<String> {
    Ok(ms
        .iter()
        .map(to_csv)
        .collect::<Result<Vec<_>>>()?
        .join("\n"))
}

/// `u,v,label` per edge, in edge order.
pub fn labels_to_csv(l: &LabelingJson) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["u", "v", "label"]).map_err(csv_err)?;
    for (a, b, x) in &l.labels {
        w.write_record([a.as_str(), b.as_str(), &x.to_string()])
            .map_err(csv_err)?;
    }
    finish_csv(w)
}

/// `vertex,weight` per vertex, sorted by name.
pub fn weights_to_csv(weights: &BTreeMap<String, u64>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["vertex", "weight"]).map_err(csv_err)?;
    for (v, x) in weights {
        w.write_record([v.as_str(), &x.to_string()])
            .map_err(csv_err)?;
    }
    finish_csv(w)
}

/// Outcome of [`verify_document`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DocumentReport {
    pub document: String,
    pub passed: bool,
    pub findings: Vec<String>,
    pub notes: Vec<String>,
}

impl DocumentReport {
    fn new(document: &str, findings: Vec<String>, notes: Vec<String>) -> Self {
        DocumentReport {
            document: document.to_string(),
            passed: findings.is_empty(),
            findings,
            notes,
        }
    }
}

fn labeling_checks(l: &EdgeLabeling, findings: &mut Vec<String>, notes: &mut Vec<String>) -> usize {
    let w = vertex_weights(l);
    let bounds = chi_la_bounds(l.graph.family);
    notes.push(format!(
        "{} weight classes {:?}",
        w.color_count(),
        w.classes
    ));
    if !w.proper {
        findings.push("induced coloring is not proper".into());
    }
    let e = l.graph.edge_count() as u64;
    let total: u64 = w.weights.iter().sum();
    if total != e * (e + 1) {
        findings.push(format!("weights sum to {total}, expected {}", e * (e + 1)));
    }
    if w.proper && !bounds.contains(w.color_count()) {
        findings.push(format!(
            "{} classes fall outside the known bounds [{}, {:?}]",
            w.color_count(),
            bounds.lower,
            bounds.upper
        ));
    }
    w.color_count()
}

fn verify_matrix(doc: MatrixJson) -> Result<DocumentReport> {
    let ms = doc.to_matrices()?;
    if doc.kind == B_MATRIX_KIND {
        let [b] = ms.as_slice() else {
            return Err(Error::Format("a B matrix document holds one array".into()));
        };
        let mut findings = blanked_structure(b);
        let mut notes = Vec::new();
        if findings.is_empty() {
            let g = make_graph(GraphFamily::K1mn {
                m: b.rows() - 1,
                n: b.cols() - 1,
            })?;
            let l = labeling_from_blanked(&g, b)?;
            labeling_checks(&l, &mut findings, &mut notes);
        }
        return Ok(DocumentReport::new(B_MATRIX_KIND, findings, notes));
    }
    let kind = ArrayKind::from_name(&doc.kind)
        .ok_or_else(|| Error::Format(format!("unknown array kind {:?}", doc.kind)))?;
    let report = verify_array(&ms, kind);
    let notes = vec![
        format!("row sums {:?}", distinct(&report.row_sums)),
        format!("column sums {:?}", distinct(&report.col_sums)),
    ];
    Ok(DocumentReport::new(kind.name(), report.violations, notes))
}

fn verify_family(doc: FamilyJson) -> Result<DocumentReport> {
    let fam = doc.to_family()?;
    let mut findings = fam.violations();
    let mut notes = vec![
        format!("row sums {:?}", fam.observed_row_sums()),
        format!("column sums {:?}", fam.observed_col_sums()),
    ];
    if fam.rows() >= 2 && fam.cols() >= 2 {
        let g = make_graph(GraphFamily::Rkmn {
            m: fam.rows(),
            n: fam.cols(),
            r: fam.copies.len(),
        })?;
        match labeling_from_matrix_family(&g, &fam) {
            Ok(l) => {
                labeling_checks(&l, &mut findings, &mut notes);
            }
            Err(e) => findings.push(e.to_string()),
        }
    }
    Ok(DocumentReport::new("family", findings, notes))
}

/// Also returns the recomputed class count when the labels are valid.
fn verify_labeling(doc: LabelingJson) -> Result<(DocumentReport, Option<usize>)> {
    let l = match doc.to_labeling() {
        Ok(l) => l,
        Err(Error::InvalidParameters(msg)) => {
            return Ok((DocumentReport::new("labeling", vec![msg], Vec::new()), None))
        }
        Err(e) => return Err(e),
    };
    let mut findings = Vec::new();
    let mut notes = Vec::new();
    let classes = labeling_checks(&l, &mut findings, &mut notes);
    let w = vertex_weights(&l);
    if w.by_name(&l.graph) != doc.weights {
        findings.push("recorded weights differ from recomputed weights".into());
    }
    if w.classes != doc.classes {
        findings.push("recorded classes differ from recomputed classes".into());
    }
    if w.proper != doc.proper {
        findings.push("recorded properness flag is wrong".into());
    }
    Ok((
        DocumentReport::new("labeling", findings, notes),
        Some(classes),
    ))
}

fn verify_oracle(doc: OracleJson) -> Result<DocumentReport> {
    let Some(witness) = doc.witness else {
        let findings = match doc.chi_la {
            Some(_) => vec!["chi_la is given without a witness".to_string()],
            None => Vec::new(),
        };
        return Ok(DocumentReport::new("oracle", findings, Vec::new()));
    };
    let (report, classes) = verify_labeling(witness)?;
    let mut findings = report.findings;
    if classes.is_some() && doc.chi_la != classes {
        findings.push("chi_la does not match the witness".into());
    }
    Ok(DocumentReport::new("oracle", findings, report.notes))
}

fn parse<T: for<'de> Deserialize<'de>>(v: Value) -> Result<T> {
    serde_json::from_value(v).map_err(|e| Error::Format(e.to_string()))
}

/// Any document this crate writes, recognised by its fields.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Matrix(MatrixJson),
    Family(FamilyJson),
    Labeling(LabelingJson),
    Oracle(OracleJson),
}

impl Document {
    pub fn parse(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        let has = |k: &str| v.get(k).is_some();
        if has("copies") {
            parse(v).map(Document::Family)
        } else if has("labels") {
            parse(v).map(Document::Labeling)
        } else if has("chi_la") {
            parse(v).map(Document::Oracle)
        } else if has("entries") {
            parse(v).map(Document::Matrix)
        } else {
            Err(Error::Format("unrecognised document".into()))
        }
    }

    /// The edge labeling a document describes: a labeling as is, an oracle
    /// witness, a family or array set on `rK_{m,n}`, a B matrix on
    /// `K_{1,m,n}`.
    pub fn labeling(&self) -> Result<EdgeLabeling> {
        match self {
            Document::Labeling(l) => l.to_labeling(),
            Document::Oracle(o) => o
                .witness
                .as_ref()
                .ok_or_else(|| Error::Format("oracle document has no witness".into()))?
                .to_labeling(),
            Document::Family(f) => {
                let fam = f.to_family()?;
                let g = make_graph(GraphFamily::Rkmn {
                    m: fam.rows(),
                    n: fam.cols(),
                    r: fam.copies.len(),
                })?;
                labeling_from_matrix_family(&g, &fam)
            }
            Document::Matrix(d) => {
                let ms = d.to_matrices()?;
                if d.kind == B_MATRIX_KIND {
                    let [b] = ms.as_slice() else {
                        return Err(Error::Format("a B matrix document holds one array".into()));
                    };
                    if b.rows() < 2 || b.cols() < 2 {
                        return Err(Error::Format("B matrix is smaller than 2x2".into()));
                    }
                    let g = make_graph(GraphFamily::K1mn {
                        m: b.rows() - 1,
                        n: b.cols() - 1,
                    })?;
                    return labeling_from_blanked(&g, b);
                }
                if ms[0].blank().is_some() {
                    return Err(Error::Format("only B matrices may contain a blank".into()));
                }
                let g = make_graph(GraphFamily::Rkmn {
                    m: d.rows,
                    n: d.cols,
                    r: d.count,
                })?;
                EdgeLabeling::new(
                    g,
                    ms.iter()
                        .flat_map(|m| m.entries().iter().copied())
                        .collect(),
                )
            }
        }
    }
}

/// Verifies any document this crate writes.
pub fn verify_document(text: &str) -> Result<DocumentReport> {
    match Document::parse(text)? {
        Document::Family(f) => verify_family(f),
        Document::Labeling(l) => Ok(verify_labeling(l)?.0),
        Document::Oracle(o) => verify_oracle(o),
        Document::Matrix(m) => verify_matrix(m),
    }
}
