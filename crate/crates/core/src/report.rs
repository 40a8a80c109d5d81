//! JSON and plain-text renderings of results.
//!
//! JSON objects are built from structs so key order is fixed; every top-level
//! object starts with a `status` field.

use serde::Serialize;

use crate::catalog::CatalogEntry;
use crate::coordinatize::CoordinatizationReport;
use crate::equivalence::{ClassPartition, Relation};
use crate::extension::{ExtensionReport, StabilitySummary};
use crate::field::{Elem, Field};
use crate::matrix::{Label, Matrix, TransformWitness};
use crate::matroid::Matroid;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Plain,
    Json,
}

#[derive(Serialize)]
pub struct MatrixJson {
    pub q: u32,
    pub labels: Vec<Label>,
    pub rows: Vec<Vec<Elem>>,
}

impl From<&Matrix> for MatrixJson {
    fn from(m: &Matrix) -> Self {
        MatrixJson { q: m.field().q(), labels: m.labels().to_vec(), rows: m.row_vecs() }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct Empty {
    status: &'static str,
}

pub fn empty(format: Format, what: &str) -> String {
    match format {
        Format::Json => to_json(&Empty { status: "empty" }),
        Format::Plain => format!("no {what}\n"),
    }
}

/// Left-aligned columns separated by two spaces.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.len());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let mut s = String::new();
        for (i, (c, w)) in cells.iter().zip(&widths).enumerate() {
            if i + 1 == cells.len() {
                s.push_str(c);
            } else {
                s.push_str(&format!("{c:<w$}  "));
            }
        }
        s.push('\n');
        s
    };
    let mut out = line(header.to_vec());
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

fn plural(n: usize) -> &'static str {
    if n == 1 {
        "class"
    } else {
        "classes"
    }
}

pub fn tuple(v: &[Elem]) -> String {
    let parts: Vec<String> = v.iter().map(|e| e.to_string()).collect();
    format!("({})", parts.join(","))
}

// ---- field

#[derive(Serialize)]
struct FieldJson {
    status: &'static str,
    p: u32,
    k: u32,
    q: u32,
    reduction: Vec<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<Elem>,
}

pub fn field(f: &Field, result: Option<Elem>, format: Format) -> String {
    match format {
        Format::Json => to_json(&FieldJson {
            status: "ok",
            p: f.p(),
            k: f.k(),
            q: f.q(),
            reduction: f.reduction().to_vec(),
            result,
        }),
        Format::Plain => match result {
            Some(r) => format!("{r}\n"),
            None => format!("{}\np {} k {} q {}\n", f.header(), f.p(), f.k(), f.q()),
        },
    }
}

// ---- equivalence

#[derive(Serialize)]
struct EquivJson<'a> {
    status: &'static str,
    relation: Relation,
    equivalent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<&'a TransformWitness>,
}

pub fn equivalence(relation: Relation, witness: Option<&TransformWitness>, show: bool, format: Format) -> String {
    let equivalent = witness.is_some();
    let status = if equivalent { "equivalent" } else { "inequivalent" };
    let shown = witness.filter(|_| show);
    match format {
        Format::Json => to_json(&EquivJson { status, relation, equivalent, witness: shown }),
        Format::Plain => {
            let mut out = format!("{}: {status}\n", relation.name());
            if let Some(w) = shown {
                out.push_str(&serde_json::to_string(w).expect("serializable"));
                out.push('\n');
            }
            out
        }
    }
}

// ---- isomorphism

#[derive(Serialize)]
struct IsoJson {
    status: &'static str,
    isomorphic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    map: Option<Vec<[Label; 2]>>,
}

pub fn isomorphism(a: &Matroid, b: &Matroid, perm: Option<&[usize]>, format: Format) -> String {
    let map: Option<Vec<[Label; 2]>> =
        perm.map(|p| p.iter().enumerate().map(|(i, &j)| [a.labels()[i], b.labels()[j]]).collect());
    let status = if map.is_some() { "isomorphic" } else { "not isomorphic" };
    match format {
        Format::Json => to_json(&IsoJson { status, isomorphic: map.is_some(), map }),
        Format::Plain => {
            let mut out = format!("{status}\n");
            if let Some(map) = &map {
                let pairs: Vec<String> = map.iter().map(|[x, y]| format!("{x}->{y}")).collect();
                out.push_str(&pairs.join(" "));
                out.push('\n');
            }
            out
        }
    }
}

// ---- dual

#[derive(Serialize)]
struct DualJson {
    status: &'static str,
    matrix: MatrixJson,
}

pub fn dual(m: &Matrix, format: Format) -> String {
    match format {
        Format::Json => to_json(&DualJson { status: "ok", matrix: m.into() }),
        Format::Plain => crate::io::write_matrix(m),
    }
}

// ---- coordinatization

#[derive(Serialize)]
struct WitnessJson<T: Serialize> {
    member: T,
    representative: T,
    witness: TransformWitness,
}

#[derive(Serialize)]
struct CoordJson<'a> {
    status: &'static str,
    field: u32,
    basis: &'a [Label],
    unknowns: &'a [(Label, Label)],
    assignments_tested: u64,
    valid: Vec<&'a [Elem]>,
    projective_class_count: usize,
    geometric_class_count: usize,
    projective_classes: Vec<Vec<&'a [Elem]>>,
    geometric_classes: Vec<Vec<&'a [Elem]>>,
    geometric_witnesses: Vec<WitnessJson<&'a [Elem]>>,
}

fn classes_by<'a, T: ?Sized>(p: &ClassPartition, item: impl Fn(usize) -> &'a T) -> Vec<Vec<&'a T>> {
    p.classes.iter().map(|c| c.iter().map(|&i| item(i)).collect()).collect()
}

pub fn coordinatization(r: &CoordinatizationReport, format: Format) -> String {
    let status = if r.representable { "representable" } else { "not representable" };
    let assignment = |i: usize| r.valid[i].assignment.as_slice();
    match format {
        Format::Json => to_json(&CoordJson {
            status,
            field: r.field,
            basis: &r.basis,
            unknowns: &r.unknowns,
            assignments_tested: r.assignments_tested,
            valid: r.valid.iter().map(|v| v.assignment.as_slice()).collect(),
            projective_class_count: r.projective.len(),
            geometric_class_count: r.geometric.len(),
            projective_classes: classes_by(&r.projective, assignment),
            geometric_classes: classes_by(&r.geometric, assignment),
            geometric_witnesses: r
                .geometric
                .witnesses
                .iter()
                .map(|w| WitnessJson {
                    member: assignment(w.member),
                    representative: assignment(w.representative),
                    witness: w.witness.clone(),
                })
                .collect(),
        }),
        Format::Plain => {
            let basis: Vec<String> = r.basis.iter().map(|l| l.to_string()).collect();
            let unknowns: Vec<String> = r.unknowns.iter().map(|(a, b)| format!("({a},{b})")).collect();
            let mut out = format!(
                "GF({}) basis {{{}}} unknowns [{}]\n{} assignments tested, {} valid\n",
                r.field,
                basis.join(","),
                unknowns.join(" "),
                r.assignments_tested,
                r.valid.len()
            );
            if !r.representable {
                out.push_str("not representable\n");
                return out;
            }
            let (p, g) = (r.projective.len(), r.geometric.len());
            out.push_str(&format!("{p} projective {} / {g} geometric {}\n", plural(p), plural(g)));
            let rows: Vec<Vec<String>> = r
                .valid
                .iter()
                .enumerate()
                .map(|(i, v)| {
                    vec![
                        tuple(&v.assignment),
                        r.projective.class_of(i).expect("partitioned").to_string(),
                        r.geometric.class_of(i).expect("partitioned").to_string(),
                    ]
                })
                .collect();
            out.push_str(&table(&["assignment", "projective", "geometric"], &rows));
            out
        }
    }
}

// ---- extensions

#[derive(Serialize)]
struct ClassJson {
    class_id: usize,
    representative_matrix: MatrixJson,
    columns: Vec<Vec<Vec<Elem>>>,
    projective_rep_count: usize,
    geometric_rep_count: usize,
    witnesses: Vec<WitnessJson<Vec<Elem>>>,
}

#[derive(Serialize)]
struct ExtensionJson<'a> {
    status: &'static str,
    kind: &'static str,
    base: MatrixJson,
    new_label: Label,
    candidates: usize,
    class_count: usize,
    classes: Vec<ClassJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    stability: Option<&'a [StabilitySummary]>,
}

/// `kind` is `extension` or `coextension`.
pub fn extensions(r: &ExtensionReport, kind: &'static str, stability: Option<&[StabilitySummary]>, format: Format) -> String {
    if r.classes.is_empty() {
        return empty(format, &format!("{kind}s"));
    }
    let column = |c: &crate::extension::ExtensionClass, pos: usize| r.extensions[c.members[pos]].column.clone();
    match format {
        Format::Json => {
            let classes = r
                .classes
                .iter()
                .map(|c| ClassJson {
                    class_id: c.class_id,
                    representative_matrix: (&r.extensions[c.representative()].matrix).into(),
                    columns: r.group_columns(c),
                    projective_rep_count: c.projective_rep_count(),
                    geometric_rep_count: c.geometric_rep_count(),
                    witnesses: c
                        .geometric
                        .witnesses
                        .iter()
                        .map(|w| WitnessJson {
                            member: column(c, w.member),
                            representative: column(c, w.representative),
                            witness: w.witness.clone(),
                        })
                        .collect(),
                })
                .collect();
            to_json(&ExtensionJson {
                status: "ok",
                kind,
                base: r.base.matrix().into(),
                new_label: r.new_label,
                candidates: r.extensions.len(),
                class_count: r.classes.len(),
                classes,
                stability,
            })
        }
        Format::Plain => {
            let m = r.base.matrix();
            let mut out = format!(
                "{kind}s of [{}x{}] over GF({}): {} candidates, {} isomorphism classes\n",
                m.rows(),
                m.cols(),
                m.field().q(),
                r.extensions.len(),
                r.classes.len()
            );
            let rows: Vec<Vec<String>> = r
                .classes
                .iter()
                .map(|c| {
                    let groups: Vec<String> = r
                        .group_columns(c)
                        .iter()
                        .map(|g| g.iter().map(|x| tuple(x)).collect::<Vec<_>>().join(" "))
                        .map(|g| format!("{{{g}}}"))
                        .collect();
                    let mut row = vec![
                        c.class_id.to_string(),
                        c.members.len().to_string(),
                        c.projective_rep_count().to_string(),
                        c.geometric_rep_count().to_string(),
                    ];
                    if let Some(s) = stability {
                        let s = &s[c.class_id];
                        row.push(if s.multiple_projective { "no" } else { "yes" }.to_string());
                    }
                    row.push(groups.join(" "));
                    row
                })
                .collect();
            let mut header = vec!["class", "columns", "projective", "geometric"];
            if stability.is_some() {
                header.push("stable");
            }
            header.push("groups");
            out.push_str(&table(&header, &rows));
            out
        }
    }
}

// ---- catalog

pub fn catalog(entries: &[CatalogEntry], format: Format) -> String {
    if entries.is_empty() {
        return empty(format, "catalog entries");
    }
    match format {
        Format::Json => entries.iter().map(|e| e.to_json_line() + "\n").collect(),
        Format::Plain => {
            let rows: Vec<Vec<String>> = entries
                .iter()
                .map(|e| {
                    let parents: Vec<String> = e
                        .provenance
                        .iter()
                        .map(|p| match p {
                            crate::catalog::Provenance::Seed { index } => format!("seed {index}"),
                            crate::catalog::Provenance::Parent { entry, rep, column } => {
                                format!("{entry}.{rep}+{}", tuple(column))
                            }
                        })
                        .collect();
                    vec![
                        e.id.to_string(),
                        e.n.to_string(),
                        e.r.to_string(),
                        e.matroid.bases().len().to_string(),
                        e.representatives.len().to_string(),
                        parents.join(" "),
                    ]
                })
                .collect();
            let mut out = format!("{} entries\n", entries.len());
            out.push_str(&table(&["id", "n", "r", "bases", "reps", "parents"], &rows));
            out
        }
    }
}
