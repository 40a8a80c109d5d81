//! Single-element extensions and coextensions.
//!
//! An extension of `[I_r | D]` appends one point of PG(r-1, q) that is not
//! already a column, so every extension is simple. Candidates are grouped
//! first by labeled equality of the extended matroid, then by isomorphism,
//! and the matrices inside each isomorphism class are partitioned by
//! geometric equivalence.

use rayon::prelude::*;
use serde::Serialize;

use crate::equivalence::{group_by_key, partition, ClassPartition, Relation};
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::matrix::{normalize_vector, Label, Matrix, StandardForm};
use crate::matroid::{Mask, Matroid};

/// Normalized representatives of the points of PG(r-1, q) in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PGPointSet {
    pub rank: usize,
    pub q: u32,
    pub points: Vec<Vec<Elem>>,
}

impl PGPointSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

pub fn pg_points(rank: usize, field: &Field) -> PGPointSet {
    let q = field.q() as usize;
    let mut points = Vec::new();
    if rank > 0 {
        let mut v = vec![0 as Elem; rank];
        loop {
            if v.iter().find(|&&x| x != 0) == Some(&1) {
                points.push(v.clone());
            }
            let mut i = rank;
            loop {
                if i == 0 {
                    return PGPointSet { rank, q: field.q(), points };
                }
                i -= 1;
                v[i] += 1;
                if (v[i] as usize) < q {
                    break;
                }
                v[i] = 0;
            }
        }
    }
    PGPointSet { rank, q: field.q(), points }
}

/// One candidate column and the extension it produces.
#[derive(Clone, Debug)]
pub struct Extension {
    pub column: Vec<Elem>,
    pub matrix: Matrix,
    pub matroid: Matroid,
}

#[derive(Clone, Debug)]
pub struct ExtensionClass {
    pub class_id: usize,
    /// Indices into [`ExtensionReport::extensions`], increasing.
    pub members: Vec<usize>,
    /// Labeled-equality groups of members, ordered by least member.
    pub groups: Vec<Vec<usize>>,
    /// Geometric classes over positions in `members`.
    pub geometric: ClassPartition,
}

impl ExtensionClass {
    pub fn representative(&self) -> usize {
        self.members[0]
    }

    /// Largest number of candidate columns yielding one labeled extension.
    pub fn projective_rep_count(&self) -> usize {
        self.groups.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn geometric_rep_count(&self) -> usize {
        self.geometric.len()
    }
}

#[derive(Clone, Debug)]
pub struct ExtensionReport {
    pub base: StandardForm,
    /// Label given to the added element.
    pub new_label: Label,
    /// One entry per candidate column, in PG order.
    pub extensions: Vec<Extension>,
    pub classes: Vec<ExtensionClass>,
}

impl ExtensionReport {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// The class containing the extension by `column`.
    pub fn class_of_column(&self, column: &[Elem]) -> Option<&ExtensionClass> {
        let idx = self.extensions.iter().position(|e| e.column == column)?;
        self.classes.iter().find(|c| c.members.contains(&idx))
    }

    pub fn class_matroids(&self) -> Vec<&Matroid> {
        self.classes.iter().map(|c| &self.extensions[c.representative()].matroid).collect()
    }

    /// Columns of each labeled-equality group of one class.
    pub fn group_columns(&self, class: &ExtensionClass) -> Vec<Vec<Vec<Elem>>> {
        class
            .groups
            .iter()
            .map(|g| g.iter().map(|&i| self.extensions[i].column.clone()).collect())
            .collect()
    }
}

fn require_simple_connected(m: &Matroid) -> Result<()> {
    if !m.is_simple() {
        return Err(Error::NotSimple);
    }
    if !m.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Candidate columns: points of PG(r-1, q) not already present.
pub fn candidates(a: &StandardForm) -> Result<Vec<Vec<Elem>>> {
    let m = a.matrix();
    let present: Vec<Vec<Elem>> = m.normalize_columns()?.columns();
    Ok(pg_points(m.rows(), m.field()).points.into_iter().filter(|p| !present.contains(p)).collect())
}

/// Isomorphism classes over items with matroids, in first-seen order.
pub(crate) fn isomorphism_classes(matroids: &[&Matroid]) -> Vec<Vec<usize>> {
    let prints: Vec<Vec<usize>> = matroids.par_iter().map(|m| m.fingerprint()).collect();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, m) in matroids.iter().enumerate() {
        let hit = classes
            .par_iter()
            .position_first(|c| prints[c[0]] == prints[i] && matroids[c[0]].is_isomorphic(m));
        match hit {
            Some(c) => classes[c].push(i),
            None => classes.push(vec![i]),
        }
    }
    classes
}

fn classify(extensions: &[Extension]) -> Result<Vec<ExtensionClass>> {
    let keys: Vec<Vec<Mask>> = extensions.iter().map(|e| e.matroid.bases().to_vec()).collect();
    let groups = group_by_key(&keys);
    let reps: Vec<&Matroid> = groups.iter().map(|g| &extensions[g[0]].matroid).collect();
    let iso = isomorphism_classes(&reps);
    let mut classes = Vec::with_capacity(iso.len());
    for (class_id, group_ids) in iso.into_iter().enumerate() {
        let groups: Vec<Vec<usize>> = group_ids.iter().map(|&g| groups[g].clone()).collect();
        let mut members: Vec<usize> = groups.iter().flatten().copied().collect();
        members.sort_unstable();
        let matrices: Vec<Matrix> = members.iter().map(|&i| extensions[i].matrix.clone()).collect();
        let geometric = partition(&matrices, Relation::Geometric)?;
        classes.push(ExtensionClass { class_id, members, groups, geometric });
    }
    Ok(classes)
}

fn next_label(m: &Matrix) -> Label {
    m.labels().iter().max().map_or(1, |l| l + 1)
}

/// All simple single-element extensions of a simple connected representation.
pub fn extend_all(a: &StandardForm) -> Result<ExtensionReport> {
    let m = a.matrix();
    require_simple_connected(&Matroid::of_matrix(m))?;
    let label = next_label(m);
    let extensions: Vec<Extension> = candidates(a)?
        .into_par_iter()
        .map(|column| {
            let matrix = m.append_column(&column, label).expect("fresh label");
            let matroid = Matroid::of_matrix(&matrix);
            Extension { column, matrix, matroid }
        })
        .collect();
    let classes = classify(&extensions)?;
    Ok(ExtensionReport { base: a.clone(), new_label: label, extensions, classes })
}

/// Single-element coextensions: extensions of the dual representation,
/// dualized back. `column` in each entry is the point added to the dual.
pub fn coextend_all(a: &StandardForm) -> Result<ExtensionReport> {
    let dual = a.dual();
    let dm = Matroid::of_matrix(dual.matrix());
    if !dm.is_simple() {
        return Err(Error::NotCosimple);
    }
    if !dm.is_connected() {
        return Err(Error::Disconnected);
    }
    let report = extend_all(&dual)?;
    let extensions: Vec<Extension> = report
        .extensions
        .into_par_iter()
        .map(|e| {
            let sf = StandardForm::new(e.matrix).expect("extensions keep the identity prefix");
            let matrix = sf.dual().into_matrix();
            let matroid = Matroid::of_matrix(&matrix);
            Extension { column: e.column, matrix, matroid }
        })
        .collect();
    let mut classes = report.classes;
    for class in classes.iter_mut() {
        let matrices: Vec<Matrix> = class.members.iter().map(|&i| extensions[i].matrix.clone()).collect();
        class.geometric = partition(&matrices, Relation::Geometric)?;
    }
    Ok(ExtensionReport { base: a.clone(), new_label: report.new_label, extensions, classes })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilitySummary {
    pub class_id: usize,
    /// Most candidate columns giving one labeled extension.
    pub projective_reps: usize,
    /// Most geometric classes among the columns of one labeled extension.
    pub geometric_reps: usize,
    pub multiple_projective: bool,
    pub multiple_geometric: bool,
}

/// For each extension class: does the base extend to it through several
/// projectively (resp. geometrically) inequivalent representations?
pub fn stability_probe(a: &StandardForm) -> Result<Vec<StabilitySummary>> {
    let report = extend_all(a)?;
    stability_of(&report)
}

pub fn stability_of(report: &ExtensionReport) -> Result<Vec<StabilitySummary>> {
    let mut out = Vec::with_capacity(report.classes.len());
    for class in &report.classes {
        let mut geometric_reps = 0;
        for g in &class.groups {
            let matrices: Vec<Matrix> = g.iter().map(|&i| report.extensions[i].matrix.clone()).collect();
            geometric_reps = geometric_reps.max(partition(&matrices, Relation::Geometric)?.len());
        }
        let projective_reps = class.projective_rep_count();
        out.push(StabilitySummary {
            class_id: class.class_id,
            projective_reps,
            geometric_reps,
            multiple_projective: projective_reps >= 2,
            multiple_geometric: geometric_reps >= 2,
        });
    }
    Ok(out)
}

/// Normalized copy of a column.
pub fn normalized(field: &Field, column: &[Elem]) -> Vec<Elem> {
    let mut v = column.to_vec();
    normalize_vector(field, &mut v);
    v
}
