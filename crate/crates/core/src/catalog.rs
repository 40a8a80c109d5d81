//! Exhaustive generation of simple matroids representable over a field.
//!
//! Every geometric representative of every entry is extended, not just one
//! matrix per isomorphism class: a class reachable from one representation
//! may be unreachable from another.

use rayon::prelude::*;
use serde::Serialize;

use crate::equivalence::{partition, Relation};
use crate::error::{Error, Result};
use crate::extension::{extend_all, isomorphism_classes};
use crate::field::Elem;
use crate::matrix::{Matrix, StandardForm};
use crate::matroid::Matroid;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Provenance {
    Seed { index: usize },
    /// Extension of representative `rep` of entry `entry` by `column`.
    Parent { entry: usize, rep: usize, column: Vec<Elem> },
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: usize,
    pub n: usize,
    pub r: usize,
    pub q: u32,
    pub matroid: Matroid,
    /// Pairwise geometrically inequivalent representations.
    pub representatives: Vec<StandardForm>,
    /// Provenance of the first matrix found for each representative.
    pub provenance: Vec<Provenance>,
}

struct Found {
    matrix: StandardForm,
    matroid: Matroid,
    provenance: Provenance,
}

fn assemble(found: Vec<Found>, first_id: usize) -> Result<Vec<CatalogEntry>> {
    let matroids: Vec<&Matroid> = found.iter().map(|f| &f.matroid).collect();
    let classes = isomorphism_classes(&matroids);
    let mut out = Vec::with_capacity(classes.len());
    for (k, class) in classes.into_iter().enumerate() {
        let head = &found[class[0]];
        let matrices: Vec<Matrix> = class.iter().map(|&i| found[i].matrix.matrix().clone()).collect();
        let geo = partition(&matrices, Relation::Geometric)?;
        let reps: Vec<usize> = geo.representatives().iter().map(|&p| class[p]).collect();
        out.push(CatalogEntry {
            id: first_id + k,
            n: head.matroid.n(),
            r: head.matroid.rank(),
            q: head.matrix.matrix().field().q(),
            matroid: head.matroid.clone(),
            representatives: reps.iter().map(|&i| found[i].matrix.clone()).collect(),
            provenance: reps.iter().map(|&i| found[i].provenance.clone()).collect(),
        });
    }
    Ok(out)
}

/// Breadth-first catalog from `seeds` up to ground-set size `n_max`, ordered
/// by size and then by discovery.
pub fn generate_catalog(seeds: &[StandardForm], n_max: usize) -> Result<Vec<CatalogEntry>> {
    let Some(first) = seeds.first() else {
        return Ok(Vec::new());
    };
    let field = first.matrix().field();
    if seeds.iter().any(|s| s.matrix().field() != field) {
        return Err(Error::FieldMismatch);
    }
    let mut catalog: Vec<CatalogEntry> = Vec::new();
    let mut seeds_by_n: std::collections::BTreeMap<usize, Vec<Found>> = Default::default();
    for (index, s) in seeds.iter().enumerate() {
        let matroid = Matroid::of_matrix(s.matrix());
        if !matroid.is_simple() {
            return Err(Error::NotSimple);
        }
        if !matroid.is_connected() {
            return Err(Error::Disconnected);
        }
        seeds_by_n
            .entry(matroid.n())
            .or_default()
            .push(Found { matrix: s.clone(), matroid, provenance: Provenance::Seed { index } });
    }
    let Some(&n_min) = seeds_by_n.keys().next() else {
        return Ok(catalog);
    };
    let mut level: Vec<usize> = Vec::new();
    for n in n_min..=n_max {
        let mut found: Vec<Found> = Vec::new();
        let parents: Vec<(usize, usize)> = level
            .iter()
            .flat_map(|&e| (0..catalog[e].representatives.len()).map(move |r| (e, r)))
            .collect();
        let reports = parents
            .par_iter()
            .map(|&(e, r)| extend_all(&catalog[e].representatives[r]).map(|rep| (e, r, rep)))
            .collect::<Result<Vec<_>>>()?;
        for (entry, rep, report) in reports {
            for ext in report.extensions {
                let matrix = StandardForm::new(ext.matrix)?;
                let provenance = Provenance::Parent { entry, rep, column: ext.column };
                found.push(Found { matrix, matroid: ext.matroid, provenance });
            }
        }
        found.extend(seeds_by_n.remove(&n).unwrap_or_default());
        let entries = assemble(found, catalog.len())?;
        level = entries.iter().map(|e| e.id).collect();
        catalog.extend(entries);
        if level.is_empty() && seeds_by_n.is_empty() {
            break;
        }
    }
    Ok(catalog)
}

#[derive(Serialize)]
struct EntryJson<'a> {
    id: usize,
    n: usize,
    r: usize,
    q: u32,
    bases: usize,
    representatives: Vec<RepJson<'a>>,
}

#[derive(Serialize)]
struct RepJson<'a> {
    labels: &'a [u32],
    rows: Vec<Vec<Elem>>,
    parent: &'a Provenance,
}

impl CatalogEntry {
    /// One JSON object on a single line.
    pub fn to_json_line(&self) -> String {
        let representatives = self
            .representatives
            .iter()
            .zip(&self.provenance)
            .map(|(s, p)| RepJson { labels: s.matrix().labels(), rows: s.matrix().row_vecs(), parent: p })
            .collect();
        let e = EntryJson {
            id: self.id,
            n: self.n,
            r: self.r,
            q: self.q,
            bases: self.matroid.bases().len(),
            representatives,
        };
        serde_json::to_string(&e).expect("serializable")
    }
}
