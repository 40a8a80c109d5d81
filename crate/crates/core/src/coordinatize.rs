//! Coordinatizing an abstract matroid over GF(q).
//!
//! Fundamental circuits with respect to a basis give the 0/1 pattern of `D`.
//! The entries on a spanning forest of its bipartite support graph can be
//! scaled to one; the remaining nonzero positions are the unknowns. Every
//! assignment of units to the unknowns is tried and kept when the resulting
//! `[I_r | D]` has exactly the bases of the input matroid.

use std::collections::{BTreeSet, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use crate::dsu::DisjointSet;
use crate::equivalence::{partition, ClassPartition, Relation};
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::matrix::{Label, Matrix, StandardForm};
use crate::matroid::Matroid;

/// Default cap on the number of unknowns.
pub const DEFAULT_MAX_UNKNOWNS: usize = 12;

/// A position of `D`: (basis element, non-basis element).
pub type Position = (Label, Label);

#[derive(Clone, Debug)]
pub struct CoordinatizationProblem {
    pub matroid: Matroid,
    /// Row labels.
    pub basis: Vec<Label>,
    /// Column labels of `D`, in ground-set order.
    pub others: Vec<Label>,
    /// `dsharp[i][j]`: basis element `i` lies on the fundamental circuit of `others[j]`.
    pub dsharp: Vec<Vec<bool>>,
    /// Entries pinned to one, row-major.
    pub forest: Vec<Position>,
    /// The remaining ones of `dsharp`, row-major.
    pub unknowns: Vec<Position>,
}

/// Lexicographically least basis (comparing sorted label lists).
pub fn least_basis(m: &Matroid) -> Vec<Label> {
    m.bases()
        .iter()
        .map(|&b| {
            let mut l = m.labels_of(b);
            l.sort_unstable();
            l
        })
        .min()
        .expect("matroids have bases")
}

impl CoordinatizationProblem {
    fn row_of(&self, l: Label) -> Option<usize> {
        self.basis.iter().position(|&b| b == l)
    }

    fn col_of(&self, l: Label) -> Option<usize> {
        self.others.iter().position(|&b| b == l)
    }

    fn edges(&self) -> Vec<Position> {
        let mut out = Vec::new();
        for (i, row) in self.dsharp.iter().enumerate() {
            for (j, &one) in row.iter().enumerate() {
                if one {
                    out.push((self.basis[i], self.others[j]));
                }
            }
        }
        out
    }

    /// `[I_r | D]` for one assignment of the unknowns (not validated).
    pub fn assemble(&self, field: &Field, assignment: &[Elem]) -> Result<StandardForm> {
        if assignment.len() != self.unknowns.len() {
            return Err(Error::BadAssignment(format!(
                "{} values for {} unknowns",
                assignment.len(),
                self.unknowns.len()
            )));
        }
        if let Some(&bad) = assignment.iter().find(|&&x| x == 0 || !field.contains(x as u32)) {
            return Err(Error::BadAssignment(format!("{bad} is not a unit of GF({})", field.q())));
        }
        let r = self.basis.len();
        let mut d = vec![vec![0 as Elem; self.others.len()]; r];
        for &(row, col) in &self.forest {
            d[self.row_of(row).unwrap()][self.col_of(col).unwrap()] = 1;
        }
        for (&(row, col), &x) in self.unknowns.iter().zip(assignment) {
            d[self.row_of(row).unwrap()][self.col_of(col).unwrap()] = x;
        }
        let sf = StandardForm::from_d(field, &d)?;
        let labels: Vec<Label> = self.basis.iter().chain(&self.others).copied().collect();
        StandardForm::new(sf.into_matrix().with_labels(labels)?)
    }
}

/// Sets up the unknowns for `m` over the basis `basis` (default: least basis).
/// `pinned` replaces the default BFS forest.
pub fn build_problem(m: &Matroid, basis: Option<&[Label]>, pinned: Option<&[Position]>) -> Result<CoordinatizationProblem> {
    if !m.is_connected() {
        return Err(Error::Disconnected);
    }
    let basis = match basis {
        Some(b) => b.to_vec(),
        None => least_basis(m),
    };
    let bmask = m.mask_of(&basis)?;
    if !m.is_basis(bmask) || bmask.count_ones() as usize != basis.len() {
        return Err(Error::NotABasis(basis));
    }
    let others: Vec<Label> = m.labels().iter().copied().filter(|l| !basis.contains(l)).collect();
    let mut dsharp = vec![vec![false; others.len()]; basis.len()];
    for (j, &k) in others.iter().enumerate() {
        let c = m.fundamental_circuit(k, &basis)?;
        for (i, &b) in basis.iter().enumerate() {
            dsharp[i][j] = m.mask_of(&[b])? & c != 0;
        }
    }
    let mut prob = CoordinatizationProblem {
        matroid: m.clone(),
        basis,
        others,
        dsharp,
        forest: Vec::new(),
        unknowns: Vec::new(),
    };
    let edges = prob.edges();
    let forest: BTreeSet<Position> = match pinned {
        Some(p) => validate_forest(&prob, &edges, p)?,
        None => bfs_forest(&prob),
    };
    // row-major
    prob.forest = edges.iter().copied().filter(|e| forest.contains(e)).collect();
    prob.unknowns = edges.iter().copied().filter(|e| !forest.contains(e)).collect();
    Ok(prob)
}

/// Vertex ids: rows `0..r`, then columns `r..r+s`.
fn vertex_count(p: &CoordinatizationProblem) -> usize {
    p.basis.len() + p.others.len()
}

fn vertex_label(p: &CoordinatizationProblem, v: usize) -> Label {
    let r = p.basis.len();
    if v < r {
        p.basis[v]
    } else {
        p.others[v - r]
    }
}

fn neighbours(p: &CoordinatizationProblem, v: usize) -> Vec<usize> {
    let r = p.basis.len();
    let mut out: Vec<usize> = if v < r {
        (0..p.others.len()).filter(|&j| p.dsharp[v][j]).map(|j| r + j).collect()
    } else {
        (0..r).filter(|&i| p.dsharp[i][v - r]).collect()
    };
    out.sort_by_key(|&u| vertex_label(p, u));
    out
}

fn edge_of(p: &CoordinatizationProblem, a: usize, b: usize) -> Position {
    let r = p.basis.len();
    let (row, col) = if a < r { (a, b) } else { (b, a) };
    (p.basis[row], p.others[col - r])
}

fn bfs_forest(p: &CoordinatizationProblem) -> BTreeSet<Position> {
    let nv = vertex_count(p);
    let mut order: Vec<usize> = (0..nv).collect();
    order.sort_by_key(|&v| vertex_label(p, v));
    let mut seen = vec![false; nv];
    let mut forest = BTreeSet::new();
    for start in order {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for u in neighbours(p, v) {
                if !seen[u] {
                    seen[u] = true;
                    forest.insert(edge_of(p, v, u));
                    queue.push_back(u);
                }
            }
        }
    }
    forest
}

fn validate_forest(p: &CoordinatizationProblem, edges: &[Position], pinned: &[Position]) -> Result<BTreeSet<Position>> {
    let nv = vertex_count(p);
    let r = p.basis.len();
    let mut dsu = DisjointSet::new(nv);
    let mut set = BTreeSet::new();
    for &(row, col) in pinned {
        if !edges.contains(&(row, col)) {
            return Err(Error::InvalidForest(format!("({row},{col}) is not a nonzero position")));
        }
        if !set.insert((row, col)) {
            return Err(Error::InvalidForest(format!("({row},{col}) listed twice")));
        }
        let (i, j) = (p.row_of(row).unwrap(), r + p.col_of(col).unwrap());
        if !dsu.union(i, j) {
            return Err(Error::InvalidForest(format!("({row},{col}) closes a cycle")));
        }
    }
    let mut graph = DisjointSet::new(nv);
    for &(row, col) in edges {
        graph.union(p.row_of(row).unwrap(), r + p.col_of(col).unwrap());
    }
    if dsu.classes().len() != graph.classes().len() {
        return Err(Error::InvalidForest("pinned entries do not span the support graph".into()));
    }
    Ok(set)
}

#[derive(Clone, Debug, Serialize)]
pub struct Representation {
    pub assignment: Vec<Elem>,
    #[serde(skip)]
    pub matrix: StandardForm,
}

#[derive(Clone, Debug, Serialize)]
pub struct CoordinatizationReport {
    pub field: u32,
    pub basis: Vec<Label>,
    pub unknowns: Vec<Position>,
    pub assignments_tested: u64,
    pub representable: bool,
    pub valid: Vec<Representation>,
    /// Classes over `valid` indices.
    pub projective: ClassPartition,
    pub geometric: ClassPartition,
}

/// The matroid of one assembled assignment, whether or not it matches.
pub fn classify_assignment(prob: &CoordinatizationProblem, field: &Field, assignment: &[Elem]) -> Result<Matroid> {
    let sf = prob.assemble(field, assignment)?;
    Ok(Matroid::of_matrix(sf.matrix()))
}

/// Decodes the `index`-th assignment in lexicographic order (first unknown slowest).
fn nth_assignment(units: &[Elem], len: usize, mut index: u64) -> Vec<Elem> {
    let base = units.len() as u64;
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = units[(index % base) as usize];
        index /= base;
    }
    out
}

/// Tries every assignment of units; `max_unknowns` defaults to [`DEFAULT_MAX_UNKNOWNS`].
pub fn enumerate_representations(
    prob: &CoordinatizationProblem,
    field: &Field,
    max_unknowns: Option<usize>,
) -> Result<CoordinatizationReport> {
    let cap = max_unknowns.unwrap_or(DEFAULT_MAX_UNKNOWNS);
    let u = prob.unknowns.len();
    if u > cap {
        return Err(Error::TooManyUnknowns { got: u, cap });
    }
    let units = field.elements(true);
    let total = (units.len() as u64).checked_pow(u as u32).ok_or(Error::TooManyUnknowns { got: u, cap })?;
    let valid: Vec<Representation> = (0..total)
        .into_par_iter()
        .filter_map(|idx| {
            let assignment = nth_assignment(&units, u, idx);
            let sf = prob.assemble(field, &assignment).expect("units only");
            let m = Matroid::of_matrix(sf.matrix());
            m.equal_labeled(&prob.matroid)
                .expect("same ground set")
                .then_some(Representation { assignment, matrix: sf })
        })
        .collect();
    let matrices: Vec<Matrix> = valid.iter().map(|r| r.matrix.matrix().clone()).collect();
    let projective = partition(&matrices, Relation::Projective)?;
    let geometric = partition(&matrices, Relation::Geometric)?;
    Ok(CoordinatizationReport {
        field: field.q(),
        basis: prob.basis.clone(),
        unknowns: prob.unknowns.clone(),
        assignments_tested: total,
        representable: !valid.is_empty(),
        valid,
        projective,
        geometric,
    })
}
