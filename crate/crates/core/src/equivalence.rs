//! Projective, algebraic and geometric equivalence of representations.
//!
//! All three tests reduce both inputs to their nonzero row-echelon rows first,
//! decide equivalence on those full-rank blocks, and lift the resulting
//! transform back to the original row count, so rank-deficient inputs work too.
//! Every returned witness satisfies `a.apply_witness(&w) == b` entrywise.

use std::collections::{BTreeMap, VecDeque};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dsu::DisjointSet;
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::matrix::{normalize_vector, vector_key, Matrix, TransformWitness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    /// Row operations and column scaling, labels fixed.
    Projective,
    /// Projective equivalence after a field automorphism.
    Algebraic,
    /// Row operations, column scaling and column permutations.
    Geometric,
}

impl Relation {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "projective" => Some(Relation::Projective),
            "algebraic" => Some(Relation::Algebraic),
            "geometric" => Some(Relation::Geometric),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Relation::Projective => "projective",
            Relation::Algebraic => "algebraic",
            Relation::Geometric => "geometric",
        }
    }
}

fn check_compatible(a: &Matrix, b: &Matrix) -> Result<()> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} vs {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    Ok(())
}

/// `E * m = [R; 0]` with `R` of full row rank.
struct Reduced {
    e: Matrix,
    r: Matrix,
    pivots: Vec<usize>,
}

fn reduce(m: &Matrix) -> Reduced {
    let (rref, e, pivots) = m.rref_with_transform();
    let rows: Vec<Vec<Elem>> = (0..pivots.len()).map(|i| rref.row(i).to_vec()).collect();
    let r = if rows.is_empty() {
        Matrix::new(m.field().clone(), 0, m.cols(), Vec::new(), Some(m.labels().to_vec())).unwrap()
    } else {
        Matrix::from_rows(m.field(), &rows).unwrap().with_labels(m.labels().to_vec()).unwrap()
    };
    Reduced { e, r, pivots }
}

/// Lifts `t` (acting on the reduced rows) to `E2^-1 * diag(t, I) * E1`.
fn lift(field: &Field, t: &Matrix, e1: &Matrix, e2: &Matrix) -> Vec<Vec<Elem>> {
    let n = e1.rows();
    let k = t.rows();
    let mut block = Matrix::identity(field, n).row_vecs();
    for i in 0..k {
        block[i][..k].copy_from_slice(t.row(i));
    }
    let block = Matrix::from_rows(field, &block).unwrap();
    let e2inv = e2.inverse().expect("row reduction transforms are invertible");
    e2inv.mul(&block).unwrap().mul(e1).unwrap().row_vecs()
}

fn square_inverse(m: &Matrix, cols: &[usize]) -> Option<Matrix> {
    m.select_columns(cols).inverse().ok()
}

/// Row/column scalings turning the entries on a spanning forest of the
/// support graph of `s` into ones. Rows are vertices `0..rows`, the non-basis
/// columns follow. Returns `(row_scale, col_scale)`.
fn forest_scaling(s: &Matrix, basis: &[usize]) -> (Vec<Elem>, Vec<Elem>) {
    let f = s.field();
    let (rows, cols) = (s.rows(), s.cols());
    let mut row_scale: Vec<Option<Elem>> = vec![None; rows];
    let mut col_scale: Vec<Option<Elem>> = vec![None; cols];
    let is_basis: Vec<bool> = (0..cols).map(|j| basis.contains(&j)).collect();
    // BFS per component, rows first then columns, each in index order
    #[derive(Clone, Copy)]
    enum V {
        Row(usize),
        Col(usize),
    }
    let starts: Vec<V> = (0..rows).map(V::Row).chain((0..cols).filter(|&j| !is_basis[j]).map(V::Col)).collect();
    for start in starts {
        let seen = match start {
            V::Row(i) => row_scale[i].is_some(),
            V::Col(j) => col_scale[j].is_some(),
        };
        if seen {
            continue;
        }
        match start {
            V::Row(i) => row_scale[i] = Some(1),
            V::Col(j) => col_scale[j] = Some(1),
        }
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            match v {
                V::Row(i) => {
                    let ri = row_scale[i].unwrap();
                    for j in (0..cols).filter(|&j| !is_basis[j]) {
                        let x = s.get(i, j);
                        if x != 0 && col_scale[j].is_none() {
                            col_scale[j] = Some(f.inv_nz(f.mul(ri, x)));
                            queue.push_back(V::Col(j));
                        }
                    }
                }
                V::Col(j) => {
                    let cj = col_scale[j].unwrap();
                    for i in 0..rows {
                        let x = s.get(i, j);
                        if x != 0 && row_scale[i].is_none() {
                            row_scale[i] = Some(f.inv_nz(f.mul(cj, x)));
                            queue.push_back(V::Row(i));
                        }
                    }
                }
            }
        }
    }
    let row_scale: Vec<Elem> = row_scale.into_iter().map(|x| x.unwrap()).collect();
    let mut col: Vec<Elem> = col_scale.into_iter().map(|x| x.unwrap_or(1)).collect();
    for (t, &j) in basis.iter().enumerate() {
        col[j] = f.inv_nz(row_scale[t]);
    }
    (row_scale, col)
}

/// Labeled test. Columns are matched by label; a witness carries the label
/// alignment as its permutation (identity when both label lists agree).
pub fn projective_equivalent(a: &Matrix, b: &Matrix) -> Result<Option<TransformWitness>> {
    check_compatible(a, b)?;
    let f = a.field();
    let n = a.cols();
    let mut perm = Vec::with_capacity(n);
    for &l in a.labels() {
        match b.position_of(l) {
            Some(j) => perm.push(j),
            None => return Ok(None),
        }
    }
    let ra = reduce(a);
    let rb = reduce(b);
    if ra.pivots.len() != rb.pivots.len() {
        return Ok(None);
    }
    let k = ra.pivots.len();
    // b's reduced rows with columns in a's label order
    let rb_aligned = rb.r.select_columns(&perm);
    let basis = &ra.pivots;
    let Some(binv_b) = square_inverse(&rb_aligned, basis) else {
        return Ok(None);
    };
    let binv_a = square_inverse(&ra.r, basis).unwrap();
    let sa = binv_a.mul(&ra.r)?;
    let sb = binv_b.mul(&rb_aligned)?;
    if (0..k).any(|i| (0..n).any(|j| (sa.get(i, j) == 0) != (sb.get(i, j) == 0))) {
        return Ok(None);
    }
    let (rho_a, gam_a) = forest_scaling(&sa, basis);
    let (rho_b, gam_b) = forest_scaling(&sb, basis);
    for i in 0..k {
        for j in 0..n {
            let na = f.mul(f.mul(rho_a[i], sa.get(i, j)), gam_a[j]);
            let nb = f.mul(f.mul(rho_b[i], sb.get(i, j)), gam_b[j]);
            if na != nb {
                return Ok(None);
            }
        }
    }
    // X = diag(rho) * B^-1 and T' = Xb^-1 * Xa
    let diag = |d: &[Elem]| {
        let mut m = Matrix::identity(f, d.len()).row_vecs();
        for (i, &x) in d.iter().enumerate() {
            m[i][i] = x;
        }
        Matrix::from_rows(f, &m).unwrap()
    };
    let t = if k == 0 {
        Matrix::identity(f, 0)
    } else {
        let xa = diag(&rho_a).mul(&binv_a)?;
        let xb = diag(&rho_b).mul(&binv_b)?;
        xb.inverse()?.mul(&xa)?
    };
    let col_scale = (0..n).map(|j| f.mul(gam_a[j], f.inv_nz(gam_b[j]))).collect();
    Ok(Some(TransformWitness { frob_power: 0, row_transform: lift(f, &t, &ra.e, &rb.e), col_scale, col_perm: perm }))
}

pub fn algebraically_equivalent(a: &Matrix, b: &Matrix) -> Result<Option<TransformWitness>> {
    check_compatible(a, b)?;
    for j in 0..a.field().k() {
        if let Some(mut w) = projective_equivalent(&a.frobenius(j), b)? {
            w.frob_power = j;
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Column data of a full-rank block as normalized projective points.
struct PointSet {
    keys: Vec<u64>,
    sorted: Vec<u64>,
}

fn point_key(f: &Field, v: &[Elem]) -> u64 {
    let mut w = v.to_vec();
    normalize_vector(f, &mut w);
    vector_key(f, &w)
}

impl PointSet {
    fn of(m: &Matrix) -> Self {
        let keys: Vec<u64> = (0..m.cols()).map(|j| point_key(m.field(), &m.column(j))).collect();
        let mut sorted = keys.clone();
        sorted.sort_unstable();
        PointSet { keys, sorted }
    }

    fn multiplicity(&self, key: u64) -> usize {
        let lo = self.sorted.partition_point(|&k| k < key);
        let hi = self.sorted.partition_point(|&k| k <= key);
        hi - lo
    }
}

/// Unlabeled test: is there an invertible `T`, nonzero column scalings and a
/// column permutation taking `a` onto `b`?
///
/// The first independent columns of `a` are sent, in order, to every ordered
/// tuple of independent points of `b` with every scaling `(1, l2, ..., lr)`;
/// each candidate `T` is accepted when it maps the point multiset of `a` onto
/// that of `b`.
pub fn geometrically_equivalent(a: &Matrix, b: &Matrix) -> Result<Option<TransformWitness>> {
    check_compatible(a, b)?;
    let f = a.field().clone();
    let n = a.cols();
    let ra = reduce(a);
    let rb = reduce(b);
    if ra.pivots.len() != rb.pivots.len() {
        return Ok(None);
    }
    let k = ra.pivots.len();
    let pa = PointSet::of(&ra.r);
    let pb = PointSet::of(&rb.r);
    let mut prof_a: Vec<usize> = pa.sorted.iter().map(|&x| pa.multiplicity(x)).collect();
    let mut prof_b: Vec<usize> = pb.sorted.iter().map(|&x| pb.multiplicity(x)).collect();
    prof_a.sort_unstable();
    prof_b.sort_unstable();
    if prof_a != prof_b || pa.multiplicity(0) != pb.multiplicity(0) {
        return Ok(None);
    }
    let Some(frame_inv) = square_inverse(&ra.r, &ra.pivots) else {
        return Ok(None);
    };

    // distinct nonzero points of b, each with a representative column
    let mut targets: Vec<(u64, Vec<Elem>)> = Vec::new();
    for j in 0..n {
        let key = pb.keys[j];
        if key != 0 && !targets.iter().any(|(t, _)| *t == key) {
            let mut v = rb.r.column(j);
            normalize_vector(&f, &mut v);
            targets.push((key, v));
        }
    }
    targets.sort_by_key(|t| t.0);
    let frame_mult: Vec<usize> = ra.pivots.iter().map(|&j| pa.multiplicity(pa.keys[j])).collect();
    let a_cols: Vec<Vec<Elem>> = ra.r.columns();
    let units = f.elements(true);
    // coordinates of every column of a in the frame basis; T c = sum_i l_i coords_i t_i
    let coords: Vec<Vec<Elem>> = a_cols.iter().map(|c| apply(&frame_inv, c)).collect();
    let others: Vec<usize> = (0..n).filter(|j| !ra.pivots.contains(j) && pa.keys[*j] != 0).collect();
    let try_t = |t: &Matrix| -> bool {
        let mut img: Vec<u64> = a_cols.iter().map(|c| point_key(&f, &apply(t, c))).collect();
        img.sort_unstable();
        img == pb.sorted
    };

    let mut found: Option<Matrix> = None;
    if k == 0 {
        found = Some(Matrix::identity(&f, 0));
    } else {
        let mut tuple = vec![0usize; k];
        let mut image = vec![0 as Elem; k];
        let mut scaled: Vec<Vec<Elem>> = vec![vec![0; k]; k];
        'search: loop {
            // advance through ordered k-tuples of distinct targets (odometer)
            let distinct = (0..k).all(|i| (0..i).all(|h| tuple[h] != tuple[i]));
            let mult_ok = distinct && (0..k).all(|i| pb.multiplicity(targets[tuple[i]].0) == frame_mult[i]);
            let independent = mult_ok && {
                let cols: Vec<Vec<Elem>> = tuple.iter().map(|&t| targets[t].1.clone()).collect();
                Matrix::from_columns(&f, k, &cols)?.rank() == k
            };
            if independent {
                let mut lambdas = vec![0usize; k.saturating_sub(1)];
                loop {
                    for i in 0..k {
                        let l = if i == 0 { 1 } else { units[lambdas[i - 1]] };
                        for (s, &x) in scaled[i].iter_mut().zip(&targets[tuple[i]].1) {
                            *s = f.mul(l, x);
                        }
                    }
                    let ok = others.iter().all(|&j| {
                        image.iter_mut().for_each(|x| *x = 0);
                        for (i, &c) in coords[j].iter().enumerate() {
                            if c != 0 {
                                for (x, &t) in image.iter_mut().zip(&scaled[i]) {
                                    *x = f.add(*x, f.mul(c, t));
                                }
                            }
                        }
                        pb.multiplicity(point_key(&f, &image)) > 0
                    });
                    if ok {
                        let t = Matrix::from_columns(&f, k, &scaled)?.mul(&frame_inv)?;
                        if try_t(&t) {
                            found = Some(t);
                            break 'search;
                        }
                    }
                    if !odometer(&mut lambdas, units.len()) {
                        break;
                    }
                }
            }
            if !odometer(&mut tuple, targets.len()) {
                break;
            }
        }
    }
    let Some(t) = found else {
        return Ok(None);
    };

    // recover the permutation and scalings: lowest unused column of b per point
    let mut used = vec![false; n];
    let mut col_perm = vec![0; n];
    let mut col_scale = vec![1; n];
    for (i, c) in a_cols.iter().enumerate() {
        let v = apply(&t, c);
        let key = point_key(&f, &v);
        let j = (0..n).find(|&j| !used[j] && pb.keys[j] == key).expect("multisets agree");
        used[j] = true;
        col_perm[i] = j;
        if let Some(p) = v.iter().position(|&x| x != 0) {
            col_scale[i] = f.mul(rb.r.get(p, j), f.inv_nz(v[p]));
        }
    }
    Ok(Some(TransformWitness { frob_power: 0, row_transform: lift(&f, &t, &ra.e, &rb.e), col_scale, col_perm }))
}

fn apply(t: &Matrix, c: &[Elem]) -> Vec<Elem> {
    let f = t.field();
    (0..t.rows())
        .map(|i| (0..t.cols()).fold(0, |acc, j| f.add(acc, f.mul(t.get(i, j), c[j]))))
        .collect()
}

/// Advances `digits` as a base-`base` counter, last digit fastest. Returns false on wrap.
fn odometer(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

pub fn equivalent(a: &Matrix, b: &Matrix, relation: Relation) -> Result<Option<TransformWitness>> {
    match relation {
        Relation::Projective => projective_equivalent(a, b),
        Relation::Algebraic => algebraically_equivalent(a, b),
        Relation::Geometric => geometrically_equivalent(a, b),
    }
}

/// A witness taking `member` onto its class representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberWitness {
    pub member: usize,
    pub representative: usize,
    pub witness: TransformWitness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassPartition {
    /// Index classes ordered by representative (their least member).
    pub classes: Vec<Vec<usize>>,
    pub witnesses: Vec<MemberWitness>,
}

impl ClassPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn representatives(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c[0]).collect()
    }

    pub fn class_of(&self, item: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(&item))
    }
}

fn check_all_compatible(items: &[Matrix]) -> Result<()> {
    items.windows(2).try_for_each(|w| check_compatible(&w[0], &w[1]))
}

/// Partitions `items` into classes by testing each item against the current
/// class representatives in order.
pub fn partition(items: &[Matrix], relation: Relation) -> Result<ClassPartition> {
    check_all_compatible(items)?;
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut witnesses = Vec::new();
    for (i, item) in items.iter().enumerate() {
        let hit = classes
            .par_iter()
            .enumerate()
            .map(|(c, members)| (c, equivalent(item, &items[members[0]], relation)))
            .find_map_first(|(c, r)| match r {
                Ok(Some(w)) => Some(Ok((c, w))),
                Ok(None) => None,
                Err(e) => Some(Err(e)),
            })
            .transpose()?;
        match hit {
            Some((c, w)) => {
                witnesses.push(MemberWitness { member: i, representative: classes[c][0], witness: w });
                classes[c].push(i);
            }
            None => classes.push(vec![i]),
        }
    }
    Ok(ClassPartition { classes, witnesses })
}

/// Full pairwise relation table (`i < j` only; the diagonal is `true`).
pub fn pairwise(items: &[Matrix], relation: Relation) -> Result<Vec<Vec<bool>>> {
    check_all_compatible(items)?;
    let n = items.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let results: Vec<Result<bool>> = pairs
        .par_iter()
        .map(|&(i, j)| equivalent(&items[i], &items[j], relation).map(|w| w.is_some()))
        .collect();
    let mut table = vec![vec![false; n]; n];
    for i in 0..n {
        table[i][i] = true;
    }
    for (&(i, j), r) in pairs.iter().zip(results) {
        let hit = r?;
        table[i][j] = hit;
        table[j][i] = hit;
    }
    Ok(table)
}

/// Classes of the transitive closure of a pairwise table.
pub fn closure_classes(table: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let mut dsu = DisjointSet::new(table.len());
    for (i, row) in table.iter().enumerate() {
        for (j, &hit) in row.iter().enumerate() {
            if hit {
                dsu.union(i, j);
            }
        }
    }
    dsu.classes()
}

/// Groups items by an arbitrary key, preserving first-seen order.
pub(crate) fn group_by_key<K: Ord + Clone>(keys: &[K]) -> Vec<Vec<usize>> {
    let mut index: BTreeMap<K, usize> = BTreeMap::new();
    let mut out: Vec<Vec<usize>> = Vec::new();
    for (i, k) in keys.iter().enumerate() {
        match index.get(k) {
            Some(&g) => out[g].push(i),
            None => {
                index.insert(k.clone(), out.len());
                out.push(vec![i]);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::OperationSequence;
    use crate::named;

    fn m(sf: crate::matrix::StandardForm) -> Matrix {
        sf.into_matrix()
    }

    fn sound(a: &Matrix, b: &Matrix, w: &TransformWitness) {
        assert!(a.apply_witness(w).unwrap().entries_eq(b), "witness does not reproduce target");
    }

    #[test]
    fn projective_examples() {
        let a = m(named::whirl(1));
        let b = m(named::whirl(2));
        let w = projective_equivalent(&a, &a).unwrap().unwrap();
        assert_eq!(w, TransformWitness::identity(3, 6));
        assert!(projective_equivalent(&a, &b).unwrap().is_none());
        let b1 = m(named::q6_rep(1));
        let b3 = m(named::q6_rep(3));
        assert!(projective_equivalent(&b1, &b3).unwrap().is_none());
    }

    #[test]
    fn projective_finds_scaled_copy() {
        let b = m(named::whirl(2));
        let w = OperationSequence::new(b.field(), 3, 6)
            .scale_row(1, 3)
            .add_row(0, 2, 4)
            .scale_col(4, 2)
            .scale_col(5, 4)
            .build();
        let b2 = b.apply_witness(&w).unwrap();
        let found = projective_equivalent(&b, &b2).unwrap().unwrap();
        assert!(found.is_identity_perm());
        sound(&b, &b2, &found);
    }

    #[test]
    fn projective_aligns_labels() {
        let a = m(named::whirl(1));
        let shuffled = a.select_columns(&[3, 0, 5, 1, 4, 2]);
        let w = projective_equivalent(&a, &shuffled).unwrap().unwrap();
        sound(&a, &shuffled, &w);
        let relabeled = a.clone().with_labels(vec![1, 2, 3, 4, 5, 9]).unwrap();
        assert!(projective_equivalent(&a, &relabeled).unwrap().is_none());
    }

    #[test]
    fn algebraic_examples() {
        let f4 = Field::from_order(4).unwrap();
        let a = Matrix::from_rows(&f4, &[vec![1, 0, 1, 1], vec![0, 1, 1, 2]]).unwrap();
        let w = algebraically_equivalent(&a, &a).unwrap().unwrap();
        assert_eq!(w.frob_power, 0);
        let img = a.frobenius(1);
        assert!(projective_equivalent(&a, &img).unwrap().is_none());
        let w = algebraically_equivalent(&a, &img).unwrap().unwrap();
        assert_eq!(w.frob_power, 1);
        sound(&a, &img, &w);
    }

    #[test]
    fn geometric_examples() {
        let a = m(named::whirl(1));
        let b = m(named::whirl(2));
        let c = m(named::whirl(3));
        let w = geometrically_equivalent(&b, &c).unwrap().unwrap();
        sound(&b, &c, &w);
        assert!(geometrically_equivalent(&a, &b).unwrap().is_none());
        assert!(geometrically_equivalent(&a, &c).unwrap().is_none());
        let w = geometrically_equivalent(&a, &a).unwrap().unwrap();
        sound(&a, &a, &w);
    }

    #[test]
    fn rank_deficient_inputs() {
        let f = Field::from_order(5).unwrap();
        let a = Matrix::from_rows(&f, &[vec![1, 2, 0], vec![2, 4, 0], vec![0, 0, 0]]).unwrap();
        let b = Matrix::from_rows(&f, &[vec![0, 0, 0], vec![0, 0, 0], vec![3, 1, 0]]).unwrap();
        for rel in [Relation::Projective, Relation::Algebraic, Relation::Geometric] {
            let w = equivalent(&a, &b, rel).unwrap().unwrap();
            sound(&a, &b, &w);
        }
        let c = Matrix::from_rows(&f, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 0]]).unwrap();
        assert!(geometrically_equivalent(&a, &c).unwrap().is_none());
    }

    #[test]
    fn mismatches_are_errors() {
        let a = m(named::whirl(1));
        let f7 = m(named::f7_minus());
        assert!(matches!(geometrically_equivalent(&a, &f7), Err(Error::DimensionMismatch(_))));
        let f = Field::from_order(7).unwrap();
        let a7 = m(named::whirl_over(&f, 1).unwrap());
        assert_eq!(projective_equivalent(&a, &a7).unwrap_err(), Error::FieldMismatch);
    }

    #[test]
    fn partition_of_whirl_triple() {
        let items = vec![m(named::whirl(1)), m(named::whirl(2)), m(named::whirl(3))];
        let p = partition(&items, Relation::Geometric).unwrap();
        assert_eq!(p.classes, vec![vec![0], vec![1, 2]]);
        assert_eq!(p.witnesses.len(), 1);
        let mw = &p.witnesses[0];
        sound(&items[mw.member], &items[mw.representative], &mw.witness);
        let p = partition(&items, Relation::Projective).unwrap();
        assert_eq!(p.len(), 3);
    }

    #[test]
    fn witness_json_keys() {
        let w = TransformWitness::identity(2, 3);
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, r#"{"frobPower":0,"rowTransform":[[1,0],[0,1]],"colScale":[1,1,1],"colPerm":[0,1,2]}"#);
    }
}
