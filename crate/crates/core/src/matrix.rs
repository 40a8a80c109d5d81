//! Labeled matrices over GF(q).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Elem, Field};

/// Ground-set element identifier carried by a column.
pub type Label = u32;

/// An `rows x cols` matrix over a finite field with one label per column.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
    labels: Vec<Label>,
}

pub fn default_labels(n: usize) -> Vec<Label> {
    (1..=n as Label).collect()
}

fn check_labels(labels: &[Label]) -> Result<()> {
    let mut sorted = labels.to_vec();
    sorted.sort_unstable();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(Error::DuplicateLabel(w[0]));
        }
    }
    Ok(())
}

/// Scales a vector so its first nonzero entry is 1. Zero vectors are left alone.
pub fn normalize_vector(field: &Field, v: &mut [Elem]) {
    if let Some(&lead) = v.iter().find(|&&x| x != 0) {
        let s = field.inv_nz(lead);
        for x in v.iter_mut() {
            *x = field.mul(*x, s);
        }
    }
}

/// Base-q integer key of a vector, first coordinate most significant.
pub fn vector_key(field: &Field, v: &[Elem]) -> u64 {
    let q = field.q() as u64;
    v.iter().fold(0u64, |acc, &x| acc * q + x as u64)
}

impl Matrix {
    /// Builds a matrix from row-major entries. `labels` defaults to `1..=cols`.
    pub fn new(field: Field, rows: usize, cols: usize, data: Vec<Elem>, labels: Option<Vec<Label>>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(&bad) = data.iter().find(|&&x| !field.contains(x as u32)) {
            return Err(Error::InvalidElement { value: bad as u32, q: field.q() });
        }
        let labels = labels.unwrap_or_else(|| default_labels(cols));
        if labels.len() != cols {
            return Err(Error::DimensionMismatch(format!("{} labels for {cols} columns", labels.len())));
        }
        check_labels(&labels)?;
        Ok(Matrix { field, rows, cols, data, labels })
    }

    pub fn from_rows(field: &Field, rows: &[Vec<Elem>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Self::new(field.clone(), rows.len(), cols, rows.concat(), None)
    }

    pub fn from_columns(field: &Field, rows: usize, columns: &[Vec<Elem>]) -> Result<Self> {
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::DimensionMismatch("column of wrong height".into()));
        }
        let cols = columns.len();
        let mut data = vec![0; rows * cols];
        for (j, c) in columns.iter().enumerate() {
            for (i, &x) in c.iter().enumerate() {
                data[i * cols + j] = x;
            }
        }
        Self::new(field.clone(), rows, cols, data, None)
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        Matrix { field: field.clone(), rows: n, cols: n, data, labels: default_labels(n) }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn data(&self) -> &[Elem] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize, x: Elem) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Elem> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Elem>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn position_of(&self, label: Label) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn with_labels(mut self, labels: Vec<Label>) -> Result<Self> {
        if labels.len() != self.cols {
            return Err(Error::DimensionMismatch(format!("{} labels for {} columns", labels.len(), self.cols)));
        }
        check_labels(&labels)?;
        self.labels = labels;
        Ok(self)
    }

    /// Same entries, ignoring labels.
    pub fn entries_eq(&self, other: &Matrix) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.field == other.field && self.data == other.data
    }

    /// Columns at `idx` (in that order), labels carried along.
    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(self.rows * idx.len());
        for i in 0..self.rows {
            for &j in idx {
                data.push(self.get(i, j));
            }
        }
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: idx.len(),
            data,
            labels: idx.iter().map(|&j| self.labels[j]).collect(),
        }
    }

    /// Appends a column with the given label.
    pub fn append_column(&self, col: &[Elem], label: Label) -> Result<Matrix> {
        if col.len() != self.rows {
            return Err(Error::DimensionMismatch("appended column has wrong height".into()));
        }
        if self.labels.contains(&label) {
            return Err(Error::DuplicateLabel(label));
        }
        let cols = self.cols + 1;
        let mut data = Vec::with_capacity(self.rows * cols);
        for (i, &x) in col.iter().enumerate() {
            data.extend_from_slice(self.row(i));
            data.push(x);
        }
        let mut labels = self.labels.clone();
        labels.push(label);
        Ok(Matrix { field: self.field.clone(), rows: self.rows, cols, data, labels })
    }

    /// `self * other`; the result takes `other`'s labels.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let f = &self.field;
        let mut data = vec![0; self.rows * other.cols];
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.get(i, t);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let cell = &mut data[i * other.cols + j];
                    *cell = f.add(*cell, f.mul(a, other.get(t, j)));
                }
            }
        }
        Ok(Matrix { field: f.clone(), rows: self.rows, cols: other.cols, data, labels: other.labels.clone() })
    }

    /// Row-reduces in place, applying every row operation to `track` as well.
    /// Pivot rule: leftmost column, topmost nonzero row. Returns pivot columns.
    fn reduce_tracking(&mut self, mut track: Option<&mut Matrix>) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&i| self.get(i, col) != 0) else {
                continue;
            };
            self.swap_rows(pr, row);
            if let Some(t) = track.as_deref_mut() {
                t.swap_rows(pr, row);
            }
            let s = f.inv_nz(self.get(row, col));
            self.scale_row(row, s);
            if let Some(t) = track.as_deref_mut() {
                t.scale_row(row, s);
            }
            for i in 0..self.rows {
                if i != row {
                    let c = self.get(i, col);
                    if c != 0 {
                        let c = f.neg(c);
                        self.add_row_multiple(i, row, c);
                        if let Some(t) = track.as_deref_mut() {
                            t.add_row_multiple(i, row, c);
                        }
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn scale_row(&mut self, i: usize, s: Elem) {
        for j in 0..self.cols {
            let x = self.field.mul(self.get(i, j), s);
            self.set(i, j, x);
        }
    }

    /// row[target] += c * row[source]
    fn add_row_multiple(&mut self, target: usize, source: usize, c: Elem) {
        for j in 0..self.cols {
            let x = self.field.add(self.get(target, j), self.field.mul(c, self.get(source, j)));
            self.set(target, j, x);
        }
    }

    /// Reduced row-echelon form and rank.
    pub fn rref(&self) -> (Matrix, usize) {
        let mut m = self.clone();
        let pivots = m.reduce_tracking(None);
        (m, pivots.len())
    }

    /// Like [`Matrix::rref`] but also returns the invertible `E` with `E * self = R`
    /// and the pivot columns.
    pub fn rref_with_transform(&self) -> (Matrix, Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut e = Matrix::identity(&self.field, self.rows);
        let pivots = m.reduce_tracking(Some(&mut e));
        (m, e, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let (_, e, pivots) = self.rref_with_transform();
        if pivots.len() != self.rows {
            return Err(Error::SingularTransform);
        }
        Ok(e)
    }

    /// Entrywise `x -> x^(p^j)`.
    pub fn frobenius(&self, j: u32) -> Matrix {
        let mut m = self.clone();
        for x in m.data.iter_mut() {
            *x = self.field.frobenius(*x, j);
        }
        m
    }

    /// Scales every column so its first nonzero entry is 1.
    pub fn normalize_columns(&self) -> Result<Matrix> {
        let mut cols = self.columns();
        for (j, c) in cols.iter_mut().enumerate() {
            if c.iter().all(|&x| x == 0) {
                return Err(Error::ZeroColumn(j));
            }
            normalize_vector(&self.field, c);
        }
        Matrix::from_columns(&self.field, self.rows, &cols)?.with_labels(self.labels.clone())
    }

    /// Reorders columns so `basis` comes first (in the given order) and row-reduces
    /// until those columns form the identity.
    pub fn to_standard_form(&self, basis: &[Label]) -> Result<StandardForm> {
        if basis.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "basis of {} labels for {} rows",
                basis.len(),
                self.rows
            )));
        }
        let mut order = Vec::with_capacity(self.cols);
        for &l in basis {
            let j = self.position_of(l).ok_or(Error::UnknownLabel(l))?;
            if order.contains(&j) {
                return Err(Error::DuplicateLabel(l));
            }
            order.push(j);
        }
        let rest: Vec<usize> = (0..self.cols).filter(|j| !order.contains(j)).collect();
        order.extend(rest);
        let reordered = self.select_columns(&order);
        let square = reordered.select_columns(&(0..self.rows).collect::<Vec<_>>());
        let inv = square.inverse().map_err(|_| Error::DependentBasis(basis.to_vec()))?;
        let mut out = inv.mul(&reordered)?;
        out.labels = reordered.labels;
        Ok(StandardForm(out))
    }

    /// Applies a witness: automorphism, then row transform, then column
    /// scaling, then column permutation (labels travel with their columns).
    pub fn apply_witness(&self, w: &TransformWitness) -> Result<Matrix> {
        w.validate(&self.field, self.rows, self.cols)?;
        let t = Matrix::from_rows(&self.field, &w.row_transform)?;
        let mut m = t.mul(&self.frobenius(w.frob_power))?;
        m.labels = self.labels.clone();
        let mut out = m.clone();
        for j in 0..self.cols {
            let dst = w.col_perm[j];
            for i in 0..self.rows {
                out.set(i, dst, self.field.mul(m.get(i, j), w.col_scale[j]));
            }
            out.labels[dst] = m.labels[j];
        }
        Ok(out)
    }
}

/// A matrix whose first `rows` columns are the identity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StandardForm(Matrix);

impl StandardForm {
    pub fn new(m: Matrix) -> Result<Self> {
        if m.cols < m.rows {
            return Err(Error::NotStandard);
        }
        for i in 0..m.rows {
            for j in 0..m.rows {
                if m.get(i, j) != (i == j) as Elem {
                    return Err(Error::NotStandard);
                }
            }
        }
        Ok(StandardForm(m))
    }

    /// `[I_r | D]` from the `r x (n - r)` block `D`, labels `1..=n`.
    pub fn from_d(field: &Field, d_rows: &[Vec<Elem>]) -> Result<Self> {
        let r = d_rows.len();
        let rows: Vec<Vec<Elem>> = d_rows
            .iter()
            .enumerate()
            .map(|(i, d)| {
                let mut row = vec![0; r];
                row[i] = 1;
                row.extend_from_slice(d);
                row
            })
            .collect();
        Self::new(Matrix::from_rows(field, &rows)?)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }

    pub fn rank(&self) -> usize {
        self.0.rows
    }

    pub fn basis_labels(&self) -> &[Label] {
        &self.0.labels[..self.0.rows]
    }

    /// The `r x (n - r)` block to the right of the identity.
    pub fn d_part(&self) -> Vec<Vec<Elem>> {
        (0..self.0.rows).map(|i| self.0.row(i)[self.0.rows..].to_vec()).collect()
    }

    /// `[I_r | D]` with labels `(b, e)` becomes `[I_{n-r} | -D^T]` with labels `(e, b)`.
    pub fn dual(&self) -> StandardForm {
        let m = &self.0;
        let (r, n) = (m.rows, m.cols);
        let s = n - r;
        let f = &m.field;
        let mut data = vec![0; s * n];
        for i in 0..s {
            data[i * n + i] = 1;
            for j in 0..r {
                data[i * n + s + j] = f.neg(m.get(j, r + i));
            }
        }
        let mut labels = m.labels[r..].to_vec();
        labels.extend_from_slice(&m.labels[..r]);
        StandardForm(Matrix { field: f.clone(), rows: s, cols: n, data, labels })
    }
}

/// Row transform, column scalings, a column permutation and a Frobenius power
/// certifying that one matrix maps onto another.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TransformWitness {
    #[serde(rename = "frobPower")]
    pub frob_power: u32,
    #[serde(rename = "rowTransform")]
    pub row_transform: Vec<Vec<Elem>>,
    #[serde(rename = "colScale")]
    pub col_scale: Vec<Elem>,
    /// `col_perm[j]` is the output position of input column `j`.
    #[serde(rename = "colPerm")]
    pub col_perm: Vec<usize>,
}

impl TransformWitness {
    pub fn identity(rows: usize, cols: usize) -> Self {
        let mut t = vec![vec![0; rows]; rows];
        for (i, row) in t.iter_mut().enumerate() {
            row[i] = 1;
        }
        TransformWitness { frob_power: 0, row_transform: t, col_scale: vec![1; cols], col_perm: (0..cols).collect() }
    }

    pub fn is_identity_perm(&self) -> bool {
        self.col_perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn validate(&self, field: &Field, rows: usize, cols: usize) -> Result<()> {
        if self.row_transform.len() != rows || self.row_transform.iter().any(|r| r.len() != rows) {
            return Err(Error::DimensionMismatch(format!("row transform is not {rows}x{rows}")));
        }
        if self.col_scale.len() != cols || self.col_perm.len() != cols {
            return Err(Error::DimensionMismatch(format!("witness does not cover {cols} columns")));
        }
        if self.col_scale.iter().any(|&s| s == 0 || !field.contains(s as u32)) {
            return Err(Error::InvalidWitness("column scalings must be nonzero field elements".into()));
        }
        let mut seen = vec![false; cols];
        for &p in &self.col_perm {
            if p >= cols || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidWitness("column map is not a permutation".into()));
            }
        }
        let t = Matrix::from_rows(field, &self.row_transform)?;
        if t.rank() != rows {
            return Err(Error::SingularTransform);
        }
        Ok(())
    }
}

/// Accumulates a sequence of elementary operations into a [`TransformWitness`].
/// Indices are 0-based; column operations refer to current positions.
#[derive(Clone, Debug)]
pub struct OperationSequence {
    field: Field,
    t: Matrix,
    scale: Vec<Elem>,
    perm: Vec<usize>,
}

impl OperationSequence {
    pub fn new(field: &Field, rows: usize, cols: usize) -> Self {
        OperationSequence {
            field: field.clone(),
            t: Matrix::identity(field, rows),
            scale: vec![1; cols],
            perm: (0..cols).collect(),
        }
    }

    pub fn swap_rows(mut self, a: usize, b: usize) -> Self {
        self.t.swap_rows(a, b);
        self
    }

    pub fn scale_row(mut self, i: usize, c: Elem) -> Self {
        self.t.scale_row(i, c);
        self
    }

    /// row[target] += c * row[source]
    pub fn add_row(mut self, target: usize, source: usize, c: Elem) -> Self {
        self.t.add_row_multiple(target, source, c);
        self
    }

    pub fn scale_col(mut self, pos: usize, c: Elem) -> Self {
        let src = self.perm.iter().position(|&p| p == pos).expect("column position in range");
        self.scale[src] = self.field.mul(self.scale[src], c);
        self
    }

    pub fn swap_cols(mut self, a: usize, b: usize) -> Self {
        for p in self.perm.iter_mut() {
            if *p == a {
                *p = b;
            } else if *p == b {
                *p = a;
            }
        }
        self
    }

    pub fn build(self) -> TransformWitness {
        TransformWitness { frob_power: 0, row_transform: self.t.row_vecs(), col_scale: self.scale, col_perm: self.perm }
    }
}
