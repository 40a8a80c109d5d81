//! Matroids stored extensionally by their bases.
//!
//! A subset of the ground set is a bitmask over positions in [`Matroid::labels`];
//! bit `i` stands for the element `labels[i]`.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::dsu::DisjointSet;
use crate::error::{Error, Result};
use crate::matrix::{Label, Matrix};

pub type Mask = u32;

/// Largest supported ground set.
pub const MAX_GROUND: usize = 24;

// Independence is tabulated as a bitset over all subsets up to this size.
const TABLE_LIMIT: usize = 16;

/// Iterates all `k`-subsets of `0..n` as bitmasks in increasing numeric order.
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = Mask> {
    let limit: u64 = 1u64 << n;
    let mut cur: u64 = if k == 0 { 0 } else { (1u64 << k) - 1 };
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = cur as Mask;
        if k == 0 {
            done = true;
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            cur = (((r ^ cur) >> 2) / c) | r;
            if cur >= limit {
                done = true;
            }
        }
        Some(out)
    })
}

fn bits(mask: Mask) -> impl Iterator<Item = usize> {
    (0..32).filter(move |i| mask >> i & 1 == 1)
}

#[derive(Clone)]
pub struct Matroid {
    labels: Vec<Label>,
    rank: usize,
    bases: Vec<Mask>,
    indep: Option<Vec<u64>>,
    circuits: OnceLock<Vec<Mask>>,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.rank == other.rank && self.bases == other.bases
    }
}

impl Eq for Matroid {}

impl std::fmt::Debug for Matroid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Matroid")
            .field("labels", &self.labels)
            .field("rank", &self.rank)
            .field("bases", &self.bases.len())
            .finish()
    }
}

impl Matroid {
    /// Builds a matroid from basis bitmasks; duplicates are dropped.
    pub fn from_masks(labels: Vec<Label>, mut bases: Vec<Mask>) -> Result<Self> {
        let n = labels.len();
        if n > MAX_GROUND {
            return Err(Error::GroundTooLarge(n));
        }
        let mut sorted = labels.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateLabel(w[0]));
        }
        bases.sort_unstable();
        bases.dedup();
        let first = *bases.first().ok_or(Error::NoBases)?;
        let rank = first.count_ones() as usize;
        for &b in &bases {
            if b.count_ones() as usize != rank || (n < 32 && b >> n != 0) {
                return Err(Error::BasisSize(bits(b).filter(|&i| i < n).map(|i| labels[i]).collect()));
            }
        }
        let indep = (n <= TABLE_LIMIT).then(|| {
            let mut table = vec![0u64; (1usize << n).div_ceil(64)];
            for &b in &bases {
                // every subset of b
                let mut s = b;
                loop {
                    table[s as usize / 64] |= 1 << (s % 64);
                    if s == 0 {
                        break;
                    }
                    s = (s - 1) & b;
                }
            }
            table
        });
        Ok(Matroid { labels, rank, bases, indep, circuits: OnceLock::new() })
    }

    /// Builds a matroid from bases given as label lists.
    pub fn from_bases(labels: Vec<Label>, bases: &[Vec<Label>]) -> Result<Self> {
        let pos: BTreeMap<Label, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let mut masks = Vec::with_capacity(bases.len());
        for b in bases {
            let mut m: Mask = 0;
            for l in b {
                let i = *pos.get(l).ok_or(Error::UnknownLabel(*l))?;
                if m >> i & 1 == 1 {
                    return Err(Error::DuplicateLabel(*l));
                }
                m |= 1 << i;
            }
            masks.push(m);
        }
        let rank = masks.first().map(|m| m.count_ones());
        if let Some((b, _)) = bases.iter().zip(&masks).find(|(_, m)| Some(m.count_ones()) != rank) {
            return Err(Error::BasisSize(b.clone()));
        }
        Self::from_masks(labels, masks)
    }

    /// `U_{r,n}` on labels `1..=n`.
    pub fn uniform(r: usize, n: usize) -> Result<Self> {
        if r > n {
            return Err(Error::NoBases);
        }
        Self::from_masks(crate::matrix::default_labels(n), k_subsets(n, r).collect())
    }

    /// The column matroid: bases are the independent `rank`-subsets of columns.
    pub fn of_matrix(m: &Matrix) -> Self {
        let n = m.cols();
        assert!(n <= MAX_GROUND, "ground set of {n} exceeds {MAX_GROUND}");
        let r = m.rank();
        let bases: Vec<Mask> = k_subsets(n, r)
            .filter(|&s| {
                let idx: Vec<usize> = bits(s).collect();
                m.select_columns(&idx).rank() == r
            })
            .collect();
        Self::from_masks(m.labels().to_vec(), bases).expect("a matrix always has a basis")
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    /// Sorted basis bitmasks.
    pub fn bases(&self) -> &[Mask] {
        &self.bases
    }

    pub fn full_mask(&self) -> Mask {
        if self.n() == 32 {
            Mask::MAX
        } else {
            (1 << self.n()) - 1
        }
    }

    pub fn mask_of(&self, set: &[Label]) -> Result<Mask> {
        let mut m = 0;
        for l in set {
            let i = self.labels.iter().position(|x| x == l).ok_or(Error::UnknownLabel(*l))?;
            m |= 1 << i;
        }
        Ok(m)
    }

    pub fn labels_of(&self, mask: Mask) -> Vec<Label> {
        bits(mask).map(|i| self.labels[i]).collect()
    }

    pub fn is_basis(&self, mask: Mask) -> bool {
        self.bases.binary_search(&mask).is_ok()
    }

    pub fn is_independent(&self, mask: Mask) -> bool {
        match &self.indep {
            Some(t) => t[mask as usize / 64] >> (mask % 64) & 1 == 1,
            None => self.bases.iter().any(|&b| b & mask == mask),
        }
    }

    pub fn rank_of(&self, mask: Mask) -> usize {
        self.bases.iter().map(|&b| (b & mask).count_ones() as usize).max().unwrap_or(0)
    }

    /// Minimal dependent sets, ordered by size and then bitmask.
    pub fn circuits(&self) -> &[Mask] {
        self.circuits.get_or_init(|| {
            let mut out = Vec::new();
            for k in 1..=(self.rank + 1).min(self.n()) {
                for s in k_subsets(self.n(), k) {
                    if !self.is_independent(s) && bits(s).all(|i| self.is_independent(s & !(1 << i))) {
                        out.push(s);
                    }
                }
            }
            out
        })
    }

    /// The unique circuit inside `basis + k` that contains `k`.
    pub fn fundamental_circuit(&self, k: Label, basis: &[Label]) -> Result<Mask> {
        let b = self.mask_of(basis)?;
        if !self.is_basis(b) {
            return Err(Error::NotABasis(basis.to_vec()));
        }
        let km = self.mask_of(&[k])?;
        if b & km != 0 {
            return Err(Error::ElementInBasis(k));
        }
        let mut c = km;
        for i in bits(b) {
            if self.is_basis((b & !(1 << i)) | km) {
                c |= 1 << i;
            }
        }
        Ok(c)
    }

    pub fn is_simple(&self) -> bool {
        self.circuits().iter().all(|c| c.count_ones() > 2)
    }

    /// Every pair of elements lies on a common circuit.
    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n <= 1 {
            return true;
        }
        let mut dsu = DisjointSet::new(n);
        for &c in self.circuits() {
            let mut it = bits(c);
            let first = it.next().unwrap();
            for i in it {
                dsu.union(first, i);
            }
        }
        dsu.classes().len() == 1
    }

    /// `(simple, connected)`.
    pub fn flags(&self) -> (bool, bool) {
        (self.is_simple(), self.is_connected())
    }

    /// Bases of the dual are the complements of bases.
    pub fn dual(&self) -> Matroid {
        let full = self.full_mask();
        Self::from_masks(self.labels.clone(), self.bases.iter().map(|&b| full & !b).collect())
            .expect("complements of bases form a basis family")
    }

    /// Deletes one element.
    pub fn delete(&self, label: Label) -> Result<Matroid> {
        let i = self.labels.iter().position(|&l| l == label).ok_or(Error::UnknownLabel(label))?;
        let e = 1 << i;
        let avoiding: Vec<Mask> = self.bases.iter().copied().filter(|b| b & e == 0).collect();
        let kept = if avoiding.is_empty() {
            // coloop: it lies in every basis
            self.bases.iter().map(|b| b & !e).collect()
        } else {
            avoiding
        };
        let squeeze = |m: Mask| -> Mask { (m & (e - 1)) | ((m >> 1) & !(e - 1)) };
        let mut labels = self.labels.clone();
        labels.remove(i);
        Self::from_masks(labels, kept.into_iter().map(squeeze).collect())
    }

    /// The same matroid with its ground set listed in `order`.
    pub fn reindexed(&self, order: &[Label]) -> Result<Matroid> {
        if order.len() != self.n() {
            return Err(Error::GroundSetMismatch);
        }
        let mut map = Vec::with_capacity(self.n());
        for &l in &self.labels {
            map.push(order.iter().position(|&x| x == l).ok_or(Error::GroundSetMismatch)?);
        }
        let bases = self
            .bases
            .iter()
            .map(|&b| bits(b).fold(0, |acc, i| acc | 1 << map[i]))
            .collect();
        Self::from_masks(order.to_vec(), bases)
    }

    /// Labeled equality: same ground set and the same bases.
    pub fn equal_labeled(&self, other: &Matroid) -> Result<bool> {
        if self.labels == other.labels {
            return Ok(self.bases == other.bases);
        }
        let other = other.reindexed(&self.labels)?;
        Ok(self.bases == other.bases)
    }

    /// Number of bases containing each element.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n()];
        for &b in &self.bases {
            for i in bits(b) {
                d[i] += 1;
            }
        }
        d
    }

    fn pair_counts(&self) -> Vec<usize> {
        let n = self.n();
        let mut c = vec![0; n * n];
        for &b in &self.bases {
            let idx: Vec<usize> = bits(b).collect();
            for &i in &idx {
                for &j in &idx {
                    c[i * n + j] += 1;
                }
            }
        }
        c
    }

    /// Per-element invariant: basis degree and how many circuits of each size contain it.
    fn element_profiles(&self) -> Vec<Vec<usize>> {
        let deg = self.degrees();
        let mut prof: Vec<Vec<usize>> = deg.into_iter().map(|d| {
            let mut v = vec![0; self.rank + 3];
            v[0] = d;
            v
        }).collect();
        for &c in self.circuits() {
            let size = c.count_ones() as usize;
            for i in bits(c) {
                prof[i][size + 1] += 1;
            }
        }
        prof
    }

    /// An isomorphism invariant: equal for isomorphic matroids.
    pub fn fingerprint(&self) -> Vec<usize> {
        let mut out = vec![self.n(), self.rank, self.bases.len()];
        let mut spectrum = vec![0; self.rank + 2];
        for &c in self.circuits() {
            spectrum[c.count_ones() as usize] += 1;
        }
        out.extend(spectrum);
        let mut prof = self.element_profiles();
        prof.sort();
        out.extend(prof.into_iter().flatten());
        out
    }

    /// A position map `perm` with `perm[i] = j` sending element `i` of `self` to
    /// element `j` of `other` and bases onto bases, if one exists.
    pub fn isomorphism(&self, other: &Matroid) -> Option<Vec<usize>> {
        let n = self.n();
        if n != other.n() || self.rank != other.rank || self.bases.len() != other.bases.len() {
            return None;
        }
        let p1 = self.element_profiles();
        let p2 = other.element_profiles();
        let (mut s1, mut s2) = (p1.clone(), p2.clone());
        s1.sort();
        s2.sort();
        if s1 != s2 {
            return None;
        }
        if self.rank == 0 || self.rank == n {
            // every permutation works
            return Some((0..n).collect());
        }
        let c1 = self.pair_counts();
        let c2 = other.pair_counts();

        // most constrained elements first: rare profiles, then index
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (s1.iter().filter(|p| **p == p1[i]).count(), i));

        struct Search<'a> {
            a: &'a Matroid,
            b: &'a Matroid,
            p1: &'a [Vec<usize>],
            p2: &'a [Vec<usize>],
            c1: &'a [usize],
            c2: &'a [usize],
            order: &'a [usize],
            map: Vec<usize>,
            used: Vec<bool>,
        }

        impl Search<'_> {
            fn consistent(&self, depth: usize, x: usize, y: usize) -> bool {
                let n = self.a.n();
                let r = self.a.rank;
                for &u in &self.order[..depth] {
                    let v = self.map[u];
                    if self.c1[x * n + u] != self.c2[y * n + v] {
                        return false;
                    }
                }
                if r == 0 || depth + 1 < r {
                    return true;
                }
                // r-subsets of the assigned prefix that contain x
                let prefix = &self.order[..depth];
                for pick in k_subsets(depth, r - 1) {
                    let mut ma: Mask = 1 << x;
                    let mut mb: Mask = 1 << y;
                    for t in bits(pick) {
                        ma |= 1 << prefix[t];
                        mb |= 1 << self.map[prefix[t]];
                    }
                    if self.a.is_basis(ma) != self.b.is_basis(mb) {
                        return false;
                    }
                }
                true
            }

            fn go(&mut self, depth: usize) -> bool {
                if depth == self.order.len() {
                    return true;
                }
                let x = self.order[depth];
                for y in 0..self.b.n() {
                    if self.used[y] || self.p1[x] != self.p2[y] || !self.consistent(depth, x, y) {
                        continue;
                    }
                    self.map[x] = y;
                    self.used[y] = true;
                    if self.go(depth + 1) {
                        return true;
                    }
                    self.used[y] = false;
                }
                false
            }
        }

        let mut s = Search {
            a: self,
            b: other,
            p1: &p1,
            p2: &p2,
            c1: &c1,
            c2: &c2,
            order: &order,
            map: vec![usize::MAX; n],
            used: vec![false; n],
        };
        s.go(0).then_some(s.map)
    }

    pub fn is_isomorphic(&self, other: &Matroid) -> bool {
        self.isomorphism(other).is_some()
    }

    /// Rank-2 flats with at least three elements, as label lists.
    pub fn lines(&self) -> Vec<Vec<Label>> {
        let mut flats: Vec<Mask> = Vec::new();
        for pair in k_subsets(self.n(), 2) {
            if self.rank_of(pair) != 2 {
                continue;
            }
            let closure = (0..self.n())
                .filter(|&i| self.rank_of(pair | 1 << i) == 2)
                .fold(pair, |acc, i| acc | 1 << i);
            if closure.count_ones() >= 3 && !flats.contains(&closure) {
                flats.push(closure);
            }
        }
        flats.sort_unstable();
        flats.into_iter().map(|f| self.labels_of(f)).collect()
    }

    /// Checks the basis-exchange axiom exhaustively.
    pub fn satisfies_basis_exchange(&self) -> bool {
        for &a in &self.bases {
            for &b in &self.bases {
                for x in bits(a & !b) {
                    let ok = bits(b & !a).any(|y| self.is_basis((a & !(1 << x)) | 1 << y));
                    if !ok {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn u(r: usize, n: usize) -> Matroid {
        Matroid::uniform(r, n).unwrap()
    }

    #[test]
    fn subsets_enumerate_binomially() {
        assert_eq!(k_subsets(6, 3).count(), 20);
        assert_eq!(k_subsets(4, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(k_subsets(3, 4).count(), 0);
        assert_eq!(k_subsets(3, 3).collect::<Vec<_>>(), vec![7]);
        let v: Vec<Mask> = k_subsets(5, 2).collect();
        assert!(v.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn whirl_lines() {
        let m = Matroid::of_matrix(named::whirl(1).matrix());
        assert_eq!((m.n(), m.rank()), (6, 3));
        assert_eq!(m.lines(), vec![vec![1, 2, 4], vec![2, 3, 5], vec![1, 3, 6]]);
        // 20 triples minus the three lines
        assert_eq!(m.bases().len(), 17);
    }

    #[test]
    fn uniform_from_matrix() {
        let f2 = crate::field::Field::from_order(2).unwrap();
        let m = crate::matrix::StandardForm::from_d(&f2, &[vec![1], vec![1]]).unwrap();
        assert_eq!(Matroid::of_matrix(m.matrix()), u(2, 3));
        assert_eq!(u(2, 3).circuits(), &[0b111]);
    }

    #[test]
    fn whirl_matrices_share_matroid() {
        let a = Matroid::of_matrix(named::whirl(1).matrix());
        let b = Matroid::of_matrix(named::whirl(2).matrix());
        assert!(a.equal_labeled(&b).unwrap());
        assert!(a.equal_labeled(&a).unwrap());
        let f7 = Matroid::of_matrix(named::f7_minus().matrix());
        let x7 = Matroid::of_matrix(named::x7().matrix());
        assert!(!f7.equal_labeled(&x7).unwrap());
    }

    #[test]
    fn fundamental_circuits_of_q6() {
        let q6 = Matroid::of_matrix(named::q6_family(3, 1).matrix());
        let b = [1, 2, 3];
        let fc = |k| q6.labels_of(q6.fundamental_circuit(k, &b).unwrap());
        assert_eq!(fc(4), vec![1, 2, 4]);
        assert_eq!(fc(5), vec![2, 3, 5]);
        assert_eq!(fc(6), vec![1, 2, 3, 6]);
        assert_eq!(q6.fundamental_circuit(1, &b).unwrap_err(), Error::ElementInBasis(1));
        assert_eq!(q6.fundamental_circuit(6, &[1, 2, 4]).unwrap_err(), Error::NotABasis(vec![1, 2, 4]));
    }

    #[test]
    fn whirl_circuit_membership() {
        let a = Matroid::of_matrix(named::whirl(1).matrix());
        assert!(a.circuits().contains(&a.mask_of(&[1, 2, 4]).unwrap()));
        assert!(!a.circuits().contains(&a.mask_of(&[1, 2, 3]).unwrap()));
    }

    #[test]
    fn flag_examples() {
        let a = Matroid::of_matrix(named::whirl(1).matrix());
        assert_eq!(a.flags(), (true, true));
        let free = Matroid::from_bases(vec![1, 2], &[vec![1, 2]]).unwrap();
        assert!(!free.is_connected());
        let f5 = crate::field::Field::from_order(5).unwrap();
        let par = crate::matrix::StandardForm::from_d(&f5, &[vec![1], vec![0]]).unwrap();
        assert!(!Matroid::of_matrix(par.matrix()).is_simple());
    }

    #[test]
    fn isomorphism_examples() {
        let x_b = Matroid::of_matrix(named::x7().matrix());
        let c_ext = named::whirl(3).matrix().append_column(&[1, 1, 1], 7).unwrap();
        let x_c = Matroid::of_matrix(&c_ext);
        let perm = x_b.isomorphism(&x_c).expect("both are X7");
        for &b in x_b.bases() {
            let img = bits(b).fold(0, |acc, i| acc | 1 << perm[i]);
            assert!(x_c.is_basis(img));
        }
        let f7 = Matroid::of_matrix(named::f7_minus().matrix());
        assert!(f7.isomorphism(&x_b).is_none());
        let u24 = u(2, 4);
        let relabeled = u24.reindexed(&[3, 1, 4, 2]).unwrap();
        assert!(u24.isomorphism(&relabeled).is_some());
    }

    #[test]
    fn duality() {
        let u24 = u(2, 4);
        assert_eq!(u24.dual().bases().len(), 6);
        let a = Matroid::of_matrix(named::whirl(1).matrix());
        assert_eq!(a.dual().dual(), a);
        assert_eq!(a.dual().rank(), 3);
        let via_matrix = Matroid::of_matrix(named::whirl(1).dual().matrix());
        assert!(a.dual().equal_labeled(&via_matrix).unwrap());
    }

    #[test]
    fn deletion() {
        let f7 = Matroid::of_matrix(named::f7_minus().matrix());
        let a = Matroid::of_matrix(named::whirl(1).matrix());
        assert_eq!(f7.delete(7).unwrap(), a);
        let free = Matroid::from_bases(vec![1, 2], &[vec![1, 2]]).unwrap();
        assert_eq!(free.delete(1).unwrap().bases(), &[1]);
    }

    #[test]
    fn bad_bases_rejected() {
        assert_eq!(Matroid::from_bases(vec![1, 2, 3], &[vec![1, 2], vec![3]]).unwrap_err(), Error::BasisSize(vec![3]));
        assert_eq!(Matroid::from_bases(vec![1, 2], &[vec![1, 5]]).unwrap_err(), Error::UnknownLabel(5));
        assert_eq!(Matroid::from_masks(vec![1, 2], vec![]).unwrap_err(), Error::NoBases);
        let m = u(2, 3);
        assert_eq!(m.equal_labeled(&u(2, 4)).unwrap_err(), Error::GroundSetMismatch);
    }

    #[test]
    fn basis_exchange_on_constructed() {
        for m in [u(2, 4), u(3, 6), Matroid::of_matrix(named::f7_minus().matrix())] {
            assert!(m.satisfies_basis_exchange());
        }
        // {12, 34} violates exchange
        let bad = Matroid::from_bases(vec![1, 2, 3, 4], &[vec![1, 2], vec![3, 4]]).unwrap();
        assert!(!bad.satisfies_basis_exchange());
    }
}
