//! Generators and property checks shared by the proptest suite and the
//! acceptance runner. Checks return `Err(description)` instead of panicking
//! so both harnesses can report them.

#![allow(dead_code)]

use std::collections::BTreeMap;

use matroid_forge::coordinatize::{build_problem, enumerate_representations, Position};
use matroid_forge::equivalence::{equivalent, geometrically_equivalent, Relation};
use matroid_forge::extension::{extend_all, ExtensionReport};
use matroid_forge::matrix::{normalize_vector, TransformWitness};
use matroid_forge::{Elem, Field, Label, Matrix, Matroid, StandardForm};
use proptest::prelude::*;

pub type Check = Result<(), String>;

pub const ORDERS: [u32; 5] = [2, 3, 4, 5, 7];

pub fn gf(q: u32) -> Field {
    Field::from_order(q).expect("field order")
}

/// A random matrix with `r <= 3` rows and `r <= n <= 7` columns.
pub fn matrix_strategy(orders: &'static [u32], max_rank: usize, max_n: usize) -> impl Strategy<Value = Matrix> {
    (prop::sample::select(orders), 1..=max_rank)
        .prop_flat_map(move |(q, r)| (Just(q), Just(r), r..=max_n))
        .prop_flat_map(|(q, r, n)| (Just(q), Just(r), Just(n), prop::collection::vec(0..q, r * n)))
        .prop_map(|(q, r, n, entries)| {
            let data = entries.into_iter().map(|e| e as Elem).collect();
            Matrix::new(gf(q), r, n, data, None).expect("entries in range")
        })
}

/// A random `[I_r | D]` whose matroid is simple and connected.
pub fn simple_connected_strategy(orders: &'static [u32], min_rank: usize, max_n: usize) -> impl Strategy<Value = StandardForm> {
    (prop::sample::select(orders), min_rank..=3usize)
        .prop_flat_map(move |(q, r)| (Just(q), Just(r), (r + 2).min(max_n)..=max_n))
        .prop_flat_map(|(q, r, n)| (Just(q), Just(r), prop::collection::vec(1..q, r * (n - r))))
        .prop_map(|(q, r, d)| {
            let k = d.len() / r;
            let rows: Vec<Vec<Elem>> = (0..r).map(|i| d[i * k..(i + 1) * k].iter().map(|&e| e as Elem).collect()).collect();
            StandardForm::from_d(&gf(q), &rows).expect("valid entries")
        })
        .prop_filter("simple and connected", |sf| {
            let m = Matroid::of_matrix(sf.matrix());
            m.is_simple() && m.is_connected()
        })
}

/// Raw material for a random witness; finished against a concrete matrix.
#[derive(Clone, Debug)]
pub struct WitnessSeed {
    pub frob: u32,
    pub row_entries: Vec<u32>,
    pub scales: Vec<u32>,
    pub perm_keys: Vec<u32>,
}

pub fn witness_seed() -> impl Strategy<Value = WitnessSeed> {
    (0..4u32, prop::collection::vec(any::<u32>(), 9 * 8), prop::collection::vec(any::<u32>(), 7), prop::collection::vec(any::<u32>(), 7))
        .prop_map(|(frob, row_entries, scales, perm_keys)| WitnessSeed { frob, row_entries, scales, perm_keys })
}

fn det_nonzero(f: &Field, rows: &[Vec<Elem>]) -> bool {
    Matrix::from_rows(f, rows).map(|m| m.rank() == rows.len()).unwrap_or(false)
}

/// Builds a valid witness for an `r x n` matrix over `f`. `permute` and
/// `automorphism` control which parts may differ from the identity.
pub fn finish_witness(seed: &WitnessSeed, f: &Field, r: usize, n: usize, permute: bool, automorphism: bool) -> TransformWitness {
    let q = f.q();
    let mut row_transform = Vec::new();
    for attempt in 0..8 {
        let chunk = &seed.row_entries[attempt * 9..attempt * 9 + r * r];
        let rows: Vec<Vec<Elem>> = (0..r).map(|i| (0..r).map(|j| (chunk[i * r + j] % q) as Elem).collect()).collect();
        if det_nonzero(f, &rows) {
            row_transform = rows;
            break;
        }
    }
    if row_transform.is_empty() {
        row_transform = Matrix::identity(f, r).row_vecs();
    }
    let col_scale = (0..n).map(|j| (1 + seed.scales[j] % (q - 1)) as Elem).collect();
    let mut col_perm: Vec<usize> = (0..n).collect();
    if permute {
        col_perm.sort_by_key(|&j| (seed.perm_keys[j], j));
    }
    let frob_power = if automorphism { seed.frob % f.k() } else { 0 };
    TransformWitness { frob_power, row_transform, col_scale, col_perm }
}

/// Image of `a` under a witness, relabeled 1..n so labels carry no information.
pub fn unlabeled_image(a: &Matrix, w: &TransformWitness) -> Matrix {
    let b = a.apply_witness(w).expect("valid witness");
    let n = b.cols();
    b.with_labels((1..=n as Label).collect()).expect("distinct labels")
}

pub fn sound(a: &Matrix, b: &Matrix, rel: Relation, w: &TransformWitness) -> Check {
    let image = a.apply_witness(w).map_err(|e| format!("witness rejected: {e}"))?;
    if !image.entries_eq(b) {
        return Err(format!("{} witness does not reproduce target: {w:?}", rel.name()));
    }
    if rel != Relation::Geometric && image.labels() != b.labels() {
        return Err(format!("{} witness misplaces labels", rel.name()));
    }
    Ok(())
}

fn decide(a: &Matrix, b: &Matrix, rel: Relation) -> Result<Option<TransformWitness>, String> {
    let w = equivalent(a, b, rel).map_err(|e| e.to_string())?;
    if let Some(w) = &w {
        sound(a, b, rel, w)?;
    }
    Ok(w)
}

pub const RELATIONS: [Relation; 3] = [Relation::Projective, Relation::Algebraic, Relation::Geometric];

/// Reflexivity, symmetry and transitivity on a chain `a -> b -> c` plus an unrelated `d`.
pub fn relation_axioms(a: &Matrix, s1: &WitnessSeed, s2: &WitnessSeed, d: &Matrix) -> Check {
    let f = a.field();
    let (r, n) = (a.rows(), a.cols());
    for rel in RELATIONS {
        let geo = rel == Relation::Geometric;
        let auto = rel == Relation::Algebraic;
        let image = |m: &Matrix, s: &WitnessSeed| {
            let w = finish_witness(s, f, r, n, geo, auto);
            if geo {
                unlabeled_image(m, &w)
            } else {
                m.apply_witness(&w).expect("valid witness")
            }
        };
        let b = image(a, s1);
        let c = image(&b, s2);
        if decide(a, a, rel)?.is_none() {
            return Err(format!("{} not reflexive", rel.name()));
        }
        for (x, y, what) in [(a, &b, "a~b"), (&b, &c, "b~c"), (a, &c, "a~c")] {
            if decide(x, y, rel)?.is_none() {
                return Err(format!("{}: {what} fails on a constructed pair", rel.name()));
            }
            if decide(y, x, rel)?.is_none() {
                return Err(format!("{}: {what} not symmetric", rel.name()));
            }
        }
        if d.rows() == r && d.cols() == n && d.field() == f {
            let ab = decide(a, d, rel)?.is_some();
            let ba = decide(d, a, rel)?.is_some();
            if ab != ba {
                return Err(format!("{} asymmetric on an unrelated pair", rel.name()));
            }
            let bd = decide(&b, d, rel)?.is_some();
            if ab != bd {
                return Err(format!("{} not transitive through a~b", rel.name()));
            }
        }
    }
    Ok(())
}

/// Projective implies algebraic implies geometric whenever the finer test succeeds.
pub fn implications(a: &Matrix, b: &Matrix) -> Check {
    let p = decide(a, b, Relation::Projective)?.is_some();
    let al = decide(a, b, Relation::Algebraic)?.is_some();
    let g = decide(a, b, Relation::Geometric)?.is_some();
    if p && !al {
        return Err("projective but not algebraic".into());
    }
    if al && !g {
        return Err("algebraic but not geometric".into());
    }
    Ok(())
}

/// Sorted class sizes plus an isomorphism matching between class matroids.
pub fn same_extension_classes(x: &ExtensionReport, y: &ExtensionReport) -> bool {
    let mx = x.class_matroids();
    let my = y.class_matroids();
    if mx.len() != my.len() {
        return false;
    }
    let mut used = vec![false; my.len()];
    for (i, a) in mx.iter().enumerate() {
        let size = x.classes[i].members.len();
        let hit = my
            .iter()
            .enumerate()
            .position(|(j, b)| !used[j] && y.classes[j].members.len() == size && a.is_isomorphic(b));
        match hit {
            Some(j) => used[j] = true,
            None => return false,
        }
    }
    true
}

/// Geometrically equivalent representations have the same extension classes.
pub fn extension_invariance(a: &StandardForm, seed: &WitnessSeed) -> Check {
    let m = a.matrix();
    let w = finish_witness(seed, m.field(), m.rows(), m.cols(), true, false);
    let image = unlabeled_image(m, &w);
    let b = match StandardForm::new(image.clone()) {
        Ok(sf) => sf,
        Err(_) => image.to_standard_form(&matroid_forge::coordinatize::least_basis(&Matroid::of_matrix(&image))).map_err(|e| e.to_string())?,
    };
    if geometrically_equivalent(m, b.matrix()).map_err(|e| e.to_string())?.is_none() {
        return Err("constructed pair not geometrically equivalent".into());
    }
    let ea = extend_all(a).map_err(|e| e.to_string())?;
    let eb = extend_all(&b).map_err(|e| e.to_string())?;
    if !same_extension_classes(&ea, &eb) {
        return Err(format!("extension classes differ: {} vs {}", ea.class_count(), eb.class_count()));
    }
    for e in ea.extensions.iter() {
        if !e.matroid.is_simple() {
            return Err("non-simple extension".into());
        }
        if *e.matroid.delete(ea.new_label).map_err(|e| e.to_string())?.bases() != *Matroid::of_matrix(m).bases() {
            return Err("deleting the new element does not recover the base".into());
        }
        if !e.matroid.is_connected() {
            return Err("extension of a connected matroid is disconnected".into());
        }
    }
    Ok(())
}

pub fn dual_involution(a: &StandardForm) -> Check {
    let dd = a.dual().dual();
    if dd != *a {
        return Err(format!("dual of dual differs: {:?}", dd.matrix().row_vecs()));
    }
    let m = Matroid::of_matrix(a.matrix());
    let md = Matroid::of_matrix(a.dual().matrix()).reindexed(m.labels()).map_err(|e| e.to_string())?;
    if md != m.dual() {
        return Err("matrix dual does not represent the dual matroid".into());
    }
    Ok(())
}

/// Normalized columns as a multiset; zero columns kept as zero.
fn point_multiset(f: &Field, cols: &[Vec<Elem>]) -> BTreeMap<Vec<Elem>, usize> {
    let mut out = BTreeMap::new();
    for c in cols {
        let mut v = c.clone();
        normalize_vector(f, &mut v);
        *out.entry(v).or_insert(0) += 1;
    }
    out
}

/// Searches all of GL(2, q) for a map taking the columns of `a` onto those of `b`.
pub fn rank2_full_group(a: &Matrix, b: &Matrix) -> bool {
    let f = a.field();
    let q = f.q() as Elem;
    let target = point_multiset(f, &b.columns());
    for t in 0..(q as u32).pow(4) {
        let e: Vec<Elem> = (0..4).map(|i| ((t / (q as u32).pow(i)) % q as u32) as Elem).collect();
        let det = f.sub(f.mul(e[0], e[3]), f.mul(e[1], e[2]));
        if det == 0 {
            continue;
        }
        let image: Vec<Vec<Elem>> = a
            .columns()
            .iter()
            .map(|c| vec![f.add(f.mul(e[0], c[0]), f.mul(e[1], c[1])), f.add(f.mul(e[2], c[0]), f.mul(e[3], c[1]))])
            .collect();
        if point_multiset(f, &image) == target {
            return true;
        }
    }
    false
}

pub fn rank2_oracle(a: &Matrix, b: &Matrix) -> Check {
    let engine = decide(a, b, Relation::Geometric)?.is_some();
    let oracle = rank2_full_group(a, b);
    if engine != oracle {
        return Err(format!("engine says {engine}, full group says {oracle} for {:?} vs {:?}", a.row_vecs(), b.row_vecs()));
    }
    Ok(())
}

/// A spanning forest of the fundamental-circuit graph chosen by `keys`.
pub fn keyed_forest(m: &Matroid, keys: &[u32]) -> Vec<Position> {
    let prob = build_problem(m, None, None).expect("connected");
    let mut edges: Vec<Position> = Vec::new();
    for (i, &b) in prob.basis.iter().enumerate() {
        for (j, &o) in prob.others.iter().enumerate() {
            if prob.dsharp[i][j] {
                edges.push((b, o));
            }
        }
    }
    let mut order: Vec<usize> = (0..edges.len()).collect();
    order.sort_by_key(|&e| (keys[e % keys.len()].wrapping_mul(e as u32 + 1), e));
    let mut vertices: Vec<Label> = prob.basis.iter().chain(&prob.others).copied().collect();
    vertices.sort_unstable();
    let mut dsu = matroid_forge::dsu::DisjointSet::new(vertices.len());
    let idx = |l: Label| vertices.binary_search(&l).expect("vertex");
    let mut forest = Vec::new();
    for e in order {
        let (b, o) = edges[e];
        if dsu.union(idx(b), idx(o)) {
            forest.push((b, o));
        }
    }
    forest
}

/// Class counts do not depend on which spanning forest is pinned to ones.
pub fn forest_invariance(a: &StandardForm, keys: &[u32]) -> Check {
    let f = a.matrix().field();
    let m = Matroid::of_matrix(a.matrix());
    let default = build_problem(&m, None, None).map_err(|e| e.to_string())?;
    let forest = keyed_forest(&m, keys);
    let other = build_problem(&m, None, Some(&forest)).map_err(|e| e.to_string())?;
    let r1 = enumerate_representations(&default, f, None).map_err(|e| e.to_string())?;
    let r2 = enumerate_representations(&other, f, None).map_err(|e| e.to_string())?;
    let counts = |r: &matroid_forge::coordinatize::CoordinatizationReport| (r.valid.len(), r.projective.len(), r.geometric.len());
    if counts(&r1) != counts(&r2) {
        return Err(format!("forest changed counts: {:?} vs {:?}", counts(&r1), counts(&r2)));
    }
    if r1.projective.len() != r1.valid.len() {
        return Err("normalized assignments should be pairwise projectively inequivalent".into());
    }
    if !r1.representable {
        return Err("a matroid given by a matrix must be representable".into());
    }
    Ok(())
}

pub fn unknown_count(a: &StandardForm) -> usize {
    let m = Matroid::of_matrix(a.matrix());
    build_problem(&m, None, None).map(|p| p.unknowns.len()).unwrap_or(usize::MAX)
}

pub fn basis_exchange(m: &Matrix) -> Check {
    let mat = Matroid::of_matrix(m);
    if !mat.satisfies_basis_exchange() {
        return Err(format!("basis exchange fails for {:?}", m.row_vecs()));
    }
    if mat.rank() > 0 && !mat.dual().satisfies_basis_exchange() {
        return Err("basis exchange fails for the dual".into());
    }
    Ok(())
}

/// Two random `2 x n` matrices over the same field.
pub fn rank2_pair_strategy() -> impl Strategy<Value = (Matrix, Matrix)> {
    (prop::sample::select(&ORDERS[..]), 2..=7usize)
        .prop_flat_map(|(q, n)| (Just(q), Just(n), prop::collection::vec(0..q, 4 * n)))
        .prop_map(|(q, n, e)| {
            let f = gf(q);
            let mk = |s: &[u32]| Matrix::new(f.clone(), 2, n, s.iter().map(|&x| x as Elem).collect(), None).unwrap();
            (mk(&e[..2 * n]), mk(&e[2 * n..]))
        })
}

pub fn related_pair_strategy() -> impl Strategy<Value = (Matrix, Matrix)> {
    (matrix_strategy(&ORDERS, 3, 7), witness_seed(), any::<bool>(), any::<bool>(), any::<u64>()).prop_map(
        |(a, seed, related, permute, noise)| {
            let w = finish_witness(&seed, a.field(), a.rows(), a.cols(), permute, true);
            let mut b = a.apply_witness(&w).unwrap();
            if !related {
                // perturb one entry
                let (i, j) = ((noise as usize) % a.rows(), (noise as usize / 7) % a.cols());
                let mut rows = b.row_vecs();
                rows[i][j] = a.field().add(rows[i][j], 1);
                b = Matrix::from_rows(a.field(), &rows).unwrap().with_labels(b.labels().to_vec()).unwrap();
            }
            (a, b)
        },
    )
}
