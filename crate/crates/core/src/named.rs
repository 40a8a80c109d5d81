//! Built-in matroids and their standard matrices.

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::matrix::{Matrix, StandardForm};
use crate::matroid::{k_subsets, Matroid};

fn gf5() -> Field {
    Field::from_order(5).expect("GF(5)")
}

/// `[I_3 | (1,1,0) (0,1,1) (1,0,c)]`: the whirl for `c != -1`, the wheel otherwise.
pub fn whirl_over(field: &Field, c: Elem) -> Result<StandardForm> {
    StandardForm::from_d(field, &[vec![1, 0, 1], vec![1, 1, 0], vec![0, 1, c]])
}

/// The whirl over GF(5) with last entry `c`; `c = 1, 2, 3` give the three
/// projectively inequivalent representations.
pub fn whirl(c: Elem) -> StandardForm {
    whirl_over(&gf5(), c).expect("entry in GF(5)")
}

/// `[I_3 | (1,1,0) (0,1,1) (1,a,b)]`.
pub fn q6_family_over(field: &Field, a: Elem, b: Elem) -> Result<StandardForm> {
    StandardForm::from_d(field, &[vec![1, 0, 1], vec![1, 1, a], vec![0, 1, b]])
}

pub fn q6_family(a: Elem, b: Elem) -> StandardForm {
    q6_family_over(&gf5(), a, b).expect("entries in GF(5)")
}

/// The six GF(5) assignments `(a, b)` that represent Q6, in the order B1..B6.
pub const Q6_ASSIGNMENTS: [(Elem, Elem); 6] = [(3, 1), (4, 1), (2, 3), (2, 4), (4, 2), (3, 4)];

/// Q6 representation `B_i` for `i` in `1..=6`.
pub fn q6_rep(i: usize) -> StandardForm {
    let (a, b) = Q6_ASSIGNMENTS[i - 1];
    q6_family(a, b)
}

fn with_all_ones(sf: StandardForm) -> StandardForm {
    let m = sf.matrix().append_column(&[1, 1, 1], 7).expect("fresh label");
    StandardForm::new(m).expect("prefix unchanged")
}

/// The non-Fano plane: whirl `c = 1` plus `(1,1,1)`.
pub fn f7_minus() -> StandardForm {
    with_all_ones(whirl(1))
}

/// Whirl `c = 2` plus `(1,1,1)`.
pub fn x7() -> StandardForm {
    with_all_ones(whirl(2))
}

/// Rank 3 on six elements with a single three-point line `{1,2,4}`.
pub fn p6() -> Matroid {
    let line = 0b001011;
    let bases = k_subsets(6, 3).filter(|&s| s != line).collect();
    Matroid::from_masks(crate::matrix::default_labels(6), bases).expect("valid bases")
}

#[derive(Clone, Debug)]
pub struct NamedMatroid {
    pub name: String,
    pub matroid: Matroid,
    pub matrix: Option<Matrix>,
}

fn parse_uniform(name: &str) -> Option<(usize, usize)> {
    let body = name.strip_prefix('U')?;
    let body = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')).unwrap_or(body);
    let (r, n) = body.split_once(',')?;
    Some((r.trim().parse().ok()?, n.trim().parse().ok()?))
}

/// Looks up a built-in matroid: `W3wheel`, `W3whirl`, `Q6`, `P6`, `F7minus`,
/// `X7` or `U(r,n)`.
pub fn builtin(name: &str) -> Result<NamedMatroid> {
    let from_matrix = |sf: StandardForm| NamedMatroid {
        name: name.to_string(),
        matroid: Matroid::of_matrix(sf.matrix()),
        matrix: Some(sf.into_matrix()),
    };
    Ok(match name {
        "W3wheel" => from_matrix(q6_family(1, 1)),
        "W3whirl" => from_matrix(whirl(1)),
        "Q6" => from_matrix(q6_rep(1)),
        "P6" => NamedMatroid { name: name.into(), matroid: p6(), matrix: None },
        "F7minus" => from_matrix(f7_minus()),
        "X7" => from_matrix(x7()),
        _ => {
            let (r, n) = parse_uniform(name).ok_or_else(|| Error::UnknownBuiltin(name.into()))?;
            if n > crate::matroid::MAX_GROUND {
                return Err(Error::GroundTooLarge(n));
            }
            NamedMatroid { name: name.into(), matroid: Matroid::uniform(r, n)?, matrix: None }
        }
    })
}

/// Built-in matrices over GF(q): `W3whirl` (alias `W3whirlA`), `W3whirlB`,
/// `W3whirlC`, `W3wheel`, `Q6` (alias `Q6B1`), `Q6B2`..`Q6B6`, `F7minus`, `X7`.
/// Entries are read as integers in the requested field.
pub fn builtin_matrix(name: &str, field: &Field) -> Result<StandardForm> {
    let want = |sf: StandardForm| -> Result<StandardForm> {
        let m = sf.into_matrix();
        let rebuilt = Matrix::new(field.clone(), m.rows(), m.cols(), m.data().to_vec(), Some(m.labels().to_vec()))?;
        StandardForm::new(rebuilt)
    };
    match name {
        "W3whirl" | "W3whirlA" => want(whirl(1)),
        "W3whirlB" => want(whirl(2)),
        "W3whirlC" => want(whirl(3)),
        "W3wheel" => want(q6_family(1, 1)),
        "Q6" => want(q6_rep(1)),
        "F7minus" => want(f7_minus()),
        "X7" => want(x7()),
        _ => {
            if let Some(i) = name.strip_prefix("Q6B").and_then(|s| s.parse::<usize>().ok()) {
                if (1..=6).contains(&i) {
                    return want(q6_rep(i));
                }
            }
            Err(Error::UnknownBuiltin(name.into()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_shapes() {
        let f7 = builtin("F7minus").unwrap();
        assert_eq!((f7.matroid.n(), f7.matroid.rank()), (7, 3));
        assert_eq!(builtin("U(2,4)").unwrap().matroid.bases().len(), 6);
        assert_eq!(builtin("U2,4").unwrap().matroid.bases().len(), 6);
        assert_eq!(builtin("W3wheel").unwrap().matroid.lines().len(), 4);
        assert_eq!(builtin("W3whirl").unwrap().matroid.lines().len(), 3);
        assert_eq!(builtin("P6").unwrap().matroid.lines(), vec![vec![1, 2, 4]]);
        assert_eq!(builtin("Q6").unwrap().matroid.lines().len(), 2);
        assert!(matches!(builtin("K5"), Err(Error::UnknownBuiltin(_))));
    }

    #[test]
    fn builtin_matrices_respect_field() {
        let f7 = Field::from_order(7).unwrap();
        let b = builtin_matrix("W3whirlB", &f7).unwrap();
        assert_eq!(b.matrix().field().q(), 7);
        let f2 = Field::from_order(2).unwrap();
        assert!(builtin_matrix("W3whirlB", &f2).is_err());
        assert!(builtin_matrix("Q6B6", &gf5()).is_ok());
        assert!(builtin_matrix("Q6B7", &gf5()).is_err());
    }
}
