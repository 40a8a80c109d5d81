//! Text formats for matrices and abstract matroids.
//!
//! ```text
//! # comment
//! field 5                 # or: field 9 poly 2 0
//! rows 3 cols 6
//! 1 0 0 1 0 1
//! 0 1 0 1 1 0
//! 0 0 1 0 1 1
//! labels 1 2 3 4 5 6      # optional
//! ```
//!
//! ```text
//! matroid n=6 r=3
//! basis 1 2 3
//! basis 1 2 5
//! ```
//!
//! Either kind of input may also be named as `builtin:NAME` or `builtin:NAME@q`.

use std::path::Path;

use crate::error::{Error, Result};
use crate::field::{prime_power, Field, MAX_ORDER};
use crate::matrix::{default_labels, Label, Matrix};
use crate::matroid::Matroid;
use crate::named;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let body = l.split('#').next().unwrap_or("");
        let toks: Vec<&str> = body.split_whitespace().collect();
        (!toks.is_empty()).then_some((i + 1, toks))
    })
}

fn number<T: std::str::FromStr>(tok: &str, line: usize, what: &str) -> Result<T> {
    tok.parse().map_err(|_| parse_err(line, format!("expected {what}, found `{tok}`")))
}

/// Parses the tokens of a `field q [poly c0 .. c{k-1}]` line.
pub fn parse_field_header(toks: &[&str], line: usize) -> Result<Field> {
    if toks.first() != Some(&"field") || toks.len() < 2 {
        return Err(parse_err(line, "expected `field q`"));
    }
    let q: u32 = number(toks[1], line, "field order")?;
    if q > MAX_ORDER {
        return Err(Error::FieldTooLarge(q as u64));
    }
    let (p, k) = prime_power(q)?;
    match toks.get(2) {
        None => Field::new(p, k),
        Some(&"poly") => {
            let coeffs = toks[3..]
                .iter()
                .map(|t| number::<u8>(t, line, "coefficient"))
                .collect::<Result<Vec<u8>>>()?;
            Field::with_reduction(p, k, &coeffs)
        }
        Some(t) => Err(parse_err(line, format!("unexpected `{t}` after field order"))),
    }
}

pub fn parse_matrix(text: &str) -> Result<Matrix> {
    let mut lines = content_lines(text);
    let (l1, toks) = lines.next().ok_or_else(|| parse_err(1, "empty matrix file"))?;
    let field = parse_field_header(&toks, l1)?;
    let (l2, toks) = lines.next().ok_or_else(|| parse_err(l1, "missing `rows r cols n` line"))?;
    let (rows, cols) = match toks.as_slice() {
        ["rows", r, "cols", n] => (number::<usize>(r, l2, "row count")?, number::<usize>(n, l2, "column count")?),
        _ => return Err(parse_err(l2, "expected `rows r cols n`")),
    };
    let mut data = Vec::with_capacity(rows * cols);
    let mut last = l2;
    for i in 0..rows {
        let (l, toks) = lines.next().ok_or_else(|| parse_err(last, format!("expected {rows} rows, found {i}")))?;
        if toks.len() != cols {
            return Err(parse_err(l, format!("expected {cols} entries, found {}", toks.len())));
        }
        for t in toks {
            let v: u32 = number(t, l, "field element")?;
            let e = field.element(v).map_err(|_| parse_err(l, format!("entry {v} is not in GF({})", field.q())))?;
            data.push(e);
        }
        last = l;
    }
    let mut labels = None;
    if let Some((l, toks)) = lines.next() {
        if toks[0] != "labels" {
            return Err(parse_err(l, format!("unexpected `{}`", toks[0])));
        }
        if toks.len() - 1 != cols {
            return Err(parse_err(l, format!("expected {cols} labels, found {}", toks.len() - 1)));
        }
        labels = Some(toks[1..].iter().map(|t| number::<Label>(t, l, "label")).collect::<Result<Vec<_>>>()?);
        if let Some((l, _)) = lines.next() {
            return Err(parse_err(l, "trailing content after labels"));
        }
    }
    Matrix::new(field, rows, cols, data, labels)
}

pub fn write_matrix(m: &Matrix) -> String {
    let mut out = format!("{}\nrows {} cols {}\n", m.field().header(), m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|e| e.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    if m.labels() != default_labels(m.cols()).as_slice() {
        let ls: Vec<String> = m.labels().iter().map(|l| l.to_string()).collect();
        out.push_str(&format!("labels {}\n", ls.join(" ")));
    }
    out
}

fn key_value(tok: &str, key: &str, line: usize) -> Result<usize> {
    let v = tok
        .strip_prefix(key)
        .and_then(|t| t.strip_prefix('='))
        .ok_or_else(|| parse_err(line, format!("expected `{key}=..`")))?;
    number(v, line, key)
}

pub fn parse_matroid(text: &str) -> Result<Matroid> {
    let mut lines = content_lines(text);
    let (l1, toks) = lines.next().ok_or_else(|| parse_err(1, "empty matroid file"))?;
    if toks.len() != 3 || toks[0] != "matroid" {
        return Err(parse_err(l1, "expected `matroid n=N r=R`"));
    }
    let n = key_value(toks[1], "n", l1)?;
    let r = key_value(toks[2], "r", l1)?;
    if n > crate::matroid::MAX_GROUND {
        return Err(Error::GroundTooLarge(n));
    }
    let mut bases: Vec<Vec<Label>> = Vec::new();
    for (l, toks) in lines {
        if toks[0] != "basis" {
            return Err(parse_err(l, format!("unexpected `{}`", toks[0])));
        }
        let b = toks[1..].iter().map(|t| number::<Label>(t, l, "label")).collect::<Result<Vec<_>>>()?;
        if b.len() != r {
            return Err(parse_err(l, format!("basis has {} elements, rank is {r}", b.len())));
        }
        if let Some(&x) = b.iter().find(|&&x| x == 0 || x as usize > n) {
            return Err(parse_err(l, format!("label {x} outside 1..{n}")));
        }
        bases.push(b);
    }
    if bases.is_empty() {
        return Err(Error::NoBases);
    }
    Matroid::from_bases(default_labels(n), &bases)
}

pub fn write_matroid(m: &Matroid) -> String {
    let mut out = format!("matroid n={} r={}\n", m.n(), m.rank());
    for &b in m.bases() {
        let ls: Vec<String> = m.labels_of(b).iter().map(|l| l.to_string()).collect();
        out.push_str(&format!("basis {}\n", ls.join(" ")));
    }
    out
}

/// Splits `builtin:NAME@q` into the name and optional order.
pub fn parse_builtin(spec: &str) -> Option<Result<(&str, Option<u32>)>> {
    let body = spec.strip_prefix("builtin:")?;
    Some(match body.split_once('@') {
        None => Ok((body, None)),
        Some((name, q)) => q
            .parse()
            .map(|q| (name, Some(q)))
            .map_err(|_| Error::Usage(format!("bad field order in `{spec}`"))),
    })
}

fn read_file(path: &str) -> Result<String> {
    std::fs::read_to_string(Path::new(path)).map_err(|e| Error::Io(format!("{path}: {e}")))
}

/// A matrix from a file path or `builtin:NAME@q` (default GF(5)).
pub fn read_matrix(path: &str) -> Result<Matrix> {
    if let Some(b) = parse_builtin(path) {
        let (name, q) = b?;
        let field = Field::from_order(q.unwrap_or(5))?;
        return Ok(named::builtin_matrix(name, &field)?.into_matrix());
    }
    parse_matrix(&read_file(path)?)
}

/// A matroid from a matroid file, a matrix file, or `builtin:NAME[@q]`.
/// With an order, or for names that only exist as matrices, the matroid is
/// taken from the built-in matrix over that field.
pub fn read_matroid(path: &str) -> Result<Matroid> {
    if let Some(b) = parse_builtin(path) {
        let (name, q) = b?;
        if q.is_none() {
            if let Ok(m) = named::builtin(name) {
                return Ok(m.matroid);
            }
        }
        let field = Field::from_order(q.unwrap_or(5))?;
        return Ok(Matroid::of_matrix(named::builtin_matrix(name, &field)?.matrix()));
    }
    let text = read_file(path)?;
    let is_matrix = content_lines(&text).next().is_some_and(|(_, t)| t[0] == "field");
    if is_matrix {
        Ok(Matroid::of_matrix(&parse_matrix(&text)?))
    } else {
        parse_matroid(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const A_MAT: &str = "# the whirl\nfield 5\nrows 3 cols 6\n1 0 0 1 0 1\n0 1 0 1 1 0\n0 0 1 0 1 1\nlabels 1 2 3 4 5 6   # optional\n";

    #[test]
    fn matroid_builtins_accept_matrix_names() {
        let b = read_matroid("builtin:W3whirlB@5").unwrap();
        let c = read_matroid("builtin:W3whirlC").unwrap();
        assert!(b.is_isomorphic(&c));
        assert_eq!(read_matroid("builtin:P6").unwrap(), named::p6());
        assert!(matches!(read_matroid("builtin:Nope"), Err(Error::UnknownBuiltin(_))));
    }

    #[test]
    fn reads_whirl_file() {
        let m = parse_matrix(A_MAT).unwrap();
        assert!(m.entries_eq(named::whirl(1).matrix()));
        assert_eq!(m.labels(), &[1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn round_trips() {
        let m = parse_matrix(A_MAT).unwrap();
        assert_eq!(parse_matrix(&write_matrix(&m)).unwrap(), m);
        let relabeled = m.with_labels(vec![4, 5, 6, 1, 2, 3]).unwrap();
        let text = write_matrix(&relabeled);
        assert!(text.ends_with("labels 4 5 6 1 2 3\n"));
        assert_eq!(parse_matrix(&text).unwrap(), relabeled);
        let f9 = Field::from_order(9).unwrap();
        let m9 = Matrix::from_rows(&f9, &[vec![1, 0, 5], vec![0, 1, 8]]).unwrap();
        let text = write_matrix(&m9);
        assert!(text.starts_with("field 9 poly "));
        assert_eq!(parse_matrix(&text).unwrap(), m9);
    }

    #[test]
    fn rejects_bad_headers() {
        assert_eq!(parse_matrix("field 6\nrows 1 cols 1\n1\n").unwrap_err(), Error::NotPrimePower(6));
        assert!(matches!(parse_matrix("field 4 poly 0 1\nrows 1 cols 1\n1\n"), Err(Error::Reducible(_))));
        let e = parse_matrix("field 5\nrows 2 cols 2\n1 0\n0 7\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 4, .. }), "{e:?}");
        let e = parse_matrix("field 5\nrows 2 cols 2\n1 0\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e:?}");
    }

    #[test]
    fn reads_uniform_matroid() {
        let text = "matroid n=4 r=2\nbasis 1 2\nbasis 1 3\nbasis 1 4\nbasis 2 3\nbasis 2 4\nbasis 3 4\n";
        let m = parse_matroid(text).unwrap();
        assert_eq!(m.bases().len(), 6);
        assert_eq!(m, Matroid::uniform(2, 4).unwrap());
        assert_eq!(parse_matroid(&write_matroid(&m)).unwrap(), m);
        let e = parse_matroid("matroid n=4 r=2\nbasis 1 2 3\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        assert_eq!(parse_matroid("matroid n=4 r=2\n").unwrap_err(), Error::NoBases);
    }

    #[test]
    fn builtin_specs() {
        let m = read_matrix("builtin:W3whirlB@7").unwrap();
        assert_eq!(m.field().q(), 7);
        assert_eq!(read_matroid("builtin:Q6").unwrap().lines().len(), 2);
        assert!(read_matrix("builtin:Nope@5").is_err());
    }
}
