//! Table-driven arithmetic in GF(p^k).
//!
//! Elements are integers in `[0, q)`. For `k >= 2` the integer `v` stands for the
//! polynomial `c0 + c1 x + ... + c{k-1} x^{k-1}` with `v = sum ci p^i`, reduced
//! modulo a fixed monic irreducible polynomial. All operation tables are
//! precomputed at construction; a [`Field`] is a cheap handle to them.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A field element in its integer encoding.
pub type Elem = u8;

/// Largest supported field order.
pub const MAX_ORDER: u32 = 121;

#[derive(Clone)]
pub struct Field {
    inner: Arc<Tables>,
}

struct Tables {
    p: u32,
    k: u32,
    q: u32,
    reduction: Vec<u8>,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    inv: Vec<Elem>,
    frob: Vec<Elem>,
}

/// The operations accepted by [`Field::arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Neg,
    Inv,
    Pow,
}

impl ArithOp {
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "add" => ArithOp::Add,
            "sub" => ArithOp::Sub,
            "mul" => ArithOp::Mul,
            "neg" => ArithOp::Neg,
            "inv" => ArithOp::Inv,
            "pow" => ArithOp::Pow,
            _ => return None,
        })
    }

    fn name(self) -> &'static str {
        match self {
            ArithOp::Add => "add",
            ArithOp::Sub => "sub",
            ArithOp::Mul => "mul",
            ArithOp::Neg => "neg",
            ArithOp::Inv => "inv",
            ArithOp::Pow => "pow",
        }
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` into `(p, k)` with `q = p^k`.
pub fn prime_power(q: u32) -> Result<(u32, u32)> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).unwrap();
    let (mut rest, mut k) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    if rest != 1 {
        return Err(Error::NotPrimePower(q));
    }
    Ok((p, k))
}

// Polynomials over GF(p) as coefficient vectors, lowest degree first.

fn poly_trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    // m must be monic
    let mut r: Vec<u32> = a.to_vec();
    poly_trim(&mut r);
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        for (i, &c) in m.iter().enumerate() {
            let sub = (lead * c) % p;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        poly_trim(&mut r);
    }
    r
}

/// Monic polynomial with the given lower coefficients.
fn monic(lower: &[u32]) -> Vec<u32> {
    let mut v = lower.to_vec();
    v.push(1);
    v
}

fn digits(mut v: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(v % p);
        v /= p;
    }
    out
}

/// Exhaustive irreducibility test: no monic factor of degree `1..=k/2`.
pub fn is_irreducible(p: u32, lower: &[u8]) -> bool {
    let k = lower.len();
    if k == 0 {
        return false;
    }
    let f = monic(&lower.iter().map(|&c| c as u32).collect::<Vec<_>>());
    for d in 1..=k / 2 {
        for v in 0..p.pow(d as u32) {
            let g = monic(&digits(v, p, d));
            if poly_rem(&f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The monic irreducible of degree `k` over GF(p) whose lower coefficient
/// vector has the least integer encoding.
pub fn least_irreducible(p: u32, k: u32) -> Option<Vec<u8>> {
    let count = p.checked_pow(k)?;
    (0..count)
        .map(|v| digits(v, p, k as usize).into_iter().map(|c| c as u8).collect::<Vec<_>>())
        .find(|c| is_irreducible(p, c))
}

impl Field {
    /// GF(p^k) with the pinned reduction polynomial for `(p, k)`.
    pub fn new(p: u32, k: u32) -> Result<Self> {
        Self::check_params(p, k)?;
        if k == 1 {
            return Ok(Self::build(p, 1, Vec::new()));
        }
        let reduction = least_irreducible(p, k).ok_or(Error::MissingReduction { p, k })?;
        Ok(Self::build(p, k, reduction))
    }

    /// GF(p^k) modulo a caller-supplied monic polynomial, given by its `k` lower coefficients.
    pub fn with_reduction(p: u32, k: u32, reduction: &[u8]) -> Result<Self> {
        Self::check_params(p, k)?;
        let expected = if k == 1 { 0 } else { k as usize };
        if k == 1 && reduction.len() <= 1 {
            // x + c is always irreducible; GF(p) itself needs no polynomial
            return Ok(Self::build(p, 1, Vec::new()));
        }
        if reduction.len() != expected {
            return Err(Error::ReductionLength { expected, got: reduction.len() });
        }
        if let Some(&c) = reduction.iter().find(|&&c| c as u32 >= p) {
            return Err(Error::InvalidElement { value: c as u32, q: p });
        }
        if !is_irreducible(p, reduction) {
            return Err(Error::Reducible(reduction.to_vec()));
        }
        Ok(Self::build(p, k, reduction.to_vec()))
    }

    /// GF(q) for a prime power `q`, using the pinned reduction polynomial.
    pub fn from_order(q: u32) -> Result<Self> {
        if q > MAX_ORDER {
            return Err(Error::FieldTooLarge(q as u64));
        }
        let (p, k) = prime_power(q)?;
        Self::new(p, k)
    }

    fn check_params(p: u32, k: u32) -> Result<()> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = (p as u64).checked_pow(k).unwrap_or(u64::MAX);
        if q > MAX_ORDER as u64 {
            return Err(Error::FieldTooLarge(q));
        }
        Ok(())
    }

    fn build(p: u32, k: u32, reduction: Vec<u8>) -> Self {
        let q = p.pow(k);
        let ku = k as usize;
        let modulus = monic(&reduction.iter().map(|&c| c as u32).collect::<Vec<_>>());
        let encode = |c: &[u32]| c.iter().rev().fold(0u32, |acc, &d| acc * p + d) as Elem;
        let decoded: Vec<Vec<u32>> = (0..q).map(|v| digits(v, p, ku)).collect();

        let n = q as usize;
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let sum: Vec<u32> = decoded[a].iter().zip(&decoded[b]).map(|(x, y)| (x + y) % p).collect();
                add[a * n + b] = encode(&sum);

                let mut prod = vec![0u32; 2 * ku - 1];
                for (i, x) in decoded[a].iter().enumerate() {
                    for (j, y) in decoded[b].iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let mut red = if k == 1 { prod } else { poly_rem(&prod, &modulus, p) };
                red.resize(ku, 0);
                mul[a * n + b] = encode(&red);
            }
        }
        let mut neg = vec![0; n];
        let mut inv = vec![0; n];
        for a in 0..n {
            neg[a] = (0..n).find(|&b| add[a * n + b] == 0).unwrap() as Elem;
            if a != 0 {
                inv[a] = (1..n).find(|&b| mul[a * n + b] == 1).unwrap() as Elem;
            }
        }
        let mut frob = vec![0; n];
        for (a, slot) in frob.iter_mut().enumerate() {
            let mut acc: Elem = if n > 1 { 1 } else { 0 };
            for _ in 0..p {
                acc = mul[acc as usize * n + a];
            }
            *slot = acc;
        }
        Field { inner: Arc::new(Tables { p, k, q, reduction, add, mul, neg, inv, frob }) }
    }

    pub fn p(&self) -> u32 {
        self.inner.p
    }

    pub fn k(&self) -> u32 {
        self.inner.k
    }

    pub fn q(&self) -> u32 {
        self.inner.q
    }

    /// Lower coefficients of the reduction polynomial; empty for prime fields.
    pub fn reduction(&self) -> &[u8] {
        &self.inner.reduction
    }

    pub fn is_prime_field(&self) -> bool {
        self.inner.k == 1
    }

    pub fn contains(&self, value: u32) -> bool {
        value < self.inner.q
    }

    pub fn element(&self, value: u32) -> Result<Elem> {
        if self.contains(value) {
            Ok(value as Elem)
        } else {
            Err(Error::InvalidElement { value, q: self.q() })
        }
    }

    /// Coefficient vector `(c0, ..., c{k-1})` of an element.
    pub fn coefficients(&self, a: Elem) -> Vec<u32> {
        digits(a as u32, self.p(), self.k() as usize)
    }

    pub fn from_coefficients(&self, coeffs: &[u32]) -> Result<Elem> {
        if coeffs.len() != self.k() as usize || coeffs.iter().any(|&c| c >= self.p()) {
            return Err(Error::DimensionMismatch(format!("coefficients {coeffs:?} for GF({})", self.q())));
        }
        Ok(coeffs.iter().rev().fold(0u32, |acc, &d| acc * self.p() + d) as Elem)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.inner.add[a as usize * self.inner.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.inner.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.inner.mul[a as usize * self.inner.q as usize + b as usize]
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            Err(Error::InverseOfZero)
        } else {
            Ok(self.inner.inv[a as usize])
        }
    }

    /// Inverse of a value already known to be nonzero.
    #[inline]
    pub(crate) fn inv_nz(&self, a: Elem) -> Elem {
        debug_assert!(a != 0);
        self.inner.inv[a as usize]
    }

    #[inline]
    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc: Elem = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `a^(p^j)`, the `j`-th power of the Frobenius automorphism.
    pub fn frobenius(&self, a: Elem, j: u32) -> Elem {
        let mut x = a;
        for _ in 0..(j % self.k()) {
            x = self.inner.frob[x as usize];
        }
        x
    }

    /// Generic entry point: `operands` are checked against the field first.
    pub fn arith(&self, op: ArithOp, operands: &[u32]) -> Result<Elem> {
        let arity = match op {
            ArithOp::Neg | ArithOp::Inv => 1,
            _ => 2,
        };
        if operands.len() != arity {
            return Err(Error::Arity { op: op.name(), expected: arity, got: operands.len() });
        }
        let a = self.element(operands[0])?;
        match op {
            ArithOp::Neg => Ok(self.neg(a)),
            ArithOp::Inv => self.inv(a),
            ArithOp::Pow => Ok(self.pow(a, operands[1] as u64)),
            ArithOp::Add => Ok(self.add(a, self.element(operands[1])?)),
            ArithOp::Sub => Ok(self.sub(a, self.element(operands[1])?)),
            ArithOp::Mul => Ok(self.mul(a, self.element(operands[1])?)),
        }
    }

    /// All elements (or all units) in increasing encoded order.
    pub fn elements(&self, units_only: bool) -> Vec<Elem> {
        let start = if units_only { 1 } else { 0 };
        (start..self.q()).map(|v| v as Elem).collect()
    }

    /// File header line, e.g. `field 5` or `field 9 poly 1 0`.
    pub fn header(&self) -> String {
        if self.is_prime_field() {
            format!("field {}", self.q())
        } else {
            let coeffs: Vec<String> = self.reduction().iter().map(|c| c.to_string()).collect();
            format!("field {} poly {}", self.q(), coeffs.join(" "))
        }
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.p() == other.p() && self.k() == other.k() && self.reduction() == other.reduction())
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q())?;
        if !self.is_prime_field() {
            write!(f, "[{:?}]", self.reduction())?;
        }
        Ok(())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const BUILTINS: [u32; 7] = [4, 8, 9, 16, 25, 27, 49];

    #[test]
    fn make_field_examples() {
        let f5 = Field::new(5, 1).unwrap();
        assert_eq!(f5.q(), 5);
        assert!(f5.reduction().is_empty());

        let f4 = Field::new(2, 2).unwrap();
        assert_eq!(f4.q(), 4);
        assert_eq!(f4.reduction(), &[1, 1]);

        assert_eq!(Field::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert_eq!(Field::from_order(6).unwrap_err(), Error::NotPrimePower(6));
        assert!(matches!(Field::from_order(125), Err(Error::FieldTooLarge(125))));
    }

    #[test]
    fn builtin_orders_exist() {
        for q in BUILTINS {
            let f = Field::from_order(q).unwrap();
            assert_eq!(f.q(), q);
            assert!(is_irreducible(f.p(), f.reduction()));
        }
        assert_eq!(Field::new(2, 3).unwrap().reduction(), &[1, 1, 0]);
        assert_eq!(Field::new(3, 2).unwrap().reduction(), &[1, 0]);
        assert_eq!(Field::new(5, 2).unwrap().reduction(), &[2, 0]);
    }

    #[test]
    fn supplied_reduction_is_validated() {
        // x^2 + 1 = (x + 1)^2 over GF(2)
        assert_eq!(Field::with_reduction(2, 2, &[1, 0]).unwrap_err(), Error::Reducible(vec![1, 0]));
        assert!(matches!(Field::with_reduction(2, 2, &[1]), Err(Error::ReductionLength { .. })));
        // x^2 + x + 2 is irreducible over GF(3)
        let f9 = Field::with_reduction(3, 2, &[2, 1]).unwrap();
        assert_ne!(f9, Field::new(3, 2).unwrap());
        // quartic with no roots but a quadratic factor: (x^2+x+1)^2 = x^4+x^2+1 over GF(2)
        assert!(!is_irreducible(2, &[1, 0, 1, 0]));
    }

    #[test]
    fn arithmetic_examples() {
        let f5 = Field::new(5, 1).unwrap();
        assert_eq!(f5.mul(3, 4), 2);
        assert_eq!(f5.inv(3).unwrap(), 2);
        assert_eq!(f5.inv(0).unwrap_err(), Error::InverseOfZero);
        assert_eq!(f5.arith(ArithOp::Sub, &[1, 3]).unwrap(), 3);
        assert_eq!(f5.arith(ArithOp::Pow, &[2, 4]).unwrap(), 1);
        assert!(f5.arith(ArithOp::Add, &[7, 1]).is_err());

        let f4 = Field::new(2, 2).unwrap();
        assert_eq!(f4.mul(2, 2), 3);
        assert_eq!(f4.add(2, 3), 1);
    }

    #[test]
    fn frobenius_examples() {
        let f5 = Field::new(5, 1).unwrap();
        for a in f5.elements(false) {
            assert_eq!(f5.frobenius(a, 1), a);
        }
        let f4 = Field::new(2, 2).unwrap();
        assert_eq!(f4.frobenius(2, 1), 3);
        for q in BUILTINS {
            let f = Field::from_order(q).unwrap();
            for a in f.elements(false) {
                assert_eq!(f.frobenius(a, f.k()), a);
            }
        }
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(Field::new(3, 1).unwrap().elements(true), vec![1, 2]);
        assert_eq!(Field::new(5, 1).unwrap().elements(true), vec![1, 2, 3, 4]);
        assert_eq!(Field::new(2, 2).unwrap().elements(false), vec![0, 1, 2, 3]);
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49] {
            let f = Field::from_order(q).unwrap();
            let els = f.elements(false);
            for &a in &els {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                assert_eq!(f.pow(a, q as u64), a);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &els {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_is_automorphism() {
        for q in [4, 9, 25, 27] {
            let f = Field::from_order(q).unwrap();
            let sigma = |x| f.frobenius(x, 1);
            let mut image: Vec<Elem> = f.elements(false).iter().map(|&a| sigma(a)).collect();
            image.sort();
            assert_eq!(image, f.elements(false));
            for a in f.elements(false) {
                for b in f.elements(false) {
                    assert_eq!(sigma(f.add(a, b)), f.add(sigma(a), sigma(b)));
                    assert_eq!(sigma(f.mul(a, b)), f.mul(sigma(a), sigma(b)));
                }
            }
        }
    }

    #[test]
    fn coefficient_encoding_round_trips() {
        let f = Field::from_order(27).unwrap();
        for a in f.elements(false) {
            assert_eq!(f.from_coefficients(&f.coefficients(a)).unwrap(), a);
        }
    }

    #[test]
    fn header_format() {
        assert_eq!(Field::from_order(5).unwrap().header(), "field 5");
        assert_eq!(Field::from_order(4).unwrap().header(), "field 4 poly 1 1");
    }
}
