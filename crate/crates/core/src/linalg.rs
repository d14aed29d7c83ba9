//! Exact scalars and dense matrices.
//!
//! Every computation in the crate reduces to Gaussian elimination over either
//! a prime field `F_p` or the rationals. Vectors are rows: a matrix of shape
//! `r × c` is a linear map `k^r → k^c` acting by `v ↦ v·m`.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The ground field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Field {
    Prime { p: u64 },
    Rational,
}

/// A field element. Prime-field values live in `[0, p)`, rationals are kept
/// in lowest terms by `BigRational`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Mod(u64),
    Rat(BigRational),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// `F_p`; `p` must be a prime below `2^32` so products fit in a `u64`.
    pub fn prime(p: u64) -> Result<Field> {
        if p >= 1 << 32 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime { p })
    }

    pub fn rational() -> Field {
        Field::Rational
    }

    pub fn characteristic(&self) -> u64 {
        match *self {
            Field::Prime { p } => p,
            Field::Rational => 0,
        }
    }

    /// Checks a deserialized field (serde bypasses [`Field::prime`]).
    pub fn validate(&self) -> Result<()> {
        match *self {
            Field::Prime { p } => Field::prime(p).map(|_| ()),
            Field::Rational => Ok(()),
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Prime { .. } => Scalar::Mod(0),
            Field::Rational => Scalar::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Prime { .. } => Scalar::Mod(1),
            Field::Rational => Scalar::Rat(BigRational::one()),
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match *self {
            Field::Prime { p } => Scalar::Mod(v.rem_euclid(p as i64) as u64),
            Field::Rational => Scalar::Rat(BigRational::from_integer(BigInt::from(v))),
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Mod(v) => *v == 0,
            Scalar::Rat(r) => r.is_zero(),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (*self, a, b) {
            (Field::Prime { p }, Scalar::Mod(x), Scalar::Mod(y)) => Scalar::Mod((x + y) % p),
            (Field::Rational, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            _ => panic!("scalar does not belong to {self:?}"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (*self, a) {
            (Field::Prime { p }, Scalar::Mod(x)) => Scalar::Mod((p - x) % p),
            (Field::Rational, Scalar::Rat(x)) => Scalar::Rat(-x),
            _ => panic!("scalar does not belong to {self:?}"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (*self, a, b) {
            (Field::Prime { p }, Scalar::Mod(x), Scalar::Mod(y)) => Scalar::Mod(x * y % p),
            (Field::Rational, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            _ => panic!("scalar does not belong to {self:?}"),
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if self.is_zero(a) {
            return None;
        }
        match (*self, a) {
            (Field::Prime { p }, Scalar::Mod(x)) => Some(Scalar::Mod(pow_mod(*x, p - 2, p))),
            (Field::Rational, Scalar::Rat(x)) => Some(Scalar::Rat(x.recip())),
            _ => panic!("scalar does not belong to {self:?}"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }

    /// Parses `"3"`, `"-1"`, `"2/3"`. Over `F_p` a fraction means `a·b⁻¹`.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let bad = || Error::Parse(format!("invalid coefficient {s:?}"));
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        match *self {
            Field::Rational => Ok(Scalar::Rat(BigRational::new(num, den))),
            Field::Prime { p } => {
                let red = |x: &BigInt| -> u64 {
                    let m = BigInt::from(p);
                    let r = ((x % &m) + &m) % &m;
                    r.try_into().expect("residue fits in u64")
                };
                let n = Scalar::Mod(red(&num));
                let d = Scalar::Mod(red(&den));
                self.div(&n, &d).ok_or_else(bad)
            }
        }
    }

    /// Canonical decimal string: residues in `[0,p)`, rationals as `a` or `a/b`.
    pub fn format(&self, a: &Scalar) -> String {
        match a {
            Scalar::Mod(v) => v.to_string(),
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
        }
    }

    /// Like `format`, but prime-field values above `p/2` print as negatives, so
    /// small integer coefficients survive a change of field.
    pub fn format_signed(&self, a: &Scalar) -> String {
        match (self, a) {
            (Field::Prime { p }, Scalar::Mod(v)) if *v > p / 2 => format!("-{}", p - v),
            _ => self.format(a),
        }
    }

    /// Enumerates all elements when the field is finite.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match *self {
            Field::Prime { p } => Some((0..p).map(Scalar::Mod).collect()),
            Field::Rational => None,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime { p } => write!(f, "F_{p}"),
            Field::Rational => write!(f, "Q"),
        }
    }
}

impl Scalar {
    /// Small-integer view used for pretty printing and sign checks.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Mod(_) => false,
            Scalar::Rat(r) => r.is_negative(),
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// Dense row-major matrix over a [`Field`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(|x| self.field.format(x)).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &mut self.data[r * self.cols + c]
    }
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_vec(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Matrix {
        assert_eq!(data.len(), rows * cols, "entries must fill the shape");
        Matrix { field, rows, cols, data }
    }

    /// Builds from rows; `cols` is needed so that zero-row matrices keep a width.
    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Matrix {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend(row);
        }
        Matrix { field, rows: n, cols, data }
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect();
        Matrix::from_rows(field, cols, rows)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Matrix {
        Matrix::from_vec(self.field, 1, self.cols, self.row(r).to_vec())
    }

    pub fn row_list(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if f.is_zero(b) {
                        continue;
                    }
                    let prod = f.mul(a, b);
                    let cur = &out[(i, j)];
                    out[(i, j)] = f.add(cur, &prod);
                }
            }
        }
        out
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self.mul(other))
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "shape mismatch");
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "shape mismatch");
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.sub(a, b)).collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let f = self.field;
        let data = self.data.iter().map(|a| f.mul(a, s)).collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&self.field.neg(&self.field.one()))
    }

    /// `[self | other]`
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "row counts differ");
        let mut out = Matrix::zeros(self.field, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(r, c)] = self[(r, c)].clone();
            }
            for c in 0..other.cols {
                out[(r, self.cols + c)] = other[(r, c)].clone();
            }
        }
        out
    }

    /// `[self ; other]`
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "column counts differ");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Block diagonal sum.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows + other.rows, self.cols + other.cols);
        out.set_block(0, 0, self);
        out.set_block(self.rows, self.cols, other);
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols, "block does not fit");
        for r in 0..block.rows {
            for c in 0..block.cols {
                self[(r0 + r, c0 + c)] = block[(r, c)].clone();
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols, "block out of range");
        let mut out = Matrix::zeros(self.field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                out[(r, c)] = self[(r0 + r, c0 + c)].clone();
            }
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let rows = idx.iter().map(|&r| self.row(r).to_vec()).collect();
        Matrix::from_rows(self.field, self.cols, rows)
    }

    /// Gauss–Jordan elimination. Pivot order: leftmost nonzero column, topmost
    /// row carrying a nonzero entry in it.
    pub fn rref(&self) -> Echelon {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| !f.is_zero(&m[(r, col)])) else {
                continue;
            };
            m.swap_rows(row, pr);
            let inv = f.inv(&m[(row, col)]).expect("pivot is nonzero");
            for c in col..m.cols {
                let v = f.mul(&m[(row, c)], &inv);
                m[(row, c)] = v;
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m[(r, col)].clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for c in col..m.cols {
                    let t = f.mul(&factor, &m[(row, c)]);
                    let v = f.sub(&m[(r, c)], &t);
                    m[(r, c)] = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        Echelon { matrix: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of `{x : self·x = 0}`, returned as the columns of a `cols × k`
    /// matrix; free variables are set to unit vectors in increasing order.
    pub fn right_kernel(&self) -> Matrix {
        let f = self.field;
        let Echelon { matrix: e, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Matrix::zeros(f, self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            k[(fc, j)] = f.one();
            for (i, &pc) in pivots.iter().enumerate() {
                k[(pc, j)] = f.neg(&e[(i, fc)]);
            }
        }
        k
    }

    /// Basis of the left kernel `{v : v·self = 0}` as the rows of a matrix.
    pub fn kernel_basis(&self) -> Matrix {
        self.transpose().right_kernel().transpose()
    }

    /// Basis (rows) of the row space, in reduced echelon form.
    pub fn row_space(&self) -> Matrix {
        let Echelon { matrix, pivots } = self.rref();
        matrix.block(0, 0, pivots.len(), self.cols)
    }

    /// Solves `self·x = b`; `None` if inconsistent. Free variables are zero.
    pub fn solve_right(&self, b: &Matrix) -> Result<Option<Matrix>> {
        if self.rows != b.rows {
            return Err(Error::DimensionMismatch(format!(
                "solve_right: a has {} rows but b has {}",
                self.rows, b.rows
            )));
        }
        let f = self.field;
        let aug = self.hstack(b);
        let Echelon { matrix: e, pivots } = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(f, self.cols, b.cols);
        for (i, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x[(pc, j)] = e[(i, self.cols + j)].clone();
            }
        }
        Ok(Some(x))
    }

    /// Solves `x·self = b`.
    pub fn solve_left(&self, b: &Matrix) -> Result<Option<Matrix>> {
        Ok(self.transpose().solve_right(&b.transpose())?.map(|x| x.transpose()))
    }

    /// Coordinates of the rows of `vectors` with respect to the (independent)
    /// rows of `self`.
    pub fn coords_in_rows(&self, vectors: &Matrix) -> Option<Matrix> {
        if self.rows == 0 {
            return vectors.is_zero().then(|| Matrix::zeros(self.field, vectors.rows, 0));
        }
        self.solve_left(vectors).expect("column counts agree")
    }

    /// Flattens into a single row.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.data.clone()
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        self.solve_right(&Matrix::identity(self.field, self.rows)).ok().flatten()
    }

    pub fn pow(&self, e: usize) -> Matrix {
        let mut out = Matrix::identity(self.field, self.rows);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }
}

/// Complement of the row space of `sub` inside `k^n`: unit vectors at the
/// non-pivot columns of the echelon form of `sub` (deterministic).
pub fn complement_basis(sub: &Matrix) -> Matrix {
    let f = sub.field();
    let n = sub.cols();
    let pivots = sub.rref().pivots;
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut out = Matrix::zeros(f, free.len(), n);
    for (i, &c) in free.iter().enumerate() {
        out[(i, c)] = f.one();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f101() -> Field {
        Field::prime(101).unwrap()
    }

    #[test]
    fn rank_identity_and_row() {
        assert_eq!(Matrix::identity(f101(), 2).rank(), 2);
        let f2 = Field::prime(2).unwrap();
        assert_eq!(Matrix::from_i64(f2, &[&[1, 1]]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        let f2 = Field::prime(2).unwrap();
        let m = Matrix::from_i64(f2, &[&[1], &[1]]);
        let k = m.kernel_basis();
        assert_eq!(k, Matrix::from_i64(f2, &[&[1, 1]]));
        assert_eq!(Matrix::identity(f101(), 3).kernel_basis().rows(), 0);
        assert_eq!(Matrix::zeros(f101(), 3, 4).kernel_basis().rows(), 3);
    }

    #[test]
    fn solve_examples() {
        let q = Field::Rational;
        let a = Matrix::from_i64(q, &[&[2]]);
        let b = Matrix::from_i64(q, &[&[1]]);
        let x = a.solve_right(&b).unwrap().unwrap();
        assert_eq!(x[(0, 0)], q.parse("1/2").unwrap());
        let b2 = Matrix::from_i64(q, &[&[3, -1], &[0, 7]]);
        assert_eq!(Matrix::identity(q, 2).solve_right(&b2).unwrap().unwrap(), b2);
        let z = Matrix::from_i64(q, &[&[0]]);
        assert!(z.solve_right(&b).unwrap().is_none());
        assert!(matches!(z.solve_right(&b2), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn non_prime_rejected() {
        assert!(matches!(Field::prime(91), Err(Error::NotPrime(91))));
        assert!(Field::prime(1).is_err());
    }

    #[test]
    fn parse_and_format() {
        let q = Field::Rational;
        assert_eq!(q.format(&q.parse("4/6").unwrap()), "2/3");
        assert_eq!(q.format(&q.parse("-1").unwrap()), "-1");
        let f7 = Field::prime(7).unwrap();
        assert_eq!(f7.format(&f7.parse("-1").unwrap()), "6");
        assert_eq!(f7.format(&f7.parse("1/2").unwrap()), "4");
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("x").is_err());
    }

    // Independent rank oracle: count linearly independent rows by greedy
    // insertion into an echelon basis kept as a list of (pivot, row) pairs.
    fn oracle_rank(f: Field, rows: &[Vec<Scalar>]) -> usize {
        let mut basis: Vec<(usize, Vec<Scalar>)> = Vec::new();
        for r in rows {
            let mut v = r.clone();
            for (p, b) in &basis {
                if !f.is_zero(&v[*p]) {
                    let c = f.div(&v[*p], &b[*p]).unwrap();
                    for i in 0..v.len() {
                        v[i] = f.sub(&v[i], &f.mul(&c, &b[i]));
                    }
                }
            }
            if let Some(p) = v.iter().position(|x| !f.is_zero(x)) {
                basis.push((p, v));
            }
        }
        basis.len()
    }

    fn field_strategy() -> impl Strategy<Value = Field> {
        prop_oneof![
            Just(Field::Prime { p: 2 }),
            Just(Field::Prime { p: 3 }),
            Just(Field::Prime { p: 101 }),
            Just(Field::Rational)
        ]
    }

    fn matrix_strategy(max: usize) -> impl Strategy<Value = Matrix> {
        (field_strategy(), 0..=max, 0..=max).prop_flat_map(|(f, r, c)| {
            proptest::collection::vec(-3i64..=3, r * c).prop_map(move |v| {
                Matrix::from_vec(f, r, c, v.into_iter().map(|x| f.from_i64(x)).collect())
            })
        })
    }

    proptest! {
        #[test]
        fn rank_matches_transpose_and_oracle(m in matrix_strategy(5)) {
            let r = m.rank();
            prop_assert_eq!(r, m.transpose().rank());
            prop_assert_eq!(r, oracle_rank(m.field(), &m.row_list()));
        }

        #[test]
        fn rank_nullity(m in matrix_strategy(6)) {
            let k = m.kernel_basis();
            prop_assert_eq!(m.rank() + k.rows(), m.rows());
            prop_assert!(k.mul(&m).is_zero());
        }

        #[test]
        fn solve_right_is_exact(a in matrix_strategy(5), seed in 0i64..1000) {
            let f = a.field();
            let xs: Vec<Scalar> = (0..a.cols() * 2).map(|i| f.from_i64((seed * 7 + i as i64 * 13) % 11 - 5)).collect();
            let x0 = Matrix::from_vec(f, a.cols(), 2, xs);
            let b = a.mul(&x0);
            let x = a.solve_right(&b).unwrap().expect("consistent by construction");
            prop_assert_eq!(a.mul(&x), b);
        }

        #[test]
        fn arithmetic_round_trips(f in field_strategy(), x in -50i64..50, y in -50i64..50) {
            let (x, y) = (f.from_i64(x), f.from_i64(y));
            prop_assert_eq!(f.sub(&f.add(&x, &y), &y), x.clone());
            if !f.is_zero(&y) {
                prop_assert_eq!(f.div(&f.mul(&x, &y), &y).unwrap(), x);
            }
        }
    }
}
