//! Exact rational dense matrices and the echelon-form primitives used by
//! every other module: rank, kernel, solve and quotient complements.
//!
//! All echelon forms use the same convention: the pivot of a row is its
//! leftmost nonzero entry and is scaled to 1. Kernel bases are read off the
//! reduced row echelon form with one vector per free column (that column set
//! to 1, the other free columns set to 0), which makes every basis produced
//! here canonical.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Ground field element. Always in lowest terms with a positive denominator.
pub type Scalar = BigRational;

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// `"p/q"`, or `"p"` when the denominator is 1.
pub fn scalar_to_string(s: &Scalar) -> String {
    s.to_string()
}

pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let t = text.trim();
    let parsed = Scalar::from_str(t).map_err(|_| Error::Parse(format!("bad scalar {text:?}")))?;
    if t.contains('/') && parsed.denom().is_zero() {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(parsed)
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{}x{}[", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(scalar_to_string).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Matrix { rows, cols, entries })
    }

    /// Builds a matrix from rows; `cols` fixes the width so that zero-row
    /// matrices keep their shape.
    pub fn from_rows(rows: Vec<Vec<Scalar>>, cols: usize) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Shape(format!("row {i} has {} entries, expected {cols}", r.len())));
            }
            entries.extend(r);
        }
        Ok(Matrix { rows: n, cols, entries })
    }

    /// Small integer matrices, mostly for tests and fixtures.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged integer matrix");
                r.iter().map(|&v| int(v)).collect()
            })
            .collect();
        Self::from_rows(data, cols).expect("checked shape")
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::Shape(format!("column {j} has length {}, expected {rows}", c.len())));
            }
            for (i, v) in c.iter().enumerate() {
                m.entries[i * m.cols + j] = v.clone();
            }
        }
        Ok(m)
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
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn checked_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.shape() != rhs.shape() {
            return Err(Error::Shape(format!("{:?} + {:?}", self.shape(), rhs.shape())));
        }
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn checked_sub(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.shape() != rhs.shape() {
            return Err(Error::Shape(format!("{:?} - {:?}", self.shape(), rhs.shape())));
        }
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn scaled(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|v| v * c).collect(),
        }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length does not match matrix width");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Horizontal concatenation `[b0 | b1 | ...]`; all blocks share `rows`.
    pub fn hstack(rows: usize, blocks: &[&Matrix]) -> Result<Matrix> {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            if b.rows != rows {
                return Err(Error::Shape(format!("hstack block has {} rows, expected {rows}", b.rows)));
            }
            for i in 0..rows {
                for j in 0..b.cols {
                    out.entries[i * cols + off + j] = b.get(i, j).clone();
                }
            }
            off += b.cols;
        }
        Ok(out)
    }

    /// Vertical concatenation; all blocks share `cols`.
    pub fn vstack(cols: usize, blocks: &[&Matrix]) -> Result<Matrix> {
        let mut entries = Vec::new();
        let mut rows = 0;
        for b in blocks {
            if b.cols != cols {
                return Err(Error::Shape(format!("vstack block has {} cols, expected {cols}", b.cols)));
            }
            entries.extend_from_slice(&b.entries);
            rows += b.rows;
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn block_diag(a: &Matrix, b: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(a.rows + b.rows, a.cols + b.cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                out.set(i, j, a.get(i, j).clone());
            }
        }
        for i in 0..b.rows {
            for j in 0..b.cols {
                out.set(a.rows + i, a.cols + j, b.get(i, j).clone());
            }
        }
        out
    }

    /// Rows `start..start + len`.
    pub fn row_block(&self, start: usize, len: usize) -> Matrix {
        Matrix {
            rows: len,
            cols: self.cols,
            entries: self.entries[start * self.cols..(start + len) * self.cols].to_vec(),
        }
    }

    /// Columns `start..start + len`.
    pub fn column_block(&self, start: usize, len: usize) -> Matrix {
        self.select_columns(&(start..start + len).collect::<Vec<_>>())
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                out.entries[i * cols.len() + jj] = self.get(i, j).clone();
            }
        }
        out
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = rref_in_place(&mut m);
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Rank and the canonical kernel basis (one vector per free column).
    pub fn rank_and_kernel(&self) -> (usize, Vec<Vec<Scalar>>) {
        let (r, pivots) = self.rref();
        let kernel = kernel_from_rref(&r, &pivots);
        (pivots.len(), kernel)
    }

    /// Kernel basis as the columns of a `cols x k` matrix.
    pub fn kernel_matrix(&self) -> Matrix {
        let (_, k) = self.rank_and_kernel();
        Matrix::from_columns(self.cols, &k).expect("kernel vectors have matrix width")
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).fold(Scalar::zero(), |acc, i| acc + self.get(i, i))
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).expect("matrix product shape mismatch")
    }
}

fn rref_in_place(m: &mut Matrix) -> Vec<usize> {
    let (rows, cols) = m.shape();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                m.entries.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = m.get(r, c).recip();
        for j in c..cols {
            let idx = r * cols + j;
            if !m.entries[idx].is_zero() {
                m.entries[idx] = &m.entries[idx] * &inv;
            }
        }
        let support: Vec<usize> = (c..cols).filter(|&j| !m.get(r, j).is_zero()).collect();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = m.get(i, c).clone();
            if f.is_zero() {
                continue;
            }
            for &j in &support {
                let delta = &f * m.get(r, j);
                m.entries[i * cols + j] -= delta;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn kernel_from_rref(r: &Matrix, pivots: &[usize]) -> Vec<Vec<Scalar>> {
    let cols = r.cols();
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Scalar::zero(); cols];
            v[f] = Scalar::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, f).clone();
            }
            v
        })
        .collect()
}

/// Some `x` with `a * x = b`, free variables set to zero; `None` when the
/// system is inconsistent.
pub fn solve(a: &Matrix, b: &Matrix) -> Result<Option<Matrix>> {
    if a.rows() != b.rows() {
        return Err(Error::Shape(format!(
            "solve: a has {} rows but b has {}",
            a.rows(),
            b.rows()
        )));
    }
    let aug = Matrix::hstack(a.rows(), &[a, b])?;
    let (r, pivots) = aug.rref();
    if pivots.iter().any(|&p| p >= a.cols()) {
        return Ok(None);
    }
    let mut x = Matrix::zeros(a.cols(), b.cols());
    for (i, &p) in pivots.iter().enumerate() {
        for j in 0..b.cols() {
            x.set(p, j, r.get(i, a.cols() + j).clone());
        }
    }
    Ok(Some(x))
}

/// Complement coordinates of a subspace and the projection onto them.
///
/// The complement indices are the non-pivot coordinates of the echelonized
/// subspace. The projection is `complement.len() x ambient_dim`, kills the
/// subspace and restricts to the identity on the complement coordinates.
pub fn quotient_basis(subspace: &[Vec<Scalar>], ambient_dim: usize) -> Result<(Vec<usize>, Matrix)> {
    let sub = Matrix::from_rows(subspace.to_vec(), ambient_dim)?;
    let (r, pivots) = sub.rref();
    if pivots.len() != subspace.len() {
        return Err(Error::DependentVectors);
    }
    let mut is_pivot = vec![false; ambient_dim];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let complement: Vec<usize> = (0..ambient_dim).filter(|&c| !is_pivot[c]).collect();
    let mut proj = Matrix::zeros(complement.len(), ambient_dim);
    for (k, &c) in complement.iter().enumerate() {
        proj.set(k, c, Scalar::one());
        // reducing e_{p_i} by row i leaves -r[i][c] on each free coordinate
        for (i, &p) in pivots.iter().enumerate() {
            let v = r.get(i, c);
            if !v.is_zero() {
                proj.set(k, p, -v.clone());
            }
        }
    }
    Ok((complement, proj))
}

/// Row echelon form built one sparse row at a time.
///
/// Suited to large, very sparse homogeneous systems such as the
/// commuting-square constraints of a Hom space. The kernel basis it returns
/// is the same canonical basis that [`Matrix::rank_and_kernel`] produces for
/// the dense matrix with these rows.
#[derive(Debug, Clone)]
pub struct SparseEchelon {
    cols: usize,
    pivots: BTreeMap<usize, Vec<(usize, Scalar)>>,
}

impl SparseEchelon {
    pub fn new(cols: usize) -> Self {
        SparseEchelon {
            cols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds a row given as `(column, value)` pairs (duplicates are summed).
    /// Returns whether the row was independent of the rows seen so far.
    pub fn insert(&mut self, row: impl IntoIterator<Item = (usize, Scalar)>) -> bool {
        let mut work: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (c, v) in row {
            assert!(c < self.cols, "column {c} out of range");
            if v.is_zero() {
                continue;
            }
            let e = work.entry(c).or_insert_with(Scalar::zero);
            *e += v;
            if e.is_zero() {
                work.remove(&c);
            }
        }
        loop {
            let Some((&lead, lead_val)) = work.iter().next() else {
                return false;
            };
            match self.pivots.get(&lead) {
                Some(prow) => {
                    let f = lead_val.clone();
                    for (c, v) in prow {
                        let e = work.entry(*c).or_insert_with(Scalar::zero);
                        *e -= &f * v;
                        if e.is_zero() {
                            work.remove(c);
                        }
                    }
                }
                None => {
                    let inv = lead_val.recip();
                    let row: Vec<(usize, Scalar)> =
                        work.into_iter().map(|(c, v)| (c, v * &inv)).collect();
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
    }

    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.cols).filter(|c| !self.pivots.contains_key(c)).collect()
    }

    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        self.free_columns()
            .into_iter()
            .map(|f| {
                let mut x = vec![Scalar::zero(); self.cols];
                x[f] = Scalar::one();
                for (&p, row) in self.pivots.iter().rev() {
                    let mut acc = Scalar::zero();
                    for (c, v) in row.iter().skip(1) {
                        if !x[*c].is_zero() {
                            acc += v * &x[*c];
                        }
                    }
                    x[p] = -acc;
                }
                x
            })
            .collect()
    }
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Compact display used in reports: `"-3/2"`, `"0"`.
pub fn fmt_scalar_short(s: &Scalar) -> String {
    if s.is_integer() {
        s.numer().to_string()
    } else {
        format!("{}{}/{}", if s.is_negative() { "-" } else { "" }, s.numer().abs(), s.denom())
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.rows))?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(scalar_to_string).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<Vec<String>> = Vec::deserialize(deserializer)?;
        let cols = rows.first().map_or(0, Vec::len);
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_scalar(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()
            .map_err(de::Error::custom)?;
        Matrix::from_rows(parsed, cols).map_err(de::Error::custom)
    }
}
