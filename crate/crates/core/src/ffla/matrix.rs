//! Dense row-major matrices over F_p.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::field::{self, check_prime};
use super::subspace::Subspace;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

/// Output of [`FpMatrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    /// The nonzero rows of the reduced row-echelon form.
    pub matrix: FpMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl FpMatrix {
    /// Build from signed integer entries, reducing mod `p`.
    pub fn new(p: u64, rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        check_prime(p)?;
        if entries.len() != rows * cols {
            return Err(Error::dim(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(FpMatrix {
            p,
            rows,
            cols,
            data: entries.iter().map(|&v| field::reduce(v, p)).collect(),
        })
    }

    pub fn from_rows(p: u64, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::dim("ragged rows"));
        }
        let flat: Vec<i64> = rows.iter().flatten().copied().collect();
        FpMatrix::new(p, rows.len(), cols, &flat)
    }

    /// Entries must already be reduced mod `p`; `p` must be a checked prime.
    pub(crate) fn from_raw(p: u64, rows: usize, cols: usize, data: Vec<u64>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        debug_assert!(data.iter().all(|&v| v < p));
        FpMatrix { p, rows, cols, data }
    }

    pub(crate) fn from_row_vecs(p: u64, cols: usize, rows: &[Vec<u64>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            debug_assert_eq!(r.len(), cols);
            data.extend_from_slice(r);
        }
        FpMatrix::from_raw(p, rows.len(), cols, data)
    }

    /// Matrix whose columns are the given vectors.
    pub(crate) fn from_columns(p: u64, rows: usize, columns: &[Vec<u64>]) -> Self {
        let mut m = FpMatrix::zeros(p, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            for i in 0..rows {
                m.data[i * m.cols + j] = c[i];
            }
        }
        m
    }

    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        FpMatrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = FpMatrix::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn scalar(p: u64, n: usize, c: u64) -> Self {
        let mut m = FpMatrix::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = c % p;
        }
        m
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[u64] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v % self.p;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<u64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn to_i64_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|&v| v as i64).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == FpMatrix::identity(self.p, self.rows)
    }

    fn same_field(&self, other: &FpMatrix) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch(self.p, other.p));
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &FpMatrix) -> Result<FpMatrix> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::dim(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self.mul(other))
    }

    /// Product; panics on shape or modulus mismatch.
    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.p, other.p, "modulus mismatch");
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let p = self.p;
        let mut out = vec![0u64; self.rows * other.cols];
        for i in 0..self.rows {
            let orow = &mut out[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                let brow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, &b) in orow.iter_mut().zip(brow) {
                    *o = (*o + a * b) % p;
                }
            }
        }
        FpMatrix::from_raw(p, self.rows, other.cols, out)
    }

    /// Matrix-vector product `self · v`.
    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols, "shape mismatch");
        let p = self.p;
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0u64, |acc, (&a, &b)| (acc + a * b) % p)
            })
            .collect()
    }

    pub fn add(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!((self.p, self.rows, self.cols), (other.p, other.rows, other.cols));
        let p = self.p;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| field::add(a, b, p))
            .collect();
        FpMatrix::from_raw(p, self.rows, self.cols, data)
    }

    pub fn sub(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!((self.p, self.rows, self.cols), (other.p, other.rows, other.cols));
        let p = self.p;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| field::sub(a, b, p))
            .collect();
        FpMatrix::from_raw(p, self.rows, self.cols, data)
    }

    pub fn scale(&self, c: u64) -> FpMatrix {
        let p = self.p;
        let c = c % p;
        FpMatrix::from_raw(
            p,
            self.rows,
            self.cols,
            self.data.iter().map(|&a| field::mul(a, c, p)).collect(),
        )
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &FpMatrix, c: u64) {
        assert_eq!((self.p, self.rows, self.cols), (other.p, other.rows, other.cols));
        let p = self.p;
        let c = c % p;
        if c == 0 {
            return;
        }
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = (*a + c * b) % p;
        }
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut out = FpMatrix::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> FpMatrix {
        assert!(self.is_square());
        let mut acc = FpMatrix::identity(self.p, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Stack `self` above `other`.
    pub fn vstack(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.p, other.p);
        assert_eq!(self.cols, other.cols, "column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        FpMatrix::from_raw(self.p, self.rows + other.rows, self.cols, data)
    }

    /// Place `self` left of `other`.
    pub fn hstack(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.p, other.p);
        assert_eq!(self.rows, other.rows, "row mismatch");
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        FpMatrix::from_raw(self.p, self.rows, cols, data)
    }

    pub fn block_diag(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.p, other.p);
        let mut out = FpMatrix::zeros(self.p, self.rows + other.rows, self.cols + other.cols);
        out.set_block(0, 0, self);
        out.set_block(self.rows, self.cols, other);
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &FpMatrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.data[(r0 + i) * self.cols + c0 + j] = block.get(i, j);
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> FpMatrix {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols);
        let mut out = FpMatrix::zeros(self.p, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out.data[i * cols + j] = self.get(r0 + i, c0 + j);
            }
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> FpMatrix {
        let rows: Vec<Vec<u64>> = idx.iter().map(|&r| self.row(r).to_vec()).collect();
        FpMatrix::from_row_vecs(self.p, self.cols, &rows)
    }

    pub fn select_cols(&self, idx: &[usize]) -> FpMatrix {
        let mut out = FpMatrix::zeros(self.p, self.rows, idx.len());
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                out.data[r * idx.len() + j] = self.get(r, c);
            }
        }
        out
    }

    /// Row-major flattening as a single vector.
    pub fn flatten(&self) -> Vec<u64> {
        self.data.clone()
    }

    pub(crate) fn unflatten(p: u64, rows: usize, cols: usize, v: &[u64]) -> FpMatrix {
        FpMatrix::from_raw(p, rows, cols, v.to_vec())
    }

    /// In-place reduction to reduced row-echelon form; returns pivot columns.
    /// Zero rows end up at the bottom.
    pub(crate) fn rref_in_place(&mut self) -> Vec<usize> {
        let p = self.p;
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(piv) = (r..rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if piv != r {
                for j in 0..cols {
                    self.data.swap(piv * cols + j, r * cols + j);
                }
            }
            let inv = field::inv(self.data[r * cols + c], p);
            for j in c..cols {
                let v = &mut self.data[r * cols + j];
                *v = field::mul(*v, inv, p);
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = self.data[i * cols + c];
                if f == 0 {
                    continue;
                }
                let nf = p - f;
                for j in c..cols {
                    let src = self.data[r * cols + j];
                    if src != 0 {
                        let dst = &mut self.data[i * cols + j];
                        *dst = (*dst + nf * src) % p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// The unique reduced row-echelon form, with zero rows dropped.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let rank = pivots.len();
        m.data.truncate(rank * self.cols);
        m.rows = rank;
        Rref {
            matrix: m,
            rank,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Null space `{v : self · v = 0}` as a subspace of F_p^cols.
    pub fn kernel(&self) -> Subspace {
        let Rref { matrix, pivots, .. } = self.rref();
        let p = self.p;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut vectors = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![0u64; self.cols];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = field::neg(matrix.get(r, f), p);
            }
            vectors.push(v);
        }
        Subspace::from_vectors(p, self.cols, &vectors)
    }

    /// Column space as a subspace of F_p^rows.
    pub fn image(&self) -> Subspace {
        Subspace::from_matrix_rows(&self.transpose())
    }

    /// Inverse of a square matrix, if invertible.
    pub fn inverse(&self) -> Option<FpMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&FpMatrix::identity(self.p, n));
        let mut m = aug;
        let pivots = m.rref_in_place();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(m.block(0, n, n, n))
    }
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpMatrix(p={}, {}x{})[", self.p, self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{:?}", self.row(r))?;
        }
        write!(f, "]")
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    p: u64,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<i64>>,
}

impl Serialize for FpMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixRepr {
            p: self.p,
            rows: self.rows,
            cols: self.cols,
            entries: self.to_i64_rows(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FpMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = MatrixRepr::deserialize(d)?;
        let flat: Vec<i64> = r.entries.iter().flatten().copied().collect();
        if r.entries.len() != r.rows {
            return Err(serde::de::Error::custom("row count mismatch"));
        }
        FpMatrix::new(r.p, r.rows, r.cols, &flat).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: u64, rows: &[&[i64]]) -> FpMatrix {
        FpMatrix::from_rows(p, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn rref_duplicate_rows_f2() {
        let r = m(2, &[&[1, 1], &[1, 1]]).rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.matrix, m(2, &[&[1, 1]]));
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn rref_identity_f5() {
        let id = FpMatrix::identity(5, 3);
        let r = id.rref();
        assert_eq!(r.rank, 3);
        assert_eq!(r.matrix, id);
    }

    #[test]
    fn rref_hand_elimination_f5() {
        // [[2,4],[1,2]]: scale row 0 by 2^{-1} = 3 -> [1,2]; row 1 becomes zero.
        let r = m(5, &[&[2, 4], &[1, 2]]).rref();
        assert_eq!(r.matrix, m(5, &[&[1, 2]]));
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(matches!(FpMatrix::new(6, 1, 1, &[1]), Err(Error::NotPrime(6))));
        assert!(FpMatrix::new(5, 2, 2, &[1, 2, 3]).is_err());
    }

    #[test]
    fn kernel_examples() {
        let z = FpMatrix::zeros(3, 2, 3);
        assert_eq!(z.kernel().dim(), 3);
        assert_eq!(FpMatrix::identity(7, 4).kernel().dim(), 0);
        let k = m(2, &[&[1, 1]]).kernel();
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis().row(0), &[1, 1]);
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(7, &[&[1, 2], &[3, 4]]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert!(m(7, &[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn serde_roundtrip() {
        let a = m(5, &[&[1, 4, 0], &[2, 3, 1]]);
        let s = serde_json::to_string(&a).unwrap();
        let b: FpMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
    }
}
