//! Finite-dimensional algebras given by structure constants.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffla::{self, check_prime, FpMatrix, Subspace};

/// An associative unital algebra with basis `b_0..b_{dim-1}` and
/// `b_i b_j = sum_k table[i][j][k] b_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScAlgebra {
    p: u64,
    dim: usize,
    labels: Vec<String>,
    table: Vec<u64>,
    unit: Vec<u64>,
}

impl ScAlgebra {
    /// `table` is indexed `[(i * dim + j) * dim + k]`. Associativity and
    /// the unit laws are checked on all basis triples.
    pub fn new(p: u64, labels: Vec<String>, table: Vec<u64>, unit: Vec<u64>) -> Result<Self> {
        check_prime(p)?;
        let dim = labels.len();
        if table.len() != dim * dim * dim || unit.len() != dim {
            return Err(Error::dim("structure constant table has the wrong size"));
        }
        let a = ScAlgebra {
            p,
            dim,
            labels,
            table: table.into_iter().map(|v| v % p).collect(),
            unit: unit.into_iter().map(|v| v % p).collect(),
        };
        if !a.is_associative() {
            return Err(Error::Invalid("structure constants are not associative".into()));
        }
        if !a.unit_laws_hold() {
            return Err(Error::Invalid("unit laws fail".into()));
        }
        Ok(a)
    }

    pub(crate) fn from_parts_unchecked(
        p: u64,
        labels: Vec<String>,
        table: Vec<u64>,
        unit: Vec<u64>,
    ) -> Self {
        let dim = labels.len();
        debug_assert_eq!(table.len(), dim * dim * dim);
        ScAlgebra {
            p,
            dim,
            labels,
            table,
            unit,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[u64] {
        &self.unit
    }

    pub fn table(&self) -> &[u64] {
        &self.table
    }

    /// Coordinates of `b_i b_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[u64] {
        let s = (i * self.dim + j) * self.dim;
        &self.table[s..s + self.dim]
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let p = self.p;
        let mut out = vec![0u64; self.dim];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let xy = ffla::mul(x, y, p);
                for (o, &c) in out.iter_mut().zip(self.basis_product(i, j)) {
                    if c != 0 {
                        *o = (*o + xy * c) % p;
                    }
                }
            }
        }
        out
    }

    pub fn basis_element(&self, i: usize) -> Vec<u64> {
        let mut v = vec![0u64; self.dim];
        v[i] = 1;
        v
    }

    /// Matrix of left multiplication by `b_i`; column j holds `b_i b_j`.
    pub fn left_mult_matrix(&self, i: usize) -> FpMatrix {
        let mut m = FpMatrix::zeros(self.p, self.dim, self.dim);
        for j in 0..self.dim {
            for (k, &c) in self.basis_product(i, j).iter().enumerate() {
                m.set(k, j, c);
            }
        }
        m
    }

    pub fn left_mult_by(&self, a: &[u64]) -> FpMatrix {
        let mut m = FpMatrix::zeros(self.p, self.dim, self.dim);
        for (i, &c) in a.iter().enumerate() {
            if c != 0 {
                m.add_scaled(&self.left_mult_matrix(i), c);
            }
        }
        m
    }

    pub fn is_associative(&self) -> bool {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j).to_vec();
                for k in 0..n {
                    let left = self.mul(&ij, &self.basis_element(k));
                    let right = self.mul(&self.basis_element(i), self.basis_product(j, k));
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn unit_laws_hold(&self) -> bool {
        (0..self.dim).all(|i| {
            let b = self.basis_element(i);
            self.mul(&self.unit, &b) == b && self.mul(&b, &self.unit) == b
        })
    }

    /// The opposite algebra: same basis, `b_i * b_j = b_j b_i`.
    pub fn opposite(&self) -> ScAlgebra {
        let n = self.dim;
        let mut table = vec![0u64; n * n * n];
        for i in 0..n {
            for j in 0..n {
                let s = (i * n + j) * n;
                table[s..s + n].copy_from_slice(self.basis_product(j, i));
            }
        }
        ScAlgebra::from_parts_unchecked(self.p, self.labels.clone(), table, self.unit.clone())
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    pub fn is_idempotent(&self, e: &[u64]) -> bool {
        self.mul(e, e) == e
    }

    /// Two-sided ideal generated by the given elements.
    pub fn two_sided_ideal(&self, generators: &[Vec<u64>]) -> Subspace {
        let left: Vec<FpMatrix> = (0..self.dim).map(|i| self.left_mult_matrix(i)).collect();
        let right: Vec<FpMatrix> = (0..self.dim).map(|i| self.right_mult_matrix(i)).collect();
        let ops: Vec<FpMatrix> = left.into_iter().chain(right).collect();
        ffla::spin(self.p, self.dim, generators, &ops)
    }

    /// Matrix of right multiplication by `b_i`; column j holds `b_j b_i`.
    pub fn right_mult_matrix(&self, i: usize) -> FpMatrix {
        let mut m = FpMatrix::zeros(self.p, self.dim, self.dim);
        for j in 0..self.dim {
            for (k, &c) in self.basis_product(j, i).iter().enumerate() {
                m.set(k, j, c);
            }
        }
        m
    }

    pub fn is_two_sided_ideal(&self, ideal: &Subspace) -> bool {
        let gens = ideal.basis_vectors();
        self.two_sided_ideal(&gens) == *ideal
    }

    /// Quotient by a two-sided ideal. The quotient basis is the images of
    /// the standard basis vectors at the non-pivot columns of `ideal`;
    /// the returned matrix projects A onto those coordinates.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(ScAlgebra, FpMatrix)> {
        if ideal.ambient_dim() != self.dim || ideal.modulus() != self.p {
            return Err(Error::dim("ideal lives in a different space"));
        }
        if !self.is_two_sided_ideal(ideal) {
            return Err(Error::Precondition("not a two-sided ideal".into()));
        }
        let keep = ideal.non_pivots();
        let m = keep.len();
        let project = |v: &[u64]| -> Vec<u64> {
            let r = ideal.reduce(v);
            keep.iter().map(|&c| r[c]).collect()
        };
        let mut table = vec![0u64; m * m * m];
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                let s = (a * m + b) * m;
                table[s..s + m].copy_from_slice(&project(self.basis_product(i, j)));
            }
        }
        let unit = project(&self.unit);
        let labels = keep.iter().map(|&c| self.labels[c].clone()).collect();
        let mut proj = FpMatrix::zeros(self.p, m, self.dim);
        for c in 0..self.dim {
            for (r, v) in project(&self.basis_element(c)).into_iter().enumerate() {
                proj.set(r, c, v);
            }
        }
        Ok((ScAlgebra::from_parts_unchecked(self.p, labels, table, unit), proj))
    }
}
