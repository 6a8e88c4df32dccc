//! Subspaces of F_p^d in canonical reduced row-echelon form.

use std::cmp::Ordering;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::field;
use super::matrix::FpMatrix;
use crate::error::{Error, Result};

/// A subspace of F_p^d. Two subspaces are equal iff their RREF bases are
/// entry-identical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: FpMatrix,
    pivots: Vec<usize>,
}

/// Result of [`Subspace::ops`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceOps {
    pub sum: Subspace,
    pub intersection: Subspace,
    pub contains: bool,
}

impl Subspace {
    pub fn zero(p: u64, d: usize) -> Self {
        Subspace {
            basis: FpMatrix::zeros(p, 0, d),
            pivots: Vec::new(),
        }
    }

    pub fn full(p: u64, d: usize) -> Self {
        Subspace {
            basis: FpMatrix::identity(p, d),
            pivots: (0..d).collect(),
        }
    }

    /// Span of the rows of `m`.
    pub fn from_matrix_rows(m: &FpMatrix) -> Self {
        let r = m.rref();
        Subspace {
            basis: r.matrix,
            pivots: r.pivots,
        }
    }

    pub fn from_vectors(p: u64, d: usize, vectors: &[Vec<u64>]) -> Self {
        Subspace::from_matrix_rows(&FpMatrix::from_row_vecs(p, d, vectors))
    }

    /// Span of integer vectors, reduced mod `p`.
    pub fn span(p: u64, d: usize, vectors: &[Vec<i64>]) -> Result<Self> {
        let flat: Vec<i64> = vectors.iter().flatten().copied().collect();
        if vectors.iter().any(|v| v.len() != d) {
            return Err(Error::dim("vector length differs from ambient dimension"));
        }
        Ok(Subspace::from_matrix_rows(&FpMatrix::new(
            p,
            vectors.len(),
            d,
            &flat,
        )?))
    }

    /// Wrap a matrix that is already in RREF without zero rows.
    pub(crate) fn from_rref_unchecked(basis: FpMatrix, pivots: Vec<usize>) -> Self {
        debug_assert_eq!(basis.rows(), pivots.len());
        Subspace { basis, pivots }
    }

    pub fn modulus(&self) -> u64 {
        self.basis.modulus()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    pub fn basis(&self) -> &FpMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<u64>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that are not pivots; the standard basis vectors at these
    /// positions span a complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_piv = vec![false; self.ambient_dim()];
        for &c in &self.pivots {
            is_piv[c] = true;
        }
        (0..self.ambient_dim()).filter(|&c| !is_piv[c]).collect()
    }

    fn compatible(&self, other: &Subspace) -> Result<()> {
        if self.modulus() != other.modulus() {
            return Err(Error::ModulusMismatch(self.modulus(), other.modulus()));
        }
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::dim(format!(
                "ambient dimensions {} and {}",
                self.ambient_dim(),
                other.ambient_dim()
            )));
        }
        Ok(())
    }

    /// Subtract the pivot combination from `v`, leaving the canonical residue.
    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        let p = self.modulus();
        let mut out = v.to_vec();
        for (r, &c) in self.pivots.iter().enumerate() {
            let f = out[c];
            if f == 0 {
                continue;
            }
            let nf = p - f;
            for (o, &b) in out.iter_mut().zip(self.basis.row(r)) {
                if b != 0 {
                    *o = (*o + nf * b) % p;
                }
            }
        }
        out
    }

    pub fn contains_vector(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Coordinates of `v` with respect to the RREF basis, if `v` lies in the
    /// subspace. They are simply the entries of `v` at the pivot columns.
    pub fn coordinates(&self, v: &[u64]) -> Option<Vec<u64>> {
        self.contains_vector(v)
            .then(|| self.pivots.iter().map(|&c| v[c]).collect())
    }

    /// Vector with the given coordinates in the RREF basis.
    pub fn combine(&self, coords: &[u64]) -> Vec<u64> {
        assert_eq!(coords.len(), self.dim());
        let p = self.modulus();
        let mut out = vec![0u64; self.ambient_dim()];
        for (r, &c) in coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (o, &b) in out.iter_mut().zip(self.basis.row(r)) {
                *o = (*o + c * b) % p;
            }
        }
        out
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        self.modulus() == other.modulus()
            && self.ambient_dim() == other.ambient_dim()
            && (0..other.dim()).all(|r| self.contains_vector(other.basis.row(r)))
    }

    pub fn try_contains(&self, other: &Subspace) -> Result<bool> {
        self.compatible(other)?;
        Ok(self.contains(other))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.compatible(other)?;
        Ok(Subspace::from_matrix_rows(&self.basis.vstack(&other.basis)))
    }

    /// Intersection via the kernel of the stacked system `x·A = y·B`.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.compatible(other)?;
        let (a, b) = (self.dim(), other.dim());
        if a == 0 || b == 0 {
            return Ok(Subspace::zero(self.modulus(), self.ambient_dim()));
        }
        let stacked = self.basis.vstack(&other.basis);
        // columns of stacked^T are the basis vectors; kernel gives relations.
        let rel = stacked.transpose().kernel();
        let p = self.modulus();
        let vectors: Vec<Vec<u64>> = rel
            .basis_vectors()
            .into_iter()
            .map(|coef| self.combine(&coef[..a]))
            .collect();
        Ok(Subspace::from_vectors(p, self.ambient_dim(), &vectors))
    }

    pub fn ops(&self, other: &Subspace) -> Result<SubspaceOps> {
        Ok(SubspaceOps {
            sum: self.sum(other)?,
            intersection: self.intersection(other)?,
            contains: self.try_contains(other)?,
        })
    }

    /// Image under a linear map given as a matrix acting on column vectors.
    pub fn image_under(&self, m: &FpMatrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient_dim());
        let vectors: Vec<Vec<u64>> = (0..self.dim()).map(|r| m.apply(self.basis.row(r))).collect();
        Subspace::from_vectors(self.modulus(), m.rows(), &vectors)
    }

    /// True when every operator maps the subspace into itself.
    pub fn is_invariant(&self, ops: &[FpMatrix]) -> bool {
        ops.iter().all(|op| {
            (0..self.dim()).all(|r| self.contains_vector(&op.apply(self.basis.row(r))))
        })
    }

    /// `{f in (F_p^d)* : f(u) = 0 for all u in self}`, with the dual space
    /// identified with F_p^d via the standard pairing.
    pub fn annihilator(&self) -> Subspace {
        if self.dim() == 0 {
            return Subspace::full(self.modulus(), self.ambient_dim());
        }
        self.basis.kernel()
    }

    /// Coordinates of the subspace inside a larger subspace `outer`, as a
    /// subspace of F_p^{dim outer}.
    pub fn relative_to(&self, outer: &Subspace) -> Result<Subspace> {
        self.compatible(outer)?;
        let mut coords = Vec::with_capacity(self.dim());
        for r in 0..self.dim() {
            coords.push(
                outer
                    .coordinates(self.basis.row(r))
                    .ok_or_else(|| Error::Precondition("subspace not contained in outer".into()))?,
            );
        }
        Ok(Subspace::from_vectors(self.modulus(), outer.dim(), &coords))
    }
}

impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.modulus(), self.ambient_dim(), self.dim())
            .cmp(&(other.modulus(), other.ambient_dim(), other.dim()))
            .then_with(|| self.pivots.cmp(&other.pivots))
            .then_with(|| self.basis.data().cmp(other.basis.data()))
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Serialize, Deserialize)]
struct SubspaceRepr {
    p: u64,
    ambient_dim: usize,
    basis: Vec<Vec<i64>>,
}

impl Serialize for Subspace {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SubspaceRepr {
            p: self.modulus(),
            ambient_dim: self.ambient_dim(),
            basis: self.basis.to_i64_rows(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Subspace {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = SubspaceRepr::deserialize(d)?;
        Subspace::span(r.p, r.ambient_dim, &r.basis).map_err(serde::de::Error::custom)
    }
}

/// Incrementally maintained RREF basis.
#[derive(Clone, Debug)]
pub struct EchelonBuilder {
    p: u64,
    d: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl EchelonBuilder {
    pub fn new(p: u64, d: usize) -> Self {
        EchelonBuilder {
            p,
            d,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_subspace(s: &Subspace) -> Self {
        EchelonBuilder {
            p: s.modulus(),
            d: s.ambient_dim(),
            rows: s.basis_vectors(),
            pivots: s.pivots.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [u64]) {
        let p = self.p;
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let f = v[c];
            if f == 0 {
                continue;
            }
            let nf = p - f;
            for (o, &b) in v.iter_mut().zip(row) {
                if b != 0 {
                    *o = (*o + nf * b) % p;
                }
            }
        }
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Insert `v`; returns the normalized new basis row when the span grew.
    pub fn insert(&mut self, v: &[u64]) -> Option<Vec<u64>> {
        assert_eq!(v.len(), self.d);
        let p = self.p;
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let c = w.iter().position(|&x| x != 0)?;
        let inv = field::inv(w[c], p);
        for x in w.iter_mut() {
            *x = field::mul(*x, inv, p);
        }
        for row in self.rows.iter_mut() {
            let f = row[c];
            if f == 0 {
                continue;
            }
            let nf = p - f;
            for (o, &b) in row.iter_mut().zip(&w) {
                if b != 0 {
                    *o = (*o + nf * b) % p;
                }
            }
        }
        self.rows.push(w.clone());
        self.pivots.push(c);
        Some(w)
    }

    pub fn finish(self) -> Subspace {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        let rows: Vec<Vec<u64>> = order.iter().map(|&i| self.rows[i].clone()).collect();
        let pivots: Vec<usize> = order.iter().map(|&i| self.pivots[i]).collect();
        Subspace::from_rref_unchecked(FpMatrix::from_row_vecs(self.p, self.d, &rows), pivots)
    }
}

/// Smallest subspace containing the rows of `vectors` and stable under all
/// `operators` (square matrices acting on column vectors).
pub fn invariant_closure(vectors: &FpMatrix, operators: &[FpMatrix]) -> Result<Subspace> {
    let d = vectors.cols();
    let p = vectors.modulus();
    for op in operators {
        if op.rows() != d || op.cols() != d {
            return Err(Error::dim(format!(
                "operator {}x{} on ambient dimension {d}",
                op.rows(),
                op.cols()
            )));
        }
        if op.modulus() != p {
            return Err(Error::ModulusMismatch(op.modulus(), p));
        }
    }
    Ok(spin(p, d, &vectors.row_vecs(), operators))
}

/// Closure of a list of vectors under operators; shapes are trusted.
pub(crate) fn spin(p: u64, d: usize, seeds: &[Vec<u64>], operators: &[FpMatrix]) -> Subspace {
    let mut eb = EchelonBuilder::new(p, d);
    let mut queue: Vec<Vec<u64>> = Vec::new();
    for v in seeds {
        if let Some(w) = eb.insert(v) {
            queue.push(w);
        }
    }
    while let Some(v) = queue.pop() {
        if eb.dim() == d {
            break;
        }
        for op in operators {
            if let Some(w) = eb.insert(&op.apply(&v)) {
                queue.push(w);
            }
        }
    }
    eb.finish()
}
