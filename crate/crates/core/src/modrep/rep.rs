//! Representations of bound quivers.

use std::sync::Arc;

use super::module::{DirectSum, Module};
use super::scmod::ScModule;
use crate::error::{Error, Result};
use crate::ffla::{self, FpMatrix, Subspace};
use crate::qalg::{BoundAlgebra, Path};

/// A representation: one space per vertex, one matrix per arrow
/// (target dim × source dim). The total space is the concatenation of the
/// vertex spaces in vertex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    algebra: Arc<BoundAlgebra>,
    dims: Vec<usize>,
    maps: Vec<FpMatrix>,
}

impl Representation {
    pub fn new(algebra: Arc<BoundAlgebra>, dims: Vec<usize>, maps: Vec<FpMatrix>) -> Result<Self> {
        let q = algebra.quiver();
        if dims.len() != q.num_vertices() || maps.len() != q.num_arrows() {
            return Err(Error::dim("need one dimension per vertex and one matrix per arrow"));
        }
        for (arrow, m) in q.arrows().iter().zip(&maps) {
            if m.modulus() != algebra.modulus() {
                return Err(Error::ModulusMismatch(m.modulus(), algebra.modulus()));
            }
            if m.rows() != dims[arrow.target] || m.cols() != dims[arrow.source] {
                return Err(Error::dim(format!(
                    "arrow {} needs a {}x{} matrix, got {}x{}",
                    arrow.label,
                    dims[arrow.target],
                    dims[arrow.source],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let rep = Representation {
            algebra,
            dims,
            maps,
        };
        for (i, rel) in rep.algebra.relations().iter().enumerate() {
            let (s, t) = (rel.source(), rep.algebra.quiver().target(&rel.terms()[0].0));
            let mut acc = FpMatrix::zeros(rep.modulus(), rep.dims[t], rep.dims[s]);
            for (path, c) in rel.terms() {
                acc.add_scaled(&rep.path_map(path), ffla::reduce(*c, rep.modulus()));
            }
            if !acc.is_zero() {
                return Err(Error::Invalid(format!("relation {i} does not vanish on the representation")));
            }
        }
        Ok(rep)
    }

    /// Matrices given per arrow label.
    pub fn from_labeled(
        algebra: Arc<BoundAlgebra>,
        dims: Vec<usize>,
        maps: &[(String, FpMatrix)],
    ) -> Result<Self> {
        let q = algebra.quiver();
        let mut ordered: Vec<Option<FpMatrix>> = vec![None; q.num_arrows()];
        for (label, m) in maps {
            let a = q.arrow(label)?;
            ordered[a] = Some(m.clone());
        }
        let p = algebra.modulus();
        let maps = ordered
            .into_iter()
            .zip(q.arrows())
            .map(|(m, arrow)| m.unwrap_or_else(|| FpMatrix::zeros(p, dims[arrow.target], dims[arrow.source])))
            .collect();
        Representation::new(algebra, dims, maps)
    }

    pub fn zero(algebra: Arc<BoundAlgebra>) -> Self {
        let nv = algebra.quiver().num_vertices();
        let p = algebra.modulus();
        let maps = vec![FpMatrix::zeros(p, 0, 0); algebra.quiver().num_arrows()];
        Representation {
            algebra,
            dims: vec![0; nv],
            maps,
        }
    }

    pub fn algebra(&self) -> &Arc<BoundAlgebra> {
        &self.algebra
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn maps(&self) -> &[FpMatrix] {
        &self.maps
    }

    pub fn map(&self, arrow: usize) -> &FpMatrix {
        &self.maps[arrow]
    }

    pub fn map_by_label(&self, label: &str) -> Result<&FpMatrix> {
        Ok(&self.maps[self.algebra.quiver().arrow(label)?])
    }

    pub fn offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.dims.len());
        let mut s = 0;
        for &d in &self.dims {
            off.push(s);
            s += d;
        }
        off
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// The map of a path: target dim × source dim.
    pub fn path_map(&self, path: &Path) -> FpMatrix {
        let q = self.algebra.quiver();
        let s = q.source(path);
        let mut m = FpMatrix::identity(self.modulus(), self.dims[s]);
        for &a in path.arrows() {
            m = self.maps[a].mul(&m);
        }
        m
    }

    /// Total-space operator of a path.
    pub fn path_operator(&self, path: &Path) -> FpMatrix {
        let q = self.algebra.quiver();
        let off = self.offsets();
        let mut op = FpMatrix::zeros(self.modulus(), self.total_dim(), self.total_dim());
        op.set_block(off[q.target(path)], off[q.source(path)], &self.path_map(path));
        op
    }

    pub fn vertex_projection(&self, v: usize) -> FpMatrix {
        self.path_operator(&Path::trivial(v))
    }

    pub fn arrow_operator(&self, a: usize) -> FpMatrix {
        let arrow = &self.algebra.quiver().arrows()[a];
        let off = self.offsets();
        let mut op = FpMatrix::zeros(self.modulus(), self.total_dim(), self.total_dim());
        op.set_block(off[arrow.target], off[arrow.source], &self.maps[a]);
        op
    }

    pub fn arrow_operators(&self) -> Vec<FpMatrix> {
        (0..self.maps.len()).map(|a| self.arrow_operator(a)).collect()
    }

    /// Operator of an algebra element given in basis coordinates.
    pub fn element_operator(&self, coords: &[u64]) -> FpMatrix {
        let n = self.total_dim();
        let mut op = FpMatrix::zeros(self.modulus(), n, n);
        for (b, &c) in self.algebra.basis().iter().zip(coords) {
            if c != 0 {
                op.add_scaled(&self.path_operator(b), c);
            }
        }
        op
    }

    /// The same module over the structure-constant algebra of `Λ`.
    pub fn to_sc_module(&self) -> ScModule {
        let action = self.algebra.basis().iter().map(|b| self.path_operator(b)).collect();
        ScModule::new_unchecked(self.algebra.sc().clone(), self.total_dim(), action)
    }

    /// Dimension vector of an invariant subspace of the total space.
    pub fn dimension_vector_of(&self, u: &Subspace) -> Vec<usize> {
        let off = self.offsets();
        (0..self.dims.len())
            .map(|v| {
                let cols: Vec<usize> = (off[v]..off[v] + self.dims[v]).collect();
                u.basis().select_cols(&cols).rank()
            })
            .collect()
    }

    /// Subspace of the total space spanned by the given subspaces of the
    /// vertex spaces.
    pub fn embed_parts(&self, parts: &[Subspace]) -> Subspace {
        let off = self.offsets();
        let n = self.total_dim();
        let mut rows = Vec::new();
        for (v, part) in parts.iter().enumerate() {
            for r in part.basis_vectors() {
                let mut row = vec![0u64; n];
                row[off[v]..off[v] + self.dims[v]].copy_from_slice(&r);
                rows.push(row);
            }
        }
        Subspace::from_vectors(self.modulus(), n, &rows)
    }

    /// Component of a total-space subspace at vertex v (for subspaces
    /// stable under the vertex projections).
    pub fn part_at(&self, u: &Subspace, v: usize) -> Subspace {
        let off = self.offsets();
        let cols: Vec<usize> = (off[v]..off[v] + self.dims[v]).collect();
        Subspace::from_matrix_rows(&u.basis().select_cols(&cols))
    }

    pub fn simple(algebra: Arc<BoundAlgebra>, v: usize) -> Result<Self> {
        let nv = algebra.quiver().num_vertices();
        if v >= nv {
            return Err(Error::Invalid(format!("vertex {v} out of range")));
        }
        let dims = (0..nv).map(|w| usize::from(w == v)).collect();
        Representation::from_labeled(algebra, dims, &[])
    }
}

impl Module for Representation {
    fn modulus(&self) -> u64 {
        self.algebra.modulus()
    }

    fn dim(&self) -> usize {
        self.total_dim()
    }

    fn generators(&self) -> Vec<FpMatrix> {
        let nv = self.dims.len();
        let mut g: Vec<FpMatrix> = (0..nv).map(|v| self.vertex_projection(v)).collect();
        g.extend(self.arrow_operators());
        g
    }

    fn same_algebra(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra
    }

    /// The vertex projections must be diagonal with contiguous blocks in
    /// vertex order.
    fn with_generators(&self, dim: usize, ops: Vec<FpMatrix>) -> Result<Self> {
        let nv = self.dims.len();
        if ops.len() != nv + self.maps.len() {
            return Err(Error::dim("wrong number of generators"));
        }
        let p = self.modulus();
        let mut dims = Vec::with_capacity(nv);
        let mut start = 0;
        for e in &ops[..nv] {
            let d = (0..dim).filter(|&i| e.get(i, i) == 1).count();
            let mut expect = FpMatrix::zeros(p, dim, dim);
            for i in start..start + d {
                expect.set(i, i, 1);
            }
            if *e != expect {
                return Err(Error::Invalid("basis is not adapted to the vertex decomposition".into()));
            }
            dims.push(d);
            start += d;
        }
        if start != dim {
            return Err(Error::dim("vertex blocks do not fill the space"));
        }
        let rep = Representation {
            algebra: self.algebra.clone(),
            dims,
            maps: Vec::new(),
        };
        let off = rep.offsets();
        let mut maps = Vec::with_capacity(self.maps.len());
        for (arrow, op) in self.algebra.quiver().arrows().iter().zip(&ops[nv..]) {
            let block = op.block(off[arrow.target], off[arrow.source], rep.dims[arrow.target], rep.dims[arrow.source]);
            maps.push(block);
        }
        let rep = Representation::new(self.algebra.clone(), rep.dims, maps)?;
        if rep.arrow_operators() != ops[nv..] {
            return Err(Error::Invalid("arrow operator leaves its block".into()));
        }
        Ok(rep)
    }

    fn direct_sum(&self, other: &Self) -> Result<DirectSum<Self>> {
        if !self.same_algebra(other) {
            return Err(Error::Precondition("modules over different algebras".into()));
        }
        let p = self.modulus();
        let dims: Vec<usize> = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a.block_diag(b)).collect();
        let module = Representation {
            algebra: self.algebra.clone(),
            dims,
            maps,
        };
        let off = module.offsets();
        let (n, n1, n2) = (module.total_dim(), self.total_dim(), other.total_dim());
        let mut i1 = FpMatrix::zeros(p, n, n1);
        let mut i2 = FpMatrix::zeros(p, n, n2);
        let (o1, o2) = (self.offsets(), other.offsets());
        for v in 0..self.dims.len() {
            for k in 0..self.dims[v] {
                i1.set(off[v] + k, o1[v] + k, 1);
            }
            for k in 0..other.dims[v] {
                i2.set(off[v] + self.dims[v] + k, o2[v] + k, 1);
            }
        }
        Ok(DirectSum {
            module,
            projections: vec![i1.transpose(), i2.transpose()],
            inclusions: vec![i1, i2],
        })
    }

    fn zero_module(&self) -> Self {
        Representation::zero(self.algebra.clone())
    }
}
