//! Bound quiver algebras kQ/I for length-homogeneous I, with a path basis
//! computed degree by degree.

use std::collections::{BTreeMap, HashMap};
use std::ops::Range;
use std::sync::Arc;

use super::quiver::{Path, Quiver, Relation};
use super::sc::ScAlgebra;
use crate::error::{Error, Result};
use crate::ffla::{self, check_prime, FpMatrix};

/// Default longest path length explored before the input is declared
/// infinite-dimensional.
pub const DEFAULT_MAX_PATH_LEN: usize = 32;

type Sparse = Vec<(usize, u64)>;

#[derive(Clone, Debug)]
pub struct BoundAlgebra {
    p: u64,
    quiver: Quiver,
    relations: Vec<Relation>,
    basis: Vec<Path>,
    degrees: Vec<Range<usize>>,
    /// Normal forms of every path "basis element of degree l-1, then arrow".
    reductions: HashMap<Path, Sparse>,
    sc: Arc<ScAlgebra>,
}

impl PartialEq for BoundAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
            && self.quiver == other.quiver
            && self.basis == other.basis
            && self.sc == other.sc
    }
}

impl Eq for BoundAlgebra {}

pub fn build_bound_algebra(p: u64, quiver: Quiver, relations: Vec<Relation>) -> Result<BoundAlgebra> {
    BoundAlgebra::build(p, quiver, relations, DEFAULT_MAX_PATH_LEN)
}

impl BoundAlgebra {
    pub fn build(p: u64, quiver: Quiver, relations: Vec<Relation>, max_len: usize) -> Result<Self> {
        check_prime(p)?;
        let nv = quiver.num_vertices();
        let mut alg = BoundAlgebra {
            p,
            quiver,
            relations,
            basis: (0..nv).map(Path::trivial).collect(),
            degrees: vec![0..nv],
            reductions: HashMap::new(),
            sc: Arc::new(ScAlgebra::from_parts_unchecked(p, Vec::new(), Vec::new(), Vec::new())),
        };
        for len in 1.. {
            if len > max_len {
                return Err(Error::Invalid(format!(
                    "paths of length {max_len} survive the relations; the algebra is not finite-dimensional"
                )));
            }
            if !alg.add_degree(len) {
                break;
            }
        }
        alg.sc = Arc::new(alg.structure_constants());
        Ok(alg)
    }

    /// Computes the degree-`len` component; false once it vanishes.
    fn add_degree(&mut self, len: usize) -> bool {
        let p = self.p;
        let mut cands: Vec<Path> = Vec::new();
        for b in &self.basis[self.degrees[len - 1].clone()] {
            let t = self.quiver.target(b);
            for (a, arrow) in self.quiver.arrows().iter().enumerate() {
                if arrow.source == t {
                    cands.push(b.then(a));
                }
            }
        }
        if cands.is_empty() {
            return false;
        }
        // Descending order puts pivots on the largest paths, so the smallest
        // surviving paths become the representatives.
        cands.sort_by(|x, y| y.arrows.cmp(&x.arrows));
        let col: HashMap<Path, usize> =
            cands.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();

        // The degree-len slice of the ideal modulo (lower slices)·arrows is
        // spanned by b·r with b a basis path and r a relation ending the path.
        let mut rows: Vec<Vec<u64>> = Vec::new();
        for rel in &self.relations {
            let k = rel.len();
            if k > len {
                continue;
            }
            let prefixes: Vec<Path> = self.basis[self.degrees[len - k].clone()]
                .iter()
                .filter(|b| self.quiver.target(b) == rel.source())
                .cloned()
                .collect();
            for pre in prefixes {
                let mut row = vec![0u64; cands.len()];
                for (path, c) in rel.terms() {
                    let mut full = pre.clone();
                    full.arrows.extend_from_slice(&path.arrows);
                    let c = ffla::reduce(*c, p);
                    let (prefix, last) = split_last(&full);
                    for (b, v) in self.normal_form_sparse(&prefix) {
                        let j = col[&self.basis[b].then(last)];
                        row[j] = ffla::add(row[j], ffla::mul(c, v, p), p);
                    }
                }
                rows.push(row);
            }
        }
        let mut m = FpMatrix::from_row_vecs(p, cands.len(), &rows);
        let pivots = m.rref_in_place();
        let mut pivot_row = vec![None; cands.len()];
        for (r, &c) in pivots.iter().enumerate() {
            pivot_row[c] = Some(r);
        }
        let start = self.basis.len();
        let mut free: Vec<usize> = (0..cands.len()).filter(|&j| pivot_row[j].is_none()).collect();
        free.reverse();
        let mut basis_of_col = HashMap::new();
        for (i, &j) in free.iter().enumerate() {
            basis_of_col.insert(j, start + i);
            self.basis.push(cands[j].clone());
        }
        for (j, c) in cands.iter().enumerate() {
            let mut nf: Sparse = match pivot_row[j] {
                None => vec![(basis_of_col[&j], 1)],
                Some(r) => free
                    .iter()
                    .filter(|&&f| m.get(r, f) != 0)
                    .map(|&f| (basis_of_col[&f], ffla::neg(m.get(r, f), p)))
                    .collect(),
            };
            nf.sort_unstable();
            self.reductions.insert(c.clone(), nf);
        }
        self.degrees.push(start..self.basis.len());
        !free.is_empty()
    }

    fn normal_form_sparse(&self, path: &Path) -> Sparse {
        if path.arrows.is_empty() {
            return vec![(path.start, 1)];
        }
        let (prefix, last) = split_last(path);
        let mut acc: BTreeMap<usize, u64> = BTreeMap::new();
        for (b, c) in self.normal_form_sparse(&prefix) {
            // beyond the top degree the candidate was never produced: zero
            let Some(red) = self.reductions.get(&self.basis[b].then(last)) else {
                continue;
            };
            for &(k, v) in red {
                let e = acc.entry(k).or_insert(0);
                *e = ffla::add(*e, ffla::mul(c, v, self.p), self.p);
            }
        }
        acc.into_iter().filter(|&(_, v)| v != 0).collect()
    }

    fn structure_constants(&self) -> ScAlgebra {
        let n = self.basis.len();
        let mut table = vec![0u64; n * n * n];
        for (i, bi) in self.basis.iter().enumerate() {
            for (j, bj) in self.basis.iter().enumerate() {
                // b_i · b_j = "first b_j, then b_i"
                if self.quiver.target(bj) != bi.start {
                    continue;
                }
                let mut path = bj.clone();
                path.arrows.extend_from_slice(&bi.arrows);
                let s = (i * n + j) * n;
                for (k, v) in self.normal_form_sparse(&path) {
                    table[s + k] = v;
                }
            }
        }
        let mut unit = vec![0u64; n];
        for u in unit.iter_mut().take(self.quiver.num_vertices()) {
            *u = 1;
        }
        let labels = self.basis.iter().map(|b| self.quiver.path_label(b)).collect();
        ScAlgebra::from_parts_unchecked(self.p, labels, table, unit)
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Basis path representatives; the first `num_vertices` are the trivial
    /// paths in vertex order.
    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    /// Basis indices of the degree-`l` component.
    pub fn degree_range(&self, l: usize) -> Range<usize> {
        self.degrees.get(l).cloned().unwrap_or(0..0)
    }

    pub fn top_degree(&self) -> usize {
        self.degrees.iter().rposition(|r| !r.is_empty()).unwrap_or(0)
    }

    /// Normal form of a path as a dense coordinate vector.
    pub fn normal_form(&self, path: &Path) -> Vec<u64> {
        let mut v = vec![0u64; self.dim()];
        for (k, c) in self.normal_form_sparse(path) {
            v[k] = c;
        }
        v
    }

    /// Basis indices of path classes from `w` to `v`, i.e. of e_v Λ e_w.
    pub fn paths_between(&self, w: usize, v: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.basis[i].start == w && self.quiver.target(&self.basis[i]) == v)
            .collect()
    }

    pub fn idempotent(&self, v: usize) -> Vec<u64> {
        let mut e = vec![0u64; self.dim()];
        e[v] = 1;
        e
    }

    pub fn to_sc(&self) -> ScAlgebra {
        (*self.sc).clone()
    }

    pub fn sc(&self) -> &Arc<ScAlgebra> {
        &self.sc
    }

    /// Coordinates of the arrow with the given label.
    pub fn arrow_element(&self, label: &str) -> Result<Vec<u64>> {
        let a = self.quiver.arrow(label)?;
        Ok(self.normal_form(&self.quiver.path_from_arrows(vec![a])?))
    }
}

fn split_last(path: &Path) -> (Path, usize) {
    let mut prefix = path.clone();
    let last = prefix.arrows.pop().expect("nonempty path");
    (prefix, last)
}
