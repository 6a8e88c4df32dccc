//! MeatAxe: irreducibility tests, composition factors, simple modules,
//! the Jacobson radical and dimension vectors over structure-constant
//! algebras.

use std::ops::Add;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffla::{self, minimal_polynomial, FpMatrix, Subspace};
use crate::modrep::{hom_space, quotient_module, submodule, Module, ScModule};
use crate::qalg::ScAlgebra;

/// Random algebra elements tried per split before giving up.
pub const DEFAULT_TRIES: usize = 200;

const POOL_CAP: usize = 48;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible,
    /// A proper nonzero invariant subspace.
    Reducible(Subspace),
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Irreducibility::Irreducible)
    }
}

/// Random elements of the algebra generated by `ops`: random linear
/// combinations over a growing pool of products.
struct ElementSampler {
    pool: Vec<FpMatrix>,
}

impl ElementSampler {
    fn new(p: u64, dim: usize, ops: &[FpMatrix]) -> Self {
        let mut pool = vec![FpMatrix::identity(p, dim)];
        pool.extend(ops.iter().cloned());
        ElementSampler { pool }
    }

    fn next(&mut self, rng: &mut ChaCha8Rng) -> FpMatrix {
        let n = self.pool.len();
        let prod = self.pool[rng.gen_range(0..n)].mul(&self.pool[rng.gen_range(0..n)]);
        if n < POOL_CAP {
            self.pool.push(prod);
        } else {
            let slot = rng.gen_range(1..n);
            self.pool[slot] = prod;
        }
        let p = self.pool[0].modulus();
        let mut theta = self.pool[0].scale(rng.gen_range(0..p));
        for m in &self.pool[1..] {
            let c = rng.gen_range(0..p);
            if c != 0 {
                theta.add_scaled(m, c);
            }
        }
        theta
    }
}

/// Norton's irreducibility test with the dual fallback. Las Vegas: the
/// answer is always correct; `tries` bounds the random elements drawn.
pub fn split_operators(
    p: u64,
    dim: usize,
    ops: &[FpMatrix],
    rng: &mut ChaCha8Rng,
    tries: usize,
) -> Result<Irreducibility> {
    if dim <= 1 {
        return Ok(Irreducibility::Irreducible);
    }
    let transposed: Vec<FpMatrix> = ops.iter().map(|m| m.transpose()).collect();
    let mut sampler = ElementSampler::new(p, dim, ops);
    for _ in 0..tries {
        let theta = sampler.next(rng);
        let factors = minimal_polynomial(&theta).distinct_irreducible_factors(rng);
        for g in factors {
            let gt = g.eval_matrix(&theta);
            let kernel = gt.kernel();
            let v = kernel.basis().row(0).to_vec();
            let s = ffla::spin(p, dim, &[v], ops);
            if s.dim() < dim {
                return Ok(Irreducibility::Reducible(s));
            }
            if kernel.dim() == g.degree().unwrap_or(0) {
                let w = gt.transpose().kernel().basis().row(0).to_vec();
                let sd = ffla::spin(p, dim, &[w], &transposed);
                if sd.dim() < dim {
                    return Ok(Irreducibility::Reducible(sd.annihilator()));
                }
                return Ok(Irreducibility::Irreducible);
            }
        }
    }
    Err(Error::budget("irreducibility test", tries as u128 + 1, tries as u64))
}

pub fn is_irreducible<M: Module>(m: &M, seed: u64) -> Result<Irreducibility> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if m.dim() == 0 {
        return Err(Error::Precondition("the zero module is not simple".into()));
    }
    split_operators(m.modulus(), m.dim(), &m.generators(), &mut rng, DEFAULT_TRIES)
}

/// Composition factors by repeated splitting along witnesses.
pub fn composition_factors<M: Module>(m: &M, seed: u64) -> Result<Vec<M>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut stack = vec![m.clone()];
    while let Some(x) = stack.pop() {
        if x.dim() == 0 {
            continue;
        }
        match split_operators(x.modulus(), x.dim(), &x.generators(), &mut rng, DEFAULT_TRIES)? {
            Irreducibility::Irreducible => out.push(x),
            Irreducibility::Reducible(u) => {
                stack.push(quotient_module(&x, &u)?.module);
                stack.push(submodule(&x, &u)?.module);
            }
        }
    }
    Ok(out)
}

/// Isomorphism of simple modules: by Schur's lemma any nonzero map is an
/// isomorphism.
pub fn simples_isomorphic<M: Module>(s: &M, t: &M) -> Result<bool> {
    Ok(s.dim() == t.dim() && hom_space(s, t)?.dim() > 0)
}

/// Multiplicities of the registered simples.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DimensionVector(pub Vec<usize>);

impl DimensionVector {
    pub fn zeros(n: usize) -> Self {
        DimensionVector(vec![0; n])
    }

    pub fn indicator(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        DimensionVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn le(&self, other: &Self) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Add for &DimensionVector {
    type Output = DimensionVector;

    fn add(self, o: &DimensionVector) -> DimensionVector {
        assert_eq!(self.0.len(), o.0.len(), "dimension vectors of different length");
        DimensionVector(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

/// The simple modules of an algebra, in a fixed order that keys dimension
/// vectors.
#[derive(Clone, Debug)]
pub struct SimpleRegistry {
    algebra: Arc<ScAlgebra>,
    simples: Vec<ScModule>,
}

/// Deduplicated composition factors of the regular module, ordered by
/// dimension and then by first appearance.
pub fn simples_of(algebra: &Arc<ScAlgebra>, seed: u64) -> Result<SimpleRegistry> {
    let reg = ScModule::regular(algebra.clone());
    let mut simples: Vec<ScModule> = Vec::new();
    for s in composition_factors(&reg, seed)? {
        let mut seen = false;
        for t in &simples {
            if simples_isomorphic(&s, t)? {
                seen = true;
                break;
            }
        }
        if !seen {
            simples.push(s);
        }
    }
    simples.sort_by_key(|s| s.dim());
    Ok(SimpleRegistry {
        algebra: algebra.clone(),
        simples,
    })
}

impl SimpleRegistry {
    /// Registry from known simple modules (not re-derived).
    pub fn from_simples(algebra: Arc<ScAlgebra>, simples: Vec<ScModule>) -> Self {
        SimpleRegistry { algebra, simples }
    }

    pub fn algebra(&self) -> &Arc<ScAlgebra> {
        &self.algebra
    }

    pub fn simples(&self) -> &[ScModule] {
        &self.simples
    }

    pub fn len(&self) -> usize {
        self.simples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simples.is_empty()
    }

    pub fn identify(&self, s: &ScModule) -> Result<Option<usize>> {
        for (i, t) in self.simples.iter().enumerate() {
            if simples_isomorphic(s, t)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    pub fn dimension_vector(&self, m: &ScModule, seed: u64) -> Result<DimensionVector> {
        let mut dv = DimensionVector::zeros(self.simples.len());
        for f in composition_factors(m, seed)? {
            let i = self
                .identify(&f)?
                .ok_or_else(|| Error::Mismatch("composition factor matches no registered simple".into()))?;
            dv.0[i] += 1;
        }
        Ok(dv)
    }

    /// Σ multiplicity · dim(simple).
    pub fn total_dim(&self, dv: &DimensionVector) -> usize {
        dv.0.iter().zip(&self.simples).map(|(m, s)| m * s.dim()).sum()
    }

    /// Intersection of the annihilators of the simples.
    pub fn radical(&self) -> Subspace {
        let p = self.algebra.modulus();
        let n = self.algebra.dim();
        let mut columns: Vec<Vec<u64>> = vec![Vec::new(); n];
        for s in &self.simples {
            for (i, a) in s.action().iter().enumerate() {
                columns[i].extend_from_slice(a.data());
            }
        }
        let rows = columns[0].len();
        if rows == 0 {
            return Subspace::full(p, n);
        }
        let mut m = FpMatrix::zeros(p, rows, n);
        for (c, col) in columns.iter().enumerate() {
            for (r, &v) in col.iter().enumerate() {
                m.set(r, c, v);
            }
        }
        m.kernel()
    }
}

/// Jacobson radical as the intersection of the annihilators of all simples.
pub fn algebra_radical(algebra: &Arc<ScAlgebra>, seed: u64) -> Result<Subspace> {
    Ok(simples_of(algebra, seed)?.radical())
}

/// Powers J, J², … of a two-sided ideal until they vanish; `None` if they
/// stabilize at a nonzero ideal.
pub fn nilpotency_index(algebra: &ScAlgebra, ideal: &Subspace) -> Option<usize> {
    let p = algebra.modulus();
    let n = algebra.dim();
    let gens = ideal.basis_vectors();
    let mut power = ideal.clone();
    let mut k = 1;
    while !power.is_zero() {
        let mut rows = Vec::new();
        for j in &gens {
            for x in power.basis_vectors() {
                rows.push(algebra.mul(j, &x));
            }
        }
        let next = Subspace::from_vectors(p, n, &rows);
        if next == power {
            return None;
        }
        power = next;
        k += 1;
    }
    Some(k - 1)
}

/// Checks that `radical` is nilpotent and the quotient by it has zero radical.
pub fn verify_radical(algebra: &Arc<ScAlgebra>, radical: &Subspace, seed: u64) -> Result<()> {
    if nilpotency_index(algebra, radical).is_none() {
        return Err(Error::Mismatch("radical is not nilpotent".into()));
    }
    let (q, _) = algebra.quotient(radical)?;
    let q = Arc::new(q);
    if !algebra_radical(&q, seed)?.is_zero() {
        return Err(Error::Mismatch("quotient by the radical is not semisimple".into()));
    }
    Ok(())
}

/// Whether the algebra is local: one simple S with dim S = dim A − dim J.
pub fn is_local(algebra: &Arc<ScAlgebra>, seed: u64) -> Result<bool> {
    let reg = simples_of(algebra, seed)?;
    let j = reg.radical();
    Ok(reg.len() == 1 && reg.simples[0].dim() == algebra.dim() - j.dim())
}

/// The subalgebra of dim × dim matrices generated by `ops`, with its
/// natural module.
pub fn enveloping_algebra(p: u64, dim: usize, ops: &[FpMatrix]) -> Result<(Arc<ScAlgebra>, ScModule)> {
    for op in ops {
        if op.rows() != dim || op.cols() != dim {
            return Err(Error::dim("operator has the wrong shape"));
        }
    }
    // left multiplication by each generator on flattened matrices
    let left: Vec<FpMatrix> = ops
        .iter()
        .map(|op| {
            let mut l = FpMatrix::zeros(p, dim * dim, dim * dim);
            for r in 0..dim {
                for k in 0..dim {
                    let v = op.get(r, k);
                    if v != 0 {
                        for c in 0..dim {
                            l.set(r * dim + c, k * dim + c, v);
                        }
                    }
                }
            }
            l
        })
        .collect();
    let span = ffla::spin(p, dim * dim, &[FpMatrix::identity(p, dim).flatten()], &left);
    let basis: Vec<FpMatrix> = span
        .basis_vectors()
        .iter()
        .map(|v| FpMatrix::unflatten(p, dim, dim, v))
        .collect();
    let n = basis.len();
    let mut table = vec![0u64; n * n * n];
    for i in 0..n {
        for j in 0..n {
            let c = span
                .coordinates(&basis[i].mul(&basis[j]).flatten())
                .ok_or_else(|| Error::Mismatch("span of words is not closed".into()))?;
            let s = (i * n + j) * n;
            table[s..s + n].copy_from_slice(&c);
        }
    }
    let unit = span
        .coordinates(&FpMatrix::identity(p, dim).flatten())
        .ok_or_else(|| Error::Mismatch("identity missing".into()))?;
    let labels = (0..n).map(|i| format!("w{i}")).collect();
    let algebra = Arc::new(ScAlgebra::from_parts_unchecked(p, labels, table, unit));
    let module = ScModule::new_unchecked(algebra.clone(), dim, basis);
    Ok((algebra, module))
}
