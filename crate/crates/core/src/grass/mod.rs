//! Quiver Grassmannians over F_p: point enumeration, transport along
//! quotients by ReN, and line families linking submodules of modules over
//! local radical-square-zero algebras.

use std::collections::{BTreeMap, BTreeSet};

use std::sync::Arc;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffla::{enumerate_subspaces, gaussian_binomial, EchelonBuilder, FpMatrix, Subspace};
use crate::meataxe::{DimensionVector, SimpleRegistry};
use crate::modrep::{
    dual_module, generated_submodule, is_local_rsz, quotient_module, socle_and_radical, submodule, Module,
    Representation, ScModule,
};
use crate::qalg::BoundAlgebra;

#[cfg(test)]
mod tests;

/// Points of a quiver Grassmannian in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrassmannianPointSet {
    pub q: u64,
    pub e: Vec<usize>,
    pub points: Vec<Subspace>,
    /// Size of the search space before pruning.
    pub search_size: u128,
}

impl GrassmannianPointSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Submodules U of M with dim U_v = e_v, chosen vertex by vertex.
pub fn grassmannian_points(m: &Representation, e: &[usize], budget: u64) -> Result<GrassmannianPointSet> {
    let dims = m.dims();
    let p = m.modulus();
    if e.len() != dims.len() || e.iter().zip(dims).any(|(a, b)| a > b) {
        return Err(Error::Precondition(format!(
            "dimension vector {e:?} does not fit under {dims:?}"
        )));
    }
    let search_size = dims
        .iter()
        .zip(e)
        .fold(1u128, |acc, (&d, &k)| acc.saturating_mul(gaussian_binomial(d, k, p)));
    if search_size > budget as u128 {
        return Err(Error::budget("quiver Grassmannian enumeration", search_size, budget));
    }
    let quiver = m.algebra().quiver();
    // largest vertex spaces first, ties by label
    let mut order: Vec<usize> = (0..dims.len()).collect();
    order.sort_by(|&a, &b| dims[b].cmp(&dims[a]).then_with(|| quiver.vertices()[a].cmp(&quiver.vertices()[b])));
    let choices: Vec<Vec<Subspace>> = (0..dims.len())
        .map(|v| enumerate_subspaces(dims[v], e[v], p, None, None, budget))
        .collect::<Result<_>>()?;

    let mut points = Vec::new();
    let mut assigned: Vec<Option<Subspace>> = vec![None; dims.len()];
    dfs(m, &order, &choices, 0, &mut assigned, &mut points);
    points.sort();
    Ok(GrassmannianPointSet {
        q: p,
        e: e.to_vec(),
        points,
        search_size,
    })
}

fn dfs(
    m: &Representation,
    order: &[usize],
    choices: &[Vec<Subspace>],
    depth: usize,
    assigned: &mut Vec<Option<Subspace>>,
    out: &mut Vec<Subspace>,
) {
    if depth == order.len() {
        let parts: Vec<Subspace> = assigned.iter().map(|u| u.clone().expect("assigned")).collect();
        out.push(m.embed_parts(&parts));
        return;
    }
    let v = order[depth];
    let arrows = m.algebra().quiver().arrows();
    for u in &choices[v] {
        assigned[v] = Some(u.clone());
        let compatible = arrows.iter().enumerate().all(|(a, arrow)| {
            if arrow.source != v && arrow.target != v {
                return true;
            }
            match (&assigned[arrow.source], &assigned[arrow.target]) {
                (Some(us), Some(ut)) => ut.contains(&us.image_under(m.map(a))),
                _ => true,
            }
        });
        if compatible {
            dfs(m, order, choices, depth + 1, assigned, out);
        }
    }
    assigned[v] = None;
}

/// Invariant subspaces of N with the given dimension vector over the
/// registered simples, optionally only those containing `must_contain`.
pub fn grassmannian_points_sc(
    reg: &SimpleRegistry,
    n: &ScModule,
    e: &DimensionVector,
    must_contain: Option<&Subspace>,
    budget: u64,
    seed: u64,
) -> Result<GrassmannianPointSet> {
    if e.len() != reg.len() {
        return Err(Error::Precondition("dimension vector does not match the registered simples".into()));
    }
    let k = reg.total_dim(e);
    let p = n.modulus();
    if k > n.dim() {
        return Ok(GrassmannianPointSet {
            q: p,
            e: e.0.clone(),
            points: Vec::new(),
            search_size: 0,
        });
    }
    let gens = n.generators();
    let candidates = enumerate_subspaces(n.dim(), k, p, must_contain, None, budget)?;
    let search_size = candidates.len() as u128;
    let mut points = Vec::new();
    for u in candidates {
        if !u.is_invariant(&gens) {
            continue;
        }
        if reg.dimension_vector(&submodule(n, &u)?.module, seed)? == *e {
            points.push(u);
        }
    }
    Ok(GrassmannianPointSet {
        q: p,
        e: e.0.clone(),
        points,
        search_size,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransportMode {
    /// Enumerate both Grassmannians and match them.
    Independent,
    /// Enumerate only the quotient side and lift.
    ForwardOnly,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Lemma2Report {
    pub w_dim: usize,
    pub c: DimensionVector,
    pub g: DimensionVector,
    pub e: DimensionVector,
    /// |G_{g+c}(N)| when enumerated independently.
    pub lifted_count: Option<usize>,
    /// |G_g(N/W)|.
    pub quotient_count: usize,
    /// G_{g+c}(N): independently enumerated or lifted.
    pub points: Vec<Subspace>,
    pub bijection_verified: bool,
}

/// W = ReN and the identification of G_{g+c}(N) with G_g(N/W) via U ↦ U/W.
pub fn lemma2_transport(
    reg: &SimpleRegistry,
    e_idem: &[u64],
    n: &ScModule,
    g: &DimensionVector,
    mode: TransportMode,
    budget: u64,
    seed: u64,
) -> Result<Lemma2Report> {
    let r = reg.algebra();
    if e_idem.len() != r.dim() || r.mul(e_idem, e_idem) != e_idem {
        return Err(Error::Precondition("element is not an idempotent of the algebra".into()));
    }
    if n.algebra().as_ref() != r.as_ref() {
        return Err(Error::Precondition("module over a different algebra".into()));
    }
    let act = n.act(e_idem);
    let en: Vec<Vec<u64>> = (0..n.dim()).map(|j| act.column(j)).collect();
    let w = generated_submodule(n, &en);
    let c = reg.dimension_vector(&submodule(n, &w)?.module, seed)?;
    let e = &c + g;
    let quot = quotient_module(n, &w)?;
    let right = grassmannian_points_sc(reg, &quot.module, g, None, budget, seed)?;
    let section = section_matrix(&w);
    let lift = |u: &Subspace| -> Subspace {
        let mut rows = w.basis_vectors();
        rows.extend(u.basis_vectors().iter().map(|v| section.apply(v)));
        Subspace::from_vectors(n.modulus(), n.dim(), &rows)
    };
    let lifted: Vec<Subspace> = {
        let mut l: Vec<Subspace> = right.points.iter().map(lift).collect();
        l.sort();
        l
    };
    for u in &lifted {
        if !u.is_invariant(&n.generators()) {
            return Err(Error::Mismatch("lifted subspace is not a submodule".into()));
        }
        if reg.dimension_vector(&submodule(n, u)?.module, seed)? != e {
            return Err(Error::Mismatch("lifted submodule has the wrong dimension vector".into()));
        }
    }
    let mut report = Lemma2Report {
        w_dim: w.dim(),
        c,
        g: g.clone(),
        e: e.clone(),
        lifted_count: None,
        quotient_count: right.len(),
        points: lifted.clone(),
        bijection_verified: false,
    };
    if mode == TransportMode::Independent {
        let left = grassmannian_points_sc(reg, n, &e, None, budget, seed)?;
        for u in &left.points {
            if !u.contains(&w) {
                return Err(Error::Mismatch("a point of G_{g+c}(N) does not contain ReN".into()));
            }
        }
        let images: BTreeSet<Subspace> = left.points.iter().map(|u| u.image_under(&quot.projection)).collect();
        let expected: BTreeSet<Subspace> = right.points.iter().cloned().collect();
        if images.len() != left.len() || images != expected || left.points != lifted {
            return Err(Error::Mismatch("U ↦ U/ReN is not a bijection".into()));
        }
        report.lifted_count = Some(left.len());
        report.points = left.points;
        report.bijection_verified = true;
    }
    Ok(report)
}

/// Inclusion of the complement of `w` spanned by standard vectors at its
/// non-pivot positions (matches the quotient coordinates).
fn section_matrix(w: &Subspace) -> FpMatrix {
    let keep = w.non_pivots();
    let mut s = FpMatrix::zeros(w.modulus(), w.ambient_dim(), keep.len());
    for (i, &k) in keep.iter().enumerate() {
        s.set(k, i, 1);
    }
    s
}

/// Submodules of a module over a one-vertex algebra of the given dimension.
pub fn submodules_of_dim(m: &Representation, i: usize, budget: u64) -> Result<GrassmannianPointSet> {
    if m.dims().len() != 1 {
        return Err(Error::Precondition("expected a one-vertex algebra".into()));
    }
    grassmannian_points(m, &[i], budget)
}

/// The pencil λ₀·b_j + λ₁·b′_j (t < j ≤ i) over a fixed part b_1..b_t.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineFamily {
    p: u64,
    ambient: usize,
    pub fixed: Vec<Vec<u64>>,
    pub moving: Vec<(Vec<u64>, Vec<u64>)>,
}

impl LineFamily {
    pub fn dim(&self) -> usize {
        self.fixed.len() + self.moving.len()
    }

    pub fn member(&self, l0: u64, l1: u64) -> Subspace {
        let p = self.p;
        let mut rows = self.fixed.clone();
        for (b, bp) in &self.moving {
            rows.push(
                b.iter()
                    .zip(bp)
                    .map(|(&x, &y)| (l0 * x + l1 * y) % p)
                    .collect(),
            );
        }
        Subspace::from_vectors(p, self.ambient, &rows)
    }

    /// Members over all points of P^1(F_p), starting with (1:0).
    pub fn members(&self) -> Vec<Subspace> {
        let mut out = vec![self.member(1, 0)];
        for l in 0..self.p {
            out.push(self.member(l, 1));
        }
        out
    }
}

/// A line in G_i(M) through U and a submodule U′ of soc M containing soc U.
pub fn line_family(m: &Representation, u: &Subspace) -> Result<LineFamily> {
    if !is_local_rsz(m) {
        return Err(Error::Precondition("line families need a local radical-square-zero algebra".into()));
    }
    let p = m.modulus();
    let d = m.dim();
    let ops = m.arrow_operators();
    if u.ambient_dim() != d || !u.is_invariant(&ops) {
        return Err(Error::NotInvariant);
    }
    let (soc, _) = socle_and_radical(p, d, &ops);
    let i = u.dim();
    if i > soc.dim() {
        return Err(Error::Precondition(format!(
            "dim U = {i} exceeds dim soc M = {}; dualize first",
            soc.dim()
        )));
    }
    let soc_u = u.intersection(&soc)?;
    let fixed = soc_u.basis_vectors();
    let mut eb = EchelonBuilder::from_subspace(&soc_u);
    let mut extra = Vec::new();
    for v in u.basis_vectors() {
        if eb.insert(&v).is_some() {
            extra.push(v);
        }
    }
    // U′: complete soc U inside soc M by the earliest canonical basis vectors
    let mut eb = EchelonBuilder::from_subspace(&soc_u);
    let mut completion = Vec::new();
    for v in soc.basis_vectors() {
        if completion.len() == extra.len() {
            break;
        }
        if eb.insert(&v).is_some() {
            completion.push(v);
        }
    }
    let family = LineFamily {
        p,
        ambient: d,
        fixed,
        moving: extra.into_iter().zip(completion).collect(),
    };
    for member in family.members() {
        if member.dim() != i || !member.is_invariant(&ops) {
            return Err(Error::Mismatch("a line family member is not a submodule of dimension i".into()));
        }
    }
    if family.member(1, 0) != *u || !soc.contains(&family.member(0, 1)) {
        return Err(Error::Mismatch("line family does not join U to the socle".into()));
    }
    Ok(family)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConnectivityReport {
    pub i: usize,
    pub dualized: bool,
    pub nodes: Vec<Subspace>,
    pub edges: Vec<(usize, usize)>,
    pub connected: bool,
}

/// Graph on G_i(M)(F_p): pencil edges among socle points meeting in
/// dimension i−1, and an edge from each other point to the socle end of its
/// line family.
pub fn connectivity_check(m: &Representation, i: usize, budget: u64) -> Result<ConnectivityReport> {
    if !is_local_rsz(m) {
        return Err(Error::Precondition("connectivity check needs a local radical-square-zero algebra".into()));
    }
    let p = m.modulus();
    let d = m.dim();
    if i > d {
        return Err(Error::Precondition(format!("i = {i} exceeds dim M = {d}")));
    }
    let (soc, _) = socle_and_radical(p, d, &m.arrow_operators());
    let (module, i, dualized) = if i > soc.dim() {
        let dual = dual_module(m)?;
        let (dsoc, _) = socle_and_radical(p, d, &dual.arrow_operators());
        if d - i > dsoc.dim() {
            return Err(Error::Mismatch(format!(
                "d − i = {} exceeds dim soc M* = {}",
                d - i,
                dsoc.dim()
            )));
        }
        (dual, d - i, true)
    } else {
        (m.clone(), i, false)
    };
    let (soc, _) = socle_and_radical(p, d, &module.arrow_operators());
    let nodes = submodules_of_dim(&module, i, budget)?.points;
    let index: BTreeMap<&Subspace, usize> = nodes.iter().enumerate().map(|(k, u)| (u, k)).collect();
    let mut edges = Vec::new();
    let in_soc: Vec<usize> = (0..nodes.len()).filter(|&k| soc.contains(&nodes[k])).collect();
    for (a, &x) in in_soc.iter().enumerate() {
        for &y in &in_soc[a + 1..] {
            let stacked = nodes[x].basis().vstack(nodes[y].basis());
            if stacked.rank() == i + 1 {
                edges.push((x, y));
            }
        }
    }
    for (k, u) in nodes.iter().enumerate() {
        if soc.contains(u) {
            continue;
        }
        let family = line_family(&module, u)?;
        for member in family.members() {
            if !index.contains_key(&member) {
                return Err(Error::Mismatch("line family member missing from the Grassmannian".into()));
            }
        }
        edges.push((k, index[&family.member(0, 1)]));
    }
    let connected = is_connected(nodes.len(), &edges);
    Ok(ConnectivityReport {
        i,
        dualized,
        nodes,
        edges,
        connected,
    })
}

fn is_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    if n <= 1 {
        return true;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = n;
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            components -= 1;
        }
    }
    components == 1
}

/// |G_i(M)| = |G_{d−i}(M*)| through U ↦ U^⊥, checked as a bijection of
/// point sets.
pub fn dual_pairing_check(m: &Representation, i: usize, budget: u64) -> Result<usize> {
    let dual = dual_module(m)?;
    let d = m.dim();
    let left = submodules_of_dim(m, i, budget)?;
    let right = submodules_of_dim(&dual, d - i, budget)?;
    let mut images: Vec<Subspace> = left.points.iter().map(|u| u.annihilator()).collect();
    images.sort();
    if images != right.points {
        return Err(Error::Mismatch("annihilators do not match the dual Grassmannian".into()));
    }
    Ok(left.len())
}

/// A random module over a one-vertex radical-square-zero algebra: arrows map
/// a `top`-dimensional part into a `bottom`-dimensional part, and the result
/// is conjugated by a random change of basis.
pub fn random_rsz_module<R: Rng>(
    algebra: &Arc<BoundAlgebra>,
    top: usize,
    bottom: usize,
    rng: &mut R,
) -> Result<Representation> {
    if algebra.quiver().num_vertices() != 1 || algebra.top_degree() > 1 {
        return Err(Error::Precondition("expected a local radical-square-zero algebra".into()));
    }
    let p = algebra.modulus();
    let d = top + bottom;
    let mut random = |r: usize, c: usize| {
        let mut m = FpMatrix::zeros(p, r, c);
        for i in 0..r {
            for j in 0..c {
                m.set(i, j, rng.gen_range(0..p));
            }
        }
        m
    };
    let (g, g_inv) = loop {
        let g = random(d, d);
        if let Some(inv) = g.inverse() {
            break (g, inv);
        }
    };
    let maps = (0..algebra.quiver().num_arrows())
        .map(|_| {
            let mut t = FpMatrix::zeros(p, d, d);
            t.set_block(top, 0, &random(bottom, top));
            g.mul(&t).mul(&g_inv)
        })
        .collect();
    Representation::new(algebra.clone(), vec![d], maps)
}
