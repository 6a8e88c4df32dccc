//! Homogeneous polynomials, F_q-points of projective varieties, and the
//! reduction of an arbitrary homogeneous system to quadrics by a Veronese
//! re-embedding.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffla::{self, check_prime};

/// A homogeneous polynomial with integer-literal coefficients; reduce it
/// into a given prime field with [`HomPoly::reduced`] or evaluate mod q.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomPoly {
    num_vars: usize,
    degree: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl HomPoly {
    /// Merge duplicate exponent vectors and drop zero coefficients.
    /// Fails unless every exponent vector has length `num_vars` and the
    /// same total degree.
    pub fn new(num_vars: usize, terms: impl IntoIterator<Item = (Vec<u32>, i64)>) -> Result<Self> {
        let mut map: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
        let mut degree: Option<usize> = None;
        for (exps, coef) in terms {
            if exps.len() != num_vars {
                return Err(Error::dim(format!(
                    "exponent vector of length {} in {num_vars} variables",
                    exps.len()
                )));
            }
            let deg: usize = exps.iter().map(|&e| e as usize).sum();
            match degree {
                None => degree = Some(deg),
                Some(d) if d != deg => {
                    return Err(Error::NonHomogeneous(format!(
                        "terms of degree {d} and {deg}"
                    )))
                }
                _ => {}
            }
            *map.entry(exps).or_insert(0) += coef;
        }
        map.retain(|_, c| *c != 0);
        let degree = degree.ok_or_else(|| Error::Invalid("polynomial without terms".into()))?;
        if degree == 0 {
            return Err(Error::Invalid("constant polynomial".into()));
        }
        Ok(HomPoly {
            num_vars,
            degree,
            terms: map,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, i64)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    /// Coefficients reduced into `[0, q)`, zero terms removed.
    pub fn reduced(&self, q: u64) -> BTreeMap<Vec<u32>, u64> {
        self.terms
            .iter()
            .map(|(e, &c)| (e.clone(), ffla::reduce(c, q)))
            .filter(|(_, c)| *c != 0)
            .collect()
    }

    /// Evaluate at a vector of residues mod q.
    pub fn eval_mod(&self, v: &[u64], q: u64) -> u64 {
        assert_eq!(v.len(), self.num_vars);
        self.terms.iter().fold(0, |acc, (exps, &c)| {
            let mono = exps
                .iter()
                .zip(v)
                .fold(1, |m, (&e, &x)| ffla::mul(m, ffla::pow(x, e as u64, q), q));
            ffla::add(acc, ffla::mul(ffla::reduce(c, q), mono, q), q)
        })
    }
}

/// A point of projective space over F_q, scaled so its first nonzero
/// coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ProjPoint {
    coords: Vec<u64>,
}

impl ProjPoint {
    /// Canonicalize a nonzero vector of residues mod q.
    pub fn new(v: &[u64], q: u64) -> Result<Self> {
        let lead = v
            .iter()
            .position(|&x| x % q != 0)
            .ok_or_else(|| Error::Invalid("zero vector is not a projective point".into()))?;
        let inv = ffla::inv(v[lead] % q, q);
        Ok(ProjPoint {
            coords: v.iter().map(|&x| ffla::mul(x % q, inv, q)).collect(),
        })
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }
}

/// All points of P^n(F_q) in ascending coordinate order.
pub fn projective_space(n: usize, q: u64) -> Vec<ProjPoint> {
    let mut out = Vec::new();
    for lead in 0..=n {
        let tail = n - lead;
        let total = (q as usize).pow(tail as u32);
        for idx in 0..total {
            let mut v = vec![0u64; n + 1];
            v[lead] = 1;
            let mut rest = idx;
            for j in (lead + 1..=n).rev() {
                v[j] = (rest % q as usize) as u64;
                rest /= q as usize;
            }
            out.push(ProjPoint { coords: v });
        }
    }
    out.sort();
    out
}

/// F_q-points of the projective variety cut out by `polys` in P^n.
pub fn variety_points(polys: &[HomPoly], n: usize, q: u64) -> Result<Vec<ProjPoint>> {
    check_prime(q)?;
    for f in polys {
        if f.num_vars() != n + 1 {
            return Err(Error::dim(format!(
                "polynomial in {} variables for P^{n}",
                f.num_vars()
            )));
        }
    }
    Ok(projective_space(n, q)
        .into_iter()
        .filter(|pt| polys.iter().all(|f| f.eval_mod(pt.coords(), q) == 0))
        .collect())
}

/// Exponent vectors of degree `d` in `vars` variables, in descending
/// lexicographic order (x0^d first).
pub fn monomials(vars: usize, d: usize) -> Vec<Vec<u32>> {
    fn rec(vars: usize, d: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == vars {
            prefix.push(d as u32);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e as u32);
            rec(vars, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if vars == 0 {
        return out;
    }
    rec(vars, d, &mut Vec::new(), &mut out);
    out
}

/// Output of [`veronese_reduce`].
#[derive(Clone, Debug)]
pub struct VeroneseReduction {
    /// Degree of the re-embedding; 1 means the identity.
    pub d: usize,
    pub n: usize,
    pub n_prime: usize,
    /// Exponent vector of each new coordinate z_i.
    pub z_monomials: Vec<Vec<u32>>,
    pub quadrics: Vec<HomPoly>,
}

impl VeroneseReduction {
    /// The d-uple embedding P^n -> P^{n'}.
    pub fn map_point(&self, pt: &ProjPoint, q: u64) -> Result<ProjPoint> {
        if pt.coords().len() != self.n + 1 {
            return Err(Error::dim("point in the wrong projective space"));
        }
        let z: Vec<u64> = self
            .z_monomials
            .iter()
            .map(|a| {
                a.iter()
                    .zip(pt.coords())
                    .fold(1, |m, (&e, &x)| ffla::mul(m, ffla::pow(x, e as u64, q), q))
            })
            .collect();
        ProjPoint::new(&z, q)
    }
}

/// Split a degree-2d monomial into z-coordinates: the first factor greedily
/// takes as much of the leading variables as possible.
fn split_monomial(m: &[u32], d: usize) -> (Vec<u32>, Vec<u32>) {
    let mut left = vec![0u32; m.len()];
    let mut need = d as u32;
    for (l, &e) in left.iter_mut().zip(m) {
        let take = e.min(need);
        *l = take;
        need -= take;
    }
    let right = m.iter().zip(&left).map(|(a, b)| a - b).collect();
    (left, right)
}

fn add_exps(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Re-embed so that the variety is cut out by quadrics only.
pub fn veronese_reduce(polys: &[HomPoly], n: usize) -> Result<VeroneseReduction> {
    for f in polys {
        if f.num_vars() != n + 1 {
            return Err(Error::dim(format!(
                "polynomial in {} variables for P^{n}",
                f.num_vars()
            )));
        }
    }
    let max_deg = polys.iter().map(HomPoly::degree).max().unwrap_or(2);
    let d = if max_deg >= 2 { max_deg.div_ceil(2) } else { 1 };
    let z_monomials = monomials(n + 1, d);
    let index: BTreeMap<&Vec<u32>, usize> =
        z_monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let nz = z_monomials.len();
    let z_term = |a: usize, b: usize| -> Vec<u32> {
        let mut e = vec![0u32; nz];
        e[a] += 1;
        e[b] += 1;
        e
    };

    let mut quadrics = Vec::new();
    // classical Veronese relations z_a z_b = z_c z_e whenever the exponents agree
    let mut by_sum: BTreeMap<Vec<u32>, Vec<(usize, usize)>> = BTreeMap::new();
    for a in 0..nz {
        for b in a..nz {
            by_sum
                .entry(add_exps(&z_monomials[a], &z_monomials[b]))
                .or_default()
                .push((a, b));
        }
    }
    for pairs in by_sum.values() {
        for i in 0..pairs.len() {
            for j in i + 1..pairs.len() {
                let (a, b) = pairs[i];
                let (c, e) = pairs[j];
                quadrics.push(HomPoly::new(nz, [(z_term(a, b), 1), (z_term(c, e), -1)])?);
            }
        }
    }
    // each f times every monomial of the complementary degree, rewritten in z
    for f in polys {
        let comp = 2 * d - f.degree();
        for m in monomials(n + 1, comp) {
            let mut terms = Vec::new();
            for (exps, c) in f.terms() {
                let full = add_exps(exps, &m);
                let (l, r) = split_monomial(&full, d);
                terms.push((z_term(index[&l], index[&r]), c));
            }
            if terms.is_empty() {
                continue;
            }
            match HomPoly::new(nz, terms) {
                Ok(q) if q.terms.is_empty() => {}
                Ok(q) => quadrics.push(q),
                Err(e) => return Err(e),
            }
        }
    }
    Ok(VeroneseReduction {
        d,
        n,
        n_prime: nz - 1,
        z_monomials,
        quadrics,
    })
}

/// JSON form of a variety instance.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VarietyFile {
    pub p: u64,
    pub n: usize,
    pub polys: Vec<PolyRepr>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolyRepr {
    pub terms: Vec<TermRepr>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermRepr {
    pub exps: Vec<u32>,
    pub coef: i64,
}

impl VarietyFile {
    pub fn polys(&self) -> Result<Vec<HomPoly>> {
        check_prime(self.p)?;
        self.polys
            .iter()
            .map(|pr| HomPoly::new(self.n + 1, pr.terms.iter().map(|t| (t.exps.clone(), t.coef))))
            .collect()
    }

    pub fn from_polys(p: u64, n: usize, polys: &[HomPoly]) -> Self {
        VarietyFile {
            p,
            n,
            polys: polys
                .iter()
                .map(|f| PolyRepr {
                    terms: f
                        .terms()
                        .map(|(e, c)| TermRepr {
                            exps: e.clone(),
                            coef: c,
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}
