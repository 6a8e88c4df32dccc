//! Canonical enumeration of the points of ordinary Grassmannians over F_p.

use super::matrix::FpMatrix;
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Default cap on the number of subspaces any enumeration may emit.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Number of k-dimensional subspaces of F_q^d, saturating at `u128::MAX`.
pub fn gaussian_binomial(d: usize, k: usize, q: u64) -> u128 {
    if k > d {
        return 0;
    }
    let k = k.min(d - k);
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        let a = q.checked_pow((d - i) as u32).map(|x| x - 1);
        let b = q.pow((i + 1) as u32) - 1;
        match a.and_then(|a| num.checked_mul(a)) {
            Some(n) => num = n,
            None => return u128::MAX,
        }
        den *= b;
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    num / den
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Visit every k-dimensional subspace of F_p^d as an RREF matrix, in the
/// canonical order: pivot sets lexicographically, then free cells
/// lexicographically in row-major order.
pub fn for_each_rref(d: usize, k: usize, p: u64, mut f: impl FnMut(&Subspace)) {
    if k > d {
        return;
    }
    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        let mut free = Vec::new();
        let mut base = FpMatrix::zeros(p, k, d);
        for (r, &c) in pivots.iter().enumerate() {
            base.set(r, c, 1);
            for col in c + 1..d {
                if !pivots.contains(&col) {
                    free.push((r, col));
                }
            }
        }
        let mut digits = vec![0u64; free.len()];
        loop {
            let mut m = base.clone();
            for (&(r, c), &v) in free.iter().zip(&digits) {
                m.set(r, c, v);
            }
            f(&Subspace::from_rref_unchecked(m, pivots.clone()));
            if !increment(&mut digits, p) {
                break;
            }
        }
        if !next_combination(&mut pivots, d) {
            break;
        }
    }
}

/// Odometer step with the last digit least significant; false on wrap-around.
fn increment(digits: &mut [u64], base: u64) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// All k-dimensional subspaces U of F_p^d with `containing ⊆ U ⊆ inside`,
/// in canonical order. Fails fast when the Gaussian-binomial estimate
/// exceeds `budget`.
pub fn enumerate_subspaces(
    d: usize,
    k: usize,
    p: u64,
    containing: Option<&Subspace>,
    inside: Option<&Subspace>,
    budget: u64,
) -> Result<Vec<Subspace>> {
    super::field::check_prime(p)?;
    if k > d {
        return Err(Error::Precondition(format!("k = {k} exceeds d = {d}")));
    }
    for s in containing.iter().chain(inside.iter()) {
        if s.ambient_dim() != d || s.modulus() != p {
            return Err(Error::dim("constraint subspace has the wrong ambient space"));
        }
    }
    if containing.is_none() && inside.is_none() {
        let needed = gaussian_binomial(d, k, p);
        if needed > budget as u128 {
            return Err(Error::budget("subspace enumeration", needed, budget));
        }
        let mut out = Vec::with_capacity(needed as usize);
        for_each_rref(d, k, p, |s| out.push(s.clone()));
        return Ok(out);
    }

    let outer = inside.cloned().unwrap_or_else(|| Subspace::full(p, d));
    let inner = containing.cloned().unwrap_or_else(|| Subspace::zero(p, d));
    if !outer.contains(&inner) || k < inner.dim() || k > outer.dim() {
        return Ok(Vec::new());
    }
    // Work in coordinates of `outer`; the non-pivot positions of `inner`
    // span a complement C, and U <-> U ∩ C is a bijection.
    let inner_rel = inner.relative_to(&outer)?;
    let comp = inner_rel.non_pivots();
    let m = comp.len();
    let kk = k - inner.dim();
    let needed = gaussian_binomial(m, kk, p);
    if needed > budget as u128 {
        return Err(Error::budget("constrained subspace enumeration", needed, budget));
    }
    let inner_rows = inner_rel.basis_vectors();
    let mut out = Vec::with_capacity(needed as usize);
    for_each_rref(m, kk, p, |x| {
        let mut rows = inner_rows.clone();
        for r in 0..x.dim() {
            let mut v = vec![0u64; outer.dim()];
            for (j, &c) in comp.iter().enumerate() {
                v[c] = x.basis().get(r, j);
            }
            rows.push(v);
        }
        let ambient: Vec<Vec<u64>> = rows.iter().map(|c| outer.combine(c)).collect();
        out.push(Subspace::from_vectors(p, d, &ambient));
    });
    out.sort();
    Ok(out)
}
