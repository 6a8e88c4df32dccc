//! Dense univariate polynomials over F_p, just enough for minimal
//! polynomials and distinct-factor splitting of small matrices.

use rand::Rng;

use super::field;
use super::matrix::FpMatrix;

/// Coefficients low degree first; no trailing zeros (the zero polynomial is empty).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl UPoly {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        let mut f = UPoly { p, coeffs };
        f.trim();
        f
    }

    pub fn zero(p: u64) -> Self {
        UPoly { p, coeffs: vec![] }
    }

    pub fn one(p: u64) -> Self {
        UPoly::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        UPoly::new(p, vec![0, 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn monic(&self) -> UPoly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lc) => {
                let inv = field::inv(lc, self.p);
                UPoly::new(
                    self.p,
                    self.coeffs.iter().map(|&c| field::mul(c, inv, self.p)).collect(),
                )
            }
        }
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let c = (0..n)
            .map(|i| {
                field::add(
                    *self.coeffs.get(i).unwrap_or(&0),
                    *o.coeffs.get(i).unwrap_or(&0),
                    self.p,
                )
            })
            .collect();
        UPoly::new(self.p, c)
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let c = (0..n)
            .map(|i| {
                field::sub(
                    *self.coeffs.get(i).unwrap_or(&0),
                    *o.coeffs.get(i).unwrap_or(&0),
                    self.p,
                )
            })
            .collect();
        UPoly::new(self.p, c)
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero(self.p);
        }
        let p = self.p;
        let mut c = vec![0u64; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                c[i + j] = (c[i + j] + a * b) % p;
            }
        }
        UPoly::new(p, c)
    }

    /// Quotient and remainder; panics when dividing by zero.
    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let p = self.p;
        let mut r = self.coeffs.clone();
        let dd = d.deg();
        let inv = field::inv(*d.coeffs.last().unwrap(), p);
        if r.len() < d.coeffs.len() {
            return (UPoly::zero(p), self.clone());
        }
        let mut q = vec![0u64; r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = field::mul(r[i + dd], inv, p);
            q[i] = c;
            if c == 0 {
                continue;
            }
            for (j, &b) in d.coeffs.iter().enumerate() {
                r[i + j] = field::sub(r[i + j], field::mul(c, b, p), p);
            }
        }
        (UPoly::new(p, q), UPoly::new(p, r))
    }

    pub fn rem(&self, d: &UPoly) -> UPoly {
        self.divrem(d).1
    }

    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> UPoly {
        let p = self.p;
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| field::mul(a, i as u64 % p, p))
            .collect();
        UPoly::new(p, c)
    }

    /// `self^e mod m`.
    pub fn powmod(&self, mut e: u64, m: &UPoly) -> UPoly {
        let mut acc = UPoly::one(self.p).rem(m);
        let mut base = self.rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }

    /// Evaluate at a square matrix (Horner).
    pub fn eval_matrix(&self, a: &FpMatrix) -> FpMatrix {
        let n = a.rows();
        let mut acc = FpMatrix::zeros(self.p, n, n);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(a).add(&FpMatrix::scalar(self.p, n, c));
        }
        acc
    }

    /// p-th root of a polynomial whose derivative vanishes.
    fn pth_root(&self) -> UPoly {
        let p = self.p as usize;
        UPoly::new(self.p, self.coeffs.iter().step_by(p).copied().collect())
    }

    /// Distinct monic irreducible factors, sorted by (degree, coefficients).
    pub fn distinct_irreducible_factors<R: Rng>(&self, rng: &mut R) -> Vec<UPoly> {
        let mut out = Vec::new();
        let f = self.monic();
        collect_factors(&f, rng, &mut out);
        out.sort_by(|a, b| (a.deg(), &a.coeffs).cmp(&(b.deg(), &b.coeffs)));
        out.dedup();
        out
    }
}

fn collect_factors<R: Rng>(f: &UPoly, rng: &mut R, out: &mut Vec<UPoly>) {
    if f.is_constant() {
        return;
    }
    let d = f.derivative();
    if d.is_zero() {
        collect_factors(&f.pth_root().monic(), rng, out);
        return;
    }
    let g = f.gcd(&d);
    let s = f.divrem(&g).0.monic();
    squarefree_factors(&s, rng, out);
    // what remains in g has only factors of multiplicity divisible by p,
    // once the factors of s are stripped out
    let mut rest = g;
    loop {
        let c = rest.gcd(&s);
        if c.is_constant() {
            break;
        }
        rest = rest.divrem(&c).0;
    }
    collect_factors(&rest.monic(), rng, out);
}

/// Distinct-degree then equal-degree factorization of a squarefree monic polynomial.
fn squarefree_factors<R: Rng>(f: &UPoly, rng: &mut R, out: &mut Vec<UPoly>) {
    let p = f.p;
    let mut s = f.clone();
    let x = UPoly::x(p);
    let mut h = x.clone();
    let mut i = 0;
    while s.deg() >= 2 * (i + 1) {
        i += 1;
        h = h.powmod(p, &s);
        let g = s.gcd(&h.sub(&x));
        if !g.is_constant() {
            equal_degree(&g, i, rng, out);
            s = s.divrem(&g).0.monic();
            h = h.rem(&s);
        }
    }
    if !s.is_constant() {
        out.push(s.monic());
    }
}

fn equal_degree<R: Rng>(g: &UPoly, i: usize, rng: &mut R, out: &mut Vec<UPoly>) {
    if g.deg() == i {
        out.push(g.monic());
        return;
    }
    let p = g.p;
    loop {
        let r = UPoly::new(p, (0..g.deg()).map(|_| rng.gen_range(0..p)).collect());
        if r.is_constant() {
            continue;
        }
        let t = if p == 2 {
            // trace map r + r^2 + ... + r^{2^{i-1}}
            let mut acc = r.rem(g);
            let mut cur = acc.clone();
            for _ in 1..i {
                cur = cur.mul(&cur).rem(g);
                acc = acc.add(&cur);
            }
            acc
        } else {
            // r^{(p^i - 1)/2} = prod_j (r^{p^j})^{(p-1)/2}
            let half = (p - 1) / 2;
            let mut acc = UPoly::one(p);
            let mut frob = r.rem(g);
            for j in 0..i {
                if j > 0 {
                    frob = frob.powmod(p, g);
                }
                acc = acc.mul(&frob.powmod(half, g)).rem(g);
            }
            acc.sub(&UPoly::one(p))
        };
        let u = g.gcd(&t);
        if !u.is_constant() && u.deg() < g.deg() {
            let v = g.divrem(&u).0.monic();
            equal_degree(&u, i, rng, out);
            equal_degree(&v, i, rng, out);
            return;
        }
    }
}

/// Minimal polynomial of a square matrix, monic.
pub fn minimal_polynomial(a: &FpMatrix) -> UPoly {
    assert!(a.is_square());
    let p = a.modulus();
    let n = a.rows();
    // Incremental elimination over vec(A^k), tracking each row as a
    // combination of the powers.
    let mut rows: Vec<(Vec<u64>, Vec<u64>, usize)> = Vec::new();
    let mut power = FpMatrix::identity(p, n);
    for k in 0..=n {
        let mut v = power.flatten();
        let mut comb = vec![0u64; n + 1];
        comb[k] = 1;
        for (row, rc, piv) in &rows {
            let f = v[*piv];
            if f == 0 {
                continue;
            }
            let nf = p - f;
            for (o, &b) in v.iter_mut().zip(row) {
                *o = (*o + nf * b) % p;
            }
            for (o, &b) in comb.iter_mut().zip(rc) {
                *o = (*o + nf * b) % p;
            }
        }
        match v.iter().position(|&x| x != 0) {
            None => return UPoly::new(p, comb[..=k].to_vec()).monic(),
            Some(piv) => {
                let inv = field::inv(v[piv], p);
                for o in v.iter_mut() {
                    *o = field::mul(*o, inv, p);
                }
                for o in comb.iter_mut() {
                    *o = field::mul(*o, inv, p);
                }
                rows.push((v, comb, piv));
            }
        }
        power = power.mul(a);
    }
    unreachable!("Cayley-Hamilton bounds the degree by n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn poly(p: u64, c: &[u64]) -> UPoly {
        UPoly::new(p, c.to_vec())
    }

    #[test]
    fn divrem_identity() {
        let a = poly(5, &[1, 2, 3, 4]);
        let b = poly(5, &[2, 0, 1]);
        let (q, r) = a.divrem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn factors_of_x_p_minus_x() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        // x^5 - x over F_5 splits into the five linear factors
        let f = UPoly::x(5).powmod(5, &poly(5, &[0, 0, 0, 0, 0, 0, 1])).sub(&UPoly::x(5));
        let fs = f.distinct_irreducible_factors(&mut rng);
        assert_eq!(fs.len(), 5);
        assert!(fs.iter().all(|g| g.degree() == Some(1)));
    }

    #[test]
    fn factors_with_repeats_and_pth_powers() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let p = 2;
        let a = poly(p, &[1, 1, 1]); // x^2+x+1, irreducible over F_2
        let b = poly(p, &[1, 1]); // x+1
        let f = a.mul(&a).mul(&b).mul(&b).mul(&b);
        let fs = f.distinct_irreducible_factors(&mut rng);
        assert_eq!(fs, vec![b, a]);
    }

    #[test]
    fn equal_degree_split_over_f3() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        // (x^2+1)(x^2+x+2) over F_3: both irreducible quadratics
        let a = poly(3, &[1, 0, 1]);
        let b = poly(3, &[2, 1, 1]);
        let fs = a.mul(&b).distinct_irreducible_factors(&mut rng);
        assert_eq!(fs.len(), 2);
        assert!(fs.contains(&a) && fs.contains(&b));
    }

    #[test]
    fn minimal_polynomial_of_jordan_block() {
        let j = FpMatrix::from_rows(3, &[vec![2, 0, 0], vec![1, 2, 0], vec![0, 0, 2]]).unwrap();
        let mu = minimal_polynomial(&j);
        // (x-2)^2 = x^2 - 4x + 4 = x^2 + 2x + 1 over F_3
        assert_eq!(mu, poly(3, &[1, 2, 1]));
        assert!(mu.eval_matrix(&j).is_zero());
    }
}
