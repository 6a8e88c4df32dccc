//! Algebras F_p<x,y>/I and their modules given by a pair of matrices.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffla::{self, FpMatrix};
use crate::modrep::{DirectSum, Module, Representation};
use crate::qalg::{BoundAlgebra, Path, Quiver, Relation};

/// A noncommutative polynomial: words over {x, y} with coefficients. The
/// word "xy" is the product x·y, acting on a module as A·B.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordPoly(pub Vec<(String, i64)>);

impl WordPoly {
    pub fn monomial(word: &str) -> Self {
        WordPoly(vec![(word.to_string(), 1)])
    }

    fn check(&self) -> Result<()> {
        let Some((first, _)) = self.0.first() else {
            return Err(Error::Invalid("empty relation".into()));
        };
        for (w, _) in &self.0 {
            if w.is_empty() || w.chars().any(|c| c != 'x' && c != 'y') {
                return Err(Error::Invalid(format!("word {w:?} is not over x, y")));
            }
            if w.len() != first.len() {
                return Err(Error::NonHomogeneous(format!("relation mixes degrees: {:?}", self.0)));
            }
        }
        Ok(())
    }

    /// Value at (A, B).
    pub fn eval(&self, a: &FpMatrix, b: &FpMatrix) -> FpMatrix {
        let p = a.modulus();
        let mut out = FpMatrix::zeros(p, a.rows(), a.cols());
        for (w, c) in &self.0 {
            let mut m = FpMatrix::identity(p, a.rows());
            for ch in w.chars() {
                m = m.mul(if ch == 'x' { a } else { b });
            }
            out.add_scaled(&m, ffla::reduce(*c, p));
        }
        out
    }
}

/// Γ = F_p<x,y>/I with I generated by homogeneous relations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoGenPresentation {
    pub p: u64,
    pub relations: Vec<WordPoly>,
}

impl TwoGenPresentation {
    pub fn new(p: u64, relations: Vec<WordPoly>) -> Result<Self> {
        ffla::check_prime(p)?;
        for r in &relations {
            r.check()?;
        }
        Ok(TwoGenPresentation { p, relations })
    }

    /// k[x]/(x²), with y acting as zero.
    pub fn dual_numbers(p: u64) -> Result<Self> {
        Self::new(p, vec![WordPoly::monomial("y"), WordPoly::monomial("xx")])
    }

    /// k<x,y>/(x,y)².
    pub fn square_zero(p: u64) -> Result<Self> {
        Self::new(p, ["xx", "xy", "yx", "yy"].map(WordPoly::monomial).to_vec())
    }

    /// The same integer relations read modulo q.
    pub fn reduce_mod(&self, q: u64) -> Result<Self> {
        Self::new(q, self.relations.clone())
    }

    /// Γ as a one-vertex bound quiver algebra with loops x and y.
    pub fn algebra(&self) -> Result<Arc<BoundAlgebra>> {
        let quiver = Quiver::new(&["o"], &[("x", "o", "o"), ("y", "o", "o")])?;
        let relations = self
            .relations
            .iter()
            .map(|r| {
                let terms = r
                    .0
                    .iter()
                    .map(|(w, c)| Ok((word_path(&quiver, w)?, *c)))
                    .collect::<Result<Vec<_>>>()?;
                Relation::from_paths(&quiver, terms, 1)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Arc::new(BoundAlgebra::build(self.p, quiver, relations, crate::qalg::DEFAULT_MAX_PATH_LEN)?))
    }

    /// Γ acting on itself from the left, in the basis of [`Self::algebra`].
    pub fn regular_module(&self) -> Result<TwoGenModule> {
        let alg = self.algebra()?;
        let sc = alg.sc();
        let a = sc.left_mult_by(&alg.arrow_element("x")?);
        let b = sc.left_mult_by(&alg.arrow_element("y")?);
        TwoGenModule::new(a, b)
    }
}

/// Words act right to left, so "xy" is traversed as y then x.
fn word_path(quiver: &Quiver, word: &str) -> Result<Path> {
    let labels: Vec<String> = word.chars().rev().map(String::from).collect();
    let labels: Vec<&str> = labels.iter().map(String::as_str).collect();
    quiver.path(&labels)
}

/// A module over F_p<x,y>: the actions A of x and B of y.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoGenModule {
    pub a: FpMatrix,
    pub b: FpMatrix,
}

impl TwoGenModule {
    pub fn new(a: FpMatrix, b: FpMatrix) -> Result<Self> {
        if !a.is_square() || a.rows() != b.rows() || a.cols() != b.cols() {
            return Err(Error::dim("x and y must act by square matrices of one size"));
        }
        if a.modulus() != b.modulus() {
            return Err(Error::ModulusMismatch(a.modulus(), b.modulus()));
        }
        Ok(TwoGenModule { a, b })
    }

    pub fn trivial(p: u64, dim: usize) -> Self {
        TwoGenModule {
            a: FpMatrix::zeros(p, dim, dim),
            b: FpMatrix::zeros(p, dim, dim),
        }
    }

    pub fn satisfies(&self, pres: &TwoGenPresentation) -> bool {
        pres.p == self.modulus() && pres.relations.iter().all(|r| r.eval(&self.a, &self.b).is_zero())
    }

    /// The same module viewed over the bound quiver algebra of `pres`.
    pub fn to_representation(&self, algebra: &Arc<BoundAlgebra>) -> Result<Representation> {
        Representation::from_labeled(
            algebra.clone(),
            vec![self.dim()],
            &[("x".to_string(), self.a.clone()), ("y".to_string(), self.b.clone())],
        )
    }
}

impl Module for TwoGenModule {
    fn modulus(&self) -> u64 {
        self.a.modulus()
    }

    fn dim(&self) -> usize {
        self.a.rows()
    }

    fn generators(&self) -> Vec<FpMatrix> {
        vec![self.a.clone(), self.b.clone()]
    }

    fn same_algebra(&self, other: &Self) -> bool {
        self.modulus() == other.modulus()
    }

    fn with_generators(&self, dim: usize, ops: Vec<FpMatrix>) -> Result<Self> {
        let [a, b]: [FpMatrix; 2] = ops
            .try_into()
            .map_err(|_| Error::dim("a two-generator module needs exactly two operators"))?;
        if a.rows() != dim {
            return Err(Error::dim("operator size does not match the dimension"));
        }
        TwoGenModule::new(a, b)
    }

    fn direct_sum(&self, other: &Self) -> Result<DirectSum<Self>> {
        if !self.same_algebra(other) {
            return Err(Error::ModulusMismatch(self.modulus(), other.modulus()));
        }
        let p = self.modulus();
        let (m, n) = (self.dim(), other.dim());
        let mut inc0 = FpMatrix::zeros(p, m + n, m);
        inc0.set_block(0, 0, &FpMatrix::identity(p, m));
        let mut inc1 = FpMatrix::zeros(p, m + n, n);
        inc1.set_block(m, 0, &FpMatrix::identity(p, n));
        Ok(DirectSum {
            module: TwoGenModule {
                a: self.a.block_diag(&other.a),
                b: self.b.block_diag(&other.b),
            },
            projections: vec![inc0.transpose(), inc1.transpose()],
            inclusions: vec![inc0, inc1],
        })
    }

    fn zero_module(&self) -> Self {
        TwoGenModule::trivial(self.modulus(), 0)
    }
}
