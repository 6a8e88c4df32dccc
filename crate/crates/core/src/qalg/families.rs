//! The two algebra families used by the realization pipelines.

use super::bound::{build_bound_algebra, BoundAlgebra};
use super::quiver::{Path, Quiver, Relation};
use crate::error::{Error, Result};
use crate::polyvar::HomPoly;

/// Label of the arrow `x_i` from b to a.
pub fn beilinson_ba(i: usize) -> String {
    format!("x{i}_ba")
}

/// Label of the arrow `x_i` from c to b.
pub fn beilinson_cb(i: usize) -> String {
    format!("x{i}_cb")
}

/// Beilinson quiver c ⇉ b ⇉ a with n+1 arrows per step, commutativity
/// relations, and each quadric read as a relation on paths c → a. The
/// monomial `x_i x_j` is the path "x_j from c to b, then x_i from b to a".
pub fn beilinson_algebra(n: usize, quadrics: &[HomPoly], p: u64) -> Result<BoundAlgebra> {
    let vertices = ["a", "b", "c"];
    let mut arrows = Vec::new();
    for i in 0..=n {
        arrows.push((beilinson_ba(i), "b".to_string(), "a".to_string()));
    }
    for i in 0..=n {
        arrows.push((beilinson_cb(i), "c".to_string(), "b".to_string()));
    }
    let vs: Vec<String> = vertices.iter().map(|s| s.to_string()).collect();
    let quiver = Quiver::new(&vs, &arrows)?;
    let mono = |i: usize, j: usize| -> Result<Path> {
        quiver.path(&[&beilinson_cb(j), &beilinson_ba(i)])
    };
    let mut rels = Vec::new();
    for i in 0..=n {
        for j in i + 1..=n {
            rels.push(Relation::from_paths(&quiver, vec![(mono(i, j)?, 1), (mono(j, i)?, -1)], 2)?);
        }
    }
    for f in quadrics {
        if f.degree() != 2 || f.num_vars() != n + 1 {
            return Err(Error::Invalid(format!(
                "expected a quadric in {} variables, got degree {} in {}",
                n + 1,
                f.degree(),
                f.num_vars()
            )));
        }
        let mut terms = Vec::new();
        for (exps, c) in f.terms() {
            let vars: Vec<usize> = exps
                .iter()
                .enumerate()
                .flat_map(|(v, &e)| std::iter::repeat_n(v, e as usize))
                .collect();
            terms.push((mono(vars[0], vars[1])?, c));
        }
        rels.push(Relation::from_paths(&quiver, terms, 2)?);
    }
    build_bound_algebra(p, quiver, rels)
}

/// k[T_1..T_n]/(T_1..T_n)^2 as one vertex with n loops.
pub fn local_rsz_algebra(n: usize, p: u64) -> Result<BoundAlgebra> {
    if n == 0 {
        return Err(Error::Precondition("need at least one loop".into()));
    }
    let labels: Vec<String> = (1..=n).map(|i| format!("T{i}")).collect();
    let arrows: Vec<(String, String, String)> =
        labels.iter().map(|l| (l.clone(), "o".to_string(), "o".to_string())).collect();
    let quiver = Quiver::new(&["o".to_string()], &arrows)?;
    let mut rels = Vec::new();
    for a in &labels {
        for b in &labels {
            rels.push(Relation::new(&quiver, &[(vec![a.as_str(), b.as_str()], 1)])?);
        }
    }
    build_bound_algebra(p, quiver, rels)
}
