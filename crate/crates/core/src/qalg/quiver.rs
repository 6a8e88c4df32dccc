//! Quivers, paths and relations.
//!
//! A path is stored as its arrows in traversal order. On a representation the
//! path `[a1, a2, .., al]` acts as `M_al ∘ .. ∘ M_a1`, and in the path algebra
//! `u · w` is the path "first w, then u".

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_index: HashMap<String, usize>,
    arrow_index: HashMap<String, usize>,
}

impl Quiver {
    /// `arrows` are `(label, source, target)` with vertex labels.
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S, S)]) -> Result<Self> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let mut vertex_index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if vertex_index.insert(v.clone(), i).is_some() {
                return Err(Error::Invalid(format!("duplicate vertex {v}")));
            }
        }
        let mut out = Vec::with_capacity(arrows.len());
        let mut arrow_index = HashMap::new();
        for (label, s, t) in arrows {
            let label = label.as_ref().to_string();
            let find = |v: &str| {
                vertex_index
                    .get(v)
                    .copied()
                    .ok_or_else(|| Error::Invalid(format!("arrow {label} uses unknown vertex {v}")))
            };
            let (source, target) = (find(s.as_ref())?, find(t.as_ref())?);
            if vertex_index.contains_key(&label)
                || arrow_index.insert(label.clone(), out.len()).is_some()
            {
                return Err(Error::Invalid(format!("duplicate label {label}")));
            }
            out.push(Arrow {
                label,
                source,
                target,
            });
        }
        Ok(Quiver {
            vertices,
            arrows: out,
            vertex_index,
            arrow_index,
        })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.vertex_index
            .get(label)
            .copied()
            .ok_or_else(|| Error::Invalid(format!("unknown vertex {label}")))
    }

    pub fn arrow(&self, label: &str) -> Result<usize> {
        self.arrow_index
            .get(label)
            .copied()
            .ok_or_else(|| Error::Invalid(format!("unknown arrow {label}")))
    }

    /// Path from arrow labels in traversal order; checks composability.
    pub fn path(&self, labels: &[&str]) -> Result<Path> {
        let arrows = labels.iter().map(|l| self.arrow(l)).collect::<Result<Vec<_>>>()?;
        self.path_from_arrows(arrows)
    }

    pub fn path_from_arrows(&self, arrows: Vec<usize>) -> Result<Path> {
        let Some(&first) = arrows.first() else {
            return Err(Error::Invalid("empty arrow list; use Path::trivial".into()));
        };
        if arrows.iter().any(|&a| a >= self.arrows.len()) {
            return Err(Error::Invalid("arrow index out of range".into()));
        }
        for w in arrows.windows(2) {
            if self.arrows[w[0]].target != self.arrows[w[1]].source {
                return Err(Error::Invalid(format!(
                    "arrows {} and {} do not compose",
                    self.arrows[w[0]].label, self.arrows[w[1]].label
                )));
            }
        }
        Ok(Path {
            start: self.arrows[first].source,
            arrows,
        })
    }

    pub fn source(&self, path: &Path) -> usize {
        path.start
    }

    pub fn target(&self, path: &Path) -> usize {
        match path.arrows.last() {
            Some(&a) => self.arrows[a].target,
            None => path.start,
        }
    }

    pub fn path_label(&self, path: &Path) -> String {
        if path.arrows.is_empty() {
            return format!("e_{}", self.vertices[path.start]);
        }
        let labels: Vec<&str> = path.arrows.iter().map(|&a| self.arrows[a].label.as_str()).collect();
        labels.join("*")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub(crate) start: usize,
    pub(crate) arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path {
            start: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    /// This path followed by arrow `a` (composability not checked).
    pub(crate) fn then(&self, a: usize) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.push(a);
        Path {
            start: self.start,
            arrows,
        }
    }
}

/// A linear combination of parallel paths of one common length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    terms: Vec<(Path, i64)>,
}

impl Relation {
    /// Terms are `(arrow labels in traversal order, coefficient)`.
    pub fn new(quiver: &Quiver, terms: &[(Vec<&str>, i64)]) -> Result<Self> {
        let terms = terms
            .iter()
            .map(|(labels, c)| Ok((quiver.path(labels)?, *c)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_paths(quiver, terms, 2)
    }

    pub(crate) fn from_paths(quiver: &Quiver, terms: Vec<(Path, i64)>, min_len: usize) -> Result<Self> {
        let Some((first, _)) = terms.first() else {
            return Err(Error::Invalid("empty relation".into()));
        };
        let (s, t, l) = (first.start, quiver.target(first), first.len());
        if l < min_len {
            return Err(Error::NonHomogeneous(format!(
                "relation paths must have length at least {min_len}"
            )));
        }
        for (path, _) in &terms {
            if path.len() != l {
                return Err(Error::NonHomogeneous("relation mixes path lengths".into()));
            }
            if path.start != s || quiver.target(path) != t {
                return Err(Error::Invalid("relation paths are not parallel".into()));
            }
        }
        Ok(Relation { terms })
    }

    pub fn terms(&self) -> &[(Path, i64)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms[0].0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn source(&self) -> usize {
        self.terms[0].0.start
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quiver_validation() {
        assert!(Quiver::new(&["a", "a"], &[]).is_err());
        assert!(Quiver::new(&["a"], &[("x", "a", "b")]).is_err());
        assert!(Quiver::new(&["a", "b"], &[("x", "a", "b"), ("x", "b", "a")]).is_err());
        let q = Quiver::new(&["a", "b"], &[("x", "a", "b"), ("y", "b", "a")]).unwrap();
        assert_eq!(q.arrow("y").unwrap(), 1);
        let p = q.path(&["x", "y"]).unwrap();
        assert_eq!((q.source(&p), q.target(&p)), (0, 0));
        assert!(q.path(&["x", "x"]).is_err());
    }

    #[test]
    fn relation_validation() {
        let q = Quiver::new(&["a", "b"], &[("x", "a", "b"), ("y", "a", "b"), ("z", "b", "b")])
            .unwrap();
        assert!(Relation::new(&q, &[(vec!["x", "z"], 1), (vec!["y", "z"], -1)]).is_ok());
        assert!(matches!(
            Relation::new(&q, &[(vec!["x"], 1)]),
            Err(Error::NonHomogeneous(_))
        ));
        assert!(matches!(
            Relation::new(&q, &[(vec!["x", "z"], 1), (vec!["x", "z", "z"], 1)]),
            Err(Error::NonHomogeneous(_))
        ));
        assert!(Relation::new(&q, &[(vec!["x", "z"], 1), (vec!["z", "z"], 1)]).is_err());
    }
}
