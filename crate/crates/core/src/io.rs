//! JSON input and report formats for the command-line tool. Coefficients
//! and matrix entries are integers, read modulo the field size in use.

use std::collections::BTreeMap;
use std::path::Path as FsPath;
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffla::{FpMatrix, Subspace};
use crate::modrep::Representation;
use crate::pipelines::{TwoGenModule, TwoGenPresentation, WordPoly};
use crate::qalg::{build_bound_algebra, local_rsz_algebra, BoundAlgebra, Quiver, Relation};

pub fn read_json<T: DeserializeOwned>(path: &FsPath) -> Result<T> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

pub fn write_json<T: Serialize>(path: &FsPath, value: &T) -> Result<()> {
    std::fs::write(path, serde_json::to_string_pretty(value)?)?;
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowSpec {
    pub label: String,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermSpec {
    /// Arrow labels in traversal order.
    pub path: Vec<String>,
    pub coef: i64,
}

/// A bound quiver algebra, or the shorthand `{"local_rsz": n}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraFile {
    LocalRsz {
        local_rsz: usize,
    },
    Quiver {
        vertices: Vec<String>,
        arrows: Vec<ArrowSpec>,
        #[serde(default)]
        relations: Vec<Vec<TermSpec>>,
    },
}

impl AlgebraFile {
    pub fn build(&self, q: u64) -> Result<Arc<BoundAlgebra>> {
        match self {
            AlgebraFile::LocalRsz { local_rsz } => Ok(Arc::new(local_rsz_algebra(*local_rsz, q)?)),
            AlgebraFile::Quiver {
                vertices,
                arrows,
                relations,
            } => {
                let triples: Vec<(&str, &str, &str)> = arrows
                    .iter()
                    .map(|a| (a.label.as_str(), a.source.as_str(), a.target.as_str()))
                    .collect();
                let names: Vec<&str> = vertices.iter().map(String::as_str).collect();
                let quiver = Quiver::new(&names, &triples)?;
                let rels = relations
                    .iter()
                    .map(|terms| {
                        let terms: Vec<(Vec<&str>, i64)> = terms
                            .iter()
                            .map(|t| (t.path.iter().map(String::as_str).collect(), t.coef))
                            .collect();
                        Relation::new(&quiver, &terms)
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Arc::new(build_bound_algebra(q, quiver, rels)?))
            }
        }
    }
}

fn matrix(q: u64, rows: usize, cols: usize, entries: &[Vec<i64>]) -> Result<FpMatrix> {
    if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
        return Err(Error::dim(format!("expected a {rows}x{cols} matrix")));
    }
    let flat: Vec<i64> = entries.concat();
    FpMatrix::new(q, rows, cols, &flat)
}

/// A representation: a vector-space dimension per vertex and a matrix per
/// arrow (rows = target dimension). Missing arrows act by zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationFile {
    pub algebra: AlgebraFile,
    pub dims: Vec<usize>,
    #[serde(default)]
    pub maps: BTreeMap<String, Vec<Vec<i64>>>,
}

impl RepresentationFile {
    pub fn build(&self, q: u64) -> Result<Representation> {
        let alg = self.algebra.build(q)?;
        let quiver = alg.quiver();
        if self.dims.len() != quiver.num_vertices() {
            return Err(Error::dim("one dimension per vertex expected"));
        }
        let maps = self
            .maps
            .iter()
            .map(|(label, rows)| {
                let a = &quiver.arrows()[quiver.arrow(label)?];
                Ok((label.clone(), matrix(q, self.dims[a.target], self.dims[a.source], rows)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Representation::from_labeled(alg, self.dims.clone(), &maps)
    }

    pub fn from_representation(algebra: AlgebraFile, m: &Representation) -> Self {
        let quiver = m.algebra().quiver();
        let maps = quiver
            .arrows()
            .iter()
            .zip(m.maps())
            .map(|(a, f)| (a.label.clone(), f.to_i64_rows()))
            .collect();
        RepresentationFile {
            algebra,
            dims: m.dims().to_vec(),
            maps,
        }
    }
}

/// Γ = F_p<x,y>/I: each relation is a list of (word, coefficient).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaFile {
    pub relations: Vec<Vec<(String, i64)>>,
}

impl GammaFile {
    pub fn build(&self, q: u64) -> Result<TwoGenPresentation> {
        TwoGenPresentation::new(q, self.relations.iter().map(|r| WordPoly(r.clone())).collect())
    }
}

/// A Γ-module: the matrices of x and y.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoGenModuleFile {
    pub x: Vec<Vec<i64>>,
    pub y: Vec<Vec<i64>>,
}

impl TwoGenModuleFile {
    pub fn build(&self, q: u64) -> Result<TwoGenModule> {
        let n = self.x.len();
        TwoGenModule::new(matrix(q, n, n, &self.x)?, matrix(q, n, n, &self.y)?)
    }
}

/// Points of a Grassmannian as RREF bases.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointSetDump {
    pub q: u64,
    pub e: Vec<usize>,
    pub points: Vec<Vec<Vec<u64>>>,
}

impl PointSetDump {
    pub fn new(q: u64, e: &[usize], points: &[Subspace]) -> Self {
        PointSetDump {
            q,
            e: e.to_vec(),
            points: points.iter().map(Subspace::basis_vectors).collect(),
        }
    }
}

/// A graph on point indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDump {
    pub q: u64,
    pub i: usize,
    pub dualized: bool,
    pub nodes: usize,
    pub edges: Vec<(usize, usize)>,
    pub connected: bool,
}
