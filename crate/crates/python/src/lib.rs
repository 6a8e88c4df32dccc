use std::sync::Arc;

use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use qgrass::ffla::{self, FpMatrix, Subspace};
use qgrass::grass;
use qgrass::io::{AlgebraFile, RepresentationFile};
use qgrass::meataxe::DimensionVector;
use qgrass::modrep::{self, Module};
use qgrass::pipelines::{self, TwoGenModule, TwoGenPresentation, WordPoly};
use qgrass::polyvar::{self, HomPoly};
use qgrass::qalg::{self, StandardKind};

create_exception!(qgrass_py, MismatchError, PyRuntimeError);
create_exception!(qgrass_py, BudgetExceededError, PyRuntimeError);

fn to_py(e: qgrass::Error) -> PyErr {
    match e {
        qgrass::Error::Mismatch(_) => MismatchError::new_err(e.to_string()),
        qgrass::Error::BudgetExceeded { .. } => BudgetExceededError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// Hand a serializable report to Python as plain dicts and lists.
fn to_python<T: serde::Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

fn matrix(p: u64, rows: Vec<Vec<i64>>) -> PyResult<FpMatrix> {
    FpMatrix::from_rows(p, &rows).map_err(to_py)
}

fn polys(n: usize, raw: Vec<Vec<(Vec<u32>, i64)>>) -> PyResult<Vec<HomPoly>> {
    raw.into_iter().map(|terms| HomPoly::new(n + 1, terms).map_err(to_py)).collect()
}

fn rows_of(s: &Subspace) -> Vec<Vec<u64>> {
    s.basis_vectors()
}

#[pyfunction]
fn gaussian_binomial(d: usize, k: usize, q: u64) -> u128 {
    ffla::gaussian_binomial(d, k, q)
}

/// Reduced row echelon form and pivot columns of an integer matrix mod p.
#[pyfunction]
fn rref(rows: Vec<Vec<i64>>, p: u64) -> PyResult<(Vec<Vec<u64>>, Vec<usize>)> {
    let r = matrix(p, rows)?.rref();
    Ok((r.matrix.row_vecs()[..r.rank].to_vec(), r.pivots))
}

/// F_q-points of the variety in P^n; each polynomial is a list of
/// (exponents, coefficient).
#[pyfunction]
fn variety_points(polynomials: Vec<Vec<(Vec<u32>, i64)>>, n: usize, q: u64) -> PyResult<Vec<Vec<u64>>> {
    let fs = polys(n, polynomials)?;
    Ok(polyvar::variety_points(&fs, n, q)
        .map_err(to_py)?
        .iter()
        .map(|pt| pt.coords().to_vec())
        .collect())
}

#[pyclass(name = "BoundAlgebra", module = "qgrass_py", skip_from_py_object)]
#[derive(Clone)]
struct PyBoundAlgebra {
    inner: Arc<qalg::BoundAlgebra>,
    spec: Option<AlgebraFile>,
}

#[pymethods]
impl PyBoundAlgebra {
    /// Algebra from its JSON description, over F_q.
    #[staticmethod]
    fn from_json(text: &str, q: u64) -> PyResult<Self> {
        let spec: AlgebraFile = serde_json::from_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(PyBoundAlgebra {
            inner: spec.build(q).map_err(to_py)?,
            spec: Some(spec),
        })
    }

    #[staticmethod]
    fn local_rsz(n: usize, p: u64) -> PyResult<Self> {
        Ok(PyBoundAlgebra {
            inner: Arc::new(qalg::local_rsz_algebra(n, p).map_err(to_py)?),
            spec: Some(AlgebraFile::LocalRsz { local_rsz: n }),
        })
    }

    #[staticmethod]
    #[pyo3(signature = (n, quadrics, p))]
    fn beilinson(n: usize, quadrics: Vec<Vec<(Vec<u32>, i64)>>, p: u64) -> PyResult<Self> {
        let qs = polys(n, quadrics)?;
        Ok(PyBoundAlgebra {
            inner: Arc::new(qalg::beilinson_algebra(n, &qs, p).map_err(to_py)?),
            spec: None,
        })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn modulus(&self) -> u64 {
        self.inner.modulus()
    }

    #[getter]
    fn vertices(&self) -> Vec<String> {
        self.inner.quiver().vertices().to_vec()
    }

    /// Labels of the basis paths.
    fn basis(&self) -> Vec<String> {
        let q = self.inner.quiver();
        self.inner.basis().iter().map(|p| q.path_label(p)).collect()
    }

    fn num_simples(&self, seed: u64) -> PyResult<usize> {
        Ok(qgrass::meataxe::simples_of(self.inner.sc(), seed).map_err(to_py)?.len())
    }

    fn __repr__(&self) -> String {
        format!("BoundAlgebra(dim={}, p={})", self.inner.dim(), self.inner.modulus())
    }
}

#[pyclass(name = "Representation", module = "qgrass_py", skip_from_py_object)]
#[derive(Clone)]
struct PyRepresentation {
    inner: modrep::Representation,
}

fn kind(name: &str) -> PyResult<StandardKind> {
    match name {
        "simple" => Ok(StandardKind::Simple),
        "projective" => Ok(StandardKind::Projective),
        "injective" => Ok(StandardKind::Injective),
        _ => Err(PyValueError::new_err(format!("unknown kind {name:?}"))),
    }
}

#[pymethods]
impl PyRepresentation {
    /// Matrices keyed by arrow label, with entries read mod p.
    #[new]
    fn new(algebra: &PyBoundAlgebra, dims: Vec<usize>, maps: Vec<(String, Vec<Vec<i64>>)>) -> PyResult<Self> {
        let p = algebra.inner.modulus();
        let maps = maps
            .into_iter()
            .map(|(l, rows)| Ok((l, matrix(p, rows)?)))
            .collect::<PyResult<Vec<_>>>()?;
        Ok(PyRepresentation {
            inner: modrep::Representation::from_labeled(algebra.inner.clone(), dims, &maps).map_err(to_py)?,
        })
    }

    #[staticmethod]
    fn from_json(text: &str, q: u64) -> PyResult<Self> {
        let file: RepresentationFile = serde_json::from_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(PyRepresentation {
            inner: file.build(q).map_err(to_py)?,
        })
    }

    /// The simple, projective or injective module at a vertex.
    #[staticmethod]
    fn standard(algebra: &PyBoundAlgebra, kind_name: &str, vertex: &str) -> PyResult<Self> {
        let v = algebra.inner.quiver().vertex(vertex).map_err(to_py)?;
        Ok(PyRepresentation {
            inner: qalg::standard_module(&algebra.inner, kind(kind_name)?, v).map_err(to_py)?,
        })
    }

    #[getter]
    fn dims(&self) -> Vec<usize> {
        self.inner.dims().to_vec()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn to_json(&self, algebra: &PyBoundAlgebra) -> PyResult<String> {
        let spec = algebra
            .spec
            .clone()
            .ok_or_else(|| PyValueError::new_err("algebra has no JSON description"))?;
        serde_json::to_string(&RepresentationFile::from_representation(spec, &self.inner))
            .map_err(|e| PyRuntimeError::new_err(e.to_string()))
    }

    fn direct_sum(&self, other: &PyRepresentation) -> PyResult<Self> {
        Ok(PyRepresentation {
            inner: self.inner.direct_sum(&other.inner).map_err(to_py)?.module,
        })
    }

    fn hom_dim(&self, other: &PyRepresentation) -> PyResult<usize> {
        Ok(modrep::hom_space(&self.inner, &other.inner).map_err(to_py)?.dim())
    }

    fn end_dim(&self) -> PyResult<usize> {
        self.hom_dim(self)
    }

    fn socle_dim(&self) -> PyResult<usize> {
        Ok(modrep::socle_radical_top(&self.inner).map_err(to_py)?.socle.dim())
    }

    /// Dimensions of the indecomposable summands.
    #[pyo3(signature = (seed = 0))]
    fn summand_dims(&self, seed: u64) -> PyResult<Vec<usize>> {
        let d = modrep::decompose(&self.inner, seed).map_err(to_py)?;
        Ok(d.summands.iter().map(Module::dim).collect())
    }

    /// Submodules with dimension vector e, each as a list of RREF rows.
    #[pyo3(signature = (e, budget = ffla::DEFAULT_BUDGET))]
    fn grassmannian(&self, e: Vec<usize>, budget: u64) -> PyResult<Vec<Vec<Vec<u64>>>> {
        let set = grass::grassmannian_points(&self.inner, &e, budget).map_err(to_py)?;
        Ok(set.points.iter().map(rows_of).collect())
    }

    /// Line-family graph on G_i(M) for a module over a local
    /// radical-square-zero algebra.
    #[pyo3(signature = (i, budget = ffla::DEFAULT_BUDGET))]
    fn connectivity(&self, py: Python<'_>, i: usize, budget: u64) -> PyResult<Py<PyAny>> {
        let r = grass::connectivity_check(&self.inner, i, budget).map_err(to_py)?;
        let graph = serde_json::json!({
            "nodes": r.nodes.len(),
            "edges": r.edges,
            "connected": r.connected,
            "dualized": r.dualized,
        });
        to_python(py, &graph)
    }

    fn __repr__(&self) -> String {
        format!("Representation(dims={:?})", self.inner.dims())
    }
}

/// Check that V(polynomials) ⊆ P^n is G_(1,1,1) of a Beilinson injective
/// over each q; returns one report per q.
#[pyfunction]
#[pyo3(signature = (polynomials, n, qs, budget = ffla::DEFAULT_BUDGET))]
fn verify_realization(
    py: Python<'_>,
    polynomials: Vec<Vec<(Vec<u32>, i64)>>,
    n: usize,
    qs: Vec<u64>,
    budget: u64,
) -> PyResult<Py<PyAny>> {
    let fs = polys(n, polynomials)?;
    let reports = pipelines::verify_realization(&fs, n, &qs, budget).map_err(to_py)?;
    to_python(py, &reports)
}

fn two_gen_module(p: u64, x: Vec<Vec<i64>>, y: Vec<Vec<i64>>) -> PyResult<TwoGenModule> {
    TwoGenModule::new(matrix(p, x)?, matrix(p, y)?).map_err(to_py)
}

/// Hom(FX, FY) against Hom(X, Y) for modules over F_p<x,y>.
#[pyfunction]
fn verify_controlled(
    py: Python<'_>,
    p: u64,
    x: (Vec<Vec<i64>>, Vec<Vec<i64>>),
    y: (Vec<Vec<i64>>, Vec<Vec<i64>>),
) -> PyResult<Py<PyAny>> {
    let alg = pipelines::control_algebra(p).map_err(to_py)?;
    let x = two_gen_module(p, x.0, x.1)?;
    let y = two_gen_module(p, y.0, y.1)?;
    to_python(py, &pipelines::verify_controlled(&x, &y, &alg, 0).map_err(to_py)?)
}

/// Auslander-variety comparison for Γ = F_q<x,y>/(relations), each relation
/// a list of (word, coefficient); M given by its x and y matrices.
#[pyfunction]
#[pyo3(signature = (relations, x, y, g, q, budget = ffla::DEFAULT_BUDGET, seed = 0))]
#[allow(clippy::too_many_arguments)]
fn auslander(
    py: Python<'_>,
    relations: Vec<Vec<(String, i64)>>,
    x: Vec<Vec<i64>>,
    y: Vec<Vec<i64>>,
    g: Vec<usize>,
    q: u64,
    budget: u64,
    seed: u64,
) -> PyResult<Py<PyAny>> {
    let pres = TwoGenPresentation::new(q, relations.into_iter().map(WordPoly).collect()).map_err(to_py)?;
    let m = two_gen_module(q, x, y)?;
    let report = pipelines::auslander_pipeline(&pres, &m, &DimensionVector(g), budget, seed).map_err(to_py)?;
    to_python(py, &report)
}

#[pymodule]
fn qgrass_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("MismatchError", m.py().get_type::<MismatchError>())?;
    m.add("BudgetExceededError", m.py().get_type::<BudgetExceededError>())?;
    m.add_class::<PyBoundAlgebra>()?;
    m.add_class::<PyRepresentation>()?;
    m.add_function(wrap_pyfunction!(gaussian_binomial, m)?)?;
    m.add_function(wrap_pyfunction!(rref, m)?)?;
    m.add_function(wrap_pyfunction!(variety_points, m)?)?;
    m.add_function(wrap_pyfunction!(verify_realization, m)?)?;
    m.add_function(wrap_pyfunction!(verify_controlled, m)?)?;
    m.add_function(wrap_pyfunction!(auslander, m)?)?;
    Ok(())
}
