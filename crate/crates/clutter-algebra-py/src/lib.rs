//! Python bindings. Reports come back as plain dicts and lists.

use clutter_algebra::canonical;
use clutter_algebra::clutter as cl;
use clutter_algebra::linalg;
use clutter_algebra::rounding::{self, DualityOptions, RoundingOptions};
use clutter_algebra::semigroup;
use clutter_algebra::symbolic::{self, MonomialGen};
use clutter_algebra::{Error, Int, IntMatrix, IntVec};
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;

create_exception!(clutter_algebra_py, OverCapError, PyException, "Instance exceeds a size cap.");
create_exception!(clutter_algebra_py, CrossCheckError, PyException, "Two independent routes disagreed.");

fn err(e: Error) -> PyErr {
    match e {
        Error::OverCap(m) => OverCapError::new_err(m),
        Error::CrossCheck(m) => CrossCheckError::new_err(m),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn to_py<T: serde::Serialize>(py: Python<'_>, v: &T) -> PyResult<Py<PyAny>> {
    let s = serde_json::to_string(v).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(py.import("json")?.call_method1("loads", (s,))?.unbind())
}

fn matrix(rows: Vec<Vec<i64>>) -> PyResult<IntMatrix> {
    let c = rows.first().map(|r| r.len()).unwrap_or(0);
    if c == 0 || rows.iter().any(|r| r.len() != c) {
        return Err(PyValueError::new_err("rows must be nonempty and of equal length"));
    }
    Ok(IntMatrix::from_i64_rows(&rows))
}

fn vectors(v: Vec<Vec<i64>>) -> Vec<IntVec> {
    v.into_iter().map(|r| r.into_iter().map(Int::from).collect()).collect()
}

fn plain(v: &[Int]) -> PyResult<Vec<i64>> {
    v.iter().map(|x| x.to_i64().ok_or_else(|| PyValueError::new_err("entry exceeds 64 bits"))).collect()
}

fn render(gens: &[MonomialGen], names: &[String]) -> Vec<String> {
    gens.iter().map(|g| g.render(names)).collect()
}

fn rounding_options(box_max: Option<u32>, box_limit: Option<usize>, subring_cap: Option<usize>) -> RoundingOptions {
    let d = RoundingOptions::default();
    RoundingOptions {
        box_max: box_max.unwrap_or(d.box_max),
        box_limit: box_limit.unwrap_or(d.box_limit),
        subring_cap: subring_cap.unwrap_or(d.subring_cap),
    }
}

/// A clutter on named vertices.
#[pyclass(name = "Clutter", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyClutter {
    inner: clutter_algebra::Clutter,
}

#[pymethods]
impl PyClutter {
    #[new]
    fn new(vertices: Vec<String>, edges: Vec<Vec<String>>) -> PyResult<Self> {
        let mut text = format!("vertices: {}\n", vertices.join(" "));
        for e in edges {
            text.push_str(&e.join(" "));
            text.push('\n');
        }
        Self::parse(&text)
    }

    /// Parses the clutter text format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyClutter { inner: clutter_algebra::Clutter::parse(text).map_err(err)? })
    }

    /// Clutter whose edges are the supports of the columns of a 0/1 matrix.
    #[staticmethod]
    fn from_matrix(rows: Vec<Vec<i64>>) -> PyResult<Self> {
        Ok(PyClutter { inner: clutter_algebra::Clutter::from_incidence(&matrix(rows)?).map_err(err)? })
    }

    #[getter]
    fn vertices(&self) -> Vec<String> {
        self.inner.vertices.clone()
    }

    #[getter]
    fn edges(&self) -> Vec<Vec<String>> {
        self.inner.edges.iter().map(|&e| self.inner.set_names(e)).collect()
    }

    fn incidence_matrix(&self) -> PyResult<Vec<Vec<i64>>> {
        let a = self.inner.incidence_matrix();
        (0..a.rows).map(|i| plain(&a.row(i))).collect()
    }

    fn minimal_vertex_covers(&self) -> Vec<Vec<String>> {
        cl::minimal_vertex_covers(&self.inner).covers
    }

    fn blocker(&self) -> Self {
        PyClutter { inner: cl::blocker(&self.inner) }
    }

    fn alpha0(&self) -> u32 {
        cl::alpha0(&self.inner)
    }

    fn beta1(&self) -> u32 {
        cl::beta1(&self.inner)
    }

    fn is_koenig(&self) -> bool {
        cl::koenig(&self.inner)
    }

    /// `None` when every minor is Konig, else the failing minor as a dict.
    #[pyo3(signature = (max_vertices = cl::DEFAULT_PACKING_CAP))]
    fn packing_failure(&self, py: Python<'_>, max_vertices: usize) -> PyResult<Option<Py<PyAny>>> {
        match cl::packing_property(&self.inner, max_vertices).map_err(err)? {
            None => Ok(None),
            Some(m) => Ok(Some(to_py(py, &m)?)),
        }
    }

    fn perfect_matching(&self) -> Option<Vec<Vec<String>>> {
        cl::perfect_matching(&self.inner)
    }

    fn is_normal(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_py(py, &rounding::is_normal_edge_ideal(&self.inner).map_err(err)?)
    }

    fn mfmc(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_py(py, &rounding::mfmc(&self.inner).map_err(err)?)
    }

    fn normally_torsion_free(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_py(py, &rounding::normally_torsion_free(&self.inner).map_err(err)?)
    }

    #[pyo3(signature = (box_max = None, box_limit = None, subring_cap = None))]
    fn duality_report(&self, py: Python<'_>, box_max: Option<u32>, box_limit: Option<usize>, subring_cap: Option<usize>) -> PyResult<Py<PyAny>> {
        let opt = DualityOptions { rounding: rounding_options(box_max, box_limit, subring_cap) };
        let r = rounding::duality_report(&self.inner, opt).map_err(err)?;
        to_py(py, &r.to_json())
    }

    #[pyo3(signature = (max_vertices = symbolic::DEFAULT_SYMBOLIC_CAP))]
    fn symbolic_rees_generators(&self, max_vertices: usize) -> PyResult<Vec<String>> {
        let g = symbolic::symbolic_rees_generators_capped(&self.inner, max_vertices).map_err(err)?;
        Ok(render(&g, &self.inner.vertices))
    }

    #[pyo3(signature = (max_vertices = symbolic::DEFAULT_SYMBOLIC_CAP))]
    fn cover_algebra_generators(&self, max_vertices: usize) -> PyResult<Vec<String>> {
        let g = symbolic::cover_algebra_generators_capped(&self.inner, max_vertices).map_err(err)?;
        Ok(render(&g, &self.inner.vertices))
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Clutter({} vertices, {} edges)", self.inner.n(), self.inner.q())
    }

    fn __len__(&self) -> usize {
        self.inner.q()
    }
}

/// Invariant factors of the Smith normal form.
#[pyfunction]
fn smith_invariants(rows: Vec<Vec<i64>>) -> PyResult<Vec<String>> {
    Ok(linalg::snf(&matrix(rows)?).map_err(err)?.diag.iter().map(|d| d.to_string()).collect())
}

/// Gcd of the nonzero r x r minors; r defaults to the rank.
#[pyfunction]
#[pyo3(signature = (rows, r = None))]
fn delta_r(rows: Vec<Vec<i64>>, r: Option<usize>) -> PyResult<String> {
    let m = matrix(rows)?;
    let r = r.unwrap_or_else(|| m.rank());
    Ok(linalg::delta_r(&m, r).map_err(err)?.to_string())
}

/// Minimal Hilbert basis of the pointed cone generated by the vectors.
#[pyfunction]
fn hilbert_basis(generators: Vec<Vec<i64>>) -> PyResult<Vec<Vec<i64>>> {
    let hb = semigroup::hilbert_basis(&vectors(generators)).map_err(err)?;
    let mut el: Vec<Vec<i64>> = hb.elements.iter().map(|v| plain(v)).collect::<PyResult<_>>()?;
    el.sort();
    Ok(el)
}

#[pyfunction]
fn is_hilbert_basis(py: Python<'_>, vectors_: Vec<Vec<i64>>) -> PyResult<Py<PyAny>> {
    to_py(py, &semigroup::is_hilbert_basis(&vectors(vectors_)).map_err(err)?)
}

/// Integer rounding of one of the systems "ge", "le", "eq" for the matrix A.
#[pyfunction]
#[pyo3(signature = (rows, system, box_max = None, box_limit = None, subring_cap = None))]
fn integer_rounding(
    py: Python<'_>,
    rows: Vec<Vec<i64>>,
    system: &str,
    box_max: Option<u32>,
    box_limit: Option<usize>,
    subring_cap: Option<usize>,
) -> PyResult<Py<PyAny>> {
    let a = matrix(rows)?;
    let opt = rounding_options(box_max, box_limit, subring_cap);
    let v = match system {
        "ge" => rounding::irp_ge_with(&a, opt),
        "le" => rounding::irp_le_with(&a, opt),
        "eq" => rounding::irp_eq_with(&a, opt),
        _ => return Err(PyValueError::new_err("system must be 'ge', 'le' or 'eq'")),
    }
    .map_err(err)?;
    to_py(py, &v)
}

#[pyfunction]
fn a_invariant(rows: Vec<Vec<i64>>) -> PyResult<String> {
    Ok(canonical::a_invariant_s(&matrix(rows)?).map_err(err)?.value.to_string())
}

#[pyfunction]
fn is_gorenstein(py: Python<'_>, rows: Vec<Vec<i64>>) -> PyResult<Py<PyAny>> {
    to_py(py, &canonical::is_gorenstein_s(&matrix(rows)?).map_err(err)?)
}

/// Minimal generators of the canonical module as monomial strings.
#[pyfunction]
#[pyo3(signature = (rows, window = None))]
fn canonical_module(rows: Vec<Vec<i64>>, window: Option<i64>) -> PyResult<Vec<String>> {
    let a = matrix(rows)?;
    let names: Vec<String> = (1..=a.rows).map(|i| format!("x{i}")).collect();
    let m = canonical::canonical_module_gens(&a, window.map(Int::from)).map_err(err)?;
    Ok(m.render(&names))
}

/// `None` when balanced, else the rows and columns of an odd hole.
#[pyfunction]
#[pyo3(signature = (rows, max_size = cl::DEFAULT_BALANCE_CAP))]
fn odd_hole(rows: Vec<Vec<i64>>, max_size: usize) -> PyResult<Option<(Vec<usize>, Vec<usize>)>> {
    Ok(cl::is_balanced(&matrix(rows)?, max_size).map_err(err)?.map(|h| (h.rows, h.cols)))
}

#[pymodule]
fn clutter_algebra_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyClutter>()?;
    m.add("OverCapError", m.py().get_type::<OverCapError>())?;
    m.add("CrossCheckError", m.py().get_type::<CrossCheckError>())?;
    m.add_function(wrap_pyfunction!(smith_invariants, m)?)?;
    m.add_function(wrap_pyfunction!(delta_r, m)?)?;
    m.add_function(wrap_pyfunction!(hilbert_basis, m)?)?;
    m.add_function(wrap_pyfunction!(is_hilbert_basis, m)?)?;
    m.add_function(wrap_pyfunction!(integer_rounding, m)?)?;
    m.add_function(wrap_pyfunction!(a_invariant, m)?)?;
    m.add_function(wrap_pyfunction!(is_gorenstein, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_module, m)?)?;
    m.add_function(wrap_pyfunction!(odd_hole, m)?)?;
    Ok(())
}
