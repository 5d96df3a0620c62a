//! Python module `pywhitten`.

use pyo3::exceptions::{PyKeyError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use whitten::census::Census;
use whitten::diagram::{parse_pd, serialize_pd, LinkDiagram};
use whitten::group::{identify_group, match_named_subgroup_2, Permutation};
use whitten::invariants::{homflypt, jones};
use whitten::linkmat::stabilizer_bruteforce;
use whitten::sym_filter::{sigma_prime as filter, FilterOptions};
use whitten::{Error, LinkingMatrix, Subgroup, WhittenElement};

fn err(e: Error) -> PyErr {
    match e {
        Error::UnknownLink(_) => PyKeyError::new_err(e.to_string()),
        Error::ResourceLimit(_) | Error::Io(_) | Error::CensusValidation(_) => {
            PyRuntimeError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// An element `(ε0, ε1..εμ, p)` of the Whitten group.
#[pyclass(name = "Element", module = "pywhitten", frozen, from_py_object)]
#[derive(Clone)]
pub struct PyElement(WhittenElement);

#[pymethods]
impl PyElement {
    /// `perm` is in one-line notation with 1-based images.
    #[new]
    fn new(eps0: i8, eps: Vec<i8>, perm: Vec<usize>) -> PyResult<Self> {
        let p = Permutation::from_one_line(&perm).map_err(err)?;
        WhittenElement::new(eps0, eps, p).map(PyElement).map_err(err)
    }

    /// Parses `(1,-1,1,(12))`.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        WhittenElement::parse(text).map(PyElement).map_err(err)
    }

    #[staticmethod]
    fn identity(mu: usize) -> Self {
        PyElement(WhittenElement::identity(mu))
    }

    #[getter]
    fn mu(&self) -> usize {
        self.0.mu()
    }

    #[getter]
    fn eps0(&self) -> i8 {
        self.0.eps0()
    }

    #[getter]
    fn eps(&self) -> Vec<i8> {
        self.0.eps().to_vec()
    }

    #[getter]
    fn perm(&self) -> Vec<usize> {
        self.0.perm().one_line()
    }

    fn compose(&self, other: &PyElement) -> PyResult<Self> {
        self.0.compose(&other.0).map(PyElement).map_err(err)
    }

    fn __mul__(&self, other: &PyElement) -> PyResult<Self> {
        self.compose(other)
    }

    fn inverse(&self) -> Self {
        PyElement(self.0.inverse())
    }

    fn order(&self) -> usize {
        self.0.order()
    }

    fn is_mirror(&self) -> bool {
        self.0.is_mirror()
    }

    fn __eq__(&self, other: &PyElement) -> bool {
        self.0 == other.0
    }

    fn __hash__(&self) -> u64 {
        (self.0.mu() as u64) << 32 | self.0.index() as u64
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Element('{}')", self.0)
    }
}

/// A subgroup of the Whitten group, stored as its full element list.
#[pyclass(name = "Subgroup", module = "pywhitten", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PySubgroup(Subgroup);

#[pymethods]
impl PySubgroup {
    #[staticmethod]
    fn generate(mu: usize, gens: Vec<PyElement>) -> PyResult<Self> {
        let gens: Vec<WhittenElement> = gens.into_iter().map(|g| g.0).collect();
        Subgroup::generate(mu, &gens).map(PySubgroup).map_err(err)
    }

    #[staticmethod]
    fn full(mu: usize) -> PyResult<Self> {
        Subgroup::full(mu).map(PySubgroup).map_err(err)
    }

    #[getter]
    fn mu(&self) -> usize {
        self.0.mu()
    }

    fn order(&self) -> usize {
        self.0.order()
    }

    fn __len__(&self) -> usize {
        self.0.order()
    }

    fn elements(&self) -> Vec<PyElement> {
        self.0.elements().iter().cloned().map(PyElement).collect()
    }

    fn generators(&self) -> Vec<PyElement> {
        self.0.small_generating_set().into_iter().map(PyElement).collect()
    }

    fn __contains__(&self, g: &PyElement) -> bool {
        self.0.contains(&g.0)
    }

    fn coset_index(&self) -> usize {
        self.0.coset_index()
    }

    fn is_subgroup_of(&self, other: &PySubgroup) -> bool {
        self.0.is_subgroup_of(&other.0)
    }

    fn conjugate(&self, g: &PyElement) -> PyResult<Self> {
        self.0.conjugate(&g.0).map(PySubgroup).map_err(err)
    }

    /// Isomorphism type, e.g. `D4` or `Z2xZ2xZ2`.
    fn isomorphism(&self) -> String {
        identify_group(&self.0).to_string()
    }

    /// Catalog name for μ = 2, prefixed with `~` when only a conjugate matches.
    fn name(&self) -> Option<String> {
        (self.0.mu() == 2).then(|| {
            let m = match_named_subgroup_2(&self.0);
            if m.conjugate {
                format!("~{}", m.name)
            } else {
                m.name.to_string()
            }
        })
    }

    fn __eq__(&self, other: &PySubgroup) -> bool {
        self.0.same_elements(&other.0)
    }

    fn __repr__(&self) -> String {
        format!("Subgroup(mu={}, order={})", self.0.mu(), self.0.order())
    }
}

/// An oriented, component-labeled link diagram.
#[pyclass(name = "Diagram", module = "pywhitten", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyDiagram(LinkDiagram);

#[pymethods]
impl PyDiagram {
    #[staticmethod]
    fn from_pd(text: &str) -> PyResult<Self> {
        parse_pd(text).map(PyDiagram).map_err(err)
    }

    fn to_pd(&self) -> String {
        serialize_pd(&self.0)
    }

    #[getter]
    fn mu(&self) -> usize {
        self.0.mu()
    }

    fn crossing_count(&self) -> usize {
        self.0.crossing_count()
    }

    fn writhe(&self) -> i64 {
        self.0.writhe()
    }

    fn linking_matrix(&self) -> Vec<Vec<i64>> {
        self.0.linking_matrix().rows().to_vec()
    }

    /// Jones polynomial in `t`, with half-integer exponents as `t^{k/2}`.
    fn jones(&self) -> PyResult<String> {
        jones(&self.0).map(|p| p.display_with("t")).map_err(err)
    }

    fn homflypt(&self) -> PyResult<String> {
        homflypt(&self.0).map(|p| p.display()).map_err(err)
    }

    fn mirror(&self) -> Self {
        PyDiagram(self.0.mirror())
    }

    fn apply(&self, g: &PyElement) -> PyResult<Self> {
        self.0.apply_whitten(&g.0).map(PyDiagram).map_err(err)
    }

    fn simplify(&self) -> Self {
        PyDiagram(self.0.simplify())
    }

    fn __repr__(&self) -> String {
        format!("Diagram(mu={}, crossings={})", self.0.mu(), self.0.crossing_count())
    }
}

/// Stabilizer of a symmetric linking matrix under the Whitten action.
#[pyfunction]
fn stabilizer(matrix: Vec<Vec<i64>>) -> PyResult<PySubgroup> {
    let a = LinkingMatrix::new(matrix).map_err(err)?;
    stabilizer_bruteforce(&a).map(PySubgroup).map_err(err)
}

/// Upper bound on the symmetry group from the invariant filter.
#[pyfunction]
#[pyo3(signature = (diagram, satellites = false))]
fn sigma_prime(diagram: &PyDiagram, satellites: bool) -> PyResult<PySubgroup> {
    filter(&diagram.0, &FilterOptions::with_satellites(satellites))
        .map(|r| PySubgroup(r.sigma_prime))
        .map_err(err)
}

fn census() -> PyResult<Census> {
    Census::from_env().map_err(err)
}

/// Census diagram, calibrated to the reference orientation and labels.
#[pyfunction]
fn census_diagram(name: &str) -> PyResult<PyDiagram> {
    let c = census()?;
    let d = c.get(name).and_then(|r| r.diagram()).map_err(err)?;
    Ok(PyDiagram(d))
}

/// Symmetry group recorded in the census.
#[pyfunction]
fn census_sigma(name: &str) -> PyResult<PySubgroup> {
    census()?.ground_truth_sigma(name).map(PySubgroup).map_err(err)
}

/// Runs the filter on a census link and returns the verdict against the census group.
#[pyfunction]
#[pyo3(signature = (name, satellites = false))]
fn census_compare(name: &str, satellites: bool) -> PyResult<String> {
    let r = census()?
        .compare_to_truth(name, &FilterOptions::with_satellites(satellites))
        .map_err(err)?;
    Ok(r.verdict.map_or_else(String::new, |v| v.to_string()))
}

#[pyfunction]
fn census_names() -> PyResult<Vec<String>> {
    Ok(census()?.records.iter().map(|r| r.rolfsen.clone()).collect())
}

#[pyfunction]
fn gamma_order(mu: usize) -> usize {
    whitten::group::gamma_order(mu)
}

#[pymodule]
fn pywhitten(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyElement>()?;
    m.add_class::<PySubgroup>()?;
    m.add_class::<PyDiagram>()?;
    m.add_function(wrap_pyfunction!(stabilizer, m)?)?;
    m.add_function(wrap_pyfunction!(sigma_prime, m)?)?;
    m.add_function(wrap_pyfunction!(census_diagram, m)?)?;
    m.add_function(wrap_pyfunction!(census_sigma, m)?)?;
    m.add_function(wrap_pyfunction!(census_compare, m)?)?;
    m.add_function(wrap_pyfunction!(census_names, m)?)?;
    m.add_function(wrap_pyfunction!(gamma_order, m)?)?;
    Ok(())
}
