use std::sync::Arc;

use num_bigint::BigInt;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use tropvar::cli::{self, CliError, Output, TraverseFlags};
use tropvar::groebner::{monomial_in_ideal, GroebnerConePair, Ideal};
use tropvar::linalg::IntVector;
use tropvar::poly::{fmt_monomial, parse_polynomial, parse_polynomial_list, parse_ring, Polynomial, Ring};
use tropvar::polyhedra::{Cone, Fan};
use tropvar::symmetry::{close_group, Permutation};
use tropvar::tropical;
use tropvar::Error;

fn core_err(e: Error) -> PyErr {
    match e {
        Error::Parse(p) => PyValueError::new_err(p.to_string()),
        other => PyRuntimeError::new_err(other.to_string()),
    }
}

fn cli_err(e: CliError) -> PyErr {
    match e {
        CliError::Parse(p) => PyValueError::new_err(p.to_string()),
        other => PyRuntimeError::new_err(other.to_string()),
    }
}

fn vectors(vs: &[IntVector]) -> Vec<Vec<BigInt>> {
    vs.iter().map(|v| v.entries().to_vec()).collect()
}

#[pyclass(name = "Ring", frozen, from_py_object)]
#[derive(Clone)]
struct PyRing(Arc<Ring>);

#[pymethods]
impl PyRing {
    /// Parses a declaration such as `Q[x,y,z]`.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        parse_ring(text).map(PyRing).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    #[getter]
    fn names(&self) -> Vec<String> {
        self.0.names().to_vec()
    }

    fn __len__(&self) -> usize {
        self.0.n()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Ring('{}')", self.0)
    }
}

#[pyclass(name = "Polynomial", frozen, from_py_object)]
#[derive(Clone)]
struct PyPolynomial(Polynomial);

#[pymethods]
impl PyPolynomial {
    #[new]
    fn new(ring: &PyRing, text: &str) -> PyResult<Self> {
        parse_polynomial(text, &ring.0).map(PyPolynomial).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    #[getter]
    fn ring(&self) -> PyRing {
        PyRing(self.0.ring().clone())
    }

    fn is_homogeneous(&self) -> bool {
        self.0.is_homogeneous()
    }

    fn total_degree(&self) -> Option<u64> {
        self.0.total_degree()
    }

    /// Exponent vectors of the terms.
    fn support(&self) -> Vec<Vec<u32>> {
        self.0.support().map(|m| m.exps().to_vec()).collect()
    }

    /// The tropical hypersurface as a list of cones.
    fn tropical_hypersurface(&self) -> PyResult<Vec<PyCone>> {
        tropical::tropical_hypersurface(&self.0).map(|f| fan_cones(&f)).map_err(core_err)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial('{}')", self.0)
    }
}

#[pyclass(name = "Cone", frozen)]
struct PyCone(Cone);

fn fan_cones(f: &Fan) -> Vec<PyCone> {
    f.cones().iter().cloned().map(PyCone).collect()
}

#[pymethods]
impl PyCone {
    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    #[getter]
    fn ambient_dim(&self) -> usize {
        self.0.ambient_dim()
    }

    #[getter]
    fn equations(&self) -> Vec<Vec<BigInt>> {
        vectors(self.0.equations())
    }

    #[getter]
    fn inequalities(&self) -> Vec<Vec<BigInt>> {
        vectors(self.0.inequalities())
    }

    #[getter]
    fn rays(&self) -> Vec<Vec<BigInt>> {
        vectors(self.0.rays())
    }

    #[getter]
    fn lineality(&self) -> Vec<Vec<BigInt>> {
        vectors(self.0.lineality())
    }

    fn contains(&self, w: Vec<i64>) -> bool {
        w.len() == self.0.ambient_dim() && self.0.contains(&IntVector::from(w))
    }

    fn __repr__(&self) -> String {
        format!("Cone(dim={}, rays={:?})", self.0.dim(), self.0.rays())
    }
}

#[pyclass(name = "Ideal", frozen)]
struct PyIdeal(Ideal);

#[pymethods]
impl PyIdeal {
    #[new]
    fn new(generators: Vec<PyPolynomial>) -> PyResult<Self> {
        let Some(first) = generators.first() else {
            return Err(PyValueError::new_err("an ideal needs at least one generator"));
        };
        let ring = first.0.ring().clone();
        Ideal::new(&ring, generators.into_iter().map(|p| p.0).collect()).map(PyIdeal).map_err(core_err)
    }

    /// Parses `Q[x,y]` and a `{f, g}` list.
    #[staticmethod]
    fn parse(ring: &str, generators: &str) -> PyResult<Self> {
        let ring = parse_ring(ring).map_err(|e| PyValueError::new_err(e.to_string()))?;
        let gens = parse_polynomial_list(generators, &ring).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ideal::new(&ring, gens).map(PyIdeal).map_err(core_err)
    }

    #[getter]
    fn ring(&self) -> PyRing {
        PyRing(self.0.ring().clone())
    }

    #[getter]
    fn generators(&self) -> Vec<PyPolynomial> {
        self.0.generators().iter().cloned().map(PyPolynomial).collect()
    }

    /// Reduced Groebner basis for degrevlex, marked terms first.
    fn groebner_basis(&self) -> Vec<String> {
        self.0.groebner_basis().elements().iter().map(ToString::to_string).collect()
    }

    fn contains(&self, f: &PyPolynomial) -> bool {
        self.0.contains(&f.0)
    }

    fn is_homogeneous(&self) -> bool {
        self.0.is_homogeneous()
    }

    fn krull_dimension(&self) -> Option<usize> {
        self.0.krull_dimension()
    }

    fn homogeneity_space(&self) -> Vec<Vec<BigInt>> {
        vectors(&self.0.homogeneity_space())
    }

    fn homogenized(&self) -> PyResult<PyIdeal> {
        self.0.homogenized().map(PyIdeal).map_err(core_err)
    }

    /// A monomial of the ideal as text, or None.
    fn monomial(&self) -> PyResult<Option<String>> {
        let m = monomial_in_ideal(&self.0).map_err(core_err)?;
        Ok(m.map(|m| fmt_monomial(self.0.ring(), &m)))
    }

    fn tropical_prevariety(&self) -> PyResult<Vec<PyCone>> {
        tropical::tropical_prevariety(self.0.generators()).map(|f| fan_cones(&f)).map_err(core_err)
    }

    #[pyo3(signature = (seed = 0))]
    fn curve_basis(&self, seed: u64) -> PyResult<Vec<PyPolynomial>> {
        let basis = tropical::tropical_basis_of_curve(&self.0, seed).map_err(core_err)?;
        Ok(basis.into_iter().map(PyPolynomial).collect())
    }

    #[pyo3(signature = (seed = 0))]
    fn starting_cone(&self, seed: u64) -> PyResult<PyConePair> {
        tropical::starting_cone(&self.0, seed).map(PyConePair).map_err(core_err)
    }
}

#[pyclass(name = "GroebnerConePair", frozen)]
struct PyConePair(GroebnerConePair);

#[pymethods]
impl PyConePair {
    #[getter]
    fn initial_gb(&self) -> Vec<String> {
        self.0.initial_gb.elements().iter().map(ToString::to_string).collect()
    }

    #[getter]
    fn full_gb(&self) -> Vec<String> {
        self.0.full_gb.elements().iter().map(ToString::to_string).collect()
    }

    fn cone(&self) -> PyResult<PyCone> {
        tropical::groebner_cone(&self.0).map(PyCone).map_err(core_err)
    }

    /// Traverses the tropical variety. `symmetry` lists permutations as
    /// image lists; they must keep the ideal invariant.
    #[pyo3(signature = (symmetry = None, seed = 0, jobs = 1))]
    fn traverse(&self, symmetry: Option<Vec<Vec<usize>>>, seed: u64, jobs: usize) -> PyResult<PyTropicalVariety> {
        let n = self.0.ring().n();
        let group = match symmetry {
            Some(gens) => {
                let perms = gens.into_iter().map(Permutation::new).collect::<Result<Vec<_>, _>>().map_err(core_err)?;
                let group = close_group(n, &perms).map_err(core_err)?;
                let ideal = Ideal::from_gb(self.0.full_gb.clone());
                if !tropvar::symmetry::check_ideal_invariance(&ideal, &group) {
                    return Err(PyValueError::new_err("a permutation does not keep the ideal invariant"));
                }
                group
            }
            None => tropvar::symmetry::PermGroup::trivial(n),
        };
        let opts = tropical::TraverseOptions { seed, jobs: jobs.max(1), ..Default::default() };
        tropical::traverse_with(&self.0, Some(&group), &opts).map(PyTropicalVariety).map_err(core_err)
    }

    fn __str__(&self) -> String {
        cli::format_pair(&self.0, None)
    }
}

#[pyclass(name = "TropicalVariety", frozen)]
struct PyTropicalVariety(tropical::TropicalVariety);

#[pymethods]
impl PyTropicalVariety {
    #[getter]
    fn f_vector(&self) -> Vec<usize> {
        self.0.statistics.f_vector.clone()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.statistics.dim
    }

    #[getter]
    fn homogeneity_dim(&self) -> usize {
        self.0.statistics.homog_dim
    }

    #[getter]
    fn simplicial(&self) -> bool {
        self.0.statistics.simplicial
    }

    #[getter]
    fn group_order(&self) -> usize {
        self.0.group.order()
    }

    #[getter]
    fn cones(&self) -> Vec<PyCone> {
        fan_cones(&self.0.fan)
    }

    /// The text report printed by `tropvar traverse`.
    fn report(&self) -> String {
        cli::format_report(&self.0)
    }
}

fn text(r: Result<Output, CliError>) -> PyResult<String> {
    r.map(|o| o.stdout).map_err(cli_err)
}

#[pyfunction]
#[pyo3(signature = (input, seed = 0))]
fn cmd_startingcone(input: &str, seed: u64) -> PyResult<String> {
    text(cli::cmd_startingcone(input, seed))
}

#[pyfunction]
#[pyo3(signature = (input, symmetry = false, seed = 0, jobs = 1, restrict_northern = false))]
fn cmd_traverse(input: &str, symmetry: bool, seed: u64, jobs: usize, restrict_northern: bool) -> PyResult<String> {
    let flags = TraverseFlags { symmetry, seed, jobs, restrict_northern, full_restart: false };
    text(cli::cmd_traverse(input, &flags))
}

#[pyfunction]
fn cmd_prevariety(input: &str) -> PyResult<String> {
    text(cli::cmd_prevariety(input))
}

#[pyfunction]
#[pyo3(signature = (input, seed = 0))]
fn cmd_curvebasis(input: &str, seed: u64) -> PyResult<String> {
    text(cli::cmd_curvebasis(input, seed))
}

#[pyfunction]
fn cmd_monomial(input: &str) -> PyResult<String> {
    text(cli::cmd_monomial(input))
}

#[pyfunction]
fn uniform_bergman_member(w: Vec<i64>, d: usize) -> PyResult<bool> {
    if d >= w.len() {
        return Err(PyValueError::new_err("d must be smaller than the length of w"));
    }
    Ok(tropical::uniform_bergman_member(&IntVector::from(w), d))
}

#[pymodule]
#[pyo3(name = "tropvar")]
fn tropvar_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRing>()?;
    m.add_class::<PyPolynomial>()?;
    m.add_class::<PyCone>()?;
    m.add_class::<PyIdeal>()?;
    m.add_class::<PyConePair>()?;
    m.add_class::<PyTropicalVariety>()?;
    m.add_function(wrap_pyfunction!(cmd_startingcone, m)?)?;
    m.add_function(wrap_pyfunction!(cmd_traverse, m)?)?;
    m.add_function(wrap_pyfunction!(cmd_prevariety, m)?)?;
    m.add_function(wrap_pyfunction!(cmd_curvebasis, m)?)?;
    m.add_function(wrap_pyfunction!(cmd_monomial, m)?)?;
    m.add_function(wrap_pyfunction!(uniform_bergman_member, m)?)?;
    Ok(())
}
