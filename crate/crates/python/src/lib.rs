//! Python bindings for `extremal-core`.
//!
//! Every computation takes an optional `char` keyword (default 32003) naming
//! the prime field. Errors from the core surface as `ValueError`.

use extremal_core::cli;
use extremal_core::complexcore::{
    self, MonomialIdeal as CoreIdeal, Multidegree, SimplicialComplex as CoreComplex, VertexSet,
};
use extremal_core::dualitylab::{self, Check, VerificationReport};
use extremal_core::ginlab;
use extremal_core::homology::{reduced_homology_ranks, PrimeField};
use extremal_core::resolutions::{
    betti_via_koszul, dual_betti_via_links, hochster_betti, multigraded_extremal, BettiDiagram,
    BettiTable as CoreTable, Convention,
};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use pyo3::IntoPyObjectExt;

const DEFAULT_CHAR: u64 = 32003;

fn err(e: extremal_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn field(p: u64) -> PyResult<PrimeField> {
    PrimeField::new(p).map_err(err)
}

fn convention(name: &str) -> PyResult<Convention> {
    match name {
        "quotient" => Ok(Convention::Quotient),
        "ideal" => Ok(Convention::Ideal),
        other => Err(PyValueError::new_err(format!(
            "convention must be 'quotient' or 'ideal', not {other:?}"
        ))),
    }
}

fn face(vertices: &[usize], n: usize) -> PyResult<VertexSet> {
    if let Some(v) = vertices.iter().find(|&&v| v >= n) {
        return Err(PyValueError::new_err(format!(
            "vertex {v} out of range for n={n}"
        )));
    }
    Ok(VertexSet::from_vertices(vertices.iter().copied()))
}

fn multidegree(exps: Vec<u32>, n: usize) -> PyResult<Multidegree> {
    if exps.len() != n {
        return Err(PyValueError::new_err(format!(
            "exponent vector has length {}, expected {n}",
            exps.len()
        )));
    }
    Ok(Multidegree::new(exps))
}

fn json_to_py<'py>(py: Python<'py>, v: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    use serde_json::Value;
    match v {
        Value::Null => Ok(py.None().into_bound(py)),
        Value::Bool(b) => b.into_bound_py_any(py),
        Value::Number(x) => match (x.as_i64(), x.as_u64()) {
            (Some(i), _) => i.into_bound_py_any(py),
            (_, Some(u)) => u.into_bound_py_any(py),
            _ => x.as_f64().unwrap_or(f64::NAN).into_bound_py_any(py),
        },
        Value::String(s) => s.into_bound_py_any(py),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(json_to_py(py, item)?)?;
            }
            Ok(list.into_any())
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, item) in map {
                dict.set_item(k, json_to_py(py, item)?)?;
            }
            Ok(dict.into_any())
        }
    }
}

/// Outcome of one verification.
#[pyclass(name = "Report", frozen)]
struct PyReport(VerificationReport);

#[pymethods]
impl PyReport {
    #[getter]
    fn check(&self) -> &'static str {
        self.0.check.id()
    }

    #[getter]
    fn passed(&self) -> bool {
        self.0.passed
    }

    #[getter]
    fn instance(&self) -> String {
        self.0.instance.clone()
    }

    #[getter]
    fn checked(&self) -> usize {
        self.0.checked
    }

    #[getter]
    fn characteristic(&self) -> u32 {
        self.0.characteristic
    }

    fn as_dict<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let v = serde_json::to_value(&self.0).map_err(|e| PyValueError::new_err(e.to_string()))?;
        json_to_py(py, &v)
    }

    fn __bool__(&self) -> bool {
        self.0.passed
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("<Report {}>", self.0)
    }
}

/// Graded Betti numbers `beta_{i,j}`.
#[pyclass(name = "BettiDiagram", frozen)]
struct PyDiagram(BettiDiagram);

#[pymethods]
impl PyDiagram {
    fn get(&self, i: usize, j: u32) -> u64 {
        self.0.get(i, j)
    }

    /// `(i, j, value)` for every nonzero entry.
    fn entries(&self) -> Vec<(usize, u32, u64)> {
        self.0.iter().collect()
    }

    #[getter]
    fn totals(&self) -> Vec<u64> {
        self.0.totals()
    }

    #[getter]
    fn projective_dimension(&self) -> Option<usize> {
        self.0.projective_dimension()
    }

    #[getter]
    fn regularity(&self) -> Option<i64> {
        self.0.regularity()
    }

    fn l_regularity(&self, l: usize) -> Option<i64> {
        self.0.l_regularity(l)
    }

    /// `(l, m, value)` for each corner, with `value = beta_{l, l+m}`.
    fn corners(&self) -> Vec<(usize, i64, u64)> {
        self.0
            .corners()
            .iter()
            .map(|c| (c.l, c.m, c.value))
            .collect()
    }

    fn is_extremal(&self, i: usize, j: u32) -> bool {
        self.0.is_extremal(i, j)
    }

    fn __eq__(&self, other: &PyDiagram) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.render()
    }
}

/// Multigraded Betti numbers `beta_{i,b}`.
#[pyclass(name = "BettiTable", frozen)]
struct PyTable(CoreTable);

#[pymethods]
impl PyTable {
    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn convention(&self) -> &'static str {
        match self.0.convention() {
            Convention::Quotient => "quotient",
            Convention::Ideal => "ideal",
        }
    }

    fn get(&self, i: usize, b: Vec<u32>) -> PyResult<u64> {
        Ok(self.0.get(i, &multidegree(b, self.0.n())?))
    }

    /// `(i, exponents, value)` for every nonzero entry.
    fn entries(&self) -> Vec<(usize, Vec<u32>, u64)> {
        self.0
            .iter()
            .map(|(i, b, v)| (i, b.exps().to_vec(), v))
            .collect()
    }

    fn coarse(&self) -> PyDiagram {
        PyDiagram(self.0.coarse())
    }

    fn to_quotient(&self) -> PyTable {
        PyTable(self.0.to_quotient())
    }

    fn to_ideal(&self) -> PyTable {
        PyTable(self.0.to_ideal())
    }

    /// Positions `(i, exponents)` that are multigraded extremal.
    fn extremal(&self) -> Vec<(usize, Vec<u32>)> {
        multigraded_extremal(&self.0)
            .into_iter()
            .map(|(i, b)| (i, b.exps().to_vec()))
            .collect()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __eq__(&self, other: &PyTable) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.coarse().render()
    }
}

/// A simplicial complex on the vertices `0..n`, given by its facets.
#[pyclass(name = "SimplicialComplex", frozen)]
struct PyComplex(CoreComplex);

#[pymethods]
impl PyComplex {
    #[new]
    fn new(n: usize, facets: Vec<Vec<usize>>) -> PyResult<Self> {
        let faces = facets
            .iter()
            .map(|f| face(f, n))
            .collect::<PyResult<Vec<_>>>()?;
        CoreComplex::from_faces(n, faces)
            .map(PyComplex)
            .map_err(err)
    }

    /// Parses a `facets:` document in the command-line input format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        let doc = cli::InputDocument::parse(text).map_err(err)?;
        doc.complex(false).map(PyComplex).map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn facets(&self) -> Vec<Vec<usize>> {
        self.0.facets().iter().map(|f| f.iter().collect()).collect()
    }

    #[getter]
    fn dim(&self) -> Option<isize> {
        self.0.dim()
    }

    fn f_vector(&self) -> Vec<usize> {
        self.0.f_vector()
    }

    fn contains(&self, face_: Vec<usize>) -> PyResult<bool> {
        Ok(self.0.contains(face(&face_, self.0.n())?))
    }

    fn dual(&self) -> PyComplex {
        PyComplex(complexcore::alexander_dual(&self.0))
    }

    fn link(&self, face_: Vec<usize>) -> PyResult<PyComplex> {
        complexcore::link(face(&face_, self.0.n())?, &self.0)
            .map(PyComplex)
            .map_err(err)
    }

    fn core(&self) -> PyComplex {
        PyComplex(complexcore::core(&self.0))
    }

    fn stanley_reisner_ideal(&self) -> PyResult<PyIdeal> {
        complexcore::stanley_reisner_ideal(&self.0)
            .map(PyIdeal)
            .map_err(err)
    }

    /// Stanley–Reisner ideal of the Alexander dual.
    fn dual_ideal(&self) -> PyIdeal {
        PyIdeal(complexcore::alexander_dual_ideal(&self.0))
    }

    /// Nonzero reduced homology ranks as `(i, rank)` pairs.
    #[pyo3(signature = (char = DEFAULT_CHAR))]
    fn homology(&self, char: u64) -> PyResult<Vec<(isize, usize)>> {
        Ok(reduced_homology_ranks(&self.0, &field(char)?)
            .nonzero()
            .collect())
    }

    /// Betti table of `S/I_X` (or `I_X`) from the restrictions of `X`.
    #[pyo3(signature = (char = DEFAULT_CHAR, convention = "quotient"))]
    fn betti(&self, char: u64, convention: &str) -> PyResult<PyTable> {
        let conv = self::convention(convention)?;
        let table = hochster_betti(&self.0, &field(char)?).map_err(err)?;
        Ok(PyTable(table.with_convention(conv)))
    }

    /// Betti table of the dual ideal `I_{X^v}` from links of `X`.
    #[pyo3(signature = (char = DEFAULT_CHAR))]
    fn dual_betti(&self, char: u64) -> PyResult<PyTable> {
        dual_betti_via_links(&self.0, &field(char)?)
            .map(PyTable)
            .map_err(err)
    }

    #[pyo3(signature = (char = DEFAULT_CHAR))]
    fn is_cohen_macaulay(&self, char: u64) -> PyResult<bool> {
        Ok(dualitylab::is_cohen_macaulay(&self.0, &field(char)?))
    }

    #[pyo3(signature = (char = DEFAULT_CHAR))]
    fn is_gorenstein(&self, char: u64) -> PyResult<bool> {
        Ok(dualitylab::is_gorenstein(&self.0, &field(char)?))
    }

    #[pyo3(signature = (char = DEFAULT_CHAR))]
    fn is_doubly_cohen_macaulay(&self, char: u64) -> PyResult<bool> {
        dualitylab::is_doubly_cohen_macaulay(&self.0, &field(char)?).map_err(err)
    }

    /// Runs one named check (`terai`, `cm`, `gorenstein`, `dcm`, `dual-sum`,
    /// `binomial-sum`, `extremal-flip`, `exact-sequence`).
    #[pyo3(signature = (name, char = DEFAULT_CHAR))]
    fn check(&self, name: &str, char: u64) -> PyResult<PyReport> {
        let which: Check = name.parse().map_err(err)?;
        cli::run_check(which, &self.0, &field(char)?)
            .map(PyReport)
            .map_err(err)
    }

    /// All duality checks for this complex.
    #[pyo3(signature = (char = DEFAULT_CHAR))]
    fn theorem_suite(&self, char: u64) -> PyResult<Vec<PyReport>> {
        let reports = dualitylab::run_theorem_suite(&self.0, &field(char)?).map_err(err)?;
        Ok(reports.into_iter().map(PyReport).collect())
    }

    fn __eq__(&self, other: &PyComplex) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.canonical()
    }

    fn __repr__(&self) -> String {
        format!(
            "SimplicialComplex(n={}, {})",
            self.0.n(),
            self.0.canonical()
        )
    }
}

/// A monomial ideal in `k[x_0, ..., x_{n-1}]`, given by exponent vectors.
#[pyclass(name = "MonomialIdeal", frozen)]
struct PyIdeal(CoreIdeal);

#[pymethods]
impl PyIdeal {
    #[new]
    fn new(n: usize, gens: Vec<Vec<u32>>) -> PyResult<Self> {
        let gens = gens
            .into_iter()
            .map(|g| multidegree(g, n))
            .collect::<PyResult<Vec<_>>>()?;
        CoreIdeal::new(n, gens).map(PyIdeal).map_err(err)
    }

    /// Parses a `gens:` document whose generators are monomials.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        let doc = cli::InputDocument::parse(text).map_err(err)?;
        doc.monomial_ideal().map(PyIdeal).map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn gens(&self) -> Vec<Vec<u32>> {
        self.0.gens().iter().map(|g| g.exps().to_vec()).collect()
    }

    fn is_square_free(&self) -> bool {
        self.0.is_square_free()
    }

    fn is_artinian(&self) -> bool {
        self.0.is_artinian()
    }

    fn contains(&self, exps: Vec<u32>) -> PyResult<bool> {
        Ok(self.0.contains(&multidegree(exps, self.0.n())?))
    }

    fn polarize(&self) -> PyResult<PyIdeal> {
        complexcore::polarize(&self.0).map(PyIdeal).map_err(err)
    }

    /// The complex whose Stanley–Reisner ideal this is.
    fn complex(&self) -> PyResult<PyComplex> {
        complexcore::complex_of_ideal(&self.0)
            .map(PyComplex)
            .map_err(err)
    }

    /// Betti table from the lcm lattice.
    #[pyo3(signature = (char = DEFAULT_CHAR, convention = "quotient"))]
    fn betti(&self, char: u64, convention: &str) -> PyResult<PyTable> {
        let conv = self::convention(convention)?;
        Ok(PyTable(
            betti_via_koszul(&self.0, &field(char)?).with_convention(conv),
        ))
    }

    /// Generic initial ideal in degrevlex.
    #[pyo3(signature = (seed = 1, char = DEFAULT_CHAR))]
    fn gin(&self, seed: u64, char: u64) -> PyResult<PyIdeal> {
        ginlab::gin_of_monomial_ideal(&self.0, seed, &field(char)?)
            .map(PyIdeal)
            .map_err(err)
    }

    fn __eq__(&self, other: &PyIdeal) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.canonical()
    }

    fn __repr__(&self) -> String {
        format!("MonomialIdeal(n={}, {})", self.0.n(), self.0.canonical())
    }
}

fn polynomials(gens: &[String], n: usize, k: &PrimeField) -> PyResult<Vec<ginlab::Polynomial>> {
    gens.iter()
        .map(|g| ginlab::Polynomial::parse(g, n, k).map_err(err))
        .collect()
}

/// Reduced degrevlex Groebner basis of homogeneous polynomials such as
/// `"x0^2 - 3*x1*x2"`, rendered back to strings.
#[pyfunction]
#[pyo3(signature = (gens, n, char = DEFAULT_CHAR))]
fn groebner_basis(gens: Vec<String>, n: usize, char: u64) -> PyResult<Vec<String>> {
    let k = field(char)?;
    let gb = ginlab::buchberger(&polynomials(&gens, n, &k)?, n, &k).map_err(err)?;
    Ok(gb.basis().iter().map(|p| p.render(&k)).collect())
}

/// Generic initial ideal of a homogeneous ideal in degrevlex.
#[pyfunction]
#[pyo3(signature = (gens, n, seed = 1, char = DEFAULT_CHAR))]
fn gin(gens: Vec<String>, n: usize, seed: u64, char: u64) -> PyResult<PyIdeal> {
    let k = field(char)?;
    ginlab::gin(&polynomials(&gens, n, &k)?, n, seed, &k)
        .map(PyIdeal)
        .map_err(err)
}

/// Graded Betti numbers of `S/I` up to degree `bound - 1` from the Koszul
/// complex over the quotient.
#[pyfunction]
#[pyo3(signature = (gens, n, bound, char = DEFAULT_CHAR))]
fn betti_via_tor(gens: Vec<String>, n: usize, bound: u32, char: u64) -> PyResult<PyDiagram> {
    let k = field(char)?;
    ginlab::betti_via_tor(&polynomials(&gens, n, &k)?, n, &k, bound)
        .map(PyDiagram)
        .map_err(err)
}

/// Compares corners and l-regularity of `S/I` and `S/gin(I)`.
#[pyfunction]
#[pyo3(signature = (gens, n, seed = 1, char = DEFAULT_CHAR))]
fn compare_corners(gens: Vec<String>, n: usize, seed: u64, char: u64) -> PyResult<PyReport> {
    let k = field(char)?;
    ginlab::compare_corners(&polynomials(&gens, n, &k)?, n, &k, seed)
        .map(PyReport)
        .map_err(err)
}

/// Runs the `extremal` command line in-process and returns
/// `(stdout, stderr, exit_code)`.
#[pyfunction]
#[pyo3(signature = (args, stdin = ""))]
fn run_cli(args: Vec<String>, stdin: &str) -> (String, String, i32) {
    let argv = std::iter::once("extremal".to_string()).chain(args);
    let out = cli::run(argv, &mut stdin.as_bytes());
    (out.stdout, out.stderr, out.code)
}

#[pymodule]
fn extremal(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyComplex>()?;
    m.add_class::<PyIdeal>()?;
    m.add_class::<PyTable>()?;
    m.add_class::<PyDiagram>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(groebner_basis, m)?)?;
    m.add_function(wrap_pyfunction!(gin, m)?)?;
    m.add_function(wrap_pyfunction!(betti_via_tor, m)?)?;
    m.add_function(wrap_pyfunction!(compare_corners, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    m.add("DEFAULT_CHAR", DEFAULT_CHAR)?;
    Ok(())
}
