//! Thin Python bindings over the fundom crate. Scalars and coordinate lists
//! cross the boundary as plain ints, strings, and lists; errors surface as
//! ValueError with the library's message.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use fundom::weyl::{Coweight, RootValuation};

fn err(e: fundom::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn valuation(simple: Vec<i64>) -> PyResult<RootValuation> {
    RootValuation::new(simple).map_err(err)
}

/// Pairwise valuation matrix of the simple valuations.
#[pyfunction]
fn pair_matrix(simple: Vec<i64>) -> PyResult<Vec<Vec<i64>>> {
    Ok(valuation(simple)?.matrix())
}

/// Regular family vertices as (one-line permutation, coordinates) pairs.
#[pyfunction]
fn regular_vertices(simple: Vec<i64>) -> PyResult<Vec<(String, Vec<i64>)>> {
    let rv = valuation(simple)?;
    let family = fundom::family::OrthogonalFamily::regular(&rv);
    Ok(family
        .vertices()
        .iter()
        .map(|(w, v)| (w.one_line(), v.coords().to_vec()))
        .collect())
}

/// Coefficients of the Poincare polynomial in q, by the closed formula.
#[pyfunction]
fn poincare_closed(n1: i64, n2: i64) -> PyResult<Vec<i64>> {
    let rv = valuation(vec![n1, n2])?;
    Ok(fundom::paving::closed_form(&rv)
        .map_err(err)?
        .coeffs()
        .to_vec())
}

/// Coefficients of the Poincare polynomial in q, by cell enumeration.
#[pyfunction]
fn poincare_pipeline(n1: i64, n2: i64) -> PyResult<Vec<i64>> {
    let rv = valuation(vec![n1, n2])?;
    Ok(fundom::paving::poincare_pipeline(&rv)
        .map_err(err)?
        .coeffs()
        .to_vec())
}

/// Lattice points of the fundamental domain, lexicographically sorted.
#[pyfunction]
fn fixed_points(n1: i64, n2: i64) -> PyResult<Vec<Vec<i64>>> {
    let rv = valuation(vec![n1, n2])?;
    Ok(fundom::paving::fundamental_fixed_points(&rv)
        .map_err(err)?
        .iter()
        .map(|p| p.coords().to_vec())
        .collect())
}

/// Dimension of the affine cell attached to a triangle point.
#[pyfunction]
fn cell_dimension(n1: i64, n2: i64, x: Vec<i64>) -> PyResult<i64> {
    let rv = valuation(vec![n1, n2])?;
    fundom::paving::cell_dimension(&rv, &Coweight::new(x)).map_err(err)
}

/// Triangle region label of a point, one of R1, R1p, R2, R2p, R3, R4, R4p.
#[pyfunction]
fn triangle_region(n1: i64, n2: i64, x: Vec<i64>) -> PyResult<String> {
    let rv = valuation(vec![n1, n2])?;
    Ok(fundom::paving::triangle_region(&rv, &Coweight::new(x))
        .map_err(err)?
        .to_string())
}

/// Hexagon cut region of a point as (label, overlap flag).
#[pyfunction]
fn v_region(n1: i64, n2: i64, x: Vec<i64>) -> PyResult<(String, bool)> {
    let rv = valuation(vec![n1, n2])?;
    let report = fundom::paving::v_region(&rv, &Coweight::new(x)).map_err(err)?;
    Ok((report.region.to_string(), report.in_overlap))
}

/// Stratum label of a lattice point: "G", "P(...)", or "B(...)".
#[pyfunction]
fn classify(n1: i64, n2: i64, x: Vec<i64>) -> PyResult<String> {
    let rv = valuation(vec![n1, n2])?;
    Ok(fundom::ak::ak_classify(&rv, &Coweight::new(x))
        .map_err(err)?
        .to_string())
}

/// True when the rational generating series matches the direct sum of
/// Poincare polynomials through the given total order.
#[pyfunction]
fn series_equal(order: usize) -> PyResult<bool> {
    let rational = fundom::series::poincare_generating()
        .expand(order)
        .map_err(err)?;
    let direct = fundom::series::direct_series(order).map_err(err)?;
    Ok(fundom::series::compare(&rational, &direct)
        .map_err(err)?
        .is_none())
}

#[pymodule]
fn fundom_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(pair_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(regular_vertices, m)?)?;
    m.add_function(wrap_pyfunction!(poincare_closed, m)?)?;
    m.add_function(wrap_pyfunction!(poincare_pipeline, m)?)?;
    m.add_function(wrap_pyfunction!(fixed_points, m)?)?;
    m.add_function(wrap_pyfunction!(cell_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(triangle_region, m)?)?;
    m.add_function(wrap_pyfunction!(v_region, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(series_equal, m)?)?;
    Ok(())
}
