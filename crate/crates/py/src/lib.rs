//! Python bindings. Vertices are 1-based, as in the Rust crate.

use std::sync::Arc;

use beergraph::enumeration;
use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: beergraph::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// An interval graph given by its endpoint string.
#[pyclass(frozen, name = "IntervalGraph")]
struct PyIntervalGraph {
    inner: Arc<beergraph::IntervalGraph>,
}

#[pymethods]
impl PyIntervalGraph {
    #[new]
    #[pyo3(signature = (endpoints, rights = None))]
    fn new(endpoints: &str, rights: Option<Vec<usize>>) -> PyResult<Self> {
        let g = beergraph::IntervalGraph::from_endpoints(endpoints, rights.as_deref()).map_err(err)?;
        Ok(PyIntervalGraph { inner: Arc::new(g) })
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("IntervalGraph({:?})", self.inner.endpoint_string())
    }

    #[getter]
    fn endpoints(&self) -> String {
        self.inner.endpoint_string()
    }

    fn is_proper(&self) -> bool {
        self.inner.is_proper()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn neighbours(&self, v: usize) -> PyResult<Vec<usize>> {
        self.inner.check_vertex(v).map_err(err)?;
        Ok(self.inner.neighbours(v))
    }

    /// `None` when `u` and `v` lie in different components.
    fn dist(&self, u: usize, v: usize) -> PyResult<Option<usize>> {
        Ok(self.inner.dist(u, v).map_err(err)?.finite())
    }

    fn shortest_path(&self, u: usize, v: usize) -> PyResult<Option<Vec<usize>>> {
        self.inner.shortest_path(u, v).map_err(err)
    }

    fn beer_index(&self, beers: Vec<usize>) -> PyResult<PyIntervalBeerIndex> {
        let inner = beergraph::IntervalBeerIndex::new(self.inner.clone(), &beers).map_err(err)?;
        Ok(PyIntervalBeerIndex { inner })
    }
}

/// A proper interval graph given by its endpoint string.
#[pyclass(frozen, name = "ProperIntervalGraph")]
struct PyProperGraph {
    inner: Arc<beergraph::ProperIntervalGraph>,
}

#[pymethods]
impl PyProperGraph {
    #[new]
    fn new(endpoints: &str) -> PyResult<Self> {
        let g = beergraph::ProperIntervalGraph::parse(endpoints, false).map_err(err)?;
        Ok(PyProperGraph { inner: Arc::new(g) })
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("ProperIntervalGraph({:?})", self.inner.endpoint_string())
    }

    fn dist(&self, u: usize, v: usize) -> PyResult<Option<usize>> {
        Ok(self.inner.dist(u, v).map_err(err)?.finite())
    }

    fn shortest_path(&self, u: usize, v: usize) -> PyResult<Option<Vec<usize>>> {
        self.inner.shortest_path(u, v).map_err(err)
    }

    fn beer_index(&self, beers: Vec<usize>) -> PyResult<PyBeerIndex> {
        let inner = beergraph::BeerIndex::new(self.inner.clone(), &beers).map_err(err)?;
        Ok(PyBeerIndex { inner })
    }

    #[pyo3(signature = (beers, delta = 2))]
    fn compact_index(&self, beers: Vec<usize>, delta: usize) -> PyResult<PyCompactIndex> {
        let inner = beergraph::CompactIndex::new(self.inner.clone(), &beers, beergraph::CompactOptions::new(delta)).map_err(err)?;
        Ok(PyCompactIndex { inner })
    }
}

#[pyclass(frozen, name = "BeerIndex")]
struct PyBeerIndex {
    inner: beergraph::BeerIndex,
}

#[pymethods]
impl PyBeerIndex {
    fn beer_dist(&self, u: usize, v: usize) -> PyResult<usize> {
        self.inner.beer_dist(u, v).map_err(err)
    }

    fn beer_path(&self, u: usize, v: usize) -> PyResult<Vec<usize>> {
        self.inner.beer_path(u, v).map_err(err)
    }

    fn size_in_bits(&self) -> usize {
        self.inner.size_in_bits()
    }
}

#[pyclass(frozen, name = "CompactIndex")]
struct PyCompactIndex {
    inner: beergraph::CompactIndex,
}

#[pymethods]
impl PyCompactIndex {
    fn beer_dist(&self, u: usize, v: usize) -> PyResult<usize> {
        self.inner.beer_dist(u, v).map_err(err)
    }

    #[getter]
    fn delta(&self) -> usize {
        self.inner.delta()
    }

    #[getter]
    fn selected_count(&self) -> usize {
        self.inner.selected_count()
    }

    fn size_in_bits(&self) -> usize {
        self.inner.size_in_bits()
    }
}

#[pyclass(frozen, name = "IntervalBeerIndex")]
struct PyIntervalBeerIndex {
    inner: beergraph::IntervalBeerIndex,
}

#[pymethods]
impl PyIntervalBeerIndex {
    fn beer_dist(&self, u: usize, v: usize) -> PyResult<usize> {
        self.inner.beer_dist(u, v).map_err(err)
    }

    fn beer_path(&self, u: usize, v: usize) -> PyResult<Vec<usize>> {
        self.inner.beer_path(u, v).map_err(err)
    }

    fn size_in_bits(&self) -> usize {
        self.inner.size_in_bits()
    }
}

/// Weighted Dyck path counts `C̄(0..=max_n)`.
#[pyfunction]
fn weighted_counts(max_n: usize) -> Vec<BigUint> {
    enumeration::weighted_series(max_n).cbar
}

/// `h(0..=k)`: weighted compositions of `k`.
#[pyfunction]
fn composition_weights(k: usize) -> Vec<BigUint> {
    enumeration::h_by_recurrence(k)
}

/// `(kind, endpoints, rights, beers)`.
type FileParts = (String, String, Vec<usize>, Option<Vec<usize>>);

/// Parses a graph file into `(kind, endpoints, rights, beers)`.
#[pyfunction]
fn parse_graph_file(text: &str) -> PyResult<FileParts> {
    let f = beergraph::GraphFile::parse(text).map_err(err)?;
    Ok((f.kind.to_string(), f.graph.endpoint_string(), f.graph.right_owners(), f.beers))
}

#[pymodule]
#[pyo3(name = "beergraph")]
fn beergraph_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyIntervalGraph>()?;
    m.add_class::<PyProperGraph>()?;
    m.add_class::<PyBeerIndex>()?;
    m.add_class::<PyCompactIndex>()?;
    m.add_class::<PyIntervalBeerIndex>()?;
    m.add_function(wrap_pyfunction!(weighted_counts, m)?)?;
    m.add_function(wrap_pyfunction!(composition_weights, m)?)?;
    m.add_function(wrap_pyfunction!(parse_graph_file, m)?)?;
    Ok(())
}
