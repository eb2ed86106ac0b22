//! Python bindings, importable as `ziptensor`.

use std::collections::BTreeSet;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use ziptensor::blocks::{self, Axis, GridDecomposition};
use ziptensor::dihedral::{self, MiddleWord};
use ziptensor::render::{self, TextStyle};
use ziptensor::verify::{run_checks, CheckId, VerifyOptions};
use ziptensor::{trees, Composition, OrderedTree, ZipperWord};

fn err(e: ziptensor::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn composition(parts: Vec<u32>) -> PyResult<Composition> {
    Composition::new(parts).map_err(err)
}

fn word(s: &str) -> PyResult<ZipperWord> {
    s.parse().map_err(err)
}

/// The tensor `T^k_i` with composition headers.
#[pyclass(name = "Tensor", module = "ziptensor", frozen)]
struct PyTensor {
    inner: ziptensor::Tensor,
}

#[pymethods]
impl PyTensor {
    #[new]
    fn new(k: u32, i: u32) -> PyResult<Self> {
        Ok(PyTensor {
            inner: ziptensor::build_tensor(k, i).map_err(err)?,
        })
    }

    /// Parses the JSON produced by `to_json`.
    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        Ok(PyTensor {
            inner: render::from_json(s).map_err(err)?,
        })
    }

    #[getter]
    fn k(&self) -> u32 {
        self.inner.k()
    }

    #[getter]
    fn i(&self) -> u32 {
        self.inner.i()
    }

    #[getter]
    fn side(&self) -> usize {
        self.inner.side()
    }

    #[getter]
    fn rows(&self) -> Vec<Vec<u32>> {
        self.inner
            .rows()
            .iter()
            .map(|c| c.parts().to_vec())
            .collect()
    }

    #[getter]
    fn cols(&self) -> Vec<Vec<u32>> {
        self.inner
            .cols()
            .iter()
            .map(|c| c.parts().to_vec())
            .collect()
    }

    fn get(&self, p: usize, q: usize) -> PyResult<bool> {
        let n = self.inner.side();
        if p >= n || q >= n {
            return Err(PyValueError::new_err(format!(
                "({p}, {q}) outside a {n}x{n} tensor"
            )));
        }
        Ok(self.inner.get(p, q))
    }

    /// Rows of 0/1 integers.
    fn to_list(&self) -> Vec<Vec<u8>> {
        (0..self.inner.side())
            .map(|p| {
                self.inner
                    .row_bits(p)
                    .iter()
                    .map(|&b| u8::from(b))
                    .collect()
            })
            .collect()
    }

    fn unit_count(&self) -> usize {
        self.inner.unit_count()
    }

    fn zero_cells(&self) -> BTreeSet<(usize, usize)> {
        self.inner.zero_cells()
    }

    /// `(row, col, word)` for every unit entry.
    fn tree_words(&self) -> Vec<(usize, usize, String)> {
        self.inner
            .tree_words()
            .into_iter()
            .map(|(p, q, w)| (p, q, w.to_string()))
            .collect()
    }

    /// `style` is "digits", "bullets" or "annotated".
    #[pyo3(signature = (style = "digits"))]
    fn to_text(&self, style: &str) -> PyResult<String> {
        let style = match style {
            "digits" => TextStyle::Digits,
            "bullets" => TextStyle::Bullets,
            "annotated" => TextStyle::Annotated,
            other => return Err(PyValueError::new_err(format!("unknown style {other:?}"))),
        };
        Ok(render::to_text(&self.inner, style))
    }

    fn to_csv(&self) -> String {
        render::to_csv(&self.inner)
    }

    fn to_json(&self) -> String {
        render::to_json(&self.inner)
    }

    #[pyo3(signature = (cell = 20))]
    fn to_svg(&self, cell: u32) -> PyResult<String> {
        let d = GridDecomposition::new(self.inner.k(), self.inner.i()).map_err(err)?;
        render::to_svg(&d, &self.inner, &render::SvgOptions { cell }).map_err(err)
    }

    fn anti_transpose(&self) -> PyResult<PyTensor> {
        Ok(PyTensor {
            inner: blocks::anti_transpose(&self.inner).map_err(err)?,
        })
    }

    fn __eq__(&self, other: &PyTensor) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Tensor(k={}, i={})", self.inner.k(), self.inner.i())
    }
}

#[pyfunction]
fn build_tensor(k: u32, i: u32) -> PyResult<PyTensor> {
    PyTensor::new(k, i)
}

#[pyfunction]
fn zipper(a: Vec<u32>, b: Vec<u32>) -> PyResult<String> {
    Ok(ziptensor::zipper(&composition(a)?, &composition(b)?)
        .map_err(err)?
        .to_string())
}

#[pyfunction]
fn unzip(w: &str) -> PyResult<(Vec<u32>, Vec<u32>)> {
    let (a, b) = word(w)?.unzip().map_err(err)?;
    Ok((a.parts().to_vec(), b.parts().to_vec()))
}

#[pyfunction]
fn tensor_entry(a: Vec<u32>, b: Vec<u32>) -> PyResult<bool> {
    ziptensor::tensor_entry(&composition(a)?, &composition(b)?).map_err(err)
}

#[pyfunction]
fn is_tree_word(w: &str) -> PyResult<bool> {
    Ok(word(w)?.is_tree_word())
}

/// Tree word to balanced parentheses.
#[pyfunction]
fn decode(w: &str) -> PyResult<String> {
    Ok(ziptensor::decode(&word(w)?).map_err(err)?.to_parens())
}

/// Balanced parentheses to tree word.
#[pyfunction]
fn encode(parens: &str) -> PyResult<String> {
    let tree = OrderedTree::from_parens(parens).map_err(err)?;
    Ok(ziptensor::encode(&tree).map_err(err)?.to_string())
}

#[pyfunction]
fn count_trees(k: u32) -> PyResult<u64> {
    trees::count_trees(k).map_err(err)
}

#[pyfunction]
fn count_trees_by_length(k: u32, i: u32) -> PyResult<u64> {
    trees::count_trees_by_length(k, i).map_err(err)
}

#[pyfunction]
fn rotate(w: &str, t: i64) -> PyResult<String> {
    let m: MiddleWord = w.parse().map_err(err)?;
    Ok(m.rotate(t).to_string())
}

#[pyfunction]
fn comp_reverse(w: &str) -> PyResult<String> {
    let m: MiddleWord = w.parse().map_err(err)?;
    Ok(m.comp_reverse().to_string())
}

#[pyfunction]
fn orbit(w: &str) -> PyResult<Vec<String>> {
    let m: MiddleWord = w.parse().map_err(err)?;
    Ok(dihedral::orbit(&m)
        .iter()
        .map(ToString::to_string)
        .collect())
}

#[pyfunction]
fn canonical_tree_word(w: &str) -> PyResult<String> {
    let m: MiddleWord = w.parse().map_err(err)?;
    Ok(dihedral::canonical_tree_word(&m).map_err(err)?.to_string())
}

/// `(canonical word, class size)` in tensor order.
#[pyfunction]
fn enumerate_orbits(k: u32) -> PyResult<Vec<(String, usize)>> {
    Ok(dihedral::enumerate_orbits(k)
        .map_err(err)?
        .into_iter()
        .map(|c| (c.canonical.to_string(), c.size()))
        .collect())
}

/// Strip sizes at level `q`; `axis` is "horizontal" or "vertical".
#[pyfunction]
#[pyo3(signature = (k, i, q, axis = "vertical"))]
fn strips(k: u32, i: u32, q: u32, axis: &str) -> PyResult<Vec<usize>> {
    let axis = match axis {
        "horizontal" => Axis::Horizontal,
        "vertical" => Axis::Vertical,
        other => return Err(PyValueError::new_err(format!("unknown axis {other:?}"))),
    };
    Ok(blocks::strips(k, i, q, axis)
        .map_err(err)?
        .iter()
        .map(|s| s.size())
        .collect())
}

#[pyfunction]
fn predicted_zeros(k: u32, i: u32) -> PyResult<BTreeSet<(usize, usize)>> {
    blocks::predicted_zeros(k, i).map_err(err)
}

type StaircaseTuple = (usize, usize, usize, Vec<(usize, usize)>);

/// Retained staircases as `(top_row, left_col, side, cells)`.
#[pyfunction]
fn disjoint_staircases(k: u32, i: u32) -> PyResult<Vec<StaircaseTuple>> {
    Ok(blocks::disjoint_staircases(k, i)
        .map_err(err)?
        .into_iter()
        .map(|s| (s.block.rows.start, s.block.cols.start, s.side, s.cells))
        .collect())
}

#[pyfunction]
fn decomposition_json(k: u32, i: u32) -> PyResult<String> {
    let d = GridDecomposition::new(k, i).map_err(err)?;
    let t = ziptensor::build_tensor(k, i).map_err(err)?;
    render::decomposition_to_json(&d, &t).map_err(err)
}

/// Runs conformance checks and returns `(passed, report_json)`.
#[pyfunction]
#[pyo3(signature = (checks = None, max_k = None))]
fn verify(
    py: Python<'_>,
    checks: Option<Vec<String>>,
    max_k: Option<u32>,
) -> PyResult<(bool, String)> {
    let ids = match checks {
        None => CheckId::ALL.to_vec(),
        Some(names) => names
            .iter()
            .map(|n| n.parse::<CheckId>())
            .collect::<Result<_, _>>()
            .map_err(err)?,
    };
    let opts = VerifyOptions {
        max_k,
        ..Default::default()
    };
    let report = py.detach(|| run_checks(&ids, &opts)).map_err(err)?;
    Ok((report.passed, report.to_json()))
}

#[pymodule]
#[pyo3(name = "ziptensor")]
fn ziptensor_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTensor>()?;
    m.add_function(wrap_pyfunction!(build_tensor, m)?)?;
    m.add_function(wrap_pyfunction!(zipper, m)?)?;
    m.add_function(wrap_pyfunction!(unzip, m)?)?;
    m.add_function(wrap_pyfunction!(tensor_entry, m)?)?;
    m.add_function(wrap_pyfunction!(is_tree_word, m)?)?;
    m.add_function(wrap_pyfunction!(decode, m)?)?;
    m.add_function(wrap_pyfunction!(encode, m)?)?;
    m.add_function(wrap_pyfunction!(count_trees, m)?)?;
    m.add_function(wrap_pyfunction!(count_trees_by_length, m)?)?;
    m.add_function(wrap_pyfunction!(rotate, m)?)?;
    m.add_function(wrap_pyfunction!(comp_reverse, m)?)?;
    m.add_function(wrap_pyfunction!(orbit, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_tree_word, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_orbits, m)?)?;
    m.add_function(wrap_pyfunction!(strips, m)?)?;
    m.add_function(wrap_pyfunction!(predicted_zeros, m)?)?;
    m.add_function(wrap_pyfunction!(disjoint_staircases, m)?)?;
    m.add_function(wrap_pyfunction!(decomposition_json, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
