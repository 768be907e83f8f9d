use pyo3::prelude::*;

#[pymodule]
fn serkit_py(_m: &Bound<'_, PyModule>) -> PyResult<()> {
    Ok(())
}
