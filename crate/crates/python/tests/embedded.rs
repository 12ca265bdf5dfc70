use pyo3::prelude::*;
use pyo3::types::PyDict;

fn with_module(code: &str) {
    Python::initialize();
    Python::attach(|py| {
        let m = pyo3::wrap_pymodule!(pyvir25::pyvir25)(py);
        let globals = PyDict::new(py);
        globals.set_item("v", m).unwrap();
        let code = std::ffi::CString::new(code).unwrap();
        if let Err(e) = py.run(&code, Some(&globals), None) {
            e.print(py);
            panic!("python snippet failed");
        }
    });
}

#[test]
fn weights_and_modules() {
    with_module(
        r#"
assert v.h_rs("-1", 3, 1) == "-3"
m = v.Module("25", "-3", quotient_level=3)
assert m.central_charge == "25" and m.highest_weight == "-3"
assert m.gram(3)["determinant"] == "-1764"
"#,
    );
}

#[test]
fn errors_become_value_errors() {
    with_module(
        r#"
try:
    v.fuse(0, 1)
    raise AssertionError("no error")
except ValueError as e:
    assert "domain error" in str(e)
"#,
    );
}

#[test]
fn suite_and_rigidity() {
    with_module(
        r#"
assert all(ok for _, ok in v.reproduction_suite())
assert v.rigidity()["R"] == "1/2"
assert v.braiding()["solution_count"] == 2
"#,
    );
}
