use pyo3::prelude::*;
use pyo3::types::PyDict;
use pyo3::wrap_pymodule;

fn run(code: &str) {
    Python::attach(|py| {
        let locals = PyDict::new(py);
        locals
            .set_item("gsatlas", wrap_pymodule!(gsatlas_py::gsatlas_module)(py))
            .unwrap();
        let code = std::ffi::CString::new(code).unwrap();
        if let Err(e) = py.run(&code, Some(&locals), None) {
            e.print(py);
            panic!("python snippet failed");
        }
    });
}

#[test]
fn graph_round_trip_and_lc() {
    run(r#"
g = gsatlas.Graph.from_graph6("Bg")
assert g.n == 3 and g.edges() == [(0, 1), (1, 2)]
t = g.local_complement(1)
assert t.edge_count() == 3 and t.local_complement(1) == g
assert len(g.lc_orbit()) == 2
assert g.rank_indexes() == {1: [3]}
"#);
}

#[test]
fn class_rows() {
    run(r#"
rows = gsatlas.classify(5)
assert [r["no"] for r in rows] == list(range(5, 9))
assert list(rows[0]) == ["no", "lc", "edges", "es_lower", "es_upper", "ri2", "two_colorable", "representative"]
atlas = gsatlas.Atlas(6)
c4 = gsatlas.Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
assert atlas.lookup(c4)["no"] == 4
"#);
}

#[test]
fn errors_become_python_exceptions() {
    run(r#"
for bad, exc in [(lambda: gsatlas.Graph.from_graph6("~"), ValueError),
                 (lambda: gsatlas.Graph(2).local_complement(3), IndexError),
                 (lambda: gsatlas.Atlas(4).lookup(gsatlas.Graph(3)), ValueError)]:
    try:
        bad()
    except exc:
        pass
    else:
        raise AssertionError(bad)
"#);
}
