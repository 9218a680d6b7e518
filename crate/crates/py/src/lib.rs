//! Python bindings. Partitions are lists of parts (largest first), roots are
//! labels such as `"+e2-d1"`, supervectors are `(a, b)` pairs of lists.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use tiso::cayley::{
    check_equivariant_iso, class_window_graph, orbit_bfs, sv_window_graph, Caps, OrbitStatus,
};
use tiso::export::graph_to_json;
use tiso::svaction::{
    apply_tau, base_point, build_x, build_x_hat, recover_a, AugMatrix, Kappa, SuperVector, SvAction,
};
use tiso::{ClassSpace, LabeledDiagram, Partition, RectConfig, Root};

type Vector = (Vec<i64>, Vec<i64>);

fn err(e: tiso::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn split(v: SuperVector) -> Vector {
    (v.a, v.b)
}

/// An `n x m` rectangle and the operations that depend on it.
#[pyclass(name = "Rect", frozen, skip_from_py_object, module = "tiso_py")]
#[derive(Clone, Copy)]
pub struct PyRect {
    inner: RectConfig,
}

impl PyRect {
    fn part(&self, parts: &[usize]) -> PyResult<Partition> {
        self.inner.partition(parts).map_err(err)
    }

    fn root(&self, label: &str) -> PyResult<Root> {
        let r: Root = label.parse().map_err(err)?;
        self.inner.check_root(r).map_err(err)?;
        Ok(r)
    }

    fn vector(&self, a: Vec<i64>, b: Vec<i64>) -> PyResult<SuperVector> {
        let v = SuperVector::new(a, b);
        v.check(&self.inner).map_err(err)?;
        Ok(v)
    }

    fn kappa(&self, text: Option<&str>) -> PyResult<Kappa> {
        let k = match text {
            Some(t) => t.parse().map_err(err)?,
            None => Kappa::standard(&self.inner).map_err(err)?,
        };
        k.validate(&self.inner).map_err(err)?;
        Ok(k)
    }

    fn space(&self) -> PyResult<ClassSpace> {
        ClassSpace::new(self.inner).map_err(err)
    }
}

#[pymethods]
impl PyRect {
    #[new]
    fn new(n: usize, m: usize) -> PyResult<Self> {
        Ok(PyRect { inner: RectConfig::new(n, m).map_err(err)? })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    fn __repr__(&self) -> String {
        format!("Rect({}, {})", self.inner.n(), self.inner.m())
    }

    /// Every diagram in the rectangle.
    fn partitions(&self) -> Vec<Vec<usize>> {
        self.inner.all_partitions().into_iter().map(|p| p.parts().to_vec()).collect()
    }

    fn dual(&self, parts: Vec<usize>) -> PyResult<Vec<usize>> {
        Ok(self.inner.dual(&self.part(&parts)?).parts().to_vec())
    }

    fn word(&self, parts: Vec<usize>) -> PyResult<String> {
        Ok(self.inner.to_word(&self.part(&parts)?).to_string())
    }

    fn outer_corners(&self, parts: Vec<usize>) -> PyResult<Vec<String>> {
        Ok(self.inner.outer_corners(&self.part(&parts)?).iter().map(Root::to_string).collect())
    }

    fn inner_corners(&self, parts: Vec<usize>) -> PyResult<Vec<String>> {
        Ok(self.inner.inner_corners(&self.part(&parts)?).iter().map(Root::to_string).collect())
    }

    /// Adds or removes the box labeled by `root`.
    fn apply_t(&self, parts: Vec<usize>, root: &str) -> PyResult<Vec<usize>> {
        Ok(self.inner.apply_t(&self.part(&parts)?, self.root(root)?).map_err(err)?.parts().to_vec())
    }

    /// Members of the class of `(parts, k)`, canonical member first.
    fn class_members(&self, parts: Vec<usize>, k: i64) -> PyResult<Vec<(Vec<usize>, i64)>> {
        let c = self.space()?.enumerate_class(&LabeledDiagram::new(self.part(&parts)?, k)).map_err(err)?;
        Ok(c.members().iter().map(|s| (s.lambda.parts().to_vec(), s.k)).collect())
    }

    /// The canonical member of the image class under `root`.
    fn apply_morphism(&self, parts: Vec<usize>, k: i64, root: &str) -> PyResult<(Vec<usize>, i64)> {
        let sp = self.space()?;
        let c = sp.enumerate_class(&LabeledDiagram::new(self.part(&parts)?, k)).map_err(err)?;
        let img = sp.apply_morphism(&c, self.root(root)?).map_err(err)?;
        let s = img.canonical();
        Ok((s.lambda.parts().to_vec(), s.k))
    }

    fn base_point(&self) -> Vector {
        split(base_point(&self.inner))
    }

    fn x(&self, parts: Vec<usize>) -> PyResult<Vector> {
        Ok(split(build_x(&self.inner, &self.part(&parts)?).map_err(err)?))
    }

    fn x_hat(&self, parts: Vec<usize>, k: i64) -> PyResult<Vector> {
        let s = LabeledDiagram::new(self.part(&parts)?, k);
        Ok(split(build_x_hat(&self.inner, &s).map_err(err)?))
    }

    fn recover_a(&self, a: Vec<i64>, b: Vec<i64>) -> PyResult<Vec<usize>> {
        Ok(recover_a(&self.inner, &self.vector(a, b)?).map_err(err)?.parts().to_vec())
    }

    /// The matrix `a_i - b_j`.
    fn matrix(&self, a: Vec<i64>, b: Vec<i64>) -> PyResult<Vec<Vec<i64>>> {
        Ok(AugMatrix::new(&self.vector(a, b)?).core)
    }

    #[pyo3(signature = (a, b, root, kappa=None))]
    fn tau(&self, a: Vec<i64>, b: Vec<i64>, root: &str, kappa: Option<&str>) -> PyResult<Vector> {
        let k = self.kappa(kappa)?;
        Ok(split(apply_tau(&self.vector(a, b)?, self.root(root)?, &k).map_err(err)?))
    }

    /// Whether `x_hat` matches the class and supervector graphs on the window.
    fn verify_window(&self, lo: i64, hi: i64) -> PyResult<bool> {
        let cg = class_window_graph(&self.space()?, lo, hi).map_err(err)?;
        let sg = sv_window_graph(&self.inner, lo, hi).map_err(err)?;
        Ok(check_equivariant_iso(&self.inner, &cg, &sg).map_err(err)?.passed)
    }

    /// `(vertex_count, closed)` for the orbit of `(a, b)`.
    #[pyo3(signature = (a, b, kappa=None, max_vertices=200_000))]
    fn orbit_size(
        &self,
        a: Vec<i64>,
        b: Vec<i64>,
        kappa: Option<&str>,
        max_vertices: usize,
    ) -> PyResult<(usize, bool)> {
        let action = SvAction::new(self.inner, self.kappa(kappa)?).map_err(err)?;
        let (_, rep) = orbit_bfs(&action, self.vector(a, b)?, Caps::vertices(max_vertices));
        Ok((rep.vertex_count, rep.status == OrbitStatus::Closed))
    }

    /// JSON of the supervector window graph.
    fn window_graph_json(&self, lo: i64, hi: i64) -> PyResult<String> {
        let g = sv_window_graph(&self.inner, lo, hi).map_err(err)?;
        Ok(graph_to_json::<_, ()>(&g, None).to_string())
    }
}

#[pymodule]
fn tiso_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRect>()?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
