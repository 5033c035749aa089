//! Python bindings: one `Engine` class per root system, with the matrix,
//! expansion, spherical, and Toda operations returning pretty-printed JSON
//! strings in the same schema as the command-line tool.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use semiflag::checks;
use semiflag::daha::Side;
use semiflag::expr::{affine_to_string, parse_affine, parse_expr, parse_lambda};
use semiflag::heis::{elt_to_json, mat_to_json};
use semiflag::ktheory::{inverse_pieri_chevalley, ipc_to_json};
use semiflag::nildaha::{qtoda, rho0, rho0_sph};
use semiflag::rootdata::{RootSystem, WeylTable};
use semiflag::wmatrix::{kappa, opmat_to_json, rho0_prime, rho_prime};

fn to_py(e: semiflag::Error) -> PyErr {
    use semiflag::Error::*;
    match &e {
        Parse { .. } | Domain(_) | Check(_) => PyValueError::new_err(e.to_string()),
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json rendering")
}

/// Exact engine for one root system. All heavy methods return JSON strings.
#[pyclass]
struct Engine {
    rs: RootSystem,
    wt: WeylTable,
}

#[pymethods]
impl Engine {
    #[new]
    fn new(rtype: &str) -> PyResult<Self> {
        let rs = RootSystem::new(rtype).map_err(to_py)?;
        let wt = WeylTable::build(&rs).map_err(to_py)?;
        Ok(Engine { rs, wt })
    }

    /// Rank of the root system.
    fn rank(&self) -> usize {
        self.rs.rank
    }

    /// Order of the finite Weyl group.
    fn weyl_order(&self) -> usize {
        self.wt.len()
    }

    /// Reduced-word names of the Weyl group elements, identity first.
    fn weyl_names(&self) -> Vec<String> {
        self.wt.names.clone()
    }

    /// Generic matrix of an element expression after the spherical-vector
    /// normalization, over rational functions in q, t, and x.
    fn generic_matrix(&self, elt: &str) -> PyResult<String> {
        let w = parse_expr(&self.rs, elt).map_err(to_py)?;
        let m = kappa(&self.rs, &rho_prime(&self.rs, &self.wt, &w).map_err(to_py)?);
        Ok(pretty(&opmat_to_json(&m, &self.rs, &self.wt.names)))
    }

    /// Matrix of an element in the t -> 0 limit, over the q-Heisenberg
    /// algebra. Bernstein-side expressions use the primed realization.
    fn limit_matrix(&self, elt: &str) -> PyResult<String> {
        let w = parse_expr(&self.rs, elt).map_err(to_py)?;
        let m = match w.side().map_err(to_py)? {
            Some(Side::Primed) => rho0_prime(&self.rs, &self.wt, &w),
            _ => rho0(&self.rs, &self.wt, &w),
        }
        .map_err(to_py)?;
        Ok(pretty(&mat_to_json(&m, &self.rs.name, &self.wt.names)))
    }

    /// Expansion of the equivariant scalar attached to a weight against one
    /// basis class, with coefficients in the integral Laurent ring in q.
    fn expansion(&self, lambda: &str, w: &str) -> PyResult<String> {
        let lam = parse_lambda(self.rs.rank, lambda).map_err(to_py)?;
        let wtilde = parse_affine(&self.rs, w).map_err(to_py)?;
        let c = inverse_pieri_chevalley(&self.rs, &self.wt, &lam, &wtilde).map_err(to_py)?;
        let w_str = affine_to_string(&self.wt, &wtilde);
        Ok(pretty(&ipc_to_json(&self.rs.name, &self.wt, &lam, &w_str, &c)))
    }

    /// Spherical element of an invariant expression in the X letters.
    fn spherical(&self, elt: &str) -> PyResult<String> {
        let w = parse_expr(&self.rs, elt).map_err(to_py)?;
        let f = rho0_sph(&self.rs, &self.wt, &w).map_err(to_py)?;
        Ok(pretty(&elt_to_json(&f, &self.rs.name)))
    }

    /// Difference Toda operator of an invariant expression in the Y letters.
    fn toda(&self, elt: &str) -> PyResult<String> {
        let w = parse_expr(&self.rs, elt).map_err(to_py)?;
        let f = qtoda(&self.rs, &self.wt, &w).map_err(to_py)?;
        Ok(pretty(&elt_to_json(&f, &self.rs.name)))
    }

    /// Algebra relation suite; returns (name, passed) pairs.
    fn relations(&self) -> PyResult<Vec<(String, bool)>> {
        checks::relation_suite(&self.rs, &self.wt).map_err(to_py)
    }

    /// Every verification suite for this root system; (name, passed) pairs.
    fn verify(&self) -> PyResult<Vec<(String, bool)>> {
        checks::verify_suite(&self.rs.name).map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!(
            "Engine(type={}, rank={}, weyl_order={})",
            self.rs.name,
            self.rs.rank,
            self.wt.len()
        )
    }
}

/// Root system names accepted by `Engine`.
#[pyfunction]
fn root_systems() -> Vec<&'static str> {
    vec!["A1", "A2", "A3", "D4", "D5"]
}

#[pymodule]
fn semiflag_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Engine>()?;
    m.add_function(wrap_pyfunction!(root_systems, m)?)?;
    Ok(())
}
