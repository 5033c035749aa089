//! Frozen reference values embedded in the binary: matrices, scalar
//! elements, and class expansions that pin every displayed rank-one value
//! and the rank-two operators.

use crate::heis::{elt_from_json, mat_from_json, HeisElt, HeisMat};
use crate::ktheory::{ipc_from_json, KClass};
use crate::rootdata::WeylTable;
use crate::wmatrix::{opmat_from_json, OpMat};
use crate::{Error, Result};

macro_rules! golden_table {
    ($($name:literal),* $(,)?) => {
        const GOLDEN: &[(&str, &str)] = &[
            $(($name, include_str!(concat!("../golden/", $name, ".json")))),*
        ];
    };
}

golden_table![
    "a1_ipc_basis_e",
    "a1_ipc_basis_s1",
    "a1_kappa_rho_prime_t1",
    "a1_qtoda_orbit_omega",
    "a1_rho0_d0_direct",
    "a1_rho0_d1_direct",
    "a1_rho0_x_neg_omega",
    "a1_rho0_x_omega",
    "a1_rho0_x_orbit_sum",
    "a1_rho0p_d0",
    "a1_rho0p_d1",
    "a1_rho0p_t0",
    "a1_rho0p_t1",
    "a1_rho0p_y_neg_omega",
    "a1_rho0p_y_omega",
    "a1_rho_prime_t1",
    "a1_rho_prime_y_omega",
    "a1_sph_orbit_omega",
    "a2_qtoda_orbit_w1",
    "a2_qtoda_orbit_w2",
    "a2_sph_orbit_w1",
    "a2_sph_orbit_w2",
];

pub fn golden_names() -> Vec<&'static str> {
    GOLDEN.iter().map(|(n, _)| *n).collect()
}

pub fn golden_json(name: &str) -> Result<serde_json::Value> {
    let (_, text) = GOLDEN
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::Data(format!("unknown reference value {name}")))?;
    serde_json::from_str(text).map_err(|e| Error::Data(format!("bad reference {name}: {e}")))
}

fn rank_of(name: &str) -> usize {
    if name.starts_with("a2") {
        2
    } else {
        1
    }
}

/// Load a reference matrix over a Heisenberg algebra.
pub fn golden_mat(name: &str) -> Result<HeisMat> {
    let v = golden_json(name)?;
    let (_, _, m) = mat_from_json(&v, rank_of(name))?;
    Ok(m)
}

/// Load a reference scalar element of a Heisenberg algebra.
pub fn golden_elt(name: &str) -> Result<HeisElt> {
    let v = golden_json(name)?;
    let (_, e) = elt_from_json(&v, rank_of(name))?;
    Ok(e)
}

/// Load a reference matrix over the function field.
pub fn golden_opmat(name: &str) -> Result<OpMat> {
    let v = golden_json(name)?;
    let (_, _, m) = opmat_from_json(&v, rank_of(name))?;
    Ok(m)
}

/// Load a reference class expansion: (lambda, w, class).
pub fn golden_ipc(name: &str, wt: &WeylTable) -> Result<(Vec<i64>, String, KClass)> {
    let v = golden_json(name)?;
    let (_, lambda, w, c) = ipc_from_json(&v, wt)?;
    Ok((lambda, w, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::RootSystem;

    #[test]
    fn every_reference_file_loads() {
        for name in golden_names() {
            let v = golden_json(name).unwrap();
            assert!(v.is_object(), "{name}");
        }
    }

    #[test]
    fn typed_loaders_read_each_schema() {
        assert_eq!(golden_mat("a1_rho0p_t1").unwrap().size, 2);
        assert_eq!(golden_elt("a1_sph_orbit_omega").unwrap().rank, 1);
        assert_eq!(golden_opmat("a1_rho_prime_t1").unwrap().size, 2);
        let rs = RootSystem::new("A1").unwrap();
        let wt = WeylTable::build(&rs).unwrap();
        let (lambda, w, c) = golden_ipc("a1_ipc_basis_e", &wt).unwrap();
        assert_eq!(lambda, vec![1]);
        assert_eq!(w, "e");
        assert_eq!(c.terms.len(), 2);
    }
}
