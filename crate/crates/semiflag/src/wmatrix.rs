//! W-by-W matrix realization of difference-reflection operators over the
//! crossed product k(P) x| P (rational functions of x adjoined with group
//! elements y^eta), the kappa rescaling, and the exact t -> 0 limit into the
//! primed Heisenberg algebra.

use crate::daha::{act_ext_on_field, evaluate_word, Operator, Word};
use crate::exactalg::{poly_from_json, poly_to_json, FieldElt, Mono};
use crate::heis::{HeisElt, HeisMat, Lattice};
use crate::rootdata::{ExtAffineElt, RootSystem, WeylTable};
use crate::{Error, Result};
use std::collections::BTreeMap;

/// Matrix entry: an element of k(P) x| P as a finite map y-exponent ->
/// rational coefficient.
pub type OpEntry = BTreeMap<Vec<i64>, FieldElt>;

#[derive(Clone, Debug)]
pub struct OpMat {
    pub rank: usize,
    pub size: usize,
    pub entries: Vec<OpEntry>,
}

impl OpMat {
    pub fn zero(rank: usize, size: usize) -> Self {
        OpMat {
            rank,
            size,
            entries: vec![OpEntry::new(); size * size],
        }
    }

    pub fn identity(rank: usize, size: usize) -> Self {
        let mut m = Self::zero(rank, size);
        for i in 0..size {
            m.entries[i * size + i].insert(vec![0; rank], FieldElt::one(rank));
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &OpEntry {
        &self.entries[i * self.size + j]
    }

    fn insert_add(&mut self, i: usize, j: usize, y: Vec<i64>, f: FieldElt) {
        if f.is_zero() {
            return;
        }
        let entry = &mut self.entries[i * self.size + j];
        match entry.get_mut(&y) {
            Some(existing) => {
                *existing = existing.add(&f);
                if existing.is_zero() {
                    entry.remove(&y);
                }
            }
            None => {
                entry.insert(y, f);
            }
        }
    }

    /// Entrywise product in k(P) x| P:
    /// (f1 y^{eta1})(f2 y^{eta2}) = f1 * (y^{eta1}.f2) y^{eta1+eta2}, where
    /// y^eta twists x^lambda by q^{-(eta,lambda)}.
    pub fn mul(&self, other: &OpMat, rs: &RootSystem) -> OpMat {
        assert_eq!(self.size, other.size);
        let n = self.size;
        let mut out = OpMat::zero(self.rank, n);
        for i in 0..n {
            for k in 0..n {
                let left = self.get(i, k);
                if left.is_empty() {
                    continue;
                }
                for j in 0..n {
                    let right = other.get(k, j);
                    for (eta1, f1) in left {
                        for (eta2, f2) in right {
                            let twisted = twist_by_y(rs, eta1, f2);
                            let y: Vec<i64> =
                                eta1.iter().zip(eta2).map(|(a, b)| a + b).collect();
                            out.insert_add(i, j, y, f1.mul(&twisted));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn eq(&self, other: &OpMat) -> bool {
        if self.size != other.size {
            return false;
        }
        for (a, b) in self.entries.iter().zip(&other.entries) {
            let keys: std::collections::BTreeSet<_> = a.keys().chain(b.keys()).cloned().collect();
            for k in keys {
                let fa = a.get(&k).cloned().unwrap_or_else(|| FieldElt::zero(self.rank));
                let fb = b.get(&k).cloned().unwrap_or_else(|| FieldElt::zero(self.rank));
                if !fa.eq(&fb) {
                    return false;
                }
            }
        }
        true
    }
}

/// y^eta . f: every x^lambda in numerator and denominator picks up
/// q^{-(eta,lambda)}.
pub fn twist_by_y(rs: &RootSystem, eta: &[i64], f: &FieldElt) -> FieldElt {
    f.map_polys(|p| {
        p.map_mono(|m| Mono {
            q: m.q - rs.pairing_x2e(eta, &m.x),
            t: m.t,
            x: m.x.clone(),
        })
    })
}

/// Realize an operator as a W-by-W matrix: each term f (x) w y^beta
/// contributes (v^{-1}.f) y^{v^{-1}(eta)} to the entry (v, u^{-1}v), where
/// u = w and eta = w(beta).
pub fn to_matrix(rs: &RootSystem, wt: &WeylTable, op: &Operator) -> OpMat {
    let n = wt.len();
    let mut m = OpMat::zero(rs.rank, n);
    for (g, f) in &op.terms {
        let eta = g.w.apply(&g.beta);
        let u_inv = g.w.inverse();
        for (i, v) in wt.elements.iter().enumerate() {
            let v_inv = v.inverse();
            let j = wt.index_of(&u_inv.mul(v));
            let twisted = act_ext_on_field(rs, &ExtAffineElt::from_weyl(&v_inv), f);
            m.insert_add(i, j, v_inv.apply(&eta), twisted);
        }
    }
    m
}

/// The rescaling x^lambda -> t^{-(lambda,rho)} x^lambda,
/// y^mu -> t^{(mu,rho)} y^mu, applied entrywise.
pub fn kappa(rs: &RootSystem, m: &OpMat) -> OpMat {
    let mut out = OpMat::zero(m.rank, m.size);
    for idx in 0..m.entries.len() {
        let (i, j) = (idx / m.size, idx % m.size);
        for (eta, f) in &m.entries[idx] {
            let mut g = f.map_polys(|p| {
                p.map_mono(|mo| Mono {
                    q: mo.q,
                    t: mo.t - rs.pairing_x2(&mo.x, &rs.rho),
                    x: mo.x.clone(),
                })
            });
            let shift = rs.pairing_x2(eta, &rs.rho);
            g.num = g.num.mul(&crate::exactalg::LatticePoly::t_power(m.rank, shift));
            out.insert_add(i, j, eta.clone(), g);
        }
    }
    out
}

/// Entrywise exact t -> 0 limit into the primed Heisenberg algebra. Asserts
/// membership: every surviving q-exponent must be an integral power of q and
/// every x-exponent must lie in the root lattice.
pub fn re_limit(rs: &RootSystem, wt: &WeylTable, m: &OpMat) -> Result<HeisMat> {
    let n = m.size;
    let two_e = 2 * rs.e;
    let mut out = HeisMat::zero(Lattice::Primed, m.rank, n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = HeisElt::zero(Lattice::Primed, m.rank);
            for (eta, f) in m.get(i, j) {
                let context = || {
                    format!(
                        "entry ({}, {}), y-exponent {:?}",
                        wt.names[i], wt.names[j], eta
                    )
                };
                let p = f.t_limit().map_err(|e| match e {
                    Error::LimitDiverges(msg) => {
                        Error::LimitDiverges(format!("{msg} at {}", context()))
                    }
                    Error::LimitNotLaurent(msg) => {
                        Error::LimitNotLaurent(format!("{msg} at {}", context()))
                    }
                    other => other,
                })?;
                for (mono, c) in &p.terms {
                    debug_assert_eq!(mono.t, 0);
                    if mono.q % two_e != 0 {
                        return Err(Error::Domain(format!(
                            "non-integral q-exponent {}/{two_e} in the limit at {}",
                            mono.q,
                            context()
                        )));
                    }
                    if !rs.in_root_lattice(&mono.x) {
                        return Err(Error::Domain(format!(
                            "x-exponent {:?} outside the root lattice in the limit at {}",
                            mono.x,
                            context()
                        )));
                    }
                    acc.insert_add((mono.q / two_e, mono.x.clone(), eta.clone()), c.clone());
                }
            }
            *out.get_mut(i, j) = acc;
        }
    }
    Ok(out)
}

/// Matrix realization of a word: evaluate in the polynomial representation
/// and spread over the W-indexed basis.
pub fn rho_prime(rs: &RootSystem, wt: &WeylTable, w: &Word) -> Result<OpMat> {
    Ok(to_matrix(rs, wt, &evaluate_word(rs, w)?))
}

/// The full limit pipeline for a t-integral word: matrix realization,
/// kappa rescaling, then the exact t -> 0 limit.
pub fn rho0_prime(rs: &RootSystem, wt: &WeylTable, w: &Word) -> Result<HeisMat> {
    re_limit(rs, wt, &kappa(rs, &rho_prime(rs, wt, w)?))
}

pub fn opmat_to_json(m: &OpMat, rs: &RootSystem, order: &[String]) -> serde_json::Value {
    assert_eq!(order.len(), m.size);
    let rows: Vec<serde_json::Value> = (0..m.size)
        .map(|i| {
            let row: Vec<serde_json::Value> = (0..m.size)
                .map(|j| {
                    let cell: Vec<serde_json::Value> = m
                        .get(i, j)
                        .iter()
                        .map(|(y, f)| {
                            serde_json::json!({
                                "y": y,
                                "num": poly_to_json(&f.num),
                                "den": poly_to_json(&f.den_poly()),
                            })
                        })
                        .collect();
                    serde_json::Value::Array(cell)
                })
                .collect();
            serde_json::Value::Array(row)
        })
        .collect();
    serde_json::json!({
        "group": rs.name,
        "q_unit": 2 * rs.e,
        "t_unit": 2,
        "order": order,
        "entries": rows,
    })
}

pub fn opmat_from_json(v: &serde_json::Value, rank: usize) -> Result<(String, Vec<String>, OpMat)> {
    let group = v["group"]
        .as_str()
        .ok_or_else(|| Error::Data("missing group".into()))?
        .to_string();
    let order: Vec<String> = v["order"]
        .as_array()
        .ok_or_else(|| Error::Data("missing order".into()))?
        .iter()
        .map(|n| {
            n.as_str()
                .map(str::to_string)
                .ok_or_else(|| Error::Data("order entries must be strings".into()))
        })
        .collect::<Result<_>>()?;
    let rows = v["entries"]
        .as_array()
        .ok_or_else(|| Error::Data("missing entries".into()))?;
    let size = order.len();
    let mut m = OpMat::zero(rank, size);
    for (i, row) in rows.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| Error::Data("entry row must be an array".into()))?;
        for (j, cell) in row.iter().enumerate() {
            let terms = cell
                .as_array()
                .ok_or_else(|| Error::Data("matrix entry must be an array of terms".into()))?;
            for term in terms {
                let y: Vec<i64> = term["y"]
                    .as_array()
                    .ok_or_else(|| Error::Data("term y must be an array".into()))?
                    .iter()
                    .map(|c| {
                        c.as_i64()
                            .ok_or_else(|| Error::Data("y coordinate must be an integer".into()))
                    })
                    .collect::<Result<_>>()?;
                let f = FieldElt::from_ratio(
                    poly_from_json(&term["num"], rank)?,
                    poly_from_json(&term["den"], rank)?,
                );
                m.insert_add(i, j, y, f);
            }
        }
    }
    Ok((group, order, m))
}
