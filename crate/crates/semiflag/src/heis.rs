//! The two q-Heisenberg algebras and the duality maps between them.
//!
//! Both algebras are spanned by monomials q^k x^lambda y^mu with the
//! commutation rule x^a y^b = q^{(a,b)} y^b x^a; they differ in which lattice
//! carries the x's: the plain algebra (tag "H") has x in the weight lattice
//! and y in the root lattice, the primed algebra (tag "H'") the other way
//! around. Either way the cross-pairings are integers, so q-exponents here
//! are plain integers (unlike the scaled exponents used before the limit).

use crate::exactalg::{coeff_from_string, coeff_to_string, Coeff};
use crate::rootdata::{RootSystem, WeylElt};
use crate::{Error, Result};
use num::Zero;
use std::collections::BTreeMap;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Lattice {
    /// x-exponents in P, y-exponents in Q.
    Plain,
    /// x-exponents in Q, y-exponents in P.
    Primed,
}

impl Lattice {
    pub fn tag(self) -> &'static str {
        match self {
            Lattice::Plain => "H",
            Lattice::Primed => "H'",
        }
    }

    pub fn from_tag(tag: &str) -> Result<Lattice> {
        match tag {
            "H" => Ok(Lattice::Plain),
            "H'" => Ok(Lattice::Primed),
            _ => Err(Error::Data(format!("unknown algebra tag {tag:?}"))),
        }
    }
}

/// Term key: (plain q-exponent, x-exponent, y-exponent), normal-ordered with
/// x written before y.
pub type HKey = (i64, Vec<i64>, Vec<i64>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeisElt {
    pub lattice: Lattice,
    pub rank: usize,
    pub terms: BTreeMap<HKey, Coeff>,
}

impl HeisElt {
    pub fn zero(lattice: Lattice, rank: usize) -> Self {
        HeisElt {
            lattice,
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(lattice: Lattice, rank: usize) -> Self {
        Self::monomial(lattice, 0, vec![0; rank], vec![0; rank], Coeff::from_integer(1.into()))
    }

    pub fn monomial(lattice: Lattice, q: i64, x: Vec<i64>, y: Vec<i64>, c: Coeff) -> Self {
        let rank = x.len();
        assert_eq!(y.len(), rank);
        let mut e = Self::zero(lattice, rank);
        e.insert_add((q, x, y), c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn insert_add(&mut self, key: HKey, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(e) => {
                *e += c;
                if e.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add(&self, other: &HeisElt) -> HeisElt {
        assert_eq!(self.lattice, other.lattice);
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert_add(k.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> HeisElt {
        let mut out = HeisElt::zero(self.lattice, self.rank);
        for (k, c) in &self.terms {
            out.terms.insert(k.clone(), -c.clone());
        }
        out
    }

    pub fn sub(&self, other: &HeisElt) -> HeisElt {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Coeff) -> HeisElt {
        if c.is_zero() {
            return HeisElt::zero(self.lattice, self.rank);
        }
        let mut out = HeisElt::zero(self.lattice, self.rank);
        for (k, v) in &self.terms {
            out.terms.insert(k.clone(), v * c);
        }
        out
    }

    /// Product, normal-ordering via
    /// (x^a y^b)(x^c y^d) = q^{-(c,b)} x^{a+c} y^{b+d}.
    pub fn mul(&self, other: &HeisElt, rs: &RootSystem) -> HeisElt {
        assert_eq!(self.lattice, other.lattice);
        let mut out = HeisElt::zero(self.lattice, self.rank);
        for ((q1, x1, y1), c1) in &self.terms {
            for ((q2, x2, y2), c2) in &other.terms {
                let q = q1 + q2 - rs.pairing_int(x2, y1);
                let x: Vec<i64> = x1.iter().zip(x2).map(|(a, b)| a + b).collect();
                let y: Vec<i64> = y1.iter().zip(y2).map(|(a, b)| a + b).collect();
                out.insert_add((q, x, y), c1 * c2);
            }
        }
        out
    }
}

/// The duality anti-isomorphism from the primed algebra to the plain one:
/// on normal-ordered terms,
/// c q^k x^beta y^mu -> c q^{k + (beta,beta)/2} x^{w0(mu - beta)} y^{w0(beta)}.
pub fn tau(rs: &RootSystem, w0: &WeylElt, e: &HeisElt) -> HeisElt {
    assert_eq!(e.lattice, Lattice::Primed, "tau maps the primed algebra to the plain one");
    let mut out = HeisElt::zero(Lattice::Plain, e.rank);
    for ((k, beta, mu), c) in &e.terms {
        let x4 = rs.pairing_x2(beta, beta);
        assert!(x4 % 4 == 0, "(beta,beta)/2 must be an integer for beta in Q");
        let shift = x4 / 4;
        let diff: Vec<i64> = mu.iter().zip(beta).map(|(m, b)| m - b).collect();
        out.insert_add((k + shift, w0.apply(&diff), w0.apply(beta)), c.clone());
    }
    out
}

/// The bar involution: q -> q^{-1}, x^lambda -> x^{-lambda}, y fixed.
pub fn star(e: &HeisElt) -> HeisElt {
    let mut out = HeisElt::zero(e.lattice, e.rank);
    for ((k, x, y), c) in &e.terms {
        out.insert_add((-k, x.iter().map(|&v| -v).collect(), y.clone()), c.clone());
    }
    out
}

/// A W-by-W matrix over one of the Heisenberg algebras, rows and columns
/// indexed by the fixed Weyl-group order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeisMat {
    pub lattice: Lattice,
    pub rank: usize,
    pub size: usize,
    pub entries: Vec<HeisElt>,
}

impl HeisMat {
    pub fn zero(lattice: Lattice, rank: usize, size: usize) -> Self {
        HeisMat {
            lattice,
            rank,
            size,
            entries: vec![HeisElt::zero(lattice, rank); size * size],
        }
    }

    pub fn identity(lattice: Lattice, rank: usize, size: usize) -> Self {
        let mut m = Self::zero(lattice, rank, size);
        for i in 0..size {
            m.entries[i * size + i] = HeisElt::one(lattice, rank);
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &HeisElt {
        &self.entries[i * self.size + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut HeisElt {
        &mut self.entries[i * self.size + j]
    }

    pub fn add(&self, other: &HeisMat) -> HeisMat {
        assert_eq!(self.size, other.size);
        let mut out = self.clone();
        for (e, o) in out.entries.iter_mut().zip(&other.entries) {
            *e = e.add(o);
        }
        out
    }

    pub fn sub(&self, other: &HeisMat) -> HeisMat {
        assert_eq!(self.size, other.size);
        let mut out = self.clone();
        for (e, o) in out.entries.iter_mut().zip(&other.entries) {
            *e = e.sub(o);
        }
        out
    }

    pub fn mul(&self, other: &HeisMat, rs: &RootSystem) -> HeisMat {
        assert_eq!(self.size, other.size);
        assert_eq!(self.lattice, other.lattice);
        let n = self.size;
        let mut out = HeisMat::zero(self.lattice, self.rank, n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = HeisElt::zero(self.lattice, self.rank);
                for k in 0..n {
                    acc = acc.add(&self.get(i, k).mul(other.get(k, j), rs));
                }
                *out.get_mut(i, j) = acc;
            }
        }
        out
    }

    /// Left-multiply every entry by a scalar element.
    pub fn scale_elt(&self, s: &HeisElt, rs: &RootSystem) -> HeisMat {
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            *e = s.mul(e, rs);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }
}

/// Entrywise tau combined with the transpose (tau is an anti-isomorphism, so
/// this is an algebra homomorphism on matrices).
pub fn mat_tau(rs: &RootSystem, w0: &WeylElt, m: &HeisMat) -> HeisMat {
    let n = m.size;
    let mut out = HeisMat::zero(Lattice::Plain, m.rank, n);
    for i in 0..n {
        for j in 0..n {
            *out.get_mut(i, j) = tau(rs, w0, m.get(j, i));
        }
    }
    out
}

/// Entrywise bar involution.
pub fn mat_star(m: &HeisMat) -> HeisMat {
    let mut out = HeisMat::zero(m.lattice, m.rank, m.size);
    for (o, e) in out.entries.iter_mut().zip(&m.entries) {
        *o = star(e);
    }
    out
}

pub fn elt_to_json(e: &HeisElt, group: &str) -> serde_json::Value {
    let terms: Vec<serde_json::Value> = e
        .terms
        .iter()
        .map(|((q, x, y), c)| {
            serde_json::json!({
                "q": q,
                "x": x,
                "y": y,
                "c": coeff_to_string(c),
            })
        })
        .collect();
    serde_json::json!({
        "group": group,
        "tag": e.lattice.tag(),
        "terms": terms,
    })
}

fn terms_from_json(v: &serde_json::Value, lattice: Lattice, rank: usize) -> Result<HeisElt> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Data("terms must be an array".into()))?;
    let mut e = HeisElt::zero(lattice, rank);
    for t in arr {
        let q = t["q"]
            .as_i64()
            .ok_or_else(|| Error::Data("term q must be an integer".into()))?;
        let geti = |v: &serde_json::Value| -> Result<Vec<i64>> {
            v.as_array()
                .ok_or_else(|| Error::Data("exponent must be an array".into()))?
                .iter()
                .map(|c| {
                    c.as_i64()
                        .ok_or_else(|| Error::Data("exponent coordinate must be an integer".into()))
                })
                .collect()
        };
        let x = geti(&t["x"])?;
        let y = geti(&t["y"])?;
        if x.len() != rank || y.len() != rank {
            return Err(Error::Data("exponent rank mismatch".into()));
        }
        let c = coeff_from_string(
            t["c"]
                .as_str()
                .ok_or_else(|| Error::Data("coefficient must be a string".into()))?,
        )?;
        e.insert_add((q, x, y), c);
    }
    Ok(e)
}

pub fn elt_from_json(v: &serde_json::Value, rank: usize) -> Result<(String, HeisElt)> {
    let group = v["group"]
        .as_str()
        .ok_or_else(|| Error::Data("missing group".into()))?
        .to_string();
    let lattice = Lattice::from_tag(
        v["tag"]
            .as_str()
            .ok_or_else(|| Error::Data("missing tag".into()))?,
    )?;
    let e = terms_from_json(&v["terms"], lattice, rank)?;
    Ok((group, e))
}

pub fn mat_to_json(m: &HeisMat, group: &str, order: &[String]) -> serde_json::Value {
    assert_eq!(order.len(), m.size);
    let rows: Vec<serde_json::Value> = (0..m.size)
        .map(|i| {
            let row: Vec<serde_json::Value> = (0..m.size)
                .map(|j| elt_to_json(m.get(i, j), group)["terms"].clone())
                .collect();
            serde_json::Value::Array(row)
        })
        .collect();
    serde_json::json!({
        "group": group,
        "tag": m.lattice.tag(),
        "order": order,
        "entries": rows,
    })
}

pub fn mat_from_json(v: &serde_json::Value, rank: usize) -> Result<(String, Vec<String>, HeisMat)> {
    let group = v["group"]
        .as_str()
        .ok_or_else(|| Error::Data("missing group".into()))?
        .to_string();
    let lattice = Lattice::from_tag(
        v["tag"]
            .as_str()
            .ok_or_else(|| Error::Data("missing tag".into()))?,
    )?;
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
    if rows.len() != size {
        return Err(Error::Data("entry row count does not match order".into()));
    }
    let mut m = HeisMat::zero(lattice, rank, size);
    for (i, row) in rows.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| Error::Data("entry row must be an array".into()))?;
        if row.len() != size {
            return Err(Error::Data("entry column count does not match order".into()));
        }
        for (j, cell) in row.iter().enumerate() {
            *m.get_mut(i, j) = terms_from_json(cell, lattice, rank)?;
        }
    }
    Ok((group, order, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::big;

    fn a1() -> RootSystem {
        RootSystem::new("A1").unwrap()
    }

    fn mono(lat: Lattice, q: i64, x: &[i64], y: &[i64]) -> HeisElt {
        HeisElt::monomial(lat, q, x.to_vec(), y.to_vec(), big(1))
    }

    #[test]
    fn commutation_rule() {
        let rs = a1();
        // x^omega y^alpha stays normal-ordered; y^alpha x^omega picks up
        // q^{-(omega, alpha)} = q^{-1}.
        let xo = mono(Lattice::Plain, 0, &[1], &[0]);
        let ya = mono(Lattice::Plain, 0, &[0], &[2]);
        let normal = xo.mul(&ya, &rs);
        assert_eq!(normal, mono(Lattice::Plain, 0, &[1], &[2]));
        let swapped = ya.mul(&xo, &rs);
        assert_eq!(swapped, mono(Lattice::Plain, -1, &[1], &[2]));
    }

    #[test]
    fn associativity_samples() {
        let rs = a1();
        let a = mono(Lattice::Plain, 1, &[1], &[2]);
        let b = mono(Lattice::Plain, 0, &[-1], &[2]).add(&mono(Lattice::Plain, 2, &[3], &[0]));
        let c = mono(Lattice::Plain, -1, &[1], &[-2]);
        let left = a.mul(&b, &rs).mul(&c, &rs);
        let right = a.mul(&b.mul(&c, &rs), &rs);
        assert_eq!(left, right);
    }

    #[test]
    fn tau_is_anti_multiplicative() {
        let rs = a1();
        let wt = crate::rootdata::WeylTable::build(&rs).unwrap();
        let w0 = wt.w0();
        // x in Q, y in P on the primed side.
        let a = mono(Lattice::Primed, 1, &[2], &[1]);
        let b = mono(Lattice::Primed, 0, &[-2], &[1]).add(&mono(Lattice::Primed, -1, &[0], &[-1]));
        let lhs = tau(&rs, w0, &a.mul(&b, &rs));
        let rhs = tau(&rs, w0, &b).mul(&tau(&rs, w0, &a), &rs);
        assert_eq!(lhs, rhs);
        // tau(y^omega) = x^{w0(omega)} = x^{-omega} in A1, with no q-shift.
        let yo = mono(Lattice::Primed, 0, &[0], &[1]);
        assert_eq!(tau(&rs, w0, &yo), mono(Lattice::Plain, 0, &[-1], &[0]));
        // tau(x^alpha) picks up q^{(alpha,alpha)/2} = q.
        let xa = mono(Lattice::Primed, 0, &[2], &[0]);
        assert_eq!(tau(&rs, w0, &xa), mono(Lattice::Plain, 1, &[2], &[-2]));
    }

    #[test]
    fn star_is_a_homomorphism_and_involution() {
        let rs = a1();
        let a = mono(Lattice::Plain, 1, &[1], &[2]);
        let b = mono(Lattice::Plain, -2, &[-3], &[2]);
        assert_eq!(star(&a.mul(&b, &rs)), star(&a).mul(&star(&b), &rs));
        assert_eq!(star(&star(&a)), a);
    }

    #[test]
    fn matrix_identity_and_product() {
        let rs = a1();
        let id = HeisMat::identity(Lattice::Plain, 1, 2);
        let mut m = HeisMat::zero(Lattice::Plain, 1, 2);
        *m.get_mut(0, 0) = mono(Lattice::Plain, 0, &[1], &[0]);
        *m.get_mut(0, 1) = mono(Lattice::Plain, 0, &[1], &[2]);
        *m.get_mut(1, 1) = mono(Lattice::Plain, -1, &[-1], &[0]);
        assert_eq!(m.mul(&id, &rs), m);
        assert_eq!(id.mul(&m, &rs), m);
    }

    #[test]
    fn json_round_trip() {
        let rs = a1();
        let wt = crate::rootdata::WeylTable::build(&rs).unwrap();
        let mut m = HeisMat::identity(Lattice::Primed, 1, 2);
        *m.get_mut(1, 0) = mono(Lattice::Primed, -1, &[-2], &[-1]).scale(&big(-3));
        let names: Vec<String> = wt.names.clone();
        let j = mat_to_json(&m, "A1", &names);
        let (group, order, back) = mat_from_json(&j, 1).unwrap();
        assert_eq!(group, "A1");
        assert_eq!(order, names);
        assert_eq!(back, m);
    }
}
