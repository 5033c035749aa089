//! The free right module over the plain Heisenberg algebra on the finite
//! Weyl group, with basis classes indexed by affine Weyl elements and
//! weights, the matrix left action of limit words, and inverse expansions of
//! multiplication operators in the class basis.

use crate::daha::{Letter, Word};
use crate::exactalg::{coeff_to_bigint, QLaurent};
use crate::heis::{HeisElt, Lattice};
use crate::nildaha::{rho0, rho0_d_direct};
use crate::rootdata::{ExtAffineElt, RootSystem, WeylTable};
use crate::{Error, Result};
use num::BigRational;
use std::collections::BTreeMap;

/// A finite integer-Laurent combination of basis classes, keyed by
/// (translation part, finite part, weight).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KClass {
    pub rank: usize,
    pub terms: BTreeMap<(Vec<i64>, usize, Vec<i64>), QLaurent>,
}

impl KClass {
    pub fn zero(rank: usize) -> Self {
        KClass {
            rank,
            terms: BTreeMap::new(),
        }
    }

    /// The single class attached to the affine element (v, beta) and weight.
    pub fn basis(rank: usize, beta: Vec<i64>, v: usize, mu: Vec<i64>) -> Self {
        let mut out = Self::zero(rank);
        out.insert_add((beta, v, mu), QLaurent::one());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn insert_add(&mut self, key: (Vec<i64>, usize, Vec<i64>), c: QLaurent) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(existing) => {
                *existing = existing.add(&c);
                if existing.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add(&self, other: &KClass) -> KClass {
        let mut out = self.clone();
        for (key, c) in &other.terms {
            out.insert_add(key.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> KClass {
        KClass {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(key, c)| (key.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &KClass) -> KClass {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &QLaurent) -> KClass {
        let mut out = KClass::zero(self.rank);
        for (key, d) in &self.terms {
            out.insert_add(key.clone(), d.mul(c));
        }
        out
    }
}

/// Right action of a plain Heisenberg element on a class: x-parts shift the
/// weight, y-parts shift the translation with the commutation q-power.
pub fn heis_act(rs: &RootSystem, c: &KClass, h: &HeisElt) -> Result<KClass> {
    if h.lattice != Lattice::Plain {
        return Err(Error::Domain(
            "classes form a right module over the plain algebra only".into(),
        ));
    }
    let mut out = KClass::zero(c.rank);
    for ((beta0, v, lam), d) in &c.terms {
        for ((k, mu, beta), hc) in &h.terms {
            if !rs.in_root_lattice(beta) {
                return Err(Error::Domain(
                    "translation exponent lies outside the root lattice".into(),
                ));
            }
            let hc_int = coeff_to_bigint(hc)?;
            let lam_mu: Vec<i64> = lam.iter().zip(mu).map(|(a, b)| a + b).collect();
            let beta_sum: Vec<i64> = beta0.iter().zip(beta).map(|(a, b)| a + b).collect();
            let shift = k + rs.pairing_int(beta, &lam_mu);
            out.insert_add(
                (beta_sum, *v, lam_mu),
                d.mul(&QLaurent::monomial(shift, hc_int)),
            );
        }
    }
    Ok(out)
}

/// Unique coordinates of a class over the basis indexed by the finite Weyl
/// group: component at v collects q^{-<beta,lambda>} x^lambda y^beta.
pub fn to_free_form(rs: &RootSystem, wt: &WeylTable, c: &KClass) -> Vec<HeisElt> {
    let mut comps = vec![HeisElt::zero(Lattice::Plain, c.rank); wt.len()];
    for ((beta, v, lam), d) in &c.terms {
        let base = -rs.pairing_int(beta, lam);
        for (&k, ci) in &d.0 {
            comps[*v].insert_add(
                (base + k, lam.clone(), beta.clone()),
                BigRational::from_integer(ci.clone()),
            );
        }
    }
    comps
}

/// Inverse of to_free_form: read each monomial back as a basis class.
pub fn from_free_form(rs: &RootSystem, wt: &WeylTable, comps: &[HeisElt]) -> Result<KClass> {
    debug_assert_eq!(comps.len(), wt.len());
    let rank = rs.rank;
    let mut out = KClass::zero(rank);
    for (v, h) in comps.iter().enumerate() {
        for ((k, x, y), c) in &h.terms {
            let ci = coeff_to_bigint(c).map_err(|_| {
                Error::Check("class coefficient is not an integer Laurent polynomial".into())
            })?;
            let shift = k + rs.pairing_int(x, y);
            out.insert_add(
                (y.clone(), v, x.clone()),
                QLaurent::monomial(shift, ci),
            );
        }
    }
    Ok(out)
}

fn matrix_act(
    rs: &RootSystem,
    wt: &WeylTable,
    m: &crate::heis::HeisMat,
    c: &KClass,
) -> Result<KClass> {
    let comps = to_free_form(rs, wt, c);
    let n = wt.len();
    let mut new_comps = vec![HeisElt::zero(Lattice::Plain, rs.rank); n];
    for v in 0..n {
        for (w, comp) in comps.iter().enumerate() {
            if comp.is_zero() {
                continue;
            }
            let entry = m.get(v, w);
            if entry.is_zero() {
                continue;
            }
            new_comps[v] = new_comps[v].add(&entry.mul(comp, rs));
        }
    }
    from_free_form(rs, wt, &new_comps)
}

/// Left action of a plain limit word through its matrix realization.
pub fn nil_act(rs: &RootSystem, wt: &WeylTable, w: &Word, c: &KClass) -> Result<KClass> {
    let m = rho0(rs, wt, w)?;
    matrix_act(rs, wt, &m, c)
}

/// Left action of the idempotent generator through its direct matrix.
pub fn demazure_act(rs: &RootSystem, wt: &WeylTable, i: usize, c: &KClass) -> Result<KClass> {
    let m = rho0_d_direct(rs, wt, i)?;
    matrix_act(rs, wt, &m, c)
}

/// Expansion of the multiplication operator attached to lambda on the basis
/// class of wtilde: the word X^{-lambda} acts on [O_wtilde(0)].
pub fn inverse_pieri_chevalley(
    rs: &RootSystem,
    wt: &WeylTable,
    lambda: &[i64],
    wtilde: &ExtAffineElt,
) -> Result<KClass> {
    if !rs.in_root_lattice(&wtilde.beta) {
        return Err(Error::Domain(
            "translation part of the basis class must lie in the root lattice".into(),
        ));
    }
    let v = wt.index_of(&wtilde.w);
    let base = KClass::basis(rs.rank, wtilde.beta.clone(), v, vec![0; rs.rank]);
    let neg: Vec<i64> = lambda.iter().map(|&a| -a).collect();
    nil_act(rs, wt, &Word::letter(rs.rank, Letter::X(neg)), &base)
}

/// Relabel every basis index (v, beta) as (v, -w0(beta)); coefficients are
/// untouched.
pub fn overline(wt: &WeylTable, c: &KClass) -> KClass {
    let w0 = wt.w0();
    let mut out = KClass::zero(c.rank);
    for ((beta, v, mu), d) in &c.terms {
        let bar: Vec<i64> = w0.apply(beta).iter().map(|&a| -a).collect();
        out.insert_add((bar, *v, mu.clone()), d.clone());
    }
    out
}

/// Serialize an expansion together with the weight and affine element that
/// produced it.
pub fn ipc_to_json(
    group: &str,
    wt: &WeylTable,
    lambda: &[i64],
    w_str: &str,
    c: &KClass,
) -> serde_json::Value {
    let terms: Vec<serde_json::Value> = c
        .terms
        .iter()
        .map(|((beta, v, mu), d)| {
            serde_json::json!({
                "beta": beta,
                "v": wt.names[*v],
                "mu": mu,
                "d": crate::exactalg::qlaurent_to_json(d),
            })
        })
        .collect();
    serde_json::json!({
        "group": group,
        "lambda": lambda,
        "w": w_str,
        "terms": terms,
    })
}

fn json_vec(v: &serde_json::Value) -> Result<Vec<i64>> {
    v.as_array()
        .ok_or_else(|| Error::Data("expected an integer array".into()))?
        .iter()
        .map(|x| {
            x.as_i64()
                .ok_or_else(|| Error::Data("expected an integer".into()))
        })
        .collect()
}

/// Read back a serialized expansion: (group, lambda, w, class).
pub fn ipc_from_json(
    v: &serde_json::Value,
    wt: &WeylTable,
) -> Result<(String, Vec<i64>, String, KClass)> {
    let group = v["group"]
        .as_str()
        .ok_or_else(|| Error::Data("missing group".into()))?
        .to_string();
    let lambda = json_vec(&v["lambda"])?;
    let w_str = v["w"]
        .as_str()
        .ok_or_else(|| Error::Data("missing w".into()))?
        .to_string();
    let rank = lambda.len();
    let mut c = KClass::zero(rank);
    for t in v["terms"]
        .as_array()
        .ok_or_else(|| Error::Data("missing terms".into()))?
    {
        let beta = json_vec(&t["beta"])?;
        let mu = json_vec(&t["mu"])?;
        let name = t["v"]
            .as_str()
            .ok_or_else(|| Error::Data("missing v".into()))?;
        let elt = wt
            .by_name(name)
            .ok_or_else(|| Error::Data(format!("unknown group element {name}")))?;
        let vi = wt.index_of(elt);
        let d = crate::exactalg::qlaurent_from_json(&t["d"])?;
        c.insert_add((beta, vi, mu), d);
    }
    Ok((group, lambda, w_str, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::big;
    use num::BigInt;

    fn setup(name: &str) -> (RootSystem, WeylTable) {
        let rs = RootSystem::new(name).unwrap();
        let wt = WeylTable::build(&rs).unwrap();
        (rs, wt)
    }

    fn ql(rows: &[(i64, i64)]) -> QLaurent {
        let mut out = QLaurent::default();
        for (k, c) in rows {
            out.insert_add(*k, BigInt::from(*c));
        }
        out
    }

    #[test]
    fn weight_shift_and_translation_shift() {
        let (rs, _) = setup("A1");
        let e_class = KClass::basis(1, vec![0], 0, vec![0]);
        let xnu = HeisElt::monomial(Lattice::Plain, 0, vec![3], vec![0], big(1));
        assert_eq!(
            heis_act(&rs, &e_class, &xnu).unwrap(),
            KClass::basis(1, vec![0], 0, vec![3])
        );
        // Acting on [O_s(w)] by y^alpha picks up q^{<alpha, w>} = q.
        let s_class = KClass::basis(1, vec![0], 1, vec![1]);
        let ya = HeisElt::monomial(Lattice::Plain, 0, vec![0], vec![2], big(1));
        let got = heis_act(&rs, &s_class, &ya).unwrap();
        let want = KClass::basis(1, vec![2], 1, vec![1]).scale(&ql(&[(1, 1)]));
        assert_eq!(got, want);
        // The unit acts as the identity.
        let one = HeisElt::one(Lattice::Plain, 1);
        assert_eq!(heis_act(&rs, &got, &one).unwrap(), got);
    }

    #[test]
    fn action_rejects_non_root_translations() {
        let (rs, _) = setup("A1");
        let c = KClass::basis(1, vec![0], 0, vec![0]);
        let bad = HeisElt::monomial(Lattice::Plain, 0, vec![0], vec![1], big(1));
        assert!(matches!(heis_act(&rs, &c, &bad), Err(Error::Domain(_))));
    }

    #[test]
    fn free_coordinates_round_trip() {
        let (rs, wt) = setup("A1");
        // [O_{w y^beta}(lambda)] has coordinate q^{-<beta,lambda>} x^lambda y^beta.
        let c = KClass::basis(1, vec![2], 1, vec![1]);
        let comps = to_free_form(&rs, &wt, &c);
        assert!(comps[0].is_zero());
        assert_eq!(
            comps[1],
            HeisElt::monomial(Lattice::Plain, -1, vec![1], vec![2], big(1))
        );
        assert_eq!(from_free_form(&rs, &wt, &comps).unwrap(), c);

        let mut mixed = KClass::basis(1, vec![0], 0, vec![0]);
        mixed.insert_add((vec![-2], 1, vec![3]), ql(&[(2, 5), (-1, -1)]));
        let comps = to_free_form(&rs, &wt, &mixed);
        assert_eq!(from_free_form(&rs, &wt, &comps).unwrap(), mixed);
    }

    #[test]
    fn multiplication_operator_on_basis_classes() {
        let (rs, wt) = setup("A1");
        let xw = Word::letter(1, Letter::X(vec![-1]));
        // On the identity class: two terms.
        let e_class = KClass::basis(1, vec![0], 0, vec![0]);
        let got = nil_act(&rs, &wt, &xw, &e_class).unwrap();
        let mut want = KClass::basis(1, vec![0], 0, vec![1]);
        want.insert_add((vec![0], 1, vec![1]), ql(&[(0, -1)]));
        assert_eq!(got, want);
        // On the reflection class: three terms with q-coefficients.
        let s_class = KClass::basis(1, vec![0], 1, vec![0]);
        let got = nil_act(&rs, &wt, &xw, &s_class).unwrap();
        let mut want = KClass::basis(1, vec![0], 1, vec![-1]);
        want.insert_add((vec![2], 0, vec![1]), ql(&[(1, 1)]));
        want.insert_add((vec![2], 1, vec![1]), ql(&[(1, -1)]));
        assert_eq!(got, want);
        // The empty weight acts as the identity.
        let id = Word::letter(1, Letter::X(vec![0]));
        assert_eq!(nil_act(&rs, &wt, &id, &got).unwrap(), got);
    }

    #[test]
    fn idempotent_action_on_classes() {
        let (rs, wt) = setup("A1");
        let e_class = KClass::basis(1, vec![0], 0, vec![0]);
        let s_class = KClass::basis(1, vec![0], 1, vec![0]);
        let d1 = demazure_act(&rs, &wt, 1, &e_class).unwrap();
        assert_eq!(d1, e_class);
        let d1s = demazure_act(&rs, &wt, 1, &s_class).unwrap();
        assert_eq!(d1s, e_class);
        let d0 = demazure_act(&rs, &wt, 0, &e_class).unwrap();
        assert_eq!(d0, KClass::basis(1, vec![-2], 1, vec![0]));
        for i in [0usize, 1] {
            for c in [&e_class, &s_class] {
                let once = demazure_act(&rs, &wt, i, c).unwrap();
                let twice = demazure_act(&rs, &wt, i, &once).unwrap();
                assert_eq!(twice, once, "node {i}");
            }
        }
    }

    #[test]
    fn left_and_right_actions_commute() {
        let (rs, wt) = setup("A1");
        let mut c = KClass::basis(1, vec![2], 1, vec![-1]);
        c.insert_add((vec![0], 0, vec![2]), ql(&[(1, 3)]));
        let h = HeisElt::monomial(Lattice::Plain, 1, vec![1], vec![-2], big(2));
        for w in [
            Word::letter(1, Letter::X(vec![-1])),
            Word::letter(1, Letter::D(0)),
            Word::letter(1, Letter::T(1)).mul(&Word::letter(1, Letter::X(vec![1]))),
        ] {
            let lhs = heis_act(&rs, &nil_act(&rs, &wt, &w, &c).unwrap(), &h).unwrap();
            let rhs = nil_act(&rs, &wt, &w, &heis_act(&rs, &c, &h).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn expansion_round_trip() {
        let (rs, wt) = setup("A1");
        for lambda in [vec![1], vec![-1], vec![2]] {
            for v in 0..wt.len() {
                for beta in [vec![0i64], vec![2], vec![-4]] {
                    let wtilde = ExtAffineElt {
                        w: wt.elements[v].clone(),
                        beta: beta.clone(),
                    };
                    let exp = inverse_pieri_chevalley(&rs, &wt, &lambda, &wtilde).unwrap();
                    let back = nil_act(
                        &rs,
                        &wt,
                        &Word::letter(1, Letter::X(lambda.clone())),
                        &exp,
                    )
                    .unwrap();
                    assert_eq!(back, KClass::basis(1, beta, v, vec![0]));
                }
            }
        }
    }

    #[test]
    fn expansion_with_zero_weight_is_identity() {
        let (rs, wt) = setup("A1");
        let wtilde = ExtAffineElt {
            w: wt.elements[1].clone(),
            beta: vec![2],
        };
        let exp = inverse_pieri_chevalley(&rs, &wt, &[0], &wtilde).unwrap();
        assert_eq!(exp, KClass::basis(1, vec![2], 1, vec![0]));
    }

    #[test]
    fn relabeling_negates_and_flips_translations() {
        let (_rs, wt) = setup("A2");
        // -w0(alpha_1) = alpha_2 in rank two.
        let c = KClass::basis(2, vec![2, -1], 0, vec![0, 0]);
        let bar = overline(&wt, &c);
        let (key, _) = bar.terms.iter().next().unwrap();
        assert_eq!(key.0, vec![-1, 2]);
    }

    #[test]
    fn expansion_json_round_trip() {
        let (rs, wt) = setup("A1");
        let wtilde = ExtAffineElt::identity(1);
        let exp = inverse_pieri_chevalley(&rs, &wt, &[1], &wtilde).unwrap();
        let v = ipc_to_json("A1", &wt, &[1], "e", &exp);
        let (group, lambda, w_str, back) = ipc_from_json(&v, &wt).unwrap();
        assert_eq!(group, "A1");
        assert_eq!(lambda, vec![1]);
        assert_eq!(w_str, "e");
        assert_eq!(back, exp);
    }
}
