//! Exact scalar arithmetic: Laurent polynomials in q^{1/2e}, t^{1/2} and the
//! lattice variables x^lambda, fractions of such polynomials, and the exact
//! t -> 0 limit used to pass from the generic to the nil representation.
//!
//! Exponent conventions: `Mono.q` counts powers of q^{1/(2e)} and `Mono.t`
//! counts powers of t^{1/2}, so both stay integers throughout; `Mono.x` is a
//! weight in fundamental-weight coordinates.

use crate::{Error, Result};
use num::{BigInt, BigRational, One, Zero};
use std::collections::BTreeMap;
use std::str::FromStr;

pub type Coeff = BigRational;

pub fn big(i: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(i))
}

/// A monomial q^{q/2e} t^{t/2} x^x.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mono {
    pub q: i64,
    pub t: i64,
    pub x: Vec<i64>,
}

impl Mono {
    pub fn unit(rank: usize) -> Mono {
        Mono {
            q: 0,
            t: 0,
            x: vec![0; rank],
        }
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono {
            q: self.q + other.q,
            t: self.t + other.t,
            x: self
                .x
                .iter()
                .zip(&other.x)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

/// A Laurent polynomial over the monomials above, with exact rational
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct LatticePoly {
    pub rank: usize,
    pub terms: BTreeMap<Mono, Coeff>,
}

impl LatticePoly {
    pub fn zero(rank: usize) -> Self {
        LatticePoly {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::from_term(Mono::unit(rank), big(1))
    }

    pub fn from_term(m: Mono, c: Coeff) -> Self {
        let rank = m.x.len();
        let mut p = Self::zero(rank);
        p.insert_add(m, c);
        p
    }

    pub fn constant(rank: usize, c: Coeff) -> Self {
        Self::from_term(Mono::unit(rank), c)
    }

    pub fn q_power(rank: usize, q_scaled: i64) -> Self {
        Self::from_term(
            Mono {
                q: q_scaled,
                t: 0,
                x: vec![0; rank],
            },
            big(1),
        )
    }

    pub fn t_power(rank: usize, t_scaled: i64) -> Self {
        Self::from_term(
            Mono {
                q: 0,
                t: t_scaled,
                x: vec![0; rank],
            },
            big(1),
        )
    }

    pub fn x_power(lambda: &[i64]) -> Self {
        Self::from_term(
            Mono {
                q: 0,
                t: 0,
                x: lambda.to_vec(),
            },
            big(1),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn insert_add(&mut self, m: Mono, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(e) => {
                *e += c;
                if e.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &LatticePoly) -> LatticePoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> LatticePoly {
        let mut out = LatticePoly::zero(self.rank);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c.clone());
        }
        out
    }

    pub fn sub(&self, other: &LatticePoly) -> LatticePoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &LatticePoly) -> LatticePoly {
        let mut out = LatticePoly::zero(self.rank);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.insert_add(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Coeff) -> LatticePoly {
        if c.is_zero() {
            return LatticePoly::zero(self.rank);
        }
        let mut out = LatticePoly::zero(self.rank);
        for (m, v) in &self.terms {
            out.terms.insert(m.clone(), v * c);
        }
        out
    }

    pub fn mul_mono(&self, m: &Mono) -> LatticePoly {
        let mut out = LatticePoly::zero(self.rank);
        for (k, v) in &self.terms {
            out.terms.insert(k.mul(m), v.clone());
        }
        out
    }

    /// Apply a monomial substitution (must be multiplicative to preserve
    /// ring structure; callers use lattice maps with q-twists).
    pub fn map_mono(&self, f: impl Fn(&Mono) -> Mono) -> LatticePoly {
        let mut out = LatticePoly::zero(self.rank);
        for (m, c) in &self.terms {
            out.insert_add(f(m), c.clone());
        }
        out
    }

    pub fn t_valuation(&self) -> Option<i64> {
        self.terms.keys().map(|m| m.t).min()
    }

    /// Terms with the given t-exponent, with t stripped to zero.
    pub fn t_slice(&self, v: i64) -> LatticePoly {
        let mut out = LatticePoly::zero(self.rank);
        for (m, c) in &self.terms {
            if m.t == v {
                out.insert_add(
                    Mono {
                        q: m.q,
                        t: 0,
                        x: m.x.clone(),
                    },
                    c.clone(),
                );
            }
        }
        out
    }

    /// Coordinatewise minimum exponent vector (q, t, x...) over all terms.
    fn min_exponents(&self) -> Option<Vec<i64>> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let mut min = mono_vec(first);
        for m in it {
            for (a, b) in min.iter_mut().zip(mono_vec(m)) {
                *a = (*a).min(b);
            }
        }
        Some(min)
    }
}

fn mono_vec(m: &Mono) -> Vec<i64> {
    let mut v = Vec::with_capacity(2 + m.x.len());
    v.push(m.q);
    v.push(m.t);
    v.extend_from_slice(&m.x);
    v
}

fn vec_mono(v: &[i64]) -> Mono {
    Mono {
        q: v[0],
        t: v[1],
        x: v[2..].to_vec(),
    }
}

fn grlex_key(v: &[i64]) -> (i128, Vec<i64>) {
    (v.iter().map(|&c| c as i128).sum(), v.to_vec())
}

/// Exact division of Laurent polynomials: returns a/b when b divides a in
/// the Laurent ring, None otherwise. Both are shifted onto the nonnegative
/// grid and divided by the graded-lex leading term; with a single divisor
/// this succeeds if and only if the division is exact. The remainder is kept
/// keyed by graded-lex order so each step touches only the affected terms.
pub fn laurent_div_exact(a: &LatticePoly, b: &LatticePoly) -> Option<LatticePoly> {
    use std::collections::btree_map::Entry;
    assert!(!b.is_zero(), "division by zero polynomial");
    let rank = a.rank;
    if a.is_zero() {
        return Some(LatticePoly::zero(rank));
    }
    let amin = a.min_exponents().unwrap();
    let bmin = b.min_exponents().unwrap();
    let shift = |p: &LatticePoly, min: &[i64]| -> Vec<(Vec<i64>, Coeff)> {
        p.terms
            .iter()
            .map(|(m, c)| {
                let v = mono_vec(m)
                    .iter()
                    .zip(min)
                    .map(|(x, s)| x - s)
                    .collect::<Vec<_>>();
                (v, c.clone())
            })
            .collect()
    };
    let mut r: BTreeMap<(i128, Vec<i64>), Coeff> = shift(a, &amin)
        .into_iter()
        .map(|(v, c)| (grlex_key(&v), c))
        .collect();
    let bsh = shift(b, &bmin);
    let (bl, blc) = bsh
        .iter()
        .max_by(|(u, _), (v, _)| grlex_key(u).cmp(&grlex_key(v)))
        .map(|(v, c)| (v.clone(), c.clone()))
        .unwrap();
    let mut quot: Vec<(Vec<i64>, Coeff)> = Vec::new();
    loop {
        let (rl, rc) = match r.last_key_value() {
            None => break,
            Some(((_, v), c)) => (v.clone(), c.clone()),
        };
        if rl.iter().zip(&bl).any(|(x, y)| x < y) {
            return None;
        }
        let m: Vec<i64> = rl.iter().zip(&bl).map(|(x, y)| x - y).collect();
        let c = &rc / &blc;
        for (bm, bc) in &bsh {
            let key: Vec<i64> = bm.iter().zip(&m).map(|(x, y)| x + y).collect();
            match r.entry(grlex_key(&key)) {
                Entry::Occupied(mut e) => {
                    *e.get_mut() -= &c * bc;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
                Entry::Vacant(slot) => {
                    let d = -(&c * bc);
                    if !d.is_zero() {
                        slot.insert(d);
                    }
                }
            }
        }
        quot.push((m, c));
    }
    let mut out = LatticePoly::zero(rank);
    for (v, c) in quot {
        let unshift: Vec<i64> = v
            .iter()
            .zip(amin.iter().zip(&bmin))
            .map(|(x, (am, bm))| x + am - bm)
            .collect();
        out.insert_add(vec_mono(&unshift), c);
    }
    Some(out)
}

/// A fraction of lattice polynomials. The denominator is held as a product
/// of normalized multi-term factors; every sum and product cancels shared
/// factors by exact division, which keeps long operator compositions from
/// accumulating huge unreduced denominators. Monomials are units of the
/// Laurent ring and are folded into the numerator, so the stored factors
/// always have at least two terms. Equality is by cross-multiplication.
#[derive(Clone, Debug)]
pub struct FieldElt {
    pub num: LatticePoly,
    dfac: BTreeMap<LatticePoly, u32>,
}

impl FieldElt {
    pub fn from_poly(p: LatticePoly) -> Self {
        FieldElt {
            num: p,
            dfac: BTreeMap::new(),
        }
    }

    pub fn from_ratio(num: LatticePoly, den: LatticePoly) -> Self {
        let mut f = Self::from_poly(num);
        f.divide_by(&den);
        f
    }

    pub fn zero(rank: usize) -> Self {
        Self::from_poly(LatticePoly::zero(rank))
    }

    pub fn one(rank: usize) -> Self {
        Self::from_poly(LatticePoly::one(rank))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.dfac.is_empty()
    }

    /// The denominator, expanded into a single polynomial.
    pub fn den_poly(&self) -> LatticePoly {
        let mut d = LatticePoly::one(self.num.rank);
        for (f, e) in &self.dfac {
            for _ in 0..*e {
                d = d.mul(f);
            }
        }
        d
    }

    /// Divide in place by a nonzero polynomial. The divisor is normalized so
    /// that its minimal exponents vanish and its graded-lex leading
    /// coefficient is one; the split-off unit folds into the numerator.
    fn divide_by(&mut self, den: &LatticePoly) {
        assert!(!den.is_zero(), "division by zero polynomial");
        if self.num.is_zero() {
            self.dfac.clear();
            return;
        }
        let min = den.min_exponents().unwrap();
        let unit_inv = vec_mono(&min.iter().map(|&c| -c).collect::<Vec<_>>());
        let mut f = den.mul_mono(&unit_inv);
        let lead = f
            .terms
            .keys()
            .max_by_key(|m| grlex_key(&mono_vec(m)))
            .unwrap()
            .clone();
        let lc = f.terms[&lead].clone();
        if !lc.is_one() {
            f = f.scale(&lc.recip());
        }
        self.num = self.num.mul_mono(&unit_inv).scale(&lc.recip());
        if f.terms.len() > 1 {
            match laurent_div_exact(&self.num, &f) {
                Some(q) => self.num = q,
                None => *self.dfac.entry(f).or_insert(0) += 1,
            }
        }
    }

    /// Cancel stored denominator factors into the numerator where the
    /// division is exact.
    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.dfac.clear();
            return;
        }
        let factors: Vec<LatticePoly> = self.dfac.keys().cloned().collect();
        for f in factors {
            while self.dfac.contains_key(&f) {
                match laurent_div_exact(&self.num, &f) {
                    Some(q) => {
                        self.num = q;
                        let e = self.dfac.get_mut(&f).unwrap();
                        *e -= 1;
                        if *e == 0 {
                            self.dfac.remove(&f);
                        }
                    }
                    None => break,
                }
            }
        }
    }

    pub fn add(&self, other: &FieldElt) -> FieldElt {
        // Put both numerators over the least common multiple of the factored
        // denominators: each side is multiplied by exactly the factors it
        // lacks.
        let mut num_a = self.num.clone();
        let mut num_b = other.num.clone();
        let mut dfac = self.dfac.clone();
        for (f, eb) in &other.dfac {
            let ea = dfac.get(f).copied().unwrap_or(0);
            if *eb > ea {
                for _ in 0..(*eb - ea) {
                    num_a = num_a.mul(f);
                }
                dfac.insert(f.clone(), *eb);
            }
        }
        for (f, e) in &dfac {
            let eb = other.dfac.get(f).copied().unwrap_or(0);
            if *e > eb {
                for _ in 0..(*e - eb) {
                    num_b = num_b.mul(f);
                }
            }
        }
        let mut out = FieldElt {
            num: num_a.add(&num_b),
            dfac,
        };
        out.reduce();
        out
    }

    pub fn sub(&self, other: &FieldElt) -> FieldElt {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> FieldElt {
        FieldElt {
            num: self.num.neg(),
            dfac: self.dfac.clone(),
        }
    }

    pub fn mul(&self, other: &FieldElt) -> FieldElt {
        let mut dfac = self.dfac.clone();
        for (f, e) in &other.dfac {
            *dfac.entry(f.clone()).or_insert(0) += e;
        }
        let mut out = FieldElt {
            num: self.num.mul(&other.num),
            dfac,
        };
        out.reduce();
        out
    }

    pub fn inv(&self) -> Result<FieldElt> {
        if self.num.is_zero() {
            return Err(Error::Domain("inverse of zero".into()));
        }
        let mut out = FieldElt::from_poly(self.den_poly());
        out.divide_by(&self.num);
        Ok(out)
    }

    pub fn eq(&self, other: &FieldElt) -> bool {
        let mut a = self.num.clone();
        let mut b = other.num.clone();
        for (f, eo) in &other.dfac {
            let es = self.dfac.get(f).copied().unwrap_or(0);
            for _ in 0..eo.saturating_sub(es) {
                a = a.mul(f);
            }
        }
        for (f, es) in &self.dfac {
            let eo = other.dfac.get(f).copied().unwrap_or(0);
            for _ in 0..es.saturating_sub(eo) {
                b = b.mul(f);
            }
        }
        a == b
    }

    /// Apply a ring endomorphism of the polynomial ring to numerator and
    /// denominator alike (lattice twists and Weyl actions are of this kind).
    pub fn map_polys(&self, phi: impl Fn(&LatticePoly) -> LatticePoly) -> FieldElt {
        let mut out = FieldElt::from_poly(phi(&self.num));
        for (f, e) in &self.dfac {
            let g = phi(f);
            for _ in 0..*e {
                out.divide_by(&g);
            }
        }
        out
    }

    /// Exact limit t -> 0. Compares t-valuations of numerator and
    /// denominator; equal valuations require the lowest slices to divide
    /// exactly in the Laurent ring.
    pub fn t_limit(&self) -> Result<LatticePoly> {
        if self.num.is_zero() {
            return Ok(LatticePoly::zero(self.num.rank));
        }
        let den = self.den_poly();
        let vn = self.num.t_valuation().unwrap();
        let vd = den.t_valuation().unwrap();
        if vn > vd {
            return Ok(LatticePoly::zero(self.num.rank));
        }
        if vn < vd {
            return Err(Error::LimitDiverges(format!(
                "t-valuation {vn}/2 in numerator vs {vd}/2 in denominator"
            )));
        }
        let ns = self.num.t_slice(vn);
        let ds = den.t_slice(vd);
        laurent_div_exact(&ns, &ds).ok_or_else(|| {
            Error::LimitNotLaurent(
                "lowest t-slices do not divide exactly in the Laurent ring".into(),
            )
        })
    }
}

/// An integer Laurent polynomial in plain (unscaled) powers of q.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QLaurent(pub BTreeMap<i64, BigInt>);

impl QLaurent {
    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn one() -> Self {
        let mut m = BTreeMap::new();
        m.insert(0, BigInt::one());
        QLaurent(m)
    }

    pub fn insert_add(&mut self, k: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.0.entry(k).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.0.remove(&k);
        }
    }

    pub fn add(&self, other: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        for (&k, c) in &other.0 {
            out.insert_add(k, c.clone());
        }
        out
    }

    pub fn neg(&self) -> QLaurent {
        QLaurent(self.0.iter().map(|(&k, c)| (k, -c.clone())).collect())
    }

    /// q -> q^{-1}.
    pub fn invert_q(&self) -> QLaurent {
        QLaurent(self.0.iter().map(|(&k, c)| (-k, c.clone())).collect())
    }

    /// Convert a pure-q polynomial with scaled exponents; every exponent must
    /// be a multiple of 2e and every coefficient an integer.
    pub fn from_scaled_poly(p: &LatticePoly, two_e: i64) -> Result<QLaurent> {
        let mut out = QLaurent::default();
        for (m, c) in &p.terms {
            if m.t != 0 || m.x.iter().any(|&v| v != 0) {
                return Err(Error::Domain(
                    "expected a scalar in q only, found t or x factors".into(),
                ));
            }
            if m.q % two_e != 0 {
                return Err(Error::Domain(format!(
                    "q-exponent {}/{two_e} is not an integer power of q",
                    m.q
                )));
            }
            if !c.denom().is_one() {
                return Err(Error::Domain(format!("non-integer coefficient {c}")));
            }
            out.insert_add(m.q / two_e, c.numer().clone());
        }
        Ok(out)
    }

    pub fn to_scaled_poly(&self, rank: usize, two_e: i64) -> LatticePoly {
        let mut p = LatticePoly::zero(rank);
        for (&k, c) in &self.0 {
            p.insert_add(
                Mono {
                    q: k * two_e,
                    t: 0,
                    x: vec![0; rank],
                },
                BigRational::from_integer(c.clone()),
            );
        }
        p
    }

    pub fn monomial(k: i64, c: BigInt) -> QLaurent {
        let mut out = QLaurent::default();
        out.insert_add(k, c);
        out
    }

    pub fn mul(&self, other: &QLaurent) -> QLaurent {
        let mut out = QLaurent::default();
        for (&k1, c1) in &self.0 {
            for (&k2, c2) in &other.0 {
                out.insert_add(k1 + k2, c1 * c2);
            }
        }
        out
    }
}

/// JSON model of an integer Laurent polynomial in q: rows [k, "coeff"].
pub fn qlaurent_to_json(p: &QLaurent) -> serde_json::Value {
    let rows: Vec<serde_json::Value> = p
        .0
        .iter()
        .map(|(&k, c)| serde_json::json!([k, c.to_string()]))
        .collect();
    serde_json::Value::Array(rows)
}

pub fn qlaurent_from_json(v: &serde_json::Value) -> Result<QLaurent> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Data("expected an array of [k, coeff] rows".into()))?;
    let mut out = QLaurent::default();
    for row in rows {
        let pair = row
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| Error::Data("each q-row must be [k, coeff]".into()))?;
        let k = pair[0]
            .as_i64()
            .ok_or_else(|| Error::Data("q-exponent must be an integer".into()))?;
        let c = pair[1]
            .as_str()
            .ok_or_else(|| Error::Data("coefficient must be a string".into()))?;
        out.insert_add(k, bigint_from_string(c)?);
    }
    Ok(out)
}

pub fn coeff_to_string(c: &Coeff) -> String {
    c.to_string()
}

pub fn coeff_from_string(s: &str) -> Result<Coeff> {
    BigRational::from_str(s).map_err(|e| Error::Data(format!("bad coefficient {s:?}: {e}")))
}

pub fn bigint_from_string(s: &str) -> Result<BigInt> {
    BigInt::from_str(s).map_err(|e| Error::Data(format!("bad integer {s:?}: {e}")))
}

/// Check that a rational is an integer and return its numerator.
pub fn coeff_to_bigint(c: &Coeff) -> Result<BigInt> {
    if !c.denom().is_one() {
        return Err(Error::Domain(format!("non-integer coefficient {c}")));
    }
    Ok(c.numer().clone())
}

/// JSON model of a polynomial: rows [q, t, "coeff", x_1, ..., x_n].
pub fn poly_to_json(p: &LatticePoly) -> serde_json::Value {
    let rows: Vec<serde_json::Value> = p
        .terms
        .iter()
        .map(|(m, c)| {
            let mut row = vec![
                serde_json::json!(m.q),
                serde_json::json!(m.t),
                serde_json::json!(coeff_to_string(c)),
            ];
            for &v in &m.x {
                row.push(serde_json::json!(v));
            }
            serde_json::Value::Array(row)
        })
        .collect();
    serde_json::Value::Array(rows)
}

pub fn poly_from_json(v: &serde_json::Value, rank: usize) -> Result<LatticePoly> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Data("polynomial must be an array of term rows".into()))?;
    let mut p = LatticePoly::zero(rank);
    for row in rows {
        let row = row
            .as_array()
            .ok_or_else(|| Error::Data("term row must be an array".into()))?;
        if row.len() != 3 + rank {
            return Err(Error::Data(format!(
                "term row has {} fields, expected {}",
                row.len(),
                3 + rank
            )));
        }
        let geti = |i: usize| -> Result<i64> {
            row[i]
                .as_i64()
                .ok_or_else(|| Error::Data("term exponent must be an integer".into()))
        };
        let q = geti(0)?;
        let t = geti(1)?;
        let c = coeff_from_string(
            row[2]
                .as_str()
                .ok_or_else(|| Error::Data("coefficient must be a string".into()))?,
        )?;
        let x: Vec<i64> = (3..3 + rank).map(geti).collect::<Result<_>>()?;
        p.insert_add(Mono { q, t, x }, c);
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xp(l: &[i64]) -> LatticePoly {
        LatticePoly::x_power(l)
    }

    #[test]
    fn poly_arithmetic() {
        let one = LatticePoly::one(1);
        let x = xp(&[2]);
        let p = one.sub(&x);
        let q = one.add(&x);
        let prod = p.mul(&q);
        let expect = one.sub(&xp(&[4]));
        assert_eq!(prod, expect);
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn exact_division() {
        let one = LatticePoly::one(1);
        let x = xp(&[1]);
        let a = one.sub(&x.mul(&x));
        let b = one.sub(&x);
        let q = laurent_div_exact(&a, &b).unwrap();
        assert_eq!(q, one.add(&x));
        // Non-exact division fails.
        assert!(laurent_div_exact(&one.sub(&x), &one.sub(&x.mul(&x))).is_none());
        // Negative exponents are handled by shifting.
        let xm = xp(&[-1]);
        let q2 = laurent_div_exact(&one.sub(&x), &xm.sub(&one)).unwrap();
        assert_eq!(q2, xp(&[1]));
    }

    #[test]
    fn field_equality_and_reduction() {
        let one = LatticePoly::one(1);
        let x = xp(&[1]);
        // (1 - x^2)/(1 - x) reduces to 1 + x at construction.
        let f = FieldElt::from_ratio(one.sub(&x.mul(&x)), one.sub(&x));
        let g = FieldElt::from_poly(one.add(&x));
        assert!(f.eq(&g));
        assert!(f.is_polynomial());
        assert_eq!(f.num, one.add(&x));
        // A sum against the complementary fraction stays reduced:
        // x/(1-x) + 1 = 1/(1-x).
        let h = FieldElt::from_ratio(x.clone(), one.sub(&x));
        let s = h.add(&FieldElt::from_poly(one.clone()));
        assert!(!s.is_polynomial());
        assert!(s.eq(&FieldElt::from_ratio(one.clone(), one.sub(&x))));
        // Multiplying back by the denominator cancels it.
        let p = s.mul(&FieldElt::from_poly(one.sub(&x)));
        assert!(p.is_polynomial());
        assert_eq!(p.num, one);
        // Inversion swaps the roles.
        let inv = s.inv().unwrap();
        assert!(inv.is_polynomial());
        assert!(inv.eq(&FieldElt::from_poly(one.sub(&x))));
    }

    #[test]
    fn t_limits() {
        let rank = 1;
        let one = LatticePoly::one(rank);
        let t = LatticePoly::t_power(rank, 2);
        let x = xp(&[2]);

        // (t - 1)/(x - 1) -> -1/(x - 1): not Laurent.
        let f = FieldElt::from_ratio(t.sub(&one), x.sub(&one));
        assert!(matches!(f.t_limit(), Err(Error::LimitNotLaurent(_))));

        // (1 - t x)/(1) -> 1.
        let g = FieldElt::from_poly(one.sub(&t.mul(&x)));
        assert_eq!(g.t_limit().unwrap(), one);

        // t/(1) -> 0 and 1/t diverges.
        assert!(FieldElt::from_poly(t.clone()).t_limit().unwrap().is_zero());
        let h = FieldElt::from_ratio(one.clone(), t.clone());
        assert!(matches!(h.t_limit(), Err(Error::LimitDiverges(_))));

        // Common t-content cancels: (t x)/(t) -> x.
        let k = FieldElt::from_ratio(t.mul(&x), t.clone());
        assert_eq!(k.t_limit().unwrap(), x);

        // Equal valuations dividing exactly: (1 - x^2 + t)/(1 - x + t x) has
        // slices (1 - x^2)/(1 - x) -> 1 + x... the t-terms do not matter.
        let f2 = FieldElt::from_ratio(one.sub(&x.mul(&x)).add(&t), one.sub(&x).add(&t.mul(&x)));
        assert_eq!(f2.t_limit().unwrap(), one.add(&x));
    }

    #[test]
    fn qlaurent_round_trip() {
        let two_e = 8;
        let mut p = LatticePoly::zero(1);
        p.insert_add(
            Mono {
                q: -8,
                t: 0,
                x: vec![0],
            },
            big(3),
        );
        p.insert_add(
            Mono {
                q: 16,
                t: 0,
                x: vec![0],
            },
            big(-1),
        );
        let ql = QLaurent::from_scaled_poly(&p, two_e).unwrap();
        assert_eq!(ql.0.len(), 2);
        assert_eq!(ql.0[&-1], BigInt::from(3));
        assert_eq!(ql.0[&2], BigInt::from(-1));
        assert_eq!(ql.to_scaled_poly(1, two_e), p);
        let inv = ql.invert_q();
        assert_eq!(inv.0[&1], BigInt::from(3));

        // Fractional q-powers are rejected.
        let bad = LatticePoly::q_power(1, 3);
        assert!(QLaurent::from_scaled_poly(&bad, two_e).is_err());
    }

    #[test]
    fn poly_json_round_trip() {
        let mut p = LatticePoly::zero(2);
        p.insert_add(
            Mono {
                q: -1,
                t: 2,
                x: vec![1, -1],
            },
            coeff_from_string("-3/2").unwrap(),
        );
        p.insert_add(
            Mono {
                q: 0,
                t: 0,
                x: vec![0, 0],
            },
            big(1),
        );
        let j = poly_to_json(&p);
        let back = poly_from_json(&j, 2).unwrap();
        assert_eq!(back, p);
    }
}
