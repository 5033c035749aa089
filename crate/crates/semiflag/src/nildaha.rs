//! The t = 0 layer: matrices over the plain Heisenberg algebra obtained by
//! transporting the primed limit through the duality anti-map, direct
//! idempotent (Demazure) matrices, the two polynomial representations at the
//! limit, the spherical projection, and difference Toda operators.

use crate::daha::{phi0_inverse, phi_word, Letter, Side, Word};
use crate::exactalg::{big, laurent_div_exact, LatticePoly, Mono, QLaurent};
use crate::heis::{mat_star, mat_tau, HeisElt, HeisMat, Lattice};
use crate::rootdata::{RootSystem, WeylTable};
use crate::wmatrix::rho0_prime;
use crate::{Error, Result};
use std::collections::BTreeMap;

/// Check that a word lies in the limit algebra on the expected side: no
/// pi or Tinv letters, integral central scalars, q-only coefficients.
pub fn nil_validate(rs: &RootSystem, w: &Word, expect: Side) -> Result<()> {
    match w.side()? {
        None => {}
        Some(s) if s == expect => {}
        Some(_) => {
            return Err(Error::Domain(format!(
                "expected a {} word",
                match expect {
                    Side::Plain => "plain",
                    Side::Primed => "primed",
                }
            )))
        }
    }
    for (c, ls) in &w.terms {
        for mono in c.terms.keys() {
            if mono.t != 0 {
                return Err(Error::Domain(
                    "limit-algebra coefficients are Laurent in q only".into(),
                ));
            }
        }
        for l in ls {
            match l {
                Letter::Pi(_) | Letter::Tinv(_) => {
                    return Err(Error::Domain(format!(
                        "letter {l:?} lies outside the limit algebra"
                    )))
                }
                Letter::Xd(k) | Letter::Yd(k) if k % rs.e != 0 => {
                    return Err(Error::Domain(
                        "only integer powers of the central scalar exist at the limit".into(),
                    ))
                }
                _ => {}
            }
        }
    }
    Ok(())
}

/// Matrix realization of a plain limit word over the plain Heisenberg
/// algebra: transport the primed limit of the dual word back through the
/// transpose anti-isomorphism and the star twist.
pub fn rho0(rs: &RootSystem, wt: &WeylTable, w: &Word) -> Result<HeisMat> {
    nil_validate(rs, w, Side::Plain)?;
    let dual = phi_word(w)?;
    let m = rho0_prime(rs, wt, &dual)?;
    Ok(mat_star(&mat_tau(rs, wt.w0(), &m)))
}

/// The idempotent generator matrices written down directly from the
/// reflection combinatorics: for finite i the 0/1 matrices supported on
/// {(s_i w, w) : s_i w < w} and {(w, w) : w < s_i w}; for i = 0 the entries
/// move by the reflection in the highest root and carry y-monomials.
pub fn rho0_d_direct(rs: &RootSystem, wt: &WeylTable, i: usize) -> Result<HeisMat> {
    if i > rs.rank {
        return Err(Error::Domain(format!(
            "generator index {i} out of range 0..={}",
            rs.rank
        )));
    }
    let n = wt.len();
    let rank = rs.rank;
    let one = (0i64, vec![0; rank], vec![0; rank]);
    let mut m = HeisMat::zero(Lattice::Plain, rank, n);
    if i != 0 {
        let si = rs.simple_reflection(i);
        for (j, w) in wt.elements.iter().enumerate() {
            let siw = si.mul(w);
            if wt.length(&siw) < wt.length(w) {
                m.get_mut(wt.index_of(&siw), j).insert_add(one.clone(), big(1));
            } else {
                m.get_mut(j, j).insert_add(one.clone(), big(1));
            }
        }
    } else {
        let w0 = wt.w0();
        for (j, w) in wt.elements.iter().enumerate() {
            let stw = rs.s_theta.mul(w);
            if wt.length(&stw) > wt.length(w) {
                let v_inv_theta = stw.inverse().apply(&rs.theta_fw);
                let y: Vec<i64> = w0.apply(&v_inv_theta).iter().map(|&c| -c).collect();
                m.get_mut(wt.index_of(&stw), j)
                    .insert_add((0, vec![0; rank], y), big(1));
            } else {
                m.get_mut(j, j).insert_add(one.clone(), big(1));
            }
        }
    }
    Ok(m)
}

/// Elements of the q-integral group algebra of the weight lattice: finite
/// maps from weights to integer Laurent polynomials in q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    pub rank: usize,
    pub terms: BTreeMap<Vec<i64>, QLaurent>,
}

impl CharPoly {
    pub fn zero(rank: usize) -> Self {
        CharPoly {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(rank, vec![0; rank], QLaurent::one())
    }

    pub fn monomial(rank: usize, nu: Vec<i64>, c: QLaurent) -> Self {
        let mut out = Self::zero(rank);
        out.insert_add(nu, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn insert_add(&mut self, nu: Vec<i64>, c: QLaurent) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&nu) {
            Some(existing) => {
                *existing = existing.add(&c);
                if existing.is_zero() {
                    self.terms.remove(&nu);
                }
            }
            None => {
                self.terms.insert(nu, c);
            }
        }
    }

    pub fn add(&self, other: &CharPoly) -> CharPoly {
        let mut out = self.clone();
        for (nu, c) in &other.terms {
            out.insert_add(nu.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> CharPoly {
        CharPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(nu, c)| (nu.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &CharPoly) -> CharPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &CharPoly) -> CharPoly {
        let mut out = CharPoly::zero(self.rank);
        for (nu1, c1) in &self.terms {
            for (nu2, c2) in &other.terms {
                let nu: Vec<i64> = nu1.iter().zip(nu2).map(|(a, b)| a + b).collect();
                out.insert_add(nu, c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &QLaurent) -> CharPoly {
        let mut out = CharPoly::zero(self.rank);
        for (nu, d) in &self.terms {
            out.insert_add(nu.clone(), d.mul(c));
        }
        out
    }

    fn to_poly(&self) -> LatticePoly {
        let mut p = LatticePoly::zero(self.rank);
        for (nu, c) in &self.terms {
            for (&k, ci) in &c.0 {
                p.insert_add(
                    Mono {
                        q: k,
                        t: 0,
                        x: nu.clone(),
                    },
                    num::BigRational::from_integer(ci.clone()),
                );
            }
        }
        p
    }

    fn from_poly(p: &LatticePoly) -> Result<CharPoly> {
        let mut out = CharPoly::zero(p.rank);
        for (m, c) in &p.terms {
            debug_assert_eq!(m.t, 0);
            let ci = crate::exactalg::coeff_to_bigint(c)?;
            out.insert_add(m.x.clone(), QLaurent::monomial(m.q, ci));
        }
        Ok(out)
    }
}

/// Which of the two limit polynomial representations to use.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum NilVariant {
    Plain,
    Star,
}

/// The reflection s_i on the group algebra; s_0 reflects in the highest root
/// and shifts q by the level-zero pairing.
pub fn reflect_char(rs: &RootSystem, i: usize, f: &CharPoly) -> CharPoly {
    let mut out = CharPoly::zero(f.rank);
    for (nu, c) in &f.terms {
        if i == 0 {
            let shift = rs.pairing_int(&rs.theta_fw, nu);
            out.insert_add(
                rs.s_theta.apply(nu),
                c.mul(&QLaurent::monomial(shift, num::BigInt::from(1))),
            );
        } else {
            out.insert_add(rs.simple_reflection(i).apply(nu), c.clone());
        }
    }
    out
}

/// e^{alpha_i} (sign = +1) or e^{-alpha_i} (sign = -1) as a plain-q
/// polynomial; the affine root contributes e^{alpha_0} = q e^{-theta}.
fn exp_alpha(rs: &RootSystem, i: usize, sign: i64) -> LatticePoly {
    let (q, x): (i64, Vec<i64>) = if i == 0 {
        (sign, rs.theta_fw.iter().map(|&c| -sign * c).collect())
    } else {
        (0, rs.simple_root_fw(i).iter().map(|&c| sign * c).collect())
    };
    LatticePoly::from_term(Mono { q, t: 0, x }, big(1))
}

/// The divided-difference idempotent: (f - e^{±alpha_i} s_i(f)) divided
/// exactly by (1 - e^{±alpha_i}); plain uses +alpha_i, star uses -alpha_i.
pub fn demazure_char(
    rs: &RootSystem,
    i: usize,
    f: &CharPoly,
    variant: NilVariant,
) -> Result<CharPoly> {
    let sign = match variant {
        NilVariant::Plain => 1,
        NilVariant::Star => -1,
    };
    let a = exp_alpha(rs, i, sign);
    let sf = reflect_char(rs, i, f);
    let num = f.to_poly().sub(&a.mul(&sf.to_poly()));
    let den = LatticePoly::one(rs.rank).sub(&a);
    let q = laurent_div_exact(&num, &den).ok_or_else(|| {
        Error::Check(format!(
            "divided difference for node {i} left the group algebra"
        ))
    })?;
    CharPoly::from_poly(&q)
}

fn apply_nil_letter(
    rs: &RootSystem,
    l: &Letter,
    f: &CharPoly,
    variant: NilVariant,
) -> Result<CharPoly> {
    let sign = match variant {
        NilVariant::Plain => -1i64,
        NilVariant::Star => 1,
    };
    Ok(match l {
        Letter::D(i) => demazure_char(rs, *i, f, variant)?,
        Letter::T(i) => demazure_char(rs, *i, f, variant)?.sub(f),
        Letter::X(nu) => {
            let shift: Vec<i64> = nu.iter().map(|&c| sign * c).collect();
            let mut out = CharPoly::zero(f.rank);
            for (mu, c) in &f.terms {
                let key: Vec<i64> = mu.iter().zip(&shift).map(|(a, b)| a + b).collect();
                out.insert_add(key, c.clone());
            }
            out
        }
        Letter::Xd(k) => {
            if k % rs.e != 0 {
                return Err(Error::Domain(
                    "only integer powers of the central scalar exist at the limit".into(),
                ));
            }
            f.scale(&QLaurent::monomial(sign * (k / rs.e), num::BigInt::from(1)))
        }
        other => {
            return Err(Error::Domain(format!(
                "letter {other:?} does not act on the limit polynomial module"
            )))
        }
    })
}

/// Apply a plain limit word in either polynomial representation; the
/// leftmost letter acts last.
pub fn nil_poly_apply(
    rs: &RootSystem,
    w: &Word,
    f: &CharPoly,
    variant: NilVariant,
) -> Result<CharPoly> {
    nil_validate(rs, w, Side::Plain)?;
    let mut acc = CharPoly::zero(rs.rank);
    for (c, ls) in &w.terms {
        let mut g = f.clone();
        for l in ls.iter().rev() {
            g = apply_nil_letter(rs, l, &g, variant)?;
        }
        let ql = QLaurent::from_scaled_poly(c, 2 * rs.e)?;
        acc = acc.add(&g.scale(&ql));
    }
    Ok(acc)
}

/// Collapse a word in multiplication letters only into its exponent profile
/// (weight, central power) -> coefficient.
fn monomial_profile(
    rs: &RootSystem,
    w: &Word,
    x_letters: bool,
) -> Result<BTreeMap<(Vec<i64>, i64), QLaurent>> {
    let mut out: BTreeMap<(Vec<i64>, i64), QLaurent> = BTreeMap::new();
    for (c, ls) in &w.terms {
        let mut nu = vec![0i64; rs.rank];
        let mut k = 0i64;
        for l in ls {
            match (l, x_letters) {
                (Letter::X(v), true) | (Letter::Y(v), false) => {
                    for (a, b) in nu.iter_mut().zip(v) {
                        *a += b;
                    }
                }
                (Letter::Xd(m), true) | (Letter::Yd(m), false) => k += m,
                _ => {
                    return Err(Error::Domain(format!(
                        "expected a polynomial in the {} letters, found {l:?}",
                        if x_letters { "X" } else { "Y" }
                    )))
                }
            }
        }
        let ql = QLaurent::from_scaled_poly(c, 2 * rs.e)?;
        let entry = out.entry((nu, k)).or_default();
        *entry = entry.add(&ql);
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// Literal orbit symmetry of the exponent multiset under every simple
/// reflection.
fn check_w_invariant(rs: &RootSystem, profile: &BTreeMap<(Vec<i64>, i64), QLaurent>) -> Result<()> {
    for i in 1..=rs.rank {
        let reflected: BTreeMap<(Vec<i64>, i64), QLaurent> = profile
            .iter()
            .map(|((nu, k), c)| ((rs.simple_reflection(i).apply(nu), *k), c.clone()))
            .collect();
        if &reflected != profile {
            return Err(Error::Domain(format!(
                "exponent multiset is not symmetric under reflection {i}"
            )));
        }
    }
    Ok(())
}

/// Sum of X^mu over the orbit of lambda.
pub fn orbit_x_word(rs: &RootSystem, lambda: &[i64]) -> Word {
    let mut w = Word::zero(rs.rank);
    for mu in rs.weight_orbit(lambda) {
        w = w.add(&Word::letter(rs.rank, Letter::X(mu)));
    }
    w
}

/// Sum of Y^mu over the orbit of lambda.
pub fn orbit_y_word(rs: &RootSystem, lambda: &[i64]) -> Word {
    let mut w = Word::zero(rs.rank);
    for mu in rs.weight_orbit(lambda) {
        w = w.add(&Word::letter(rs.rank, Letter::Y(mu)));
    }
    w
}

/// Spherical projection of an invariant polynomial in the multiplication
/// letters: the identity-column of its matrix collapses to the identity
/// entry, which is returned.
pub fn rho0_sph(rs: &RootSystem, wt: &WeylTable, w: &Word) -> Result<HeisElt> {
    nil_validate(rs, w, Side::Plain)?;
    let profile = monomial_profile(rs, w, true)?;
    check_w_invariant(rs, &profile)?;
    let m = rho0(rs, wt, w)?;
    for v in 1..wt.len() {
        if !m.get(v, 0).is_zero() {
            return Err(Error::Check(format!(
                "identity column not concentrated: nonzero entry at ({}, e)",
                wt.names[v]
            )));
        }
    }
    Ok(m.get(0, 0).clone())
}

/// Difference Toda operator attached to an invariant polynomial in the
/// Bernstein letters: the identity-row of the primed limit collapses to the
/// identity entry, which is returned.
pub fn qtoda(rs: &RootSystem, wt: &WeylTable, w: &Word) -> Result<HeisElt> {
    nil_validate(rs, w, Side::Primed)?;
    let profile = monomial_profile(rs, w, false)?;
    check_w_invariant(rs, &profile)?;
    let m = rho0_prime(rs, wt, w)?;
    for j in 1..wt.len() {
        if !m.get(0, j).is_zero() {
            return Err(Error::Check(format!(
                "identity row not concentrated: nonzero entry at (e, {})",
                wt.names[j]
            )));
        }
    }
    Ok(m.get(0, 0).clone())
}

/// Compare the two routes to every generator matrix: the transported
/// pipeline against the direct primed limit, and the direct idempotent
/// matrices against the pipeline.
pub fn diagram_check(rs: &RootSystem, wt: &WeylTable) -> Result<Vec<(String, bool)>> {
    let rank = rs.rank;
    let mut report = Vec::new();
    let mut gens: Vec<(String, Word)> = Vec::new();
    for i in 0..=rank {
        gens.push((format!("T'_{i}"), Word::letter(rank, Letter::Tp(i))));
    }
    for r in 1..=rank {
        for sign in [1i64, -1] {
            let mut nu = vec![0i64; rank];
            nu[r - 1] = sign;
            let label = if sign > 0 {
                format!("Y^w{r}")
            } else {
                format!("Y^-w{r}")
            };
            gens.push((label, Word::letter(rank, Letter::Y(nu))));
        }
    }
    for (name, g) in gens {
        let lhs = mat_star(&rho0(rs, wt, &phi0_inverse(&g)?)?);
        let rhs = mat_tau(rs, wt.w0(), &rho0_prime(rs, wt, &g)?);
        report.push((format!("both routes agree on {name}"), lhs == rhs));
    }
    for i in 0..=rank {
        let pipeline = rho0(rs, wt, &Word::letter(rank, Letter::D(i)))?;
        let direct = rho0_d_direct(rs, wt, i)?;
        report.push((
            format!("direct idempotent matrix matches the pipeline for D_{i}"),
            pipeline == direct,
        ));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn setup(name: &str) -> (RootSystem, WeylTable) {
        let rs = RootSystem::new(name).unwrap();
        let wt = WeylTable::build(&rs).unwrap();
        (rs, wt)
    }

    fn he(rows: &[(i64, Vec<i64>, Vec<i64>, i64)]) -> HeisElt {
        let mut out = HeisElt::zero(Lattice::Plain, rows[0].1.len());
        for (q, x, y, c) in rows {
            out.insert_add((*q, x.clone(), y.clone()), big(*c));
        }
        out
    }

    #[test]
    fn identity_and_central_scalar() {
        let (rs, wt) = setup("A1");
        let id = rho0(&rs, &wt, &Word::letter(1, Letter::X(vec![0]))).unwrap();
        assert_eq!(id, HeisMat::identity(Lattice::Plain, 1, 2));
        // The full central letter maps to the scalar q^{-1}.
        let xd = rho0(&rs, &wt, &Word::letter(1, Letter::Xd(rs.e))).unwrap();
        let mut want = HeisMat::zero(Lattice::Plain, 1, 2);
        *want.get_mut(0, 0) = he(&[(-1, vec![0], vec![0], 1)]);
        *want.get_mut(1, 1) = he(&[(-1, vec![0], vec![0], 1)]);
        assert_eq!(xd, want);
    }

    #[test]
    fn translation_matrices_rank1() {
        let (rs, wt) = setup("A1");
        let xm = rho0(&rs, &wt, &Word::letter(1, Letter::X(vec![-1]))).unwrap();
        let mut want = HeisMat::zero(Lattice::Plain, 1, 2);
        *want.get_mut(0, 0) = he(&[(0, vec![1], vec![0], 1)]);
        *want.get_mut(0, 1) = he(&[(0, vec![1], vec![2], 1)]);
        *want.get_mut(1, 0) = he(&[(0, vec![1], vec![0], -1)]);
        *want.get_mut(1, 1) = he(&[(0, vec![-1], vec![0], 1), (0, vec![1], vec![2], -1)]);
        assert_eq!(xm, want);

        let xp = rho0(&rs, &wt, &Word::letter(1, Letter::X(vec![1]))).unwrap();
        let mut wantp = HeisMat::zero(Lattice::Plain, 1, 2);
        *wantp.get_mut(0, 0) = he(&[(0, vec![-1], vec![0], 1), (-1, vec![1], vec![2], -1)]);
        *wantp.get_mut(0, 1) = he(&[(-1, vec![1], vec![2], -1)]);
        *wantp.get_mut(1, 0) = he(&[(0, vec![1], vec![0], 1)]);
        *wantp.get_mut(1, 1) = he(&[(0, vec![1], vec![0], 1)]);
        assert_eq!(xp, wantp);

        assert_eq!(xp.mul(&xm, &rs), HeisMat::identity(Lattice::Plain, 1, 2));
        let prod = rho0(
            &rs,
            &wt,
            &Word::letter(1, Letter::X(vec![1])).mul(&Word::letter(1, Letter::X(vec![-1]))),
        )
        .unwrap();
        assert_eq!(prod, HeisMat::identity(Lattice::Plain, 1, 2));
    }

    #[test]
    fn pipeline_is_q_linear() {
        let (rs, wt) = setup("A1");
        let w = Word::letter(1, Letter::X(vec![-1]));
        let scaled = rho0(&rs, &wt, &w.scale(&LatticePoly::q_power(1, 2 * rs.e))).unwrap();
        let plain = rho0(&rs, &wt, &w).unwrap();
        let q = HeisElt::monomial(Lattice::Plain, 1, vec![0], vec![0], big(1));
        assert_eq!(scaled, plain.scale_elt(&q, &rs));
    }

    #[test]
    fn direct_idempotent_matrices_rank1() {
        let (rs, wt) = setup("A1");
        let d1 = rho0_d_direct(&rs, &wt, 1).unwrap();
        let mut want1 = HeisMat::zero(Lattice::Plain, 1, 2);
        *want1.get_mut(0, 0) = he(&[(0, vec![0], vec![0], 1)]);
        *want1.get_mut(0, 1) = he(&[(0, vec![0], vec![0], 1)]);
        assert_eq!(d1, want1);

        let d0 = rho0_d_direct(&rs, &wt, 0).unwrap();
        let mut want0 = HeisMat::zero(Lattice::Plain, 1, 2);
        *want0.get_mut(1, 0) = he(&[(0, vec![0], vec![-2], 1)]);
        *want0.get_mut(1, 1) = he(&[(0, vec![0], vec![0], 1)]);
        assert_eq!(d0, want0);

        for i in [0usize, 1] {
            let direct = rho0_d_direct(&rs, &wt, i).unwrap();
            let pipeline = rho0(&rs, &wt, &Word::letter(1, Letter::D(i))).unwrap();
            assert_eq!(direct, pipeline, "node {i}");
            assert_eq!(direct.mul(&direct, &rs), direct, "idempotency at {i}");
        }
    }

    #[test]
    fn divided_differences_pin_the_orientation() {
        let (rs, _) = setup("A1");
        let ew = CharPoly::monomial(1, vec![1], QLaurent::one());
        let ewm = CharPoly::monomial(1, vec![-1], QLaurent::one());
        let d1 = Word::letter(1, Letter::D(1));
        assert!(nil_poly_apply(&rs, &d1, &ew, NilVariant::Plain)
            .unwrap()
            .is_zero());
        assert_eq!(
            nil_poly_apply(&rs, &d1, &ewm, NilVariant::Plain).unwrap(),
            ew.add(&ewm)
        );
        // The star table swaps the two images.
        assert_eq!(
            nil_poly_apply(&rs, &d1, &ew, NilVariant::Star).unwrap(),
            ew.add(&ewm)
        );
        assert!(nil_poly_apply(&rs, &d1, &ewm, NilVariant::Star)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn central_letter_acts_by_opposite_scalars() {
        let (rs, _) = setup("A1");
        let f = CharPoly::monomial(1, vec![1], QLaurent::one());
        let xd = Word::letter(1, Letter::Xd(rs.e));
        let plain = nil_poly_apply(&rs, &xd, &f, NilVariant::Plain).unwrap();
        assert_eq!(
            plain,
            f.scale(&QLaurent::monomial(-1, BigInt::from(1)))
        );
        let star = nil_poly_apply(&rs, &xd, &f, NilVariant::Star).unwrap();
        assert_eq!(star, f.scale(&QLaurent::monomial(1, BigInt::from(1))));
    }

    #[test]
    fn nil_quadratic_and_constants() {
        let (rs, _) = setup("A2");
        let f = CharPoly::monomial(2, vec![1, 1], QLaurent::one())
            .add(&CharPoly::monomial(
                2,
                vec![-1, 2],
                QLaurent::monomial(3, BigInt::from(2)),
            ));
        for i in 0..=2 {
            let ti = Word::letter(2, Letter::T(i));
            let di = Word::letter(2, Letter::D(i));
            for variant in [NilVariant::Plain, NilVariant::Star] {
                let tf = nil_poly_apply(&rs, &ti, &f, variant).unwrap();
                let ttf = nil_poly_apply(&rs, &ti, &tf, variant).unwrap();
                assert_eq!(ttf, tf.neg(), "T quadratic at node {i}");
                let df = nil_poly_apply(&rs, &di, &f, variant).unwrap();
                let ddf = nil_poly_apply(&rs, &di, &df, variant).unwrap();
                assert_eq!(ddf, df, "D idempotent at node {i}");
                assert_eq!(
                    nil_poly_apply(&rs, &di, &CharPoly::one(2), variant).unwrap(),
                    CharPoly::one(2),
                    "D fixes constants at node {i}"
                );
            }
        }
    }

    #[test]
    fn leibniz_identities() {
        let (rs, _) = setup("A1");
        let f = CharPoly::monomial(1, vec![1], QLaurent::one()).add(&CharPoly::monomial(
            1,
            vec![-1],
            QLaurent::monomial(1, BigInt::from(1)),
        ));
        let g = CharPoly::monomial(1, vec![2], QLaurent::one()).add(&CharPoly::one(1));
        for i in 0..=1 {
            let d = |h: &CharPoly| {
                nil_poly_apply(&rs, &Word::letter(1, Letter::D(i)), h, NilVariant::Plain).unwrap()
            };
            let t = |h: &CharPoly| {
                nil_poly_apply(&rs, &Word::letter(1, Letter::T(i)), h, NilVariant::Plain).unwrap()
            };
            let s = |h: &CharPoly| reflect_char(&rs, i, h);
            let fg = f.mul(&g);
            assert_eq!(d(&fg), d(&f).mul(&g).add(&s(&f).mul(&t(&g))), "rule one, node {i}");
            let e_neg = CharPoly::from_poly(&exp_alpha(&rs, i, -1)).unwrap();
            assert_eq!(
                d(&fg),
                e_neg.mul(&t(&f)).mul(&g).add(&s(&f).mul(&d(&g))),
                "rule two, node {i}"
            );
        }
    }

    #[test]
    fn spherical_projection_rank1() {
        let (rs, wt) = setup("A1");
        let f = orbit_x_word(&rs, &[1]);
        let sph = rho0_sph(&rs, &wt, &f).unwrap();
        let want = he(&[
            (0, vec![-1], vec![0], 1),
            (0, vec![1], vec![0], 1),
            (-1, vec![1], vec![2], -1),
        ]);
        assert_eq!(sph, want);
    }

    #[test]
    fn spherical_projection_rejects_asymmetric_input() {
        let (rs, wt) = setup("A1");
        let f = Word::letter(1, Letter::X(vec![1]));
        assert!(matches!(
            rho0_sph(&rs, &wt, &f),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn toda_operator_rank1() {
        let (rs, wt) = setup("A1");
        let f = orbit_y_word(&rs, &[1]);
        let toda = qtoda(&rs, &wt, &f).unwrap();
        let mut want = HeisElt::zero(Lattice::Primed, 1);
        want.insert_add((0, vec![0], vec![1]), big(1));
        want.insert_add((0, vec![0], vec![-1]), big(1));
        want.insert_add((0, vec![-2], vec![-1]), big(-1));
        assert_eq!(toda, want);
    }

    #[test]
    fn toda_and_spherical_transport() {
        // The star of the spherical element equals the transported Toda
        // element for matching orbits.
        let (rs, wt) = setup("A1");
        let sph = rho0_sph(&rs, &wt, &orbit_x_word(&rs, &[1])).unwrap();
        let toda = qtoda(&rs, &wt, &orbit_y_word(&rs, &[1])).unwrap();
        assert_eq!(
            crate::heis::star(&sph),
            crate::heis::tau(&rs, wt.w0(), &toda)
        );
    }

    #[test]
    fn diagram_routes_agree_rank1() {
        let (rs, wt) = setup("A1");
        for (name, pass) in diagram_check(&rs, &wt).unwrap() {
            assert!(pass, "{name}");
        }
    }

    #[test]
    fn inverse_route_for_bernstein_matrices() {
        // Y^{omega} and Y^{-omega} limits are mutually inverse matrices.
        let (rs, wt) = setup("A1");
        let yp = rho0_prime(&rs, &wt, &Word::letter(1, Letter::Y(vec![1]))).unwrap();
        let ym = rho0_prime(&rs, &wt, &Word::letter(1, Letter::Y(vec![-1]))).unwrap();
        let id = HeisMat::identity(Lattice::Primed, 1, 2);
        assert_eq!(yp.mul(&ym, &rs), id);
        assert_eq!(ym.mul(&yp, &rs), id);
    }
}
