//! Difference-reflection operators: finite sums f (x) w~ with f a rational
//! function of the lattice variables and w~ an extended affine Weyl element
//! acting on functions through the level-zero action with q-twists,
//! w y^beta : x^lambda -> q^{-(beta,lambda)} x^{w(lambda)}.
//!
//! This realizes the polynomial representation of the double affine Hecke
//! algebra; the generator operators below are composed into arbitrary words.

use crate::exactalg::{big, FieldElt, LatticePoly, Mono};
use crate::rootdata::{ExtAffineElt, RootSystem};
use crate::{Error, Result};
use std::collections::BTreeMap;

/// Image of a polynomial under an extended affine Weyl element.
pub fn act_ext_on_poly(rs: &RootSystem, g: &ExtAffineElt, p: &LatticePoly) -> LatticePoly {
    p.map_mono(|m| Mono {
        q: m.q - rs.pairing_x2e(&g.beta, &m.x),
        t: m.t,
        x: g.w.apply(&m.x),
    })
}

pub fn act_ext_on_field(rs: &RootSystem, g: &ExtAffineElt, f: &FieldElt) -> FieldElt {
    f.map_polys(|p| act_ext_on_poly(rs, g, p))
}

/// A finite sum of terms f (x) w~.
#[derive(Clone, Debug)]
pub struct Operator {
    pub rank: usize,
    pub terms: BTreeMap<ExtAffineElt, FieldElt>,
}

impl Operator {
    pub fn zero(rank: usize) -> Self {
        Operator {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(rank: usize) -> Self {
        Self::from_ext(ExtAffineElt::identity(rank))
    }

    pub fn from_ext(g: ExtAffineElt) -> Self {
        let rank = g.beta.len();
        let mut terms = BTreeMap::new();
        terms.insert(g, FieldElt::one(rank));
        Operator { rank, terms }
    }

    pub fn from_field(f: FieldElt) -> Self {
        let rank = f.num.rank;
        let mut op = Operator::zero(rank);
        op.insert_add(ExtAffineElt::identity(rank), f);
        op
    }

    pub fn insert_add(&mut self, g: ExtAffineElt, f: FieldElt) {
        if f.is_zero() {
            return;
        }
        match self.terms.get_mut(&g) {
            Some(existing) => {
                *existing = existing.add(&f);
                if existing.is_zero() {
                    self.terms.remove(&g);
                }
            }
            None => {
                self.terms.insert(g, f);
            }
        }
    }

    pub fn add(&self, other: &Operator) -> Operator {
        let mut out = self.clone();
        for (g, f) in &other.terms {
            out.insert_add(g.clone(), f.clone());
        }
        out
    }

    pub fn neg(&self) -> Operator {
        let mut out = Operator::zero(self.rank);
        for (g, f) in &self.terms {
            out.terms.insert(g.clone(), f.neg());
        }
        out
    }

    pub fn sub(&self, other: &Operator) -> Operator {
        self.add(&other.neg())
    }

    /// Left-multiply by a scalar function.
    pub fn scale(&self, f: &FieldElt) -> Operator {
        let mut out = Operator::zero(self.rank);
        for (g, h) in &self.terms {
            out.insert_add(g.clone(), f.mul(h));
        }
        out
    }

    /// Composition: (f (x) u)(g (x) v) = f * (u . g) (x) uv.
    pub fn mul(&self, other: &Operator, rs: &RootSystem) -> Operator {
        let mut out = Operator::zero(self.rank);
        for (u, f) in &self.terms {
            for (v, g) in &other.terms {
                let twisted = act_ext_on_field(rs, u, g);
                out.insert_add(u.mul_ext(v, rs), f.mul(&twisted));
            }
        }
        out
    }

    /// Apply to a polynomial, producing a rational function.
    pub fn apply(&self, rs: &RootSystem, p: &LatticePoly) -> FieldElt {
        let mut acc = FieldElt::zero(self.rank);
        for (g, f) in &self.terms {
            acc = acc.add(&f.mul(&FieldElt::from_poly(act_ext_on_poly(rs, g, p))));
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Semantic equality (coefficients compared by cross-multiplication).
pub fn op_eq(a: &Operator, b: &Operator) -> bool {
    let keys: std::collections::BTreeSet<_> =
        a.terms.keys().chain(b.terms.keys()).cloned().collect();
    let rank = a.rank;
    for k in keys {
        let fa = a.terms.get(&k).cloned().unwrap_or_else(|| FieldElt::zero(rank));
        let fb = b.terms.get(&k).cloned().unwrap_or_else(|| FieldElt::zero(rank));
        if !fa.eq(&fb) {
            return false;
        }
    }
    true
}

/// x^{alpha_i} as a polynomial; for i = 0 this is q x^{-theta}.
pub fn simple_root_monomial(rs: &RootSystem, i: usize) -> LatticePoly {
    if i == 0 {
        let neg_theta: Vec<i64> = rs.theta_fw.iter().map(|&c| -c).collect();
        LatticePoly::from_term(
            Mono {
                q: 2 * rs.e,
                t: 0,
                x: neg_theta,
            },
            big(1),
        )
    } else {
        LatticePoly::x_power(&rs.simple_root_fw(i))
    }
}

/// The Hecke generator
/// T_i = (t-1)/(1-x^{alpha_i}) (x) e + (1-t x^{alpha_i})/(1-x^{alpha_i}) (x) s_i.
pub fn gen_t(rs: &RootSystem, i: usize) -> Operator {
    let rank = rs.rank;
    let one = LatticePoly::one(rank);
    let t = LatticePoly::t_power(rank, 2);
    let xa = simple_root_monomial(rs, i);
    let den = one.sub(&xa);
    let mut op = Operator::zero(rank);
    op.insert_add(
        ExtAffineElt::identity(rank),
        FieldElt::from_ratio(t.sub(&one), den.clone()),
    );
    op.insert_add(
        rs.affine_simple_elt(i),
        FieldElt::from_ratio(one.sub(&t.mul(&xa)), den),
    );
    op
}

/// t T_i^{-1} = T_i - (t - 1).
pub fn gen_t_inv_scaled(rs: &RootSystem, i: usize) -> Operator {
    let rank = rs.rank;
    let t = LatticePoly::t_power(rank, 2);
    let tm1 = FieldElt::from_poly(t.sub(&LatticePoly::one(rank)));
    gen_t(rs, i).sub(&Operator::from_field(tm1))
}

/// Multiplication by x^nu.
pub fn gen_x(nu: &[i64]) -> Operator {
    Operator::from_field(FieldElt::from_poly(LatticePoly::x_power(nu)))
}

/// The central scalar X^{k delta/e} = q^{k/e}.
pub fn gen_xdelta(rs: &RootSystem, k: i64) -> Operator {
    Operator::from_field(FieldElt::from_poly(LatticePoly::q_power(rs.rank, 2 * k)))
}

/// The length-zero element pi_r as the single term 1 (x) pi_r.
pub fn gen_pi(rs: &RootSystem, r: usize) -> Result<Operator> {
    Ok(Operator::from_ext(rs.pi_r(r)?))
}

/// The twisted affine generator T_0' = X^{-alpha_0} t T_0^{-1}; since
/// X^{-alpha_0} = q^{-1} x^{theta}, this is x^{theta} q^{-1} (T_0 - (t-1)).
pub fn gen_t0_prime(rs: &RootSystem) -> Operator {
    let x_neg_alpha0 = LatticePoly::from_term(
        Mono {
            q: -2 * rs.e,
            t: 0,
            x: rs.theta_fw.clone(),
        },
        big(1),
    );
    Operator::from_field(FieldElt::from_poly(x_neg_alpha0)).mul(&gen_t_inv_scaled(rs, 0), rs)
}

/// The primed generator family: T_i' = T_i for finite i, T_0' as above.
pub fn gen_t_prime(rs: &RootSystem, i: usize) -> Operator {
    if i == 0 {
        gen_t0_prime(rs)
    } else {
        gen_t(rs, i)
    }
}

/// The commuting Bernstein elements: for any reduced expression
/// y^nu = pi s_{i_1} ... s_{i_l},
/// Y^nu = t^{-sum(eps)/2} pi T_{i_1}^{eps_1} ... T_{i_l}^{eps_l}
/// with the sign eps_k determined by the prefix action on alpha_{i_k}.
pub fn elt_y(rs: &RootSystem, nu: &[i64]) -> Operator {
    let (pi, word) = rs.translation_word(nu);
    elt_y_from(rs, pi, &word)
}

/// Y^nu built from an explicit decomposition of the translation by nu.
pub fn elt_y_from(rs: &RootSystem, pi: ExtAffineElt, word: &[usize]) -> Operator {
    let rank = rs.rank;
    let signs = rs.epsilon_signs(&pi, word);
    let mut op = Operator::from_ext(pi);
    for (&i, &eps) in word.iter().zip(&signs) {
        let factor = if eps > 0 {
            gen_t(rs, i)
        } else {
            // T_i^{-1} = t^{-1} (T_i - (t-1)).
            gen_t_inv_scaled(rs, i)
                .scale(&FieldElt::from_poly(LatticePoly::t_power(rank, -2)))
        };
        op = op.mul(&factor, rs);
    }
    let sum: i64 = signs.iter().sum();
    op.scale(&FieldElt::from_poly(LatticePoly::t_power(rank, -sum)))
}

/// The scalar Y^{k delta/e} = X^{-k delta/e} = q^{-k/e}.
pub fn gen_ydelta(rs: &RootSystem, k: i64) -> Operator {
    gen_xdelta(rs, -k)
}

/// A single generator letter of a formal word.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Letter {
    /// Hecke generator T_i, i in 0..=rank.
    T(usize),
    /// The rescaled inverse t T_i^{-1} = T_i - (t-1).
    Tinv(usize),
    /// D_i = T_i + 1.
    D(usize),
    /// Primed generator T_i'; for i = 0 this is the twisted affine letter.
    Tp(usize),
    /// Multiplication letter X^nu, nu in fundamental-weight coordinates.
    X(Vec<i64>),
    /// Bernstein letter Y^nu.
    Y(Vec<i64>),
    /// Length-zero element pi_r (r a minuscule node).
    Pi(usize),
    /// Central scalar X^{k delta/e} = q^{k/e}.
    Xd(i64),
    /// Central scalar Y^{k delta/e} = q^{-k/e}.
    Yd(i64),
}

/// The two commuting generator families.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Side {
    Plain,
    Primed,
}

impl Letter {
    pub fn side(&self) -> Side {
        match self {
            Letter::T(_)
            | Letter::Tinv(_)
            | Letter::D(_)
            | Letter::X(_)
            | Letter::Pi(_)
            | Letter::Xd(_) => Side::Plain,
            Letter::Tp(_) | Letter::Y(_) | Letter::Yd(_) => Side::Primed,
        }
    }
}

/// A formal sum of coefficient-scaled generator words. Coefficients are
/// Laurent in q and t only; the x-part of every coefficient monomial must
/// stay zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    pub rank: usize,
    pub terms: Vec<(LatticePoly, Vec<Letter>)>,
}

impl Word {
    pub fn zero(rank: usize) -> Word {
        Word {
            rank,
            terms: Vec::new(),
        }
    }

    pub fn one(rank: usize) -> Word {
        Word {
            rank,
            terms: vec![(LatticePoly::one(rank), Vec::new())],
        }
    }

    pub fn letter(rank: usize, l: Letter) -> Word {
        Word::from_letters(rank, vec![l])
    }

    pub fn from_letters(rank: usize, ls: Vec<Letter>) -> Word {
        Word {
            rank,
            terms: vec![(LatticePoly::one(rank), ls)],
        }
    }

    pub fn scale(&self, c: &LatticePoly) -> Word {
        Word {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(p, ls)| (p.mul(c), ls.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Word) -> Word {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Word {
            rank: self.rank,
            terms,
        }
        .normalized()
    }

    pub fn neg(&self) -> Word {
        Word {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(p, ls)| (p.neg(), ls.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Word) -> Word {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut terms = Vec::new();
        for (c1, l1) in &self.terms {
            for (c2, l2) in &other.terms {
                let mut ls = l1.clone();
                ls.extend(l2.iter().cloned());
                terms.push((c1.mul(c2), ls));
            }
        }
        Word {
            rank: self.rank,
            terms,
        }
        .normalized()
    }

    /// Merge duplicate letter-words and drop zero coefficients.
    pub fn normalized(&self) -> Word {
        let mut map: BTreeMap<Vec<Letter>, LatticePoly> = BTreeMap::new();
        for (c, ls) in &self.terms {
            match map.get_mut(ls) {
                Some(acc) => *acc = acc.add(c),
                None => {
                    map.insert(ls.clone(), c.clone());
                }
            }
        }
        Word {
            rank: self.rank,
            terms: map
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(ls, c)| (c, ls))
                .collect(),
        }
    }

    /// The family the word's letters belong to; None for scalar words.
    /// Mixing families in one word is an error.
    pub fn side(&self) -> Result<Option<Side>> {
        let mut seen: Option<Side> = None;
        for (_, ls) in &self.terms {
            for l in ls {
                match seen {
                    None => seen = Some(l.side()),
                    Some(s) if s == l.side() => {}
                    Some(_) => {
                        return Err(Error::Domain(format!(
                            "word mixes plain and primed letters at {l:?}"
                        )))
                    }
                }
            }
        }
        Ok(seen)
    }
}

fn check_coefficient(rank: usize, c: &LatticePoly) -> Result<()> {
    for mono in c.terms.keys() {
        if mono.x.iter().any(|&v| v != 0) {
            return Err(Error::Domain(
                "word coefficients may involve only q and t".into(),
            ));
        }
    }
    if c.rank != rank {
        return Err(Error::Domain("coefficient rank mismatch".into()));
    }
    Ok(())
}

fn check_node(rs: &RootSystem, i: usize) -> Result<()> {
    if i > rs.rank {
        return Err(Error::Domain(format!(
            "generator index {i} out of range 0..={}",
            rs.rank
        )));
    }
    Ok(())
}

fn check_weight(rs: &RootSystem, nu: &[i64]) -> Result<()> {
    if nu.len() != rs.rank {
        return Err(Error::Domain(format!(
            "weight {:?} has wrong rank for {}",
            nu, rs.name
        )));
    }
    Ok(())
}

/// The operator realization of a single letter.
pub fn letter_op(rs: &RootSystem, l: &Letter) -> Result<Operator> {
    Ok(match l {
        Letter::T(i) => {
            check_node(rs, *i)?;
            gen_t(rs, *i)
        }
        Letter::Tinv(i) => {
            check_node(rs, *i)?;
            gen_t_inv_scaled(rs, *i)
        }
        Letter::D(i) => {
            check_node(rs, *i)?;
            gen_t(rs, *i).add(&Operator::identity(rs.rank))
        }
        Letter::Tp(i) => {
            check_node(rs, *i)?;
            gen_t_prime(rs, *i)
        }
        Letter::X(nu) => {
            check_weight(rs, nu)?;
            gen_x(nu)
        }
        Letter::Y(nu) => {
            check_weight(rs, nu)?;
            elt_y(rs, nu)
        }
        Letter::Pi(r) => gen_pi(rs, *r)?,
        Letter::Xd(k) => gen_xdelta(rs, *k),
        Letter::Yd(k) => gen_ydelta(rs, *k),
    })
}

/// Evaluate a word in the polynomial representation: multiply the letter
/// operators left to right and sum the coefficient-scaled terms.
pub fn evaluate_word(rs: &RootSystem, w: &Word) -> Result<Operator> {
    let mut acc = Operator::zero(rs.rank);
    for (c, ls) in &w.terms {
        check_coefficient(rs.rank, c)?;
        let mut term = Operator::from_field(FieldElt::from_poly(c.clone()));
        for l in ls {
            term = term.mul(&letter_op(rs, l)?, rs);
        }
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// The homomorphic rewrite fixing T_i (i != 0), X and Xd letters, and sending
/// T_0 to X^{theta} Xd^{-e} Tinv_0 (= X^{-alpha_0} t T_0^{-1}) and pi_r to
/// X^{omega_r} Xd^{-e(omega_r,omega_r)/2} pi_r.
pub fn tau_plus(rs: &RootSystem, w: &Word) -> Result<Word> {
    let rank = rs.rank;
    let mut out = Word::zero(rank);
    for (c, ls) in &w.terms {
        let mut term = Word {
            rank,
            terms: vec![(c.clone(), Vec::new())],
        };
        for l in ls {
            let image = match l {
                Letter::T(0) => Word::from_letters(
                    rank,
                    vec![
                        Letter::X(rs.theta_fw.clone()),
                        Letter::Xd(-rs.e),
                        Letter::Tinv(0),
                    ],
                ),
                Letter::D(0) => Word::from_letters(
                    rank,
                    vec![
                        Letter::X(rs.theta_fw.clone()),
                        Letter::Xd(-rs.e),
                        Letter::Tinv(0),
                    ],
                )
                .add(&Word::one(rank)),
                Letter::Pi(r) => {
                    check_node(rs, *r)?;
                    let mut omega = vec![0; rank];
                    omega[r - 1] = 1;
                    let x4 = rs.pairing_x2e(&omega, &omega);
                    assert!(x4 % 4 == 0, "weight norm not in (1/2e)Z");
                    Word::from_letters(
                        rank,
                        vec![Letter::X(omega), Letter::Xd(-x4 / 4), Letter::Pi(*r)],
                    )
                }
                Letter::T(_) | Letter::D(_) | Letter::X(_) | Letter::Xd(_) => {
                    Word::letter(rank, l.clone())
                }
                Letter::Tinv(i) if *i != 0 => Word::letter(rank, l.clone()),
                other => {
                    return Err(Error::Domain(format!(
                        "letter {other:?} has no twisted rewrite"
                    )))
                }
            };
            term = term.mul(&image);
        }
        out = out.add(&term);
    }
    Ok(out)
}

fn invert_q(c: &LatticePoly) -> LatticePoly {
    c.map_mono(|m| Mono {
        q: -m.q,
        t: m.t,
        x: m.x.clone(),
    })
}

fn phi_letter(rank: usize, l: &Letter) -> Result<Word> {
    Ok(match l {
        Letter::T(i) => Word::letter(rank, Letter::Tp(*i)),
        Letter::D(i) => Word::letter(rank, Letter::Tp(*i)).add(&Word::one(rank)),
        Letter::X(nu) => Word::letter(rank, Letter::Y(nu.iter().map(|&c| -c).collect())),
        Letter::Xd(k) => Word::letter(rank, Letter::Yd(-k)),
        other => {
            return Err(Error::Domain(format!(
                "letter {other:?} has no duality image"
            )))
        }
    })
}

fn phi_inv_letter(rank: usize, l: &Letter) -> Result<Word> {
    Ok(match l {
        Letter::Tp(i) => Word::letter(rank, Letter::T(*i)),
        Letter::Y(nu) => Word::letter(rank, Letter::X(nu.iter().map(|&c| -c).collect())),
        Letter::Yd(k) => Word::letter(rank, Letter::Xd(-k)),
        other => {
            return Err(Error::Domain(format!(
                "letter {other:?} has no inverse duality image"
            )))
        }
    })
}

fn phi_apply(w: &Word, f: impl Fn(usize, &Letter) -> Result<Word>) -> Result<Word> {
    let rank = w.rank;
    let mut out = Word::zero(rank);
    for (c, ls) in &w.terms {
        let mut term = Word {
            rank,
            terms: vec![(invert_q(c), Vec::new())],
        };
        for l in ls.iter().rev() {
            term = term.mul(&f(rank, l)?);
        }
        out = out.add(&term);
    }
    Ok(out)
}

/// The duality anti-map on plain words: reverses each word, sends T_i to
/// T_i', X^nu to Y^{-nu}, Xd^k to Yd^{-k}, and inverts q in coefficients.
pub fn phi_word(w: &Word) -> Result<Word> {
    if w.side()? == Some(Side::Primed) {
        return Err(Error::Domain("duality map expects a plain word".into()));
    }
    phi_apply(w, phi_letter)
}

/// Inverse direction of the duality anti-map, on primed words.
pub fn phi0_inverse(w: &Word) -> Result<Word> {
    if w.side()? == Some(Side::Plain) {
        return Err(Error::Domain(
            "inverse duality map expects a primed word".into(),
        ));
    }
    phi_apply(w, phi_inv_letter)
}
