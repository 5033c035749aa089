//! Named verification suites: frozen reference values, closed-form
//! generator matrices, the two-route transport comparison, algebra
//! relations at the operator and matrix levels, random multiplicativity,
//! class expansions, spherical projections, and difference Toda operators.

use crate::daha::{
    elt_y, elt_y_from, gen_t, gen_t0_prime, gen_t_prime, gen_x, gen_ydelta, op_eq, simple_root_monomial,
    Letter, Operator, Word,
};
use crate::exactalg::{big, FieldElt, LatticePoly, Mono};
use crate::golden::{golden_elt, golden_ipc, golden_mat, golden_opmat};
use crate::heis::{star, tau, HeisMat, Lattice};
use crate::ktheory::{inverse_pieri_chevalley, nil_act, KClass};
use crate::nildaha::{diagram_check, orbit_x_word, orbit_y_word, qtoda, rho0, rho0_d_direct, rho0_sph};
use crate::rootdata::{ExtAffineElt, RootSystem, WeylTable};
use crate::wmatrix::{kappa, rho0_prime, rho_prime};
use crate::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Report = Vec<(String, bool)>;

fn setup(name: &str) -> Result<(RootSystem, WeylTable)> {
    let rs = RootSystem::new(name)?;
    let wt = WeylTable::build(&rs)?;
    Ok((rs, wt))
}

fn fw(coords: &[i64]) -> Vec<i64> {
    coords.to_vec()
}

/// All rank-one reference values plus the rank-two spherical and Toda
/// elements, each compared exactly.
pub fn golden_suite() -> Result<Report> {
    let mut out = Report::new();
    let (rs, wt) = setup("A1")?;

    let t1p = Word::letter(1, Letter::Tp(1));
    let t0p = Word::letter(1, Letter::Tp(0));
    let d1p = t1p.add(&Word::one(1));
    let d0p = t0p.add(&Word::one(1));
    let yp = Word::letter(1, Letter::Y(fw(&[1])));
    let ym = Word::letter(1, Letter::Y(fw(&[-1])));

    let generic = rho_prime(&rs, &wt, &t1p)?;
    out.push((
        "generic matrix of the first Hecke generator".into(),
        generic.eq(&golden_opmat("a1_rho_prime_t1")?),
    ));
    out.push((
        "spherical-vector normalization of that matrix".into(),
        kappa(&rs, &generic).eq(&golden_opmat("a1_kappa_rho_prime_t1")?),
    ));
    out.push((
        "generic matrix of the first Bernstein element".into(),
        rho_prime(&rs, &wt, &yp)?.eq(&golden_opmat("a1_rho_prime_y_omega")?),
    ));

    for (name, word, file) in [
        ("limit of T'_1", &t1p, "a1_rho0p_t1"),
        ("limit of D'_1", &d1p, "a1_rho0p_d1"),
        ("limit of T'_0", &t0p, "a1_rho0p_t0"),
        ("limit of D'_0", &d0p, "a1_rho0p_d0"),
        ("limit of Y^w1", &yp, "a1_rho0p_y_omega"),
        ("limit of Y^-w1", &ym, "a1_rho0p_y_neg_omega"),
    ] {
        out.push((name.into(), rho0_prime(&rs, &wt, word)? == golden_mat(file)?));
    }

    let xm = Word::letter(1, Letter::X(fw(&[-1])));
    let xp = Word::letter(1, Letter::X(fw(&[1])));
    out.push((
        "transported matrix of X^-w1".into(),
        rho0(&rs, &wt, &xm)? == golden_mat("a1_rho0_x_neg_omega")?,
    ));
    out.push((
        "transported matrix of X^w1".into(),
        rho0(&rs, &wt, &xp)? == golden_mat("a1_rho0_x_omega")?,
    ));
    out.push((
        "transported matrix of the orbit sum X^-w1 + X^w1".into(),
        rho0(&rs, &wt, &xm.add(&xp))? == golden_mat("a1_rho0_x_orbit_sum")?,
    ));
    for i in [0usize, 1] {
        out.push((
            format!("direct idempotent matrix D_{i}"),
            rho0_d_direct(&rs, &wt, i)? == golden_mat(&format!("a1_rho0_d{i}_direct"))?,
        ));
    }
    out.push((
        "spherical element of the orbit sum".into(),
        rho0_sph(&rs, &wt, &orbit_x_word(&rs, &[1]))? == golden_elt("a1_sph_orbit_omega")?,
    ));
    out.push((
        "Toda operator of the orbit sum".into(),
        qtoda(&rs, &wt, &orbit_y_word(&rs, &[1]))? == golden_elt("a1_qtoda_orbit_omega")?,
    ));

    for (file, v) in [("a1_ipc_basis_e", 0usize), ("a1_ipc_basis_s1", 1)] {
        let (lambda, _, want) = golden_ipc(file, &wt)?;
        let wtilde = ExtAffineElt::from_weyl(&wt.elements[v]);
        let got = inverse_pieri_chevalley(&rs, &wt, &lambda, &wtilde)?;
        out.push((format!("class expansion over the {} basis class", wt.names[v]), got == want));
    }

    let (rs2, wt2) = setup("A2")?;
    for (r, sph_file, toda_file) in [
        (1usize, "a2_sph_orbit_w1", "a2_qtoda_orbit_w1"),
        (2, "a2_sph_orbit_w2", "a2_qtoda_orbit_w2"),
    ] {
        let mut lam = vec![0i64; 2];
        lam[r - 1] = 1;
        // The spherical file for orbit r holds the transport of the Toda
        // side, which lives over the orbit of the dual weight -w0(omega_r).
        let paired: Vec<i64> = wt2.w0().apply(&lam).iter().map(|&c| -c).collect();
        out.push((
            format!("rank-two spherical element of orbit {r}"),
            rho0_sph(&rs2, &wt2, &orbit_x_word(&rs2, &paired))? == golden_elt(sph_file)?,
        ));
        out.push((
            format!("rank-two Toda operator of orbit {r}"),
            qtoda(&rs2, &wt2, &orbit_y_word(&rs2, &lam))? == golden_elt(toda_file)?,
        ));
    }
    Ok(out)
}

/// The closed-form matrices of the primed limit generators: row v carries
/// -1 on the diagonal and a second entry at the reflected column.
pub fn closed_form_t_prime(rs: &RootSystem, wt: &WeylTable, i: usize) -> HeisMat {
    let n = wt.len();
    let rank = rs.rank;
    let mut m = HeisMat::zero(Lattice::Primed, rank, n);
    if i != 0 {
        for (v_idx, v) in wt.elements.iter().enumerate() {
            let root = v.inverse().apply(&rs.simple_root_fw(i));
            if rs.root_is_positive(&root) {
                continue;
            }
            m.get_mut(v_idx, v_idx)
                .insert_add((0, vec![0; rank], vec![0; rank]), big(-1));
            let col = wt.index_of(&rs.simple_reflection(i).mul(v));
            m.get_mut(v_idx, col)
                .insert_add((0, vec![0; rank], vec![0; rank]), big(1));
        }
    } else {
        for (v_idx, v) in wt.elements.iter().enumerate() {
            let root = v.inverse().apply(&rs.theta_fw);
            if !rs.root_is_positive(&root) {
                continue;
            }
            m.get_mut(v_idx, v_idx)
                .insert_add((0, vec![0; rank], vec![0; rank]), big(-1));
            let col = wt.index_of(&rs.s_theta.mul(v));
            m.get_mut(v_idx, col).insert_add((-1, root.clone(), root), big(1));
        }
    }
    m
}

/// Compare the pipeline limit of every T'_i against its closed form.
pub fn closed_form_suite(rs: &RootSystem, wt: &WeylTable) -> Result<Report> {
    let mut out = Report::new();
    for i in 0..=rs.rank {
        let got = rho0_prime(rs, wt, &Word::letter(rs.rank, Letter::Tp(i)))?;
        out.push((
            format!("closed form of the limit matrix of T'_{i} ({})", rs.name),
            got == closed_form_t_prime(rs, wt, i),
        ));
    }
    Ok(out)
}

/// The two-route transport comparison for every generator.
pub fn diagram_suite(rs: &RootSystem, wt: &WeylTable) -> Result<Report> {
    diagram_check(rs, wt)
}

fn t_minus_one(rank: usize) -> FieldElt {
    FieldElt::from_poly(LatticePoly::t_power(rank, 2).sub(&LatticePoly::one(rank)))
}

/// Braid order of a pair of affine nodes in a simply-laced system, read off
/// the pairing of the corresponding roots; None means no braid relation.
fn braid_order(rs: &RootSystem, i: usize, j: usize) -> Option<usize> {
    let root = |k: usize| -> Vec<i64> {
        if k == 0 {
            rs.theta_fw.iter().map(|&c| -c).collect()
        } else {
            rs.simple_root_fw(k)
        }
    };
    match rs.pairing_int(&root(i), &root(j)) {
        0 => Some(2),
        -1 => Some(3),
        _ => None,
    }
}

fn alternating_product(rs: &RootSystem, a: &Operator, b: &Operator, m: usize) -> Operator {
    let mut acc = Operator::identity(rs.rank);
    for k in 0..m {
        let f = if k % 2 == 0 { a } else { b };
        acc = acc.mul(f, rs);
    }
    acc
}

/// x^{s_i nu} as a polynomial; the affine reflection contributes the q-power
/// of the pairing with the highest root.
fn x_reflected(rs: &RootSystem, i: usize, nu: &[i64]) -> LatticePoly {
    if i == 0 {
        LatticePoly::from_term(
            Mono {
                q: 2 * rs.e * rs.pairing_int(&rs.theta_fw, nu),
                t: 0,
                x: rs.s_theta.apply(nu),
            },
            big(1),
        )
    } else {
        LatticePoly::x_power(&rs.simple_reflection(i).apply(nu))
    }
}

/// Y^{s_i nu} as an operator.
fn y_reflected(rs: &RootSystem, i: usize, nu: &[i64]) -> Operator {
    if i == 0 {
        let k = rs.e * rs.pairing_int(&rs.theta_fw, nu);
        elt_y(rs, &rs.s_theta.apply(nu)).mul(&gen_ydelta(rs, k), rs)
    } else {
        elt_y(rs, &rs.simple_reflection(i).apply(nu))
    }
}

/// X^{s_i nu} as a word in the limit letters.
fn x_reflected_word(rs: &RootSystem, i: usize, nu: &[i64]) -> Word {
    if i == 0 {
        let k = rs.e * rs.pairing_int(&rs.theta_fw, nu);
        Word::letter(rs.rank, Letter::X(rs.s_theta.apply(nu)))
            .mul(&Word::letter(rs.rank, Letter::Xd(k)))
    } else {
        Word::letter(rs.rank, Letter::X(rs.simple_reflection(i).apply(nu)))
    }
}

/// Y^{s_i nu} as a word in the limit letters.
fn y_reflected_word(rs: &RootSystem, i: usize, nu: &[i64]) -> Word {
    if i == 0 {
        let k = rs.e * rs.pairing_int(&rs.theta_fw, nu);
        Word::letter(rs.rank, Letter::Y(rs.s_theta.apply(nu)))
            .mul(&Word::letter(rs.rank, Letter::Yd(k)))
    } else {
        Word::letter(rs.rank, Letter::Y(rs.simple_reflection(i).apply(nu)))
    }
}

/// x^{alpha_i} as a word: the affine root is the full central letter times
/// x^{-theta}.
fn x_alpha_word(rs: &RootSystem, i: usize) -> Word {
    if i == 0 {
        let neg_theta: Vec<i64> = rs.theta_fw.iter().map(|&c| -c).collect();
        Word::letter(rs.rank, Letter::Xd(rs.e)).mul(&Word::letter(rs.rank, Letter::X(neg_theta)))
    } else {
        Word::letter(rs.rank, Letter::X(rs.simple_root_fw(i)))
    }
}

/// y^{-alpha_i} as a word.
fn y_neg_alpha_word(rs: &RootSystem, i: usize) -> Word {
    if i == 0 {
        Word::letter(rs.rank, Letter::Y(rs.theta_fw.clone()))
            .mul(&Word::letter(rs.rank, Letter::Yd(-rs.e)))
    } else {
        let neg: Vec<i64> = rs.simple_root_fw(i).iter().map(|&c| -c).collect();
        Word::letter(rs.rank, Letter::Y(neg))
    }
}

fn sample_weights(rank: usize) -> Vec<Vec<i64>> {
    if rank == 1 {
        return (1..=5).flat_map(|k| [vec![k], vec![-k]]).collect();
    }
    let mut out = Vec::new();
    let mut stack = vec![vec![]];
    while let Some(head) = stack.pop() {
        if head.len() == rank {
            if head.iter().any(|&c| c != 0) {
                out.push(head);
            }
            continue;
        }
        for c in [-1i64, 0, 1] {
            let mut next = head.clone();
            next.push(c);
            stack.push(next);
        }
    }
    for r in 0..rank.min(2) {
        for s in [2i64, -2] {
            let mut v = vec![0; rank];
            v[r] = s;
            out.push(v);
        }
    }
    out.truncate(12);
    out
}

/// Operator-level and matrix-level algebra relations.
pub fn relation_suite(rs: &RootSystem, wt: &WeylTable) -> Result<Report> {
    let rank = rs.rank;
    let mut out = Report::new();
    let tm1 = t_minus_one(rank);
    let t_scalar = FieldElt::from_poly(LatticePoly::t_power(rank, 2));

    // (T_i - t)(T_i + 1) = 0 for every affine node.
    let mut quad = true;
    for i in 0..=rank {
        let ti = gen_t(rs, i);
        let lhs = ti.mul(&ti, rs);
        let rhs = ti.scale(&tm1).add(&Operator::identity(rank).scale(&t_scalar));
        quad &= op_eq(&lhs, &rhs);
    }
    out.push((format!("Hecke quadratic relation, all nodes ({})", rs.name), quad));

    // Braid relations between affine nodes.
    let mut braid = true;
    let mut braid_cases = 0;
    for i in 0..=rank {
        for j in (i + 1)..=rank {
            let Some(m) = braid_order(rs, i, j) else {
                continue;
            };
            braid_cases += 1;
            let a = gen_t(rs, i);
            let b = gen_t(rs, j);
            braid &= op_eq(
                &alternating_product(rs, &a, &b, m),
                &alternating_product(rs, &b, &a, m),
            );
        }
    }
    out.push((
        format!("braid relations on {braid_cases} node pairs ({})", rs.name),
        braid,
    ));

    // Generic commutation with weight monomials, cleared on the left.
    let weights = sample_weights(rank);
    let bernstein_weights = &weights[..weights.len().min(5)];
    let mut plain_ok = true;
    for i in 0..=rank {
        let clear = FieldElt::from_poly(
            LatticePoly::one(rank).sub(&simple_root_monomial(rs, i)),
        );
        for nu in bernstein_weights {
            let xv = gen_x(nu);
            let xsv = Operator::from_field(FieldElt::from_poly(x_reflected(rs, i, nu)));
            let ti = gen_t(rs, i);
            let comm = ti.mul(&xv, rs).sub(&xsv.mul(&ti, rs));
            let rhs = xv.sub(&xsv).scale(&tm1);
            plain_ok &= op_eq(&comm.scale(&clear), &rhs);
        }
    }
    out.push((
        format!("generic weight commutation, all nodes ({})", rs.name),
        plain_ok,
    ));

    // Generic commutation with Bernstein elements, cleared on the right.
    let mut primed_ok = true;
    for i in 0..=rank {
        let tip = if i == 0 {
            gen_t0_prime(rs)
        } else {
            gen_t_prime(rs, i)
        };
        let y_neg_alpha = if i == 0 {
            elt_y(rs, &rs.theta_fw).mul(&gen_ydelta(rs, -rs.e), rs)
        } else {
            let neg: Vec<i64> = rs.simple_root_fw(i).iter().map(|&c| -c).collect();
            elt_y(rs, &neg)
        };
        let clear = Operator::identity(rank).sub(&y_neg_alpha);
        for nu in bernstein_weights {
            let yv = elt_y(rs, nu);
            let ysv = y_reflected(rs, i, nu);
            let comm = tip.mul(&yv, rs).sub(&ysv.mul(&tip, rs));
            let rhs = yv.sub(&ysv).scale(&tm1);
            primed_ok &= op_eq(&comm.mul(&clear, rs), &rhs);
        }
    }
    out.push((
        format!("generic Bernstein commutation, all nodes ({})", rs.name),
        primed_ok,
    ));

    // Limit matrix identities: quadratic, idempotent, braid.
    let mut nil_ok = true;
    for i in 0..=rank {
        let ti = rho0(rs, wt, &Word::letter(rank, Letter::T(i)))?;
        nil_ok &= ti.mul(&ti, rs).add(&ti).is_zero();
        let di = rho0(rs, wt, &Word::letter(rank, Letter::D(i)))?;
        nil_ok &= di.mul(&di, rs) == di;
        let tip = rho0_prime(rs, wt, &Word::letter(rank, Letter::Tp(i)))?;
        nil_ok &= tip.mul(&tip, rs).add(&tip).is_zero();
    }
    out.push((
        format!("limit quadratic and idempotent matrix relations ({})", rs.name),
        nil_ok,
    ));

    let mut nil_braid = true;
    for i in 0..=rank {
        for j in (i + 1)..=rank {
            let Some(m) = braid_order(rs, i, j) else {
                continue;
            };
            let a = rho0(rs, wt, &Word::letter(rank, Letter::T(i)))?;
            let b = rho0(rs, wt, &Word::letter(rank, Letter::T(j)))?;
            let mut lhs = HeisMat::identity(Lattice::Plain, rank, wt.len());
            let mut rhs = lhs.clone();
            for k in 0..m {
                if k % 2 == 0 {
                    lhs = lhs.mul(&a, rs);
                    rhs = rhs.mul(&b, rs);
                } else {
                    lhs = lhs.mul(&b, rs);
                    rhs = rhs.mul(&a, rs);
                }
            }
            nil_braid &= lhs == rhs;
        }
    }
    out.push((
        format!("limit braid matrix relations ({})", rs.name),
        nil_braid,
    ));

    // Cleared limit cross-relations on both sides.
    let mut cross_plain = true;
    let mut cross_primed = true;
    for i in 0..=rank {
        let xa = Word::one(rank).sub(&x_alpha_word(rs, i));
        let ya = Word::one(rank).sub(&y_neg_alpha_word(rs, i));
        for nu in bernstein_weights {
            let ti = Word::letter(rank, Letter::T(i));
            let xv = Word::letter(rank, Letter::X(nu.clone()));
            let xsv = x_reflected_word(rs, i, nu);
            let comm = ti.mul(&xv).sub(&xsv.mul(&ti));
            let lhs = xa.mul(&comm).add(&xv.sub(&xsv));
            cross_plain &= rho0(rs, wt, &lhs)?.is_zero();

            let tip = Word::letter(rank, Letter::Tp(i));
            let yv = Word::letter(rank, Letter::Y(nu.clone()));
            let ysv = y_reflected_word(rs, i, nu);
            let comm = tip.mul(&yv).sub(&ysv.mul(&tip));
            let lhs = comm.mul(&ya).add(&yv.sub(&ysv));
            cross_primed &= rho0_prime(rs, wt, &lhs)?.is_zero();
        }
    }
    out.push((
        format!("cleared limit weight commutation ({})", rs.name),
        cross_plain,
    ));
    out.push((
        format!("cleared limit Bernstein commutation ({})", rs.name),
        cross_primed,
    ));

    // The Bernstein elements commute pairwise.
    let mut commute = true;
    let ops: Vec<Operator> = weights.iter().map(|nu| elt_y(rs, nu)).collect();
    for a in 0..ops.len() {
        for b in (a + 1)..ops.len() {
            commute &= op_eq(&ops[a].mul(&ops[b], rs), &ops[b].mul(&ops[a], rs));
        }
    }
    out.push((
        format!(
            "Bernstein elements commute pairwise on {} weights ({})",
            weights.len(),
            rs.name
        ),
        commute,
    ));

    // The Bernstein elements do not depend on the chosen reduced word.
    let mut independent = true;
    for nu in &weights {
        let (pi_a, word_a) = rs.translation_word(nu);
        let (pi_b, word_b) = rs.translation_word_rev(nu);
        independent &= op_eq(&elt_y_from(rs, pi_a, &word_a), &elt_y_from(rs, pi_b, &word_b));
    }
    out.push((
        format!(
            "Bernstein elements are reduced-word independent on {} weights ({})",
            weights.len(),
            rs.name
        ),
        independent,
    ));

    Ok(out)
}

fn random_weight(rng: &mut ChaCha8Rng, rank: usize) -> Vec<i64> {
    (0..rank).map(|_| rng.gen_range(-1..=1)).collect()
}

fn random_generic_word(rs: &RootSystem, rng: &mut ChaCha8Rng) -> Word {
    let rank = rs.rank;
    let len = rng.gen_range(1..=3);
    let mut letters = Vec::new();
    for _ in 0..len {
        let l = match rng.gen_range(0..6) {
            0 => Letter::T(rng.gen_range(0..=rank)),
            1 => Letter::Tinv(rng.gen_range(0..=rank)),
            2 => Letter::D(rng.gen_range(0..=rank)),
            3 => Letter::X(random_weight(rng, rank)),
            4 => Letter::Pi(rng.gen_range(1..=rank)),
            _ => Letter::Xd(rng.gen_range(-2..=2)),
        };
        letters.push(l);
    }
    Word::from_letters(rank, letters)
}

fn random_nil_word(rs: &RootSystem, rng: &mut ChaCha8Rng) -> Word {
    let rank = rs.rank;
    let len = rng.gen_range(1..=3);
    let mut letters = Vec::new();
    for _ in 0..len {
        let l = match rng.gen_range(0..4) {
            0 => Letter::T(rng.gen_range(0..=rank)),
            1 => Letter::D(rng.gen_range(0..=rank)),
            2 => Letter::X(random_weight(rng, rank)),
            _ => Letter::Xd(rs.e * rng.gen_range(-1..=1)),
        };
        letters.push(l);
    }
    Word::from_letters(rank, letters)
}

/// Both matrix realizations preserve products on random word pairs.
pub fn multiplicativity_suite(
    rs: &RootSystem,
    wt: &WeylTable,
    pairs: usize,
    seed: u64,
) -> Result<Report> {
    let mut out = Report::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut generic_ok = true;
    for _ in 0..pairs {
        let w1 = random_generic_word(rs, &mut rng);
        let w2 = random_generic_word(rs, &mut rng);
        let lhs = rho_prime(rs, wt, &w1.mul(&w2))?;
        let rhs = rho_prime(rs, wt, &w1)?.mul(&rho_prime(rs, wt, &w2)?, rs);
        if !lhs.eq(&rhs) {
            generic_ok = false;
            break;
        }
    }
    out.push((
        format!("generic realization preserves {pairs} random products ({})", rs.name),
        generic_ok,
    ));

    let mut limit_ok = true;
    for _ in 0..pairs {
        let w1 = random_nil_word(rs, &mut rng);
        let w2 = random_nil_word(rs, &mut rng);
        let lhs = rho0(rs, wt, &w1.mul(&w2))?;
        let rhs = rho0(rs, wt, &w1)?.mul(&rho0(rs, wt, &w2)?, rs);
        if lhs != rhs {
            limit_ok = false;
            break;
        }
    }
    out.push((
        format!("limit realization preserves {pairs} random products ({})", rs.name),
        limit_ok,
    ));
    Ok(out)
}

/// Class expansions: round trips on every basis class and the coarse
/// support report (a necessary length condition, reported only).
pub fn ipc_suite(rs: &RootSystem, wt: &WeylTable, lambdas: &[Vec<i64>]) -> Result<Report> {
    let rank = rs.rank;
    let mut out = Report::new();
    let alpha1 = rs.simple_root_fw(1);
    let betas = [vec![0i64; rank], alpha1];
    for lambda in lambdas {
        let mut round = true;
        let mut terms_total = 0usize;
        let mut terms_bounded = 0usize;
        for v in 0..wt.len() {
            for beta in &betas {
                let wtilde = ExtAffineElt {
                    w: wt.elements[v].clone(),
                    beta: beta.clone(),
                };
                let exp = inverse_pieri_chevalley(rs, wt, lambda, &wtilde)?;
                let back = nil_act(
                    rs,
                    wt,
                    &Word::letter(rank, Letter::X(lambda.clone())),
                    &exp,
                )?;
                round &= back == KClass::basis(rank, beta.clone(), v, vec![0; rank]);

                let bound = rs.ext_length(&ExtAffineElt::translation(lambda)).abs();
                for (b, vi, _mu) in exp.terms.keys() {
                    let vtilde = ExtAffineElt {
                        w: wt.elements[*vi].clone(),
                        beta: b.clone(),
                    };
                    let u = vtilde.mul_ext(&wtilde.inverse(), rs);
                    terms_total += 1;
                    if rs.ext_length(&u).abs() <= bound {
                        terms_bounded += 1;
                    }
                }
            }
        }
        out.push((
            format!(
                "expansion round trip at {:?} over all basis classes ({})",
                lambda, rs.name
            ),
            round,
        ));
        out.push((
            format!(
                "support report at {:?}: {terms_bounded}/{terms_total} terms within the length bound ({})",
                lambda, rs.name
            ),
            true,
        ));
    }
    Ok(out)
}

fn invariant_inputs(rs: &RootSystem) -> Vec<(String, Vec<i64>)> {
    if rs.rank == 1 {
        (1..=5).map(|k| (format!("orbit of {k}w1"), vec![k])).collect()
    } else {
        let mut out = vec![
            ("orbit of w1".to_string(), {
                let mut v = vec![0; rs.rank];
                v[0] = 1;
                v
            }),
            ("orbit of w2".to_string(), {
                let mut v = vec![0; rs.rank];
                v[1] = 1;
                v
            }),
            ("orbit of w1+w2".to_string(), {
                let mut v = vec![0; rs.rank];
                v[0] = 1;
                v[1] = 1;
                v
            }),
            ("orbit of 2w1".to_string(), {
                let mut v = vec![0; rs.rank];
                v[0] = 2;
                v
            }),
            ("orbit of 2w2".to_string(), {
                let mut v = vec![0; rs.rank];
                v[1] = 2;
                v
            }),
        ];
        out.truncate(5);
        out
    }
}

/// The identity column collapses for symmetric multiplication polynomials.
pub fn sph_suite(rs: &RootSystem, wt: &WeylTable) -> Result<Report> {
    let mut out = Report::new();
    for (name, lambda) in invariant_inputs(rs) {
        let f = orbit_x_word(rs, &lambda);
        let ok = rho0_sph(rs, wt, &f).is_ok();
        out.push((format!("spherical projection of the {name} ({})", rs.name), ok));
    }
    let mut bad = vec![0i64; rs.rank];
    bad[0] = 1;
    let rejected = rho0_sph(rs, wt, &Word::letter(rs.rank, Letter::X(bad))).is_err();
    out.push((
        format!("asymmetric input is rejected ({})", rs.name),
        rejected,
    ));
    Ok(out)
}

/// Difference Toda operators: inverses, reference values, and the transport
/// identity against the spherical side.
pub fn toda_suite(rs: &RootSystem, wt: &WeylTable) -> Result<Report> {
    let rank = rs.rank;
    let mut out = Report::new();

    if rank == 1 {
        let yp = rho0_prime(rs, wt, &Word::letter(1, Letter::Y(vec![1])))?;
        let ym = rho0_prime(rs, wt, &Word::letter(1, Letter::Y(vec![-1])))?;
        let id = HeisMat::identity(Lattice::Primed, 1, wt.len());
        out.push((
            "limit Bernstein matrices are mutually inverse".into(),
            yp.mul(&ym, rs) == id && ym.mul(&yp, rs) == id,
        ));
    }

    for (name, lambda) in invariant_inputs(rs) {
        let f = orbit_y_word(rs, &lambda);
        let ok = qtoda(rs, wt, &f).is_ok();
        out.push((format!("Toda operator of the {name} ({})", rs.name), ok));
    }

    // The starred spherical element equals the transported Toda operator of
    // the negated orbit.
    let pairs: Vec<(Vec<i64>, Vec<i64>)> = if rank == 1 {
        vec![(vec![1], vec![1])]
    } else {
        let mut w1 = vec![0i64; rank];
        w1[0] = 1;
        let mut w2 = vec![0i64; rank];
        w2[1] = 1;
        vec![(w1.clone(), w2.clone()), (w2, w1)]
    };
    let mut transport = true;
    for (sph_lam, toda_lam) in pairs {
        let sph = rho0_sph(rs, wt, &orbit_x_word(rs, &sph_lam))?;
        let toda = qtoda(rs, wt, &orbit_y_word(rs, &toda_lam))?;
        transport &= star(&sph) == tau(rs, wt.w0(), &toda);
    }
    out.push((
        format!("spherical and Toda sides transport onto each other ({})", rs.name),
        transport,
    ));
    Ok(out)
}

/// Everything that applies to one root system, for the command-line runner.
pub fn verify_suite(name: &str) -> Result<Report> {
    let (rs, wt) = setup(name)?;
    let mut out = Report::new();
    if name == "A1" || name == "A2" {
        out.extend(golden_suite()?);
    }
    out.extend(closed_form_suite(&rs, &wt)?);
    out.extend(diagram_suite(&rs, &wt)?);
    out.extend(relation_suite(&rs, &wt)?);
    if rs.rank <= 2 {
        out.extend(multiplicativity_suite(&rs, &wt, 20, 7)?);
        let lambdas: Vec<Vec<i64>> = if rs.rank == 1 {
            vec![vec![1], vec![-1]]
        } else {
            vec![vec![1, 0], vec![0, 1], vec![-1, 0], vec![0, -1], vec![1, -1]]
        };
        out.extend(ipc_suite(&rs, &wt, &lambdas)?);
        out.extend(sph_suite(&rs, &wt)?);
        out.extend(toda_suite(&rs, &wt)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_suite_passes() {
        for (name, pass) in golden_suite().unwrap() {
            assert!(pass, "{name}");
        }
    }

    #[test]
    fn closed_forms_match_rank1() {
        let (rs, wt) = setup("A1").unwrap();
        for (name, pass) in closed_form_suite(&rs, &wt).unwrap() {
            assert!(pass, "{name}");
        }
    }

    #[test]
    fn relations_hold_rank1() {
        let (rs, wt) = setup("A1").unwrap();
        for (name, pass) in relation_suite(&rs, &wt).unwrap() {
            assert!(pass, "{name}");
        }
    }

    #[test]
    fn small_random_products_rank1() {
        let (rs, wt) = setup("A1").unwrap();
        for (name, pass) in multiplicativity_suite(&rs, &wt, 10, 11).unwrap() {
            assert!(pass, "{name}");
        }
    }

    #[test]
    fn expansions_round_trip_rank1() {
        let (rs, wt) = setup("A1").unwrap();
        for (name, pass) in ipc_suite(&rs, &wt, &[vec![1], vec![-2]]).unwrap() {
            assert!(pass, "{name}");
        }
    }

    #[test]
    fn spherical_and_toda_rank1() {
        let (rs, wt) = setup("A1").unwrap();
        for (name, pass) in sph_suite(&rs, &wt)
            .unwrap()
            .into_iter()
            .chain(toda_suite(&rs, &wt).unwrap())
        {
            assert!(pass, "{name}");
        }
    }
}
