//! Simply-laced root systems, Weyl groups, and the extended affine Weyl group.
//!
//! Weights are integer vectors in fundamental-weight coordinates. Roots carry
//! both coordinate systems (fundamental-weight and simple-root). The invariant
//! pairing is normalized so that every root has squared length 2; fractional
//! values are exposed through scaled integer helpers with exact divisibility
//! checks.

use crate::{Error, Result};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// Supported simply-laced types.
pub const TYPES: [&str; 8] = ["A1", "A2", "A3", "D4", "D5", "E6", "E7", "E8"];

/// Maximum Weyl group size that matrix-level operations will enumerate.
pub const WEYL_CAP: usize = 4096;

/// A finite Weyl group element as an integer matrix acting on
/// fundamental-weight coordinates (column vectors, row-major storage).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylElt {
    pub n: usize,
    pub m: Vec<i64>,
}

impl WeylElt {
    pub fn identity(n: usize) -> Self {
        let mut m = vec![0i64; n * n];
        for i in 0..n {
            m[i * n + i] = 1;
        }
        WeylElt { n, m }
    }

    pub fn is_identity(&self) -> bool {
        *self == WeylElt::identity(self.n)
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let n = self.n;
        assert_eq!(v.len(), n);
        let mut out = vec![0i64; n];
        for i in 0..n {
            let mut acc: i128 = 0;
            for j in 0..n {
                acc += self.m[i * n + j] as i128 * v[j] as i128;
            }
            out[i] = i64::try_from(acc).expect("weight coordinate overflow");
        }
        out
    }

    pub fn mul(&self, other: &WeylElt) -> WeylElt {
        let n = self.n;
        assert_eq!(other.n, n);
        let mut m = vec![0i64; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc: i128 = 0;
                for k in 0..n {
                    acc += self.m[i * n + k] as i128 * other.m[k * n + j] as i128;
                }
                m[i * n + j] = i64::try_from(acc).expect("matrix entry overflow");
            }
        }
        WeylElt { n, m }
    }

    /// Exact inverse. Weyl matrices preserve the weight lattice and have
    /// determinant +-1, so the adjugate divided by the determinant is integral.
    pub fn inverse(&self) -> WeylElt {
        let n = self.n;
        let rows: Vec<Vec<i128>> = (0..n)
            .map(|i| (0..n).map(|j| self.m[i * n + j] as i128).collect())
            .collect();
        let d = int_det(&rows);
        assert!(d == 1 || d == -1, "Weyl matrix determinant must be +-1");
        let adj = int_adjugate(&rows);
        let mut m = vec![0i64; n * n];
        for i in 0..n {
            for j in 0..n {
                m[i * n + j] = i64::try_from(adj[i][j] * d).expect("inverse entry overflow");
            }
        }
        WeylElt { n, m }
    }
}

/// Determinant of an integer matrix by cofactor expansion (small n only).
fn int_det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    let mut det: i128 = 0;
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let minor: Vec<Vec<i128>> = (1..n)
            .map(|i| {
                (0..n)
                    .filter(|&c| c != j)
                    .map(|c| m[i][c])
                    .collect::<Vec<_>>()
            })
            .collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        det += sign * m[0][j] * int_det(&minor);
    }
    det
}

/// Adjugate matrix: adj(M) * M = det(M) * I.
fn int_adjugate(m: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let n = m.len();
    let mut adj = vec![vec![0i128; n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<i128>> = (0..n)
                .filter(|&r| r != j)
                .map(|r| {
                    (0..n)
                        .filter(|&c| c != i)
                        .map(|c| m[r][c])
                        .collect::<Vec<_>>()
                })
                .collect();
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            adj[i][j] = sign * int_det(&minor);
        }
    }
    adj
}

/// An affine root alpha + k*delta: finite part in fundamental-weight
/// coordinates plus an integer multiple of the null root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineRoot {
    pub finite_fw: Vec<i64>,
    pub k: i64,
}

/// An element w * y^beta of the extended affine Weyl group: finite part `w`
/// composed with the translation by the weight `beta`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExtAffineElt {
    pub w: WeylElt,
    pub beta: Vec<i64>,
}

/// A simply-laced root system with its pairing data.
pub struct RootSystem {
    pub name: String,
    pub rank: usize,
    /// Cartan matrix, row-major.
    pub cartan: Vec<Vec<i64>>,
    /// Determinant of the Cartan matrix.
    pub det: i64,
    /// Adjugate of the Cartan matrix (adj * C = det * I); adj/det is the
    /// Gram matrix of the fundamental weights.
    pub adjugate: Vec<Vec<i64>>,
    /// Smallest positive integer e with e*(lambda,mu) in 2Z for all weights;
    /// q-exponents are stored as integers in units of 1/(2e).
    pub e: i64,
    /// Positive roots in fundamental-weight coordinates.
    pub pos_roots_fw: Vec<Vec<i64>>,
    /// The same positive roots in simple-root coordinates.
    pub pos_roots_alpha: Vec<Vec<i64>>,
    /// Highest root, both coordinate systems.
    pub theta_fw: Vec<i64>,
    pub theta_alpha: Vec<i64>,
    /// Reflection in the highest root.
    pub s_theta: WeylElt,
    /// Half sum of positive roots (all-ones in fundamental-weight coords).
    pub rho: Vec<i64>,
    simple: Vec<WeylElt>,
}

fn cartan_edges(family: char, n: usize) -> Result<Vec<(usize, usize)>> {
    let mut edges = Vec::new();
    match family {
        'A' => {
            for i in 1..n {
                edges.push((i, i + 1));
            }
        }
        'D' => {
            if n < 4 {
                return Err(Error::Domain(format!("D{n} is not supported")));
            }
            for i in 1..n - 2 {
                edges.push((i, i + 1));
            }
            edges.push((n - 2, n - 1));
            edges.push((n - 2, n));
        }
        'E' => {
            if !(6..=8).contains(&n) {
                return Err(Error::Domain(format!("E{n} is not supported")));
            }
            edges.push((1, 3));
            for i in 3..n {
                edges.push((i, i + 1));
            }
            edges.push((2, 4));
        }
        _ => return Err(Error::Domain(format!("unknown family {family}"))),
    }
    Ok(edges)
}

impl RootSystem {
    pub fn new(name: &str) -> Result<RootSystem> {
        if !TYPES.contains(&name) {
            return Err(Error::Domain(format!(
                "unsupported type {name:?}; expected one of {}",
                TYPES.join(", ")
            )));
        }
        let family = name.chars().next().unwrap();
        let rank: usize = name[1..]
            .parse()
            .map_err(|_| Error::Domain(format!("bad type name {name:?}")))?;
        let edges = cartan_edges(family, rank)?;
        let mut cartan = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            cartan[i][i] = 2;
        }
        for (a, b) in edges {
            cartan[a - 1][b - 1] = -1;
            cartan[b - 1][a - 1] = -1;
        }
        let c128: Vec<Vec<i128>> = cartan
            .iter()
            .map(|r| r.iter().map(|&x| x as i128).collect())
            .collect();
        let det = i64::try_from(int_det(&c128)).unwrap();
        assert!(det > 0);
        let adjugate: Vec<Vec<i64>> = int_adjugate(&c128)
            .into_iter()
            .map(|r| r.into_iter().map(|x| i64::try_from(x).unwrap()).collect())
            .collect();
        // adjugate/det is the fundamental-weight Gram matrix; e clears all of
        // its entries into 2Z.
        let mut e = 0;
        'scan: for cand in 1..=2 * det {
            for row in &adjugate {
                for &a in row {
                    if (cand as i128 * a as i128) % (2 * det as i128) != 0 {
                        continue 'scan;
                    }
                }
            }
            e = cand;
            break;
        }
        assert!(e > 0, "no valid q-exponent denominator found");

        let simple: Vec<WeylElt> = (0..rank)
            .map(|i| {
                let mut w = WeylElt::identity(rank);
                for k in 0..rank {
                    w.m[k * rank + i] -= cartan[k][i];
                }
                w
            })
            .collect();

        // All roots by closing the simple roots under the simple reflections.
        let simple_fw: Vec<Vec<i64>> = (0..rank).map(|i| (0..rank).map(|k| cartan[k][i]).collect()).collect();
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for r in &simple_fw {
            if seen.insert(r.clone()) {
                queue.push_back(r.clone());
            }
        }
        while let Some(r) = queue.pop_front() {
            for s in &simple {
                let img = s.apply(&r);
                if seen.insert(img.clone()) {
                    queue.push_back(img);
                }
            }
        }
        let mut rs = RootSystem {
            name: name.to_string(),
            rank,
            cartan,
            det,
            adjugate,
            e,
            pos_roots_fw: Vec::new(),
            pos_roots_alpha: Vec::new(),
            theta_fw: Vec::new(),
            theta_alpha: Vec::new(),
            s_theta: WeylElt::identity(rank),
            rho: vec![1; rank],
            simple,
        };
        let mut pos: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
        for fw in seen {
            let al = rs.alpha_coords(&fw);
            let h: i64 = al.iter().sum();
            assert!(h != 0);
            if h > 0 {
                assert!(al.iter().all(|&c| c >= 0));
                pos.push((al, fw));
            }
        }
        pos.sort();
        let (theta_alpha, theta_fw) = pos
            .iter()
            .max_by_key(|(al, _)| al.iter().sum::<i64>())
            .cloned()
            .unwrap();
        let mut s_theta = WeylElt::identity(rank);
        for r in 0..rank {
            for c in 0..rank {
                s_theta.m[r * rank + c] -= theta_fw[r] * theta_alpha[c];
            }
        }
        rs.pos_roots_alpha = pos.iter().map(|(al, _)| al.clone()).collect();
        rs.pos_roots_fw = pos.iter().map(|(_, fw)| fw.clone()).collect();
        rs.theta_alpha = theta_alpha;
        rs.theta_fw = theta_fw;
        rs.s_theta = s_theta;
        Ok(rs)
    }

    /// Simple reflection s_i, 1-based finite index.
    pub fn simple_reflection(&self, i: usize) -> &WeylElt {
        assert!((1..=self.rank).contains(&i), "simple index out of range");
        &self.simple[i - 1]
    }

    /// Simple root alpha_i in fundamental-weight coordinates (column i of the
    /// Cartan matrix), 1-based.
    pub fn simple_root_fw(&self, i: usize) -> Vec<i64> {
        assert!((1..=self.rank).contains(&i));
        (0..self.rank).map(|k| self.cartan[k][i - 1]).collect()
    }

    /// Simple-root coordinates of a lattice vector given in
    /// fundamental-weight coordinates; panics if the vector is not in the
    /// root lattice.
    pub fn alpha_coords(&self, fw: &[i64]) -> Vec<i64> {
        let n = self.rank;
        let mut out = vec![0i64; n];
        for i in 0..n {
            let mut acc: i128 = 0;
            for j in 0..n {
                acc += self.adjugate[i][j] as i128 * fw[j] as i128;
            }
            assert!(
                acc % self.det as i128 == 0,
                "vector is not in the root lattice"
            );
            out[i] = i64::try_from(acc / self.det as i128).unwrap();
        }
        out
    }

    /// True if the vector lies in the root lattice.
    pub fn in_root_lattice(&self, fw: &[i64]) -> bool {
        let n = self.rank;
        for i in 0..n {
            let mut acc: i128 = 0;
            for j in 0..n {
                acc += self.adjugate[i][j] as i128 * fw[j] as i128;
            }
            if acc % self.det as i128 != 0 {
                return false;
            }
        }
        true
    }

    /// True if `fw` is a root.
    pub fn is_root(&self, fw: &[i64]) -> bool {
        self.pos_roots_fw.iter().any(|r| r[..] == *fw)
            || self
                .pos_roots_fw
                .iter()
                .any(|r| r.iter().zip(fw).all(|(&a, &b)| a == -b))
    }

    /// True if `fw` is a positive root.
    pub fn root_is_positive(&self, fw: &[i64]) -> bool {
        assert!(self.is_root(fw), "not a root");
        let al = self.alpha_coords(fw);
        al.iter().sum::<i64>() > 0
    }

    fn pair_raw(&self, a: &[i64], b: &[i64]) -> i128 {
        let n = self.rank;
        let mut acc: i128 = 0;
        for i in 0..n {
            for j in 0..n {
                acc += a[i] as i128 * self.adjugate[i][j] as i128 * b[j] as i128;
            }
        }
        acc
    }

    /// 2e*(a,b), always an integer for weight-lattice arguments.
    pub fn pairing_x2e(&self, a: &[i64], b: &[i64]) -> i64 {
        let raw = self.pair_raw(a, b) * 2 * self.e as i128;
        assert!(raw % self.det as i128 == 0, "pairing not in (1/2e)Z");
        i64::try_from(raw / self.det as i128).unwrap()
    }

    /// 2*(a,b); panics unless the doubled pairing is an integer.
    pub fn pairing_x2(&self, a: &[i64], b: &[i64]) -> i64 {
        let raw = self.pair_raw(a, b) * 2;
        assert!(raw % self.det as i128 == 0, "pairing not in (1/2)Z");
        i64::try_from(raw / self.det as i128).unwrap()
    }

    /// (a,b); panics unless the pairing is an integer (e.g. one argument in
    /// the root lattice).
    pub fn pairing_int(&self, a: &[i64], b: &[i64]) -> i64 {
        let raw = self.pair_raw(a, b);
        assert!(raw % self.det as i128 == 0, "pairing not an integer");
        i64::try_from(raw / self.det as i128).unwrap()
    }

    /// Affine simple root alpha_i for i in 0..=rank (0 is -theta + delta).
    pub fn affine_simple_root(&self, i: usize) -> AffineRoot {
        if i == 0 {
            AffineRoot {
                finite_fw: self.theta_fw.iter().map(|&c| -c).collect(),
                k: 1,
            }
        } else {
            AffineRoot {
                finite_fw: self.simple_root_fw(i),
                k: 0,
            }
        }
    }

    /// Affine simple reflection s_i for i in 0..=rank as an extended element
    /// (s_0 is the reflection in theta composed with translation by -theta).
    pub fn affine_simple_elt(&self, i: usize) -> ExtAffineElt {
        if i == 0 {
            ExtAffineElt {
                w: self.s_theta.clone(),
                beta: self.theta_fw.iter().map(|&c| -c).collect(),
            }
        } else {
            ExtAffineElt {
                w: self.simple_reflection(i).clone(),
                beta: vec![0; self.rank],
            }
        }
    }

    /// Orbit of a weight under the finite Weyl group.
    pub fn weight_orbit(&self, lambda: &[i64]) -> Vec<Vec<i64>> {
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        seen.insert(lambda.to_vec());
        queue.push_back(lambda.to_vec());
        while let Some(v) = queue.pop_front() {
            for s in &self.simple {
                let img = s.apply(&v);
                if seen.insert(img.clone()) {
                    queue.push_back(img);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// True if the coefficient of alpha_r in the highest root is 1.
    pub fn is_minuscule(&self, r: usize) -> bool {
        assert!((1..=self.rank).contains(&r));
        self.theta_alpha[r - 1] == 1
    }

    /// The length-zero extended element pi_r = y^{omega_r} u_r^{-1}, where
    /// u_r is the shortest Weyl element taking omega_r to an antidominant
    /// weight. Only defined for minuscule nodes.
    pub fn pi_r(&self, r: usize) -> Result<ExtAffineElt> {
        if !self.is_minuscule(r) {
            return Err(Error::Domain(format!(
                "node {r} of {} is not minuscule",
                self.name
            )));
        }
        let mut lambda: Vec<i64> = vec![0; self.rank];
        lambda[r - 1] = 1;
        let mut u = WeylElt::identity(self.rank);
        loop {
            let Some(i) = (0..self.rank).find(|&i| lambda[i] > 0) else {
                break;
            };
            lambda = self.simple[i].apply(&lambda);
            u = self.simple[i].mul(&u);
        }
        Ok(ExtAffineElt {
            w: u.inverse(),
            beta: lambda,
        })
    }

    /// Length of an extended affine element: the number of positive affine
    /// roots it sends to negative ones.
    pub fn ext_length(&self, t: &ExtAffineElt) -> i64 {
        let mut total: i64 = 0;
        for fw in &self.pos_roots_fw {
            for sign in [1i64, -1] {
                let root: Vec<i64> = fw.iter().map(|&c| sign * c).collect();
                let pair = self.pairing_int(&t.beta, &root);
                // Positive affine roots with this finite part: k >= 0 for a
                // positive finite part, k >= 1 for a negative one. The image
                // of (root, k) has delta-coefficient k - (beta, root).
                let k_min = if sign > 0 { 0 } else { 1 };
                let strictly = (pair - k_min).max(0);
                total += strictly;
                // Boundary case k = (beta, root): the image lies in the
                // finite hyperplane, negative iff w(root) is a negative root.
                if pair >= k_min {
                    let img = t.w.apply(&root);
                    if !self.root_is_positive(&img) {
                        total += 1;
                    }
                }
            }
        }
        total
    }

    /// Grading for the semi-infinite order: l(w) + (beta, 2 rho).
    pub fn semiinfinite_length(&self, t: &ExtAffineElt, wt: &WeylTable) -> i64 {
        wt.length(&t.w) as i64 + self.pairing_x2(&t.beta, &self.rho)
    }

    /// True if `lower` is covered by `upper` in the semi-infinite order:
    /// lower = s_{alpha + k delta} * upper for some affine real root, with
    /// the grading dropping by exactly one.
    pub fn semiinfinite_cover(&self, lower: &ExtAffineElt, upper: &ExtAffineElt, wt: &WeylTable) -> bool {
        let z = lower.mul_ext(&upper.inverse(), self);
        // z must be an affine reflection: finite part a root reflection, and
        // translation part an integer multiple of that root.
        let Some((alpha_fw, _alpha_al)) = self.reflection_root(&z.w) else {
            return false;
        };
        let mut k: Option<i64> = None;
        for (idx, &c) in alpha_fw.iter().enumerate() {
            if c != 0 {
                if z.beta[idx] % c != 0 {
                    return false;
                }
                k = Some(z.beta[idx] / c);
                break;
            }
        }
        let Some(k) = k else { return false };
        for idx in 0..self.rank {
            if z.beta[idx] != k * alpha_fw[idx] {
                return false;
            }
        }
        self.semiinfinite_length(lower, wt) == self.semiinfinite_length(upper, wt) - 1
    }

    /// If `w` is the reflection in some positive root, return that root in
    /// both coordinate systems.
    pub fn reflection_root(&self, w: &WeylElt) -> Option<(Vec<i64>, Vec<i64>)> {
        let n = self.rank;
        for (fw, al) in self.pos_roots_fw.iter().zip(&self.pos_roots_alpha) {
            let mut candidate = WeylElt::identity(n);
            for r in 0..n {
                for c in 0..n {
                    candidate.m[r * n + c] -= fw[r] * al[c];
                }
            }
            if candidate == *w {
                return Some((fw.clone(), al.clone()));
            }
        }
        None
    }

    /// Decompose the translation by `nu` as pi * s_{i_1} ... s_{i_l} with pi
    /// of length zero: repeatedly strip the smallest affine right descent.
    pub fn translation_word(&self, nu: &[i64]) -> (ExtAffineElt, Vec<usize>) {
        self.translation_word_pref(nu, false)
    }

    /// Same decomposition stripping the largest descent first; produces a
    /// different reduced word for cross-checking word independence.
    pub fn translation_word_rev(&self, nu: &[i64]) -> (ExtAffineElt, Vec<usize>) {
        self.translation_word_pref(nu, true)
    }

    fn translation_word_pref(&self, nu: &[i64], largest: bool) -> (ExtAffineElt, Vec<usize>) {
        let mut t = ExtAffineElt {
            w: WeylElt::identity(self.rank),
            beta: nu.to_vec(),
        };
        let mut word: VecDeque<usize> = VecDeque::new();
        loop {
            let mut found = None;
            let candidates: Vec<usize> = if largest {
                (0..=self.rank).rev().collect()
            } else {
                (0..=self.rank).collect()
            };
            for i in candidates {
                let img = t.act_affine_root(&self.affine_simple_root(i), self);
                if self.affine_root_is_negative(&img) {
                    found = Some(i);
                    break;
                }
            }
            let Some(i) = found else { break };
            word.push_front(i);
            t = t.mul_ext(&self.affine_simple_elt(i), self);
        }
        debug_assert_eq!(self.ext_length(&t), 0);
        (t, word.into())
    }

    /// True if the affine root is negative: k < 0, or k = 0 with negative
    /// finite part.
    pub fn affine_root_is_negative(&self, r: &AffineRoot) -> bool {
        if r.k != 0 {
            return r.k < 0;
        }
        !self.root_is_positive(&r.finite_fw)
    }

    /// Signs attached to the letters of a translation word: for the k-th
    /// letter, +1 if the prefix before it maps alpha_{i_k} to an affine root
    /// with negative finite part, otherwise -1.
    pub fn epsilon_signs(&self, pi: &ExtAffineElt, word: &[usize]) -> Vec<i64> {
        let mut t = pi.clone();
        let mut signs = Vec::with_capacity(word.len());
        for &i in word {
            let img = t.act_affine_root(&self.affine_simple_root(i), self);
            let neg_finite = !self.root_is_positive(&img.finite_fw);
            signs.push(if neg_finite { 1 } else { -1 });
            t = t.mul_ext(&self.affine_simple_elt(i), self);
        }
        signs
    }
}

impl ExtAffineElt {
    pub fn identity(rank: usize) -> Self {
        ExtAffineElt {
            w: WeylElt::identity(rank),
            beta: vec![0; rank],
        }
    }

    pub fn from_weyl(w: &WeylElt) -> Self {
        let rank = w.n;
        ExtAffineElt {
            w: w.clone(),
            beta: vec![0; rank],
        }
    }

    pub fn translation(beta: &[i64]) -> Self {
        ExtAffineElt {
            w: WeylElt::identity(beta.len()),
            beta: beta.to_vec(),
        }
    }

    /// (w1 y^{b1}) (w2 y^{b2}) = w1 w2 y^{w2^{-1}(b1) + b2}.
    pub fn mul_ext(&self, other: &ExtAffineElt, _rs: &RootSystem) -> ExtAffineElt {
        let w2inv = other.w.inverse();
        let mut beta = w2inv.apply(&self.beta);
        for (b, &o) in beta.iter_mut().zip(&other.beta) {
            *b += o;
        }
        ExtAffineElt {
            w: self.w.mul(&other.w),
            beta,
        }
    }

    pub fn inverse(&self) -> ExtAffineElt {
        let winv = self.w.inverse();
        let beta = self.w.apply(&self.beta).iter().map(|&c| -c).collect();
        ExtAffineElt { w: winv, beta }
    }

    /// Image of an affine root: w y^beta (alpha + k delta) =
    /// w(alpha) + (k - (beta, alpha)) delta.
    pub fn act_affine_root(&self, r: &AffineRoot, rs: &RootSystem) -> AffineRoot {
        AffineRoot {
            finite_fw: self.w.apply(&r.finite_fw),
            k: r.k - rs.pairing_int(&self.beta, &r.finite_fw),
        }
    }
}

/// A full enumeration of the finite Weyl group with canonical reduced words,
/// ordered by length and then lexicographically by word.
pub struct WeylTable {
    pub elements: Vec<WeylElt>,
    pub words: Vec<Vec<usize>>,
    pub names: Vec<String>,
    index: BTreeMap<Vec<i64>, usize>,
}

impl WeylTable {
    pub fn build(rs: &RootSystem) -> Result<WeylTable> {
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: VecDeque<WeylElt> = VecDeque::new();
        let id = WeylElt::identity(rs.rank);
        seen.insert(id.m.clone());
        queue.push_back(id);
        let mut all: Vec<WeylElt> = Vec::new();
        while let Some(w) = queue.pop_front() {
            all.push(w.clone());
            if all.len() > WEYL_CAP {
                return Err(Error::Domain(format!(
                    "Weyl group of {} exceeds the enumeration cap of {WEYL_CAP}; \
                     matrix-level operations are limited to A1-A3, D4, D5",
                    rs.name
                )));
            }
            for i in 1..=rs.rank {
                let img = rs.simple_reflection(i).mul(&w);
                if seen.insert(img.m.clone()) {
                    queue.push_back(img);
                }
            }
        }
        let mut with_words: Vec<(Vec<usize>, WeylElt)> = all
            .into_iter()
            .map(|w| (canonical_word(rs, &w), w))
            .collect();
        with_words.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
        let mut elements = Vec::new();
        let mut words = Vec::new();
        let mut names = Vec::new();
        let mut index = BTreeMap::new();
        for (word, w) in with_words {
            index.insert(w.m.clone(), elements.len());
            names.push(word_name(&word));
            words.push(word);
            elements.push(w);
        }
        Ok(WeylTable {
            elements,
            words,
            names,
            index,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, w: &WeylElt) -> usize {
        *self
            .index
            .get(&w.m)
            .expect("element does not belong to this Weyl group")
    }

    pub fn length(&self, w: &WeylElt) -> usize {
        self.words[self.index_of(w)].len()
    }

    pub fn name(&self, w: &WeylElt) -> &str {
        &self.names[self.index_of(w)]
    }

    pub fn by_name(&self, name: &str) -> Option<&WeylElt> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| &self.elements[i])
    }

    /// Longest element.
    pub fn w0(&self) -> &WeylElt {
        self.elements.last().unwrap()
    }
}

/// Lexicographically smallest reduced word, built by repeatedly stripping the
/// smallest left descent.
pub fn canonical_word(rs: &RootSystem, w: &WeylElt) -> Vec<usize> {
    let mut word = Vec::new();
    let mut cur = w.clone();
    let mut curinv = w.inverse();
    loop {
        let mut found = None;
        for i in 1..=rs.rank {
            let img = curinv.apply(&rs.simple_root_fw(i));
            if !rs.root_is_positive(&img) {
                found = Some(i);
                break;
            }
        }
        let Some(i) = found else { break };
        word.push(i);
        let s = rs.simple_reflection(i);
        cur = s.mul(&cur);
        curinv = curinv.mul(s);
    }
    assert!(cur.is_identity());
    word
}

/// Render a reduced word as "e" or "s1*s2*...".
pub fn word_name(word: &[usize]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter()
            .map(|i| format!("s{i}"))
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Product of the simple reflections named by a word.
pub fn word_to_elt(rs: &RootSystem, word: &[usize]) -> WeylElt {
    let mut w = WeylElt::identity(rs.rank);
    for &i in word {
        w = w.mul(rs.simple_reflection(i));
    }
    w
}

/// Bruhat order on the finite Weyl group, by the first-descent recursion.
pub fn bruhat_le(rs: &RootSystem, u: &WeylElt, w: &WeylElt) -> bool {
    if w.is_identity() {
        return u.is_identity();
    }
    let winv = w.inverse();
    let i = (1..=rs.rank)
        .find(|&i| !rs.root_is_positive(&winv.apply(&rs.simple_root_fw(i))))
        .expect("non-identity element must have a left descent");
    let s = rs.simple_reflection(i);
    let sw = s.mul(w);
    let su = s.mul(u);
    let uinv = u.inverse();
    let u_descends = !rs.root_is_positive(&uinv.apply(&rs.simple_root_fw(i)));
    if u_descends {
        bruhat_le(rs, &su, &sw)
    } else {
        bruhat_le(rs, u, &sw)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(name: &str) -> RootSystem {
        RootSystem::new(name).unwrap()
    }

    #[test]
    fn invariants_for_all_types() {
        // (type, det, e, number of positive roots, 2*(theta, rho))
        let table = [
            ("A1", 2, 4, 1, 2),
            ("A2", 3, 6, 3, 4),
            ("A3", 4, 8, 6, 6),
            ("D4", 4, 4, 12, 10),
            ("D5", 4, 8, 20, 14),
            ("E6", 3, 6, 36, 22),
            ("E7", 2, 4, 63, 34),
            ("E8", 1, 2, 120, 58),
        ];
        for (name, det, e, npos, ttr) in table {
            let r = rs(name);
            assert_eq!(r.det, det, "{name} det");
            assert_eq!(r.e, e, "{name} e");
            assert_eq!(r.pos_roots_fw.len(), npos, "{name} positive roots");
            assert_eq!(r.pairing_x2(&r.theta_fw, &r.rho), ttr, "{name} (theta, 2rho)");
            // Every root has squared length 2.
            for fw in &r.pos_roots_fw {
                assert_eq!(r.pairing_x2(fw, fw), 4, "{name} root norm");
            }
            // s_theta is an involution fixing the theta-orthogonal complement.
            let st2 = r.s_theta.mul(&r.s_theta);
            assert!(st2.is_identity(), "{name} s_theta^2");
            assert_eq!(
                r.s_theta.apply(&r.theta_fw),
                r.theta_fw.iter().map(|&c| -c).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn highest_roots() {
        assert_eq!(rs("A1").theta_fw, vec![2]);
        assert_eq!(rs("A2").theta_fw, vec![1, 1]);
        assert_eq!(rs("A3").theta_fw, vec![1, 0, 1]);
        assert_eq!(rs("D4").theta_fw, vec![0, 1, 0, 0]);
        assert_eq!(rs("D4").theta_alpha, vec![1, 2, 1, 1]);
        assert_eq!(rs("E7").theta_alpha, vec![2, 2, 3, 4, 3, 2, 1]);
        assert_eq!(rs("E8").theta_alpha, vec![2, 3, 4, 6, 5, 4, 3, 2]);
    }

    #[test]
    fn minuscule_nodes() {
        let a2 = rs("A2");
        assert!(a2.is_minuscule(1) && a2.is_minuscule(2));
        let d4 = rs("D4");
        assert!(d4.is_minuscule(1) && !d4.is_minuscule(2) && d4.is_minuscule(3) && d4.is_minuscule(4));
        let e8 = rs("E8");
        assert!((1..=8).all(|r| !e8.is_minuscule(r)));
    }

    #[test]
    fn weyl_tables_small_ranks() {
        let a1 = rs("A1");
        let t1 = WeylTable::build(&a1).unwrap();
        assert_eq!(t1.len(), 2);
        assert_eq!(t1.names, vec!["e", "s1"]);

        let a2 = rs("A2");
        let t2 = WeylTable::build(&a2).unwrap();
        assert_eq!(
            t2.names,
            vec!["e", "s1", "s2", "s1*s2", "s2*s1", "s1*s2*s1"]
        );
        assert_eq!(t2.w0().apply(&[1, 0]), vec![0, -1]);

        let a3 = rs("A3");
        let t3 = WeylTable::build(&a3).unwrap();
        assert_eq!(t3.len(), 24);
        let first_words: Vec<Vec<usize>> = t3.words.iter().take(8).cloned().collect();
        assert_eq!(
            first_words,
            vec![
                vec![],
                vec![1],
                vec![2],
                vec![3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 1],
                vec![2, 3]
            ]
        );
        assert_eq!(t3.words.last().unwrap(), &vec![1, 2, 1, 3, 2, 1]);

        assert_eq!(WeylTable::build(&rs("D4")).unwrap().len(), 192);
        assert_eq!(WeylTable::build(&rs("D5")).unwrap().len(), 1920);
        assert!(matches!(
            WeylTable::build(&rs("E6")),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn inverse_round_trip() {
        let a3 = rs("A3");
        let t3 = WeylTable::build(&a3).unwrap();
        for w in &t3.elements {
            assert!(w.mul(&w.inverse()).is_identity());
        }
    }

    #[test]
    fn affine_action_examples() {
        let a1 = rs("A1");
        let s0 = a1.affine_simple_elt(0);
        // s_0(alpha_1) = -alpha + 2 delta.
        let img = s0.act_affine_root(&a1.affine_simple_root(1), &a1);
        assert_eq!(img.finite_fw, vec![-2]);
        assert_eq!(img.k, 2);
        // s_0^2 = identity.
        let sq = s0.mul_ext(&s0, &a1);
        assert_eq!(sq, ExtAffineElt::identity(1));
    }

    #[test]
    fn ext_length_and_semiinfinite_grading() {
        let a1 = rs("A1");
        let wt = WeylTable::build(&a1).unwrap();
        let s0 = a1.affine_simple_elt(0);
        let s1 = a1.affine_simple_elt(1);
        assert_eq!(a1.ext_length(&s0), 1);
        assert_eq!(a1.ext_length(&s1), 1);
        assert_eq!(a1.ext_length(&ExtAffineElt::translation(&[2])), 2);
        let (pi, w) = a1.translation_word(&[1]);
        assert_eq!(a1.ext_length(&pi), 0);
        assert_eq!(w, vec![1]);

        assert_eq!(a1.semiinfinite_length(&ExtAffineElt::identity(1), &wt), 0);
        assert_eq!(a1.semiinfinite_length(&s1, &wt), 1);
        assert_eq!(a1.semiinfinite_length(&s0, &wt), -1);
    }

    #[test]
    fn semiinfinite_covers() {
        let a1 = rs("A1");
        let wt = WeylTable::build(&a1).unwrap();
        let e = ExtAffineElt::identity(1);
        let s0 = a1.affine_simple_elt(0);
        let s1 = a1.affine_simple_elt(1);
        assert!(a1.semiinfinite_cover(&s0, &e, &wt));
        assert!(a1.semiinfinite_cover(&e, &s1, &wt));
        assert!(!a1.semiinfinite_cover(&s1, &e, &wt));
        assert!(!a1.semiinfinite_cover(&s0, &s1, &wt));
    }

    #[test]
    fn translation_words_rank1() {
        let a1 = rs("A1");
        let pi1 = a1.pi_r(1).unwrap();
        assert_eq!(pi1.w, a1.simple_reflection(1).clone());
        assert_eq!(pi1.beta, vec![-1]);

        let cases: [(&[i64], bool, Vec<usize>, Vec<i64>); 4] = [
            (&[1], true, vec![1], vec![1]),
            (&[-1], true, vec![0], vec![-1]),
            (&[2], false, vec![0, 1], vec![1, 1]),
            (&[-2], false, vec![1, 0], vec![-1, -1]),
        ];
        for (nu, is_pi, word, signs) in cases {
            let (pi, w) = a1.translation_word(nu);
            if is_pi {
                assert_eq!(pi, pi1, "nu={nu:?}");
            } else {
                assert_eq!(pi, ExtAffineElt::identity(1), "nu={nu:?}");
            }
            assert_eq!(w, word, "nu={nu:?}");
            assert_eq!(a1.epsilon_signs(&pi, &w), signs, "nu={nu:?}");
        }
    }

    #[test]
    fn translation_words_rank2() {
        let a2 = rs("A2");
        let pi1 = a2.pi_r(1).unwrap();
        let pi2 = a2.pi_r(2).unwrap();
        assert_eq!(pi1.w, word_to_elt(&a2, &[1, 2]));
        assert_eq!(pi1.beta, vec![0, -1]);
        assert_eq!(pi2.w, word_to_elt(&a2, &[2, 1]));
        assert_eq!(pi2.beta, vec![-1, 0]);

        let cases: [(&[i64], Option<usize>, Vec<usize>, Vec<i64>); 7] = [
            (&[1, 0], Some(1), vec![2, 1], vec![1, 1]),
            (&[-1, 1], Some(1), vec![0, 2], vec![-1, 1]),
            (&[0, -1], Some(1), vec![1, 0], vec![-1, -1]),
            (&[0, 1], Some(2), vec![1, 2], vec![1, 1]),
            (&[1, -1], Some(2), vec![0, 1], vec![-1, 1]),
            (&[-1, 0], Some(2), vec![2, 0], vec![-1, -1]),
            (&[2, -1], None, vec![0, 2, 0, 1], vec![1, 1, -1, 1]),
        ];
        for (nu, which, word, signs) in cases {
            let (pi, w) = a2.translation_word(nu);
            match which {
                Some(1) => assert_eq!(pi, pi1, "nu={nu:?}"),
                Some(2) => assert_eq!(pi, pi2, "nu={nu:?}"),
                _ => assert_eq!(pi, ExtAffineElt::identity(2), "nu={nu:?}"),
            }
            assert_eq!(w, word, "nu={nu:?}");
            assert_eq!(a2.epsilon_signs(&pi, &w), signs, "nu={nu:?}");
        }
    }

    #[test]
    fn translation_words_rank3() {
        let a3 = rs("A3");
        let pi1 = a3.pi_r(1).unwrap();
        let pi2 = a3.pi_r(2).unwrap();
        let pi3 = a3.pi_r(3).unwrap();
        assert_eq!(pi1.w.m, vec![-1, -1, -1, 1, 0, 0, 0, 1, 0]);
        assert_eq!(pi1.beta, vec![0, 0, -1]);
        assert_eq!(pi2.w.m, vec![0, 0, 1, -1, -1, -1, 1, 0, 0]);
        assert_eq!(pi2.beta, vec![0, -1, 0]);
        assert_eq!(pi3.w.m, vec![0, 1, 0, 0, 0, 1, -1, -1, -1]);
        assert_eq!(pi3.beta, vec![-1, 0, 0]);

        let (p, w) = a3.translation_word(&[1, 0, 0]);
        assert_eq!((p, w), (pi1.clone(), vec![3, 2, 1]));
        let (p, w) = a3.translation_word(&[0, 1, 0]);
        assert_eq!((p, w), (pi2.clone(), vec![2, 3, 1, 2]));
        let (p, w) = a3.translation_word(&[0, 0, 1]);
        assert_eq!((p, w), (pi3.clone(), vec![1, 2, 3]));
        let (p, w) = a3.translation_word(&[-1, 0, 0]);
        assert_eq!(p, pi3);
        assert_eq!(w, vec![2, 3, 0]);
        assert_eq!(a3.epsilon_signs(&p, &w), vec![-1, -1, -1]);
    }

    #[test]
    fn bruhat_order_rank2() {
        let a2 = rs("A2");
        let wt = WeylTable::build(&a2).unwrap();
        let e = WeylElt::identity(2);
        let s1 = a2.simple_reflection(1).clone();
        let s2 = a2.simple_reflection(2).clone();
        let w0 = wt.w0().clone();
        for w in &wt.elements {
            assert!(bruhat_le(&a2, &e, w));
            assert!(bruhat_le(&a2, w, &w0));
        }
        assert!(!bruhat_le(&a2, &s1, &s2));
        assert!(!bruhat_le(&a2, &s2, &s1));
        assert!(bruhat_le(&a2, &s1, &s1.mul(&s2)));
        assert!(bruhat_le(&a2, &s2, &s1.mul(&s2)));
    }

    #[test]
    fn weight_orbits() {
        let a2 = rs("A2");
        let orbit = a2.weight_orbit(&[1, 0]);
        assert_eq!(orbit.len(), 3);
        assert!(orbit.contains(&vec![1, 0]));
        assert!(orbit.contains(&vec![-1, 1]));
        assert!(orbit.contains(&vec![0, -1]));
        assert_eq!(a2.weight_orbit(&[1, 1]).len(), 6);
    }
}
