//! Iwahori-Weyl group elements `w = t_ν σ`, their image in the Iwahori-Weyl
//! group of `GL_2n`, extended alcoves, and affine roots.
//!
//! For the orthogonal families everything in the alcove calculus happens in
//! `Z^2n` via `(x_1, …, x_n) ↦ (x_1, …, x_n, −x_n, …, −x_1)`, with indices
//! `1..=2n` and `i* = 2n + 1 − i`. Vectors in that picture are called
//! "embedded" below.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_len, Error, Result};
use crate::rational::{embed, half, rat, to_rat, CochVec, Rat, RatVec};
use crate::root_data::{coroot, Family, GroupCtx};
use crate::signed_weyl::SignedPerm;

/// `t_ν σ`: first apply the linear part `σ`, then translate by `ν`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IWElement {
    translation: CochVec,
    linear: SignedPerm,
}

impl IWElement {
    pub fn new(translation: CochVec, linear: SignedPerm) -> Result<Self> {
        check_len(linear.rank(), translation.len())?;
        Ok(IWElement { translation, linear })
    }

    pub fn identity(n: usize) -> Self {
        IWElement {
            translation: vec![0; n],
            linear: SignedPerm::identity(n),
        }
    }

    pub fn translation_by(nu: CochVec) -> Self {
        let n = nu.len();
        IWElement {
            translation: nu,
            linear: SignedPerm::identity(n),
        }
    }

    pub fn from_linear(linear: SignedPerm) -> Self {
        IWElement {
            translation: vec![0; linear.rank()],
            linear,
        }
    }

    pub fn translation(&self) -> &[i64] {
        &self.translation
    }

    pub fn linear(&self) -> &SignedPerm {
        &self.linear
    }

    pub fn rank(&self) -> usize {
        self.translation.len()
    }

    pub fn is_translation(&self) -> bool {
        self.linear.is_identity()
    }

    pub fn is_identity(&self) -> bool {
        self.is_translation() && self.translation.iter().all(|&x| x == 0)
    }

    /// `t_ν1 σ1 · t_ν2 σ2 = t_{ν1 + σ1(ν2)} σ1σ2`.
    pub fn multiply(&self, other: &IWElement) -> Result<IWElement> {
        check_len(self.rank(), other.rank())?;
        Ok(self.mul(other))
    }

    pub(crate) fn mul(&self, other: &IWElement) -> IWElement {
        let moved = self.linear.act_unchecked(&other.translation);
        IWElement {
            translation: self.translation.iter().zip(&moved).map(|(a, b)| a + b).collect(),
            linear: self.linear.compose_unchecked(&other.linear),
        }
    }

    pub fn inverse(&self) -> IWElement {
        let inv = self.linear.inverse();
        let t = inv.act_unchecked(&self.translation);
        IWElement {
            translation: t.into_iter().map(|x| -x).collect(),
            linear: inv,
        }
    }

    /// `w·x = ν + σ(x)` on rational points.
    pub fn act_rat(&self, x: &[Rat]) -> RatVec {
        self.linear
            .act_unchecked(x)
            .into_iter()
            .zip(&self.translation)
            .map(|(a, &b)| a + rat(b))
            .collect()
    }

    pub fn act_int(&self, x: &[i64]) -> CochVec {
        self.linear
            .act_unchecked(x)
            .into_iter()
            .zip(&self.translation)
            .map(|(a, &b)| a + b)
            .collect()
    }

    /// `w·(num/den)` scaled by `den`.
    #[inline]
    pub(crate) fn act_scaled(&self, num: &[i64], den: i64) -> CochVec {
        let mut out = self.linear.act_unchecked(num);
        for (o, t) in out.iter_mut().zip(&self.translation) {
            *o += t * den;
        }
        out
    }

    /// Canonical text encoding `t=(..) s=[..]`.
    pub fn encode(&self) -> String {
        format!("t={} s={}", crate::rational::fmt_vec(&self.translation), self.linear)
    }
}

impl fmt::Debug for IWElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

impl fmt::Display for IWElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

/// The reflection across the hyperplane `⟨root, x⟩ = d`:
/// `x ↦ x − (⟨root, x⟩ − d)·root∨`.
pub(crate) fn affine_reflection(root: &[i64], d: i64) -> IWElement {
    let n = root.len();
    let co = coroot(root);
    let window = (0..n)
        .map(|k| {
            // s(e_k) = e_k − root_k·root∨ is ±e_j
            let img: Vec<i64> = (0..n)
                .map(|i| i64::from(i == k) - root[k] * co[i])
                .collect();
            let j = img.iter().position(|&v| v != 0).expect("reflection of a basis vector");
            (j as i32 + 1) * img[j] as i32
        })
        .collect();
    let linear = SignedPerm::from_window(window).expect("root reflection is a signed permutation");
    IWElement {
        translation: co.iter().map(|c| c * d).collect(),
        linear,
    }
}

/// Image of an element in `Z^2n ⋊ S_2n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlElement {
    pub translation: CochVec,
    /// `perm[k − 1] = σ(k)` for `k ∈ 1..=2n`.
    pub perm: Vec<usize>,
}

impl GlElement {
    /// `y ↦ translation + σ(y)`, where `σ` moves entry `k` to position `σ(k)`.
    pub fn act(&self, y: &[i64]) -> CochVec {
        let mut out = self.translation.clone();
        for (k, v) in y.iter().enumerate() {
            out[self.perm[k] - 1] += v;
        }
        out
    }

    pub fn act_rat(&self, y: &[Rat]) -> RatVec {
        let mut out = to_rat(&self.translation);
        for (k, v) in y.iter().enumerate() {
            out[self.perm[k] - 1] += v;
        }
        out
    }
}

pub fn embed_gl(ctx: &GroupCtx, w: &IWElement) -> Result<GlElement> {
    ctx.require_orthogonal()?;
    ctx.check_element(w)?;
    Ok(GlElement {
        translation: embed(w.translation()),
        perm: w.linear().to_s2n(),
    })
}

/// `ω_k = (1^(k), 0^(2n−k))`.
pub fn omega_k(n: usize, k: usize) -> CochVec {
    (0..2 * n).map(|i| i64::from(i < k)).collect()
}

/// `a′_k = ((1/2)^(k), 0^(2n−2k), (−1/2)^(k))`, for `0 ≤ k ≤ n`.
pub fn a_prime(n: usize, k: usize) -> RatVec {
    (0..2 * n)
        .map(|i| {
            if i < k {
                half()
            } else if i >= 2 * n - k {
                -half()
            } else {
                rat(0)
            }
        })
        .collect()
}

/// A sequence `v_0, …, v_{2n−1}` in `Z^2n` satisfying the axioms
/// (A1) `v_0 ≤ v_1 ≤ ⋯ ≤ v_2n`, (A2) `Σv_k = Σv_{k−1} + 1`, and
/// (A3) `v_k + v*_{2n−k} = 1`, with `v_2n := v_0 + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExtendedAlcove {
    vs: Vec<CochVec>,
}

impl ExtendedAlcove {
    /// Validates all three axioms.
    pub fn new(vs: Vec<CochVec>) -> Result<Self> {
        let m = vs.len();
        if m < 2 || !m.is_multiple_of(2) {
            return Err(Error::InvalidAlcove {
                axiom: "shape",
                detail: format!("expected 2n vectors, got {m}"),
            });
        }
        for v in &vs {
            if v.len() != m {
                return Err(Error::InvalidAlcove {
                    axiom: "shape",
                    detail: format!("vector of length {} in an alcove of {} vectors", v.len(), m),
                });
            }
        }
        let alc = ExtendedAlcove { vs };
        let full: Vec<CochVec> = (0..=m).map(|k| alc.v(k)).collect();
        for k in 1..=m {
            if full[k - 1].iter().zip(&full[k]).any(|(a, b)| a > b) {
                return Err(Error::InvalidAlcove {
                    axiom: "A1",
                    detail: format!("v_{} ≰ v_{}", k - 1, k),
                });
            }
        }
        for k in 1..=m {
            let s0: i64 = full[k - 1].iter().sum();
            let s1: i64 = full[k].iter().sum();
            if s1 != s0 + 1 {
                return Err(Error::InvalidAlcove {
                    axiom: "A2",
                    detail: format!("Σv_{k} ≠ Σv_{} + 1", k - 1),
                });
            }
        }
        for k in 0..=m {
            let dual = &full[m - k];
            let ok = (0..m).all(|i| full[k][i] + dual[m - 1 - i] == 1);
            if !ok {
                return Err(Error::InvalidAlcove {
                    axiom: "A3",
                    detail: format!("v_{k} + v*_{} ≠ 1", m - k),
                });
            }
        }
        Ok(alc)
    }

    /// The standard extended alcove `ω_0, …, ω_{2n−1}`.
    pub fn standard(n: usize) -> Self {
        ExtendedAlcove {
            vs: (0..2 * n).map(|k| omega_k(n, k)).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.vs.len() / 2
    }

    pub fn vectors(&self) -> &[CochVec] {
        &self.vs
    }

    /// `v_k` for `0 ≤ k ≤ 2n`.
    pub fn v(&self, k: usize) -> CochVec {
        let m = self.vs.len();
        if k == m {
            self.vs[0].iter().map(|x| x + 1).collect()
        } else {
            self.vs[k].clone()
        }
    }
}

/// `v_k = w·ω_k` under the `GL_2n` action.
pub fn to_extended_alcove(ctx: &GroupCtx, w: &IWElement) -> Result<ExtendedAlcove> {
    let g = embed_gl(ctx, w)?;
    let n = ctx.rank();
    Ok(ExtendedAlcove {
        vs: (0..2 * n).map(|k| g.act(&omega_k(n, k))).collect(),
    })
}

/// The unique element whose extended alcove is `alc`.
pub fn from_extended_alcove(ctx: &GroupCtx, alc: &ExtendedAlcove) -> Result<IWElement> {
    ctx.require_orthogonal()?;
    let n = ctx.rank();
    check_len(n, alc.rank())?;
    let m = 2 * n;
    let mut perm = Vec::with_capacity(m);
    for k in 1..=m {
        let diff: CochVec = alc.v(k).iter().zip(&alc.v(k - 1)).map(|(a, b)| a - b).collect();
        let pos = diff.iter().position(|&x| x == 1);
        match pos {
            Some(p) if diff.iter().filter(|&&x| x != 0).count() == 1 => perm.push(p + 1),
            _ => {
                return Err(Error::InvalidAlcove {
                    axiom: "A1/A2",
                    detail: format!("v_{k} − v_{} is not a basis vector", k - 1),
                })
            }
        }
    }
    let linear = SignedPerm::from_s2n(&perm).map_err(|_| Error::InvalidAlcove {
        axiom: "A3",
        detail: "steps do not form an element of S*_2n".into(),
    })?;
    let v0 = alc.v(0);
    let translation = v0[..n].to_vec();
    if embed(&translation) != v0 {
        return Err(Error::InvalidAlcove {
            axiom: "A3",
            detail: "v_0 is not in the image of Z^n".into(),
        });
    }
    IWElement::new(translation, linear)
}

/// `μ_k = v_k − ω_k` for `0 ≤ k ≤ 2n`.
pub fn mu_vectors(ctx: &GroupCtx, w: &IWElement) -> Result<Vec<CochVec>> {
    let alc = to_extended_alcove(ctx, w)?;
    let n = ctx.rank();
    Ok((0..=2 * n)
        .map(|k| {
            let om = if k == 2 * n { vec![1; 2 * n] } else { omega_k(n, k) };
            alc.v(k).iter().zip(&om).map(|(a, b)| a - b).collect()
        })
        .collect())
}

/// `ν_k = (μ_k + μ_{2n−k})/2` for `0 ≤ k ≤ n`, embedded.
pub fn nu_vectors(ctx: &GroupCtx, w: &IWElement) -> Result<Vec<RatVec>> {
    let mus = mu_vectors(ctx, w)?;
    Ok(nu_from_mu(ctx.rank(), &mus))
}

pub(crate) fn nu_from_mu(n: usize, mus: &[CochVec]) -> Vec<RatVec> {
    (0..=n)
        .map(|k| {
            mus[k]
                .iter()
                .zip(&mus[2 * n - k])
                .map(|(a, b)| Rat::new(a + b, 2))
                .collect()
        })
        .collect()
}

/// `A_k = {1, …, k, k*, …, 2n}` (1-based).
pub fn index_set_a(n: usize, k: usize) -> Vec<usize> {
    let ks = 2 * n + 1 - k;
    (1..=k).chain(ks..=2 * n).collect()
}

/// `B_k = {k + 1, …, 2n − k}` (1-based).
pub fn index_set_b(n: usize, k: usize) -> Vec<usize> {
    (k + 1..=2 * n - k).collect()
}

/// Checks `−1 ≤ μ_k(i) + μ_k(i*) ≤ 0` on `A_k` and `0 ≤ μ_k(i) + μ_k(i*) ≤ 1`
/// on `B_k` for every `0 ≤ k ≤ n`. Holds for every element.
pub fn basic_inequalities_hold(ctx: &GroupCtx, w: &IWElement) -> Result<bool> {
    let mus = mu_vectors(ctx, w)?;
    let n = ctx.rank();
    let m = 2 * n;
    for (k, mu) in mus.iter().enumerate().take(n + 1) {
        let s = |i: usize| mu[i - 1] + mu[m - i];
        if !index_set_a(n, k).into_iter().all(|i| (-1..=0).contains(&s(i))) {
            return Ok(false);
        }
        if !index_set_b(n, k).into_iter().all(|i| (0..=1).contains(&s(i))) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Shape of an affine root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootForm {
    /// `x_i − x_j − d` on embedded vectors, `1 ≤ i < j ≤ 2n`, `j ≠ i*`,
    /// normalized so that `i + j ≤ 2n`.
    Long { i: usize, j: usize },
    /// `x_i − d` on `Z^n`, `1 ≤ i ≤ n` (short roots of type B only).
    Short { i: usize },
}

/// An affine root of an orthogonal group: a linear part plus an integer
/// offset `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineRoot {
    rank: usize,
    form: RootForm,
    d: i64,
}

impl AffineRoot {
    /// `α̃_{i,j;d}`, normalized via `α̃_{i,j;d} = α̃_{j*,i*;d}`.
    pub fn long(rank: usize, i: usize, j: usize, d: i64) -> Result<Self> {
        let m = 2 * rank;
        if !(1 <= i && i < j && j <= m) {
            return Err(Error::InvalidAffineRoot(format!(
                "need 1 ≤ i < j ≤ {m}, got i={i}, j={j}"
            )));
        }
        if i + j == m + 1 {
            return Err(Error::InvalidAffineRoot(format!("j = i* (i={i}, j={j})")));
        }
        let (i, j) = if i + j > m + 1 { (m + 1 - j, m + 1 - i) } else { (i, j) };
        Ok(AffineRoot {
            rank,
            form: RootForm::Long { i, j },
            d,
        })
    }

    pub fn short(rank: usize, i: usize, d: i64) -> Result<Self> {
        if !(1 <= i && i <= rank) {
            return Err(Error::InvalidAffineRoot(format!("need 1 ≤ i ≤ {rank}, got {i}")));
        }
        Ok(AffineRoot {
            rank,
            form: RootForm::Short { i },
            d,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn form(&self) -> RootForm {
        self.form
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// `(i, j)` for long roots.
    pub fn indices(&self) -> (usize, usize) {
        match self.form {
            RootForm::Long { i, j } => (i, j),
            RootForm::Short { i } => (i, 2 * self.rank + 1 - i),
        }
    }

    /// The linear part `α = α̃` with `d = 0`.
    pub fn linear_part(&self) -> AffineRoot {
        AffineRoot { d: 0, ..*self }
    }

    pub fn check_ctx(&self, ctx: &GroupCtx) -> Result<()> {
        ctx.require_orthogonal()?;
        check_len(ctx.rank(), self.rank)?;
        if matches!(self.form, RootForm::Short { .. }) && ctx.family() != Family::B {
            return Err(Error::InvalidAffineRoot("short roots exist only in type B".into()));
        }
        Ok(())
    }

    /// Coefficients of the linear part on embedded vectors.
    pub fn coeffs_embedded(&self) -> RatVec {
        let m = 2 * self.rank;
        let mut c = vec![rat(0); m];
        match self.form {
            RootForm::Long { i, j } => {
                c[i - 1] += rat(1);
                c[j - 1] -= rat(1);
            }
            RootForm::Short { i } => {
                c[i - 1] += half();
                c[m - i] -= half();
            }
        }
        c
    }

    /// Coefficients of the linear part on `Z^n`.
    pub fn coeffs(&self) -> CochVec {
        let n = self.rank;
        let mut c = vec![0; n];
        let mut add = |k: usize, s: i64| {
            if k <= n {
                c[k - 1] += s;
            } else {
                c[2 * n - k] -= s;
            }
        };
        match self.form {
            RootForm::Long { i, j } => {
                add(i, 1);
                add(j, -1);
            }
            RootForm::Short { i } => add(i, 1),
        }
        c
    }

    /// `α∨` on embedded vectors (`e_i − e_j + e_{j*} − e_{i*}` for long roots).
    pub fn coroot_embedded(&self) -> CochVec {
        embed(&self.coroot())
    }

    /// `α∨` on `Z^n`.
    pub fn coroot(&self) -> CochVec {
        coroot(&self.coeffs())
    }

    /// `⟨α̃, p⟩` for an embedded point `p ∈ Q^2n`.
    pub fn pairing(&self, p: &[Rat]) -> Rat {
        self.coeffs_embedded()
            .iter()
            .zip(p)
            .map(|(c, x)| c * x)
            .sum::<Rat>()
            - rat(self.d)
    }

    /// `⟨α̃, x⟩` for a point `x ∈ Q^n`.
    pub fn pairing_n(&self, x: &[Rat]) -> Rat {
        crate::rational::dot(&self.coeffs(), x) - rat(self.d)
    }

    /// `s_α̃ x = x − ⟨α̃, x⟩ α∨`, as an element of the affine Weyl group.
    pub fn reflection(&self) -> IWElement {
        affine_reflection(&self.coeffs(), self.d)
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.form {
            RootForm::Long { i, j } => write!(f, "α({},{};{})", i, j, self.d),
            RootForm::Short { i } => write!(f, "α({};{})", i, self.d),
        }
    }
}
