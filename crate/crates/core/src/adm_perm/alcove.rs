//! Permissibility for the cocharacter `(1, 0, …, 0)` of the orthogonal
//! families, read off the `μ_k` vectors of an extended alcove, and the two
//! local tests used when walking up by an affine reflection.

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::iwahori_weyl::{mu_vectors, AffineRoot, IWElement};
use crate::rational::{dot, rat, sub, to_rat, Rat, RatVec};
use crate::root_data::{Family, GroupCtx};

use super::is_permissible_def;

/// `(1/2, …, 1/2, 0, …, 0)` with `k` halves, in `R^n`.
pub(crate) fn a_prime_n(n: usize, k: usize) -> RatVec {
    (0..n).map(|i| if i < k { Rat::new(1, 2) } else { rat(0) }).collect()
}

/// `e_a − e_b` with `a ≠ b`.
fn is_root_vector(v: &[i64]) -> bool {
    let plus = v.iter().filter(|&&x| x == 1).count();
    let minus = v.iter().filter(|&&x| x == -1).count();
    let zero = v.iter().filter(|&&x| x == 0).count();
    plus == 1 && minus == 1 && zero == v.len() - 2
}

/// `e_j − e_{j*}` for some `j`.
fn is_embedded_unit(v: &[i64]) -> bool {
    let m = v.len();
    is_root_vector(v) && (0..m).all(|i| v[i] == -v[m - 1 - i])
}

/// Permissibility for `μ = (1, 0, …, 0)` via the `μ_k`: every `μ_k` is
/// `e_a − e_b` or `0`, and `μ_0` (and, in type D, `μ_n`) is `e_j − e_{j*}`.
pub fn is_permissible_alcove(ctx: &GroupCtx, w: &IWElement) -> Result<bool> {
    ctx.require_orthogonal()?;
    let mus = mu_vectors(ctx, w)?;
    let n = ctx.rank();
    if !mus.iter().all(|m| m.iter().all(|&x| x == 0) || is_root_vector(m)) {
        return Ok(false);
    }
    if !is_embedded_unit(&mus[0]) {
        return Ok(false);
    }
    if ctx.family() == Family::D && !is_embedded_unit(&mus[n]) {
        return Ok(false);
    }
    Ok(true)
}

fn require_permissible(ctx: &GroupCtx, w: &IWElement) -> Result<()> {
    if is_permissible_def(ctx, &ctx.standard_mu(), w)? {
        Ok(())
    } else {
        Err(Error::NotPermissible)
    }
}

/// For permissible `w`: whether `wa′_k − a′_k + ⟨α̃, a′_k⟩α∨` lies in the hull
/// for all `0 ≤ k ≤ n`, which decides whether `s_α̃ w` is permissible.
pub fn perm_preserving(ctx: &GroupCtx, w: &IWElement, ar: &AffineRoot) -> Result<bool> {
    ar.check_ctx(ctx)?;
    ctx.check_element(w)?;
    require_permissible(ctx, w)?;
    let n = ctx.rank();
    let mu = ctx.standard_mu();
    let co = to_rat(&ar.coroot());
    for k in 0..=n {
        let a = a_prime_n(n, k);
        let c = ar.pairing_n(&a);
        let v: RatVec = w
            .act_rat(&a)
            .iter()
            .zip(&a)
            .zip(&co)
            .map(|((x, y), z)| x - y + c * z)
            .collect();
        if !ctx.in_convex_hull(&mu, &v)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `w < s_α̃ w`, decided on the points `S` = vertices of the base
/// alcove together with the `a′_k`: for some `v ∈ S`, either
/// (1) `|⟨α, wv − v⟩| < |⟨α, wv − v⟩ + 2⟨α̃, v⟩|`, or
/// (2) `⟨α̃, v⟩ = 0` and `⟨α, wv − v⟩` is nonzero with the sign of `α̃` on `A`.
pub fn bruhat_increases(ctx: &GroupCtx, w: &IWElement, ar: &AffineRoot) -> Result<bool> {
    ar.check_ctx(ctx)?;
    ctx.check_element(w)?;
    let n = ctx.rank();
    let alpha = ar.coeffs();
    let side = ar.pairing_n(&ctx.barycenter());
    let zero = rat(0);
    let mut pts: Vec<RatVec> = ctx.vertices().to_vec();
    pts.extend((0..=n).map(|k| a_prime_n(n, k)));
    let cond1 = pts.iter().any(|v| {
        let p = dot(&alpha, &sub(&w.act_rat(v), v));
        let q = ar.pairing_n(v);
        p.abs() < (p + rat(2) * q).abs()
    });
    if cond1 {
        return Ok(true);
    }
    Ok(pts.iter().any(|v| {
        let p = dot(&alpha, &sub(&w.act_rat(v), v));
        ar.pairing_n(v) == zero && p != zero && (p > zero) == (side > zero)
    }))
}
