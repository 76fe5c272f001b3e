//! Walking a permissible element of type D up to its translation part.
//!
//! For `μ = (1, 0, …, 0)` and a permissible non-translation `w`,
//! [`lift_reflection`] picks an affine root `α̃` with `s_α̃ w` permissible,
//! `w < s_α̃ w`, and the same translation part. The choice follows the
//! `ν_k` vectors of `w`; the result is then checked independently before it
//! is returned.

use crate::bruhat;
use crate::error::{Error, Result};
use crate::iwahori_weyl::{nu_vectors, AffineRoot, IWElement};
use crate::rational::{rat, to_rat, RatVec};
use crate::root_data::{Family, GroupCtx};

use super::alcove::{bruhat_increases, perm_preserving};
use super::is_permissible_def;

/// `after = s_root · before`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftStep {
    pub root: AffineRoot,
    pub before: IWElement,
    pub after: IWElement,
}

pub fn lift_reflection(ctx: &GroupCtx, w: &IWElement) -> Result<AffineRoot> {
    ctx.require(Family::D)?;
    ctx.check_element(w)?;
    if !is_permissible_def(ctx, &ctx.standard_mu(), w)? {
        return Err(Error::NotPermissible);
    }
    if w.is_translation() {
        return Err(Error::TranslationElement);
    }
    let root = choose_root(ctx, w)?;
    verify(ctx, w, &root)?;
    Ok(root)
}

fn choose_root(ctx: &GroupCtx, w: &IWElement) -> Result<AffineRoot> {
    let n = ctx.rank();
    let m = 2 * n;
    let star = |k: usize| m + 1 - k;
    let nu = nu_vectors(ctx, w)?;
    let zero: RatVec = vec![rat(0); m];
    let sigma = w.linear().to_s2n();
    let sig = |k: usize| sigma[k - 1];
    let sig_inv = |k: usize| sigma.iter().position(|&x| x == k).expect("permutation") + 1;

    let i = (1..=n)
        .find(|&k| nu[k] != nu[0])
        .ok_or_else(|| Error::Internal(format!("all ν_k agree for non-translation {w}")))?;
    // ν_0 = e_j − e_{j*}
    let j = nu[0]
        .iter()
        .position(|x| *x == rat(1))
        .map(|p| p + 1)
        .ok_or_else(|| Error::Internal(format!("ν_0 of {w} is not a unit vector")))?;

    if j == i {
        match (i..=n).find(|&r| nu[r] == zero) {
            Some(r) if r == i => AffineRoot::long(n, i, star(i) - 1, 1),
            Some(r) => AffineRoot::long(n, r, r + 1, 0),
            None => AffineRoot::long(n, i, sig_inv(i), 1),
        }
    } else if j == star(sig(i)) {
        AffineRoot::long(n, i, sig(i), 1)
    } else {
        Err(Error::Internal(format!(
            "index j = {j} is neither i = {i} nor σ(i)* = {} for {w}",
            star(sig(i))
        )))
    }
}

fn verify(ctx: &GroupCtx, w: &IWElement, root: &AffineRoot) -> Result<()> {
    if !perm_preserving(ctx, w, root)? {
        return Err(Error::Internal(format!("{root} does not preserve permissibility of {w}")));
    }
    if !bruhat_increases(ctx, w, root)? {
        return Err(Error::Internal(format!("{root} does not raise {w} in the Bruhat order")));
    }
    if root.pairing_n(&to_rat(w.translation())) != rat(0) {
        return Err(Error::Internal(format!("{root} moves the translation part of {w}")));
    }
    Ok(())
}

/// Repeats [`lift_reflection`] until a translation element is reached.
/// The last `after` is `t_ν` for the translation part `ν` of `w`.
pub fn lift_chain(ctx: &GroupCtx, w: &IWElement) -> Result<Vec<LiftStep>> {
    ctx.require(Family::D)?;
    ctx.check_element(w)?;
    if !is_permissible_def(ctx, &ctx.standard_mu(), w)? {
        return Err(Error::NotPermissible);
    }
    let top = bruhat::length(ctx, &IWElement::translation_by(w.translation().to_vec()))?;
    let mut steps = Vec::new();
    let mut cur = w.clone();
    while !cur.is_translation() {
        if steps.len() > top {
            return Err(Error::Internal(format!("lift of {w} exceeded {top} steps")));
        }
        let root = lift_reflection(ctx, &cur)?;
        let after = root.reflection().mul(&cur);
        steps.push(LiftStep {
            root,
            before: cur,
            after: after.clone(),
        });
        cur = after;
    }
    Ok(steps)
}
