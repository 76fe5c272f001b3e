//! The odd orthogonal group of rank `n` as the fixed points of
//! `(x_1, …, x_{n+1}) ↦ (x_1, …, x_n, −x_{n+1})` on the even one of rank
//! `n + 1`.

use crate::bruhat;
use crate::error::{Error, Result};
use crate::guard::Guards;
use crate::iwahori_weyl::IWElement;
use crate::rational::{half, rat, sub, RatVec};
use crate::root_data::{Family, GroupCtx};
use crate::signed_weyl::SignedPerm;

use super::is_permissible_def;

/// `t_ν σ ↦ t_(ν, 0) σ′`, where `σ′` extends the window of `σ` by `±(n + 1)`,
/// positive iff `σ` is even.
pub fn steinberg_embed(w: &IWElement) -> IWElement {
    let n = w.rank();
    let mut t = w.translation().to_vec();
    t.push(0);
    let eta: i32 = if w.linear().is_even_in_s2n() { 1 } else { -1 };
    let mut window = w.linear().window().to_vec();
    window.push(eta * (n as i32 + 1));
    let linear = SignedPerm::from_window(window).expect("extended window is a signed permutation");
    IWElement::new(t, linear).expect("ranks agree")
}

#[derive(Clone, Debug, Default)]
pub struct InheritanceReport {
    pub elements: usize,
    pub pairs: usize,
    /// Pairs `(x, y)` where the two orders disagree.
    pub violations: Vec<(IWElement, IWElement)>,
}

/// Compares the Bruhat order of type `B_n` with that of `D_{n+1}` on the
/// embedded images, over all pairs of elements of length `≤ maxlen`.
pub fn check_bruhat_inheritance(n: usize, maxlen: usize, guards: &Guards) -> Result<InheritanceReport> {
    guards.check("inheritance ball length", maxlen, guards.inheritance_max_len)?;
    let b = GroupCtx::new(Family::B, n)?;
    let d = GroupCtx::new(Family::D, n + 1)?;
    let mut e1 = vec![0; n];
    e1[0] = 1;
    let mut elems = Vec::new();
    for rep in [IWElement::identity(n), IWElement::translation_by(e1)] {
        let omega = bruhat::omega_part(&b, &rep)?;
        elems.extend(bruhat::ball_layers(&b, maxlen, omega).into_iter().flatten());
    }
    let images: Vec<IWElement> = elems.iter().map(steinberg_embed).collect();
    let mut report = InheritanceReport {
        elements: elems.len(),
        ..Default::default()
    };
    for (x, xi) in elems.iter().zip(&images) {
        for (y, yi) in elems.iter().zip(&images) {
            report.pairs += 1;
            if bruhat::leq(&b, x, y)? != bruhat::leq(&d, xi, yi)? {
                report.violations.push((x.clone(), y.clone()));
            }
        }
    }
    Ok(report)
}

/// For `w` permissible in type `B_n` (for `μ = (1, 0, …, 0)`): checks that
/// `w′·½ − ½` lands in the hull, where `w′` is the image of `w`, `½` is the
/// all-halves vector, and the value equals `wa − a` (`σ` even) or
/// `wa − a − e_{n+1}` with `wa − a = 0` (`σ` odd), `a = (½, …, ½, 0)`;
/// then confirms `w′` is permissible in type `D_{n+1}`.
pub fn odd_perm_implies_even_perm(ctx: &GroupCtx, w: &IWElement) -> Result<bool> {
    ctx.require(Family::B)?;
    ctx.check_element(w)?;
    if !is_permissible_def(ctx, &ctx.standard_mu(), w)? {
        return Err(Error::NotPermissible);
    }
    let n = ctx.rank();
    let d = GroupCtx::new(Family::D, n + 1)?;
    let wi = steinberg_embed(w);
    let halves: RatVec = vec![half(); n + 1];
    let value = sub(&wi.act_rat(&halves), &halves);

    let a: RatVec = vec![half(); n];
    let mut predicted = sub(&w.act_rat(&a), &a);
    if w.linear().is_even_in_s2n() {
        predicted.push(rat(0));
    } else {
        if predicted.iter().any(|x| *x != rat(0)) {
            return Ok(false);
        }
        predicted.push(rat(-1));
    }
    if value != predicted {
        return Ok(false);
    }
    let mu = d.standard_mu();
    if !d.in_convex_hull(&mu, &value)? {
        return Ok(false);
    }
    is_permissible_def(&d, &mu, &wi)
}
