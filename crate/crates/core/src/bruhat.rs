//! Length, reduced words, the `W_a ⋊ Ω` decomposition and the Bruhat order.
//!
//! Letters of a reduced word index into [`GroupCtx::walls`]. All sign tests
//! are exact: the barycenter of the base alcove is kept as integer
//! numerators over a common denominator, so `w` applied to it stays integral.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::guard::Guards;
use crate::iwahori_weyl::IWElement;
use crate::root_data::{Family, GroupCtx};

/// `x = s_{letters[0]} ⋯ s_{letters[k−1]}`, with the source element `x·omega`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedWord {
    pub letters: Vec<usize>,
    pub omega: IWElement,
}

/// Image of `w` in `W̃ / W_a`. Two elements share a `W_a`-coset iff their
/// invariants agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CosetInvariant {
    /// Coordinate sum (type A).
    Sum(i64),
    /// Coordinate sum mod 2 (type B).
    SumParity(u8),
    /// Type C has a trivial quotient.
    Trivial,
    /// Coordinate sum mod 2 and the parity of the linear part (type D).
    SumAndSign(u8, u8),
}

pub fn coset_invariant(ctx: &GroupCtx, w: &IWElement) -> Result<CosetInvariant> {
    ctx.check_element(w)?;
    let sum: i64 = w.translation().iter().sum();
    let parity = sum.rem_euclid(2) as u8;
    Ok(match ctx.family() {
        Family::A => CosetInvariant::Sum(sum),
        Family::B => CosetInvariant::SumParity(parity),
        Family::C => CosetInvariant::Trivial,
        Family::D => CosetInvariant::SumAndSign(parity, (w.linear().sign_flips() % 2) as u8),
    })
}

pub fn same_wa_coset(ctx: &GroupCtx, w1: &IWElement, w2: &IWElement) -> Result<bool> {
    Ok(coset_invariant(ctx, w1)? == coset_invariant(ctx, w2)?)
}

/// `w` applied to the barycenter, scaled by the barycenter denominator.
#[inline]
fn image_of_barycenter(ctx: &GroupCtx, w: &IWElement) -> Vec<i64> {
    let (num, den) = ctx.barycenter_scaled();
    w.act_scaled(num, den)
}

/// Number of affine root hyperplanes separating the base alcove `A` from `wA`.
pub fn length(ctx: &GroupCtx, w: &IWElement) -> Result<usize> {
    ctx.check_element(w)?;
    Ok(length_unchecked(ctx, w))
}

pub(crate) fn length_unchecked(ctx: &GroupCtx, w: &IWElement) -> usize {
    let p = image_of_barycenter(ctx, w);
    let (_, den) = ctx.barycenter_scaled();
    // 0 < α(b) < 1 for every positive root α, so the hyperplanes α = k
    // crossed on the way to w·b are counted by floor(α(w·b)).
    ctx.positive_roots()
        .iter()
        .map(|a| {
            let v: i64 = a.iter().zip(&p).map(|(c, x)| c * x).sum();
            v.div_euclid(den).unsigned_abs() as usize
        })
        .sum()
}

/// Walls `s` with `ℓ(s·w) < ℓ(w)`, in wall order.
pub fn left_descents(ctx: &GroupCtx, w: &IWElement) -> Result<Vec<usize>> {
    ctx.check_element(w)?;
    Ok(left_descents_unchecked(ctx, w))
}

fn left_descents_unchecked(ctx: &GroupCtx, w: &IWElement) -> Vec<usize> {
    let p = image_of_barycenter(ctx, w);
    let (_, den) = ctx.barycenter_scaled();
    ctx.walls()
        .iter()
        .enumerate()
        .filter(|(_, wall)| wall.eval_scaled(&p, den) < 0)
        .map(|(i, _)| i)
        .collect()
}

fn first_left_descent(ctx: &GroupCtx, w: &IWElement) -> Option<usize> {
    let p = image_of_barycenter(ctx, w);
    let (_, den) = ctx.barycenter_scaled();
    ctx.walls().iter().position(|wall| wall.eval_scaled(&p, den) < 0)
}

fn is_left_descent(ctx: &GroupCtx, w: &IWElement, s: usize) -> bool {
    let p = image_of_barycenter(ctx, w);
    let (_, den) = ctx.barycenter_scaled();
    ctx.walls()[s].eval_scaled(&p, den) < 0
}

/// Walls `s` with `ℓ(w·s) < ℓ(w)`.
pub fn right_descents(ctx: &GroupCtx, w: &IWElement) -> Result<Vec<usize>> {
    ctx.check_element(w)?;
    let inv = w.inverse();
    Ok(left_descents_unchecked(ctx, &inv))
}

/// Writes `w = s_{i1} ⋯ s_{ik} · ω` with `k = ℓ(w)` and `ω` of length zero.
pub fn omega_decompose(ctx: &GroupCtx, w: &IWElement) -> Result<ReducedWord> {
    ctx.check_element(w)?;
    let bound = length_unchecked(ctx, w);
    let mut letters = Vec::with_capacity(bound);
    let mut cur = w.clone();
    while let Some(s) = first_left_descent(ctx, &cur) {
        if letters.len() >= bound {
            return Err(Error::Internal(format!("descent stripping of {w} did not terminate")));
        }
        cur = ctx.walls()[s].reflection.mul(&cur);
        letters.push(s);
    }
    Ok(ReducedWord { letters, omega: cur })
}

/// `s_{letters[0]} ⋯ s_{letters[k−1]} · omega`.
pub fn evaluate(ctx: &GroupCtx, word: &ReducedWord) -> Result<IWElement> {
    ctx.check_element(&word.omega)?;
    let walls = ctx.walls();
    let mut out = word.omega.clone();
    for &s in word.letters.iter().rev() {
        let wall = walls
            .get(s)
            .ok_or_else(|| Error::Parse(format!("letter {s} out of range (0..{})", walls.len())))?;
        out = wall.reflection.mul(&out);
    }
    Ok(out)
}

/// Length-zero part `ω` of `w = xω`.
pub fn omega_part(ctx: &GroupCtx, w: &IWElement) -> Result<IWElement> {
    Ok(omega_decompose(ctx, w)?.omega)
}

/// Bruhat order on `W̃ = W_a ⋊ Ω`.
pub fn leq(ctx: &GroupCtx, w: &IWElement, v: &IWElement) -> Result<bool> {
    if !same_wa_coset(ctx, w, v)? {
        return Ok(false);
    }
    Ok(leq_same_coset(ctx, w, v))
}

/// Descent recursion: for a left descent `s` of `v`,
/// `w ≤ v ⇔ min(w, sw) ≤ sv`.
pub(crate) fn leq_same_coset(ctx: &GroupCtx, w: &IWElement, v: &IWElement) -> bool {
    let mut lw = length_unchecked(ctx, w);
    let mut lv = length_unchecked(ctx, v);
    let mut w = w.clone();
    let mut v = v.clone();
    loop {
        if lw > lv {
            return false;
        }
        if lw == lv {
            return w == v;
        }
        if lw == 0 {
            // w is the ω of the coset and every element of it lies above ω.
            return true;
        }
        let s = match first_left_descent(ctx, &v) {
            Some(s) => s,
            None => return false,
        };
        let r = &ctx.walls()[s].reflection;
        v = r.mul(&v);
        lv -= 1;
        if is_left_descent(ctx, &w, s) {
            w = r.mul(&w);
            lw -= 1;
        }
    }
}

/// Elements of the `W_a`-coset of `coset_rep` with length at most `maxlen`.
pub fn ball(ctx: &GroupCtx, maxlen: usize, coset_rep: &IWElement, guards: &Guards) -> Result<HashSet<IWElement>> {
    guards.check("ball length", maxlen, guards.ball_max_len)?;
    let omega = omega_part(ctx, coset_rep)?;
    Ok(ball_layers(ctx, maxlen, omega).into_iter().flatten().collect())
}

/// Layer `k` holds the elements of length exactly `k`.
pub(crate) fn ball_layers(ctx: &GroupCtx, maxlen: usize, omega: IWElement) -> Vec<Vec<IWElement>> {
    let mut layers = vec![vec![omega]];
    for _ in 0..maxlen {
        let last = layers.last().expect("nonempty");
        let mut next = HashSet::new();
        for x in last {
            let p = image_of_barycenter(ctx, x);
            let (_, den) = ctx.barycenter_scaled();
            for wall in ctx.walls() {
                if wall.eval_scaled(&p, den) > 0 {
                    next.insert(wall.reflection.mul(x));
                }
            }
        }
        let mut next: Vec<_> = next.into_iter().collect();
        next.sort();
        layers.push(next);
    }
    layers
}

/// Sorts by length, then by encoding.
pub fn canonical_sort(ctx: &GroupCtx, elems: impl IntoIterator<Item = IWElement>) -> Vec<IWElement> {
    let mut v: Vec<(usize, IWElement)> = elems
        .into_iter()
        .map(|w| (length_unchecked(ctx, &w), w))
        .collect();
    v.sort();
    v.into_iter().map(|(_, w)| w).collect()
}
