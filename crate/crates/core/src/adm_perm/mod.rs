//! μ-admissible and μ-permissible sets.
//!
//! * `Adm(μ) = { w : w ≤ t_μ′ for some μ′ ∈ Wμ }`
//! * `Perm(μ) = { w : w ≡ t_μ mod W_a, and wa − a ∈ Conv(Wμ) for every
//!   vertex a of the base alcove }`
//!
//! The submodules cover the extended-alcove form of permissibility for the
//! orthogonal families, the reflection lift of a permissible element to its
//! translation part, and the odd-to-even fixed-point embedding.

mod alcove;
mod gap;
mod lift;
mod steinberg;

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;
use serde::Serialize;

pub use alcove::{bruhat_increases, is_permissible_alcove, perm_preserving};
pub use gap::{search_gap, GapReport};
pub use lift::{lift_chain, lift_reflection, LiftStep};
pub use steinberg::{check_bruhat_inheritance, odd_perm_implies_even_perm, steinberg_embed, InheritanceReport};

use crate::bruhat::{self, omega_decompose};
use crate::error::Result;
use crate::guard::Guards;
use crate::iwahori_weyl::IWElement;
use crate::rational::{CochVec, RatVec};
use crate::root_data::{Family, GroupCtx};

/// `Adm(μ)`, as the union of the lower Bruhat intervals below each
/// `t_μ′`. Each interval is the set of subword products of a reduced word.
pub fn admissible_set(ctx: &GroupCtx, mu: &[i64], guards: &Guards) -> Result<BTreeSet<IWElement>> {
    translation_length(ctx, mu, guards)?;
    let orbit: Vec<CochVec> = ctx.weyl_orbit(mu)?.into_iter().collect();
    let parts: Vec<Result<HashSet<IWElement>>> = orbit
        .par_iter()
        .map(|m| lower_interval(ctx, &IWElement::translation_by(m.clone())))
        .collect();
    let mut out = BTreeSet::new();
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}

/// `Adm(μ)` by filtering the length-`ℓ(t_μ)` ball of the coset of `t_μ`
/// through [`bruhat::leq`].
pub fn admissible_set_by_ball(ctx: &GroupCtx, mu: &[i64], guards: &Guards) -> Result<BTreeSet<IWElement>> {
    let top = translation_length(ctx, mu, guards)?;
    let t_mu = IWElement::translation_by(mu.to_vec());
    let tops: Vec<IWElement> = ctx
        .weyl_orbit(mu)?
        .into_iter()
        .map(IWElement::translation_by)
        .collect();
    let ball: Vec<IWElement> = bruhat::ball(ctx, top, &t_mu, guards)?.into_iter().collect();
    Ok(ball
        .into_par_iter()
        .filter(|w| tops.iter().any(|t| bruhat::leq_same_coset(ctx, w, t)))
        .collect())
}

fn translation_length(ctx: &GroupCtx, mu: &[i64], guards: &Guards) -> Result<usize> {
    let top = bruhat::length(ctx, &IWElement::translation_by(mu.to_vec()))?;
    guards.check("length of t_μ", top, guards.ball_max_len)?;
    Ok(top)
}

/// `{ x : x ≤ v }`, built right to left: `[e, s·y] = [e, y] ∪ s·[e, y]`.
fn lower_interval(ctx: &GroupCtx, v: &IWElement) -> Result<HashSet<IWElement>> {
    let rw = omega_decompose(ctx, v)?;
    let mut set = HashSet::from([rw.omega]);
    for &s in rw.letters.iter().rev() {
        let r = &ctx.walls()[s].reflection;
        let moved: Vec<IWElement> = set.iter().map(|x| r.mul(x)).collect();
        set.extend(moved);
    }
    Ok(set)
}

/// `wa − a` for every vertex `a` of the base alcove.
pub fn vertex_displacements(ctx: &GroupCtx, w: &IWElement) -> Vec<RatVec> {
    ctx.vertices()
        .iter()
        .map(|a| w.act_rat(a).iter().zip(a).map(|(x, y)| x - y).collect())
        .collect()
}

pub fn is_permissible_def(ctx: &GroupCtx, mu: &[i64], w: &IWElement) -> Result<bool> {
    ctx.check_len(mu.len())?;
    let t_mu = IWElement::translation_by(mu.to_vec());
    if !bruhat::same_wa_coset(ctx, w, &t_mu)? {
        return Ok(false);
    }
    for d in vertex_displacements(ctx, w) {
        if !ctx.in_convex_hull(mu, &d)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Translation parts `ν ∈ Conv(Wμ)` in the coset of `μ`, the only possible
/// translation parts of a permissible element (take `a = 0`).
pub fn candidate_translations(ctx: &GroupCtx, mu: &[i64]) -> Result<Vec<CochVec>> {
    ctx.check_len(mu.len())?;
    let n = ctx.rank();
    let (lo, hi) = match ctx.family() {
        Family::A => (*mu.iter().min().unwrap_or(&0), *mu.iter().max().unwrap_or(&0)),
        _ => {
            let b = mu.iter().map(|x| x.abs()).max().unwrap_or(0);
            (-b, b)
        }
    };
    let mut out = Vec::new();
    let mut nu = vec![lo; n];
    loop {
        let diff: CochVec = nu.iter().zip(mu).map(|(a, b)| a - b).collect();
        if ctx.in_coroot_lattice(&diff)? && ctx.in_convex_hull(mu, &crate::rational::to_rat(&nu))? {
            out.push(nu.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                return Ok(out);
            }
            if nu[i] < hi {
                nu[i] += 1;
                break;
            }
            nu[i] = lo;
            i += 1;
        }
    }
}

/// `Perm(μ)`: candidate translation parts times all linear parts, filtered
/// by [`is_permissible_def`].
pub fn permissible_set(ctx: &GroupCtx, mu: &[i64]) -> Result<BTreeSet<IWElement>> {
    let translations = candidate_translations(ctx, mu)?;
    let linear = ctx.linear_parts()?;
    let found: Result<Vec<Vec<IWElement>>> = translations
        .par_iter()
        .map(|nu| {
            let mut keep = Vec::new();
            for s in &linear {
                let w = IWElement::new(nu.clone(), s.clone())?;
                if is_permissible_def(ctx, mu, &w)? {
                    keep.push(w);
                }
            }
            Ok(keep)
        })
        .collect();
    Ok(found?.into_iter().flatten().collect())
}

/// `Adm(μ)` against `Perm(μ)`.
#[derive(Clone, Debug, Serialize)]
pub struct Comparison {
    pub adm: BTreeSet<IWElement>,
    pub perm: BTreeSet<IWElement>,
    /// `Perm(μ) \ Adm(μ)`.
    pub witnesses: Vec<IWElement>,
    /// `Adm(μ) \ Perm(μ)`; always empty for a correct implementation.
    pub violations: Vec<IWElement>,
}

impl Comparison {
    pub fn equal(&self) -> bool {
        self.adm == self.perm
    }

    pub fn adm_subset(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn compare(ctx: &GroupCtx, mu: &[i64], guards: &Guards) -> Result<Comparison> {
    let adm = admissible_set(ctx, mu, guards)?;
    let perm = permissible_set(ctx, mu)?;
    let witnesses = bruhat::canonical_sort(ctx, perm.difference(&adm).cloned());
    let violations = bruhat::canonical_sort(ctx, adm.difference(&perm).cloned());
    Ok(Comparison {
        adm,
        perm,
        witnesses,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn ctx(s: &str) -> GroupCtx {
        s.parse().unwrap()
    }

    #[test]
    fn zero_cocharacter() {
        let g = Guards::default();
        for c in ["A:2", "B:2", "C:2", "D:3"] {
            let gc = ctx(c);
            let zero = vec![0; gc.rank()];
            let id = BTreeSet::from([IWElement::identity(gc.rank())]);
            assert_eq!(admissible_set(&gc, &zero, &g).unwrap(), id);
            assert_eq!(permissible_set(&gc, &zero).unwrap(), id);
        }
    }

    #[test]
    fn adm_contains_orbit_translations() {
        let g = Guards::default();
        let d3 = ctx("D:3");
        let adm = admissible_set(&d3, &[1, 0, 0], &g).unwrap();
        for m in d3.weyl_orbit(&[1, 0, 0]).unwrap() {
            assert!(adm.contains(&IWElement::translation_by(m)));
        }
    }

    #[test]
    fn permissible_examples() {
        let d3 = ctx("D:3");
        let mu = [1, 0, 0];
        assert!(!is_permissible_def(&d3, &mu, &IWElement::identity(3)).unwrap());
        for m in d3.weyl_orbit(&mu).unwrap() {
            assert!(is_permissible_def(&d3, &mu, &IWElement::translation_by(m)).unwrap());
        }
    }

    #[test]
    fn interval_and_ball_methods_agree() {
        let g = Guards::default();
        for (c, mu) in [
            ("D:2", vec![1, 0]),
            ("D:3", vec![1, 0, 0]),
            ("B:2", vec![1, 0]),
            ("B:2", vec![1, 1]),
            ("C:2", vec![1, 0]),
            ("A:3", vec![1, 1, 0]),
            ("A:3", vec![2, 1, 0]),
        ] {
            let gc = ctx(c);
            assert_eq!(
                admissible_set(&gc, &mu, &g).unwrap(),
                admissible_set_by_ball(&gc, &mu, &g).unwrap(),
                "{c} {mu:?}"
            );
        }
    }

    #[test]
    fn adm_matches_subword_oracle_d2() {
        let g = Guards::default();
        let d2 = ctx("D:2");
        assert_eq!(
            admissible_set(&d2, &[1, 0], &g).unwrap(),
            oracle::admissible_bruteforce(&d2, &[1, 0], &g).unwrap()
        );
    }

    #[test]
    fn perm_matches_hull_oracle() {
        let g = Guards::default();
        for (c, mu) in [("D:2", vec![1, 0]), ("B:2", vec![2, 1]), ("C:2", vec![1, 1]), ("A:3", vec![2, 1, 0])] {
            let gc = ctx(c);
            assert_eq!(
                permissible_set(&gc, &mu).unwrap(),
                oracle::permissible_bruteforce(&gc, &mu, &g).unwrap(),
                "{c} {mu:?}"
            );
        }
    }

    #[test]
    fn adm_equals_perm_for_standard_mu() {
        let g = Guards::default();
        for c in ["D:2", "D:3", "B:2", "B:3"] {
            let gc = ctx(c);
            let cmp = compare(&gc, &gc.standard_mu(), &g).unwrap();
            assert!(cmp.equal(), "{c}");
        }
    }

    #[test]
    fn guard_is_enforced() {
        let b3 = ctx("B:3");
        assert!(admissible_set(&b3, &[2, 2, 2], &Guards::default()).is_err());
    }
}
