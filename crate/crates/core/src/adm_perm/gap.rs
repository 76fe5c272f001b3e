//! Scanning cocharacters for `Perm(μ) ≠ Adm(μ)`.

use crate::error::Result;
use crate::guard::Guards;
use crate::iwahori_weyl::IWElement;
use crate::rational::CochVec;
use crate::root_data::GroupCtx;

use super::compare;

#[derive(Clone, Debug)]
pub struct GapReport {
    pub mu: CochVec,
    pub adm_size: usize,
    pub perm_size: usize,
    /// `Perm(μ) \ Adm(μ)` in canonical order.
    pub witnesses: Vec<IWElement>,
}

/// The cocharacters among `mu_candidates` with a nonempty `Perm(μ) \ Adm(μ)`.
pub fn search_gap(ctx: &GroupCtx, mu_candidates: &[CochVec], guards: &Guards) -> Result<Vec<GapReport>> {
    let mut out = Vec::new();
    for mu in mu_candidates {
        let cmp = compare(ctx, mu, guards)?;
        if !cmp.witnesses.is_empty() {
            out.push(GapReport {
                mu: mu.clone(),
                adm_size: cmp.adm.len(),
                perm_size: cmp.perm.len(),
                witnesses: cmp.witnesses,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn no_gap_for_minuscule() {
        let g = Guards::default();
        for (c, mu) in [
            ("D:3", vec![1, 0, 0]),
            ("B:2", vec![1, 0]),
            ("A:3", vec![1, 1, 0]),
            ("C:2", vec![0, 0]),
        ] {
            let ctx: GroupCtx = c.parse().unwrap();
            assert!(search_gap(&ctx, &[mu], &g).unwrap().is_empty(), "{c}");
        }
    }
}
