//! Slow reference implementations for cross-checking the fast paths.
//!
//! Nothing here shares code with the fast path it checks beyond the group
//! law and the wall list: Bruhat comparison uses the subword property on a
//! fixed reduced word, hull membership uses facet enumeration of the orbit
//! polytope, and length counts separating hyperplanes one by one.

use std::collections::{BTreeSet, HashSet};

use crate::bruhat::{self, omega_decompose};
use crate::error::Result;
use crate::guard::Guards;
use crate::iwahori_weyl::IWElement;
use crate::rational::{rat, to_rat, CochVec, Rat, RatVec};
use crate::root_data::GroupCtx;

/// Bruhat comparison by the subword property: `w ≤ v` iff `w·ω⁻¹` is the
/// product of some subword of a reduced word of `v·ω⁻¹`.
pub fn leq_subword(ctx: &GroupCtx, w: &IWElement, v: &IWElement, guards: &Guards) -> Result<bool> {
    let rv = omega_decompose(ctx, v)?;
    guards.check("subword oracle length", rv.letters.len(), guards.subword_max_len)?;
    let rw = omega_decompose(ctx, w)?;
    if rw.omega != rv.omega {
        return Ok(false);
    }
    let target = w.mul(&rv.omega.inverse());
    Ok(subword_products(ctx, &rv.letters).contains(&target))
}

/// Products of all `2^k` subwords of `letters`.
fn subword_products(ctx: &GroupCtx, letters: &[usize]) -> HashSet<IWElement> {
    let n = ctx.rank();
    let walls = ctx.walls();
    let k = letters.len();
    let mut out = HashSet::new();
    for mask in 0u32..(1 << k) {
        let mut x = IWElement::identity(n);
        for (pos, &s) in letters.iter().enumerate() {
            if mask & (1 << pos) != 0 {
                x = x.mul(&walls[s].reflection);
            }
        }
        out.insert(x);
    }
    out
}

/// `Adm(μ)` from its definition, with every comparison done by
/// [`leq_subword`].
pub fn admissible_bruteforce(ctx: &GroupCtx, mu: &[i64], guards: &Guards) -> Result<BTreeSet<IWElement>> {
    let t_mu = IWElement::translation_by(mu.to_vec());
    let top = bruhat::length(ctx, &t_mu)?;
    guards.check("subword oracle length", top, guards.subword_max_len)?;
    let tops: Vec<IWElement> = ctx
        .weyl_orbit(mu)?
        .into_iter()
        .map(IWElement::translation_by)
        .collect();
    let mut out = BTreeSet::new();
    for w in bruhat::ball(ctx, top, &t_mu, guards)? {
        for t in &tops {
            if leq_subword(ctx, &w, t, guards)? {
                out.insert(w);
                break;
            }
        }
    }
    Ok(out)
}

/// `Perm(μ)` from its definition, with hull membership decided by
/// [`HullOracle`].
pub fn permissible_bruteforce(ctx: &GroupCtx, mu: &[i64], guards: &Guards) -> Result<BTreeSet<IWElement>> {
    let hull = HullOracle::new(ctx, mu, guards)?;
    let t_mu = IWElement::translation_by(mu.to_vec());
    let bound = mu.iter().map(|x| x.abs()).max().unwrap_or(0);
    let n = ctx.rank();
    let mut out = BTreeSet::new();
    let linear = ctx.linear_parts()?;
    let mut nu = vec![-bound; n];
    loop {
        for s in &linear {
            let w = IWElement::new(nu.clone(), s.clone())?;
            if !bruhat::same_wa_coset(ctx, &w, &t_mu)? {
                continue;
            }
            let ok = ctx.vertices().iter().all(|a| {
                let moved: RatVec = w.act_rat(a).iter().zip(a).map(|(x, y)| x - y).collect();
                hull.contains(&moved)
            });
            if ok {
                out.insert(w);
            }
        }
        // odometer over the box [−bound, bound]^n
        let mut i = 0;
        loop {
            if i == n {
                return Ok(out);
            }
            if nu[i] < bound {
                nu[i] += 1;
                break;
            }
            nu[i] = -bound;
            i += 1;
        }
    }
}

/// Number of hyperplanes `α = d` (`α` a positive root, `|d| ≤ dmax`) that
/// strictly separate the barycenter of the base alcove from its image.
pub fn separating_hyperplanes_bruteforce(ctx: &GroupCtx, w: &IWElement, dmax: i64) -> Result<usize> {
    ctx.check_element(w)?;
    let b = ctx.barycenter();
    let wb = w.act_rat(&b);
    let mut count = 0;
    for a in ctx.positive_roots() {
        let x = crate::rational::dot(a, &b);
        let y = crate::rational::dot(a, &wb);
        for d in -dmax..=dmax {
            let d = rat(d);
            if (x < d) != (y < d) {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// `Conv(Wμ)` as an explicit list of facet inequalities, found by testing
/// every hyperplane through affinely independent orbit points.
#[derive(Clone, Debug)]
pub struct HullOracle {
    base: RatVec,
    /// Basis of the directions of the affine hull, in row echelon form.
    basis: Vec<RatVec>,
    /// `(normal, offset)` with `normal·y ≤ offset` on the polytope, in
    /// basis coordinates.
    facets: Vec<(RatVec, Rat)>,
    /// Points in basis coordinates, kept for dimension ≤ 1.
    coords: Vec<RatVec>,
}

impl HullOracle {
    pub fn new(ctx: &GroupCtx, mu: &[i64], guards: &Guards) -> Result<Self> {
        guards.check("hull oracle rank", ctx.rank(), guards.hull_oracle_max_rank)?;
        let pts: Vec<RatVec> = ctx.weyl_orbit(mu)?.iter().map(|p| to_rat(p)).collect();
        let base = pts[0].clone();
        let diffs: Vec<RatVec> = pts.iter().map(|p| sub(p, &base)).collect();
        let basis = row_basis(&diffs);
        let coords: Vec<RatVec> = diffs.iter().map(|d| solve_in_basis(&basis, d).expect("in span")).collect();
        let r = basis.len();
        let mut facets = Vec::new();
        if r >= 2 {
            for subset in combinations(coords.len(), r) {
                let p0 = &coords[subset[0]];
                let rows: Vec<RatVec> = subset[1..].iter().map(|&k| sub(&coords[k], p0)).collect();
                let normal = match null_vector(&rows, r) {
                    Some(v) => v,
                    None => continue,
                };
                let off = dot(&normal, p0);
                let vals: Vec<Rat> = coords.iter().map(|c| dot(&normal, c)).collect();
                if vals.iter().all(|v| *v <= off) {
                    facets.push((normal, off));
                } else if vals.iter().all(|v| *v >= off) {
                    facets.push((normal.iter().map(|x| -x).collect(), -off));
                }
            }
        }
        Ok(HullOracle {
            base,
            basis,
            facets,
            coords,
        })
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        let d = sub(x, &self.base);
        let y = match solve_in_basis(&self.basis, &d) {
            Some(y) => y,
            None => return false,
        };
        match self.basis.len() {
            0 => true,
            1 => {
                let lo = self.coords.iter().map(|c| c[0]).min().expect("nonempty");
                let hi = self.coords.iter().map(|c| c[0]).max().expect("nonempty");
                lo <= y[0] && y[0] <= hi
            }
            _ => self.facets.iter().all(|(nrm, off)| dot(nrm, &y) <= *off),
        }
    }
}

pub fn hull_membership_vertices(ctx: &GroupCtx, mu: &[i64], x: &[Rat], guards: &Guards) -> Result<bool> {
    ctx.check_len(x.len())?;
    Ok(HullOracle::new(ctx, mu, guards)?.contains(x))
}

fn sub(a: &[Rat], b: &[Rat]) -> RatVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// A basis of the row space, in reduced row echelon form.
fn row_basis(rows: &[RatVec]) -> Vec<RatVec> {
    let mut m: Vec<RatVec> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != rat(0)) else {
            continue;
        };
        m.swap(rank, p);
        let lead = m[rank][c];
        for x in m[rank].iter_mut() {
            *x /= lead;
        }
        for r in 0..m.len() {
            if r != rank && m[r][c] != rat(0) {
                let f = m[r][c];
                let pivot = m[rank].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot) {
                    *x -= f * y;
                }
            }
        }
        rank += 1;
    }
    m.truncate(rank);
    m
}

/// Coefficients of `v` in an RREF basis, or `None` if `v` is not in its span.
fn solve_in_basis(basis: &[RatVec], v: &[Rat]) -> Option<RatVec> {
    let mut coeffs = Vec::with_capacity(basis.len());
    let mut rest = v.to_vec();
    for row in basis {
        let c = row.iter().position(|x| *x != rat(0)).expect("nonzero row");
        let k = rest[c];
        for (x, y) in rest.iter_mut().zip(row) {
            *x -= k * y;
        }
        coeffs.push(k);
    }
    if rest.iter().all(|x| *x == rat(0)) {
        Some(coeffs)
    } else {
        None
    }
}

/// A nonzero vector orthogonal to `r − 1` rows of length `r`, if the rows
/// are independent.
fn null_vector(rows: &[RatVec], r: usize) -> Option<RatVec> {
    let b = row_basis(rows);
    if b.len() != r - 1 {
        return None;
    }
    let pivots: Vec<usize> = b
        .iter()
        .map(|row| row.iter().position(|x| *x != rat(0)).expect("nonzero row"))
        .collect();
    let free = (0..r).find(|c| !pivots.contains(c))?;
    let mut v = vec![rat(0); r];
    v[free] = rat(1);
    for (row, &p) in b.iter().zip(&pivots) {
        v[p] = -row[free];
    }
    Some(v)
}

fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut idx: Vec<usize> = (0..k).collect();
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = idx.clone();
        let mut i = k;
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}

/// Grid `{p/den : |p/den| ≤ bound}^n`.
pub fn rational_grid(n: usize, den: i64, bound: i64) -> Vec<RatVec> {
    let vals: Vec<Rat> = (-bound * den..=bound * den).map(|p| Rat::new(p, den)).collect();
    let mut out: Vec<RatVec> = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                vals.iter().map(move |x| {
                    let mut w = v.clone();
                    w.push(*x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Dominant cocharacters with entries in `0..=max_entry`.
pub fn dominant_scan(ctx: &GroupCtx, max_entry: i64) -> Vec<CochVec> {
    let n = ctx.rank();
    let mut out = Vec::new();
    let mut cur = vec![0; n];
    loop {
        if ctx.is_dominant(&cur) {
            out.push(cur.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                out.sort();
                return out;
            }
            if cur[i] < max_entry {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::half;

    fn ctx(s: &str) -> GroupCtx {
        s.parse().unwrap()
    }

    #[test]
    fn subword_trivial_cases() {
        let g = ctx("D:2");
        let guards = Guards::default();
        let t = IWElement::translation_by(vec![1, 0]);
        assert!(leq_subword(&g, &t, &t, &guards).unwrap());
        let s = &g.walls()[0].reflection;
        assert!(leq_subword(&g, &IWElement::identity(2), s, &guards).unwrap());
        assert!(!leq_subword(&g, s, &IWElement::identity(2), &guards).unwrap());
        assert!(!leq_subword(&g, &IWElement::identity(2), &t, &guards).unwrap());
    }

    #[test]
    fn subword_guard() {
        let g = ctx("B:3");
        let t = IWElement::translation_by(vec![2, 2, 2]);
        assert!(leq_subword(&g, &t, &t, &Guards::default()).is_err());
    }

    #[test]
    fn hull_oracle_examples() {
        let guards = Guards::default();
        let d3 = ctx("D:3");
        let h = HullOracle::new(&d3, &[1, 0, 0], &guards).unwrap();
        assert!(h.contains(&to_rat(&[0, 0, -1])));
        assert!(h.contains(&[half(), half(), rat(0)]));
        assert!(!h.contains(&[half(), half(), Rat::new(1, 4)]));
        let a3 = ctx("A:3");
        let h = HullOracle::new(&a3, &[1, 0, 0], &guards).unwrap();
        assert!(h.contains(&[Rat::new(1, 3), Rat::new(1, 3), Rat::new(1, 3)]));
        assert!(!h.contains(&[Rat::new(1, 3), Rat::new(1, 3), Rat::new(1, 4)]));
        let c1 = ctx("C:1");
        let h = HullOracle::new(&c1, &[2], &guards).unwrap();
        assert!(h.contains(&[rat(-2)]));
        assert!(!h.contains(&[Rat::new(9, 4)]));
        let zero = HullOracle::new(&d3, &[0, 0, 0], &guards).unwrap();
        assert!(zero.contains(&to_rat(&[0, 0, 0])));
        assert!(!zero.contains(&[rat(0), rat(0), Rat::new(1, 4)]));
        assert!(HullOracle::new(&ctx("D:5"), &[1, 0, 0, 0, 0], &guards).is_err());
    }

    #[test]
    fn hull_oracle_agrees_on_small_grid() {
        let guards = Guards::default();
        for (c, mu) in [("B:2", vec![2, 1]), ("D:2", vec![1, 1]), ("D:2", vec![2, -1]), ("A:2", vec![2, 0])] {
            let g = ctx(c);
            let h = HullOracle::new(&g, &mu, &guards).unwrap();
            for x in rational_grid(2, 4, 2) {
                assert_eq!(h.contains(&x), g.in_convex_hull(&mu, &x).unwrap(), "{c} {mu:?} {x:?}");
            }
        }
    }

    #[test]
    fn bruteforce_length_matches() {
        for c in ["D:3", "B:2", "C:2", "A:3"] {
            let g = ctx(c);
            for w in bruhat::ball(&g, 5, &IWElement::identity(g.rank()), &Guards::default()).unwrap() {
                assert_eq!(
                    separating_hyperplanes_bruteforce(&g, &w, 4).unwrap(),
                    bruhat::length(&g, &w).unwrap()
                );
            }
        }
    }

    #[test]
    fn combinations_count() {
        assert_eq!(combinations(5, 2).count(), 10);
        assert_eq!(combinations(4, 4).count(), 1);
        assert_eq!(combinations(3, 4).count(), 0);
    }

    #[test]
    fn scan_is_dominant() {
        let b3 = ctx("B:3");
        let s = dominant_scan(&b3, 2);
        assert_eq!(s.len(), 10);
        assert!(s.contains(&vec![2, 1, 1]));
        let a2 = ctx("A:2");
        assert_eq!(dominant_scan(&a2, 2).len(), 6);
    }
}
