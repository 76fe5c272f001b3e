//! Root data of the four classical families and the geometry of their base
//! alcoves.
//!
//! Coordinates are the standard ones on `Z^n`: roots are integer coefficient
//! vectors, cocharacters are integer vectors, and alcove points are exact
//! rational vectors.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{check_len, Error, Result};
use crate::iwahori_weyl::{affine_reflection, IWElement};
use crate::rational::{rat, CochVec, Rat, RatVec};
use crate::signed_weyl::{self, SignedPerm};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// `GL_m`
    A,
    /// `O_{2n+1}` (root system `B_n`)
    B,
    /// `Sp_{2n}` (root system `C_n`)
    C,
    /// `O_{2n}` (root system `D_n`)
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
        };
        f.write_str(s)
    }
}

/// A wall of the base alcove: the affine functional `x ↦ coeffs·x + constant`,
/// nonnegative on the alcove, together with the reflection across it.
#[derive(Clone, Debug)]
pub struct Wall {
    pub coeffs: Vec<i64>,
    pub constant: i64,
    pub reflection: IWElement,
}

impl Wall {
    pub fn eval(&self, x: &[Rat]) -> Rat {
        crate::rational::dot(&self.coeffs, x) + rat(self.constant)
    }

    /// Value at `num / den`, scaled by `den`.
    #[inline]
    pub(crate) fn eval_scaled(&self, num: &[i64], den: i64) -> i64 {
        self.coeffs.iter().zip(num).map(|(c, x)| c * x).sum::<i64>() + self.constant * den
    }
}

/// A classical family at a fixed rank, with its roots and base alcove.
#[derive(Clone, Debug)]
pub struct GroupCtx {
    family: Family,
    rank: usize,
    positive_roots: Vec<Vec<i64>>,
    simple_roots: Vec<Vec<i64>>,
    walls: Vec<Wall>,
    vertices: Vec<RatVec>,
    bary_num: Vec<i64>,
    bary_den: i64,
}

impl PartialEq for GroupCtx {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family && self.rank == other.rank
    }
}

impl Eq for GroupCtx {}

impl fmt::Display for GroupCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.family, self.rank)
    }
}

impl FromStr for GroupCtx {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidCtx(s.to_string());
        let (fam, rank) = s.trim().split_once(':').ok_or_else(bad)?;
        let family = match fam.trim() {
            "A" | "a" => Family::A,
            "B" | "b" => Family::B,
            "C" | "c" => Family::C,
            "D" | "d" => Family::D,
            _ => return Err(bad()),
        };
        let rank: usize = rank.trim().parse().map_err(|_| bad())?;
        GroupCtx::new(family, rank)
    }
}

impl Serialize for GroupCtx {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GroupCtx {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn unit(n: usize, i: usize, c: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = c;
    v
}

fn pair(n: usize, i: usize, j: usize, sj: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v[j] = sj;
    v
}

fn half_vec(n: usize, halves: usize) -> RatVec {
    (0..n)
        .map(|i| if i < halves { Rat::new(1, 2) } else { rat(0) })
        .collect()
}

/// Coroot `2α/(α,α)` of a root given by its coefficient vector.
pub fn coroot(alpha: &[i64]) -> Vec<i64> {
    let norm: i64 = alpha.iter().map(|c| c * c).sum();
    alpha.iter().map(|c| 2 * c / norm).collect()
}

impl GroupCtx {
    /// Ranks: `A` needs `m ≥ 1`, `C` needs `n ≥ 1`, `B` and `D` need `n ≥ 2`.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let min = match family {
            Family::A | Family::C => 1,
            Family::B | Family::D => 2,
        };
        if rank < min {
            return Err(Error::UnsupportedRank {
                family,
                rank,
                reason: "rank below the family minimum",
            });
        }
        if rank > signed_weyl::MAX_ENUMERATE_RANK {
            return Err(Error::UnsupportedRank {
                family,
                rank,
                reason: "rank above 8",
            });
        }
        let n = rank;

        let mut positive_roots = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                positive_roots.push(pair(n, i, j, -1));
                if family != Family::A {
                    positive_roots.push(pair(n, i, j, 1));
                }
            }
            match family {
                Family::B => positive_roots.push(unit(n, i, 1)),
                Family::C => positive_roots.push(unit(n, i, 2)),
                _ => {}
            }
        }

        let mut simple_roots: Vec<Vec<i64>> = (0..n.saturating_sub(1)).map(|i| pair(n, i, i + 1, -1)).collect();
        match family {
            Family::A => {}
            Family::B => simple_roots.push(unit(n, n - 1, 1)),
            Family::C => simple_roots.push(unit(n, n - 1, 2)),
            Family::D => simple_roots.push(pair(n, n - 2, n - 1, 1)),
        }

        // Highest roots θ: each contributes the wall 1 − θ.
        let highest: Vec<Vec<i64>> = match family {
            Family::A if n >= 2 => vec![pair(n, 0, n - 1, -1)],
            Family::A => vec![],
            Family::B => vec![pair(n, 0, 1, 1)],
            Family::C => vec![unit(n, 0, 2)],
            Family::D if n == 2 => vec![pair(n, 0, 1, 1), pair(n, 0, 1, -1)],
            Family::D => vec![pair(n, 0, 1, 1)],
        };

        let mut walls = Vec::new();
        for a in &simple_roots {
            walls.push(Wall {
                coeffs: a.clone(),
                constant: 0,
                reflection: affine_reflection(a, 0),
            });
        }
        for t in &highest {
            walls.push(Wall {
                coeffs: t.iter().map(|c| -c).collect(),
                constant: 1,
                reflection: affine_reflection(t, 1),
            });
        }

        let zero = vec![rat(0); n];
        let e1: RatVec = (0..n).map(|i| rat(if i == 0 { 1 } else { 0 })).collect();
        let vertices: Vec<RatVec> = match family {
            Family::A => (0..n)
                .map(|k| (0..n).map(|i| rat(if i < k { 1 } else { 0 })).collect())
                .collect(),
            Family::B => {
                let mut v = vec![zero, e1];
                for i in 2..=n {
                    v.push(half_vec(n, i));
                }
                v
            }
            Family::C => (0..=n).map(|i| half_vec(n, i)).collect(),
            Family::D => {
                let mut v = vec![zero, e1];
                for i in 2..=n.saturating_sub(2) {
                    v.push(half_vec(n, i));
                }
                v.push(half_vec(n, n));
                let mut last = half_vec(n, n);
                last[n - 1] = Rat::new(-1, 2);
                v.push(last);
                v
            }
        };

        let count = rat(vertices.len() as i64);
        let bary: RatVec = (0..n)
            .map(|i| vertices.iter().map(|v| v[i]).sum::<Rat>() / count)
            .collect();
        let bary_den = bary.iter().fold(1i64, |acc, x| lcm(acc, *x.denom()));
        let bary_num = bary.iter().map(|x| x.numer() * (bary_den / x.denom())).collect();

        Ok(GroupCtx {
            family,
            rank,
            positive_roots,
            simple_roots,
            walls,
            vertices,
            bary_num,
            bary_den,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_orthogonal(&self) -> bool {
        matches!(self.family, Family::B | Family::D)
    }

    pub(crate) fn require_orthogonal(&self) -> Result<()> {
        if self.is_orthogonal() {
            Ok(())
        } else {
            Err(Error::WrongFamily {
                expected: "B or D",
                got: self.family,
            })
        }
    }

    pub(crate) fn require(&self, family: Family) -> Result<()> {
        if self.family == family {
            Ok(())
        } else {
            Err(Error::WrongFamily {
                expected: match family {
                    Family::A => "A",
                    Family::B => "B",
                    Family::C => "C",
                    Family::D => "D",
                },
                got: self.family,
            })
        }
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.simple_roots
    }

    /// Affine simple roots (walls of the base alcove). Letters of reduced
    /// words index into this list.
    pub fn walls(&self) -> &[Wall] {
        &self.walls
    }

    pub fn vertices(&self) -> &[RatVec] {
        &self.vertices
    }

    pub fn barycenter(&self) -> RatVec {
        self.bary_num.iter().map(|&x| Rat::new(x, self.bary_den)).collect()
    }

    /// Barycenter as `(numerators, common denominator)`.
    pub fn barycenter_scaled(&self) -> (&[i64], i64) {
        (&self.bary_num, self.bary_den)
    }

    pub fn check_len(&self, v_len: usize) -> Result<()> {
        check_len(self.rank, v_len)
    }

    /// Rejects elements of the wrong rank or with a linear part outside the
    /// finite Weyl group of the family.
    pub fn check_element(&self, w: &IWElement) -> Result<()> {
        self.check_len(w.rank())?;
        if self.family == Family::A && !w.linear().is_unsigned() {
            return Err(Error::NotInWeylGroup(w.linear().window().to_vec(), self.to_string()));
        }
        Ok(())
    }

    pub fn in_coroot_lattice(&self, v: &[i64]) -> Result<bool> {
        self.check_len(v.len())?;
        let sum: i64 = v.iter().sum();
        Ok(match self.family {
            Family::A => sum == 0,
            Family::B | Family::D => sum % 2 == 0,
            Family::C => true,
        })
    }

    /// The finite Weyl group `W` of the root system (`S°_2n` for type D).
    pub fn weyl_group(&self) -> Result<Vec<SignedPerm>> {
        Ok(match self.family {
            Family::A => signed_weyl::permutations(self.rank)?.collect(),
            Family::B | Family::C => signed_weyl::enumerate(self.rank, false)?.collect(),
            Family::D => signed_weyl::enumerate(self.rank, true)?.collect(),
        })
    }

    /// All linear parts of the Iwahori-Weyl group (`S*_2n` for type D).
    pub fn linear_parts(&self) -> Result<Vec<SignedPerm>> {
        Ok(match self.family {
            Family::A => signed_weyl::permutations(self.rank)?.collect(),
            _ => signed_weyl::enumerate(self.rank, false)?.collect(),
        })
    }

    pub fn weyl_orbit(&self, mu: &[i64]) -> Result<BTreeSet<CochVec>> {
        self.check_len(mu.len())?;
        Ok(self
            .weyl_group()?
            .iter()
            .map(|s| s.act_unchecked(mu))
            .collect())
    }

    /// The dominant vector in the `W`-orbit of `x`.
    pub fn dominant_rep(&self, x: &[Rat]) -> Result<RatVec> {
        self.check_len(x.len())?;
        Ok(self.dominant_unchecked(x))
    }

    fn dominant_unchecked(&self, x: &[Rat]) -> RatVec {
        let zero = rat(0);
        match self.family {
            Family::A => {
                let mut v = x.to_vec();
                v.sort_by(|a, b| b.cmp(a));
                v
            }
            Family::B | Family::C => {
                let mut v: RatVec = x.iter().map(|a| if *a < zero { -a } else { *a }).collect();
                v.sort_by(|a, b| b.cmp(a));
                v
            }
            Family::D => {
                let negatives = x.iter().filter(|a| **a < zero).count();
                let has_zero = x.contains(&zero);
                let mut v: RatVec = x.iter().map(|a| if *a < zero { -a } else { *a }).collect();
                v.sort_by(|a, b| b.cmp(a));
                if !has_zero && negatives % 2 == 1 {
                    let last = v.len() - 1;
                    v[last] = -v[last];
                }
                v
            }
        }
    }

    pub fn is_dominant(&self, mu: &[i64]) -> bool {
        mu.len() == self.rank
            && self
                .simple_roots
                .iter()
                .all(|a| a.iter().zip(mu).map(|(c, x)| c * x).sum::<i64>() >= 0)
    }

    /// `μ⁺ − x⁺` lies in the closed cone spanned by the simple coroots.
    fn dominated_by(&self, x_dom: &[Rat], mu_dom: &[Rat]) -> bool {
        let d: RatVec = mu_dom.iter().zip(x_dom).map(|(m, x)| m - x).collect();
        let n = d.len();
        let zero = rat(0);
        let mut partial = Vec::with_capacity(n);
        let mut acc = zero;
        for v in &d {
            acc += v;
            partial.push(acc);
        }
        match self.family {
            Family::A => partial[n - 1] == zero && partial.iter().all(|s| *s >= zero),
            Family::B | Family::C => partial.iter().all(|s| *s >= zero),
            Family::D => {
                partial[..n - 2].iter().all(|s| *s >= zero)
                    && partial[n - 1] >= zero
                    && partial[n - 2] - d[n - 1] >= zero
            }
        }
    }

    /// Membership of `x` in `Conv(Wμ)`, by the dominance criterion.
    pub fn in_convex_hull(&self, mu: &[i64], x: &[Rat]) -> Result<bool> {
        self.check_len(mu.len())?;
        self.check_len(x.len())?;
        if self.family != Family::A && is_unit_orbit(mu) {
            let total: Rat = x.iter().map(|a| if *a < rat(0) { -a } else { *a }).sum();
            return Ok(total <= rat(1));
        }
        let mu_dom = self.dominant_unchecked(&crate::rational::to_rat(mu));
        let x_dom = self.dominant_unchecked(x);
        Ok(self.dominated_by(&x_dom, &mu_dom))
    }

    /// `⟨α, μ⟩ ∈ {−1, 0, 1}` for every root `α`.
    pub fn is_minuscule(&self, mu: &[i64]) -> Result<bool> {
        self.check_len(mu.len())?;
        Ok(self
            .positive_roots
            .iter()
            .all(|a| a.iter().zip(mu).map(|(c, x)| c * x).sum::<i64>().abs() <= 1))
    }

    /// The Iwahori-Weyl cocharacter `(1, 0, …, 0)`.
    pub fn standard_mu(&self) -> CochVec {
        let mut v = vec![0; self.rank];
        v[0] = 1;
        v
    }
}

/// `μ` is `±e_i` for some `i`.
fn is_unit_orbit(mu: &[i64]) -> bool {
    let nonzero: Vec<_> = mu.iter().filter(|x| **x != 0).collect();
    nonzero.len() == 1 && nonzero[0].abs() == 1
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::to_rat;

    fn ctx(s: &str) -> GroupCtx {
        s.parse().unwrap()
    }

    fn r(v: &[(i64, i64)]) -> RatVec {
        v.iter().map(|&(a, b)| Rat::new(a, b)).collect()
    }

    #[test]
    fn parse_and_display() {
        for s in ["D:4", "B:3", "A:5", "C:3"] {
            assert_eq!(ctx(s).to_string(), s);
        }
        assert!("E:6".parse::<GroupCtx>().is_err());
        assert!("D".parse::<GroupCtx>().is_err());
        assert!(matches!("D:1".parse::<GroupCtx>(), Err(Error::UnsupportedRank { .. })));
        assert!(matches!("B:1".parse::<GroupCtx>(), Err(Error::UnsupportedRank { .. })));
    }

    #[test]
    fn simple_roots_of_orthogonal_types() {
        let d = ctx("D:4");
        assert_eq!(d.simple_roots()[3], vec![0, 0, 1, 1]);
        assert_eq!(d.simple_roots()[0], vec![1, -1, 0, 0]);
        let b = ctx("B:3");
        assert_eq!(b.simple_roots()[2], vec![0, 0, 1]);
        assert_eq!(d.positive_roots().len(), 12);
        assert_eq!(b.positive_roots().len(), 9);
        assert_eq!(ctx("C:3").positive_roots().len(), 9);
        assert_eq!(ctx("A:4").positive_roots().len(), 6);
    }

    #[test]
    fn base_alcove_vertices() {
        let d = ctx("D:5");
        let h = (1, 2);
        assert_eq!(d.vertices().len(), 6);
        assert_eq!(d.vertices()[0], r(&[(0, 1); 5]));
        assert_eq!(d.vertices()[1], r(&[(1, 1), (0, 1), (0, 1), (0, 1), (0, 1)]));
        assert_eq!(d.vertices()[2], r(&[h, h, (0, 1), (0, 1), (0, 1)]));
        assert_eq!(d.vertices()[3], r(&[h, h, h, (0, 1), (0, 1)]));
        assert_eq!(d.vertices()[4], r(&[h; 5]));
        assert_eq!(d.vertices()[5], r(&[h, h, h, h, (-1, 2)]));
        assert_eq!(ctx("D:3").vertices().len(), 4);
        assert_eq!(ctx("D:4").vertices().len(), 5);
        // D_2 is A_1 × A_1: the alcove is a square.
        assert_eq!(ctx("D:2").vertices().len(), 4);
        let b = ctx("B:3");
        assert_eq!(b.vertices().len(), 4);
        assert_eq!(b.vertices()[3], r(&[h, h, h]));
        assert_eq!(ctx("C:2").vertices().len(), 3);
    }

    #[test]
    fn walls_are_nonnegative_and_cut_facets() {
        for s in ["A:1", "A:3", "B:2", "B:4", "C:1", "C:3", "D:2", "D:3", "D:5"] {
            let c = ctx(s);
            let nv = c.vertices().len();
            for wall in c.walls() {
                let values: Vec<Rat> = c.vertices().iter().map(|v| wall.eval(v)).collect();
                assert!(values.iter().all(|v| *v >= rat(0)), "{s}");
                let on = values.iter().filter(|v| **v == rat(0)).count();
                if s == "D:2" {
                    assert_eq!(on, 2, "{s}");
                } else {
                    // every wall of a simplex misses exactly one vertex
                    assert_eq!(on, nv - 1, "{s}");
                }
                assert!(wall.eval(&c.barycenter()) > rat(0));
            }
        }
    }

    #[test]
    fn wall_reflections_fix_their_walls() {
        for s in ["A:3", "B:3", "C:3", "D:4", "D:2"] {
            let c = ctx(s);
            for wall in c.walls() {
                for v in c.vertices() {
                    if wall.eval(v) == rat(0) {
                        assert_eq!(wall.reflection.act_rat(v), *v, "{s}");
                    }
                }
                let b = c.barycenter();
                assert_eq!(wall.eval(&wall.reflection.act_rat(&b)), -wall.eval(&b));
            }
        }
    }

    #[test]
    fn coroot_lattice() {
        let d = ctx("D:3");
        assert!(d.in_coroot_lattice(&[1, 1, 0]).unwrap());
        assert!(!d.in_coroot_lattice(&[1, 0, 0]).unwrap());
        assert!(d.in_coroot_lattice(&[0, 0, 0]).unwrap());
        assert!(d.in_coroot_lattice(&[1, 0]).is_err());
        assert!(ctx("A:3").in_coroot_lattice(&[1, -1, 0]).unwrap());
        assert!(!ctx("A:3").in_coroot_lattice(&[1, 0, 0]).unwrap());
        assert!(ctx("C:2").in_coroot_lattice(&[1, 0]).unwrap());
    }

    #[test]
    fn orbits() {
        let d3 = ctx("D:3").weyl_orbit(&[1, 0, 0]).unwrap();
        assert_eq!(d3.len(), 6);
        for i in 0..3 {
            for s in [1, -1] {
                let mut v = vec![0; 3];
                v[i] = s;
                assert!(d3.contains(&v));
            }
        }
        let b2 = ctx("B:2").weyl_orbit(&[1, 0]).unwrap();
        let expect: BTreeSet<CochVec> = [vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]].into();
        assert_eq!(b2, expect);
        // Brute force: apply every signed permutation with an even number of
        // sign changes to (1,1,1,1).
        let mut brute = BTreeSet::new();
        for mask in 0u32..16 {
            if mask.count_ones() % 2 == 0 {
                brute.insert((0..4).map(|i| if mask & (1 << i) != 0 { -1 } else { 1 }).collect::<Vec<i64>>());
            }
        }
        assert_eq!(brute.len(), 8);
        assert_eq!(ctx("D:4").weyl_orbit(&[1, 1, 1, 1]).unwrap(), brute);
    }

    #[test]
    fn dominant_reps() {
        assert_eq!(ctx("B:3").dominant_rep(&to_rat(&[0, -2, 1])).unwrap(), to_rat(&[2, 1, 0]));
        // S°_4 orbit of (−1,0) is {(±1,0),(0,±1)}; the dominant one is (1,0).
        assert_eq!(ctx("D:2").dominant_rep(&to_rat(&[-1, 0])).unwrap(), to_rat(&[1, 0]));
        assert_eq!(ctx("D:2").dominant_rep(&to_rat(&[-1, 2])).unwrap(), to_rat(&[2, -1]));
        assert_eq!(ctx("D:3").dominant_rep(&to_rat(&[0, 0, 0])).unwrap(), to_rat(&[0, 0, 0]));
        assert_eq!(ctx("A:3").dominant_rep(&to_rat(&[0, 3, -1])).unwrap(), to_rat(&[3, 0, -1]));
    }

    #[test]
    fn dominant_rep_is_in_orbit_and_idempotent() {
        for s in ["A:3", "B:3", "C:3", "D:3", "D:4"] {
            let c = ctx(s);
            let n = c.rank();
            let samples: Vec<Vec<i64>> = vec![vec![-2, 0, 1, 3][..n].to_vec(), vec![-1, -2, -3, 1][..n].to_vec()];
            for x in samples {
                let dom = c.dominant_rep(&to_rat(&x)).unwrap();
                assert_eq!(c.dominant_rep(&dom).unwrap(), dom);
                let orbit = c.weyl_orbit(&x).unwrap();
                let dom_int: Vec<i64> = dom.iter().map(|v| v.to_integer()).collect();
                assert!(orbit.contains(&dom_int), "{s} {x:?}");
                assert!(c.is_dominant(&dom_int));
            }
        }
    }

    #[test]
    fn hull_examples() {
        let d = ctx("D:3");
        assert!(d.in_convex_hull(&[1, 0, 0], &r(&[(1, 2), (-1, 2), (0, 1)])).unwrap());
        assert!(!d.in_convex_hull(&[1, 0, 0], &to_rat(&[1, 1, 0])).unwrap());
        for s in ["A:3", "B:3", "C:2", "D:4"] {
            let c = ctx(s);
            let mu: Vec<i64> = vec![2, 1, 0, 0][..c.rank()].to_vec();
            assert!(c.in_convex_hull(&mu, &to_rat(&mu)).unwrap());
        }
        assert!(d.in_convex_hull(&[1, 0], &to_rat(&[1, 0, 0])).is_err());
    }

    #[test]
    fn hull_in_type_a_needs_equal_sums() {
        let a = ctx("A:3");
        assert!(a.in_convex_hull(&[1, 0, 0], &r(&[(1, 3), (1, 3), (1, 3)])).unwrap());
        assert!(!a.in_convex_hull(&[1, 0, 0], &r(&[(1, 3), (1, 3), (0, 1)])).unwrap());
    }

    #[test]
    fn hull_type_d_uses_even_sign_changes() {
        // Conv(S°_4·(1,1)) is the segment between (1,1) and (−1,−1).
        let d = ctx("D:2");
        assert!(d.in_convex_hull(&[1, 1], &to_rat(&[0, 0])).unwrap());
        assert!(!d.in_convex_hull(&[1, 1], &to_rat(&[1, -1])).unwrap());
        assert!(d.in_convex_hull(&[1, 1], &to_rat(&[-1, -1])).unwrap());
    }

    #[test]
    fn minuscule_examples() {
        let d = ctx("D:4");
        assert!(d.is_minuscule(&[1, 0, 0, 0]).unwrap());
        assert!(!d.is_minuscule(&[1, 1, 1, 1]).unwrap());
        assert!(!ctx("B:3").is_minuscule(&[2, 0, 0]).unwrap());
        assert!(!ctx("B:3").is_minuscule(&[1, 1, 0]).unwrap());
        assert!(ctx("A:4").is_minuscule(&[1, 1, 0, 0]).unwrap());
        assert!(!ctx("C:2").is_minuscule(&[1, 0]).unwrap());
    }
}
