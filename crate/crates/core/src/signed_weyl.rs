//! Finite Weyl groups as signed permutations.
//!
//! A [`SignedPerm`] of rank `n` is stored in window notation: entry `i`
//! (0-based slot) is `±(j + 1)`, meaning the element sends `e_i` to `±e_j`.
//! Equivalently it is the permutation `σ` of `{1, …, 2n}` with
//! `σ(i*) = σ(i)*`, where `i* = 2n + 1 − i`; see [`SignedPerm::to_s2n`].
//! Plain permutations (type A) are the signed permutations with all signs
//! positive.

use std::fmt;
use std::ops::Neg;

use serde::{Deserialize, Serialize};

use crate::error::{check_len, Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct SignedPerm {
    window: Vec<i32>,
}

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        SignedPerm {
            window: (1..=n as i32).collect(),
        }
    }

    pub fn from_window(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n];
        for &x in &window {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a - 1] {
                return Err(Error::InvalidSignedPerm(window));
            }
            seen[a - 1] = true;
        }
        Ok(SignedPerm { window })
    }

    /// A plain permutation from 0-based images.
    pub fn from_permutation(images: &[usize]) -> Result<Self> {
        Self::from_window(images.iter().map(|&j| j as i32 + 1).collect())
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &x)| x == i as i32 + 1)
    }

    /// Image of the 0-based slot `i`: `(target slot, sign)`.
    #[inline]
    pub fn image(&self, i: usize) -> (usize, i64) {
        let x = self.window[i];
        (x.unsigned_abs() as usize - 1, if x < 0 { -1 } else { 1 })
    }

    pub fn compose(&self, other: &SignedPerm) -> Result<SignedPerm> {
        check_len(self.rank(), other.rank())?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &SignedPerm) -> SignedPerm {
        let window = other
            .window
            .iter()
            .map(|&x| {
                let inner = self.window[x.unsigned_abs() as usize - 1];
                if x < 0 {
                    -inner
                } else {
                    inner
                }
            })
            .collect();
        SignedPerm { window }
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut window = vec![0; self.rank()];
        for (i, &x) in self.window.iter().enumerate() {
            let j = x.unsigned_abs() as usize - 1;
            let slot = i as i32 + 1;
            window[j] = if x < 0 { -slot } else { slot };
        }
        SignedPerm { window }
    }

    /// `result[j] = ε·v[i]` whenever slot `i` is sent to slot `j` with sign `ε`.
    pub fn act<T: Clone + Neg<Output = T>>(&self, v: &[T]) -> Result<Vec<T>> {
        check_len(self.rank(), v.len())?;
        Ok(self.act_unchecked(v))
    }

    pub(crate) fn act_unchecked<T: Clone + Neg<Output = T>>(&self, v: &[T]) -> Vec<T> {
        let mut out = v.to_vec();
        for (i, x) in v.iter().enumerate() {
            let (j, s) = self.image(i);
            out[j] = if s < 0 { -x.clone() } else { x.clone() };
        }
        out
    }

    pub fn sign_flips(&self) -> usize {
        self.window.iter().filter(|&&x| x < 0).count()
    }

    /// Parity of the element viewed inside `S_2n`: even iff the number of
    /// slots sent past `n` (negative window entries) is even.
    pub fn is_even_in_s2n(&self) -> bool {
        self.sign_flips().is_multiple_of(2)
    }

    pub fn is_unsigned(&self) -> bool {
        self.window.iter().all(|&x| x > 0)
    }

    /// The permutation of `{1, …, 2n}`, as a vector `p` with `p[k − 1] = σ(k)`.
    pub fn to_s2n(&self) -> Vec<usize> {
        let n = self.rank();
        let mut p = vec![0; 2 * n];
        for (i, &x) in self.window.iter().enumerate() {
            let j = x.unsigned_abs() as usize;
            let img = if x > 0 { j } else { 2 * n + 1 - j };
            p[i] = img;
            p[2 * n - 1 - i] = 2 * n + 1 - img;
        }
        p
    }

    /// Inverse of [`SignedPerm::to_s2n`]; fails unless `σ(i*) = σ(i)*`.
    pub fn from_s2n(p: &[usize]) -> Result<Self> {
        let m = p.len();
        let bad = || Error::InvalidSignedPerm(p.iter().map(|&x| x as i32).collect());
        if !m.is_multiple_of(2) {
            return Err(bad());
        }
        let n = m / 2;
        let mut seen = vec![false; m];
        for (k, &img) in p.iter().enumerate() {
            if img == 0 || img > m || seen[img - 1] {
                return Err(bad());
            }
            seen[img - 1] = true;
            if p[m - 1 - k] != m + 1 - img {
                return Err(bad());
            }
        }
        let window = p[..n]
            .iter()
            .map(|&img| {
                if img <= n {
                    img as i32
                } else {
                    -((m + 1 - img) as i32)
                }
            })
            .collect();
        Self::from_window(window)
    }
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl TryFrom<Vec<i32>> for SignedPerm {
    type Error = Error;

    fn try_from(window: Vec<i32>) -> Result<Self> {
        SignedPerm::from_window(window)
    }
}

impl From<SignedPerm> for Vec<i32> {
    fn from(p: SignedPerm) -> Self {
        p.window
    }
}

/// Lexicographic successor of a permutation in place; false when `p` was last.
fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Iterator over the hyperoctahedral group `{±1}^n ⋊ S_n`, or its
/// index-2 subgroup of elements even in `S_2n`.
pub struct SignedPerms {
    perm: Vec<usize>,
    mask: u32,
    even_only: bool,
    done: bool,
    signed: bool,
}

impl Iterator for SignedPerms {
    type Item = SignedPerm;

    fn next(&mut self) -> Option<SignedPerm> {
        let n = self.perm.len();
        let masks = if self.signed { 1u32 << n } else { 1 };
        loop {
            if self.done {
                return None;
            }
            if self.mask >= masks {
                self.mask = 0;
                if !next_permutation(&mut self.perm) {
                    self.done = true;
                    return None;
                }
            }
            let mask = self.mask;
            self.mask += 1;
            if self.even_only && mask.count_ones() % 2 == 1 {
                continue;
            }
            let window = self
                .perm
                .iter()
                .enumerate()
                .map(|(i, &j)| {
                    let v = j as i32 + 1;
                    if mask & (1 << i) != 0 {
                        -v
                    } else {
                        v
                    }
                })
                .collect();
            return Some(SignedPerm { window });
        }
    }
}

pub const MAX_ENUMERATE_RANK: usize = 8;

/// All `2^n·n!` signed permutations of rank `n`, or the `2^(n−1)·n!` even ones.
pub fn enumerate(n: usize, even_only: bool) -> Result<SignedPerms> {
    enumerate_guarded(n, even_only, MAX_ENUMERATE_RANK)
}

pub(crate) fn enumerate_guarded(n: usize, even_only: bool, limit: usize) -> Result<SignedPerms> {
    if n > limit {
        return Err(Error::GuardExceeded {
            what: "signed permutation rank",
            value: n,
            limit,
        });
    }
    Ok(SignedPerms {
        perm: (0..n).collect(),
        mask: 0,
        even_only,
        done: false,
        signed: true,
    })
}

/// All `n!` plain permutations of rank `n`.
pub fn permutations(n: usize) -> Result<SignedPerms> {
    let mut it = enumerate(n, false)?;
    it.signed = false;
    Ok(it)
}
