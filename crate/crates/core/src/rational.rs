//! Vector helpers over `i64` and exact rationals.

use num_rational::Rational64;

pub type Rat = Rational64;

/// An integer cocharacter, one entry per coordinate of the ambient lattice.
pub type CochVec = Vec<i64>;

/// A rational point, e.g. an alcove vertex.
pub type RatVec = Vec<Rat>;

pub fn rat(x: i64) -> Rat {
    Rat::from_integer(x)
}

pub fn half() -> Rat {
    Rat::new(1, 2)
}

pub fn to_rat(v: &[i64]) -> RatVec {
    v.iter().map(|&x| rat(x)).collect()
}

/// The constant vector `(d, …, d)`.
pub fn constant(d: i64, len: usize) -> CochVec {
    vec![d; len]
}

/// Entry reversal `v*(i) = v(i*)`.
pub fn star<T: Clone>(v: &[T]) -> Vec<T> {
    v.iter().rev().cloned().collect()
}

/// `(x_1, …, x_n) ↦ (x_1, …, x_n, −x_n, …, −x_1)`.
pub fn embed<T: Clone + std::ops::Neg<Output = T>>(x: &[T]) -> Vec<T> {
    let mut out = x.to_vec();
    out.extend(x.iter().rev().map(|v| -v.clone()));
    out
}

/// The standard basis vector `e_i` of length `len`, with `i` 1-based.
pub fn basis(i: usize, len: usize) -> CochVec {
    let mut v = vec![0; len];
    v[i - 1] = 1;
    v
}

pub fn is_zero(v: &[Rat]) -> bool {
    v.iter().all(|x| *x == rat(0))
}

pub fn sub(a: &[Rat], b: &[Rat]) -> RatVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[Rat], b: &[Rat]) -> RatVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale(c: Rat, a: &[Rat]) -> RatVec {
    a.iter().map(|x| c * x).collect()
}

pub fn dot(a: &[i64], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(&x, y)| rat(x) * y).sum()
}

/// Formats a vector as `(a,b,c)`.
pub fn fmt_vec<T: std::fmt::Display>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}
