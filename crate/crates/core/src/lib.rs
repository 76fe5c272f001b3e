//! Iwahori-Weyl group combinatorics for split classical groups.
//!
//! The crate models the extended affine Weyl groups of `GL_m`, `Sp_2n`,
//! `O_2n+1` and `O_2n` as `Z^n ⋊ W` with `W` a group of (signed)
//! permutations, and computes the μ-admissible and μ-permissible sets of a
//! cocharacter μ. For the orthogonal families it also provides the
//! extended-alcove calculus (the `μ_k` / `ν_k` vectors), the reflection
//! lifting that walks a permissible element up to its translation part, and
//! the fixed-point embedding of the odd orthogonal group into the even one
//! of one higher rank.
//!
//! All alcove-point arithmetic is exact (`i64` rationals); there is no
//! floating point anywhere.
//!
//! ```
//! use alcove_lab::{adm_perm, GroupCtx, Guards};
//!
//! let ctx: GroupCtx = "D:3".parse().unwrap();
//! let mu = vec![1, 0, 0];
//! let adm = adm_perm::admissible_set(&ctx, &mu, &Guards::default()).unwrap();
//! let perm = adm_perm::permissible_set(&ctx, &mu).unwrap();
//! assert_eq!(adm, perm);
//! ```

pub mod adm_perm;
pub mod bruhat;
pub mod cli;
pub mod error;
pub mod guard;
pub mod iwahori_weyl;
pub mod json;
pub mod oracle;
pub mod rational;
pub mod root_data;
pub mod signed_weyl;

pub use error::{Error, Result};
pub use guard::Guards;
pub use iwahori_weyl::{AffineRoot, ExtendedAlcove, IWElement, RootForm};
pub use rational::{CochVec, Rat, RatVec};
pub use root_data::{Family, GroupCtx};
pub use signed_weyl::SignedPerm;
