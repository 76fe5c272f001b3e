//! C ABI for `alcove-lab`.
//!
//! Objects are opaque heap handles released with their `*_free` function.
//! Every fallible call returns an [`AlStatus`]; on failure the message is
//! available from [`al_last_error`] on the same thread. Strings returned
//! through `char **` are released with [`al_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use alcove_lab::adm_perm;
use alcove_lab::bruhat;
use alcove_lab::json;
use alcove_lab::root_data::GroupCtx;
use alcove_lab::signed_weyl::SignedPerm;
use alcove_lab::{Error, Guards, IWElement};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    GuardExceeded = 4,
    NotPermissible = 5,
    OutOfRange = 6,
    Internal = 7,
    Panic = 8,
}

/// A group context such as `D:3`.
pub struct AlGroup {
    ctx: GroupCtx,
}

/// An Iwahori-Weyl group element together with its group.
pub struct AlElement {
    ctx: GroupCtx,
    w: IWElement,
}

/// A canonically ordered set of elements.
pub struct AlSet {
    ctx: GroupCtx,
    elems: Vec<IWElement>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> AlStatus {
    match e {
        Error::GuardExceeded { .. } => AlStatus::GuardExceeded,
        Error::NotPermissible => AlStatus::NotPermissible,
        Error::Internal(_) => AlStatus::Internal,
        _ => AlStatus::InvalidInput,
    }
}

struct Fail(AlStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guarded(f: impl FnOnce() -> Result<(), Fail>) -> AlStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => AlStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("panic in alcove-lab");
            AlStatus::Panic
        }
    }
}

unsafe fn cstr<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(AlStatus::NullPointer, "null string".into()));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(AlStatus::InvalidUtf8, "string is not UTF-8".into()))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail(AlStatus::NullPointer, format!("null {what}")))
}

unsafe fn slice<'a, T>(p: *const T, len: usize) -> Result<&'a [T], Fail> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(Fail(AlStatus::NullPointer, "null array".into()));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn write_out<T>(out: *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(AlStatus::NullPointer, "null output pointer".into()));
    }
    out.write(v);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(AlStatus::Internal, "interior NUL".into()))?;
    write_out(out, c.into_raw())
}

/// Message of the last failed call on this thread; empty if none. Valid
/// until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn al_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn al_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn al_group_new(name: *const c_char, out: *mut *mut AlGroup) -> AlStatus {
    guarded(|| {
        let ctx: GroupCtx = cstr(name)?.parse()?;
        write_out(out, Box::into_raw(Box::new(AlGroup { ctx })))
    })
}

/// # Safety
/// `g` must be null or a handle from [`al_group_new`].
#[no_mangle]
pub unsafe extern "C" fn al_group_free(g: *mut AlGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Rank of the group, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live group handle.
#[no_mangle]
pub unsafe extern "C" fn al_group_rank(g: *const AlGroup) -> usize {
    g.as_ref().map_or(0, |g| g.ctx.rank())
}

/// `t_ν σ` from a translation `t[0..n]` and a signed-permutation window
/// `s[0..n]`.
///
/// # Safety
/// `t` and `s` must point to `n` values each; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn al_element_new(
    g: *const AlGroup,
    t: *const i64,
    s: *const i32,
    n: usize,
    out: *mut *mut AlElement,
) -> AlStatus {
    guarded(|| {
        let g = deref(g, "group")?;
        let w = IWElement::new(slice(t, n)?.to_vec(), SignedPerm::from_window(slice(s, n)?.to_vec())?)?;
        g.ctx.check_element(&w)?;
        write_out(out, Box::into_raw(Box::new(AlElement { ctx: g.ctx.clone(), w })))
    })
}

/// Parses `{"ctx":"D:3","t":[..],"s":[..]}`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn al_element_from_json(text: *const c_char, out: *mut *mut AlElement) -> AlStatus {
    guarded(|| {
        let (ctx, w) = json::parse_element(cstr(text)?)?;
        write_out(out, Box::into_raw(Box::new(AlElement { ctx, w })))
    })
}

/// # Safety
/// `e` must be a live element handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn al_element_to_json(e: *const AlElement, out: *mut *mut c_char) -> AlStatus {
    guarded(|| {
        let e = deref(e, "element")?;
        write_string(out, json::element_to_string(&e.ctx, &e.w))
    })
}

/// # Safety
/// `e` must be null or an element handle from this library.
#[no_mangle]
pub unsafe extern "C" fn al_element_free(e: *mut AlElement) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// # Safety
/// `e` must be a live element handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn al_element_length(e: *const AlElement, out: *mut usize) -> AlStatus {
    guarded(|| {
        let e = deref(e, "element")?;
        write_out(out, bruhat::length(&e.ctx, &e.w)?)
    })
}

/// Product `x·y` of two elements of the same group.
///
/// # Safety
/// `x`, `y` must be live element handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn al_element_mul(x: *const AlElement, y: *const AlElement, out: *mut *mut AlElement) -> AlStatus {
    guarded(|| {
        let (x, y) = (deref(x, "element")?, deref(y, "element")?);
        same_group(&x.ctx, &y.ctx)?;
        let w = x.w.multiply(&y.w)?;
        write_out(out, Box::into_raw(Box::new(AlElement { ctx: x.ctx.clone(), w })))
    })
}

fn same_group(a: &GroupCtx, b: &GroupCtx) -> Result<(), Fail> {
    if a == b {
        Ok(())
    } else {
        Err(Fail(AlStatus::InvalidInput, format!("elements of different groups {a} and {b}")))
    }
}

/// Bruhat order `x ≤ y`.
///
/// # Safety
/// `x`, `y` must be live element handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn al_bruhat_leq(x: *const AlElement, y: *const AlElement, out: *mut bool) -> AlStatus {
    guarded(|| {
        let (x, y) = (deref(x, "element")?, deref(y, "element")?);
        same_group(&x.ctx, &y.ctx)?;
        write_out(out, bruhat::leq(&x.ctx, &x.w, &y.w)?)
    })
}

/// Whether `e` is μ-permissible, `μ = mu[0..n]`.
///
/// # Safety
/// `mu` must point to `n` values; `e` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn al_is_permissible(e: *const AlElement, mu: *const i64, n: usize, out: *mut bool) -> AlStatus {
    guarded(|| {
        let e = deref(e, "element")?;
        write_out(out, adm_perm::is_permissible_def(&e.ctx, slice(mu, n)?, &e.w)?)
    })
}

unsafe fn make_set(
    g: *const AlGroup,
    mu: *const i64,
    n: usize,
    out: *mut *mut AlSet,
    f: impl FnOnce(&GroupCtx, &[i64]) -> alcove_lab::Result<std::collections::BTreeSet<IWElement>>,
) -> AlStatus {
    guarded(|| {
        let g = deref(g, "group")?;
        let set = f(&g.ctx, slice(mu, n)?)?;
        let elems = bruhat::canonical_sort(&g.ctx, set);
        write_out(out, Box::into_raw(Box::new(AlSet { ctx: g.ctx.clone(), elems })))
    })
}

/// `Adm(μ)` in canonical order. Length guards follow `ALCOVE_LAB_GUARD`.
///
/// # Safety
/// `g` must be live; `mu` must point to `n` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn al_admissible_set(g: *const AlGroup, mu: *const i64, n: usize, out: *mut *mut AlSet) -> AlStatus {
    make_set(g, mu, n, out, |c, m| adm_perm::admissible_set(c, m, &Guards::from_env()))
}

/// `Perm(μ)` in canonical order.
///
/// # Safety
/// `g` must be live; `mu` must point to `n` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn al_permissible_set(g: *const AlGroup, mu: *const i64, n: usize, out: *mut *mut AlSet) -> AlStatus {
    make_set(g, mu, n, out, adm_perm::permissible_set)
}

/// Number of elements, or 0 for a null handle.
///
/// # Safety
/// `s` must be null or a live set handle.
#[no_mangle]
pub unsafe extern "C" fn al_set_len(s: *const AlSet) -> usize {
    s.as_ref().map_or(0, |s| s.elems.len())
}

/// A new handle for the `i`-th element.
///
/// # Safety
/// `s` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn al_set_get(s: *const AlSet, i: usize, out: *mut *mut AlElement) -> AlStatus {
    guarded(|| {
        let s = deref(s, "set")?;
        let w = s
            .elems
            .get(i)
            .ok_or_else(|| Fail(AlStatus::OutOfRange, format!("index {i} out of range for {} elements", s.elems.len())))?;
        write_out(out, Box::into_raw(Box::new(AlElement { ctx: s.ctx.clone(), w: w.clone() })))
    })
}

/// # Safety
/// `s`, `e` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn al_set_contains(s: *const AlSet, e: *const AlElement, out: *mut bool) -> AlStatus {
    guarded(|| {
        let (s, e) = (deref(s, "set")?, deref(e, "element")?);
        write_out(out, s.ctx == e.ctx && s.elems.contains(&e.w))
    })
}

/// # Safety
/// `s` must be null or a set handle from this library.
#[no_mangle]
pub unsafe extern "C" fn al_set_free(s: *mut AlSet) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// The reflection lift of a permissible element of type D to its
/// translation part, as a JSON document.
///
/// # Safety
/// `e` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn al_lift_chain_json(e: *const AlElement, out: *mut *mut c_char) -> AlStatus {
    guarded(|| {
        let e = deref(e, "element")?;
        let steps = adm_perm::lift_chain(&e.ctx, &e.w)?;
        let doc = json::LiftDoc::new(&e.ctx, &e.w, &steps)?;
        let text = serde_json::to_string(&doc).map_err(|err| Fail(AlStatus::Internal, err.to_string()))?;
        write_string(out, text)
    })
}
