//! C ABI for the permutation-group invariants library.
//!
//! Groups are opaque handles created by the `ll_group_*` constructors and
//! released with [`ll_group_free`]. Every fallible call returns an
//! [`LlStatus`]; on failure a message is stored per thread and can be
//! fetched with [`ll_last_error_message`]. Strings returned through out
//! parameters are heap-allocated and must be released with
//! [`ll_string_free`]. Group orders are arbitrary-precision and therefore
//! travel as decimal strings.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::c_char;

use length_lab::algebra::{is_nilpotent, is_soluble, Subgroup};
use length_lab::construct;
use length_lab::field::FieldSpec;
use length_lab::group::PermGroup;
use length_lab::perm::Permutation;
use length_lab::series;
use length_lab::{Error, Limits};

/// Opaque handle to a finite permutation group.
pub struct LlGroup(PermGroup);

/// Status code of a fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Capacity = 3,
    Domain = 4,
    Internal = 5,
    Utf8 = 6,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg).unwrap_or_else(|_| CString::new("invalid error text").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(msg));
}

fn status_of(err: &Error) -> LlStatus {
    match err {
        Error::Capacity { .. } => LlStatus::Capacity,
        Error::Domain(_) => LlStatus::Domain,
        Error::Internal(_) => LlStatus::Internal,
        _ => LlStatus::InvalidArgument,
    }
}

fn fail(err: Error) -> LlStatus {
    let status = status_of(&err);
    set_error(err.to_string());
    status
}

/// # Safety
/// `ptr` must be valid for reads or null.
unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, LlStatus> {
    if ptr.is_null() {
        set_error("null string pointer".into());
        return Err(LlStatus::NullPointer);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("string is not valid utf-8".into());
        LlStatus::Utf8
    })
}

unsafe fn write_group(out: *mut *mut LlGroup, group: PermGroup) -> LlStatus {
    if out.is_null() {
        set_error("null output pointer".into());
        return LlStatus::NullPointer;
    }
    *out = Box::into_raw(Box::new(LlGroup(group)));
    LlStatus::Ok
}

unsafe fn borrow_group<'a>(g: *const LlGroup) -> Result<&'a PermGroup, LlStatus> {
    if g.is_null() {
        set_error("null group handle".into());
        return Err(LlStatus::NullPointer);
    }
    Ok(&(*g).0)
}

/// Most recent error message of this thread, or null if none. The caller
/// owns the returned string and must release it with `ll_string_free`.
#[no_mangle]
pub extern "C" fn ll_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| match &*slot.borrow() {
        Some(msg) => msg.clone().into_raw(),
        None => std::ptr::null_mut(),
    })
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must have been returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ll_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Releases a group handle.
///
/// # Safety
/// `g` must have been returned by a constructor of this library and not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn ll_group_free(g: *mut LlGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Builds a group from generators in cycle notation (0-based points, e.g.
/// `"(0 1 2)(3 4)"`), all acting on `degree` points.
///
/// # Safety
/// `gens` must point to `len` valid C strings; `out` must be valid for a
/// write.
#[no_mangle]
pub unsafe extern "C" fn ll_group_from_cycles(
    degree: usize,
    gens: *const *const c_char,
    len: usize,
    out: *mut *mut LlGroup,
) -> LlStatus {
    if len > 0 && gens.is_null() {
        set_error("null generator array".into());
        return LlStatus::NullPointer;
    }
    let mut parsed = Vec::with_capacity(len);
    for i in 0..len {
        let text = match read_str(*gens.add(i)) {
            Ok(t) => t,
            Err(status) => return status,
        };
        match Permutation::parse_cycles(text, degree) {
            Ok(p) => parsed.push(p),
            Err(e) => return fail(e),
        }
    }
    match PermGroup::new(degree, parsed) {
        Ok(g) => write_group(out, g),
        Err(e) => fail(e),
    }
}

unsafe fn constructed(
    out: *mut *mut LlGroup,
    built: length_lab::Result<PermGroup>,
) -> LlStatus {
    match built {
        Ok(g) => write_group(out, g),
        Err(e) => fail(e),
    }
}

/// Cyclic group of order `n`.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ll_group_cyclic(n: u64, out: *mut *mut LlGroup) -> LlStatus {
    constructed(out, construct::cyclic(n))
}

/// Symmetric group on `n` points.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ll_group_symmetric(n: u64, out: *mut *mut LlGroup) -> LlStatus {
    constructed(out, construct::symmetric(n))
}

/// Alternating group on `n >= 3` points.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ll_group_alternating(n: u64, out: *mut *mut LlGroup) -> LlStatus {
    constructed(out, construct::alternating(n))
}

/// Dihedral group of order `n` (even, at least 6).
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ll_group_dihedral(n: u64, out: *mut *mut LlGroup) -> LlStatus {
    constructed(out, construct::dihedral(n))
}

/// `PSL(2, q)` on the projective line, for a supported prime power `q`.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ll_group_psl2(q: u64, out: *mut *mut LlGroup) -> LlStatus {
    constructed(
        out,
        FieldSpec::for_order(q).and_then(|f| construct::psl2(&f)),
    )
}

/// `AGL(1, q)` on the affine line, for a supported prime power `q`.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ll_group_agl1(q: u64, out: *mut *mut LlGroup) -> LlStatus {
    constructed(
        out,
        FieldSpec::for_order(q).and_then(|f| construct::agl1(&f)),
    )
}

/// Direct product acting on the disjoint union of the point sets.
///
/// # Safety
/// `a` and `b` must be valid group handles; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ll_group_direct_product(
    a: *const LlGroup,
    b: *const LlGroup,
    out: *mut *mut LlGroup,
) -> LlStatus {
    let (a, b) = match (borrow_group(a), borrow_group(b)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(s), _) | (_, Err(s)) => return s,
    };
    write_group(out, construct::direct_product(a, b))
}

/// Wreath product `S wr T` in its imprimitive action.
///
/// # Safety
/// `s` and `t` must be valid group handles; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ll_group_wreath_product(
    s: *const LlGroup,
    t: *const LlGroup,
    out: *mut *mut LlGroup,
) -> LlStatus {
    let (s, t) = match (borrow_group(s), borrow_group(t)) {
        (Ok(s), Ok(t)) => (s, t),
        (Err(e), _) | (_, Err(e)) => return e,
    };
    write_group(out, construct::wreath_product(s, t))
}

/// Number of points the group acts on; 0 for a null handle.
///
/// # Safety
/// `g` must be a valid group handle or null.
#[no_mangle]
pub unsafe extern "C" fn ll_group_degree(g: *const LlGroup) -> usize {
    borrow_group(g).map(PermGroup::degree).unwrap_or(0)
}

/// Group order as a decimal string (orders exceed any machine word for
/// large wreath products).
///
/// # Safety
/// `g` must be a valid group handle; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ll_group_order_decimal(
    g: *const LlGroup,
    out: *mut *mut c_char,
) -> LlStatus {
    let group = match borrow_group(g) {
        Ok(g) => g,
        Err(s) => return s,
    };
    if out.is_null() {
        set_error("null output pointer".into());
        return LlStatus::NullPointer;
    }
    let text = CString::new(group.order().to_string()).expect("decimal digits");
    *out = text.into_raw();
    LlStatus::Ok
}

/// Membership test for a permutation in cycle notation; writes 1 or 0.
///
/// # Safety
/// `g` must be a valid group handle, `cycles` a valid C string, `out` valid
/// for a write.
#[no_mangle]
pub unsafe extern "C" fn ll_group_contains_cycles(
    g: *const LlGroup,
    cycles: *const c_char,
    out: *mut i32,
) -> LlStatus {
    let group = match borrow_group(g) {
        Ok(g) => g,
        Err(s) => return s,
    };
    let text = match read_str(cycles) {
        Ok(t) => t,
        Err(s) => return s,
    };
    let perm = match Permutation::parse_cycles(text, group.degree()) {
        Ok(p) => p,
        Err(e) => return fail(e),
    };
    if out.is_null() {
        set_error("null output pointer".into());
        return LlStatus::NullPointer;
    }
    *out = i32::from(group.contains(&perm));
    LlStatus::Ok
}

/// Solubility (derived series reaches the trivial subgroup); writes 1 or 0.
///
/// # Safety
/// `g` must be a valid group handle; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ll_group_is_soluble(g: *const LlGroup, out: *mut i32) -> LlStatus {
    let group = match borrow_group(g) {
        Ok(g) => g,
        Err(s) => return s,
    };
    if out.is_null() {
        set_error("null output pointer".into());
        return LlStatus::NullPointer;
    }
    *out = i32::from(is_soluble(&Subgroup::whole(group.clone())));
    LlStatus::Ok
}

/// Nilpotency (lower central series reaches the trivial subgroup); writes 1
/// or 0.
///
/// # Safety
/// `g` must be a valid group handle; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ll_group_is_nilpotent(g: *const LlGroup, out: *mut i32) -> LlStatus {
    let group = match borrow_group(g) {
        Ok(g) => g,
        Err(s) => return s,
    };
    if out.is_null() {
        set_error("null output pointer".into());
        return LlStatus::NullPointer;
    }
    *out = i32::from(is_nilpotent(&Subgroup::whole(group.clone())));
    LlStatus::Ok
}

unsafe fn write_u64(out: *mut u64, value: u64) -> LlStatus {
    if out.is_null() {
        set_error("null output pointer".into());
        return LlStatus::NullPointer;
    }
    *out = value;
    LlStatus::Ok
}

/// Nonsoluble length, computed within the given enumeration and quotient
/// limits (pass 0 to use the defaults of 200000 and 20000).
///
/// # Safety
/// `g` must be a valid group handle; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ll_group_nonsoluble_length(
    g: *const LlGroup,
    enumeration_limit: usize,
    quotient_limit: usize,
    out: *mut u64,
) -> LlStatus {
    let group = match borrow_group(g) {
        Ok(g) => g,
        Err(s) => return s,
    };
    let limits = effective_limits(enumeration_limit, quotient_limit);
    match series::nonsoluble_length(group, &limits) {
        Ok(l) => write_u64(out, l as u64),
        Err(e) => fail(e),
    }
}

/// Generalized Fitting height, within the given limits (0 for defaults).
///
/// # Safety
/// `g` must be a valid group handle; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ll_group_fstar_height(
    g: *const LlGroup,
    enumeration_limit: usize,
    quotient_limit: usize,
    out: *mut u64,
) -> LlStatus {
    let group = match borrow_group(g) {
        Ok(g) => g,
        Err(s) => return s,
    };
    let limits = effective_limits(enumeration_limit, quotient_limit);
    match series::h_star(group, &limits) {
        Ok(h) => write_u64(out, h as u64),
        Err(e) => fail(e),
    }
}

/// Fitting height of a soluble group, within the given limits (0 for
/// defaults). Fails with a domain error on insoluble input.
///
/// # Safety
/// `g` must be a valid group handle; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ll_group_fitting_height(
    g: *const LlGroup,
    enumeration_limit: usize,
    quotient_limit: usize,
    out: *mut u64,
) -> LlStatus {
    let group = match borrow_group(g) {
        Ok(g) => g,
        Err(s) => return s,
    };
    let limits = effective_limits(enumeration_limit, quotient_limit);
    match series::fitting_height(group, &limits) {
        Ok(h) => write_u64(out, h as u64),
        Err(e) => fail(e),
    }
}

/// Order of the soluble radical as a decimal string, within the limits
/// (0 for defaults).
///
/// # Safety
/// `g` must be a valid group handle; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ll_group_soluble_radical_order(
    g: *const LlGroup,
    enumeration_limit: usize,
    quotient_limit: usize,
    out: *mut *mut c_char,
) -> LlStatus {
    let group = match borrow_group(g) {
        Ok(g) => g,
        Err(s) => return s,
    };
    if out.is_null() {
        set_error("null output pointer".into());
        return LlStatus::NullPointer;
    }
    let limits = effective_limits(enumeration_limit, quotient_limit);
    match series::soluble_radical(group, &limits) {
        Ok(rad) => {
            let text = CString::new(rad.order().to_string()).expect("decimal digits");
            *out = text.into_raw();
            LlStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Order of the generalized Fitting subgroup as a decimal string, within
/// the limits (0 for defaults).
///
/// # Safety
/// `g` must be a valid group handle; `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ll_group_fstar_order(
    g: *const LlGroup,
    enumeration_limit: usize,
    quotient_limit: usize,
    out: *mut *mut c_char,
) -> LlStatus {
    let group = match borrow_group(g) {
        Ok(g) => g,
        Err(s) => return s,
    };
    if out.is_null() {
        set_error("null output pointer".into());
        return LlStatus::NullPointer;
    }
    let limits = effective_limits(enumeration_limit, quotient_limit);
    match series::generalized_fitting_subgroup(group, &limits) {
        Ok(report) => {
            let text = CString::new(report.fstar.order().to_string()).expect("decimal digits");
            *out = text.into_raw();
            LlStatus::Ok
        }
        Err(e) => fail(e),
    }
}

fn effective_limits(enumeration: usize, quotient: usize) -> Limits {
    let defaults = Limits::default();
    Limits::new(
        if enumeration == 0 { defaults.enumeration } else { enumeration },
        if quotient == 0 { defaults.quotient } else { quotient },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    unsafe fn make(f: unsafe extern "C" fn(u64, *mut *mut LlGroup) -> LlStatus, n: u64) -> *mut LlGroup {
        let mut out = std::ptr::null_mut();
        assert_eq!(f(n, &mut out), LlStatus::Ok);
        assert!(!out.is_null());
        out
    }

    fn take_string(ptr: *mut c_char) -> String {
        assert!(!ptr.is_null());
        let text = unsafe { CStr::from_ptr(ptr) }.to_str().unwrap().to_string();
        unsafe { ll_string_free(ptr) };
        text
    }

    #[test]
    fn construct_query_free() {
        unsafe {
            let s5 = make(ll_group_symmetric, 5);
            assert_eq!(ll_group_degree(s5), 5);
            let mut order = std::ptr::null_mut();
            assert_eq!(ll_group_order_decimal(s5, &mut order), LlStatus::Ok);
            assert_eq!(take_string(order), "120");

            let mut lambda = 0u64;
            assert_eq!(ll_group_nonsoluble_length(s5, 0, 0, &mut lambda), LlStatus::Ok);
            assert_eq!(lambda, 1);
            let mut h = 0u64;
            assert_eq!(ll_group_fstar_height(s5, 0, 0, &mut h), LlStatus::Ok);
            assert_eq!(h, 2);

            let mut soluble = -1;
            assert_eq!(ll_group_is_soluble(s5, &mut soluble), LlStatus::Ok);
            assert_eq!(soluble, 0);
            ll_group_free(s5);
        }
    }

    #[test]
    fn wreath_order_is_a_big_decimal() {
        unsafe {
            let a5 = make(ll_group_alternating, 5);
            let w = {
                let mut out = std::ptr::null_mut();
                assert_eq!(ll_group_wreath_product(a5, a5, &mut out), LlStatus::Ok);
                out
            };
            let mut order = std::ptr::null_mut();
            assert_eq!(ll_group_order_decimal(w, &mut order), LlStatus::Ok);
            assert_eq!(take_string(order), "46656000000");
            // beyond the enumeration limit: capacity status, error message set
            let mut lambda = 0u64;
            assert_eq!(
                ll_group_nonsoluble_length(w, 0, 0, &mut lambda),
                LlStatus::Capacity
            );
            let msg = take_string(ll_last_error_message());
            assert!(msg.contains("capacity"), "{msg}");
            ll_group_free(w);
            ll_group_free(a5);
        }
    }

    #[test]
    fn from_cycles_and_membership() {
        unsafe {
            let gens = [
                CString::new("(0 1 2 3 4)").unwrap(),
                CString::new("(0 1 2)").unwrap(),
            ];
            let ptrs: Vec<*const c_char> = gens.iter().map(|s| s.as_ptr()).collect();
            let mut out = std::ptr::null_mut();
            assert_eq!(
                ll_group_from_cycles(5, ptrs.as_ptr(), ptrs.len(), &mut out),
                LlStatus::Ok
            );
            let odd = CString::new("(0 1)").unwrap();
            let even = CString::new("(0 1)(2 3)").unwrap();
            let mut member = -1;
            assert_eq!(
                ll_group_contains_cycles(out, odd.as_ptr(), &mut member),
                LlStatus::Ok
            );
            assert_eq!(member, 0);
            assert_eq!(
                ll_group_contains_cycles(out, even.as_ptr(), &mut member),
                LlStatus::Ok
            );
            assert_eq!(member, 1);
            ll_group_free(out);
        }
    }

    #[test]
    fn psl2_and_agl1() {
        unsafe {
            let p = make(ll_group_psl2, 8);
            let mut order = std::ptr::null_mut();
            assert_eq!(ll_group_order_decimal(p, &mut order), LlStatus::Ok);
            assert_eq!(take_string(order), "504");
            ll_group_free(p);

            let a = make(ll_group_agl1, 8);
            let mut h = 0u64;
            assert_eq!(ll_group_fitting_height(a, 0, 0, &mut h), LlStatus::Ok);
            assert_eq!(h, 2);
            let mut radical = std::ptr::null_mut();
            assert_eq!(
                ll_group_soluble_radical_order(a, 0, 0, &mut radical),
                LlStatus::Ok
            );
            assert_eq!(take_string(radical), "56");
            ll_group_free(a);
        }
    }

    #[test]
    fn errors_carry_status_and_message() {
        unsafe {
            // invalid constructor argument
            let mut out = std::ptr::null_mut();
            assert_eq!(
                ll_group_alternating(2, &mut out),
                LlStatus::InvalidArgument
            );
            let msg = take_string(ll_last_error_message());
            assert!(msg.contains("alternating"), "{msg}");

            // domain error: Fitting height of an insoluble group
            let a5 = make(ll_group_alternating, 5);
            let mut h = 0u64;
            assert_eq!(ll_group_fitting_height(a5, 0, 0, &mut h), LlStatus::Domain);
            ll_group_free(a5);

            // null handles
            assert_eq!(ll_group_degree(std::ptr::null()), 0);
            let mut lambda = 0u64;
            assert_eq!(
                ll_group_nonsoluble_length(std::ptr::null(), 0, 0, &mut lambda),
                LlStatus::NullPointer
            );
        }
    }

    #[test]
    fn fstar_order_of_a_simple_group_is_the_whole_order() {
        unsafe {
            let p = make(ll_group_psl2, 5);
            let mut fstar = std::ptr::null_mut();
            assert_eq!(ll_group_fstar_order(p, 0, 0, &mut fstar), LlStatus::Ok);
            assert_eq!(take_string(fstar), "60"); // simple group: F* = G
            ll_group_free(p);
        }
    }

    #[test]
    fn generated_header_exists_and_declares_the_api() {
        let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/length_lab.h");
        let text = std::fs::read_to_string(header).expect("cbindgen header generated");
        for symbol in [
            "ll_group_from_cycles",
            "ll_group_nonsoluble_length",
            "ll_group_fstar_height",
            "ll_group_free",
            "ll_string_free",
            "LlStatus",
            "LL_STATUS_CAPACITY",
        ] {
            assert!(text.contains(symbol), "header misses {symbol}");
        }
    }
}
