//! C ABI for the hopfdepth engine.
//!
//! Conventions: functions return an `HdStatus`; results are written through
//! out-pointers. Strings returned through out-pointers are NUL-terminated,
//! UTF-8, owned by the caller and must be released with `hd_string_free`.
//! Handles are opaque, freed with their matching `_free` function, and must
//! not be shared across threads. `hd_last_error` returns a pointer valid
//! until the next failing call on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::rc::Rc;

use hopfdepth::catalog::{builtin, resolve_extension, CatalogObject};
use hopfdepth::depth::{is_normal, min_depth, DepthOptions};
use hopfdepth::error::HopfError;
use hopfdepth::hopf::{HopfExtension, HopfStructure};
use hopfdepth::json::{DepthReportJson, HopfJson};
use hopfdepth::sparse::RrefOptions;

/// Status codes mirroring the CLI exit-code contract.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HdStatus {
    HdOk = 0,
    /// malformed input, failed validation, unknown builtin
    HdInvalid = 1,
    /// the computation is unsupported (non-semisimple similarity)
    HdUnsupported = 2,
    HdNullArgument = 3,
    HdInternal = 4,
}

/// Opaque handle to a validated Hopf algebra.
pub struct HdHopf {
    inner: Rc<HopfStructure>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: &str) {
    let cleaned: String = msg.chars().filter(|c| *c != '\0').collect();
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(cleaned).unwrap_or_default();
    });
}

fn status_of(err: &HopfError) -> HdStatus {
    match err.exit_code() {
        2 => HdStatus::HdUnsupported,
        _ => HdStatus::HdInvalid,
    }
}

fn fail(err: HopfError) -> HdStatus {
    set_error(&err.to_string());
    status_of(&err)
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, HdStatus> {
    if ptr.is_null() {
        set_error("null string argument");
        return Err(HdStatus::HdNullArgument);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        HdStatus::HdInvalid
    })
}

fn write_string(out: *mut *mut c_char, s: String) -> HdStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            HdStatus::HdOk
        }
        Err(_) => {
            set_error("report contained an interior NUL byte");
            HdStatus::HdInternal
        }
    }
}

/// Version of the underlying engine, as a static string.
#[no_mangle]
pub extern "C" fn hd_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr() as *const c_char
}

/// Message of the most recent failure on this thread.
#[no_mangle]
pub extern "C" fn hd_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Releases a string returned through an out-pointer.
///
/// # Safety
/// `s` must have been produced by this library and not freed before.
#[no_mangle]
pub unsafe extern "C" fn hd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a Hopf algebra from a builtin spec: `hopf:S3`, `dual:S3`,
/// `double:S3`, `tensor:C2`.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hd_hopf_builtin(
    spec: *const c_char,
    out: *mut *mut HdHopf,
) -> HdStatus {
    if out.is_null() {
        set_error("null out pointer");
        return HdStatus::HdNullArgument;
    }
    let spec = match read_str(spec) {
        Ok(s) => s,
        Err(st) => return st,
    };
    let obj = match builtin(spec) {
        Ok(o) => o,
        Err(e) => return fail(e),
    };
    let hopf = match obj {
        CatalogObject::Hopf { hopf, .. } => hopf,
        CatalogObject::Double(case) => case.double.hopf().clone(),
        CatalogObject::TensorDcp(case) => case.dcp.hopf.clone(),
        CatalogObject::Group(_) | CatalogObject::Heisenberg(_) => {
            set_error("spec does not name a Hopf algebra");
            return HdStatus::HdInvalid;
        }
    };
    *out = Box::into_raw(Box::new(HdHopf { inner: hopf }));
    HdStatus::HdOk
}

/// Parses and fully validates a Hopf algebra from its JSON form.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hd_hopf_from_json(
    json: *const c_char,
    out: *mut *mut HdHopf,
) -> HdStatus {
    if out.is_null() {
        set_error("null out pointer");
        return HdStatus::HdNullArgument;
    }
    let text = match read_str(json) {
        Ok(s) => s,
        Err(st) => return st,
    };
    let parsed: HopfJson = match serde_json::from_str(text) {
        Ok(p) => p,
        Err(e) => return fail(HopfError::Json(e)),
    };
    match parsed.to_hopf() {
        Ok(h) => {
            *out = Box::into_raw(Box::new(HdHopf { inner: h }));
            HdStatus::HdOk
        }
        Err(e) => fail(e),
    }
}

/// Dimension of the algebra, or -1 on a null handle.
///
/// # Safety
/// `h` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn hd_hopf_dim(h: *const HdHopf) -> i64 {
    if h.is_null() {
        return -1;
    }
    (*h).inner.dim() as i64
}

/// Serializes the Hopf algebra to its JSON form.
///
/// # Safety
/// `h` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hd_hopf_to_json(h: *const HdHopf, out: *mut *mut c_char) -> HdStatus {
    if h.is_null() || out.is_null() {
        set_error("null argument");
        return HdStatus::HdNullArgument;
    }
    let json = HopfJson::from_hopf(&(*h).inner);
    match serde_json::to_string_pretty(&json) {
        Ok(s) => write_string(out, s),
        Err(e) => fail(HopfError::Json(e)),
    }
}

/// Runs the full axiom suite and returns the report as JSON.
///
/// # Safety
/// `h` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hd_hopf_check(h: *const HdHopf, out: *mut *mut c_char) -> HdStatus {
    if h.is_null() || out.is_null() {
        set_error("null argument");
        return HdStatus::HdNullArgument;
    }
    let report = (*h).inner.check_axioms();
    match serde_json::to_string_pretty(&report) {
        Ok(s) => write_string(out, s),
        Err(e) => fail(HopfError::Json(e)),
    }
}

/// Releases a Hopf handle.
///
/// # Safety
/// `h` must have been produced by this library and not freed before.
#[no_mangle]
pub unsafe extern "C" fn hd_hopf_free(h: *mut HdHopf) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Depth report for a builtin extension, as JSON with the fields
/// extension/table/min_odd/min_even/min_depth/theorems.
///
/// # Safety
/// `ambient` and `side` must be NUL-terminated strings; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn hd_depth(
    ambient: *const c_char,
    side: *const c_char,
    n_max: u32,
    out: *mut *mut c_char,
) -> HdStatus {
    if out.is_null() {
        set_error("null out pointer");
        return HdStatus::HdNullArgument;
    }
    let ambient = match read_str(ambient) {
        Ok(s) => s,
        Err(st) => return st,
    };
    let side = match read_str(side) {
        Ok(s) => s,
        Err(st) => return st,
    };
    let ext = match resolve_extension(ambient, side) {
        Ok(e) => e,
        Err(e) => return fail(e),
    };
    let opts = DepthOptions { n_max: n_max as usize, rref: RrefOptions::default() };
    let report = match min_depth(&ext.name, &ext.emb, opts) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    let json = DepthReportJson::from_report(&report, Vec::new());
    match serde_json::to_string_pretty(&json) {
        Ok(s) => write_string(out, s),
        Err(e) => fail(HopfError::Json(e)),
    }
}

/// Ad-stability report for a builtin Hopf subalgebra pair, as JSON.
///
/// # Safety
/// `ambient` and `side` must be NUL-terminated strings; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn hd_normality(
    ambient: *const c_char,
    side: *const c_char,
    out: *mut *mut c_char,
) -> HdStatus {
    if out.is_null() {
        set_error("null out pointer");
        return HdStatus::HdNullArgument;
    }
    let ambient = match read_str(ambient) {
        Ok(s) => s,
        Err(st) => return st,
    };
    let side = match read_str(side) {
        Ok(s) => s,
        Err(st) => return st,
    };
    let ext = match resolve_extension(ambient, side) {
        Ok(e) => e,
        Err(e) => return fail(e),
    };
    let (Some(sub), Some(amb)) = (ext.sub_hopf, ext.amb_hopf) else {
        set_error("extension is not a Hopf subalgebra pair");
        return HdStatus::HdInvalid;
    };
    let hext = match HopfExtension::new(sub, amb, ext.emb) {
        Ok(x) => x,
        Err(e) => return fail(e),
    };
    let rep = is_normal(&hext);
    let payload = serde_json::json!({
        "extension": ext.name,
        "normal": rep.normal,
        "left_stable": rep.left_stable,
        "right_stable": rep.right_stable,
    });
    write_string(out, payload.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    fn cstr(s: &str) -> CString {
        CString::new(s).unwrap()
    }

    unsafe fn take_string(p: *mut c_char) -> String {
        let s = CStr::from_ptr(p).to_str().unwrap().to_string();
        hd_string_free(p);
        s
    }

    #[test]
    fn builtin_and_json_round_trip() {
        unsafe {
            let mut h: *mut HdHopf = ptr::null_mut();
            assert_eq!(hd_hopf_builtin(cstr("double:S3").as_ptr(), &mut h), HdStatus::HdOk);
            assert_eq!(hd_hopf_dim(h), 36);
            let mut s: *mut c_char = ptr::null_mut();
            assert_eq!(hd_hopf_to_json(h, &mut s), HdStatus::HdOk);
            let json = take_string(s);
            let mut h2: *mut HdHopf = ptr::null_mut();
            assert_eq!(hd_hopf_from_json(cstr(&json).as_ptr(), &mut h2), HdStatus::HdOk);
            assert_eq!(hd_hopf_dim(h2), 36);
            hd_hopf_free(h);
            hd_hopf_free(h2);
        }
    }

    #[test]
    fn check_report_is_all_pass() {
        unsafe {
            let mut h: *mut HdHopf = ptr::null_mut();
            assert_eq!(hd_hopf_builtin(cstr("hopf:Q8").as_ptr(), &mut h), HdStatus::HdOk);
            let mut s: *mut c_char = ptr::null_mut();
            assert_eq!(hd_hopf_check(h, &mut s), HdStatus::HdOk);
            let report = take_string(s);
            let v: serde_json::Value = serde_json::from_str(&report).unwrap();
            assert!(v["checks"].as_array().unwrap().iter().all(|c| c["ok"] == true));
            hd_hopf_free(h);
        }
    }

    #[test]
    fn depth_of_s3_double() {
        unsafe {
            let mut s: *mut c_char = ptr::null_mut();
            let st = hd_depth(cstr("double:S3").as_ptr(), cstr("group-side").as_ptr(), 4, &mut s);
            assert_eq!(st, HdStatus::HdOk);
            let v: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
            assert_eq!(v["min_depth"], 3);
            assert_eq!(v["min_odd"], 3);
        }
    }

    #[test]
    fn normality_via_ffi() {
        unsafe {
            let mut s: *mut c_char = ptr::null_mut();
            let st =
                hd_normality(cstr("double:S3").as_ptr(), cstr("dual-side").as_ptr(), &mut s);
            assert_eq!(st, HdStatus::HdOk);
            let v: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
            assert_eq!(v["normal"], true);
        }
    }

    #[test]
    fn generated_header_is_valid_c() {
        let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/hopfdepth.h");
        if !std::path::Path::new(header).exists() {
            return;
        }
        let out = std::process::Command::new("gcc")
            .args(["-fsyntax-only", "-x", "c", header])
            .output();
        match out {
            Ok(o) => assert!(
                o.status.success(),
                "header does not compile: {}",
                String::from_utf8_lossy(&o.stderr)
            ),
            Err(_) => {} // no C compiler around; skip
        }
    }

    #[test]
    fn error_paths_set_messages() {
        unsafe {
            let mut h: *mut HdHopf = ptr::null_mut();
            let st = hd_hopf_builtin(cstr("double:S9").as_ptr(), &mut h);
            assert_eq!(st, HdStatus::HdInvalid);
            let msg = CStr::from_ptr(hd_last_error()).to_str().unwrap();
            assert!(msg.contains("S9"));
            assert_eq!(hd_hopf_builtin(ptr::null(), &mut h), HdStatus::HdNullArgument);
            assert_eq!(hd_hopf_dim(ptr::null()), -1);
        }
    }
}
