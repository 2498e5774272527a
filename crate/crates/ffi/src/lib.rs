//! C ABI over `vogel-qdim`.
//!
//! Products cross the boundary as opaque `VqProduct` handles; strings returned
//! to the caller are owned by the caller and released with `vq_string_free`.
//! Every function returns a `VqStatus`; on failure `vq_last_error` describes
//! the most recent error on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use vogel_qdim::error::TermError;
use vogel_qdim::exact::Rational;
use vogel_qdim::rootsys::{cartan_power_weights, RootSystem};
use vogel_qdim::sinhprod::{SinhProduct, TermClass};
use vogel_qdim::tables::{self, Status};
use vogel_qdim::universal::{universal_x_permuted, CartanPowerIndex};
use vogel_qdim::vogel::{line_limit, vogel_point, AlgebraId, Permutation, VogelLine, VogelPoint};

/// Result codes. Zero is success.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VqStatus {
    Ok = 0,
    /// A null pointer or an unusable argument.
    InvalidArgument = 1,
    /// A string argument did not parse.
    Parse = 2,
    /// Zero over zero at the point; use a line limit.
    Indeterminate = 3,
    Singular = 4,
    /// The point is off the line, or the vanishing orders do not balance.
    LimitFailed = 5,
    /// The product has no finite nonzero x -> 0 limit.
    Unbalanced = 6,
    /// A bug: the library panicked.
    Internal = 7,
}

/// How the value at a table point compares with the tables.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VqVerdict {
    Match = 0,
    Mismatch = 1,
    SkippedBelowStableRank = 2,
    LimitCountMismatch = 3,
    /// The tables say nothing about this case.
    NotTabulated = 4,
}

/// Classification of a point for the universal formula.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VqClass {
    Zero = 0,
    Regular = 1,
    Singular = 2,
    Indeterminate = 3,
}

/// `coeff · Π sinh(x a) / Π sinh(x b)`, exact.
pub struct VqProduct(SinhProduct);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Error(VqStatus, String);

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

/// Runs `f`, recording its error and turning panics into `Internal`.
fn guard(f: impl FnOnce() -> Result<(), Error>) -> VqStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => VqStatus::Ok,
        Ok(Err(Error(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal error");
            VqStatus::Internal
        }
    }
}

fn invalid(what: &str) -> Error {
    Error(VqStatus::InvalidArgument, format!("{what} is null"))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Error> {
    if p.is_null() {
        return Err(invalid(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Error(VqStatus::Parse, format!("{what} is not UTF-8")))
}

unsafe fn parsed<T: std::str::FromStr>(p: *const c_char, what: &str) -> Result<T, Error>
where
    T::Err: std::fmt::Display,
{
    text(p, what)?
        .parse()
        .map_err(|e: T::Err| Error(VqStatus::Parse, e.to_string()))
}

/// Null means the identity.
unsafe fn permutation(p: *const c_char) -> Result<Permutation, Error> {
    if p.is_null() {
        Ok(Permutation::default())
    } else {
        parsed(p, "perm")
    }
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), Error> {
    if out.is_null() {
        return Err(invalid(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn product<'a>(p: *const VqProduct) -> Result<&'a SinhProduct, Error> {
    p.as_ref().map(|p| &p.0).ok_or_else(|| invalid("product"))
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior nul").into_raw()
}

fn boxed(p: SinhProduct) -> *mut VqProduct {
    Box::into_raw(Box::new(VqProduct(p)))
}

fn algebra_point(id: AlgebraId) -> Result<VogelPoint, Error> {
    vogel_point(id).map_err(|e| Error(VqStatus::InvalidArgument, e.to_string()))
}

fn universal(idx: CartanPowerIndex, perm: Permutation, p: &VogelPoint) -> Result<(TermClass, SinhProduct), Error> {
    universal_x_permuted(idx, perm, p).map_err(|e| match e {
        TermError::Singular { .. } => Error(VqStatus::Singular, e.to_string()),
        TermError::Indeterminate { .. } => Error(VqStatus::Indeterminate, e.to_string()),
    })
}

/// The most recent error message on this thread. The pointer stays valid
/// until the next failing call on the same thread; never free it.
#[no_mangle]
pub extern "C" fn vq_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version, static.
#[no_mangle]
pub extern "C" fn vq_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn vq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Releases a product. Null is ignored.
///
/// # Safety
/// `p` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn vq_product_free(p: *mut VqProduct) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// The universal function at a table algebra (`"E8"`, `"B5"`, `"so8"`),
/// with arguments permuted by `perm` (`"bag"`; null for the identity).
///
/// # Safety
/// String arguments must be null or nul-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vq_universal(
    algebra: *const c_char,
    k: u32,
    n: u32,
    perm: *const c_char,
    out: *mut *mut VqProduct,
) -> VqStatus {
    guard(|| {
        let id: AlgebraId = parsed(algebra, "algebra")?;
        let (_, x) = universal(CartanPowerIndex::new(k, n), permutation(perm)?, &algebra_point(id)?)?;
        write(out, boxed(x), "out")
    })
}

/// The universal function at a raw point whose coordinates are rationals
/// written `"p"` or `"p/q"`. `classification` receives the point's class,
/// also on `Indeterminate` and `Singular` failures; it may be null.
///
/// # Safety
/// String arguments must be null or nul-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vq_universal_at(
    alpha: *const c_char,
    beta: *const c_char,
    gamma: *const c_char,
    k: u32,
    n: u32,
    perm: *const c_char,
    classification: *mut VqClass,
    out: *mut *mut VqProduct,
) -> VqStatus {
    guard(|| {
        let p = VogelPoint::new(
            parsed::<Rational>(alpha, "alpha")?,
            parsed::<Rational>(beta, "beta")?,
            parsed::<Rational>(gamma, "gamma")?,
        );
        let result = universal(CartanPowerIndex::new(k, n), permutation(perm)?, &p);
        let c = match &result {
            Ok((TermClass::Zero, _)) => VqClass::Zero,
            Ok((TermClass::Singular, _)) | Err(Error(VqStatus::Singular, _)) => VqClass::Singular,
            Ok((TermClass::Indeterminate, _)) | Err(Error(VqStatus::Indeterminate, _)) => VqClass::Indeterminate,
            Ok((TermClass::Regular, _)) => VqClass::Regular,
            Err(_) => VqClass::Regular,
        };
        if !classification.is_null() {
            classification.write(c);
        }
        write(out, boxed(result?.1), "out")
    })
}

/// The universal function at a table algebra approached along `line`
/// (`"sl"`, `"so"`, `"sp"`, `"exc"`; null for the algebra's own line).
///
/// # Safety
/// String arguments must be null or nul-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vq_limit(
    algebra: *const c_char,
    k: u32,
    n: u32,
    perm: *const c_char,
    line: *const c_char,
    out: *mut *mut VqProduct,
) -> VqStatus {
    guard(|| {
        let id: AlgebraId = parsed(algebra, "algebra")?;
        let line: VogelLine = if line.is_null() {
            id.natural_line()
        } else {
            parsed(line, "line")?
        };
        let x = line_limit(
            CartanPowerIndex::new(k, n),
            permutation(perm)?,
            line,
            &algebra_point(id)?,
        )
        .map_err(|e| Error(VqStatus::LimitFailed, format!("{line} line: {e}")))?;
        write(out, boxed(x), "out")
    })
}

/// Weyl quantum dimension of the Cartan power `k·X2 + n·ad`. On the A series
/// with `k > 0` this is a sum of two conjugate representations, so the
/// result is `count` products written to `out[0..count]`; `capacity` is the
/// length of `out`, and 2 always suffices.
///
/// # Safety
/// `algebra` must be nul-terminated; `out` must hold `capacity` pointers.
#[no_mangle]
pub unsafe extern "C" fn vq_qdim(
    algebra: *const c_char,
    k: u32,
    n: u32,
    out: *mut *mut VqProduct,
    capacity: usize,
    count: *mut usize,
) -> VqStatus {
    guard(|| {
        let id: AlgebraId = parsed(algebra, "algebra")?;
        let bad = |e: vogel_qdim::error::AlgebraError| Error(VqStatus::InvalidArgument, e.to_string());
        let rs = RootSystem::build(id).map_err(bad)?;
        let weights = cartan_power_weights(id, k, n).map_err(bad)?;
        if out.is_null() || weights.len() > capacity {
            return Err(Error(
                VqStatus::InvalidArgument,
                format!("need room for {} products", weights.len()),
            ));
        }
        let products = weights
            .iter()
            .map(|w| rs.weyl_qdim(w).map_err(bad))
            .collect::<Result<Vec<_>, _>>()?;
        write(count, products.len(), "count")?;
        for (i, p) in products.into_iter().enumerate() {
            out.add(i).write(boxed(p));
        }
        Ok(())
    })
}

/// Compares the table entry for a case with the universal value. `line` as
/// in `vq_limit`, except that null evaluates directly where possible.
///
/// # Safety
/// String arguments must be null or nul-terminated; `verdict` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vq_verify_case(
    algebra: *const c_char,
    k: u32,
    n: u32,
    perm: *const c_char,
    line: *const c_char,
    verdict: *mut VqVerdict,
) -> VqStatus {
    guard(|| {
        let id: AlgebraId = parsed(algebra, "algebra")?;
        let line: Option<VogelLine> = if line.is_null() {
            None
        } else {
            Some(parsed(line, "line")?)
        };
        let v = match tables::table_entry(id, CartanPowerIndex::new(k, n), permutation(perm)?, line) {
            None => VqVerdict::NotTabulated,
            Some(entry) => match tables::verify_case(&entry).status {
                Status::Match => VqVerdict::Match,
                Status::Mismatch => VqVerdict::Mismatch,
                Status::SkippedBelowStableRank => VqVerdict::SkippedBelowStableRank,
                Status::LimitCountMismatch => VqVerdict::LimitCountMismatch,
            },
        };
        write(verdict, v, "verdict")
    })
}

/// Canonical JSON, `{"coeff":"p/q","num":[...],"den":[...]}`. Free with
/// `vq_string_free`.
///
/// # Safety
/// `p` must be a live product; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vq_product_to_json(p: *const VqProduct, out: *mut *mut c_char) -> VqStatus {
    guard(|| {
        let s = product(p)?.to_json();
        write(out, owned_string(s), "out")
    })
}

/// Parses canonical JSON back into a product.
///
/// # Safety
/// `json` must be nul-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vq_product_from_json(json: *const c_char, out: *mut *mut VqProduct) -> VqStatus {
    guard(|| {
        let p: SinhProduct =
            serde_json::from_str(text(json, "json")?).map_err(|e| Error(VqStatus::Parse, e.to_string()))?;
        write(out, boxed(p), "out")
    })
}

/// The ordinary dimension, the x -> 0 limit, as an exact rational string.
///
/// # Safety
/// `p` must be a live product; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vq_product_dimension(p: *const VqProduct, out: *mut *mut c_char) -> VqStatus {
    guard(|| {
        let d = product(p)?
            .dimension_limit()
            .map_err(|e| Error(VqStatus::Unbalanced, e.to_string()))?;
        write(out, owned_string(d.to_string()), "out")
    })
}

/// Floating-point value at `x`.
///
/// # Safety
/// `p` must be a live product; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vq_product_eval(p: *const VqProduct, x: f64, out: *mut f64) -> VqStatus {
    guard(|| {
        let v = product(p)?.eval_numeric(x);
        write(out, v, "out")
    })
}

/// Exact equality of canonical forms. `equal` receives 1 or 0.
///
/// # Safety
/// `a` and `b` must be live products; `equal` must be writable.
#[no_mangle]
pub unsafe extern "C" fn vq_product_equals(a: *const VqProduct, b: *const VqProduct, equal: *mut i32) -> VqStatus {
    guard(|| {
        let same = product(a)? == product(b)?;
        write(equal, same as i32, "equal")
    })
}
