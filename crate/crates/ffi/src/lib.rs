//! C interface to geodetic-forge.
//!
//! Groups and rewriting systems are opaque handles, created by
//! `gf_group_load`, `gf_nabla` or `gf_system_parse` and released with the
//! matching `_free`. Every call
//! returns a [`GfStatus`]; on failure, [`gf_last_error`] describes the
//! problem for the calling thread. Strings handed out by the library must
//! be released with [`gf_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use geodetic_forge::caps::Caps;
use geodetic_forge::error::Error;
use geodetic_forge::graph::cayley_graph;
use geodetic_forge::group::{check_genset, FiniteGroup, GenSet, GroupSource};
use geodetic_forge::letter::{OrderSpec, Word};
use geodetic_forge::nabla::nabla;
use geodetic_forge::rewriting::{RewritingSystem, Strategy};
use geodetic_forge::verify::verify_theorem_b;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GfStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidGroup = 4,
    InvalidSystem = 5,
    CapExceeded = 6,
    Io = 7,
    Panic = 8,
}

/// A finite group together with a generating set.
pub struct GfGroup {
    group: FiniteGroup,
    gens: GenSet,
}

pub struct GfSystem {
    system: RewritingSystem,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(e: &Error) -> GfStatus {
    match e {
        Error::InvalidTable(_)
        | Error::NotAssociative(..)
        | Error::NoIdentity
        | Error::NoInverse(_)
        | Error::GeneratorOutOfRange(_)
        | Error::DuplicateGenerator(_)
        | Error::ContainsIdentity
        | Error::NotInverseClosed(_)
        | Error::DoesNotGenerate(_) => GfStatus::InvalidGroup,
        Error::UnknownLetter(_)
        | Error::MissingInverse(_)
        | Error::InvalidRule(_)
        | Error::AlphabetCollision(_)
        | Error::SystemNotInverseClosed => GfStatus::InvalidSystem,
        Error::EnumerationCapExceeded(_)
        | Error::CircuitCapExceeded(_)
        | Error::StepCapExceeded(_)
        | Error::CensusCapExceeded(_) => GfStatus::CapExceeded,
        Error::Io(_) => GfStatus::Io,
        _ => GfStatus::Parse,
    }
}

/// Runs `f`, turning errors and panics into a status and a stored message.
fn guard(f: impl FnOnce() -> Result<(), GfStatus>) -> GfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            GfStatus::Ok
        }
        Ok(Err(status)) => status,
        Err(_) => {
            set_error("internal panic");
            GfStatus::Panic
        }
    }
}

trait OrStatus<T> {
    fn or_status(self) -> Result<T, GfStatus>;
}

impl<T> OrStatus<T> for geodetic_forge::Result<T> {
    fn or_status(self) -> Result<T, GfStatus> {
        self.map_err(|e| {
            set_error(e.to_string());
            status_of(&e)
        })
    }
}

fn non_null<'a, T>(p: *const T) -> Result<&'a T, GfStatus> {
    // SAFETY: callers pass handles obtained from this library or null.
    unsafe { p.as_ref() }.ok_or_else(|| {
        set_error("null argument");
        GfStatus::NullArgument
    })
}

fn text<'a>(p: *const c_char) -> Result<&'a str, GfStatus> {
    if p.is_null() {
        set_error("null string");
        return Err(GfStatus::NullArgument);
    }
    // SAFETY: non-null, and the caller promises a NUL-terminated string.
    unsafe { CStr::from_ptr(p) }.to_str().map_err(|_| {
        set_error("string is not UTF-8");
        GfStatus::InvalidUtf8
    })
}

fn out<T>(slot: *mut T, value: T) -> Result<(), GfStatus> {
    if slot.is_null() {
        set_error("null output pointer");
        return Err(GfStatus::NullArgument);
    }
    // SAFETY: non-null, and the caller provides a writable slot.
    unsafe { slot.write(value) };
    Ok(())
}

fn out_string(slot: *mut *mut c_char, s: String) -> Result<(), GfStatus> {
    let c = CString::new(s).map_err(|_| {
        set_error("output contains a NUL byte");
        GfStatus::Parse
    })?;
    out(slot, c.into_raw())
}

fn caps() -> Result<Caps, GfStatus> {
    Caps::from_env().or_status()
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn gf_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn gf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Loads a group from a source string (`cyclic:<m>`, `klein`, `s3`, or a
/// JSON file path). The generating set is the file's, or every non-identity
/// element.
#[no_mangle]
pub extern "C" fn gf_group_load(source: *const c_char, group: *mut *mut GfGroup) -> GfStatus {
    guard(|| {
        let source: GroupSource = text(source)?.parse().or_status()?;
        let (g, file_gens) = source.load().or_status()?;
        let gens = match file_gens {
            Some(e) => check_genset(&g, &e).or_status()?,
            None => GenSet::all_nonidentity(&g),
        };
        out(group, Box::into_raw(Box::new(GfGroup { group: g, gens })))
    })
}

/// Replaces the generating set with `len` element indices.
///
/// # Safety
/// `elements` must point to `len` readable values.
#[no_mangle]
pub unsafe extern "C" fn gf_group_set_generators(group: *mut GfGroup, elements: *const usize, len: usize) -> GfStatus {
    guard(|| {
        if group.is_null() || (elements.is_null() && len > 0) {
            set_error("null argument");
            return Err(GfStatus::NullArgument);
        }
        let group = &mut *group;
        let list = if len == 0 { &[][..] } else { std::slice::from_raw_parts(elements, len) };
        group.gens = check_genset(&group.group, list).or_status()?;
        Ok(())
    })
}

/// # Safety
/// `group` must come from [`gf_group_load`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn gf_group_free(group: *mut GfGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

#[no_mangle]
pub extern "C" fn gf_group_order(group: *const GfGroup, order: *mut usize) -> GfStatus {
    guard(|| out(order, non_null(group)?.group.order()))
}

/// Whether the Cayley graph has unique shortest paths.
#[no_mangle]
pub extern "C" fn gf_group_is_geodetic(group: *const GfGroup, geodetic: *mut bool) -> GfStatus {
    guard(|| {
        let g = non_null(group)?;
        let verdict = cayley_graph(&g.group, &g.gens).is_geodetic().or_status()?;
        out(geodetic, verdict.is_geodetic())
    })
}

/// Builds the rewriting system of the n-fold subdivision.
#[no_mangle]
pub extern "C" fn gf_nabla(group: *const GfGroup, n: usize, system: *mut *mut GfSystem) -> GfStatus {
    guard(|| {
        let g = non_null(group)?;
        let nab = nabla(&g.group, &g.gens, n, &OrderSpec::Canonical, &caps()?).or_status()?;
        out(system, Box::into_raw(Box::new(GfSystem { system: nab.into_system() })))
    })
}

/// Geodeticity check report as JSON.
#[no_mangle]
pub extern "C" fn gf_verify_geodeticity(group: *const GfGroup, n: usize, json: *mut *mut c_char) -> GfStatus {
    guard(|| {
        let g = non_null(group)?;
        let report = verify_theorem_b(&g.group, &g.gens, n, &caps()?).or_status()?.without_timing();
        out_string(json, serde_json::to_string(&report).map_err(Error::from).or_status()?)
    })
}

/// Parses a system from its JSON form or from `LHS -> RHS` lines.
#[no_mangle]
pub extern "C" fn gf_system_parse(source: *const c_char, system: *mut *mut GfSystem) -> GfStatus {
    guard(|| {
        let sys = RewritingSystem::load(text(source)?).or_status()?;
        out(system, Box::into_raw(Box::new(GfSystem { system: sys })))
    })
}

/// # Safety
/// `system` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn gf_system_free(system: *mut GfSystem) {
    if !system.is_null() {
        drop(Box::from_raw(system));
    }
}

#[no_mangle]
pub extern "C" fn gf_system_letter_count(system: *const GfSystem, count: *mut usize) -> GfStatus {
    guard(|| out(count, non_null(system)?.system.alphabet().len()))
}

#[no_mangle]
pub extern "C" fn gf_system_rule_count(system: *const GfSystem, count: *mut usize) -> GfStatus {
    guard(|| out(count, non_null(system)?.system.rules().len()))
}

#[no_mangle]
pub extern "C" fn gf_system_is_length_reducing(system: *const GfSystem, reducing: *mut bool) -> GfStatus {
    guard(|| out(reducing, non_null(system)?.system.is_length_reducing()))
}

/// Leftmost normal form of a space-separated word; `_` is the empty word.
#[no_mangle]
pub extern "C" fn gf_system_normal_form(
    system: *const GfSystem,
    word: *const c_char,
    normal_form: *mut *mut c_char,
) -> GfStatus {
    guard(|| {
        let sys = &non_null(system)?.system;
        let w: Word = text(word)?.parse().or_status()?;
        let nf = sys.normal_form(&w, Strategy::Leftmost, caps()?.rewrite_steps).or_status()?;
        out_string(normal_form, nf.word.to_string())
    })
}

/// The system as JSON: alphabet, involution and rules.
#[no_mangle]
pub extern "C" fn gf_system_to_json(system: *const GfSystem, json: *mut *mut c_char) -> GfStatus {
    guard(|| {
        let file = non_null(system)?.system.to_file();
        out_string(json, serde_json::to_string(&file).map_err(Error::from).or_status()?)
    })
}
