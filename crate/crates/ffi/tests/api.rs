use std::ffi::{CStr, CString};
use std::ptr;

use geodetic_forge_ffi::*;

fn take(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { gf_string_free(s) };
    out
}

fn last_error() -> String {
    let p = gf_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn load(source: &str) -> *mut GfGroup {
    let src = CString::new(source).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(gf_group_load(src.as_ptr(), &mut g), GfStatus::Ok);
    g
}

#[test]
fn worked_example_round_trip() {
    let g = load("cyclic:4");
    let mut order = 0;
    assert_eq!(gf_group_order(g, &mut order), GfStatus::Ok);
    assert_eq!(order, 4);
    let mut geodetic = false;
    assert_eq!(gf_group_is_geodetic(g, &mut geodetic), GfStatus::Ok);
    assert!(geodetic);

    let mut sys = ptr::null_mut();
    assert_eq!(gf_nabla(g, 1, &mut sys), GfStatus::Ok);
    let mut letters = 0;
    assert_eq!(gf_system_letter_count(sys, &mut letters), GfStatus::Ok);
    assert_eq!(letters, 9);
    let mut reducing = false;
    assert_eq!(gf_system_is_length_reducing(sys, &mut reducing), GfStatus::Ok);
    assert!(reducing);

    let word = CString::new("a_1_1 a_1_2 a_1_3 b_1_1 b_1_2").unwrap();
    let mut nf = ptr::null_mut();
    assert_eq!(gf_system_normal_form(sys, word.as_ptr(), &mut nf), GfStatus::Ok);
    assert_eq!(take(nf), "c_1_3 c_1_2 c_1_1 c_1_3");

    // serialise and parse back
    let mut json = ptr::null_mut();
    assert_eq!(gf_system_to_json(sys, &mut json), GfStatus::Ok);
    let json = CString::new(take(json)).unwrap();
    let mut copy = ptr::null_mut();
    assert_eq!(gf_system_parse(json.as_ptr(), &mut copy), GfStatus::Ok);
    let (mut a, mut b) = (0, 0);
    gf_system_rule_count(sys, &mut a);
    gf_system_rule_count(copy, &mut b);
    assert_eq!(a, b);
    assert!(a > 0);

    unsafe {
        gf_system_free(copy);
        gf_system_free(sys);
        gf_group_free(g);
    }
}

#[test]
fn generators_and_reports() {
    let g = load("c4");
    let square = [1usize, 3];
    assert_eq!(unsafe { gf_group_set_generators(g, square.as_ptr(), 2) }, GfStatus::Ok);
    let mut geodetic = true;
    gf_group_is_geodetic(g, &mut geodetic);
    assert!(!geodetic);
    let mut json = ptr::null_mut();
    assert_eq!(gf_verify_geodeticity(g, 1, &mut json), GfStatus::Ok);
    let report: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
    assert_eq!(report["pass"], true);
    assert_eq!(report["details"]["length_reducing"], false);

    let bad = [1usize];
    assert_eq!(unsafe { gf_group_set_generators(g, bad.as_ptr(), 1) }, GfStatus::InvalidGroup);
    assert!(last_error().contains("inverse-closed"));
    unsafe { gf_group_free(g) };
}

#[test]
fn errors_are_reported() {
    let mut g = ptr::null_mut();
    let missing = CString::new("/no/such/group.json").unwrap();
    assert_eq!(gf_group_load(missing.as_ptr(), &mut g), GfStatus::Io);
    assert!(g.is_null());
    assert!(!last_error().is_empty());

    assert_eq!(gf_group_load(ptr::null(), &mut g), GfStatus::NullArgument);
    let mut n = 0;
    assert_eq!(gf_group_order(ptr::null(), &mut n), GfStatus::NullArgument);

    let rules = CString::new("b_1_1 c_1_1 -> _\nc_1_1 b_1_1 -> _\n").unwrap();
    let mut sys = ptr::null_mut();
    assert_eq!(gf_system_parse(rules.as_ptr(), &mut sys), GfStatus::Ok);
    let word = CString::new("b_1_1 q").unwrap();
    let mut nf = ptr::null_mut();
    assert_eq!(gf_system_normal_form(sys, word.as_ptr(), &mut nf), GfStatus::Parse);
    assert!(nf.is_null());
    let unknown = CString::new("b_2_1").unwrap();
    assert_eq!(gf_system_normal_form(sys, unknown.as_ptr(), &mut nf), GfStatus::InvalidSystem);

    // success clears the message
    let ok = CString::new("_").unwrap();
    assert_eq!(gf_system_normal_form(sys, ok.as_ptr(), &mut nf), GfStatus::Ok);
    assert_eq!(take(nf), "_");
    assert!(gf_last_error().is_null());
    unsafe {
        gf_system_free(sys);
        gf_string_free(ptr::null_mut());
        gf_group_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/geodetic_forge.h")).unwrap();
    for name in [
        "gf_last_error",
        "gf_string_free",
        "gf_group_load",
        "gf_group_set_generators",
        "gf_group_free",
        "gf_group_is_geodetic",
        "gf_nabla",
        "gf_system_parse",
        "gf_system_normal_form",
        "gf_system_to_json",
        "gf_system_free",
        "GF_STATUS_CAP_EXCEEDED",
    ] {
        assert!(header.contains(name), "{name}");
    }
    assert!(header.contains("typedef struct GfSystem GfSystem;"));
}
