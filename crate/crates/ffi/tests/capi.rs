use std::ffi::{c_char, c_int, CStr, CString};
use std::ptr;

use dposet_ffi::*;

fn parse(text: &str) -> *mut DpDoublePoset {
    let c = CString::new(text).unwrap();
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { dp_parse(c.as_ptr(), &mut d) }, DpStatus::Ok);
    d
}

/// Takes ownership of a library string.
fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { dp_string_free(s) };
    out
}

fn string_result(f: impl FnOnce(*mut *mut c_char) -> DpStatus) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(f(&mut s), DpStatus::Ok);
    take(s)
}

fn last_error() -> String {
    take(dp_last_error())
}

#[test]
fn handles_round_trip() {
    let d = parse("dp 3\nr1: 0<1, 1<2\nr2: 2<0");
    assert_eq!(unsafe { dp_size(d) }, 3);
    let text = string_result(|out| unsafe { dp_serialize(d, out) });
    let e = parse(&text);
    let mut same: c_int = 0;
    assert_eq!(unsafe { dp_is_isomorphic(d, e, &mut same) }, DpStatus::Ok);
    assert_eq!(same, 1);
    assert_eq!(
        string_result(|out| unsafe { dp_canonical_key(d, out) }),
        string_result(|out| unsafe { dp_canonical_key(e, out) })
    );
    unsafe {
        dp_free(d);
        dp_free(e);
        dp_free(ptr::null_mut());
        dp_string_free(ptr::null_mut());
    }
}

#[test]
fn algebra_calls() {
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { dp_point(&mut p) }, DpStatus::Ok);
    let mut pp = ptr::null_mut();
    assert_eq!(unsafe { dp_compose(p, p, &mut pp) }, DpStatus::Ok);
    assert_eq!(unsafe { dp_size(pp) }, 2);

    let mut count = 0u64;
    assert_eq!(unsafe { dp_pairing(p, p, &mut count) }, DpStatus::Ok);
    assert_eq!(count, 1);
    assert_eq!(unsafe { dp_pairing(pp, pp, &mut count) }, DpStatus::Ok);
    assert_eq!(count, 2);

    assert_eq!(string_result(|out| unsafe { dp_coproduct(p, out) }), "1*00|01 + 1*01|00");
    assert_eq!(string_result(|out| unsafe { dp_antipode(p, out) }), "-1*01");
    assert_eq!(string_result(|out| unsafe { dp_gamma(p, out) }), "1*M(1)");
    assert_eq!(string_result(|out| unsafe { dp_linear_extensions(pp, out) }), "12\n21");
    assert_eq!(string_result(|out| unsafe { dp_lmap(pp, out) }), "1*12 + 1*21");

    let (s21, s12) = ([2usize, 1], [1usize, 2]);
    let (mut a, mut b) = (ptr::null_mut(), ptr::null_mut());
    assert_eq!(unsafe { dp_from_permutation(s21.as_ptr(), 2, &mut a) }, DpStatus::Ok);
    assert_eq!(unsafe { dp_from_permutation(s12.as_ptr(), 2, &mut b) }, DpStatus::Ok);
    let key12 = string_result(|out| unsafe { dp_canonical_key(b, out) });
    assert_eq!(string_result(|out| unsafe { dp_internal_product(a, a, out) }), format!("1*{key12}"));
    unsafe {
        for h in [p, pp, a, b] {
            dp_free(h);
        }
    }
}

#[test]
fn lr_counts() {
    let row = [2usize];
    let mut shape = ptr::null_mut();
    assert_eq!(unsafe { dp_from_partition(row.as_ptr(), 1, &mut shape) }, DpStatus::Ok);
    let (mut c, mut m, mut p) = (9u64, 9u64, 9u64);
    assert_eq!(unsafe { dp_lr_counts(shape, row.as_ptr(), 1, &mut c, &mut m, &mut p) }, DpStatus::Ok);
    assert_eq!((c, m, p), (1, 1, 1));
    let column = [1usize, 1];
    assert_eq!(unsafe { dp_lr_counts(shape, column.as_ptr(), 2, &mut c, &mut m, &mut p) }, DpStatus::Ok);
    assert_eq!((c, m, p), (0, 0, 0));
    let big = [3usize];
    assert_eq!(
        unsafe { dp_lr_counts(shape, big.as_ptr(), 1, &mut c, &mut m, &mut p) },
        DpStatus::SizeMismatch
    );
    unsafe { dp_free(shape) };
}

#[test]
fn error_codes() {
    let text = CString::new("dp 2\nr1: 0<1, 1<0\nr2:").unwrap();
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { dp_parse(text.as_ptr(), &mut d) }, DpStatus::Cycle);
    assert!(d.is_null());
    assert!(last_error().starts_with("CycleError"));
    let name = unsafe { CStr::from_ptr(dp_status_name(DpStatus::Cycle)) };
    assert_eq!(name.to_str().unwrap(), "CycleError");

    let text = CString::new("dp 2\nr1 0<1\nr2:").unwrap();
    assert_eq!(unsafe { dp_parse(text.as_ptr(), &mut d) }, DpStatus::Parse);
    assert!(last_error().contains("line 2"));

    assert_eq!(unsafe { dp_parse(ptr::null(), &mut d) }, DpStatus::NullPointer);
    assert_eq!(unsafe { dp_size(ptr::null()) }, 0);
    let mut count = 0u64;
    assert_eq!(unsafe { dp_pairing(ptr::null(), ptr::null(), &mut count) }, DpStatus::NullPointer);

    let bad = [1usize, 1];
    assert_eq!(unsafe { dp_from_permutation(bad.as_ptr(), 2, &mut d) }, DpStatus::InvalidPermutation);
    let bad = [1usize, 2];
    assert_eq!(unsafe { dp_from_partition(bad.as_ptr(), 2, &mut d) }, DpStatus::InvalidPartition);

    let mut p = ptr::null_mut();
    assert_eq!(unsafe { dp_point(&mut p) }, DpStatus::Ok);
    assert!(dp_last_error().is_null());
    let mut pp = ptr::null_mut();
    assert_eq!(unsafe { dp_compose(p, p, &mut pp) }, DpStatus::Ok);
    let anti = parse("dp 2\nr1:\nr2:");
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { dp_linear_extensions(anti, &mut s) }, DpStatus::NotSpecial);
    assert!(s.is_null());

    let invalid = [0xffu8, 0];
    assert_eq!(
        unsafe { dp_parse(invalid.as_ptr().cast(), &mut d) },
        DpStatus::InvalidUtf8
    );
    unsafe {
        dp_free(p);
        dp_free(pp);
        dp_free(anti);
    }
}

#[test]
fn check_suite() {
    let suite = CString::new("all").unwrap();
    let mut passed: c_int = 0;
    let mut report = ptr::null_mut();
    assert_eq!(unsafe { dp_check(suite.as_ptr(), 2, 5, &mut passed, &mut report) }, DpStatus::Ok);
    assert_eq!(passed, 1);
    assert!(take(report).ends_with("result: pass (39 properties)"));

    let bogus = CString::new("bogus").unwrap();
    assert_eq!(
        unsafe { dp_check(bogus.as_ptr(), 2, 5, &mut passed, &mut report) },
        DpStatus::UnknownSuite
    );
}

#[test]
fn header_declares_every_export() {
    let dir = env!("CARGO_MANIFEST_DIR");
    let header = std::fs::read_to_string(format!("{dir}/include/dposet.h")).unwrap();
    let source = std::fs::read_to_string(format!("{dir}/src/lib.rs")).unwrap();
    let exports: Vec<&str> = source
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() > 15);
    for name in exports {
        let declared = header
            .match_indices(&format!("{name}("))
            .any(|(i, _)| matches!(header.as_bytes()[i - 1], b' ' | b'*'));
        assert!(declared, "{name} missing from header");
    }
    assert!(header.contains("typedef struct DpDoublePoset DpDoublePoset;"));
    assert!(header.contains("DP_STATUS_OK = 0"));
}
