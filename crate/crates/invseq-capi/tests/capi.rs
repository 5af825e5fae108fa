//! Exercises the C ABI exactly as a foreign caller would: raw pointers,
//! status codes, owned strings.

use invseq_capi::*;
use std::ffi::{CStr, CString};
use std::ptr;

fn last_error() -> String {
    unsafe { CStr::from_ptr(invseq_last_error()) }
        .to_string_lossy()
        .into_owned()
}

fn make_seq(values: &[u64]) -> *mut InvseqSeq {
    let mut out = ptr::null_mut();
    let status = unsafe { invseq_seq_new(values.as_ptr(), values.len(), &mut out) };
    assert_eq!(status, InvseqStatus::Ok, "{}", last_error());
    out
}

fn make_perm(values: &[u64]) -> *mut InvseqPerm {
    let mut out = ptr::null_mut();
    let status = unsafe { invseq_perm_new(values.as_ptr(), values.len(), &mut out) };
    assert_eq!(status, InvseqStatus::Ok, "{}", last_error());
    out
}

fn seq_values(handle: *const InvseqSeq) -> Vec<u64> {
    let len = unsafe { invseq_seq_len(handle) };
    let mut buf = vec![0u64; len];
    let status = unsafe { invseq_seq_values(handle, buf.as_mut_ptr(), len) };
    assert_eq!(status, InvseqStatus::Ok);
    buf
}

fn take_string(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    let owned = unsafe { CStr::from_ptr(s) }.to_string_lossy().into_owned();
    unsafe { invseq_string_free(s) };
    owned
}

#[test]
fn sequence_round_trip_and_validation() {
    let seq = make_seq(&[0, 0, 2, 0]);
    assert_eq!(unsafe { invseq_seq_len(seq) }, 4);
    assert_eq!(seq_values(seq), vec![0, 0, 2, 0]);
    unsafe { invseq_seq_free(seq) };

    let mut out = ptr::null_mut();
    let status = unsafe { invseq_seq_new([0u64, 2].as_ptr(), 2, &mut out) };
    assert_eq!(status, InvseqStatus::Domain);
    assert!(last_error().contains("position 2"));

    let status = unsafe { invseq_seq_new(ptr::null(), 3, &mut out) };
    assert_eq!(status, InvseqStatus::NullArg);
}

#[test]
fn class_counting() {
    let mut class = ptr::null_mut();
    let name = CString::new("C").unwrap();
    assert_eq!(
        unsafe { invseq_class_parse(name.as_ptr(), &mut class) },
        InvseqStatus::Ok
    );
    let expected = [1u64, 2, 6, 23, 102, 495];
    for (n, want) in (1..=6).zip(expected) {
        let mut count = 0u64;
        assert_eq!(
            unsafe { invseq_count(class, n, &mut count) },
            InvseqStatus::Ok
        );
        assert_eq!(count, want);
    }
    unsafe { invseq_class_free(class) };

    let bad = CString::new("(>,?,>)").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { invseq_class_parse(bad.as_ptr(), &mut out) },
        InvseqStatus::Usage
    );
}

#[test]
fn bijections_and_domain_errors() {
    let input = make_seq(&[0, 0, 0, 0, 3, 3, 0, 3, 3, 3, 4, 6]);
    let name = CString::new("gamma").unwrap();
    let mut image = ptr::null_mut();
    assert_eq!(
        unsafe { invseq_map_seq(name.as_ptr(), input, &mut image) },
        InvseqStatus::Ok
    );
    assert_eq!(seq_values(image), vec![0, 1, 2, 3, 0, 0, 0, 0, 5, 7, 9, 11]);
    unsafe { invseq_seq_free(image) };
    unsafe { invseq_seq_free(input) };

    // 0,1,0,0 contains a 100 pattern: outside the moving domain.
    let outside = make_seq(&[0, 1, 0, 0]);
    let mut image = ptr::null_mut();
    assert_eq!(
        unsafe { invseq_map_seq(name.as_ptr(), outside, &mut image) },
        InvseqStatus::Domain
    );
    assert!(last_error().contains("100"));
    unsafe { invseq_seq_free(outside) };
}

#[test]
fn permutation_codes() {
    let p = make_perm(&[6, 1, 3, 2, 5, 4, 7]);
    let bcode = CString::new("bcode").unwrap();
    let mut code = ptr::null_mut();
    assert_eq!(
        unsafe { invseq_encode_perm(bcode.as_ptr(), p, &mut code) },
        InvseqStatus::Ok
    );
    assert_eq!(seq_values(code), vec![0, 1, 1, 2, 1, 4, 0]);

    let mut back = ptr::null_mut();
    assert_eq!(
        unsafe { invseq_decode_to_perm(bcode.as_ptr(), code, &mut back) },
        InvseqStatus::Ok
    );
    let len = unsafe { invseq_perm_len(back) };
    let mut buf = vec![0u64; len];
    assert_eq!(
        unsafe { invseq_perm_values(back, buf.as_mut_ptr(), len) },
        InvseqStatus::Ok
    );
    assert_eq!(buf, vec![6, 1, 3, 2, 5, 4, 7]);
    unsafe { invseq_perm_free(back) };
    unsafe { invseq_seq_free(code) };
    unsafe { invseq_perm_free(p) };
}

#[test]
fn profile_and_trace_json() {
    let seq = make_seq(&[0, 0, 0, 0, 3, 3, 0, 3, 3, 3, 4, 6]);
    let profile = take_string(unsafe { invseq_profile_json(seq) });
    let value: serde_json::Value = serde_json::from_str(&profile).unwrap();
    assert_eq!(value["pk"], serde_json::json!([5, 8]));
    assert_eq!(value["tr"], serde_json::json!([1, 2, 3, 6, 8, 9]));

    let trace = take_string(unsafe { invseq_trace_json(seq) });
    let value: serde_json::Value = serde_json::from_str(&trace).unwrap();
    assert_eq!(value["steps"].as_array().unwrap().len(), 8);
    assert_eq!(
        value["image"],
        serde_json::json!([0, 1, 2, 3, 0, 0, 0, 0, 5, 7, 9, 11])
    );
    unsafe { invseq_seq_free(seq) };

    let outside = make_seq(&[0, 1, 0, 0]);
    assert!(unsafe { invseq_trace_json(outside) }.is_null());
    assert!(last_error().contains("not in"));
    unsafe { invseq_seq_free(outside) };
}

#[test]
fn gamma_and_verify() {
    let mut class = ptr::null_mut();
    let name = CString::new("T").unwrap();
    assert_eq!(
        unsafe { invseq_class_parse(name.as_ptr(), &mut class) },
        InvseqStatus::Ok
    );
    let via = CString::new("poly").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { invseq_gamma_json(class, 3, via.as_ptr(), &mut out) },
        InvseqStatus::Ok
    );
    let value: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(value["gamma"], serde_json::json!([1, 2]));
    unsafe { invseq_class_free(class) };

    let check = CString::new("prop-2.2").unwrap();
    let mut all_pass = 0i32;
    let mut report = ptr::null_mut();
    assert_eq!(
        unsafe { invseq_verify_json(check.as_ptr(), 5, &mut all_pass, &mut report) },
        InvseqStatus::Ok
    );
    assert_eq!(all_pass, 1);
    let value: serde_json::Value = serde_json::from_str(&take_string(report)).unwrap();
    assert_eq!(value[0]["status"], "pass");

    let unknown = CString::new("nope").unwrap();
    let status = unsafe { invseq_verify_json(unknown.as_ptr(), 0, &mut all_pass, &mut report) };
    assert_eq!(status, InvseqStatus::Usage);
}
