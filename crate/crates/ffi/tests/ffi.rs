use std::ffi::{CStr, CString};
use std::ptr;

use hessgkm_ffi::*;

fn cs(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    let r = CStr::from_ptr(s).to_str().unwrap().to_owned();
    hg_string_free(s);
    r
}

unsafe fn parse(h: &str, w: &str) -> (*mut HgHessenberg, *mut HgPermutation) {
    let mut hp = ptr::null_mut();
    let mut wp = ptr::null_mut();
    assert_eq!(hg_hessenberg_parse(cs(h).as_ptr(), &mut hp), HgStatus::Ok);
    assert_eq!(hg_permutation_parse(cs(w).as_ptr(), &mut wp), HgStatus::Ok);
    (hp, wp)
}

#[test]
fn classify_round_trip() {
    unsafe {
        let (h, w) = parse("3,3,4,4", "3214");
        assert_eq!(hg_hessenberg_n(h), 4);
        assert_eq!(hg_permutation_length(w), 3);
        let mut adm = true;
        assert_eq!(hg_is_admissible(h, w, &mut adm), HgStatus::Ok);
        assert!(!adm);
        let mut dim = 0;
        assert_eq!(hg_cell_dimension(h, w, &mut dim), HgStatus::Ok);
        assert_eq!(dim, 1);

        let mut r = ptr::null_mut();
        assert_eq!(hg_classify(h, w, &mut r), HgStatus::Ok);
        assert_eq!(hg_report_intersection_irreducible(r), HgVerdict::No);
        assert_eq!(hg_report_hess_schubert_smooth(r), HgVerdict::Yes);
        assert_eq!(hg_report_intersection_smooth(r), HgVerdict::No);
        let mut s = ptr::null_mut();
        assert_eq!(hg_report_json(r, &mut s), HgStatus::Ok);
        assert!(take(s).contains("\"w_tilde\": \"4312\""));
        hg_report_free(r);
        hg_hessenberg_free(h);
        hg_permutation_free(w);
    }
}

#[test]
fn graphs_and_lists() {
    unsafe {
        let (h, w) = parse("2,3,3", "213");
        let mut g = ptr::null_mut();
        assert_eq!(hg_graph_build(h, w, &mut g), HgStatus::Ok);
        assert_eq!(hg_graph_vertex_count(g), 4);
        assert_eq!(hg_graph_edge_count(g), 3);
        assert!(hg_graph_is_connected(g));
        let mut s = ptr::null_mut();
        assert_eq!(hg_graph_dot(g, &mut s), HgStatus::Ok);
        assert!(take(s).starts_with("graph \"gkm_h233_w213\""));
        assert_eq!(hg_graph_json(g, &mut s), HgStatus::Ok);
        assert!(take(s).contains("\"edges\""));
        hg_graph_free(g);

        assert_eq!(hg_graph_build(h, ptr::null(), &mut g), HgStatus::Ok);
        assert_eq!(hg_graph_vertex_count(g), 6);
        hg_graph_free(g);

        let mut buf = [0u64; 3];
        let mut len = 0;
        assert_eq!(
            hg_betti_numbers(h, buf.as_mut_ptr(), 3, &mut len),
            HgStatus::Ok
        );
        assert_eq!((len, buf), (3, [1, 4, 1]));
        assert_eq!(
            hg_betti_numbers(h, buf.as_mut_ptr(), 2, &mut len),
            HgStatus::BufferTooSmall
        );
        assert_eq!(len, 3);

        assert_eq!(hg_enumerate_admissible(h, &mut s), HgStatus::Ok);
        assert_eq!(take(s).lines().count(), 4);
        hg_hessenberg_free(h);
        hg_permutation_free(w);
    }
}

#[test]
fn errors_set_message() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(
            hg_hessenberg_parse(cs("3,2,4,4").as_ptr(), &mut h),
            HgStatus::InvalidInput
        );
        assert!(h.is_null());
        let msg = CStr::from_ptr(hg_last_error_message()).to_str().unwrap();
        assert!(msg.contains("Hessenberg"), "{msg}");

        assert_eq!(
            hg_hessenberg_parse(ptr::null(), &mut h),
            HgStatus::NullPointer
        );
        assert_eq!(
            hg_hessenberg_parse(cs("2,2").as_ptr(), ptr::null_mut()),
            HgStatus::NullPointer
        );

        let (h, w) = parse("3,3,3", "1234");
        let mut adm = false;
        assert_eq!(hg_is_admissible(h, w, &mut adm), HgStatus::InvalidInput);
        assert!(!hg_last_error_message().is_null());

        let big = cs("9,9,9,9,9,9,9,9,9");
        let mut hb = ptr::null_mut();
        assert_eq!(hg_hessenberg_parse(big.as_ptr(), &mut hb), HgStatus::Ok);
        assert!(hg_last_error_message().is_null());
        let mut g = ptr::null_mut();
        assert_eq!(hg_graph_build(hb, ptr::null(), &mut g), HgStatus::TooLarge);

        assert_eq!(hg_hessenberg_n(ptr::null()), 0);
        assert_eq!(
            hg_report_hess_schubert_smooth(ptr::null()),
            HgVerdict::Unknown
        );
        hg_string_free(ptr::null_mut());
        hg_hessenberg_free(hb);
        hg_hessenberg_free(h);
        hg_permutation_free(w);
    }
}

#[test]
fn header_declares_every_entry_point() {
    let header = include_str!("../include/hessgkm.h");
    for name in [
        "hg_last_error_message",
        "hg_hessenberg_parse",
        "hg_classify",
        "hg_graph_build",
        "hg_betti_numbers",
        "typedef struct HgGraph HgGraph",
        "HG_STATUS_OK = 0",
    ] {
        assert!(header.contains(name), "{name}");
    }
}
