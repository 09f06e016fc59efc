use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use hyperf_ffi::*;

fn last_error() -> String {
    let p = hyperf_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn build_and_query() {
    unsafe {
        let edges: [usize; 6] = [0, 1, 2, 1, 2, 3];
        let mut h = ptr::null_mut();
        assert_eq!(hyperf_hypergraph_new(4, 3, edges.as_ptr(), 2, &mut h), HyperfStatus::Ok);
        let (mut n, mut r, mut e) = (0, 0, 0);
        assert_eq!(hyperf_hypergraph_counts(h, &mut n, &mut r, &mut e), HyperfStatus::Ok);
        assert_eq!((n, r, e), (4, 3, 2));
        let (mut num, mut den) = (0, 0);
        assert_eq!(hyperf_mad(h, &mut num, &mut den), HyperfStatus::Ok);
        assert_eq!((num, den), (3, 2));
        let mut d = 0;
        assert_eq!(hyperf_degeneracy(h, &mut d), HyperfStatus::Ok);
        assert_eq!(d, 1);
        let mut m = 0;
        assert_eq!(hyperf_m_value(h, 0, 0, &mut m), HyperfStatus::Ok);
        assert_eq!(m, 4);
        hyperf_hypergraph_free(h);
    }
}

#[test]
fn parse_errors_carry_messages() {
    unsafe {
        let mut h = ptr::null_mut();
        let bad = CString::new("hypergraph n=3 r=2\ne 0 7\n").unwrap();
        assert_eq!(hyperf_hypergraph_parse(bad.as_ptr(), &mut h), HyperfStatus::InvalidArgument);
        assert!(last_error().contains('7'));
        let junk = CString::new("graph\n").unwrap();
        assert_eq!(hyperf_hypergraph_parse(junk.as_ptr(), &mut h), HyperfStatus::Parse);
        assert!(h.is_null());
        let ok = CString::new("hypergraph n=3 r=2\ne 0 1\ne 1 2\ne 0 2\n").unwrap();
        assert_eq!(hyperf_hypergraph_parse(ok.as_ptr(), &mut h), HyperfStatus::Ok);
        assert!(hyperf_last_error_message().is_null());
        hyperf_hypergraph_free(h);
        assert_eq!(hyperf_hypergraph_parse(ptr::null(), &mut h), HyperfStatus::NullPointer);
    }
}

#[test]
fn f_values_and_certificates() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(hyperf_hypergraph_complete(6, 2, &mut h), HyperfStatus::Ok);
        let mut f = 0;
        let mut d = ptr::null_mut();
        assert_eq!(hyperf_f(h, 1, 1, HyperfMethod::ViaM, 0, &mut f, &mut d), HyperfStatus::Ok);
        assert_eq!(f, 4);
        assert!(!d.is_null());
        let mut count = 0;
        assert_eq!(hyperf_f_count(d, 1, 1, &mut count), HyperfStatus::Ok);
        assert_eq!(count, 4);
        hyperf_orientation_free(d);
        assert_eq!(hyperf_f(h, 1, 1, HyperfMethod::ClosedForm, 0, &mut f, &mut d), HyperfStatus::Ok);
        assert!(d.is_null());
        assert_eq!(hyperf_f(h, 1, 1, HyperfMethod::Brute, 10, &mut f, ptr::null_mut()), HyperfStatus::BudgetExceeded);
        let mut chi = 0;
        assert_eq!(hyperf_chi_r(h, 1, 0, &mut chi), HyperfStatus::Ok);
        assert_eq!(chi, 6);
        let mut b = 0;
        assert_eq!(hyperf_b_value(h, 1, 0, &mut b), HyperfStatus::Ok);
        assert_eq!(b, 2);
        hyperf_hypergraph_free(h);
        let mut closed = 0;
        assert_eq!(hyperf_closed_form_complete(12, 3, 2, &mut closed), HyperfStatus::Ok);
        assert_eq!(closed, 0);
        assert_eq!(hyperf_closed_form_complete(12, 3, 0, &mut closed), HyperfStatus::InvalidArgument);
    }
}

#[test]
fn ramsey_triples() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(hyperf_hypergraph_complete(6, 3, &mut h), HyperfStatus::Ok);
        let mut chi = 0;
        assert_eq!(hyperf_chi_r(h, 2, 0, &mut chi), HyperfStatus::Ok);
        assert_eq!(chi, 3);
        hyperf_hypergraph_free(h);
    }
}

/// Compiles and runs a C program against the generated header and the
/// static library, when a C compiler is around.
#[test]
fn c_program_links_and_runs() {
    let crate_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let profile_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile_dir.join("libhyperf_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler or static library");
        return;
    }
    let out = std::env::temp_dir().join(format!("hyperf_c_smoke_{}", std::process::id()));
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-I"])
        .arg(crate_dir.join("include"))
        .arg(crate_dir.join("tests/c_smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let run = Command::new(&out).output().unwrap();
    let _ = std::fs::remove_file(&out);
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
}
