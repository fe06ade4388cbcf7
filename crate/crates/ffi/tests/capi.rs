use std::ffi::{c_char, c_int, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use tgcolor_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    let p = tg_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

unsafe fn parse(text: &str) -> *mut TgGraph {
    let mut g = ptr::null_mut();
    assert_eq!(tg_graph_parse(cstr(text).as_ptr(), &mut g), TgStatus::Ok);
    g
}

const TRIANGLE: &str = "tg 1\n3 2\n0 1 1 2\n0 2 1 2\n1 2 1 2\n";

#[test]
fn solve_verify_and_free() {
    unsafe {
        let g = parse(TRIANGLE);
        assert_eq!(tg_graph_vertex_count(g), 3);
        assert_eq!(tg_graph_edge_count(g), 3);

        let mut yes: c_int = -1;
        let mut w = ptr::null_mut();
        assert_eq!(tg_solve(g, 2, 2, &mut yes, &mut w), TgStatus::Ok);
        assert_eq!(yes, 1);
        let mut proper: c_int = -1;
        assert_eq!(tg_verify(g, 2, w, &mut proper, ptr::null_mut()), TgStatus::Ok);
        assert_eq!(proper, 1);
        let mut c = 0u32;
        assert_eq!(tg_coloring_get(w, 2, 1, &mut c), TgStatus::Ok);
        assert!((1..=2).contains(&c));
        assert_eq!(tg_coloring_get(w, 3, 0, &mut c), TgStatus::Invalid);
        tg_coloring_free(w);

        assert_eq!(tg_solve(g, 1, 2, &mut yes, &mut w), TgStatus::Ok);
        assert_eq!(yes, 0);
        assert!(w.is_null());

        let mut k = 0u32;
        assert_eq!(tg_minimize(g, 2, &mut k, ptr::null_mut()), TgStatus::Ok);
        assert_eq!(k, 2);
        tg_graph_free(g);
    }
}

#[test]
fn violation_message() {
    unsafe {
        let g = parse("tg 1\n2 1\n0 1 1\n");
        let mut col = ptr::null_mut();
        assert_eq!(tg_coloring_parse(cstr("tc 1\n2 1 2\n1 1\n").as_ptr(), &mut col), TgStatus::Ok);
        let mut proper: c_int = -1;
        let mut msg: *mut c_char = ptr::null_mut();
        assert_eq!(tg_verify(g, 1, col, &mut proper, &mut msg), TgStatus::Ok);
        assert_eq!(proper, 0);
        assert_eq!(CStr::from_ptr(msg).to_str().unwrap(), "VIOLATION t=1 edge=0,1");
        tg_string_free(msg);
        tg_coloring_free(col);
        tg_graph_free(g);
    }
}

#[test]
fn errors_and_nulls() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(tg_graph_parse(cstr("tg 1\n2 1\n0 5 1\n").as_ptr(), &mut g), TgStatus::Parse);
        assert!(g.is_null());
        assert!(last_error().contains("line 3"));

        assert_eq!(tg_graph_parse(ptr::null(), &mut g), TgStatus::NullPointer);
        let mut yes: c_int = 0;
        assert_eq!(tg_solve(ptr::null(), 1, 1, &mut yes, ptr::null_mut()), TgStatus::NullPointer);

        let tri = parse(TRIANGLE);
        assert_eq!(tg_solve(tri, 5, 2, &mut yes, ptr::null_mut()), TgStatus::Invalid);
        tg_graph_free(tri);

        tg_graph_free(ptr::null_mut());
        tg_coloring_free(ptr::null_mut());
        tg_string_free(ptr::null_mut());
    }
}

#[test]
fn kernel_and_round_trip() {
    unsafe {
        let g = parse("tg 1\n2 5\n0 1 1 2 3 4 5\n");
        let mut k = ptr::null_mut();
        assert_eq!(tg_kernelize(g, &mut k), TgStatus::Ok);
        assert_eq!(tg_graph_lifetime(k), 1);
        let mut text = ptr::null_mut();
        assert_eq!(tg_graph_serialize(k, &mut text), TgStatus::Ok);
        assert_eq!(CStr::from_ptr(text).to_str().unwrap(), "tg 1\n2 1\n0 1 1\n");
        tg_string_free(text);
        tg_graph_free(k);
        tg_graph_free(g);
    }
}

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(manifest_dir().join("include/tgcolor.h")).unwrap();
    let src = std::fs::read_to_string(manifest_dir().join("src/lib.rs")).unwrap();
    let exports: Vec<&str> = src
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() >= 10);
    for name in exports {
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
}

fn staticlib() -> Option<PathBuf> {
    // tests run from target/<profile>/deps
    let exe = std::env::current_exe().ok()?;
    let dir = exe.parent()?.parent()?;
    let lib = dir.join("libtgcolor_ffi.a");
    lib.exists().then_some(lib)
}

fn compiler() -> Option<&'static str> {
    ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| Command::new(c).arg("--version").output().is_ok_and(|o| o.status.success()))
}

#[test]
fn c_program_builds_and_runs() {
    let Some(cc) = compiler() else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    let src = manifest_dir().join("tests/c/smoke.c");
    let include = manifest_dir().join("include");
    let syntax = Command::new(cc)
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(&include)
        .arg(&src)
        .output()
        .unwrap();
    assert!(syntax.status.success(), "{}", String::from_utf8_lossy(&syntax.stderr));

    let Some(lib) = staticlib() else {
        eprintln!("static library not built; syntax check only");
        return;
    };
    let out: &Path = Path::new(env!("CARGO_TARGET_TMPDIR"));
    let bin = out.join("tgcolor_smoke");
    let link = Command::new(cc)
        .args(["-std=c99", "-I"])
        .arg(&include)
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .output()
        .unwrap();
    assert!(link.status.success(), "{}", String::from_utf8_lossy(&link.stderr));
    let run = Command::new(&bin).output().unwrap();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
}
