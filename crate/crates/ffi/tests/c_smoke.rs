use std::path::{Path, PathBuf};
use std::process::Command;

/// The staticlib built alongside this test binary. Test builds leave it in
/// `deps/` next to the test executable.
fn staticlib() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().join("libinertial_ffi.a")
}

#[test]
fn c_program_links_against_staticlib() {
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let lib = staticlib();
    assert!(lib.exists(), "missing {}", lib.display());
    let out_dir = tempfile::tempdir().unwrap();
    let exe = out_dir.path().join("smoke");
    let status = Command::new("cc")
        .arg(manifest.join("tests").join("smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("C compiler available");
    assert!(status.success());
    let run = Command::new(&exe).output().unwrap();
    assert!(run.status.success(), "exit {:?}", run.status);
    // Petersen graph
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "6 0 4 5/2 3");
}
