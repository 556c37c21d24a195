#![allow(dead_code)]

use std::fs;
use std::path::PathBuf;
use std::process::Command;

pub struct Case {
    pub name: String,
    pub status: i32,
    pub args: Vec<String>,
}

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn cases() -> Vec<Case> {
    let text = fs::read_to_string(golden_dir().join("cases.txt")).expect("cases.txt");
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let mut it = l.split_whitespace();
            let name = it.next().unwrap().to_string();
            let status = it.next().and_then(|s| s.parse().ok()).expect("exit status");
            Case { name, status, args: it.map(String::from).collect() }
        })
        .collect()
}

/// Runs the binary for `case` and returns (exit status, stdout, stderr).
pub fn run(case: &Case) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_graphgenus"))
        .args(&case.args)
        .current_dir(golden_dir())
        .env_remove("GRAPHGENUS_MAX_K")
        .output()
        .expect("spawn graphgenus");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

/// Compares one case against `<name>.out` (stdout, or stderr for exit 2).
/// With `GRAPHGENUS_BLESS` set the file is rewritten instead.
pub fn check(case: &Case) -> Result<(), String> {
    let (status, stdout, stderr) = run(case);
    let got = if case.status == 2 { stderr } else { stdout };
    let path = golden_dir().join(format!("{}.out", case.name));
    if std::env::var_os("GRAPHGENUS_BLESS").is_some() {
        fs::write(&path, &got).unwrap();
    }
    if status != case.status {
        return Err(format!("{}: exit status {status}, expected {}", case.name, case.status));
    }
    let want = fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if got != want {
        return Err(format!("{}: output differs\n--- expected\n{want}--- got\n{got}", case.name));
    }
    Ok(())
}
