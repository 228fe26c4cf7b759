//! Reading input files and resolving fixture names.

use std::env;
use std::fs;
use std::path::{Path, PathBuf};

use torsionlab::knots::fixtures::fixture;

pub const FIXTURES_ENV: &str = "TORSIONLAB_FIXTURES";

pub fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

/// A PD diagram given as a path or a fixture name. Names are looked up in
/// `$TORSIONLAB_FIXTURES` when set, otherwise among the built-in fixtures.
pub fn diagram_text(arg: &str) -> Result<(String, String), String> {
    let path = Path::new(arg);
    if path.is_file() {
        return Ok((arg.to_string(), read(path)?));
    }
    let file = fixture(arg).map(|f| f.file);
    if let Some(dir) = env::var_os(FIXTURES_ENV) {
        let dir = PathBuf::from(dir);
        let candidates = [
            Some(arg.to_string()),
            Some(format!("{arg}.pd")),
            file.map(str::to_string),
        ];
        for c in candidates.into_iter().flatten() {
            let p = dir.join(c);
            if p.is_file() {
                return Ok((arg.to_string(), read(&p)?));
            }
        }
        return Err(format!("no diagram `{arg}` in {}", dir.display()));
    }
    match fixture(arg) {
        Some(f) => Ok((arg.to_string(), f.text.to_string())),
        None => Err(format!("no such file or fixture: {arg}")),
    }
}
