//! Input resolution: an existing path is read from disk; otherwise the
//! argument is looked up by name in the bundled `fixtures/` corpus.

use crate::error::{CliError, Result};

macro_rules! fixture {
    ($dir:literal, $file:literal) => {
        (concat!($dir, "/", $file), include_str!(concat!("../../../fixtures/", $dir, "/", $file)))
    };
}

/// `(relative path, contents)` of every bundled fixture.
pub const FIXTURES: &[(&str, &str)] = &[
    fixture!("lattices", "4A2.json"),
    fixture!("lattices", "A2E6.json"),
    fixture!("lattices", "E8.json"),
    fixture!("lattices", "U.json"),
    fixture!("lattices", "U2A2E6E8.json"),
    fixture!("lattices", "U3U6.json"),
    fixture!("lattices", "U6E8E8.json"),
    fixture!("lattices", "UU6.json"),
    fixture!("models", "X3333.json"),
    fixture!("models", "X431.json"),
    fixture!("models", "X44.json"),
    fixture!("models", "X6321.json"),
    fixture!("graphs", "four-i3-bisection.json"),
    fixture!("graphs", "i6-i3-i2-bisection.json"),
    fixture!("graphs", "ii-star.json"),
    fixture!("codes", "id4.txt"),
];

fn stem(path: &str) -> &str {
    let file = path.rsplit('/').next().unwrap_or(path);
    file.split_once('.').map_or(file, |(s, _)| s)
}

/// Bundled fixture matching `name` as `dir/file`, `file` or bare stem.
pub fn bundled(name: &str) -> Option<&'static str> {
    FIXTURES
        .iter()
        .find(|(p, _)| *p == name || p.rsplit('/').next() == Some(name) || stem(p) == name)
        .map(|(_, text)| *text)
}

pub fn read_input(arg: &str) -> Result<String> {
    let path = std::path::Path::new(arg);
    if path.exists() {
        return std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{arg}: {e}")));
    }
    bundled(arg).map(str::to_string).ok_or_else(|| CliError::Parse(format!("{arg}: no such file or bundled fixture")))
}
