//! Lattice file format: `{"rank": n, "gram": [[...], ...], "label": "..."}`.

use serde::{Deserialize, Serialize};

use crate::error::{LatticeError, Result};
use crate::lattice::GramLattice;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeFile {
    pub rank: usize,
    pub gram: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl LatticeFile {
    pub fn from_lattice(l: &GramLattice) -> Self {
        LatticeFile { rank: l.rank(), gram: l.gram().to_vec(), label: l.label().map(str::to_string) }
    }
}

/// Parse the JSON text of a lattice file. Shape errors are reported as
/// parse errors; mathematical rejections (odd, degenerate) keep their kind.
pub fn parse_lattice(text: &str) -> Result<GramLattice> {
    let f: LatticeFile = serde_json::from_str(text).map_err(|e| LatticeError::Parse(e.to_string()))?;
    if f.gram.len() != f.rank || f.gram.iter().any(|r| r.len() != f.rank) {
        return Err(LatticeError::Parse(format!("gram is not {0}x{0}", f.rank)));
    }
    let l = GramLattice::new(f.gram)?;
    Ok(match f.label {
        Some(lbl) => l.with_label(lbl),
        None => l,
    })
}

pub fn to_json(l: &GramLattice) -> String {
    serde_json::to_string_pretty(&LatticeFile::from_lattice(l)).expect("lattice serializes")
}
