//! `code kernel | weights | griesmer | search`.

use std::collections::BTreeSet;

use paper_verify::evidence::uints;
use serde_json::{json, Value};
use ternary_codes::{
    exhaustive_no_code, format_rows, griesmer_max_dim, kernel_f3, lines_count, parse_matrix, subspace_count,
    weight_distribution, Certificate, SearchBounds, TernaryCode,
};

use super::Output;
use crate::error::{CliError, Result};
use crate::fixtures::read_input;

fn load_matrix(arg: &str) -> Result<Vec<Vec<u8>>> {
    parse_matrix(&read_input(arg)?).map_err(|e| CliError::Parse(format!("{arg}: {e}")))
}

fn basis_json(c: &TernaryCode) -> Value {
    Value::Array(c.basis.iter().map(|r| uints(r)).collect())
}

fn describe(c: &TernaryCode, weights: Option<&[usize]>) -> Output {
    let mut text = format!("length {}, dim {}, {} lines", c.length, c.dim(), lines_count(c));
    if !c.basis.is_empty() {
        text += &format!("\nbasis\n{}", format_rows(&c.basis));
    }
    let mut data = json!({ "length": c.length, "dim": c.dim(), "lines": lines_count(c), "basis": basis_json(c) });
    if let Some(w) = weights {
        let mut hist = std::collections::BTreeMap::new();
        for &x in w {
            *hist.entry(x).or_insert(0usize) += 1;
        }
        let h: Vec<String> = hist.iter().map(|(k, n)| format!("{k}:{n}")).collect();
        text += &format!("\nweights (weight:count) {}", if h.is_empty() { "none".into() } else { h.join(" ") });
        data["weights"] = json!(w);
    }
    Output::new(text, data)
}

/// Null space over 𝔽₃ of the matrix in `file`.
pub fn kernel(file: &str) -> Result<Output> {
    let m = load_matrix(file)?;
    let n = m.first().map_or(0, Vec::len);
    Ok(describe(&kernel_f3(&m, n), None))
}

/// Code spanned by the rows of `file`, with its weight distribution.
pub fn weights(file: &str, max_words: usize) -> Result<Output> {
    let m = load_matrix(file)?;
    let n = m.first().map_or(0, Vec::len);
    let rows: Vec<Vec<i64>> = m.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
    let c = TernaryCode::from_generators(n, &rows)?;
    let w = weight_distribution(&c, max_words)?;
    Ok(describe(&c, Some(&w)))
}

pub fn griesmer(n: usize, d: usize) -> Result<Output> {
    if d == 0 || d > n {
        return Err(CliError::Precondition(format!("need 1 ≤ d ≤ n, got n = {n}, d = {d}")));
    }
    let k = griesmer_max_dim(n, d);
    Ok(Output::new(format!("{k}"), json!({ "n": n, "d": d, "max_dim": k })))
}

pub fn search(n: usize, k: usize, weights: &[usize], bounds: SearchBounds) -> Result<Output> {
    if weights.is_empty() {
        return Err(CliError::Parse("--weights needs at least one weight".into()));
    }
    let allowed: BTreeSet<usize> = weights.iter().copied().collect();
    let total = subspace_count(n, k);
    Ok(match exhaustive_no_code(n, k, &allowed, bounds)? {
        Certificate::NoneExists { subspaces_examined } => Output::new(
            format!("none exists: all {subspaces_examined} subspaces of dimension {k} in F3^{n} examined (of {total})"),
            json!({ "certificate": "none exists", "subspaces_examined": subspaces_examined, "subspaces_total": total }),
        ),
        Certificate::Witness { code } => Output::new(
            format!("witness\n{}", format_rows(&code.basis)),
            json!({ "certificate": "witness", "basis": basis_json(&code), "subspaces_total": total }),
        ),
    })
}
