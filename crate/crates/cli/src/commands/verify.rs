//! `verify [--tag T] [--id ID]...`: run the claim registry.

use paper_verify::{run_all, run_claim, Report};

use super::Output;
use crate::error::{CliError, Result};

pub fn verify(tag: Option<&str>, ids: &[String], verbose: bool) -> Result<Output> {
    let report = if ids.is_empty() {
        run_all(tag)
    } else {
        let recs = ids
            .iter()
            .map(|id| run_claim(id).map_err(|e| CliError::Parse(e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Report::from_records(recs)
    };
    let mut text = report.to_table();
    if verbose {
        let details: Vec<String> = report.claims.iter().map(|c| format!("{}: {}", c.id, c.detail)).collect();
        text = format!("{}\n{text}", details.join("\n"));
    }
    let data = serde_json::from_str(&report.to_json()).expect("report is valid JSON");
    let mut out = Output::new(text, data);
    out.failed = !report.is_success();
    Ok(out)
}
