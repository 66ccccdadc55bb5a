//! `lattice disc | qform | complement | iso`.

use lattice_core::{
    discriminant_form, discriminant_group, io::parse_lattice, orthogonal_complement, qforms_isometric, GramLattice,
    Isometry,
};
use paper_verify::evidence::{big, text, uints};
use serde_json::{json, Value};

use super::Output;
use crate::error::{CliError, Result};
use crate::fixtures::read_input;

fn load(arg: &str) -> Result<GramLattice> {
    Ok(parse_lattice(&read_input(arg)?)?)
}

/// `(Z/3)^4`, `Z/2 x Z/6`, or `trivial`.
pub fn group_label(factors: &[u64]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < factors.len() {
        let j = i + factors[i..].iter().take_while(|&&d| d == factors[i]).count();
        parts.push(if j - i == 1 { format!("Z/{}", factors[i]) } else { format!("(Z/{})^{}", factors[i], j - i) });
        i = j;
    }
    if parts.is_empty() {
        "trivial".into()
    } else {
        parts.join(" x ")
    }
}

fn gram_text(g: &[Vec<i64>]) -> String {
    g.iter().map(|r| r.iter().map(|x| format!("{x:>4}")).collect::<String>()).collect::<Vec<_>>().join("\n")
}

pub fn disc(file: &str) -> Result<Output> {
    let l = load(file)?;
    let g = discriminant_group(&l)?;
    let (p, m) = l.signature()?;
    let label = group_label(&g.invariant_factors);
    let data = json!({
        "rank": l.rank(),
        "signature": [p, m],
        "determinant": big(&l.determinant()),
        "invariant_factors": uints(&g.invariant_factors),
        "group": label,
        "order": g.order(),
    });
    let text = format!(
        "rank          {}\nsignature     ({p}, {m})\ndeterminant   {}\ngroup         {label}  (order {})",
        l.rank(),
        l.determinant(),
        g.order()
    );
    Ok(Output::new(text, data))
}

pub fn qform(file: &str) -> Result<Output> {
    let l = load(file)?;
    let q = discriminant_form(&l)?;
    let rec = q.record();
    let mut lines = vec![format!("group         {}", group_label(&rec.invariant_factors))];
    for (i, (d, v)) in rec.invariant_factors.iter().zip(&rec.q_values).enumerate() {
        lines.push(format!("q(g{}) = {v} mod 2   (order {d})", i + 1));
    }
    for (i, row) in rec.b_values.iter().enumerate() {
        lines.push(format!("b(g{}, ·) = [{}] mod 1", i + 1, row.join(", ")));
    }
    let data = serde_json::to_value(&rec).expect("form record serializes");
    Ok(Output::new(lines.join("\n"), data))
}

/// Rows separated by `;`, entries by `,` or whitespace.
pub fn parse_rows(s: &str) -> Result<Vec<Vec<i64>>> {
    s.split(';')
        .map(str::trim)
        .filter(|r| !r.is_empty())
        .map(|r| {
            r.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|x| !x.is_empty())
                .map(|x| x.parse::<i64>().map_err(|e| CliError::Parse(format!("`{x}`: {e}"))))
                .collect()
        })
        .collect()
}

pub fn complement(file: &str, basis: &str) -> Result<Output> {
    let l = load(file)?;
    let sub = parse_rows(basis)?;
    let c = orthogonal_complement(&l, &sub)?;
    let det = c.lattice.determinant();
    let data = json!({
        "rank": c.lattice.rank(),
        "determinant": big(&det),
        "basis": c.basis,
        "gram": c.lattice.gram(),
    });
    let text = format!(
        "complement of rank {} and determinant {det}\nbasis\n{}\ngram\n{}",
        c.lattice.rank(),
        gram_text(&c.basis),
        gram_text(c.lattice.gram())
    );
    Ok(Output::new(text, data))
}

pub fn iso(a: &str, b: &str, bound: u64) -> Result<Output> {
    let (la, lb) = (load(a)?, load(b)?);
    let (qa, qb) = (discriminant_form(&la)?, discriminant_form(&lb)?);
    match qforms_isometric(&qa, &qb, bound) {
        Isometry::Isometric { images } => {
            let data = json!({
                "verdict": "isometric",
                "order": qa.order(),
                "generator_images": images.iter().map(|x| uints(x)).collect::<Vec<Value>>(),
            });
            let imgs: Vec<String> = images.iter().map(|x| format!("{x:?}")).collect();
            Ok(Output::new(format!("isometric  (order {}; generator images {})", qa.order(), imgs.join(" ")), data))
        }
        Isometry::NotIsometric(why) => {
            let data = json!({ "verdict": "not isometric", "reason": text(why.clone()) });
            Ok(Output::new(format!("not isometric: {why}"), data))
        }
        Isometry::Undecided(why) => Err(CliError::Bound(format!("isometry undecided: {why}"))),
    }
}
