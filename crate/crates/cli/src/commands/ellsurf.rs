//! `ellsurf fibers | height | twist | basechange | family`.

use elliptic_surfaces::expr::parse_rational;
use elliptic_surfaces::{
    euler_number, height_pairing, parse_model, twist_family_section, FiberData, KodairaType, RatFunc, RatPoly,
    SectionData, WeierstrassModel,
};
use paper_verify::evidence::{big, rat, text};
use serde_json::{json, Value};

use super::Output;
use crate::error::{CliError, Result};
use crate::fixtures::read_input;

fn load(arg: &str) -> Result<WeierstrassModel> {
    Ok(parse_model(&read_input(arg)?)?)
}

fn fiber_rows(fibers: &[FiberData]) -> (String, Value) {
    let mut lines = vec![format!("{:<16} {:<6} {:>8} {:>6} {:>11}", "place", "type", "ord(Δ)", "euler", "components")];
    let mut rows = Vec::new();
    for f in fibers {
        lines.push(format!(
            "{:<16} {:<6} {:>8} {:>6} {:>11}",
            f.place.to_string(),
            f.kodaira.to_string(),
            f.ord_disc,
            f.euler_contribution,
            f.component_count
        ));
        rows.push(json!({
            "place": f.place.to_string(),
            "degree": f.multiplicity(),
            "type": f.kodaira.to_string(),
            "ord_disc": f.ord_disc,
            "euler": f.euler_contribution,
            "components": f.component_count,
        }));
    }
    (lines.join("\n"), Value::Array(rows))
}

fn model_report(w: &WeierstrassModel) -> Result<Output> {
    let fibers = w.singular_fibers()?;
    let (table, rows) = fiber_rows(&fibers);
    let e = euler_number(&fibers);
    let coeffs: Vec<String> = w.coefficients().iter().map(|c| c.to_string()).collect();
    let disc = w.discriminant();
    let mut text = format!("a1..a6       [{}]\ndiscriminant {disc}\neuler        {e}\n{table}", coeffs.join(", "));
    let mut data = json!({
        "coefficients": { "a1": coeffs[0], "a2": coeffs[1], "a3": coeffs[2], "a4": coeffs[3], "a6": coeffs[4] },
        "discriminant": disc.to_string(),
        "euler": e,
        "fibers": rows,
    });
    if e.is_multiple_of(12) {
        text += &format!("\nchi          {}", e / 12);
        data["chi"] = json!(e / 12);
    }
    Ok(Output::new(text, data))
}

pub fn fibers(model: &str) -> Result<Output> {
    model_report(&load(model)?)
}

pub fn twist(model: &str, by: &str) -> Result<Output> {
    let d = RatPoly::parse(by)?;
    model_report(&load(model)?.quadratic_twist(&d)?)
}

pub fn basechange(model: &str, by: &str) -> Result<Output> {
    let r = RatFunc::parse(by)?;
    model_report(&load(model)?.base_change(&r)?)
}

/// Comma-separated integers.
fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>>
where
    T::Err: std::fmt::Display,
{
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| x.parse::<T>().map_err(|e| CliError::Parse(format!("{what} `{x}`: {e}"))))
        .collect()
}

/// Height of a section from its contact data, over either an explicit list
/// of geometric fibers or the singular fibers of a model.
pub fn height(chi: u32, contacts: &str, po: i64, fibers: Option<&str>, model: Option<&str>) -> Result<Output> {
    let fibers: Vec<FiberData> = match (fibers, model) {
        (Some(list), None) => {
            let kinds: Vec<KodairaType> = parse_list(list, "fiber type")?;
            kinds.iter().enumerate().map(|(i, &k)| FiberData::abstract_fiber(&format!("F{}", i + 1), k)).collect()
        }
        (None, Some(m)) => load(m)?.singular_fibers()?,
        _ => return Err(CliError::Parse("give exactly one of --fibers or --model".into())),
    };
    let contact: Vec<usize> = parse_list(contacts, "contact")?;
    let s = SectionData::new("P", contact, po, false);
    let h = height_pairing(&s, chi, &fibers)?;
    let (table, rows) = fiber_rows(&fibers);
    Ok(Output::new(
        format!("height {h}\n{table}"),
        json!({ "height": rat(&h), "chi": chi, "po": po, "contacts": s.contact, "fibers": rows }),
    ))
}

pub fn family(b: &str) -> Result<Output> {
    let b = parse_rational(b)?;
    let m = twist_family_section(&b)?;
    let verified = m.verified();
    let y = m.y.as_ref().map(|y| y.to_string());
    let mut t = format!(
        "b = {}\na = {}\nc = {}\nx = {}\nrhs = {} = {} · ({})^2\nmembership {}",
        m.b,
        m.a,
        m.c,
        m.x,
        m.rhs,
        m.kappa,
        m.sqrt,
        if verified { "verified" } else { "FAILED" }
    );
    t += &match &y {
        Some(y) => format!("\ny = {y}  (defined over Q)"),
        None => format!("\nsquare class {}  (y defined over Q(√{}))", m.square_class, m.square_class),
    };
    let data = json!({
        "b": rat(&m.b),
        "a": rat(&m.a),
        "c": rat(&m.c),
        "x": m.x.to_string(),
        "rhs": m.rhs.to_string(),
        "kappa": rat(&m.kappa),
        "sqrt": m.sqrt.to_string(),
        "square_class": big(&m.square_class),
        "y": y.map_or(Value::Null, text),
        "verified": verified,
    });
    if !verified {
        return Err(CliError::Precondition(format!("membership check failed for b = {}", m.b)));
    }
    Ok(Output::new(t, data))
}
