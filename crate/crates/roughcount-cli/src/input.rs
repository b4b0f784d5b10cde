//! Ingestion of approximation spaces from JSON space files and CSV
//! information tables, plus the small comma-list parsers used by flags.

use std::fs;
use std::path::Path;

use serde::Deserialize;

use roughcount_core::space::{
    ApproximationSpace, ClosureKind, InfoTable, Relation, Universe,
};

use crate::{CliError, Result};

/// On-disk space document:
/// `{"elements": [...], "pairs": [["a","b"], ...], "closures": [...]}`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpaceFile {
    elements: Vec<String>,
    pairs: Vec<(String, String)>,
    #[serde(default)]
    closures: Vec<String>,
}

fn closure_kind(name: &str) -> Result<ClosureKind> {
    match name {
        "reflexive" => Ok(ClosureKind::Reflexive),
        "symmetric" => Ok(ClosureKind::Symmetric),
        "transitive" => Ok(ClosureKind::Transitive),
        other => Err(CliError::Parse(format!("unknown closure kind `{other}`"))),
    }
}

/// Parses a JSON space document and applies the requested closures.
pub fn space_from_json(text: &str) -> Result<ApproximationSpace> {
    let file: SpaceFile =
        serde_json::from_str(text).map_err(|e| CliError::Parse(format!("space file: {e}")))?;
    let universe = Universe::new(file.elements)?;
    let pairs = file
        .pairs
        .iter()
        .map(|(a, b)| Ok((universe.index_of(a)?, universe.index_of(b)?)))
        .collect::<std::result::Result<Vec<_>, roughcount_core::error::Error>>()?;
    let kinds = file
        .closures
        .iter()
        .map(|k| closure_kind(k))
        .collect::<Result<Vec<_>>>()?;
    let relation = Relation::new(universe.len(), pairs)?.close(kinds);
    Ok(ApproximationSpace::new(universe, relation)?)
}

/// Parses a CSV information table: header row, first column the element
/// label, remaining columns attributes.
pub fn table_from_csv(text: &str) -> Result<InfoTable> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(text.as_bytes());
    let headers = reader
        .headers()
        .map_err(|e| CliError::Parse(format!("csv header: {e}")))?
        .clone();
    if headers.len() < 2 {
        return Err(CliError::Parse(
            "csv needs a label column and at least one attribute".into(),
        ));
    }
    let attributes: Vec<String> = headers.iter().skip(1).map(str::to_owned).collect();
    let mut labels = Vec::new();
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| CliError::Parse(format!("csv row: {e}")))?;
        if record.len() != headers.len() {
            return Err(CliError::Parse(format!(
                "csv row for `{}` has {} fields, expected {}",
                record.get(0).unwrap_or(""),
                record.len(),
                headers.len()
            )));
        }
        labels.push(record[0].to_owned());
        rows.push(record.iter().skip(1).map(str::to_owned).collect());
    }
    let universe = Universe::new(labels)?;
    Ok(InfoTable::new(universe, attributes, rows)?)
}

/// Loads a space from a path: `.csv` goes through the information-table
/// route (using `attrs`, or all attributes), anything else is JSON.
pub fn load_space(path: &Path, attrs: Option<&[String]>) -> Result<ApproximationSpace> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    if path.extension().is_some_and(|e| e == "csv") {
        let table = table_from_csv(&text)?;
        let names: Vec<&str> = match attrs {
            Some(list) => list.iter().map(String::as_str).collect(),
            None => table.attributes().iter().map(String::as_str).collect(),
        };
        Ok(table.ind_from_table(&names)?)
    } else {
        space_from_json(&text)
    }
}

/// Comma-separated labels → indices (for `--order`, `--set`, …).
pub fn parse_labels<'a>(spec: &'a str) -> Vec<&'a str> {
    spec.split(',').map(str::trim).filter(|s| !s.is_empty()).collect()
}

/// A nonnegative rational flag value: `"2"`, `"7/12"`, …
pub fn parse_rational(spec: &str) -> Result<roughcount_core::Rational> {
    spec.parse()
        .map_err(|e| CliError::Parse(format!("rational `{spec}`: {e}")))
}
