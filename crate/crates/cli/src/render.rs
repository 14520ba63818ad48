//! Report rendering: pretty JSON that round-trips byte-identically, and a
//! flat CSV view of the records.

use serde_json::Value;

use crate::cli::Format;
use crate::report::RunReport;

pub fn render(report: &RunReport, format: Format) -> String {
    match format {
        Format::Json => render_json(report),
        Format::Csv => render_csv(report),
    }
}

/// Canonical form: serde_json pretty printing plus one trailing newline.
/// Parsing this output and re-rendering reproduces it byte for byte
/// because object key order is preserved and no floats appear.
pub fn render_json(report: &RunReport) -> String {
    let mut out = serde_json::to_string_pretty(&report.to_json())
        .expect("report values contain no non-serializable data");
    out.push('\n');
    out
}

/// One row per record; columns are record keys in first-seen order.
/// Nested values are embedded as compact JSON. The outcome travels on the
/// exit code, not in the table.
pub fn render_csv(report: &RunReport) -> String {
    let mut columns: Vec<String> = Vec::new();
    for record in &report.records {
        if let Value::Object(map) = record {
            for key in map.keys() {
                if !columns.iter().any(|c| c == key) {
                    columns.push(key.clone());
                }
            }
        }
    }
    if columns.is_empty() {
        return String::new();
    }
    let mut out = String::new();
    out.push_str(&columns.iter().map(|c| csv_escape(c)).collect::<Vec<_>>().join(","));
    out.push('\n');
    for record in &report.records {
        let empty = serde_json::Map::new();
        let map = record.as_object().unwrap_or(&empty);
        let row: Vec<String> = columns
            .iter()
            .map(|c| csv_escape(&cell_text(map.get(c))))
            .collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

fn cell_text(v: Option<&Value>) -> String {
    match v {
        None | Some(Value::Null) => String::new(),
        Some(Value::String(s)) => s.clone(),
        Some(Value::Bool(b)) => b.to_string(),
        Some(Value::Number(n)) => n.to_string(),
        Some(other) => serde_json::to_string(other).expect("records are plain data"),
    }
}

fn csv_escape(cell: &str) -> String {
    if cell.contains([',', '"', '\n']) {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;
    use std::time::Instant;

    fn sample() -> RunReport {
        RunReport::new(
            "solve",
            serde_json::Map::new(),
            vec![
                json!({"equation": "pow-minus", "a": [1], "b": [2], "classification": "known-exceptional"}),
                json!({"equation": "pow-minus", "a": [2], "b": [2], "classification": "trivial", "note": "a,b"}),
            ],
            Instant::now(),
        )
    }

    #[test]
    fn json_round_trips_byte_identically() {
        let text = render_json(&sample());
        let reparsed: Value = serde_json::from_str(&text).unwrap();
        let again = format!("{}\n", serde_json::to_string_pretty(&reparsed).unwrap());
        assert_eq!(text, again, "parse then re-serialize must be the identity");
    }

    #[test]
    fn csv_has_uniform_rows_and_escaped_cells() {
        let text = render_csv(&sample());
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0], "equation,a,b,classification,note");
        assert!(lines[1].starts_with("pow-minus,[1],[2],known-exceptional"));
        assert!(lines[2].ends_with("\"a,b\""), "embedded commas must be quoted");
    }

    #[test]
    fn empty_record_lists_render_as_empty_csv() {
        let report = RunReport::new("x", serde_json::Map::new(), Vec::new(), Instant::now());
        assert_eq!(render_csv(&report), "");
    }
}
