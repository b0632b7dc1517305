use std::io::Write;

use serde::Serialize;
use serde_json::{Map, Value};

use super::VerifyError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    /// One JSON object per line.
    #[default]
    Json,
    /// Header row plus one row per record; nested keys joined with `.`.
    Csv,
}

pub fn write_rows<T: Serialize, W: Write>(
    rows: &[T],
    format: Format,
    mut out: W,
) -> Result<(), VerifyError> {
    let io = |e: std::io::Error| VerifyError::Io(e.to_string());
    match format {
        Format::Json => {
            for row in rows {
                serde_json::to_writer(&mut out, row).map_err(|e| VerifyError::Io(e.to_string()))?;
                out.write_all(b"\n").map_err(io)?;
            }
        }
        Format::Csv => {
            let mut flat_rows = Vec::with_capacity(rows.len());
            let mut columns = Vec::new();
            for row in rows {
                let value =
                    serde_json::to_value(row).map_err(|e| VerifyError::Io(e.to_string()))?;
                let mut flat = Map::new();
                flatten("", &value, &mut flat);
                merge_columns(&mut columns, flat.keys());
                flat_rows.push(flat);
            }
            let mut w = csv::Writer::from_writer(out);
            let csv_err = |e: csv::Error| VerifyError::Io(e.to_string());
            if !rows.is_empty() {
                w.write_record(&columns).map_err(csv_err)?;
            }
            for flat in &flat_rows {
                w.write_record(
                    columns
                        .iter()
                        .map(|c| flat.get(c).map(cell).unwrap_or_default()),
                )
                .map_err(csv_err)?;
            }
            w.flush().map_err(io)?;
        }
    }
    Ok(())
}

fn is_child(parent: &str, key: &str) -> bool {
    key.len() > parent.len() && key.starts_with(parent) && key.as_bytes()[parent.len()] == b'.'
}

/// Adds a row's keys to the column list. A `null` nested object shows up as
/// a bare key in some rows and as dotted keys in others; the dotted form
/// wins and siblings stay adjacent.
fn merge_columns<'a>(columns: &mut Vec<String>, keys: impl Iterator<Item = &'a String>) {
    for key in keys {
        if columns.contains(key) || columns.iter().any(|c| is_child(key, c)) {
            continue;
        }
        if let Some(pos) = columns.iter().position(|c| is_child(c, key)) {
            columns[pos] = key.clone();
            continue;
        }
        let sibling = key
            .rsplit_once('.')
            .and_then(|(parent, _)| columns.iter().rposition(|c| is_child(parent, c)));
        match sibling {
            Some(pos) => columns.insert(pos + 1, key.clone()),
            None => columns.push(key.clone()),
        }
    }
}

fn flatten(prefix: &str, value: &Value, out: &mut Map<String, Value>) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, v, out);
            }
        }
        other => {
            out.insert(prefix.to_string(), other.clone());
        }
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(cell).collect::<Vec<_>>().join(";"),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize)]
    struct Inner {
        x: u8,
        y: Option<f64>,
    }

    #[derive(Serialize)]
    struct Row {
        id: &'static str,
        inner: Inner,
        sizes: Vec<usize>,
    }

    #[test]
    fn csv_flattens_nested_fields() {
        let rows = [Row {
            id: "A",
            inner: Inner { x: 1, y: None },
            sizes: vec![7, 9],
        }];
        let mut buf = Vec::new();
        write_rows(&rows, Format::Csv, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "id,inner.x,inner.y,sizes\nA,1,,7;9\n"
        );
    }

    #[derive(Serialize)]
    struct Sparse {
        id: u8,
        inner: Option<Inner>,
        done: bool,
    }

    #[test]
    fn csv_columns_survive_missing_nested_values() {
        let rows = [
            Sparse {
                id: 1,
                inner: None,
                done: true,
            },
            Sparse {
                id: 2,
                inner: Some(Inner { x: 5, y: Some(1.5) }),
                done: false,
            },
        ];
        let mut buf = Vec::new();
        write_rows(&rows, Format::Csv, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "id,inner.x,inner.y,done\n1,,,true\n2,5,1.5,false\n"
        );
    }

    #[test]
    fn json_lines() {
        let rows = [Row {
            id: "A",
            inner: Inner { x: 1, y: Some(0.5) },
            sizes: vec![],
        }];
        let mut buf = Vec::new();
        write_rows(&rows, Format::Json, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "{\"id\":\"A\",\"inner\":{\"x\":1,\"y\":0.5},\"sizes\":[]}\n"
        );
    }
}
