use serde::Serialize;

use crate::args::Format;
use crate::CliError;

/// Version tag carried by every JSON document.
pub const SCHEMA: &str = "sasaki-cli/1";

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema: &'static str,
    command: &'a str,
    #[serde(flatten)]
    body: &'a T,
}

pub fn json<T: Serialize>(command: &str, body: &T) -> Result<String, CliError> {
    let env = Envelope { schema: SCHEMA, command, body };
    let mut text = serde_json::to_string(&env).map_err(|e| CliError::Io(e.to_string()))?;
    text.push('\n');
    Ok(text)
}

/// Key/value lines with the keys padded to a common width.
#[derive(Default)]
pub struct KvTable {
    rows: Vec<(String, String)>,
}

impl KvTable {
    pub fn row(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.rows.push((key.to_string(), value.to_string()));
        self
    }

    pub fn render(&self) -> String {
        let width = self.rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in &self.rows {
            let pad = width - k.chars().count();
            out.push_str(&format!("{k}{}  {v}\n", " ".repeat(pad)));
        }
        out
    }
}

/// Column-aligned table with a header rule, cells separated by ` | `.
pub fn grid(header: &[&str], rows: &[Vec<String>]) -> String {
    let widths: Vec<usize> = (0..header.len())
        .map(|i| {
            rows.iter()
                .map(|r| r[i].chars().count())
                .chain([header[i].chars().count()])
                .max()
                .unwrap()
        })
        .collect();
    let line = |cells: Vec<String>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        format!("{}\n", padded.join(" | ").trim_end())
    };
    let mut out = line(header.iter().map(|h| h.to_string()).collect());
    let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
    out.push_str(&format!("{}\n", rule.join("-+-")));
    for r in rows {
        out.push_str(&line(r.clone()));
    }
    out
}

/// Renders `body` per the requested format; `table` is only called for tables.
pub fn emit<T: Serialize>(
    format: Format,
    command: &str,
    body: &T,
    table: impl FnOnce(&T) -> String,
) -> Result<String, CliError> {
    match format {
        Format::Json => json(command, body),
        Format::Table => Ok(table(body)),
    }
}
