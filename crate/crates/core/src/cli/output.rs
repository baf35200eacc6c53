use serde::Serialize;
use serde_json::Value;

use crate::heights::HeightValue;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub name: String,
    pub value: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub abs_error: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub std_error: Option<f64>,
    pub method: String,
    pub certificate: Option<String>,
    /// A check reported by this row failed.
    #[serde(skip)]
    pub failed: bool,
}

impl Row {
    pub fn new(name: impl Into<String>, value: impl Into<Value>, method: impl Into<String>) -> Self {
        Row {
            name: name.into(),
            value: value.into(),
            abs_error: None,
            std_error: None,
            method: method.into(),
            certificate: None,
            failed: false,
        }
    }

    pub fn height(name: impl Into<String>, h: &HeightValue) -> Self {
        let mut r = Row::new(name, h.value, h.tag());
        if h.method == crate::heights::Method::MonteCarlo {
            r.std_error = Some(h.abs_error);
        } else {
            r.abs_error = Some(h.abs_error);
        }
        r
    }

    pub fn cert(mut self, c: impl Into<String>) -> Self {
        self.certificate = Some(c.into());
        self
    }

    /// Marks the row as a check with the given outcome.
    pub fn check(mut self, holds: bool, what: &str) -> Self {
        self.certificate = Some(format!("{}: {what}", if holds { "holds" } else { "FAILS" }));
        self.failed = !holds;
        self
    }

    pub fn abs(mut self, e: f64) -> Self {
        self.abs_error = Some(e);
        self
    }

    pub fn std(mut self, e: f64) -> Self {
        self.std_error = Some(e);
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool_version: &'static str,
    pub subcommand: String,
    pub inputs: Value,
    pub seed: u64,
    pub results: Vec<Row>,
    /// Replaces the generic CSV rendering (the sequence profile has its own columns).
    #[serde(skip)]
    pub csv: Option<String>,
}

impl Report {
    pub fn failed(&self) -> bool {
        self.results.iter().any(|r| r.failed)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("plain data") + "\n",
            Format::Csv => self.csv.clone().unwrap_or_else(|| self.to_csv()),
            Format::Table => self.to_table(),
        }
    }

    fn cells(r: &Row) -> [String; 5] {
        let (err, kind) = match (r.abs_error, r.std_error) {
            (Some(e), _) => (format!("{e:e}"), "abs"),
            (None, Some(e)) => (format!("{e:e}"), "std"),
            _ => (String::new(), ""),
        };
        [r.name.clone(), value_text(&r.value), err, kind.to_string(), r.certificate.clone().unwrap_or_default()]
    }

    fn to_csv(&self) -> String {
        let mut s = String::from("name,value,error,error_kind,method,certificate\n");
        for r in &self.results {
            let [name, value, err, kind, cert] = Self::cells(r);
            let line = [name, value, err, kind, r.method.clone(), cert].map(|c| csv_field(&c)).join(",");
            s.push_str(&line);
            s.push('\n');
        }
        s
    }

    fn to_table(&self) -> String {
        let header = ["name", "value", "error", "method", "certificate"].map(String::from);
        let rows: Vec<[String; 5]> = self
            .results
            .iter()
            .map(|r| {
                let [name, value, err, kind, cert] = Self::cells(r);
                let err = if kind.is_empty() { err } else { format!("{err} ({kind})") };
                [name, abbreviate(&value), err, r.method.clone(), cert]
            })
            .collect();
        let mut w = header.clone().map(|h| h.len());
        for r in &rows {
            for (i, c) in r.iter().enumerate() {
                w[i] = w[i].max(c.chars().count()).min(if i == 4 { usize::MAX } else { 60 });
            }
        }
        let mut s = String::new();
        for r in std::iter::once(&header).chain(rows.iter()) {
            let line: Vec<String> = r.iter().enumerate().map(|(i, c)| format!("{:<width$}", c, width = w[i])).collect();
            s.push_str(line.join("  ").trim_end());
            s.push('\n');
        }
        s
    }
}

fn value_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Long digit strings keep their ends and a digit count in the table view.
fn abbreviate(v: &str) -> String {
    let n = v.chars().count();
    if n <= 40 || !v.chars().all(|c| c.is_ascii_digit() || c == '-') {
        return v.to_string();
    }
    let digits = v.trim_start_matches('-').len();
    format!("{}...{} ({digits} digits)", &v[..12], &v[n - 6..])
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
