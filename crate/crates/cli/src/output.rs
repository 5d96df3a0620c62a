use std::fmt;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Tsv,
}

/// Nonzero exit with a message; the code is chosen by the caller.
#[derive(Debug)]
pub struct Exit {
    pub code: u8,
    pub message: String,
}

impl Exit {
    pub fn usage(message: impl Into<String>) -> anyhow::Error {
        Exit { code: 2, message: message.into() }.into()
    }

    pub fn mismatch(message: impl Into<String>) -> anyhow::Error {
        Exit { code: 5, message: message.into() }.into()
    }
}

impl fmt::Display for Exit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for Exit {}

/// A rectangular table with an optional list of diff mismatches.
#[derive(Debug, Default)]
pub struct Table {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub mismatches: Vec<String>,
}

impl Table {
    pub fn new(title: impl Into<String>, columns: &[&str]) -> Self {
        Table {
            title: title.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            ..Default::default()
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn check(&mut self, what: impl fmt::Display, got: impl fmt::Display, want: impl fmt::Display) {
        let (g, w) = (got.to_string(), want.to_string());
        if g != w {
            self.mismatches.push(format!("{what}: got {g}, expected {w}"));
        }
    }

    pub fn render(&self, format: Format, diff: bool) -> String {
        match format {
            Format::Text => self.text(diff),
            Format::Tsv => {
                let mut out = self.columns.join("\t") + "\n";
                for r in &self.rows {
                    out += &r.join("\t");
                    out.push('\n');
                }
                out
            }
            Format::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|r| {
                        let m: Map<String, Value> = self
                            .columns
                            .iter()
                            .zip(r)
                            .map(|(c, v)| (c.clone(), Value::String(v.clone())))
                            .collect();
                        Value::Object(m)
                    })
                    .collect();
                let mut doc = serde_json::json!({
                    "title": self.title,
                    "columns": self.columns,
                    "rows": rows,
                });
                if diff {
                    doc["diff"] = serde_json::json!({
                        "pass": self.mismatches.is_empty(),
                        "mismatches": self.mismatches,
                    });
                }
                serde_json::to_string_pretty(&doc).expect("table json") + "\n"
            }
        }
    }

    fn text(&self, diff: bool) -> String {
        let mut width: Vec<usize> = self.columns.iter().map(|c| c.chars().count()).collect();
        for r in &self.rows {
            for (w, v) in width.iter_mut().zip(r) {
                *w = (*w).max(v.chars().count());
            }
        }
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&width)
                .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                .collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        let mut out = format!("{}\n\n", self.title);
        out += &line(&self.columns);
        out += &line(&width.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>());
        for r in &self.rows {
            out += &line(r);
        }
        if diff {
            if self.mismatches.is_empty() {
                out += "\ndiff: pass\n";
            } else {
                out += &format!("\ndiff: {} mismatch(es)\n", self.mismatches.len());
                for m in &self.mismatches {
                    out += &format!("  {m}\n");
                }
            }
        }
        out
    }
}

pub fn print_json<T: Serialize>(value: &T) -> anyhow::Result<()> {
    emit(&(serde_json::to_string_pretty(value)? + "\n"));
    Ok(())
}

/// Writes to stdout; a closed pipe ends the process quietly.
pub fn emit(text: &str) {
    use std::io::{ErrorKind, Write};
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        if e.kind() == ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}

macro_rules! outln {
    ($($arg:tt)*) => {
        $crate::output::emit(&(format!($($arg)*) + "\n"))
    };
}
pub(crate) use outln;
