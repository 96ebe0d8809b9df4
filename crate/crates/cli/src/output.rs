use std::io::{self, Write};

use serde::Serialize;

use monobase::EffortConfig;

pub const SCHEMA_VERSION: u32 = 1;

/// The envelope of every `--json` response.
#[derive(Debug, Serialize)]
pub struct OutputDocument {
    pub schema_version: u32,
    pub command: String,
    /// The full argument vector, for reproduction.
    pub argv: Vec<String>,
    pub config: EffortConfig,
    pub result: serde_json::Value,
    pub warnings: Vec<String>,
}

impl OutputDocument {
    pub fn new(effort: &EffortConfig) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            command: String::new(),
            argv: std::env::args().collect(),
            config: effort.clone(),
            result: serde_json::Value::Null,
            warnings: Vec::new(),
        }
    }

    pub fn set_result<T: Serialize>(&mut self, value: &T) -> serde_json::Result<()> {
        self.result = serde_json::to_value(value)?;
        Ok(())
    }
}

/// Writes the document (or `text`) to stdout. A closed pipe is not an error.
pub fn emit(doc: &OutputDocument, json: bool, text: &str) -> io::Result<()> {
    let mut out = io::stdout().lock();
    let written = if json {
        serde_json::to_writer_pretty(&mut out, doc)
            .map_err(io::Error::from)
            .and_then(|()| writeln!(out))
    } else {
        for w in &doc.warnings {
            eprintln!("warning: {w}");
        }
        out.write_all(text.as_bytes())
    };
    match written.and_then(|()| out.flush()) {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        other => other,
    }
}
