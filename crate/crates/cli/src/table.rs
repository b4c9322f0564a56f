use anyhow::Result;
use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Md,
    Json,
    Csv,
}

/// A rectangular report with string cells plus a JSON payload for `--format json`.
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub notes: Vec<String>,
    pub json: serde_json::Value,
}

impl Table {
    pub fn new(header: Vec<&'static str>, json: serde_json::Value) -> Self {
        Table {
            header,
            rows: Vec::new(),
            notes: Vec::new(),
            json,
        }
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Md => Ok(self.markdown()),
            Format::Json => Ok(serde_json::to_string_pretty(&self.json)? + "\n"),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.header)?;
                for r in &self.rows {
                    w.write_record(r)?;
                }
                Ok(String::from_utf8(w.into_inner()?)?)
            }
        }
    }

    fn markdown(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("| {} |\n", self.header.join(" | ")));
        out.push_str(&format!("|{}\n", "---|".repeat(self.header.len())));
        for r in &self.rows {
            let cells: Vec<String> = r.iter().map(|c| c.replace('|', "\\|")).collect();
            out.push_str(&format!("| {} |\n", cells.join(" | ")));
        }
        for n in &self.notes {
            out.push_str(&format!("\n{n}\n"));
        }
        out
    }
}
