//! A command's result: headline lines, verification reports and optional
//! structured data, rendered in one of the supported formats.

use anyhow::Result;
use k3omega::report::{known_discrepancy, CheckRow, Report, Status};
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Markdown,
    Json,
    Csv,
    Svg,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Markdown => "md",
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Svg => "svg",
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Line {
    pub key: String,
    pub value: String,
}

#[derive(Debug, Serialize)]
pub struct Document {
    pub command: String,
    pub summary: Vec<Line>,
    pub reports: Vec<Report>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<Value>,
}

impl Document {
    pub fn new(command: &str) -> Self {
        Document { command: command.into(), summary: Vec::new(), reports: Vec::new(), data: None }
    }

    pub fn line(&mut self, key: &str, value: impl Into<String>) {
        self.summary.push(Line { key: key.into(), value: value.into() });
    }

    pub fn rows(&self) -> impl Iterator<Item = &CheckRow> {
        self.reports.iter().flat_map(|r| r.rows.iter())
    }

    /// Rows that failed without being on the known-discrepancy list.
    pub fn unexpected(&self) -> Vec<&CheckRow> {
        self.rows().filter(|r| r.status == Status::Fail).collect()
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Markdown => Ok(self.to_markdown()),
            Format::Json => Ok(serde_json::to_string_pretty(self)? + "\n"),
            Format::Csv => self.to_csv(),
            Format::Svg => anyhow::bail!("`{}` has no SVG rendering", self.command),
        }
    }

    fn to_markdown(&self) -> String {
        let mut out = format!("# k3omega {}\n\n", self.command);
        for l in &self.summary {
            out.push_str(&format!("- {}: {}\n", l.key, l.value));
        }
        if !self.summary.is_empty() {
            out.push('\n');
        }
        for r in &self.reports {
            out.push_str(&r.to_markdown());
            out.push('\n');
        }
        let known: Vec<&CheckRow> = self.rows().filter(|r| r.status == Status::Discrepant).collect();
        if !known.is_empty() {
            out.push_str("## Known discrepancies\n\n");
            for r in known {
                let reason = known_discrepancy(&r.quantity).map(|k| k.reason).unwrap_or("");
                out.push_str(&format!("- {} (printed {}, derived {}): {}\n", r.quantity, r.printed, r.derived, reason));
            }
            out.push('\n');
        }
        let unexpected = self.unexpected();
        if unexpected.is_empty() {
            out.push_str("Result: OK\n");
        } else {
            out.push_str(&format!("Result: {} unexpected mismatch(es)\n", unexpected.len()));
        }
        out
    }

    fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["report", "group", "id", "quantity", "printed", "derived", "status", "source", "note"])?;
        for l in &self.summary {
            w.write_record(["summary", "summary", "", &l.key, "", &l.value, "INFO", "", ""])?;
        }
        for rep in &self.reports {
            for r in &rep.rows {
                w.write_record([
                    rep.title.as_str(),
                    &r.group,
                    &r.id,
                    &r.quantity,
                    &r.printed,
                    &r.derived,
                    &r.status.to_string(),
                    &r.source,
                    &r.note,
                ])?;
            }
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc_with(status: Status) -> Document {
        let mut rep = Report::new("r");
        rep.push("g", "(D+4E_S)^3", "10242".into(), "1296".into(), status, "src", "");
        let mut doc = Document::new("tables");
        doc.reports.push(rep);
        doc
    }

    #[test]
    fn only_fail_rows_are_unexpected() {
        let known = doc_with(Status::Discrepant);
        assert!(known.unexpected().is_empty());
        assert!(known.render(Format::Markdown).unwrap().contains("## Known discrepancies"));
        let bad = doc_with(Status::Fail);
        assert_eq!(bad.unexpected().len(), 1);
        assert!(bad.render(Format::Markdown).unwrap().ends_with("Result: 1 unexpected mismatch(es)\n"));
        assert!(bad.render(Format::Svg).is_err());
    }
}
