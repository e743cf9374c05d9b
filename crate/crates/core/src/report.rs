//! Verification reports: rows of printed-versus-derived values with a status,
//! rendered as Markdown, JSON or CSV.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::DivClass;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    /// Mismatch with a printed value that is on the known-discrepancy list.
    Discrepant,
    /// Holds only under a hypothesis that the numerical data cannot decide.
    Conditional,
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Discrepant => "DISCREPANT",
            Status::Conditional => "CONDITIONAL",
            Status::Info => "INFO",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub group: String,
    pub id: String,
    pub quantity: String,
    pub printed: String,
    pub derived: String,
    pub status: Status,
    pub source: String,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub note: String,
}

/// A printed value known to disagree with its recomputation.
pub struct KnownDiscrepancy {
    pub quantity: &'static str,
    pub printed: &'static str,
    pub source: &'static str,
    pub reason: &'static str,
}

/// Cells whose printed value is expected to differ from the recomputed one.
/// Any other mismatch is a regression.
pub const KNOWN_DISCREPANCIES: &[KnownDiscrepancy] = &[
    KnownDiscrepancy {
        quantity: "(D+4E_S)^3",
        printed: "10242",
        source: "corollary-surprise",
        reason: "trilinear expansion of the primary table gives 1296; both values are positive",
    },
    KnownDiscrepancy {
        quantity: "slope of push-forward of E_S+xD+eta*x*E_P",
        printed: "9/5 + eta/(10x)",
        source: "theorem-main2 proof",
        reason: "substituting y = eta*x into 9/5 + y/(10x) gives 9/5 + eta/10",
    },
    KnownDiscrepancy {
        quantity: "closed-form radical for lambda*",
        printed:
            "15/4 - 27(1 - i sqrt3)/(8((79 + 8 i sqrt5)/3)^(1/3)) - (1/8)3^(2/3)(1 + i sqrt3)(79 + 8 i sqrt5)^(1/3)",
        source: "theorem-main2 footnote",
        reason: "mixed radicands flagged for review; compared numerically against the certified root",
    },
];

pub fn known_discrepancy(quantity: &str) -> Option<&'static KnownDiscrepancy> {
    KNOWN_DISCREPANCIES.iter().find(|k| k.quantity == quantity)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub title: String,
    pub rows: Vec<CheckRow>,
}

impl Report {
    pub fn new(title: &str) -> Self {
        Report { title: title.to_string(), rows: Vec::new() }
    }

    fn next_id(&self, group: &str) -> String {
        let n = self.rows.iter().filter(|r| r.group == group).count() + 1;
        format!("{group}#{n}")
    }

    /// Adds a row comparing two strings; a mismatch becomes `Discrepant`
    /// when the quantity is on the allowlist and `Fail` otherwise.
    pub fn compare(&mut self, group: &str, quantity: &str, printed: String, derived: String, source: &str) -> Status {
        let status = if printed == derived {
            Status::Pass
        } else if known_discrepancy(quantity).is_some() {
            Status::Discrepant
        } else {
            Status::Fail
        };
        self.push(group, quantity, printed, derived, status, source, "");
        status
    }

    pub fn compare_exact(
        &mut self,
        group: &str,
        quantity: &str,
        printed: &Rational,
        derived: &Rational,
        source: &str,
    ) -> Status {
        self.compare(group, quantity, printed.to_string(), derived.to_string(), source)
    }

    pub fn compare_class(
        &mut self,
        group: &str,
        quantity: &str,
        printed: &DivClass,
        derived: &DivClass,
        source: &str,
    ) -> Status {
        self.compare(group, quantity, printed.to_string(), derived.to_string(), source)
    }

    /// Adds a row with an explicit status.
    #[allow(clippy::too_many_arguments)]
    pub fn push(
        &mut self,
        group: &str,
        quantity: &str,
        printed: String,
        derived: String,
        status: Status,
        source: &str,
        note: &str,
    ) {
        let id = self.next_id(group);
        self.rows.push(CheckRow {
            group: group.to_string(),
            id,
            quantity: quantity.to_string(),
            printed,
            derived,
            status,
            source: source.to_string(),
            note: note.to_string(),
        });
    }

    pub fn extend(&mut self, other: Report) {
        for r in other.rows {
            let id = self.next_id(&r.group);
            self.rows.push(CheckRow { id, ..r });
        }
    }

    pub fn count(&self, status: Status) -> usize {
        self.rows.iter().filter(|r| r.status == status).count()
    }

    /// True when no row is `Fail`.
    pub fn ok(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    pub fn failures(&self) -> Vec<&CheckRow> {
        self.rows.iter().filter(|r| r.status == Status::Fail).collect()
    }

    pub fn find(&self, quantity: &str) -> Option<&CheckRow> {
        self.rows.iter().find(|r| r.quantity == quantity)
    }

    pub fn to_markdown(&self) -> String {
        let mut out = format!("## {}\n\n", self.title);
        let mut groups: Vec<&str> = Vec::new();
        for r in &self.rows {
            if !groups.contains(&r.group.as_str()) {
                groups.push(&r.group);
            }
        }
        for g in groups {
            out.push_str(&format!("### {g}\n\n"));
            out.push_str("| quantity | printed | derived | status | source |\n");
            out.push_str("|---|---|---|---|---|\n");
            for r in self.rows.iter().filter(|r| r.group == g) {
                out.push_str(&format!(
                    "| {} | {} | {} | {} | {} |\n",
                    md_escape(&r.quantity),
                    md_escape(&r.printed),
                    md_escape(&r.derived),
                    r.status,
                    md_escape(&r.source)
                ));
            }
            let notes: Vec<&CheckRow> = self.rows.iter().filter(|r| r.group == g && !r.note.is_empty()).collect();
            if !notes.is_empty() {
                out.push('\n');
                for r in notes {
                    out.push_str(&format!("- {}: {}\n", md_escape(&r.quantity), r.note));
                }
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "Summary: {} PASS, {} FAIL, {} DISCREPANT, {} CONDITIONAL, {} INFO\n",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Discrepant),
            self.count(Status::Conditional),
            self.count(Status::Info)
        ));
        out
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::InvalidArgument(e.to_string()))
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["group", "id", "quantity", "printed", "derived", "status", "source", "note"])
            .map_err(csv_err)?;
        for r in &self.rows {
            w.write_record([
                r.group.as_str(),
                &r.id,
                &r.quantity,
                &r.printed,
                &r.derived,
                &r.status.to_string(),
                &r.source,
                &r.note,
            ])
            .map_err(csv_err)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::InvalidArgument(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::InvalidArgument(e.to_string()))
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::InvalidArgument(e.to_string())
}

fn md_escape(s: &str) -> String {
    s.replace('|', "\\|")
}
