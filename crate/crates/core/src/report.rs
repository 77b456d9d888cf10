//! Report emission: tab-separated lines with a header row, or JSON.

use serde::Serialize;

pub use crate::criteria::verify::{LineOutcome, ReportLine};

/// Column order of the TSV report.
pub const HEADER: [&str; 6] = ["id", "flag", "computed", "expected", "outcome", "witness"];

/// Replaces tabs and newlines so a field stays on one TSV cell.
fn cell(s: &str) -> String {
    s.replace(['\t', '\n', '\r'], " ")
}

/// Renders lines as TSV, header first, one line per record.
pub fn to_tsv(lines: &[ReportLine]) -> String {
    let mut out = HEADER.join("\t");
    out.push('\n');
    for l in lines {
        let fields = [
            &l.id,
            &l.flag,
            &l.computed,
            &l.expected,
            &l.outcome.to_string(),
            &l.witness,
        ];
        out.push_str(&fields.iter().map(|f| cell(f)).collect::<Vec<_>>().join("\t"));
        out.push('\n');
    }
    out
}

/// Counts of each outcome.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub ok: usize,
    pub mismatch: usize,
    pub unknown: usize,
}

impl Summary {
    pub fn of(lines: &[ReportLine]) -> Summary {
        let mut s = Summary::default();
        for l in lines {
            match l.outcome {
                LineOutcome::Ok => s.ok += 1,
                LineOutcome::Mismatch => s.mismatch += 1,
                LineOutcome::Unknown => s.unknown += 1,
            }
        }
        s
    }
}

#[derive(Serialize)]
struct JsonReport<'a> {
    summary: Summary,
    lines: &'a [ReportLine],
}

/// Renders lines as a JSON document `{"summary": ..., "lines": [...]}`.
pub fn to_json(lines: &[ReportLine]) -> String {
    let mut s = serde_json::to_string_pretty(&JsonReport {
        summary: Summary::of(lines),
        lines,
    })
    .expect("report serialises");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tsv_layout() {
        let lines = vec![
            ReportLine::compare("a", "qp", "yes", "yes", "w\tx"),
            ReportLine::compare("b", "pp", "no", "yes", ""),
        ];
        let tsv = to_tsv(&lines);
        let rows: Vec<&str> = tsv.lines().collect();
        assert_eq!(rows[0], "id\tflag\tcomputed\texpected\toutcome\twitness");
        assert_eq!(rows[1], "a\tqp\tyes\tyes\tOK\tw x");
        assert_eq!(rows[2], "b\tpp\tno\tyes\tMISMATCH\t");
        assert_eq!(
            Summary::of(&lines),
            Summary {
                ok: 1,
                mismatch: 1,
                unknown: 0
            }
        );
        assert!(to_json(&lines).contains("\"outcome\": \"MISMATCH\""));
    }
}
