use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;
use serde_json::Value;

use semigroup_forge::constructions::OverrideAudit;
use semigroup_forge::report::SweepKind;
use semigroup_forge::VerificationReport;

use crate::config::UsageError;

pub fn emit(text: &str, path: Option<&Path>) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text),
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

/// A JSON value without quotes around strings, for text output.
pub fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(plain).collect::<Vec<_>>().join(", "),
        other => other.to_string(),
    }
}

fn mode_label(r: &VerificationReport) -> String {
    match (r.mode, r.seed) {
        (SweepKind::Sampled, Some(seed)) => format!("sampled seed={seed}"),
        (SweepKind::Sampled, None) => "sampled".into(),
        (SweepKind::Exhaustive, _) => "exhaustive".into(),
    }
}

pub fn reports_text(n: usize, reports: &[VerificationReport]) -> String {
    let mut out = format!("n = {n}\n");
    for r in reports {
        let status = if r.holds { "holds" } else { "FAILS" };
        let _ = writeln!(
            out,
            "  {status:<5}  {}  ({}, {} checked)",
            r.law,
            mode_label(r),
            r.checked
        );
        if let Some(cex) = r.counterexample.as_ref().filter(|_| !r.holds) {
            for line in cex {
                let _ = writeln!(out, "           {line}");
            }
        }
    }
    out
}

pub fn notes_text(notes: &[OverrideAudit]) -> String {
    let mut out = String::new();
    for audit in notes {
        let _ = writeln!(
            out,
            "  note: generic formulas vs identity overrides, {}",
            audit.construction
        );
        for case in &audit.cases {
            let _ = writeln!(
                out,
                "         {}: {} of {} inputs differ{}",
                case.rule,
                case.disagreements,
                case.inputs,
                if case.examples.is_empty() {
                    String::new()
                } else {
                    format!(" (e.g. {})", case.examples.join("; "))
                }
            );
        }
    }
    out
}

pub fn summary<'a>(reports: impl Iterator<Item = &'a VerificationReport>) -> String {
    let (mut total, mut failing) = (0, 0);
    for r in reports {
        total += 1;
        failing += usize::from(!r.holds);
    }
    format!("{} of {total} hold, {failing} fail\n", total - failing)
}

fn csv_text(
    write: impl FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>,
) -> Result<String, UsageError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    write(&mut w).map_err(|e| UsageError(e.to_string()))?;
    let bytes = w.into_inner().map_err(|e| UsageError(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| UsageError(e.to_string()))
}

pub fn reports_csv<'a>(
    sections: impl Iterator<Item = (usize, &'a [VerificationReport])>,
) -> Result<String, UsageError> {
    csv_text(|w| {
        w.write_record([
            "n",
            "law",
            "holds",
            "mode",
            "seed",
            "checked",
            "counterexample",
        ])?;
        for (n, reports) in sections {
            for r in reports {
                let mode = match r.mode {
                    SweepKind::Exhaustive => "exhaustive",
                    SweepKind::Sampled => "sampled",
                };
                w.write_record([
                    n.to_string(),
                    r.law.clone(),
                    r.holds.to_string(),
                    mode.to_string(),
                    r.seed.map(|s| s.to_string()).unwrap_or_default(),
                    r.checked.to_string(),
                    r.counterexample
                        .as_ref()
                        .map(|c| c.join("; "))
                        .unwrap_or_default(),
                ])?;
            }
        }
        Ok(())
    })
}

pub fn table_csv(columns: &[String], rows: &[Vec<Value>]) -> Result<String, UsageError> {
    csv_text(|w| {
        w.write_record(columns)?;
        for row in rows {
            w.write_record(row.iter().map(plain))?;
        }
        Ok(())
    })
}

pub fn table_text(columns: &[String], rows: &[Vec<Value>]) -> String {
    let cells: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(plain).collect()).collect();
    let widths: Vec<usize> = columns
        .iter()
        .enumerate()
        .map(|(i, c)| {
            cells
                .iter()
                .map(|r| r[i].chars().count())
                .chain([c.chars().count()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |items: &[String]| {
        let padded: Vec<String> = items
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:>w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(columns);
    for row in &cells {
        out.push_str(&line(row));
    }
    out
}
