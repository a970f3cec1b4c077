//! Serialized check reports.

use std::fmt::Write as _;

use serde::Serialize;

use crate::yb::CheckReport;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
struct ReportLine<'a> {
    schema_version: u32,
    #[serde(flatten)]
    report: &'a CheckReport,
    pass: bool,
}

/// One JSON object (single line) per report. `elapsed_ms` is the only
/// field that varies between identical runs.
pub fn to_json_line(report: &CheckReport) -> String {
    let line = ReportLine {
        schema_version: SCHEMA_VERSION,
        report,
        pass: report.pass(),
    };
    serde_json::to_string(&line).expect("reports serialize")
}

/// Human-readable summary with one line per failure witness.
pub fn to_text(report: &CheckReport) -> String {
    let mut out = String::new();
    let verdict = if report.pass() { "PASS" } else { "FAIL" };
    let mode = report
        .mode
        .map(|m| format!(" mode={m}"))
        .unwrap_or_default();
    let _ = writeln!(
        out,
        "{verdict} {} {} n={}{mode} seed={} attempted={} rejected={} checked={} failures={}",
        report.map,
        report.property,
        report.n,
        report.seed,
        report.samples_attempted,
        report.samples_rejected,
        report.samples_checked,
        report.failures.len()
    );
    for w in &report.failures {
        let _ = writeln!(
            out,
            "  sample {}: {} -- {}",
            w.sample_index, w.input, w.detail
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build, MapOptions};
    use crate::suite::run_property;
    use crate::yb::{Property, SampleRun};

    #[test]
    fn json_has_schema_fields() {
        let entry = build("fv-negated", &MapOptions::default()).unwrap();
        let report = run_property(
            &entry,
            Property::YangBaxter,
            None,
            SampleRun::new(7, 30),
            None,
        )
        .unwrap();
        let value: serde_json::Value = serde_json::from_str(&to_json_line(&report)).unwrap();
        for key in [
            "schema_version",
            "map",
            "property",
            "n",
            "samples_attempted",
            "samples_rejected",
            "samples_checked",
            "failures",
            "seed",
            "mode",
            "pass",
            "elapsed_ms",
        ] {
            assert!(value.get(key).is_some(), "{key}");
        }
        assert_eq!(value["pass"], false);
        assert_eq!(value["property"], "yb");
        let witness = &value["failures"][0]["input"][0];
        assert!(witness["components"]["x"].is_string());
        assert!(to_text(&report).starts_with("FAIL fv-negated yb"));
    }
}
