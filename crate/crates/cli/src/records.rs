//! Output records. Every command emits newline-delimited JSON: one record
//! per unit of work, then a single summary object. Reruns on the same
//! input are byte identical except for the summary timestamp, so records
//! never carry wall-clock data.

use anyhow::{Context, Result};
use bei_core::classify::{JoinCertificate, RegClass};
use bei_core::monres::BettiTable;
use bei_core::oracle::{
    ConjectureKind, CounterexampleReport, RegularityResult, VerificationReport, Witness,
};
use bei_core::primes::PrimeDescription;
use serde::Serialize;
use std::io::Write;
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

#[derive(Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Record {
    Classify {
        graph6: String,
        n: usize,
        class: RegClass,
        certificate: JoinCertificate,
    },
    Regularity {
        graph6: String,
        n: usize,
        #[serde(flatten)]
        result: RegularityResult,
    },
    MinimalPrimes {
        graph6: String,
        n: usize,
        count: usize,
        primes: Vec<PrimeDescription>,
    },
    Betti {
        graph6: String,
        n: usize,
        order: &'static str,
        characteristic: u32,
        regularity: Option<u32>,
        projective_dimension: Option<usize>,
        table: BettiTable,
    },
    Verification {
        #[serde(flatten)]
        outcome: VerificationOutcome,
    },
    Conjecture {
        kind: ConjectureKind,
        characteristic: u32,
        #[serde(flatten)]
        outcome: VerificationOutcome,
    },
    CensusRow {
        graph6: String,
        n: usize,
        class: RegClass,
        regularity_initial: bei_core::oracle::RegValue,
        consistent: bool,
    },
    Counterexample {
        #[serde(flatten)]
        report: CounterexampleReport,
        failed_checks: Vec<String>,
    },
}

/// A [`VerificationReport`] stripped of its runtime, plus the instance
/// label the sweep attached to it.
#[derive(Serialize)]
pub struct VerificationOutcome {
    pub instance: String,
    pub claim: String,
    pub instances: usize,
    pub failures: Vec<Witness>,
    pub skipped: usize,
}

impl VerificationOutcome {
    pub fn from_report(instance: String, report: VerificationReport) -> Self {
        VerificationOutcome {
            instance,
            claim: report.claim,
            instances: report.instances,
            failures: report.failures,
            skipped: report.skipped,
        }
    }

    pub fn failed(&self) -> bool {
        !self.failures.is_empty()
    }
}

pub struct Output {
    pub command: &'static str,
    pub records: Vec<Record>,
    pub failures: usize,
    pub skipped: usize,
    pub detail: Option<serde_json::Value>,
    /// Set when a verification that should pass reported failures; drives
    /// the process exit status.
    pub verification_failed: bool,
}

impl Output {
    pub fn new(command: &'static str) -> Self {
        Output {
            command,
            records: Vec::new(),
            failures: 0,
            skipped: 0,
            detail: None,
            verification_failed: false,
        }
    }

    pub fn human_summary(&self) -> String {
        format!(
            "{}: {} records, {} failures, {} skipped",
            self.command,
            self.records.len(),
            self.failures,
            self.skipped
        )
    }
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    r#type: &'static str,
    command: &'static str,
    records: usize,
    failures: usize,
    skipped: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<&'a serde_json::Value>,
    generated_unix_ms: u64,
}

pub fn write_output(output: &Output, out: Option<&Path>) -> Result<()> {
    let mut lines = String::new();
    for record in &output.records {
        lines.push_str(&serde_json::to_string(record)?);
        lines.push('\n');
    }
    let summary = SummaryLine {
        r#type: "summary",
        command: output.command,
        records: output.records.len(),
        failures: output.failures,
        skipped: output.skipped,
        detail: output.detail.as_ref(),
        generated_unix_ms: SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_millis() as u64)
            .unwrap_or(0),
    };
    lines.push_str(&serde_json::to_string(&summary)?);
    lines.push('\n');
    match out {
        Some(path) => std::fs::write(path, lines)
            .with_context(|| format!("writing {}", path.display()))?,
        None => std::io::stdout()
            .write_all(lines.as_bytes())
            .context("writing records to stdout")?,
    }
    Ok(())
}
