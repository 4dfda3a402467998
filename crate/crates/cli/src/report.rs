//! Reports and their text and JSON renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use orthoscope_core::{dlog, fmt_rational, PoleSpectrum, RatFunc, Rational};
use serde::Serialize;

use crate::error::{CliError, CliResult};

/// Schema the JSON output conforms to.
pub const REPORT_SCHEMA: &str = include_str!("../schema/report.schema.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidueRow {
    pub locus: String,
    pub multiplicity: usize,
    pub residue: String,
}

pub fn residue_rows(spectrum: &PoleSpectrum) -> Vec<ResidueRow> {
    let mut rows: Vec<ResidueRow> = spectrum
        .affine_poles
        .iter()
        .map(|p| ResidueRow {
            locus: p.locus.to_string(),
            multiplicity: p.multiplicity,
            residue: p.residue.to_string(),
        })
        .collect();
    if let Some(inf) = &spectrum.infinity_pole {
        rows.push(ResidueRow {
            locus: "infinity".into(),
            multiplicity: inf.multiplicity,
            residue: fmt_rational(&inf.residue),
        });
    }
    rows
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BaseSummary {
    pub orthogonal: bool,
    pub evidence: String,
    /// Spectrum of the form `dx/f`.
    pub residues: Vec<ResidueRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessSummary {
    pub h: String,
    pub scaling: i64,
    /// The identity the witness satisfies, with the form written unreduced.
    pub identity: String,
}

/// What a witness must satisfy; rechecked whenever a report is emitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessCheck {
    /// `scaling · form = h'/h`.
    Dlog { form: RatFunc, h: RatFunc, scaling: BigInt },
    /// `form = h'`.
    Antiderivative { form: RatFunc, h: RatFunc },
}

impl WitnessCheck {
    pub fn holds(&self) -> bool {
        match self {
            WitnessCheck::Dlog { form, h, scaling } => match dlog(h) {
                Ok(d) => form.scale(&Rational::from_integer(scaling.clone())) == d,
                Err(_) => false,
            },
            WitnessCheck::Antiderivative { form, h } => *form == h.derivative(),
        }
    }

    pub fn h(&self) -> &RatFunc {
        match self {
            WitnessCheck::Dlog { h, .. } | WitnessCheck::Antiderivative { h, .. } => h,
        }
    }

    /// `written` is the form as the user would write it, e.g. `(x - 1)/(x^3 - x^2)`.
    pub fn summary(&self, written: &str) -> CliResult<WitnessSummary> {
        let (scaling, identity) = match self {
            WitnessCheck::Dlog { h, scaling, .. } => {
                let lhs = if scaling.is_one() {
                    written.to_string()
                } else {
                    format!("{scaling}*{written}")
                };
                (scaling.clone(), format!("{lhs} = dlog({h})"))
            }
            WitnessCheck::Antiderivative { h, .. } => (BigInt::one(), format!("{written} = ({h})'")),
        };
        let scaling = scaling
            .to_i64()
            .ok_or_else(|| CliError::Witness(format!("scaling {scaling} does not fit the report")))?;
        Ok(WitnessSummary {
            h: self.h().to_string(),
            scaling,
            identity,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub input: String,
    pub verdict: String,
    pub base: Option<BaseSummary>,
    pub beta: Option<String>,
    pub witness: Option<WitnessSummary>,
    pub residues: Vec<ResidueRow>,
    pub completeness_case: Option<String>,
    pub notes: Vec<String>,
    pub details: BTreeMap<String, String>,
    /// Plain-language reading of the verdict, for text output.
    #[serde(skip)]
    pub summary: String,
    #[serde(skip)]
    pub check: Option<WitnessCheck>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Report {
    pub fn new(command: &str, input: String, verdict: &str) -> Self {
        Report {
            command: command.to_string(),
            input,
            verdict: verdict.to_string(),
            base: None,
            beta: None,
            witness: None,
            residues: Vec::new(),
            completeness_case: None,
            notes: Vec::new(),
            details: BTreeMap::new(),
            summary: String::new(),
            check: None,
            elapsed: Duration::ZERO,
        }
    }

    pub fn detail(&mut self, key: &str, value: impl ToString) {
        self.details.insert(key.to_string(), value.to_string());
    }

    /// Attaches a witness after checking it.
    pub fn attach_witness(&mut self, check: WitnessCheck, written: &str) -> CliResult<()> {
        if !check.holds() {
            return Err(CliError::Witness(format!("h = {} for {written}", check.h())));
        }
        self.witness = Some(check.summary(written)?);
        self.check = Some(check);
        Ok(())
    }

    /// Fails when the attached witness no longer satisfies its identity.
    pub fn verify(&self) -> CliResult<()> {
        match &self.check {
            Some(c) if !c.holds() => Err(CliError::Witness(format!("h = {}", c.h()))),
            Some(c) if self.witness.as_ref().map(|w| w.h.as_str()) != Some(c.h().to_string().as_str()) => {
                Err(CliError::Witness("reported h differs from the checked one".into()))
            }
            None if self.witness.is_some() => Err(CliError::Witness("witness was never checked".into())),
            _ => Ok(()),
        }
    }
}

pub fn emit(report: &Report, format: Format, show_witness: bool) -> CliResult<String> {
    report.verify()?;
    Ok(match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => emit_text(report, show_witness),
    })
}

fn push_rows(out: &mut String, indent: &str, rows: &[ResidueRow]) {
    if rows.is_empty() {
        let _ = writeln!(out, "{indent}(no poles)");
    }
    for r in rows {
        let _ = writeln!(
            out,
            "{indent}{}  multiplicity {}  residue {}",
            r.locus, r.multiplicity, r.residue
        );
    }
}

fn emit_text(r: &Report, show_witness: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}: {}", r.command, r.input);
    let _ = writeln!(out, "verdict: {}", r.verdict);
    if !r.summary.is_empty() {
        let _ = writeln!(out, "  {}", r.summary);
    }
    if let Some(b) = &r.base {
        let word = if b.orthogonal { "orthogonal" } else { "not orthogonal" };
        let _ = writeln!(out, "base: {word} ({})", b.evidence);
        let _ = writeln!(out, "  poles of dx/f:");
        push_rows(&mut out, "    ", &b.residues);
    }
    if let Some(beta) = &r.beta {
        let _ = writeln!(out, "beta: {beta}");
    }
    if let Some(w) = &r.witness {
        if show_witness {
            let _ = writeln!(out, "witness: h = {}, scaling {}", w.h, w.scaling);
            let _ = writeln!(out, "  verified: {}", w.identity);
        } else {
            let _ = writeln!(out, "witness: h = {} (pass --witness for the identity)", w.h);
        }
    }
    if !r.residues.is_empty() {
        let _ = writeln!(out, "residues:");
        push_rows(&mut out, "  ", &r.residues);
    }
    if let Some(c) = &r.completeness_case {
        let _ = writeln!(out, "completeness case: {c}");
    }
    for (k, v) in &r.details {
        let _ = writeln!(out, "{k}: {v}");
    }
    for n in &r.notes {
        let _ = writeln!(out, "note: {n}");
    }
    let _ = writeln!(out, "elapsed: {:.3} ms", r.elapsed.as_secs_f64() * 1e3);
    out
}
