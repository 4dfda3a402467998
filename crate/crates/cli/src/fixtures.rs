//! The regression corpus of worked systems.
//!
//! Records are blocks of `key: value` lines separated by blank lines; `#`
//! starts a comment line. Keys: `name`, `source`, `command`,
//! `expected_verdict`, `anchor` (required); `expected_beta` (`null` for no
//! β), `expected_witness`, `expected_residues` (`locus = residue` pairs
//! separated by `;`), `note` (optional); `expect` (repeatable, `key = value`
//! against the report details).

use crate::error::{CliError, CliResult};
use crate::report::{emit, Format, Report};
use crate::run::{run, Command, Options};
use crate::source::parse_system;

pub const CORPUS: &str = include_str!("../fixtures/corpus.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub name: String,
    pub source: String,
    pub command: Command,
    pub expected_verdict: String,
    /// `Some(None)` asserts that no β is reported.
    pub expected_beta: Option<Option<String>>,
    pub expected_witness: Option<String>,
    pub expected_residues: Option<Vec<(String, String)>>,
    pub expected_details: Vec<(String, String)>,
    pub anchor: String,
    pub note: Option<String>,
}

fn split_pair(s: &str, line: usize) -> CliResult<(String, String)> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| CliError::Io(format!("fixture line {line}: expected `key = value`")))?;
    Ok((k.trim().to_string(), v.trim().to_string()))
}

#[derive(Default)]
struct Draft {
    start: usize,
    name: Option<String>,
    source: Option<String>,
    command: Option<Command>,
    expected_verdict: Option<String>,
    expected_beta: Option<Option<String>>,
    expected_witness: Option<String>,
    expected_residues: Option<Vec<(String, String)>>,
    expected_details: Vec<(String, String)>,
    anchor: Option<String>,
    note: Option<String>,
}

impl Draft {
    fn is_empty(&self) -> bool {
        self.name.is_none() && self.source.is_none() && self.command.is_none()
    }

    fn finish(self) -> CliResult<Fixture> {
        let missing = |field: &str| CliError::Io(format!("fixture at line {}: missing {field}", self.start));
        Ok(Fixture {
            name: self.name.clone().ok_or_else(|| missing("name"))?,
            source: self.source.clone().ok_or_else(|| missing("source"))?,
            command: self.command.ok_or_else(|| missing("command"))?,
            expected_verdict: self.expected_verdict.clone().ok_or_else(|| missing("expected_verdict"))?,
            expected_beta: self.expected_beta,
            expected_witness: self.expected_witness,
            expected_residues: self.expected_residues,
            expected_details: self.expected_details,
            anchor: self.anchor.ok_or_else(|| missing("anchor"))?,
            note: self.note,
        })
    }
}

pub fn load(text: &str) -> CliResult<Vec<Fixture>> {
    let mut out = Vec::new();
    let mut draft = Draft::default();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            if !draft.is_empty() {
                out.push(std::mem::take(&mut draft).finish()?);
            }
            continue;
        }
        if draft.is_empty() {
            draft.start = line_no;
        }
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| CliError::Io(format!("fixture line {line_no}: expected `key: value`")))?;
        let value = value.trim().to_string();
        match key.trim() {
            "name" => draft.name = Some(value),
            "source" => draft.source = Some(value),
            "command" => {
                draft.command = Some(
                    Command::from_name(&value)
                        .ok_or_else(|| CliError::Io(format!("fixture line {line_no}: unknown command {value}")))?,
                )
            }
            "expected_verdict" => draft.expected_verdict = Some(value),
            "expected_beta" => draft.expected_beta = Some((value != "null").then_some(value)),
            "expected_witness" => draft.expected_witness = Some(value),
            "expected_residues" => {
                let pairs = value
                    .split(';')
                    .filter(|s| !s.trim().is_empty())
                    .map(|s| split_pair(s, line_no))
                    .collect::<CliResult<Vec<_>>>()?;
                draft.expected_residues = Some(pairs);
            }
            "expect" => draft.expected_details.push(split_pair(&value, line_no)?),
            "anchor" => draft.anchor = Some(value),
            "note" => draft.note = Some(value),
            other => return Err(CliError::Io(format!("fixture line {line_no}: unknown field {other}"))),
        }
    }
    if !draft.is_empty() {
        out.push(draft.finish()?);
    }
    Ok(out)
}

/// The embedded corpus.
pub fn corpus() -> Vec<Fixture> {
    load(CORPUS).expect("embedded corpus is well formed")
}

#[derive(Debug)]
pub struct FixtureOutcome {
    pub name: String,
    pub anchor: String,
    pub report: Option<Report>,
    pub error: Option<CliError>,
    pub mismatches: Vec<String>,
}

impl FixtureOutcome {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.mismatches.is_empty()
    }
}

fn compare(report: &Report, fx: &Fixture) -> Vec<String> {
    let mut bad = Vec::new();
    if report.verdict != fx.expected_verdict {
        bad.push(format!("verdict {} (expected {})", report.verdict, fx.expected_verdict));
    }
    if report.verdict == "inconclusive" || report.completeness_case.as_deref() == Some("C") {
        bad.push("inconclusive result on a corpus system".into());
    }
    if let Some(beta) = &fx.expected_beta {
        if &report.beta != beta {
            bad.push(format!("beta {:?} (expected {beta:?})", report.beta));
        }
    }
    if let Some(h) = &fx.expected_witness {
        let got = report.witness.as_ref().map(|w| w.h.as_str());
        if got != Some(h.as_str()) {
            bad.push(format!("witness {got:?} (expected {h})"));
        }
    }
    if let Some(rows) = &fx.expected_residues {
        let got: Vec<(String, String)> = report
            .residues
            .iter()
            .map(|r| (r.locus.clone(), r.residue.clone()))
            .collect();
        if &got != rows {
            bad.push(format!("residues {got:?} (expected {rows:?})"));
        }
    }
    for (k, v) in &fx.expected_details {
        match report.details.get(k) {
            Some(got) if got == v => {}
            got => bad.push(format!("{k} = {got:?} (expected {v})")),
        }
    }
    bad
}

pub fn run_fixture(fx: &Fixture) -> FixtureOutcome {
    let mut outcome = FixtureOutcome {
        name: fx.name.clone(),
        anchor: fx.anchor.clone(),
        report: None,
        error: None,
        mismatches: Vec::new(),
    };
    let result = parse_system(&fx.source).and_then(|src| {
        let again = parse_system(&src.parsed.serialize())?;
        if again.parsed != src.parsed {
            outcome.mismatches.push("serialization does not round-trip".into());
        }
        let report = run(fx.command, &src, &Options::default())?;
        emit(&report, Format::Json, true)?;
        Ok(report)
    });
    match result {
        Ok(report) => {
            outcome.mismatches.extend(compare(&report, fx));
            outcome.report = Some(report);
        }
        Err(e) => outcome.error = Some(e),
    }
    outcome
}

/// Runs every fixture; they are independent, so they run concurrently.
pub fn run_all(fixtures: &[Fixture]) -> Vec<FixtureOutcome> {
    std::thread::scope(|s| {
        let handles: Vec<_> = fixtures.iter().map(|fx| s.spawn(move || run_fixture(fx))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("fixture thread panicked"))
            .collect()
    })
}
