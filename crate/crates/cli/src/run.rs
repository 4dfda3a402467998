//! Command dispatch.

use std::time::Instant;

use orthoscope_core::{
    base_orthogonal, classify_derivative_family, classify_invariant_line_lift, classify_log_family,
    dlog_witness, fmt_rational, foliation_linearize, hermite_reduce, invariant_line, lie_bracket,
    linearize_along_line, pole_spectrum, system_dlog, BetaSearchResult, BiRatFunc,
    CompletenessCase, Conclusion, DlogOutcome, Error, FiberWitness, OrthogonalityVerdict,
    PlanarVectorField, RatFunc, Rational, ResidueClass, SystemVerdict,
};

use crate::error::{CliError, CliResult};
use crate::report::{residue_rows, BaseSummary, Report, WitnessCheck};
use crate::source::{FamilyKind, Parsed, SystemSource};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Command {
    Classify,
    Base,
    BetaLog,
    BetaDer,
    Residues,
    IsDlog,
    IsDerivative,
    Bracket,
    Linearize,
    Lift,
    DlogSys,
}

impl Command {
    pub const ALL: [Command; 11] = [
        Command::Classify,
        Command::Base,
        Command::BetaLog,
        Command::BetaDer,
        Command::Residues,
        Command::IsDlog,
        Command::IsDerivative,
        Command::Bracket,
        Command::Linearize,
        Command::Lift,
        Command::DlogSys,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Command::Classify => "classify",
            Command::Base => "base",
            Command::BetaLog => "beta-log",
            Command::BetaDer => "beta-der",
            Command::Residues => "residues",
            Command::IsDlog => "is-dlog",
            Command::IsDerivative => "is-derivative",
            Command::Bracket => "bracket",
            Command::Linearize => "linearize",
            Command::Lift => "lift",
            Command::DlogSys => "dlog-sys",
        }
    }

    pub fn from_name(name: &str) -> Option<Command> {
        Command::ALL.into_iter().find(|c| c.as_str() == name)
    }
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    /// Residue class for `beta-log` (default rational) and `is-dlog`
    /// (default integer).
    pub class: Option<ResidueClass>,
    /// Second field for `bracket`; `∂y` when absent.
    pub with_field: Option<PlanarVectorField>,
    /// Argument of `dlog-sys`; `y` when absent.
    pub h: Option<BiRatFunc>,
}

pub fn run(command: Command, source: &SystemSource, opts: &Options) -> CliResult<Report> {
    let start = Instant::now();
    let mut report = dispatch(command, source, opts)?;
    report.elapsed = start.elapsed();
    Ok(report)
}

fn dispatch(command: Command, source: &SystemSource, opts: &Options) -> CliResult<Report> {
    let input = source.parsed.serialize();
    match command {
        Command::Classify => classify(input, &source.parsed),
        Command::Base => base(input, &source.parsed),
        Command::BetaLog => {
            let (f, g) = family(command, &source.parsed, FamilyKind::Log)?;
            let class = opts.class.unwrap_or(ResidueClass::Rational);
            let result = orthoscope_core::beta_search_log(f, g, class)?;
            let mut r = Report::new(command.as_str(), input, result.status.as_str());
            r.detail("residue_class", class_name(class));
            fill_search(&mut r, &result, f, g, FamilyKind::Log)?;
            Ok(r)
        }
        Command::BetaDer => {
            let (f, g) = family(command, &source.parsed, FamilyKind::Derivative)?;
            let result = orthoscope_core::beta_search_derivative(f, g)?;
            let mut r = Report::new(command.as_str(), input, result.status.as_str());
            fill_search(&mut r, &result, f, g, FamilyKind::Derivative)?;
            Ok(r)
        }
        Command::Residues => residues(input, &source.parsed),
        Command::IsDlog => {
            let form = expression(command, &source.parsed)?;
            let class = opts.class.unwrap_or(ResidueClass::Integer);
            let outcome = dlog_witness(form, class)?;
            let verdict = if outcome.witness().is_some() { "dlog" } else { "not-dlog" };
            let mut r = Report::new(command.as_str(), input, verdict);
            r.detail("residue_class", class_name(class));
            r.residues = residue_rows(&pole_spectrum(form, true));
            match outcome {
                DlogOutcome::Witness(w) => {
                    let check = WitnessCheck::Dlog {
                        form: form.clone(),
                        h: w.h,
                        scaling: w.scaling,
                    };
                    r.attach_witness(check, &format!("({form})"))?;
                }
                DlogOutcome::Absent(reason) => r.notes.push(format!("no witness: {}", reason.as_str())),
            }
            Ok(r)
        }
        Command::IsDerivative => {
            let form = expression(command, &source.parsed)?;
            let hd = hermite_reduce(form);
            let verdict = if hd.remainder.is_zero() { "derivative" } else { "not-derivative" };
            let mut r = Report::new(command.as_str(), input, verdict);
            r.residues = residue_rows(&pole_spectrum(form, true));
            if hd.remainder.is_zero() {
                let check = WitnessCheck::Antiderivative {
                    form: form.clone(),
                    h: hd.derivative_part,
                };
                r.attach_witness(check, &format!("({form})"))?;
            } else {
                r.detail("remainder", &hd.remainder);
                r.notes.push("the remainder has simple poles with nonzero residues".into());
            }
            Ok(r)
        }
        Command::Bracket => {
            let (v, mut notes) = planar(command, &source.parsed, true)?;
            let w = opts.with_field.clone().unwrap_or_else(PlanarVectorField::d_y);
            let mut r = Report::new(command.as_str(), input, "computed");
            r.notes.append(&mut notes);
            r.detail("w", field_text(&w));
            r.detail("bracket_v_w", field_text(&lie_bracket(&v, &w)));
            match foliation_linearize(&v, &w) {
                Ok(lin) => r.detail("cofactor", &lin.cofactor_c),
                Err(Error::BracketNotProportional) => r.notes.push("[w, v] is not a multiple of w".into()),
                Err(e) => return Err(e.into()),
            }
            r.notes.push("sign convention: [v, w] = (v·∇)w − (w·∇)v; the cofactor c solves [w, v] = c·w".into());
            Ok(r)
        }
        Command::Linearize => linearize(input, &source.parsed),
        Command::Lift => {
            let v = match &source.parsed {
                Parsed::Planar(v) => v,
                other => return Err(shape(command, other, "a planar system; for a univariate family use classify")),
            };
            let verdict = classify_invariant_line_lift(v)?;
            let lin = linearize_along_line(v)?;
            let f0 = RatFunc::from_poly(lin.base_f0);
            let g0 = RatFunc::from_poly(lin.fiber_hz);
            let mut r = verdict_report(command, input, &verdict, &f0, &g0, FamilyKind::Log)?;
            r.detail("linearized", format!("x' = {f0}; y' = y*({g0})"));
            Ok(r)
        }
        Command::DlogSys => {
            let (v, mut notes) = planar(command, &source.parsed, true)?;
            let h = opts.h.clone().unwrap_or_else(BiRatFunc::y);
            let d = system_dlog(&v, &h)?;
            let mut r = Report::new(command.as_str(), input, "computed");
            r.notes.append(&mut notes);
            r.detail("h", &h);
            r.detail("dlog", &d);
            Ok(r)
        }
    }
}

fn class_name(class: ResidueClass) -> &'static str {
    match class {
        ResidueClass::Integer => "integer",
        ResidueClass::Rational => "rational",
    }
}

fn shape(command: Command, parsed: &Parsed, needs: &str) -> CliError {
    CliError::Shape(format!(
        "{} expects {needs}, but the input is a {}",
        command.as_str(),
        parsed.shape_name()
    ))
}

fn family(command: Command, parsed: &Parsed, kind: FamilyKind) -> CliResult<(&RatFunc, &RatFunc)> {
    match parsed {
        Parsed::UnivariateFamily { f, g, kind: k } if *k == kind => Ok((f, g)),
        other => {
            let needs = match kind {
                FamilyKind::Log => "a log family x' = f(x); y' = y*g(x) (use beta-der for y' = g(x))",
                FamilyKind::Derivative => "a derivative family x' = f(x); y' = g(x) (use beta-log for y' = y*g(x))",
            };
            Err(shape(command, other, needs))
        }
    }
}

fn expression(command: Command, parsed: &Parsed) -> CliResult<&RatFunc> {
    match parsed {
        Parsed::Expression(r) => Ok(r),
        other => Err(shape(command, other, "a bare rational function of x, such as 1/(x*(x-1))")),
    }
}

/// The planar field behind `parsed`. Families with polynomial data are
/// accepted when `allow_family` is set.
fn planar(command: Command, parsed: &Parsed, allow_family: bool) -> CliResult<(PlanarVectorField, Vec<String>)> {
    match parsed {
        Parsed::Planar(v) => Ok((v.clone(), Vec::new())),
        Parsed::UnivariateFamily { .. } if allow_family => match parsed.as_field() {
            Some(v) => Ok((v, vec![format!("{} read as a planar polynomial field", parsed.shape_name())])),
            None => Err(shape(command, parsed, "a polynomial planar system")),
        },
        other => Err(shape(command, other, "a planar system x' = P(x, y); y' = Q(x, y)")),
    }
}

fn field_text(v: &PlanarVectorField) -> String {
    format!("x' = {}; y' = {}", v.fx, v.fy)
}

fn base_summary(b: &OrthogonalityVerdict) -> BaseSummary {
    BaseSummary {
        orthogonal: b.orthogonal,
        evidence: b.evidence.as_str().to_string(),
        residues: residue_rows(&b.spectrum),
    }
}

fn case_note(case: CompletenessCase) -> &'static str {
    match case {
        CompletenessCase::A => "case A: pole-order conditions alone pin or exclude beta",
        CompletenessCase::B => "case B: the residues force a rational beta and the rational system was solved",
        CompletenessCase::C => "case C: an irrational beta could not be excluded",
    }
}

/// `(g − β)/f` as written, before reduction.
fn written_form(f: &RatFunc, g: &RatFunc, beta: &Rational) -> String {
    let top = g - &RatFunc::constant(beta.clone());
    format!("({top})/({f})")
}

fn fill_search(r: &mut Report, result: &BetaSearchResult, f: &RatFunc, g: &RatFunc, kind: FamilyKind) -> CliResult<()> {
    r.beta = result.beta.as_ref().map(fmt_rational);
    r.completeness_case = Some(result.completeness_case.as_str().to_string());
    r.notes.push(case_note(result.completeness_case).into());
    if let Some(t) = &result.residue_table {
        r.residues = residue_rows(t);
    }
    if let (Some(w), Some(beta)) = (&result.witness, &result.beta) {
        let form = (g - &RatFunc::constant(beta.clone())).checked_div(f)?;
        let check = match (w, kind) {
            (FiberWitness::Dlog(d), FamilyKind::Log) => WitnessCheck::Dlog {
                form,
                h: d.h.clone(),
                scaling: d.scaling.clone(),
            },
            (FiberWitness::Antiderivative(h), FamilyKind::Derivative) => WitnessCheck::Antiderivative { form, h: h.clone() },
            _ => return Err(CliError::Witness("witness kind does not match the family".into())),
        };
        r.attach_witness(check, &written_form(f, g, beta))?;
    }
    Ok(())
}

fn conclusion_summary(c: Conclusion) -> &'static str {
    match c {
        Conclusion::OrthogonalToConstants => "the generic type is orthogonal to the constants",
        Conclusion::NonorthogonalUniformlyAlmostInternal => {
            "the fibration is uniformly internal to the constants (almost internal when the scaling exceeds 1), so the generic type is nonorthogonal"
        }
        Conclusion::BaseNonorthogonalCriterionInapplicable => {
            "the base equation x' = f(x) is itself nonorthogonal, so the fiber criterion does not apply"
        }
        Conclusion::Inconclusive => "undecided: an irrational beta could not be excluded",
        Conclusion::InconclusiveForLift => {
            "the linearized fibration admits a beta, so the invariant-line criterion gives no conclusion"
        }
        Conclusion::HypothesisOneFails => {
            "the restricted base x' = f(x, 0) is nonorthogonal, so the invariant-line criterion does not apply"
        }
    }
}

fn verdict_report(
    command: Command,
    input: String,
    v: &SystemVerdict,
    f: &RatFunc,
    g: &RatFunc,
    kind: FamilyKind,
) -> CliResult<Report> {
    let mut r = Report::new(command.as_str(), input, v.conclusion.as_str());
    r.summary = conclusion_summary(v.conclusion).into();
    r.base = Some(base_summary(&v.base));
    r.detail("search", v.fibration.status.as_str());
    if let Some(k) = v.internality_kind {
        r.detail("internality", k.as_str());
    }
    fill_search(&mut r, &v.fibration, f, g, kind)?;
    Ok(r)
}

fn classify(input: String, parsed: &Parsed) -> CliResult<Report> {
    let command = Command::Classify;
    match parsed {
        Parsed::UnivariateFamily { f, g, kind } => {
            let v = match kind {
                FamilyKind::Log => classify_log_family(f, g)?,
                FamilyKind::Derivative => classify_derivative_family(f, g)?,
            };
            let mut r = verdict_report(command, input, &v, f, g, *kind)?;
            r.detail("family", kind.as_str());
            Ok(r)
        }
        Parsed::Planar(v) => {
            let verdict = classify_invariant_line_lift(v)?;
            let lin = linearize_along_line(v)?;
            let f0 = RatFunc::from_poly(lin.base_f0);
            let g0 = RatFunc::from_poly(lin.fiber_hz);
            let mut r = verdict_report(command, input, &verdict, &f0, &g0, FamilyKind::Log)?;
            r.detail("family", "planar");
            r.notes.push("planar input: decided through the invariant line y = 0".into());
            Ok(r)
        }
        other => Err(shape(command, other, "a system such as x' = f(x); y' = y*g(x)")),
    }
}

fn base(input: String, parsed: &Parsed) -> CliResult<Report> {
    let f = match parsed {
        Parsed::UnivariateFamily { f, .. } | Parsed::Expression(f) => f,
        other => Err(shape(Command::Base, other, "x' = f(x) data; for planar input use linearize or lift"))?,
    };
    let b = base_orthogonal(f)?;
    let verdict = if b.orthogonal { "orthogonal" } else { "nonorthogonal" };
    let mut r = Report::new(Command::Base.as_str(), input, verdict);
    r.summary = if b.orthogonal {
        format!("x' = {f} is orthogonal to the constants")
    } else {
        format!("x' = {f} is not orthogonal")
    };
    r.residues = residue_rows(&b.spectrum);
    r.base = Some(base_summary(&b));
    Ok(r)
}

fn residues(input: String, parsed: &Parsed) -> CliResult<Report> {
    let (form, note) = match parsed {
        Parsed::Expression(r) => (r.clone(), None),
        Parsed::UnivariateFamily { f, .. } => (f.recip()?, Some("spectrum of dx/f for the base equation")),
        other => return Err(shape(Command::Residues, other, "a rational function of x")),
    };
    let spectrum = pole_spectrum(&form, true);
    let verdict = if spectrum.is_empty() {
        "no-poles"
    } else if spectrum.has_multiple_pole() {
        "has-multiple-pole"
    } else {
        "simple-poles-only"
    };
    let mut r = Report::new(Command::Residues.as_str(), input, verdict);
    r.residues = residue_rows(&spectrum);
    r.detail("residue_sum", fmt_rational(&spectrum.residue_sum()));
    if let Some(n) = note {
        r.notes.push(n.into());
    }
    Ok(r)
}

fn linearize(input: String, parsed: &Parsed) -> CliResult<Report> {
    let (v, notes) = planar(Command::Linearize, parsed, true)?;
    let line = invariant_line(&v);
    if !line.invariant {
        return Err(CliError::Hypothesis(Error::LineNotInvariant));
    }
    let lin = linearize_along_line(&v)?;
    let mut r = Report::new(Command::Linearize.as_str(), input, "invariant-line");
    r.notes.extend(notes);
    let g1 = line.cofactor_g1.expect("invariant line has a cofactor");
    r.detail("cofactor_g1", &g1);
    r.detail("linearized", field_text(&lin.as_vector_field()));
    r.detail("base_f0", &lin.base_f0);
    r.detail("fiber", &lin.fiber_hz);
    match foliation_linearize(&v, &PlanarVectorField::d_y()) {
        Ok(fol) => {
            let c = fol.cofactor_c;
            let at_zero = c.restrict_y0()?;
            r.detail("tangent_cofactor", &c);
            r.detail("tangent_cofactor_at_y0", &at_zero);
            // gauge by h = y: the fiber coefficient becomes c − dlog(y)
            let dlog_y = system_dlog(&v, &BiRatFunc::y())?;
            r.detail("dlog_y", &dlog_y);
            r.detail("gauge_transformed_cofactor", &c - &dlog_y);
            if at_zero != RatFunc::from_poly(lin.fiber_hz.clone()) {
                return Err(CliError::Witness(
                    "tangent cofactor at y = 0 differs from the linearized fiber".into(),
                ));
            }
        }
        Err(Error::BracketNotProportional) => {
            r.notes.push("x' depends on y, so [∂y, v] is not a multiple of ∂y".into());
        }
        Err(e) => return Err(e.into()),
    }
    Ok(r)
}
