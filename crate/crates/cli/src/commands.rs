use std::io::Write;
use std::path::{Path, PathBuf};

use qconv_core::convolution::{
    conv1_matrix, convolve_2qubit, convolve_abstract, convolve_ideal_filter,
    convolve_with_zero_workaround, DPlacement, FilterKind, FrequencyResponse, PipelineResult,
    Route,
};
use qconv_core::qft::qft;
use qconv_core::{
    circular_convolve, dft, max_abs_diff, ControlPattern, Signal, SpectralOrder, StateVector, C64,
};

use crate::args::{Cli, Command, Format, Kind, Ordering, Pipeline, Placement, SignalArgs};
use crate::error::{CliError, Result};
use crate::input::{load_filter, load_signal, LoadedFilter, LoadedSignal};
use crate::report::{self, amplitudes, Inputs, Report};
use crate::worked_examples;

pub const DEFAULT_TOLERANCE: f64 = 1e-10;
pub const PUBLISHED_TOLERANCE: f64 = 1e-4;

/// Everything one pipeline run needs besides the signal.
#[derive(Debug, Clone)]
pub struct Job {
    pub command: &'static str,
    pub pipeline: Pipeline,
    pub filter: Option<String>,
    pub kind: Option<Kind>,
    pub placement: Placement,
    pub tolerance: f64,
}

impl From<Ordering> for SpectralOrder {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Natural => Self::Natural,
            Ordering::Paired => Self::Paired,
            Ordering::ConjugatePairs => Self::ConjugatePairs,
        }
    }
}

impl From<Kind> for FilterKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Lowpass => Self::LowPass,
            Kind::Highpass => Self::HighPass,
            Kind::LowpassComplement => Self::LowPassComplement,
        }
    }
}

impl From<Placement> for DPlacement {
    fn from(p: Placement) -> Self {
        match p {
            Placement::After => Self::AfterPhases,
            Placement::Before => Self::BeforePhases,
        }
    }
}

fn order_name(order: SpectralOrder) -> &'static str {
    match order {
        SpectralOrder::Natural => "natural",
        SpectralOrder::Paired => "paired",
        SpectralOrder::ConjugatePairs => "conjugate-pairs",
    }
}

fn value_name<T: clap::ValueEnum>(v: T) -> String {
    v.to_possible_value()
        .map(|p| p.get_name().to_string())
        .unwrap_or_default()
}

/// Spectral ordering the QFT stage of a route produces.
fn route_ordering(route: Route) -> SpectralOrder {
    match route {
        Route::PhaseBank | Route::Ancilla => SpectralOrder::Paired,
        Route::Diagonal => SpectralOrder::Natural,
        Route::TwoQubit => SpectralOrder::ConjugatePairs,
    }
}

fn route_name(route: Route) -> &'static str {
    match route {
        Route::PhaseBank => "phase-bank",
        Route::Diagonal => "diagonal",
        Route::TwoQubit => "two-qubit",
        Route::Ancilla => "ancilla",
    }
}

fn base_report(command: &str, signal: &LoadedSignal, job: &Job) -> Report {
    Report {
        command: command.to_string(),
        inputs: Inputs {
            signal: signal.name.clone(),
            original_norm: signal.original_norm,
            filter: job.filter.clone(),
            kind: job.kind.map(value_name),
            pipeline: None,
            placement: None,
        },
        ordering: order_name(SpectralOrder::Natural).to_string(),
        amplitudes: Vec::new(),
        scale_a: 1.0,
        success_probability: 1.0,
        oracle_max_abs_dev: None,
        pass: true,
        recovered_y: None,
        route: None,
        workaround_constant: None,
        unitary: None,
    }
}

fn require_filter(job: &Job, len: usize) -> Result<LoadedFilter> {
    let spec = job
        .filter
        .as_deref()
        .ok_or_else(|| CliError::Usage("this pipeline needs --filter".to_string()))?;
    load_filter(spec, len)
}

fn require_kind(job: &Job) -> Result<Kind> {
    job.kind
        .ok_or_else(|| CliError::Usage("the ideal-filter pipeline needs --kind".to_string()))
}

fn oracle(f: &Signal, h: &[C64]) -> Result<Vec<C64>> {
    let h = Signal::new(h.to_vec()).map_err(|source| CliError::Input {
        context: "filter".to_string(),
        source,
    })?;
    Ok(circular_convolve(f, &h)?.into_samples())
}

fn finish(
    mut report: Report,
    result: PipelineResult,
    recovered: Vec<C64>,
    y: &[C64],
    tol: f64,
) -> Report {
    let dev = max_abs_diff(&recovered, y);
    report.ordering = order_name(route_ordering(result.route)).to_string();
    report.route = Some(route_name(result.route).to_string());
    report.amplitudes = amplitudes(result.output_state.amplitudes());
    report.scale_a = result.scale_a;
    report.success_probability = result.success_probability;
    report.recovered_y = Some(amplitudes(&recovered));
    report.oracle_max_abs_dev = Some(dev);
    report.pass = dev <= tol;
    report
}

/// Runs `job.pipeline` on one signal and compares the recovered convolution
/// with the direct one.
pub fn run_pipeline(signal: &LoadedSignal, job: &Job) -> Result<Report> {
    let f = &signal.signal;
    let mut report = base_report(job.command, signal, job);
    let tol = job.tolerance;
    match job.pipeline {
        Pipeline::Convolve => {
            let filter = require_filter(job, f.len())?;
            report.inputs.placement = Some(value_name(job.placement));
            let result = convolve_abstract(f, &filter.response()?, job.placement.into())?;
            let y = oracle(f, &filter.impulse)?;
            let recovered = result.recovered_y.clone();
            Ok(finish(report, result, recovered, &y, tol))
        }
        Pipeline::Workaround => {
            let filter = require_filter(job, f.len())?;
            let result = convolve_with_zero_workaround(f, &filter.response()?)?;
            let y = oracle(f, &filter.impulse)?;
            report.workaround_constant = Some(result.constant);
            Ok(finish(report, result.shifted, result.recovered_y, &y, tol))
        }
        Pipeline::IdealFilter => {
            let kind = FilterKind::from(require_kind(job)?);
            let result = convolve_ideal_filter(f, kind)?;
            let y = oracle(f, kind.response().impulse_response().samples())?;
            let recovered = result.recovered_y.clone();
            Ok(finish(report, result, recovered, &y, tol))
        }
        Pipeline::Conv2 => {
            let filter = require_filter(job, f.len())?;
            let h = filter.real_impulse()?;
            let response = FrequencyResponse::from_real_impulse(&h)?;
            let result = convolve_2qubit(f, &response)?;
            let y = oracle(f, &filter.impulse)?;
            let recovered = result.recovered_y.clone();
            Ok(finish(report, result, recovered, &y, tol))
        }
        Pipeline::Conv1 => {
            let filter = require_filter(job, f.len())?;
            let h = filter.real_impulse()?;
            run_conv1(report, f, &filter.impulse, h[0], h[1], tol)
        }
    }
}

/// `|y> = M |f>` with `M = [[h0, h1], [h1, h0]] / |h|`, renormalized when
/// `M` is not unitary.
fn run_conv1(
    mut report: Report,
    f: &Signal,
    h: &[C64],
    h0: f64,
    h1: f64,
    tol: f64,
) -> Result<Report> {
    let (gate, unitary) = conv1_matrix(h0, h1)?;
    let state = StateVector::from_signal(f)?;
    let (out, norm) = if gate.is_unitary() {
        (state.apply_gate(&gate, 0, &ControlPattern::none())?, 1.0)
    } else {
        state.apply_gate_renormalized(&gate, 0, &ControlPattern::none())?
    };
    let k = norm * (h0 * h0 + h1 * h1).sqrt();
    let recovered: Vec<C64> = out.amplitudes().iter().map(|a| a * k).collect();
    let y = oracle(f, h)?;
    let dev = max_abs_diff(&recovered, &y);
    report.amplitudes = amplitudes(out.amplitudes());
    report.scale_a = k * 2f64.sqrt();
    report.recovered_y = Some(amplitudes(&recovered));
    report.oracle_max_abs_dev = Some(dev);
    report.pass = dev <= tol;
    report.unitary = Some(unitary);
    Ok(report)
}

fn run_qft(signal: &LoadedSignal, ordering: Ordering, tol: f64) -> Result<Report> {
    let order = SpectralOrder::from(ordering);
    let f = &signal.signal;
    let out = qft(&StateVector::from_signal(f)?, order)?;
    let scale = 1.0 / (f.len() as f64).sqrt();
    let spectrum = dft(f);
    let expect: Vec<C64> = order
        .sequence(f.len())?
        .iter()
        .map(|&p| spectrum.at(p) * scale)
        .collect();
    let dev = max_abs_diff(out.amplitudes(), &expect);
    let job = Job {
        command: "qft",
        pipeline: Pipeline::Convolve,
        filter: None,
        kind: None,
        placement: Placement::After,
        tolerance: tol,
    };
    let mut report = base_report("qft", signal, &job);
    report.ordering = order_name(order).to_string();
    report.amplitudes = amplitudes(out.amplitudes());
    report.oracle_max_abs_dev = Some(dev);
    report.pass = dev <= tol;
    Ok(report)
}

fn run_oracle(signal: &LoadedSignal, filter: &str) -> Result<Report> {
    let f = &signal.signal;
    let filter = load_filter(filter, f.len())?;
    let y = oracle(f, &filter.impulse)?;
    let energy: f64 = y.iter().map(|v| v.norm_sqr()).sum();
    let state = if energy > 0.0 {
        y.iter().map(|v| v / energy.sqrt()).collect()
    } else {
        y.clone()
    };
    let job = Job {
        command: "oracle",
        pipeline: Pipeline::Convolve,
        filter: Some(filter.name.clone()),
        kind: None,
        placement: Placement::After,
        tolerance: DEFAULT_TOLERANCE,
    };
    let mut report = base_report("oracle", signal, &job);
    report.amplitudes = amplitudes(&state);
    report.scale_a = (f.len() as f64 * energy).sqrt();
    report.recovered_y = Some(amplitudes(&y));
    Ok(report)
}

/// Files directly inside `dir`, sorted by name.
fn signal_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let io = |source| CliError::Io {
        path: dir.to_path_buf(),
        source,
    };
    let mut files = Vec::new();
    for entry in std::fs::read_dir(dir).map_err(io)? {
        let path = entry.map_err(io)?.path();
        if path.is_file() {
            files.push(path);
        }
    }
    files.sort();
    if files.is_empty() {
        return Err(CliError::Usage(format!(
            "directory `{}` holds no signal files",
            dir.display()
        )));
    }
    Ok(files)
}

/// Output of a run before it is encoded.
#[derive(Debug)]
pub enum Outcome {
    Single(Box<Report>),
    Many(Vec<Report>),
    Checks(report::CheckTable),
}

impl Outcome {
    pub fn pass(&self) -> bool {
        match self {
            Self::Single(r) => r.pass,
            Self::Many(rs) => rs.iter().all(|r| r.pass),
            Self::Checks(t) => t.pass,
        }
    }
}

fn load(args: &SignalArgs) -> Result<LoadedSignal> {
    load_signal(&args.signal, args.normalize)
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    let default_tol = match cli.command {
        Command::ReproducePaper => PUBLISHED_TOLERANCE,
        _ => DEFAULT_TOLERANCE,
    };
    let tol = cli.tolerance.unwrap_or(default_tol);
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(CliError::Usage(format!(
            "--tolerance must be positive and finite, got {tol}"
        )));
    }
    let job = |command, pipeline, filter: Option<&str>, kind, placement| Job {
        command,
        pipeline,
        filter: filter.map(str::to_string),
        kind,
        placement,
        tolerance: tol,
    };
    let outcome = match &cli.command {
        Command::Qft { signal, ordering } => {
            Outcome::Single(Box::new(run_qft(&load(signal)?, *ordering, tol)?))
        }
        Command::Convolve {
            signal,
            filter,
            placement,
            workaround,
        } => {
            let pipeline = if *workaround {
                Pipeline::Workaround
            } else {
                Pipeline::Convolve
            };
            let j = job("convolve", pipeline, Some(&filter.filter), None, *placement);
            Outcome::Single(Box::new(run_pipeline(&load(signal)?, &j)?))
        }
        Command::IdealFilter { signal, kind } => {
            let j = job(
                "ideal-filter",
                Pipeline::IdealFilter,
                None,
                Some(*kind),
                Placement::After,
            );
            Outcome::Single(Box::new(run_pipeline(&load(signal)?, &j)?))
        }
        Command::Conv2 { signal, filter } => {
            let j = job(
                "conv2",
                Pipeline::Conv2,
                Some(&filter.filter),
                None,
                Placement::After,
            );
            Outcome::Single(Box::new(run_pipeline(&load(signal)?, &j)?))
        }
        Command::Conv1 { signal, filter } => {
            let j = job(
                "conv1",
                Pipeline::Conv1,
                Some(&filter.filter),
                None,
                Placement::After,
            );
            Outcome::Single(Box::new(run_pipeline(&load(signal)?, &j)?))
        }
        Command::Oracle { signal, filter } => {
            Outcome::Single(Box::new(run_oracle(&load(signal)?, &filter.filter)?))
        }
        Command::Compare {
            signal,
            normalize,
            filter,
            pipeline,
            kind,
            placement,
        } => {
            let j = job("compare", *pipeline, filter.as_deref(), *kind, *placement);
            let run = |s: &LoadedSignal| {
                let mut r = run_pipeline(s, &j)?;
                r.inputs.pipeline = Some(value_name(*pipeline));
                Ok::<_, CliError>(r)
            };
            let path = Path::new(signal);
            if path.is_dir() {
                let reports = signal_files(path)?
                    .iter()
                    .map(|p| run(&load_signal(&p.to_string_lossy(), *normalize)?))
                    .collect::<Result<Vec<_>>>()?;
                Outcome::Many(reports)
            } else {
                Outcome::Single(Box::new(run(&load_signal(signal, *normalize)?)?))
            }
        }
        Command::ReproducePaper => Outcome::Checks(worked_examples::reproduce(tol)?),
    };
    Ok(outcome)
}

/// Runs a parsed command line, writing the report to `out` and diagnostics
/// to `err`. Returns the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let result = execute(cli).and_then(|outcome| {
        write_outcome(cli.format, &outcome, out)?;
        Ok(outcome.pass())
    });
    match result {
        Ok(true) => 0,
        Ok(false) => {
            let _ = writeln!(
                err,
                "qconv: deviation from the oracle exceeds the tolerance"
            );
            1
        }
        Err(e) => report_error(&e, out, err),
    }
}

pub fn report_error(e: &CliError, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let _ = writeln!(err, "qconv: {e}");
    let _ = report::write_json(out, &e.to_object());
    e.exit_code()
}

fn write_outcome(format: Option<Format>, outcome: &Outcome, out: &mut dyn Write) -> Result<()> {
    match (outcome, format) {
        (Outcome::Single(r), Some(Format::Csv)) => {
            report::write_csv(out, std::slice::from_ref(&**r), false)
        }
        (Outcome::Single(r), _) => report::write_json(out, &**r),
        (Outcome::Many(rs), Some(Format::Csv)) => report::write_csv(out, rs, true),
        (Outcome::Many(rs), _) => report::write_json(out, rs),
        (Outcome::Checks(t), None) => report::write_checks_table(out, t),
        (Outcome::Checks(t), Some(Format::Json)) => report::write_json(out, t),
        (Outcome::Checks(t), Some(Format::Csv)) => report::write_checks_csv(out, t),
    }
}
