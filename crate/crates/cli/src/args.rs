use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "qconv",
    version,
    about = "Simulate QFT-based circular convolution circuits and check them against direct convolution"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Report format. `reproduce-paper` prints a text table unless a format
    /// is given.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Maximum absolute deviation accepted when comparing with the oracle
    /// [default: 1e-10, or 1e-4 for reproduce-paper].
    #[arg(long, global = true)]
    pub tolerance: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Ordering {
    Natural,
    Paired,
    ConjugatePairs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Placement {
    /// Magnitude diagonal after the phase operators.
    #[default]
    After,
    /// Magnitude diagonal before the phase operators.
    Before,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Lowpass,
    Highpass,
    /// Low-pass circuit post-selected on ancilla 1.
    LowpassComplement,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Pipeline {
    #[default]
    Convolve,
    Workaround,
    IdealFilter,
    Conv2,
    Conv1,
}

#[derive(Debug, Args)]
pub struct SignalArgs {
    /// Signal file, or a named signal such as `delta8`, `uniform4` or
    /// `alternating8`.
    #[arg(long)]
    pub signal: String,

    /// Scale a non-unit signal to unit norm instead of rejecting it.
    #[arg(long)]
    pub normalize: bool,
}

#[derive(Debug, Args)]
pub struct FilterArgs {
    /// Impulse response: `example1`, `lowpass12`, `highpass`, `identity`, a
    /// file, or inline comma-separated samples.
    #[arg(long)]
    pub filter: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Quantum Fourier transform of a signal.
    Qft {
        #[command(flatten)]
        signal: SignalArgs,
        #[arg(long, value_enum, default_value = "natural")]
        ordering: Ordering,
    },
    /// Convolution with a filter, magnitude step as renormalization.
    Convolve {
        #[command(flatten)]
        signal: SignalArgs,
        #[command(flatten)]
        filter: FilterArgs,
        #[arg(long, value_enum, default_value_t)]
        placement: Placement,
        /// Offset the response away from zero and subtract the offset after.
        #[arg(long)]
        workaround: bool,
    },
    /// Ideal 8-point filter with an ancilla and post-selection.
    IdealFilter {
        #[command(flatten)]
        signal: SignalArgs,
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// Two-qubit convolution with a real impulse response.
    Conv2 {
        #[command(flatten)]
        signal: SignalArgs,
        #[command(flatten)]
        filter: FilterArgs,
    },
    /// One-qubit convolution with the 2x2 circulant matrix.
    Conv1 {
        #[command(flatten)]
        signal: SignalArgs,
        #[command(flatten)]
        filter: FilterArgs,
    },
    /// Direct time-domain circular convolution.
    Oracle {
        #[command(flatten)]
        signal: SignalArgs,
        #[command(flatten)]
        filter: FilterArgs,
    },
    /// Run a pipeline and the oracle on one signal file or every file in a
    /// directory.
    Compare {
        /// Signal file, named signal, or directory of signal files.
        #[arg(long)]
        signal: String,
        #[arg(long)]
        normalize: bool,
        /// Required by every pipeline except `ideal-filter`.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        pipeline: Pipeline,
        /// Filter kind for the `ideal-filter` pipeline.
        #[arg(long, value_enum)]
        kind: Option<Kind>,
        #[arg(long, value_enum, default_value_t)]
        placement: Placement,
    },
    /// Recompute the worked examples and compare with the published values.
    ReproducePaper,
}
