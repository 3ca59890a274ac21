//! Signal files, named signals and filter specifications.
//!
//! Signal files are UTF-8 text with one sample per line or comma-separated
//! samples. A sample is a real number or a complex literal such as `0.5+0.5i`,
//! `1e-3-2i` or `-i`. Everything after `#` on a line is ignored.

use std::path::Path;

use qconv_core::convolution::FrequencyResponse;
use qconv_core::numerics::log2_len;
use qconv_core::{Signal, C64};

use crate::error::{CliError, Result};

/// Squared-norm tolerance a signal must meet to be used without
/// `--normalize`. Matches the state-vector constructor.
const NORM_TOLERANCE: f64 = 1e-12;

/// Parses one sample literal.
pub fn parse_complex(token: &str) -> Option<C64> {
    let t = token.trim();
    if t.is_empty() {
        return None;
    }
    let value = match t.strip_suffix(['i', 'j']) {
        None => C64::new(parse_real(t)?, 0.0),
        Some(body) => {
            // split before the last sign that is not part of an exponent
            let split = body
                .char_indices()
                .filter(|&(k, ch)| k > 0 && (ch == '+' || ch == '-'))
                .filter(|&(k, _)| !matches!(body.as_bytes()[k - 1], b'e' | b'E'))
                .map(|(k, _)| k)
                .next_back();
            match split {
                Some(k) => C64::new(parse_real(&body[..k])?, parse_imag(&body[k..])?),
                None => C64::new(0.0, parse_imag(body)?),
            }
        }
    };
    Some(value)
}

fn parse_real(s: &str) -> Option<f64> {
    let s = s.trim();
    // f64::from_str accepts "inf" and "nan"; samples must be finite
    s.parse::<f64>().ok().filter(|v| v.is_finite())
}

fn parse_imag(s: &str) -> Option<f64> {
    match s.trim() {
        "" | "+" => Some(1.0),
        "-" => Some(-1.0),
        other => parse_real(other),
    }
}

/// Parses the text of a signal file. `origin` names the source in errors.
pub fn parse_samples(text: &str, origin: &str) -> Result<Vec<C64>> {
    let mut samples = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        for token in line.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let value = parse_complex(token).ok_or_else(|| CliError::Malformed {
                path: origin.to_string(),
                line: idx + 1,
                message: format!("cannot parse sample `{token}`"),
            })?;
            samples.push(value);
        }
    }
    Ok(samples)
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// A signal after validation, ready to be used as a unit-norm state.
#[derive(Debug, Clone)]
pub struct LoadedSignal {
    pub name: String,
    pub signal: Signal,
    /// Norm before auto-normalization, when it was applied.
    pub original_norm: Option<f64>,
}

/// Named signals: `delta<N>`, `uniform<N>` and `alternating<N>`.
pub fn named_signal(name: &str) -> Option<Vec<C64>> {
    let digits = name.trim_start_matches(|c: char| c.is_ascii_alphabetic());
    let stem = &name[..name.len() - digits.len()];
    let len: usize = digits.parse().ok()?;
    if len == 0 || len > 1 << 16 {
        return None;
    }
    let a = 1.0 / (len as f64).sqrt();
    let samples = match stem {
        "delta" => (0..len)
            .map(|n| C64::new(if n == 0 { 1.0 } else { 0.0 }, 0.0))
            .collect(),
        "uniform" => vec![C64::new(a, 0.0); len],
        "alternating" => (0..len)
            .map(|n| C64::new(if n % 2 == 0 { a } else { -a }, 0.0))
            .collect(),
        _ => return None,
    };
    Some(samples)
}

/// Loads a signal from a file path or a signal name and checks it can be
/// encoded as a state. With `normalize`, non-unit signals are scaled to unit
/// norm and the original norm is kept.
pub fn load_signal(spec: &str, normalize: bool) -> Result<LoadedSignal> {
    let path = Path::new(spec);
    let samples = if path.is_file() {
        parse_samples(&read_file(path)?, spec)?
    } else if let Some(samples) = named_signal(spec) {
        samples
    } else {
        return Err(CliError::Usage(format!(
            "`{spec}` is neither a file nor a named signal"
        )));
    };
    signal_from_samples(spec, samples, normalize)
}

pub fn signal_from_samples(name: &str, samples: Vec<C64>, normalize: bool) -> Result<LoadedSignal> {
    let invalid = |source| CliError::Input {
        context: format!("signal `{name}`"),
        source,
    };
    let signal = Signal::new(samples).map_err(invalid)?;
    if signal.is_normalized(NORM_TOLERANCE) {
        return Ok(LoadedSignal {
            name: name.to_string(),
            signal,
            original_norm: None,
        });
    }
    if !normalize {
        return Err(CliError::Usage(format!(
            "signal `{name}` has norm {}; pass --normalize to scale it to unit norm",
            signal.norm()
        )));
    }
    let (signal, norm) = Signal::normalized(signal.into_samples()).map_err(invalid)?;
    Ok(LoadedSignal {
        name: name.to_string(),
        signal,
        original_norm: Some(norm),
    })
}

/// An impulse response together with the name it was given by.
#[derive(Debug, Clone)]
pub struct LoadedFilter {
    pub name: String,
    pub impulse: Vec<C64>,
}

impl LoadedFilter {
    pub fn response(&self) -> Result<FrequencyResponse> {
        let h = Signal::new(self.impulse.clone()).map_err(|source| CliError::Input {
            context: format!("filter `{}`", self.name),
            source,
        })?;
        Ok(FrequencyResponse::from_impulse(&h))
    }

    pub fn real_impulse(&self) -> Result<Vec<f64>> {
        if self.impulse.iter().any(|h| h.im != 0.0) {
            return Err(CliError::Usage(format!(
                "filter `{}` must have a real impulse response",
                self.name
            )));
        }
        Ok(self.impulse.iter().map(|h| h.re).collect())
    }
}

fn preset(name: &str, len: usize) -> Option<Result<Vec<C64>>> {
    let only_eight = |response: FrequencyResponse| {
        if len == 8 {
            Ok(response.impulse_response().into_samples())
        } else {
            Err(CliError::Usage(format!(
                "filter `{name}` is defined for 8-point signals, got {len}"
            )))
        }
    };
    let zero = C64::new(0.0, 0.0);
    let out = match name {
        "example1" => {
            let mut h = vec![zero; len];
            for v in h.iter_mut().take(2) {
                *v = C64::new(0.5, 0.0);
            }
            Ok(h)
        }
        "identity" => {
            let mut h = vec![zero; len];
            if let Some(v) = h.first_mut() {
                *v = C64::new(1.0, 0.0);
            }
            Ok(h)
        }
        "lowpass12" => only_eight(FrequencyResponse::ideal_lowpass()),
        "highpass" => only_eight(FrequencyResponse::ideal_highpass()),
        _ => return None,
    };
    Some(out)
}

/// Resolves a filter spec: a preset name (`example1`, `lowpass12`,
/// `highpass`, `identity`), a file of impulse-response samples, or inline
/// comma-separated samples. The result must have `len` samples.
pub fn load_filter(spec: &str, len: usize) -> Result<LoadedFilter> {
    let path = Path::new(spec);
    let impulse = if let Some(h) = preset(spec, len) {
        h?
    } else if path.is_file() {
        parse_samples(&read_file(path)?, spec)?
    } else {
        parse_samples(spec, "inline filter")?
    };
    if impulse.len() != len {
        return Err(CliError::Usage(format!(
            "filter `{spec}` has {} samples but the signal has {len}",
            impulse.len()
        )));
    }
    log2_len(len).map_err(|source| CliError::Input {
        context: format!("filter `{spec}`"),
        source,
    })?;
    Ok(LoadedFilter {
        name: spec.to_string(),
        impulse,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn complex_literals() {
        let cases = [
            ("1", c(1.0, 0.0)),
            ("-2.5", c(-2.5, 0.0)),
            ("0.5+0.5i", c(0.5, 0.5)),
            ("0.5-0.25i", c(0.5, -0.25)),
            ("3i", c(0.0, 3.0)),
            ("-i", c(0.0, -1.0)),
            ("i", c(0.0, 1.0)),
            ("1+i", c(1.0, 1.0)),
            ("1e-3-2e+1i", c(1e-3, -20.0)),
            ("-1E-2j", c(0.0, -1e-2)),
            ("  4 ", c(4.0, 0.0)),
        ];
        for (text, want) in cases {
            assert_eq!(parse_complex(text), Some(want), "{text}");
        }
        for bad in ["", "abc", "1+2", "nan", "inf", "1+xi", "1..0"] {
            assert_eq!(parse_complex(bad), None, "{bad}");
        }
    }

    #[test]
    fn lines_commas_and_comments() {
        let text = "# header\n1, 0\n0.5+0.5i # trailing\n\n-1,\n";
        let got = parse_samples(text, "t").unwrap();
        assert_eq!(
            got,
            vec![c(1.0, 0.0), c(0.0, 0.0), c(0.5, 0.5), c(-1.0, 0.0)]
        );
    }

    #[test]
    fn malformed_line_is_reported() {
        let err = parse_samples("1\n2\nfoo\n", "f.txt").unwrap_err();
        match err {
            CliError::Malformed { line, .. } => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn named_signals() {
        assert_eq!(
            named_signal("delta4").unwrap(),
            vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]
        );
        assert_eq!(named_signal("uniform2").unwrap().len(), 2);
        assert!(named_signal("delta").is_none());
        assert!(named_signal("ramp8").is_none());
    }

    #[test]
    fn normalization_is_opt_in() {
        let v = vec![c(3.0, 0.0), c(4.0, 0.0)];
        assert!(matches!(
            signal_from_samples("v", v.clone(), false),
            Err(CliError::Usage(_))
        ));
        let loaded = signal_from_samples("v", v, true).unwrap();
        assert_eq!(loaded.original_norm, Some(5.0));
        assert_eq!(loaded.signal.samples(), &[c(0.6, 0.0), c(0.8, 0.0)]);
        let zero = vec![c(0.0, 0.0); 4];
        assert!(signal_from_samples("z", zero, true).is_err());
        let six = vec![c(1.0, 0.0); 6];
        assert!(matches!(
            signal_from_samples("s", six, true),
            Err(CliError::Input { .. })
        ));
    }

    #[test]
    fn filter_specs() {
        let f = load_filter("example1", 4).unwrap();
        assert_eq!(
            f.impulse,
            vec![c(0.5, 0.0), c(0.5, 0.0), c(0.0, 0.0), c(0.0, 0.0)]
        );
        assert!(load_filter("lowpass12", 4).is_err());
        assert_eq!(load_filter("lowpass12", 8).unwrap().impulse.len(), 8);
        let inline = load_filter("1, 0.5-1i", 2).unwrap();
        assert_eq!(inline.impulse, vec![c(1.0, 0.0), c(0.5, -1.0)]);
        assert!(inline.real_impulse().is_err());
        assert!(load_filter("1,2,3", 4).is_err());
    }
}
