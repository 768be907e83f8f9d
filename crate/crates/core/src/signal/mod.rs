//! Audio ingestion, framing, windowing, and spectrum computation.
//!
//! Everything in this module is a pure function of its inputs: no dithering,
//! no global state, bitwise-identical output for identical input bytes.

pub mod fft;
mod wav;

pub use wav::{read_wav, write_wav_i16};

use thiserror::Error;

/// Canonical sample rate; `read_wav` resamples everything to this.
pub const TARGET_SAMPLE_RATE: u32 = 16_000;

#[derive(Debug, Error)]
pub enum SignalError {
    #[error("unsupported wav format: {0}")]
    UnsupportedFormat(String),
    #[error("corrupt wav header: {0}")]
    CorruptHeader(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("signal too short: {got} samples, need at least {need}")]
    TooShort { got: usize, need: usize },
    #[error("bad fft size {size} (frame length {frame_len}): must be a power of two >= frame length")]
    BadFftSize { size: usize, frame_len: usize },
}

/// Mono PCM audio at a fixed sample rate, samples in [-1, 1].
#[derive(Debug, Clone, PartialEq)]
pub struct Waveform {
    samples: Vec<f64>,
    sample_rate_hz: u32,
}

impl Waveform {
    pub fn new(samples: Vec<f64>, sample_rate_hz: u32) -> Self {
        assert!(sample_rate_hz > 0, "sample rate must be positive");
        Waveform {
            samples,
            sample_rate_hz,
        }
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn sample_rate_hz(&self) -> u32 {
        self.sample_rate_hz
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn duration_secs(&self) -> f64 {
        self.samples.len() as f64 / self.sample_rate_hz as f64
    }

    /// Linear-interpolation resample. Output length is
    /// `round(len * target / source)`; positions past the last input sample
    /// clamp to it.
    pub fn resampled_to(&self, target_rate_hz: u32) -> Waveform {
        assert!(target_rate_hz > 0);
        if target_rate_hz == self.sample_rate_hz || self.samples.is_empty() {
            return Waveform::new(self.samples.clone(), target_rate_hz);
        }
        let ratio = self.sample_rate_hz as f64 / target_rate_hz as f64;
        let n_out =
            (self.samples.len() as f64 * target_rate_hz as f64 / self.sample_rate_hz as f64)
                .round() as usize;
        let n_out = n_out.max(1);
        let last = self.samples.len() - 1;
        let mut out = Vec::with_capacity(n_out);
        for i in 0..n_out {
            let pos = i as f64 * ratio;
            let i0 = pos.floor() as usize;
            if i0 >= last {
                out.push(self.samples[last]);
            } else {
                let frac = pos - i0 as f64;
                out.push(self.samples[i0] * (1.0 - frac) + self.samples[i0 + 1] * frac);
            }
        }
        Waveform::new(out, target_rate_hz)
    }
}

/// Analysis window applied to each frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Window {
    Hamming,
    Povey,
    None,
}

impl Window {
    fn weight(self, n: usize, len: usize) -> f64 {
        if len < 2 {
            return 1.0;
        }
        let x = 2.0 * std::f64::consts::PI * n as f64 / (len - 1) as f64;
        match self {
            Window::Hamming => 0.54 - 0.46 * x.cos(),
            Window::Povey => (0.5 - 0.5 * x.cos()).powf(0.85),
            Window::None => 1.0,
        }
    }
}

/// Fixed-length overlapping frames cut from a waveform.
#[derive(Debug, Clone, PartialEq)]
pub struct FrameSet {
    pub frames: Vec<Vec<f64>>,
    pub frame_len_samples: usize,
    pub hop_samples: usize,
    pub preemphasis: f64,
    pub window: Window,
}

/// Frame count for a signal of `num_samples`: `1 + (num_samples - frame_len) / hop`
/// when the signal is at least one frame long, else 0.
pub fn frame_count(num_samples: usize, frame_len: usize, hop: usize) -> usize {
    if num_samples < frame_len {
        0
    } else {
        1 + (num_samples - frame_len) / hop
    }
}

/// Cut `w` into frames, applying per-frame pre-emphasis then the window.
///
/// Pre-emphasis is `y[t] = x[t] - preemph * x[t-1]` within the frame, with
/// `y[0] = x[0] * (1 - preemph)`.
pub fn frame_signal(
    w: &Waveform,
    frame_len: usize,
    hop: usize,
    preemph: f64,
    window: Window,
) -> Result<FrameSet, SignalError> {
    assert!(frame_len > 0, "frame_len must be positive");
    assert!(hop > 0 && hop <= frame_len, "hop must be in (0, frame_len]");
    assert!(
        (0.0..1.0).contains(&preemph),
        "preemphasis must be in [0, 1)"
    );
    let samples = w.samples();
    if samples.len() < frame_len {
        return Err(SignalError::TooShort {
            got: samples.len(),
            need: frame_len,
        });
    }
    let n_frames = frame_count(samples.len(), frame_len, hop);
    let mut frames = Vec::with_capacity(n_frames);
    for f in 0..n_frames {
        let start = f * hop;
        let src = &samples[start..start + frame_len];
        let mut frame = Vec::with_capacity(frame_len);
        for t in 0..frame_len {
            let prev = if t == 0 { src[0] } else { src[t - 1] };
            let y = src[t] - preemph * prev;
            frame.push(y * window.weight(t, frame_len));
        }
        frames.push(frame);
    }
    Ok(FrameSet {
        frames,
        frame_len_samples: frame_len,
        hop_samples: hop,
        preemphasis: preemph,
        window,
    })
}

/// One-sided power spectrum: `bins[k] = |DFT_k|^2` for `k = 0..=fft_size/2`.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSpectrum {
    pub bins: Vec<f64>,
    pub fft_size: usize,
}

/// Compute the power spectrum of a frame zero-padded to `fft_size`.
pub fn power_spectrum(frame: &[f64], fft_size: usize) -> Result<PowerSpectrum, SignalError> {
    if !fft_size.is_power_of_two() || fft_size < frame.len() {
        return Err(SignalError::BadFftSize {
            size: fft_size,
            frame_len: frame.len(),
        });
    }
    let mut re = vec![0.0; fft_size];
    let mut im = vec![0.0; fft_size];
    re[..frame.len()].copy_from_slice(frame);
    fft::fft_in_place(&mut re, &mut im);
    let bins = (0..=fft_size / 2)
        .map(|k| re[k] * re[k] + im[k] * im[k])
        .collect();
    Ok(PowerSpectrum { bins, fft_size })
}
