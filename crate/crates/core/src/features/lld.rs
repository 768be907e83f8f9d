//! Per-frame low-level descriptors: ZCR, RMS energy, autocorrelation pitch,
//! HNR, and the regression delta used for the delta contours.

use crate::signal::SignalError;

/// Zero-crossing rate per sample step: strict sign changes (zero counts as
/// positive) divided by `len - 1`.
pub fn zcr(frame: &[f64]) -> Result<f64, SignalError> {
    if frame.len() < 2 {
        return Err(SignalError::TooShort {
            got: frame.len(),
            need: 2,
        });
    }
    let positive = |x: f64| x >= 0.0;
    let changes = frame
        .windows(2)
        .filter(|w| positive(w[0]) != positive(w[1]))
        .count();
    Ok(changes as f64 / (frame.len() - 1) as f64)
}

/// Root mean square of the frame.
pub fn rms_energy(frame: &[f64]) -> f64 {
    if frame.is_empty() {
        return 0.0;
    }
    (frame.iter().map(|x| x * x).sum::<f64>() / frame.len() as f64).sqrt()
}

/// Peak of the normalized autocorrelation `r(tau) = sum x[n] x[n+tau] / sum x[n]^2`
/// over lags corresponding to `min_hz..=max_hz`. Returns `(lag, r)`.
fn autocorr_peak(
    frame: &[f64],
    rate_hz: u32,
    min_hz: f64,
    max_hz: f64,
) -> Result<(usize, f64), SignalError> {
    let need = (rate_hz as f64 / min_hz).floor() as usize;
    if frame.len() < need {
        return Err(SignalError::TooShort {
            got: frame.len(),
            need,
        });
    }
    let lag_min = (rate_hz as f64 / max_hz).ceil() as usize;
    let lag_max = ((rate_hz as f64 / min_hz).floor() as usize).min(frame.len() - 1);
    let energy: f64 = frame.iter().map(|x| x * x).sum();
    if energy <= 1e-300 {
        return Ok((lag_min, 0.0));
    }
    let mut best = (lag_min, f64::NEG_INFINITY);
    for tau in lag_min..=lag_max {
        let mut acc = 0.0;
        for n in 0..frame.len() - tau {
            acc += frame[n] * frame[n + tau];
        }
        let r = acc / energy;
        if r > best.1 {
            best = (tau, r);
        }
    }
    Ok(best)
}

pub const VOICING_THRESHOLD: f64 = 0.3;
pub const PITCH_MIN_HZ: f64 = 50.0;
pub const PITCH_MAX_HZ: f64 = 500.0;
pub const PITCH_NORM_HZ: f64 = 500.0;
pub const HNR_FLOOR_DB: f64 = -20.0;
pub const HNR_CEIL_DB: f64 = 40.0;

/// Pitch of an un-windowed frame, normalized to 500 Hz and clamped to [0, 1].
/// Frames whose autocorrelation peak is below the voicing threshold return 0.
pub fn pitch_f0(frame: &[f64], rate_hz: u32) -> Result<f64, SignalError> {
    let (lag, r) = autocorr_peak(frame, rate_hz, PITCH_MIN_HZ, PITCH_MAX_HZ)?;
    if r < VOICING_THRESHOLD {
        return Ok(0.0);
    }
    let f0 = rate_hz as f64 / lag as f64;
    Ok((f0 / PITCH_NORM_HZ).clamp(0.0, 1.0))
}

/// Harmonics-to-noise ratio in dB from the voiced-range autocorrelation peak,
/// clamped to [-20, 40]; unvoiced frames return the clamp floor.
pub fn hnr(frame: &[f64], rate_hz: u32) -> Result<f64, SignalError> {
    let (_, r) = autocorr_peak(frame, rate_hz, PITCH_MIN_HZ, PITCH_MAX_HZ)?;
    Ok(hnr_from_peak(r))
}

/// `10 * log10(r / (1 - r))` clamped to [-20, 40]; below the voicing
/// threshold returns the floor.
pub fn hnr_from_peak(r: f64) -> f64 {
    if r < VOICING_THRESHOLD {
        return HNR_FLOOR_DB;
    }
    if r >= 1.0 {
        return HNR_CEIL_DB;
    }
    (10.0 * (r / (1.0 - r)).log10()).clamp(HNR_FLOOR_DB, HNR_CEIL_DB)
}

/// Regression delta with half-window 2 and replicated edges:
/// `d[t] = (1*(c[t+1]-c[t-1]) + 2*(c[t+2]-c[t-2])) / 10`.
pub fn delta_contour(contour: &[f64]) -> Vec<f64> {
    let n = contour.len();
    if n == 0 {
        return Vec::new();
    }
    let at = |i: isize| -> f64 {
        let i = i.clamp(0, n as isize - 1);
        contour[i as usize]
    };
    (0..n as isize)
        .map(|t| {
            ((at(t + 1) - at(t - 1)) + 2.0 * (at(t + 2) - at(t - 2))) / 10.0
        })
        .collect()
}
