//! HTK-scale mel filterbank and the orthonormal DCT-II used for cepstra.

use crate::signal::PowerSpectrum;

/// `mel = 1127 * ln(1 + hz / 700)` (HTK scale).
pub fn hz_to_mel(hz: f64) -> f64 {
    1127.0 * (1.0 + hz / 700.0).ln()
}

pub fn mel_to_hz(mel: f64) -> f64 {
    700.0 * ((mel / 1127.0).exp() - 1.0)
}

/// Triangular mel filterbank with weights interpolated on the mel axis.
#[derive(Debug, Clone)]
pub struct MelFilterbank {
    /// per filter: (first FFT bin, weights for consecutive bins)
    filters: Vec<(usize, Vec<f64>)>,
    /// per filter: (left, right) Hz support edges
    edges_hz: Vec<(f64, f64)>,
}

impl MelFilterbank {
    pub fn new(num_bins: usize, fft_size: usize, sample_rate: u32, low_hz: f64, high_hz: f64) -> Self {
        assert!(num_bins >= 1);
        assert!(low_hz >= 0.0 && high_hz > low_hz);
        assert!(high_hz <= sample_rate as f64 / 2.0);
        let mel_low = hz_to_mel(low_hz);
        let mel_high = hz_to_mel(high_hz);
        let delta = (mel_high - mel_low) / (num_bins + 1) as f64;
        let bin_hz = sample_rate as f64 / fft_size as f64;
        let n_fft_bins = fft_size / 2 + 1;

        let mut filters = Vec::with_capacity(num_bins);
        let mut edges_hz = Vec::with_capacity(num_bins);
        for f in 0..num_bins {
            let left = mel_low + f as f64 * delta;
            let center = left + delta;
            let right = center + delta;
            let mut start = None;
            let mut weights = Vec::new();
            for k in 0..n_fft_bins {
                let mel = hz_to_mel(k as f64 * bin_hz);
                let w = if mel <= left || mel >= right {
                    0.0
                } else if mel <= center {
                    (mel - left) / delta
                } else {
                    (right - mel) / delta
                };
                if w > 0.0 {
                    if start.is_none() {
                        start = Some(k);
                    }
                    weights.push(w);
                } else if start.is_some() {
                    break;
                }
            }
            filters.push((start.unwrap_or(0), weights));
            edges_hz.push((mel_to_hz(left), mel_to_hz(right)));
        }
        MelFilterbank { filters, edges_hz }
    }

    pub fn num_bins(&self) -> usize {
        self.filters.len()
    }

    /// Hz support (left edge, right edge) of filter `i`.
    pub fn band_edges_hz(&self, i: usize) -> (f64, f64) {
        self.edges_hz[i]
    }

    /// Weight of filter `i` on FFT bin `k` (0 outside the triangle).
    pub fn weight(&self, i: usize, k: usize) -> f64 {
        let (start, w) = &self.filters[i];
        if k < *start || k >= *start + w.len() {
            0.0
        } else {
            w[k - *start]
        }
    }

    /// Per-filter energies of a power spectrum.
    pub fn apply(&self, ps: &PowerSpectrum) -> Vec<f64> {
        self.filters
            .iter()
            .map(|(start, w)| {
                w.iter()
                    .enumerate()
                    .map(|(j, wk)| wk * ps.bins[start + j])
                    .sum()
            })
            .collect()
    }
}

/// Orthonormal DCT-II basis: `out[k] = a_k * sum_n x[n] cos(pi k (n + 0.5) / n_in)`
/// with `a_0 = sqrt(1/n_in)` and `a_k = sqrt(2/n_in)` otherwise.
#[derive(Debug, Clone)]
pub struct DctBasis {
    rows: Vec<Vec<f64>>,
}

impl DctBasis {
    pub fn new(n_out: usize, n_in: usize) -> Self {
        assert!(n_out <= n_in);
        let mut rows = Vec::with_capacity(n_out);
        for k in 0..n_out {
            let scale = if k == 0 {
                (1.0 / n_in as f64).sqrt()
            } else {
                (2.0 / n_in as f64).sqrt()
            };
            rows.push(
                (0..n_in)
                    .map(|n| {
                        scale
                            * (std::f64::consts::PI * k as f64 * (n as f64 + 0.5) / n_in as f64)
                                .cos()
                    })
                    .collect(),
            );
        }
        DctBasis { rows }
    }

    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        self.rows
            .iter()
            .map(|row| row.iter().zip(x.iter()).map(|(a, b)| a * b).sum())
            .collect()
    }
}
