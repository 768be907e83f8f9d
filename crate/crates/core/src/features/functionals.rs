//! The 12 contour functionals applied to every LLD and delta-LLD contour.

use crate::signal::SignalError;

/// Variance below which skewness and kurtosis are defined as 0.
pub const VARIANCE_FLOOR: f64 = 1e-12;

/// The 12 functionals, in the frozen output order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FunctionalSet {
    pub mean: f64,
    pub stddev: f64,
    pub kurtosis: f64,
    pub skewness: f64,
    pub min: f64,
    pub max: f64,
    pub rel_pos_max: f64,
    pub rel_pos_min: f64,
    pub range: f64,
    pub linreg_offset: f64,
    pub linreg_slope: f64,
    pub linreg_mse: f64,
}

impl FunctionalSet {
    pub const NAMES: [&'static str; 12] = [
        "mean",
        "stddev",
        "kurtosis",
        "skewness",
        "min",
        "max",
        "rel_pos_max",
        "rel_pos_min",
        "range",
        "linreg_offset",
        "linreg_slope",
        "linreg_mse",
    ];

    pub fn as_array(&self) -> [f64; 12] {
        [
            self.mean,
            self.stddev,
            self.kurtosis,
            self.skewness,
            self.min,
            self.max,
            self.rel_pos_max,
            self.rel_pos_min,
            self.range,
            self.linreg_offset,
            self.linreg_slope,
            self.linreg_mse,
        ]
    }
}

/// Compute the 12 functionals of a contour.
///
/// Moments are population moments (divide by N); kurtosis is excess kurtosis;
/// relative positions use the first occurrence on ties and are normalized by
/// `N - 1`; the regression fits `c[t] ~ offset + slope * t` by least squares
/// with `t = 0..N-1` and reports the mean squared residual.
pub fn functionals(contour: &[f64]) -> Result<FunctionalSet, SignalError> {
    let n = contour.len();
    if n < 2 {
        return Err(SignalError::TooShort { got: n, need: 2 });
    }
    let nf = n as f64;
    let mean = contour.iter().sum::<f64>() / nf;

    let (mut m2, mut m3, mut m4) = (0.0, 0.0, 0.0);
    for &x in contour {
        let d = x - mean;
        let d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    m2 /= nf;
    m3 /= nf;
    m4 /= nf;
    let stddev = m2.sqrt();
    let (skewness, kurtosis) = if m2 < VARIANCE_FLOOR {
        (0.0, 0.0)
    } else {
        (m3 / m2.powf(1.5), m4 / (m2 * m2) - 3.0)
    };

    let mut min = contour[0];
    let mut max = contour[0];
    let mut arg_min = 0usize;
    let mut arg_max = 0usize;
    for (i, &x) in contour.iter().enumerate() {
        if x > max {
            max = x;
            arg_max = i;
        }
        if x < min {
            min = x;
            arg_min = i;
        }
    }
    let denom = (n - 1) as f64;
    let rel_pos_max = arg_max as f64 / denom;
    let rel_pos_min = arg_min as f64 / denom;

    // least squares on t = 0..n-1: slope = sum (t - t_mean)(c - c_mean) / sum (t - t_mean)^2
    let t_mean = denom / 2.0;
    let mut s_tt = 0.0;
    let mut s_tc = 0.0;
    for (t, &x) in contour.iter().enumerate() {
        let dt = t as f64 - t_mean;
        s_tt += dt * dt;
        s_tc += dt * (x - mean);
    }
    let linreg_slope = s_tc / s_tt;
    let linreg_offset = mean - linreg_slope * t_mean;
    let mut linreg_mse = 0.0;
    for (t, &x) in contour.iter().enumerate() {
        let r = x - (linreg_offset + linreg_slope * t as f64);
        linreg_mse += r * r;
    }
    linreg_mse /= nf;

    Ok(FunctionalSet {
        mean,
        stddev,
        kurtosis,
        skewness,
        min,
        max,
        rel_pos_max,
        rel_pos_min,
        range: max - min,
        linreg_offset,
        linreg_slope,
        linreg_mse,
    })
}


#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn constant_contour() {
        let f = functionals(&[4.2; 10]).unwrap();
        assert_eq!(f.mean, 4.2);
        assert_eq!(f.stddev, 0.0);
        assert_eq!(f.skewness, 0.0);
        assert_eq!(f.kurtosis, 0.0);
        assert_eq!(f.min, 4.2);
        assert_eq!(f.max, 4.2);
        assert_eq!(f.range, 0.0);
        assert_eq!(f.rel_pos_max, 0.0);
        assert_eq!(f.rel_pos_min, 0.0);
        assert!((f.linreg_offset - 4.2).abs() < 1e-12);
        assert!(f.linreg_slope.abs() < 1e-12);
        assert!(f.linreg_mse.abs() < 1e-20);
    }

    #[test]
    fn exact_ramp() {
        // c[t] = 2t for N = 5
        let c: Vec<f64> = (0..5).map(|t| 2.0 * t as f64).collect();
        let f = functionals(&c).unwrap();
        assert!((f.linreg_slope - 2.0).abs() < 1e-12);
        assert!(f.linreg_offset.abs() < 1e-12);
        assert!(f.linreg_mse.abs() < 1e-20);
        assert_eq!(f.min, 0.0);
        assert_eq!(f.max, 8.0);
        assert_eq!(f.range, 8.0);
        assert_eq!(f.rel_pos_max, 1.0);
        assert_eq!(f.rel_pos_min, 0.0);
        assert_eq!(f.mean, 4.0);
    }

    #[test]
    fn matches_bruteforce_reference() {
        let got = functionals(&[1.0, 2.0, 4.0, 8.0]).unwrap().as_array();
        let want = oracle::reference(&[1.0, 2.0, 4.0, 8.0]);
        for (g, w) in got.iter().zip(want.iter()) {
            assert!((g - w).abs() < 1e-9, "{g} vs {w}");
        }
    }

    #[test]
    fn matches_bruteforce_on_random_contours() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        for _ in 0..1000 {
            let len = rng.random_range(2..200usize);
            let c: Vec<f64> = (0..len).map(|_| rng.random_range(-1.0..1.0)).collect();
            let got = functionals(&c).unwrap().as_array();
            let want = oracle::reference(&c);
            for (g, w) in got.iter().zip(want.iter()) {
                assert!((g - w).abs() < 1e-9, "len {len}: {g} vs {w}");
            }
        }
    }

    #[test]
    fn ties_take_first_occurrence() {
        let f = functionals(&[1.0, 3.0, 3.0, 1.0]).unwrap();
        assert!((f.rel_pos_max - 1.0 / 3.0).abs() < 1e-12);
        assert_eq!(f.rel_pos_min, 0.0);
    }

    #[test]
    fn too_short_rejected() {
        assert!(matches!(
            functionals(&[1.0]),
            Err(SignalError::TooShort { .. })
        ));
    }
}
