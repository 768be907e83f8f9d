//! Iterative radix-2 FFT on split real/imaginary buffers.

use std::f64::consts::PI;

/// In-place complex FFT. `re` and `im` must have the same power-of-two length.
///
/// Twiddle factors are computed with direct `cos`/`sin` calls per butterfly
/// group, so results are deterministic and do not accumulate recurrence error.
pub fn fft_in_place(re: &mut [f64], im: &mut [f64]) {
    let n = re.len();
    assert_eq!(n, im.len());
    assert!(n.is_power_of_two(), "fft length must be a power of two");
    if n <= 1 {
        return;
    }

    // bit-reversal permutation
    let bits = n.trailing_zeros();
    for i in 0..n {
        let j = i.reverse_bits() >> (usize::BITS - bits);
        if j > i {
            re.swap(i, j);
            im.swap(i, j);
        }
    }

    let mut len = 2;
    while len <= n {
        let half = len / 2;
        for start in (0..n).step_by(len) {
            for k in 0..half {
                let ang = -2.0 * PI * k as f64 / len as f64;
                let (wr, wi) = (ang.cos(), ang.sin());
                let i = start + k;
                let j = i + half;
                let tr = wr * re[j] - wi * im[j];
                let ti = wr * im[j] + wi * re[j];
                re[j] = re[i] - tr;
                im[j] = im[i] - ti;
                re[i] += tr;
                im[i] += ti;
            }
        }
        len <<= 1;
    }
}
