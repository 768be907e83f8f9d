//! Minimal RIFF/WAVE reader and writer.
//!
//! Reads PCM 16-bit and IEEE float 32-bit files with 1 or 2 channels; stereo
//! is downmixed by channel average, and anything not at 16 kHz is linearly
//! resampled. The writer emits 16-bit PCM mono.

use std::fs;
use std::path::Path;

use super::{SignalError, Waveform, TARGET_SAMPLE_RATE};

const FMT_PCM: u16 = 1;
const FMT_IEEE_FLOAT: u16 = 3;

fn u16_at(bytes: &[u8], at: usize) -> Result<u16, SignalError> {
    bytes
        .get(at..at + 2)
        .map(|b| u16::from_le_bytes([b[0], b[1]]))
        .ok_or_else(|| SignalError::CorruptHeader("unexpected end of file".into()))
}

fn u32_at(bytes: &[u8], at: usize) -> Result<u32, SignalError> {
    bytes
        .get(at..at + 4)
        .map(|b| u32::from_le_bytes([b[0], b[1], b[2], b[3]]))
        .ok_or_else(|| SignalError::CorruptHeader("unexpected end of file".into()))
}

struct FmtChunk {
    format: u16,
    channels: u16,
    sample_rate: u32,
    bits_per_sample: u16,
}

/// Read a WAV file as a mono 16 kHz waveform.
pub fn read_wav(path: &Path) -> Result<Waveform, SignalError> {
    let bytes = fs::read(path)?;
    decode_wav(&bytes)
}

pub(crate) fn decode_wav(bytes: &[u8]) -> Result<Waveform, SignalError> {
    if bytes.len() < 12 || &bytes[0..4] != b"RIFF" || &bytes[8..12] != b"WAVE" {
        return Err(SignalError::CorruptHeader("missing RIFF/WAVE magic".into()));
    }

    let mut fmt: Option<FmtChunk> = None;
    let mut data: Option<&[u8]> = None;
    let mut at = 12usize;
    while at + 8 <= bytes.len() {
        let id = &bytes[at..at + 4];
        let size = u32_at(bytes, at + 4)? as usize;
        let body_start = at + 8;
        if body_start + size > bytes.len() {
            return Err(SignalError::CorruptHeader(format!(
                "chunk {:?} overruns file",
                String::from_utf8_lossy(id)
            )));
        }
        match id {
            b"fmt " => {
                if size < 16 {
                    return Err(SignalError::CorruptHeader("fmt chunk too small".into()));
                }
                fmt = Some(FmtChunk {
                    format: u16_at(bytes, body_start)?,
                    channels: u16_at(bytes, body_start + 2)?,
                    sample_rate: u32_at(bytes, body_start + 4)?,
                    bits_per_sample: u16_at(bytes, body_start + 14)?,
                });
            }
            b"data" => data = Some(&bytes[body_start..body_start + size]),
            _ => {}
        }
        // chunk bodies are word-aligned
        at = body_start + size + (size & 1);
    }

    let fmt = fmt.ok_or_else(|| SignalError::CorruptHeader("missing fmt chunk".into()))?;
    let data = data.ok_or_else(|| SignalError::CorruptHeader("missing data chunk".into()))?;

    if fmt.channels == 0 || fmt.channels > 2 {
        return Err(SignalError::UnsupportedFormat(format!(
            "{} channels",
            fmt.channels
        )));
    }
    if fmt.sample_rate == 0 {
        return Err(SignalError::CorruptHeader("zero sample rate".into()));
    }

    let channels = fmt.channels as usize;
    let interleaved: Vec<f64> = match (fmt.format, fmt.bits_per_sample) {
        (FMT_PCM, 16) => {
            if data.len() % 2 != 0 {
                return Err(SignalError::CorruptHeader("odd PCM16 data size".into()));
            }
            data.chunks_exact(2)
                .map(|b| i16::from_le_bytes([b[0], b[1]]) as f64 / 32768.0)
                .collect()
        }
        (FMT_IEEE_FLOAT, 32) => {
            if data.len() % 4 != 0 {
                return Err(SignalError::CorruptHeader("odd float32 data size".into()));
            }
            data.chunks_exact(4)
                .map(|b| {
                    let v = f32::from_le_bytes([b[0], b[1], b[2], b[3]]) as f64;
                    if v.is_finite() {
                        v.clamp(-1.0, 1.0)
                    } else {
                        0.0
                    }
                })
                .collect()
        }
        (f, b) => {
            return Err(SignalError::UnsupportedFormat(format!(
                "format tag {f}, {b} bits per sample"
            )))
        }
    };

    if interleaved.len() % channels != 0 {
        return Err(SignalError::CorruptHeader(
            "data size not a multiple of the frame size".into(),
        ));
    }

    let mono: Vec<f64> = if channels == 1 {
        interleaved
    } else {
        interleaved
            .chunks_exact(2)
            .map(|pair| (pair[0] + pair[1]) / 2.0)
            .collect()
    };

    let w = Waveform::new(mono, fmt.sample_rate);
    if fmt.sample_rate == TARGET_SAMPLE_RATE {
        Ok(w)
    } else {
        Ok(w.resampled_to(TARGET_SAMPLE_RATE))
    }
}

/// Write a mono 16-bit PCM WAV file. Samples are clamped to [-1, 1].
pub fn write_wav_i16(path: &Path, samples: &[f64], sample_rate: u32) -> Result<(), SignalError> {
    let bytes = encode_wav_i16(samples, sample_rate);
    fs::write(path, bytes)?;
    Ok(())
}

pub(crate) fn encode_wav_i16(samples: &[f64], sample_rate: u32) -> Vec<u8> {
    let data_len = samples.len() * 2;
    let mut out = Vec::with_capacity(44 + data_len);
    out.extend_from_slice(b"RIFF");
    out.extend_from_slice(&(36 + data_len as u32).to_le_bytes());
    out.extend_from_slice(b"WAVE");
    out.extend_from_slice(b"fmt ");
    out.extend_from_slice(&16u32.to_le_bytes());
    out.extend_from_slice(&FMT_PCM.to_le_bytes());
    out.extend_from_slice(&1u16.to_le_bytes()); // mono
    out.extend_from_slice(&sample_rate.to_le_bytes());
    out.extend_from_slice(&(sample_rate * 2).to_le_bytes()); // byte rate
    out.extend_from_slice(&2u16.to_le_bytes()); // block align
    out.extend_from_slice(&16u16.to_le_bytes()); // bits per sample
    out.extend_from_slice(b"data");
    out.extend_from_slice(&(data_len as u32).to_le_bytes());
    for &s in samples {
        let q = (s.clamp(-1.0, 1.0) * 32767.0).round() as i16;
        out.extend_from_slice(&q.to_le_bytes());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn stereo_wav(left: &[f64], right: &[f64], rate: u32) -> Vec<u8> {
        assert_eq!(left.len(), right.len());
        let data_len = left.len() * 4;
        let mut out = Vec::new();
        out.extend_from_slice(b"RIFF");
        out.extend_from_slice(&(36 + data_len as u32).to_le_bytes());
        out.extend_from_slice(b"WAVE");
        out.extend_from_slice(b"fmt ");
        out.extend_from_slice(&16u32.to_le_bytes());
        out.extend_from_slice(&FMT_PCM.to_le_bytes());
        out.extend_from_slice(&2u16.to_le_bytes());
        out.extend_from_slice(&rate.to_le_bytes());
        out.extend_from_slice(&(rate * 4).to_le_bytes());
        out.extend_from_slice(&4u16.to_le_bytes());
        out.extend_from_slice(&16u16.to_le_bytes());
        out.extend_from_slice(b"data");
        out.extend_from_slice(&(data_len as u32).to_le_bytes());
        for (&l, &r) in left.iter().zip(right.iter()) {
            out.extend_from_slice(&((l * 32768.0) as i16).to_le_bytes());
            out.extend_from_slice(&((r * 32768.0) as i16).to_le_bytes());
        }
        out
    }

    #[test]
    fn pcm16_roundtrip_stays_in_range() {
        let samples: Vec<f64> = (0..500)
            .map(|t| (t as f64 * 0.05).sin() * 0.8)
            .collect();
        let bytes = encode_wav_i16(&samples, 16_000);
        let w = decode_wav(&bytes).unwrap();
        assert_eq!(w.len(), 500);
        assert_eq!(w.sample_rate_hz(), 16_000);
        assert!(w.samples().iter().all(|s| s.abs() <= 1.0));
        for (a, b) in w.samples().iter().zip(samples.iter()) {
            assert!((a - b).abs() < 1e-3);
        }
    }

    #[test]
    fn stereo_opposite_channels_average_to_zero() {
        let left = vec![0.5; 256];
        let right = vec![-0.5; 256];
        let bytes = stereo_wav(&left, &right, 16_000);
        let w = decode_wav(&bytes).unwrap();
        assert_eq!(w.len(), 256);
        assert!(w.samples().iter().all(|&s| s == 0.0));
    }

    #[test]
    fn rejects_garbage_and_unsupported() {
        assert!(matches!(
            decode_wav(b"not a wav file at all............"),
            Err(SignalError::CorruptHeader(_))
        ));

        // 24-bit PCM header
        let mut bytes = encode_wav_i16(&[0.0; 4], 16_000);
        bytes[34] = 24; // bits per sample
        assert!(matches!(
            decode_wav(&bytes),
            Err(SignalError::UnsupportedFormat(_))
        ));

        // truncated data chunk
        let bytes = encode_wav_i16(&[0.0; 100], 16_000);
        assert!(matches!(
            decode_wav(&bytes[..bytes.len() - 10]),
            Err(SignalError::CorruptHeader(_))
        ));
    }

    #[test]
    fn non_16k_input_is_resampled() {
        let samples: Vec<f64> = (0..1000)
            .map(|t| (2.0 * std::f64::consts::PI * 100.0 * t as f64 / 8000.0).sin())
            .collect();
        let bytes = encode_wav_i16(&samples, 8_000);
        let w = decode_wav(&bytes).unwrap();
        assert_eq!(w.sample_rate_hz(), 16_000);
        assert_eq!(w.len(), 2000);
    }
}
