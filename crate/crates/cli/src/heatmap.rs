//! Binary PPM rendering of a complex matrix, one pixel per entry.
//!
//! Hue follows the complex argument linearly: arg −π maps to hue 0° (red)
//! and arg +π to `HUE_SPAN`. Brightness ramps linearly from black at zero
//! amplitude to full at `LUMA_RAMP`. Saturation is a Gaussian in the
//! distance from unit amplitude with width `SATURATION_WIDTH`, so entries of
//! modulus one show pure colour and intermediate ones fade toward white.

use std::f64::consts::PI;
use std::io::Write;
use std::path::Path;

use fib_core::C64;
use fusion_basis::UnitaryMatrix;

pub const HUE_SPAN: f64 = 300.0;
pub const LUMA_RAMP: f64 = 0.25;
pub const SATURATION_WIDTH: f64 = 0.3;

fn hsv(h: f64, s: f64, v: f64) -> [u8; 3] {
    let c = v * s;
    let hp = (h / 60.0).rem_euclid(6.0);
    let x = c * (1.0 - (hp % 2.0 - 1.0).abs());
    let (r, g, b) = match hp as u32 {
        0 => (c, x, 0.0),
        1 => (x, c, 0.0),
        2 => (0.0, c, x),
        3 => (0.0, x, c),
        4 => (x, 0.0, c),
        _ => (c, 0.0, x),
    };
    let m = v - c;
    let q = |t: f64| ((t + m) * 255.0).round().clamp(0.0, 255.0) as u8;
    [q(r), q(g), q(b)]
}

pub fn pixel(z: C64) -> [u8; 3] {
    let a = z.norm();
    let hue = (z.arg() + PI) / (2.0 * PI) * HUE_SPAN;
    let value = (a / LUMA_RAMP).min(1.0);
    let sat = (-(a - 1.0).powi(2) / (2.0 * SATURATION_WIDTH * SATURATION_WIDTH)).exp();
    hsv(hue, sat, value)
}

pub fn encode(m: &UnitaryMatrix) -> Vec<u8> {
    let d = m.dim();
    let mut out = format!("P6\n{d} {d}\n255\n").into_bytes();
    for z in m.data() {
        out.extend_from_slice(&pixel(*z));
    }
    out
}

pub fn emit_heatmap(m: &UnitaryMatrix, path: &Path) -> std::io::Result<()> {
    if m.dim() == 0 {
        return Err(std::io::Error::new(std::io::ErrorKind::InvalidInput, "empty matrix"));
    }
    let mut f = std::fs::File::create(path)?;
    f.write_all(&encode(m))
}
