//! Little-endian binary grid format:
//!
//! ```text
//! magic "TWBG" | u32 version = 1 | u8 domain (0 space-time, 1 Fourier)
//! u8 axis count | per axis: u8 kind (0 x, 1 y, 2 t), u32 n, f64 step
//! N × (f64 re, f64 im) in row-major order (last axis fastest)
//! ```

use std::path::Path;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fourier::{Axis, AxisKind, Domain, FieldGrid, GridSpec};

pub const GRID_MAGIC: &[u8; 4] = b"TWBG";
const VERSION: u32 = 1;

fn kind_code(k: AxisKind) -> u8 {
    match k {
        AxisKind::X => 0,
        AxisKind::Y => 1,
        AxisKind::T => 2,
    }
}

pub fn encode_grid(grid: &FieldGrid) -> Vec<u8> {
    let mut b = Vec::with_capacity(16 + grid.data.len() * 16);
    b.extend_from_slice(GRID_MAGIC);
    b.extend_from_slice(&VERSION.to_le_bytes());
    b.push(matches!(grid.domain, Domain::Fourier) as u8);
    b.push(grid.spec.axes.len() as u8);
    for a in &grid.spec.axes {
        b.push(kind_code(a.kind));
        b.extend_from_slice(&(a.n as u32).to_le_bytes());
        b.extend_from_slice(&a.step.to_le_bytes());
    }
    for v in &grid.data {
        b.extend_from_slice(&v.re.to_le_bytes());
        b.extend_from_slice(&v.im.to_le_bytes());
    }
    b
}

pub fn decode_grid(bytes: &[u8]) -> Result<FieldGrid> {
    let bad = |m: &str| Error::Domain(format!("binary grid: {m}"));
    let mut pos = 0usize;
    let mut take = |n: usize| -> Result<&[u8]> {
        let s = bytes.get(pos..pos + n).ok_or_else(|| bad("truncated"))?;
        pos += n;
        Ok(s)
    };
    if take(4)? != GRID_MAGIC {
        return Err(bad("bad magic"));
    }
    let version = u32::from_le_bytes(take(4)?.try_into().unwrap());
    if version != VERSION {
        return Err(bad("unsupported version"));
    }
    let domain = match take(1)?[0] {
        0 => Domain::SpaceTime,
        1 => Domain::Fourier,
        _ => return Err(bad("bad domain")),
    };
    let naxes = take(1)?[0] as usize;
    let mut axes = Vec::with_capacity(naxes);
    for _ in 0..naxes {
        let kind = match take(1)?[0] {
            0 => AxisKind::X,
            1 => AxisKind::Y,
            2 => AxisKind::T,
            _ => return Err(bad("bad axis kind")),
        };
        let n = u32::from_le_bytes(take(4)?.try_into().unwrap()) as usize;
        let step = f64::from_le_bytes(take(8)?.try_into().unwrap());
        axes.push(Axis::new(kind, n, step)?);
    }
    let spec = GridSpec::new(axes)?;
    let mut data = Vec::with_capacity(spec.len());
    for _ in 0..spec.len() {
        let re = f64::from_le_bytes(take(8)?.try_into().unwrap());
        let im = f64::from_le_bytes(take(8)?.try_into().unwrap());
        data.push(Complex64::new(re, im));
    }
    if pos != bytes.len() {
        return Err(bad("trailing bytes"));
    }
    Ok(FieldGrid { spec, domain, data })
}

pub fn write_grid(path: &Path, grid: &FieldGrid) -> Result<()> {
    super::write_file(path, &encode_grid(grid))
}

pub fn read_grid(path: &Path) -> Result<FieldGrid> {
    let b = std::fs::read(path).map_err(|e| Error::io(path, e))?;
    decode_grid(&b)
}
