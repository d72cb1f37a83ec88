use serde::{Deserialize, Serialize};

use crate::dispersion::FourierMode;
use crate::error::{Error, Result};
use crate::fourier::GridSpec;

/// Set of discrete modes summed by one detector pixel.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pixel {
    pub name: String,
    pub modes: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PixelPair {
    pub signal: Pixel,
    pub idler: Pixel,
}

fn nearest_index(n: usize, step: f64, coord: f64) -> Option<usize> {
    let i = (coord / step).round() + (n / 2) as f64;
    (i >= 0.0 && i < n as f64).then_some(i as usize)
}

impl Pixel {
    /// Rectangular bin of `2·half_width + 1` modes per active axis centred
    /// on the grid mode nearest to `center`.
    pub fn around(grid: &GridSpec, name: &str, center: &FourierMode, half_width: usize) -> Result<Pixel> {
        let centre_idx: Vec<usize> = grid
            .axes
            .iter()
            .map(|a| {
                let c = match a.kind {
                    crate::fourier::AxisKind::X => center.qx,
                    crate::fourier::AxisKind::Y => center.qy,
                    crate::fourier::AxisKind::T => center.omega,
                };
                nearest_index(a.n, a.conjugate_step(), c)
                    .ok_or_else(|| Error::EmptyPixel(format!("{name}: centre outside the grid")))
            })
            .collect::<Result<_>>()?;
        let mut modes = Vec::new();
        for flat in 0..grid.len() {
            let idx = grid.unravel(flat);
            let inside = grid
                .axes
                .iter()
                .enumerate()
                .all(|(k, _)| idx[k].abs_diff(centre_idx[k]) <= half_width);
            if inside {
                modes.push(flat);
            }
        }
        let expected = (2 * half_width + 1).pow(grid.axes.len() as u32);
        if modes.len() != expected {
            return Err(Error::EmptyPixel(format!("{name}: pixel is clipped by the grid edge")));
        }
        Ok(Pixel {
            name: name.to_string(),
            modes,
        })
    }

    /// Single-mode pixel at the grid mode nearest to `w`.
    pub fn single(grid: &GridSpec, name: &str, w: &FourierMode) -> Result<Pixel> {
        Pixel::around(grid, name, w, 0)
    }

    /// Pixel holding the conjugate (`w → −w`) of every mode.
    pub fn conjugate(&self, grid: &GridSpec, name: &str) -> Result<Pixel> {
        let mut modes = Vec::with_capacity(self.modes.len());
        for &flat in &self.modes {
            let idx = grid.unravel(flat);
            let mut out = 0usize;
            for (k, a) in grid.axes.iter().enumerate() {
                if idx[k] == 0 {
                    return Err(Error::EmptyPixel(format!(
                        "{name}: mode {flat} has no conjugate on the grid"
                    )));
                }
                out = out * a.n + (a.n - idx[k]);
            }
            modes.push(out);
        }
        modes.sort_unstable();
        Ok(Pixel {
            name: name.to_string(),
            modes,
        })
    }

    pub fn len(&self) -> usize {
        self.modes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modes.is_empty()
    }
}

impl PixelPair {
    /// Pixel at `center` and its conjugate.
    pub fn matched(grid: &GridSpec, center: &FourierMode, half_width: usize) -> Result<PixelPair> {
        let signal = Pixel::around(grid, "signal", center, half_width)?;
        let idler = signal.conjugate(grid, "idler")?;
        Ok(PixelPair { signal, idler })
    }
}
