use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

/// Fourier coordinate `w = (q_x, q_y, Ω)`: rad/µm, rad/µm, rad/fs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct FourierMode {
    pub qx: f64,
    pub qy: f64,
    pub omega: f64,
}

/// Space-time coordinate `ξ = (x, y, t)`: µm, µm, fs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SpaceTimePoint {
    pub x: f64,
    pub y: f64,
    pub t: f64,
}

impl FourierMode {
    pub const ZERO: FourierMode = FourierMode {
        qx: 0.0,
        qy: 0.0,
        omega: 0.0,
    };

    pub fn new(qx: f64, qy: f64, omega: f64) -> Self {
        FourierMode { qx, qy, omega }
    }

    pub fn temporal(omega: f64) -> Self {
        FourierMode::new(0.0, 0.0, omega)
    }

    pub fn q_squared(&self) -> f64 {
        self.qx * self.qx + self.qy * self.qy
    }

    /// `w·ξ = x q_x + y q_y − Ω t`.
    pub fn dot(&self, xi: &SpaceTimePoint) -> f64 {
        xi.x * self.qx + xi.y * self.qy - self.omega * xi.t
    }
}

impl SpaceTimePoint {
    pub const ORIGIN: SpaceTimePoint = SpaceTimePoint { x: 0.0, y: 0.0, t: 0.0 };

    pub fn new(x: f64, y: f64, t: f64) -> Self {
        SpaceTimePoint { x, y, t }
    }

    pub fn temporal(t: f64) -> Self {
        SpaceTimePoint::new(0.0, 0.0, t)
    }
}

impl Add for FourierMode {
    type Output = FourierMode;
    fn add(self, o: FourierMode) -> FourierMode {
        FourierMode::new(self.qx + o.qx, self.qy + o.qy, self.omega + o.omega)
    }
}

impl Sub for FourierMode {
    type Output = FourierMode;
    fn sub(self, o: FourierMode) -> FourierMode {
        FourierMode::new(self.qx - o.qx, self.qy - o.qy, self.omega - o.omega)
    }
}

impl Neg for FourierMode {
    type Output = FourierMode;
    fn neg(self) -> FourierMode {
        FourierMode::new(-self.qx, -self.qy, -self.omega)
    }
}

impl Add for SpaceTimePoint {
    type Output = SpaceTimePoint;
    fn add(self, o: SpaceTimePoint) -> SpaceTimePoint {
        SpaceTimePoint::new(self.x + o.x, self.y + o.y, self.t + o.t)
    }
}

impl Sub for SpaceTimePoint {
    type Output = SpaceTimePoint;
    fn sub(self, o: SpaceTimePoint) -> SpaceTimePoint {
        SpaceTimePoint::new(self.x - o.x, self.y - o.y, self.t - o.t)
    }
}
