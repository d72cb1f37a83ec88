//! Generalized Sellmeier forms for the dielectric function `eps(λ) = n²(λ)`
//! with λ in micrometres.

use serde::{Deserialize, Serialize};

/// `eps(λ) = a + Σ b/(λ²−c) + Σ bλ²/(λ²−c) + Σ d·λ^p`.
///
/// The three term families cover the Eimerl/handbook form used for BBO as
/// well as the classic three-resonance Sellmeier form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SellmeierSet {
    pub a: f64,
    /// `[b, c]` pairs for `b / (λ² − c)`.
    #[serde(default)]
    pub poles: Vec<[f64; 2]>,
    /// `[b, c]` pairs for `b λ² / (λ² − c)`.
    #[serde(default)]
    pub resonances: Vec<[f64; 2]>,
    /// `[d, p]` pairs for `d λ^p`.
    #[serde(default)]
    pub powers: Vec<[f64; 2]>,
}

/// Value and first two λ-derivatives of a function.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Jet {
    pub value: f64,
    pub d1: f64,
    pub d2: f64,
}

impl SellmeierSet {
    /// BBO ordinary index, Eimerl et al. (1987) as tabulated in the Handbook
    /// of Nonlinear Optical Crystals.
    pub fn bbo_ordinary() -> Self {
        SellmeierSet {
            a: 2.7359,
            poles: vec![[0.01878, 0.01822]],
            resonances: vec![],
            powers: vec![[-0.01354, 2.0]],
        }
    }

    /// BBO extraordinary (principal) index, same source.
    pub fn bbo_extraordinary() -> Self {
        SellmeierSet {
            a: 2.3753,
            poles: vec![[0.01224, 0.01667]],
            resonances: vec![],
            powers: vec![[-0.01516, 2.0]],
        }
    }

    pub fn eps(&self, lambda_um: f64) -> f64 {
        self.eps_jet(lambda_um).value
    }

    /// `eps` together with its analytic first and second λ-derivatives.
    pub fn eps_jet(&self, l: f64) -> Jet {
        let s = l * l;
        let mut jet = Jet {
            value: self.a,
            d1: 0.0,
            d2: 0.0,
        };
        let mut add_pole = |b: f64, c: f64| {
            let den = s - c;
            jet.value += b / den;
            jet.d1 += -2.0 * b * l / (den * den);
            jet.d2 += -2.0 * b / (den * den) + 8.0 * b * s / (den * den * den);
        };
        for &[b, c] in &self.poles {
            add_pole(b, c);
        }
        // bλ²/(λ²−c) = b + bc/(λ²−c)
        for &[b, c] in &self.resonances {
            add_pole(b * c, c);
        }
        for &[b, _] in &self.resonances {
            jet.value += b;
        }
        for &[d, p] in &self.powers {
            jet.value += d * l.powf(p);
            jet.d1 += d * p * l.powf(p - 1.0);
            jet.d2 += d * p * (p - 1.0) * l.powf(p - 2.0);
        }
        jet
    }
}
