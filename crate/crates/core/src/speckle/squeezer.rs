//! Standalone Wigner sampler of a single two-mode squeezer.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use super::VACUUM_LEVEL;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SqueezerStats {
    pub shots: usize,
    pub mean_signal: f64,
    pub mean_idler: f64,
    /// Standard error of `mean_signal`.
    pub sigma_mean: f64,
    pub var_signal: f64,
    pub nrf: f64,
}

/// Samples `b_s = cosh g a_s + sinh g a_i*`, `b_i = cosh g a_i + sinh g a_s*`
/// from vacuum inputs and returns ordering-corrected photon statistics.
pub fn two_mode_squeezer(g: f64, shots: usize, seed: u64) -> SqueezerStats {
    let (c, s) = (g.cosh(), g.sinh());
    let sigma = 0.5;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || {
        let re: f64 = StandardNormal.sample(&mut rng);
        let im: f64 = StandardNormal.sample(&mut rng);
        num_complex::Complex64::new(sigma * re, sigma * im)
    };
    let (mut ss, mut si, mut sss, mut sd2, mut sd) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for _ in 0..shots {
        let (a_s, a_i) = (draw(), draw());
        let is = (c * a_s + s * a_i.conj()).norm_sqr();
        let ii = (c * a_i + s * a_s.conj()).norm_sqr();
        ss += is;
        si += ii;
        sss += is * is;
        sd += is - ii;
        sd2 += (is - ii) * (is - ii);
    }
    let n = shots as f64;
    let (ms, mi) = (ss / n, si / n);
    let var_ws = sss / n - ms * ms;
    let var_d = sd2 / n - (sd / n) * (sd / n) - 0.5;
    let (ns, ni) = (ms - VACUUM_LEVEL, mi - VACUUM_LEVEL);
    SqueezerStats {
        shots,
        mean_signal: ns,
        mean_idler: ni,
        sigma_mean: (var_ws / n).sqrt(),
        var_signal: var_ws - 0.25,
        nrf: var_d / (ns + ni),
    }
}
