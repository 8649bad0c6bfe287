//! Riemann ζ, ζ'' and Γ on the half-plane Re s > 1.
//!
//! ζ is evaluated by Euler–Maclaurin summation: a direct sum to N, the
//! integral tail N^{1-s}/(s-1), the half-term N^{-s}/2, and Bernoulli
//! corrections B_{2k}/(2k)! · s(s+1)···(s+2k-2) · N^{-s-2k+1}.  With the
//! default configuration (N = 64, order 4) the relative error stays below
//! 1e-10 for Re s ≥ 1.05 and |Im s| ≤ 50; the term count is raised with
//! |Im s| so accuracy is uniform on taller arguments.  ζ'' uses the
//! term-wise differentiated formula rather than finite differences, which
//! keeps full accuracy near the triple pole of ζ'' at s = 1.
//!
//! No analytic continuation below Re s = 1 is provided.

use num_complex::Complex64;

use crate::{Error, Result};

/// B_2, B_4, ..., B_18.
const BERNOULLI_2K: [f64; 9] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
];

/// (2k)! for k = 1..=9.
const FACT_2K: [f64; 9] = [
    2.0,
    24.0,
    720.0,
    40320.0,
    3628800.0,
    479001600.0,
    87178291200.0,
    20922789888000.0,
    6402373705728000.0,
];

/// Euler–Maclaurin evaluation parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct ZetaEvalConfig {
    /// Direct-sum cutoff (≥ 2).
    pub terms: usize,
    /// Number of Bernoulli correction terms (≤ 8).
    pub em_order: usize,
}

impl Default for ZetaEvalConfig {
    fn default() -> Self {
        ZetaEvalConfig { terms: 64, em_order: 4 }
    }
}

impl ZetaEvalConfig {
    pub fn new(terms: usize, em_order: usize) -> Result<Self> {
        if terms < 2 {
            return Err(Error::Precondition(format!("zeta terms must be ≥ 2, got {terms}")));
        }
        if em_order > 8 {
            return Err(Error::Precondition(format!("em_order must be ≤ 8, got {em_order}")));
        }
        Ok(ZetaEvalConfig { terms, em_order })
    }

    fn effective_terms(&self, s: Complex64) -> usize {
        self.terms.max(s.im.abs() as usize + 16)
    }
}

fn check_domain(s: Complex64) -> Result<()> {
    if !(s.re > 1.0) {
        return Err(Error::Domain(format!("zeta requires Re s > 1, got Re s = {}", s.re)));
    }
    Ok(())
}

/// ζ(s) for Re s > 1.
pub fn zeta(s: Complex64, cfg: &ZetaEvalConfig) -> Result<Complex64> {
    check_domain(s)?;
    let n = cfg.effective_terms(s);
    let nf = n as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 1..n {
        acc += Complex64::new(k as f64, 0.0).powc(-s);
    }
    let n_pow = Complex64::new(nf, 0.0).powc(-s);
    acc += n_pow * nf / (s - 1.0);
    acc += 0.5 * n_pow;
    // rising factorial s(s+1)...(s+2k-2), extended two factors per order
    let mut rising = s;
    let mut n_shift = n_pow / nf; // N^{-s-2k+1} for k = 1
    for k in 1..=cfg.em_order {
        acc += BERNOULLI_2K[k - 1] / FACT_2K[k - 1] * rising * n_shift * nf * nf;
        rising *= (s + (2 * k - 1) as f64) * (s + (2 * k) as f64);
        n_shift /= nf * nf;
    }
    Ok(acc)
}

/// ζ(σ) on the real axis, σ > 1.
pub fn zeta_real(sigma: f64, cfg: &ZetaEvalConfig) -> Result<f64> {
    Ok(zeta(Complex64::new(sigma, 0.0), cfg)?.re)
}

/// ζ''(s) = Σ (log n)² n^{-s} for Re s > 1, by the term-wise differentiated
/// Euler–Maclaurin formula.
pub fn zeta_deriv2_complex(s: Complex64, cfg: &ZetaEvalConfig) -> Result<Complex64> {
    check_domain(s)?;
    let n = cfg.effective_terms(s);
    let nf = n as f64;
    let ln_n = nf.ln();
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 2..n {
        let lk = (k as f64).ln();
        acc += lk * lk * Complex64::new(k as f64, 0.0).powc(-s);
    }
    let n_pow = Complex64::new(nf, 0.0).powc(-s);
    // d²/ds² [N^{1-s}/(s-1)]
    let u = n_pow * nf;
    let sm1 = s - 1.0;
    acc += ln_n * ln_n * u / sm1 + 2.0 * ln_n * u / (sm1 * sm1) + 2.0 * u / (sm1 * sm1 * sm1);
    acc += 0.5 * ln_n * ln_n * n_pow;
    // d²/ds² of the Bernoulli terms: P(s) N^{1-s-2k} picks up
    // (P'' - 2 ln N P' + ln²N P).
    let mut n_shift = n_pow / nf;
    for k in 1..=cfg.em_order {
        let mut p = Complex64::new(1.0, 0.0);
        let mut s1 = Complex64::new(0.0, 0.0);
        let mut s2 = Complex64::new(0.0, 0.0);
        for j in 0..(2 * k - 1) {
            let f = s + j as f64;
            p *= f;
            s1 += 1.0 / f;
            s2 += 1.0 / (f * f);
        }
        let dp = p * s1;
        let ddp = p * (s1 * s1 - s2);
        acc += BERNOULLI_2K[k - 1] / FACT_2K[k - 1]
            * (ddp - 2.0 * ln_n * dp + ln_n * ln_n * p)
            * n_shift
            * nf
            * nf;
        n_shift /= nf * nf;
    }
    Ok(acc)
}

/// ζ''(σ) for real σ > 1; positive (a positive-term series).
pub fn zeta_deriv2(sigma: f64, cfg: &ZetaEvalConfig) -> Result<f64> {
    Ok(zeta_deriv2_complex(Complex64::new(sigma, 0.0), cfg)?.re)
}

/// Lanczos coefficients, g = 7, n = 9.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

/// Γ(x) for x > 0 by the Lanczos approximation (relative error ≲ 1e-13).
pub fn gamma_real(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("gamma_real requires x > 0, got {x}")));
    }
    if x < 0.5 {
        // reflection keeps the argument of the core approximation ≥ 0.5
        return Ok(std::f64::consts::PI / ((std::f64::consts::PI * x).sin() * gamma_real(1.0 - x)?));
    }
    let z = x - 1.0;
    let mut a = LANCZOS_COEF[0];
    for (i, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        a += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    Ok((2.0 * std::f64::consts::PI).sqrt() * t.powf(z + 0.5) * (-t).exp() * a)
}
