//! Exact-coefficient arithmetic on truncated Dirichlet series.
//!
//! A series Σ_{n≤N} a_n n^{-s} is stored densely, 1-based in n.  All
//! operations are exact on the quotient by {n > N}: convolution never
//! aliases, so roundtrip identities (exp/log, Möbius inversion) hold to
//! rounding error and are testable as exact statements.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Finite truncation of a Dirichlet series Σ a_n n^{-s}, n = 1..=N.
#[derive(Debug, Clone, PartialEq)]
pub struct DirichletSeries {
    coeffs: Vec<Complex64>,
}

impl DirichletSeries {
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Precondition("series needs N ≥ 1".into()));
        }
        if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::Precondition("series coefficients must be finite".into()));
        }
        Ok(DirichletSeries { coeffs })
    }

    pub fn zeros(n: usize) -> Self {
        DirichletSeries { coeffs: vec![Complex64::new(0.0, 0.0); n.max(1)] }
    }

    /// The multiplicative identity e₁ = 1·1^{-s}.
    pub fn e1(n: usize) -> Self {
        let mut s = Self::zeros(n);
        s.coeffs[0] = Complex64::new(1.0, 0.0);
        s
    }

    /// All-ones truncation of ζ.
    pub fn zeta_truncated(n: usize) -> Self {
        DirichletSeries { coeffs: vec![Complex64::new(1.0, 0.0); n.max(1)] }
    }

    /// Truncation order N.
    pub fn truncation(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient a_n (1-based); zero beyond the truncation.
    pub fn coeff(&self, n: usize) -> Complex64 {
        if n == 0 || n > self.coeffs.len() {
            Complex64::new(0.0, 0.0)
        } else {
            self.coeffs[n - 1]
        }
    }

    pub fn set_coeff(&mut self, n: usize, v: Complex64) {
        assert!(n >= 1 && n <= self.coeffs.len(), "coefficient index out of range");
        self.coeffs[n - 1] = v;
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Pads (or truncates) to order N.
    pub fn resized(&self, n: usize) -> Self {
        let mut c = self.coeffs.clone();
        c.resize(n.max(1), Complex64::new(0.0, 0.0));
        DirichletSeries { coeffs: c }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.truncation().max(other.truncation());
        let mut out = Self::zeros(n);
        for i in 1..=n {
            out.set_coeff(i, self.coeff(i) + other.coeff(i));
        }
        out
    }

    pub fn scale(&self, c: Complex64) -> Self {
        DirichletSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Dirichlet convolution: (fg)_n = Σ_{d|n} f_d g_{n/d}, computed up to
    /// the larger of the two truncations.
    pub fn convolve(&self, other: &Self) -> Self {
        let n = self.truncation().max(other.truncation());
        let mut out = Self::zeros(n);
        for d in 1..=n {
            let fd = self.coeff(d);
            if fd.norm_sqr() == 0.0 {
                continue;
            }
            let mut m = 1;
            while d * m <= n {
                let g = other.coeff(m);
                if g.norm_sqr() != 0.0 {
                    out.coeffs[d * m - 1] += fd * g;
                }
                m += 1;
            }
        }
        out
    }

    /// exp(f) for f with f₁ = 0, by the log-derivative recursion
    /// g₁ = 1, g_n log n = Σ_{d|n, d>1} f_d log d · g_{n/d}.
    pub fn exp_series(&self) -> Result<Self> {
        if self.coeff(1).norm() > 1e-14 {
            return Err(Error::Precondition("exp_series requires f₁ = 0".into()));
        }
        let n = self.truncation();
        let mut g = Self::zeros(n);
        g.coeffs[0] = Complex64::new(1.0, 0.0);
        for m in 2..=n {
            let mut acc = Complex64::new(0.0, 0.0);
            for d in divisors(m) {
                if d > 1 {
                    let fd = self.coeff(d);
                    if fd.norm_sqr() != 0.0 {
                        acc += fd * (d as f64).ln() * g.coeff(m / d);
                    }
                }
            }
            g.coeffs[m - 1] = acc / (m as f64).ln();
        }
        Ok(g)
    }

    /// log(f) for f with f₁ = 1; inverse of [`Self::exp_series`].
    pub fn log_series(&self) -> Result<Self> {
        if (self.coeff(1) - 1.0).norm() > 1e-14 {
            return Err(Error::Precondition("log_series requires f₁ = 1".into()));
        }
        let n = self.truncation();
        let mut h = Self::zeros(n);
        for m in 2..=n {
            let mut acc = self.coeff(m) * (m as f64).ln();
            for d in divisors(m) {
                if d > 1 && d < m {
                    let hd = h.coeff(d);
                    if hd.norm_sqr() != 0.0 {
                        acc -= hd * (d as f64).ln() * self.coeff(m / d);
                    }
                }
            }
            h.coeffs[m - 1] = acc / (m as f64).ln();
        }
        Ok(h)
    }

    /// Evaluate at a point: Σ a_n n^{-s}.
    pub fn evaluate(&self, s: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, a) in self.coeffs.iter().enumerate().rev() {
            if a.norm_sqr() != 0.0 {
                acc += a * Complex64::new((i + 1) as f64, 0.0).powc(-s);
            }
        }
        acc
    }

    /// Term-wise derivative: coefficients −a_n log n.
    pub fn derivative(&self) -> Self {
        let mut out = self.clone();
        for (i, c) in out.coeffs.iter_mut().enumerate() {
            *c *= -((i + 1) as f64).ln();
        }
        out
    }

    /// Vertical-limit twist: coefficients a_n χ(n).
    pub fn twist(&self, chi: &Character) -> Result<Self> {
        let mut out = self.clone();
        for i in 0..out.coeffs.len() {
            if out.coeffs[i].norm_sqr() != 0.0 {
                out.coeffs[i] *= chi.eval(i + 1)?;
            }
        }
        Ok(out)
    }

    /// Coefficient ℓ²-norm (the H² norm of the truncation).
    pub fn l2_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn sup_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn to_json(&self) -> SeriesJson {
        SeriesJson {
            n: self.truncation(),
            re: self.coeffs.iter().map(|c| c.re).collect(),
            im: self.coeffs.iter().map(|c| c.im).collect(),
        }
    }

    pub fn from_json(j: &SeriesJson) -> Result<Self> {
        if j.re.len() != j.n || j.im.len() != j.n {
            return Err(Error::Precondition("series JSON arrays must have length N".into()));
        }
        Self::new(j.re.iter().zip(&j.im).map(|(&r, &i)| Complex64::new(r, i)).collect())
    }
}

/// Wire format: {"N": ..., "re": [...], "im": [...]}.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SeriesJson {
    #[serde(rename = "N")]
    pub n: usize,
    pub re: Vec<f64>,
    pub im: Vec<f64>,
}

/// d_α: coefficients of ζ^α, via exp(α · log ζ_N).  d_α(1) = 1, d_α(p) = α.
pub fn divisor_alpha(alpha: f64, n: usize) -> Result<DirichletSeries> {
    if !(alpha >= 1.0) {
        return Err(Error::Precondition(format!("divisor_alpha requires α ≥ 1, got {alpha}")));
    }
    let log_zeta = DirichletSeries::zeta_truncated(n).log_series()?;
    log_zeta.scale(Complex64::new(alpha, 0.0)).exp_series()
}

fn divisors(m: usize) -> Vec<usize> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= m {
        if m % d == 0 {
            small.push(d);
            if d * d != m {
                large.push(m / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// First `j` primes.
pub fn primes(j: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(j);
    let mut candidate = 2usize;
    while out.len() < j {
        if out.iter().all(|&p| candidate % p != 0) {
            out.push(candidate);
        }
        candidate += 1;
    }
    out
}

/// Finite truncation of a polytorus point: one unimodular value per prime,
/// extended to n by complete multiplicativity.
#[derive(Debug, Clone)]
pub struct Character {
    values: Vec<Complex64>,
    primes: Vec<usize>,
}

impl Character {
    pub fn new(values: Vec<Complex64>) -> Result<Self> {
        for v in &values {
            if (v.norm() - 1.0).abs() > 1e-12 {
                return Err(Error::Precondition(format!("character value {v} is not unimodular")));
            }
        }
        let primes = primes(values.len());
        Ok(Character { values, primes })
    }

    pub fn trivial(j: usize) -> Self {
        Character { values: vec![Complex64::new(1.0, 0.0); j], primes: primes(j) }
    }

    pub fn n_primes(&self) -> usize {
        self.values.len()
    }

    pub fn value_at_prime(&self, idx: usize) -> Complex64 {
        self.values[idx]
    }

    /// χ(n), completely multiplicative from the prime values.
    pub fn eval(&self, n: usize) -> Result<Complex64> {
        let mut rem = n;
        let mut out = Complex64::new(1.0, 0.0);
        for (p, v) in self.primes.iter().zip(&self.values) {
            while rem % p == 0 {
                rem /= p;
                out *= v;
            }
            if rem == 1 {
                break;
            }
        }
        if rem != 1 {
            return Err(Error::InsufficientPrimes { n, have: self.values.len() });
        }
        Ok(out)
    }
}
