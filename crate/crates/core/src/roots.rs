//! Root location: the exact dominant-constant test and a floating-point root
//! finder used to validate it.
//!
//! If `|a_0| > |a_1| + ... + |a_n|`, every complex root has modulus greater
//! than one. The numeric side is an oracle only; no certificate depends on
//! it.

use std::f64::consts::TAU;

use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::Polynomial;

pub const RESIDUAL_THRESHOLD: f64 = 1e-10;
pub const VIETA_RELATIVE_TOLERANCE: f64 = 1e-8;
pub const DEFAULT_SEED: u64 = 0x5eed_2023;

const ABERTH_MAX_ITER: usize = 200;
const DURAND_KERNER_MAX_ITER: usize = 2000;

/// `|a_0| > |a_1| + ... + |a_n|`, compared exactly.
pub fn dominant_constant_holds(f: &Polynomial) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let a0 = f.constant_term();
    if a0.is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    Ok(a0.abs() > f.abs_coeff_sum_above(1))
}

#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    pub roots: Vec<Complex64>,
    /// `|f(z)| / (sum |a_j| * max(1, |z|)^n)` for each root.
    pub residuals: Vec<f64>,
}

impl RootSet {
    pub fn moduli(&self) -> Vec<f64> {
        self.roots.iter().map(|z| z.norm()).collect()
    }

    pub fn min_modulus(&self) -> f64 {
        self.roots
            .iter()
            .map(|z| z.norm())
            .fold(f64::INFINITY, f64::min)
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }

    /// Product of root moduli, summed in log space.
    pub fn modulus_product(&self) -> f64 {
        if self.roots.iter().any(|z| z.norm() == 0.0) {
            return 0.0;
        }
        self.roots.iter().map(|z| z.norm().ln()).sum::<f64>().exp()
    }
}

fn to_f64_coeffs(f: &Polynomial) -> Result<Vec<f64>> {
    f.coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            if c.bits() > 1024 {
                return Err(Error::CoefficientOverflow { index: i });
            }
            c.to_f64()
                .filter(|v| v.is_finite())
                .ok_or(Error::CoefficientOverflow { index: i })
        })
        .collect()
}

fn horner(coeffs: &[f64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::zero(), |acc, &c| acc * z + c)
}

/// Value and derivative at `z`.
fn horner_with_derivative(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

fn scaled_residual(coeffs: &[f64], abs_sum: f64, z: Complex64) -> f64 {
    let n = coeffs.len() - 1;
    let scale = abs_sum * z.norm().max(1.0).powi(n as i32);
    horner(coeffs, z).norm() / scale
}

fn all_accepted(coeffs: &[f64], abs_sum: f64, zs: &[Complex64]) -> bool {
    zs.iter()
        .all(|&z| z.is_finite() && scaled_residual(coeffs, abs_sum, z) < RESIDUAL_THRESHOLD)
}

fn initial_guesses(coeffs: &[f64], seed: u64) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let cauchy = 1.0
        + coeffs[..n]
            .iter()
            .map(|c| (c / lead).abs())
            .fold(0.0, f64::max);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let offset: f64 = rng.gen_range(0.1..0.9);
    (0..n)
        .map(|k| {
            let jitter: f64 = rng.gen_range(-0.05..0.05);
            let angle = TAU * (k as f64 + offset + jitter) / n as f64;
            Complex64::from_polar(cauchy, angle)
        })
        .collect()
}

/// One Gauss-Seidel sweep of the Aberth-Ehrlich correction. Returns the
/// largest relative step.
fn aberth_sweep(coeffs: &[f64], zs: &mut [Complex64]) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..zs.len() {
        let (p, dp) = horner_with_derivative(coeffs, zs[i]);
        if p.norm() == 0.0 {
            continue;
        }
        let ratio = p / dp;
        let repulsion: Complex64 = zs
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &zj)| (zs[i] - zj).inv())
            .sum();
        let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
        if step.is_finite() {
            zs[i] -= step;
            worst = worst.max(step.norm() / zs[i].norm().max(1.0));
        }
    }
    worst
}

fn durand_kerner_sweep(coeffs: &[f64], zs: &mut [Complex64]) {
    let lead = *coeffs.last().unwrap();
    for i in 0..zs.len() {
        let p = horner(coeffs, zs[i]);
        let denom: Complex64 = zs
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &zj)| zs[i] - zj)
            .product::<Complex64>()
            * lead;
        let step = p / denom;
        if step.is_finite() {
            zs[i] -= step;
        }
    }
}

/// All complex roots, by Aberth-Ehrlich iteration with a Durand-Kerner
/// fallback. Fails rather than returning roots whose scaled residual is at
/// or above [`RESIDUAL_THRESHOLD`].
pub fn numeric_roots(f: &Polynomial) -> Result<RootSet> {
    numeric_roots_seeded(f, DEFAULT_SEED)
}

pub fn numeric_roots_seeded(f: &Polynomial, seed: u64) -> Result<RootSet> {
    let n = match f.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => {
            return Err(Error::InvalidArgument(
                "constant polynomial has no roots".into(),
            ))
        }
        Some(n) => n,
    };
    let full = to_f64_coeffs(f)?;
    let abs_sum: f64 = full.iter().map(|c| c.abs()).sum();

    let (zeros, rest) = f.strip_x_power();
    let mut roots = vec![Complex64::zero(); zeros];
    if rest.degree().unwrap_or(0) > 0 {
        let coeffs = to_f64_coeffs(&rest)?;
        let rest_abs: f64 = coeffs.iter().map(|c| c.abs()).sum();
        let mut zs = initial_guesses(&coeffs, seed);
        // Iterate until the corrections vanish; clustered roots converge
        // linearly, so the residual test alone would stop too early.
        for _ in 0..ABERTH_MAX_ITER {
            if aberth_sweep(&coeffs, &mut zs) < 1e-14 {
                break;
            }
        }
        if !all_accepted(&coeffs, rest_abs, &zs) {
            if zs.iter().any(|z| !z.is_finite()) {
                zs = initial_guesses(&coeffs, seed ^ 0xdead_beef);
            }
            for _ in 0..DURAND_KERNER_MAX_ITER {
                durand_kerner_sweep(&coeffs, &mut zs);
                if all_accepted(&coeffs, rest_abs, &zs) {
                    break;
                }
            }
        }
        roots.extend(zs);
    }

    let residuals: Vec<f64> = roots
        .iter()
        .map(|&z| scaled_residual(&full, abs_sum, z))
        .collect();
    let worst = residuals.iter().copied().fold(0.0, f64::max);
    // NaN residuals must fail too.
    if !residuals.iter().all(|&r| r < RESIDUAL_THRESHOLD) {
        return Err(Error::NoConvergence {
            worst_residual: if worst.is_nan() { f64::INFINITY } else { worst },
        });
    }
    debug_assert_eq!(roots.len(), n);
    Ok(RootSet { roots, residuals })
}

pub fn min_root_modulus(f: &Polynomial) -> Result<f64> {
    numeric_roots(f).map(|r| r.min_modulus())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VietaCheck {
    /// Product of numeric root moduli.
    pub product: f64,
    /// `|a_0 / a_n|`.
    pub expected: f64,
    pub holds: bool,
}

/// `|a_0 / a_n|` in floating point, computed from the exact ratio.
fn constant_over_leading(f: &Polynomial) -> f64 {
    let a0 = f.constant_term().abs();
    let an = f.leading_coeff().abs();
    let shift = (a0.bits().max(an.bits()) as i64 - 900).max(0) as usize;
    let a0 = (&a0 >> shift).to_f64().unwrap_or(f64::INFINITY);
    let an = (&an >> shift).to_f64().unwrap_or(f64::INFINITY);
    a0 / an
}

pub fn vieta_check(f: &Polynomial, roots: &RootSet) -> VietaCheck {
    let product = roots.modulus_product();
    let expected = constant_over_leading(f);
    let holds = if expected == 0.0 {
        product == 0.0
    } else {
        ((product - expected) / expected).abs() <= VIETA_RELATIVE_TOLERANCE
    };
    VietaCheck {
        product,
        expected,
        holds,
    }
}

/// Product of root moduli equals `|a_0 / a_n|` within
/// [`VIETA_RELATIVE_TOLERANCE`].
pub fn vieta_product_check(f: &Polynomial) -> Result<bool> {
    let roots = numeric_roots(f)?;
    Ok(vieta_check(f, &roots).holds)
}
