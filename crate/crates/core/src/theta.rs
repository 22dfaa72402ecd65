//! Jacobi theta functions by truncated Fourier series, and the maps between
//! the lattice parameter `tau`, the nome `q = exp(iπ tau)` and the modulus
//! pair `(k, k′)`.
//!
//! ```text
//! Θ₁(u|τ) = 2 Σ_{n≥0} (-1)^n q^{(n+½)²} sin((2n+1)u)
//! Θ₂(u|τ) = 2 Σ_{n≥0}        q^{(n+½)²} cos((2n+1)u)
//! Θ₃(u|τ) = 1 + 2 Σ_{n≥1}        q^{n²} cos(2nu)
//! Θ₄(u|τ) = 1 + 2 Σ_{n≥1} (-1)^n q^{n²} cos(2nu)
//! ```
//!
//! Fractional powers of `q` are taken as `exp(iπ tau · e)`, so the branch is
//! fixed by `tau` rather than by `q`.
//!
//! Accuracy degrades as `|Im u|` grows relative to `Im tau`; callers that need
//! large imaginary arguments should reduce them first (see [`crate::jacobi`]).

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::{Error, Result, I};

/// Largest admissible `|q|`.
pub const NOME_CEILING: f64 = 0.97;

/// Hard cap on the number of series terms.
pub const MAX_TERMS: usize = 64;

const SERIES_EPS: f64 = 1e-16;
const AGM_MAX_ITER: usize = 64;

/// The four classical theta functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theta {
    One,
    Two,
    Three,
    Four,
}

impl Theta {
    pub const ALL: [Theta; 4] = [Theta::One, Theta::Two, Theta::Three, Theta::Four];

    pub fn index(self) -> u8 {
        match self {
            Theta::One => 1,
            Theta::Two => 2,
            Theta::Three => 3,
            Theta::Four => 4,
        }
    }

    /// `Θ₁` is odd in `u`, the others are even.
    pub fn is_odd(self) -> bool {
        self == Theta::One
    }
}

impl TryFrom<u8> for Theta {
    type Error = Error;

    fn try_from(index: u8) -> Result<Self> {
        match index {
            1 => Ok(Theta::One),
            2 => Ok(Theta::Two),
            3 => Ok(Theta::Three),
            4 => Ok(Theta::Four),
            other => Err(Error::InvalidThetaIndex(other)),
        }
    }
}

/// A lattice parameter in the upper half-plane together with its nome.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LatticeParam {
    tau: Complex64,
    q: Complex64,
}

impl LatticeParam {
    pub fn new(tau: Complex64) -> Result<Self> {
        let q = nome_from_tau(tau)?;
        Ok(LatticeParam { tau, q })
    }

    pub fn tau(&self) -> Complex64 {
        self.tau
    }

    pub fn nome(&self) -> Complex64 {
        self.q
    }

    /// `q^e` on the branch fixed by `tau`.
    fn nome_pow(&self, e: f64) -> Complex64 {
        (I * PI * self.tau * e).exp()
    }

    /// Evaluates one theta function at `u`.
    ///
    /// Terms are added until the next term's majorant `|q^e| · e^{m|Im u|}`
    /// drops below `1e-16` of the accumulated majorant sum; a majorant is used
    /// instead of the term itself so that an accidental zero of the
    /// trigonometric factor cannot stop the sum early.
    pub fn theta(&self, which: Theta, u: Complex64) -> Result<Complex64> {
        let nome = self.q.norm();
        if nome >= NOME_CEILING {
            return Err(Error::NomeTooLarge {
                nome,
                ceiling: NOME_CEILING,
            });
        }
        let growth = u.im.abs();
        let (mut sum, mut scale, first) = match which {
            Theta::One | Theta::Two => (Complex64::new(0.0, 0.0), 0.0, 0usize),
            Theta::Three | Theta::Four => (Complex64::new(1.0, 0.0), 1.0, 1usize),
        };
        for n in first..first + MAX_TERMS {
            let nf = n as f64;
            let (weight, harmonic) = match which {
                Theta::One | Theta::Two => (self.nome_pow((nf + 0.5) * (nf + 0.5)), 2.0 * nf + 1.0),
                Theta::Three | Theta::Four => (self.nome_pow(nf * nf), 2.0 * nf),
            };
            let majorant = 2.0 * weight.norm() * (harmonic * growth).exp();
            if majorant <= SERIES_EPS * scale {
                return Ok(sum);
            }
            let sign = if n % 2 == 1 { -1.0 } else { 1.0 };
            let arg = u * harmonic;
            let term = match which {
                Theta::One => weight * arg.sin() * (2.0 * sign),
                Theta::Two => weight * arg.cos() * 2.0,
                Theta::Three => weight * arg.cos() * 2.0,
                Theta::Four => weight * arg.cos() * (2.0 * sign),
            };
            sum += term;
            scale += majorant;
        }
        Err(Error::SeriesNotConverged(MAX_TERMS))
    }

    /// Modulus pair from the theta null quotients.
    pub fn modulus(&self) -> Result<ModulusPair> {
        let zero = Complex64::new(0.0, 0.0);
        let t2 = self.theta(Theta::Two, zero)?;
        let t3 = self.theta(Theta::Three, zero)?;
        let t4 = self.theta(Theta::Four, zero)?;
        let t3sq = t3 * t3;
        Ok(ModulusPair {
            k: t2 * t2 / t3sq,
            k_prime: t4 * t4 / t3sq,
        })
    }
}

/// Modulus `k` and complementary modulus `k′`, with `k² + k′² = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModulusPair {
    pub k: Complex64,
    pub k_prime: Complex64,
}

impl ModulusPair {
    /// The pair for a real modulus in `(0, 1)`.
    pub fn from_real(k: f64) -> Result<Self> {
        check_modulus(k)?;
        Ok(ModulusPair {
            k: Complex64::new(k, 0.0),
            k_prime: Complex64::new(complementary(k), 0.0),
        })
    }

    /// `k² + k′² - 1`.
    pub fn null_residual(&self) -> Complex64 {
        self.k * self.k + self.k_prime * self.k_prime - 1.0
    }
}

pub(crate) fn check_modulus(k: f64) -> Result<()> {
    if k > 0.0 && k < 1.0 {
        Ok(())
    } else {
        Err(Error::ModulusOutOfRange(k))
    }
}

/// `√(1 - k²)`, formed as `√((1-k)(1+k))` to keep digits near `k = 1`.
pub fn complementary(k: f64) -> f64 {
    ((1.0 - k) * (1.0 + k)).sqrt()
}

pub fn nome_from_tau(tau: Complex64) -> Result<Complex64> {
    if tau.im <= 0.0 || !tau.im.is_finite() {
        return Err(Error::DegenerateLattice(tau.im));
    }
    Ok((I * PI * tau).exp())
}

pub fn theta(which: Theta, u: Complex64, tau: Complex64) -> Result<Complex64> {
    LatticeParam::new(tau)?.theta(which, u)
}

pub fn modulus_from_tau(tau: Complex64) -> Result<ModulusPair> {
    LatticeParam::new(tau)?.modulus()
}

/// Arithmetic-geometric mean of two positive reals.
pub fn agm(mut a: f64, mut b: f64) -> f64 {
    for _ in 0..AGM_MAX_ITER {
        if (a - b).abs() <= 1e-16 * a {
            break;
        }
        let next = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = next;
    }
    a
}

/// Complete elliptic integral of the first kind, `K(k) = π / (2 AGM(1, k′))`.
pub fn complete_k(k: f64) -> Result<f64> {
    check_modulus(k)?;
    Ok(FRAC_PI_2 / agm(1.0, complementary(k)))
}

/// Lattice parameter `tau = i K′/K` for a real modulus.
pub fn tau_from_modulus(k: f64) -> Result<LatticeParam> {
    check_modulus(k)?;
    let quarter = FRAC_PI_2 / agm(1.0, complementary(k));
    let quarter_prime = FRAC_PI_2 / agm(1.0, k);
    LatticeParam::new(Complex64::new(0.0, quarter_prime / quarter))
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn nome_examples() {
        let q = nome_from_tau(I).unwrap();
        assert!((q - (-PI).exp()).norm() < 1e-17);
        assert!((q.re - 0.0432139182637723).abs() < 1e-15);

        let q = nome_from_tau(c(1.0, 1.0)).unwrap();
        assert!((q + (-PI).exp()).norm() < 1e-16);

        let q = nome_from_tau(c(0.3, 2.0)).unwrap();
        let expected = c((0.3 * PI).cos(), (0.3 * PI).sin()) * (-2.0 * PI).exp();
        assert!((q - expected).norm() < 1e-17);
    }

    #[test]
    fn nome_rejects_lower_half_plane() {
        assert_eq!(nome_from_tau(c(1.0, 0.0)), Err(Error::DegenerateLattice(0.0)));
        assert!(nome_from_tau(c(0.0, -1.0)).is_err());
    }

    #[test]
    fn theta_origin_values() {
        for tau in [I, c(0.2, 0.7), c(-0.4, 3.0)] {
            assert_eq!(theta(Theta::One, c(0.0, 0.0), tau).unwrap(), c(0.0, 0.0));
        }
        let far = c(0.0, 40.0);
        assert!((theta(Theta::Three, c(0.0, 0.0), far).unwrap() - 1.0).norm() < 1e-15);
        assert!((theta(Theta::Four, c(0.0, 0.0), far).unwrap() - 1.0).norm() < 1e-15);
    }

    #[test]
    fn theta3_at_i_matches_extended_precision_value() {
        // 30-digit value of Θ₃(0|i) = π^{1/4}/Γ(3/4), summed independently.
        let expected = 1.086_434_811_213_308_014_575_316_121_51;
        let got = theta(Theta::Three, c(0.0, 0.0), I).unwrap();
        assert!((got.re - expected).abs() < 1e-15, "{got}");
        assert_eq!(got.im, 0.0);
    }

    #[test]
    fn theta_complex_point_matches_reference() {
        // Reference values at u = 0.3+0.2i, q = 0.2 from a 30-digit evaluation.
        let tau = c(0.0, -(0.2f64).ln() / PI);
        let u = c(0.3, 0.2);
        let expected = [
            c(0.353635983366505800776855165733, 0.236090666987105505847228896206),
            c(1.34281696259820154300114014602, -0.106359405375458689824692162838),
            c(1.35844940678286449783274986497, -0.0954215873248881956854845936742),
            c(0.644652224680282840199682039942, 0.0901239905603912014299251029571),
        ];
        for (which, want) in Theta::ALL.into_iter().zip(expected) {
            let got = theta(which, u, tau).unwrap();
            assert!((got - want).norm() < 1e-15, "{which:?}: {got} vs {want}");
        }
    }

    #[test]
    fn invalid_index_and_ceiling() {
        assert_eq!(Theta::try_from(5), Err(Error::InvalidThetaIndex(5)));
        assert_eq!(Theta::try_from(3), Ok(Theta::Three));
        // |q| = 0.98
        let tau = c(0.0, -(0.98f64).ln() / PI);
        assert!(matches!(
            theta(Theta::Three, c(0.0, 0.0), tau),
            Err(Error::NomeTooLarge { .. })
        ));
    }

    #[test]
    fn modulus_at_i_is_symmetric() {
        let m = modulus_from_tau(I).unwrap();
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert!((m.k - r).norm() < 1e-15);
        assert!((m.k_prime - r).norm() < 1e-15);
        assert!(m.null_residual().norm() < 1e-14);
    }

    #[test]
    fn modulus_degenerates_as_q_vanishes() {
        let m = modulus_from_tau(c(0.0, 30.0)).unwrap();
        assert!(m.k.norm() < 1e-19);
        assert!((m.k_prime - 1.0).norm() < 1e-15);
    }

    /// Product formulas for k and k′ in terms of the nome, summed separately
    /// from the theta series.
    fn product_modulus(tau: Complex64) -> (Complex64, Complex64) {
        let q = |e: f64| (I * PI * tau * e).exp();
        let mut k = q(0.5) * 4.0;
        let mut kp = c(1.0, 0.0);
        for n in 1..200 {
            let n = n as f64;
            let ratio = (q(2.0 * n) + 1.0) / (q(2.0 * n - 1.0) + 1.0);
            k *= ratio.powi(4);
            let ratio = (-q(2.0 * n - 1.0) + 1.0) / (q(2.0 * n - 1.0) + 1.0);
            kp *= ratio.powi(4);
        }
        (k, kp)
    }

    #[test]
    fn modulus_agrees_with_nome_products() {
        let tau = c(0.1, 1.2);
        let (k, kp) = product_modulus(tau);
        let m = modulus_from_tau(tau).unwrap();
        assert!((m.k - k).norm() < 1e-12, "{} vs {}", m.k, k);
        assert!((m.k_prime - kp).norm() < 1e-12);
        // 30-digit reference
        let want = c(0.553026409755458399418205952448, 0.0725292927623577372449604475746);
        assert!((m.k - want).norm() < 1e-14);
    }

    #[test]
    fn tau_from_modulus_examples() {
        let lp = tau_from_modulus(std::f64::consts::FRAC_1_SQRT_2).unwrap();
        assert!((lp.tau() - I).norm() < 1e-15);

        let lp = tau_from_modulus(0.5).unwrap();
        assert!((lp.tau().im - 1.279_261_571_171_006_5).abs() < 1e-14);
        let back = lp.modulus().unwrap();
        assert!((back.k.re - 0.5).abs() <= 1e-12);

        let small = tau_from_modulus(1e-8).unwrap();
        let smaller = tau_from_modulus(1e-12).unwrap();
        assert!(smaller.tau().im > small.tau().im);
        assert!(smaller.nome().norm() < small.nome().norm());
        assert!(small.nome().norm() < 1e-3);
    }

    #[test]
    fn tau_from_modulus_rejects_out_of_range() {
        for k in [0.0, 1.0, -0.2, 1.5, f64::NAN] {
            assert!(tau_from_modulus(k).is_err());
        }
    }

    #[test]
    fn complete_integral_limits() {
        assert!((complete_k(1e-9).unwrap() - FRAC_PI_2).abs() < 1e-15);
        assert!((complete_k(0.9).unwrap() - 2.280_549_138_422_770_2).abs() < 1e-14);
    }
}
