//! Bi-orthogonal vector pairs on `ℂ²` and the deformed spin matrices `σ^γ`.
//!
//! The transformation
//!
//! ```text
//! T = cos(ϑ/2) 1 + 2 cos(φ/2) sin(ϑ/2) σ₁ - 2 sin(φ/2) sin(ϑ/2) σ₂
//! ```
//!
//! uses spin-½ matrices (`σ = Pauli/2`), so `T` is Hermitian with
//! `det T = cos ϑ`. With `|q_j⟩ = 2^{-1/2}(1, (-1)^{j-1})` the pairs
//! `φ_j = T q_j` and `χ_j = (T⁻¹)† q_j` are bi-orthonormal whenever
//! `cos ϑ ≠ 0`. Writing `γ = sin ϑ`, `ω = cos ϑ`, the `σ^γ` follow as dyadic
//! sums over these pairs, e.g. `σ₁^γ = (ω/2) Σ_j (-1)^{j-1} |φ_j⟩⟨χ_j|`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::ck::CkType;
use crate::{Error, Result, I};

pub type Vector2 = [Complex64; 2];

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// 2×2 complex matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Matrix2(pub [[Complex64; 2]; 2]);

impl Matrix2 {
    pub const ZERO: Matrix2 = Matrix2([[ZERO, ZERO], [ZERO, ZERO]]);
    pub const IDENTITY: Matrix2 = Matrix2([[ONE, ZERO], [ZERO, ONE]]);

    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        Matrix2([[a, b], [c, d]])
    }

    /// Standard Pauli matrix `m ∈ {1, 2, 3}`.
    pub fn pauli(m: u8) -> Result<Self> {
        Ok(match m {
            1 => Matrix2::new(ZERO, ONE, ONE, ZERO),
            2 => Matrix2::new(ZERO, -I, I, ZERO),
            3 => Matrix2::new(ONE, ZERO, ZERO, -ONE),
            _ => return Err(Error::InvalidSigmaIndex(m)),
        })
    }

    /// `|u⟩⟨v|`
    pub fn outer(u: Vector2, v: Vector2) -> Self {
        Matrix2([
            [u[0] * v[0].conj(), u[0] * v[1].conj()],
            [u[1] * v[0].conj(), u[1] * v[1].conj()],
        ])
    }

    pub fn entry(&self, r: usize, c: usize) -> Complex64 {
        self.0[r][c]
    }

    pub fn det(&self) -> Complex64 {
        let m = &self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn trace(&self) -> Complex64 {
        self.0[0][0] + self.0[1][1]
    }

    pub fn dagger(&self) -> Self {
        let m = &self.0;
        Matrix2::new(m[0][0].conj(), m[1][0].conj(), m[0][1].conj(), m[1][1].conj())
    }

    pub fn inverse(&self) -> Option<Self> {
        let det = self.det();
        if det.norm() == 0.0 {
            return None;
        }
        let m = &self.0;
        Some(Matrix2::new(m[1][1], -m[0][1], -m[1][0], m[0][0]) * (1.0 / det))
    }

    pub fn commutator(&self, other: &Matrix2) -> Matrix2 {
        *self * *other - *other * *self
    }

    pub fn apply(&self, v: Vector2) -> Vector2 {
        let m = &self.0;
        [m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]]
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.0.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_off_diagonal(&self) -> f64 {
        self.0[0][1].norm().max(self.0[1][0].norm())
    }
}

impl Add for Matrix2 {
    type Output = Matrix2;

    fn add(self, o: Matrix2) -> Matrix2 {
        let (a, b) = (self.0, o.0);
        Matrix2([
            [a[0][0] + b[0][0], a[0][1] + b[0][1]],
            [a[1][0] + b[1][0], a[1][1] + b[1][1]],
        ])
    }
}

impl Sub for Matrix2 {
    type Output = Matrix2;

    fn sub(self, o: Matrix2) -> Matrix2 {
        self + (-o)
    }
}

impl Neg for Matrix2 {
    type Output = Matrix2;

    fn neg(self) -> Matrix2 {
        self * Complex64::new(-1.0, 0.0)
    }
}

impl Mul for Matrix2 {
    type Output = Matrix2;

    fn mul(self, o: Matrix2) -> Matrix2 {
        let (a, b) = (self.0, o.0);
        let e = |r: usize, c: usize| a[r][0] * b[0][c] + a[r][1] * b[1][c];
        Matrix2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }
}

impl Mul<Complex64> for Matrix2 {
    type Output = Matrix2;

    fn mul(self, s: Complex64) -> Matrix2 {
        Matrix2(self.0.map(|row| row.map(|z| z * s)))
    }
}

impl Mul<f64> for Matrix2 {
    type Output = Matrix2;

    fn mul(self, s: f64) -> Matrix2 {
        self * Complex64::new(s, 0.0)
    }
}

impl fmt::Display for Matrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.0;
        write!(f, "[[{}, {}], [{}, {}]]", m[0][0], m[0][1], m[1][0], m[1][1])
    }
}

/// `⟨u|v⟩`, conjugating the first argument.
pub fn inner(u: Vector2, v: Vector2) -> Complex64 {
    u[0].conj() * v[0] + u[1].conj() * v[1]
}

/// `|q_j⟩ = 2^{-1/2}(1, (-1)^{j-1})`, `j ∈ {1, 2}`.
pub fn basis(j: usize) -> Vector2 {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let sign = if j % 2 == 1 { 1.0 } else { -1.0 };
    [Complex64::new(s, 0.0), Complex64::new(sign * s, 0.0)]
}

pub fn build_t(vartheta: f64, varphi: f64) -> Matrix2 {
    let half_pauli = |m| Matrix2::pauli(m).expect("valid index") * 0.5;
    let s = (vartheta / 2.0).sin();
    Matrix2::IDENTITY * (vartheta / 2.0).cos() + half_pauli(1) * (2.0 * (varphi / 2.0).cos() * s)
        - half_pauli(2) * (2.0 * (varphi / 2.0).sin() * s)
}

/// Rejects `ϑ` with `cos ϑ` at rounding level, where `T` is singular.
fn check_invertible(vartheta: f64) -> Result<()> {
    if vartheta.cos().abs() < 1e-12 {
        Err(Error::SingularTransform(vartheta))
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BiorthoSystem {
    pub vartheta: f64,
    pub gamma: f64,
    pub omega: f64,
    pub phi: [Vector2; 2],
    pub chi: [Vector2; 2],
}

impl BiorthoSystem {
    /// Explicit pairs with exponents `(3/2 - j)ϑ`:
    /// `φ_j = 2^{-1/2}(e^{-i(3/2-j)ϑ}, (-1)^{j-1} e^{i(3/2-j)ϑ})` and
    /// `χ_j = 2^{-1/2}(e^{i(3/2-j)ϑ}, (-1)^{j-1} e^{-i(3/2-j)ϑ}) / cos ϑ`.
    /// These are the `T` pairs at `φ = -π`.
    pub fn new(vartheta: f64) -> Result<Self> {
        check_invertible(vartheta)?;
        let omega = vartheta.cos();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let pair = |j: usize| {
            let a = (1.5 - j as f64) * vartheta;
            let sign = if j == 1 { 1.0 } else { -1.0 };
            let e = Complex64::from_polar(s, a);
            ([e.conj(), e * sign], [e / omega, e.conj() * (sign / omega)])
        };
        let (p1, c1) = pair(1);
        let (p2, c2) = pair(2);
        Ok(BiorthoSystem {
            vartheta,
            gamma: vartheta.sin(),
            omega,
            phi: [p1, p2],
            chi: [c1, c2],
        })
    }

    /// `φ_j = T|q_j⟩`, `χ_j = (T⁻¹)†|q_j⟩` for arbitrary `φ`.
    pub fn from_transform(vartheta: f64, varphi: f64) -> Result<Self> {
        check_invertible(vartheta)?;
        let t = build_t(vartheta, varphi);
        let t_inv_dag = t.inverse().ok_or(Error::SingularTransform(vartheta))?.dagger();
        let q = [basis(1), basis(2)];
        Ok(BiorthoSystem {
            vartheta,
            gamma: vartheta.sin(),
            omega: vartheta.cos(),
            phi: q.map(|v| t.apply(v)),
            chi: q.map(|v| t_inv_dag.apply(v)),
        })
    }

    /// `⟨φ_j|χ_k⟩`
    pub fn gram(&self) -> Matrix2 {
        let e = |j: usize, k: usize| inner(self.phi[j], self.chi[k]);
        Matrix2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn gram_residual(&self) -> f64 {
        (self.gram() - Matrix2::IDENTITY).max_abs()
    }

    /// `Σ c_jk |φ_j⟩⟨χ_k|`
    #[allow(clippy::needless_range_loop)]
    pub fn dyadic(&self, c: [[Complex64; 2]; 2]) -> Matrix2 {
        let mut out = Matrix2::ZERO;
        for j in 0..2 {
            for k in 0..2 {
                out = out + Matrix2::outer(self.phi[j], self.chi[k]) * c[j][k];
            }
        }
        out
    }

    /// Coefficients `c_jk = ⟨χ_j|M|φ_k⟩` with `M = Σ c_jk |φ_j⟩⟨χ_k|`.
    pub fn coefficients(&self, m: &Matrix2) -> [[Complex64; 2]; 2] {
        let e = |j: usize, k: usize| inner(self.chi[j], m.apply(self.phi[k]));
        [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
    }

    /// `(ω/2)(|φ₁⟩⟨χ₁| - |φ₂⟩⟨χ₂|)`
    pub fn sigma1_dyadic(&self) -> Matrix2 {
        let h = Complex64::new(self.omega / 2.0, 0.0);
        self.dyadic([[h, ZERO], [ZERO, -h]])
    }
}

pub fn biortho_pairs(vartheta: f64) -> Result<BiorthoSystem> {
    BiorthoSystem::new(vartheta)
}

pub(crate) fn check_gamma(gamma: f64) -> Result<f64> {
    if gamma.abs() < 1.0 {
        Ok(((1.0 - gamma) * (1.0 + gamma)).sqrt())
    } else {
        Err(Error::GammaOutOfRange(gamma))
    }
}

/// `σ₁^γ = ½[[-iγ, 1], [1, iγ]]`, `σ₂^γ = ½[[0, -i], [i, 0]]`,
/// `σ₃^γ = ½[[1, iγ], [iγ, -1]]`.
pub fn sigma_gamma(m: u8, gamma: f64) -> Result<Matrix2> {
    check_gamma(gamma)?;
    let g = I * gamma;
    let full = match m {
        1 => Matrix2::new(-g, ONE, ONE, g),
        2 => Matrix2::new(ZERO, -I, I, ZERO),
        3 => Matrix2::new(ONE, g, g, -ONE),
        _ => return Err(Error::InvalidSigmaIndex(m)),
    };
    Ok(full * 0.5)
}

/// `(J, P₁, P₂)` as 2×2 matrices for the given type.
pub fn matrix_generators(t: CkType, gamma: f64) -> Result<[Matrix2; 3]> {
    let omega = check_gamma(gamma)?;
    let s = |m| sigma_gamma(m, gamma);
    let (s1, s2, s3) = (s(1)?, s(2)?, s(3)?);
    let w = Complex64::new(1.0 / omega, 0.0);
    Ok(match t {
        CkType::Elliptic => [s1 * (I * w), s2 * I, s3 * (-I * w)],
        CkType::Hyperbolic => [s1 * (I * w), s2, s3 * (-w)],
        CkType::CoHyperbolic => [s1 * (-w), s2 * I, s3 * w],
        CkType::DoublyHyperbolic => [s2, s1 * (-w), s3 * (I * w)],
    })
}
