//! Modular transformations of the lattice parameter and the function
//! identities they induce.
//!
//! An element `(a, b, c, d)` with `ad - bc = 1` acts as
//! `τ ↦ (c + dτ)/(a + bτ)`. The generators are `P: τ ↦ 1 + τ` and
//! `Q: τ ↦ -1/τ`; with this layout composition of maps is the ordinary
//! matrix product, `apply(M₂, apply(M₁, τ)) = apply(M₂·M₁, τ)`.
//!
//! `Q` exchanges `k` and `k′` and rotates the argument, `ζ = iz`; this gives
//! [`Complementary`]. `P` turns `Θ₃(0)` into `Θ₄(0)` and produces the
//! imaginary modulus `λ = ik/k′`, `λ′ = 1/k′`, realised by
//! [`Imaginary`] through `sn(u; λ) = k′ sd(u/k′; k)`, `cn(u; λ) = cd(u/k′; k)`
//! and `dn(u; λ) = nd(u/k′; k)`. Functions at complex modulus are defined by
//! these identities only.

use std::ops::Mul;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::jacobi::{EllipticEvaluator, EllipticFn, Jacobi, QuarterPeriods};
use crate::theta::LatticeParam;
use crate::{Error, Result, I};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModularElement {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl ModularElement {
    pub const IDENTITY: ModularElement = ModularElement { a: 1, b: 0, c: 0, d: 1 };
    /// `τ ↦ 1 + τ`
    pub const P: ModularElement = ModularElement { a: 1, b: 0, c: 1, d: 1 };
    /// `τ ↦ -1/τ`
    pub const Q: ModularElement = ModularElement {
        a: 0,
        b: 1,
        c: -1,
        d: 0,
    };

    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let det = a * d - b * c;
        if det != 1 {
            return Err(Error::NotUnimodular(det));
        }
        Ok(ModularElement { a, b, c, d })
    }

    pub fn entries(&self) -> [i64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    /// Element for the word `w[0]·w[1]·...`, i.e. `w[last]` acts first.
    pub fn word(letters: &[ModularElement]) -> ModularElement {
        letters.iter().fold(ModularElement::IDENTITY, |acc, &m| acc * m)
    }

    pub fn inverse(&self) -> ModularElement {
        ModularElement {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    pub fn apply(&self, tau: Complex64) -> Result<Complex64> {
        if tau.im <= 0.0 || !tau.im.is_finite() {
            return Err(Error::DegenerateLattice(tau.im));
        }
        let den = self.a as f64 + self.b as f64 * tau;
        if den.norm() == 0.0 {
            return Err(Error::DegenerateDenominator);
        }
        Ok((self.c as f64 + self.d as f64 * tau) / den)
    }

    pub fn apply_lattice(&self, lattice: &LatticeParam) -> Result<LatticeParam> {
        LatticeParam::new(self.apply(lattice.tau())?)
    }
}

impl Mul for ModularElement {
    type Output = ModularElement;

    fn mul(self, o: ModularElement) -> ModularElement {
        ModularElement {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
        }
    }
}

pub fn apply(elem: &ModularElement, tau: Complex64) -> Result<Complex64> {
    elem.apply(tau)
}

/// Imaginary modulus produced from a real `k`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransformedModulus {
    pub lambda: Complex64,
    pub lambda_prime: Complex64,
    pub source_k: f64,
}

impl TransformedModulus {
    pub fn from_k(k: f64) -> Result<Self> {
        crate::theta::check_modulus(k)?;
        let kp = crate::theta::complementary(k);
        Ok(TransformedModulus {
            lambda: I * (k / kp),
            lambda_prime: Complex64::new(1.0 / kp, 0.0),
            source_k: k,
        })
    }

    /// `λ² + λ′² - 1`, zero up to rounding.
    pub fn residual(&self) -> Complex64 {
        self.lambda * self.lambda + self.lambda_prime * self.lambda_prime - 1.0
    }
}

/// Row of the k ↔ k′ table: `f(z; k′) = factor · image(iz; k)`.
pub fn interchange_row(f: EllipticFn) -> (Complex64, EllipticFn) {
    use EllipticFn::*;
    let one = Complex64::new(1.0, 0.0);
    match f {
        Sc => (-I, Sn),
        Nc => (one, Cn),
        Dc => (one, Dn),
        Cs => (I, Ns),
        Ds => (I, Ds),
        Ns => (I, Cs),
        Nd => (one, Cd),
        Cd => (one, Nd),
        Sd => (-I, Sd),
        Cn => (one, Nc),
        Sn => (-I, Sc),
        Dn => (one, Dc),
    }
}

/// Functions of modulus `k′` evaluated through the interchange table.
#[derive(Debug, Clone)]
pub struct Complementary {
    inner: Jacobi,
}

impl Complementary {
    pub fn new(k: f64) -> Result<Self> {
        Ok(Complementary { inner: Jacobi::new(k)? })
    }

    pub fn source(&self) -> &Jacobi {
        &self.inner
    }
}

impl EllipticEvaluator for Complementary {
    fn modulus_sq(&self) -> (Complex64, Complex64) {
        let (k2, kp2) = self.inner.modulus_sq();
        (kp2, k2)
    }

    fn periods(&self) -> QuarterPeriods {
        let p = self.inner.periods();
        QuarterPeriods {
            real: p.imaginary,
            imaginary: p.real,
        }
    }

    fn eval(&self, f: EllipticFn, z: Complex64) -> Result<Complex64> {
        let (factor, image) = interchange_row(f);
        Ok(factor * self.inner.eval(image, I * z)?)
    }

    fn pole_distance(&self, f: EllipticFn, z: Complex64) -> f64 {
        self.inner.pole_distance(interchange_row(f).1, I * z)
    }
}

pub fn kprime_value(f: EllipticFn, z: Complex64, k: f64) -> Result<Complex64> {
    Complementary::new(k)?.eval(f, z)
}

/// `sn, cn, dn` of modulus `λ = ik/k′`.
#[derive(Debug, Clone)]
pub struct Imaginary {
    inner: Jacobi,
    modulus: TransformedModulus,
    k_prime: f64,
}

impl Imaginary {
    pub fn new(k: f64) -> Result<Self> {
        let inner = Jacobi::new(k)?;
        Ok(Imaginary {
            k_prime: inner.complementary(),
            modulus: TransformedModulus::from_k(k)?,
            inner,
        })
    }

    pub fn modulus(&self) -> TransformedModulus {
        self.modulus
    }

    fn image(f: EllipticFn) -> Result<EllipticFn> {
        match f {
            EllipticFn::Sn => Ok(EllipticFn::Sd),
            EllipticFn::Cn => Ok(EllipticFn::Cd),
            EllipticFn::Dn => Ok(EllipticFn::Nd),
            other => Err(Error::UnsupportedFunction(other)),
        }
    }
}

impl EllipticEvaluator for Imaginary {
    fn modulus_sq(&self) -> (Complex64, Complex64) {
        let TransformedModulus {
            lambda, lambda_prime, ..
        } = self.modulus;
        (lambda * lambda, lambda_prime * lambda_prime)
    }

    fn periods(&self) -> QuarterPeriods {
        let p = self.inner.periods();
        QuarterPeriods {
            real: self.k_prime * p.real,
            imaginary: self.k_prime * p.imaginary,
        }
    }

    fn eval(&self, f: EllipticFn, u: Complex64) -> Result<Complex64> {
        let image = Imaginary::image(f)?;
        let v = self.inner.eval(image, u / self.k_prime)?;
        Ok(if f == EllipticFn::Sn { v * self.k_prime } else { v })
    }

    fn pole_distance(&self, f: EllipticFn, u: Complex64) -> f64 {
        match Imaginary::image(f) {
            Ok(image) => self.k_prime * self.inner.pole_distance(image, u / self.k_prime),
            Err(_) => f64::NAN,
        }
    }
}

pub fn lambda_value(f: EllipticFn, u: Complex64, k: f64) -> Result<Complex64> {
    Imaginary::new(k)?.eval(f, u)
}
