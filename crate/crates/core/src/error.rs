use num_complex::Complex64;
use thiserror::Error;

use crate::jacobi::EllipticFn;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("lattice parameter must lie in the upper half-plane (Im tau = {0})")]
    DegenerateLattice(f64),

    #[error("theta series does not converge: |q| = {nome} exceeds the ceiling {ceiling}")]
    NomeTooLarge { nome: f64, ceiling: f64 },

    #[error("theta series did not settle within {0} terms")]
    SeriesNotConverged(usize),

    #[error("invalid theta index {0}, expected 1..=4")]
    InvalidThetaIndex(u8),

    #[error("invalid sigma index {0}, expected 1..=3")]
    InvalidSigmaIndex(u8),

    #[error("modulus {0} outside the open interval (0, 1)")]
    ModulusOutOfRange(f64),

    #[error("{function} evaluated {distance:.3e} from its pole at {pole}")]
    NearPole {
        function: EllipticFn,
        pole: Complex64,
        distance: f64,
    },

    #[error("{0} is undefined at this point of the degenerate limit")]
    LimitPole(EllipticFn),

    #[error("{0} is not available for the imaginary-modulus family")]
    UnsupportedFunction(EllipticFn),

    #[error("gamma = {0} outside the open interval (-1, 1)")]
    GammaOutOfRange(f64),

    #[error("transformation is singular at vartheta = {0} (cos vartheta = 0)")]
    SingularTransform(f64),

    #[error("ad - bc = {0}, expected 1")]
    NotUnimodular(i64),

    #[error("modular transformation has a vanishing denominator")]
    DegenerateDenominator,

    #[error("sample grid is empty")]
    EmptyGrid,

    #[error("lambda triple {0:?} must be non-zero and sum to zero")]
    InvalidLambda([f64; 3]),

    #[error("integration needs at least {min} steps, got {got}")]
    TooFewSteps { min: usize, got: usize },

    #[error("trajectory blew up at z = {z} (|f| = {magnitude:.3e})")]
    BlowUp { z: f64, magnitude: f64 },

    #[error("{0}")]
    Family(String),
}
