//! The generating system
//!
//! ```text
//! f₁′ + λ₁ f₂ f₃ = 0,   f₂′ + λ₂ f₁ f₃ = 0,   f₃′ + λ₃ f₂ f₁ = 0
//! ```
//!
//! with `λ₁ + λ₂ + λ₃ = 0`, its first integrals, and a fixed-step RK4
//! integrator used as an independent check on the elliptic solutions.
//!
//! For `λ = (γ², ω², -1)` the solution through `(-1/ω, 0, i/ω)` is
//! `f = (-dn/ω, i sn, i cn/ω)` at modulus `γ`, i.e. `g = (-dn, sn, -cn)`
//! under `f₁ = g₁/ω`, `f₂ = i g₂`, `f₃ = -i g₃/ω`. In `g` the first equation
//! reads `g₁′ = √((1 - g₁²)(g₁² + γ² - 1))`; the factor `g₁² - γ² + 1` found
//! in print is inconsistent with `g₁ = -dn`.

use std::io::Write;
use std::ops::{Add, Mul};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::jacobi::Jacobi;
use crate::{Error, Result, I};

pub const MIN_STEPS: usize = 16;
pub const BLOW_UP: f64 = 1e6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LambdaTriple {
    pub lambda1: f64,
    pub lambda2: f64,
    pub lambda3: f64,
}

impl LambdaTriple {
    pub fn new(lambda1: f64, lambda2: f64, lambda3: f64) -> Result<Self> {
        let l = [lambda1, lambda2, lambda3];
        if l.iter().any(|v| *v == 0.0 || !v.is_finite()) || (lambda1 + lambda2 + lambda3).abs() > 1e-14 {
            return Err(Error::InvalidLambda(l));
        }
        Ok(LambdaTriple {
            lambda1,
            lambda2,
            lambda3,
        })
    }

    /// `(γ², ω², -1)`
    pub fn from_gamma(gamma: f64) -> Result<Self> {
        let omega2 = (1.0 - gamma) * (1.0 + gamma);
        LambdaTriple::new(gamma * gamma, omega2, -1.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StateTriple {
    pub f1: Complex64,
    pub f2: Complex64,
    pub f3: Complex64,
}

impl StateTriple {
    pub fn new(f1: Complex64, f2: Complex64, f3: Complex64) -> Self {
        StateTriple { f1, f2, f3 }
    }

    pub fn from_real(f: [f64; 3]) -> Self {
        StateTriple::new(f[0].into(), f[1].into(), f[2].into())
    }

    pub fn as_array(&self) -> [Complex64; 3] {
        [self.f1, self.f2, self.f3]
    }

    pub fn max_norm(&self) -> f64 {
        self.as_array().iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn distance(&self, o: &StateTriple) -> f64 {
        (*self + *o * -1.0).max_norm()
    }
}

impl Add for StateTriple {
    type Output = StateTriple;

    fn add(self, o: StateTriple) -> StateTriple {
        StateTriple::new(self.f1 + o.f1, self.f2 + o.f2, self.f3 + o.f3)
    }
}

impl Mul<f64> for StateTriple {
    type Output = StateTriple;

    fn mul(self, s: f64) -> StateTriple {
        StateTriple::new(self.f1 * s, self.f2 * s, self.f3 * s)
    }
}

impl Mul<Complex64> for StateTriple {
    type Output = StateTriple;

    fn mul(self, s: Complex64) -> StateTriple {
        StateTriple::new(self.f1 * s, self.f2 * s, self.f3 * s)
    }
}

pub fn rhs(l: &LambdaTriple, s: &StateTriple) -> StateTriple {
    StateTriple::new(
        -l.lambda1 * s.f2 * s.f3,
        -l.lambda2 * s.f1 * s.f3,
        -l.lambda3 * s.f2 * s.f1,
    )
}

/// `(λ₁f₂² - λ₂f₁², λ₂f₃² - λ₃f₂², λ₁f₃² - λ₃f₁²)`
pub fn first_integrals(l: &LambdaTriple, s: &StateTriple) -> [Complex64; 3] {
    let (a, b, c) = (s.f1 * s.f1, s.f2 * s.f2, s.f3 * s.f3);
    [
        l.lambda1 * b - l.lambda2 * a,
        l.lambda2 * c - l.lambda3 * b,
        l.lambda1 * c - l.lambda3 * a,
    ]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Trajectory {
    pub z: Vec<f64>,
    pub states: Vec<StateTriple>,
}

impl Trajectory {
    pub fn len(&self) -> usize {
        self.z.len()
    }

    pub fn is_empty(&self) -> bool {
        self.z.is_empty()
    }

    pub fn last(&self) -> (f64, StateTriple) {
        (
            *self.z.last().expect("non-empty"),
            *self.states.last().expect("non-empty"),
        )
    }

    /// Max relative change of each first integral from its initial value.
    pub fn integral_drift(&self, l: &LambdaTriple) -> f64 {
        let start = first_integrals(l, &self.states[0]);
        self.states
            .iter()
            .flat_map(|s| {
                first_integrals(l, s)
                    .into_iter()
                    .zip(start)
                    .map(|(v, v0)| (v - v0).norm() / v0.norm().max(1e-300))
            })
            .fold(0.0, f64::max)
    }

    /// CSV with columns `z, re_f1, im_f1, re_f2, im_f2, re_f3, im_f3,
    /// integral1, integral2, integral3`; the last three are the absolute
    /// deviations of each first integral from its initial value.
    pub fn write_csv<W: Write>(&self, l: &LambdaTriple, out: W) -> Result<()> {
        let io = |e: csv::Error| Error::Family(format!("csv: {e}"));
        let mut w = csv::Writer::from_writer(out);
        w.write_record([
            "z",
            "re_f1",
            "im_f1",
            "re_f2",
            "im_f2",
            "re_f3",
            "im_f3",
            "integral1",
            "integral2",
            "integral3",
        ])
        .map_err(io)?;
        let start = first_integrals(l, &self.states[0]);
        for (z, s) in self.z.iter().zip(&self.states) {
            let dev = first_integrals(l, s);
            let mut row = vec![format!("{z:e}")];
            for v in s.as_array() {
                row.push(format!("{:e}", v.re));
                row.push(format!("{:e}", v.im));
            }
            for (v, v0) in dev.iter().zip(start) {
                row.push(format!("{:e}", (v - v0).norm()));
            }
            w.write_record(&row).map_err(io)?;
        }
        w.flush().map_err(|e| Error::Family(format!("csv: {e}")))?;
        Ok(())
    }
}

/// Classical RK4 over `[0, z_end]` with `steps` equal steps.
pub fn integrate(l: &LambdaTriple, s0: StateTriple, z_end: f64, steps: usize) -> Result<Trajectory> {
    if z_end == 0.0 {
        return Ok(Trajectory {
            z: vec![0.0],
            states: vec![s0],
        });
    }
    if steps < MIN_STEPS {
        return Err(Error::TooFewSteps {
            min: MIN_STEPS,
            got: steps,
        });
    }
    let h = z_end / steps as f64;
    let mut z = Vec::with_capacity(steps + 1);
    let mut states = Vec::with_capacity(steps + 1);
    z.push(0.0);
    states.push(s0);
    let mut s = s0;
    for n in 1..=steps {
        let k1 = rhs(l, &s);
        let k2 = rhs(l, &(s + k1 * (h / 2.0)));
        let k3 = rhs(l, &(s + k2 * (h / 2.0)));
        let k4 = rhs(l, &(s + k3 * h));
        s = s + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
        let zn = h * n as f64;
        let m = s.max_norm();
        if m.is_nan() || m > BLOW_UP {
            return Err(Error::BlowUp { z: zn, magnitude: m });
        }
        z.push(zn);
        states.push(s);
    }
    Ok(Trajectory { z, states })
}

/// `(-dn/ω, i sn, i cn/ω)` at `z` for modulus `γ`.
pub fn closed_form_state(j: &Jacobi, z: f64) -> Result<StateTriple> {
    let omega = j.complementary();
    let [s, c, d] = j.sn_cn_dn(Complex64::new(z, 0.0))?;
    Ok(StateTriple::new(-d / omega, I * s, I * c / omega))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FlowComparison {
    pub gamma: f64,
    pub z_end: f64,
    pub steps: usize,
    /// Max over the trajectory of `|numeric - closed form|`.
    pub max_deviation: f64,
    pub integral_drift: f64,
    pub endpoint_error: f64,
}

/// Integrate from the closed-form state at `0` and compare along the way.
pub fn compare_closed_form(gamma: f64, z_end: f64, steps: usize) -> Result<(FlowComparison, Trajectory)> {
    let j = Jacobi::new(gamma)?;
    let l = LambdaTriple::from_gamma(gamma)?;
    let traj = integrate(&l, closed_form_state(&j, 0.0)?, z_end, steps)?;
    let mut max_deviation = 0.0f64;
    let mut endpoint_error = 0.0;
    for (z, s) in traj.z.iter().zip(&traj.states) {
        endpoint_error = s.distance(&closed_form_state(&j, *z)?);
        max_deviation = max_deviation.max(endpoint_error);
    }
    Ok((
        FlowComparison {
            gamma,
            z_end,
            steps,
            max_deviation,
            integral_drift: traj.integral_drift(&l),
            endpoint_error,
        },
        traj,
    ))
}

/// Observed order `log₂(e(n)/e(2n))` of the endpoint error for each
/// consecutive doubling in `steps`.
pub fn convergence_orders(gamma: f64, z_end: f64, steps: &[usize]) -> Result<Vec<f64>> {
    let errors = steps
        .iter()
        .map(|&n| compare_closed_form(gamma, z_end, n).map(|(c, _)| c.endpoint_error))
        .collect::<Result<Vec<_>>>()?;
    Ok(errors.windows(2).map(|w| (w[0] / w[1]).log2()).collect())
}
