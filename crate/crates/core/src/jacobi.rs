//! Jacobi elliptic functions of real modulus `k ∈ (0, 1)` over complex `z`.
//!
//! With `u = z / Θ₃²(0|τ)`:
//!
//! ```text
//! sn z = Θ₃(0)/Θ₂(0) · Θ₁(u)/Θ₄(u)
//! cn z = Θ₄(0)/Θ₂(0) · Θ₂(u)/Θ₄(u)
//! dn z = Θ₄(0)/Θ₃(0) · Θ₃(u)/Θ₄(u)
//! ```
//!
//! All twelve functions at a point come from one set of theta values kept in
//! homogeneous form `(S, C, D, N)` with `sn = S/N`, `cn = C/N`, `dn = D/N`, so
//! a Glaisher quotient `pq` is just `P/Q`. Quotients whose numerator and
//! denominator share the poles at `iK′` therefore stay finite there.
//!
//! Before the series are summed `z` is reduced into the rectangle
//! `|Re z| ≤ K`, `|Im z| ≤ K′` using the half-period sign rules.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::theta::{self, LatticeParam, Theta};
use crate::{Error, Result};

/// Default radius around a pole inside which evaluation is refused.
pub const DEFAULT_POLE_RADIUS: f64 = 1e-3;

/// Numerator or denominator letter of a Glaisher symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    S,
    C,
    D,
    N,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EllipticFn {
    Sn,
    Cn,
    Dn,
    Ns,
    Nc,
    Nd,
    Sc,
    Sd,
    Cd,
    Cs,
    Ds,
    Dc,
}

impl EllipticFn {
    pub const ALL: [EllipticFn; 12] = [
        EllipticFn::Sn,
        EllipticFn::Cn,
        EllipticFn::Dn,
        EllipticFn::Ns,
        EllipticFn::Nc,
        EllipticFn::Nd,
        EllipticFn::Sc,
        EllipticFn::Sd,
        EllipticFn::Cd,
        EllipticFn::Cs,
        EllipticFn::Ds,
        EllipticFn::Dc,
    ];

    pub const BASIC: [EllipticFn; 3] = [EllipticFn::Sn, EllipticFn::Cn, EllipticFn::Dn];

    pub fn name(self) -> &'static str {
        match self {
            EllipticFn::Sn => "sn",
            EllipticFn::Cn => "cn",
            EllipticFn::Dn => "dn",
            EllipticFn::Ns => "ns",
            EllipticFn::Nc => "nc",
            EllipticFn::Nd => "nd",
            EllipticFn::Sc => "sc",
            EllipticFn::Sd => "sd",
            EllipticFn::Cd => "cd",
            EllipticFn::Cs => "cs",
            EllipticFn::Ds => "ds",
            EllipticFn::Dc => "dc",
        }
    }

    /// `(numerator, denominator)` letters of the two-letter symbol.
    pub fn letters(self) -> (Letter, Letter) {
        use Letter::*;
        match self {
            EllipticFn::Sn => (S, N),
            EllipticFn::Cn => (C, N),
            EllipticFn::Dn => (D, N),
            EllipticFn::Ns => (N, S),
            EllipticFn::Nc => (N, C),
            EllipticFn::Nd => (N, D),
            EllipticFn::Sc => (S, C),
            EllipticFn::Sd => (S, D),
            EllipticFn::Cd => (C, D),
            EllipticFn::Cs => (C, S),
            EllipticFn::Ds => (D, S),
            EllipticFn::Dc => (D, C),
        }
    }

    /// The reciprocal function (`sn ↔ ns`, `sc ↔ cs`, ...).
    pub fn reciprocal(self) -> EllipticFn {
        let (p, q) = self.letters();
        EllipticFn::from_letters(q, p).expect("reciprocal of a Glaisher symbol is one")
    }

    pub fn from_letters(num: Letter, den: Letter) -> Option<EllipticFn> {
        EllipticFn::ALL.into_iter().find(|f| f.letters() == (num, den))
    }

    /// Closed-form derivative as `coef · a · b`.
    pub fn derivative_rule(self) -> DerivativeRule {
        use EllipticFn::*;
        use RuleCoef::*;
        let (coef, a, b) = match self {
            Sn => (One, Cn, Dn),
            Cn => (MinusOne, Sn, Dn),
            Dn => (MinusK2, Sn, Cn),
            Ns => (MinusOne, Cs, Ds),
            Nc => (One, Sc, Dc),
            Nd => (K2, Sd, Cd),
            Sc => (One, Nc, Dc),
            Sd => (One, Cd, Nd),
            Cd => (MinusKp2, Sd, Nd),
            Cs => (MinusOne, Ns, Ds),
            Ds => (MinusOne, Cs, Ns),
            Dc => (Kp2, Sc, Nc),
        };
        DerivativeRule { coef, a, b }
    }
}

impl fmt::Display for EllipticFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EllipticFn {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        EllipticFn::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown elliptic function `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleCoef {
    One,
    MinusOne,
    K2,
    MinusK2,
    Kp2,
    MinusKp2,
}

impl RuleCoef {
    pub fn value(self, k2: Complex64, kp2: Complex64) -> Complex64 {
        match self {
            RuleCoef::One => Complex64::new(1.0, 0.0),
            RuleCoef::MinusOne => Complex64::new(-1.0, 0.0),
            RuleCoef::K2 => k2,
            RuleCoef::MinusK2 => -k2,
            RuleCoef::Kp2 => kp2,
            RuleCoef::MinusKp2 => -kp2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DerivativeRule {
    pub coef: RuleCoef,
    pub a: EllipticFn,
    pub b: EllipticFn,
}

/// Theta values at one point in homogeneous form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Homogeneous {
    pub s: Complex64,
    pub c: Complex64,
    pub d: Complex64,
    pub n: Complex64,
}

impl Homogeneous {
    /// From plain `(sn, cn, dn)` values.
    pub fn from_basic(sn: Complex64, cn: Complex64, dn: Complex64) -> Self {
        Homogeneous {
            s: sn,
            c: cn,
            d: dn,
            n: Complex64::new(1.0, 0.0),
        }
    }

    fn letter(&self, l: Letter) -> Complex64 {
        match l {
            Letter::S => self.s,
            Letter::C => self.c,
            Letter::D => self.d,
            Letter::N => self.n,
        }
    }

    /// `P/Q` for `f = pq`; `None` when the denominator vanishes.
    pub fn ratio(&self, f: EllipticFn) -> Option<Complex64> {
        let (p, q) = f.letters();
        let den = self.letter(q);
        if den == Complex64::new(0.0, 0.0) {
            return None;
        }
        let v = self.letter(p) / den;
        v.is_finite().then_some(v)
    }

    /// Closed-form derivative of `f` from the same point values.
    pub fn derivative(&self, f: EllipticFn, k2: Complex64, kp2: Complex64) -> Option<Complex64> {
        let rule = f.derivative_rule();
        Some(rule.coef.value(k2, kp2) * self.ratio(rule.a)? * self.ratio(rule.b)?)
    }
}

/// Real and imaginary quarter periods `K`, `K′`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuarterPeriods {
    pub real: f64,
    pub imaginary: f64,
}

pub fn quarter_periods(k: f64) -> Result<QuarterPeriods> {
    theta::check_modulus(k)?;
    Ok(QuarterPeriods {
        real: FRAC_PI_2 / theta::agm(1.0, theta::complementary(k)),
        imaginary: FRAC_PI_2 / theta::agm(1.0, k),
    })
}

/// Pole offset of `f` inside the `2K × 2iK′` lattice cell: the poles of `pq`
/// sit at the zeros of `q`, and those of `sn, cn, dn` at `iK′`.
fn pole_offset(f: EllipticFn, periods: QuarterPeriods) -> Complex64 {
    match f.letters().1 {
        Letter::N => Complex64::new(0.0, periods.imaginary),
        Letter::S => Complex64::new(0.0, 0.0),
        Letter::C => Complex64::new(periods.real, 0.0),
        Letter::D => Complex64::new(periods.real, periods.imaginary),
    }
}

/// Nearest pole of `f` to `z` for the given periods.
pub fn nearest_pole_with(f: EllipticFn, z: Complex64, periods: QuarterPeriods) -> Complex64 {
    let w = z - pole_offset(f, periods);
    let (px, py) = (2.0 * periods.real, 2.0 * periods.imaginary);
    let rx = w.re - px * (w.re / px).round();
    let ry = w.im - py * (w.im / py).round();
    z - Complex64::new(rx, ry)
}

/// Evaluator for the twelve functions at one fixed modulus.
#[derive(Debug, Clone)]
pub struct Jacobi {
    k: f64,
    k_prime: f64,
    periods: QuarterPeriods,
    lattice: LatticeParam,
    // Θ₂(0), Θ₃(0), Θ₄(0)
    nulls: [Complex64; 3],
    pole_radius: f64,
}

impl Jacobi {
    pub fn new(k: f64) -> Result<Self> {
        let periods = quarter_periods(k)?;
        let lattice = theta::tau_from_modulus(k)?;
        let zero = Complex64::new(0.0, 0.0);
        let nulls = [
            lattice.theta(Theta::Two, zero)?,
            lattice.theta(Theta::Three, zero)?,
            lattice.theta(Theta::Four, zero)?,
        ];
        Ok(Jacobi {
            k,
            k_prime: theta::complementary(k),
            periods,
            lattice,
            nulls,
            pole_radius: DEFAULT_POLE_RADIUS,
        })
    }

    pub fn with_pole_radius(mut self, radius: f64) -> Self {
        self.pole_radius = radius;
        self
    }

    pub fn modulus(&self) -> f64 {
        self.k
    }

    pub fn complementary(&self) -> f64 {
        self.k_prime
    }

    pub fn periods(&self) -> QuarterPeriods {
        self.periods
    }

    pub fn lattice(&self) -> &LatticeParam {
        &self.lattice
    }

    pub fn pole_radius(&self) -> f64 {
        self.pole_radius
    }

    /// Homogeneous theta values at `z`. Never fails near poles; a pole shows
    /// up as a vanishing component.
    pub fn homogeneous(&self, z: Complex64) -> Result<Homogeneous> {
        let QuarterPeriods { real, imaginary } = self.periods;
        let n = (z.re / (2.0 * real)).round();
        let m = (z.im / (2.0 * imaginary)).round();
        let reduced = z - Complex64::new(2.0 * real * n, 2.0 * imaginary * m);
        let flip = |odd: bool| if odd { -1.0 } else { 1.0 };
        let n_odd = (n as i64).rem_euclid(2) == 1;
        let m_odd = (m as i64).rem_euclid(2) == 1;

        let [t2, t3, t4] = self.nulls;
        let u = reduced / (t3 * t3);
        let th = |which| self.lattice.theta(which, u);
        Ok(Homogeneous {
            s: t3 / t2 * th(Theta::One)? * flip(n_odd),
            c: t4 / t2 * th(Theta::Two)? * flip(n_odd != m_odd),
            d: t4 / t3 * th(Theta::Three)? * flip(m_odd),
            n: th(Theta::Four)?,
        })
    }

    fn check_pole(&self, f: EllipticFn, z: Complex64) -> Result<()> {
        let pole = nearest_pole_with(f, z, self.periods);
        let distance = (z - pole).norm();
        if distance < self.pole_radius {
            return Err(Error::NearPole {
                function: f,
                pole,
                distance,
            });
        }
        Ok(())
    }

    fn guarded(&self, f: EllipticFn, z: Complex64, v: Option<Complex64>) -> Result<Complex64> {
        v.ok_or_else(|| {
            let pole = nearest_pole_with(f, z, self.periods);
            Error::NearPole {
                function: f,
                pole,
                distance: (z - pole).norm(),
            }
        })
    }

    pub fn eval(&self, f: EllipticFn, z: Complex64) -> Result<Complex64> {
        self.check_pole(f, z)?;
        let h = self.homogeneous(z)?;
        self.guarded(f, z, h.ratio(f))
    }

    /// `(sn, cn, dn)` at `z`.
    pub fn sn_cn_dn(&self, z: Complex64) -> Result<[Complex64; 3]> {
        self.check_pole(EllipticFn::Sn, z)?;
        let h = self.homogeneous(z)?;
        let g = |f| self.guarded(f, z, h.ratio(f));
        Ok([g(EllipticFn::Sn)?, g(EllipticFn::Cn)?, g(EllipticFn::Dn)?])
    }

    pub fn derivative(&self, f: EllipticFn, z: Complex64) -> Result<Complex64> {
        self.check_pole(f, z)?;
        let h = self.homogeneous(z)?;
        let (k2, kp2) = self.modulus_sq();
        self.guarded(f, z, h.derivative(f, k2, kp2))
    }

    pub fn modulus_sq(&self) -> (Complex64, Complex64) {
        let k2 = self.k * self.k;
        (
            Complex64::new(k2, 0.0),
            Complex64::new((1.0 - self.k) * (1.0 + self.k), 0.0),
        )
    }

    pub fn nearest_pole(&self, f: EllipticFn, z: Complex64) -> Complex64 {
        nearest_pole_with(f, z, self.periods)
    }

    pub fn pole_distance(&self, f: EllipticFn, z: Complex64) -> f64 {
        (z - self.nearest_pole(f, z)).norm()
    }
}

/// Common interface of the real-modulus evaluator and the transformed
/// (complementary and imaginary modulus) evaluators.
pub trait EllipticEvaluator: Send + Sync {
    /// `(k², k′²)` of the functions produced, possibly complex.
    fn modulus_sq(&self) -> (Complex64, Complex64);

    /// Quarter periods scaling the standard sampling rectangle.
    fn periods(&self) -> QuarterPeriods;

    fn eval(&self, f: EllipticFn, z: Complex64) -> Result<Complex64>;

    /// Closed-form derivative from the differentiation rules.
    fn derivative(&self, f: EllipticFn, z: Complex64) -> Result<Complex64> {
        let rule = f.derivative_rule();
        let (k2, kp2) = self.modulus_sq();
        Ok(rule.coef.value(k2, kp2) * self.eval(rule.a, z)? * self.eval(rule.b, z)?)
    }

    fn pole_distance(&self, f: EllipticFn, z: Complex64) -> f64;
}

impl EllipticEvaluator for Jacobi {
    fn modulus_sq(&self) -> (Complex64, Complex64) {
        Jacobi::modulus_sq(self)
    }

    fn periods(&self) -> QuarterPeriods {
        self.periods
    }

    fn eval(&self, f: EllipticFn, z: Complex64) -> Result<Complex64> {
        Jacobi::eval(self, f, z)
    }

    fn derivative(&self, f: EllipticFn, z: Complex64) -> Result<Complex64> {
        Jacobi::derivative(self, f, z)
    }

    fn pole_distance(&self, f: EllipticFn, z: Complex64) -> f64 {
        Jacobi::pole_distance(self, f, z)
    }
}

pub fn eval(f: EllipticFn, z: Complex64, k: f64) -> Result<Complex64> {
    Jacobi::new(k)?.eval(f, z)
}

pub fn eval_derivative(f: EllipticFn, z: Complex64, k: f64) -> Result<Complex64> {
    Jacobi::new(k)?.derivative(f, z)
}

/// Distance from `z` to the nearest pole of `f`. Out-of-range moduli have no
/// lattice and report `NaN`.
pub fn pole_distance(f: EllipticFn, z: Complex64, k: f64) -> f64 {
    match quarter_periods(k) {
        Ok(p) => (z - nearest_pole_with(f, z, p)).norm(),
        Err(_) => f64::NAN,
    }
}

/// Degenerate modulus limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModulusLimit {
    /// `k → 0`: circular functions.
    #[serde(rename = "k0")]
    Zero,
    /// `k → 1`: hyperbolic functions.
    #[serde(rename = "k1")]
    One,
}

impl ModulusLimit {
    pub fn modulus(self) -> f64 {
        match self {
            ModulusLimit::Zero => 0.0,
            ModulusLimit::One => 1.0,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            ModulusLimit::Zero => "k->0",
            ModulusLimit::One => "k->1",
        }
    }
}

/// Homogeneous values of the limiting functions:
/// `(sin, cos, 1, 1)` as `k → 0` and `(sinh, 1, 1, cosh)` as `k → 1`.
pub fn limit_homogeneous(z: Complex64, which: ModulusLimit) -> Homogeneous {
    let one = Complex64::new(1.0, 0.0);
    match which {
        ModulusLimit::Zero => Homogeneous {
            s: z.sin(),
            c: z.cos(),
            d: one,
            n: one,
        },
        ModulusLimit::One => Homogeneous {
            s: z.sinh(),
            c: one,
            d: one,
            n: z.cosh(),
        },
    }
}

pub fn eval_limit(f: EllipticFn, z: Complex64, which: ModulusLimit) -> Result<Complex64> {
    limit_homogeneous(z, which).ratio(f).ok_or(Error::LimitPole(f))
}

pub fn eval_limit_derivative(f: EllipticFn, z: Complex64, which: ModulusLimit) -> Result<Complex64> {
    let k2 = Complex64::new(which.modulus(), 0.0);
    let kp2 = Complex64::new(1.0 - which.modulus(), 0.0);
    limit_homogeneous(z, which)
        .derivative(f, k2, kp2)
        .ok_or(Error::LimitPole(f))
}

/// Circular frequency of the theta argument, `π / (2K)`.
pub fn argument_scale(periods: QuarterPeriods) -> f64 {
    PI / (2.0 * periods.real)
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn fd4(f: impl Fn(Complex64) -> Complex64, z: Complex64, h: f64) -> Complex64 {
        (f(z - 2.0 * h) - f(z + 2.0 * h) + (f(z + h) - f(z - h)) * 8.0) / (12.0 * h)
    }

    /// Gauss-Legendre on [a, b] split into `panels`.
    fn gauss(f: impl Fn(f64) -> f64, a: f64, b: f64, panels: usize) -> f64 {
        const X: [f64; 5] = [
            0.0,
            0.538_469_310_105_683_1,
            -0.538_469_310_105_683_1,
            0.906_179_845_938_664,
            -0.906_179_845_938_664,
        ];
        const W: [f64; 5] = [
            0.568_888_888_888_888_9,
            0.478_628_670_499_366_5,
            0.478_628_670_499_366_5,
            0.236_926_885_056_189_1,
            0.236_926_885_056_189_1,
        ];
        let h = (b - a) / panels as f64;
        (0..panels)
            .map(|p| {
                let mid = a + (p as f64 + 0.5) * h;
                X.iter().zip(W).map(|(x, w)| w * f(mid + 0.5 * h * x)).sum::<f64>() * 0.5 * h
            })
            .sum()
    }

    fn incomplete_f(phi: f64, k: f64) -> f64 {
        gauss(|t| 1.0 / (1.0 - k * k * t.sin().powi(2)).sqrt(), 0.0, phi, 400)
    }

    #[test]
    fn origin_values() {
        for k in [0.1, 0.6, 0.95] {
            let j = Jacobi::new(k).unwrap();
            let [s, cn, d] = j.sn_cn_dn(c(0.0, 0.0)).unwrap();
            assert_eq!(s, c(0.0, 0.0));
            assert!((cn - 1.0).norm() < 1e-15);
            assert!((d - 1.0).norm() < 1e-15);
        }
    }

    #[test]
    fn pythagorean_pair_and_reference_values() {
        let j = Jacobi::new(0.6).unwrap();
        let z = c(0.7, 0.4);
        let [s, cn, d] = j.sn_cn_dn(z).unwrap();
        assert!((s * s + cn * cn - 1.0).norm() < 1e-14);
        assert!((d * d + s * s * 0.36 - 1.0).norm() < 1e-14);
        // 30-digit references
        assert!((s - c(0.685970559334725566, 0.291279729944287550)).norm() < 1e-14);
        assert!((cn - c(0.820707593794068290, -0.243459815388142781)).norm() < 1e-14);
        assert!((d - c(0.931187874795951153, -0.0772468766885011290)).norm() < 1e-14);
    }

    #[test]
    fn sn_at_half_period_inverts_incomplete_integral() {
        let k = 0.8;
        let j = Jacobi::new(k).unwrap();
        let half = j.periods().real / 2.0;
        // bisection on F(phi, k) = K/2
        let (mut lo, mut hi) = (0.0, FRAC_PI_2);
        for _ in 0..80 {
            let mid = 0.5 * (lo + hi);
            if incomplete_f(mid, k) < half {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let oracle = (0.5 * (lo + hi)).sin();
        let got = j.eval(EllipticFn::Sn, c(half, 0.0)).unwrap();
        assert!((got.re - oracle).abs() < 1e-12, "{got} vs {oracle}");
        assert!((got.re - 1.0 / (1.0 + 0.6f64).sqrt()).abs() < 1e-14);
    }

    #[test]
    fn derivative_examples() {
        let j = Jacobi::new(0.7).unwrap();
        let z = c(0.5, 0.0);
        let closed = j.derivative(EllipticFn::Dn, z).unwrap();
        let [s, cn, _] = j.sn_cn_dn(z).unwrap();
        assert!((closed + s * cn * 0.49).norm() < 1e-15);
        let fd = fd4(|w| j.eval(EllipticFn::Dn, w).unwrap(), z, 1e-4);
        assert!((closed - fd).norm() < 1e-8);

        let j = Jacobi::new(0.6).unwrap();
        let z = c(1.1, 0.0);
        let closed = j.derivative(EllipticFn::Cs, z).unwrap();
        let ns = j.eval(EllipticFn::Ns, z).unwrap();
        let ds = j.eval(EllipticFn::Ds, z).unwrap();
        assert!((closed + ns * ds).norm() < 1e-14);
        let fd = fd4(|w| j.eval(EllipticFn::Cs, w).unwrap(), z, 1e-4);
        assert!((closed - fd).norm() < 1e-8);

        let sn_prime = j.derivative(EllipticFn::Sn, c(0.0, 0.0)).unwrap();
        assert!((sn_prime - 1.0).norm() < 1e-15);
    }

    #[test]
    fn quarter_period_examples() {
        let p = quarter_periods(std::f64::consts::FRAC_1_SQRT_2).unwrap();
        assert!((p.real - p.imaginary).abs() < 1e-14);
        let p = quarter_periods(1e-9).unwrap();
        assert!((p.real - FRAC_PI_2).abs() < 1e-15);
        let p = quarter_periods(0.9).unwrap();
        let oracle = gauss(|t| 1.0 / (1.0 - 0.81 * t.sin().powi(2)).sqrt(), 0.0, FRAC_PI_2, 200);
        assert!((p.real - oracle).abs() < 1e-13);
        // K(k) = K′(k′)
        let q = quarter_periods(theta::complementary(0.9)).unwrap();
        assert!((q.imaginary - p.real).abs() < 1e-14);
        assert!(quarter_periods(1.0).is_err());
    }

    #[test]
    fn quarter_periods_match_lattice() {
        let j = Jacobi::new(0.3).unwrap();
        let p = j.periods();
        assert!((j.lattice().tau().im - p.imaginary / p.real).abs() < 1e-15);
    }

    #[test]
    fn pole_distance_examples() {
        let k = 0.6;
        let p = quarter_periods(k).unwrap();
        assert_eq!(pole_distance(EllipticFn::Sn, c(0.0, p.imaginary), k), 0.0);
        assert_eq!(pole_distance(EllipticFn::Ns, c(0.0, 0.0), k), 0.0);

        // brute-force minimum over lattice translates of iK′
        let z = c(p.real, 0.0);
        let mut best = f64::INFINITY;
        for m in -4..=4 {
            for n in -4..=4 {
                let pole = c(2.0 * m as f64 * p.real, (2.0 * n as f64 + 1.0) * p.imaginary);
                best = best.min((z - pole).norm());
            }
        }
        let got = pole_distance(EllipticFn::Sn, z, k);
        assert!((got - best).abs() < 1e-15);
        assert!((got - 2.654_500_339_608_295).abs() < 1e-14);
    }

    #[test]
    fn sn_is_finite_at_k_plus_ik_prime() {
        // K + iK′ is not a pole of sn: sn = 1/k there.
        let j = Jacobi::new(0.6).unwrap();
        let p = j.periods();
        let v = j.eval(EllipticFn::Sn, c(p.real, p.imaginary)).unwrap();
        assert!((v - 1.0 / 0.6).norm() < 1e-12);
    }

    #[test]
    fn near_pole_is_rejected() {
        let j = Jacobi::new(0.6).unwrap();
        let p = j.periods();
        let err = j.eval(EllipticFn::Sn, c(1e-4, p.imaginary)).unwrap_err();
        match err {
            Error::NearPole {
                function,
                pole,
                distance,
            } => {
                assert_eq!(function, EllipticFn::Sn);
                assert!((pole - c(0.0, p.imaginary)).norm() < 1e-15);
                assert!((distance - 1e-4).abs() < 1e-12);
            }
            other => panic!("unexpected {other:?}"),
        }
        // quotients without an n share the iK′ poles and stay finite
        assert!(j.eval(EllipticFn::Sc, c(0.0, p.imaginary)).is_ok());
        assert!(j.eval(EllipticFn::Ns, c(0.0, 0.0)).is_err());
        assert!(matches!(Jacobi::new(1.2), Err(Error::ModulusOutOfRange(_))));
    }

    #[test]
    fn argument_reduction_respects_periods() {
        let j = Jacobi::new(0.6).unwrap();
        let p = j.periods();
        let z = c(0.4, 0.3);
        let [s, cn, d] = j.sn_cn_dn(z).unwrap();
        let [s2, c2, d2] = j.sn_cn_dn(z + c(2.0 * p.real, 0.0)).unwrap();
        assert!((s2 + s).norm() < 1e-13 && (c2 + cn).norm() < 1e-13 && (d2 - d).norm() < 1e-13);
        let [s3, c3, d3] = j.sn_cn_dn(z + c(0.0, 2.0 * p.imaginary)).unwrap();
        assert!((s3 - s).norm() < 1e-13 && (c3 + cn).norm() < 1e-13 && (d3 + d).norm() < 1e-13);
        let far = z + c(4.0 * p.real * 3.0, -4.0 * p.imaginary * 2.0);
        let [s4, c4, d4] = j.sn_cn_dn(far).unwrap();
        assert!((s4 - s).norm() < 1e-12 && (c4 - cn).norm() < 1e-12 && (d4 - d).norm() < 1e-12);
    }

    #[test]
    fn limit_examples() {
        let z = c(0.8, 0.3);
        assert!((eval_limit(EllipticFn::Sn, z, ModulusLimit::Zero).unwrap() - z.sin()).norm() < 1e-15);
        assert!((eval_limit(EllipticFn::Sn, z, ModulusLimit::One).unwrap() - z.tanh()).norm() < 1e-15);
        let sech = 1.0 / z.cosh();
        assert!((eval_limit(EllipticFn::Cn, z, ModulusLimit::One).unwrap() - sech).norm() < 1e-15);
        assert!((eval_limit(EllipticFn::Dn, z, ModulusLimit::One).unwrap() - sech).norm() < 1e-15);
        assert!((eval_limit(EllipticFn::Dc, z, ModulusLimit::One).unwrap() - 1.0).norm() < 1e-15);
        assert!((eval_limit(EllipticFn::Nc, z, ModulusLimit::One).unwrap() - z.cosh()).norm() < 1e-14);
        assert!((eval_limit(EllipticFn::Sc, z, ModulusLimit::One).unwrap() - z.sinh()).norm() < 1e-14);
        assert_eq!(
            eval_limit(EllipticFn::Ns, c(0.0, 0.0), ModulusLimit::Zero),
            Err(Error::LimitPole(EllipticFn::Ns))
        );
    }

    #[test]
    fn names_round_trip() {
        for f in EllipticFn::ALL {
            assert_eq!(f.name().parse::<EllipticFn>().unwrap(), f);
            assert_eq!(f.reciprocal().reciprocal(), f);
        }
        assert!("xy".parse::<EllipticFn>().is_err());
    }
}
