//! One-variable vector fields `f(z) d/dz` and their Lie bracket
//! `[f, g] = (f g′ - g f′) d/dz`.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::jacobi::QuarterPeriods;
use crate::{Error, Result};

pub type ComplexFn = Arc<dyn Fn(Complex64) -> Result<Complex64> + Send + Sync>;
pub type DistanceFn = Arc<dyn Fn(Complex64) -> f64 + Send + Sync>;

/// Base step of the central differences, scaled by `max(1, |z|)`.
pub const FD_STEP: f64 = 1e-4;

/// 4th-order central difference of `f` at `z` along the real direction.
pub fn numeric_derivative(f: &dyn Fn(Complex64) -> Result<Complex64>, z: Complex64) -> Result<Complex64> {
    let h = FD_STEP * z.norm().max(1.0);
    let at = |t: f64| f(z + Complex64::new(t, 0.0));
    Ok((at(-2.0 * h)? - at(2.0 * h)? + (at(h)? - at(-h)?) * 8.0) / (12.0 * h))
}

#[derive(Clone)]
pub struct VectorField {
    label: String,
    coeff: ComplexFn,
    deriv: Option<ComplexFn>,
    poles: Option<DistanceFn>,
}

impl fmt::Debug for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("VectorField")
            .field("label", &self.label)
            .field("closed_form_derivative", &self.deriv.is_some())
            .finish()
    }
}

impl VectorField {
    pub fn new(
        label: impl Into<String>,
        coeff: impl Fn(Complex64) -> Result<Complex64> + Send + Sync + 'static,
    ) -> Self {
        VectorField {
            label: label.into(),
            coeff: Arc::new(coeff),
            deriv: None,
            poles: None,
        }
    }

    pub fn with_derivative(mut self, deriv: impl Fn(Complex64) -> Result<Complex64> + Send + Sync + 'static) -> Self {
        self.deriv = Some(Arc::new(deriv));
        self
    }

    /// Attach the distance from a point to the nearest pole of the coefficient.
    pub fn with_poles(mut self, distance: impl Fn(Complex64) -> f64 + Send + Sync + 'static) -> Self {
        self.poles = Some(Arc::new(distance));
        self
    }

    pub fn constant(c: Complex64) -> Self {
        VectorField::new(format!("{c}"), move |_| Ok(c)).with_derivative(|_| Ok(Complex64::new(0.0, 0.0)))
    }

    pub fn zero() -> Self {
        VectorField::constant(Complex64::new(0.0, 0.0)).labelled("0")
    }

    /// `z d/dz`
    pub fn euler() -> Self {
        VectorField::new("z", Ok).with_derivative(|_| Ok(Complex64::new(1.0, 0.0)))
    }

    pub fn labelled(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn has_closed_form_derivative(&self) -> bool {
        self.deriv.is_some()
    }

    pub fn coeff(&self, z: Complex64) -> Result<Complex64> {
        (self.coeff)(z)
    }

    /// Closed-form derivative when attached, numeric otherwise.
    pub fn deriv(&self, z: Complex64) -> Result<Complex64> {
        match &self.deriv {
            Some(d) => d(z),
            None => self.numeric_deriv(z),
        }
    }

    pub fn numeric_deriv(&self, z: Complex64) -> Result<Complex64> {
        numeric_derivative(&*self.coeff, z)
    }

    pub fn pole_distance(&self, z: Complex64) -> f64 {
        self.poles.as_ref().map_or(f64::INFINITY, |p| p(z))
    }

    /// `a · F`
    pub fn scale(&self, a: Complex64) -> VectorField {
        let coeff = self.coeff.clone();
        let mut out = VectorField::new(format!("({a})*{}", self.label), move |z| Ok(a * coeff(z)?));
        if let Some(d) = self.deriv.clone() {
            out = out.with_derivative(move |z| Ok(a * d(z)?));
        }
        out.poles = self.poles.clone();
        out
    }

    pub fn add(&self, other: &VectorField) -> VectorField {
        let (f, g) = (self.coeff.clone(), other.coeff.clone());
        let mut out = VectorField::new(format!("{} + {}", self.label, other.label), move |z| Ok(f(z)? + g(z)?));
        if let (Some(df), Some(dg)) = (self.deriv.clone(), other.deriv.clone()) {
            out = out.with_derivative(move |z| Ok(df(z)? + dg(z)?));
        }
        out.poles = merge_poles(&self.poles, &other.poles);
        out
    }
}

fn merge_poles(a: &Option<DistanceFn>, b: &Option<DistanceFn>) -> Option<DistanceFn> {
    match (a.clone(), b.clone()) {
        (Some(p), Some(q)) => Some(Arc::new(move |z| p(z).min(q(z)))),
        (p, None) => p,
        (None, q) => q,
    }
}

/// `[F, G]`; the result carries a numeric derivative only.
pub fn bracket(f: &VectorField, g: &VectorField) -> VectorField {
    let (a, b) = (f.clone(), g.clone());
    let mut out = VectorField::new(format!("[{}, {}]", f.label, g.label), move |z| {
        Ok(a.coeff(z)? * b.deriv(z)? - b.coeff(z)? * a.deriv(z)?)
    });
    out.poles = merge_poles(&f.poles, &g.poles);
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleGrid {
    pub points: Vec<Complex64>,
    pub pole_margin: f64,
    pub description: String,
    pub nx: usize,
    pub ny: usize,
}

pub const STANDARD_RE: (f64, f64) = (0.15, 1.85);
pub const STANDARD_IM: (f64, f64) = (0.05, 0.85);
pub const STANDARD_MARGIN: f64 = 0.2;
pub const STANDARD_SIZE: usize = 10;

fn linspace(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| {
        if n == 1 {
            lo
        } else {
            lo + (hi - lo) * i as f64 / (n - 1) as f64
        }
    })
}

impl SampleGrid {
    /// `nx × ny` rectangle, endpoints included, row-major in `Im z`.
    pub fn rectangle(re: (f64, f64), im: (f64, f64), nx: usize, ny: usize) -> Self {
        let points = linspace(im.0, im.1, ny)
            .flat_map(|y| linspace(re.0, re.1, nx).map(move |x| Complex64::new(x, y)))
            .collect();
        SampleGrid {
            points,
            pole_margin: 0.0,
            description: format!(
                "Re [{:.6}, {:.6}] x Im [{:.6}, {:.6}], {nx}x{ny}",
                re.0, re.1, im.0, im.1
            ),
            nx,
            ny,
        }
    }

    /// Rectangle `[0.15, 1.85]K × [0.05, 0.85]K′`, `nx × ny` points.
    pub fn standard_rectangle(periods: QuarterPeriods, nx: usize, ny: usize) -> Self {
        let (k, kp) = (periods.real, periods.imaginary);
        SampleGrid::rectangle(
            (STANDARD_RE.0 * k, STANDARD_RE.1 * k),
            (STANDARD_IM.0 * kp, STANDARD_IM.1 * kp),
            nx,
            ny,
        )
    }

    /// Drop points closer than `margin` to a pole of any of `fields`.
    pub fn avoiding(mut self, margin: f64, fields: &[&VectorField]) -> Self {
        self.points
            .retain(|&z| fields.iter().all(|f| f.pole_distance(z) >= margin));
        self.pole_margin = margin;
        self
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Max over `grid` of `|[fields[i], fields[j]] - targets[r]|` for the pairs
/// `(0,1)`, `(0,2)`, `(1,2)`.
pub fn bracket_residual(fields: &[VectorField; 3], targets: &[VectorField; 3], grid: &SampleGrid) -> Result<[f64; 3]> {
    if grid.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let pairs = [(0, 1), (0, 2), (1, 2)];
    let mut out = [0.0f64; 3];
    for (r, &(i, j)) in pairs.iter().enumerate() {
        let b = bracket(&fields[i], &fields[j]);
        for &z in &grid.points {
            let d = (b.coeff(z)? - targets[r].coeff(z)?).norm();
            out[r] = out[r].max(d);
        }
    }
    Ok(out)
}

/// Max over `grid` of the cyclic sum `[[A,B],C] + [[B,C],A] + [[C,A],B]`.
pub fn jacobi_identity_residual(fields: &[VectorField; 3], grid: &SampleGrid) -> Result<f64> {
    if grid.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let [a, b, c] = fields;
    let terms = [
        bracket(&bracket(a, b), c),
        bracket(&bracket(b, c), a),
        bracket(&bracket(c, a), b),
    ];
    let mut worst = 0.0f64;
    for &z in &grid.points {
        let mut sum = Complex64::new(0.0, 0.0);
        for t in &terms {
            sum += t.coeff(z)?;
        }
        worst = worst.max(sum.norm());
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jacobi::{EllipticFn, Jacobi};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn numeric_derivative_examples() {
        let id = |z: Complex64| -> Result<Complex64> { Ok(z) };
        assert!((numeric_derivative(&id, c(0.3, 0.2)).unwrap() - 1.0).norm() < 1e-12);
        let sq = |z: Complex64| -> Result<Complex64> { Ok(z * z) };
        assert!((numeric_derivative(&sq, c(1.0, 1.0)).unwrap() - c(2.0, 2.0)).norm() < 1e-9);

        let j = Jacobi::new(0.7).unwrap();
        let sn = |z| j.eval(EllipticFn::Sn, z);
        let z = c(0.8, 0.0);
        let closed = j.eval(EllipticFn::Cn, z).unwrap() * j.eval(EllipticFn::Dn, z).unwrap();
        assert!((numeric_derivative(&sn, z).unwrap() - closed).norm() < 1e-7);
    }

    #[test]
    fn elementary_brackets() {
        let a = c(0.5, -1.5);
        let grid = SampleGrid::rectangle((-1.0, 1.0), (-1.0, 1.0), 5, 5);
        let k = VectorField::constant(a);
        let e = VectorField::euler();
        let b = bracket(&k, &e);
        let self_b = bracket(&e, &e);
        for &z in &grid.points {
            assert!((b.coeff(z).unwrap() - a).norm() < 1e-15);
            assert_eq!(self_b.coeff(z).unwrap(), c(0.0, 0.0));
        }
    }

    #[test]
    fn elliptic_base_bracket_at_a_point() {
        // [-dn/ω, i cn/ω] = i sn at k = 0.6
        let j = Arc::new(Jacobi::new(0.6).unwrap());
        let w = 0.8;
        let (j1, j2) = (j.clone(), j.clone());
        let (j3, j4) = (j.clone(), j.clone());
        let jf = VectorField::new("-dn/w", move |z| Ok(-j1.eval(EllipticFn::Dn, z)? / w))
            .with_derivative(move |z| Ok(-j2.derivative(EllipticFn::Dn, z)? / w));
        let p2 = VectorField::new("i cn/w", move |z| Ok(crate::I * j3.eval(EllipticFn::Cn, z)? / w))
            .with_derivative(move |z| Ok(crate::I * j4.derivative(EllipticFn::Cn, z)? / w));
        let z = c(0.5, 0.0);
        let got = bracket(&jf, &p2).coeff(z).unwrap();
        let expect = crate::I * j.eval(EllipticFn::Sn, z).unwrap();
        assert!((got - expect).norm() < 1e-10, "{got} vs {expect}");
    }

    #[test]
    fn grid_shapes() {
        let g = SampleGrid::rectangle((0.0, 1.0), (0.0, 2.0), 3, 2);
        assert_eq!(g.len(), 6);
        assert_eq!(g.points[1], c(0.5, 0.0));
        assert_eq!(g.points[5], c(1.0, 2.0));
        let far = VectorField::zero().with_poles(|z| (z - c(0.0, 0.0)).norm());
        let g = g.avoiding(0.6, &[&far]);
        assert_eq!(g.len(), 4);
        assert_eq!(g.pole_margin, 0.6);
        let empty = SampleGrid::rectangle((0.0, 1.0), (0.0, 1.0), 0, 0);
        let f = [VectorField::zero(), VectorField::zero(), VectorField::zero()];
        assert_eq!(bracket_residual(&f, &f, &empty), Err(Error::EmptyGrid));
    }
}
