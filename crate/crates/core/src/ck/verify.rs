use std::time::Instant;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{CkType, Curvatures, Family, LimitFlag, ModulusMode, RealizationEntry};
use crate::biortho::{matrix_generators, Matrix2};
use crate::jacobi::ModulusLimit;
use crate::witt::{bracket, bracket_residual, SampleGrid, VectorField};
use crate::{Error, Result};

pub const DEFAULT_TOLERANCE: f64 = 1e-10;
pub const MATRIX_TOLERANCE: f64 = 1e-13;
pub const CASIMIR_FIELD_TOLERANCE: f64 = 1e-11;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryId {
    #[serde(rename = "type")]
    pub ck_type: CkType,
    pub family: Family,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridInfo {
    pub nx: usize,
    pub ny: usize,
    pub pole_margin: f64,
    pub points: usize,
}

impl From<&SampleGrid> for GridInfo {
    fn from(g: &SampleGrid) -> Self {
        GridInfo {
            nx: g.nx,
            ny: g.ny,
            pole_margin: g.pole_margin,
            points: g.len(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CasimirReport {
    /// `[max |Σ w f²|, max |Σ w f f′|]` over the grid.
    Field([f64; 2]),
    Matrix(MatrixCasimir),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixCasimir {
    /// Diagonal value `[re, im]` of the (expected scalar) Casimir.
    pub scalar: [f64; 2],
    pub off_diagonal: f64,
    pub diagonal_spread: f64,
    /// `max ‖[C, X]‖` over the generators.
    pub commutator: f64,
}

impl CasimirReport {
    pub fn worst(&self) -> f64 {
        match self {
            CasimirReport::Field([a, b]) => a.max(*b),
            CasimirReport::Matrix(m) => m.off_diagonal.max(m.diagonal_spread).max(m.commutator),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub entry: EntryId,
    pub modulus: f64,
    pub mode: ModulusMode,
    pub realization: String,
    pub grid: Option<GridInfo>,
    pub curvatures: Curvatures,
    /// Max residuals of `[J,P₁]`, `[J,P₂]`, `[P₁,P₂]`.
    pub residuals: [f64; 3],
    pub casimir: CasimirReport,
    pub tolerance: f64,
    pub pass: bool,
    pub seconds: f64,
}

impl VerificationReport {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyOptions {
    pub tolerance: f64,
    pub nx: usize,
    pub ny: usize,
    /// Replaces the type's normalized curvatures.
    pub curvatures: Option<Curvatures>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            tolerance: DEFAULT_TOLERANCE,
            nx: crate::witt::STANDARD_SIZE,
            ny: crate::witt::STANDARD_SIZE,
            curvatures: None,
        }
    }
}

/// Targets `(P₂, -κ₂P₁, κ₁J)` of the three brackets.
pub fn targets(fields: &[VectorField; 3], c: Curvatures) -> [VectorField; 3] {
    let (a, b) = c.bracket_coefficients();
    let r = |x: f64| Complex64::new(x, 0.0);
    [fields[2].clone(), fields[1].scale(r(a)), fields[0].scale(r(b))]
}

/// Curvatures `(γ², ω²)` as stated for the un-normalized triples.
pub fn fractional_curvatures(k: f64) -> Result<Curvatures> {
    crate::theta::check_modulus(k)?;
    let kp = crate::theta::complementary(k);
    Ok(Curvatures::new(k * k, kp * kp))
}

pub fn verify_realization(entry: &RealizationEntry, k: f64, opts: &VerifyOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let curvatures = opts.curvatures.unwrap_or_else(|| entry.ck_type.curvatures());
    let id = EntryId {
        ck_type: entry.ck_type,
        family: entry.family,
    };
    if entry.is_matrix() {
        crate::theta::check_modulus(k)?;
        let gens = matrix_generators(entry.ck_type, k)?;
        let residuals = matrix_residuals(&gens, curvatures);
        let casimir = matrix_casimir_report(&gens, curvatures);
        return Ok(VerificationReport {
            entry: id,
            modulus: k,
            mode: entry.mode,
            realization: entry.describe(),
            grid: None,
            curvatures,
            pass: residuals.iter().all(|r| *r <= opts.tolerance),
            residuals,
            casimir: CasimirReport::Matrix(casimir),
            tolerance: opts.tolerance,
            seconds: start.elapsed().as_secs_f64(),
        });
    }
    let fields = entry.vector_fields(k)?;
    let grid = entry.grid(k, opts.nx, opts.ny)?;
    let residuals = bracket_residual(&fields, &targets(&fields, curvatures), &grid)?;
    let casimir = field_casimir(&fields, curvatures, &grid)?;
    Ok(VerificationReport {
        entry: id,
        modulus: k,
        mode: entry.mode,
        realization: entry.describe(),
        grid: Some(GridInfo::from(&grid)),
        curvatures,
        pass: residuals.iter().all(|r| *r <= opts.tolerance),
        residuals,
        casimir: CasimirReport::Field(casimir),
        tolerance: opts.tolerance,
        seconds: start.elapsed().as_secs_f64(),
    })
}

/// Entrywise max residuals of the three commutators.
pub fn matrix_residuals(gens: &[Matrix2; 3], c: Curvatures) -> [f64; 3] {
    let (a, b) = c.bracket_coefficients();
    let [j, p1, p2] = gens;
    [
        (j.commutator(p1) - *p2).max_abs(),
        (j.commutator(p2) - *p1 * a).max_abs(),
        (p1.commutator(p2) - *j * b).max_abs(),
    ]
}

/// `κ₁J² + κ₂P₁² + P₂²` over the matrix generators.
pub fn casimir_of(gens: &[Matrix2; 3], c: Curvatures) -> Matrix2 {
    let w = c.casimir_weights();
    gens.iter().zip(w).fold(Matrix2::ZERO, |acc, (g, w)| acc + *g * *g * w)
}

pub fn quadratic_casimir_matrix(t: CkType, gamma: f64) -> Result<Matrix2> {
    Ok(casimir_of(&matrix_generators(t, gamma)?, t.curvatures()))
}

fn matrix_casimir_report(gens: &[Matrix2; 3], c: Curvatures) -> MatrixCasimir {
    let cas = casimir_of(gens, c);
    let d = cas.entry(0, 0);
    MatrixCasimir {
        scalar: [d.re, d.im],
        off_diagonal: cas.max_off_diagonal(),
        diagonal_spread: (cas.entry(1, 1) - d).norm(),
        commutator: gens.iter().map(|g| cas.commutator(g).max_abs()).fold(0.0, f64::max),
    }
}

/// `[max |Σ w_i f_i²|, max |Σ w_i f_i f_i′|]` over the grid.
pub fn field_casimir(fields: &[VectorField; 3], c: Curvatures, grid: &SampleGrid) -> Result<[f64; 2]> {
    if grid.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let w = c.casimir_weights();
    let mut out = [0.0f64; 2];
    for &z in &grid.points {
        let mut sq = Complex64::new(0.0, 0.0);
        let mut cross = Complex64::new(0.0, 0.0);
        for (f, w) in fields.iter().zip(w) {
            let v = f.coeff(z)?;
            sq += w * v * v;
            cross += w * v * f.deriv(z)?;
        }
        out[0] = out[0].max(sq.norm());
        out[1] = out[1].max(cross.norm());
    }
    Ok(out)
}

pub fn quadratic_casimir_field(entry: &RealizationEntry, k: f64) -> Result<[f64; 2]> {
    let fields = entry.vector_fields(k)?;
    field_casimir(&fields, entry.ck_type.curvatures(), &entry.standard_grid(k)?)
}

/// Outcome of a degenerate-limit check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LimitValue {
    Value { residuals: [f64; 3], points: usize },
    Prohibited,
}

/// Bracket residuals of the limiting triple on the limit grid; prohibited
/// limits are reported without evaluating anything.
pub fn verify_limit(entry: &RealizationEntry, which: ModulusLimit) -> Result<LimitValue> {
    if entry.limit_flag(which) != LimitFlag::Allowed {
        return Ok(LimitValue::Prohibited);
    }
    let Some(fields) = entry.limit_fields(which)? else {
        return Ok(LimitValue::Prohibited);
    };
    let refs: Vec<&VectorField> = fields.iter().collect();
    let grid = super::limit_grid(7, 5).avoiding(0.05, &refs);
    let residuals = bracket_residual(&fields, &targets(&fields, entry.ck_type.curvatures()), &grid)?;
    Ok(LimitValue::Value {
        residuals,
        points: grid.len(),
    })
}

/// Cyclic Jacobi-identity residual of a vector-field entry on its grid.
pub fn jacobi_identity(entry: &RealizationEntry, k: f64) -> Result<f64> {
    let fields = entry.vector_fields(k)?;
    crate::witt::jacobi_identity_residual(&fields, &entry.standard_grid(k)?)
}

/// Bracket field `[F, G]` of two generators of an entry, for inspection.
pub fn generator_bracket(entry: &RealizationEntry, k: f64, i: usize, j: usize) -> Result<VectorField> {
    let fields = entry.vector_fields(k)?;
    Ok(bracket(&fields[i], &fields[j]))
}

#[cfg(test)]
mod tests {
    use super::super::{catalog, find};
    use super::*;

    #[test]
    fn every_entry_verifies() {
        for e in catalog() {
            let tol = if e.is_matrix() {
                MATRIX_TOLERANCE
            } else {
                DEFAULT_TOLERANCE
            };
            let opts = VerifyOptions {
                tolerance: tol,
                ..Default::default()
            };
            let r = verify_realization(&e, 0.6, &opts).unwrap();
            assert!(r.pass, "{} {:?}", e.id(), r.residuals);
            assert!(
                r.casimir.worst() < if e.is_matrix() { 1e-13 } else { 1e-11 },
                "{} {:?}",
                e.id(),
                r.casimir
            );
        }
    }

    #[test]
    fn printed_rows_that_were_corrected_fail() {
        for e in catalog() {
            if let Some(t) = e.tabulated() {
                let r = verify_realization(&t, 0.6, &VerifyOptions::default()).unwrap();
                assert!(!r.pass && r.max_residual() > 0.1, "{}", e.id());
            }
        }
    }

    #[test]
    fn negative_control() {
        let e = find(CkType::Elliptic, Family::Base).with_negated(2);
        let r = verify_realization(&e, 0.6, &VerifyOptions::default()).unwrap();
        assert!(!r.pass && r.max_residual() >= 0.1);
    }

    #[test]
    fn matrix_casimir_at_gamma_zero() {
        let c = quadratic_casimir_matrix(CkType::Elliptic, 0.0).unwrap();
        assert!((c - Matrix2::IDENTITY * -0.75).max_abs() < 1e-15);
    }

    #[test]
    fn elliptic_nc_limit_is_hyperbolic_triple() {
        let e = find(CkType::Elliptic, Family::NcScDc);
        match verify_limit(&e, ModulusLimit::One).unwrap() {
            LimitValue::Value { residuals, points } => {
                assert!(points > 20);
                assert!(residuals.iter().all(|r| *r <= 1e-10), "{residuals:?}");
            }
            LimitValue::Prohibited => panic!("allowed limit reported prohibited"),
        }
        let ns = find(CkType::Elliptic, Family::NsCsDs);
        assert_eq!(verify_limit(&ns, ModulusLimit::Zero).unwrap(), LimitValue::Prohibited);
    }
}
