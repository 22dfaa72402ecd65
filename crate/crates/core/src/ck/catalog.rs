use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::CkType;
use crate::jacobi::{limit_homogeneous, EllipticEvaluator, EllipticFn, Jacobi, Letter, ModulusLimit, QuarterPeriods};
use crate::modular::{Complementary, Imaginary, TransformedModulus};
use crate::witt::{SampleGrid, VectorField, STANDARD_MARGIN, STANDARD_SIZE};
use crate::{Error, Result, I};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Base,
    NcScDc,
    NsCsDs,
    NdCdSd,
    Kprime,
    Lambda,
    Matrix,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Base,
        Family::NcScDc,
        Family::NsCsDs,
        Family::NdCdSd,
        Family::Kprime,
        Family::Lambda,
        Family::Matrix,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Base => "base",
            Family::NcScDc => "nc_sc_dc",
            Family::NsCsDs => "ns_cs_ds",
            Family::NdCdSd => "nd_cd_sd",
            Family::Kprime => "kprime",
            Family::Lambda => "lambda",
            Family::Matrix => "matrix",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown family `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Unit {
    One,
    MinusOne,
    I,
    MinusI,
}

impl Unit {
    pub fn value(self) -> Complex64 {
        match self {
            Unit::One => Complex64::new(1.0, 0.0),
            Unit::MinusOne => Complex64::new(-1.0, 0.0),
            Unit::I => I,
            Unit::MinusI => -I,
        }
    }

    pub fn negated(self) -> Unit {
        match self {
            Unit::One => Unit::MinusOne,
            Unit::MinusOne => Unit::One,
            Unit::I => Unit::MinusI,
            Unit::MinusI => Unit::I,
        }
    }
}

/// `unit · γ^gamma_pow · ω^omega_pow`
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Prefactor {
    pub unit: Unit,
    pub gamma_pow: i8,
    pub omega_pow: i8,
}

impl Prefactor {
    pub const fn new(unit: Unit, gamma_pow: i8, omega_pow: i8) -> Self {
        Prefactor {
            unit,
            gamma_pow,
            omega_pow,
        }
    }

    pub fn value(&self, gamma: Complex64, omega: Complex64) -> Complex64 {
        self.unit.value() * gamma.powi(self.gamma_pow as i32) * omega.powi(self.omega_pow as i32)
    }

    /// Same unit with the modulus factors removed.
    pub fn unnormalized(&self) -> Prefactor {
        Prefactor::new(self.unit, 0, 0)
    }
}

impl fmt::Display for Prefactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factor = |sym: &str, p: i8| match p {
            0 => String::new(),
            1 => sym.to_string(),
            n => format!("{sym}^{n}"),
        };
        let num: Vec<String> = [("γ", self.gamma_pow), ("ω", self.omega_pow)]
            .iter()
            .filter(|(_, p)| *p > 0)
            .map(|(s, p)| factor(s, *p))
            .collect();
        let den: Vec<String> = [("γ", self.gamma_pow), ("ω", self.omega_pow)]
            .iter()
            .filter(|(_, p)| *p < 0)
            .map(|(s, p)| factor(s, -*p))
            .collect();
        let (sign, unit) = match self.unit {
            Unit::One => ("", ""),
            Unit::MinusOne => ("-", ""),
            Unit::I => ("", "i"),
            Unit::MinusI => ("-", "i"),
        };
        let mut top = format!("{unit}{}", num.join(""));
        if top.is_empty() && !den.is_empty() {
            top = "1".into();
        }
        if den.is_empty() {
            write!(f, "{sign}{top}")
        } else {
            write!(f, "{sign}{top}/{}", den.join(""))
        }
    }
}

/// Symbolic coefficient `prefactor · function`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoeffSpec {
    pub prefactor: Prefactor,
    pub function: EllipticFn,
}

impl CoeffSpec {
    pub fn negated(&self) -> CoeffSpec {
        let mut out = *self;
        out.prefactor.unit = self.prefactor.unit.negated();
        out
    }
}

impl fmt::Display for CoeffSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.prefactor.to_string();
        match p.as_str() {
            "" => write!(f, "{}", self.function),
            "-" => write!(f, "-{}", self.function),
            _ if p.contains('/') => write!(f, "({p})·{}", self.function),
            _ => write!(f, "{p}·{}", self.function),
        }
    }
}

const fn coef(unit: Unit, gamma_pow: i8, omega_pow: i8, function: EllipticFn) -> CoeffSpec {
    CoeffSpec {
        prefactor: Prefactor::new(unit, gamma_pow, omega_pow),
        function,
    }
}

/// How the functions of an entry are evaluated from the input modulus `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModulusMode {
    /// Functions of modulus `k`; `(γ, ω) = (k, k′)`.
    Direct,
    /// Functions of modulus `k′` through the k ↔ k′ table; `(γ, ω) = (k′, k)`.
    Complementary,
    /// Functions of modulus `λ = ik/k′`; `(γ, ω) = (λ, 1/k′)`.
    Imaginary,
}

impl ModulusMode {
    /// Effective `(γ, ω)` for input modulus `k`.
    pub fn effective(self, k: f64) -> Result<(Complex64, Complex64)> {
        crate::theta::check_modulus(k)?;
        let kp = crate::theta::complementary(k);
        let r = |x: f64| Complex64::new(x, 0.0);
        Ok(match self {
            ModulusMode::Direct => (r(k), r(kp)),
            ModulusMode::Complementary => (r(kp), r(k)),
            ModulusMode::Imaginary => {
                let t = TransformedModulus::from_k(k)?;
                (t.lambda, t.lambda_prime)
            }
        })
    }

    pub fn evaluator(self, k: f64) -> Result<Arc<dyn EllipticEvaluator>> {
        Ok(match self {
            ModulusMode::Direct => Arc::new(Jacobi::new(k)?),
            ModulusMode::Complementary => Arc::new(Complementary::new(k)?),
            ModulusMode::Imaginary => Arc::new(Imaginary::new(k)?),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Provenance {
    /// As printed.
    Stated,
    /// Printed row fails its relations; `tabulated` keeps the printed form.
    Corrected { tabulated: [CoeffSpec; 3] },
    /// Not printed; obtained from another row by a transformation.
    Derived { from: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LimitFlag {
    Allowed,
    Prohibited,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RealizationEntry {
    pub ck_type: CkType,
    pub family: Family,
    /// `(J, P₁, P₂)`; `None` for matrix triples.
    pub coeffs: Option<[CoeffSpec; 3]>,
    pub mode: ModulusMode,
    pub provenance: Provenance,
    pub limit_k0: LimitFlag,
    pub limit_k1: LimitFlag,
}

impl RealizationEntry {
    pub fn id(&self) -> String {
        format!("{}/{}", self.ck_type, self.family)
    }

    pub fn is_matrix(&self) -> bool {
        self.family == Family::Matrix
    }

    pub fn limit_flag(&self, which: ModulusLimit) -> LimitFlag {
        match which {
            ModulusLimit::Zero => self.limit_k0,
            ModulusLimit::One => self.limit_k1,
        }
    }

    /// Same entry with generator `index` negated (a negative control).
    pub fn with_negated(&self, index: usize) -> RealizationEntry {
        let mut out = self.clone();
        if let Some(c) = out.coeffs.as_mut() {
            c[index] = c[index].negated();
        }
        out
    }

    /// Same entry with the printed coefficients when it was corrected.
    pub fn tabulated(&self) -> Option<RealizationEntry> {
        match &self.provenance {
            Provenance::Corrected { tabulated } => {
                let mut out = self.clone();
                out.coeffs = Some(*tabulated);
                out.provenance = Provenance::Stated;
                Some(out)
            }
            _ => None,
        }
    }

    /// Prefactors stripped to their units.
    pub fn unnormalized(&self) -> RealizationEntry {
        let mut out = self.clone();
        if let Some(c) = out.coeffs.as_mut() {
            for s in c.iter_mut() {
                s.prefactor = s.prefactor.unnormalized();
            }
        }
        out
    }

    pub fn describe(&self) -> String {
        match &self.coeffs {
            Some([a, b, c]) => format!("{{{a}, {b}, {c}}}"),
            None => "matrix triple from σ^γ".into(),
        }
    }

    /// The three vector fields at input modulus `k`.
    pub fn vector_fields(&self, k: f64) -> Result<[VectorField; 3]> {
        let coeffs = self.coeffs_or_err()?;
        let (gamma, omega) = self.mode.effective(k)?;
        let ev = self.mode.evaluator(k)?;
        Ok(coeffs.map(|s| field_for(s, gamma, omega, ev.clone())))
    }

    /// Fields of the degenerate limit, or `None` when the limit is prohibited.
    pub fn limit_fields(&self, which: ModulusLimit) -> Result<Option<[VectorField; 3]>> {
        if self.limit_flag(which) != LimitFlag::Allowed {
            return Ok(None);
        }
        let coeffs = self.coeffs_or_err()?;
        let gamma = Complex64::new(which.modulus(), 0.0);
        let omega = Complex64::new(1.0 - which.modulus(), 0.0);
        let ev: Arc<dyn EllipticEvaluator> = Arc::new(LimitEvaluator(which));
        Ok(Some(coeffs.map(|s| field_for(s, gamma, omega, ev.clone()))))
    }

    /// Standard 10×10 grid for this entry at modulus `k`, avoiding all poles
    /// of its fields by the standard margin.
    pub fn standard_grid(&self, k: f64) -> Result<SampleGrid> {
        self.grid(k, STANDARD_SIZE, STANDARD_SIZE)
    }

    pub fn grid(&self, k: f64, nx: usize, ny: usize) -> Result<SampleGrid> {
        let fields = self.vector_fields(k)?;
        let periods = self.mode.evaluator(k)?.periods();
        let refs: Vec<&VectorField> = fields.iter().collect();
        Ok(SampleGrid::standard_rectangle(periods, nx, ny).avoiding(STANDARD_MARGIN, &refs))
    }

    fn coeffs_or_err(&self) -> Result<[CoeffSpec; 3]> {
        self.coeffs
            .ok_or_else(|| Error::Family(format!("{} has no vector-field coefficients", self.id())))
    }
}

fn field_for(s: CoeffSpec, gamma: Complex64, omega: Complex64, ev: Arc<dyn EllipticEvaluator>) -> VectorField {
    let a = s.prefactor.value(gamma, omega);
    let f = s.function;
    let (e1, e2, e3) = (ev.clone(), ev.clone(), ev);
    VectorField::new(s.to_string(), move |z| Ok(a * e1.eval(f, z)?))
        .with_derivative(move |z| Ok(a * e2.derivative(f, z)?))
        .with_poles(move |z| e3.pole_distance(f, z))
}

/// Grid for the degenerate limits: `Re z ∈ [0.1, 1.3]`, `Im z ∈ [0.05, 0.75]`.
pub fn limit_grid(nx: usize, ny: usize) -> SampleGrid {
    SampleGrid::rectangle((0.1, 1.3), (0.05, 0.75), nx, ny)
}

/// Circular (`k → 0`) or hyperbolic (`k → 1`) limit functions.
#[derive(Debug, Clone, Copy)]
pub struct LimitEvaluator(pub ModulusLimit);

impl EllipticEvaluator for LimitEvaluator {
    fn modulus_sq(&self) -> (Complex64, Complex64) {
        let m = self.0.modulus();
        (Complex64::new(m, 0.0), Complex64::new(1.0 - m, 0.0))
    }

    fn periods(&self) -> QuarterPeriods {
        QuarterPeriods {
            real: std::f64::consts::FRAC_PI_2,
            imaginary: std::f64::consts::FRAC_PI_2,
        }
    }

    fn eval(&self, f: EllipticFn, z: Complex64) -> Result<Complex64> {
        crate::jacobi::eval_limit(f, z, self.0)
    }

    fn derivative(&self, f: EllipticFn, z: Complex64) -> Result<Complex64> {
        crate::jacobi::eval_limit_derivative(f, z, self.0)
    }

    fn pole_distance(&self, f: EllipticFn, z: Complex64) -> f64 {
        use std::f64::consts::{FRAC_PI_2, PI};
        // zeros of the denominator letter: sin at nπ, cos at π/2 + nπ,
        // cosh at i(π/2 + nπ), sinh at inπ
        let nearest = |x: f64, offset: f64| {
            let w = x - offset;
            (w - PI * (w / PI).round()).abs()
        };
        let den = f.letters().1;
        match (self.0, den) {
            (ModulusLimit::Zero, Letter::S) => Complex64::new(nearest(z.re, 0.0), z.im).norm(),
            (ModulusLimit::Zero, Letter::C) => Complex64::new(nearest(z.re, FRAC_PI_2), z.im).norm(),
            (ModulusLimit::One, Letter::S) => Complex64::new(z.re, nearest(z.im, 0.0)).norm(),
            (ModulusLimit::One, Letter::N) => Complex64::new(z.re, nearest(z.im, FRAC_PI_2)).norm(),
            _ => f64::INFINITY,
        }
    }
}

/// Homogeneous values used by [`LimitEvaluator`], re-exported for callers
/// that assemble limit triples by hand.
pub fn limit_values(z: Complex64, which: ModulusLimit) -> crate::jacobi::Homogeneous {
    limit_homogeneous(z, which)
}

use EllipticFn as F;
use Unit::{MinusI, MinusOne, One, I as Im};

fn base_row(t: CkType) -> [CoeffSpec; 3] {
    match t {
        CkType::Elliptic => [
            coef(MinusOne, 0, -1, F::Dn),
            coef(Im, 0, -1, F::Cn),
            coef(Im, 0, 0, F::Sn),
        ],
        CkType::Hyperbolic => [
            coef(MinusOne, 0, -1, F::Dn),
            coef(One, 0, -1, F::Cn),
            coef(One, 0, 0, F::Sn),
        ],
        CkType::CoHyperbolic => [coef(One, 0, -1, F::Cn), coef(One, 0, -1, F::Dn), coef(One, 0, 0, F::Sn)],
        CkType::DoublyHyperbolic => [
            coef(One, 0, 0, F::Sn),
            coef(MinusI, 0, -1, F::Dn),
            coef(Im, 0, -1, F::Cn),
        ],
    }
}

/// `(row, printed row if it differs)`
fn glaisher_row(t: CkType, family: Family) -> ([CoeffSpec; 3], Option<[CoeffSpec; 3]>) {
    use CkType::*;
    match (family, t) {
        (Family::NcScDc, Elliptic) => (
            [coef(Im, -1, 0, F::Dc), coef(One, -1, 0, F::Nc), coef(Im, 0, 0, F::Sc)],
            None,
        ),
        (Family::NcScDc, Hyperbolic) => (
            [
                coef(Im, -1, 0, F::Dc),
                coef(MinusOne, 0, 0, F::Sc),
                coef(MinusI, -1, 0, F::Nc),
            ],
            Some([
                coef(Im, -1, 0, F::Dc),
                coef(MinusOne, -1, 0, F::Sc),
                coef(MinusI, 0, 0, F::Nc),
            ]),
        ),
        (Family::NcScDc, CoHyperbolic) => (
            [coef(One, -1, 0, F::Dc), coef(One, -1, 0, F::Nc), coef(One, 0, 0, F::Sc)],
            None,
        ),
        (Family::NcScDc, DoublyHyperbolic) => (
            [coef(One, -1, 0, F::Dc), coef(Im, -1, 0, F::Nc), coef(Im, 0, 0, F::Sc)],
            None,
        ),
        (Family::NsCsDs, Elliptic) => (
            [coef(Im, -1, 0, F::Ns), coef(Im, 0, -1, F::Cs), coef(One, -1, -1, F::Ds)],
            None,
        ),
        (Family::NsCsDs, Hyperbolic) => (
            [
                coef(One, -1, -1, F::Ds),
                coef(One, -1, 0, F::Ns),
                coef(One, 0, -1, F::Cs),
            ],
            Some([
                coef(One, -1, -1, F::Ds),
                coef(One, -1, 0, F::Ns),
                coef(MinusI, -1, 0, F::Cs),
            ]),
        ),
        (Family::NsCsDs, CoHyperbolic) => (
            [
                coef(One, 0, -1, F::Cs),
                coef(One, -1, -1, F::Ds),
                coef(One, -1, 0, F::Ns),
            ],
            None,
        ),
        (Family::NsCsDs, DoublyHyperbolic) => (
            [
                coef(One, -1, 0, F::Ns),
                coef(One, 0, -1, F::Cs),
                coef(MinusOne, -1, -1, F::Ds),
            ],
            Some([
                coef(One, -1, 0, F::Ns),
                coef(One, 0, -1, F::Cs),
                coef(One, -1, -1, F::Ds),
            ]),
        ),
        (Family::NdCdSd, Elliptic) => (
            [
                coef(MinusOne, 0, 0, F::Nd),
                coef(Im, 0, 0, F::Cd),
                coef(Im, 0, 0, F::Sd),
            ],
            None,
        ),
        (Family::NdCdSd, Hyperbolic) => (
            [coef(One, 0, 0, F::Nd), coef(One, 0, 0, F::Sd), coef(One, 0, 0, F::Cd)],
            None,
        ),
        (Family::NdCdSd, CoHyperbolic) => (
            [
                coef(Im, 0, 0, F::Nd),
                coef(Im, 0, 0, F::Sd),
                coef(MinusOne, 0, 0, F::Cd),
            ],
            None,
        ),
        (Family::NdCdSd, DoublyHyperbolic) => (
            [coef(One, 0, 0, F::Sd), coef(MinusI, 0, 0, F::Nd), coef(Im, 0, 0, F::Cd)],
            Some([
                coef(One, 0, 0, F::Sd),
                coef(MinusOne, 0, 0, F::Nd),
                coef(One, 0, 0, F::Cd),
            ]),
        ),
        _ => unreachable!("not a Glaisher family"),
    }
}

fn limits(family: Family) -> (LimitFlag, LimitFlag) {
    use LimitFlag::*;
    match family {
        Family::Base => (Allowed, Prohibited),
        Family::NcScDc => (Prohibited, Allowed),
        Family::NsCsDs => (Prohibited, Prohibited),
        Family::NdCdSd => (Allowed, Allowed),
        Family::Kprime | Family::Lambda | Family::Matrix => (NotApplicable, NotApplicable),
    }
}

fn entry(
    ck_type: CkType,
    family: Family,
    coeffs: Option<[CoeffSpec; 3]>,
    mode: ModulusMode,
    provenance: Provenance,
) -> RealizationEntry {
    let (limit_k0, limit_k1) = limits(family);
    RealizationEntry {
        ck_type,
        family,
        coeffs,
        mode,
        provenance,
        limit_k0,
        limit_k1,
    }
}

/// All realizations in catalog order: base, the three Glaisher families,
/// the k′ and λ families, then the matrix triples; types within each family
/// in [`CkType::ALL`] order.
pub fn catalog() -> Vec<RealizationEntry> {
    let mut out = Vec::with_capacity(28);
    for t in CkType::ALL {
        out.push(entry(
            t,
            Family::Base,
            Some(base_row(t)),
            ModulusMode::Direct,
            Provenance::Stated,
        ));
    }
    for family in [Family::NcScDc, Family::NsCsDs, Family::NdCdSd] {
        for t in CkType::ALL {
            let (row, printed) = glaisher_row(t, family);
            let provenance = match printed {
                Some(tabulated) => Provenance::Corrected { tabulated },
                None => Provenance::Stated,
            };
            out.push(entry(t, family, Some(row), ModulusMode::Direct, provenance));
        }
    }
    for (family, mode, how) in [
        (Family::Kprime, ModulusMode::Complementary, "k ↔ k′ table"),
        (Family::Lambda, ModulusMode::Imaginary, "λ = ik/k′ mapping"),
    ] {
        for t in CkType::ALL {
            let provenance = if t == CkType::Elliptic {
                Provenance::Stated
            } else {
                Provenance::Derived {
                    from: format!("{t}/base via the {how}"),
                }
            };
            out.push(entry(t, family, Some(base_row(t)), mode, provenance));
        }
    }
    for t in CkType::ALL {
        out.push(entry(t, Family::Matrix, None, ModulusMode::Direct, Provenance::Stated));
    }
    out
}

pub fn find(t: CkType, family: Family) -> RealizationEntry {
    catalog()
        .into_iter()
        .find(|e| e.ck_type == t && e.family == family)
        .expect("every type appears in every family")
}
