use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// The four CK algebras with both curvatures non-zero, in the normalized
/// form `[J,P₁] = P₂`, `[J,P₂] = s₁P₁`, `[P₁,P₂] = s₂J`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CkType {
    Elliptic,
    DoublyHyperbolic,
    Hyperbolic,
    CoHyperbolic,
}

impl CkType {
    pub const ALL: [CkType; 4] = [
        CkType::Elliptic,
        CkType::DoublyHyperbolic,
        CkType::Hyperbolic,
        CkType::CoHyperbolic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CkType::Elliptic => "elliptic",
            CkType::DoublyHyperbolic => "doubly_hyperbolic",
            CkType::Hyperbolic => "hyperbolic",
            CkType::CoHyperbolic => "co_hyperbolic",
        }
    }

    /// `(s₁, s₂)`
    pub fn int_signs(self) -> (i64, i64) {
        match self {
            CkType::Elliptic => (-1, 1),
            CkType::DoublyHyperbolic => (1, -1),
            CkType::Hyperbolic => (-1, -1),
            CkType::CoHyperbolic => (1, 1),
        }
    }

    pub fn signs(self) -> (f64, f64) {
        let (a, b) = self.int_signs();
        (a as f64, b as f64)
    }

    /// `(κ₁, κ₂) = (s₂, -s₁)`
    pub fn curvatures(self) -> Curvatures {
        let (s1, s2) = self.signs();
        Curvatures {
            kappa1: s2,
            kappa2: -s1,
        }
    }
}

impl fmt::Display for CkType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CkType {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CkType::ALL
            .into_iter()
            .find(|t| t.name() == s || t.name().replace('_', "-") == s)
            .ok_or_else(|| format!("unknown CK type `{s}`"))
    }
}

/// Curvatures of `[J,P₁] = P₂`, `[J,P₂] = -κ₂P₁`, `[P₁,P₂] = κ₁J`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Curvatures {
    pub kappa1: f64,
    pub kappa2: f64,
}

impl Curvatures {
    pub fn new(kappa1: f64, kappa2: f64) -> Self {
        Curvatures { kappa1, kappa2 }
    }

    /// Coefficients of `[J,P₂]` and `[P₁,P₂]`.
    pub fn bracket_coefficients(&self) -> (f64, f64) {
        (-self.kappa2, self.kappa1)
    }

    /// Weights of `(J², P₁², P₂²)` in the quadratic Casimir `κ₁J² + κ₂P₁² + P₂²`.
    pub fn casimir_weights(&self) -> [f64; 3] {
        [self.kappa1, self.kappa2, 1.0]
    }
}

pub type IntMatrix = [[i64; 3]; 3];

fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let mut out = [[0; 3]; 3];
    for (r, row) in out.iter_mut().enumerate() {
        for (c, v) in row.iter_mut().enumerate() {
            *v = (0..3).map(|i| a[r][i] * b[i][c]).sum();
        }
    }
    out
}

/// Adjoint matrices of `(J, P₁, P₂)` in that basis; column `j` of `ad_X`
/// holds the coordinates of `[X, e_j]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjointRep {
    pub ad: [IntMatrix; 3],
}

impl AdjointRep {
    #[allow(clippy::needless_range_loop)]
    pub fn new(t: CkType) -> Self {
        let (s1, s2) = t.int_signs();
        // [X, Y] for basis indices, as coordinate vectors
        let mut table = [[[0i64; 3]; 3]; 3];
        table[0][1] = [0, 0, 1]; // [J,P1] = P2
        table[0][2] = [0, s1, 0]; // [J,P2] = s1 P1
        table[1][2] = [s2, 0, 0]; // [P1,P2] = s2 J
        for x in 0..3 {
            for y in 0..x {
                table[x][y] = table[y][x].map(|v| -v);
            }
        }
        let mut ad = [[[0i64; 3]; 3]; 3];
        for (x, m) in ad.iter_mut().enumerate() {
            for y in 0..3 {
                for r in 0..3 {
                    m[r][y] = table[x][y][r];
                }
            }
        }
        AdjointRep { ad }
    }

    /// Coordinates of `[e_x, e_y]`.
    pub fn bracket(&self, x: usize, y: usize) -> [i64; 3] {
        [self.ad[x][0][y], self.ad[x][1][y], self.ad[x][2][y]]
    }

    /// `Σ signature_i (ad_i)²`
    pub fn intrinsic_casimir(&self, signature: [i8; 3]) -> IntMatrix {
        let mut out = [[0; 3]; 3];
        for (s, m) in signature.iter().zip(&self.ad) {
            let sq = mat_mul(m, m);
            for r in 0..3 {
                for c in 0..3 {
                    out[r][c] += *s as i64 * sq[r][c];
                }
            }
        }
        out
    }
}

pub fn structure_constants(t: CkType) -> AdjointRep {
    AdjointRep::new(t)
}

pub fn intrinsic_casimir(t: CkType, signature: [i8; 3]) -> IntMatrix {
    AdjointRep::new(t).intrinsic_casimir(signature)
}

/// `Some(c)` when `m = c·1`.
pub fn scalar_value(m: &IntMatrix) -> Option<i64> {
    let c = m[0][0];
    let scalar = (0..3).all(|r| (0..3).all(|col| m[r][col] == if r == col { c } else { 0 }));
    scalar.then_some(c)
}

pub const SIGNATURES: [[i8; 3]; 8] = [
    [1, 1, 1],
    [1, 1, -1],
    [1, -1, 1],
    [1, -1, -1],
    [-1, 1, 1],
    [-1, 1, -1],
    [-1, -1, 1],
    [-1, -1, -1],
];

/// Sign triples whose intrinsic Casimir is a non-zero multiple of the
/// identity, with that multiple.
pub fn signature_search(t: CkType) -> Vec<([i8; 3], i64)> {
    let rep = AdjointRep::new(t);
    SIGNATURES
        .iter()
        .filter_map(|&s| match scalar_value(&rep.intrinsic_casimir(s)) {
            Some(c) if c != 0 => Some((s, c)),
            _ => None,
        })
        .collect()
}

pub fn format_signature(s: [i8; 3]) -> String {
    let c = |v: i8| if v > 0 { '+' } else { '-' };
    format!("({},{},{})", c(s[0]), c(s[1]), c(s[2]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn types_match_the_curvature_table() {
        let rows = [
            (CkType::Elliptic, (-1, 1), (1.0, 1.0)),
            (CkType::DoublyHyperbolic, (1, -1), (-1.0, -1.0)),
            (CkType::Hyperbolic, (-1, -1), (-1.0, 1.0)),
            (CkType::CoHyperbolic, (1, 1), (1.0, -1.0)),
        ];
        for (t, signs, (k1, k2)) in rows {
            assert_eq!(t.int_signs(), signs);
            assert_eq!(t.curvatures(), Curvatures::new(k1, k2));
            assert_eq!(t.name().parse::<CkType>().unwrap(), t);
        }
    }

    #[test]
    fn adjoint_examples() {
        let e = AdjointRep::new(CkType::Elliptic);
        assert_eq!(e.bracket(0, 1), [0, 0, 1]);
        assert_eq!(e.bracket(0, 2), [0, -1, 0]);
        assert_eq!(e.bracket(0, 0), [0, 0, 0]);
        let h = AdjointRep::new(CkType::Hyperbolic);
        assert_eq!(h.bracket(1, 2), [-1, 0, 0]);
        for t in CkType::ALL {
            let rep = AdjointRep::new(t);
            for m in rep.ad {
                assert_eq!(m[0][0] + m[1][1] + m[2][2], 0);
            }
            for x in 0..3 {
                for y in 0..3 {
                    assert_eq!(rep.bracket(x, y), rep.bracket(y, x).map(|v| -v));
                }
            }
        }
    }

    #[test]
    fn intrinsic_casimir_values() {
        // exact integer arithmetic
        assert_eq!(scalar_value(&intrinsic_casimir(CkType::Elliptic, [1, 1, 1])), Some(-2));
        assert_eq!(
            scalar_value(&intrinsic_casimir(CkType::Elliptic, [-1, -1, -1])),
            Some(2)
        );
        assert_eq!(
            scalar_value(&intrinsic_casimir(CkType::CoHyperbolic, [1, -1, 1])),
            Some(2)
        );
        assert_eq!(scalar_value(&intrinsic_casimir(CkType::Elliptic, [1, 1, -1])), None);
        let found = signature_search(CkType::Hyperbolic);
        assert_eq!(found, vec![([1, -1, -1], -2), ([-1, 1, 1], 2)]);
        let found = signature_search(CkType::DoublyHyperbolic);
        assert_eq!(found, vec![([1, 1, -1], 2), ([-1, -1, 1], -2)]);
    }
}
