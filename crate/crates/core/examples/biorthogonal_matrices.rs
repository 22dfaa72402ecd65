//! Bi-orthogonal vector pairs, the deformed `σ^γ` matrices built from them,
//! and the 2×2 generator triples of the four algebra types.

use ckwitt::biortho::{matrix_generators, sigma_gamma, BiorthoSystem};
use ckwitt::ck::{matrix_residuals, CkType};

pub fn main() -> ckwitt::Result<()> {
    for t in [0.0, 0.3, 0.6, 1.0, 1.4] {
        let b = BiorthoSystem::new(t)?;
        println!(
            "vartheta = {t}: gamma = {:.6}, omega = {:.6}, Gram residual {:.1e}",
            b.gamma,
            b.omega,
            b.gram_residual()
        );
    }

    let b = BiorthoSystem::new(0.6)?;
    let g = b.gamma;
    for m in 1..=3 {
        println!("sigma{m}^gamma =\n{}", sigma_gamma(m, g)?);
    }
    println!(
        "sigma1^gamma from the dyadic form differs by {:.1e}",
        (b.sigma1_dyadic() - sigma_gamma(1, g)?).max_abs()
    );

    for t in CkType::ALL {
        let gens = matrix_generators(t, g)?;
        println!(
            "{t}: commutator residuals {}",
            sci(&matrix_residuals(&gens, t.curvatures()))
        );
    }
    Ok(())
}

fn sci(v: &[f64]) -> String {
    v.iter().map(|x| format!("{x:.1e}")).collect::<Vec<_>>().join(", ")
}
