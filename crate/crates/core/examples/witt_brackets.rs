//! Vector fields `f(z) d/dz`, their Lie bracket, and the bracket residuals
//! of the elliptic base triple on its sample grid.

use ckwitt::ck::{find, targets, CkType, Family};
use ckwitt::witt::{bracket, bracket_residual, jacobi_identity_residual, VectorField};
use ckwitt::Complex64;

pub fn main() -> ckwitt::Result<()> {
    let z = Complex64::new(0.7, -0.2);
    let one = VectorField::constant(Complex64::new(1.0, 0.0));
    let euler = VectorField::euler();
    println!("[d/dz, z d/dz] at {z} = {}", bracket(&one, &euler).coeff(z)?);

    let k = 0.6;
    let entry = find(CkType::Elliptic, Family::Base);
    println!("elliptic base triple: {}", entry.describe());
    let fields = entry.vector_fields(k)?;
    let grid = entry.standard_grid(k)?;
    let r = bracket_residual(&fields, &targets(&fields, CkType::Elliptic.curvatures()), &grid)?;
    println!(
        "residuals of [J,P1]=P2, [J,P2]=-P1, [P1,P2]=J on {} points: {}",
        grid.len(),
        sci(&r)
    );
    println!(
        "cyclic Jacobi identity residual: {:.2e}",
        jacobi_identity_residual(&fields, &grid)?
    );

    let w = Complex64::new(0.5, 0.0);
    let jp1 = bracket(&fields[0], &fields[1]).coeff(w)?;
    println!("[J,P1] at 0.5 = {jp1:.15}, P2 at 0.5 = {:.15}", fields[2].coeff(w)?);
    Ok(())
}

fn sci(v: &[f64]) -> String {
    v.iter().map(|x| format!("{x:.1e}")).collect::<Vec<_>>().join(", ")
}
