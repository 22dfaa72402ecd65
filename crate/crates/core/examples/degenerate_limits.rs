//! The trigonometric and hyperbolic limits `k → 0` and `k → 1`, the
//! realizations that survive them, and the ones that are prohibited.

use ckwitt::ck::{catalog, verify_limit, LimitValue};
use ckwitt::jacobi::{eval_limit, EllipticFn, Jacobi, ModulusLimit};
use ckwitt::Complex64;

pub fn main() -> ckwitt::Result<()> {
    let z = Complex64::new(0.8, 0.3);
    for k in [1e-1, 1e-2, 1e-3] {
        let sn = Jacobi::new(k)?.eval(EllipticFn::Sn, z)?;
        println!("k = {k:e}: |sn - sin| = {:.3e}", (sn - z.sin()).norm());
    }
    let k = 1.0 - 1e-6;
    println!(
        "k = {k}: |sn - tanh| = {:.3e}",
        (Jacobi::new(k)?.eval(EllipticFn::Sn, z)? - z.tanh()).norm()
    );
    for which in [ModulusLimit::Zero, ModulusLimit::One] {
        for f in [EllipticFn::Sn, EllipticFn::Cn, EllipticFn::Dn] {
            println!("{} {f}({z}) = {:.12}", which.label(), eval_limit(f, z, which)?);
        }
    }
    for e in catalog().iter().filter(|e| !e.is_matrix()) {
        for which in [ModulusLimit::Zero, ModulusLimit::One] {
            match verify_limit(e, which)? {
                LimitValue::Value { residuals, points } => {
                    println!(
                        "{:<30} {}: residuals {} on {points} points",
                        e.id(),
                        which.label(),
                        sci(&residuals)
                    )
                }
                LimitValue::Prohibited => println!("{:<30} {}: prohibited", e.id(), which.label()),
            }
        }
    }
    Ok(())
}

fn sci(v: &[f64]) -> String {
    v.iter().map(|x| format!("{x:.1e}")).collect::<Vec<_>>().join(", ")
}
