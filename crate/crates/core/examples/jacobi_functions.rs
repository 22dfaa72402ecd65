//! All twelve Jacobi functions and their derivatives at one point, the
//! quarter periods, and what happens next to a pole.

use ckwitt::jacobi::{EllipticFn, Jacobi};
use ckwitt::Complex64;

pub fn main() -> ckwitt::Result<()> {
    let j = Jacobi::new(0.6)?;
    let p = j.periods();
    println!("k = 0.6, K = {:.15}, K' = {:.15}", p.real, p.imaginary);

    let z = Complex64::new(0.5, 0.25);
    println!("{:>3}  {:>42}  {:>42}", "fn", "value", "derivative");
    for f in EllipticFn::ALL {
        println!("{f:>3}  {:>42.15}  {:>42.15}", j.eval(f, z)?, j.derivative(f, z)?);
    }

    let [s, c, d] = j.sn_cn_dn(z)?;
    println!("sn^2 + cn^2 - 1 = {:.1e}", (s * s + c * c - 1.0).norm());
    println!("dn^2 + k^2 sn^2 - 1 = {:.1e}", (d * d + 0.36 * s * s - 1.0).norm());

    let near = Complex64::new(1e-4, 0.0);
    match j.eval(EllipticFn::Ns, near) {
        Ok(v) => println!("ns({near}) = {v}"),
        Err(e) => println!("ns({near}): {e}"),
    }
    let w = Complex64::new(0.0, 0.0);
    println!(
        "nearest pole of sn to 0 is {}, at distance {:.15}",
        j.nearest_pole(EllipticFn::Sn, w),
        j.pole_distance(EllipticFn::Sn, w)
    );
    Ok(())
}
