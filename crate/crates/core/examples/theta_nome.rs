//! Theta series at a lattice parameter, the modulus they define, and the
//! round trip back from a real modulus through the AGM.

use ckwitt::theta::{complete_k, modulus_from_tau, tau_from_modulus, theta, LatticeParam, Theta};
use ckwitt::Complex64;

pub fn main() -> ckwitt::Result<()> {
    let tau = Complex64::new(0.1, 1.2);
    let lattice = LatticeParam::new(tau)?;
    println!("tau = {tau}, q = {:.15}", lattice.nome());
    let u = Complex64::new(0.3, 0.1);
    for which in Theta::ALL {
        println!("theta{}({u}) = {:.15}", which.index(), theta(which, u, tau)?);
    }
    let m = modulus_from_tau(tau)?;
    println!(
        "k = {:.15}, k' = {:.15}, k^2 + k'^2 - 1 = {:.1e}",
        m.k,
        m.k_prime,
        (m.k * m.k + m.k_prime * m.k_prime - 1.0).norm()
    );

    for k in [0.3, 0.6, 0.9] {
        let back = tau_from_modulus(k)?;
        let recovered = back.modulus()?.k;
        println!(
            "k = {k}: K = {:.15}, tau = {:.15}, k from theta nulls = {:.15}",
            complete_k(k)?,
            back.tau(),
            recovered.re
        );
    }
    Ok(())
}
