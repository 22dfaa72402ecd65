//! Modular group words acting on the lattice parameter, and the two
//! function identities they induce: the k ↔ k′ interchange and the
//! imaginary modulus ik/k′.

use ckwitt::jacobi::{EllipticEvaluator, EllipticFn, Jacobi};
use ckwitt::modular::{interchange_row, Complementary, Imaginary, ModularElement, TransformedModulus};
use ckwitt::theta::{complementary, tau_from_modulus};
use ckwitt::{Complex64, I};

pub fn main() -> ckwitt::Result<()> {
    let (p, q) = (ModularElement::P, ModularElement::Q);
    let tau = Complex64::new(0.2, 0.9);
    let word = ModularElement::word(&[q, p, q, p]);
    println!("QPQP = {:?} sends {tau} to {:.12}", word.entries(), word.apply(tau)?);
    println!(
        "Q^2 = {:?}, (PQ)^3 = {:?}",
        (q * q).entries(),
        ModularElement::word(&[p, q, p, q, p, q]).entries()
    );

    let k = 0.6;
    let kp = complementary(k);
    let lattice = tau_from_modulus(k)?;
    let swapped = q.apply_lattice(&lattice)?.modulus()?;
    println!("k = {k}: Q gives modulus {:.15} (k' = {kp:.15})", swapped.k.re);
    let shifted = p.apply_lattice(&lattice)?.modulus()?;
    let m = TransformedModulus::from_k(k)?;
    println!("P gives modulus {:.15}, ik/k' = {:.15}", shifted.k, m.lambda);

    let z = Complex64::new(0.4, 0.3);
    let table = Complementary::new(k)?;
    let direct = Jacobi::new(kp)?;
    for f in [EllipticFn::Sn, EllipticFn::Cn, EllipticFn::Dn, EllipticFn::Sc] {
        let (factor, image) = interchange_row(f);
        println!(
            "{f}(z; k') = ({factor})·{image}(iz; k): {:.15} vs direct {:.15}",
            table.eval(f, z)?,
            direct.eval(f, z)?
        );
    }

    let lam = Imaginary::new(k)?;
    let jk = Jacobi::new(k)?;
    let sd = jk.eval(EllipticFn::Sd, z)?;
    let via = lam.eval(EllipticFn::Sn, kp * z)? / kp;
    println!("sd(z; k) = {sd:.15}, sn(k'z; ik/k')/k' = {via:.15}");
    println!(
        "i·z rotates the lattice: sn(iz; k) = {:.15}",
        jk.eval(EllipticFn::Sn, I * z)?
    );
    Ok(())
}
