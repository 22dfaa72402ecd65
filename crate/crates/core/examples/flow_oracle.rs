//! Integrate the quadratic ODE triplet with RK4 from the closed-form initial
//! state and compare against the Jacobi-function solution.

use ckwitt::flow::{compare_closed_form, convergence_orders, first_integrals, LambdaTriple};
use ckwitt::jacobi::quarter_periods;

pub fn main() -> ckwitt::Result<()> {
    let gamma = 0.6;
    let two_k = 2.0 * quarter_periods(gamma)?.real;
    for steps in [16, 64, 256, 2048] {
        let (c, _) = compare_closed_form(gamma, two_k, steps)?;
        println!(
            "{steps:>5} steps: max deviation {:.2e}, integral drift {:.2e}",
            c.max_deviation, c.integral_drift
        );
    }
    println!(
        "observed orders: {:.3?}",
        convergence_orders(gamma, two_k, &[32, 64, 128, 256])?
    );

    let (_, traj) = compare_closed_form(gamma, two_k, 8 * 16)?;
    let l = LambdaTriple::from_gamma(gamma)?;
    let (z, s) = traj.last();
    let show = |v: &[ckwitt::Complex64]| v.iter().map(|c| format!("{c:.10}")).collect::<Vec<_>>().join(", ");
    println!("f({z:.6}) = ({})", show(&s.as_array()));
    println!("first integrals there: ({})", show(&first_integrals(&l, &s)));
    traj.write_csv(&l, std::io::sink())?;
    Ok(())
}
