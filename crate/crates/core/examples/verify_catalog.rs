//! Run every catalog realization through verification and print a table,
//! including the printed table rows that had to be corrected.

use ckwitt::ck::{catalog, verify_realization, Provenance, VerifyOptions, MATRIX_TOLERANCE};

pub fn main() -> ckwitt::Result<()> {
    let k = 0.6;
    for e in catalog() {
        let opts = if e.is_matrix() {
            VerifyOptions {
                tolerance: MATRIX_TOLERANCE,
                ..Default::default()
            }
        } else {
            VerifyOptions::default()
        };
        let r = verify_realization(&e, k, &opts)?;
        let note = match &e.provenance {
            Provenance::Stated => String::new(),
            Provenance::Corrected { .. } => "corrected".into(),
            Provenance::Derived { from } => format!("derived from {from}"),
        };
        println!(
            "{:<30} {:<44} {:.2e} {} {note}",
            e.id(),
            e.describe(),
            r.max_residual(),
            if r.pass { "pass" } else { "FAIL" }
        );
        if let Some(printed) = e.tabulated() {
            let p = verify_realization(&printed, k, &VerifyOptions::default())?;
            println!(
                "{:<30} {:<44} {:.2e} as printed",
                "",
                printed.describe(),
                p.max_residual()
            );
        }
    }
    Ok(())
}
