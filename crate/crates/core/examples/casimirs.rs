//! The three Casimir notions: pointwise on vector fields, on the 2×2
//! generators, and the intrinsic one from the adjoint representation.

use ckwitt::ck::{
    catalog, format_signature, intrinsic_casimir, quadratic_casimir_field, quadratic_casimir_matrix, signature_search,
    CkType,
};

pub fn main() -> ckwitt::Result<()> {
    for e in catalog().iter().filter(|e| !e.is_matrix()) {
        let [value, slope] = quadratic_casimir_field(e, 0.6)?;
        println!("{:<30} max |C| {value:.1e}, max |C'| {slope:.1e}", e.id());
    }
    for gamma in [0.0, 0.6] {
        for t in CkType::ALL {
            let c = quadratic_casimir_matrix(t, gamma)?;
            println!("matrix {t} at gamma = {gamma}:\n{c}");
        }
    }
    for t in CkType::ALL {
        println!("{t} (+,+,+): {:?}", intrinsic_casimir(t, [1, 1, 1]));
        let found: Vec<String> = signature_search(t)
            .into_iter()
            .map(|(s, c)| format!("{} -> {c}·I", format_signature(s)))
            .collect();
        println!("  scalar signatures: {}", found.join(", "));
    }
    Ok(())
}
