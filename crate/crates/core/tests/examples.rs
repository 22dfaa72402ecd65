//! Every runnable example, executed as a test.

#[path = "../examples/biorthogonal_matrices.rs"]
mod biorthogonal_matrices;
#[path = "../examples/casimirs.rs"]
mod casimirs;
#[path = "../examples/degenerate_limits.rs"]
mod degenerate_limits;
#[path = "../examples/flow_oracle.rs"]
mod flow_oracle;
#[path = "../examples/jacobi_functions.rs"]
mod jacobi_functions;
#[path = "../examples/modular_transforms.rs"]
mod modular_transforms;
#[path = "../examples/theta_nome.rs"]
mod theta_nome;
#[path = "../examples/verify_catalog.rs"]
mod verify_catalog;
#[path = "../examples/witt_brackets.rs"]
mod witt_brackets;

#[test]
fn theta_nome_runs() {
    theta_nome::main().unwrap();
}

#[test]
fn jacobi_functions_runs() {
    jacobi_functions::main().unwrap();
}

#[test]
fn modular_transforms_runs() {
    modular_transforms::main().unwrap();
}

#[test]
fn witt_brackets_runs() {
    witt_brackets::main().unwrap();
}

#[test]
fn biorthogonal_matrices_runs() {
    biorthogonal_matrices::main().unwrap();
}

#[test]
fn verify_catalog_runs() {
    verify_catalog::main().unwrap();
}

#[test]
fn casimirs_runs() {
    casimirs::main().unwrap();
}

#[test]
fn flow_oracle_runs() {
    flow_oracle::main().unwrap();
}

#[test]
fn degenerate_limits_runs() {
    degenerate_limits::main().unwrap();
}
