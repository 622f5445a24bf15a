mod props;

use props::*;

#[test]
fn sesquilinear_abelian() {
    sesquilinearity(&fig8_abelian()).unwrap();
    sesquilinearity(&torus25_abelian()).unwrap();
}

#[test]
fn sesquilinear_adjoint() {
    sesquilinearity(&fig8_adjoint()).unwrap();
}

#[test]
fn sesquilinear_hermitian_i() {
    sesquilinearity(&k12a169()).unwrap();
}

#[test]
fn psi0_gram_is_skew_hermitian() {
    skew_hermitian(&fig8_abelian()).unwrap();
    skew_hermitian(&torus25_abelian()).unwrap();
}

#[test]
fn trace_of_bar() {
    for ring in trace_rings() {
        trace_bar(&ring).unwrap();
    }
}

#[test]
fn lambda_is_additive() {
    lambda_additivity().unwrap();
}

#[test]
fn lambda_is_unitarily_invariant() {
    lambda_unitary_invariance().unwrap();
}

#[test]
fn trefoil_pd_and_torus_agree() {
    diagram_independence().unwrap();
}

#[test]
fn phi_psi_cocycle_exhaustive() {
    cocycle_exhaustive().unwrap();
}

#[test]
fn double_delta_exhaustive_f7_squared() {
    double_delta_exhaustive().unwrap();
}
