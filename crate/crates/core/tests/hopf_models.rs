use qwalk_core::hopf::{solve_haar, verify_hopf, Axiom, HOPF_TOL};
use qwalk_core::models::{classical, dual, sekine, sekine_haar_weights, GroupTable, IrrepFamily, Model};
use qwalk_core::{AlgebraElement, Error, Functional, QuantumGroup, TensorElement, C64};

fn assert_hopf(q: &QuantumGroup, tol: f64) {
    let report = verify_hopf(q, tol);
    assert!(report.pass(), "{} failed:\n{report}", q.name());
}

#[test]
fn sekine_family_is_a_quantum_group() {
    for n in [1, 2, 3, 5, 7] {
        let q = sekine(n).unwrap();
        assert_eq!(q.dim(), 2 * n * n);
        assert_eq!(q.structure().num_blocks(), n * n + 1);
        assert_hopf(&q, HOPF_TOL);
    }
    assert_hopf(&sekine(3).unwrap(), 1e-12);
}

#[test]
fn classical_and_dual_groups_are_quantum_groups() {
    for n in 1..=12 {
        assert_hopf(&classical(&GroupTable::cyclic(n).unwrap()).unwrap(), HOPF_TOL);
    }
    for name in ["classical:S3", "classical:D4", "dual:S3", "dual:D4", "dual:Z6", "dual:S4", "classical:S4"] {
        let m = Model::resolve(name).unwrap();
        assert_hopf(m.quantum_group().unwrap(), HOPF_TOL);
    }
}

#[test]
fn haar_recovery_matches_displayed_weights() {
    for n in [1, 3, 5, 7] {
        let q = sekine(n).unwrap();
        let w = solve_haar(&q).unwrap();
        for (got, want) in w.weights().iter().zip(sekine_haar_weights(n)) {
            assert!((got - want).abs() < 1e-12, "n = {n}: {got} vs {want}");
        }
    }
    let q = classical(&GroupTable::symmetric(3).unwrap()).unwrap();
    for &w in solve_haar(&q).unwrap().weights() {
        assert!((w - 1.0 / 6.0).abs() < 1e-12);
    }
}

#[test]
fn dual_haar_picks_identity_coefficient() {
    let g = GroupTable::cyclic(3).unwrap();
    let d = dual(&g, Some(&IrrepFamily::cyclic(&g).unwrap())).unwrap();
    let q = d.quantum_group().unwrap();
    let h = solve_haar(q).unwrap();
    let q = q.clone().with_haar(h).unwrap();
    for s in 0..3 {
        let v = q.integrate(d.delta_element(s).unwrap()).unwrap();
        let want = if s == g.identity() { 1.0 } else { 0.0 };
        assert!((v - C64::new(want, 0.0)).norm() < 1e-12);
    }
}

#[test]
fn sekine_one_is_classical_z2() {
    let y = sekine(1).unwrap();
    let z = classical(&GroupTable::cyclic(2).unwrap()).unwrap();
    assert_eq!(y.structure().sizes(), z.structure().sizes());
    for k in 0..2 {
        let a = y.comultiply(&y.basis(k)).unwrap();
        let b = z.comultiply(&z.basis(k)).unwrap();
        assert_eq!(a.coeffs(), b.coeffs());
    }
}

#[test]
fn commutativity_and_cocommutativity() {
    let s3 = GroupTable::symmetric(3).unwrap();
    let classical_s3 = classical(&s3).unwrap();
    assert!(classical_s3.structure().is_commutative());
    assert!(classical_s3.cocommutativity_residual() > 0.5);

    let dual_s3 = Model::resolve("dual:S3").unwrap();
    assert_eq!(dual_s3.quantum_group().unwrap().cocommutativity_residual(), 0.0);

    // Y_2 is the dual of the dihedral group of order 8, not the Kac–Paljutkin algebra
    assert!(sekine(2).unwrap().cocommutativity_residual() < 1e-12);
    let y3 = sekine(3).unwrap();
    assert!(y3.cocommutativity_residual() > 0.1);
    assert!(!y3.structure().is_commutative());
}

#[test]
fn dual_comultiplication_is_grouplike_on_group_elements() {
    let m = Model::resolve("dual:S3").unwrap();
    let d = m.dual().unwrap();
    let q = m.quantum_group().unwrap();
    for s in 0..6 {
        let x = d.delta_element(s).unwrap();
        let lhs = q.comultiply(x).unwrap();
        let rhs = TensorElement::product_of(x, x).unwrap();
        assert!(lhs.distance(&rhs) < 1e-12);
    }
}

#[test]
fn unit_is_grouplike() {
    let q = sekine(4).unwrap();
    let one = q.one();
    let t = q.comultiply(&one).unwrap();
    assert!(t.distance(&TensorElement::product_of(&one, &one).unwrap()) < 1e-12);
}

#[test]
fn perturbed_delta_fails_coassociativity() {
    let q = sekine(3).unwrap();
    let broken = QuantumGroup::new(
        "broken",
        q.structure().clone(),
        q.delta().perturbed(0, 0, 0, C64::new(1e-3, 0.0)).unwrap(),
        q.counit_functional().clone(),
        q.antipode_map().clone(),
        q.haar().cloned(),
    )
    .unwrap();
    let report = verify_hopf(&broken, HOPF_TOL);
    assert!(!report.pass());
    assert!(report.residual(Axiom::Coassociativity).unwrap() >= 1e-4);
    assert!(report.failing().contains(&Axiom::Coassociativity));
}

#[test]
fn density_convolution_order_is_checked() {
    let q = sekine(3).unwrap();
    let (direct, swapped) = q.density_convolution_residuals(4, 11).unwrap();
    assert!(direct < 1e-10, "{direct}");
    assert!(swapped > 1e-3, "{swapped}");
    q.validate_density_convolution().unwrap();
}

#[test]
fn densities_of_haar_and_counit() {
    let q = sekine(3).unwrap();
    let pi = q.haar_functional().unwrap();
    assert!(q.density_of(&pi).unwrap().distance(&q.one()).unwrap() < 1e-12);

    let g = GroupTable::cyclic(5).unwrap();
    let c = classical(&g).unwrap();
    let a = c.density_of(c.counit_functional()).unwrap();
    let mut want = vec![C64::new(0.0, 0.0); 5];
    want[g.identity()] = C64::new(5.0, 0.0);
    let want = AlgebraElement::from_coeffs(c.structure(), want).unwrap();
    assert!(a.distance(&want).unwrap() < 1e-12);
}

#[test]
fn convolution_identities() {
    let q = sekine(3).unwrap();
    let pi = q.haar_functional().unwrap();
    let nu = qwalk_core::models::sekine_walk_state(&q, 3).unwrap();
    let eps = q.counit_functional();
    assert!(q.convolve(&nu, &pi).unwrap().distance(&pi).unwrap() < 1e-12);
    assert!(q.convolve(&pi, &nu).unwrap().distance(&pi).unwrap() < 1e-12);
    assert!(q.convolve(eps, &nu).unwrap().distance(&nu).unwrap() < 1e-12);
    assert!(q.convolve(&nu, eps).unwrap().distance(&nu).unwrap() < 1e-12);
}

#[test]
fn missing_haar_and_mismatches_are_errors() {
    let q = sekine(2).unwrap();
    let other = sekine(3).unwrap();
    let phi = Functional::zero(other.structure());
    assert!(matches!(q.convolve(&phi, &phi), Err(Error::StructureMismatch { .. })));
    assert!(matches!(q.comultiply(&other.one()), Err(Error::StructureMismatch { .. })));
    assert!(Model::resolve("sekine:0").is_err());
    assert!(Model::resolve("nonsense").is_err());
    assert!(Model::resolve("dual:Q8").is_err());
}

#[test]
fn snhat_five_is_bounds_only() {
    let m = Model::resolve("dual:S5").unwrap();
    assert!(m.is_bounds_only());
    assert!(m.quantum_group().is_err());
    assert!(m.irreps().is_none());
}
