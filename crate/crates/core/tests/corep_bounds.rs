use std::f64::consts::PI;

use nalgebra::DMatrix;
use qwalk_core::bounds::{
    bound_curve, cs_chain_check, lower_bound, nontrivial_one_dim, power_state, sampled_projection_gap, tv_distance,
    upper_bound, FourierSpectrum,
};
use qwalk_core::corep::{
    check_corep, check_unitary, conjugate, convolution_theorem_check, fourier, inversion_check, peter_weyl_check,
};
use qwalk_core::models::{
    classical, sekine, sekine_irreps, sekine_rho, sekine_walk_state, snhat_walk_state, GroupTable, Model, SnhatMode,
};
use qwalk_core::{Corepresentation, Functional, QuantumGroup, C64};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

fn sekine_setup(n: usize) -> (QuantumGroup, Vec<Corepresentation>, Functional) {
    let q = sekine(n).unwrap();
    let irreps = sekine_irreps(&q, n).unwrap();
    let nu = sekine_walk_state(&q, n).unwrap();
    (q, irreps, nu)
}

fn find<'a>(irreps: &'a [Corepresentation], name: &str) -> &'a Corepresentation {
    irreps.iter().find(|k| k.name() == name).unwrap()
}

#[test]
fn sekine_catalogue_is_complete_and_orthogonal() {
    for n in [1, 3, 5, 7] {
        let (q, irreps, _) = sekine_setup(n);
        let one_dim = irreps.iter().filter(|k| k.dim() == 1).count();
        assert_eq!(one_dim, 2 * n);
        assert_eq!(irreps.len() - one_dim, n * (n - 1) / 2);
        for k in &irreps {
            assert!(check_corep(&q, k, 1e-12).unwrap().pass(), "{}", k.name());
            assert!(check_unitary(k, 1e-12));
        }
        let report = peter_weyl_check(&q, &irreps, 1e-10).unwrap();
        assert!(report.pass(), "{report}");
        assert_eq!(report.sum_dim_squared, 2 * n * n);
    }
    assert!(sekine_irreps(&sekine(4).unwrap(), 4).is_err());
}

#[test]
fn incomplete_catalogue_is_reported() {
    let (q, mut irreps, _) = sekine_setup(3);
    irreps.pop();
    let report = peter_weyl_check(&q, &irreps, 1e-10).unwrap();
    assert!(!report.complete());
    assert!(!report.pass());
    assert!(report.to_string().contains("incomplete irrep list"));
}

#[test]
fn trivial_corep_and_conjugates() {
    let (q, irreps, _) = sekine_setup(5);
    let tau = find(&irreps, "rho0+");
    assert!(tau.is_trivial());
    assert!(conjugate(tau).entry(0, 0).distance(tau.entry(0, 0)).unwrap() < 1e-15);
    for l in 0..5i64 {
        for plus in [true, false] {
            let rho = sekine_rho(&q, 5, l, plus).unwrap();
            let neg = sekine_rho(&q, 5, -l, plus).unwrap();
            assert!(rho.star().distance(&neg).unwrap() < 1e-14);
        }
    }
    for k in &irreps {
        let cc = conjugate(&conjugate(k));
        for (a, b) in cc.entries().iter().zip(k.entries()) {
            assert!(a.distance(b).unwrap() < 1e-15);
        }
        assert!(check_corep(&q, &conjugate(k), 1e-12).unwrap().pass());
    }
}

#[test]
fn one_dim_coreps_are_grouplike() {
    let (q, irreps, _) = sekine_setup(3);
    for k in irreps.iter().filter(|k| k.dim() == 1) {
        let rho = k.entry(0, 0);
        let lhs = q.comultiply(rho).unwrap();
        let rhs = qwalk_core::TensorElement::product_of(rho, rho).unwrap();
        assert!(lhs.distance(&rhs) < 1e-13);
        assert!((&rho.star() * rho).distance(&q.one()).unwrap() < 1e-13);
    }
}

#[test]
fn fourier_transform_examples() {
    let (q, irreps, nu) = sekine_setup(5);
    let pi = q.haar_functional().unwrap();
    let tau = find(&irreps, "rho0+");
    assert!((fourier(&nu, tau).unwrap().m[(0, 0)] - c(1.0)).norm() < 1e-14);
    for k in irreps.iter().filter(|k| !k.is_trivial()) {
        assert!(fourier(&pi, k).unwrap().m.amax_complex() < 1e-14, "{}", k.name());
    }
    // ν̂(κ^{u,v}) = ¼(cos(2πu/n) + cos(2πv/n))·I₂
    for u in 0..5 {
        for v in 1..=2 {
            let m = fourier(&nu, find(&irreps, &format!("kappa{u},{v}"))).unwrap().m;
            let want = 0.25 * ((2.0 * PI * u as f64 / 5.0).cos() + (2.0 * PI * v as f64 / 5.0).cos());
            let expected = DMatrix::from_diagonal_element(2, 2, c(want));
            assert!((m - expected).amax_complex() < 1e-14, "u={u} v={v}");
        }
    }
}

trait AmaxComplex {
    fn amax_complex(&self) -> f64;
}

impl AmaxComplex for DMatrix<C64> {
    fn amax_complex(&self) -> f64 {
        self.iter().map(|x| x.norm()).fold(0.0, f64::max)
    }
}

#[test]
fn walk_values_on_one_dim_coreps() {
    for n in [3, 5, 7] {
        let (q, _, nu) = sekine_setup(n);
        for l in 0..n as i64 {
            let x = PI * l as f64 / n as f64;
            let plus = nu.apply(&sekine_rho(&q, n, l, true).unwrap()).unwrap();
            let minus = nu.apply(&sekine_rho(&q, n, l, false).unwrap()).unwrap();
            assert!((plus - c(0.5 * (x.cos().powi(2) + 1.0))).norm() < 1e-14);
            assert!((minus - c(-0.5 * x.sin().powi(2))).norm() < 1e-14);
        }
        // (ν⋆ν)(ρ) = ν(ρ)² on grouplike ρ
        let nu2 = q.convolve(&nu, &nu).unwrap();
        let rho = sekine_rho(&q, n, 1, true).unwrap();
        let v = nu.apply(&rho).unwrap();
        assert!((nu2.apply(&rho).unwrap() - v * v).norm() < 1e-14);
    }
}

#[test]
fn dual_state_transform_is_conjugate_value() {
    let walk = snhat_walk_state(3, SnhatMode::Full).unwrap();
    let u = walk.state.as_ref().unwrap();
    let coreps = walk.model.coreps().unwrap();
    for (s, k) in coreps.iter().enumerate() {
        let m = fourier(u, k).unwrap().m;
        assert!((m[(0, 0)] - walk.values[s].conj()).norm() < 1e-13);
    }
}

#[test]
fn inversion_formula() {
    let (q, irreps, _) = sekine_setup(3);
    // a_φ = ρ_kl^β gives δ_kl on both sides
    for beta in &irreps {
        for k in 0..beta.dim() {
            for l in 0..beta.dim() {
                let phi = q.functional_of(beta.entry(k, l)).unwrap();
                let (lhs, rhs) = inversion_check(&q, &phi, &irreps).unwrap();
                let want = if k == l { 1.0 } else { 0.0 };
                assert!((lhs - c(want)).norm() < 1e-12 && (rhs - c(want)).norm() < 1e-12);
            }
        }
    }
    let (lhs, rhs) = inversion_check(&q, &q.haar_functional().unwrap(), &irreps).unwrap();
    assert!((lhs - c(1.0)).norm() < 1e-12 && (rhs - c(1.0)).norm() < 1e-12);

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let phi = qwalk_core::random::functional(q.structure(), &mut rng);
        let (lhs, rhs) = inversion_check(&q, &phi, &irreps).unwrap();
        assert!((lhs - rhs).norm() < 1e-9 * (1.0 + lhs.norm()));
    }
}

#[test]
fn convolution_theorem() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for name in ["sekine:3", "classical:Z6"] {
        let m = Model::resolve(name).unwrap();
        let q = m.quantum_group().unwrap();
        let irreps = m.irreps().unwrap();
        for _ in 0..100 {
            let p1 = qwalk_core::random::functional(q.structure(), &mut rng);
            let p2 = qwalk_core::random::functional(q.structure(), &mut rng);
            for k in irreps {
                let (lhs, rhs) = convolution_theorem_check(q, &p1, &p2, k).unwrap();
                assert!((lhs - rhs).amax_complex() < 1e-10);
            }
        }
    }
    // φ₂ = π gives zero at non-trivial coreps
    let (q, irreps, nu) = sekine_setup(3);
    let pi = q.haar_functional().unwrap();
    for k in irreps.iter().filter(|k| !k.is_trivial()) {
        let (lhs, rhs) = convolution_theorem_check(&q, &nu, &pi, k).unwrap();
        assert!(lhs.amax_complex() < 1e-14 && rhs.amax_complex() < 1e-14);
    }
    // grouplike: ν(ρ_ℓ^+)² as a 1×1 matrix
    let rho = find(&irreps, "rho1+");
    let (lhs, rhs) = convolution_theorem_check(&q, &nu, &nu, rho).unwrap();
    let v = nu.apply(rho.entry(0, 0)).unwrap();
    assert!((lhs[(0, 0)] - v * v).norm() < 1e-14 && (rhs[(0, 0)] - v * v).norm() < 1e-14);
}

#[test]
fn tv_distance_examples() {
    let (q, _, nu) = sekine_setup(3);
    assert_eq!(tv_distance(&q, &nu, &nu).unwrap(), 0.0);

    for n in 2..=9 {
        let z = classical(&GroupTable::cyclic(n).unwrap()).unwrap();
        let pi = z.haar_functional().unwrap();
        let point = z.counit_functional();
        let tv = tv_distance(&z, point, &pi).unwrap();
        assert!((tv - (1.0 - 1.0 / n as f64)).abs() < 1e-12);
    }

    let pi = q.haar_functional().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let tv = tv_distance(&q, &nu, &pi).unwrap();
    let gap = sampled_projection_gap(&q, &nu, &pi, 1000, &mut rng).unwrap();
    assert!(gap <= tv + 1e-9);

    let not_a_state = nu.scale(c(2.0));
    assert!(tv_distance(&q, &not_a_state, &pi).is_err());
}

#[test]
fn convolution_powers() {
    let (q, _, nu) = sekine_setup(3);
    let pi = q.haar_functional().unwrap();
    for k in [1, 2, 7] {
        assert!(power_state(&q, &pi, k).unwrap().distance(&pi).unwrap() < 1e-12);
    }
    let nu2 = q.convolve(&nu, &nu).unwrap();
    assert!(power_state(&q, &nu, 2).unwrap().distance(&nu2).unwrap() < 1e-14);
    assert_eq!(&power_state(&q, &nu, 0).unwrap(), q.counit_functional());
    assert_eq!(power_state(&q, &nu, 1).unwrap(), nu);
    let nu5 = (0..4).fold(nu.clone(), |acc, _| q.convolve(&nu, &acc).unwrap());
    assert!(power_state(&q, &nu, 5).unwrap().distance(&nu5).unwrap() < 1e-13);
}

#[test]
fn upper_bound_examples() {
    let (q, irreps, nu) = sekine_setup(5);
    let pi = q.haar_functional().unwrap();
    assert!(upper_bound(&pi, &irreps, 3).unwrap() < 1e-28);

    // the ρ_ℓ^+ part of the sum
    let plus: Vec<_> = irreps.iter().filter(|k| k.name().ends_with('+')).cloned().collect();
    for k in [1, 4, 10] {
        let want: f64 = (1..5)
            .map(|l| 0.25 * ((((PI * l as f64 / 5.0).cos().powi(2) + 1.0) / 2.0).powi(2 * k as i32)))
            .sum();
        assert!((upper_bound(&nu, &plus, k).unwrap() - want).abs() < 1e-14);
    }

    // dual groups: ¼ Σ_{t≠e} |u(t)|^{2k}
    let walk = snhat_walk_state(4, SnhatMode::Full).unwrap();
    let coreps = walk.model.coreps().unwrap();
    let u = walk.state.as_ref().unwrap();
    let e = walk.model.group().identity();
    for k in [1, 10, 100] {
        let want: f64 = walk
            .values
            .iter()
            .enumerate()
            .filter(|&(s, _)| s != e)
            .map(|(_, v)| 0.25 * v.norm().powi(2 * k as i32))
            .sum();
        let got = upper_bound(u, &coreps, k).unwrap();
        assert!((got - want).abs() < 1e-12 * want.max(1e-300), "k={k}: {got} vs {want}");
    }
}

#[test]
fn lower_bound_examples() {
    let (q, irreps, nu) = sekine_setup(5);
    let one_dim = nontrivial_one_dim(&irreps);
    let pi = q.haar_functional().unwrap();
    assert!(lower_bound(&pi, &one_dim, 4).unwrap().value < 1e-28);
    for k in [1, 5, 25] {
        let lb = lower_bound(&nu, &one_dim, k).unwrap();
        let want = 0.5 * (((PI / 5.0).cos().powi(2) + 1.0) / 2.0).powi(k as i32);
        assert!((lb.value - want).abs() < 1e-14);
        // ρ_1^+ and ρ_4^+ tie
        assert_eq!(lb.maximizers, vec!["rho1+".to_string(), "rho4+".to_string()]);
    }
    assert!(lower_bound(&nu, &irreps, 1).is_err());

    let walk = snhat_walk_state(4, SnhatMode::Full).unwrap();
    let coreps = walk.model.coreps().unwrap();
    let t = walk.model.group().position("(3 4)").unwrap();
    let single = vec![coreps[t].clone()];
    let lb = lower_bound(walk.state.as_ref().unwrap(), &single, 7).unwrap();
    let x = qwalk_core::models::closed_form::u_transposition(4);
    assert!((lb.value - 0.5 * x.powi(7)).abs() < 1e-14);
}

#[test]
fn bound_curves_respect_the_sandwich() {
    let (q, irreps, nu) = sekine_setup(3);
    let curve = bound_curve(&q, &nu, &irreps, 60, true, "sekine-walk").unwrap();
    assert_eq!(curve.rows.len(), 60);
    let k = (9.0f64 / 5.0).ceil() as usize;
    assert!(curve.rows[k - 1].sqrt_ub <= 0.6);
    for w in curve.rows.windows(2) {
        assert!(w[1].ub_sum <= w[0].ub_sum + 1e-15);
        assert!(w[1].exact_tv.unwrap() <= w[0].exact_tv.unwrap() + 1e-9);
    }
    // k = n² sits between ½e^{−π²/2} and the bound
    let row = &curve.rows[8];
    assert!(row.exact_tv.unwrap() >= 0.5 * (-PI * PI / 2.0).exp());
    assert!(row.exact_tv.unwrap() <= row.sqrt_ub);

    let pi = q.haar_functional().unwrap();
    let flat = bound_curve(&q, &pi, &irreps, 5, true, "haar").unwrap();
    assert!(flat.rows.iter().all(|r| r.exact_tv.unwrap() < 1e-12 && r.ub_sum < 1e-28));
    assert!(bound_curve(&q, &nu, &irreps, 0, false, "x").is_err());
}

#[test]
fn cauchy_schwarz_chain() {
    let (q, irreps, nu) = sekine_setup(3);
    let pi = q.haar_functional().unwrap();
    let zero = cs_chain_check(&q, &pi, &irreps, 1).unwrap();
    assert!(zero.tv_squared < 1e-20 && zero.quarter_form.abs() < 1e-14 && zero.ub_sum < 1e-28);
    for k in 1..=20 {
        let chain = cs_chain_check(&q, &nu, &irreps, k).unwrap();
        assert!(chain.holds(1e-9), "k={k}: {chain:?}");
    }

    let m = Model::resolve("classical:Z5").unwrap();
    let z = m.quantum_group().unwrap();
    let irreps = m.irreps().unwrap();
    let mut p = vec![c(0.0); 5];
    p[1] = c(0.5);
    p[4] = c(0.5);
    let nu = Functional::from_coeffs(z.structure(), p).unwrap();
    for k in 1..=50 {
        let chain = cs_chain_check(z, &nu, irreps, k).unwrap();
        assert!(chain.holds(1e-9));
        let want: f64 = (1..5).map(|j| 0.25 * (2.0 * PI * j as f64 / 5.0).cos().powi(2 * k as i32)).sum();
        assert!((chain.quarter_form - want).abs() < 1e-12);
    }
}

#[test]
fn spectrum_from_scalars_matches_full_spectrum() {
    let full = snhat_walk_state(4, SnhatMode::Full).unwrap();
    let bounds_only = snhat_walk_state(4, SnhatMode::BoundsOnly).unwrap();
    assert!(bounds_only.state.is_none());
    let a = FourierSpectrum::new(full.state.as_ref().unwrap(), &full.model.coreps().unwrap()).unwrap();
    let b = bounds_only.spectrum().unwrap();
    for k in [1, 50, 600] {
        let (x, y) = (a.ub_sum(k), b.ub_sum(k));
        assert!((x - y).abs() <= 1e-12 * x);
    }
}
