use std::sync::LazyLock;

use proptest::prelude::*;
use qwalk_core::bounds::{bound_curve, power_state, tv_distance};
use qwalk_core::corep::fourier;
use qwalk_core::random;
use qwalk_core::{AlgebraElement, Corepresentation, Model, Norm, QuantumGroup, C64};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

static MODELS: LazyLock<Vec<Model>> = LazyLock::new(|| {
    ["sekine:3", "classical:S3", "dual:S3", "dual:D4"]
        .into_iter()
        .map(|n| Model::resolve(n).unwrap())
        .collect()
});

fn pick(i: usize) -> (&'static QuantumGroup, &'static [Corepresentation]) {
    let m = &MODELS[i % MODELS.len()];
    (m.quantum_group().unwrap(), m.irreps().unwrap())
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn rel(x: C64, y: C64) -> f64 {
    (x - y).norm() / (1.0 + x.norm().max(y.norm()))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, rng_seed: proptest::test_runner::RngSeed::Fixed(7), ..ProptestConfig::default() })]

    #[test]
    fn c_star_identity(i in 0usize..4, seed: u64) {
        let (q, _) = pick(i);
        let h = q.require_haar().unwrap();
        let a = random::element(q.structure(), &mut rng(seed));
        let lhs = (&a.star() * &a).norm(h, Norm::Infinity);
        let rhs = a.norm(h, Norm::Infinity).powi(2);
        prop_assert!((lhs - rhs).abs() <= 1e-10 * rhs.max(1.0));
    }

    #[test]
    fn haar_is_tracial_and_faithful(i in 0usize..4, seed: u64) {
        let (q, _) = pick(i);
        let h = q.require_haar().unwrap();
        let mut r = rng(seed);
        let a = random::element(q.structure(), &mut r);
        let b = random::element(q.structure(), &mut r);
        prop_assert!(rel((&a * &b).integrate(h), (&b * &a).integrate(h)) < 1e-12);
        let aa = (&a.star() * &a).integrate(h);
        prop_assert!(aa.re > 0.0 && aa.im.abs() < 1e-12 * aa.re);
    }

    #[test]
    fn holder_inequality(i in 0usize..4, seed: u64) {
        let (q, _) = pick(i);
        let h = q.require_haar().unwrap();
        let mut r = rng(seed);
        let a = random::element(q.structure(), &mut r);
        let b = random::element(q.structure(), &mut r);
        let lhs = (&a * &b).integrate(h).norm();
        prop_assert!(lhs <= a.norm(h, Norm::One) * b.norm(h, Norm::Infinity) * (1.0 + 1e-12));
        prop_assert!(lhs <= a.norm(h, Norm::Two) * b.norm(h, Norm::Two) * (1.0 + 1e-12));
    }

    #[test]
    fn convolution_is_associative(i in 0usize..4, seed: u64) {
        let (q, _) = pick(i);
        let mut r = rng(seed);
        let [x, y, z] = [0, 1, 2].map(|_| random::functional(q.structure(), &mut r));
        let left = q.convolve(&q.convolve(&x, &y).unwrap(), &z).unwrap();
        let right = q.convolve(&x, &q.convolve(&y, &z).unwrap()).unwrap();
        prop_assert!(left.distance(&right).unwrap() < 1e-10);
    }

    #[test]
    fn density_round_trip(i in 0usize..4, seed: u64) {
        let (q, _) = pick(i);
        let phi = random::functional(q.structure(), &mut rng(seed));
        let back = q.functional_of(&q.density_of(&phi).unwrap()).unwrap();
        prop_assert!(back.distance(&phi).unwrap() < 1e-10);
    }

    #[test]
    fn density_convolution_theorem(i in 0usize..4, seed: u64) {
        let (q, _) = pick(i);
        let mut r = rng(seed);
        let x = random::functional(q.structure(), &mut r);
        let y = random::functional(q.structure(), &mut r);
        let lhs = q.density_of(&q.convolve(&x, &y).unwrap()).unwrap();
        let rhs = q.convolve_densities(&q.density_of(&x).unwrap(), &q.density_of(&y).unwrap()).unwrap();
        prop_assert!(lhs.distance(&rhs).unwrap() < 1e-10 * (1.0 + lhs.max_abs()));
    }

    #[test]
    fn dual_involution(i in 0usize..4, seed: u64) {
        let (q, _) = pick(i);
        let phi = random::functional(q.structure(), &mut rng(seed));
        let twice = q.functional_star(&q.functional_star(&phi).unwrap()).unwrap();
        prop_assert!(twice.distance(&phi).unwrap() < 1e-12);
    }

    #[test]
    fn plancherel(i in 0usize..4, seed: u64) {
        let (q, _) = pick(i);
        let h = q.require_haar().unwrap();
        let phi = random::functional(q.structure(), &mut rng(seed));
        let lhs = q.dual_haar(&q.convolve(&q.functional_star(&phi).unwrap(), &phi).unwrap()).unwrap();
        let a = q.density_of(&phi).unwrap();
        let rhs = (&a.star() * &a).integrate(h);
        prop_assert!(rel(lhs, rhs) < 1e-9);
    }

    #[test]
    fn dual_haar_of_centered_state_is_nonnegative(i in 0usize..4, seed: u64) {
        let (q, _) = pick(i);
        let nu = random::state(q, &mut rng(seed)).unwrap();
        let d = nu.sub(&q.haar_functional().unwrap()).unwrap();
        let v = q.dual_haar(&q.convolve(&q.functional_star(&d).unwrap(), &d).unwrap()).unwrap();
        prop_assert!(v.im.abs() < 1e-10 && v.re >= -1e-10);
    }

    #[test]
    fn fourier_respects_the_involution(i in 0usize..4, seed: u64) {
        let (q, irreps) = pick(i);
        let phi = random::functional(q.structure(), &mut rng(seed));
        let star = q.functional_star(&phi).unwrap();
        for k in irreps {
            let lhs = fourier(&star, k).unwrap().m;
            let rhs = fourier(&phi, k).unwrap().m.adjoint();
            prop_assert!((lhs - rhs).iter().all(|z| z.norm() < 1e-12));
        }
    }

    #[test]
    fn fourier_is_multiplicative(i in 0usize..4, seed: u64) {
        let (q, irreps) = pick(i);
        let mut r = rng(seed);
        let x = random::functional(q.structure(), &mut r);
        let y = random::functional(q.structure(), &mut r);
        let xy = q.convolve(&x, &y).unwrap();
        for k in irreps {
            let lhs = fourier(&xy, k).unwrap().m;
            let rhs = fourier(&x, k).unwrap().m * fourier(&y, k).unwrap().m;
            prop_assert!((lhs - rhs).iter().all(|z| z.norm() < 1e-10));
        }
    }

    #[test]
    fn states_are_closed_under_convolution(i in 0usize..4, seed: u64) {
        let (q, _) = pick(i);
        let mut r = rng(seed);
        let x = random::state(q, &mut r).unwrap();
        let y = random::state(q, &mut r).unwrap();
        q.check_state(&q.convolve(&x, &y).unwrap(), 1e-9).unwrap();
    }

    #[test]
    fn sandwich_and_tv_monotonicity(i in 0usize..4, seed: u64) {
        let (q, irreps) = pick(i);
        let nu = random::state(q, &mut rng(seed)).unwrap();
        let curve = bound_curve(q, &nu, irreps, 12, true, "random").unwrap();
        for row in &curve.rows {
            row.check_sandwich().unwrap();
        }
        for w in curve.rows.windows(2) {
            prop_assert!(w[1].exact_tv.unwrap() <= w[0].exact_tv.unwrap() + 1e-9);
        }
        let pi = q.haar_functional().unwrap();
        let tv = tv_distance(q, &nu, &pi).unwrap();
        prop_assert!((0.0..=1.0 + 1e-12).contains(&tv));
        let nu3 = power_state(q, &nu, 3).unwrap();
        prop_assert!((tv_distance(q, &nu3, &pi).unwrap() - curve.rows[2].exact_tv.unwrap()).abs() < 1e-10);
    }

    #[test]
    fn random_projections_are_projections(i in 0usize..4, seed: u64) {
        let (q, _) = pick(i);
        let p = random::projection(q.structure(), &mut rng(seed));
        prop_assert!((&p * &p).distance(&p).unwrap() < 1e-12);
        prop_assert!(p.star().distance(&p).unwrap() < 1e-12);
    }
}

#[test]
fn unit_has_unit_norms() {
    let (q, _) = pick(0);
    let h = q.require_haar().unwrap();
    let one = AlgebraElement::one(q.structure());
    for p in [Norm::One, Norm::Two, Norm::Infinity] {
        assert!((one.norm(h, p) - 1.0).abs() < 1e-14);
    }
}
