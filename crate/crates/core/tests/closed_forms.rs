use qwalk_core::models::closed_form::*;
use qwalk_core::models::{cycle_label, permutations, snhat_walk_state, snhat_xi, GroupTable, SnhatMode};

fn is_transposition(p: &[usize]) -> bool {
    p.iter().enumerate().filter(|&(i, &s)| i != s).count() == 2
}

#[test]
fn f1_is_dominated_for_n_at_least_four() {
    for n in 4..=50 {
        assert!(f1(n) <= 2.0 * f0(n) / (n as f64).sqrt(), "n = {n}");
    }
}

#[test]
fn inequality_lemmas_on_finite_range() {
    for n in 3..=50 {
        for (name, f) in [("A_n", a_n as fn(usize) -> f64), ("g(n)", g_n)] {
            let (x, y) = (f(n), f(n + 1));
            assert!(x > 0.0 && x < 1.0, "{name}({n}) = {x}");
            if n < 50 {
                assert!(y > x, "{name} not increasing at n = {n}");
            }
        }
        assert!(b_n(n) >= 1.0 && ln_b_n_excess(n).is_finite());
        if n < 50 {
            assert!(ln_b_n_excess(n + 1) < ln_b_n_excess(n), "B_n not decreasing at n = {n}");
        }
    }
    for n in 3..=8 {
        let nf = n as f64;
        let nn = nf.powi(n as i32);
        let direct = (nf * nf + nn - 1.0) * nn / ((nn - 1.0) * (nn - 1.0)) - 1.0;
        assert!((ln_b_n_excess(n) - direct.ln()).abs() < 1e-9);
        assert!((b_n(n) - 1.0 - direct).abs() < 1e-12);
    }
    assert!(h_n(5) < 1.0);
    assert!((h_n(5) - 0.056).abs() < 5e-4);
}

#[test]
fn brute_force_maximisers_of_s() {
    for n in 3..=5 {
        let perms = permutations(n);
        let id: Vec<usize> = (0..n).collect();
        let non_id: Vec<_> = perms.iter().filter(|p| **p != id).collect();

        let best = non_id.iter().map(|p| s_of(n, p)).fold(f64::MIN, f64::max);
        let best_transposition = non_id
            .iter()
            .filter(|p| is_transposition(p))
            .map(|p| s_of(n, p))
            .fold(f64::MIN, f64::max);
        assert_eq!(best, best_transposition);
        assert!((best - f0(n)).abs() < 1e-15);
        let argmax: Vec<_> = non_id.iter().filter(|p| s_of(n, p) == best).map(|p| cycle_label(p)).collect();
        assert_eq!(argmax, vec![format!("({} {})", n - 1, n)]);

        // F_1: σ(1) = 1; F_1^C: σ(1) ≠ 1
        let f1_max = non_id.iter().filter(|p| p[0] == 0).map(|p| s_of(n, p)).fold(f64::MIN, f64::max);
        let f1c: Vec<_> = non_id.iter().filter(|p| p[0] != 0).collect();
        let f1c_max = f1c.iter().map(|p| s_of(n, p)).fold(f64::MIN, f64::max);
        assert!((f1_max - f0(n)).abs() < 1e-15);
        assert!((f1c_max - f1(n)).abs() < 1e-15);
        let f1c_arg: Vec<_> = f1c.iter().filter(|p| s_of(n, p) == f1c_max).map(|p| cycle_label(p)).collect();
        assert_eq!(f1c_arg, vec!["(1 2)".to_string()]);
        assert!(non_id.iter().all(|p| s_of(n, p) < s_of(n, &id)));
    }
}

#[test]
fn walk_state_is_normalised_multiple_of_s() {
    for n in 2..=5 {
        let xi = snhat_xi(n);
        assert!((xi.norm_squared() - 1.0).abs() < 1e-14);
        let walk = snhat_walk_state(n, SnhatMode::BoundsOnly).unwrap();
        let g = GroupTable::symmetric(n).unwrap();
        for (s, p) in permutations(n).iter().enumerate() {
            assert_eq!(g.label(s), cycle_label(p));
            let want = c0(n) * s_of(n, p);
            assert!((walk.values[s].re - want).abs() < 1e-14 && walk.values[s].im == 0.0);
        }
        let t = g.position(&format!("({} {})", n - 1, n)).unwrap();
        assert!((walk.values[t].re - u_transposition(n)).abs() < 1e-12);
        assert!((walk.values[g.identity()].re - 1.0).abs() < 1e-14);
    }
}

#[test]
fn transposition_value_matches_direct_closed_form() {
    for n in 3..=12 {
        let nf = n as f64;
        let direct = 1.0 - (nf - 1.0) * (nf.sqrt() - 1.0).powi(2) / (nf.powi(n as i32) - 1.0);
        assert!((u_transposition(n) - direct).abs() < 1e-12);
        assert!((c0(n) * f0(n) - direct).abs() < 1e-12);
    }
}

#[test]
fn snhat_upper_bound_chain() {
    for n in [4, 5] {
        let spectrum = snhat_walk_state(n, SnhatMode::BoundsOnly).unwrap().spectrum().unwrap();
        for c in [1.0, 2.0, 3.0] {
            let k = snhat_k(n, 1.1, c);
            let direct = spectrum.ub_sum(k);
            assert!(direct <= snhat_ub_rhs(n, k), "n={n} c={c}");
            assert!(direct <= 0.5 * (-2.0 * a_n(n) * c).exp(), "n={n} c={c}");
        }
    }
    assert_eq!(snhat_k(4, 1.1, 1.0), 65);
    assert_eq!(snhat_k(5, 1.1, 3.0), 929);
}

#[test]
fn snhat_lower_bound_sign() {
    for n in 3..=10 {
        let l = snhat_lower(n, 0.5);
        assert!(l > 0.0 && l < 0.5);
        assert!((l - 0.5 * (-b_n(n) * 0.5).exp()).abs() < 1e-15);
    }
}

#[test]
fn sekine_constants() {
    let c: Vec<f64> = (3..=15).step_by(2).map(sekine_c).collect();
    for w in c.windows(2).skip(1) {
        assert!(w[1] < w[0]);
    }
    assert!((sekine_c(9) - 1.3976).abs() < 5e-4);
    assert!(sekine_c(15) - 1.0 < 1e-3);
    assert!((sekine_lower(0.6) - 0.5 * (-0.3 * std::f64::consts::PI.powi(2)).exp()).abs() < 1e-15);
    assert_eq!(sekine_k(3, 0.05), 0);
    assert_eq!(sekine_k(9, 2.0), 162);
    let forms = sekine_closed_forms(5, 0.01);
    assert_eq!(forms.warnings.len(), 1);
    assert!(snhat_closed_forms(4, 0.5, 1.0).warnings.iter().any(|w| w.contains("alpha")));
}
