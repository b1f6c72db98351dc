use num_traits::Signed;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use thetalie::exactnum::{CycloScalar, ExactMatrix, Subspace};
use thetalie::liealg::*;

/// Number of roots from the classification.
fn root_count(name: &str) -> usize {
    let (letter, n) = name.split_at(1);
    let n: usize = n.parse().unwrap();
    match letter {
        "A" => n * (n + 1),
        "B" | "C" => 2 * n * n,
        "D" => 2 * n * (n - 1),
        "E" => [72, 126, 240][n - 6],
        "F" => 48,
        "G" => 12,
        _ => unreachable!(),
    }
}

fn algebra(name: &str) -> LieAlgebra {
    name.parse::<CartanType>().unwrap().algebra().unwrap()
}

#[test]
fn dimensions_match_root_counts() {
    for name in ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4", "E6"] {
        let g = algebra(name);
        let t: CartanType = name.parse().unwrap();
        assert_eq!(g.dim(), t.rank + root_count(name), "{name}");
        assert_eq!(g.chevalley().unwrap().index.roots.len(), root_count(name));
    }
}

#[test]
fn structure_constants_are_chevalley() {
    // [e_a, e_b] = +-(p + 1) e_(a+b), p the largest integer with b - p a a root
    for name in ["A3", "B3", "C3", "G2", "F4"] {
        let g = algebra(name);
        let data = g.chevalley().unwrap();
        let idx = &data.index;
        for a in 0..idx.roots.len() {
            for b in 0..idx.roots.len() {
                let Some(s) = idx.sum(a, b) else { continue };
                let mut p = 0;
                loop {
                    let shifted: Vec<i64> = idx.roots[b].iter().zip(&idx.roots[a]).map(|(y, x)| y - (p + 1) * x).collect();
                    if idx.index(&shifted).is_none() {
                        break;
                    }
                    p += 1;
                }
                let terms = g.bracket_basis(data.root_position(a), data.root_position(b));
                assert_eq!(terms.len(), 1, "{name}");
                let (k, c) = &terms[0];
                assert_eq!(*k, data.root_position(s));
                let magnitude = c.as_rational().unwrap().abs();
                assert_eq!(magnitude, num_rational::BigRational::from_integer((p + 1).into()), "{name}: N({a}, {b})");
            }
        }
    }
}

#[test]
fn structure_checks_pass() {
    for name in ["A1", "A2", "B2", "G2", "C3", "D4"] {
        let g = algebra(name);
        g.check_antisymmetry().unwrap();
        g.check_jacobi().unwrap();
        assert!(g.has_rational_constants());
    }
}

#[test]
fn killing_form_is_nondegenerate_and_invariant() {
    for name in ["A2", "B2", "G2"] {
        let g = algebra(name);
        let k = g.killing_form();
        assert_eq!(k.rank(), g.dim(), "{name}");
        assert_eq!(k, k.transpose());
        let n = g.dim();
        for i in 0..n {
            for j in 0..n {
                let bij = g.bracket(&g.basis_element(i), &g.basis_element(j));
                for l in 0..n {
                    let bjl = g.bracket(&g.basis_element(j), &g.basis_element(l));
                    let lhs = (0..n).fold(g.field().zero(), |acc, t| acc + &bij[t] * k.get(t, l));
                    let rhs = (0..n).fold(g.field().zero(), |acc, t| acc + k.get(i, t) * &bjl[t]);
                    assert_eq!(lhs, rhs, "{name} ({i}, {j}, {l})");
                }
            }
        }
    }
}

#[test]
fn sl_n_killing_form_oracle() {
    // for sl_n, K(h_i, h_i) = 2n tr(h_i h_i) = 4n
    for n in 2..=4 {
        let g = algebra(&format!("A{}", n - 1));
        let k = g.killing_form();
        for i in 0..n - 1 {
            assert_eq!(k.get(i, i), &g.field().int(4 * n as i64));
        }
    }
}

#[test]
fn cartan_subalgebra_is_self_centralizing() {
    for name in ["A2", "B2", "G2", "D4"] {
        let g = algebra(name);
        let rank = g.chevalley().unwrap().rank();
        let h: Vec<_> = (0..rank).map(|i| g.basis_element(i)).collect();
        let z = g.centralizer(&h);
        assert_eq!(z, Subspace::coordinate(g.field(), g.dim(), &(0..rank).collect::<Vec<_>>()), "{name}");
        let sub = centralizer(&g, &h);
        assert!(sub.is_abelian(&g));
    }
}

#[test]
fn root_systems_from_cartan_matrices() {
    for name in ["A3", "B3", "C3", "D5", "E6", "E7", "E8", "F4", "G2"] {
        let t: CartanType = name.parse().unwrap();
        let sys = RootSystem::from_cartan_matrix(&t.cartan_matrix()).unwrap();
        assert_eq!(2 * sys.positive.len(), root_count(name), "{name}");
    }
    assert!(RootSystem::from_cartan_matrix(&[vec![2, -1], vec![-1, 3]]).is_err());
    assert_eq!(chevalley_basis(&"B2".parse::<CartanType>().unwrap().cartan_matrix()).unwrap().dim(), 10);
}

fn random_element(g: &LieAlgebra, rng: &mut ChaCha8Rng) -> Vec<CycloScalar> {
    (0..g.dim()).map(|_| if rng.gen_bool(0.5) { g.field().int(rng.gen_range(-3..=3)) } else { g.field().zero() }).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn jordan_decomposition_properties(seed in any::<u64>(), name in prop::sample::select(vec!["A1", "A2", "B2"])) {
        let g = algebra(name);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_element(&g, &mut rng);
        let (xs, xn) = match g.jordan_decomposition(&x) {
            Ok(parts) => parts,
            // eigenvalues outside Q are allowed to fail, nothing else
            Err(e) => return Err(TestCaseError::fail(format!("{e}"))),
        };
        let sum: Vec<CycloScalar> = xs.iter().zip(&xn).map(|(a, b)| a + b).collect();
        prop_assert_eq!(sum, x.clone());
        prop_assert!(g.bracket(&xs, &xn).iter().all(CycloScalar::is_zero));
        prop_assert!(g.is_nilpotent_element(&xn));
        prop_assert!(ad_minimal_polynomial(&g, &xs).is_squarefree());
        prop_assert_eq!(g.ad(&xs), semisimple_part(&g.ad(&x)).unwrap());
    }

    #[test]
    fn ad_is_a_representation(seed in any::<u64>(), name in prop::sample::select(vec!["A2", "B2", "G2"])) {
        let g = algebra(name);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_element(&g, &mut rng);
        let y = random_element(&g, &mut rng);
        let lhs = g.ad(&g.bracket(&x, &y));
        let (ax, ay) = (g.ad(&x), g.ad(&y));
        let rhs: ExactMatrix = &(&ax * &ay) - &(&ay * &ax);
        prop_assert_eq!(lhs, rhs);
        let back = g.pull_back_ad(&ax).unwrap();
        prop_assert_eq!(back, x);
    }
}
