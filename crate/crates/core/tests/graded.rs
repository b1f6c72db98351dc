//! Gradings, Cartan subspaces and weight systems.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use thetalie::cartan::*;
use thetalie::exactnum::{CycloScalar, Subspace};
use thetalie::grading::*;
use thetalie::liealg::{CartanType, RootSystem};
use thetalie::weights::*;

fn kac(s: &str) -> GradedAlgebra {
    grade_from_kac(&s.parse().unwrap()).unwrap()
}

/// Component dimensions from the root system: e_a has degree sum_i s_i n_i(a) mod m, and the
/// Cartan subalgebra sits in degree 0.
fn dims_oracle(spec: &str) -> Vec<usize> {
    let k: KacSpec = spec.parse().unwrap();
    let sys = RootSystem::from_cartan_matrix(&k.cartan_type.cartan_matrix()).unwrap();
    let marks: Vec<i64> = std::iter::once(1).chain(sys.positive.iter().max_by_key(|r| r.iter().sum::<i64>()).unwrap().iter().copied()).collect();
    let m: i64 = marks.iter().zip(&k.coords).map(|(a, &s)| a * s as i64).sum();
    let mut dims = vec![0usize; m as usize];
    dims[0] = k.cartan_type.rank;
    for r in &sys.positive {
        let d: i64 = r.iter().zip(&k.coords[1..]).map(|(n, &s)| n * s as i64).sum();
        dims[d.rem_euclid(m) as usize] += 1;
        dims[(-d).rem_euclid(m) as usize] += 1;
    }
    dims
}

const SPECS: [&str; 10] = ["A1 1,1", "A2 1,1,1", "A2 1,1,0", "A3 1,1,1,1", "B2 1,1,0", "B2 1,0,1", "C2 2,1,0", "G2 1,1,1", "G2 0,1,0", "D4 1,0,1,0,0"];

#[test]
fn component_dimensions() {
    for s in SPECS {
        let g = kac(s);
        assert_eq!(g.dims(), dims_oracle(s), "{s}");
    }
}

#[test]
fn theta_is_an_automorphism_of_order_m() {
    for s in SPECS {
        let g = kac(s);
        g.check_closure().unwrap();
        let theta = theta_from_grading(&g).unwrap();
        theta.validate(g.algebra()).unwrap();
        assert_eq!(theta.order, g.m());
        for d in 0..g.m() as i64 {
            let scale = g.field().omega_pow(d);
            for v in g.component(d).basis() {
                let image = theta.matrix.mul_vec(v);
                let expected: Vec<CycloScalar> = v.iter().map(|c| c * &scale).collect();
                assert_eq!(image, expected, "{s} degree {d}");
            }
        }
    }
}

#[test]
fn grading_errors() {
    assert!(matches!("A2 0,0,0".parse::<KacSpec>(), Err(GradingError::AllZero)));
    assert!(matches!("B3 1,1".parse::<KacSpec>(), Err(GradingError::CoordinateCount { expected: 4, got: 2 })));
    let g = kac("A2 1,1,1");
    let h0 = g.algebra().basis_element(0);
    assert!(graded_jordan(&g, &h0).is_err());
    assert!(check_toral_degree_one(&g, &[h0]).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn graded_jordan_parts_stay_in_degree_one(seed in any::<u64>(), spec in prop::sample::select(vec!["A2 1,1,1", "A3 1,1,1,1", "B2 1,1,0", "G2 1,1,1"])) {
        let g = kac(spec);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = g.random_in_component(1, &mut rng, 3, 0.6);
        let (xs, xn) = graded_jordan(&g, &x).unwrap();
        prop_assert!(g.is_in_component(&xs, 1) && g.is_in_component(&xn, 1));
        prop_assert!(g.algebra().bracket(&xs, &xn).iter().all(CycloScalar::is_zero));
        prop_assert!(g.algebra().is_nilpotent_element(&xn));
        prop_assert!(g.algebra().is_semisimple_element(&xs));
    }

    #[test]
    fn projection_splits_elements(seed in any::<u64>(), spec in prop::sample::select(SPECS.to_vec())) {
        let g = kac(spec);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let parts: Vec<_> = (0..g.m() as i64).map(|d| g.random_in_component(d, &mut rng, 2, 0.5)).collect();
        let x: Vec<CycloScalar> = (0..g.dim()).map(|i| parts.iter().fold(g.field().zero(), |acc, p| acc + &p[i])).collect();
        prop_assert_eq!(g.project(&x), parts);
    }
}

/// Ranks known by hand: a trivial grading gives the rank of g; the principal gradings of sl_n
/// (all Kac coordinates 1) have a regular semisimple cyclic element spanning h; sl2 with m = 4
/// has g_1 = span(e).
#[test]
fn cartan_ranks() {
    let cases = [("A1 1,0", 1), ("A2 1,0,0", 2), ("B2 1,0,0", 2), ("G2 1,0,0", 2), ("A1 1,1", 1), ("A2 1,1,1", 1), ("A3 1,1,1,1", 1), ("A1 3,1", 0)];
    for (s, rank) in cases {
        let g = kac(s);
        for seed in [0, 1, 2] {
            let h = cartan_subspace(&g, seed).unwrap();
            assert_eq!(h.rank(), rank, "{s} seed {seed}");
            let check = is_cartan_subspace(&g, &h.basis).unwrap();
            assert!(check.holds, "{s}: {:?}", check.certificate);
            check_toral_degree_one(&g, &h.basis).unwrap();
        }
    }
}

#[test]
fn non_cartan_subspaces_are_rejected() {
    let g = kac("A2 1,0,0");
    let h = cartan_subspace(&g, 0).unwrap();
    let check = is_cartan_subspace(&g, &h.basis[..1]).unwrap();
    assert!(!check.holds);
    let empty = is_cartan_subspace(&g, &[]).unwrap();
    assert!(!empty.holds);
}

#[test]
fn retry_cap_is_reported() {
    let g = kac("A2 1,1,1");
    match cartan_subspace_with_cap(&g, 0, 0) {
        Ok(h) => assert_eq!(h.rank(), 1),
        Err(CartanError::RetryBudget(stats)) => assert_eq!(stats.attempts, 0),
        Err(e) => panic!("{e}"),
    }
}

/// Points s in N^(d-1) with |s| <= degree, counted by stars and bars.
fn lattice_points(degree: usize, d: usize) -> usize {
    (1..d).fold(1, |acc, i| acc * (degree + i) / i)
}

#[test]
fn nilpotency_certificates() {
    let alg = "A2".parse::<CartanType>().unwrap().algebra().unwrap();
    let data = alg.chevalley().unwrap();
    let n = alg.dim();
    let pos: Vec<usize> = (0..data.index.num_positive).map(|r| data.root_position(r)).collect();
    let nplus = Subspace::coordinate(alg.field(), n, &pos);
    assert!(engel_chain(&alg, &nplus).is_some());
    assert_eq!(grid_nilpotency(&alg, &nplus, 10_000), GridOutcome::AllNilpotent(lattice_points(n - 2, 3)));
    // e_a and e_-a together are not nilpotent
    let mixed = Subspace::coordinate(alg.field(), n, &[data.root_position(0), data.root_position(data.index.negate(0))]);
    assert_eq!(engel_chain(&alg, &mixed), None);
    assert!(matches!(grid_nilpotency(&alg, &mixed, 10_000), GridOutcome::Witness(_)));
    assert_eq!(grid_nilpotency(&alg, &nplus, 3), GridOutcome::TooLarge);
}

/// For the principal grading of sl_n the eigenvalues of a cyclic element are c, cw, .., cw^(n-1);
/// their rational relations cut the closure down to the phi(n)-dimensional torus, so sl4 is a case
/// where the centralizer is a Cartan subalgebra but the closure is not.
#[test]
fn closures_and_maximal_rank() {
    for (s, closure_dim, centralizer, closure) in [
        ("A1 1,1", 1, true, true),
        ("A2 1,1,1", 2, true, true),
        ("A2 1,0,0", 2, true, true),
        ("A3 1,1,1,1", 2, true, false),
    ] {
        let g = kac(s);
        let h = cartan_subspace(&g, 0).unwrap();
        let c = algebraic_closure(&g, &h.basis).unwrap();
        assert_eq!(c.space.dim(), closure_dim, "{s}");
        assert!(c.coprime_support);
        assert!(c.space.contains_space(&h.space));
        assert_eq!(is_maximal_rank(&g, &h.basis), centralizer, "{s}");
        let conds = maximal_rank_conditions(&g, &h.basis).unwrap();
        assert_eq!(conds, MaximalRank { centralizer_is_cartan: centralizer, closure_is_cartan: closure }, "{s}");
    }
}

#[test]
fn weights_of_a_cartan_subalgebra_are_the_roots() {
    for (name, spec) in [("A2", "A2 1,0,0"), ("B2", "B2 1,0,0"), ("G2", "G2 1,0,0")] {
        let g = kac(spec);
        let rank = name.parse::<CartanType>().unwrap().rank;
        let h = cartan_subspace(&g, 0).unwrap();
        let sigma = weight_system(g.algebra(), &h.basis).unwrap();
        let roots = g.algebra().chevalley().unwrap().index.roots.len();
        assert_eq!(sigma.zero_weight().multiplicity, rank, "{name}");
        assert_eq!(sigma.nonzero().count(), roots);
        assert!(sigma.nonzero().all(|w| w.multiplicity == 1));
        assert_eq!(sigma.weights.iter().map(|w| w.multiplicity).sum::<usize>(), g.dim());
        // one hyperplane per pair of opposite roots
        assert_eq!(hyperplane_arrangement(&sigma).len(), roots / 2);
        // weights come in opposite pairs
        for w in sigma.nonzero() {
            let neg: Vec<CycloScalar> = w.functional.iter().map(|c| -c.clone()).collect();
            assert!(sigma.nonzero().any(|v| v.functional == neg));
        }
    }
}

#[test]
fn regularity_and_restriction() {
    let g = kac("A2 1,1,1");
    let h = cartan_subspace(&g, 0).unwrap();
    let sigma = weight_system(g.algebra(), &h.basis).unwrap();
    assert_eq!(sigma.zero_weight().multiplicity, 2);
    assert_eq!(sigma.nonzero().count(), 6);
    assert!(is_regular(&h.basis[0], &sigma).unwrap());
    assert!(!is_regular(&g.algebra().zero(), &sigma).unwrap());
    let restricted = restrict_weights(&sigma, &h.basis).unwrap();
    assert_eq!(restricted.weights.len(), sigma.weights.len());
    let off = g.algebra().basis_element(0);
    assert!(matches!(is_regular(&off, &sigma), Err(WeightError::NotInBase)));
}
