use proptest::prelude::*;
use thetalie::cartan::cartan_subspace;
use thetalie::exactnum::ExactMatrix;
use thetalie::galois::*;
use thetalie::grading::{grade_from_kac, GradedAlgebra};
use thetalie::liealg::Element;
use thetalie::weyl::{little_weyl_maximal_rank, DEFAULT_GROUP_CAP};

fn kac(s: &str) -> GradedAlgebra {
    grade_from_kac(&s.parse().unwrap()).unwrap()
}

/// Classes of cocycles under twisted conjugacy, by direct enumeration over the whole group.
fn h1_by_hand(a: &GammaGroup) -> usize {
    let n = a.order();
    let cocycles: Vec<usize> = (0..n).filter(|&z| a.mul(z, a.twist(z)) == a.identity()).collect();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &z in &cocycles {
        let orbit: Vec<usize> = {
            let mut o: Vec<usize> = (0..n).map(|g| a.mul(a.mul(g, z), a.inv(a.twist(g)))).collect();
            o.sort_unstable();
            o.dedup();
            o
        };
        if !classes.contains(&orbit) {
            classes.push(orbit);
        }
    }
    classes.len()
}

#[test]
fn h1_examples() {
    let cases = [
        (GammaGroup::trivial(), 1),
        (GammaGroup::cyclic(2, false).unwrap(), 2),
        (GammaGroup::cyclic(3, true).unwrap(), 1),
        (GammaGroup::symmetric(3).unwrap(), 2),
        (GammaGroup::cyclic(4, false).unwrap(), 2),
    ];
    for (a, expected) in cases {
        let h = h1(&a, DEFAULT_H1_CAP).unwrap();
        assert_eq!(h.len(), expected, "order {}", a.order());
        assert_eq!(h1_by_hand(&a), expected);
        assert_eq!(h.representatives[0], a.identity());
        for &z in &h.representatives {
            assert!(is_cocycle(&a, z));
        }
        assert_eq!(h.class_sizes.iter().sum::<usize>(), h.cocycles.len());
    }
}

#[test]
fn s3_classes_are_identity_and_transpositions() {
    let s3 = GammaGroup::symmetric(3).unwrap();
    let h = h1(&s3, DEFAULT_H1_CAP).unwrap();
    assert_eq!(h.class_sizes, vec![1, 3]);
}

#[test]
fn cyclic3_inversion_has_all_elements_as_cocycles() {
    let a = GammaGroup::cyclic(3, true).unwrap();
    let h = h1(&a, DEFAULT_H1_CAP).unwrap();
    assert_eq!(h.cocycles, vec![0, 1, 2]);
}

#[test]
fn induced_kernels() {
    let c2 = GammaGroup::cyclic(2, false).unwrap();
    let c4 = GammaGroup::cyclic(4, false).unwrap();
    let k = induced_kernel(&c2, &c4, &[0, 2], DEFAULT_H1_CAP).unwrap();
    assert_eq!(k.kernel, vec![0]);
    let k = induced_kernel(&c4, &c4, &[0, 1, 2, 3], DEFAULT_H1_CAP).unwrap();
    assert_eq!(k.kernel, vec![0]);
    let one = GammaGroup::trivial();
    let k = induced_kernel(&one, &c4, &[0], DEFAULT_H1_CAP).unwrap();
    assert_eq!((k.source.len(), k.kernel.len()), (1, 1));
    assert!(matches!(induced_kernel(&c2, &c4, &[0, 1], DEFAULT_H1_CAP), Err(GaloisError::NotEquivariant(_))));
    let c4_inv = GammaGroup::cyclic(4, true).unwrap();
    let c2_inv = GammaGroup::cyclic(2, true).unwrap();
    assert!(induced_kernel(&c2_inv, &c4_inv, &[0, 2], DEFAULT_H1_CAP).is_ok());
    // the identity map does not intertwine the trivial twist with inversion on Z/3
    let c3 = GammaGroup::cyclic(3, false).unwrap();
    let c3_inv = GammaGroup::cyclic(3, true).unwrap();
    assert!(matches!(induced_kernel(&c3, &c3_inv, &[0, 1, 2], DEFAULT_H1_CAP), Err(GaloisError::NotEquivariant(_))));
}

#[test]
fn nested_kernels_are_functorial() {
    // Z/2 < Z/4 < Z/8, all with inversion twist
    let a = GammaGroup::cyclic(2, true).unwrap();
    let b = GammaGroup::cyclic(4, true).unwrap();
    let c = GammaGroup::cyclic(8, true).unwrap();
    let ab = induced_kernel(&a, &b, &[0, 2], DEFAULT_H1_CAP).unwrap();
    let ac = induced_kernel(&a, &c, &[0, 4], DEFAULT_H1_CAP).unwrap();
    for k in &ab.kernel {
        assert!(ac.kernel.contains(k));
    }
}

#[test]
fn cap_is_enforced() {
    let c4 = GammaGroup::cyclic(4, false).unwrap();
    assert_eq!(h1(&c4, 3).unwrap_err(), GaloisError::Cap { order: 4, cap: 3 });
}

#[test]
fn twists_are_validated() {
    let s3 = GammaGroup::symmetric(3).unwrap();
    let inversion: Vec<usize> = (0..6).map(|x| s3.inv(x)).collect();
    assert!(matches!(s3.clone().with_twist(inversion), Err(GaloisError::TwistNotAutomorphism(_))));
    let c3 = GammaGroup::cyclic(3, false).unwrap();
    assert!(matches!(c3.with_twist(vec![1, 2, 0]), Err(_)));
    let conj = s3.clone().conjugation_twist(1).unwrap();
    for x in 0..6 {
        assert_eq!(conj.twist(conj.twist(x)), x);
    }
}

#[test]
fn real_orbit_counts_on_abstract_groups() {
    for a in [GammaGroup::cyclic(2, false).unwrap(), GammaGroup::cyclic(3, true).unwrap(), GammaGroup::symmetric(3).unwrap()] {
        let all: Vec<usize> = (0..a.order()).collect();
        assert_eq!(real_orbit_count(&a, &all, DEFAULT_H1_CAP).unwrap().count, 1);
        assert_eq!(real_orbit_count(&a, &[a.identity()], DEFAULT_H1_CAP).unwrap().count, 1);
    }
}

#[test]
fn split_structures() {
    for s in ["A1 1,1", "A2 1,1,1", "B2 1,0,0", "G2 1,1,1"] {
        let g = kac(s);
        let r = RealStructure::split(&g).unwrap();
        for i in 0..g.dim() {
            let x = g.algebra().basis_element(i);
            assert!(r.is_real(&x));
        }
        for d in 0..g.m() as i64 {
            assert_eq!(r.real_dimension(d), g.component(d).dim());
        }
    }
}

#[test]
fn split_conjugation_inverts_theta() {
    let g = kac("A2 1,1,1");
    let r = RealStructure::split(&g).unwrap();
    let theta = &g.theta().matrix;
    let lhs = &(&r.matrix().clone() * &theta.conj()) * r.matrix();
    assert_eq!(&lhs * theta, ExactMatrix::identity(g.field(), g.dim()));
}

#[test]
fn compact_structures() {
    for s in ["A1 1,1", "A2 1,1,0", "B2 1,0,0", "G2 0,0,1"] {
        let g = kac(s);
        let r = RealStructure::compact(&g).unwrap();
        assert_eq!(r.form(), RealForm::Compact);
        r.verify().unwrap();
    }
    let g = kac("A2 1,1,1");
    assert!(matches!(RealStructure::compact(&g), Err(GaloisError::NotGradingCompatible(_))));
}

fn add(a: &Element, b: &Element) -> Element {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

#[test]
fn real_cartan_checks() {
    let g = kac("A1 1,1");
    let r = RealStructure::split(&g).unwrap();
    // basis h, e, f
    let e = g.algebra().basis_element(1);
    let f = g.algebra().basis_element(2);
    assert!(real_cartan_check(&r, &[add(&e, &f)]).unwrap());
    assert!(!real_cartan_check(&r, &[e.clone()]).unwrap());
    let g3 = kac("A2 1,1,1");
    let r3 = RealStructure::split(&g3).unwrap();
    let deg1: Vec<Element> = g3.component(1).basis().to_vec();
    assert_eq!(deg1.len(), 3);
    let big_e = deg1.iter().skip(1).fold(deg1[0].clone(), |acc, x| add(&acc, x));
    assert!(real_cartan_check(&r3, &[big_e]).unwrap());
}

#[test]
fn weyl_twists() {
    let g = kac("A1 1,1");
    let h = cartan_subspace(&g, 0).unwrap();
    let w = little_weyl_maximal_rank(&g, &h, DEFAULT_GROUP_CAP).unwrap();
    let r = RealStructure::split(&g).unwrap();
    let gw = gamma_action_on_weyl(&w, &r, &h).unwrap();
    assert!(gw.is_twist_trivial());

    let g = kac("A2 1,1,1");
    let h = cartan_subspace(&g, 0).unwrap();
    let w = little_weyl_maximal_rank(&g, &h, DEFAULT_GROUP_CAP).unwrap();
    let r = RealStructure::split(&g).unwrap();
    let gw = gamma_action_on_weyl(&w, &r, &h).unwrap();
    for x in 0..gw.order() {
        assert_eq!(gw.twist(x), gw.inv(x));
        assert_eq!(gw.twist(gw.twist(x)), x);
    }
    assert_eq!(h1(&gw, DEFAULT_H1_CAP).unwrap().len(), 1);
}

type Q = num_rational::BigRational;

fn rational(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

/// Real orbits of the compact form of sl2 with m = 2 on the quadric {a^2 + b^2 = 1}: rational
/// points (1 - t^2, 2t) / (1 + t^2) are merged when a rotation (a determinant-one orthogonal
/// matrix) carries one to the other.
fn circle_orbits(samples: i64) -> usize {
    let one = rational(1, 1);
    let mut reps: Vec<(Q, Q)> = Vec::new();
    for k in -samples..=samples {
        let t = rational(k, 3);
        let den = &one + &t * &t;
        let p = ((&one - &t * &t) / &den, (&t + &t) / &den);
        assert_eq!(&p.0 * &p.0 + &p.1 * &p.1, one);
        let joined = reps.iter().any(|r| {
            // the rotation [[c, -s], [s, c]] with (c, s) = p / r as complex numbers
            let norm = &r.0 * &r.0 + &r.1 * &r.1;
            let c = (&p.0 * &r.0 + &p.1 * &r.1) / &norm;
            let s = (&p.1 * &r.0 - &p.0 * &r.1) / &norm;
            let image = (&c * &r.0 - &s * &r.1, &s * &r.0 + &c * &r.1);
            &c * &c + &s * &s == one && image == p
        });
        if !joined {
            reps.push(p);
        }
    }
    reps.len()
}

#[test]
fn sl2_real_orbit_count_matches_rotation_oracle() {
    let g = kac("A1 1,1");
    let h = cartan_subspace(&g, 0).unwrap();
    let w = little_weyl_maximal_rank(&g, &h, DEFAULT_GROUP_CAP).unwrap();
    for r in [RealStructure::split(&g).unwrap(), RealStructure::compact(&g).unwrap()] {
        let gw = gamma_action_on_weyl(&w, &r, &h).unwrap();
        let q = g.field();
        let regular = w.stabilizer_indices(&[q.one()]);
        assert_eq!(regular.len(), 1);
        assert_eq!(real_orbit_count(&gw, &regular, DEFAULT_H1_CAP).unwrap().count, circle_orbits(20));
        let zero = w.stabilizer_indices(&[q.zero()]);
        assert_eq!(real_orbit_count(&gw, &zero, DEFAULT_H1_CAP).unwrap().count, 1);
    }
}

#[test]
fn sl3_regular_orbit_count() {
    let g = kac("A2 1,1,1");
    let h = cartan_subspace(&g, 0).unwrap();
    let w = little_weyl_maximal_rank(&g, &h, DEFAULT_GROUP_CAP).unwrap();
    let r = RealStructure::split(&g).unwrap();
    let gw = gamma_action_on_weyl(&w, &r, &h).unwrap();
    let q = g.field();
    let count = real_orbit_count(&gw, &w.stabilizer_indices(&[q.one()]), DEFAULT_H1_CAP).unwrap();
    assert_eq!(count.count, 1);
    assert_eq!(count.assumption, REAL_ORBIT_ASSUMPTION);
}

#[test]
fn real_points() {
    let g = kac("A1 1,1");
    let h = cartan_subspace(&g, 0).unwrap();
    let r = RealStructure::split(&g).unwrap();
    let q = g.field();
    let id = ExactMatrix::identity(q, 1);
    let d = real_point_decision(&r, &h, &[q.one()], &[id.clone()], None).unwrap().unwrap();
    assert_eq!(d.class, 0);
    let lift = ExactMatrix::identity(q, g.dim());
    let d = real_point_decision(&r, &h, &[q.int(3)], &[id], Some(&[lift])).unwrap().unwrap();
    assert_eq!(d.candidate_is_real, Some(true));

    let g = kac("A2 1,1,1");
    let h = cartan_subspace(&g, 0).unwrap();
    let w = little_weyl_maximal_rank(&g, &h, DEFAULT_GROUP_CAP).unwrap();
    let r = RealStructure::split(&g).unwrap();
    let q = g.field();
    let omega = q.omega_pow(1);
    let classes: Vec<ExactMatrix> = w.elements().to_vec();
    let d = real_point_decision(&r, &h, &[omega.clone()], &classes, None).unwrap().unwrap();
    // conj(w) = w^-1 = gamma^-1 . w, so gamma scales by w^2
    assert_eq!(classes[d.class], ExactMatrix::scalar(q, 1, &omega.pow(2)));
    assert_eq!(real_point_decision(&r, &h, &[omega], &[ExactMatrix::identity(q, 1)], None).unwrap(), None);
}

#[test]
fn parser_round_trips() {
    let cases = [
        ("cyclic 4\n", 4, 2),
        ("cyclic 3\ntwist inversion\n", 3, 1),
        ("symmetric 3 # S3\n", 6, 2),
        ("# Klein four\ntable\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n", 4, 4),
        ("permutation 1 0 2\npermutation 1 2 0\n", 6, 2),
        ("cyclic 2\ntwist map 0 1\n", 2, 2),
    ];
    for (text, order, classes) in cases {
        let a = parse_gamma_group(text).unwrap();
        assert_eq!(a.order(), order, "{text}");
        assert_eq!(h1(&a, DEFAULT_H1_CAP).unwrap().len(), classes, "{text}");
        assert_eq!(h1_by_hand(&a), classes);
    }
}

#[test]
fn parser_errors_have_positions() {
    let e = parse_gamma_group("cyclic 4\ntwist  sideways\n").unwrap_err();
    assert_eq!((e.line, e.col), (2, 1));
    let e = parse_gamma_group("\n  cyclic x\n").unwrap_err();
    assert_eq!((e.line, e.col), (2, 10));
    let e = parse_gamma_group("table\n0 1\n1 1\n").unwrap_err();
    assert_eq!(e.line, 1);
    let e = parse_gamma_group("symmetric 3\ntwist inversion\n").unwrap_err();
    assert_eq!(e.line, 2);
    assert!(parse_gamma_group("").is_err());
    assert!(parse_gamma_group("frobnicate\n").is_err());
}

fn abelian_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

proptest! {
    #[test]
    fn abelian_trivial_twist_counts_involutions(n in 1usize..40) {
        let a = GammaGroup::from_table(abelian_table(n), None).unwrap();
        let involutions = (0..n).filter(|&z| a.mul(z, z) == a.identity()).count();
        prop_assert_eq!(h1(&a, DEFAULT_H1_CAP).unwrap().len(), involutions);
    }

    #[test]
    fn classes_partition_cocycles(n in 1usize..30, inversion in any::<bool>()) {
        let a = GammaGroup::cyclic(n, inversion).unwrap();
        let h = h1(&a, DEFAULT_H1_CAP).unwrap();
        prop_assert_eq!(h.len(), h1_by_hand(&a));
        for z in 0..n {
            prop_assert_eq!(h.class_of[z].is_some(), is_cocycle(&a, z));
        }
        for &z in &h.cocycles {
            for g in 0..n {
                prop_assert_eq!(h.class_of[twisted_action(&a, g, z)], h.class_of[z]);
            }
        }
        let all: Vec<usize> = (0..n).collect();
        prop_assert_eq!(real_orbit_count(&a, &all, DEFAULT_H1_CAP).unwrap().count, 1);
    }

    #[test]
    fn parser_never_panics(text in "[a-z0-9 \n#]{0,80}") {
        let _ = parse_gamma_group(&text);
    }
}
