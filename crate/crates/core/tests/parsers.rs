//! Parser round trips, panic freedom, and a replay of the fuzz corpus seeds.

use std::fs;
use std::path::PathBuf;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use thetalie::exactnum::{CycloField, Rational};
use thetalie::galois::{h1, parse_gamma_group};
use thetalie::grading::KacSpec;
use thetalie::job::{parse_job, Analysis, MAX_ORDER};

const ORDERS: [u32; 8] = [1, 2, 3, 4, 5, 6, 8, 12];

fn check_job(text: &str) {
    if let Ok(job) = parse_job(text) {
        assert!(job.m() >= 1 && job.m() <= MAX_ORDER);
        assert_eq!(Analysis::closure(job.analyses.iter().copied()), job.analyses);
    }
}

fn check_scalar(data: &[u8]) {
    let Some((&pick, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let field = CycloField::get(ORDERS[pick as usize % ORDERS.len()]);
    if let Ok(x) = field.parse(text) {
        assert_eq!(field.parse(&x.to_string()).unwrap(), x);
    }
}

fn check_gamma(text: &str) {
    let Ok(group) = parse_gamma_group(text) else { return };
    for g in 0..group.order() {
        assert_eq!(group.mul(g, group.inv(g)), group.identity());
    }
    if group.order() <= 120 {
        let set = h1(&group, 120).unwrap();
        assert_eq!(set.class_of[group.identity()], Some(0));
        assert_eq!(set.class_sizes.iter().sum::<usize>(), set.cocycles.len());
    }
}

fn check_kac(text: &str) {
    if let Ok(spec) = text.parse::<KacSpec>() {
        assert_eq!(spec.coords.len(), spec.cartan_type.rank + 1);
        if let Ok(m) = spec.order() {
            assert!(m > 0);
        }
    }
}

fn seeds(target: &str) -> Vec<Vec<u8>> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<Vec<u8>> = fs::read_dir(&dir).unwrap().map(|e| fs::read(e.unwrap().path()).unwrap()).collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds in {}", dir.display());
    out
}

#[test]
fn corpus_seeds_replay() {
    for s in seeds("parse_job") {
        check_job(std::str::from_utf8(&s).unwrap());
    }
    for s in seeds("parse_scalar") {
        check_scalar(&s);
    }
    for s in seeds("parse_gamma_group") {
        check_gamma(std::str::from_utf8(&s).unwrap());
    }
    for s in seeds("parse_kac") {
        check_kac(std::str::from_utf8(&s).unwrap());
    }
}

#[test]
fn seeds_that_should_parse_do() {
    let corpus = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus");
    let read = |target: &str, name: &str| fs::read_to_string(corpus.join(target).join(name)).unwrap();
    for name in ["sl2", "sl3", "options"] {
        assert!(parse_job(&read("parse_job", name)).is_ok(), "{name}");
    }
    assert_eq!(parse_job(&read("parse_job", "bad_type")).unwrap_err().line, 1);
    for name in ["c3", "s3", "klein", "perms"] {
        assert!(parse_gamma_group(&read("parse_gamma_group", name)).is_ok(), "{name}");
    }
    assert_eq!(parse_gamma_group(&read("parse_gamma_group", "perms")).unwrap().order(), 6);
    assert_eq!("E8 (0,0,1,0,0,0,0,0,0)".parse::<KacSpec>().unwrap().order().unwrap(), 3);
    assert_eq!("G2 1 1 0".parse::<KacSpec>().unwrap().order().unwrap(), 4);
    assert!("D4 0,0,0,0,0".parse::<KacSpec>().is_err());
    assert!("A2 1,1".parse::<KacSpec>().is_err());
    assert!("Q2 1,1,1".parse::<KacSpec>().is_err());
}

fn scalar_strategy() -> impl Strategy<Value = (u32, Vec<(i64, i64)>)> {
    (prop::sample::select(ORDERS.to_vec()), prop::collection::vec((-50i64..50, 1i64..20), 0..12))
}

proptest! {
    #[test]
    fn scalar_display_round_trips((order, coeffs) in scalar_strategy()) {
        let field = CycloField::get(order);
        let mut x = field.zero();
        for (k, (n, d)) in coeffs.iter().enumerate() {
            let c: Rational = BigRational::new(BigInt::from(*n), BigInt::from(*d));
            x = &x + &(&field.rational(c) * &field.omega_pow(k as i64));
        }
        prop_assert_eq!(field.parse(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn scalar_parser_never_panics(data in prop::collection::vec(any::<u8>(), 0..64), text in "[-+*/^w0-9 ]{0,24}") {
        check_scalar(&data);
        let mut prefixed = vec![3u8];
        prefixed.extend(text.as_bytes());
        check_scalar(&prefixed);
    }

    #[test]
    fn job_parser_never_panics(text in "((type|kac|m|analyses|seed|cap_h1|format|real_form|junk) ?= ?[A-G0-9a-z, -]{0,12}\n){0,6}") {
        check_job(&text);
    }

    #[test]
    fn kac_parser_never_panics(text in "[A-Ga-g]?[0-9]{0,2} ?\\(?[0-9, ]{0,20}\\)?") {
        check_kac(&text);
    }
}
