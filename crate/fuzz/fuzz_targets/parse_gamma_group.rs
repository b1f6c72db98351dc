#![no_main]
use libfuzzer_sys::fuzz_target;
use thetalie::galois::{h1, parse_gamma_group};

fuzz_target!(|text: &str| {
    let Ok(group) = parse_gamma_group(text) else { return };
    let e = group.identity();
    for g in 0..group.order() {
        assert_eq!(group.mul(g, group.inv(g)), e);
    }
    if group.order() <= 120 {
        let set = h1(&group, 120).unwrap();
        assert_eq!(set.class_of[e], Some(0));
        assert_eq!(set.class_sizes.iter().sum::<usize>(), set.cocycles.len());
    }
});
