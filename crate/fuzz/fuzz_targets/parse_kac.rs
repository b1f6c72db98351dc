#![no_main]
use libfuzzer_sys::fuzz_target;
use thetalie::grading::KacSpec;

fuzz_target!(|text: &str| {
    if let Ok(spec) = text.parse::<KacSpec>() {
        assert_eq!(spec.coords.len(), spec.cartan_type.rank + 1);
        // the marks are positive, so a zero order means all coordinates vanished
        if let Ok(m) = spec.order() {
            assert!(m > 0);
        }
    }
});
