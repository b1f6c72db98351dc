#![no_main]
use libfuzzer_sys::fuzz_target;
use thetalie::job::{parse_job, Analysis, MAX_ORDER};

fuzz_target!(|text: &str| {
    if let Ok(job) = parse_job(text) {
        assert!(job.m() >= 1 && job.m() <= MAX_ORDER);
        assert!(job.caps.group_order > 0 && job.caps.h1 > 0 && job.caps.retries > 0);
        assert_eq!(Analysis::closure(job.analyses.iter().copied()), job.analyses);
    }
});
