#![no_main]
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(theta) = ribboncli::parse_angle(data) {
        assert!(theta.is_finite());
    }
});
