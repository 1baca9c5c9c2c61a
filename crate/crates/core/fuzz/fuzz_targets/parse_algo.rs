#![no_main]

use libfuzzer_sys::fuzz_target;
use ocl_core::registry::AlgoSpec;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(spec) = s.parse::<AlgoSpec>() {
        let back: AlgoSpec = spec.to_string().parse().expect("display parses");
        assert_eq!(back, spec);
    }
});
