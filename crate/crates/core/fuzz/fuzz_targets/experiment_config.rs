#![no_main]

use libfuzzer_sys::fuzz_target;
use ocl_core::experiment::{ExperimentConfig, GeneratorSpec};

fuzz_target!(|data: &[u8]| {
    let _ = serde_json::from_slice::<ExperimentConfig>(data);
    if let Ok(s) = std::str::from_utf8(data) {
        if let Some((family, params)) = s.split_once(' ') {
            let _ = GeneratorSpec::from_params(family, params);
        }
    }
});
