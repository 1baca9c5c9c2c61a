#![no_main]

use libfuzzer_sys::fuzz_target;
use ocl_core::graph::Color;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(color) = s.parse::<Color>() {
        let back: Color = color.to_string().parse().expect("display parses");
        assert_eq!(back, color);
    }
});
