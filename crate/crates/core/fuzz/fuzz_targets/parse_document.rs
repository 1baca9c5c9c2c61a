#![no_main]

use libfuzzer_sys::fuzz_target;
use ocl_core::io::{parse_document, write_document};

fuzz_target!(|data: &[u8]| {
    let Ok(doc) = parse_document(data) else {
        return;
    };
    // canonical output must parse back to itself
    let text = write_document(&doc.instance, doc.scripts.as_deref());
    let again = parse_document(text.as_bytes()).expect("canonical document parses");
    assert_eq!(write_document(&again.instance, again.scripts.as_deref()), text);
});
