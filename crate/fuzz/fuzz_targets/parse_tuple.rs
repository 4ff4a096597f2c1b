#![no_main]

use libfuzzer_sys::fuzz_target;
use richardson_mult::index::parse_index_list;
use richardson_mult::{IndexTuple, Mode};

// First byte picks d and the ambient size; the rest is the tuple text.
fuzz_target!(|data: &[u8]| {
    let Some((&head, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let _ = parse_index_list(text);
    let d = u32::from(head % 8);
    let ambient = d + u32::from(head >> 3);
    for mode in [Mode::Symplectic, Mode::Ordinary] {
        if let Ok(t) = IndexTuple::parse(text, d, mode, ambient) {
            let again = IndexTuple::parse(&t.to_string(), t.d(), mode, t.ambient()).expect("display reparses");
            assert_eq!(again, t);
        }
    }
});
