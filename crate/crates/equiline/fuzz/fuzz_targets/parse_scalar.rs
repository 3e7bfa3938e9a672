#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(value) = equiline::exact::parse_scalar(text) {
        // Anything that parses must survive a display round trip unchanged.
        let rendered = value.to_string();
        let reparsed = equiline::exact::parse_scalar(&rendered)
            .expect("canonical rendering must reparse");
        assert_eq!(reparsed, value);
    }
    let _ = equiline::exact::parse_rational(text);
});
