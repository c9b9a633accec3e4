#![no_main]

use conicfan::rootcore::CartanType;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(t) = s.parse::<CartanType>() {
        // round trip through the canonical name
        assert_eq!(t.to_string().parse::<CartanType>().ok(), Some(t));
    }
    let _ = CartanType::parse_loose(s);
});
