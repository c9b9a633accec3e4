#![no_main]

use conicfan::notation::{parse_cone, parse_vector};
use conicfan::qmath::{q, QVec};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(spec) = parse_cone(s) {
        let gammas: Vec<QVec> = (1..=4).map(|i| vec![q(i); 4]).collect();
        let _ = spec.generators(&gammas);
    }
    let _ = parse_vector(s);
});
