#![no_main]

use conicfan::notation::parse_vector;
use conicfan::verify::parse_golden;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(g) = parse_golden(s) else { return };
    if g.file == "gammas" {
        for e in g.entries.values() {
            if let Some(rows) = e.value.as_array() {
                let _: Vec<_> = rows.iter().filter_map(|r| r.as_str().and_then(parse_vector)).collect();
            }
        }
    }
});
