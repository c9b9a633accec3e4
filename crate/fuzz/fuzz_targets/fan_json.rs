#![no_main]

use conicfan::lunavust::{is_colored_fan, is_complete, parse_fan_json, ColoredCone, ColoredFan, Space};
use conicfan::symdata::restricted_of;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(raw) = parse_fan_json(s, None) else { return };
    let dim = raw.first().map_or(2, |c| c.rays.first().map_or(2, Vec::len));
    let g = match dim {
        2 => "G2",
        3 => "B3",
        4 => "F4",
        _ => return,
    };
    let space = Space::of(&restricted_of(g.parse().unwrap()).unwrap());
    let cones: Result<Vec<ColoredCone>, _> = raw.iter().map(|c| c.build(dim)).collect();
    if let Ok(cones) = cones {
        let fan = ColoredFan::from_maximal(&cones, &space);
        if is_colored_fan(&fan, &space).is_ok() {
            let _ = is_complete(&fan, &space);
        }
    }
});
