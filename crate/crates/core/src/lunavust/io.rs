//! Fan JSON: `{ "space": "coroot(R'_O)", "cones": [ { "rays": [[q, ...]], "colors": [i, ...] } ] }`.
//!
//! Coordinates are integers or strings `"n/d"`.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{ColoredCone, ColoredFan, FanError, MAX_GENERATORS};
use crate::qmath::{self, QVec};

pub const SPACE_TAG: &str = "coroot(R'_O)";

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FanJson {
    pub space: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub restricted: Option<String>,
    pub cones: Vec<ConeJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConeJson {
    pub rays: Vec<Vec<Value>>,
    pub colors: Vec<usize>,
}

/// A cone as read from JSON, before any geometric validation.
#[derive(Debug, Clone, PartialEq)]
pub struct RawCone {
    pub rays: Vec<QVec>,
    pub colors: Vec<usize>,
}

fn coord(v: &Value) -> Result<crate::Q, FanError> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(qmath::q)
            .ok_or_else(|| FanError::Json(format!("coordinate {n} is not an integer"))),
        Value::String(s) => qmath::parse_q(s).ok_or_else(|| FanError::Json(format!("bad rational {s:?}"))),
        other => Err(FanError::Json(format!("unexpected coordinate {other}"))),
    }
}

/// Parses fan JSON; every ray must have `dim` coordinates when `dim` is given.
pub fn parse_fan_json(text: &str, dim: Option<usize>) -> Result<Vec<RawCone>, FanError> {
    let f: FanJson = serde_json::from_str(text).map_err(|e| FanError::Json(e.to_string()))?;
    if f.space != SPACE_TAG {
        return Err(FanError::Json(format!("unknown space {:?}", f.space)));
    }
    let mut out = Vec::new();
    for c in &f.cones {
        if c.rays.len() > MAX_GENERATORS {
            return Err(FanError::TooLarge);
        }
        let rays: Vec<QVec> = c.rays.iter().map(|r| r.iter().map(coord).collect()).collect::<Result<_, _>>()?;
        let d = dim.or_else(|| rays.first().map(Vec::len)).unwrap_or(0);
        if rays.iter().any(|r| r.len() != d) || d > 8 {
            return Err(FanError::Dimension { expected: d });
        }
        out.push(RawCone { rays, colors: c.colors.clone() });
    }
    Ok(out)
}

impl RawCone {
    pub fn build(&self, ambient: usize) -> Result<ColoredCone, FanError> {
        if let Some(&c) = self.colors.iter().find(|&&c| c == 0 || c > ambient) {
            return Err(FanError::UnknownColor(c));
        }
        ColoredCone::new(ambient, &self.rays, self.colors.iter().copied())
    }
}

/// Canonical JSON of the maximal colored cones of a fan.
pub fn export_fan_json(fan: &ColoredFan, restricted: Option<&str>) -> String {
    let cones = fan
        .maximal()
        .into_iter()
        .map(|c| ConeJson {
            rays: c
                .cone
                .rays()
                .iter()
                .map(|r| r.iter().map(|x| Value::from(i64::try_from(x).expect("small coordinates"))).collect())
                .collect(),
            colors: c.colors.iter().copied().collect(),
        })
        .collect();
    let f = FanJson { space: SPACE_TAG.into(), restricted: restricted.map(str::to_string), cones };
    serde_json::to_string_pretty(&f).expect("serializable") + "\n"
}
