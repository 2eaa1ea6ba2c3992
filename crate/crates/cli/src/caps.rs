//! Resource caps, with overrides from the EKR_CAPS environment variable.
//!
//! Format: comma-separated key=value pairs, e.g.
//! `EKR_CAPS="grassmann=500000,symmetric=8,conjugacy=8,budget=50000000"`.

use tinum_core::Caps;

pub fn caps_from_env() -> Caps {
    let mut caps = Caps::default();
    let Ok(overrides) = std::env::var("EKR_CAPS") else {
        return caps;
    };
    for tok in overrides.split(',') {
        let Some((key, val)) = tok.split_once('=') else {
            continue;
        };
        let Ok(v) = val.trim().parse::<u64>() else {
            continue;
        };
        match key.trim() {
            "grassmann" => caps.grassmann_elements = v,
            "symmetric" => caps.symmetric_n = v as u32,
            "conjugacy" => caps.conjugacy_n = v as u32,
            "budget" => caps.search_budget = v,
            _ => {}
        }
    }
    caps
}
