//! π₁ of the complement of four A₂-configurations, read off from the
//! number of 3-divisible sets on the Enriques surface and on its K3 cover.

use serde::{Deserialize, Serialize};

use crate::{Result, VerifyError};

pub const GROUP_LABELS: [&str; 3] = ["Z/6", "S3 x Z/3", "(Z/3)^2 x Z/2"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pi1Classification {
    pub enriques_divisible_count: u64,
    pub cover_divisible_count: u64,
    pub group_label: String,
}

/// (1,1) → Z/6; (1,4) → S3 x Z/3; four sets on the Enriques surface force
/// (Z/3)² x Z/2 whatever the cover count. Counts other than 1 or 4 are
/// rejected.
pub fn classify_pi1(n_enriques: u64, n_cover: u64) -> Result<Pi1Classification> {
    let label = match (n_enriques, n_cover) {
        (1, 1) => GROUP_LABELS[0],
        (1, 4) => GROUP_LABELS[1],
        (4, 1) | (4, 4) => GROUP_LABELS[2],
        _ => return Err(VerifyError::Pi1Input(n_enriques, n_cover)),
    };
    Ok(Pi1Classification {
        enriques_divisible_count: n_enriques,
        cover_divisible_count: n_cover,
        group_label: label.into(),
    })
}
