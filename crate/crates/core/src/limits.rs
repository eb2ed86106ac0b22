use crate::error::{Error, Result};

/// Largest edge count whose words (length 2k+1) fit in one packed `u64`.
pub const MAX_K: u32 = 31;

/// Environment variable that overrides every configurable k limit.
pub const CAPACITY_ENV: &str = "ZIPTENSOR_CAPACITY";

/// Per-workload upper bounds on the edge count `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Tensor construction and counting.
    pub tensor_k: u32,
    /// Exhaustive middle-level word enumeration.
    pub orbit_k: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            tensor_k: 14,
            orbit_k: 9,
        }
    }
}

impl Limits {
    /// Same limit for every workload, clamped to [`MAX_K`].
    pub fn uniform(k: u32) -> Self {
        let k = k.min(MAX_K);
        Limits {
            tensor_k: k,
            orbit_k: k,
        }
    }

    /// Defaults, overridden by `ZIPTENSOR_CAPACITY` when it holds an integer.
    pub fn from_env() -> Self {
        std::env::var(CAPACITY_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<u32>().ok())
            .map(Limits::uniform)
            .unwrap_or_default()
    }

    pub fn check_tensor(&self, k: u32) -> Result<()> {
        check(k, self.tensor_k)
    }

    pub fn check_orbit(&self, k: u32) -> Result<()> {
        check(k, self.orbit_k)
    }
}

pub(crate) fn check(k: u32, limit: u32) -> Result<()> {
    let limit = limit.min(MAX_K);
    if k > limit {
        return Err(Error::Capacity {
            k: k as usize,
            limit: limit as usize,
        });
    }
    Ok(())
}
