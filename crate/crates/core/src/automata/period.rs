use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PeriodError {
    #[error("prefix of length {len} is shorter than max_preperiod + 3 * max_period = {needed}")]
    PrefixTooShort { len: usize, needed: usize },
    #[error("max_period must be at least 1")]
    ZeroPeriodBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PeriodVerdict {
    Periodic {
        preperiod: usize,
        period: usize,
    },
    NotDetected {
        max_preperiod: usize,
        max_period: usize,
        prefix_len: usize,
    },
}

impl PeriodVerdict {
    pub fn is_periodic(&self) -> bool {
        matches!(self, PeriodVerdict::Periodic { .. })
    }

    pub fn period(&self) -> Option<usize> {
        match *self {
            PeriodVerdict::Periodic { period, .. } => Some(period),
            PeriodVerdict::NotDetected { .. } => None,
        }
    }
}

/// Finds the least period `t <= max_period`, and for it the least preperiod
/// `r <= max_preperiod`, such that `prefix[i] == prefix[i + t]` for every
/// `i >= r` inside the prefix.
///
/// The prefix must have length at least `max_preperiod + 3 * max_period`, so
/// any reported period is seen repeating at least twice past the preperiod.
pub fn detect_eventual_period<T: PartialEq>(
    prefix: &[T],
    max_preperiod: usize,
    max_period: usize,
) -> Result<PeriodVerdict, PeriodError> {
    if max_period == 0 {
        return Err(PeriodError::ZeroPeriodBound);
    }
    let needed = max_preperiod + 3 * max_period;
    if prefix.len() < needed {
        return Err(PeriodError::PrefixTooShort {
            len: prefix.len(),
            needed,
        });
    }
    for period in 1..=max_period {
        let last_mismatch = (0..prefix.len() - period)
            .rev()
            .find(|&i| prefix[i] != prefix[i + period]);
        let preperiod = last_mismatch.map_or(0, |i| i + 1);
        if preperiod <= max_preperiod {
            return Ok(PeriodVerdict::Periodic { preperiod, period });
        }
    }
    Ok(PeriodVerdict::NotDetected {
        max_preperiod,
        max_period,
        prefix_len: prefix.len(),
    })
}
