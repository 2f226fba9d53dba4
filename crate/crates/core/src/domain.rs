//! Enumeration domains: either the integer box {1..B} or an arithmetic
//! progression (typically the image of a box under a depression map).

use crate::depress::ImageDomain;
use crate::EnumerationError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Domain {
    /// {1, 2, ..., bound}
    Box { bound: u64 },
    /// {first, first+step, ...}, `count` terms, step > 0. Terms may be
    /// nonpositive; callers that require positivity filter explicitly.
    Progression { first: i64, step: i64, count: u64 },
}

impl Domain {
    pub fn len(&self) -> u64 {
        match *self {
            Domain::Box { bound } => bound,
            Domain::Progression { count, .. } => count,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All points, strictly ascending.
    pub fn points(&self) -> Result<Vec<i64>, EnumerationError> {
        match *self {
            Domain::Box { bound } => {
                if bound == 0 {
                    return Err(EnumerationError::EmptyDomain);
                }
                let bound = i64::try_from(bound).map_err(|_| EnumerationError::MachineRange)?;
                Ok((1..=bound).collect())
            }
            Domain::Progression { first, step, count } => {
                if count == 0 {
                    return Err(EnumerationError::EmptyDomain);
                }
                if step <= 0 {
                    return Err(EnumerationError::NonAscendingDomain);
                }
                let mut pts = Vec::with_capacity(count as usize);
                let mut p = first;
                for i in 0..count {
                    if i > 0 {
                        p = p.checked_add(step).ok_or(EnumerationError::MachineRange)?;
                    }
                    pts.push(p);
                }
                Ok(pts)
            }
        }
    }

    /// Stable text used in cache keys and reports.
    pub fn key_text(&self) -> String {
        match *self {
            Domain::Box { bound } => format!("box:{bound}"),
            Domain::Progression { first, step, count } => {
                format!("prog:{first}:{step}:{count}")
            }
        }
    }
}

impl From<&ImageDomain> for Domain {
    fn from(img: &ImageDomain) -> Self {
        Domain::Progression {
            first: img.first,
            step: img.step,
            count: img.count,
        }
    }
}
