use crate::error::{Error, Result};
use core::cmp::Ordering;
use core::fmt;

/// The regular chain `[0,1]_m = {0, 1/m, …, m/m}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GradeChain {
    m: u32,
}

impl GradeChain {
    pub fn new(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidGranularity(m));
        }
        Ok(GradeChain { m })
    }

    pub fn m(self) -> u32 {
        self.m
    }

    /// Number of grades, `m + 1`.
    pub fn len(self) -> usize {
        self.m as usize + 1
    }

    pub fn is_empty(self) -> bool {
        false
    }

    pub fn top(self) -> Grade {
        Grade {
            num: self.m,
            m: self.m,
        }
    }

    pub fn bottom(self) -> Grade {
        Grade { num: 0, m: self.m }
    }

    pub fn grade(self, numerator: u32) -> Result<Grade> {
        if numerator > self.m {
            return Err(Error::GradeOutOfRange {
                numerator,
                m: self.m,
            });
        }
        Ok(Grade {
            num: numerator,
            m: self.m,
        })
    }

    /// The grade equal to `p/q`, if it lies on this chain.
    pub fn from_ratio(self, p: u64, q: u64) -> Option<Grade> {
        if q == 0 || p > q {
            return None;
        }
        let scaled = p * u64::from(self.m);
        scaled.is_multiple_of(q).then(|| Grade {
            num: (scaled / q) as u32,
            m: self.m,
        })
    }

    /// The grades immediately below and above `p/q` (equal when `p/q` is on the chain).
    pub fn bracket(self, p: u64, q: u64) -> Option<(Grade, Grade)> {
        if q == 0 || p > q {
            return None;
        }
        let scaled = p * u64::from(self.m);
        let lo = (scaled / q) as u32;
        let hi = if scaled.is_multiple_of(q) { lo } else { lo + 1 };
        Some((Grade { num: lo, m: self.m }, Grade { num: hi, m: self.m }))
    }

    pub fn grades(self) -> impl Iterator<Item = Grade> {
        (0..=self.m).map(move |num| Grade { num, m: self.m })
    }
}

impl fmt::Display for GradeChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[0,1]_{}", self.m)
    }
}

/// A grade `num/m`; only grades of the same chain are comparable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Grade {
    num: u32,
    m: u32,
}

impl Grade {
    pub fn numerator(self) -> u32 {
        self.num
    }

    pub fn chain(self) -> GradeChain {
        GradeChain { m: self.m }
    }

    pub fn is_top(self) -> bool {
        self.num == self.m
    }

    pub fn is_bottom(self) -> bool {
        self.num == 0
    }

    /// Value comparison across chains by cross-multiplication.
    pub fn cmp_value(self, other: Grade) -> Ordering {
        (u64::from(self.num) * u64::from(other.m)).cmp(&(u64::from(other.num) * u64::from(self.m)))
    }

    /// Lossy, for display only.
    pub fn to_f64(self) -> f64 {
        f64::from(self.num) / f64::from(self.m)
    }
}

impl PartialOrd for Grade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        (self.m == other.m).then(|| self.num.cmp(&other.num))
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.m)
    }
}
