//! Entropic index: the free parameter selecting a member of a
//! generalized-Gaussian family.
//!
//! Each family deforms the standard Gaussian through one dimensionless index:
//! Rényi's α, Tsallis' q, or Kaniadakis' κ. The conventional Gaussian sits at
//! (α, q, κ) = (1, 1, 0). Valid ranges differ between density evaluation and
//! objective/influence use:
//!
//! | family     | objective/influence | density            |
//! |------------|---------------------|--------------------|
//! | Rényi      | (1/3, 1]            | (1/3, 1) ∪ (1, ∞)  |
//! | Tsallis    | [1, 3)              | (−∞, 1) ∪ (1, 3)   |
//! | Kaniadakis | [0, 2/3)            | (0, 2/3)           |
//!
//! Construction accepts the union of both ranges; each operation then checks
//! the range it needs. Indices within `CONVENTIONAL_LIMIT_TOL` of the
//! conventional limit are routed to the plain Gaussian branch, because the
//! deformed formulas are numerically indeterminate there.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Distance from the conventional limit below which the Gaussian branch is used.
pub const CONVENTIONAL_LIMIT_TOL: f64 = 1e-8;

/// Upper end of the Kaniadakis range, `2/3`.
pub const KAPPA_MAX: f64 = 2.0 / 3.0;

/// The four error-law families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Gaussian,
    Renyi,
    Tsallis,
    Kaniadakis,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Gaussian => "gaussian",
            Family::Renyi => "renyi",
            Family::Tsallis => "tsallis",
            Family::Kaniadakis => "kaniadakis",
        }
    }

    /// The index value at which the family reduces to the Gaussian.
    pub fn conventional_value(&self) -> f64 {
        match self {
            Family::Gaussian | Family::Renyi | Family::Tsallis => 1.0,
            Family::Kaniadakis => 0.0,
        }
    }

    /// The sweep range used throughout the experiments: the conventional value
    /// at one end, the robust limit at the other.
    pub fn sweep_range(&self) -> (f64, f64) {
        match self {
            Family::Gaussian => (1.0, 1.0),
            Family::Renyi => (0.3334, 1.0),
            Family::Tsallis => (1.0, 2.9999),
            Family::Kaniadakis => (0.0, 0.6666),
        }
    }

    /// The robust end of the sweep range (α → 1/3, q → 3, κ → 2/3), clipped to
    /// the values actually used in the sweeps.
    pub fn limit_value(&self) -> f64 {
        match self {
            Family::Gaussian => 1.0,
            Family::Renyi => 0.3334,
            Family::Tsallis => 2.9999,
            Family::Kaniadakis => 0.6666,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gaussian" | "conventional" => Ok(Family::Gaussian),
            "renyi" | "alpha" => Ok(Family::Renyi),
            "tsallis" | "q" => Ok(Family::Tsallis),
            "kaniadakis" | "kappa" => Ok(Family::Kaniadakis),
            other => Err(Error::Config(format!("unknown family '{other}'"))),
        }
    }
}

/// A validated (family, index value) pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropicIndex {
    family: Family,
    value: f64,
}

impl EntropicIndex {
    /// The conventional Gaussian (no index).
    pub fn gaussian() -> Self {
        EntropicIndex {
            family: Family::Gaussian,
            value: 1.0,
        }
    }

    /// Rényi α index. Accepts α ∈ (1/3, ∞).
    pub fn renyi(alpha: f64) -> Result<Self> {
        if !alpha.is_finite() || alpha <= 1.0 / 3.0 {
            return Err(Error::IndexOutOfRange {
                family: Family::Renyi,
                value: alpha,
                usage: "construction",
                expected: "alpha in (1/3, inf)",
            });
        }
        Ok(EntropicIndex {
            family: Family::Renyi,
            value: alpha,
        })
    }

    /// Tsallis q index. Accepts q ∈ (−∞, 3).
    pub fn tsallis(q: f64) -> Result<Self> {
        if !q.is_finite() || q >= 3.0 {
            return Err(Error::IndexOutOfRange {
                family: Family::Tsallis,
                value: q,
                usage: "construction",
                expected: "q in (-inf, 3)",
            });
        }
        Ok(EntropicIndex {
            family: Family::Tsallis,
            value: q,
        })
    }

    /// Kaniadakis κ index. Accepts κ ∈ [0, 2/3).
    pub fn kaniadakis(kappa: f64) -> Result<Self> {
        if !kappa.is_finite() || !(0.0..KAPPA_MAX).contains(&kappa) {
            return Err(Error::IndexOutOfRange {
                family: Family::Kaniadakis,
                value: kappa,
                usage: "construction",
                expected: "kappa in [0, 2/3)",
            });
        }
        Ok(EntropicIndex {
            family: Family::Kaniadakis,
            value: kappa,
        })
    }

    /// Build an index from a family and a raw value.
    pub fn new(family: Family, value: f64) -> Result<Self> {
        match family {
            Family::Gaussian => Ok(Self::gaussian()),
            Family::Renyi => Self::renyi(value),
            Family::Tsallis => Self::tsallis(value),
            Family::Kaniadakis => Self::kaniadakis(value),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// The raw index value; `None` for the Gaussian family.
    pub fn value(&self) -> Option<f64> {
        match self.family {
            Family::Gaussian => None,
            _ => Some(self.value),
        }
    }

    /// True when the index is numerically at the conventional limit and the
    /// Gaussian branch should be evaluated instead of the deformed formulas.
    pub fn is_conventional(&self) -> bool {
        match self.family {
            Family::Gaussian => true,
            Family::Renyi | Family::Tsallis => (self.value - 1.0).abs() <= CONVENTIONAL_LIMIT_TOL,
            Family::Kaniadakis => self.value.abs() <= CONVENTIONAL_LIMIT_TOL,
        }
    }

    /// Check the range required by objective and influence evaluation:
    /// Rényi (1/3, 1], Tsallis [1, 3), Kaniadakis [0, 2/3).
    pub fn validate_for_objective(&self) -> Result<()> {
        let ok = match self.family {
            Family::Gaussian => true,
            Family::Renyi => self.value > 1.0 / 3.0 && self.value <= 1.0,
            Family::Tsallis => (1.0..3.0).contains(&self.value),
            Family::Kaniadakis => (0.0..KAPPA_MAX).contains(&self.value),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                family: self.family,
                value: self.value,
                usage: "objective/influence",
                expected: match self.family {
                    Family::Renyi => "alpha in (1/3, 1]",
                    Family::Tsallis => "q in [1, 3)",
                    _ => "kappa in [0, 2/3)",
                },
            })
        }
    }

    /// Check the range required by density evaluation. Values at the
    /// conventional limit are accepted and routed to the Gaussian form.
    pub fn validate_for_density(&self) -> Result<()> {
        let ok = match self.family {
            Family::Gaussian => true,
            Family::Renyi => self.value > 1.0 / 3.0,
            Family::Tsallis => self.value < 3.0,
            Family::Kaniadakis => (0.0..KAPPA_MAX).contains(&self.value),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                family: self.family,
                value: self.value,
                usage: "density",
                expected: match self.family {
                    Family::Renyi => "alpha in (1/3, 1) or (1, inf)",
                    Family::Tsallis => "q in (-inf, 1) or (1, 3)",
                    _ => "kappa in (0, 2/3)",
                },
            })
        }
    }

    /// Require a specific family, e.g. for the per-family density functions.
    pub fn expect_family(&self, family: Family) -> Result<f64> {
        if self.family == family {
            Ok(self.value)
        } else {
            Err(Error::FamilyMismatch {
                expected: family,
                got: self.family,
            })
        }
    }
}

impl fmt::Display for EntropicIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Gaussian => write!(f, "gaussian"),
            Family::Renyi => write!(f, "renyi(alpha={})", self.value),
            Family::Tsallis => write!(f, "tsallis(q={})", self.value),
            Family::Kaniadakis => write!(f, "kaniadakis(kappa={})", self.value),
        }
    }
}
