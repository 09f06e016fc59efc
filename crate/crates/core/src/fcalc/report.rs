use std::fmt;

use serde::{Deserialize, Serialize};

use crate::extremal::PartitionWitness;
use crate::hypercore::Orientation;
use crate::ramsey::PSetColoring;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FValue {
    Exact(u64),
    Interval { lower: u64, upper: u64 },
}

impl FValue {
    pub fn exact(&self) -> Option<u64> {
        match *self {
            FValue::Exact(v) => Some(v),
            FValue::Interval { .. } => None,
        }
    }
}

impl fmt::Display for FValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FValue::Exact(v) => write!(f, "{v}"),
            FValue::Interval { lower, upper } => write!(f, "[{lower}, {upper}]"),
        }
    }
}

/// How a value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FMethod {
    /// Enumeration of all orientations.
    Brute,
    /// `n - M(H, k-1)` with a partition certificate.
    ViaM,
    ClosedForm,
    /// `C(n,p) - b(H,p)` with a forbidden-position orientation.
    Coloring,
    Bound,
}

impl fmt::Display for FMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FMethod::Brute => "brute",
            FMethod::ViaM => "via-m",
            FMethod::ClosedForm => "closed-form",
            FMethod::Coloring => "coloring",
            FMethod::Bound => "bound",
        })
    }
}

/// Value of `f(H,p,k)` with whatever certifies it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FReport {
    pub value: FValue,
    pub method: FMethod,
    pub p: usize,
    pub k: u32,
    /// An orientation attaining the (upper) value.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientation: Option<Orientation>,
    /// Optimal partition, for values obtained through `M`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<PartitionWitness>,
    /// Optimal colored family, for values obtained through `b`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coloring: Option<PSetColoring>,
    /// Search nodes or orientations visited.
    pub nodes: u64,
}
