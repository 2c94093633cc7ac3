//! Conversions between partitions, Dyck paths and antichains, all routed
//! through [`LPartition`].

use std::fmt;
use std::str::FromStr;

use crate::insertion::{d_inverse, d_map};
use crate::dyck::DyckPath;
use crate::error::{Error, Result};
use crate::partition::LPartition;
use crate::roots::{Antichain, RootIdeal};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Repr {
    Partition,
    /// Boundary path `P(λ)`.
    Dyck,
    /// Peak-insertion path `D(λ)`.
    DyckInsertion,
    /// Minimal roots of `σ⁻¹(λ)`.
    Antichain,
}

impl Repr {
    pub const ALL: [Repr; 4] = [Repr::Partition, Repr::Dyck, Repr::DyckInsertion, Repr::Antichain];

    pub fn name(self) -> &'static str {
        match self {
            Repr::Partition => "partition",
            Repr::Dyck => "dyck",
            Repr::DyckInsertion => "dyck-akop",
            Repr::Antichain => "antichain",
        }
    }
}

impl fmt::Display for Repr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Repr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Repr::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Parse {
                token: s.to_string(),
                reason: "expected partition, dyck, dyck-akop or antichain".into(),
            })
    }
}

/// A converted object, ready for rendering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Partition(LPartition),
    Dyck(DyckPath),
    Antichain { l: usize, antichain: Antichain },
}

impl Value {
    pub fn text(&self) -> String {
        match self {
            Value::Partition(lambda) => lambda.to_string(),
            Value::Dyck(path) => path.to_string(),
            Value::Antichain { antichain, .. } => antichain.to_string(),
        }
    }

    pub fn json(&self) -> String {
        let out = match self {
            Value::Partition(lambda) => serde_json::to_string(lambda),
            Value::Dyck(path) => serde_json::to_string(path),
            Value::Antichain { l, antichain } => {
                serde_json::to_string(&RootIdeal::from_antichain(antichain, *l))
            }
        };
        out.expect("value types serialize infallibly")
    }
}

pub fn to_partition(value: &Value, kind: Repr) -> Result<LPartition> {
    match (value, kind) {
        (Value::Partition(lambda), Repr::Partition) => Ok(lambda.clone()),
        (Value::Dyck(path), Repr::Dyck) => LPartition::p_inverse(path, path.half_length().saturating_sub(1)),
        (Value::Dyck(path), Repr::DyckInsertion) => d_inverse(path, path.half_length().saturating_sub(1)),
        (Value::Antichain { l, antichain }, Repr::Antichain) => {
            Ok(RootIdeal::from_antichain(antichain, *l).sigma())
        }
        (value, kind) => Err(Error::Parse {
            token: value.text(),
            reason: format!("value does not have the shape of a {kind}"),
        }),
    }
}

pub fn from_partition(lambda: &LPartition, kind: Repr) -> Value {
    match kind {
        Repr::Partition => Value::Partition(lambda.clone()),
        Repr::Dyck => Value::Dyck(lambda.p_map()),
        Repr::DyckInsertion => Value::Dyck(d_map(lambda)),
        Repr::Antichain => Value::Antichain {
            l: lambda.rank(),
            antichain: RootIdeal::from_partition(lambda).phi_min(),
        },
    }
}

/// Parses `text` as an object of kind `kind` at rank `l`.
pub fn parse(kind: Repr, l: usize, text: &str) -> Result<Value> {
    match kind {
        Repr::Partition => Ok(Value::Partition(LPartition::parse(l, text)?)),
        Repr::Dyck | Repr::DyckInsertion => {
            let path: DyckPath = text.trim().parse()?;
            if path.half_length() != l + 1 {
                return Err(Error::HalfLengthMismatch {
                    expected: l + 1,
                    found: path.half_length(),
                });
            }
            Ok(Value::Dyck(path))
        }
        Repr::Antichain => Ok(Value::Antichain {
            l,
            antichain: Antichain::parse(l, text)?,
        }),
    }
}

pub fn convert(from: Repr, to: Repr, l: usize, text: &str) -> Result<Value> {
    let value = parse(from, l, text)?;
    Ok(from_partition(&to_partition(&value, from)?, to))
}
