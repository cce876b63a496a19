use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Polyhedral type of π, which decides which symmetric powers are cuspidal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RepType {
    /// Not of solvable polyhedral type: Sym^k π is cuspidal for k ≤ 4.
    #[serde(rename = "general")]
    GeneralNonSolvable,
    Tetrahedral,
    Octahedral,
    Dihedral,
}

impl fmt::Display for RepType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RepType::GeneralNonSolvable => "general",
            RepType::Tetrahedral => "tetrahedral",
            RepType::Octahedral => "octahedral",
            RepType::Dihedral => "dihedral",
        })
    }
}

impl FromStr for RepType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "general" | "generalnonsolvable" => Ok(RepType::GeneralNonSolvable),
            "tetrahedral" => Ok(RepType::Tetrahedral),
            "octahedral" => Ok(RepType::Octahedral),
            "dihedral" | "monomial" => Ok(RepType::Dihedral),
            other => Err(Error::Parse {
                input: other.to_string(),
                reason: "expected general, tetrahedral, octahedral or dihedral".into(),
            }),
        }
    }
}

/// Hypotheses on π under which cuspidality and isomorphism questions are decided.
///
/// `omega_order` is the order of the central character ω; `None` stands for a
/// character of infinite (or unspecified, hence generic) order, so only ω⁰ is trivial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TypeAssumption {
    pub rep_type: RepType,
    pub self_dual: bool,
    pub omega_order: Option<u32>,
}

impl TypeAssumption {
    pub fn new(rep_type: RepType, self_dual: bool, omega_order: Option<u32>) -> Result<Self> {
        if omega_order == Some(0) {
            return Err(Error::InvalidAssumption("omega_order must be at least 1".into()));
        }
        if rep_type != RepType::Dihedral {
            if self_dual && omega_order != Some(1) {
                return Err(Error::InvalidAssumption(
                    "a self-dual non-dihedral π has trivial central character (omega_order = 1)".into(),
                ));
            }
            // π^∨ ≅ π ⊗ ω⁻¹, so a trivial ω forces self-duality.
            if !self_dual && omega_order == Some(1) {
                return Err(Error::InvalidAssumption(
                    "trivial central character makes π self-dual".into(),
                ));
            }
        }
        Ok(TypeAssumption { rep_type, self_dual, omega_order })
    }

    pub fn self_dual(rep_type: RepType) -> Self {
        TypeAssumption { rep_type, self_dual: true, omega_order: Some(1) }
    }

    pub fn non_self_dual(rep_type: RepType) -> Self {
        TypeAssumption { rep_type, self_dual: false, omega_order: None }
    }

    /// Is ω^a the trivial character?
    pub fn omega_power_trivial(&self, a: i64) -> bool {
        self.reduce_omega(a) == 0
    }

    pub fn reduce_omega(&self, a: i64) -> i64 {
        match self.omega_order {
            Some(n) => a.rem_euclid(n as i64),
            None => a,
        }
    }
}

impl fmt::Display for TypeAssumption {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}, {}", self.rep_type, if self.self_dual { "self-dual" } else { "not self-dual" })?;
        match self.omega_order {
            Some(n) => write!(f, ", ord(ω) = {n}"),
            None => write!(f, ", ord(ω) = ∞"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn self_dual_forces_trivial_omega() {
        assert!(TypeAssumption::new(RepType::GeneralNonSolvable, true, Some(2)).is_err());
        assert!(TypeAssumption::new(RepType::GeneralNonSolvable, true, Some(1)).is_ok());
        // dihedral self-dual π may have a quadratic ω
        assert!(TypeAssumption::new(RepType::Dihedral, true, Some(2)).is_ok());
    }

    #[test]
    fn trivial_omega_is_self_dual() {
        assert!(TypeAssumption::new(RepType::Tetrahedral, false, Some(1)).is_err());
        assert!(TypeAssumption::new(RepType::Tetrahedral, false, Some(3)).is_ok());
        assert!(TypeAssumption::new(RepType::Tetrahedral, false, Some(0)).is_err());
    }

    #[test]
    fn omega_triviality() {
        let t = TypeAssumption::new(RepType::GeneralNonSolvable, false, Some(3)).unwrap();
        assert!(t.omega_power_trivial(-3));
        assert!(!t.omega_power_trivial(1));
        let g = TypeAssumption::non_self_dual(RepType::GeneralNonSolvable);
        assert!(g.omega_power_trivial(0));
        assert!(!g.omega_power_trivial(6));
    }

    #[test]
    fn parse_type() {
        assert_eq!("Octahedral".parse::<RepType>().unwrap(), RepType::Octahedral);
        assert!("icosahedral".parse::<RepType>().is_err());
    }
}
