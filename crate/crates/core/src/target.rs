//! The rank statistics, inequalities and identities this crate knows about,
//! and the short ids (`1.4`, `T2.2a`, ...) used to name them on the command
//! line and in reports.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RankKind {
    /// Largest part minus number of parts, over all partitions.
    Dyson,
    /// `⌈largest/2⌉` minus number of parts, over partitions without
    /// repeated odd parts.
    M2,
}

impl fmt::Display for RankKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RankKind::Dyson => "dyson",
            RankKind::M2 => "m2",
        })
    }
}

impl FromStr for RankKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "dyson" => Ok(RankKind::Dyson),
            "m2" => Ok(RankKind::M2),
            _ => Err(Error::UnknownId(s.to_string())),
        }
    }
}

/// `Σ_{s∈plus} N(s, m, r + step·n) − Σ_{s∈minus} N(s, m, r + step·n)` as a
/// function of `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankDifference {
    pub kind: RankKind,
    pub modulus: u32,
    pub plus: &'static [u32],
    pub minus: &'static [u32],
    pub residue: u32,
    pub step: u32,
}

/// The seven conjectured inequalities between rank counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Inequality {
    /// `N(0,10,5n) + N(1,10,5n) > N(4,10,5n) + N(5,10,5n)`, `n ≥ 0`.
    RankZeroOne,
    /// `N(1,10,5n) + N(2,10,5n) ≥ N(3,10,5n) + N(4,10,5n)`, `n ≥ 1`.
    RankOneTwo,
    /// `N₂(0,10,5n) + N₂(1,10,5n) > N₂(4,10,5n) + N₂(5,10,5n)`, `n ≥ 0`.
    M2ZeroOne,
    /// Same residues as [`Inequality::M2ZeroOne`] on `5n + 4`, `n ≥ 0`.
    M2ZeroOneShifted,
    /// `N₂(1,10,5n) + N₂(2,10,5n) > N₂(3,10,5n) + N₂(4,10,5n)`, `n ≥ 1`.
    M2OneTwo,
    /// Same residues as [`Inequality::M2OneTwo`] on `5n + 2`, `n ≥ 1`.
    M2OneTwoShifted,
    /// `N₂(0,6,3n+2) + N₂(1,6,3n+2) > N₂(2,6,3n+2) + N₂(3,6,3n+2)`, `n ≥ 0`.
    M2Mod6,
}

impl Inequality {
    pub const ALL: [Inequality; 7] = [
        Inequality::RankZeroOne,
        Inequality::RankOneTwo,
        Inequality::M2ZeroOne,
        Inequality::M2ZeroOneShifted,
        Inequality::M2OneTwo,
        Inequality::M2OneTwoShifted,
        Inequality::M2Mod6,
    ];

    /// The four inequalities with a complete computational proof pipeline.
    pub const PROVED: [Inequality; 4] = [
        Inequality::RankZeroOne,
        Inequality::RankOneTwo,
        Inequality::M2ZeroOne,
        Inequality::M2ZeroOneShifted,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Inequality::RankZeroOne => "1.4",
            Inequality::RankOneTwo => "1.5",
            Inequality::M2ZeroOne => "1.6",
            Inequality::M2ZeroOneShifted => "1.7",
            Inequality::M2OneTwo => "1.8",
            Inequality::M2OneTwoShifted => "1.9",
            Inequality::M2Mod6 => "1.10",
        }
    }

    pub fn difference(self) -> RankDifference {
        use RankKind::*;
        let (kind, modulus, plus, minus, residue, step): (_, _, &'static [u32], &'static [u32], _, _) =
            match self {
                Inequality::RankZeroOne => (Dyson, 10, &[0, 1], &[4, 5], 0, 5),
                Inequality::RankOneTwo => (Dyson, 10, &[1, 2], &[3, 4], 0, 5),
                Inequality::M2ZeroOne => (M2, 10, &[0, 1], &[4, 5], 0, 5),
                Inequality::M2ZeroOneShifted => (M2, 10, &[0, 1], &[4, 5], 4, 5),
                Inequality::M2OneTwo => (M2, 10, &[1, 2], &[3, 4], 0, 5),
                Inequality::M2OneTwoShifted => (M2, 10, &[1, 2], &[3, 4], 2, 5),
                Inequality::M2Mod6 => (M2, 6, &[0, 1], &[2, 3], 2, 3),
            };
        RankDifference {
            kind,
            modulus,
            plus,
            minus,
            residue,
            step,
        }
    }

    /// Smallest `n` the inequality is claimed for.
    pub fn first_n(self) -> u32 {
        match self {
            Inequality::RankOneTwo | Inequality::M2OneTwo | Inequality::M2OneTwoShifted => 1,
            _ => 0,
        }
    }

    /// Whether the conjecture is stated with `≥` rather than `>`.
    pub fn stated_non_strict(self) -> bool {
        self == Inequality::RankOneTwo
    }

    pub fn is_proved(self) -> bool {
        Self::PROVED.contains(&self)
    }
}

/// The three rank-difference generating function identities the proofs
/// start from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    /// Generating function of `N(0,10,n) + N(1,10,n) − N(4,10,n) − N(5,10,n)`.
    RankZeroOne,
    /// Generating function of `N(1,10,n) + N(2,10,n) − N(3,10,n) − N(4,10,n)`.
    RankOneTwo,
    /// Generating function of `N₂(0,10,n) + N₂(1,10,n) − N₂(4,10,n) − N₂(5,10,n)`.
    M2ZeroOne,
}

impl Identity {
    pub const ALL: [Identity; 3] = [Identity::RankZeroOne, Identity::RankOneTwo, Identity::M2ZeroOne];

    pub fn id(self) -> &'static str {
        match self {
            Identity::RankZeroOne => "T2.2a",
            Identity::RankOneTwo => "T2.2b",
            Identity::M2ZeroOne => "T2.3",
        }
    }

    pub fn difference(self) -> RankDifference {
        let base = match self {
            Identity::RankZeroOne => Inequality::RankZeroOne,
            Identity::RankOneTwo => Inequality::RankOneTwo,
            Identity::M2ZeroOne => Inequality::M2ZeroOne,
        }
        .difference();
        RankDifference {
            residue: 0,
            step: 1,
            ..base
        }
    }
}

/// Anything `qrank verify` accepts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    Inequality(Inequality),
    Identity(Identity),
}

impl Target {
    pub fn id(self) -> &'static str {
        match self {
            Target::Inequality(i) => i.id(),
            Target::Identity(i) => i.id(),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Inequality {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Inequality::ALL
            .into_iter()
            .find(|i| i.id() == s)
            .ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

impl FromStr for Identity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Identity::ALL
            .into_iter()
            .find(|i| i.id() == s)
            .ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

impl FromStr for Target {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        s.parse::<Inequality>()
            .map(Target::Inequality)
            .or_else(|_| s.parse::<Identity>().map(Target::Identity))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for i in Inequality::ALL {
            assert_eq!(i.id().parse::<Target>().unwrap(), Target::Inequality(i));
        }
        for i in Identity::ALL {
            assert_eq!(i.id().parse::<Target>().unwrap(), Target::Identity(i));
        }
        assert!("9.9".parse::<Target>().is_err());
    }
}
