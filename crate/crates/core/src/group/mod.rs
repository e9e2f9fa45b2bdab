//! Shuffle groups: exact orders, parity and transitivity.

mod chain;
pub mod orbit;
mod theorem;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

pub use chain::{schreier_sims, StabilizerChain};
pub use theorem::{
    closed_form_order, factorize, format_factored, render_report_table, verify_theorem, ClosedForm,
    GroupOrderReport,
};

use crate::deck::{check_size, Permutation};
use crate::error::{Error, Result};
use crate::shuffle::ShuffleKind;

/// Tuning knobs for the group computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroupConfig {
    /// Largest deck size `2n` accepted by [`group_order`].
    pub size_cap: usize,
    /// Chain orders up to this bound are re-derived by enumeration.
    pub oracle_limit: usize,
    /// Largest orbit [`tuple_transitivity_order`] will enumerate.
    pub node_cap: usize,
}

impl Default for GroupConfig {
    fn default() -> Self {
        GroupConfig {
            size_cap: 40,
            oracle_limit: 1_000_000,
            node_cap: 1_000_000,
        }
    }
}

impl GroupConfig {
    pub fn with_size_cap(self, size_cap: usize) -> Self {
        GroupConfig { size_cap, ..self }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Faro,
    Flip,
    Horse,
}

impl FamilyKind {
    pub fn at(self, size: usize) -> GroupFamily {
        match self {
            FamilyKind::Faro => GroupFamily::Faro(size),
            FamilyKind::Flip => GroupFamily::Flip(size),
            FamilyKind::Horse => GroupFamily::Horse(size),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Faro => "faro",
            FamilyKind::Flip => "flip",
            FamilyKind::Horse => "horse",
        }
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "faro" => Ok(FamilyKind::Faro),
            "flip" => Ok(FamilyKind::Flip),
            "horse" | "horseshoe" => Ok(FamilyKind::Horse),
            _ => Err(Error::Parse(format!("unknown group family {s:?}"))),
        }
    }
}

/// A shuffle group together with its deck size.
///
/// Faro and horseshoe groups act on the `2n` positions. Flip groups act on
/// `4n` points, one per (position, face) state.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupFamily {
    Faro(usize),
    Flip(usize),
    Horse(usize),
}

impl GroupFamily {
    pub fn kind(self) -> FamilyKind {
        match self {
            GroupFamily::Faro(_) => FamilyKind::Faro,
            GroupFamily::Flip(_) => FamilyKind::Flip,
            GroupFamily::Horse(_) => FamilyKind::Horse,
        }
    }

    pub fn size(self) -> usize {
        match self {
            GroupFamily::Faro(s) | GroupFamily::Flip(s) | GroupFamily::Horse(s) => s,
        }
    }

    /// Number of points the generators act on.
    pub fn degree(self) -> usize {
        match self {
            GroupFamily::Flip(s) => 2 * s,
            _ => self.size(),
        }
    }

    pub fn generators(self) -> Result<Vec<Permutation>> {
        let size = self.size();
        check_size(size)?;
        let (inner, outer) = match self {
            GroupFamily::Faro(_) => (ShuffleKind::FaroIn, ShuffleKind::FaroOut),
            GroupFamily::Flip(_) => (ShuffleKind::FlipIn, ShuffleKind::FlipOut),
            GroupFamily::Horse(_) => (ShuffleKind::HorseIn, ShuffleKind::HorseOut),
        };
        [inner, outer]
            .into_iter()
            .map(|kind| {
                let e = kind.element(size)?;
                Ok(match self {
                    GroupFamily::Flip(_) => e.to_point_permutation(),
                    _ => e.perm().clone(),
                })
            })
            .collect()
    }

    pub fn chain(self) -> Result<StabilizerChain> {
        Ok(schreier_sims(self.degree(), &self.generators()?))
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            GroupFamily::Faro(_) => "Faro",
            GroupFamily::Flip(_) => "Flip",
            GroupFamily::Horse(_) => "Horse",
        };
        write!(f, "{name}({})", self.size())
    }
}

/// Exact order of a shuffle group from its stabilizer chain. Orders up to
/// `config.oracle_limit` are confirmed by enumerating the group.
pub fn group_order(family: GroupFamily, config: &GroupConfig) -> Result<BigUint> {
    let size = family.size();
    check_size(size)?;
    if size > config.size_cap {
        return Err(Error::SizeCap {
            size,
            cap: config.size_cap,
        });
    }
    let order = family.chain()?.order();
    if order <= BigUint::from(config.oracle_limit) {
        let enumerated = orbit::enumerate_group_order(
            family.degree(),
            &family.generators()?,
            config.oracle_limit,
        )?;
        if BigUint::from(enumerated) != order {
            return Err(Error::OracleMismatch {
                chain: order.to_string(),
                enumerated: enumerated.to_string(),
            });
        }
    }
    Ok(order)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Sign of `p` from its cycle count: a permutation of `m` points with `c`
/// cycles is a product of `m - c` transpositions.
pub fn permutation_parity(p: &Permutation) -> Parity {
    if (p.len() - p.cycles().len()).is_multiple_of(2) {
        Parity::Even
    } else {
        Parity::Odd
    }
}

/// Size of the orbit of the ordered tuple `(0, 1, ..., t-1)`. When it
/// equals the group order the action is sharply `t`-transitive on the
/// tuples it reaches.
pub fn tuple_transitivity_order(
    generators: &[Permutation],
    t: usize,
    size: usize,
    config: &GroupConfig,
) -> Result<BigUint> {
    if t > size {
        return Err(Error::PositionOutOfRange { position: t, size });
    }
    if let Some(g) = generators.iter().find(|g| g.len() != size) {
        return Err(Error::SizeMismatch {
            expected: size,
            actual: g.len(),
        });
    }
    let start: Vec<u16> = (0..t as u16).collect();
    Ok(BigUint::from(orbit::orbit_size(
        generators,
        &start,
        config.node_cap,
    )?))
}
