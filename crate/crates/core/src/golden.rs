//! Reference tables for `g = 2..=5`, `n = 0..=7`, embedded verbatim.

use crate::error::{Error, Result};
use crate::modular::InvariantKind;

pub const GOLDEN_G_MIN: u32 = 2;
pub const GOLDEN_G_MAX: u32 = 5;
pub const GOLDEN_N_MIN: u32 = 0;
pub const GOLDEN_N_MAX: u32 = 7;

type Grid = [[u64; 8]; 4];

const FLS: Grid = [
    [1, 12, 36, 112, 150, 432, 392, 960],
    [1, 18, 120, 500, 1620, 4116, 9920, 19440],
    [1, 24, 240, 1464, 6594, 23808, 73008, 198480],
    [1, 30, 396, 3220, 18960, 88452, 344960, 1169520],
];

const N: Grid = [
    [2, 12, 24, 56, 60, 144, 112, 240],
    [3, 36, 180, 600, 1620, 3528, 7440, 12960],
    [4, 72, 576, 2928, 11304, 35712, 97344, 238176],
    [5, 120, 1320, 9200, 47400, 196560, 689920, 2126400],
];

/// The two reference grids (fixed-linear-system counts and total counts).
/// Mutable copies exist so the verifier's mismatch path can be exercised.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenTables {
    fls: Grid,
    n: Grid,
}

impl Default for GoldenTables {
    fn default() -> Self {
        Self::embedded()
    }
}

impl GoldenTables {
    pub fn embedded() -> Self {
        Self { fls: FLS, n: N }
    }

    /// Kinds that have reference data.
    pub fn kinds() -> [InvariantKind; 2] {
        [InvariantKind::Fls, InvariantKind::N]
    }

    fn grid(&self, kind: InvariantKind) -> Option<&Grid> {
        match kind {
            InvariantKind::Fls => Some(&self.fls),
            InvariantKind::N => Some(&self.n),
            _ => None,
        }
    }

    fn slot(genus: u32, nodes: u32) -> Option<(usize, usize)> {
        let in_range = (GOLDEN_G_MIN..=GOLDEN_G_MAX).contains(&genus)
            && (GOLDEN_N_MIN..=GOLDEN_N_MAX).contains(&nodes);
        in_range.then(|| {
            (
                (genus - GOLDEN_G_MIN) as usize,
                (nodes - GOLDEN_N_MIN) as usize,
            )
        })
    }

    pub fn get(&self, kind: InvariantKind, genus: u32, nodes: u32) -> Option<u64> {
        let (row, col) = Self::slot(genus, nodes)?;
        Some(self.grid(kind)?[row][col])
    }

    /// Replace one reference cell.
    pub fn set(&mut self, kind: InvariantKind, genus: u32, nodes: u32, value: u64) -> Result<()> {
        let (row, col) = Self::slot(genus, nodes)
            .ok_or_else(|| Error::Argument(format!("no reference cell at g={genus} n={nodes}")))?;
        let grid = match kind {
            InvariantKind::Fls => &mut self.fls,
            InvariantKind::N => &mut self.n,
            _ => return Err(Error::Argument(format!("no reference table for {kind}"))),
        };
        grid[row][col] = value;
        Ok(())
    }
}
