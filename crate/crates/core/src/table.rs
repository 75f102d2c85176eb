//! Rectangular (genus x nodes) grids of counts and their text renderings.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modular::{generating_series, InvariantKind};
use crate::oracle;

/// Which computation filled a table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    /// Coefficients of the quasi-modular generating functions.
    Closed,
    /// Composition sums.
    Oracle,
}

impl Source {
    pub fn name(self) -> &'static str {
        match self {
            Source::Closed => "closed",
            Source::Oracle => "oracle",
        }
    }
}

impl std::str::FromStr for Source {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed" => Ok(Source::Closed),
            "oracle" => Ok(Source::Oracle),
            _ => Err(Error::Argument(format!("unknown source `{s}`"))),
        }
    }
}

/// Counts of one kind for `g` in `g_range` (rows) and `n` in `n_range`
/// (columns), both inclusive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    kind: InvariantKind,
    g_range: (u32, u32),
    n_range: (u32, u32),
    source: Source,
    values: Vec<Vec<BigInt>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableJson {
    kind: InvariantKind,
    g_range: [u32; 2],
    n_range: [u32; 2],
    source: Source,
    values: Vec<Vec<String>>,
}

fn check_range(what: &str, (lo, hi): (u32, u32)) -> Result<()> {
    if lo > hi {
        return Err(Error::Argument(format!("empty {what} range {lo}..={hi}")));
    }
    Ok(())
}

impl CountTable {
    pub fn compute(
        kind: InvariantKind,
        g_range: (u32, u32),
        n_range: (u32, u32),
        source: Source,
    ) -> Result<Self> {
        check_range("genus", g_range)?;
        check_range("node", n_range)?;
        if g_range.0 == 0 {
            return Err(Error::Domain { kind, genus: 0 });
        }
        kind.check_genus(g_range.0)?;
        let values = (g_range.0..=g_range.1)
            .map(|genus| match source {
                Source::Closed => closed_row(kind, genus, n_range),
                Source::Oracle => (n_range.0..=n_range.1)
                    .map(|nodes| oracle::oracle(kind, genus, nodes))
                    .collect(),
            })
            .collect::<Result<_>>()?;
        Ok(Self {
            kind,
            g_range,
            n_range,
            source,
            values,
        })
    }

    pub fn kind(&self) -> InvariantKind {
        self.kind
    }

    pub fn g_range(&self) -> (u32, u32) {
        self.g_range
    }

    pub fn n_range(&self) -> (u32, u32) {
        self.n_range
    }

    pub fn source(&self) -> Source {
        self.source
    }

    /// Rows indexed by genus, columns by node count.
    pub fn values(&self) -> &[Vec<BigInt>] {
        &self.values
    }

    pub fn get(&self, genus: u32, nodes: u32) -> Option<&BigInt> {
        let row = genus.checked_sub(self.g_range.0)? as usize;
        let col = nodes.checked_sub(self.n_range.0)? as usize;
        self.values.get(row)?.get(col)
    }

    /// `(g, n, value)` for every cell, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> + '_ {
        (self.g_range.0..=self.g_range.1)
            .zip(&self.values)
            .flat_map(move |(genus, row)| {
                (self.n_range.0..=self.n_range.1)
                    .zip(row)
                    .map(move |(nodes, v)| (genus, nodes, v))
            })
    }

    /// Same cells, ignoring which computation produced them.
    pub fn same_counts(&self, other: &Self) -> bool {
        self.kind == other.kind
            && self.g_range == other.g_range
            && self.n_range == other.n_range
            && self.values == other.values
    }

    /// Rows `g=..`, columns `n=..`, as a GitHub-flavoured markdown table.
    pub fn to_markdown(&self) -> String {
        let mut out = format!("| {} |", self.kind.symbol());
        for n in self.n_range.0..=self.n_range.1 {
            let _ = write!(out, " n={n} |");
        }
        out.push_str("\n|---|");
        for _ in self.n_range.0..=self.n_range.1 {
            out.push_str("---:|");
        }
        out.push('\n');
        for (genus, row) in (self.g_range.0..=self.g_range.1).zip(&self.values) {
            let _ = write!(out, "| g={genus} |");
            for v in row {
                let _ = write!(out, " {v} |");
            }
            out.push('\n');
        }
        out
    }

    /// Header `g\n,<n_min>,..,<n_max>`, then one row per genus.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("g\\n");
        for n in self.n_range.0..=self.n_range.1 {
            let _ = write!(out, ",{n}");
        }
        out.push('\n');
        for (genus, row) in (self.g_range.0..=self.g_range.1).zip(&self.values) {
            let _ = write!(out, "{genus}");
            for v in row {
                let _ = write!(out, ",{v}");
            }
            out.push('\n');
        }
        out
    }

    /// JSON with every count as a decimal string.
    pub fn to_json(&self) -> String {
        let wire = TableJson {
            kind: self.kind,
            g_range: [self.g_range.0, self.g_range.1],
            n_range: [self.n_range.0, self.n_range.1],
            source: self.source,
            values: self
                .values
                .iter()
                .map(|row| row.iter().map(BigInt::to_string).collect())
                .collect(),
        };
        serde_json::to_string(&wire).expect("table serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let wire: TableJson = serde_json::from_str(text)
            .map_err(|e| Error::Argument(format!("bad table json: {e}")))?;
        let g_range = (wire.g_range[0], wire.g_range[1]);
        let n_range = (wire.n_range[0], wire.n_range[1]);
        check_range("genus", g_range)?;
        check_range("node", n_range)?;
        let rows = (g_range.1 - g_range.0) as usize + 1;
        let cols = (n_range.1 - n_range.0) as usize + 1;
        if wire.values.len() != rows || wire.values.iter().any(|r| r.len() != cols) {
            return Err(Error::Argument(format!(
                "table json values are not a {rows}x{cols} grid"
            )));
        }
        let values = wire
            .values
            .iter()
            .map(|row| {
                row.iter()
                    .map(|cell| {
                        cell.parse::<BigInt>()
                            .map_err(|_| Error::Argument(format!("bad count `{cell}`")))
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        Ok(Self {
            kind: wire.kind,
            g_range,
            n_range,
            source: wire.source,
            values,
        })
    }
}

// One series per genus, read off at every requested exponent.
fn closed_row(kind: InvariantKind, genus: u32, (n_min, n_max): (u32, u32)) -> Result<Vec<BigInt>> {
    let offset = (genus - 1) as usize;
    let series = generating_series(kind, genus, n_max as usize + offset + 1)?;
    (n_min..=n_max)
        .map(|nodes| series.coefficient(nodes as usize + offset)?.to_integer())
        .collect()
}
