//! Self-contained consistency suite: reference tables, closed form against
//! composition sums, the linear identities between the families, and the
//! three ways of computing `sigma(k)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::golden::{GoldenTables, GOLDEN_G_MAX, GOLDEN_G_MIN, GOLDEN_N_MAX, GOLDEN_N_MIN};
use crate::modular::{eisenstein_g2, fls_identity_series, generating_series, InvariantKind};
use crate::oracle::{divisor_sum, sublattice_count};
use crate::rational::ExactRational;
use crate::table::{CountTable, Source};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyBounds {
    pub g_max: u32,
    pub n_max: u32,
    pub sigma_max: u64,
}

/// First disagreement found by a check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub cell: String,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} expected={} got={}",
            self.cell, self.expected, self.actual
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub mismatch: Option<Mismatch>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.mismatch {
            None => write!(f, "PASS {} ({} cases)", self.name, self.cases),
            Some(m) => write!(f, "FAIL {} {}", self.name, m),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerifyReport {
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| !c.passed())
    }

    pub fn check(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            writeln!(f, "{check}")?;
        }
        Ok(())
    }
}

// Accumulates cases for one named check, remembering the first mismatch.
struct Check {
    name: &'static str,
    cases: usize,
    mismatch: Option<Mismatch>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            cases: 0,
            mismatch: None,
        }
    }

    fn expect<T: PartialEq + fmt::Display>(
        &mut self,
        cell: impl FnOnce() -> String,
        expected: T,
        actual: T,
    ) {
        self.cases += 1;
        if self.mismatch.is_none() && expected != actual {
            self.mismatch = Some(Mismatch {
                cell: cell(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    fn finish(self) -> CheckOutcome {
        CheckOutcome {
            name: self.name,
            cases: self.cases,
            mismatch: self.mismatch,
        }
    }
}

fn cell(kind: InvariantKind, genus: u32, nodes: u32) -> String {
    format!("kind={kind} g={genus} n={nodes}")
}

/// Closed-form and oracle tables for every kind defined somewhere in
/// `1..=g_max`.
struct Tables {
    closed: Vec<CountTable>,
    oracle: Vec<CountTable>,
}

impl Tables {
    fn build(g_max: u32, n_max: u32) -> Result<Self> {
        let mut closed = Vec::new();
        let mut oracle = Vec::new();
        for kind in InvariantKind::ALL {
            let g_min = kind.min_genus();
            if g_min > g_max {
                continue;
            }
            closed.push(CountTable::compute(
                kind,
                (g_min, g_max),
                (0, n_max),
                Source::Closed,
            )?);
            oracle.push(CountTable::compute(
                kind,
                (g_min, g_max),
                (0, n_max),
                Source::Oracle,
            )?);
        }
        Ok(Self { closed, oracle })
    }

    fn closed(&self, kind: InvariantKind) -> Option<&CountTable> {
        self.closed.iter().find(|t| t.kind() == kind)
    }
}

pub fn verify(bounds: VerifyBounds, golden: &GoldenTables) -> Result<VerifyReport> {
    if bounds.g_max == 0 {
        return Err(Error::Argument("--gmax must be at least 1".into()));
    }
    if bounds.sigma_max == 0 {
        return Err(Error::Argument("--sigma-max must be at least 1".into()));
    }
    let VerifyBounds {
        g_max,
        n_max,
        sigma_max,
    } = bounds;
    let tables = Tables::build(g_max, n_max)?;
    let mut checks = Vec::new();

    for (kind, name) in GoldenTables::kinds()
        .into_iter()
        .zip(["golden-fls", "golden-n"])
    {
        let mut check = Check::new(name);
        if let Some(table) = tables.closed(kind) {
            for genus in GOLDEN_G_MIN..=g_max.min(GOLDEN_G_MAX) {
                for nodes in GOLDEN_N_MIN..=n_max.min(GOLDEN_N_MAX) {
                    let expected =
                        BigInt::from(golden.get(kind, genus, nodes).expect("in golden range"));
                    let actual = table.get(genus, nodes).expect("in table range").clone();
                    check.expect(|| cell(kind, genus, nodes), expected, actual);
                }
            }
        }
        checks.push(check.finish());
    }

    for (closed, oracle) in tables.closed.iter().zip(&tables.oracle) {
        let kind = closed.kind();
        let name = match kind {
            InvariantKind::N => "oracle-n",
            InvariantKind::Fls => "oracle-fls",
            InvariantKind::N12 => "oracle-n12",
            InvariantKind::N34 => "oracle-n34",
            _ => continue,
        };
        let mut check = Check::new(name);
        for ((genus, nodes, expected), (_, _, actual)) in closed.cells().zip(oracle.cells()) {
            check.expect(|| cell(kind, genus, nodes), expected, actual);
        }
        checks.push(check.finish());
    }

    let n_table = tables
        .closed(InvariantKind::N)
        .expect("N defined from genus 1");
    let n12 = tables
        .closed(InvariantKind::N12)
        .expect("N12 defined from genus 1");
    let n34 = tables
        .closed(InvariantKind::N34)
        .expect("N34 defined from genus 1");

    let mut scaling = Check::new("identity-scaling");
    let mut d_shift = Check::new("identity-d-shift");
    for (genus, nodes, base) in n34.cells() {
        scaling.expect(
            || cell(InvariantKind::N, genus, nodes),
            BigInt::from(genus) * base,
            n_table.get(genus, nodes).unwrap().clone(),
        );
        d_shift.expect(
            || cell(InvariantKind::N12, genus, nodes),
            BigInt::from(nodes + genus - 1) * base,
            n12.get(genus, nodes).unwrap().clone(),
        );
    }
    checks.push(scaling.finish());
    checks.push(d_shift.finish());

    let mut fls_identity = Check::new("identity-fls");
    if let Some(fls) = tables.closed(InvariantKind::Fls) {
        for (genus, nodes, value) in fls.cells() {
            fls_identity.expect(
                || cell(InvariantKind::Fls, genus, nodes),
                n12.get(genus, nodes).unwrap().clone(),
                BigInt::from(genus - 1) * value,
            );
        }
    }
    checks.push(fls_identity.finish());

    let mut fls_series = Check::new("identity-fls-series");
    let prec = (n_max + g_max) as usize;
    for genus in 2..=g_max {
        let direct = generating_series(InvariantKind::Fls, genus, prec)?;
        let via_d = fls_identity_series(genus, prec)?;
        for (k, (a, b)) in direct
            .coefficients()
            .iter()
            .zip(via_d.coefficients())
            .enumerate()
        {
            fls_series.expect(|| format!("kind=fls g={genus} q^{k}"), a, b);
        }
    }
    checks.push(fls_series.finish());

    let mut vanishing = Check::new("vanishing");
    for kind in InvariantKind::ZEROS {
        for (genus, nodes, value) in tables.closed(kind).expect("defined from genus 1").cells() {
            vanishing.expect(|| cell(kind, genus, nodes), &BigInt::zero(), value);
        }
    }
    checks.push(vanishing.finish());

    let mut sublattice = Check::new("sigma-sublattice");
    let mut g2 = Check::new("sigma-g2");
    let g2_series = eisenstein_g2(sigma_max as usize + 1)?;
    for k in 1..=sigma_max {
        let sigma = divisor_sum(k)?;
        sublattice.expect(|| format!("k={k}"), sigma, sublattice_count(k)?);
        g2.expect(
            || format!("q^{k}"),
            &ExactRational::from_integer(sigma),
            g2_series.coefficient(k as usize)?,
        );
    }
    checks.push(sublattice.finish());
    checks.push(g2.finish());

    Ok(VerifyReport { checks })
}
