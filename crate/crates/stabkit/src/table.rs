//! The two reference comparison tables: embedded expected values and their
//! recomputation.

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gitbounds::{bound_report, BoundReport, Family, TripleQuery};
use crate::stabilization::{sequence, StabilizationQuery};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableId {
    /// Direction `((1),(1),(1))`: D1, Dm, Dreal, DB, DV, DBOR1, DBOR2.
    Murnaghan,
    /// Direction `((1,1),(1,1),(2))`: D2, Dreal.
    Squares,
}

impl TableId {
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "murnaghan" | "1" => Ok(TableId::Murnaghan),
            "squares" | "2" => Ok(TableId::Squares),
            other => Err(Error::parse(
                other,
                "table must be `murnaghan` or `squares`",
            )),
        }
    }

    pub fn family(self) -> Family {
        match self {
            TableId::Murnaghan => Family::Murnaghan,
            TableId::Squares => Family::Squares,
        }
    }

    pub fn columns(self) -> &'static [&'static str] {
        match self {
            TableId::Murnaghan => &["D1", "Dm", "Dreal", "DB", "DV", "DBOR1", "DBOR2"],
            TableId::Squares => &["D2", "Dreal"],
        }
    }

    /// Columns that are only echoed from the fixture, never computed.
    pub fn fixture_only(self) -> &'static [&'static str] {
        match self {
            TableId::Murnaghan => &["DV", "DBOR1"],
            TableId::Squares => &[],
        }
    }

    pub fn rows(self) -> &'static [FixtureRow] {
        match self {
            TableId::Murnaghan => &MURNAGHAN_ROWS,
            TableId::Squares => &SQUARES_ROWS,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct FixtureRow {
    pub triple: &'static str,
    /// Printed values, in [`TableId::columns`] order.
    pub expected: &'static [u64],
    /// Columns whose printed value is known to disagree with the formula.
    pub known_mismatch: &'static [&'static str],
}

const fn row(triple: &'static str, expected: &'static [u64]) -> FixtureRow {
    FixtureRow {
        triple,
        expected,
        known_mismatch: &[],
    }
}

pub static MURNAGHAN_ROWS: [FixtureRow; 12] = [
    FixtureRow {
        triple: "8,5,2 / 6,5,2,2 / 4,4,3,3,1",
        expected: &[6, 5, 5, 5, 5, 5, 6],
        // the converted formula is symmetric and gives 5
        known_mismatch: &["DBOR2"],
    },
    row("4,3,3 / 3,2^3,1 / 2^3,1^4", &[4, 4, 3, 5, 5, 4, 4]),
    row("5,5,4,4 / 6^3 / 3,3,2^4,1^4", &[5, 5, 5, 10, 11, 6, 9]),
    row("6,5,5 / 8,8 / 4,4,3,3,2", &[4, 4, 4, 6, 7, 4, 7]),
    row("5^4 / 4^5 / 2^4,1^12", &[5, 4, 4, 13, 14, 6, 10]),
    row("6^3 / 3^6 / 2^6,1^6", &[7, 6, 6, 11, 11, 7, 9]),
    row("5,5,4,4 / 6^3 / 3,2^6,1^3", &[4, 4, 4, 9, 11, 5, 8]),
    row("7,6 / 6,5,2 / 7,3,2,1", &[3, 3, 3, 3, 4, 3, 3]),
    row("8,4,3,3,1 / 7,3^4 / 14,3,2", &[0, 0, 0, 0, 0, 0, 0]),
    row("8,5,3,1 / 2,1^15 / 4,3,3,2,2,1^3", &[3, 1, 1, 6, 7, 2, 6]),
    row("6,6,4 / 8,8 / 5,5,4,1,1", &[7, 6, 6, 7, 7, 7, 8]),
    row("8,6,6,2,1 / 14,5,4 / 5^4,3", &[6, 6, 5, 6, 8, 5, 6]),
];

pub static SQUARES_ROWS: [FixtureRow; 12] = [
    row("5,5,4,4 / 6^3 / 3,3,2^4,1^4", &[5, 4]),
    row("5^4 / 4^5 / 2^4,1^12", &[5, 4]),
    row("6,5,5 / 6,5,5 / 3,3,2^4,1,1", &[4, 4]),
    row("8,5,2 / 6,5,2,2 / 4,4,3,2,2", &[4, 4]),
    row("4,3,3 / 4,3,3 / 2^3,1^4", &[3, 3]),
    row("5,4,4 / 5,4,4 / 3,2^3,1^4", &[3, 3]),
    row("6,5,5 / 8,8 / 4,4,3,3,2", &[3, 2]),
    row("6,6,6 / 9,9 / 6,4,3,3,2", &[3, 1]),
    row("10,8,6 / 12,12 / 6,5,4,4,3,2", &[1, 1]),
    row("8,2 / 6,4 / 5,4,1", &[1, 1]),
    row("6,6 / 8,4 / 6,4,2", &[0, 0]),
    row("20,5 / 13,12 / 11,10,3,1", &[2, 1]),
];

/// How many extra terms past each bound the soundness check inspects.
pub const SOUNDNESS_WINDOW: u32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CellStatus {
    #[serde(rename = "match")]
    Match,
    #[serde(rename = "mismatch-known")]
    MismatchKnown,
    #[serde(rename = "mismatch")]
    Mismatch,
    #[serde(rename = "fixture")]
    Fixture,
}

impl CellStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CellStatus::Match => "match",
            CellStatus::MismatchKnown => "mismatch-known",
            CellStatus::Mismatch => "mismatch",
            CellStatus::Fixture => "fixture",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub column: String,
    pub expected: u64,
    pub computed: Option<u64>,
    pub status: CellStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SoundnessCheck {
    pub bound: String,
    pub value: u64,
    /// The sequence is constant on `[value, value + window]`.
    pub constant_after: bool,
    /// `d_real ≤ value`.
    pub above_d_real: bool,
}

impl SoundnessCheck {
    pub fn holds(&self) -> bool {
        self.constant_after && self.above_d_real
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowReport {
    pub triple: String,
    pub cells: Vec<Cell>,
    pub d_real: u64,
    pub limit: u64,
    /// Sequence values for `d = 0..`, long enough to cover every soundness window.
    pub sequence: Vec<u64>,
    /// Which bound certified the limit.
    pub certificate: String,
    pub soundness: Vec<SoundnessCheck>,
    pub bounds: BoundReport,
}

impl RowReport {
    pub fn cell(&self, column: &str) -> Option<&Cell> {
        self.cells.iter().find(|c| c.column == column)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub table: TableId,
    pub columns: Vec<String>,
    pub rows: Vec<RowReport>,
}

impl TableReport {
    /// No unexpected mismatch anywhere.
    pub fn all_match(&self) -> bool {
        self.rows
            .iter()
            .flat_map(|r| &r.cells)
            .all(|c| c.status != CellStatus::Mismatch)
    }
}

/// The bounds of a row that are claimed to be sound, with their values.
fn claimed_bounds(r: &BoundReport) -> Vec<(&'static str, u64)> {
    let candidates = [
        ("D1", r.d1),
        ("D1_fixed", r.d1_fixed),
        ("D2", r.d2),
        ("D2_fixed", r.d2_fixed),
        ("DB", r.db),
        ("DB_improved", r.db_improved),
        ("DBOR2", r.dbor2),
        ("DBOR2_improved", r.dbor2_improved),
        ("Dm", r.dm),
        ("D_hm_generic", r.d_hm_generic),
    ];
    candidates
        .into_iter()
        .filter_map(|(n, v)| v.map(|v| (n, v)))
        .collect()
}

pub fn evaluate_row(table: TableId, fixture: &FixtureRow) -> Result<RowReport> {
    let q = TripleQuery::parse(fixture.triple, table.family())?;
    let bounds = bound_report(&q);
    let claimed = claimed_bounds(&bounds);
    let (cert_name, cert) = match table {
        TableId::Murnaghan => ("D1", bounds.d1.or(bounds.dm)),
        TableId::Squares => ("D2", bounds.d2),
    };
    let cert = cert
        .ok_or_else(|| Error::Degenerate(format!("no certifying bound for {}", fixture.triple)))?;
    let last = claimed.iter().map(|c| c.1).max().unwrap_or(0).max(cert) + SOUNDNESS_WINDOW as u64;

    let sq = StabilizationQuery::certified(
        [q.lambda.clone(), q.mu.clone(), q.nu.clone()],
        table.family(),
        cert as u32,
        cert_name,
    )?;
    let seq: Vec<u64> = sequence(&sq, last as u32)?
        .into_iter()
        .map(|v| {
            v.to_u64()
                .ok_or_else(|| Error::Limit(format!("sequence value {v} exceeds u64")))
        })
        .collect::<Result<_>>()?;
    let c = cert as usize;
    let limit = seq[c];
    if seq[c..].iter().any(|&v| v != limit) {
        return Err(Error::Certificate(format!(
            "{}: sequence {seq:?} not constant from {cert_name} = {cert}",
            fixture.triple
        )));
    }
    let mut d_real = c;
    while d_real > 0 && seq[d_real - 1] == limit {
        d_real -= 1;
    }
    let d_real = d_real as u64;

    let soundness = claimed
        .iter()
        .map(|&(name, b)| {
            let window = &seq[b as usize..=(b + SOUNDNESS_WINDOW as u64) as usize];
            SoundnessCheck {
                bound: name.to_string(),
                value: b,
                constant_after: window.iter().all(|&v| v == window[0]),
                above_d_real: d_real <= b,
            }
        })
        .collect();

    let computed = |col: &str| -> Option<u64> {
        match col {
            "D1" => bounds.d1,
            "Dm" => bounds.dm,
            "Dreal" => Some(d_real),
            "DB" => bounds.db,
            "DBOR2" => bounds.dbor2,
            "D2" => bounds.d2,
            _ => None,
        }
    };
    let cells = table
        .columns()
        .iter()
        .zip(fixture.expected)
        .map(|(&col, &expected)| {
            let value = computed(col);
            let status = if table.fixture_only().contains(&col) {
                CellStatus::Fixture
            } else if value == Some(expected) {
                CellStatus::Match
            } else if fixture.known_mismatch.contains(&col) {
                CellStatus::MismatchKnown
            } else {
                CellStatus::Mismatch
            };
            Cell {
                column: col.to_string(),
                expected,
                computed: value,
                status,
            }
        })
        .collect();

    Ok(RowReport {
        triple: fixture.triple.to_string(),
        cells,
        d_real,
        limit,
        sequence: seq,
        certificate: format!("{cert_name} = {cert}"),
        soundness,
        bounds,
    })
}

/// Evaluates every row (in parallel); rows come back in fixture order.
pub fn evaluate_table(table: TableId) -> Result<TableReport> {
    let rows = table
        .rows()
        .par_iter()
        .map(|f| evaluate_row(table, f))
        .collect::<Result<Vec<_>>>()?;
    Ok(TableReport {
        table,
        columns: table.columns().iter().map(|s| s.to_string()).collect(),
        rows,
    })
}
