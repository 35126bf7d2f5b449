//! Shifted Kronecker sequences and their true stabilization index.

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gitbounds::Family;
use crate::kronecker::kron;
use crate::partitions::Partition;

pub const DEFAULT_MARGIN: u32 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Horizon {
    /// A bound from which the sequence is known to be constant.
    Certified { bound: u32, source: String },
    /// User-chosen horizon; nothing is claimed beyond it.
    Empirical { horizon: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizationQuery {
    pub base: [Partition; 3],
    pub direction: [Partition; 3],
    pub horizon: Horizon,
    pub margin: u32,
}

impl StabilizationQuery {
    pub fn certified(
        base: [Partition; 3],
        family: Family,
        bound: u32,
        source: impl Into<String>,
    ) -> Result<Self> {
        Self::build(
            base,
            family.direction(),
            Horizon::Certified {
                bound,
                source: source.into(),
            },
        )
    }

    pub fn empirical(
        base: [Partition; 3],
        direction: [Partition; 3],
        horizon: u32,
    ) -> Result<Self> {
        Self::build(base, direction, Horizon::Empirical { horizon })
    }

    fn build(base: [Partition; 3], direction: [Partition; 3], horizon: Horizon) -> Result<Self> {
        let n = base[0].size();
        if base.iter().any(|p| p.size() != n) {
            return Err(Error::Domain(
                "base partitions must have equal sizes".into(),
            ));
        }
        let k = direction[0].size();
        if direction.iter().any(|p| p.size() != k) {
            return Err(Error::Domain(
                "direction partitions must have equal sizes".into(),
            ));
        }
        Ok(StabilizationQuery {
            base,
            direction,
            horizon,
            margin: DEFAULT_MARGIN,
        })
    }

    pub fn with_margin(mut self, margin: u32) -> Self {
        self.margin = margin;
        self
    }

    pub fn shifted(&self, d: u32) -> [Partition; 3] {
        [0, 1, 2].map(|i| self.base[i].add_scaled(d, &self.direction[i]))
    }

    fn last_index(&self) -> u32 {
        match &self.horizon {
            Horizon::Certified { bound, .. } => bound + self.margin,
            Horizon::Empirical { horizon } => *horizon,
        }
    }
}

pub fn sequence_term(q: &StabilizationQuery, d: u32) -> Result<BigUint> {
    let [a, b, c] = q.shifted(d);
    kron(&a, &b, &c)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizationResult {
    /// First index from which the sequence is constant (up to the horizon
    /// for empirical runs).
    pub d_real: u32,
    pub limit: BigUint,
    /// Values for `d = 0..=horizon`.
    pub sequence: Vec<BigUint>,
    pub certificate: String,
    pub certified: bool,
}

/// Terms for `d = 0..=last` in parallel, returned in order.
pub fn sequence(q: &StabilizationQuery, last: u32) -> Result<Vec<BigUint>> {
    (0..=last)
        .into_par_iter()
        .map(|d| sequence_term(q, d))
        .collect()
}

pub fn d_real(q: &StabilizationQuery) -> Result<StabilizationResult> {
    let last = q.last_index();
    let seq = sequence(q, last)?;
    match &q.horizon {
        Horizon::Certified { bound, source } => {
            let b = *bound as usize;
            let limit = seq[b].clone();
            if let Some(d) = (b..seq.len()).find(|&d| seq[d] != limit) {
                return Err(Error::Certificate(format!(
                    "value {} at d = {d} differs from {limit} at the bound d = {b} ({source})",
                    seq[d]
                )));
            }
            let d_real = first_constant_index(&seq[..=b]);
            Ok(StabilizationResult {
                d_real,
                limit,
                sequence: seq,
                certificate: format!("{source} = {b}, checked constant up to d = {last}"),
                certified: true,
            })
        }
        Horizon::Empirical { horizon } => {
            let limit = seq[*horizon as usize].clone();
            Ok(StabilizationResult {
                d_real: first_constant_index(&seq),
                limit,
                sequence: seq,
                certificate: format!("empirical (horizon {horizon})"),
                certified: false,
            })
        }
    }
}

fn first_constant_index(seq: &[BigUint]) -> u32 {
    let last = seq.last().expect("non-empty sequence");
    let mut d = seq.len() - 1;
    while d > 0 && &seq[d - 1] == last {
        d -= 1;
    }
    d as u32
}
