//! Stabilization bounds for Kronecker sequences `g_{λ+dα, μ+dβ, ν+dγ}`.
//!
//! Two families of directions are covered: `((1),(1),(1))` ("Murnaghan")
//! and `((1,1),(1,1),(2))` ("squares"). Besides the closed forms there is a
//! generic Hilbert–Mumford maximizer: a destabilizing one-parameter subgroup
//! acts on each flag factor with integer weights, the fixed points in the
//! fibre pair weights with flag positions, and the largest value of
//! `−μ(x, τ)` over those pairings, divided by the weight `μ_L̄` of the
//! direction bundle, bounds the stabilization index.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::assignment;
use crate::error::{Error, Result};
use crate::partitions::{DoublePartition, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Direction `((1),(1),(1))`.
    Murnaghan,
    /// Direction `((1,1),(1,1),(2))`.
    Squares,
}

impl Family {
    pub fn direction(self) -> [Partition; 3] {
        match self {
            Family::Murnaghan => [
                Partition::single(1),
                Partition::single(1),
                Partition::single(1),
            ],
            Family::Squares => {
                let one_one = Partition::new(vec![1, 1]).unwrap();
                [one_one.clone(), one_one, Partition::single(2)]
            }
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "murnaghan" => Ok(Family::Murnaghan),
            "squares" => Ok(Family::Squares),
            other => Err(Error::parse(
                other,
                "family must be `murnaghan` or `squares`",
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleQuery {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub family: Family,
}

impl TripleQuery {
    pub fn new(lambda: Partition, mu: Partition, nu: Partition, family: Family) -> Result<Self> {
        if lambda.size() != mu.size() || mu.size() != nu.size() {
            return Err(Error::Domain(format!(
                "triple sizes differ: {}, {}, {}",
                lambda.size(),
                mu.size(),
                nu.size()
            )));
        }
        Ok(TripleQuery {
            lambda,
            mu,
            nu,
            family,
        })
    }

    pub fn parse(text: &str, family: Family) -> Result<Self> {
        let [l, m, n] = crate::partitions::parse_triple(text)?;
        TripleQuery::new(l, m, n, family)
    }

    pub fn parts(&self) -> [&Partition; 3] {
        [&self.lambda, &self.mu, &self.nu]
    }

    fn require(&self, family: Family) -> Result<()> {
        if self.family != family {
            return Err(Error::Domain(format!(
                "bound needs the {family:?} family, query is {:?}",
                self.family
            )));
        }
        Ok(())
    }

    /// True when two of the three partitions are one-row: then
    /// `g_{(n),β,γ} = δ_{βγ}` makes every sequence constant from `d = 0`.
    pub fn is_degenerate(&self) -> bool {
        self.parts().iter().filter(|p| p.len() < 2).count() >= 2
    }
}

/// The six role assignments `(λ, μ, ν)` ← `(p[o[0]], p[o[1]], p[o[2]])`,
/// identity first.
pub const ORDERINGS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [1, 0, 2],
    [0, 2, 1],
    [2, 0, 1],
    [1, 2, 0],
    [2, 1, 0],
];

fn reorder(q: &TripleQuery, o: [usize; 3]) -> [&Partition; 3] {
    let p = q.parts();
    [p[o[0]], p[o[1]], p[o[2]]]
}

#[inline]
fn at(p: &Partition, i: i64) -> i64 {
    if i < 1 {
        0
    } else {
        p.at(i as usize) as i64
    }
}

/// `Σ_{k=lo}^{hi} p_k` (empty when `hi < lo`).
fn range_sum(p: &Partition, lo: i64, hi: i64) -> i64 {
    (lo.max(1)..=hi).map(|k| at(p, k)).sum()
}

/// The single place where "constant for `d > x/m`" becomes an index: the
/// sequence is constant from `⌈x/m⌉`, and indices are clamped at 0.
pub fn stable_from(x: i64, mu_lbar: i64) -> u64 {
    assert!(mu_lbar > 0, "μ_L̄ must be positive");
    Integer::div_ceil(&x, &mu_lbar).max(0) as u64
}

fn admissible(l: &Partition, m: &Partition) -> bool {
    l.len() >= 2 && m.len() >= 2
}

// ---------------------------------------------------------------------------
// Murnaghan family closed forms

/// Numerator of `D₁` (to be halved and rounded up).
pub fn d1_numerator(l: &Partition, m: &Partition, n: &Partition) -> i64 {
    let (n1, n2) = (l.len() as i64, m.len() as i64);
    let big = n1 * n2;
    let mut x = -at(l, 1) + at(l, 2) - at(m, 1) + at(m, 2) + 2 * (at(n, 2) - at(n, big));
    for k in 1..=(n1 + n2 - 4) {
        x += at(n, k + 2) - at(n, big - k);
    }
    x
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct D1Detail {
    /// Value for the triple as given, if its first two lengths are ≥ 2.
    pub fixed: Option<u64>,
    /// Least value over admissible orderings.
    pub best: u64,
    /// Ordering achieving `best` (see [`ORDERINGS`]).
    pub ordering: [usize; 3],
}

pub fn d1_detail(q: &TripleQuery) -> Result<D1Detail> {
    q.require(Family::Murnaghan)?;
    let mut best: Option<(u64, [usize; 3])> = None;
    let mut fixed = None;
    for o in ORDERINGS {
        let [l, m, n] = reorder(q, o);
        if !admissible(l, m) {
            continue;
        }
        let v = stable_from(d1_numerator(l, m, n), 2);
        if o == ORDERINGS[0] {
            fixed = Some(v);
        }
        if best.is_none_or(|(b, _)| v < b) {
            best = Some((v, o));
        }
    }
    let (best, ordering) = best.ok_or_else(|| {
        Error::Degenerate(format!(
            "no ordering of ({}, {}, {}) has two partitions of length ≥ 2",
            q.lambda, q.mu, q.nu
        ))
    })?;
    Ok(D1Detail {
        fixed,
        best,
        ordering,
    })
}

pub fn bound_d1(q: &TripleQuery, minimize_over_orderings: bool) -> Result<u64> {
    let d = d1_detail(q)?;
    if minimize_over_orderings {
        Ok(d.best)
    } else {
        d.fixed.ok_or_else(|| {
            Error::Degenerate(format!(
                "ℓ({}) or ℓ({}) is below 2; try reordering",
                q.lambda, q.mu
            ))
        })
    }
}

/// `|μ| − λ₁ − μ₁ + ν₂` with `n` in the ν role.
fn db_value(l: &Partition, m: &Partition, n: &Partition) -> i64 {
    m.size() as i64 - at(l, 1) - at(m, 1) + at(n, 2)
}

/// Roles for the Brion-type bounds: which partition plays ν.
const NU_ROLES: [[usize; 3]; 3] = [[0, 1, 2], [0, 2, 1], [1, 2, 0]];

pub fn bound_db(q: &TripleQuery, minimize_over_nu_choice: bool) -> Result<u64> {
    q.require(Family::Murnaghan)?;
    let roles: &[[usize; 3]] = if minimize_over_nu_choice {
        &NU_ROLES
    } else {
        &NU_ROLES[..1]
    };
    Ok(roles
        .iter()
        .map(|&o| {
            let [l, m, n] = reorder(q, o);
            db_value(l, m, n).max(0) as u64
        })
        .min()
        .unwrap())
}

/// `−λ₁ + |μ| − μ₁ + ν₂ − Σ_{k=n₁+n₂}^{n₁n₂} ν_k`.
pub fn db_improved_value(l: &Partition, m: &Partition, n: &Partition) -> i64 {
    let (n1, n2) = (l.len() as i64, m.len() as i64);
    db_value(l, m, n) - range_sum(n, n1 + n2, n1 * n2)
}

pub fn bound_db_improved(q: &TripleQuery) -> Result<u64> {
    q.require(Family::Murnaghan)?;
    Ok(NU_ROLES
        .iter()
        .map(|&o| {
            let [l, m, n] = reorder(q, o);
            stable_from(db_improved_value(l, m, n), 1)
        })
        .min()
        .unwrap())
}

/// `−λ₁ + |μ_{≥2}| − ν₁ + λ₂ + μ₂ + ν₂`; symmetric in the triple.
pub fn dbor2_numerator(l: &Partition, m: &Partition, n: &Partition) -> i64 {
    -at(l, 1) + (m.size() as i64 - at(m, 1)) - at(n, 1) + at(l, 2) + at(m, 2) + at(n, 2)
}

pub fn bound_dbor2(q: &TripleQuery) -> Result<u64> {
    q.require(Family::Murnaghan)?;
    Ok(Integer::div_floor(&dbor2_numerator(&q.lambda, &q.mu, &q.nu), &2).max(0) as u64)
}

/// Maximum of `−μ(x, τ_BOR2)` over the fibre, i.e. twice the improved
/// BOR2 index before rounding:
/// `−λ₁+λ₂+2μ₂+|μ_{≥3}|−ν₁+ν₂ − Σ_{k=n₁+n₂−1}^{N−n₁−n₂+3} ν_k
///  − 2 Σ_{k=N−n₁−n₂+4}^{N−1} ν_k − 3ν_N`, `N = n₁n₂`.
pub fn dbor2_improved_numerator(l: &Partition, m: &Partition, n: &Partition) -> i64 {
    let (n1, n2) = (l.len() as i64, m.len() as i64);
    let big = n1 * n2;
    let mu_ge3 = m.size() as i64 - at(m, 1) - at(m, 2);
    -at(l, 1) + at(l, 2) + 2 * at(m, 2) + mu_ge3 - at(n, 1) + at(n, 2)
        - range_sum(n, n1 + n2 - 1, big - n1 - n2 + 3)
        - 2 * range_sum(n, big - n1 - n2 + 4, big - 1)
        - 3 * at(n, big)
}

/// The improved BOR2 bound: the better of the published bound and the
/// fibre maximum over admissible orderings.
pub fn bound_dbor2_improved(q: &TripleQuery) -> Result<u64> {
    let published = bound_dbor2(q)?;
    let ours = ORDERINGS
        .iter()
        .filter_map(|&o| {
            let [l, m, n] = reorder(q, o);
            admissible(l, m).then(|| stable_from(dbor2_improved_numerator(l, m, n), 2))
        })
        .min();
    Ok(ours.map_or(published, |v| v.min(published)))
}

/// `min(D₁ over orderings, improved D_B, improved D_BOR2)`.
pub fn bound_dm(q: &TripleQuery) -> Result<u64> {
    q.require(Family::Murnaghan)?;
    if q.is_degenerate() {
        return Ok(0);
    }
    let d1 = bound_d1(q, true)?;
    Ok(d1.min(bound_db_improved(q)?).min(bound_dbor2_improved(q)?))
}

// ---------------------------------------------------------------------------
// Squares family

/// Numerator of `D₂`; `n₁ = ℓ(λ)`, `n₂ = ℓ(μ)` must both be ≥ 2.
pub fn d2_numerator(l: &Partition, m: &Partition, n: &Partition) -> i64 {
    let (n1, n2) = (l.len() as i64, m.len() as i64);
    let top = (-at(l, 2) - at(m, 1)).max(-at(l, 1) - at(m, 2));
    if n1 == 2 {
        top + at(m, 3) + 2 * at(n, 2) - at(n, 2 * n2) + range_sum(n, 3, n2 + 1)
    } else if n2 == 2 {
        top + at(l, 3) + 2 * at(n, 2) - at(n, 2 * n1) + range_sum(n, 3, n1 + 1)
    } else {
        let big = n1 * n2;
        let mut x = top + at(l, 3) + at(m, 3) + 2 * (at(n, 2) - at(n, big));
        for k in 1..=(n1 + n2 - 4) {
            x += at(n, k + 2) - at(n, big - k);
        }
        x
    }
}

pub fn bound_d2(q: &TripleQuery, minimize_over_swap: bool) -> Result<u64> {
    q.require(Family::Squares)?;
    let mut best: Option<u64> = None;
    let orders: &[[usize; 3]] = if minimize_over_swap {
        &ORDERINGS[..2]
    } else {
        &ORDERINGS[..1]
    };
    for &o in orders {
        let [l, m, n] = reorder(q, o);
        if !admissible(l, m) {
            continue;
        }
        let v = stable_from(d2_numerator(l, m, n), 2);
        best = Some(best.map_or(v, |b| b.min(v)));
    }
    best.ok_or_else(|| {
        Error::Degenerate(format!(
            "squares bound needs ℓ(λ), ℓ(μ) ≥ 2 (got {}, {})",
            q.lambda, q.mu
        ))
    })
}

// ---------------------------------------------------------------------------
// Hyperoctahedral bound

/// Bound for `c_{λ+d·((1),∅), μ+d·((1),∅), ν+d·((1),∅)}`.
pub fn bound_hyperoct(
    l: &DoublePartition,
    m: &DoublePartition,
    n: &DoublePartition,
) -> Result<u64> {
    Ok(stable_from(hyperoct_numerator(l, m, n)?, 2))
}

pub fn hyperoct_numerator(
    l: &DoublePartition,
    m: &DoublePartition,
    n: &DoublePartition,
) -> Result<i64> {
    if !admissible(&l.plus, &m.plus) {
        return Err(Error::Degenerate(format!(
            "hyperoctahedral bound needs ℓ(λ⁺), ℓ(μ⁺) ≥ 2 (got {}, {})",
            l.plus, m.plus
        )));
    }
    let (lp, lm) = (l.plus.len() as i64, l.minus.len() as i64);
    let (mp, mm) = (m.plus.len() as i64, m.minus.len() as i64);
    let big_plus = lp * mp + lm * mm;
    let big_minus = lp * mm + lm * mp;
    let (np, nm) = (&n.plus, &n.minus);
    let mut x = -at(&l.plus, 1) + at(&l.plus, 2) - at(&m.plus, 1)
        + at(&m.plus, 2)
        + 2 * (at(np, 2) - at(np, big_plus));
    for k in 1..=(lp + mp - 4) {
        x += at(np, k + 2) - at(np, big_plus - k);
    }
    for k in 1..=(lm + mm) {
        x += at(nm, k) - at(nm, big_minus - k + 1);
    }
    Ok(x)
}

// ---------------------------------------------------------------------------
// Generic Hilbert–Mumford maximizer

/// One flag-variety factor of a weight scenario. Objective part `k` is
/// paired with the weight placed at flag position `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagFactor {
    pub objective: Partition,
    /// Dual factors (flags in a tensor product read through its dual)
    /// contribute with sign `+1`, the others with `−1`.
    pub dual: bool,
    /// Weight multiset as `(weight, multiplicity)`.
    pub weights: Vec<(i64, usize)>,
    /// `(position, weight)` forced by the limit point, 1-based.
    pub pinned: Vec<(usize, i64)>,
    /// Weights allowed at position 1 — for a dual factor the last step of
    /// the flag, which is fixed by the hyperplane of the limit point.
    pub lead_weights: Option<Vec<i64>>,
}

impl FlagFactor {
    pub fn dimension(&self) -> usize {
        self.weights.iter().map(|w| w.1).sum()
    }

    fn sign(&self) -> i64 {
        if self.dual {
            1
        } else {
            -1
        }
    }

    fn expanded(&self) -> Vec<i64> {
        self.weights
            .iter()
            .flat_map(|&(w, m)| std::iter::repeat_n(w, m))
            .collect()
    }

    fn validate(&self) -> Result<()> {
        let dim = self.dimension();
        if self.objective.len() > dim {
            return Err(Error::Scenario(format!(
                "objective {} has more parts than the factor's dimension {dim}",
                self.objective
            )));
        }
        let mut positions: Vec<usize> = self.pinned.iter().map(|p| p.0).collect();
        positions.sort_unstable();
        if positions.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Scenario("pinned positions must be distinct".into()));
        }
        if positions.iter().any(|&p| p == 0 || p > dim) {
            return Err(Error::Scenario(format!(
                "pinned position out of range 1..={dim}"
            )));
        }
        for &(_, w) in &self.pinned {
            let have = self
                .weights
                .iter()
                .filter(|x| x.0 == w)
                .map(|x| x.1)
                .sum::<usize>();
            let need = self.pinned.iter().filter(|p| p.1 == w).count();
            if need > have {
                return Err(Error::Scenario(format!(
                    "pinned weight {w} is not available"
                )));
            }
        }
        Ok(())
    }

    fn allowed(&self, pos: usize, w: i64) -> bool {
        if let Some(&(_, v)) = self.pinned.iter().find(|p| p.0 == pos) {
            if v != w {
                return false;
            }
        }
        if pos == 1 {
            if let Some(lead) = &self.lead_weights {
                return lead.contains(&w);
            }
        }
        true
    }

    /// `max Σ_k σ · objective_k · w(k)` over admissible placements.
    pub fn max_value(&self) -> Result<i64> {
        self.validate()?;
        let sigma = self.sign();
        let mut ws = self.expanded();
        let obj = |k: usize| self.objective.at(k) as i64;
        if self.pinned.is_empty() && self.lead_weights.is_none() {
            // rearrangement: the objective is decreasing, so sort the weights
            // the same way (σ = +1) or the opposite way (σ = −1)
            if sigma > 0 {
                ws.sort_unstable_by(|a, b| b.cmp(a));
            } else {
                ws.sort_unstable();
            }
            return Ok(ws
                .iter()
                .enumerate()
                .map(|(i, &w)| sigma * obj(i + 1) * w)
                .sum());
        }
        const FORBIDDEN: i64 = 1 << 40;
        let costs: Vec<Vec<i64>> = (1..=ws.len())
            .map(|pos| {
                ws.iter()
                    .map(|&w| {
                        if self.allowed(pos, w) {
                            -sigma * obj(pos) * w
                        } else {
                            FORBIDDEN
                        }
                    })
                    .collect()
            })
            .collect();
        let a = assignment::solve(&costs);
        if a.iter().enumerate().any(|(i, &j)| costs[i][j] >= FORBIDDEN) {
            return Err(Error::Scenario(
                "no placement satisfies the constraints".into(),
            ));
        }
        Ok(-a.iter().enumerate().map(|(i, &j)| costs[i][j]).sum::<i64>())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WeightScenario {
    pub factors: Vec<FlagFactor>,
}

impl WeightScenario {
    /// Same weights and constraints, different objectives (one per factor).
    pub fn with_objectives(&self, objectives: &[Partition]) -> Result<WeightScenario> {
        if objectives.len() != self.factors.len() {
            return Err(Error::Scenario("one objective per factor required".into()));
        }
        Ok(WeightScenario {
            factors: self
                .factors
                .iter()
                .zip(objectives)
                .map(|(f, o)| FlagFactor {
                    objective: o.clone(),
                    ..f.clone()
                })
                .collect(),
        })
    }
}

/// `max(−μ(x, τ))` over the τ-fixed points of the fibre. Factors are
/// independent, so this is the sum of the per-factor maxima.
pub fn hm_max_destabilization(s: &WeightScenario) -> Result<i64> {
    s.factors.iter().map(FlagFactor::max_value).sum()
}

pub fn hm_bound(s: &WeightScenario, mu_lbar: i64) -> Result<u64> {
    if mu_lbar <= 0 {
        return Err(Error::Scenario(format!(
            "μ_L̄ must be positive, got {mu_lbar}"
        )));
    }
    Ok(stable_from(hm_max_destabilization(s)?, mu_lbar))
}

/// A scenario together with the weight of the direction bundle at the
/// limit point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Destabilizer {
    pub name: &'static str,
    pub scenario: WeightScenario,
    pub mu_lbar: i64,
}

impl Destabilizer {
    /// `μ_L̄` is the negated maximum of the same scenario with the
    /// direction partitions as objectives (the direction bundle is a point
    /// of the same kind of flag data).
    fn new(name: &'static str, scenario: WeightScenario, direction: &[Partition]) -> Result<Self> {
        let mu_lbar = -hm_max_destabilization(&scenario.with_objectives(direction)?)?;
        if mu_lbar <= 0 {
            return Err(Error::Scenario(format!(
                "{name} does not destabilize the limit point"
            )));
        }
        Ok(Destabilizer {
            name,
            scenario,
            mu_lbar,
        })
    }

    pub fn max(&self) -> Result<i64> {
        hm_max_destabilization(&self.scenario)
    }

    pub fn bound(&self) -> Result<u64> {
        hm_bound(&self.scenario, self.mu_lbar)
    }
}

fn multiset(ws: impl IntoIterator<Item = i64>) -> Vec<(i64, usize)> {
    let mut v: Vec<i64> = ws.into_iter().collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    let mut out: Vec<(i64, usize)> = Vec::new();
    for w in v {
        match out.last_mut() {
            Some(last) if last.0 == w => last.1 += 1,
            _ => out.push((w, 1)),
        }
    }
    out
}

/// Weight of the limit of `φ = Σ_{i ≤ min} e_i^* ⊗ f_i^*`: the surviving
/// components are the diagonal ones of largest weight.
fn diagonal_limit_weight(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x + y).max().unwrap_or(0)
}

fn padded(head: &[i64], fill: i64, len: usize) -> Vec<i64> {
    (0..len)
        .map(|i| head.get(i).copied().unwrap_or(fill))
        .collect()
}

/// Scenario on `Fl(V₁) × Fl(V₂) × Fl(V₁⊗V₂)` for τ with weights `a | b`.
fn product_scenario(
    a: &[i64],
    b: &[i64],
    pins_a: Vec<(usize, i64)>,
    pins_b: Vec<(usize, i64)>,
    objectives: [&Partition; 3],
) -> WeightScenario {
    let tensor = a.iter().flat_map(|x| b.iter().map(move |y| x + y));
    WeightScenario {
        factors: vec![
            FlagFactor {
                objective: objectives[0].clone(),
                dual: false,
                weights: multiset(a.iter().copied()),
                pinned: pins_a,
                lead_weights: None,
            },
            FlagFactor {
                objective: objectives[1].clone(),
                dual: false,
                weights: multiset(b.iter().copied()),
                pinned: pins_b,
                lead_weights: None,
            },
            FlagFactor {
                objective: objectives[2].clone(),
                dual: true,
                weights: multiset(tensor),
                pinned: Vec::new(),
                lead_weights: Some(vec![diagonal_limit_weight(a, b)]),
            },
        ],
    }
}

fn require_lengths(l: &Partition, m: &Partition) -> Result<(usize, usize)> {
    if !admissible(l, m) {
        return Err(Error::Degenerate(format!(
            "scenario needs ℓ ≥ 2 for the first two partitions (got {l}, {m})"
        )));
    }
    Ok((l.len(), m.len()))
}

/// `τ₀ = (1,−1,0,…|−1,1,0,…)` at the limit point `(Ce₁, Cf₂, φ)`.
pub fn tau0_murnaghan(l: &Partition, m: &Partition, n: &Partition) -> Result<Destabilizer> {
    let (n1, n2) = require_lengths(l, m)?;
    let a = padded(&[1, -1], 0, n1);
    let b = padded(&[-1, 1], 0, n2);
    let s = product_scenario(&a, &b, vec![(1, a[0])], vec![(1, b[1])], [l, m, n]);
    Destabilizer::new("tau0", s, &Family::Murnaghan.direction())
}

/// `τ_B = (1,0,…|−1,0,−1,…,−1)` at `(Ce₁, Cf₂, φ)`.
pub fn tau_b(l: &Partition, m: &Partition, n: &Partition) -> Result<Destabilizer> {
    let (n1, n2) = require_lengths(l, m)?;
    let a = padded(&[1], 0, n1);
    let b = padded(&[-1, 0], -1, n2);
    let s = product_scenario(&a, &b, vec![(1, a[0])], vec![(1, b[1])], [l, m, n]);
    Destabilizer::new("tauB", s, &Family::Murnaghan.direction())
}

/// `τ_BOR2 = (1,−1,0,…|−2,0,−1,…,−1)` at `(Ce₁, Cf₂, φ)`.
pub fn tau_bor2(l: &Partition, m: &Partition, n: &Partition) -> Result<Destabilizer> {
    let (n1, n2) = require_lengths(l, m)?;
    let a = padded(&[1, -1], 0, n1);
    let b = padded(&[-2, 0], -1, n2);
    let s = product_scenario(&a, &b, vec![(1, a[0])], vec![(1, b[1])], [l, m, n]);
    Destabilizer::new("tauBOR2", s, &Family::Murnaghan.direction())
}

/// The two squares-family subgroups share their shape; `first` selects τ₁.
/// When `ℓ(μ) = 2 < ℓ(λ)` the roles of the two factors are exchanged; when
/// both lengths are 2, `V₂` gets a third coordinate carrying objective 0.
fn tau_squares(first: bool, l: &Partition, m: &Partition, n: &Partition) -> Result<Destabilizer> {
    let (n1, n2) = require_lengths(l, m)?;
    let (l, m, n1, n2) = if n2 == 2 && n1 >= 3 {
        (m, l, n2, n1)
    } else {
        (l, m, n1, n2)
    };
    let q = n2.max(3);
    let (a, b, pins_a, pins_b);
    if first {
        // x̄₁ = ((Ce₁, Ce₁+Ce₂), (Cf₃, Cf₃+Cf₁), φ)
        a = padded(&[0, 1, -1], 0, n1);
        b = padded(&[0, -1, 1], 0, q);
        pins_a = vec![(1, a[0]), (2, a[1])];
        pins_b = vec![(1, b[2]), (2, b[0])];
    } else {
        // x̄₂ = ((Ce₁, Ce₁+Ce₂), (Cf₂, Cf₂+Cf₃), φ)
        a = padded(&[1, 0, -1], 0, n1);
        b = padded(&[-1, 0, 1], 0, q);
        pins_a = vec![(1, a[0]), (2, a[1])];
        pins_b = vec![(1, b[1]), (2, b[2])];
    }
    let s = product_scenario(&a, &b, pins_a, pins_b, [l, m, n]);
    Destabilizer::new(
        if first { "tau1" } else { "tau2" },
        s,
        &Family::Squares.direction(),
    )
}

pub fn tau1_squares(l: &Partition, m: &Partition, n: &Partition) -> Result<Destabilizer> {
    tau_squares(true, l, m, n)
}

pub fn tau2_squares(l: &Partition, m: &Partition, n: &Partition) -> Result<Destabilizer> {
    tau_squares(false, l, m, n)
}

/// Both τ₁ and τ₂ must destabilize; the bound is the larger of the two.
pub fn hm_bound_squares(l: &Partition, m: &Partition, n: &Partition) -> Result<u64> {
    Ok(tau1_squares(l, m, n)?
        .bound()?
        .max(tau2_squares(l, m, n)?.bound()?))
}

/// `τ₀ = (1,−1,0,… | 0,… | −1,1,0,… | 0,…)` on
/// `V₁⁺, V₁⁻, V₂⁺, V₂⁻`, with flags on `V⁺ = V₁⁺⊗V₂⁺ ⊕ V₁⁻⊗V₂⁻` and
/// `V⁻ = V₁⁺⊗V₂⁻ ⊕ V₁⁻⊗V₂⁺`.
pub fn tau0_hyperoct(
    l: &DoublePartition,
    m: &DoublePartition,
    n: &DoublePartition,
) -> Result<Destabilizer> {
    let (lp, mp) = require_lengths(&l.plus, &m.plus)?;
    let (lm, mm) = (l.minus.len(), m.minus.len());
    let a = padded(&[1, -1], 0, lp);
    let b = padded(&[-1, 1], 0, mp);
    let plus_weights = a
        .iter()
        .flat_map(|x| b.iter().map(move |y| x + y))
        .chain(std::iter::repeat_n(0, lm * mm));
    let minus_weights = a
        .iter()
        .flat_map(|&x| std::iter::repeat_n(x, mm))
        .chain(b.iter().flat_map(|&y| std::iter::repeat_n(y, lm)));
    let factor = |objective: &Partition, dual, weights, pinned, lead_weights| FlagFactor {
        objective: objective.clone(),
        dual,
        weights,
        pinned,
        lead_weights,
    };
    let s = WeightScenario {
        factors: vec![
            factor(
                &l.plus,
                false,
                multiset(a.iter().copied()),
                vec![(1, a[0])],
                None,
            ),
            factor(
                &l.minus,
                false,
                multiset(std::iter::repeat_n(0, lm)),
                vec![],
                None,
            ),
            factor(
                &m.plus,
                false,
                multiset(b.iter().copied()),
                vec![(1, b[1])],
                None,
            ),
            factor(
                &m.minus,
                false,
                multiset(std::iter::repeat_n(0, mm)),
                vec![],
                None,
            ),
            factor(
                &n.plus,
                true,
                multiset(plus_weights),
                vec![],
                Some(vec![diagonal_limit_weight(&a, &b)]),
            ),
            factor(&n.minus, true, multiset(minus_weights), vec![], None),
        ],
    };
    let one = Partition::single(1);
    let none = Partition::empty();
    let direction = [
        one.clone(),
        none.clone(),
        one.clone(),
        none.clone(),
        one,
        none,
    ];
    Destabilizer::new("tau0_hyperoct", s, &direction)
}

// ---------------------------------------------------------------------------
// Reports

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub family: Family,
    /// `D₁` minimized over orderings.
    pub d1: Option<u64>,
    /// `D₁` for the ordering as given.
    pub d1_fixed: Option<u64>,
    /// Ordering used by `d1`, as role indices into `(λ, μ, ν)`.
    pub d1_ordering: Option<[usize; 3]>,
    pub d2: Option<u64>,
    pub d2_fixed: Option<u64>,
    pub db: Option<u64>,
    pub db_improved: Option<u64>,
    pub dbor2: Option<u64>,
    pub dbor2_improved: Option<u64>,
    pub dm: Option<u64>,
    /// Generic maximizer with the family's subgroups, ordering as given.
    pub d_hm_generic: Option<u64>,
    pub notes: Vec<String>,
}

pub fn bound_report(q: &TripleQuery) -> BoundReport {
    let mut r = BoundReport {
        lambda: q.lambda.clone(),
        mu: q.mu.clone(),
        nu: q.nu.clone(),
        family: q.family,
        d1: None,
        d1_fixed: None,
        d1_ordering: None,
        d2: None,
        d2_fixed: None,
        db: None,
        db_improved: None,
        dbor2: None,
        dbor2_improved: None,
        dm: None,
        d_hm_generic: None,
        notes: Vec::new(),
    };
    let note = |r: &mut BoundReport, e: Error| r.notes.push(e.to_string());
    match q.family {
        Family::Murnaghan => {
            match d1_detail(q) {
                Ok(d) => {
                    r.d1 = Some(d.best);
                    r.d1_fixed = d.fixed;
                    r.d1_ordering = Some(d.ordering);
                }
                Err(e) => note(&mut r, e),
            }
            r.db = bound_db(q, true).ok();
            r.db_improved = bound_db_improved(q).ok();
            r.dbor2 = bound_dbor2(q).ok();
            r.dbor2_improved = bound_dbor2_improved(q).ok();
            r.dm = bound_dm(q).ok();
            if q.is_degenerate() {
                r.notes
                    .push("two one-row partitions: sequence constant from d = 0".into());
            }
            match tau0_murnaghan(&q.lambda, &q.mu, &q.nu).and_then(|t| t.bound()) {
                Ok(v) => r.d_hm_generic = Some(v),
                Err(e) => note(&mut r, e),
            }
        }
        Family::Squares => {
            match bound_d2(q, true) {
                Ok(v) => r.d2 = Some(v),
                Err(e) => note(&mut r, e),
            }
            r.d2_fixed = bound_d2(q, false).ok();
            match hm_bound_squares(&q.lambda, &q.mu, &q.nu) {
                Ok(v) => r.d_hm_generic = Some(v),
                Err(e) => note(&mut r, e),
            }
        }
    }
    r
}
