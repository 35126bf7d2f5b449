//! Symmetric functions in the power-sum basis and plethysm coefficients.
//!
//! Everything is computed on power sums, where plethysm is an algebra map
//! in its first argument (`p_k ∘ p_σ = p_{kσ}`); Schur functions only appear
//! when converting in and out.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::characters::{z_order, CharacterCache};
use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};

/// Largest `|λ|·|μ|` accepted by [`plethysm_coeff`].
pub const MAX_PLETHYSM_DEGREE: u32 = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    PowerSum,
    Schur,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    pub basis: Basis,
    terms: BTreeMap<Partition, BigRational>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(basis: Basis, index: Partition, coeff: BigRational) -> Self {
        let mut f = SymFunc::zero(basis);
        f.add_term(index, coeff);
        f
    }

    /// The power sum `p_ρ`.
    pub fn p(rho: Partition) -> Self {
        SymFunc::monomial(Basis::PowerSum, rho, BigRational::one())
    }

    pub fn from_terms(
        basis: Basis,
        terms: impl IntoIterator<Item = (Partition, BigRational)>,
    ) -> Self {
        let mut f = SymFunc::zero(basis);
        for (k, v) in terms {
            f.add_term(k, v);
        }
        f
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigRational> {
        &self.terms
    }

    pub fn coeff(&self, index: &Partition) -> BigRational {
        self.terms
            .get(index)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, index: Partition, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self
            .terms
            .entry(index.clone())
            .or_insert_with(BigRational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&index);
        }
    }

    /// The common degree of all terms, or `None` if mixed (or zero).
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Partition::size);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    fn require(&self, basis: Basis) -> Result<()> {
        if self.basis != basis {
            return Err(Error::Domain(format!(
                "expected {basis:?} basis, got {:?}",
                self.basis
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        other.require(self.basis)?;
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> SymFunc {
        SymFunc::from_terms(
            self.basis,
            self.terms.iter().map(|(k, v)| (k.clone(), v * c)),
        )
    }

    /// Product of power-sum expansions (`p_σ p_τ = p_{σ∪τ}`).
    pub fn mul(&self, other: &SymFunc) -> Result<SymFunc> {
        self.require(Basis::PowerSum)?;
        other.require(Basis::PowerSum)?;
        let mut out = SymFunc::zero(Basis::PowerSum);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(union(a, b), x * y);
            }
        }
        Ok(out)
    }
}

fn union(a: &Partition, b: &Partition) -> Partition {
    let mut parts: Vec<u32> = a.parts().iter().chain(b.parts()).copied().collect();
    parts.sort_unstable_by(|x, y| y.cmp(x));
    Partition::new(parts).expect("union of partitions")
}

fn ratio(num: BigInt, den: BigUint) -> BigRational {
    BigRational::new(num, BigInt::from(den))
}

/// `s_λ = Σ_ρ z(ρ)^{-1} χ_λ(ρ) p_ρ`.
pub fn schur_to_powersum(lambda: &Partition) -> SymFunc {
    schur_to_powersum_with(lambda, &CharacterCache::new())
}

fn schur_to_powersum_with(lambda: &Partition, cache: &CharacterCache) -> SymFunc {
    SymFunc::from_terms(
        Basis::PowerSum,
        partitions_of(lambda.size()).into_iter().map(|rho| {
            let chi = cache.character(lambda, &rho).expect("sizes agree");
            let c = ratio(chi, z_order(&rho));
            (rho, c)
        }),
    )
}

/// Schur coefficients of a power-sum expansion, via `⟨p_ρ, s_λ⟩ = χ_λ(ρ)`.
pub fn powersum_to_schur(f: &SymFunc) -> Result<SymFunc> {
    f.require(Basis::PowerSum)?;
    let cache = CharacterCache::new();
    let mut degrees: Vec<u32> = f.terms.keys().map(Partition::size).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let mut out = SymFunc::zero(Basis::Schur);
    for d in degrees {
        for lambda in partitions_of(d) {
            let mut c = BigRational::zero();
            for (rho, v) in f.terms.range(..).filter(|(r, _)| r.size() == d) {
                let chi = cache.character(&lambda, rho)?;
                c += v * BigRational::from_integer(chi);
            }
            out.add_term(lambda, c);
        }
    }
    Ok(out)
}

/// `f ∘ g` on power sums. `g` must be homogeneous.
pub fn plethysm_powersum(f: &SymFunc, g: &SymFunc) -> Result<SymFunc> {
    f.require(Basis::PowerSum)?;
    g.require(Basis::PowerSum)?;
    if g.is_zero() {
        // only the constant term of f survives
        let c = f.coeff(&Partition::empty());
        return Ok(SymFunc::monomial(Basis::PowerSum, Partition::empty(), c));
    }
    if g.degree().is_none() {
        return Err(Error::Domain(
            "inner plethysm argument must be homogeneous".into(),
        ));
    }
    let mut cache: BTreeMap<u32, SymFunc> = BTreeMap::new();
    let mut out = SymFunc::zero(Basis::PowerSum);
    for (rho, c) in &f.terms {
        let mut term = SymFunc::p(Partition::empty());
        for &k in rho.parts() {
            let pk = cache.entry(k).or_insert_with(|| p_k_of(k, g)).clone();
            term = term.mul(&pk)?;
        }
        out = out.add(&term.scale(c))?;
    }
    Ok(out)
}

/// `p_k ∘ g`: every `p_σ` in `g` becomes `p_{kσ}`.
fn p_k_of(k: u32, g: &SymFunc) -> SymFunc {
    SymFunc::from_terms(
        Basis::PowerSum,
        g.terms.iter().map(|(s, c)| (s.scale(k), c.clone())),
    )
}

fn check_cap(lambda: &Partition, mu: &Partition) -> Result<()> {
    let deg = lambda.size() * mu.size();
    if deg > MAX_PLETHYSM_DEGREE {
        return Err(Error::Limit(format!(
            "plethysm degree |λ|·|μ| = {deg} exceeds {MAX_PLETHYSM_DEGREE}"
        )));
    }
    Ok(())
}

/// Power-sum expansion of `s_λ ∘ s_μ`.
pub fn plethysm_schur_powersum(lambda: &Partition, mu: &Partition) -> Result<SymFunc> {
    check_cap(lambda, mu)?;
    let cache = CharacterCache::new();
    plethysm_powersum(
        &schur_to_powersum_with(lambda, &cache),
        &schur_to_powersum_with(mu, &cache),
    )
}

/// Full Schur expansion of `s_λ ∘ s_μ` with integer multiplicities.
pub fn plethysm_expand(lambda: &Partition, mu: &Partition) -> Result<BTreeMap<Partition, BigUint>> {
    let f = plethysm_schur_powersum(lambda, mu)?;
    let s = powersum_to_schur(&f)?;
    s.terms
        .iter()
        .map(|(nu, c)| Ok((nu.clone(), to_count(c, nu)?)))
        .collect()
}

fn to_count(c: &BigRational, nu: &Partition) -> Result<BigUint> {
    if !c.is_integer() || c.is_negative() {
        return Err(Error::Consistency(format!(
            "Schur coefficient of {nu} came out as {c}"
        )));
    }
    Ok(c.to_integer().magnitude().clone())
}

/// `a^ν_{λ,μ}`, the multiplicity of `𝕊^ν` in `𝕊^λ(𝕊^μ)`.
pub fn plethysm_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigUint> {
    if lambda.size() * mu.size() != nu.size() {
        return Ok(BigUint::zero());
    }
    let f = plethysm_schur_powersum(lambda, mu)?;
    let cache = CharacterCache::new();
    let mut c = BigRational::zero();
    for (rho, v) in &f.terms {
        c += v * BigRational::from_integer(cache.character(nu, rho)?);
    }
    to_count(&c, nu)
}
