//! The invariant ring `Z[Λ]^W` in the orbit-sum basis.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::weight::{self, dominant_representative, DominantWeight, LatticeError, Rank, Weight};

/// Exact integer coefficient.
pub type Coeff = BigInt;

/// A `W`-invariant element `Σ a_μ h(μ)` stored sparsely by dominant weight.
///
/// The orbit basis cannot express a non-invariant element, so invariance
/// holds by construction. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharElement {
    rank: Rank,
    terms: BTreeMap<DominantWeight, Coeff>,
}

impl CharElement {
    pub fn zero(rank: Rank) -> Self {
        CharElement {
            rank,
            terms: BTreeMap::new(),
        }
    }

    /// `e(0) = h(0)`, the multiplicative identity.
    pub fn one(rank: Rank) -> Self {
        orbit_sum(&DominantWeight::zero(rank))
    }

    pub fn from_terms(
        rank: Rank,
        terms: impl IntoIterator<Item = (DominantWeight, Coeff)>,
    ) -> Result<Self, LatticeError> {
        let mut out = CharElement::zero(rank);
        for (mu, c) in terms {
            if mu.rank() != rank {
                return Err(LatticeError::RankMismatch(rank.get(), mu.rank().get()));
            }
            out.add_term(mu, c);
        }
        Ok(out)
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<DominantWeight, Coeff> {
        &self.terms
    }

    /// Coefficient of `h(μ)`.
    pub fn coeff(&self, mu: &DominantWeight) -> Coeff {
        self.terms.get(mu).cloned().unwrap_or_default()
    }

    /// Coefficient of `e(x)`, i.e. of `h` at the dominant representative of `x`.
    pub fn e_coefficient(&self, x: &Weight) -> Coeff {
        self.coeff(&dominant_representative(x))
    }

    pub(crate) fn add_term(&mut self, mu: DominantWeight, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mu) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &CharElement) -> Result<CharElement, LatticeError> {
        self.check(other)?;
        let mut out = self.clone();
        for (mu, c) in &other.terms {
            out.add_term(mu.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &CharElement) -> Result<CharElement, LatticeError> {
        self.check(other)?;
        let mut out = self.clone();
        for (mu, c) in &other.terms {
            out.add_term(mu.clone(), -c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Coeff) -> CharElement {
        if c.is_zero() {
            return CharElement::zero(self.rank);
        }
        let terms = self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        CharElement {
            rank: self.rank,
            terms,
        }
    }

    /// Sum `Σ_μ a_μ · |W μ|`, the dimension when the element is a character.
    pub fn dim(&self) -> Coeff {
        self.terms
            .iter()
            .map(|(mu, c)| c * Coeff::from(weight::orbit_size(mu)))
            .sum()
    }

    /// Expands into the `e`-basis: every orbit member with its coefficient.
    pub fn e_expansion(&self) -> Vec<(Weight, &Coeff)> {
        self.terms
            .iter()
            .flat_map(|(mu, c)| weight::orbit(mu).into_iter().map(move |x| (x, c)))
            .collect()
    }

    /// Product in `Z[Λ]^W`: convolve the `e`-expansions and read off the
    /// coefficients at dominant weights, which determine the invariant result.
    pub fn multiply(&self, other: &CharElement) -> Result<CharElement, LatticeError> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(CharElement::zero(self.rank));
        }
        let left = self.e_expansion();
        let right = other.e_expansion();
        let n = self.rank.dim();
        let mut acc: HashMap<Vec<i64>, Coeff> = HashMap::new();
        let mut buf = vec![0i64; n];
        for (x, a) in &left {
            let xe = x.eps();
            'pairs: for (y, b) in &right {
                let ye = y.eps();
                for k in 0..n {
                    buf[k] = xe[k] + ye[k];
                    if k > 0 && buf[k] > buf[k - 1] {
                        continue 'pairs;
                    }
                }
                let min = buf[n - 1];
                let key: Vec<i64> = buf.iter().map(|v| v - min).collect();
                *acc.entry(key).or_default() += *a * *b;
            }
        }
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(eps, c)| {
                let w = Weight::from_eps(eps).expect("nonempty");
                (
                    DominantWeight::new(w).expect("collected at dominant sums"),
                    c,
                )
            })
            .collect();
        Ok(CharElement {
            rank: self.rank,
            terms,
        })
    }

    /// Keys that are maximal for dominance among the keys, highest first.
    pub fn leading_dominants(&self) -> Vec<DominantWeight> {
        let keys: Vec<&DominantWeight> = self.terms.keys().collect();
        let mut out: Vec<DominantWeight> = keys
            .iter()
            .filter(|mu| {
                !keys
                    .iter()
                    .any(|other| other != *mu && weight::leq(mu.weight(), other.weight()))
            })
            .map(|mu| (*mu).clone())
            .collect();
        out.sort_by(|a, b| b.cmp(a));
        out
    }

    /// The largest key in processing order; always dominance-maximal.
    pub fn top(&self) -> Option<(&DominantWeight, &Coeff)> {
        self.terms.iter().next_back()
    }

    pub fn is_unitriangular_at(&self, la: &DominantWeight) -> bool {
        self.coeff(la).is_one()
    }

    fn check(&self, other: &CharElement) -> Result<(), LatticeError> {
        if self.rank != other.rank {
            return Err(LatticeError::RankMismatch(
                self.rank.get(),
                other.rank.get(),
            ));
        }
        Ok(())
    }
}

/// `h(μ)`.
pub fn orbit_sum(mu: &DominantWeight) -> CharElement {
    let mut terms = BTreeMap::new();
    terms.insert(mu.clone(), Coeff::one());
    CharElement {
        rank: mu.rank(),
        terms,
    }
}
