//! Rebuilding a family from its structure constants.
//!
//! `f_0 = e(0)` and `f_{ω_i} = h(ω_i)`. Every other `λ` splits as `μ + ν`
//! with both summands nonzero, hence both strictly below `λ` in the
//! recursion order, and
//!
//! ```text
//! f_λ = f_μ f_ν - Σ_{s ∈ Π^+(λ), s ≠ λ} n_{μ,ν}^s f_s.
//! ```
//!
//! Weights are processed in increasing level, which extends the order.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ring::{orbit_sum, CharElement};
use crate::weight::{dominants_within, saturated_dominants, DominantWeight, Rank};

use super::{CharacterFamily, RigidityError, StructureOracle};

/// How `λ` is split into `μ + ν`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitRule {
    /// `μ = ω_i` for the smallest `i` with `c_i > 0`.
    FirstFundamental,
    /// A uniformly random valid split, reproducible from the seed.
    Seeded(u64),
}

pub fn reconstruct_family(
    oracle: &dyn StructureOracle,
    rank: Rank,
    bound: u64,
) -> Result<CharacterFamily, RigidityError> {
    reconstruct_family_with(oracle, rank, bound, SplitRule::FirstFundamental)
}

pub fn reconstruct_family_with(
    oracle: &dyn StructureOracle,
    rank: Rank,
    bound: u64,
    split: SplitRule,
) -> Result<CharacterFamily, RigidityError> {
    let mut rng = match split {
        SplitRule::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        SplitRule::FirstFundamental => None,
    };
    let mut members: BTreeMap<DominantWeight, CharElement> = BTreeMap::new();
    for la in dominants_within(rank, bound) {
        if la.is_zero() {
            members.insert(la.clone(), CharElement::one(rank));
            continue;
        }
        if la.fundamental_index().is_some() {
            members.insert(la.clone(), orbit_sum(&la));
            continue;
        }
        let (mu, nu) = match rng.as_mut() {
            Some(rng) => random_split(&la, rng),
            None => first_fundamental_split(&la),
        };
        let mut f = members[&mu].multiply(&members[&nu])?;
        for s in saturated_dominants(&la) {
            if s == la {
                continue;
            }
            let n = oracle.structure_constant(&mu, &nu, &s)?;
            f = f.sub(&members[&s].scale(&n))?;
        }
        members.insert(la, f);
    }
    CharacterFamily::new(rank, bound, members)
}

fn first_fundamental_split(la: &DominantWeight) -> (DominantWeight, DominantWeight) {
    let c = la.fundamental();
    let i = c.iter().position(|&x| x > 0).expect("nonzero weight") + 1;
    let mu = DominantWeight::fundamental_weight(la.rank(), i);
    let nu = la.checked_sub(&mu).expect("c_i > 0");
    (mu, nu)
}

/// Every `(μ, λ - μ)` with `0 ≠ μ ≠ λ` and `μ ≤ λ` componentwise.
pub fn valid_splits(la: &DominantWeight) -> Vec<(DominantWeight, DominantWeight)> {
    let c = la.fundamental();
    let mut out = Vec::new();
    let mut cur = vec![0i64; c.len()];
    loop {
        let mu = DominantWeight::from_fundamental(la.rank(), &cur).expect("nonnegative");
        if !mu.is_zero() && &mu != la {
            let nu = la.checked_sub(&mu).expect("componentwise below");
            out.push((mu, nu));
        }
        // odometer over 0..=c_i
        let mut k = 0;
        while k < c.len() && cur[k] == c[k] {
            cur[k] = 0;
            k += 1;
        }
        if k == c.len() {
            break;
        }
        cur[k] += 1;
    }
    out
}

fn random_split(la: &DominantWeight, rng: &mut ChaCha8Rng) -> (DominantWeight, DominantWeight) {
    let mut splits = valid_splits(la);
    let i = rng.gen_range(0..splits.len());
    splits.swap_remove(i)
}
