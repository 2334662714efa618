//! Candidate character families and the rigidity machinery.
//!
//! A [`CharacterFamily`] is a unitriangular family `f_λ = Σ n_λ(μ) h(μ)`
//! indexed by every dominant weight up to a level bound. Its structure
//! constants `n_{μ,ν}^λ` are defined by `f_μ f_ν = Σ n_{μ,ν}^λ f_λ`.
//! The two directions between multiplicities and structure constants live in
//! [`structure`] (constants from multiplicities) and [`reconstruct`]
//! (multiplicities from constants); [`conditions`] checks a family against
//! the rank-restriction and duality conditions that force it to be the family
//! of Weyl characters.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::oracle::{CharacterTable, StructureRow};
use crate::ring::{CharElement, Coeff};
use crate::weight::{self, dominants_within, DominantWeight, LatticeError, Rank};

pub mod conditions;
pub mod reconstruct;
pub mod structure;

pub use conditions::{
    check_condition1, check_condition2, perturb_family, perturbation_sites, verify_theorem,
    Condition1Violation, Condition2Outcome, Condition2Violation, ConditionReport, SiteStratum,
};
pub use reconstruct::{reconstruct_family, reconstruct_family_with, SplitRule};
pub use structure::{
    convolution_coefficient, eq3_consistency, eq3_consistency_with, extract_structure_constants,
    multiplicity_via_eq1,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RigidityError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("weight {weight} has level {level}, beyond the bound {bound}")]
    BoundExceeded {
        weight: String,
        level: u64,
        bound: u64,
    },
    #[error("family is missing the member f_{0}")]
    MissingMember(String),
    #[error("weight {0} is outside the family's index set")]
    UnexpectedMember(String),
    #[error("coefficient of h({0}) in f_{0} is not 1")]
    NotUnitriangular(String),
    #[error("f_{lambda} has a term at {mu}, outside the saturated set")]
    SupportViolation { lambda: String, mu: String },
    #[error("oracle has no value for n_{{{mu},{nu}}}^{lambda}")]
    OracleMissing {
        mu: String,
        nu: String,
        lambda: String,
    },
    #[error("invalid perturbation site: {0}")]
    InvalidSite(String),
    #[error("perturbation delta must be nonzero")]
    ZeroDelta,
    #[error("structure constant table: {0}")]
    Table(String),
}

/// A unitriangular family `{λ ↦ f_λ}` over every dominant `λ` with
/// `level(λ) <= bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterFamily {
    rank: Rank,
    bound: u64,
    members: BTreeMap<DominantWeight, CharElement>,
}

impl CharacterFamily {
    /// Validates the index set, unitriangularity and saturated support.
    pub fn new(
        rank: Rank,
        bound: u64,
        members: BTreeMap<DominantWeight, CharElement>,
    ) -> Result<Self, RigidityError> {
        for (la, f) in &members {
            if la.rank() != rank || f.rank() != rank {
                return Err(LatticeError::RankMismatch(rank.get(), la.rank().get()).into());
            }
            if la.level() > bound {
                return Err(RigidityError::UnexpectedMember(la.to_string()));
            }
            if !f.is_unitriangular_at(la) {
                return Err(RigidityError::NotUnitriangular(la.to_string()));
            }
            if let Some(mu) = f
                .terms()
                .keys()
                .find(|mu| !weight::leq(mu.weight(), la.weight()))
            {
                return Err(RigidityError::SupportViolation {
                    lambda: la.to_string(),
                    mu: mu.to_string(),
                });
            }
        }
        let index = dominants_within(rank, bound);
        if let Some(missing) = index.iter().find(|la| !members.contains_key(la)) {
            return Err(RigidityError::MissingMember(missing.to_string()));
        }
        Ok(CharacterFamily {
            rank,
            bound,
            members,
        })
    }

    /// The family of Weyl characters up to `bound`.
    pub fn weyl(chars: &CharacterTable, bound: u64) -> Self {
        let members = dominants_within(chars.rank(), bound)
            .into_iter()
            .map(|la| {
                let ch = (*chars.character(&la)).clone();
                (la, ch)
            })
            .collect();
        CharacterFamily {
            rank: chars.rank(),
            bound,
            members,
        }
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn members(&self) -> &BTreeMap<DominantWeight, CharElement> {
        &self.members
    }

    pub fn member(&self, la: &DominantWeight) -> Option<&CharElement> {
        self.members.get(la)
    }

    pub fn contains(&self, la: &DominantWeight) -> bool {
        la.rank() == self.rank && la.level() <= self.bound
    }

    /// `n_λ(μ)`.
    pub fn n(&self, la: &DominantWeight, mu: &DominantWeight) -> Coeff {
        self.members
            .get(la)
            .map(|f| f.coeff(mu))
            .unwrap_or_default()
    }

    pub(crate) fn require(&self, la: &DominantWeight) -> Result<&CharElement, RigidityError> {
        if la.level() > self.bound {
            return Err(RigidityError::BoundExceeded {
                weight: la.to_string(),
                level: la.level(),
                bound: self.bound,
            });
        }
        self.members
            .get(la)
            .ok_or_else(|| RigidityError::MissingMember(la.to_string()))
    }

    pub(crate) fn with_members(&self, members: BTreeMap<DominantWeight, CharElement>) -> Self {
        CharacterFamily {
            rank: self.rank,
            bound: self.bound,
            members,
        }
    }

    /// Weights where `self` and `other` differ, with both members.
    pub fn diff<'a>(
        &'a self,
        other: &'a CharacterFamily,
    ) -> Vec<(
        &'a DominantWeight,
        Option<&'a CharElement>,
        Option<&'a CharElement>,
    )> {
        let mut keys: Vec<&DominantWeight> =
            self.members.keys().chain(other.members.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter()
            .filter_map(|k| {
                let (a, b) = (self.members.get(k), other.members.get(k));
                (a != b).then_some((k, a, b))
            })
            .collect()
    }
}

/// Source of structure constants `n_{μ,ν}^λ` for reconstruction.
pub trait StructureOracle {
    fn structure_constant(
        &self,
        mu: &DominantWeight,
        nu: &DominantWeight,
        la: &DominantWeight,
    ) -> Result<Coeff, RigidityError>;
}

impl<F> StructureOracle for F
where
    F: Fn(&DominantWeight, &DominantWeight, &DominantWeight) -> Result<Coeff, RigidityError>,
{
    fn structure_constant(
        &self,
        mu: &DominantWeight,
        nu: &DominantWeight,
        la: &DominantWeight,
    ) -> Result<Coeff, RigidityError> {
        self(mu, nu, la)
    }
}

/// Littlewood-Richardson coefficients computed on demand from Weyl characters.
#[derive(Debug)]
pub struct LrOracle<'a> {
    chars: &'a CharacterTable,
    rows: Mutex<HashMap<(DominantWeight, DominantWeight), Arc<StructureRow>>>,
}

impl<'a> LrOracle<'a> {
    pub fn new(chars: &'a CharacterTable) -> Self {
        LrOracle {
            chars,
            rows: Mutex::new(HashMap::new()),
        }
    }

    pub fn row(
        &self,
        mu: &DominantWeight,
        nu: &DominantWeight,
    ) -> Result<Arc<StructureRow>, RigidityError> {
        let key = if mu <= nu {
            (mu.clone(), nu.clone())
        } else {
            (nu.clone(), mu.clone())
        };
        if let Some(row) = self.rows.lock().expect("row lock").get(&key) {
            return Ok(Arc::clone(row));
        }
        let row = Arc::new(self.chars.tensor_decompose(&key.0, &key.1)?);
        self.rows
            .lock()
            .expect("row lock")
            .insert(key, Arc::clone(&row));
        Ok(row)
    }
}

impl StructureOracle for LrOracle<'_> {
    fn structure_constant(
        &self,
        mu: &DominantWeight,
        nu: &DominantWeight,
        la: &DominantWeight,
    ) -> Result<Coeff, RigidityError> {
        Ok(self.row(mu, nu)?.get(la).cloned().unwrap_or_default())
    }
}

type Triple = (DominantWeight, DominantWeight, DominantWeight);

/// Sparse `(μ, ν, λ) ↦ n_{μ,ν}^λ`.
///
/// A row `(μ, ν)` is present when its top entry `(μ, ν, μ+ν)` is; entries of
/// a present row that are not stored read as zero. Lookups try both `(μ, ν)`
/// and `(ν, μ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstantTable {
    rank: Rank,
    entries: BTreeMap<Triple, Coeff>,
}

impl StructureConstantTable {
    pub fn new(rank: Rank) -> Self {
        StructureConstantTable {
            rank,
            entries: BTreeMap::new(),
        }
    }

    /// Every LR row `(μ, ν)` with `μ <= ν` and `level(μ+ν) <= bound`.
    pub fn from_lr(chars: &CharacterTable, bound: u64) -> Self {
        let mut table = StructureConstantTable::new(chars.rank());
        let weights = dominants_within(chars.rank(), bound);
        for (i, mu) in weights.iter().enumerate() {
            for nu in &weights[i..] {
                if mu.level() + nu.level() > bound {
                    continue;
                }
                let row = chars.tensor_decompose(mu, nu).expect("same rank");
                for (la, c) in row {
                    table.entries.insert((mu.clone(), nu.clone(), la), c);
                }
            }
        }
        table
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn entries(&self) -> &BTreeMap<Triple, Coeff> {
        &self.entries
    }

    pub fn insert(
        &mut self,
        mu: DominantWeight,
        nu: DominantWeight,
        la: DominantWeight,
        value: Coeff,
    ) -> Result<(), RigidityError> {
        for w in [&mu, &nu, &la] {
            if w.rank() != self.rank {
                return Err(LatticeError::RankMismatch(self.rank.get(), w.rank().get()).into());
            }
        }
        let top = mu.add(&nu)?;
        if !weight::leq(la.weight(), top.weight()) {
            return Err(RigidityError::Table(format!("{la} is not below {mu}+{nu}")));
        }
        if la == top && !value.is_one() {
            return Err(RigidityError::Table(format!(
                "top entry n_{{{mu},{nu}}}^{la} must be 1"
            )));
        }
        if let Some(other) = self.entries.get(&(nu.clone(), mu.clone(), la.clone())) {
            if *other != value {
                return Err(RigidityError::Table(format!(
                    "asymmetric entries for ({mu},{nu}) at {la}"
                )));
            }
        }
        self.entries.insert((mu, nu, la), value);
        Ok(())
    }

    /// Every stored row must carry its top entry.
    pub fn validate(&self) -> Result<(), RigidityError> {
        for (mu, nu, _) in self.entries.keys() {
            if !self.has_row(mu, nu) {
                return Err(RigidityError::Table(format!(
                    "row ({mu},{nu}) lacks its top entry"
                )));
            }
        }
        Ok(())
    }

    fn has_row(&self, mu: &DominantWeight, nu: &DominantWeight) -> bool {
        let top = mu.add(nu).expect("same rank");
        self.entries.contains_key(&(mu.clone(), nu.clone(), top))
    }

    pub fn get(
        &self,
        mu: &DominantWeight,
        nu: &DominantWeight,
        la: &DominantWeight,
    ) -> Option<Coeff> {
        for (a, b) in [(mu, nu), (nu, mu)] {
            if let Some(v) = self.entries.get(&(a.clone(), b.clone(), la.clone())) {
                return Some(v.clone());
            }
            if self.has_row(a, b) {
                return Some(Coeff::zero());
            }
        }
        None
    }
}

impl StructureOracle for StructureConstantTable {
    fn structure_constant(
        &self,
        mu: &DominantWeight,
        nu: &DominantWeight,
        la: &DominantWeight,
    ) -> Result<Coeff, RigidityError> {
        self.get(mu, nu, la)
            .ok_or_else(|| RigidityError::OracleMissing {
                mu: mu.to_string(),
                nu: nu.to_string(),
                lambda: la.to_string(),
            })
    }
}
