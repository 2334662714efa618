//! The two conditions that pin a family down to the Weyl characters.
//!
//! 1. Rank restriction: `n_λ(μ) = m_λ(μ)` whenever `λ - μ` involves fewer
//!    than `l` simple roots.
//! 2. Duality: `n_{μ,ν}^λ = n_{λ,-w_0 ν}^μ`.
//!
//! A family is finite, so duality triples whose right-hand side needs weights
//! past the bound are reported as skipped rather than passed.

use std::collections::HashMap;

use crate::oracle::{CharacterTable, StructureRow};
use crate::ring::{orbit_sum, Coeff};
use crate::weight::{self, neg_w0, root_coordinates, saturated_dominants, DominantWeight};

use super::{extract_structure_constants, CharacterFamily, RigidityError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condition1Violation {
    pub lambda: DominantWeight,
    pub mu: DominantWeight,
    pub expected: Coeff,
    pub found: Coeff,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condition2Violation {
    pub mu: DominantWeight,
    pub nu: DominantWeight,
    pub lambda: DominantWeight,
    pub lhs: Coeff,
    pub rhs: Coeff,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Condition2Outcome {
    pub violations: Vec<Condition2Violation>,
    /// `(μ, ν, λ)` whose dual side `λ + (-w_0 ν)` lies past the bound.
    pub skipped: Vec<(DominantWeight, DominantWeight, DominantWeight)>,
    pub checked: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub condition1_violations: Vec<Condition1Violation>,
    pub condition1_checked: usize,
    pub condition2: Condition2Outcome,
    /// Whether every member equals the Weyl character.
    pub members_equal: bool,
}

impl ConditionReport {
    pub fn condition1_passed(&self) -> bool {
        self.condition1_violations.is_empty()
    }

    pub fn condition2_passed(&self) -> bool {
        self.condition2.violations.is_empty()
    }

    pub fn passed(&self) -> bool {
        self.condition1_passed() && self.condition2_passed()
    }
}

/// Which side of the rank-restriction condition a site `(λ, μ)` falls on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SiteStratum {
    /// `|Supp(λ - μ)| < l`: covered by condition 1.
    Restricted,
    /// `|Supp(λ - μ)| = l`: only duality constrains it.
    Full,
}

impl SiteStratum {
    pub fn of(la: &DominantWeight, mu: &DominantWeight) -> Result<Self, RigidityError> {
        let beta = root_coordinates(la.weight(), mu.weight())?;
        Ok(if beta.support_size() < la.rank().get() {
            SiteStratum::Restricted
        } else {
            SiteStratum::Full
        })
    }
}

pub fn check_condition1(
    fam: &CharacterFamily,
    chars: &CharacterTable,
) -> (Vec<Condition1Violation>, usize) {
    let l = fam.rank().get();
    let mut violations = Vec::new();
    let mut checked = 0;
    for (la, f) in fam.members() {
        let ch = chars.character(la);
        for mu in saturated_dominants(la) {
            let beta = root_coordinates(la.weight(), mu.weight()).expect("same class");
            if beta.support_size() >= l {
                continue;
            }
            checked += 1;
            let (expected, found) = (ch.coeff(&mu), f.coeff(&mu));
            if expected != found {
                violations.push(Condition1Violation {
                    lambda: la.clone(),
                    mu,
                    expected,
                    found,
                });
            }
        }
    }
    (violations, checked)
}

pub fn check_condition2(fam: &CharacterFamily) -> Result<Condition2Outcome, RigidityError> {
    let mut rows: HashMap<(DominantWeight, DominantWeight), StructureRow> = HashMap::new();
    let mut row = |a: &DominantWeight, b: &DominantWeight| -> Result<StructureRow, RigidityError> {
        let key = (a.clone(), b.clone());
        if let Some(r) = rows.get(&key) {
            return Ok(r.clone());
        }
        let r = extract_structure_constants(fam, a, b)?;
        rows.insert(key, r.clone());
        Ok(r)
    };
    let weights: Vec<&DominantWeight> = fam.members().keys().collect();
    let mut out = Condition2Outcome::default();
    for mu in &weights {
        for nu in &weights {
            if mu.level() + nu.level() > fam.bound() {
                continue;
            }
            let top = mu.add(nu)?;
            let lhs_row = row(mu, nu)?;
            let dual = neg_w0(nu);
            for la in saturated_dominants(&top) {
                let dual_top = la.add(&dual)?;
                if !fam.contains(&dual_top) {
                    out.skipped.push(((*mu).clone(), (*nu).clone(), la));
                    continue;
                }
                out.checked += 1;
                let lhs = lhs_row.get(&la).cloned().unwrap_or_default();
                let rhs = row(&la, &dual)?.get(mu).cloned().unwrap_or_default();
                if lhs != rhs {
                    out.violations.push(Condition2Violation {
                        mu: (*mu).clone(),
                        nu: (*nu).clone(),
                        lambda: la,
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Runs both checks and compares every member with the Weyl character.
pub fn verify_theorem(
    fam: &CharacterFamily,
    chars: &CharacterTable,
) -> Result<ConditionReport, RigidityError> {
    let (condition1_violations, condition1_checked) = check_condition1(fam, chars);
    let condition2 = check_condition2(fam)?;
    let members_equal = fam
        .members()
        .iter()
        .all(|(la, f)| *chars.character(la) == *f);
    Ok(ConditionReport {
        condition1_violations,
        condition1_checked,
        condition2,
        members_equal,
    })
}

/// Every `(λ, μ)` with `μ ∈ Π^+(λ)`, `μ ≠ λ`, in processing order.
pub fn perturbation_sites(fam: &CharacterFamily) -> Vec<(DominantWeight, DominantWeight)> {
    fam.members()
        .keys()
        .flat_map(|la| {
            saturated_dominants(la)
                .into_iter()
                .filter(move |mu| mu != la)
                .map(move |mu| (la.clone(), mu))
        })
        .collect()
}

/// A copy of `fam` with `n_λ(μ)` shifted by `delta`.
pub fn perturb_family(
    fam: &CharacterFamily,
    site: (&DominantWeight, &DominantWeight),
    delta: i64,
) -> Result<CharacterFamily, RigidityError> {
    let (la, mu) = site;
    if delta == 0 {
        return Err(RigidityError::ZeroDelta);
    }
    if la == mu {
        return Err(RigidityError::InvalidSite(format!(
            "({la},{mu}) would break n_λ(λ) = 1"
        )));
    }
    if !fam.contains(la) {
        return Err(RigidityError::InvalidSite(format!(
            "{la} is outside the family"
        )));
    }
    if mu.rank() != la.rank() || !weight::leq(mu.weight(), la.weight()) {
        return Err(RigidityError::InvalidSite(format!(
            "{mu} is not in Π^+({la})"
        )));
    }
    let mut members = fam.members().clone();
    let f = members.get_mut(la).expect("contained");
    *f = f.add(&orbit_sum(mu).scale(&Coeff::from(delta)))?;
    Ok(fam.with_members(members))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::Rank;

    fn r(l: usize) -> Rank {
        Rank::new(l).unwrap()
    }

    fn dw(l: usize, c: &[i64]) -> DominantWeight {
        DominantWeight::from_fundamental(r(l), c).unwrap()
    }

    #[test]
    fn true_family_passes() {
        let chars = CharacterTable::new(r(2));
        let fam = CharacterFamily::weyl(&chars, 10);
        let report = verify_theorem(&fam, &chars).unwrap();
        assert!(report.passed());
        assert!(report.members_equal);
        assert!(report.condition2.checked > 0);
        assert!(!report.condition2.skipped.is_empty());
    }

    #[test]
    fn restricted_stratum_is_caught_by_condition1() {
        let chars = CharacterTable::new(r(2));
        let fam = CharacterFamily::weyl(&chars, 10);
        let (la, mu) = (dw(2, &[2, 1]), dw(2, &[0, 2]));
        assert_eq!(SiteStratum::of(&la, &mu).unwrap(), SiteStratum::Restricted);
        let bad = perturb_family(&fam, (&la, &mu), 1).unwrap();
        let (v, _) = check_condition1(&bad, &chars);
        assert_eq!(
            v,
            vec![Condition1Violation {
                lambda: la,
                mu,
                expected: 1.into(),
                found: 2.into()
            }]
        );
    }

    #[test]
    fn full_stratum_is_silent_for_condition1_but_not_condition2() {
        let chars = CharacterTable::new(r(2));
        let fam = CharacterFamily::weyl(&chars, 10);
        let (la, mu) = (dw(2, &[1, 1]), dw(2, &[0, 0]));
        assert_eq!(SiteStratum::of(&la, &mu).unwrap(), SiteStratum::Full);
        for delta in [-3, -1, 2] {
            let bad = perturb_family(&fam, (&la, &mu), delta).unwrap();
            assert!(check_condition1(&bad, &chars).0.is_empty());
            let out = check_condition2(&bad).unwrap();
            assert!(!out.violations.is_empty());
            assert!(out
                .violations
                .iter()
                .any(|v| [&v.mu, &v.nu, &v.lambda].contains(&&la)));
            let report = verify_theorem(&bad, &chars).unwrap();
            assert!(!report.members_equal);
        }
    }

    #[test]
    fn duality_example_triple() {
        let chars = CharacterTable::new(r(2));
        let fam = CharacterFamily::weyl(&chars, 10);
        let lhs = extract_structure_constants(&fam, &dw(2, &[1, 0]), &dw(2, &[0, 1])).unwrap();
        let rhs = extract_structure_constants(&fam, &dw(2, &[0, 0]), &dw(2, &[1, 0])).unwrap();
        assert_eq!(lhs[&dw(2, &[0, 0])], 1.into());
        assert_eq!(rhs[&dw(2, &[1, 0])], 1.into());
    }

    #[test]
    fn perturb_validation() {
        let chars = CharacterTable::new(r(2));
        let fam = CharacterFamily::weyl(&chars, 10);
        let p = perturb_family(&fam, (&dw(2, &[1, 1]), &dw(2, &[0, 0])), 1).unwrap();
        assert_eq!(p.n(&dw(2, &[1, 1]), &dw(2, &[0, 0])), 3.into());
        assert!(matches!(
            perturb_family(&fam, (&dw(2, &[1, 1]), &dw(2, &[1, 1])), 1),
            Err(RigidityError::InvalidSite(_))
        ));
        assert!(matches!(
            perturb_family(&fam, (&dw(2, &[1, 0]), &dw(2, &[2, 0])), 1),
            Err(RigidityError::InvalidSite(_))
        ));
        assert!(matches!(
            perturb_family(&fam, (&dw(2, &[1, 1]), &dw(2, &[0, 0])), 0),
            Err(RigidityError::ZeroDelta)
        ));
        assert!(matches!(
            perturb_family(&fam, (&dw(2, &[6, 0]), &dw(2, &[4, 1])), 1),
            Err(RigidityError::InvalidSite(_))
        ));
    }
}
