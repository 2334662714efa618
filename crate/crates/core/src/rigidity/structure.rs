//! Structure constants from multiplicities, and the multiplicity formula
//! that runs the other way.
//!
//! Writing `conv(t)` for the coefficient of `e(t)` in `f_μ f_ν` and
//! `λ = μ + ν`, the two formulas are
//!
//! ```text
//! n_{μ,ν}^t = conv(t) - Σ_{s ≻ t} n_{μ,ν}^s n_s(t)          (constants)
//! n_λ(t)    = conv(t) - Σ_{s ≠ λ} n_{μ,ν}^s n_s(t)          (multiplicities)
//! ```
//!
//! with `s` ranging over `Π^+(λ)`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::oracle::StructureRow;
use crate::ring::{CharElement, Coeff};
use crate::weight::{self, saturated_dominants, DominantWeight};

use super::{CharacterFamily, RigidityError};

/// Coefficient of `e(t)` in `f · g`, as the literal sum over `y + z = t`.
pub fn convolution_coefficient(f: &CharElement, g: &CharElement, t: &weight::Weight) -> Coeff {
    f.e_expansion()
        .into_iter()
        .map(|(y, a)| {
            let z = t.sub(&y).expect("same rank");
            a * g.e_coefficient(&z)
        })
        .sum()
}

/// `n_{μ,ν}^t` for every `t ∈ Π^+(μ+ν)`, top down. Zero entries are omitted.
pub fn extract_structure_constants(
    fam: &CharacterFamily,
    mu: &DominantWeight,
    nu: &DominantWeight,
) -> Result<StructureRow, RigidityError> {
    let la = mu.add(nu)?;
    fam.require(&la)?;
    let product = fam.require(mu)?.multiply(fam.require(nu)?)?;
    let mut row = StructureRow::new();
    for t in saturated_dominants(&la) {
        let mut v = product.coeff(&t);
        for (s, ns) in &row {
            let n_s_t = fam.require(s)?.coeff(&t);
            if !n_s_t.is_zero() {
                v -= ns * n_s_t;
            }
        }
        if !v.is_zero() {
            row.insert(t, v);
        }
    }
    debug_assert!(row.get(&la).is_some_and(|v| v.is_one()));
    Ok(row)
}

/// `n_λ(t)` for `λ = μ + ν` from the lower members and the row of
/// structure constants. `f_λ` itself is never read.
pub fn multiplicity_via_eq1(
    members: &BTreeMap<DominantWeight, CharElement>,
    mu: &DominantWeight,
    nu: &DominantWeight,
    t: &DominantWeight,
    row: &StructureRow,
) -> Result<Coeff, RigidityError> {
    let la = mu.add(nu)?;
    if !weight::leq(t.weight(), la.weight()) {
        return Ok(Coeff::zero());
    }
    let get = |w: &DominantWeight| {
        members
            .get(w)
            .ok_or_else(|| RigidityError::MissingMember(w.to_string()))
    };
    let mut v = convolution_coefficient(get(mu)?, get(nu)?, t.weight());
    for s in saturated_dominants(&la) {
        if s == la {
            continue;
        }
        let Some(ns) = row.get(&s) else { continue };
        let n_s_t = get(&s)?.coeff(t);
        if !n_s_t.is_zero() {
            v -= ns * n_s_t;
        }
    }
    Ok(v)
}

/// Checks how `n_λ(t)` and `n_{μ,ν}^t` are tied together, using the
/// library's own implementations of both formulas.
///
/// See [`eq3_consistency_with`].
pub fn eq3_consistency(
    fam: &CharacterFamily,
    mu: &DominantWeight,
    nu: &DominantWeight,
    t: &DominantWeight,
) -> Result<bool, RigidityError> {
    eq3_consistency_with(
        fam,
        mu,
        nu,
        t,
        multiplicity_via_eq1,
        extract_structure_constants,
    )
}

/// For `t ≺ λ = μ + ν`, the two formulas share every term except the pair
/// `n_λ(t)`, `n_{μ,ν}^t`, so `n_λ(t) + n_{μ,ν}^t` equals
/// `conv(t) - Σ_{t ≺ s ≺ λ} n_{μ,ν}^s n_s(t)`: a function of `f_μ`, `f_ν`
/// and the coefficients `n_s(x)` with `t ⪯ x ⪯ s ⪯ λ`, `(s, x) ≠ (λ, t)`.
///
/// Returns true iff
/// * the multiplicity formula reproduces the stored `n_λ(t)`,
/// * shifting `n_λ(t)` by several amounts leaves the sum unchanged and is
///   tracked exactly by the multiplicity formula,
/// * perturbing coefficients outside that dependency cone leaves the sum
///   unchanged.
///
/// At `t = λ` both sides must be 1; for `t ∉ Π(λ)` both must vanish.
pub fn eq3_consistency_with<M, C>(
    fam: &CharacterFamily,
    mu: &DominantWeight,
    nu: &DominantWeight,
    t: &DominantWeight,
    multiplicities: M,
    constants: C,
) -> Result<bool, RigidityError>
where
    M: Fn(
        &BTreeMap<DominantWeight, CharElement>,
        &DominantWeight,
        &DominantWeight,
        &DominantWeight,
        &StructureRow,
    ) -> Result<Coeff, RigidityError>,
    C: Fn(
        &CharacterFamily,
        &DominantWeight,
        &DominantWeight,
    ) -> Result<StructureRow, RigidityError>,
{
    let la = mu.add(nu)?;
    fam.require(&la)?;
    let evaluate = |f: &CharacterFamily| -> Result<(Coeff, Coeff), RigidityError> {
        let row = constants(f, mu, nu)?;
        let n = multiplicities(f.members(), mu, nu, t, &row)?;
        Ok((n, row.get(t).cloned().unwrap_or_default()))
    };
    let (n, c) = evaluate(fam)?;
    if !weight::leq(t.weight(), la.weight()) {
        return Ok(n.is_zero() && c.is_zero());
    }
    if t == &la {
        return Ok(n.is_one() && c.is_one());
    }
    if n != fam.n(&la, t) {
        return Ok(false);
    }
    let invariant = &n + &c;

    let shifted = |site_la: &DominantWeight, site_mu: &DominantWeight, delta: i64| {
        let mut members = fam.members().clone();
        let f = members.get_mut(site_la).expect("site inside family");
        *f = f
            .add(&crate::ring::orbit_sum(site_mu).scale(&Coeff::from(delta)))
            .expect("same rank");
        fam.with_members(members)
    };

    for delta in [1, -2, 3] {
        let probe = shifted(&la, t, delta);
        let (n2, c2) = evaluate(&probe)?;
        if n2 != probe.n(&la, t) || &n2 + &c2 != invariant {
            return Ok(false);
        }
    }

    let outside: Vec<(DominantWeight, DominantWeight)> = super::perturbation_sites(fam)
        .into_iter()
        .filter(|(s, x)| {
            s != mu
                && s != nu
                && !(weight::leq(s.weight(), la.weight()) && weight::leq(t.weight(), x.weight()))
        })
        .collect();
    let picks = outside.iter().take(2).chain(outside.iter().rev().take(2));
    for (s, x) in picks {
        let probe = shifted(s, x, 1);
        let (n2, c2) = evaluate(&probe)?;
        if &n2 + &c2 != invariant {
            return Ok(false);
        }
    }
    Ok(true)
}
