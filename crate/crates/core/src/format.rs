//! JSON documents for characters, families and structure-constant tables.
//!
//! Weights are written as fundamental-coordinate arrays. Coefficients are
//! JSON integers when they fit in an `i64` and decimal strings otherwise.
//! Documents are pretty-printed and newline-terminated so that writing a
//! loaded document reproduces the original bytes.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rigidity::{CharacterFamily, RigidityError, StructureConstantTable};
use crate::ring::CharElement;
use crate::weight::{DominantWeight, LatticeError, Rank};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid weight: {0}")]
    Lattice(#[from] LatticeError),
    #[error("invalid content: {0}")]
    Rigidity(#[from] RigidityError),
    #[error("{0}")]
    Invalid(String),
}

pub(crate) mod coeff_serde {
    use super::*;
    use num_traits::ToPrimitive;
    use serde::de::Error as _;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(c: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        match c.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&c.to_string()),
        }
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Int(i64),
        Str(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Int(v) => Ok(BigInt::from(v)),
            Repr::Str(s) => s.parse().map_err(D::Error::custom),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub mu: Vec<i64>,
    #[serde(with = "coeff_serde")]
    pub coeff: BigInt,
}

/// A single character, as stored in the on-disk character cache.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CharacterDoc {
    pub rank: usize,
    pub lambda: Vec<i64>,
    pub terms: Vec<TermDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MemberDoc {
    pub lambda: Vec<i64>,
    pub terms: Vec<TermDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyDoc {
    pub rank: usize,
    pub bound: u64,
    pub members: Vec<MemberDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryDoc {
    pub mu: Vec<i64>,
    pub nu: Vec<i64>,
    pub lambda: Vec<i64>,
    #[serde(with = "coeff_serde")]
    pub value: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableDoc {
    pub rank: usize,
    pub entries: Vec<EntryDoc>,
}

/// Terms listed highest first (decreasing processing order).
pub fn terms_doc(f: &CharElement) -> Vec<TermDoc> {
    f.terms()
        .iter()
        .rev()
        .map(|(mu, c)| TermDoc {
            mu: mu.fundamental(),
            coeff: c.clone(),
        })
        .collect()
}

fn parse_dominant(rank: Rank, coords: &[i64]) -> Result<DominantWeight, FormatError> {
    Ok(DominantWeight::from_fundamental(rank, coords)?)
}

fn parse_terms(rank: Rank, terms: &[TermDoc]) -> Result<CharElement, FormatError> {
    let mut seen = BTreeMap::new();
    for t in terms {
        let mu = parse_dominant(rank, &t.mu)?;
        if seen.insert(mu.clone(), t.coeff.clone()).is_some() {
            return Err(FormatError::Invalid(format!("duplicate term {mu}")));
        }
    }
    Ok(CharElement::from_terms(rank, seen)?)
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents always serialize");
    s.push('\n');
    s
}

pub fn character_to_doc(la: &DominantWeight, f: &CharElement) -> CharacterDoc {
    CharacterDoc {
        rank: la.rank().get(),
        lambda: la.fundamental(),
        terms: terms_doc(f),
    }
}

pub fn character_from_doc(
    doc: &CharacterDoc,
) -> Result<(DominantWeight, CharElement), FormatError> {
    let rank = Rank::new(doc.rank)?;
    let la = parse_dominant(rank, &doc.lambda)?;
    Ok((la, parse_terms(rank, &doc.terms)?))
}

pub fn family_to_doc(fam: &CharacterFamily) -> FamilyDoc {
    FamilyDoc {
        rank: fam.rank().get(),
        bound: fam.bound(),
        members: fam
            .members()
            .iter()
            .map(|(la, f)| MemberDoc {
                lambda: la.fundamental(),
                terms: terms_doc(f),
            })
            .collect(),
    }
}

/// Parses and validates a family document; every family invariant is
/// rechecked on load.
pub fn family_from_doc(doc: &FamilyDoc) -> Result<CharacterFamily, FormatError> {
    let rank = Rank::new(doc.rank)?;
    let mut members = BTreeMap::new();
    for m in &doc.members {
        let la = parse_dominant(rank, &m.lambda)?;
        let f = parse_terms(rank, &m.terms)?;
        if members.insert(la.clone(), f).is_some() {
            return Err(FormatError::Invalid(format!("duplicate member {la}")));
        }
    }
    Ok(CharacterFamily::new(rank, doc.bound, members)?)
}

pub fn family_to_json(fam: &CharacterFamily) -> String {
    to_json(&family_to_doc(fam))
}

pub fn family_from_json(s: &str) -> Result<CharacterFamily, FormatError> {
    family_from_doc(&serde_json::from_str(s)?)
}

pub fn table_to_doc(table: &StructureConstantTable) -> TableDoc {
    TableDoc {
        rank: table.rank().get(),
        entries: table
            .entries()
            .iter()
            .map(|((mu, nu, la), v)| EntryDoc {
                mu: mu.fundamental(),
                nu: nu.fundamental(),
                lambda: la.fundamental(),
                value: v.clone(),
            })
            .collect(),
    }
}

pub fn table_from_doc(doc: &TableDoc) -> Result<StructureConstantTable, FormatError> {
    let rank = Rank::new(doc.rank)?;
    let mut table = StructureConstantTable::new(rank);
    for e in &doc.entries {
        let mu = parse_dominant(rank, &e.mu)?;
        let nu = parse_dominant(rank, &e.nu)?;
        let la = parse_dominant(rank, &e.lambda)?;
        table.insert(mu, nu, la, e.value.clone())?;
    }
    table.validate()?;
    Ok(table)
}

pub fn table_to_json(table: &StructureConstantTable) -> String {
    to_json(&table_to_doc(table))
}

pub fn table_from_json(s: &str) -> Result<StructureConstantTable, FormatError> {
    table_from_doc(&serde_json::from_str(s)?)
}

/// Parses `"1,0,2"` into coordinates.
pub fn parse_coords(s: &str) -> Result<Vec<i64>, FormatError> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| FormatError::Invalid(format!("bad coordinate {p:?} in {s:?}")))
        })
        .collect()
}
