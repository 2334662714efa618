//! Ground-truth characters and tensor product decompositions.
//!
//! Weight multiplicities come from Freudenthal's recursion, which stays in
//! the dominant chamber and whose exact divisions double as a self-check.
//! Littlewood-Richardson coefficients are read off by peeling characters
//! from the top of a product, highest weight first.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Arc, RwLock};

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::format;
use crate::ring::{CharElement, Coeff};
use crate::weight::{
    dominant_representative, orbit_size, positive_roots, rho, saturated_dominants, DominantWeight,
    LatticeError, Rank, Weight,
};

/// Sparse `λ ↦ coefficient` map, e.g. one row `c_{μ,ν}^λ` of a tensor decomposition.
pub type StructureRow = BTreeMap<DominantWeight, Coeff>;

/// `m_λ(μ)` for every `μ ∈ Π^+(λ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityTable {
    pub lambda: DominantWeight,
    pub mults: BTreeMap<DominantWeight, Coeff>,
}

impl MultiplicityTable {
    pub fn from_character(lambda: DominantWeight, ch: &CharElement) -> Self {
        MultiplicityTable {
            lambda,
            mults: ch.terms().clone(),
        }
    }
}

fn dot(x: &[i64], y: &[i64]) -> i64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

/// The formal character of `V(λ)` via Freudenthal's formula
///
/// `(|λ+ρ|² - |μ+ρ|²) m(μ) = 2 Σ_{α>0} Σ_{k≥1} ⟨μ+kα, α⟩ m(μ+kα)`,
///
/// evaluated on `Π^+(λ)` from the top down with every `μ` sum-aligned to `λ`.
pub fn freudenthal_character(la: &DominantWeight) -> CharElement {
    let rank = la.rank();
    let total = la.weight().coordinate_sum();
    let rho = rho(rank);
    let roots = positive_roots(rank);
    let shifted_norm = |v: &[i64]| -> i64 {
        let s: Vec<i64> = v.iter().zip(rho.eps()).map(|(a, b)| a + b).collect();
        dot(&s, &s)
    };
    let top_norm = shifted_norm(la.eps());

    let mut mult: HashMap<DominantWeight, Coeff> = HashMap::new();
    let mut terms = Vec::new();
    for mu in saturated_dominants(la) {
        if &mu == la {
            mult.insert(mu.clone(), Coeff::one());
            terms.push((mu, Coeff::one()));
            continue;
        }
        let aligned = mu
            .weight()
            .aligned_to(total)
            .expect("Π^+(λ) lies in λ's class");
        let denom = top_norm - shifted_norm(&aligned);
        assert!(denom > 0, "|λ+ρ|² must exceed |μ+ρ|² for μ ≺ λ");

        let mut sum = Coeff::zero();
        let mut x = aligned.clone();
        for alpha in &roots {
            x.copy_from_slice(&aligned);
            // weight strings are unbroken: stop at the first weight outside Π(λ)
            loop {
                x.iter_mut().zip(alpha).for_each(|(a, b)| *a += b);
                let d = dominant_representative(&Weight::from_eps(x.clone()).expect("nonempty"));
                match mult.get(&d) {
                    Some(m) => sum += m * dot(&x, alpha),
                    None => break,
                }
            }
        }
        let (m, rem) = (sum * Coeff::from(2)).div_rem(&Coeff::from(denom));
        assert!(
            rem.is_zero(),
            "inexact Freudenthal division at {mu} in V({la})"
        );
        if !m.is_zero() {
            mult.insert(mu.clone(), m.clone());
            terms.push((mu, m));
        }
    }
    CharElement::from_terms(rank, terms).expect("single rank")
}

/// Weyl's dimension formula `Π_{i<j} (λ_i - λ_j + j - i) / (j - i)`.
pub fn weyl_dim(la: &DominantWeight) -> Coeff {
    let eps = la.eps();
    let mut num = Coeff::one();
    let mut den = Coeff::one();
    for i in 0..eps.len() {
        for j in i + 1..eps.len() {
            let gap = (j - i) as i64;
            num *= eps[i] - eps[j] + gap;
            den *= gap;
        }
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    q
}

/// Memoized characters for one rank, optionally spilled to a cache directory.
///
/// The memo is a concurrent map with idempotent inserts: two threads racing
/// on the same `λ` compute equal values and either insert wins.
#[derive(Debug)]
pub struct CharacterTable {
    rank: Rank,
    memo: RwLock<HashMap<DominantWeight, Arc<CharElement>>>,
    spill: Option<PathBuf>,
}

impl CharacterTable {
    pub fn new(rank: Rank) -> Self {
        CharacterTable {
            rank,
            memo: RwLock::new(HashMap::new()),
            spill: None,
        }
    }

    /// Characters are also read from and written to `dir`, one JSON document
    /// per weight. Entries that fail to parse or fail the dimension check are
    /// recomputed and overwritten.
    pub fn with_cache_dir(rank: Rank, dir: impl Into<PathBuf>) -> Self {
        CharacterTable {
            rank,
            memo: RwLock::new(HashMap::new()),
            spill: Some(dir.into()),
        }
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn character(&self, la: &DominantWeight) -> Arc<CharElement> {
        assert_eq!(
            la.rank(),
            self.rank,
            "character requested at the wrong rank"
        );
        if let Some(ch) = self.memo.read().expect("memo lock").get(la) {
            return Arc::clone(ch);
        }
        let ch = Arc::new(self.load_spilled(la).unwrap_or_else(|| {
            let ch = freudenthal_character(la);
            self.store_spilled(la, &ch);
            ch
        }));
        let mut memo = self.memo.write().expect("memo lock");
        Arc::clone(memo.entry(la.clone()).or_insert(ch))
    }

    pub fn multiplicities(&self, la: &DominantWeight) -> MultiplicityTable {
        MultiplicityTable::from_character(la.clone(), &self.character(la))
    }

    /// Coefficients `d_μ` with `f = Σ d_μ ch_μ`.
    pub fn decompose(&self, f: &CharElement) -> StructureRow {
        assert_eq!(f.rank(), self.rank, "decompose at the wrong rank");
        let mut residue = f.clone();
        let mut out = StructureRow::new();
        while let Some((top, c)) = residue.top() {
            let (top, c) = (top.clone(), c.clone());
            let ch = self.character(&top);
            residue = residue.sub(&ch.scale(&c)).expect("same rank");
            out.insert(top, c);
        }
        out
    }

    /// `c_{μ,ν}^λ` for all `λ`, as the decomposition of `ch_μ · ch_ν`.
    pub fn tensor_decompose(
        &self,
        mu: &DominantWeight,
        nu: &DominantWeight,
    ) -> Result<StructureRow, LatticeError> {
        if mu.rank() != nu.rank() {
            return Err(LatticeError::RankMismatch(mu.rank().get(), nu.rank().get()));
        }
        if mu.rank() != self.rank {
            return Err(LatticeError::RankMismatch(self.rank.get(), mu.rank().get()));
        }
        let product = self.character(mu).multiply(&self.character(nu))?;
        Ok(self.decompose(&product))
    }

    fn cache_path(&self, la: &DominantWeight) -> Option<PathBuf> {
        let dir = self.spill.as_ref()?;
        Some(dir.join(cache_file_name(la)))
    }

    fn load_spilled(&self, la: &DominantWeight) -> Option<CharElement> {
        let path = self.cache_path(la)?;
        let text = fs::read_to_string(&path).ok()?;
        let doc: format::CharacterDoc = serde_json::from_str(&text).ok()?;
        let (lambda, ch) = format::character_from_doc(&doc).ok()?;
        let trusted = &lambda == la
            && ch.is_unitriangular_at(la)
            && ch
                .terms()
                .keys()
                .all(|mu| crate::weight::leq(mu.weight(), la.weight()))
            && ch.terms().values().all(|c| c > &Coeff::zero())
            && ch.dim() == weyl_dim(la);
        trusted.then_some(ch)
    }

    fn store_spilled(&self, la: &DominantWeight, ch: &CharElement) {
        let Some(path) = self.cache_path(la) else {
            return;
        };
        let text = format::to_json(&format::character_to_doc(la, ch));
        // The cache is an optimization; a failed write only costs a recomputation later.
        let _ = write_atomic(&path, &text);
    }
}

/// `a2_1-1.json` for `(1,1)` in `A_2`.
pub fn cache_file_name(la: &DominantWeight) -> String {
    let coords: Vec<String> = la.fundamental().iter().map(|c| c.to_string()).collect();
    format!("a{}_{}.json", la.rank().get(), coords.join("-"))
}

fn write_atomic(path: &Path, text: &str) -> std::io::Result<()> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)?;
    }
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, text)?;
    fs::rename(&tmp, path)
}

/// `Σ_μ m_λ(μ) |W μ|`, which must equal [`weyl_dim`].
pub fn orbit_dimension(ch: &CharElement) -> Coeff {
    ch.terms()
        .iter()
        .map(|(mu, m)| m * Coeff::from(orbit_size(mu)))
        .sum()
}

pub fn decompose(f: &CharElement) -> StructureRow {
    CharacterTable::new(f.rank()).decompose(f)
}

pub fn tensor_decompose(
    mu: &DominantWeight,
    nu: &DominantWeight,
) -> Result<StructureRow, LatticeError> {
    CharacterTable::new(mu.rank()).tensor_decompose(mu, nu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::orbit_sum;
    use crate::weight::dominants_within;

    fn r(l: usize) -> Rank {
        Rank::new(l).unwrap()
    }

    fn dw(l: usize, c: &[i64]) -> DominantWeight {
        DominantWeight::from_fundamental(r(l), c).unwrap()
    }

    fn row(l: usize, entries: &[(&[i64], i64)]) -> StructureRow {
        entries
            .iter()
            .map(|(c, v)| (dw(l, c), Coeff::from(*v)))
            .collect()
    }

    #[test]
    fn freudenthal_examples() {
        let ch = freudenthal_character(&dw(2, &[1, 1]));
        assert_eq!(ch.terms(), &row(2, &[(&[1, 1], 1), (&[0, 0], 2)]));
        let ch = freudenthal_character(&dw(2, &[2, 1]));
        assert_eq!(
            ch.terms(),
            &row(2, &[(&[2, 1], 1), (&[0, 2], 1), (&[1, 0], 2)])
        );
        for l in 1..=4 {
            for i in 1..=l {
                let w = DominantWeight::fundamental_weight(r(l), i);
                assert_eq!(freudenthal_character(&w), orbit_sum(&w));
            }
        }
    }

    #[test]
    fn weyl_dim_examples() {
        assert_eq!(weyl_dim(&dw(2, &[1, 0])), Coeff::from(3));
        assert_eq!(weyl_dim(&dw(2, &[1, 1])), Coeff::from(8));
        assert_eq!(weyl_dim(&dw(2, &[2, 1])), Coeff::from(15));
        for l in 1..5 {
            assert_eq!(weyl_dim(&DominantWeight::zero(r(l))), Coeff::one());
        }
    }

    #[test]
    fn dimension_consistency_small() {
        for d in dominants_within(r(3), 8) {
            assert_eq!(
                orbit_dimension(&freudenthal_character(&d)),
                weyl_dim(&d),
                "{d}"
            );
        }
    }

    #[test]
    fn decompose_examples() {
        let ch = freudenthal_character(&dw(2, &[1, 1]));
        assert_eq!(decompose(&ch), row(2, &[(&[1, 1], 1)]));
        assert_eq!(
            decompose(&orbit_sum(&dw(2, &[0, 0]))),
            row(2, &[(&[0, 0], 1)])
        );
        // ch_(1,1) - h((1,1)) = 2 e(0)
        assert_eq!(
            decompose(&orbit_sum(&dw(2, &[1, 1]))),
            row(2, &[(&[1, 1], 1), (&[0, 0], -2)])
        );
    }

    #[test]
    fn tensor_examples() {
        assert_eq!(
            tensor_decompose(&dw(2, &[1, 0]), &dw(2, &[0, 1])).unwrap(),
            row(2, &[(&[1, 1], 1), (&[0, 0], 1)])
        );
        assert_eq!(
            tensor_decompose(&dw(2, &[1, 0]), &dw(2, &[1, 0])).unwrap(),
            row(2, &[(&[2, 0], 1), (&[0, 1], 1)])
        );
        assert_eq!(
            tensor_decompose(&dw(3, &[1, 2, 0]), &DominantWeight::zero(r(3))).unwrap(),
            row(3, &[(&[1, 2, 0], 1)])
        );
        assert!(tensor_decompose(&dw(2, &[1, 0]), &dw(3, &[1, 0, 0])).is_err());
    }

    #[test]
    fn spill_roundtrip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let la = dw(2, &[2, 1]);
        let cold = CharacterTable::with_cache_dir(r(2), dir.path());
        let expected = cold.character(&la);
        let path = dir.path().join(cache_file_name(&la));
        assert!(path.exists());

        let warm = CharacterTable::with_cache_dir(r(2), dir.path());
        assert_eq!(*warm.character(&la), *expected);

        // a tampered multiplicity fails the dimension check and is recomputed
        let text = fs::read_to_string(&path)
            .unwrap()
            .replace("\"coeff\": 2", "\"coeff\": 3");
        fs::write(&path, text).unwrap();
        let again = CharacterTable::with_cache_dir(r(2), dir.path());
        assert_eq!(*again.character(&la), *expected);

        fs::write(&path, "not json").unwrap();
        let again = CharacterTable::with_cache_dir(r(2), dir.path());
        assert_eq!(*again.character(&la), *expected);
        assert!(fs::read_to_string(&path).unwrap().starts_with('{'));
    }
}
