//! Root and weight lattices of type `A_l`.
//!
//! Weights are stored in ε-coordinates: an integer vector of length `l + 1`
//! taken modulo the all-ones vector. The canonical representative has
//! minimum entry zero. In these coordinates the Weyl group (the symmetric
//! group on `l + 1` letters) acts by permuting entries, a weight is dominant
//! iff its entries are weakly decreasing, and dominance is a partial-sum
//! comparison.
//!
//! Fundamental coordinates `c_i = eps_i - eps_{i+1}` are a view used for
//! input and output only.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("rank must be at least 1, got {0}")]
    InvalidRank(usize),
    #[error("expected {expected} coordinates, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("rank mismatch: A_{0} vs A_{1}")]
    RankMismatch(usize, usize),
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("difference {0} - {1} is not in the root lattice")]
    NotInRootLattice(String, String),
    #[error("pairing needs sum-aligned vectors or a root argument")]
    Unaligned,
}

/// The subscript `l` of `A_l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rank(usize);

impl Rank {
    pub fn new(l: usize) -> Result<Self, LatticeError> {
        if l == 0 {
            return Err(LatticeError::InvalidRank(l));
        }
        Ok(Rank(l))
    }

    pub fn get(self) -> usize {
        self.0
    }

    /// Number of ε-coordinates, `l + 1`.
    pub fn dim(self) -> usize {
        self.0 + 1
    }

    fn check(self, other: Rank) -> Result<(), LatticeError> {
        if self != other {
            return Err(LatticeError::RankMismatch(self.0, other.0));
        }
        Ok(())
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A_{}", self.0)
    }
}

/// A point of the weight lattice in canonical ε-coordinates (`min(eps) == 0`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    eps: Vec<i64>,
}

impl Weight {
    /// Builds a weight from any ε-representative; the vector is shifted to
    /// its canonical form.
    pub fn from_eps(mut eps: Vec<i64>) -> Result<Self, LatticeError> {
        Rank::new(eps.len().saturating_sub(1))?;
        let min = *eps.iter().min().expect("nonempty");
        eps.iter_mut().for_each(|x| *x -= min);
        Ok(Weight { eps })
    }

    pub fn from_fundamental(rank: Rank, coords: &[i64]) -> Result<Self, LatticeError> {
        if coords.len() != rank.get() {
            return Err(LatticeError::LengthMismatch {
                expected: rank.get(),
                found: coords.len(),
            });
        }
        let mut eps = vec![0i64; rank.dim()];
        for i in (0..rank.get()).rev() {
            eps[i] = eps[i + 1] + coords[i];
        }
        Weight::from_eps(eps)
    }

    pub fn zero(rank: Rank) -> Self {
        Weight {
            eps: vec![0; rank.dim()],
        }
    }

    pub fn rank(&self) -> Rank {
        Rank(self.eps.len() - 1)
    }

    pub fn eps(&self) -> &[i64] {
        &self.eps
    }

    pub fn fundamental(&self) -> Vec<i64> {
        self.eps.windows(2).map(|w| w[0] - w[1]).collect()
    }

    pub fn coordinate_sum(&self) -> i64 {
        self.eps.iter().sum()
    }

    pub fn is_dominant(&self) -> bool {
        self.eps.windows(2).all(|w| w[0] >= w[1])
    }

    /// `⟨λ, 2ρ⟩`. Strictly decreases when a nonzero nonnegative combination
    /// of simple roots or a nonzero dominant weight is subtracted, so it
    /// linearly extends both halves of the recursion order.
    pub fn level(&self) -> i64 {
        let l = self.rank().get() as i64;
        self.eps
            .iter()
            .enumerate()
            .map(|(i, &x)| x * (l - 2 * i as i64))
            .sum()
    }

    pub fn add(&self, other: &Weight) -> Result<Weight, LatticeError> {
        self.rank().check(other.rank())?;
        Weight::from_eps(
            self.eps
                .iter()
                .zip(&other.eps)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Weight) -> Result<Weight, LatticeError> {
        self.rank().check(other.rank())?;
        Weight::from_eps(
            self.eps
                .iter()
                .zip(&other.eps)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    /// Adds an integer vector (typically a root) to the canonical representative.
    pub fn shifted(&self, v: &[i64]) -> Weight {
        debug_assert_eq!(v.len(), self.eps.len());
        Weight::from_eps(self.eps.iter().zip(v).map(|(a, b)| a + b).collect()).expect("same length")
    }

    /// The representative of `self` whose coordinates sum to `target`, if any.
    pub fn aligned_to(&self, target: i64) -> Option<Vec<i64>> {
        let n = self.eps.len() as i64;
        let diff = target - self.coordinate_sum();
        if diff.rem_euclid(n) != 0 {
            return None;
        }
        let shift = diff / n;
        Some(self.eps.iter().map(|x| x + shift).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_coords(f, &self.fundamental())
    }
}

fn write_coords(f: &mut fmt::Formatter<'_>, coords: &[i64]) -> fmt::Result {
    write!(f, "(")?;
    for (i, c) in coords.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{c}")?;
    }
    write!(f, ")")
}

/// A weight with weakly decreasing ε-coordinates, i.e. an element of `Λ^+`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DominantWeight(Weight);

impl DominantWeight {
    pub fn new(weight: Weight) -> Result<Self, LatticeError> {
        if !weight.is_dominant() {
            return Err(LatticeError::NotDominant(weight.to_string()));
        }
        Ok(DominantWeight(weight))
    }

    pub fn from_fundamental(rank: Rank, coords: &[i64]) -> Result<Self, LatticeError> {
        DominantWeight::new(Weight::from_fundamental(rank, coords)?)
    }

    pub fn zero(rank: Rank) -> Self {
        DominantWeight(Weight::zero(rank))
    }

    /// The fundamental weight `ω_i`, `1 <= i <= l`.
    pub fn fundamental_weight(rank: Rank, i: usize) -> Self {
        assert!(
            (1..=rank.get()).contains(&i),
            "ω_{i} out of range for {rank}"
        );
        let eps = (0..rank.dim()).map(|k| i64::from(k < i)).collect();
        DominantWeight(Weight { eps })
    }

    pub fn weight(&self) -> &Weight {
        &self.0
    }

    pub fn into_weight(self) -> Weight {
        self.0
    }

    pub fn rank(&self) -> Rank {
        self.0.rank()
    }

    pub fn eps(&self) -> &[i64] {
        self.0.eps()
    }

    pub fn fundamental(&self) -> Vec<i64> {
        self.0.fundamental()
    }

    pub fn level(&self) -> u64 {
        self.0.level() as u64
    }

    pub fn is_zero(&self) -> bool {
        self.eps().iter().all(|&x| x == 0)
    }

    /// `Some(i)` when this is the fundamental weight `ω_i`.
    pub fn fundamental_index(&self) -> Option<usize> {
        let c = self.fundamental();
        if c.iter().sum::<i64>() != 1 {
            return None;
        }
        c.iter().position(|&x| x == 1).map(|p| p + 1)
    }

    pub fn add(&self, other: &DominantWeight) -> Result<DominantWeight, LatticeError> {
        Ok(DominantWeight(self.0.add(&other.0)?))
    }

    /// `self - other` if the difference is again dominant.
    pub fn checked_sub(&self, other: &DominantWeight) -> Option<DominantWeight> {
        let diff = self.0.sub(&other.0).ok()?;
        DominantWeight::new(diff).ok()
    }

    /// Sort key of the processing order: level first, then ε-coordinates
    /// lexicographically.
    pub fn processing_key(&self) -> (u64, &[i64]) {
        (self.level(), self.eps())
    }
}

impl PartialOrd for DominantWeight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order used everywhere a deterministic order is needed: increasing
/// level, ties broken lexicographically. Any `μ ≺ λ` or `λ - μ ∈ Λ^+`
/// relation is respected.
impl Ord for DominantWeight {
    fn cmp(&self, other: &Self) -> Ordering {
        self.processing_key().cmp(&other.processing_key())
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Coefficients `k_i` of `β = Σ k_i α_i` in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootVector {
    pub coeffs: Vec<i64>,
}

impl RootVector {
    /// Indices `i` (1-based) with `k_i != 0`.
    pub fn support(&self) -> BTreeSet<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &k)| k != 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn support_size(&self) -> usize {
        self.coeffs.iter().filter(|&&k| k != 0).count()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|&k| k >= 0)
    }
}

pub fn dominant_representative(w: &Weight) -> DominantWeight {
    let mut eps = w.eps.clone();
    eps.sort_unstable_by(|a, b| b.cmp(a));
    DominantWeight(Weight { eps })
}

/// The Weyl orbit of `d`: every distinct permutation of its ε-coordinates.
pub fn orbit(d: &DominantWeight) -> Vec<Weight> {
    let mut cur: Vec<i64> = d.eps().to_vec();
    cur.reverse();
    let mut out = vec![Weight { eps: cur.clone() }];
    while next_permutation(&mut cur) {
        out.push(Weight { eps: cur.clone() });
    }
    out
}

/// `(l+1)! / Π m_k!` where `m_k` are the multiplicities of the coordinates.
pub fn orbit_size(d: &DominantWeight) -> u64 {
    let eps = d.eps();
    let mut size: u64 = 1;
    let mut run = 0u64;
    for i in 0..eps.len() {
        run = if i > 0 && eps[i] == eps[i - 1] {
            run + 1
        } else {
            1
        };
        // running multinomial: multiply by (i+1) and divide by the run length
        size = size * (i as u64 + 1) / run;
    }
    size
}

fn next_permutation(v: &mut [i64]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `β = λ - μ` in the simple-root basis.
pub fn root_coordinates(la: &Weight, mu: &Weight) -> Result<RootVector, LatticeError> {
    la.rank().check(mu.rank())?;
    let aligned = mu
        .aligned_to(la.coordinate_sum())
        .ok_or_else(|| LatticeError::NotInRootLattice(la.to_string(), mu.to_string()))?;
    let mut acc = 0;
    let coeffs = la.eps()[..la.rank().get()]
        .iter()
        .zip(&aligned)
        .map(|(a, b)| {
            acc += a - b;
            acc
        })
        .collect();
    Ok(RootVector { coeffs })
}

/// `μ ⪯ λ`: `λ - μ` is a nonnegative integer combination of simple roots.
pub fn dominance_leq(mu: &DominantWeight, la: &DominantWeight) -> Result<bool, LatticeError> {
    mu.rank().check(la.rank())?;
    Ok(leq(mu.weight(), la.weight()))
}

pub(crate) fn leq(mu: &Weight, la: &Weight) -> bool {
    match root_coordinates(la, mu) {
        Ok(beta) => beta.is_nonnegative(),
        Err(_) => false,
    }
}

/// The order `μ < λ` driving reconstruction: `μ ≠ λ` and either `μ ≺ λ` or
/// `λ - μ` is dominant.
pub fn mixed_less(mu: &DominantWeight, la: &DominantWeight) -> Result<bool, LatticeError> {
    mu.rank().check(la.rank())?;
    if mu == la {
        return Ok(false);
    }
    let diff_dominant = mu
        .fundamental()
        .iter()
        .zip(la.fundamental())
        .all(|(m, l)| l - m >= 0);
    Ok(diff_dominant || leq(mu.weight(), la.weight()))
}

/// `Π^+(λ)`: every dominant `μ ⪯ λ`, highest first (decreasing processing order).
pub fn saturated_dominants(la: &DominantWeight) -> Vec<DominantWeight> {
    let eps = la.eps();
    let mut prefix = Vec::with_capacity(eps.len());
    let mut acc = 0;
    for &x in eps {
        acc += x;
        prefix.push(acc);
    }
    let total = acc;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(eps.len());
    // Weakly decreasing nonnegative vectors with the same sum whose partial
    // sums stay below those of λ.
    fn rec(
        prefix: &[i64],
        total: i64,
        cur: &mut Vec<i64>,
        sum: i64,
        out: &mut Vec<DominantWeight>,
    ) {
        let n = prefix.len();
        let k = cur.len();
        if k == n {
            if sum == total {
                let w = Weight::from_eps(cur.clone()).expect("nonempty");
                out.push(DominantWeight(w));
            }
            return;
        }
        let cap = cur.last().copied().unwrap_or(total);
        let hi = cap.min(prefix[k] - sum);
        let remaining_slots = (n - k) as i64;
        for x in (0..=hi).rev() {
            // the remaining slots can hold at most x each
            if sum + x * remaining_slots < total {
                break;
            }
            cur.push(x);
            rec(prefix, total, cur, sum + x, out);
            cur.pop();
        }
    }
    rec(&prefix, total, &mut cur, 0, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// `-w_0`: reverses fundamental coordinates, sending `V(λ)` to its dual.
pub fn neg_w0(d: &DominantWeight) -> DominantWeight {
    let mut c = d.fundamental();
    c.reverse();
    DominantWeight::from_fundamental(d.rank(), &c).expect("reversal keeps coordinates nonnegative")
}

pub fn rho(l: Rank) -> Weight {
    Weight {
        eps: (0..l.dim() as i64).rev().collect(),
    }
}

/// `ε_i - ε_j` for `i < j`.
pub fn positive_roots(l: Rank) -> Vec<Vec<i64>> {
    let n = l.dim();
    let mut roots = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            let mut r = vec![0; n];
            r[i] = 1;
            r[j] = -1;
            roots.push(r);
        }
    }
    roots
}

pub fn simple_roots(l: Rank) -> Vec<Vec<i64>> {
    (0..l.get())
        .map(|i| {
            let mut r = vec![0; l.dim()];
            r[i] = 1;
            r[i + 1] = -1;
            r
        })
        .collect()
}

/// Plain dot product. Exact and shift-safe whenever one argument sums to
/// zero; otherwise both must already be sum-aligned.
pub fn pairing(x: &[i64], y: &[i64]) -> Result<i64, LatticeError> {
    if x.len() != y.len() {
        return Err(LatticeError::LengthMismatch {
            expected: x.len(),
            found: y.len(),
        });
    }
    let sx: i64 = x.iter().sum();
    let sy: i64 = y.iter().sum();
    if sx != 0 && sy != 0 && sx != sy {
        return Err(LatticeError::Unaligned);
    }
    Ok(x.iter().zip(y).map(|(a, b)| a * b).sum())
}

/// Every dominant weight with `level <= bound`, in increasing processing order.
pub fn dominants_within(rank: Rank, bound: u64) -> Vec<DominantWeight> {
    let l = rank.get();
    // level(ω_i) = i (l + 1 - i)
    let costs: Vec<u64> = (1..=l).map(|i| (i * (l + 1 - i)) as u64).collect();
    let mut out = Vec::new();
    let mut coords = vec![0i64; l];
    fn rec(
        rank: Rank,
        costs: &[u64],
        idx: usize,
        budget: u64,
        coords: &mut Vec<i64>,
        out: &mut Vec<DominantWeight>,
    ) {
        if idx == costs.len() {
            out.push(DominantWeight::from_fundamental(rank, coords).expect("nonnegative"));
            return;
        }
        let mut c = 0;
        while c * costs[idx] <= budget {
            coords[idx] = c as i64;
            rec(rank, costs, idx + 1, budget - c * costs[idx], coords, out);
            c += 1;
        }
        coords[idx] = 0;
    }
    rec(rank, &costs, 0, bound, &mut coords, &mut out);
    out.sort();
    out
}
