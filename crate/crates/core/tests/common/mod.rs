//! A second, deliberately naive source of weight multiplicities and tensor
//! product decompositions, sharing no code with the library.
//!
//! Multiplicities are Kostka numbers: `m_λ(x)` counts semistandard tableaux
//! of shape `λ` and content `x`, built as chains of horizontal strips.
//! Tensor products multiply full characters weight by weight and peel off
//! lexicographically largest weights.
#![allow(dead_code)]

use std::collections::BTreeMap;

/// Partition with `l + 1` parts (last part 0) from fundamental coordinates.
pub fn partition(fund: &[i64]) -> Vec<i64> {
    let mut p = vec![0; fund.len() + 1];
    for i in (0..fund.len()).rev() {
        p[i] = p[i + 1] + fund[i];
    }
    p
}

pub fn fundamental(eps: &[i64]) -> Vec<i64> {
    eps.windows(2).map(|w| w[0] - w[1]).collect()
}

/// Number of SSYT of shape `shape` and content `content` (any composition).
pub fn kostka(shape: &[i64], content: &[i64]) -> u64 {
    if shape.iter().sum::<i64>() != content.iter().sum::<i64>() || content.iter().any(|&c| c < 0) {
        return 0;
    }
    fn go(shape: &[i64], content: &[i64], cur: &[i64], k: usize) -> u64 {
        if k == content.len() {
            return u64::from(cur == shape);
        }
        // next shape ν: cur_i ≤ ν_i ≤ min(shape_i, cur_{i-1}), |ν| - |cur| = content_k
        let mut total = 0;
        let mut next = cur.to_vec();
        fill(shape, cur, &mut next, 0, content[k], &mut |nu| {
            total += go(shape, content, nu, k + 1)
        });
        total
    }
    fn fill(
        shape: &[i64],
        cur: &[i64],
        next: &mut Vec<i64>,
        i: usize,
        left: i64,
        f: &mut dyn FnMut(&[i64]),
    ) {
        if i == cur.len() {
            if left == 0 {
                f(next);
            }
            return;
        }
        let cap = if i == 0 {
            shape[0]
        } else {
            shape[i].min(cur[i - 1])
        };
        for add in 0..=left.min(cap - cur[i]) {
            next[i] = cur[i] + add;
            fill(shape, cur, next, i + 1, left - add, f);
        }
        next[i] = cur[i];
    }
    go(shape, content, &vec![0; shape.len()], 0)
}

fn compositions(n: i64, parts: usize, out: &mut Vec<Vec<i64>>, cur: &mut Vec<i64>) {
    if cur.len() + 1 == parts {
        cur.push(n);
        out.push(cur.clone());
        cur.pop();
        return;
    }
    for a in 0..=n {
        cur.push(a);
        compositions(n - a, parts, out, cur);
        cur.pop();
    }
}

/// The full formal character: ε-vector (summing to `|λ|`) ↦ multiplicity.
pub fn full_character(fund: &[i64]) -> BTreeMap<Vec<i64>, i64> {
    let shape = partition(fund);
    let mut all = Vec::new();
    compositions(shape.iter().sum(), shape.len(), &mut all, &mut Vec::new());
    all.into_iter()
        .filter_map(|x| {
            let k = kostka(&shape, &x) as i64;
            (k != 0).then_some((x, k))
        })
        .collect()
}

/// `m_λ(μ)` for dominant `λ`, `μ` in fundamental coordinates.
pub fn weight_multiplicity(la: &[i64], mu: &[i64]) -> i64 {
    let shape = partition(la);
    let p = partition(mu);
    let n = shape.len() as i64;
    let diff = shape.iter().sum::<i64>() - p.iter().sum::<i64>();
    if diff < 0 || diff % n != 0 {
        return 0;
    }
    let content: Vec<i64> = p.iter().map(|x| x + diff / n).collect();
    kostka(&shape, &content) as i64
}

/// Weyl dimension as the sum of all multiplicities.
pub fn dimension(la: &[i64]) -> i64 {
    full_character(la).values().sum()
}

/// `V(μ) ⊗ V(ν)` as `λ ↦ c_{μ,ν}^λ`, keys in fundamental coordinates.
pub fn tensor(mu: &[i64], nu: &[i64]) -> BTreeMap<Vec<i64>, i64> {
    let (a, b) = (full_character(mu), full_character(nu));
    let mut prod: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for (x, m) in &a {
        for (y, n) in &b {
            let z: Vec<i64> = x.iter().zip(y).map(|(p, q)| p + q).collect();
            *prod.entry(z).or_default() += m * n;
        }
    }
    let mut out = BTreeMap::new();
    loop {
        prod.retain(|_, v| *v != 0);
        let Some((top, &c)) = prod.iter().next_back() else {
            break;
        };
        assert!(c > 0, "peeled a negative coefficient");
        let top = top.clone();
        let shift = *top.last().unwrap();
        let fund = fundamental(&top);
        for (x, m) in full_character(&fund) {
            let z: Vec<i64> = x.iter().map(|v| v + shift).collect();
            *prod.entry(z).or_default() -= c * m;
        }
        out.insert(fund, c);
    }
    out
}

/// Dominant weights of `A_l` with `⟨λ, 2ρ⟩ ≤ bound`, in fundamental coordinates.
pub fn dominants(l: usize, bound: i64) -> Vec<Vec<i64>> {
    let cost: Vec<i64> = (1..=l as i64).map(|i| i * (l as i64 + 1 - i)).collect();
    let mut out = Vec::new();
    fn go(cost: &[i64], left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == cost.len() {
            out.push(cur.clone());
            return;
        }
        let c = cost[cur.len()];
        for a in 0..=left / c {
            cur.push(a);
            go(cost, left - a * c, cur, out);
            cur.pop();
        }
    }
    go(&cost, bound, &mut Vec::new(), &mut out);
    out
}
