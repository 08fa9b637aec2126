//! Brute-force exterior algebra over an orthonormal basis. Multivectors are
//! maps from sorted index lists (basis blades) to coefficients; products
//! are expanded blade by blade with explicit permutation signs.

#![allow(dead_code)]

use std::collections::BTreeMap;

pub type Blades = BTreeMap<Vec<usize>, f64>;

/// Sign of the permutation that sorts `idx`, or `None` on a repeated index.
pub fn sort_sign(idx: &[usize]) -> Option<(Vec<usize>, f64)> {
    let mut inversions = 0;
    for a in 0..idx.len() {
        for b in a + 1..idx.len() {
            if idx[a] == idx[b] {
                return None;
            }
            if idx[a] > idx[b] {
                inversions += 1;
            }
        }
    }
    let mut sorted = idx.to_vec();
    sorted.sort_unstable();
    Some((sorted, if inversions % 2 == 0 { 1.0 } else { -1.0 }))
}

pub fn vector(v: &[f64]) -> Blades {
    v.iter().enumerate().map(|(i, &c)| (vec![i], c)).collect()
}

/// Bivector from its full antisymmetric coefficient function `a(i, j)`.
pub fn bivector(n: usize, a: impl Fn(usize, usize) -> f64) -> Blades {
    let mut out = Blades::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                // e_i e_j counted for both orders: halve
                let (blade, s) = sort_sign(&[i, j]).unwrap();
                *out.entry(blade).or_insert(0.0) += 0.5 * s * a(i, j);
            }
        }
    }
    out
}

pub fn wedge(a: &Blades, b: &Blades) -> Blades {
    let mut out = Blades::new();
    for (ja, &ca) in a {
        for (jb, &cb) in b {
            let joined: Vec<usize> = ja.iter().chain(jb).copied().collect();
            if let Some((blade, s)) = sort_sign(&joined) {
                *out.entry(blade).or_insert(0.0) += s * ca * cb;
            }
        }
    }
    out
}

/// Left contraction of a vector into a multivector:
/// `e_i ⌟ (e_{j1} ∧ … ∧ e_{jk}) = Σ_m (−1)^m δ_{i j_m} (blade without j_m)`.
pub fn contract(v: &[f64], a: &Blades) -> Blades {
    let mut out = Blades::new();
    for (blade, &c) in a {
        for (m, &j) in blade.iter().enumerate() {
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            let rest: Vec<usize> = blade.iter().copied().filter(|&k| k != j).collect();
            *out.entry(rest).or_insert(0.0) += sign * v[j] * c;
        }
    }
    out
}

/// Induced inner product of blades: orthonormal basis blades are orthonormal.
pub fn inner(a: &Blades, b: &Blades) -> f64 {
    a.iter().map(|(k, &c)| c * b.get(k).copied().unwrap_or(0.0)).sum()
}

pub fn coeff(a: &Blades, idx: &[usize]) -> f64 {
    match sort_sign(idx) {
        Some((blade, s)) => s * a.get(&blade).copied().unwrap_or(0.0),
        None => 0.0,
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `M x` for a dense row-major matrix.
pub fn mat_vec(m: &[Vec<f64>], x: &[f64]) -> Vec<f64> {
    m.iter().map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
}

pub fn norm(xs: &[f64]) -> f64 {
    xs.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// `|a − b| / max(|a|, |b|)`, zero when both vanish.
pub fn rel(a: &[f64], b: &[f64]) -> f64 {
    let d: Vec<f64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
    let s = norm(a).max(norm(b));
    if s == 0.0 {
        0.0
    } else {
        norm(&d) / s
    }
}
