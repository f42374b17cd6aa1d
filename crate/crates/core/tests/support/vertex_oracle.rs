//! Brute-force bounds for small probability constraint systems.
//!
//! Every vertex of the polytope `{P ≥ 0, Σ P = 1, constraints}` lies on `n`
//! linearly independent boundary hyperplanes, one of which is `Σ P = 1`. This
//! enumerates every such choice, solves the square system by Gaussian
//! elimination, keeps the feasible solutions, and reads off the min and max
//! of the objective. Nothing here touches the simplex solver.

use dsaudit::consistency::{BoundKind, ProbabilityConstraintSystem};
use dsaudit::{FocalSet, Rational};
use num_traits::{One, Zero};

#[derive(Debug, PartialEq, Eq)]
pub enum OracleBounds {
    Infeasible,
    Bounds { lower: Rational, upper: Rational },
}

fn indicator(set: FocalSet, n: usize) -> Vec<Rational> {
    (0..n)
        .map(|i| if set.contains_index(i) { Rational::one() } else { Rational::zero() })
        .collect()
}

/// Solves `a x = b` for square `a`; `None` if singular.
#[allow(clippy::needless_range_loop)]
fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = &a[r][col] / &a[col][col];
                for c in col..n {
                    let v = &f * &a[col][c];
                    a[r][c] -= v;
                }
                let v = &f * &b[col];
                b[r] -= v;
            }
        }
    }
    Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

fn combinations(len: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if len < k {
        return vec![];
    }
    let mut out = Vec::new();
    for first in 0..len {
        for mut rest in combinations(len - first - 1, k - 1) {
            for r in rest.iter_mut() {
                *r += first + 1;
            }
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn vertices(system: &ProbabilityConstraintSystem) -> Vec<Vec<Rational>> {
    let n = system.frame().size();
    let sum_row = vec![Rational::one(); n];
    // (coefficients, value) of every boundary hyperplane
    let mut planes: Vec<(Vec<Rational>, Rational)> = (0..n)
        .map(|i| {
            let mut row = vec![Rational::zero(); n];
            row[i] = Rational::one();
            (row, Rational::zero())
        })
        .collect();
    for c in system.constraints() {
        planes.push((indicator(c.subset, n), c.value.clone()));
    }
    let satisfies = |p: &[Rational]| -> bool {
        let total: Rational = p.iter().sum();
        if !total.is_one() || p.iter().any(|v| *v < Rational::zero()) {
            return false;
        }
        system.constraints().iter().all(|c| {
            let v: Rational = (0..n).filter(|&i| c.subset.contains_index(i)).map(|i| p[i].clone()).sum();
            match c.kind {
                BoundKind::Lower => v >= c.value,
                BoundKind::Upper => v <= c.value,
                BoundKind::Equal => v == c.value,
            }
        })
    };
    let mut out: Vec<Vec<Rational>> = Vec::new();
    for pick in combinations(planes.len(), n - 1) {
        let mut a = vec![sum_row.clone()];
        let mut b = vec![Rational::one()];
        for &i in &pick {
            a.push(planes[i].0.clone());
            b.push(planes[i].1.clone());
        }
        if let Some(p) = solve(a, b) {
            if satisfies(&p) && !out.contains(&p) {
                out.push(p);
            }
        }
    }
    out
}

pub fn bounds(system: &ProbabilityConstraintSystem, target: FocalSet) -> OracleBounds {
    let vs = vertices(system);
    let values: Vec<Rational> = vs
        .iter()
        .map(|p| {
            (0..p.len()).filter(|&i| target.contains_index(i)).map(|i| p[i].clone()).sum()
        })
        .collect();
    match (values.iter().min(), values.iter().max()) {
        (Some(lo), Some(hi)) => OracleBounds::Bounds { lower: lo.clone(), upper: hi.clone() },
        _ => OracleBounds::Infeasible,
    }
}
