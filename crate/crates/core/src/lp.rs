//! A small dense two-phase simplex over exact rationals.
//!
//! Solves `min c·x` subject to linear rows `a·x {≤,=,≥} b` and `x ≥ 0`.
//! Bland's rule picks entering and leaving variables, so degenerate and
//! redundant rows cannot make it cycle. Phase one finds a feasible basis once;
//! any number of objectives can then be optimized from it.

use num_traits::{Signed, Zero};

use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Clone, Debug)]
pub struct Row {
    pub coefficients: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Rational, point: Vec<Rational> },
    Unbounded,
}

#[derive(Clone, Debug)]
struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    // columns at or beyond this index are artificial
    artificial_start: usize,
    // number of columns, excluding the right-hand side
    width: usize,
}

impl Tableau {
    fn width(&self) -> usize {
        self.width
    }

    fn pivot(&mut self, obj: &mut [Rational], r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            *v /= &p;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &factor * pv;
                }
            }
        }
        if !obj[c].is_zero() {
            let factor = obj[c].clone();
            for (v, pv) in obj.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &factor * pv;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Reduced-cost row for `cost` (indexed by column) with the current basis.
    /// The last entry holds minus the current objective value.
    fn reduced_costs(&self, cost: &[Rational]) -> Vec<Rational> {
        let w = self.width();
        let mut obj: Vec<Rational> = (0..=w)
            .map(|j| cost.get(j).cloned().unwrap_or_else(Rational::zero))
            .collect();
        obj[w] = Rational::zero();
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            let cb = match cost.get(b) {
                Some(c) if !c.is_zero() => c,
                _ => continue,
            };
            for (v, t) in obj.iter_mut().zip(row) {
                *v -= cb * t;
            }
        }
        obj
    }

    /// Runs simplex iterations on `obj`, entering only columns below `limit`.
    /// Returns false if unbounded.
    fn optimize(&mut self, obj: &mut [Rational], limit: usize) -> bool {
        loop {
            let Some(enter) = (0..limit).find(|&j| obj[j].is_negative()) else {
                return true;
            };
            let w = self.width();
            let mut leave: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[enter].is_positive() {
                    continue;
                }
                let ratio = &row[w] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((k, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*k])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(obj, r, enter),
                None => return false,
            }
        }
    }
}

/// A feasible starting basis for a fixed set of rows.
#[derive(Clone, Debug)]
pub struct FeasibleRegion {
    tableau: Tableau,
    num_vars: usize,
}

/// Runs phase one. Returns `None` when the rows have no solution with `x ≥ 0`.
pub fn feasible_region(num_vars: usize, rows: &[Row]) -> Option<FeasibleRegion> {
    let m = rows.len();
    let num_slack = rows.iter().filter(|r| r.relation != Relation::Eq).count();

    // Normalize to non-negative right-hand sides.
    let normalized: Vec<(Vec<Rational>, Relation, Rational)> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.coefficients.len(), num_vars, "row width mismatch");
            if r.rhs.is_negative() {
                let rel = match r.relation {
                    Relation::Le => Relation::Ge,
                    Relation::Ge => Relation::Le,
                    Relation::Eq => Relation::Eq,
                };
                (r.coefficients.iter().map(|c| -c).collect(), rel, -&r.rhs)
            } else {
                (r.coefficients.clone(), r.relation, r.rhs.clone())
            }
        })
        .collect();
    let num_art = normalized.iter().filter(|(_, rel, _)| *rel != Relation::Le).count();
    let artificial_start = num_vars + num_slack;
    let width = artificial_start + num_art;

    let mut table = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let (mut slack, mut art) = (num_vars, artificial_start);
    for (coeffs, rel, rhs) in normalized {
        let mut row = vec![Rational::zero(); width + 1];
        row[..num_vars].clone_from_slice(&coeffs);
        row[width] = rhs;
        match rel {
            Relation::Le => {
                row[slack] = Rational::from_integer(1.into());
                basis.push(slack);
                slack += 1;
            }
            Relation::Ge => {
                row[slack] = Rational::from_integer((-1).into());
                slack += 1;
                row[art] = Rational::from_integer(1.into());
                basis.push(art);
                art += 1;
            }
            Relation::Eq => {
                row[art] = Rational::from_integer(1.into());
                basis.push(art);
                art += 1;
            }
        }
        table.push(row);
    }
    let mut tableau = Tableau { rows: table, basis, artificial_start, width };

    if num_art > 0 {
        let cost: Vec<Rational> = (0..width)
            .map(|j| Rational::from_integer(((j >= artificial_start) as i32).into()))
            .collect();
        let mut obj = tableau.reduced_costs(&cost);
        let bounded = tableau.optimize(&mut obj, width);
        debug_assert!(bounded, "phase one is bounded below by zero");
        if !obj[width].is_zero() {
            return None;
        }
        // Drive remaining (zero-valued) artificials out of the basis, dropping
        // rows that turn out to be linear combinations of the others.
        let mut r = 0;
        while r < tableau.rows.len() {
            if tableau.basis[r] < artificial_start {
                r += 1;
                continue;
            }
            match (0..artificial_start).find(|&j| !tableau.rows[r][j].is_zero()) {
                Some(j) => {
                    tableau.pivot(&mut obj, r, j);
                    r += 1;
                }
                None => {
                    tableau.rows.remove(r);
                    tableau.basis.remove(r);
                }
            }
        }
    }
    Some(FeasibleRegion { tableau, num_vars })
}

impl FeasibleRegion {
    /// Minimizes `objective · x` over the region.
    pub fn minimize(&self, objective: &[Rational]) -> LpOutcome {
        assert_eq!(objective.len(), self.num_vars, "objective width mismatch");
        let mut tableau = self.tableau.clone();
        let mut obj = tableau.reduced_costs(objective);
        if !tableau.optimize(&mut obj, tableau.artificial_start) {
            return LpOutcome::Unbounded;
        }
        let w = tableau.width();
        let mut point = vec![Rational::zero(); self.num_vars];
        for (row, &b) in tableau.rows.iter().zip(&tableau.basis) {
            if b < self.num_vars {
                point[b] = row[w].clone();
            }
        }
        let value = objective.iter().zip(&point).map(|(c, x)| c * x).sum();
        LpOutcome::Optimal { value, point }
    }

    /// Maximizes `objective · x` over the region.
    pub fn maximize(&self, objective: &[Rational]) -> LpOutcome {
        let negated: Vec<Rational> = objective.iter().map(|c| -c).collect();
        match self.minimize(&negated) {
            LpOutcome::Optimal { value, point } => LpOutcome::Optimal { value: -value, point },
            LpOutcome::Unbounded => LpOutcome::Unbounded,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn row(c: &[i64], relation: Relation, rhs: Rational) -> Row {
        Row { coefficients: c.iter().map(|&v| int(v)).collect(), relation, rhs }
    }

    fn optimal(o: LpOutcome) -> (Rational, Vec<Rational>) {
        match o {
            LpOutcome::Optimal { value, point } => (value, point),
            LpOutcome::Unbounded => panic!("unexpected unbounded"),
        }
    }

    #[test]
    fn textbook_maximization() {
        // max 3x + 5y, x ≤ 4, 2y ≤ 12, 3x + 2y ≤ 18  →  36 at (2, 6)
        let rows = [
            row(&[1, 0], Relation::Le, int(4)),
            row(&[0, 2], Relation::Le, int(12)),
            row(&[3, 2], Relation::Le, int(18)),
        ];
        let region = feasible_region(2, &rows).unwrap();
        let (value, point) = optimal(region.maximize(&[int(3), int(5)]));
        assert_eq!(value, int(36));
        assert_eq!(point, vec![int(2), int(6)]);
    }

    #[test]
    fn equality_and_ge_rows() {
        // x + y + z = 1, x ≥ 1/4, x + y = 1/2  → min y = 0, max y = 1/4
        let rows = [
            row(&[1, 1, 1], Relation::Eq, int(1)),
            row(&[1, 0, 0], Relation::Ge, ratio(1, 4)),
            row(&[1, 1, 0], Relation::Eq, ratio(1, 2)),
        ];
        let region = feasible_region(3, &rows).unwrap();
        let (lo, _) = optimal(region.minimize(&[int(0), int(1), int(0)]));
        let (hi, p) = optimal(region.maximize(&[int(0), int(1), int(0)]));
        assert_eq!(lo, int(0));
        assert_eq!(hi, ratio(1, 4));
        assert_eq!(p, vec![ratio(1, 4), ratio(1, 4), ratio(1, 2)]);
    }

    #[test]
    fn infeasible() {
        let rows = [
            row(&[1, 1], Relation::Eq, int(1)),
            row(&[1, 0], Relation::Eq, int(1)),
            row(&[0, 1], Relation::Eq, int(1)),
        ];
        assert!(feasible_region(2, &rows).is_none());
    }

    #[test]
    fn redundant_rows_are_tolerated() {
        let rows = [
            row(&[1, 1], Relation::Eq, int(1)),
            row(&[1, 1], Relation::Eq, int(1)),
            row(&[2, 2], Relation::Eq, int(2)),
            row(&[1, 0], Relation::Le, ratio(1, 3)),
            row(&[1, 0], Relation::Le, ratio(1, 3)),
        ];
        let region = feasible_region(2, &rows).unwrap();
        let (v, _) = optimal(region.maximize(&[int(1), int(0)]));
        assert_eq!(v, ratio(1, 3));
        let (v, _) = optimal(region.minimize(&[int(1), int(0)]));
        assert_eq!(v, int(0));
    }

    #[test]
    fn negative_rhs_and_unbounded() {
        // -x ≤ -2  (x ≥ 2), unbounded above
        let rows = [row(&[-1], Relation::Le, int(-2))];
        let region = feasible_region(1, &rows).unwrap();
        let (v, _) = optimal(region.minimize(&[int(1)]));
        assert_eq!(v, int(2));
        assert_eq!(region.maximize(&[int(1)]), LpOutcome::Unbounded);
    }

    #[test]
    fn no_rows() {
        let region = feasible_region(2, &[]).unwrap();
        let (v, p) = optimal(region.minimize(&[int(1), int(1)]));
        assert_eq!(v, int(0));
        assert_eq!(p, vec![int(0), int(0)]);
    }
}
