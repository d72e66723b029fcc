//! Sparse exact linear algebra over Q(t) with a modular pre-pass.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::scalar::{add_mod, inv_mod, mul_mod, Poly, Scalar};

/// 2^61 - 1.
pub const PRIME: u64 = (1u64 << 61) - 1;

pub type SparseRow = BTreeMap<usize, Scalar>;

/// Row echelon basis built incrementally. Each stored row has pivot
/// coefficient 1 and zeros in the pivot columns of earlier rows.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<(usize, SparseRow)>,
    pivot_of: BTreeMap<usize, usize>,
    /// Columns `>= pivot_limit` never become pivots.
    pivot_limit: Option<usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    /// Pivots restricted to columns below `limit`; used for left-kernel
    /// extraction with an identity block appended on the right.
    pub fn with_pivot_limit(limit: usize) -> Self {
        Echelon { pivot_limit: Some(limit), ..Default::default() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseRow> {
        self.rows.iter().map(|(_, r)| r)
    }

    /// Reduces `row` against the basis.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        for (pivot, basis) in &self.rows {
            let Some(c) = row.get(pivot).cloned() else { continue };
            for (col, v) in basis {
                let entry = row.entry(*col).or_default();
                *entry -= &(&c * v);
                if entry.is_zero() {
                    row.remove(col);
                }
            }
        }
        row
    }

    /// Reduces and inserts; returns the reduced row when it is independent
    /// (`None` when it reduced to zero in the pivot range).
    pub fn insert(&mut self, row: SparseRow) -> Option<SparseRow> {
        let row = self.reduce(row);
        let limit = self.pivot_limit.unwrap_or(usize::MAX);
        let candidates: Vec<(&usize, &Scalar)> = row.iter().filter(|(c, _)| **c < limit).collect();
        if candidates.is_empty() {
            return if self.pivot_limit.is_some() && !row.is_empty() { Some(row) } else { None };
        }
        // prefer a cheap pivot so the normalized row stays Laurent
        let (pivot, pc) = candidates
            .iter()
            .min_by_key(|(c, v)| (!v.is_laurent_unit(), v.weight(), **c))
            .map(|(c, v)| (**c, (*v).clone()))
            .unwrap();
        let inv = pc.inv().expect("pivot is nonzero");
        let row: SparseRow = row.into_iter().map(|(c, v)| (c, &v * &inv)).collect();
        self.pivot_of.insert(pivot, self.rows.len());
        self.rows.push((pivot, row.clone()));
        Some(row)
    }

    pub fn contains(&self, row: &SparseRow) -> bool {
        self.reduce(row.clone()).is_empty()
    }

    /// Offline elimination of a batch. Pivots are taken on Laurent units
    /// (`c t^k`) while any exist, least estimated fill first, so entries stay
    /// Laurent; what remains goes through [`Echelon::insert`].
    pub fn from_rows(rows: Vec<SparseRow>) -> Echelon {
        let mut active: BTreeMap<usize, SparseRow> =
            rows.into_iter().filter(|r| !r.is_empty()).enumerate().collect();
        let mut by_col: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
        for (i, r) in &active {
            for c in r.keys() {
                by_col.entry(*c).or_default().insert(*i);
            }
        }
        let mut out = Echelon::new();
        loop {
            let best = active
                .iter()
                .flat_map(|(i, r)| {
                    let len = r.len();
                    let by_col = &by_col;
                    r.iter().filter(|(_, v)| v.is_laurent_unit()).map(move |(c, _)| {
                        let fill = (len - 1) * (by_col[c].len() - 1);
                        (fill, *i, *c)
                    })
                })
                .min();
            let Some((_, i, col)) = best else { break };
            let row = active.remove(&i).unwrap();
            for c in row.keys() {
                by_col.get_mut(c).unwrap().remove(&i);
            }
            let inv = row[&col].inv().expect("unit pivot");
            let row: SparseRow = row.into_iter().map(|(c, v)| (c, &v * &inv)).collect();
            let targets: Vec<usize> = by_col[&col].iter().copied().collect();
            for j in targets {
                let r = active.get_mut(&j).unwrap();
                let f = r[&col].clone();
                for (c, v) in &row {
                    let entry = r.entry(*c).or_default();
                    let was_zero = entry.is_zero();
                    *entry -= &(&f * v);
                    if entry.is_zero() {
                        r.remove(c);
                        by_col.get_mut(c).unwrap().remove(&j);
                    } else if was_zero {
                        by_col.entry(*c).or_default().insert(j);
                    }
                }
                if r.is_empty() {
                    active.remove(&j);
                }
            }
            out.pivot_of.insert(col, out.rows.len());
            out.rows.push((col, row));
        }
        // fraction-free on the rest; pivots are divided out once at the end
        let mut pending: Vec<(usize, SparseRow)> = Vec::new();
        loop {
            let best = active
                .iter()
                .flat_map(|(i, r)| {
                    let len = r.len();
                    let by_col = &by_col;
                    r.iter().map(move |(c, v)| ((len - 1) * (by_col[c].len() - 1), v.weight(), *i, *c))
                })
                .min();
            let Some((_, _, i, col)) = best else { break };
            let row = active.remove(&i).unwrap();
            for c in row.keys() {
                by_col.get_mut(c).unwrap().remove(&i);
            }
            let p = row[&col].clone();
            let targets: Vec<usize> = by_col[&col].iter().copied().collect();
            for j in targets {
                let r = active.get_mut(&j).unwrap();
                let f = r[&col].clone();
                let mut next: SparseRow = SparseRow::new();
                for c in r.keys().chain(row.keys()) {
                    if next.contains_key(c) {
                        continue;
                    }
                    let a = r.get(c).map(|v| &p * v).unwrap_or_default();
                    let b = row.get(c).map(|v| &f * v).unwrap_or_default();
                    let v = &a - &b;
                    if !v.is_zero() {
                        next.insert(*c, v);
                    }
                }
                make_primitive(&mut next);
                for c in r.keys() {
                    if !next.contains_key(c) {
                        by_col.get_mut(c).unwrap().remove(&j);
                    }
                }
                for c in next.keys() {
                    by_col.entry(*c).or_default().insert(j);
                }
                if next.is_empty() {
                    active.remove(&j);
                } else {
                    *r = next;
                }
            }
            pending.push((col, row));
        }
        for (col, row) in pending {
            let inv = row[&col].inv().expect("nonzero pivot");
            out.pivot_of.insert(col, out.rows.len());
            out.rows.push((col, row.into_iter().map(|(c, v)| (c, &v * &inv)).collect()));
        }
        out
    }
}

/// Divides a row of Laurent polynomials by the gcd of its entries, powers
/// of `t` included.
fn make_primitive(row: &mut SparseRow) {
    if row.is_empty() || !row.values().all(Scalar::is_laurent) {
        return;
    }
    // shift so every entry is a polynomial and one has nonzero constant term
    let lo = row.values().map(|v| v.numer().valuation() as i64 - v.denom().degree() as i64).min().unwrap();
    let shift = Scalar::t_pow(-lo);
    let polys: Vec<Poly> = row.values().map(|v| (v * &shift).numer().clone()).collect();
    let mut order: Vec<&Poly> = polys.iter().collect();
    order.sort_by_key(|p| p.degree());
    let mut g = order[0].monic();
    for p in &order[1..] {
        if g.degree() == 0 {
            break;
        }
        g = g.gcd(p);
    }
    for (v, p) in row.values_mut().zip(polys) {
        let q = if g.degree() == 0 { p.scale(&g.lead().unwrap().recip()) } else { p.div_rem(&g).0 };
        *v = Scalar::from_polys(q, Poly::one()).expect("nonzero denominator");
    }
}

/// Dense elimination mod `PRIME` at a fixed evaluation point; used to pick a
/// maximal independent subset cheaply.
pub struct ModEchelon {
    t0: u64,
    rows: Vec<(usize, BTreeMap<usize, u64>)>,
}

impl ModEchelon {
    pub fn new(t0: u64) -> Self {
        ModEchelon { t0, rows: Vec::new() }
    }

    pub fn random(seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        ModEchelon::new(rng.gen_range(1000..PRIME - 1000))
    }

    /// Maps a row to the prime field; `None` on a pole at the evaluation point.
    pub fn project(&self, row: &SparseRow) -> Option<BTreeMap<usize, u64>> {
        let mut out = BTreeMap::new();
        for (c, v) in row {
            let x = v.eval_mod(self.t0, PRIME)?;
            if x != 0 {
                out.insert(*c, x);
            }
        }
        Some(out)
    }

    fn reduce(&self, mut row: BTreeMap<usize, u64>) -> BTreeMap<usize, u64> {
        for (pivot, basis) in &self.rows {
            let Some(&c) = row.get(pivot) else { continue };
            let neg = PRIME - c;
            for (col, v) in basis {
                let entry = row.entry(*col).or_insert(0);
                *entry = add_mod(*entry, mul_mod(neg, *v, PRIME), PRIME);
                if *entry == 0 {
                    row.remove(col);
                }
            }
        }
        row
    }

    /// True when the row was independent (and is now part of the basis).
    pub fn insert(&mut self, row: &SparseRow) -> Result<bool> {
        let proj = self.project(row).ok_or_else(|| Error::Pole("modular evaluation point".into()))?;
        let red = self.reduce(proj);
        let Some((&pivot, &pc)) = red.iter().next() else { return Ok(false) };
        let inv = inv_mod(pc, PRIME).expect("nonzero pivot");
        let row = red.into_iter().map(|(c, v)| (c, mul_mod(v, inv, PRIME))).collect();
        self.rows.push((pivot, row));
        Ok(true)
    }

    pub fn contains(&self, row: &SparseRow) -> Result<bool> {
        let proj = self.project(row).ok_or_else(|| Error::Pole("modular evaluation point".into()))?;
        Ok(self.reduce(proj).is_empty())
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// Inverse of a dense square matrix over Q(t).
pub fn invert(m: &[Vec<Scalar>]) -> Result<Vec<Vec<Scalar>>> {
    let n = m.len();
    let mut a: Vec<Vec<Scalar>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .filter(|&r| !a[r][col].is_zero())
            .min_by_key(|&r| a[r][col].weight())
            .ok_or(Error::DivisionByZero)?;
        a.swap(col, piv);
        let inv = a[col][col].inv()?;
        for v in a[col].iter_mut() {
            *v = &*v * &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot) {
                    *x -= &(&f * y);
                }
            }
        }
    }
    Ok(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(entries: &[(usize, Scalar)]) -> SparseRow {
        entries.iter().cloned().collect()
    }

    #[test]
    fn echelon_detects_dependence() {
        let t = Scalar::t();
        let mut e = Echelon::new();
        assert!(e.insert(row(&[(0, Scalar::one()), (1, t.clone())])).is_some());
        assert!(e.insert(row(&[(1, Scalar::one()), (2, Scalar::one())])).is_some());
        let combo = row(&[(0, t.clone()), (1, &t * &t + Scalar::from_int(2)), (2, Scalar::from_int(2))]);
        assert!(e.contains(&combo));
        assert!(!e.contains(&row(&[(2, Scalar::one())])));
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn modular_rank_agrees() {
        let t = Scalar::t();
        let mut m = ModEchelon::random(7);
        assert!(m.insert(&row(&[(0, Scalar::one()), (1, t.clone())])).unwrap());
        assert!(!m.insert(&row(&[(0, t.clone()), (1, &t * &t)])).unwrap());
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn inverse_of_two_by_two() {
        let t = Scalar::t();
        let m = vec![vec![Scalar::one(), t.clone()], vec![Scalar::zero(), t.clone()]];
        let inv = invert(&m).unwrap();
        assert_eq!(inv[0][0], Scalar::one());
        assert_eq!(inv[0][1], Scalar::from_int(-1));
        assert_eq!(inv[1][1], Scalar::t_pow(-1));
        assert!(invert(&[vec![Scalar::zero()]]).is_err());
    }
}
