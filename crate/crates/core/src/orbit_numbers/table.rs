use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::{BigInt, Sign};
use num_traits::Zero;
use rayon::prelude::*;

use super::m_unchecked;
use crate::error::{check_prime, Error, Result};
use crate::kostka::{kostka_matrix, young_dim, KostkaMatrix};
use crate::orbit_type::{orbit_types, OrbitType};
use crate::partition::{partitions, Partition};
use crate::BigNat;

/// The matrices M = (m_{λ,O}), Y = (y_{λ,O}) and K for fixed (n, p), with
/// M = K·Y.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitNumberTable {
    pub n: u32,
    pub p: u32,
    /// All partitions of n in decreasing lexicographic order.
    pub rows: Vec<Partition>,
    /// All orbit types of n, starting with (1^n).
    pub cols: Vec<OrbitType>,
    pub m: Vec<Vec<BigNat>>,
    pub y: Vec<Vec<BigNat>>,
    pub k: KostkaMatrix,
}

impl OrbitNumberTable {
    pub fn row_index(&self, l: &Partition) -> Option<usize> {
        self.rows.binary_search_by(|x| l.cmp(x)).ok()
    }

    pub fn col_index(&self, o: &OrbitType) -> Option<usize> {
        self.cols.binary_search(o).ok()
    }

    pub fn y_at(&self, l: &Partition, o: &OrbitType) -> Option<&BigNat> {
        Some(&self.y[self.row_index(l)?][self.col_index(o)?])
    }

    pub fn m_at(&self, l: &Partition, o: &OrbitType) -> Option<&BigNat> {
        Some(&self.m[self.row_index(l)?][self.col_index(o)?])
    }
}

type Cache = RwLock<HashMap<(u32, u32), Result<Arc<OrbitNumberTable>>>>;

fn cache() -> &'static Cache {
    static C: OnceLock<Cache> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// The table for (n, p) if it has already been built (or failed to build).
pub fn cached_table(n: u32, p: u32) -> Option<Result<Arc<OrbitNumberTable>>> {
    cache().read().unwrap().get(&(n, p)).cloned()
}

/// Builds (once per (n, p)) the tables M, K and Y.
///
/// Y is solved from m_{λ,O} = y_{λ,O} + Σ_{μ ▷ λ} k_{λ,μ} y_{μ,O} by
/// back-substitution in decreasing lexicographic order. A negative value, a
/// failed product check, or a (1^n) column that differs from the Young module
/// dimensions is reported as a table inconsistency, and the failure is
/// remembered for (n, p).
pub fn build_tables(n: u32, p: u32) -> Result<Arc<OrbitNumberTable>> {
    check_prime(p)?;
    if let Some(t) = cached_table(n, p) {
        return t;
    }
    let built = solve(n, p).map(Arc::new);
    cache()
        .write()
        .unwrap()
        .entry((n, p))
        .or_insert(built)
        .clone()
}

fn solve(n: u32, p: u32) -> Result<OrbitNumberTable> {
    let k = kostka_matrix(n, p)?;
    let rows = partitions(n);
    let cols = orbit_types(n, p);
    let m: Vec<Vec<BigNat>> = rows
        .par_iter()
        .map(|l| cols.iter().map(|o| m_unchecked(l, o)).collect())
        .collect();
    // columns are independent
    let ycols: Vec<Vec<BigNat>> = (0..cols.len())
        .into_par_iter()
        .map(|c| solve_column(&rows, &cols[c], &k, &m, c))
        .collect::<Result<_>>()?;
    let y: Vec<Vec<BigNat>> = (0..rows.len())
        .map(|i| ycols.iter().map(|col| col[i].clone()).collect())
        .collect();

    for (i, l) in rows.iter().enumerate() {
        for (c, o) in cols.iter().enumerate() {
            let ky: BigNat = (0..rows.len()).map(|j| &k.entries[i][j] * &y[j][c]).sum();
            if ky != m[i][c] {
                return Err(Error::TableInconsistency(format!(
                    "(K·Y) at ({l}), {o} is {ky} but m = {} (n = {n}, p = {p})",
                    m[i][c]
                )));
            }
        }
        let d = young_dim(l, p);
        if y[i][0] != d {
            return Err(Error::TableInconsistency(format!(
                "y at ({l}), {} is {} but dim Y = {d} (p = {p})",
                cols[0], y[i][0]
            )));
        }
    }
    Ok(OrbitNumberTable {
        n,
        p,
        rows,
        cols,
        m,
        y,
        k,
    })
}

fn solve_column(
    rows: &[Partition],
    o: &OrbitType,
    k: &KostkaMatrix,
    m: &[Vec<BigNat>],
    c: usize,
) -> Result<Vec<BigNat>> {
    let mut y: Vec<BigNat> = Vec::with_capacity(rows.len());
    for (i, l) in rows.iter().enumerate() {
        let mut v = BigInt::from(m[i][c].clone());
        for (j, yj) in y.iter().enumerate() {
            let kij = &k.entries[i][j];
            if !kij.is_zero() && !yj.is_zero() {
                v -= BigInt::from(kij * yj);
            }
        }
        match v.into_parts() {
            (Sign::Minus, mag) => {
                return Err(Error::TableInconsistency(format!(
                    "y at ({l}), {o} would be -{mag} (p = {})",
                    k.p
                )))
            }
            (_, mag) => y.push(mag),
        }
    }
    Ok(y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit_numbers::{m_oracle, y_hook_closed_form};

    fn big(x: u64) -> BigNat {
        x.into()
    }

    #[test]
    fn trivial_tables() {
        for p in [2, 3] {
            let t = build_tables(0, p).unwrap();
            assert_eq!(t.rows, vec![Partition::empty()]);
            assert_eq!(t.cols.len(), 1);
            assert_eq!(t.m, vec![vec![big(1)]]);
            assert_eq!(t.y, vec![vec![big(1)]]);
        }
    }

    #[test]
    fn n2_p2() {
        let t = build_tables(2, 2).unwrap();
        assert_eq!(
            t.cols.iter().map(|o| o.to_string()).collect::<Vec<_>>(),
            vec!["1^2", "2^1"]
        );
        assert_eq!(t.y, vec![vec![big(1), big(1)], vec![big(2), big(0)]]);
        assert_eq!(t.m, vec![vec![big(1), big(1)], vec![big(2), big(0)]]);
    }

    #[test]
    fn hook_row_n4_p2() {
        let t = build_tables(4, 2).unwrap();
        let hook: Partition = "3,1".parse().unwrap();
        for o in &t.cols {
            assert_eq!(
                t.y_at(&hook, o).unwrap(),
                &y_hook_closed_form(4, o, 2).unwrap(),
                "{o}"
            );
        }
    }

    #[test]
    fn m_entries_match_oracle() {
        let t = build_tables(6, 2).unwrap();
        for l in &t.rows {
            for o in &t.cols {
                assert_eq!(t.m_at(l, o).unwrap(), &m_oracle(l, o).unwrap());
            }
        }
    }
}
