//! Single columns of the orbit-number table, for sizes where the full table
//! would be too large.

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::{BigInt, Sign};
use num_traits::Zero;

use super::m_unchecked;
use crate::error::{Error, Result};
use crate::kostka::p_kostka_unchecked;
use crate::orbit_type::OrbitType;
use crate::partition::{dominates, Partition};
use crate::BigNat;

/// Partitions whose rows can be filled exactly by the orbits of `o`, i.e.
/// those λ with m_{λ,O} > 0, in decreasing lexicographic order.
pub(crate) fn fillable_shapes(o: &OrbitType) -> Vec<Partition> {
    let mut orbits = o.sizes();
    orbits.reverse();
    let mut seen: HashSet<(usize, Vec<u32>)> = HashSet::new();
    let mut out: HashSet<Partition> = HashSet::new();
    // rows holds the current row sums, kept sorted so equal states coincide
    fn go(
        k: usize,
        orbits: &[u32],
        rows: Vec<u32>,
        seen: &mut HashSet<(usize, Vec<u32>)>,
        out: &mut HashSet<Partition>,
    ) {
        if k == orbits.len() {
            out.insert(Partition::from_unsorted(rows));
            return;
        }
        if !seen.insert((k, rows.clone())) {
            return;
        }
        let x = orbits[k];
        let mut next = rows.clone();
        next.push(x);
        next.sort_unstable();
        go(k + 1, orbits, next, seen, out);
        for i in 0..rows.len() {
            if i > 0 && rows[i] == rows[i - 1] {
                continue;
            }
            let mut next = rows.clone();
            next[i] += x;
            next.sort_unstable();
            go(k + 1, orbits, next, seen, out);
        }
    }
    go(0, &orbits, Vec::new(), &mut seen, &mut out);
    let mut v: Vec<Partition> = out.into_iter().collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

type Column = Arc<HashMap<Partition, BigNat>>;
type Cache = RwLock<HashMap<OrbitType, Result<Column>>>;

fn cache() -> &'static Cache {
    static C: OnceLock<Cache> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// All nonzero-m entries y_{λ,O} of the column at `o`. Partitions absent
/// from the map have m_{λ,O} = 0 and hence y_{λ,O} = 0.
///
/// Solves the same triangular system as the full table, restricted to the
/// rows where M is nonzero: Y^μ(P) is a summand of M^μ(P), so y_{μ,O} ≤ m_{μ,O}
/// and the other rows never contribute.
pub fn column_values(o: &OrbitType) -> Result<Column> {
    if let Some(c) = cache().read().unwrap().get(o) {
        return c.clone();
    }
    let built = solve(o, None).map(Arc::new);
    cache()
        .write()
        .unwrap()
        .entry(o.clone())
        .or_insert(built)
        .clone()
}

/// y_{λ,O} alone. Back-substitution only reaches rows dominating λ, so the
/// rest of the column is never built.
pub(crate) fn single_value(l: &Partition, o: &OrbitType) -> Result<BigNat> {
    if let Some(Ok(c)) = cache().read().unwrap().get(o) {
        return Ok(c.get(l).cloned().unwrap_or_default());
    }
    Ok(solve(o, Some(l))?.remove(l).unwrap_or_default())
}

fn solve(o: &OrbitType, floor: Option<&Partition>) -> Result<HashMap<Partition, BigNat>> {
    let p = o.p();
    let mut shapes = fillable_shapes(o);
    if let Some(f) = floor {
        shapes.retain(|mu| dominates(mu, f));
    }
    let mut solved: Vec<(Partition, BigNat)> = Vec::with_capacity(shapes.len());
    for l in shapes {
        let mut v = BigInt::from(m_unchecked(&l, o));
        for (mu, y) in &solved {
            if y.is_zero() || !dominates(mu, &l) {
                continue;
            }
            let k = p_kostka_unchecked(&l, mu, p);
            if !k.is_zero() {
                v -= BigInt::from(k * y);
            }
        }
        match v.into_parts() {
            (Sign::Minus, mag) => {
                return Err(Error::TableInconsistency(format!(
                    "y at ({l}), {o} would be -{mag} (p = {p})"
                )))
            }
            (_, mag) => solved.push((l, mag)),
        }
    }
    Ok(solved.into_iter().collect())
}
