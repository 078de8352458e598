//! Weight multiplicities of simple polynomial GL-modules in characteristic p.
//!
//! The Weyl module of highest weight ν is realized inside the tensor product
//! of exterior powers Λ^{ν'_1}E ⊗ Λ^{ν'_2}E ⊗ …, one factor per column, as the
//! image of the divided powers of the rows. For an SSYT T the image vector is
//!
//!   u_T = Σ_{T'} w(T'),
//!
//! summed over the distinct rearrangements T' of T within its rows, where w(T')
//! is the wedge monomial read down the columns (zero if a column repeats a
//! value). Wedge monomials are orthonormal, so the Gram matrix ⟨u_T, u_U⟩ is
//! integral and its rank mod p is the dimension of the α-weight space of the
//! simple head L(ν).

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use rayon::prelude::*;

use super::fp::FpMatrix;
use super::ssyt::{self, RowCounts};
use crate::partition::{dominates, p_core_and_weight, partitions, Partition};

fn support(counts: &[u8]) -> u32 {
    counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .fold(0, |acc, (v, _)| acc | 1 << v)
}

/// Signed wedge monomials of all row rearrangements of `t`, keyed by the
/// per-column value sets (packed by `pack`), sorted and merged mod p.
fn expand<K: Ord>(
    shape: &[u32],
    t: &RowCounts,
    p: u32,
    pack: &dyn Fn(&[u32]) -> K,
) -> (Vec<K>, Vec<u8>) {
    struct Walk<'a, K> {
        shape: &'a [u32],
        t: &'a RowCounts,
        pack: &'a dyn Fn(&[u32]) -> K,
        masks: Vec<u32>,
        left: Vec<u8>,
        avail: u32,
        out: Vec<(K, bool)>,
    }
    impl<K> Walk<'_, K> {
        fn go(&mut self, r: usize, c: usize, odd: bool) {
            if c == self.shape[r] as usize {
                if r + 1 == self.shape.len() {
                    self.out.push(((self.pack)(&self.masks), odd));
                    return;
                }
                let saved = std::mem::replace(&mut self.left, self.t[r + 1].clone());
                let saved_avail = std::mem::replace(&mut self.avail, support(&self.left));
                self.go(r + 1, 0, odd);
                self.left = saved;
                self.avail = saved_avail;
                return;
            }
            let m = self.masks[c];
            let mut cand = self.avail & !m;
            while cand != 0 {
                let v = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                // entries above in this column that are larger than v
                let inv = (m >> (v + 1)).count_ones() & 1 == 1;
                self.masks[c] = m | 1 << v;
                self.left[v] -= 1;
                if self.left[v] == 0 {
                    self.avail &= !(1 << v);
                }
                self.go(r, c + 1, odd ^ inv);
                self.avail |= 1 << v;
                self.left[v] += 1;
                self.masks[c] = m;
            }
        }
    }
    let mut w = Walk {
        shape,
        t,
        pack,
        masks: vec![0; shape.first().copied().unwrap_or(0) as usize],
        left: t.first().cloned().unwrap_or_default(),
        avail: t.first().map_or(0, |r| support(r)),
        out: Vec::new(),
    };
    if !shape.is_empty() {
        w.go(0, 0, false);
    }
    let mut leaves = w.out;
    leaves.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    let (mut keys, mut coefs) = (Vec::new(), Vec::new());
    let mut it = leaves.into_iter().peekable();
    while let Some((k, odd)) = it.next() {
        let mut c: i64 = if odd { -1 } else { 1 };
        while it.peek().is_some_and(|(k2, _)| *k2 == k) {
            c += if it.next().unwrap().1 { -1 } else { 1 };
        }
        let c = c.rem_euclid(p as i64) as u8;
        if c != 0 {
            keys.push(k);
            coefs.push(c);
        }
    }
    (keys, coefs)
}

/// First index at or after `lo` whose key is not below `k` (exponential search).
fn gallop<K: Ord>(xs: &[K], lo: usize, k: &K) -> usize {
    let mut step = 1;
    let mut hi = lo;
    while hi < xs.len() && xs[hi] < *k {
        hi = lo + step;
        step *= 2;
    }
    let hi = hi.min(xs.len());
    let start = lo + step / 4;
    let start = start.min(hi);
    start + xs[start..hi].partition_point(|x| x < k)
}

/// The Gram matrix ⟨u_T, u_U⟩ mod p, one dense row per tableau.
fn gram_rows<K>(
    shape: &[u32],
    tabs: &[RowCounts],
    p: u32,
    pack: &(dyn Fn(&[u32]) -> K + Sync),
) -> Vec<Vec<u8>>
where
    K: Ord + Clone + Send + Sync,
{
    let sparse: Vec<(Vec<K>, Vec<u8>)> =
        tabs.par_iter().map(|t| expand(shape, t, p, pack)).collect();
    let mut all: Vec<K> = sparse.iter().flat_map(|(k, _)| k.iter().cloned()).collect();
    all.par_sort_unstable();
    all.dedup();
    // bucket index of every nonzero coefficient; each row's keys are sorted
    let (ids, coefs): (Vec<Vec<u32>>, Vec<Vec<u8>>) = sparse
        .into_par_iter()
        .map(|(keys, coefs)| {
            let mut lo = 0;
            let ids = keys
                .iter()
                .map(|k| {
                    lo = gallop(&all, lo, k);
                    lo as u32
                })
                .collect();
            (ids, coefs)
        })
        .unzip();
    drop(all);
    let nkeys = ids
        .iter()
        .flatten()
        .map(|&b| b as usize + 1)
        .max()
        .unwrap_or(0);
    let mut offsets = vec![0usize; nkeys + 1];
    for &b in ids.iter().flatten() {
        offsets[b as usize + 1] += 1;
    }
    for b in 0..nkeys {
        offsets[b + 1] += offsets[b];
    }
    let total = offsets[nkeys];
    let mut fill = offsets.clone();
    let mut who = vec![0u32; total];
    let mut what = vec![0u8; total];
    for (i, (row_ids, row_coefs)) in ids.iter().zip(&coefs).enumerate() {
        for (&b, &c) in row_ids.iter().zip(row_coefs) {
            let slot = &mut fill[b as usize];
            who[*slot] = i as u32;
            what[*slot] = c;
            *slot += 1;
        }
    }
    let n = tabs.len();
    ids.par_iter()
        .zip(&coefs)
        .map(|(row_ids, row_coefs)| {
            let mut acc = vec![0u32; n];
            for (&b, &ci) in row_ids.iter().zip(row_coefs) {
                let (lo, hi) = (offsets[b as usize], offsets[b as usize + 1]);
                for (&j, &cj) in who[lo..hi].iter().zip(&what[lo..hi]) {
                    acc[j as usize] += ci as u32 * cj as u32;
                }
            }
            acc.into_iter().map(|x| (x % p) as u8).collect()
        })
        .collect()
}

/// dim L(ν)_α by Gram rank, with no shortcuts beyond an empty weight space.
///
/// Requires `p < 128` and at most 32 distinct entries.
pub fn gram_weight_multiplicity(nu: &Partition, alpha: &Partition, p: u32) -> u64 {
    let k = alpha.len();
    assert!(k <= 32, "too many distinct entries");
    if nu.is_empty() {
        return u64::from(alpha.is_empty());
    }
    let tabs = ssyt::enumerate(nu.parts(), alpha.parts());
    if tabs.is_empty() {
        return 0;
    }
    let bits = nu.part(0) as usize * k;
    let gram = if bits <= 64 {
        gram_rows(nu.parts(), &tabs, p, &move |m: &[u32]| {
            m.iter().fold(0u64, |acc, &x| acc << k | x as u64)
        })
    } else if bits <= 128 {
        gram_rows(nu.parts(), &tabs, p, &move |m: &[u32]| {
            m.iter().fold(0u128, |acc, &x| acc << k | x as u128)
        })
    } else {
        gram_rows(nu.parts(), &tabs, p, &|m: &[u32]| m.to_vec())
    };
    FpMatrix::from_rows(p, tabs.len(), gram).rank() as u64
}

type Cache = RwLock<HashMap<(u32, Partition, Partition), u64>>;

fn cache() -> &'static Cache {
    static C: OnceLock<Cache> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// Cases answered without a Gram matrix.
fn shortcut(nu: &Partition, alpha: &Partition, p: u32) -> Option<u64> {
    if nu.size() != alpha.size() || !dominates(nu, alpha) {
        return Some(0);
    }
    if nu == alpha {
        return Some(1);
    }
    // a p-core is alone in its block, so its Weyl module is simple
    if p_core_and_weight(nu, p).1 == 0 {
        return Some(ssyt::count(nu.parts(), alpha.parts()));
    }
    None
}

/// dim L(ν)_α for the simple module of highest weight ν, α a partition.
///
/// A Gram matrix is built only when α lies in the block of ν (same p-core).
/// Otherwise ch Δ(ν) = Σ_σ [Δ(ν):L(σ)] ch L(σ), where σ runs over the block
/// of ν only, gives dim L(ν)_α = K_{ν,α} − Σ_{σ ◁ ν} [Δ(ν):L(σ)] dim L(σ)_α.
pub fn simple_weight_multiplicity(nu: &Partition, alpha: &Partition, p: u32) -> u64 {
    if let Some(v) = shortcut(nu, alpha, p) {
        return v;
    }
    let key = (p, nu.clone(), alpha.clone());
    if let Some(&v) = cache().read().unwrap().get(&key) {
        return v;
    }
    let v = if p_core_and_weight(alpha, p).0 == p_core_and_weight(nu, p).0 {
        gram_weight_multiplicity(nu, alpha, p)
    } else {
        let mut v = ssyt::count(nu.parts(), alpha.parts()) as i128;
        for (sigma, d) in decomposition_row(nu, p).iter() {
            if dominates(sigma, alpha) {
                v -= *d as i128 * simple_dim(sigma, alpha, p) as i128;
            }
        }
        u64::try_from(v).expect("weight multiplicities are nonnegative")
    };
    cache().write().unwrap().insert(key, v);
    v
}

/// dim L(σ)_α for any σ, through the twisted tensor product when σ is not
/// p-restricted.
fn simple_dim(sigma: &Partition, alpha: &Partition, p: u32) -> u64 {
    u64::try_from(super::p_kostka_unchecked(alpha, sigma, p)).expect("fits in u64")
}

type RowCache = RwLock<HashMap<(u32, Partition), Arc<Vec<(Partition, u64)>>>>;

fn row_cache() -> &'static RowCache {
    static C: OnceLock<RowCache> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// The nonzero multiplicities [Δ(ν):L(σ)] for σ ◁ ν, σ in the block of ν.
///
/// Solved in decreasing lexicographic order from K_{ν,σ} = Σ_ρ [Δ(ν):L(ρ)]
/// dim L(ρ)_σ, with dim L(ν)_σ taken from a Gram matrix.
fn decomposition_row(nu: &Partition, p: u32) -> Arc<Vec<(Partition, u64)>> {
    let key = (p, nu.clone());
    if let Some(r) = row_cache().read().unwrap().get(&key) {
        return r.clone();
    }
    let core = p_core_and_weight(nu, p).0;
    let mut row: Vec<(Partition, u64)> = Vec::new();
    for sigma in partitions(nu.size()) {
        if sigma == *nu || !dominates(nu, &sigma) || p_core_and_weight(&sigma, p).0 != core {
            continue;
        }
        let mut d = ssyt::count(nu.parts(), sigma.parts()) as i128;
        d -= gram_weight_multiplicity(nu, &sigma, p) as i128;
        for (rho, e) in &row {
            if dominates(rho, &sigma) {
                d -= *e as i128 * simple_dim(rho, &sigma, p) as i128;
            }
        }
        let d = u64::try_from(d).expect("decomposition numbers are nonnegative");
        if d > 0 {
            row.push((sigma, d));
        }
    }
    let row = Arc::new(row);
    row_cache()
        .write()
        .unwrap()
        .entry(key)
        .or_insert(row)
        .clone()
}

/// Fills the cache for every pair in `pairs` that needs a Gram matrix.
pub(crate) fn prewarm(pairs: impl IntoIterator<Item = (Partition, Partition)>, p: u32) {
    let mut todo: Vec<(Partition, Partition)> = {
        let c = cache().read().unwrap();
        pairs
            .into_iter()
            .filter(|(nu, a)| {
                shortcut(nu, a, p).is_none() && !c.contains_key(&(p, nu.clone(), a.clone()))
            })
            .collect()
    };
    todo.sort();
    todo.dedup();
    todo.par_iter().for_each(|(nu, a)| {
        simple_weight_multiplicity(nu, a, p);
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::is_p_restricted;

    fn pt(xs: &[u32]) -> Partition {
        Partition::new(xs.to_vec()).unwrap()
    }

    #[test]
    fn small_cases() {
        // adjoint-type module of GL3 in characteristic 3 loses its zero weight
        assert_eq!(
            gram_weight_multiplicity(&pt(&[2, 1]), &pt(&[1, 1, 1]), 3),
            1
        );
        assert_eq!(
            gram_weight_multiplicity(&pt(&[2, 1]), &pt(&[1, 1, 1]), 5),
            2
        );
        // L(2) in characteristic 2 is the Frobenius twist of E
        assert_eq!(gram_weight_multiplicity(&pt(&[2]), &pt(&[1, 1]), 2), 0);
        assert_eq!(gram_weight_multiplicity(&pt(&[2]), &pt(&[1, 1]), 3), 1);
        assert_eq!(gram_weight_multiplicity(&pt(&[1, 1]), &pt(&[1, 1]), 2), 1);
    }

    #[test]
    fn large_prime_gives_kostka_numbers() {
        for n in 0..=7 {
            for nu in partitions(n) {
                for a in partitions(n) {
                    assert_eq!(
                        gram_weight_multiplicity(&nu, &a, 127),
                        ssyt::count(nu.parts(), a.parts()),
                        "{nu} {a}"
                    );
                }
            }
        }
    }

    /// The (1^n) weight space of L(ν) is the simple FS_n-module labelled by ν
    /// (p-restricted labelling), so these are its dimensions.
    fn simple_dims(n: u32, p: u32) -> Vec<u64> {
        let mut d: Vec<u64> = partitions(n)
            .iter()
            .filter(|nu| is_p_restricted(nu, p))
            .map(|nu| simple_weight_multiplicity(nu, &Partition::column(n), p))
            .collect();
        d.sort();
        d
    }

    #[test]
    fn symmetric_group_simple_dimensions() {
        assert_eq!(simple_dims(3, 2), vec![1, 2]);
        assert_eq!(simple_dims(3, 3), vec![1, 1]);
        assert_eq!(simple_dims(4, 2), vec![1, 2]);
        assert_eq!(simple_dims(4, 3), vec![1, 1, 3, 3]);
        assert_eq!(simple_dims(5, 2), vec![1, 4, 4]);
        assert_eq!(simple_dims(5, 3), vec![1, 1, 4, 4, 6]);
        assert_eq!(simple_dims(5, 5), vec![1, 1, 3, 3, 5, 5]);
        assert_eq!(simple_dims(6, 2), vec![1, 4, 4, 16]);
        // principal block: the Brauer tree of the hooks; the rest is semisimple
        assert_eq!(
            simple_dims(7, 7),
            vec![1, 1, 5, 5, 10, 10, 14, 14, 14, 14, 21, 21, 35, 35]
        );
    }

    #[test]
    fn shortcuts_agree_with_gram() {
        for n in 0..=7 {
            for p in [2, 3, 5] {
                for nu in partitions(n) {
                    for a in partitions(n) {
                        if let Some(v) = shortcut(&nu, &a, p) {
                            assert_eq!(v, gram_weight_multiplicity(&nu, &a, p), "{nu} {a} p={p}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn block_route_agrees_with_gram() {
        for n in 0..=8 {
            for p in [2, 3, 5] {
                for nu in partitions(n).into_iter().filter(|l| is_p_restricted(l, p)) {
                    for a in partitions(n) {
                        assert_eq!(
                            simple_weight_multiplicity(&nu, &a, p),
                            gram_weight_multiplicity(&nu, &a, p),
                            "{nu} {a} p={p}"
                        );
                    }
                }
            }
        }
    }
}
