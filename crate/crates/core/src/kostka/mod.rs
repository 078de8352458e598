//! Ordinary and p-Kostka numbers and Young module dimensions.

mod fp;
mod ssyt;
mod weyl;

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;

pub use fp::FpMatrix;
pub use weyl::{gram_weight_multiplicity, simple_weight_multiplicity};

use crate::dims::{perm_module_dimension, specht_dimension};
use crate::error::{check_prime, invalid, Error, Result};
use crate::partition::{
    add, dominates, is_p_restricted, p_adic_expansion, p_core_and_weight, partitions,
    partitions_dominating, Composition, Partition,
};
use crate::BigNat;

/// Number of semistandard tableaux of shape μ and content α.
pub fn ordinary_kostka(mu: &Partition, alpha: &Composition) -> Result<BigNat> {
    if mu.size() != alpha.size() {
        return invalid(format!(
            "shape ({mu}) and content ({alpha}) have different sizes"
        ));
    }
    Ok(ssyt::count(mu.parts(), alpha.parts()).into())
}

/// One way of writing λ = Σ p^i β^(i): `levels[i]` is β^(i) sorted.
type Split = Vec<Partition>;

/// All splittings λ = Σ_i p^i β^(i) with |β^(i)| = sizes[i] and every part of
/// β^(i) at most caps[i], returned with β^(i) sorted and multiplicities merged.
fn splittings(l: &Partition, p: u32, sizes: &[u32], caps: &[u32]) -> HashMap<Split, u64> {
    let levels = sizes.len();
    let pw: Vec<u32> = (0..levels).map(|i| p.pow(i as u32)).collect();
    let rows = l.parts();
    let mut out: HashMap<Split, u64> = HashMap::new();
    let mut cols: Vec<Vec<u32>> = vec![Vec::with_capacity(rows.len()); levels];
    let mut rem = sizes.to_vec();

    #[allow(clippy::too_many_arguments)]
    fn row(
        j: usize,
        rows: &[u32],
        pw: &[u32],
        caps: &[u32],
        rem: &mut Vec<u32>,
        cols: &mut Vec<Vec<u32>>,
        out: &mut HashMap<Split, u64>,
    ) {
        if j == rows.len() {
            if rem.iter().all(|&x| x == 0) {
                let key = cols
                    .iter()
                    .map(|c| Partition::from_unsorted(c.clone()))
                    .collect();
                *out.entry(key).or_insert(0) += 1;
            }
            return;
        }
        digit(j, pw.len(), rows[j], rows, pw, caps, rem, cols, out);
    }

    #[allow(clippy::too_many_arguments)]
    fn digit(
        j: usize,
        level: usize,
        left: u32,
        rows: &[u32],
        pw: &[u32],
        caps: &[u32],
        rem: &mut Vec<u32>,
        cols: &mut Vec<Vec<u32>>,
        out: &mut HashMap<Split, u64>,
    ) {
        if level == 0 {
            if left == 0 {
                row(j + 1, rows, pw, caps, rem, cols, out);
            }
            return;
        }
        let i = level - 1;
        let hi = caps[i].min(rem[i]).min(left / pw[i]);
        // levels below i can hold at most this much of the row
        let below: u32 = (0..i).map(|k| caps[k].min(rem[k]) * pw[k]).sum();
        for x in (0..=hi).rev() {
            if left - x * pw[i] > below {
                break;
            }
            rem[i] -= x;
            cols[i].push(x);
            digit(j, i, left - x * pw[i], rows, pw, caps, rem, cols, out);
            cols[i].pop();
            rem[i] += x;
        }
    }

    row(0, rows, &pw, caps, &mut rem, &mut cols, &mut out);
    out
}

/// The pairs (μ(i), β^(i)) whose weight multiplicities enter k_{λ,μ}.
fn needed_pairs(l: &Partition, mu: &Partition, p: u32) -> Vec<(Partition, Partition)> {
    let e = p_adic_expansion(mu, p);
    if e.terms.len() == 1 {
        return vec![(mu.clone(), l.clone())];
    }
    let sizes: Vec<u32> = e.terms.iter().map(|t| t.size()).collect();
    let caps: Vec<u32> = e.terms.iter().map(|t| t.part(0)).collect();
    let mut out = Vec::new();
    for split in splittings(l, p, &sizes, &caps).into_keys() {
        for (t, b) in e.terms.iter().zip(split) {
            out.push((t.clone(), b));
        }
    }
    out
}

/// k_{λ,μ} = [M^λ : Y^μ], the weight multiplicity dim L(μ)_λ.
///
/// L(μ) is the twisted tensor product of the simple modules L(μ(i)) over the
/// p-adic expansion of μ, so the weight space splits over all ways of writing
/// λ = Σ p^i β^(i) with β^(i) a weight of L(μ(i)).
pub fn p_kostka(l: &Partition, mu: &Partition, p: u32) -> Result<BigNat> {
    check_prime(p)?;
    if l.size() != mu.size() {
        return invalid(format!(
            "p-Kostka number of ({l}) and ({mu}) of different sizes"
        ));
    }
    Ok(p_kostka_unchecked(l, mu, p))
}

pub(crate) fn p_kostka_unchecked(l: &Partition, mu: &Partition, p: u32) -> BigNat {
    if !dominates(mu, l) {
        return BigUint::default();
    }
    if l == mu {
        return 1u32.into();
    }
    let e = p_adic_expansion(mu, p);
    if e.terms.len() == 1 {
        return simple_weight_multiplicity(mu, l, p).into();
    }
    let sizes: Vec<u32> = e.terms.iter().map(|t| t.size()).collect();
    let caps: Vec<u32> = e.terms.iter().map(|t| t.part(0)).collect();
    let mut total = BigUint::default();
    for (split, ways) in splittings(l, p, &sizes, &caps) {
        let mut prod = BigUint::from(ways);
        for (t, b) in e.terms.iter().zip(&split) {
            let c = simple_weight_multiplicity(t, b, p);
            if c == 0 {
                prod = BigUint::default();
                break;
            }
            prod *= c;
        }
        total += prod;
    }
    total
}

/// Computes every Gram matrix that the given pairs (λ, μ) will need, in parallel.
pub(crate) fn prewarm(pairs: &[(Partition, Partition)], p: u32) {
    use rayon::prelude::*;
    let needed: Vec<(Partition, Partition)> = pairs
        .par_iter()
        .filter(|(l, mu)| l != mu && dominates(mu, l))
        .flat_map_iter(|(l, mu)| needed_pairs(l, mu, p))
        .collect();
    weyl::prewarm(needed, p);
}

/// The p-Kostka matrix of S_n: `entries[i][j]` = k_{order[i], order[j]}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KostkaMatrix {
    pub n: u32,
    pub p: u32,
    /// All partitions of n in decreasing lexicographic order.
    pub order: Vec<Partition>,
    pub entries: Vec<Vec<BigNat>>,
}

impl KostkaMatrix {
    pub fn get(&self, l: &Partition, mu: &Partition) -> Option<&BigNat> {
        let i = self.index(l)?;
        let j = self.index(mu)?;
        Some(&self.entries[i][j])
    }

    pub fn index(&self, l: &Partition) -> Option<usize> {
        // order is strictly decreasing
        self.order.binary_search_by(|x| l.cmp(x)).ok()
    }
}

/// k_{λ,μ} for all λ, μ ⊢ n, with unitriangularity checked.
pub fn kostka_matrix(n: u32, p: u32) -> Result<KostkaMatrix> {
    check_prime(p)?;
    let order = partitions(n);
    let pairs: Vec<(Partition, Partition)> = order
        .iter()
        .flat_map(|l| {
            partitions_dominating(l)
                .into_iter()
                .map(move |mu| (l.clone(), mu))
        })
        .collect();
    prewarm(&pairs, p);
    let entries: Vec<Vec<BigNat>> = order
        .iter()
        .map(|l| {
            order
                .iter()
                .map(|mu| p_kostka_unchecked(l, mu, p))
                .collect()
        })
        .collect();
    for (i, l) in order.iter().enumerate() {
        for (j, mu) in order.iter().enumerate() {
            let k = &entries[i][j];
            if i == j && *k != 1u32.into() {
                return Err(Error::TableInconsistency(format!(
                    "k_(({l}),({l})) = {k} at p = {p}, expected 1"
                )));
            }
            if i != j && *k != BigUint::default() && !dominates(mu, l) {
                return Err(Error::TableInconsistency(format!(
                    "k_(({l}),({mu})) = {k} at p = {p} although ({mu}) does not dominate ({l})"
                )));
            }
        }
    }
    Ok(KostkaMatrix {
        n,
        p,
        order,
        entries,
    })
}

type DimCache = RwLock<HashMap<(u32, Partition), BigNat>>;

fn dim_cache() -> &'static DimCache {
    static C: OnceLock<DimCache> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// dim Y^μ = dim M^μ − Σ_{ν ▷ μ} k_{μ,ν} dim Y^ν.
pub fn young_module_dimension(mu: &Partition, p: u32) -> Result<BigNat> {
    check_prime(p)?;
    Ok(young_dim(mu, p))
}

pub(crate) fn young_dim(mu: &Partition, p: u32) -> BigNat {
    let key = (p, mu.clone());
    if let Some(v) = dim_cache().read().unwrap().get(&key) {
        return v.clone();
    }
    let above: Vec<Partition> = partitions_dominating(mu)
        .into_iter()
        .filter(|nu| nu != mu)
        .collect();
    let pairs: Vec<(Partition, Partition)> =
        above.iter().map(|nu| (mu.clone(), nu.clone())).collect();
    prewarm(&pairs, p);
    let mut d = perm_module_dimension(&mu.to_composition());
    for nu in &above {
        let k = p_kostka_unchecked(mu, nu, p);
        if k != BigUint::default() {
            d -= k * young_dim(nu, p);
        }
    }
    dim_cache().write().unwrap().insert(key, d.clone());
    d
}

/// dim Y^λ for a p-restricted λ = (a, b): dim S^λ, plus dim S^{κ + (p)} when
/// λ has p-weight one with p-core κ.
pub fn two_part_young_dimension(l: &Partition, p: u32) -> Result<BigNat> {
    check_prime(p)?;
    if l.len() > 2 || !is_p_restricted(l, p) {
        return invalid(format!(
            "({l}) is not a p-restricted partition with at most two parts for p = {p}"
        ));
    }
    let (core, w) = p_core_and_weight(l, p);
    match w {
        0 => Ok(specht_dimension(l)),
        1 => Ok(specht_dimension(l) + specht_dimension(&add(&core, &Partition::row(p)))),
        _ => Err(Error::TableInconsistency(format!(
            "({l}) has {p}-weight {w} > 1"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(xs: &[u32]) -> Partition {
        Partition::new(xs.to_vec()).unwrap()
    }

    fn big(x: u64) -> BigNat {
        x.into()
    }

    #[test]
    fn ordinary_examples() {
        let c = |xs: &[u32]| Composition::new(xs.to_vec());
        assert_eq!(ordinary_kostka(&pt(&[3, 1]), &c(&[3, 1])).unwrap(), big(1));
        assert_eq!(
            ordinary_kostka(&pt(&[2, 1]), &c(&[1, 1, 1])).unwrap(),
            big(2)
        );
        assert_eq!(ordinary_kostka(&pt(&[3]), &c(&[2, 1])).unwrap(), big(1));
        assert_eq!(
            ordinary_kostka(&pt(&[2, 1]), &c(&[1, 0, 2])).unwrap(),
            big(1)
        );
        assert!(ordinary_kostka(&pt(&[2]), &c(&[1])).is_err());
    }

    #[test]
    fn p_kostka_examples() {
        for p in [2, 3, 5] {
            for l in partitions(6) {
                assert_eq!(p_kostka(&l, &l, p).unwrap(), big(1));
            }
        }
        assert_eq!(p_kostka(&pt(&[1, 1]), &pt(&[2]), 2).unwrap(), big(0));
        for p in [2, 3, 5] {
            for n in 2..=9 {
                let expect = u64::from(n % p != 0);
                assert_eq!(
                    p_kostka(&pt(&[n - 1, 1]), &Partition::row(n), p).unwrap(),
                    big(expect),
                    "n={n} p={p}"
                );
            }
        }
        // M^(1^3) in characteristic 3 is Y^(1^3) + Y^(2,1) + Y^(3)
        assert_eq!(p_kostka(&pt(&[1, 1, 1]), &pt(&[2, 1]), 3).unwrap(), big(1));
        assert!(p_kostka(&pt(&[1]), &pt(&[2]), 2).is_err());
    }

    #[test]
    fn kostka_matrix_small() {
        let k0 = kostka_matrix(0, 3).unwrap();
        assert_eq!(k0.order, vec![Partition::empty()]);
        assert_eq!(k0.entries, vec![vec![big(1)]]);
        let k = kostka_matrix(2, 2).unwrap();
        assert_eq!(k.order, vec![pt(&[2]), pt(&[1, 1])]);
        assert_eq!(k.entries, vec![vec![big(1), big(0)], vec![big(0), big(1)]]);
    }

    #[test]
    fn young_dimension_examples() {
        for p in [2, 3, 5] {
            for n in 0..=7 {
                assert_eq!(
                    young_module_dimension(&Partition::row(n), p).unwrap(),
                    big(1)
                );
            }
        }
        assert_eq!(young_module_dimension(&pt(&[1, 1]), 2).unwrap(), big(2));
        assert_eq!(young_module_dimension(&pt(&[2, 1]), 2).unwrap(), big(2));
        // projective cover of the trivial module of S_3 in characteristic 3
        assert_eq!(young_module_dimension(&pt(&[1, 1, 1]), 3).unwrap(), big(3));
        // semisimple case: Y^(1^n) is the sign module
        assert_eq!(
            young_module_dimension(&Partition::column(4), 5).unwrap(),
            big(1)
        );
    }

    #[test]
    fn two_part_examples() {
        assert_eq!(two_part_young_dimension(&pt(&[2, 1]), 2).unwrap(), big(2));
        assert_eq!(two_part_young_dimension(&pt(&[1, 1]), 2).unwrap(), big(2));
        // core (1), so the second term is dim S^(4)
        assert_eq!(two_part_young_dimension(&pt(&[2, 2]), 3).unwrap(), big(3));
        assert_eq!(two_part_young_dimension(&pt(&[1]), 3).unwrap(), big(1));
        assert!(two_part_young_dimension(&pt(&[3]), 2).is_err());
        assert!(two_part_young_dimension(&pt(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn two_part_matches_recursion() {
        for p in [2, 3, 5] {
            for n in 0..=12 {
                for l in partitions(n) {
                    if l.len() <= 2 && is_p_restricted(&l, p) {
                        assert_eq!(
                            two_part_young_dimension(&l, p).unwrap(),
                            young_module_dimension(&l, p).unwrap(),
                            "({l}) p={p}"
                        );
                    }
                }
            }
        }
    }

    /// The direct Gram rank for arbitrary μ must agree with the tensor
    /// product splitting over the p-adic expansion.
    #[test]
    fn splitting_matches_direct_rank() {
        for p in [2, 3] {
            for n in 0..=8 {
                for mu in partitions(n) {
                    if is_p_restricted(&mu, p) {
                        continue;
                    }
                    for l in partitions(n) {
                        let direct = if dominates(&mu, &l) {
                            gram_weight_multiplicity(&mu, &l, p)
                        } else {
                            0
                        };
                        assert_eq!(
                            p_kostka(&l, &mu, p).unwrap(),
                            big(direct),
                            "({l}) ({mu}) p={p}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn column_sums_give_permutation_dimensions() {
        for p in [2, 3] {
            for n in 0..=8 {
                let k = kostka_matrix(n, p).unwrap();
                for (i, l) in k.order.iter().enumerate() {
                    let total: BigNat = k
                        .order
                        .iter()
                        .enumerate()
                        .map(|(j, mu)| &k.entries[i][j] * young_module_dimension(mu, p).unwrap())
                        .sum();
                    assert_eq!(total, perm_module_dimension(&l.to_composition()));
                }
            }
        }
    }
}
