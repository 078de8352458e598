//! Orbit types: multisets of p-power orbit sizes.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{check_prime, invalid, Error, Result};
use crate::partition::{p_adic_expansion, parse_list, Partition};

/// The multiset (1^{a_0}, p^{a_1}, …) stored as multiplicities `a_i`.
///
/// Equality is multiset equality. The order is lexicographic on the sorted
/// list of orbit sizes (1,…,1,p,…,p,…), which is the column order of tables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrbitType {
    p: u32,
    mult: Vec<u32>,
}

impl OrbitType {
    /// `mult[i]` orbits of size p^i. Trailing zeros are dropped.
    pub fn new(p: u32, mut mult: Vec<u32>) -> Result<Self> {
        check_prime(p)?;
        while mult.last() == Some(&0) {
            mult.pop();
        }
        Ok(OrbitType { p, mult })
    }

    pub(crate) fn from_mult(p: u32, mut mult: Vec<u32>) -> Self {
        while mult.last() == Some(&0) {
            mult.pop();
        }
        OrbitType { p, mult }
    }

    /// (1^n).
    pub fn trivial(n: u32, p: u32) -> Self {
        Self::from_mult(p, vec![n])
    }

    /// Builds an orbit type from a list of orbit sizes, each a power of `p`.
    pub fn from_sizes(p: u32, sizes: &[u32]) -> Result<Self> {
        check_prime(p)?;
        let mut mult = Vec::new();
        for &s in sizes {
            let i = log_p(s, p).ok_or_else(|| {
                Error::InvalidInput(format!("orbit size {s} is not a power of {p}"))
            })?;
            if mult.len() <= i {
                mult.resize(i + 1, 0);
            }
            mult[i] += 1;
        }
        Ok(Self::from_mult(p, mult))
    }

    /// Parses "1^3,2^2" (size^count) or "1,1,1,2,2" (list of sizes).
    pub fn parse(s: &str, p: u32) -> Result<Self> {
        let s = s.trim();
        if !s.contains('^') {
            return Self::from_sizes(p, &parse_list(s)?);
        }
        let mut sizes = Vec::new();
        for term in s.split(',') {
            let (a, b) = term.split_once('^').ok_or_else(|| {
                Error::InvalidInput(format!("orbit term {term:?} is not of the form size^count"))
            })?;
            let parse = |t: &str| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidInput(format!("cannot parse {t:?} in orbit type")))
            };
            let (size, count) = (parse(a)?, parse(b)?);
            sizes.extend(std::iter::repeat_n(size, count as usize));
        }
        Self::from_sizes(p, &sizes)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Multiplicity a_i of orbits of size p^i.
    pub fn mult(&self, i: usize) -> u32 {
        self.mult.get(i).copied().unwrap_or(0)
    }

    pub fn mults(&self) -> &[u32] {
        &self.mult
    }

    /// Number of exponent levels carried (index of the largest orbit size plus one).
    pub fn levels(&self) -> usize {
        self.mult.len()
    }

    /// Σ a_i p^i.
    pub fn size(&self) -> u32 {
        let mut pw = 1;
        let mut s = 0;
        for &a in &self.mult {
            s += a * pw;
            pw *= self.p;
        }
        s
    }

    /// Total number of orbits.
    pub fn count(&self) -> u32 {
        self.mult.iter().sum()
    }

    /// Orbit sizes in ascending order.
    pub fn sizes(&self) -> Vec<u32> {
        let mut out = Vec::new();
        let mut pw = 1;
        for &a in &self.mult {
            out.extend(std::iter::repeat_n(pw, a as usize));
            pw *= self.p;
        }
        out
    }

    /// O • O′ (union of multisets).
    pub fn concat(&self, other: &OrbitType) -> OrbitType {
        let n = self.mult.len().max(other.mult.len());
        Self::from_mult(
            self.p,
            (0..n).map(|i| self.mult(i) + other.mult(i)).collect(),
        )
    }

    /// p^s·O: every orbit size multiplied by p^s.
    pub fn scale(&self, s: usize) -> OrbitType {
        if self.mult.is_empty() {
            return self.clone();
        }
        let mut mult = vec![0; s];
        mult.extend_from_slice(&self.mult);
        Self::from_mult(self.p, mult)
    }
}

fn log_p(mut s: u32, p: u32) -> Option<usize> {
    if s == 0 {
        return None;
    }
    let mut i = 0;
    while s.is_multiple_of(p) {
        s /= p;
        i += 1;
    }
    (s == 1).then_some(i)
}

impl Ord for OrbitType {
    fn cmp(&self, other: &Self) -> Ordering {
        self.p
            .cmp(&other.p)
            .then_with(|| self.sizes().cmp(&other.sizes()))
    }
}

impl PartialOrd for OrbitType {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for OrbitType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut pw = 1u64;
        let mut first = true;
        for &a in &self.mult {
            if a > 0 {
                if !first {
                    f.write_str(",")?;
                }
                write!(f, "{pw}^{a}")?;
                first = false;
            }
            pw *= self.p as u64;
        }
        Ok(())
    }
}

impl Serialize for OrbitType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// All orbit types of size `n`, in column order.
pub fn orbit_types(n: u32, p: u32) -> Vec<OrbitType> {
    // a_0 ≡ n (mod p) and the rest is an orbit type of (n - a_0)/p one level up
    fn go(n: u32, p: u32) -> Vec<Vec<u32>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        let mut a0 = n as i64;
        while a0 >= 0 {
            for rest in go((n - a0 as u32) / p, p) {
                let mut v = vec![a0 as u32];
                v.extend(rest);
                out.push(v);
            }
            a0 -= p as i64;
        }
        out
    }
    go(n, p)
        .into_iter()
        .map(|m| OrbitType::from_mult(p, m))
        .collect()
}

/// O_λ = (1^{|λ(0)|}, p^{|λ(1)|}, …) from the p-adic expansion.
pub fn canonical_orbit_type(l: &Partition, p: u32) -> OrbitType {
    let e = p_adic_expansion(l, p);
    OrbitType::from_mult(p, e.terms.iter().map(|t| t.size()).collect())
}

/// Whether the orbits of `o` can be grouped so that the groups sum to the
/// orbits of `target`, one group per orbit.
pub fn refines_up_to_rearrangement(o: &OrbitType, target: &OrbitType) -> Result<bool> {
    if o.p != target.p {
        return invalid(format!(
            "orbit types over different primes {} and {}",
            o.p, target.p
        ));
    }
    if o.size() != target.size() {
        return invalid(format!("orbit types {o} and {target} have different sizes"));
    }
    let mut items = o.sizes();
    items.reverse();
    let mut bins = target.sizes();
    bins.reverse();
    Ok(fill_bins(&items, &mut bins))
}

/// Exhaustive search: place every item into some bin without overflow; with
/// equal totals, success means every bin is filled exactly.
fn fill_bins(items: &[u32], bins: &mut [u32]) -> bool {
    let Some((&x, rest)) = items.split_first() else {
        return bins.iter().all(|&b| b == 0);
    };
    for j in 0..bins.len() {
        // bins with the same remaining capacity are interchangeable
        if bins[j] < x || bins[..j].contains(&bins[j]) {
            continue;
        }
        bins[j] -= x;
        let ok = fill_bins(rest, bins);
        bins[j] += x;
        if ok {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions;

    fn ot(s: &str, p: u32) -> OrbitType {
        OrbitType::parse(s, p).unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(ot("1^3,2^2", 2).to_string(), "1^3,2^2");
        assert_eq!(ot("1,1,1,2,2", 2), ot("1^3,2^2", 2));
        assert_eq!(ot("2,1,2,1,1", 2), ot("1^3,2^2", 2));
        assert_eq!(ot("", 3).size(), 0);
        assert_eq!(ot("9^1", 3).mults(), &[0, 0, 1]);
        assert!(OrbitType::parse("3^1", 2).is_err());
        assert!(OrbitType::parse("1^2", 4).is_err());
        assert!(OrbitType::parse("1^x", 2).is_err());
    }

    #[test]
    fn canonical_examples() {
        let p = |xs: &[u32]| Partition::new(xs.to_vec()).unwrap();
        assert_eq!(canonical_orbit_type(&p(&[4, 3]), 2), ot("1^3,2^2", 2));
        assert_eq!(canonical_orbit_type(&p(&[2]), 3), ot("1^2", 3));
        assert_eq!(canonical_orbit_type(&p(&[5, 4]), 3), ot("1^3,3^2", 3));
        assert_eq!(canonical_orbit_type(&Partition::empty(), 3), ot("", 3));
    }

    #[test]
    fn refinement_examples() {
        assert!(refines_up_to_rearrangement(&ot("1,1,2", 2), &ot("2,2", 2)).unwrap());
        assert!(refines_up_to_rearrangement(&ot("2,2", 2), &ot("2,2", 2)).unwrap());
        assert!(!refines_up_to_rearrangement(&ot("4", 2), &ot("2,2", 2)).unwrap());
        assert!(refines_up_to_rearrangement(&ot("1^9", 3), &ot("9^1", 3)).unwrap());
        assert!(refines_up_to_rearrangement(&ot("1,1,2", 2), &ot("4", 2)).is_ok());
        assert!(refines_up_to_rearrangement(&ot("1,1", 2), &ot("4", 2)).is_err());
        assert!(refines_up_to_rearrangement(&ot("1,1,1", 3), &ot("1,1,1", 2)).is_err());
    }

    #[test]
    fn enumeration_order_and_counts() {
        assert_eq!(
            orbit_types(2, 2)
                .iter()
                .map(|o| o.to_string())
                .collect::<Vec<_>>(),
            vec!["1^2", "2^1"]
        );
        for p in [2, 3, 5] {
            for n in 0..=16 {
                let all = orbit_types(n, p);
                assert!(all.windows(2).all(|w| w[0] < w[1]));
                assert!(all.iter().all(|o| o.size() == n));
                // every orbit type is a partition of n into p-powers; count those directly
                let direct = partitions(n)
                    .iter()
                    .filter(|l| l.parts().iter().all(|&x| log_p(x, p).is_some()))
                    .count();
                assert_eq!(all.len(), direct);
            }
        }
    }

    #[test]
    fn refinement_basics() {
        for p in [2, 3] {
            for n in 0..=12 {
                let all = orbit_types(n, p);
                for o in &all {
                    assert!(refines_up_to_rearrangement(o, o).unwrap());
                    assert!(refines_up_to_rearrangement(&OrbitType::trivial(n, p), o).unwrap());
                    for t in &all {
                        // a refinement has at least as many orbits
                        if refines_up_to_rearrangement(o, t).unwrap() {
                            assert!(o.count() >= t.count());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn concat_and_scale() {
        let a = ot("1^2,3^1", 3);
        assert_eq!(a.concat(&ot("3^1", 3)), ot("1^2,3^2", 3));
        assert_eq!(a.scale(2), ot("9^2,27^1", 3));
        assert_eq!(a.scale(2).size(), 9 * a.size());
    }
}
