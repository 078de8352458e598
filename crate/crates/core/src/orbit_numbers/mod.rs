//! Orbit numbers y_{λ,O}: dimensions of Brauer constructions of Young modules.

mod column;
mod table;

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::Zero;

pub use column::column_values;
use column::single_value;
pub use table::{build_tables, cached_table, OrbitNumberTable};

use crate::dims::{binomial, perm_module_dimension, specht_dimension};
use crate::error::{check_prime, invalid, Error, Result};
use crate::kostka::young_dim;
use crate::orbit_type::OrbitType;
use crate::partition::{p_adic_expansion, Partition};
use crate::BigNat;

fn check_sizes(l: &Partition, o: &OrbitType) -> Result<()> {
    if l.size() != o.size() {
        return invalid(format!(
            "({l}) has size {} but orbit type {o} has size {}",
            l.size(),
            o.size()
        ));
    }
    Ok(())
}

/// m_{λ,O} = dim M^λ(P): the number of P-fixed λ-tabloids.
///
/// Sums Π_i dim M^{α^(i)} over all splittings λ = Σ p^i α^(i) with |α^(i)| = a_i,
/// built one row at a time: a row of length λ_j takes x_i orbits of size p^i
/// in C(remaining a_i, x_i) ways.
pub fn m_number(l: &Partition, o: &OrbitType) -> Result<BigNat> {
    check_sizes(l, o)?;
    Ok(m_unchecked(l, o))
}

pub(crate) fn m_unchecked(l: &Partition, o: &OrbitType) -> BigNat {
    let p = o.p();
    let levels = o.levels();
    let pw: Vec<u32> = (0..levels).map(|i| p.pow(i as u32)).collect();
    let mut memo: HashMap<(usize, Vec<u32>), BigNat> = HashMap::new();

    fn rows(
        j: usize,
        l: &[u32],
        rem: &mut Vec<u32>,
        pw: &[u32],
        memo: &mut HashMap<(usize, Vec<u32>), BigNat>,
    ) -> BigNat {
        if j == l.len() {
            return BigUint::from(u32::from(rem.iter().all(|&x| x == 0)));
        }
        if let Some(v) = memo.get(&(j, rem.clone())) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        fill(
            j,
            pw.len(),
            l[j],
            l,
            rem,
            pw,
            BigUint::from(1u32),
            &mut total,
            memo,
        );
        memo.insert((j, rem.clone()), total.clone());
        total
    }

    #[allow(clippy::too_many_arguments)]
    fn fill(
        j: usize,
        level: usize,
        left: u32,
        l: &[u32],
        rem: &mut Vec<u32>,
        pw: &[u32],
        weight: BigNat,
        total: &mut BigNat,
        memo: &mut HashMap<(usize, Vec<u32>), BigNat>,
    ) {
        if level == 0 {
            if left == 0 {
                let rest = rows(j + 1, l, rem, pw, memo);
                if !rest.is_zero() {
                    *total += weight * rest;
                }
            }
            return;
        }
        let i = level - 1;
        let hi = rem[i].min(left / pw[i]);
        for x in 0..=hi {
            let w = &weight * binomial(rem[i] as u64, x as u64);
            rem[i] -= x;
            fill(j, i, left - x * pw[i], l, rem, pw, w, total, memo);
            rem[i] += x;
        }
    }

    let mut rem = o.mults().to_vec();
    rows(0, l.parts(), &mut rem, &pw, &mut memo)
}

/// Counts assignments of the (labelled) orbits to the rows of λ that fill
/// every row exactly.
pub fn m_oracle(l: &Partition, o: &OrbitType) -> Result<BigNat> {
    check_sizes(l, o)?;
    let orbits = o.sizes();
    let mut memo: HashMap<(usize, Vec<u32>), BigNat> = HashMap::new();
    fn go(
        k: usize,
        orbits: &[u32],
        caps: &mut Vec<u32>,
        memo: &mut HashMap<(usize, Vec<u32>), BigNat>,
    ) -> BigNat {
        if k == orbits.len() {
            return BigUint::from(u32::from(caps.iter().all(|&c| c == 0)));
        }
        if let Some(v) = memo.get(&(k, caps.clone())) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        for r in 0..caps.len() {
            if caps[r] >= orbits[k] {
                caps[r] -= orbits[k];
                total += go(k + 1, orbits, caps, memo);
                caps[r] += orbits[k];
            }
        }
        memo.insert((k, caps.clone()), total.clone());
        total
    }
    Ok(go(0, &orbits, &mut l.parts().to_vec(), &mut memo))
}

/// y_{λ,O}: read from a cached table when one exists, otherwise solved
/// column by column.
pub fn orbit_number(l: &Partition, o: &OrbitType, p: u32) -> Result<BigNat> {
    check_prime(p)?;
    if o.p() != p {
        return invalid(format!(
            "orbit type {o} was built for p = {}, not {p}",
            o.p()
        ));
    }
    check_sizes(l, o)?;
    if let Some(t) = cached_table(l.size(), p) {
        let t = t?;
        return Ok(t
            .y_at(l, o)
            .expect("table covers all partitions and orbit types")
            .clone());
    }
    single_value(l, o)
}

/// Π_i dim Y^{λ(i)} over the p-adic expansion of λ.
pub fn y_canonical_product(l: &Partition, p: u32) -> Result<BigNat> {
    check_prime(p)?;
    Ok(p_adic_expansion(l, p)
        .terms
        .iter()
        .map(|t| young_dim(t, p))
        .product())
}

/// y_{(n−1,1),O}: 0 if a_0 = 0, else a_0 when p | n and a_0 − 1 otherwise.
pub fn y_hook_closed_form(n: u32, o: &OrbitType, p: u32) -> Result<BigNat> {
    check_prime(p)?;
    if n < 2 {
        return invalid(format!("hook closed form needs n >= 2, got {n}"));
    }
    if o.size() != n || o.p() != p {
        return invalid(format!(
            "orbit type {o} is not an orbit type of {n} for p = {p}"
        ));
    }
    let a0 = o.mult(0);
    Ok(BigUint::from(match a0 {
        0 => 0,
        _ if n.is_multiple_of(p) => a0,
        _ => a0 - 1,
    }))
}

fn digits(mut x: u32, p: u32) -> Vec<u32> {
    let mut d = Vec::new();
    while x > 0 {
        d.push(x % p);
        x /= p;
    }
    d
}

/// δ(x, y) = 1 iff x < p − 1 and x + y + 1 ≥ p.
fn delta(x: u32, y: u32, p: u32) -> bool {
    x + 1 < p && x + y + 1 >= p
}

/// C(m, k) with C(m, 0) = 1 for every integer m and 0 for k < 0 or k > m ≥ 0.
fn ext_binomial(m: i64, k: i64) -> BigNat {
    if k == 0 {
        return 1u32.into();
    }
    if k < 0 || m < 0 || k > m {
        return BigUint::zero();
    }
    binomial(m as u64, k as u64)
}

/// Digits x_i of λ_1 − λ_2 and y_i of λ_2, zero-padded to a common length.
fn two_part_digits(l: &Partition, p: u32) -> Result<Vec<(u32, u32)>> {
    if l.len() > 2 {
        return invalid(format!("({l}) has more than two parts"));
    }
    let (a, b) = (l.part(0), l.part(1));
    let (xs, ys) = (digits(a - b, p), digits(b, p));
    let len = xs.len().max(ys.len());
    Ok((0..len)
        .map(|i| {
            (
                xs.get(i).copied().unwrap_or(0),
                ys.get(i).copied().unwrap_or(0),
            )
        })
        .collect())
}

/// Π_i [C(x_i + 2y_i − 1, y_i) + δ(x_i, y_i)·C(x_i + 2y_i − 1, x_i + y_i + 1 − p)].
///
/// Each factor exceeds the matching factor of [`y_two_part_hook_product`] by
/// C(x_i + 2y_i − 1, y_i − 2) or more, so the two agree exactly when every
/// y_i ≤ 1 (for instance they differ at λ = (2,2), p = 3).
pub fn y_two_part_closed_form(l: &Partition, p: u32) -> Result<BigNat> {
    check_prime(p)?;
    let mut prod = BigUint::from(1u32);
    for (x, y) in two_part_digits(l, p)? {
        let (x, y) = (x as i64, y as i64);
        let mut f = ext_binomial(x + 2 * y - 1, y);
        if delta(x as u32, y as u32, p) {
            f += ext_binomial(x + 2 * y - 1, x + y + 1 - p as i64);
        }
        prod *= f;
    }
    Ok(prod)
}

/// Π_i [dim S^{(x_i+y_i, y_i)} + δ(x_i, y_i)·dim S^{(y_i+p−1, x_i+y_i+1−p)}],
/// i.e. the product of two-part Young module dimensions over the digits.
pub fn y_two_part_hook_product(l: &Partition, p: u32) -> Result<BigNat> {
    check_prime(p)?;
    let mut prod = BigUint::from(1u32);
    for (x, y) in two_part_digits(l, p)? {
        let mut f = specht_dimension(&Partition::from_unsorted(vec![x + y, y]));
        if delta(x, y, p) {
            f += specht_dimension(&Partition::from_unsorted(vec![y + p - 1, x + y + 1 - p]));
        }
        prod *= f;
    }
    Ok(prod)
}

/// Which module a Jordan type describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Module {
    /// The Young module Y^λ.
    Young,
    /// The Young permutation module M^λ.
    YoungPermutation,
}

/// Generic Jordan type [1]^ones [p]^pblocks of a p-permutation module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanType {
    pub ones: BigNat,
    pub pblocks: BigNat,
}

impl JordanType {
    /// No blocks of size one.
    pub fn is_generically_free(&self) -> bool {
        self.ones.is_zero()
    }
}

impl std::fmt::Display for JordanType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[1]^{}[p]^{}", self.ones, self.pblocks)
    }
}

pub fn generic_jordan_type(
    l: &Partition,
    o: &OrbitType,
    p: u32,
    which: Module,
) -> Result<JordanType> {
    let (ones, dim) = match which {
        Module::Young => (orbit_number(l, o, p)?, young_dim(l, p)),
        Module::YoungPermutation => {
            check_prime(p)?;
            check_sizes(l, o)?;
            (
                m_unchecked(l, o),
                perm_module_dimension(&l.to_composition()),
            )
        }
    };
    if ones > dim || !((&dim - &ones) % p).is_zero() {
        return Err(Error::TableInconsistency(format!(
            "dimension {dim} minus {ones} fixed points is not a multiple of {p} for ({l}), {o}"
        )));
    }
    let pblocks = (dim - &ones) / p;
    Ok(JordanType { ones, pblocks })
}

/// Total dimension carried by a Jordan type.
pub fn jordan_dimension(j: &JordanType, p: u32) -> BigNat {
    &j.ones + &j.pblocks * p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit_type::orbit_types;
    use crate::partition::partitions;

    fn pt(xs: &[u32]) -> Partition {
        Partition::new(xs.to_vec()).unwrap()
    }
    fn ot(s: &str, p: u32) -> OrbitType {
        OrbitType::parse(s, p).unwrap()
    }
    fn big(x: u64) -> BigNat {
        x.into()
    }

    #[test]
    fn m_examples() {
        for l in partitions(5) {
            assert_eq!(
                m_number(&l, &OrbitType::trivial(5, 2)).unwrap(),
                perm_module_dimension(&l.to_composition())
            );
        }
        for o in orbit_types(6, 3) {
            assert_eq!(m_number(&pt(&[6]), &o).unwrap(), big(1));
            assert_eq!(m_oracle(&pt(&[6]), &o).unwrap(), big(1));
        }
        assert_eq!(m_number(&pt(&[2, 2]), &ot("2^2", 2)).unwrap(), big(2));
        assert_eq!(m_oracle(&pt(&[2, 2]), &ot("2^2", 2)).unwrap(), big(2));
        assert_eq!(m_oracle(&pt(&[2, 1]), &ot("1^1,2^1", 2)).unwrap(), big(1));
        assert_eq!(m_number(&pt(&[3]), &ot("1^1,2^1", 2)).unwrap(), big(1));
        assert!(m_number(&pt(&[2]), &ot("1^3", 2)).is_err());
        assert_eq!(m_number(&Partition::empty(), &ot("", 2)).unwrap(), big(1));
    }

    #[test]
    fn m_matches_oracle() {
        for p in [2, 3] {
            for n in 0..=8 {
                for o in orbit_types(n, p) {
                    for l in partitions(n) {
                        assert_eq!(
                            m_number(&l, &o).unwrap(),
                            m_oracle(&l, &o).unwrap(),
                            "({l}) {o}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn hook_closed_form_examples() {
        assert_eq!(y_hook_closed_form(4, &ot("1^2,2^1", 2), 2).unwrap(), big(2));
        assert_eq!(y_hook_closed_form(4, &ot("2^2", 2), 2).unwrap(), big(0));
        assert_eq!(y_hook_closed_form(4, &ot("1^4", 3), 3).unwrap(), big(3));
        assert!(y_hook_closed_form(1, &ot("1^1", 3), 3).is_err());
        assert!(y_hook_closed_form(4, &ot("1^3", 3), 3).is_err());
    }

    #[test]
    fn two_part_closed_form_examples() {
        assert_eq!(y_two_part_closed_form(&pt(&[2, 1]), 2).unwrap(), big(2));
        assert_eq!(y_two_part_closed_form(&pt(&[1, 1]), 2).unwrap(), big(2));
        assert_eq!(y_two_part_closed_form(&pt(&[5]), 3).unwrap(), big(1));
        assert!(y_two_part_closed_form(&pt(&[1, 1, 1]), 3).is_err());
        // the binomial form overcounts when a digit of λ_2 is 2 or more
        assert_eq!(y_two_part_closed_form(&pt(&[2, 2]), 3).unwrap(), big(4));
        assert_eq!(y_two_part_hook_product(&pt(&[2, 2]), 3).unwrap(), big(3));
    }

    #[test]
    fn hook_product_is_canonical_product() {
        for p in [2, 3, 5] {
            for n in 0..=30 {
                for b in 0..=n / 2 {
                    let l = Partition::from_unsorted(vec![n - b, b]);
                    assert_eq!(
                        y_two_part_hook_product(&l, p).unwrap(),
                        y_canonical_product(&l, p).unwrap(),
                        "({l}) p={p}"
                    );
                }
            }
        }
    }

    #[test]
    fn binomial_form_agrees_when_digits_are_small() {
        for p in [2, 3, 5] {
            for n in 0..=30 {
                for b in 0..=n / 2 {
                    let l = Partition::from_unsorted(vec![n - b, b]);
                    if two_part_digits(&l, p).unwrap().iter().all(|&(_, y)| y <= 1) {
                        assert_eq!(
                            y_two_part_closed_form(&l, p).unwrap(),
                            y_two_part_hook_product(&l, p).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn jordan_examples() {
        let j = generic_jordan_type(&pt(&[3]), &ot("1^1,2^1", 2), 2, Module::Young).unwrap();
        assert_eq!(
            j,
            JordanType {
                ones: big(1),
                pblocks: big(0)
            }
        );
        let j = generic_jordan_type(&pt(&[1, 1]), &ot("2^1", 2), 2, Module::Young).unwrap();
        assert_eq!(
            j,
            JordanType {
                ones: big(0),
                pblocks: big(1)
            }
        );
        assert!(j.is_generically_free());
        let j = generic_jordan_type(&pt(&[2, 1]), &ot("1^3", 2), 2, Module::Young).unwrap();
        assert_eq!(
            j,
            JordanType {
                ones: big(2),
                pblocks: big(0)
            }
        );
        let j = generic_jordan_type(&pt(&[2, 1]), &ot("1^1,2^1", 2), 2, Module::YoungPermutation)
            .unwrap();
        assert_eq!(jordan_dimension(&j, 2), big(3));
        assert_eq!(j.ones, big(1));
    }

    #[test]
    fn canonical_product_examples() {
        assert_eq!(y_canonical_product(&pt(&[2]), 3).unwrap(), big(1));
        assert_eq!(y_canonical_product(&pt(&[4, 3]), 2).unwrap(), big(4));
        assert_eq!(y_canonical_product(&pt(&[2, 1]), 2).unwrap(), big(2));
    }
}
