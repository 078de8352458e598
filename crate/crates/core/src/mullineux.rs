//! The Mullineux involution.
//!
//! On p-regular partitions it is computed through good nodes: strip λ down to
//! ∅ by removing good nodes, recording their residues i_1, …, i_n, then build
//! back up from ∅ adding good nodes of residues −i_n, …, −i_1.

use crate::error::{check_prime, invalid, Result};
use crate::partition::{is_p_regular, is_p_restricted, Partition};

fn residue(r: usize, c: usize, p: u32) -> u32 {
    (c as i64 - r as i64).rem_euclid(p as i64) as u32
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Node {
    Addable(usize),
    Removable(usize),
}

/// Addable and removable nodes of residue `i`, top row first, with the
/// pairs "addable above removable" cancelled.
fn reduced_signature(rows: &[u32], i: u32, p: u32) -> Vec<Node> {
    let len = |r: usize| rows.get(r).copied().unwrap_or(0);
    let mut sig = Vec::new();
    for r in 0..=rows.len() {
        let c = len(r) as usize;
        let addable = r == 0 || len(r - 1) > len(r);
        if addable && residue(r, c, p) == i {
            sig.push(Node::Addable(r));
        }
        let removable = c > 0 && len(r + 1) < len(r);
        if removable && residue(r, c - 1, p) == i {
            sig.push(Node::Removable(r));
        }
    }
    // the stack keeps an uncancelled prefix of the form (−)*(+)*
    let mut out: Vec<Node> = Vec::new();
    for n in sig {
        match (n, out.last()) {
            (Node::Removable(_), Some(Node::Addable(_))) => {
                out.pop();
            }
            _ => out.push(n),
        }
    }
    out
}

/// Row of the good removable i-node, if any.
fn good_removable(rows: &[u32], i: u32, p: u32) -> Option<usize> {
    reduced_signature(rows, i, p)
        .into_iter()
        .rev()
        .find_map(|n| match n {
            Node::Removable(r) => Some(r),
            _ => None,
        })
}

/// Row of the good addable i-node, if any.
fn good_addable(rows: &[u32], i: u32, p: u32) -> Option<usize> {
    reduced_signature(rows, i, p)
        .into_iter()
        .find_map(|n| match n {
            Node::Addable(r) => Some(r),
            _ => None,
        })
}

/// Residues of good nodes removed one at a time, in removal order.
fn good_path(l: &Partition, p: u32) -> Vec<u32> {
    let mut rows = l.parts().to_vec();
    let mut path = Vec::with_capacity(l.size() as usize);
    while !rows.is_empty() {
        let (i, r) = (0..p)
            .find_map(|i| good_removable(&rows, i, p).map(|r| (i, r)))
            .expect("a nonempty p-regular partition has a good node");
        rows[r] -= 1;
        if rows[r] == 0 {
            rows.pop();
        }
        path.push(i);
    }
    path
}

/// Adds good nodes of the given residues to ∅, in order.
fn build(residues: impl Iterator<Item = u32>, p: u32) -> Partition {
    let mut rows: Vec<u32> = Vec::new();
    for i in residues {
        let r = good_addable(&rows, i, p).expect("every residue has a good addable node");
        if r == rows.len() {
            rows.push(0);
        }
        rows[r] += 1;
    }
    Partition::new(rows).expect("adding good nodes keeps a partition")
}

/// Mullineux map on p-regular partitions.
pub fn mullineux_regular(l: &Partition, p: u32) -> Result<Partition> {
    check_prime(p)?;
    if !is_p_regular(l, p) {
        return invalid(format!("({l}) is not {p}-regular"));
    }
    let path = good_path(l, p);
    Ok(build(path.into_iter().rev().map(|i| (p - i) % p), p))
}

/// Mullineux map on p-restricted partitions: conjugate, apply the regular
/// map, conjugate back.
pub fn mullineux_restricted(l: &Partition, p: u32) -> Result<Partition> {
    check_prime(p)?;
    if !is_p_restricted(l, p) {
        return invalid(format!("({l}) is not {p}-restricted"));
    }
    Ok(mullineux_regular(&l.conjugate(), p)?.conjugate())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions;

    fn pt(xs: &[u32]) -> Partition {
        Partition::new(xs.to_vec()).unwrap()
    }

    /// Mullineux symbol columns (A_i, R_i): size of the p-rim and number of
    /// rows, peeling off p-rims until nothing is left.
    fn symbol(l: &Partition, p: u32) -> Vec<(u32, u32)> {
        let mut rows = l.parts().to_vec();
        let mut out = Vec::new();
        while !rows.is_empty() {
            let n = rows.len();
            let mut removed = vec![0u32; n];
            let mut start = 0usize;
            while start < n {
                // walk p rim cells from the end of row `start`
                let (mut r, mut c) = (start, rows[start] as usize - 1);
                let mut taken = 0;
                loop {
                    removed[r] += 1;
                    taken += 1;
                    if taken == p {
                        break;
                    }
                    if r + 1 < n && rows[r + 1] as usize > c {
                        r += 1;
                    } else if c > 0 {
                        c -= 1;
                    } else {
                        break;
                    }
                }
                start = r + 1;
            }
            out.push((removed.iter().sum(), n as u32));
            for (x, d) in rows.iter_mut().zip(&removed) {
                *x -= d;
            }
            while rows.last() == Some(&0) {
                rows.pop();
            }
            assert!(rows.windows(2).all(|w| w[0] >= w[1]));
        }
        out
    }

    #[test]
    fn examples() {
        for p in [2, 3, 5] {
            assert_eq!(mullineux_regular(&pt(&[1]), p).unwrap(), pt(&[1]));
            assert_eq!(
                mullineux_restricted(&Partition::empty(), p).unwrap(),
                Partition::empty()
            );
        }
        assert_eq!(mullineux_regular(&pt(&[3]), 3).unwrap(), pt(&[2, 1]));
        assert_eq!(mullineux_restricted(&pt(&[2, 1]), 5).unwrap(), pt(&[2, 1]));
        assert!(mullineux_regular(&pt(&[1, 1]), 2).is_err());
        assert!(mullineux_restricted(&pt(&[2]), 2).is_err());
    }

    #[test]
    fn symbol_rule() {
        for p in [2, 3, 5, 7] {
            for n in 0..=14 {
                for l in partitions(n).into_iter().filter(|l| is_p_regular(l, p)) {
                    let m = mullineux_regular(&l, p).unwrap();
                    let expect: Vec<(u32, u32)> = symbol(&l, p)
                        .into_iter()
                        .map(|(a, r)| (a, a - r + u32::from(a % p != 0)))
                        .collect();
                    assert_eq!(symbol(&m, p), expect, "({l}) -> ({m}) p={p}");
                }
            }
        }
    }

    #[test]
    fn involution_and_special_primes() {
        for n in 0..=12 {
            for l in partitions(n) {
                for p in [2, 3, 5] {
                    if is_p_restricted(&l, p) {
                        let m = mullineux_restricted(&l, p).unwrap();
                        assert!(is_p_restricted(&m, p));
                        assert_eq!(m.size(), n);
                        assert_eq!(mullineux_restricted(&m, p).unwrap(), l);
                    }
                }
                if is_p_restricted(&l, 2) {
                    assert_eq!(mullineux_restricted(&l, 2).unwrap(), l);
                }
                let big = [13, 17].into_iter().find(|&q| q > n).unwrap();
                assert_eq!(mullineux_restricted(&l, big).unwrap(), l.conjugate());
                assert_eq!(mullineux_regular(&l, big).unwrap(), l.conjugate());
            }
        }
    }
}
