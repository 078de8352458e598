//! Partitions, compositions and their orders.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{invalid, Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// The derived `Ord` is lexicographic on the parts, which for partitions of
/// the same size is the usual lexicographic order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Validates `parts` as a partition. Trailing zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return invalid(format!("{parts:?} is not a partition"));
        }
        Ok(Partition { parts })
    }

    /// Sorts `parts` decreasingly and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Caller guarantees the parts are positive and weakly decreasing.
    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]) && !parts.contains(&0));
        Partition { parts }
    }

    /// The single-row partition (n), or ∅ for n = 0.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The single-column partition (1^n).
    pub fn column(n: u32) -> Self {
        Partition {
            parts: vec![1; n as usize],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The i-th part (0-based), with 0 beyond the last row.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn to_composition(&self) -> Composition {
        Composition {
            parts: self.parts.clone(),
        }
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let w = self.part(0) as usize;
        let mut out = vec![0u32; w];
        for &r in &self.parts {
            for c in out.iter_mut().take(r as usize) {
                *c += 1;
            }
        }
        Partition { parts: out }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.parts)
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_list(s)?)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A finite sequence of nonnegative integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Composition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The partition obtained by sorting and dropping zeros.
    pub fn sorted(&self) -> Partition {
        Partition::from_unsorted(self.parts.clone())
    }
}

impl From<Partition> for Composition {
    fn from(p: Partition) -> Self {
        Composition { parts: p.parts }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.parts)
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(Composition::new(parse_list(s)?))
    }
}

fn write_joined(f: &mut fmt::Formatter<'_>, xs: &[u32]) -> fmt::Result {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

pub(crate) fn parse_list(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim().parse::<u32>().map_err(|_| {
                Error::InvalidInput(format!("cannot parse {t:?} as a nonnegative integer"))
            })
        })
        .collect()
}

/// Binary operations on compositions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Combine {
    /// Componentwise sum, padding the shorter operand with zeros.
    Add,
    /// Juxtaposition.
    Concat,
    /// Multiply every part of the first operand; the second is ignored.
    Scale(u32),
}

pub fn composition_combine(a: &Composition, b: &Composition, mode: Combine) -> Composition {
    match mode {
        Combine::Add => {
            let n = a.len().max(b.len());
            let get = |c: &Composition, i: usize| c.parts.get(i).copied().unwrap_or(0);
            Composition::new((0..n).map(|i| get(a, i) + get(b, i)).collect())
        }
        Combine::Concat => {
            let mut v = a.parts.clone();
            v.extend_from_slice(&b.parts);
            Composition::new(v)
        }
        Combine::Scale(m) => Composition::new(a.parts.iter().map(|x| x * m).collect()),
    }
}

/// λ + μ on partitions (componentwise, zero-padded).
pub fn add(a: &Partition, b: &Partition) -> Partition {
    let n = a.len().max(b.len());
    Partition::from_sorted((0..n).map(|i| a.part(i) + b.part(i)).collect())
}

/// m·λ.
pub fn scale(a: &Partition, m: u32) -> Partition {
    if m == 0 {
        return Partition::empty();
    }
    Partition::from_sorted(a.parts.iter().map(|x| x * m).collect())
}

/// Result of comparing two partitions in the dominance order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dominance {
    Less,
    Greater,
    Equal,
    Incomparable,
}

pub fn dominance_compare(a: &Partition, b: &Partition) -> Result<Dominance> {
    if a.size() != b.size() {
        return invalid(format!(
            "dominance of partitions of different sizes: ({a}) vs ({b})"
        ));
    }
    Ok(dominance_unchecked(a.parts(), b.parts()))
}

/// Dominance between two weakly decreasing sequences of equal sum.
pub(crate) fn dominance_unchecked(a: &[u32], b: &[u32]) -> Dominance {
    let (mut sa, mut sb) = (0u32, 0u32);
    let (mut ge, mut le) = (true, true);
    for i in 0..a.len().max(b.len()) {
        sa += a.get(i).copied().unwrap_or(0);
        sb += b.get(i).copied().unwrap_or(0);
        match sa.cmp(&sb) {
            Ordering::Less => ge = false,
            Ordering::Greater => le = false,
            Ordering::Equal => {}
        }
    }
    match (ge, le) {
        (true, true) => Dominance::Equal,
        (true, false) => Dominance::Greater,
        (false, true) => Dominance::Less,
        (false, false) => Dominance::Incomparable,
    }
}

/// True iff `a` ⊵ `b` (sizes assumed equal).
pub fn dominates(a: &Partition, b: &Partition) -> bool {
    matches!(
        dominance_unchecked(a.parts(), b.parts()),
        Dominance::Greater | Dominance::Equal
    )
}

/// All partitions of `n` in decreasing lexicographic order.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn go(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition::from_sorted(cur.clone()));
            return;
        }
        for x in (1..=rem.min(max)).rev() {
            cur.push(x);
            go(rem - x, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions ν ⊵ μ of |μ|, in decreasing lexicographic order.
pub fn partitions_dominating(mu: &Partition) -> Vec<Partition> {
    let n = mu.size();
    let mut prefix = Vec::with_capacity(mu.len());
    let mut s = 0;
    for &x in mu.parts() {
        s += x;
        prefix.push(s);
    }
    fn go(
        rem: u32,
        max: u32,
        sum: u32,
        prefix: &[u32],
        n: u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if rem == 0 {
            out.push(Partition::from_sorted(cur.clone()));
            return;
        }
        let need = prefix.get(cur.len()).copied().unwrap_or(n);
        for x in (1..=rem.min(max)).rev() {
            if sum + x < need {
                break;
            }
            cur.push(x);
            go(rem - x, x, sum + x, prefix, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, 0, &prefix, n, &mut Vec::new(), &mut out);
    out
}

/// Last part below `p` and every successive difference below `p`.
pub fn is_p_restricted(l: &Partition, p: u32) -> bool {
    let n = l.len();
    (0..n).all(|i| l.part(i) - l.part(i + 1) < p)
}

/// No part repeated `p` or more times.
pub fn is_p_regular(l: &Partition, p: u32) -> bool {
    let mut run = 0;
    for i in 0..l.len() {
        run = if i > 0 && l.part(i) == l.part(i - 1) {
            run + 1
        } else {
            1
        };
        if run >= p {
            return false;
        }
    }
    true
}

/// The decomposition λ = Σ p^i λ(i) with every λ(i) p-restricted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PAdicExpansion {
    pub p: u32,
    /// λ(0), …, λ(t); never empty, trailing empty terms are trimmed.
    pub terms: Vec<Partition>,
}

impl PAdicExpansion {
    /// Σ p^i λ(i).
    pub fn recombine(&self) -> Partition {
        let mut acc = Partition::empty();
        let mut pw = 1u32;
        for t in &self.terms {
            acc = add(&acc, &scale(t, pw));
            pw *= self.p;
        }
        acc
    }

    /// Index of the last term.
    pub fn top(&self) -> usize {
        self.terms.len() - 1
    }
}

impl fmt::Display for PAdicExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut pw = 1u64;
        let mut first = true;
        for t in &self.terms {
            if !t.is_empty() || self.terms.len() == 1 {
                if !first {
                    f.write_str(" + ")?;
                }
                if pw > 1 {
                    write!(f, "{pw}·")?;
                }
                write!(f, "({t})")?;
                first = false;
            }
            pw *= self.p as u64;
        }
        Ok(())
    }
}

/// Splits every difference λ_j − λ_{j+1} into base-p digits a_{i,j} and sets
/// λ(i)_k = Σ_{j ≥ k} a_{i,j}.
///
/// # Panics
/// If `p < 2`.
pub fn p_adic_expansion(l: &Partition, p: u32) -> PAdicExpansion {
    assert!(p >= 2, "base must be at least 2");
    let r = l.len();
    // digits[i][j] = a_{i,j}
    let mut digits: Vec<Vec<u32>> = Vec::new();
    for j in 0..r {
        let mut d = l.part(j) - l.part(j + 1);
        let mut i = 0;
        while d > 0 {
            if digits.len() <= i {
                digits.push(vec![0; r]);
            }
            digits[i][j] = d % p;
            d /= p;
            i += 1;
        }
    }
    let mut terms: Vec<Partition> = digits
        .iter()
        .map(|a| {
            let mut parts = vec![0u32; r];
            let mut acc = 0;
            for k in (0..r).rev() {
                acc += a[k];
                parts[k] = acc;
            }
            Partition::new(parts).expect("suffix sums are decreasing")
        })
        .collect();
    if terms.is_empty() {
        terms.push(Partition::empty());
    }
    PAdicExpansion { p, terms }
}

/// Beta-numbers λ_i + ℓ − i for i = 1..ℓ, strictly decreasing.
pub(crate) fn beta_numbers(l: &Partition) -> Vec<u32> {
    let r = l.len() as u32;
    l.parts()
        .iter()
        .enumerate()
        .map(|(i, &x)| x + r - 1 - i as u32)
        .collect()
}

/// Inverse of [`beta_numbers`] for any set of distinct naturals.
pub(crate) fn from_beta_numbers(beta: &[u32]) -> Partition {
    let mut b = beta.to_vec();
    b.sort_unstable_by(|x, y| y.cmp(x));
    let r = b.len() as u32;
    Partition::from_unsorted(
        b.iter()
            .enumerate()
            .map(|(i, &x)| x + 1 + i as u32 - r)
            .collect(),
    )
}

/// Indices into `beta` of beads that can slide down by `p` (one per removable rim p-hook).
pub(crate) fn rim_hook_moves(beta: &[u32], p: u32) -> Vec<usize> {
    (0..beta.len())
        .filter(|&i| beta[i] >= p && !beta.contains(&(beta[i] - p)))
        .collect()
}

/// The p-core κ_p(λ) and the p-weight w, with |λ| = |κ_p(λ)| + p·w.
///
/// Rim hooks are removed one at a time, always the one whose hand node is highest.
pub fn p_core_and_weight(l: &Partition, p: u32) -> (Partition, u32) {
    assert!(p >= 2, "hook length must be at least 2");
    let mut beta = beta_numbers(l);
    let mut w = 0;
    loop {
        // beta is decreasing, so the first movable bead is the highest hand node
        match rim_hook_moves(&beta, p).first() {
            Some(&i) => {
                beta[i] -= p;
                w += 1;
            }
            None => return (from_beta_numbers(&beta), w),
        }
    }
}

pub fn conjugate(l: &Partition) -> Partition {
    l.conjugate()
}
