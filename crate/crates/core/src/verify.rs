//! Suites of numerical identities checked exhaustively over fixed grids, with
//! every counterexample reported in full.

use std::collections::BTreeMap;
use std::fmt::{self, Display};
use std::str::FromStr;
use std::sync::Arc;

use num_traits::Zero;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::config::{check_ceiling, default_table_ceiling};
use crate::error::{check_prime, Error, Result};
use crate::kostka::p_kostka;
use crate::mullineux::mullineux_restricted;
use crate::orbit_numbers::{
    build_tables, m_number, m_oracle, orbit_number, y_canonical_product, y_hook_closed_form,
    y_two_part_closed_form, OrbitNumberTable,
};
use crate::orbit_type::{
    canonical_orbit_type, orbit_types, refines_up_to_rearrangement, OrbitType,
};
use crate::partition::{add, is_p_restricted, p_adic_expansion, partitions, scale, Partition};

/// Size grids that stay below these bounds unless the ceiling is overridden.
const MULLINEUX_CEILING: u32 = 8;
const GILL_CEILING: u32 = 5;
const REDUCTIONS_CEILING: u32 = 6;
/// Fixed second-size and row-length ranges of the Gill and reduction grids.
const GILL_SECOND: u32 = 3;
const GILL_ROW: u32 = 2;
const REDUCTIONS_SECOND: u32 = 4;
/// Exponent and flag choices per partition above which a sample is taken.
const MULLINEUX_SAMPLE: usize = 200;
const MULLINEUX_SEED: u64 = 0x6d75_6c6c;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Gill,
    Reductions,
    NonzeroPattern,
    CanonicalProduct,
    MullineuxInvariance,
    ClosedForms,
    OracleM,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Gill,
        Suite::Reductions,
        Suite::NonzeroPattern,
        Suite::CanonicalProduct,
        Suite::MullineuxInvariance,
        Suite::ClosedForms,
        Suite::OracleM,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Gill => "gill",
            Suite::Reductions => "reductions",
            Suite::NonzeroPattern => "nonzero-pattern",
            Suite::CanonicalProduct => "canonical-product",
            Suite::MullineuxInvariance => "mullineux-invariance",
            Suite::ClosedForms => "closed-forms",
            Suite::OracleM => "oracle-m",
        }
    }

    fn default_ceiling(self, p: u32) -> u32 {
        match self {
            Suite::Gill => GILL_CEILING,
            Suite::Reductions => REDUCTIONS_CEILING,
            Suite::MullineuxInvariance => MULLINEUX_CEILING,
            _ => default_table_ceiling(p),
        }
    }
}

impl Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s.trim())
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
                Error::InvalidInput(format!(
                    "unknown suite {s:?}; expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

/// A failed case: enough to replay it in isolation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    pub instance: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: Suite,
    pub p: u32,
    pub bounds: BTreeMap<String, u32>,
    pub cases: u64,
    /// Sorted, so identical runs give identical reports.
    pub failures: Vec<Failure>,
    pub pass: bool,
}

type Outcome = Option<Failure>;

fn fail(instance: String, expected: impl Display, actual: impl Display) -> Outcome {
    Some(Failure {
        instance,
        expected: expected.to_string(),
        actual: actual.to_string(),
    })
}

/// Compares two computed values; an error on either side is a failure.
fn compare<A: Display + PartialEq>(
    instance: impl FnOnce() -> String,
    expected: Result<A>,
    actual: Result<A>,
) -> Outcome {
    match (expected, actual) {
        (Ok(e), Ok(a)) if e == a => None,
        (e, a) => fail(instance(), show(e), show(a)),
    }
}

fn show<A: Display>(r: Result<A>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

/// Runs one suite at prime `p` over sizes 1..=`n_max`.
///
/// For `gill` and `reductions`, `n_max` bounds the size m of the first
/// partition; the second size and the row length use the fixed grid ranges
/// recorded in the report bounds.
pub fn run_suite(suite: Suite, p: u32, n_max: u32) -> Result<VerificationReport> {
    check_prime(p)?;
    check_ceiling(&format!("verify {suite}"), n_max, suite.default_ceiling(p))?;
    let mut bounds = BTreeMap::new();
    let outcomes = match suite {
        Suite::OracleM => {
            bounds.insert("n_max".into(), n_max);
            oracle_m(p, n_max)
        }
        Suite::NonzeroPattern => {
            bounds.insert("n_max".into(), n_max);
            nonzero_pattern(p, n_max)
        }
        Suite::CanonicalProduct => {
            bounds.insert("n_max".into(), n_max);
            canonical_product(p, n_max)
        }
        Suite::ClosedForms => {
            bounds.insert("n_max".into(), n_max);
            closed_forms(p, n_max)
        }
        Suite::MullineuxInvariance => {
            bounds.insert("n_max".into(), n_max);
            bounds.insert("sample_above".into(), MULLINEUX_SAMPLE as u32);
            mullineux_invariance(p, n_max)
        }
        Suite::Gill => {
            bounds.insert("m_max".into(), n_max);
            bounds.insert("n_max".into(), GILL_SECOND);
            bounds.insert("r_max".into(), GILL_ROW);
            gill(p, n_max)
        }
        Suite::Reductions => {
            bounds.insert("m_max".into(), n_max);
            bounds.insert("n_max".into(), REDUCTIONS_SECOND);
            reductions(p, n_max)
        }
    };
    let cases = outcomes.len() as u64;
    let mut failures: Vec<Failure> = outcomes.into_iter().flatten().collect();
    failures.sort();
    Ok(VerificationReport {
        suite,
        p,
        bounds,
        cases,
        pass: failures.is_empty(),
        failures,
    })
}

fn pairs(n: u32, p: u32) -> Vec<(Partition, OrbitType)> {
    let os = orbit_types(n, p);
    partitions(n)
        .into_iter()
        .flat_map(|l| os.iter().map(move |o| (l.clone(), o.clone())))
        .collect()
}

fn oracle_m(p: u32, n_max: u32) -> Vec<Outcome> {
    let all: Vec<_> = (1..=n_max).flat_map(|n| pairs(n, p)).collect();
    all.par_iter()
        .map(|(l, o)| {
            compare(
                || format!("lambda=({l}) O={o}"),
                m_oracle(l, o),
                m_number(l, o),
            )
        })
        .collect()
}

/// Applies `f` to the table for (n, p); a table that fails to build is one
/// failed case.
fn with_table(n: u32, p: u32, f: impl Fn(&OrbitNumberTable) -> Vec<Outcome>) -> Vec<Outcome> {
    match build_tables(n, p) {
        Ok(t) => f(&t),
        Err(e) => vec![fail(
            format!("tables n={n}"),
            "consistent table",
            format!("error: {e}"),
        )],
    }
}

fn y_in(t: &OrbitNumberTable, l: &Partition, o: &OrbitType) -> crate::BigNat {
    t.y_at(l, o)
        .expect("table covers all partitions and orbit types")
        .clone()
}

fn nonzero_pattern(p: u32, n_max: u32) -> Vec<Outcome> {
    (1..=n_max)
        .flat_map(|n| {
            with_table(n, p, |t| {
                pairs(n, p)
                    .par_iter()
                    .map(|(l, o)| {
                        let canon = canonical_orbit_type(l, p);
                        let y = y_in(t, l, o);
                        let floor = y_in(t, l, &canon);
                        let inst = || format!("lambda=({l}) O={o} O_lambda={canon}");
                        match refines_up_to_rearrangement(o, &canon) {
                            Err(e) => fail(inst(), "refinement test", format!("error: {e}")),
                            Ok(true) if y.is_zero() || y < floor => {
                                fail(inst(), format!(">= {floor}, nonzero"), y)
                            }
                            Ok(false) if !y.is_zero() => fail(inst(), 0, y),
                            Ok(_) => None,
                        }
                    })
                    .collect()
            })
        })
        .collect()
}

fn canonical_product(p: u32, n_max: u32) -> Vec<Outcome> {
    (1..=n_max)
        .flat_map(|n| {
            with_table(n, p, |t| {
                t.rows
                    .par_iter()
                    .map(|l| {
                        let o = canonical_orbit_type(l, p);
                        compare(
                            || format!("lambda=({l}) O_lambda={o}"),
                            y_canonical_product(l, p),
                            Ok(y_in(t, l, &o)),
                        )
                    })
                    .collect()
            })
        })
        .collect()
}

fn closed_forms(p: u32, n_max: u32) -> Vec<Outcome> {
    (2..=n_max)
        .flat_map(|n| {
            let hook = Partition::from_unsorted(vec![n - 1, 1]);
            let mut out: Vec<Outcome> = orbit_types(n, p)
                .iter()
                .map(|o| {
                    compare(
                        || format!("hook n={n} O={o}"),
                        y_hook_closed_form(n, o, p),
                        orbit_number(&hook, o, p),
                    )
                })
                .collect();
            for b in 1..=n / 2 {
                let l = Partition::from_unsorted(vec![n - b, b]);
                let o = canonical_orbit_type(&l, p);
                out.push(compare(
                    || format!("two-part lambda=({l}) O_lambda={o}"),
                    y_two_part_closed_form(&l, p),
                    orbit_number(&l, &o, p),
                ));
            }
            out
        })
        .collect()
}

/// Σ_i p^{k_i} m^{ℓ_i}(λ(i)) over the nonempty terms of the expansion.
fn rearranged(terms: &[&Partition], exps: &[u32], flags: &[bool], p: u32) -> Result<Partition> {
    let mut acc = Partition::empty();
    for ((t, &k), &f) in terms.iter().zip(exps).zip(flags) {
        let piece = if f {
            mullineux_restricted(t, p)?
        } else {
            (*t).clone()
        };
        acc = add(&acc, &scale(&piece, p.pow(k)));
    }
    Ok(acc)
}

/// All injective exponent assignments into 0..=e_max with all flag vectors,
/// in a fixed order, as (exponents, flags).
fn choices(j: usize, e_max: u32) -> Vec<(Vec<u32>, Vec<bool>)> {
    fn injections(j: usize, e_max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == j {
            out.push(cur.clone());
            return;
        }
        for k in 0..=e_max {
            if !cur.contains(&k) {
                cur.push(k);
                injections(j, e_max, cur, out);
                cur.pop();
            }
        }
    }
    let mut exps = Vec::new();
    injections(j, e_max, &mut Vec::new(), &mut exps);
    let mut out = Vec::new();
    for e in exps {
        for mask in 0..1u32 << j {
            out.push((e.clone(), (0..j).map(|i| mask >> i & 1 == 1).collect()));
        }
    }
    out
}

fn mullineux_invariance(p: u32, n_max: u32) -> Vec<Outcome> {
    let all: Vec<Partition> = (1..=n_max).flat_map(partitions).collect();
    all.par_iter()
        .flat_map_iter(|l| {
            let mut out = Vec::new();
            if is_p_restricted(l, p) {
                let m = mullineux_restricted(l, p);
                let back = m
                    .as_ref()
                    .map_err(Clone::clone)
                    .and_then(|m| mullineux_restricted(m, p));
                out.push(compare(
                    || format!("involution lambda=({l})"),
                    Ok(l.clone()),
                    back,
                ));
                if p == 2 {
                    out.push(compare(
                        || format!("identity at p=2 lambda=({l})"),
                        Ok(l.clone()),
                        m.clone(),
                    ));
                }
                if p > l.size() {
                    out.push(compare(
                        || format!("conjugation for p>n lambda=({l})"),
                        Ok(l.conjugate()),
                        m,
                    ));
                }
            }
            let e = p_adic_expansion(l, p);
            let terms: Vec<&Partition> = e.terms.iter().filter(|t| !t.is_empty()).collect();
            let e_max = e.top() as u32 + 1;
            let mut cs = choices(terms.len(), e_max);
            if cs.len() > MULLINEUX_SAMPLE {
                let mut rng = ChaCha8Rng::seed_from_u64(MULLINEUX_SEED);
                let mut keep = sample(&mut rng, cs.len(), MULLINEUX_SAMPLE).into_vec();
                keep.sort_unstable();
                cs = keep.into_iter().map(|i| cs[i].clone()).collect();
            }
            let lhs = orbit_number(l, &canonical_orbit_type(l, p), p);
            for (exps, flags) in cs {
                let mu = rearranged(&terms, &exps, &flags, p);
                let inst = || {
                    let fl: Vec<u8> = flags.iter().map(|&f| f as u8).collect();
                    let mu = mu.as_ref().map(|m| m.to_string()).unwrap_or_default();
                    format!("lambda=({l}) exponents={exps:?} flags={fl:?} mu=({mu})")
                };
                let rhs = mu
                    .clone()
                    .and_then(|m| orbit_number(&m, &canonical_orbit_type(&m, p), p));
                out.push(compare(inst, lhs.clone(), rhs));
            }
            out
        })
        .collect()
}

/// Smallest s with p^s > x.
fn exceeding_power(x: u32, p: u32) -> u32 {
    let mut s = 0;
    while p.pow(s) <= x {
        s += 1;
    }
    s
}

fn gill(p: u32, m_max: u32) -> Vec<Outcome> {
    let mut quads = Vec::new();
    for m in 1..=m_max {
        let pm = partitions(m);
        for l in &pm {
            for mu in &pm {
                quads.push((l.clone(), mu.clone()));
            }
        }
    }
    quads
        .par_iter()
        .flat_map_iter(|(l, mu)| {
            let mut out = Vec::new();
            let base = p_kostka(l, mu, p);
            // product rule: s > top index of μ's expansion and p^s > λ_1
            let s0 = exceeding_power(l.part(0), p).max(p_adic_expansion(mu, p).top() as u32 + 1);
            for n in 1..=GILL_SECOND {
                let pn = partitions(n);
                for nu in &pn {
                    for de in &pn {
                        let second = p_kostka(nu, de, p);
                        for s in [s0, s0 + 1] {
                            let q = p.pow(s);
                            let expected = base.clone().and_then(|b| second.clone().map(|c| b * c));
                            let actual = p_kostka(&add(l, &scale(nu, q)), &add(mu, &scale(de, q)), p);
                            out.push(compare(
                                || format!("product lambda=({l}) mu=({mu}) nu=({nu}) delta=({de}) s={s}"),
                                expected,
                                actual,
                            ));
                        }
                    }
                }
            }
            // first-row rule: p^s > λ_2
            let s1 = exceeding_power(l.part(1), p);
            for r in 1..=GILL_ROW {
                for s in [s1, s1 + 1] {
                    let row = Partition::row(p.pow(s) * r);
                    out.push(compare(
                        || format!("first-row lambda=({l}) mu=({mu}) r={r} s={s}"),
                        base.clone(),
                        p_kostka(&add(l, &row), &add(mu, &row), p),
                    ));
                }
            }
            out
        })
        .collect()
}

/// One first-size grid point of the reduction suite: λ ⊢ m and O of size m.
struct Base {
    l: Partition,
    o: OrbitType,
}

fn reductions(p: u32, m_max: u32) -> Vec<Outcome> {
    let bases: Vec<Base> = (1..=m_max)
        .flat_map(|m| pairs(m, p))
        .map(|(l, o)| Base { l, o })
        .collect();
    let seconds: Vec<(Partition, OrbitType)> =
        (1..=REDUCTIONS_SECOND).flat_map(|n| pairs(n, p)).collect();
    let second_types: Vec<(u32, OrbitType)> = (1..=REDUCTIONS_SECOND)
        .flat_map(|n| orbit_types(n, p).into_iter().map(move |o| (n, o)))
        .collect();
    let y = |l: &Partition, o: &OrbitType| orbit_number(l, o, p);
    let m = |l: &Partition, o: &OrbitType| m_number(l, o);

    bases
        .par_iter()
        .flat_map_iter(|Base { l, o }| {
            let size = l.size();
            let s = exceeding_power(size, p);
            let mut out = Vec::new();
            for (mu, o2) in &seconds {
                // size-based splitting: p^s > m
                let big = |t: u32| {
                    (
                        add(l, &scale(mu, p.pow(t))),
                        o.concat(&o2.scale(t as usize)),
                    )
                };
                for t in [s, s + 1] {
                    let (lt, ot) = big(t);
                    let prod = m(l, o).and_then(|a| m(mu, o2).map(|b| a * b));
                    out.push(compare(
                        || format!("m-product lambda=({l}) O={o} mu=({mu}) O'={o2} s={t}"),
                        prod,
                        m(&lt, &ot),
                    ));
                }
                let ((ls, os), (lt, ot)) = (big(s), big(s + 1));
                out.push(compare(
                    || {
                        format!(
                            "stability lambda=({l}) O={o} mu=({mu}) O'={o2} s={s} t={}",
                            s + 1
                        )
                    },
                    y(&ls, &os),
                    y(&lt, &ot),
                ));
            }
            // shape-based: the added block is a single first row
            for (n, o2) in &second_types {
                let n = *n;
                let s_row = exceeding_power(size - l.part(0), p);
                for t in [s_row, s_row + 1] {
                    let row = add(l, &Partition::row(p.pow(t) * n));
                    let ot = o.concat(&o2.scale(t as usize));
                    out.push(compare(
                        || format!("row-stretch lambda=({l}) O={o} n={n} O'={o2} s={t}"),
                        y(l, o),
                        y(&row, &ot),
                    ));
                    out.extend(row_support(l, &row, &ot, n, t, p));
                }
                let s_m = exceeding_power(l.part(1), p);
                for t in [s_m, s_m + 1] {
                    let row = add(l, &Partition::row(p.pow(t) * n));
                    out.push(compare(
                        || format!("m-row lambda=({l}) O={o} n={n} O'={o2} s={t}"),
                        m(l, o),
                        m(&row, &o.concat(&o2.scale(t as usize))),
                    ));
                }
            }
            out
        })
        .chain(size_support(p, m_max))
        .collect()
}

/// Every τ with y_{τ, O•p^sO'} ≠ 0 and p^s > m splits as ν + p^sδ with
/// ν ⊢ m and δ ⊢ n, where ν collects the expansion terms below level s.
fn size_support(p: u32, m_max: u32) -> Vec<Outcome> {
    let mut cols = Vec::new();
    for m in 1..=m_max {
        let s = exceeding_power(m, p);
        for o in orbit_types(m, p) {
            for n in 1..=REDUCTIONS_SECOND {
                for o2 in orbit_types(n, p) {
                    for t in [s, s + 1] {
                        cols.push((m, n, t, o.concat(&o2.scale(t as usize))));
                    }
                }
            }
        }
    }
    cols.par_iter()
        .flat_map_iter(|(m, n, t, col)| {
            let inst =
                |tau: &Partition| format!("size-support O''={col} tau=({tau}) m={m} n={n} s={t}");
            match crate::orbit_numbers::column_values(col) {
                Err(e) => vec![fail(
                    format!("size-support O''={col}"),
                    "solvable column",
                    format!("error: {e}"),
                )],
                Ok(vals) => {
                    let mut taus: Vec<&Partition> = vals
                        .iter()
                        .filter(|(_, y)| !y.is_zero())
                        .map(|(k, _)| k)
                        .collect();
                    taus.sort();
                    taus.into_iter()
                        .map(|tau| {
                            let e = p_adic_expansion(tau, p);
                            let low: u32 = e
                                .terms
                                .iter()
                                .take(*t as usize)
                                .enumerate()
                                .map(|(i, x)| p.pow(i as u32) * x.size())
                                .sum();
                            (low != *m).then(|| Failure {
                                instance: inst(tau),
                                expected: format!("lower part of size {m}"),
                                actual: format!("lower part of size {low}"),
                            })
                        })
                        .collect()
                }
            }
        })
        .collect()
}

/// Every τ ▷ λ + (p^s n) with y_{τ,O''} ≠ 0 is ν + (p^s n) for a partition ν.
fn row_support(
    l: &Partition,
    stretched: &Partition,
    col: &OrbitType,
    n: u32,
    s: u32,
    p: u32,
) -> Vec<Outcome> {
    let vals: Arc<_> = match crate::orbit_numbers::column_values(col) {
        Ok(v) => v,
        Err(e) => {
            return vec![fail(
                format!("row-support O''={col}"),
                "solvable column",
                format!("error: {e}"),
            )]
        }
    };
    let shift = p.pow(s) * n;
    let mut taus: Vec<&Partition> = vals
        .iter()
        .filter(|(tau, y)| {
            !y.is_zero() && *tau != stretched && crate::partition::dominates(tau, stretched)
        })
        .map(|(k, _)| k)
        .collect();
    taus.sort();
    taus.into_iter()
        .map(|tau| {
            let first = tau.part(0);
            if first >= shift && first - shift >= tau.part(1) {
                None
            } else {
                fail(
                    format!("row-support lambda=({l}) O''={col} tau=({tau}) n={n} s={s}"),
                    format!("first row at least {} + second row", shift),
                    format!("first row {first}"),
                )
            }
        })
        .collect()
}
