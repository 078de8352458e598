//! Rank of dense matrices over the prime field F_p.

use rayon::prelude::*;

/// Rows below this count are eliminated on the calling thread.
const PAR_ROWS: usize = 384;

/// A dense square-or-rectangular matrix with entries already reduced mod p.
pub struct FpMatrix {
    p: u32,
    cols: usize,
    rows: Vec<Vec<u8>>,
}

impl FpMatrix {
    /// Zero matrix. Requires `p < 128` so that a sum of two residues fits in a byte.
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        assert!((2..128).contains(&p));
        FpMatrix {
            p,
            cols,
            rows: vec![vec![0; cols]; rows],
        }
    }

    /// Wraps rows of residues, all of length `cols`.
    pub fn from_rows(p: u32, cols: usize, rows: Vec<Vec<u8>>) -> Self {
        assert!((2..128).contains(&p));
        debug_assert!(rows
            .iter()
            .all(|r| r.len() == cols && r.iter().all(|&x| (x as u32) < p)));
        FpMatrix { p, cols, rows }
    }

    /// Adds `v` (already reduced) to entry (i, j).
    #[inline]
    pub fn add(&mut self, i: usize, j: usize, v: u8) {
        let s = self.rows[i][j] + v;
        self.rows[i][j] = s.min(s.wrapping_sub(self.p as u8));
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.rows[i][j]
    }

    pub fn rank(self) -> usize {
        if self.p == 2 {
            rank_gf2(&self.rows, self.cols)
        } else {
            rank_small(self.p as u8, self.rows, self.cols)
        }
    }
}

fn inverse(a: u32, p: u32) -> u32 {
    // Fermat
    let (mut base, mut e, mut acc) = (a % p, p - 2, 1u32);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

fn rank_small(p: u8, mut rows: Vec<Vec<u8>>, cols: usize) -> usize {
    let mut rank = 0;
    let pw = p as u32;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let (done, rest) = rows.split_at_mut(rank + 1);
        let pivot = &mut done[rank][c..];
        let inv = inverse(pivot[0] as u32, pw);
        for x in pivot.iter_mut() {
            *x = ((*x as u32 * inv) % pw) as u8;
        }
        // multiples[k] = k * pivot, so that row += multiples[p - e] clears entry e
        let multiples: Vec<Vec<u8>> = (0..p)
            .map(|k| {
                pivot
                    .iter()
                    .map(|&x| ((x as u32 * k as u32) % pw) as u8)
                    .collect()
            })
            .collect();
        let clear = |row: &mut Vec<u8>| {
            let e = row[c];
            if e != 0 {
                let m = &multiples[(p - e) as usize];
                for (x, &y) in row[c..].iter_mut().zip(m.iter()) {
                    let s = *x + y;
                    *x = s.min(s.wrapping_sub(p));
                }
            }
        };
        if rest.len() >= PAR_ROWS {
            rest.par_iter_mut().for_each(clear);
        } else {
            rest.iter_mut().for_each(clear);
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

fn rank_gf2(rows: &[Vec<u8>], cols: usize) -> usize {
    let words = cols.div_ceil(64);
    let mut bits: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            let mut w = vec![0u64; words];
            for (j, &x) in r.iter().enumerate() {
                if x & 1 == 1 {
                    w[j / 64] |= 1 << (j % 64);
                }
            }
            w
        })
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        let (wi, bit) = (c / 64, 1u64 << (c % 64));
        let Some(piv) = (rank..bits.len()).find(|&r| bits[r][wi] & bit != 0) else {
            continue;
        };
        bits.swap(rank, piv);
        let (done, rest) = bits.split_at_mut(rank + 1);
        let pivot = &done[rank][wi..];
        let clear = |row: &mut Vec<u64>| {
            if row[wi] & bit != 0 {
                for (x, &y) in row[wi..].iter_mut().zip(pivot) {
                    *x ^= y;
                }
            }
        };
        if rest.len() >= PAR_ROWS {
            rest.par_iter_mut().for_each(clear);
        } else {
            rest.iter_mut().for_each(clear);
        }
        rank += 1;
        if rank == bits.len() {
            break;
        }
    }
    rank
}
