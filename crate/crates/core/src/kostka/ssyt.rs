//! Semistandard tableaux: counting and enumeration.

use std::collections::HashMap;

/// Number of SSYT of shape `shape` with content `content` (zeros allowed).
///
/// Peels off the largest entry as a horizontal strip, memoized on the
/// remaining shape and the number of content entries left.
pub(crate) fn count(shape: &[u32], content: &[u32]) -> u64 {
    let content: Vec<u32> = content.iter().copied().filter(|&x| x > 0).collect();
    if shape.iter().sum::<u32>() != content.iter().sum::<u32>() {
        return 0;
    }
    let mut memo = HashMap::new();
    count_rec(shape.to_vec(), &content, &mut memo)
}

fn count_rec(shape: Vec<u32>, content: &[u32], memo: &mut HashMap<(Vec<u32>, usize), u64>) -> u64 {
    let Some((&last, rest)) = content.split_last() else {
        return u64::from(shape.is_empty());
    };
    // a tableau with k distinct entries has at most k rows
    if shape.len() > content.len() {
        return 0;
    }
    if rest.is_empty() {
        return u64::from(shape.len() == 1 && shape[0] == last);
    }
    let key = (shape, content.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let shape = key.0.clone();
    let mut total = 0;
    for inner in strips_below(&shape, last) {
        total += count_rec(inner, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// All ν ⊆ shape with shape/ν a horizontal strip of `size` cells.
fn strips_below(shape: &[u32], size: u32) -> Vec<Vec<u32>> {
    fn go(shape: &[u32], i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == shape.len() {
            if left == 0 {
                let mut v = cur.clone();
                while v.last() == Some(&0) {
                    v.pop();
                }
                out.push(v);
            }
            return;
        }
        let floor = shape.get(i + 1).copied().unwrap_or(0);
        let hi = shape[i];
        // remaining rows can absorb at most this many cells
        let cap: u32 = (i + 1..shape.len())
            .map(|k| shape[k] - shape.get(k + 1).copied().unwrap_or(0))
            .sum();
        for keep in (floor..=hi).rev() {
            let take = hi - keep;
            if take > left {
                break;
            }
            if left - take > cap {
                continue;
            }
            cur.push(keep);
            go(shape, i + 1, left - take, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(shape, 0, size, &mut Vec::new(), &mut out);
    out
}

/// An SSYT stored as `rows[r][v]` = number of entries equal to v in row r.
pub(crate) type RowCounts = Vec<Vec<u8>>;

/// All SSYT of shape `shape` and content `content`, with entries 0..content.len().
pub(crate) fn enumerate(shape: &[u32], content: &[u32]) -> Vec<RowCounts> {
    let k = content.len();
    let r = shape.len();
    let mut out = Vec::new();
    let mut cur = vec![vec![0u8; k]; r];
    let filled = vec![0u32; r];
    fill(shape, content, 0, &filled, &mut cur, &mut out);
    out
}

fn fill(
    shape: &[u32],
    content: &[u32],
    v: usize,
    filled: &[u32],
    cur: &mut RowCounts,
    out: &mut Vec<RowCounts>,
) {
    if v == content.len() {
        if filled == shape {
            out.push(cur.clone());
        }
        return;
    }
    let mut next = filled.to_vec();
    place(
        shape, content, v, filled, 0, content[v], &mut next, cur, out,
    );
}

#[allow(clippy::too_many_arguments)]
fn place(
    shape: &[u32],
    content: &[u32],
    v: usize,
    filled: &[u32],
    row: usize,
    left: u32,
    next: &mut Vec<u32>,
    cur: &mut RowCounts,
    out: &mut Vec<RowCounts>,
) {
    if row == shape.len() || row > v {
        if left == 0 {
            fill(shape, content, v + 1, next, cur, out);
        }
        return;
    }
    // horizontal strip: row may grow up to the old length of the row above
    let cap = if row == 0 {
        shape[0]
    } else {
        shape[row].min(filled[row - 1])
    };
    let room = cap.saturating_sub(filled[row]);
    for take in (0..=room.min(left)).rev() {
        next[row] = filled[row] + take;
        cur[row][v] = take as u8;
        place(
            shape,
            content,
            v,
            filled,
            row + 1,
            left - take,
            next,
            cur,
            out,
        );
    }
    next[row] = filled[row];
    cur[row][v] = 0;
}
