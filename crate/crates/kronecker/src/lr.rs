//! Horizontal strips and Littlewood-Richardson coefficients.
//!
//! Coefficients are computed by exhaustive enumeration of column-strict skew
//! fillings with the lattice-word check; weights stay small enough here that
//! nothing fancier is warranted.

use crate::partition::Partition;

/// Strip length |outer| - |inner| when outer/inner is a horizontal strip
/// (inner fits inside outer and adjacent rows interleave), else None.
pub fn horizontal_strip_len(outer: &Partition, inner: &Partition) -> Option<u32> {
    if !outer.contains(inner) {
        return None;
    }
    let n = outer.nonzero_len();
    for i in 1..n {
        if outer.part(i + 1) > inner.part(i) {
            return None;
        }
    }
    Some(outer.weight() - inner.weight())
}

/// All partitions obtained from `lambda` by adding a horizontal strip of t boxes.
pub fn strip_extensions(lambda: &Partition, t: u32) -> Vec<Partition> {
    let rows = lambda.nonzero_len() + 1;
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::with_capacity(rows);
    fn rec(lambda: &Partition, row: usize, rows: usize, rem: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if row > rows {
            if rem == 0 {
                out.push(Partition::new(cur.iter().copied().filter(|&x| x > 0).collect()));
            }
            return;
        }
        let lo = lambda.part(row);
        // row 1 is unbounded above except by the remaining boxes
        let hi = if row == 1 {
            lo + rem
        } else {
            lambda.part(row - 1).min(lo + rem)
        };
        for v in lo..=hi {
            cur.push(v);
            rec(lambda, row + 1, rows, rem - (v - lo), cur, out);
            cur.pop();
        }
    }
    rec(lambda, 1, rows, t, &mut cur, &mut out);
    out.sort();
    out.dedup();
    out
}

/// All partitions obtained from `lambda` by removing a horizontal strip of t boxes.
pub fn strip_restrictions(lambda: &Partition, t: u32) -> Vec<Partition> {
    let rows = lambda.nonzero_len();
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::with_capacity(rows);
    fn rec(lambda: &Partition, row: usize, rows: usize, rem: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if row > rows {
            if rem == 0 {
                out.push(Partition::new(cur.iter().copied().filter(|&x| x > 0).collect()));
            }
            return;
        }
        let hi = lambda.part(row);
        let lo = lambda.part(row + 1).max(hi.saturating_sub(rem));
        for v in lo..=hi {
            cur.push(v);
            rec(lambda, row + 1, rows, rem - (hi - v), cur, out);
            cur.pop();
        }
    }
    rec(lambda, 1, rows, t, &mut cur, &mut out);
    out.sort();
    out.dedup();
    out
}

/// Littlewood-Richardson coefficient c^nu_{lambda,mu}.
pub fn lr_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.weight() != lambda.weight() + mu.weight() || !nu.contains(lambda) {
        return 0;
    }
    let rows = nu.nonzero_len();
    let vals = mu.nonzero_len();
    // cells of nu/lambda in reading-word order: rows top to bottom, each row
    // right to left. For each cell remember (row, col).
    let mut cells = Vec::new();
    for r in 1..=rows {
        let lo = lambda.part(r);
        let hi = nu.part(r);
        for c in (lo..hi).rev() {
            cells.push((r, c));
        }
    }
    let mut grid = vec![vec![0u32; nu.part(1) as usize]; rows];
    let mut counts = vec![0u32; vals + 1];
    fn rec(
        cells: &[(usize, u32)],
        idx: usize,
        lambda: &Partition,
        mu: &Partition,
        vals: usize,
        grid: &mut Vec<Vec<u32>>,
        counts: &mut Vec<u32>,
        total: &mut u64,
    ) {
        if idx == cells.len() {
            *total += 1;
            return;
        }
        let (r, c) = cells[idx];
        // row weakly increasing: bounded above by the right neighbor
        let right = if c + 1 < grid[r - 1].len() as u32 && grid[r - 1][(c + 1) as usize] != 0 {
            grid[r - 1][(c + 1) as usize]
        } else {
            vals as u32
        };
        // column strict: bounded below by the cell above (if in the skew shape
        // it is already filled; if inside lambda there is no constraint)
        let above = if r >= 2 && c >= lambda.part(r - 1) {
            grid[r - 2][c as usize]
        } else {
            0
        };
        for v in (above + 1)..=right {
            if counts[v as usize] + 1 > mu.part(v as usize) {
                continue;
            }
            // lattice word: after this placement #v <= #(v-1)
            if v >= 2 && counts[v as usize] + 1 > counts[v as usize - 1] {
                continue;
            }
            grid[r - 1][c as usize] = v;
            counts[v as usize] += 1;
            rec(cells, idx + 1, lambda, mu, vals, grid, counts, total);
            counts[v as usize] -= 1;
            grid[r - 1][c as usize] = 0;
        }
    }
    let mut total = 0u64;
    rec(&cells, 0, lambda, mu, vals, &mut grid, &mut counts, &mut total);
    total
}

/// All nu with c^nu_{lambda,mu} > 0.
pub fn lr_expansions(lambda: &Partition, mu: &Partition) -> Vec<Partition> {
    let w = lambda.weight() + mu.weight();
    let max_len = lambda.nonzero_len() + mu.nonzero_len();
    let mut out: Vec<Partition> = Partition::all_of_bounded(w, lambda.part(1) + mu.part(1), max_len.max(1))
        .into_iter()
        .filter(|nu| lr_coeff(lambda, mu, nu) > 0)
        .collect();
    out.sort();
    out
}
