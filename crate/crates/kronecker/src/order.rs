//! Dominance, weighted dominance and generalized majorization.
//!
//! The index conventions follow the usual matrix-pencil literature: `b` has m
//! parts, `c` has m+n parts, and out-of-range entries act as +inf (index <= 0)
//! or -inf (index past the recorded length). All guards are explicit so the
//! arithmetic stays in bounded integers.

use crate::error::Precondition;
use crate::partition::Partition;

/// Prefix-sum comparison, padding the shorter vector with zeros.
pub fn dominance_leq(a: &[i64], b: &[i64]) -> bool {
    let n = a.len().max(b.len());
    let mut sa = 0i64;
    let mut sb = 0i64;
    for i in 0..n {
        sa += a.get(i).copied().unwrap_or(0);
        sb += b.get(i).copied().unwrap_or(0);
        if sa > sb {
            return false;
        }
    }
    true
}

/// Dominance with equal totals; the classical partition ordering.
pub fn dominance_eqsum(a: &[i64], b: &[i64]) -> bool {
    a.iter().sum::<i64>() == b.iter().sum::<i64>() && dominance_leq(a, b)
}

/// Dominance after scaling the i-th coordinate by i.
pub fn weighted_dominance(a: &[i64], b: &[i64]) -> bool {
    let scale = |v: &[i64]| -> Vec<i64> {
        v.iter()
            .enumerate()
            .map(|(i, &x)| (i as i64 + 1) * x)
            .collect()
    };
    dominance_leq(&scale(a), &scale(b))
}

pub fn dominance_leq_parts(a: &Partition, b: &Partition) -> bool {
    dominance_leq(&to_i64(a), &to_i64(b))
}

pub fn dominance_eqsum_parts(a: &Partition, b: &Partition) -> bool {
    dominance_eqsum(&to_i64(a), &to_i64(b))
}

fn to_i64(p: &Partition) -> Vec<i64> {
    p.parts().iter().map(|&x| x as i64).collect()
}

/// The indices h_1 < ... < h_n attached to a pair `(b, c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HIndices {
    values: Vec<usize>,
}

impl HIndices {
    /// 1-based value h_q.
    pub fn h(&self, q: usize) -> usize {
        self.values[q - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }
}

/// Normalized shape for the majorization routines: `b` padded to m parts,
/// `c` padded to m+n, where m covers both the nonzero parts of `b` and the
/// overhang of `c`.
fn normalized_len(b: &Partition, c: &Partition, n: usize) -> usize {
    b.nonzero_len().max(c.nonzero_len().saturating_sub(n))
}

/// h_q = min { i : b_{i-q+1} < c_i }, with the +inf/-inf edge conventions.
pub fn h_indices(b: &Partition, c: &Partition, n: usize) -> HIndices {
    let m = normalized_len(b, c, n);
    let mut values = Vec::with_capacity(n);
    for q in 1..=n {
        let mut found = None;
        for i in q..=q + m {
            // b index i-q+1 is >= 1 here, so only the -inf guard is needed;
            // c_i is a recorded or padded (zero) entry since i <= m+n.
            let bi = i - q + 1;
            let b_small = if bi > m {
                true
            } else {
                b.part(bi) < c.part(i)
            };
            if b_small {
                found = Some(i);
                break;
            }
        }
        values.push(found.expect("h_q is always defined for i <= q+m"));
    }
    HIndices { values }
}

/// The vector x with x_1 + ... + x_q = sum_{i<=h_q} c_i - sum_{i<=h_q-q} b_i.
pub fn x_vector(b: &Partition, c: &Partition, n: usize) -> Vec<i64> {
    let h = h_indices(b, c, n);
    let mut x = Vec::with_capacity(n);
    let mut acc = 0i64;
    for q in 1..=n {
        let hq = h.h(q);
        let total = prefix(c, hq) - prefix(b, hq - q);
        x.push(total - acc);
        acc = total;
    }
    x
}

fn prefix(p: &Partition, k: usize) -> i64 {
    (1..=k).map(|i| p.part(i) as i64).sum()
}

/// Generalized majorization `c < (b, a)` with n taken from the inputs:
/// n = max(nonzero parts of a, overhang of c past b).
pub fn gen_maj(c: &Partition, b: &Partition, a: &Partition) -> bool {
    let n = a
        .nonzero_len()
        .max(c.nonzero_len().saturating_sub(b.nonzero_len()));
    gen_maj_with(c, b, a, n)
}

/// Generalized majorization with an explicit number of `a`-slots.
pub fn gen_maj_with(c: &Partition, b: &Partition, a: &Partition, n: usize) -> bool {
    if a.nonzero_len() > n {
        return false;
    }
    let m = normalized_len(b, c, n);
    if c.nonzero_len() > m + n {
        return false;
    }
    // b_i >= c_{i+n}
    for i in 1..=m {
        if b.part(i) < c.part(i + n) {
            return false;
        }
    }
    // equal totals
    if b.weight() + a.weight() != c.weight() {
        return false;
    }
    // prefix condition at each h_q
    let h = h_indices(b, c, n);
    for q in 1..=n {
        let hq = h.h(q);
        if prefix(c, hq) - prefix(b, hq - q) > prefix(a, q) {
            return false;
        }
    }
    true
}

/// Equivalent test through the x-vector: `c < (b, a)` iff `x =<_sum a`.
/// Errs when the two side conditions (interlacing, equal totals) fail.
pub fn gen_maj_via_x(c: &Partition, b: &Partition, a: &Partition) -> Result<bool, Precondition> {
    let n = a
        .nonzero_len()
        .max(c.nonzero_len().saturating_sub(b.nonzero_len()));
    let m = normalized_len(b, c, n);
    if c.nonzero_len() > m + n {
        return Err(Precondition(format!("c has more than {} parts", m + n)));
    }
    for i in 1..=m {
        if b.part(i) < c.part(i + n) {
            return Err(Precondition(format!(
                "b_{i} = {} < c_{} = {}",
                b.part(i),
                i + n,
                c.part(i + n)
            )));
        }
    }
    if b.weight() + a.weight() != c.weight() {
        return Err(Precondition(format!(
            "|b| + |a| = {} != |c| = {}",
            b.weight() + a.weight(),
            c.weight()
        )));
    }
    if a.nonzero_len() > n {
        return Ok(false);
    }
    let x = x_vector(b, c, n);
    let av: Vec<i64> = (1..=n).map(|i| a.part(i) as i64).collect();
    Ok(dominance_eqsum(&x, &av))
}

/// The n = 1 case: one extra row `a1`, with the equality tail past h_1.
pub fn elementary_gen_maj(c: &Partition, b: &Partition, a1: u32) -> bool {
    let m = normalized_len(b, c, 1);
    if c.nonzero_len() > m + 1 {
        return false;
    }
    for i in 1..=m {
        if b.part(i) < c.part(i + 1) {
            return false;
        }
    }
    if b.weight() + a1 != c.weight() {
        return false;
    }
    let h1 = h_indices(b, c, 1).h(1);
    (h1..=m).all(|i| b.part(i) == c.part(i + 1))
}

/// Chain of elementary steps from `b` to `c` consuming the parts of `a` in
/// decreasing order; present iff `gen_maj(c, b, a)` holds.
pub fn elementary_chain_witness(
    c: &Partition,
    b: &Partition,
    a: &Partition,
) -> Option<Vec<Partition>> {
    let n = a
        .nonzero_len()
        .max(c.nonzero_len().saturating_sub(b.nonzero_len()));
    let m = b.nonzero_len();
    if b.weight() + a.weight() != c.weight() {
        return None;
    }
    let mut chain = vec![b.trimmed_partition()];
    if search_chain(c, a, n, m, 1, &mut chain, &mut std::collections::HashSet::new()) {
        Some(chain)
    } else {
        None
    }
}

fn search_chain(
    c: &Partition,
    a: &Partition,
    n: usize,
    m: usize,
    j: usize,
    chain: &mut Vec<Partition>,
    dead: &mut std::collections::HashSet<(usize, Partition)>,
) -> bool {
    if j > n {
        return chain.last().unwrap() == c;
    }
    let prev = chain.last().unwrap().clone();
    let w = prev.weight() + a.part(j);
    if dead.contains(&(j, prev.clone())) {
        return false;
    }
    // candidates in lexicographic order for a deterministic witness
    for d in Partition::all_of_max_len(w, m + j) {
        if elementary_gen_maj(&d, &prev, a.part(j)) {
            chain.push(d);
            if search_chain(c, a, n, m, j + 1, chain, dead) {
                return true;
            }
            chain.pop();
        }
    }
    dead.insert((j, prev));
    false
}

/// All partitions alpha with |alpha| = |a|, at most `a.len()` (recorded) parts
/// and alpha dominated by a.
pub fn dominated_partitions(a: &Partition) -> Vec<Partition> {
    let av: Vec<i64> = a.parts().iter().map(|&x| x as i64).collect();
    Partition::all_of_max_len(a.weight(), a.len())
        .into_iter()
        .filter(|p| {
            let pv: Vec<i64> = p.parts().iter().map(|&x| x as i64).collect();
            dominance_eqsum(&pv, &av)
        })
        .collect()
}

/// The unique dominance-minimal partition `a` with `x =<_sum a`, or None when
/// every dominating candidate would need a negative part.
///
/// Computed as the least integer concave majorant of the prefix sums of x
/// (local raises to the ceiling of the neighbor average, iterated to a
/// fixpoint) and then differenced.
pub fn min_dominating_partition(x: &[i64]) -> Option<Partition> {
    let n = x.len();
    let mut s = Vec::with_capacity(n + 1);
    s.push(0i64);
    for &v in x {
        s.push(s.last().unwrap() + v);
    }
    // raise interior points until the sequence is concave; endpoints stay put
    loop {
        let mut changed = false;
        for q in 1..n {
            let need = div_ceil_i64(s[q - 1] + s[q + 1], 2);
            if s[q] < need {
                s[q] = need;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut parts = Vec::with_capacity(n);
    for q in 1..=n {
        let d = s[q] - s[q - 1];
        if d < 0 {
            return None;
        }
        parts.push(d as u32);
    }
    debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
    Some(Partition::new(parts))
}

fn div_ceil_i64(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    a.div_euclid(b) + i64::from(a.rem_euclid(b) != 0)
}
