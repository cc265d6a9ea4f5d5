//! Extension enumeration and Hall-number counting.
//!
//! Middle terms of 0 -> N -> X -> M -> 0 are parametrized by gluing pairs
//! (E_A, E_B) completing the block-triangular structure matrices. The full
//! gluing space is walked when it fits the budget; quotienting by the
//! coboundary image reduces it to Ext-group coset representatives when it
//! does not. The submodule route walks candidates X instead and is the
//! workhorse for big sweeps.

use std::collections::HashMap;

use super::classify::{classify, OracleCtx};
use super::matrix::{Fp, Mat, Subspace};
use super::poly::Point;
use super::repr::{build_indec, ext_dim_repr, IndecSpec, Rep};
use super::sub::{for_each_submodule_of_dim, quot_rep, sub_rep};
use crate::error::OracleError;
use crate::partition::Partition;
use crate::symbol::{symbols_with_dim, DecompSymbol, SegreEntry, SymbolSet};

/// Cap on the number of enumerated states; exceeding it is an error, never a
/// silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumBudget {
    pub max_states: u128,
}

impl Default for EnumBudget {
    fn default() -> Self {
        EnumBudget {
            max_states: 1_000_000,
        }
    }
}

/// How to walk the gluing space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GlueMode {
    /// Every pair (E_A, E_B).
    Full,
    /// One representative per Ext-group coset.
    ExtCosets,
}

/// One representative per isomorphism class in the decomposition class of
/// `sym` over the context field: all ways to pin distinct points of the
/// right degrees to the Segre entries.
pub fn enumerate_class(sym: &DecompSymbol, ctx: &OracleCtx) -> Vec<Rep> {
    let f = ctx.field();
    let mut placements: Vec<Vec<(Point, Partition)>> = vec![Vec::new()];
    let entries = sym.regular().entries();
    let mut i = 0;
    while i < entries.len() {
        let d = entries[i].degree;
        let mut j = i;
        while j < entries.len() && entries[j].degree == d {
            j += 1;
        }
        let group = &entries[i..j];
        let points = ctx.points(d).to_vec();
        let mut group_choices: Vec<Vec<(Point, Partition)>> = Vec::new();
        assign_group_points(group, &points, &mut vec![false; points.len()], 0, &mut Vec::new(), &mut group_choices);
        let mut next = Vec::new();
        for base in &placements {
            for choice in &group_choices {
                let mut v = base.clone();
                v.extend(choice.iter().cloned());
                next.push(v);
            }
        }
        placements = next;
        i = j;
    }

    let mut out = Vec::with_capacity(placements.len());
    for placement in placements {
        let mut rep = Rep::zero_rep();
        for &n in sym.proj() {
            rep = rep.direct_sum(&build_indec(&IndecSpec::Proj(n), f).unwrap());
        }
        for (pt, lambda) in &placement {
            for &t in lambda.trimmed() {
                rep = rep.direct_sum(&ctx.reg_rep(pt, t));
            }
        }
        for &n in sym.inj() {
            rep = rep.direct_sum(&build_indec(&IndecSpec::Inj(n), f).unwrap());
        }
        out.push(rep);
    }
    out
}

/// Distinct points for a run of same-degree entries; runs of identical
/// partitions take unordered point sets (enforced by increasing indices).
pub(crate) fn assign_group_points(
    group: &[SegreEntry],
    points: &[Point],
    used: &mut Vec<bool>,
    idx: usize,
    cur: &mut Vec<(Point, Partition)>,
    out: &mut Vec<Vec<(Point, Partition)>>,
) {
    if idx == group.len() {
        out.push(cur.clone());
        return;
    }
    let same_as_prev = idx > 0 && group[idx].partition == group[idx - 1].partition;
    let min_point = if same_as_prev {
        // index of the previous choice + 1 keeps identical partitions unordered
        points
            .iter()
            .position(|p| p == &cur.last().unwrap().0)
            .unwrap()
            + 1
    } else {
        0
    };
    for (k, pt) in points.iter().enumerate().skip(min_point) {
        if used[k] {
            continue;
        }
        used[k] = true;
        cur.push((pt.clone(), group[idx].partition.clone()));
        assign_group_points(group, points, used, idx + 1, cur, out);
        cur.pop();
        used[k] = false;
    }
}

/// Middle-term symbols of extensions of S(alpha) by S(beta), by gluing.
/// Iterates every representative pair, so point coincidences between the two
/// factors are all covered.
pub fn ext_middle_terms(
    alpha: &DecompSymbol,
    beta: &DecompSymbol,
    ctx: &OracleCtx,
    budget: EnumBudget,
    mode: GlueMode,
) -> Result<SymbolSet, OracleError> {
    let f = ctx.field();
    let quotients = enumerate_class(alpha, ctx);
    let subs = enumerate_class(beta, ctx);
    // cost check up front
    let mut states: u128 = 0;
    for m in &quotients {
        for n in &subs {
            let l = 2 * n.a * m.b;
            let dim = match mode {
                GlueMode::Full => l,
                GlueMode::ExtCosets => ext_dim_repr(m, n, f),
            };
            states = states.saturating_add((f.q() as u128).saturating_pow(dim as u32));
            if states > budget.max_states {
                return Err(OracleError::BudgetExceeded {
                    needed: states,
                    budget: budget.max_states,
                });
            }
        }
    }
    let mut result = SymbolSet::new();
    let mut memo: HashMap<Rep, DecompSymbol> = HashMap::new();
    for m in &quotients {
        for n in &subs {
            match mode {
                GlueMode::Full => {
                    let l = 2 * n.a * m.b;
                    let mut coords = vec![0u8; l];
                    loop {
                        let x = glue(m, n, &coords);
                        let sym = classify_memo(&x, ctx, &mut memo)?;
                        result.insert(sym);
                        if !increment(&mut coords, f.q() as u8) {
                            break;
                        }
                    }
                }
                GlueMode::ExtCosets => {
                    for coords in coset_representatives(m, n, f) {
                        let x = glue(m, n, &coords);
                        let sym = classify_memo(&x, ctx, &mut memo)?;
                        result.insert(sym);
                    }
                }
            }
        }
    }
    Ok(result)
}

fn classify_memo(
    x: &Rep,
    ctx: &OracleCtx,
    memo: &mut HashMap<Rep, DecompSymbol>,
) -> Result<DecompSymbol, OracleError> {
    if let Some(s) = memo.get(x) {
        return Ok(s.clone());
    }
    let s = classify(x, ctx)?;
    memo.insert(x.clone(), s.clone());
    Ok(s)
}

/// Block-triangular middle term for the gluing vector (E_A then E_B,
/// row-major n.a x m.b each).
fn glue(m: &Rep, n: &Rep, coords: &[u8]) -> Rep {
    let (na, nb) = (n.a, n.b);
    let (ma_, mb_) = (m.a, m.b);
    debug_assert_eq!(coords.len(), 2 * na * mb_);
    let mut a = Mat::zeros(na + ma_, nb + mb_);
    let mut b = Mat::zeros(na + ma_, nb + mb_);
    for i in 0..na {
        for j in 0..nb {
            a[(i, j)] = n.ma[(i, j)];
            b[(i, j)] = n.mb[(i, j)];
        }
    }
    for i in 0..ma_ {
        for j in 0..mb_ {
            a[(na + i, nb + j)] = m.ma[(i, j)];
            b[(na + i, nb + j)] = m.mb[(i, j)];
        }
    }
    for i in 0..na {
        for j in 0..mb_ {
            a[(i, nb + j)] = coords[i * mb_ + j];
            b[(i, nb + j)] = coords[na * mb_ + i * mb_ + j];
        }
    }
    Rep::new(a, b)
}

/// Gluing vectors hitting each Ext^1(M, N) class once: zero on the pivot
/// coordinates of the coboundary image, free elsewhere.
fn coset_representatives(m: &Rep, n: &Rep, f: &Fp) -> Vec<Vec<u8>> {
    let l = 2 * n.a * m.b;
    // image of (f, g) -> (f A_M - A_N g, f B_M - B_N g), rows of a basis
    let mut rows: Vec<Vec<u8>> = Vec::new();
    for r in 0..n.a {
        for s in 0..m.a {
            // unit F = E_{rs}
            let mut v = vec![0u8; l];
            for j in 0..m.b {
                v[r * m.b + j] = m.ma[(s, j)];
                v[n.a * m.b + r * m.b + j] = m.mb[(s, j)];
            }
            rows.push(v);
        }
    }
    for u in 0..n.b {
        for vcol in 0..m.b {
            // unit G = E_{uv}
            let mut v = vec![0u8; l];
            for i in 0..n.a {
                v[i * m.b + vcol] = f.neg(n.ma[(i, u)]);
                v[n.a * m.b + i * m.b + vcol] = f.neg(n.mb[(i, u)]);
            }
            rows.push(v);
        }
    }
    let image = Subspace::from_span(rows, l, f);
    debug_assert_eq!(l - image.dim(), ext_dim_repr(m, n, f));
    let free: Vec<usize> = (0..l).filter(|c| !image.pivots.contains(c)).collect();
    let mut reps = Vec::new();
    let mut vals = vec![0u8; free.len()];
    loop {
        let mut v = vec![0u8; l];
        for (k, &c) in free.iter().enumerate() {
            v[c] = vals[k];
        }
        reps.push(v);
        if !increment(&mut vals, f.q() as u8) {
            break;
        }
    }
    reps
}

fn increment(digits: &mut [u8], base: u8) -> bool {
    for d in digits.iter_mut() {
        if *d + 1 < base {
            *d += 1;
            return true;
        }
        *d = 0;
    }
    false
}

/// Middle-term symbols by the submodule route: for each candidate symbol of
/// the right dimension, some representative X must carry a submodule with
/// quotient in S(alpha) and submodule in S(beta).
pub fn ext_middle_terms_sub(
    alpha: &DecompSymbol,
    beta: &DecompSymbol,
    ctx: &OracleCtx,
) -> SymbolSet {
    let f = ctx.field();
    let total = alpha.dim_vector() + beta.dim_vector();
    let want_sub = beta.dim_vector();
    let mut result = SymbolSet::new();
    for gamma in symbols_with_dim(total) {
        let mut memo: HashMap<Rep, DecompSymbol> = HashMap::new();
        let mut hit = false;
        'reps: for x in enumerate_class(&gamma, ctx) {
            let mut found = false;
            for_each_submodule_of_dim(
                &x,
                f,
                (want_sub.a as usize, want_sub.b as usize),
                |ua, ub| {
                    if found {
                        return;
                    }
                    let s = sub_rep(&x, ua, ub, f);
                    if classify_memo(&s, ctx, &mut memo).ok().as_ref() != Some(beta) {
                        return;
                    }
                    let q = quot_rep(&x, ua, ub, f);
                    if classify_memo(&q, ctx, &mut memo).ok().as_ref() == Some(alpha) {
                        found = true;
                    }
                },
            );
            if found {
                hit = true;
                break 'reps;
            }
        }
        if hit {
            result.insert(gamma);
        }
    }
    result
}

/// Hall counts for every split at once: how many submodules of `x` realize
/// each (quotient symbol, submodule symbol) pair.
pub fn hall_profile(x: &Rep, ctx: &OracleCtx) -> HashMap<(DecompSymbol, DecompSymbol), u64> {
    let f = ctx.field();
    let mut memo: HashMap<Rep, DecompSymbol> = HashMap::new();
    let mut counts: HashMap<(DecompSymbol, DecompSymbol), u64> = HashMap::new();
    super::sub::for_each_submodule(x, f, |ua, ub| {
        let s = sub_rep(x, ua, ub, f);
        let sub_sym = classify_memo(&s, ctx, &mut memo).expect("valid module");
        let q = quot_rep(x, ua, ub, f);
        let quot_sym = classify_memo(&q, ctx, &mut memo).expect("valid module");
        *counts.entry((quot_sym, sub_sym)).or_insert(0) += 1;
    });
    counts
}

/// Number of submodules U of `x` with U in S(sub_sym) and x/U in
/// S(quot_sym); the decomposition-class total of Hall numbers.
pub fn hall_number(
    x: &Rep,
    quot_sym: &DecompSymbol,
    sub_sym: &DecompSymbol,
    ctx: &OracleCtx,
    budget: EnumBudget,
) -> Result<u64, OracleError> {
    let f = ctx.field();
    if quot_sym.dim_vector() + sub_sym.dim_vector() != x.dim_vector() {
        return Ok(0);
    }
    let states = (super::matrix::gaussian_binomial(
        x.b as u64,
        sub_sym.dim_vector().b as u64,
        f.q() as u64,
    ))
    .saturating_mul(super::matrix::gaussian_binomial(
        x.a as u64,
        sub_sym.dim_vector().a as u64,
        f.q() as u64,
    ));
    if states > budget.max_states {
        return Err(OracleError::BudgetExceeded {
            needed: states,
            budget: budget.max_states,
        });
    }
    let want = sub_sym.dim_vector();
    let mut memo: HashMap<Rep, DecompSymbol> = HashMap::new();
    let mut count = 0u64;
    for_each_submodule_of_dim(x, f, (want.a as usize, want.b as usize), |ua, ub| {
        let s = sub_rep(x, ua, ub, f);
        if classify_memo(&s, ctx, &mut memo).ok().as_ref() != Some(sub_sym) {
            return;
        }
        let q = quot_rep(x, ua, ub, f);
        if classify_memo(&q, ctx, &mut memo).ok().as_ref() == Some(quot_sym) {
            count += 1;
        }
    });
    Ok(count)
}
