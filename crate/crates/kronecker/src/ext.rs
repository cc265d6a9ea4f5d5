//! The extension monoid product on decomposition symbols.
//!
//! `A * B` is the set of classes of middle terms X of short exact sequences
//! 0 -> N -> X -> M -> 0 with [M] in A and [N] in B. Products of atoms
//! (single preprojectives, preinjectives, fused regular symbols) have closed
//! forms; arbitrary products are computed by rewriting the concatenated atom
//! words to normal order and collecting the results.

use std::collections::HashSet;

use crate::error::Precondition;
use crate::lr;
use crate::symbol::{regular_full_set, Atom, DecompSymbol, SegreEntry, SegreSymbol, SymbolSet};

/// `{[I_i]} * {[I_j]}`: the direct sum for i >= j-1, otherwise the pairs
/// [I_{j-s} + I_{i+s}] for s = 0..floor((j-i)/2).
pub fn inj_pair(i: u32, j: u32) -> SymbolSet {
    let mut out = SymbolSet::new();
    if i + 1 >= j {
        out.insert(DecompSymbol::from_inj(vec![i, j]));
    } else {
        for s in 0..=(j - i) / 2 {
            out.insert(DecompSymbol::from_inj(vec![j - s, i + s]));
        }
    }
    out
}

/// `{[P_i]} * {[P_j]}`: the direct sum for i <= j-1, otherwise the pairs
/// [P_{j+s} + P_{i-s}] for s = 0..floor((i-j)/2).
pub fn proj_pair(i: u32, j: u32) -> SymbolSet {
    let mut out = SymbolSet::new();
    if j >= i + 1 {
        out.insert(DecompSymbol::from_proj(vec![i, j]));
    } else {
        for s in 0..=(i - j) / 2 {
            out.insert(DecompSymbol::from_proj(vec![j + s, i - s]));
        }
    }
    out
}

/// Product of two regular classes. Entries of equal degree may collide in a
/// point: every partial matching contributes, with matched entries expanding
/// through Littlewood-Richardson and unmatched entries passing through.
pub fn segre_product(sigma: &SegreSymbol, tau: &SegreSymbol) -> Vec<SegreSymbol> {
    let se = sigma.entries();
    let te = tau.entries();
    let mut out: Vec<SegreSymbol> = Vec::new();
    let mut used = vec![false; te.len()];
    // acc: per matched pair, the list of LR-expanded partitions to choose from
    fn rec(
        se: &[SegreEntry],
        te: &[SegreEntry],
        i: usize,
        used: &mut Vec<bool>,
        matched: &mut Vec<(usize, usize)>,
        out: &mut Vec<SegreSymbol>,
    ) {
        if i == se.len() {
            // expand every matched pair through LR, cross-product the choices
            let mut partials: Vec<Vec<SegreEntry>> = vec![Vec::new()];
            for &(a, b) in matched.iter() {
                let d = se[a].degree;
                let options = lr::lr_expansions(&se[a].partition, &te[b].partition);
                let mut next = Vec::with_capacity(partials.len() * options.len());
                for base in &partials {
                    for lam in &options {
                        let mut v = base.clone();
                        v.push(SegreEntry::new(lam.clone(), d));
                        next.push(v);
                    }
                }
                partials = next;
            }
            let matched_src: HashSet<usize> = matched.iter().map(|&(a, _)| a).collect();
            let matched_dst: HashSet<usize> = matched.iter().map(|&(_, b)| b).collect();
            for mut entries in partials {
                for (k, e) in se.iter().enumerate() {
                    if !matched_src.contains(&k) {
                        entries.push(e.clone());
                    }
                }
                for (k, e) in te.iter().enumerate() {
                    if !matched_dst.contains(&k) {
                        entries.push(e.clone());
                    }
                }
                out.push(SegreSymbol::new(entries));
            }
            return;
        }
        // entry i stays unmatched
        rec(se, te, i + 1, used, matched, out);
        // or matches any unused tau entry of the same degree
        for j in 0..te.len() {
            if !used[j] && te[j].degree == se[i].degree {
                used[j] = true;
                matched.push((i, j));
                rec(se, te, i + 1, used, matched, out);
                matched.pop();
                used[j] = false;
            }
        }
    }
    rec(se, te, 0, &mut used, &mut Vec::new(), &mut out);
    out.sort();
    out.dedup();
    out
}

/// `S(sigma) * {[P_m]}`: peel a horizontal strip from each entry; t boxes at
/// degree d advance the preprojective index by t*d.
pub fn reg_proj(sigma: &SegreSymbol, m: u32) -> SymbolSet {
    let mut out = SymbolSet::new();
    let entries = sigma.entries();
    fn rec(
        entries: &[SegreEntry],
        i: usize,
        shift: u32,
        kept: &mut Vec<SegreEntry>,
        m: u32,
        out: &mut SymbolSet,
    ) {
        if i == entries.len() {
            out.insert(DecompSymbol::new(
                vec![m + shift],
                SegreSymbol::new(kept.clone()),
                vec![],
            ));
            return;
        }
        let e = &entries[i];
        for t in 0..=e.partition.weight() {
            for mu in lr::strip_restrictions(&e.partition, t) {
                let popped = if mu.is_empty() {
                    false
                } else {
                    kept.push(SegreEntry::new(mu, e.degree));
                    true
                };
                rec(entries, i + 1, shift + t * e.degree, kept, m, out);
                if popped {
                    kept.pop();
                }
            }
        }
    }
    rec(entries, 0, 0, &mut Vec::new(), m, &mut out);
    out
}

/// `{[I_n]} * S(sigma)`: mirror of [`reg_proj`] on the preinjective side.
pub fn inj_reg(n: u32, sigma: &SegreSymbol) -> SymbolSet {
    let mut out = SymbolSet::new();
    let entries = sigma.entries();
    fn rec(
        entries: &[SegreEntry],
        i: usize,
        shift: u32,
        kept: &mut Vec<SegreEntry>,
        n: u32,
        out: &mut SymbolSet,
    ) {
        if i == entries.len() {
            out.insert(DecompSymbol::new(
                vec![],
                SegreSymbol::new(kept.clone()),
                vec![n + shift],
            ));
            return;
        }
        let e = &entries[i];
        for t in 0..=e.partition.weight() {
            for mu in lr::strip_restrictions(&e.partition, t) {
                let popped = if mu.is_empty() {
                    false
                } else {
                    kept.push(SegreEntry::new(mu, e.degree));
                    true
                };
                rec(entries, i + 1, shift + t * e.degree, kept, n, out);
                if popped {
                    kept.pop();
                }
            }
        }
    }
    rec(entries, 0, 0, &mut Vec::new(), n, &mut out);
    out
}

/// `{[I_n]} * {[P_m]}`: the split class plus every pairwise-distinct-tube
/// regular class of total weight n+m+1.
pub fn inj_proj(n: u32, m: u32) -> SymbolSet {
    let mut out = SymbolSet::new();
    out.insert(DecompSymbol::new(vec![m], SegreSymbol::empty(), vec![n]));
    for sigma in regular_full_set(n + m + 1) {
        out.insert(DecompSymbol::from_regular(sigma));
    }
    out
}

/// Cokernels of embeddings P_n -> P_m (n < m): exactly the regular classes
/// of dimension (m-n, m-n) with pairwise distinct tubes.
pub fn proj_pair_cokernels(n: u32, m: u32) -> Result<SymbolSet, Precondition> {
    if n >= m {
        return Err(Precondition(format!(
            "no embedding P_{n} -> P_{m} with nonzero cokernel"
        )));
    }
    Ok(regular_full_set(m - n)
        .into_iter()
        .map(DecompSymbol::from_regular)
        .collect())
}

/// Word measure decreasing under every rewrite: (type inversions, number of
/// regular atoms, squared index sum over P/I atoms, index inversions inside
/// the P and I families). Used as a termination check.
fn word_measure(word: &[Atom]) -> (u64, u64, u64, u64) {
    fn ty(a: &Atom) -> u8 {
        match a {
            Atom::Proj(_) => 0,
            Atom::Reg(_) => 1,
            Atom::Inj(_) => 2,
        }
    }
    let mut type_inversions = 0u64;
    let mut idx_inversions = 0u64;
    for i in 0..word.len() {
        for j in i + 1..word.len() {
            if ty(&word[i]) > ty(&word[j]) {
                type_inversions += 1;
            }
            match (&word[i], &word[j]) {
                (Atom::Inj(x), Atom::Inj(y)) if x < y => idx_inversions += 1,
                (Atom::Proj(x), Atom::Proj(y)) if x > y => idx_inversions += 1,
                _ => {}
            }
        }
    }
    let regs = word.iter().filter(|a| matches!(a, Atom::Reg(_))).count() as u64;
    let sq: u64 = word
        .iter()
        .map(|a| match a {
            Atom::Proj(n) | Atom::Inj(n) => (*n as u64) * (*n as u64),
            Atom::Reg(_) => 0,
        })
        .sum();
    (type_inversions, regs, sq, idx_inversions)
}

/// Finds the leftmost reducible adjacent pair and the union of replacement
/// symbols, or None when the word is normal.
fn leftmost_redex(word: &[Atom]) -> Option<(usize, SymbolSet)> {
    for i in 0..word.len().saturating_sub(1) {
        let set = match (&word[i], &word[i + 1]) {
            (Atom::Inj(n), Atom::Proj(m)) => Some(inj_proj(*n, *m)),
            (Atom::Inj(n), Atom::Reg(s)) => Some(inj_reg(*n, s)),
            (Atom::Reg(s), Atom::Proj(m)) => Some(reg_proj(s, *m)),
            (Atom::Reg(s), Atom::Reg(t)) => Some(
                segre_product(s, t)
                    .into_iter()
                    .map(DecompSymbol::from_regular)
                    .collect(),
            ),
            (Atom::Inj(x), Atom::Inj(y)) if x < y => Some(inj_pair(*x, *y)),
            (Atom::Proj(x), Atom::Proj(y)) if x > y => Some(proj_pair(*x, *y)),
            _ => None,
        };
        if let Some(set) = set {
            return Some((i, set));
        }
    }
    None
}

/// Reads a normal word (ascending preprojectives, at most one regular symbol,
/// descending preinjectives) off as a single symbol.
fn read_off(word: &[Atom]) -> DecompSymbol {
    let mut proj = Vec::new();
    let mut inj = Vec::new();
    let mut regular = SegreSymbol::empty();
    for a in word {
        match a {
            Atom::Proj(n) => proj.push(*n),
            Atom::Inj(n) => inj.push(*n),
            Atom::Reg(s) => {
                debug_assert!(regular.is_empty(), "normal words hold one regular atom");
                regular = s.clone();
            }
        }
    }
    DecompSymbol::new(proj, regular, inj)
}

/// Rewrites a product word to the union of its normal forms: the product of
/// the word's atoms as a set of symbols.
pub fn normalize_word(word: &[Atom]) -> SymbolSet {
    let mut result = SymbolSet::new();
    let mut seen: HashSet<Vec<Atom>> = HashSet::new();
    let mut stack: Vec<Vec<Atom>> = vec![word.to_vec()];
    seen.insert(word.to_vec());
    while let Some(w) = stack.pop() {
        match leftmost_redex(&w) {
            None => {
                result.insert(read_off(&w));
            }
            Some((i, replacements)) => {
                for sym in replacements.iter() {
                    let mut next = Vec::with_capacity(w.len());
                    next.extend_from_slice(&w[..i]);
                    next.extend(sym.atoms());
                    next.extend_from_slice(&w[i + 2..]);
                    debug_assert!(
                        word_measure(&next) < word_measure(&w),
                        "rewrite must decrease the word measure: {w:?} -> {next:?}"
                    );
                    if seen.insert(next.clone()) {
                        stack.push(next);
                    }
                }
            }
        }
    }
    result
}

/// Extension monoid product `{alpha} * {beta}` of two symbol classes.
pub fn product(alpha: &DecompSymbol, beta: &DecompSymbol) -> SymbolSet {
    let mut word = alpha.atoms();
    word.extend(beta.atoms());
    let out = normalize_word(&word);
    debug_assert!(out.iter().all(|g| {
        g.dim_vector() == alpha.dim_vector() + beta.dim_vector()
            && g.defect() == alpha.defect() + beta.defect()
    }));
    out
}

/// Elementwise product of symbol sets; the product distributes over unions.
pub fn product_sets(a: &SymbolSet, b: &SymbolSet) -> SymbolSet {
    let mut out = SymbolSet::new();
    for alpha in a.iter() {
        for beta in b.iter() {
            out.union_with(&product(alpha, beta));
        }
    }
    out
}
