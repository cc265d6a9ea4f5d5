//! Pointed symbols: decomposition symbols with explicit point assignments.
//!
//! A pointed symbol pins every Segre entry to a concrete point, so it names
//! a single isomorphism class over the field rather than a family. The frame
//! equivalence lives here: its four edges must share one consistent set of
//! modules, which symbol-level membership cannot express (two edges may
//! silently disagree about whether two regular summands sit in one tube).

use std::collections::{BTreeSet, HashMap};

use super::classify::{classify_pointed, OracleCtx};
use super::poly::Point;
use super::repr::Rep;
use super::sub::{for_each_submodule, quot_rep, sub_rep};
use crate::error::OracleError;
use crate::par::map_collect;
use crate::partition::Partition;
use crate::symbol::{ext_dim, symbols_up_to, DecompSymbol, DimVector, Indec, SegreEntry, SegreSymbol};

/// One isomorphism class over F_q: indices plus (point, partition) pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointedSymbol {
    proj: Vec<u32>,
    inj: Vec<u32>,
    regular: Vec<(Point, Partition)>,
}

impl PointedSymbol {
    pub fn new(mut proj: Vec<u32>, regular: Vec<(Point, Partition)>, mut inj: Vec<u32>) -> Self {
        proj.sort_unstable_by(|x, y| y.cmp(x));
        inj.sort_unstable_by(|x, y| y.cmp(x));
        // merge duplicate points, then canonicalize
        let mut by_point: HashMap<Point, Vec<u32>> = HashMap::new();
        for (pt, lam) in regular {
            by_point
                .entry(pt)
                .or_default()
                .extend(lam.trimmed().iter().copied());
        }
        let mut regular: Vec<(Point, Partition)> = by_point
            .into_iter()
            .map(|(pt, mut parts)| {
                parts.sort_unstable_by(|x, y| y.cmp(x));
                (pt, Partition::new(parts))
            })
            .collect();
        regular.sort();
        PointedSymbol { proj, inj, regular }
    }

    pub fn zero() -> Self {
        PointedSymbol {
            proj: vec![],
            inj: vec![],
            regular: vec![],
        }
    }

    /// Forgets the points, keeping only their degrees.
    pub fn symbol(&self) -> DecompSymbol {
        DecompSymbol::new(
            self.proj.clone(),
            SegreSymbol::new(
                self.regular
                    .iter()
                    .map(|(pt, lam)| SegreEntry::new(lam.clone(), pt.degree()))
                    .collect(),
            ),
            self.inj.clone(),
        )
    }

    pub fn dim_vector(&self) -> DimVector {
        self.symbol().dim_vector()
    }

    /// Direct sum; summands at one point merge into one tube partition.
    pub fn direct_sum(&self, other: &PointedSymbol) -> PointedSymbol {
        let mut proj = self.proj.clone();
        proj.extend_from_slice(&other.proj);
        let mut inj = self.inj.clone();
        inj.extend_from_slice(&other.inj);
        let mut regular = self.regular.clone();
        regular.extend(other.regular.iter().cloned());
        PointedSymbol::new(proj, regular, inj)
    }

    /// Placed indecomposable summands; equal points share a tag.
    fn placed(&self, tags: &mut HashMap<Point, u32>) -> Vec<Indec> {
        let mut out = Vec::new();
        for &n in &self.proj {
            out.push(Indec::Proj(n));
        }
        for (pt, lam) in &self.regular {
            let next = tags.len() as u32;
            let tag = *tags.entry(pt.clone()).or_insert(next);
            for &t in lam.trimmed() {
                out.push(Indec::Reg {
                    tag,
                    degree: pt.degree(),
                    len: t,
                });
            }
        }
        for &n in &self.inj {
            out.push(Indec::Inj(n));
        }
        out
    }
}

impl std::fmt::Display for PointedSymbol {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.symbol())?;
        if !self.regular.is_empty() {
            write!(f, " at ")?;
            for (i, (pt, lam)) in self.regular.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{lam}@[{pt}]")?;
            }
        }
        Ok(())
    }
}

/// dim Ext^1 between two concrete classes (points taken literally).
pub fn pointed_ext_dim(m: &PointedSymbol, n: &PointedSymbol) -> u64 {
    let mut tags = HashMap::new();
    let pm = m.placed(&mut tags);
    let pn = n.placed(&mut tags);
    pm.iter()
        .map(|x| pn.iter().map(|y| ext_dim(x, y)).sum::<u64>())
        .sum()
}

/// All pointed variants of a symbol over the context field.
pub fn pointed_variants(sym: &DecompSymbol, ctx: &OracleCtx) -> Vec<PointedSymbol> {
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
        let mut choices: Vec<Vec<(Point, Partition)>> = Vec::new();
        super::extensions::assign_group_points(
            group,
            &points,
            &mut vec![false; points.len()],
            0,
            &mut Vec::new(),
            &mut choices,
        );
        let mut next = Vec::new();
        for base in &placements {
            for choice in &choices {
                let mut v = base.clone();
                v.extend(choice.iter().cloned());
                next.push(v);
            }
        }
        placements = next;
        i = j;
    }
    placements
        .into_iter()
        .map(|regular| PointedSymbol::new(sym.proj().to_vec(), regular, sym.inj().to_vec()))
        .collect()
}

/// Extension table at the pointed level: which concrete classes arise as
/// middle terms for each concrete (quotient, sub) pair.
pub struct PointedExtTable {
    q: u32,
    cap: DimVector,
    pairs: HashMap<(PointedSymbol, PointedSymbol), BTreeSet<PointedSymbol>>,
}

impl PointedExtTable {
    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn cap(&self) -> DimVector {
        self.cap
    }

    pub fn middles(&self, alpha: &PointedSymbol, beta: &PointedSymbol) -> Option<&BTreeSet<PointedSymbol>> {
        self.pairs.get(&(alpha.clone(), beta.clone()))
    }

    pub fn contains(&self, alpha: &PointedSymbol, beta: &PointedSymbol, gamma: &PointedSymbol) -> bool {
        self.middles(alpha, beta).is_some_and(|s| s.contains(gamma))
    }

    pub fn pair_keys(&self) -> impl Iterator<Item = &(PointedSymbol, PointedSymbol)> {
        self.pairs.keys()
    }
}

/// Builds the pointed table by walking every submodule of every class
/// representative up to the cap.
pub fn build_pointed_table(q: u32, cap: DimVector) -> Result<PointedExtTable, OracleError> {
    let ctx = OracleCtx::new(q, cap)?;
    let mut tasks: Vec<Rep> = Vec::new();
    for sym in symbols_up_to(cap) {
        tasks.extend(super::extensions::enumerate_class(&sym, &ctx));
    }
    let results = map_collect(tasks, |x| {
        let f = ctx.field();
        let gamma = classify_pointed(&x, &ctx).expect("valid module");
        let mut memo: HashMap<Rep, PointedSymbol> = HashMap::new();
        let mut found: Vec<(PointedSymbol, PointedSymbol)> = Vec::new();
        for_each_submodule(&x, f, |ua, ub| {
            let s = sub_rep(&x, ua, ub, f);
            let sub_sym = match memo.get(&s) {
                Some(v) => v.clone(),
                None => {
                    let v = classify_pointed(&s, &ctx).expect("valid module");
                    memo.insert(s, v.clone());
                    v
                }
            };
            let qr = quot_rep(&x, ua, ub, f);
            let quot_sym = match memo.get(&qr) {
                Some(v) => v.clone(),
                None => {
                    let v = classify_pointed(&qr, &ctx).expect("valid module");
                    memo.insert(qr, v.clone());
                    v
                }
            };
            found.push((quot_sym, sub_sym));
        });
        found.sort();
        found.dedup();
        (gamma, found)
    });
    let mut pairs: HashMap<(PointedSymbol, PointedSymbol), BTreeSet<PointedSymbol>> =
        HashMap::new();
    for (gamma, found) in results {
        for key in found {
            pairs.entry(key).or_default().insert(gamma.clone());
        }
    }
    Ok(PointedExtTable { q, cap, pairs })
}

/// Inverted index: the concrete (quotient, sub) pairs producing each class.
pub struct PointedFactorizations {
    pairs_of: HashMap<PointedSymbol, BTreeSet<(PointedSymbol, PointedSymbol)>>,
    by_sub: HashMap<PointedSymbol, HashMap<PointedSymbol, Vec<PointedSymbol>>>,
}

impl PointedFactorizations {
    pub fn new(table: &PointedExtTable) -> PointedFactorizations {
        let mut pairs_of: HashMap<PointedSymbol, BTreeSet<(PointedSymbol, PointedSymbol)>> =
            HashMap::new();
        let mut by_sub: HashMap<PointedSymbol, HashMap<PointedSymbol, Vec<PointedSymbol>>> =
            HashMap::new();
        for key in table.pair_keys() {
            for gamma in table.middles(&key.0, &key.1).into_iter().flatten() {
                pairs_of
                    .entry(gamma.clone())
                    .or_default()
                    .insert(key.clone());
                by_sub
                    .entry(gamma.clone())
                    .or_default()
                    .entry(key.1.clone())
                    .or_default()
                    .push(key.0.clone());
            }
        }
        PointedFactorizations { pairs_of, by_sub }
    }

    pub fn pairs_of(
        &self,
        gamma: &PointedSymbol,
    ) -> impl Iterator<Item = &(PointedSymbol, PointedSymbol)> {
        self.pairs_of.get(gamma).into_iter().flatten()
    }

    fn quotients_over(&self, gamma: &PointedSymbol, sub: &PointedSymbol) -> &[PointedSymbol] {
        self.by_sub
            .get(gamma)
            .and_then(|m| m.get(sub))
            .map_or(&[], Vec::as_slice)
    }

    fn contains(&self, gamma: &PointedSymbol, quot: &PointedSymbol, sub: &PointedSymbol) -> bool {
        self.pairs_of
            .get(gamma)
            .is_some_and(|s| s.contains(&(quot.clone(), sub.clone())))
    }
}

/// The two sides of the frame statement for concrete classes M, N, X, Y with
/// Ext(M, N) = 0 and dim X + dim Y = dim M + dim N:
/// `cross`: an exact 0 -> Y -> M+N -> X -> 0 exists;
/// `frame`: classes A, B, C, D exist making the four frame edges exact
/// (top 0->D->Y->B->0, left 0->D->N->C->0, bottom 0->C->X->A->0,
/// right 0->B->M->A->0).
pub fn green_frame_check(
    m: &PointedSymbol,
    n: &PointedSymbol,
    x: &PointedSymbol,
    y: &PointedSymbol,
    table: &PointedExtTable,
    facts: &PointedFactorizations,
) -> (bool, bool) {
    let merged = m.direct_sum(n);
    let cross = table.contains(x, y, &merged);
    let mut frame = false;
    'search: for (b, d) in facts.pairs_of(y) {
        for c in facts.quotients_over(n, d) {
            for a in facts.quotients_over(x, c) {
                if facts.contains(m, a, b) {
                    frame = true;
                    break 'search;
                }
            }
        }
    }
    (cross, frame)
}
