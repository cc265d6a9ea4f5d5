//! Verification sweeps: oracle extension tables, product checks, and the
//! pullback/pushout frame equivalence.

use std::collections::{HashMap, HashSet};
use std::time::Instant;

use super::classify::{classify, OracleCtx};
use super::extensions::enumerate_class;
use super::repr::Rep;
use super::sub::{for_each_submodule, quot_rep, sub_rep};
use crate::error::OracleError;
use crate::ext::product;
use crate::par::map_collect;
use crate::symbol::{
    class_size, ext_dim, symbols_up_to, DecompSymbol, DimVector, Indec, SymbolSet,
};


/// All extension data over F_q up to a dimension cap: for every pair of
/// symbols (alpha, beta), the set of middle-term symbols realized by actual
/// short exact sequences. Built once by walking every submodule of every
/// representative of every symbol.
pub struct ExtTable {
    q: u32,
    cap: DimVector,
    pairs: HashMap<(DecompSymbol, DecompSymbol), SymbolSet>,
}

impl ExtTable {
    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn cap(&self) -> DimVector {
        self.cap
    }

    /// Realized middle-term symbols for the pair (alpha, beta); empty when no
    /// extension exists over F_q (including unrealizable factors).
    pub fn middles(&self, alpha: &DecompSymbol, beta: &DecompSymbol) -> SymbolSet {
        self.pairs
            .get(&(alpha.clone(), beta.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn pair_keys(&self) -> impl Iterator<Item = &(DecompSymbol, DecompSymbol)> {
        self.pairs.keys()
    }
}

/// Builds the table for all middle terms with dimension vector <= cap.
pub fn build_ext_table(q: u32, cap: DimVector) -> Result<ExtTable, OracleError> {
    let ctx = OracleCtx::new(q, cap)?;
    let mut tasks: Vec<(DecompSymbol, Rep)> = Vec::new();
    for gamma in symbols_up_to(cap) {
        for rep in enumerate_class(&gamma, &ctx) {
            tasks.push((gamma.clone(), rep));
        }
    }
    let results = map_collect(tasks, |(gamma, x)| {
        let f = ctx.field();
        let mut memo: HashMap<Rep, DecompSymbol> = HashMap::new();
        let mut found: HashSet<(DecompSymbol, DecompSymbol)> = HashSet::new();
        for_each_submodule(&x, f, |ua, ub| {
            let s = sub_rep(&x, ua, ub, f);
            let sub_sym = classify(&s, &ctx)
                .expect("submodules of valid modules classify");
            let sub_sym = memo
                .entry(s)
                .or_insert(sub_sym)
                .clone();
            let qr = quot_rep(&x, ua, ub, f);
            let quot_sym = classify(&qr, &ctx)
                .expect("quotients of valid modules classify");
            let quot_sym = memo.entry(qr).or_insert(quot_sym).clone();
            found.insert((quot_sym, sub_sym));
        });
        (gamma, found)
    });
    let mut pairs: HashMap<(DecompSymbol, DecompSymbol), SymbolSet> = HashMap::new();
    for (gamma, found) in results {
        for key in found {
            pairs.entry(key).or_default().insert(gamma.clone());
        }
    }
    Ok(ExtTable { q, cap, pairs })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyStatus {
    Match,
    Mismatch,
    Skipped(String),
}

/// Outcome of checking one product formula against the oracle.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub alpha: DecompSymbol,
    pub beta: DecompSymbol,
    pub q: u32,
    pub status: VerifyStatus,
    /// Symbols the formula predicts (realizably) but the oracle did not see.
    pub missing: SymbolSet,
    /// Symbols the oracle saw but the formula does not predict.
    pub extra: SymbolSet,
    pub millis: u128,
}

impl VerifyReport {
    pub fn is_match(&self) -> bool {
        matches!(self.status, VerifyStatus::Match)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let status = match &self.status {
            VerifyStatus::Match => "match".to_string(),
            VerifyStatus::Mismatch => "mismatch".to_string(),
            VerifyStatus::Skipped(r) => format!("skipped: {r}"),
        };
        serde_json::json!({
            "alpha": self.alpha.to_string(),
            "beta": self.beta.to_string(),
            "q": self.q,
            "status": status,
            "missing": self.missing.to_json(),
            "extra": self.extra.to_json(),
            "millis": self.millis,
        })
    }
}

/// Compares the combinatorial product against the oracle table. The product
/// is filtered to symbols whose class is nonempty over F_q: classes the field
/// is too small to realize cannot appear in any brute-force run.
pub fn verify_pair(alpha: &DecompSymbol, beta: &DecompSymbol, table: &ExtTable) -> VerifyReport {
    let start = Instant::now();
    let q = table.q() as u64;
    let total = alpha.dim_vector() + beta.dim_vector();
    if !total.fits_in(table.cap()) {
        return VerifyReport {
            alpha: alpha.clone(),
            beta: beta.clone(),
            q: table.q(),
            status: VerifyStatus::Skipped(format!(
                "total dimension {total} beyond the table cap {}",
                table.cap()
            )),
            missing: SymbolSet::new(),
            extra: SymbolSet::new(),
            millis: start.elapsed().as_millis(),
        };
    }
    let mut expected = product(alpha, beta);
    expected.retain(|g| class_size(g, q) > 0);
    let got = table.middles(alpha, beta);
    let missing = expected.difference(&got);
    let extra = got.difference(&expected);
    let status = if missing.is_empty() && extra.is_empty() {
        VerifyStatus::Match
    } else {
        VerifyStatus::Mismatch
    };
    VerifyReport {
        alpha: alpha.clone(),
        beta: beta.clone(),
        q: table.q(),
        status,
        missing,
        extra,
        millis: start.elapsed().as_millis(),
    }
}

/// Verifies every pair with total dimension within `cap` over each field,
/// in canonical order. Returns the reports; all-match iff every report is.
pub fn verify_sweep(qs: &[u32], cap: DimVector) -> Result<Vec<VerifyReport>, OracleError> {
    let symbols = symbols_up_to(cap);
    let mut pairs: Vec<(DecompSymbol, DecompSymbol)> = Vec::new();
    for a in &symbols {
        for b in &symbols {
            if (a.dim_vector() + b.dim_vector()).fits_in(cap) {
                pairs.push((a.clone(), b.clone()));
            }
        }
    }
    pairs.sort();
    let mut reports = Vec::new();
    for &q in qs {
        let table = build_ext_table(q, cap)?;
        let mut batch = map_collect(pairs.clone(), |(a, b)| verify_pair(&a, &b, &table));
        batch.sort_by(|x, y| (&x.alpha, &x.beta, x.q).cmp(&(&y.alpha, &y.beta, y.q)));
        reports.extend(batch);
    }
    Ok(reports)
}

/// Placed summands of a symbol with point tags offset by `tag_base`, for
/// symbol-level Hom/Ext computations under an all-distinct-points placement.
pub fn placed_summands(sym: &DecompSymbol, tag_base: u32) -> Vec<Indec> {
    let mut out = Vec::new();
    for &n in sym.proj() {
        out.push(Indec::Proj(n));
    }
    for (k, e) in sym.regular().entries().iter().enumerate() {
        for &t in e.partition.trimmed() {
            out.push(Indec::Reg {
                tag: tag_base + k as u32,
                degree: e.degree,
                len: t,
            });
        }
    }
    for &n in sym.inj() {
        out.push(Indec::Inj(n));
    }
    out
}

/// dim Ext^1 between two symbol classes when their points are all distinct
/// (the generic placement).
pub fn generic_ext_dim(m: &DecompSymbol, n: &DecompSymbol) -> u64 {
    let pm = placed_summands(m, 0);
    let pn = placed_summands(n, 1 << 16);
    pm.iter()
        .map(|x| pn.iter().map(|y| ext_dim(x, y)).sum::<u64>())
        .sum()
}
