//! Classification of a representation to its decomposition symbol.
//!
//! Multiplicities fall out of Hom-dimension measurements against test
//! objects. Hom(-, P_k) only sees preprojective summands and Hom(I_k, -)
//! only preinjective ones, each through a triangular system solved by second
//! differences; the regular part is then read off tube by tube from
//! Hom(R_x(t), -) corrected for the preinjective contribution.

use std::sync::OnceLock;

use super::matrix::Fp;
use super::poly::{points_of_degree, Point};
use super::repr::{build_indec, hom_dim_repr, IndecSpec, Rep};
use crate::error::OracleError;
use crate::partition::Partition;
use crate::symbol::{DecompSymbol, DimVector};

/// Shared per-field context: cached test objects and lazily enumerated
/// points. Safe to share across threads.
pub struct OracleCtx {
    f: Fp,
    proj: Vec<Rep>,
    inj: Vec<Rep>,
    points: Vec<OnceLock<Vec<Point>>>,
}

impl OracleCtx {
    /// Context able to classify representations with dimensions up to `cap`.
    pub fn new(q: u32, cap: DimVector) -> Result<OracleCtx, OracleError> {
        let f = Fp::new(q)?;
        let top = cap.a.max(cap.b) as usize;
        let proj = (0..=top)
            .map(|n| build_indec(&IndecSpec::Proj(n as u32), &f).unwrap())
            .collect();
        let inj = (0..=top)
            .map(|n| build_indec(&IndecSpec::Inj(n as u32), &f).unwrap())
            .collect();
        let max_reg = cap.a.min(cap.b) as usize;
        let points = (0..max_reg).map(|_| OnceLock::new()).collect();
        Ok(OracleCtx {
            f,
            proj,
            inj,
            points,
        })
    }

    pub fn field(&self) -> &Fp {
        &self.f
    }

    pub fn q(&self) -> u32 {
        self.f.q()
    }

    pub fn proj_rep(&self, n: usize) -> &Rep {
        &self.proj[n]
    }

    pub fn inj_rep(&self, n: usize) -> &Rep {
        &self.inj[n]
    }

    /// Points of degree d, enumerated on first use.
    pub fn points(&self, d: u32) -> &[Point] {
        self.points[d as usize - 1].get_or_init(|| points_of_degree(d, &self.f))
    }

    pub fn max_reg_weight(&self) -> u32 {
        self.points.len() as u32
    }

    pub fn reg_rep(&self, point: &Point, len: u32) -> Rep {
        build_indec(
            &IndecSpec::Reg {
                point: point.clone(),
                len,
            },
            &self.f,
        )
        .expect("context points are irreducible")
    }
}

/// The unique symbol whose class contains `rep`.
pub fn classify(rep: &Rep, ctx: &OracleCtx) -> Result<DecompSymbol, OracleError> {
    classify_pointed(rep, ctx).map(|p| p.symbol())
}

/// Classification keeping the concrete point under every tube.
pub fn classify_pointed(
    rep: &Rep,
    ctx: &OracleCtx,
) -> Result<super::pointed::PointedSymbol, OracleError> {
    let f = ctx.field();
    let (a, b) = (rep.a, rep.b);

    // preprojective multiplicities from hom(rep, P_k)
    let mut proj_mult: Vec<u32> = Vec::new();
    if a >= 1 {
        let kmax = (a - 1).min(b);
        let mut vals = Vec::with_capacity(kmax + 1);
        for k in 0..=kmax {
            vals.push(hom_dim_repr(rep, ctx.proj_rep(k), f) as i64);
        }
        proj_mult = second_differences(&vals)?;
    }

    // preinjective multiplicities from hom(I_k, rep)
    let mut inj_mult: Vec<u32> = Vec::new();
    if b >= 1 {
        let kmax = (b - 1).min(a);
        let mut vals = Vec::with_capacity(kmax + 1);
        for k in 0..=kmax {
            vals.push(hom_dim_repr(ctx.inj_rep(k), rep, f) as i64);
        }
        inj_mult = second_differences(&vals)?;
    }

    // regular budget
    let pa: i64 = proj_mult
        .iter()
        .enumerate()
        .map(|(n, &m)| m as i64 * (n as i64 + 1))
        .sum();
    let pb: i64 = proj_mult
        .iter()
        .enumerate()
        .map(|(n, &m)| m as i64 * n as i64)
        .sum();
    let ia: i64 = inj_mult
        .iter()
        .enumerate()
        .map(|(n, &m)| m as i64 * n as i64)
        .sum();
    let ib: i64 = inj_mult
        .iter()
        .enumerate()
        .map(|(n, &m)| m as i64 * (n as i64 + 1))
        .sum();
    let ra = a as i64 - pa - ia;
    let rb = b as i64 - pb - ib;
    if ra != rb || ra < 0 {
        return Err(OracleError::Inconsistent(format!(
            "regular budget mismatch: ({ra},{rb}) left of ({a},{b})"
        )));
    }
    let total_inj: i64 = inj_mult.iter().map(|&m| m as i64).sum();

    // tube-by-tube scan while regular weight remains unaccounted
    let mut remaining = ra as u32;
    let mut entries: Vec<(Point, Partition)> = Vec::new();
    let mut d = 1u32;
    while remaining > 0 {
        if d > remaining || d > ctx.max_reg_weight() {
            return Err(OracleError::Inconsistent(format!(
                "regular weight {remaining} unaccounted for"
            )));
        }
        for pt in ctx.points(d) {
            if remaining < d {
                break;
            }
            // conjugate partition of the regular lengths at this point
            let mut cols: Vec<u32> = Vec::new();
            let mut prev = 0i64;
            for t in 1..=(remaining / d) {
                let h = hom_dim_repr(&ctx.reg_rep(pt, t), rep, f) as i64;
                let adjusted = h - t as i64 * d as i64 * total_inj;
                if adjusted < 0 || adjusted % d as i64 != 0 {
                    return Err(OracleError::Inconsistent(format!(
                        "hom against {pt} (t={t}) is {h}, out of pattern"
                    )));
                }
                let g = adjusted / d as i64;
                let col = g - prev;
                if col <= 0 {
                    break;
                }
                cols.push(col as u32);
                prev = g;
            }
            if !cols.is_empty() {
                let lambda = Partition::new(cols).conjugate();
                let w = lambda.weight() * d;
                if w > remaining {
                    return Err(OracleError::Inconsistent(format!(
                        "tube at {pt} overflows the regular budget"
                    )));
                }
                remaining -= w;
                entries.push((pt.clone(), lambda));
            }
        }
        d += 1;
    }

    let mut proj_list = Vec::new();
    for (n, &m) in proj_mult.iter().enumerate() {
        for _ in 0..m {
            proj_list.push(n as u32);
        }
    }
    let mut inj_list = Vec::new();
    for (n, &m) in inj_mult.iter().enumerate() {
        for _ in 0..m {
            inj_list.push(n as u32);
        }
    }
    let sym = super::pointed::PointedSymbol::new(proj_list, entries, inj_list);
    if sym.dim_vector() != rep.dim_vector() {
        return Err(OracleError::Inconsistent(format!(
            "classified symbol {sym} has dimension {} but the module has {}",
            sym.dim_vector(),
            rep.dim_vector()
        )));
    }
    Ok(sym)
}

/// Recovers multiplicities from cumulative Hom values f(k) = sum_{n<=k}
/// m_n (k-n+1) via m_k = f(k) - 2 f(k-1) + f(k-2).
fn second_differences(vals: &[i64]) -> Result<Vec<u32>, OracleError> {
    let mut out = Vec::with_capacity(vals.len());
    for k in 0..vals.len() {
        let fk = vals[k];
        let f1 = if k >= 1 { vals[k - 1] } else { 0 };
        let f2 = if k >= 2 { vals[k - 2] } else { 0 };
        let m = fk - 2 * f1 + f2;
        if m < 0 {
            return Err(OracleError::Inconsistent(format!(
                "negative multiplicity from Hom table: {vals:?}"
            )));
        }
        out.push(m as u32);
    }
    Ok(out)
}
