//! Submodules of a representation and the induced sub/quotient structure.
//!
//! A submodule is a pair of subspaces (U_a, U_b) with A(U_b) + B(U_b)
//! contained in U_a. Enumeration walks U_b first and then everything above
//! the forced span, which prunes hard compared to scanning all pairs.

use super::matrix::{all_subspaces, subspaces_containing, Fp, Mat, Subspace};
use super::repr::Rep;

/// Calls `visit(U_a, U_b)` for every submodule of `rep`.
pub fn for_each_submodule(rep: &Rep, f: &Fp, mut visit: impl FnMut(&Subspace, &Subspace)) {
    for ub in all_subspaces(rep.b, f) {
        let forced = forced_span(rep, &ub, f);
        for ua in subspaces_containing(&forced, f) {
            visit(&ua, &ub);
        }
    }
}

/// Like [`for_each_submodule`] restricted to submodules of the given
/// dimension pair.
pub fn for_each_submodule_of_dim(
    rep: &Rep,
    f: &Fp,
    dim: (usize, usize),
    mut visit: impl FnMut(&Subspace, &Subspace),
) {
    for ub in all_subspaces(rep.b, f) {
        if ub.dim() != dim.1 {
            continue;
        }
        let forced = forced_span(rep, &ub, f);
        if forced.dim() > dim.0 {
            continue;
        }
        for ua in subspaces_containing(&forced, f) {
            if ua.dim() == dim.0 {
                visit(&ua, &ub);
            }
        }
    }
}

/// Span of A(U_b) and B(U_b): the least U_a making (U_a, U_b) a submodule.
fn forced_span(rep: &Rep, ub: &Subspace, f: &Fp) -> Subspace {
    let mut rows = Vec::with_capacity(2 * ub.dim());
    for i in 0..ub.dim() {
        let v = ub.basis.row(i);
        rows.push(rep.ma.apply(v, f));
        rows.push(rep.mb.apply(v, f));
    }
    Subspace::from_span(rows, rep.a, f)
}

/// Structure maps of the submodule (U_a, U_b) in the subspace bases.
pub fn sub_rep(rep: &Rep, ua: &Subspace, ub: &Subspace, f: &Fp) -> Rep {
    let ka = ua.dim();
    let kb = ub.dim();
    let mut ma = Mat::zeros(ka, kb);
    let mut mb = Mat::zeros(ka, kb);
    for j in 0..kb {
        let v = ub.basis.row(j);
        let av = ua
            .coords(&rep.ma.apply(v, f), f)
            .expect("A maps the submodule into U_a");
        let bv = ua
            .coords(&rep.mb.apply(v, f), f)
            .expect("B maps the submodule into U_a");
        for i in 0..ka {
            ma[(i, j)] = av[i];
            mb[(i, j)] = bv[i];
        }
    }
    Rep::new(ma, mb)
}

/// Structure maps of the quotient rep/(U_a, U_b) in the complement
/// coordinates (non-pivot columns of the subspace bases).
pub fn quot_rep(rep: &Rep, ua: &Subspace, ub: &Subspace, f: &Fp) -> Rep {
    let qa = rep.a - ua.dim();
    let qb = rep.b - ub.dim();
    let free_b: Vec<usize> = (0..rep.b).filter(|c| !ub.pivots.contains(c)).collect();
    let mut ma = Mat::zeros(qa, qb);
    let mut mb = Mat::zeros(qa, qb);
    for (j, &col) in free_b.iter().enumerate() {
        let mut e = vec![0u8; rep.b];
        e[col] = 1;
        let pa = project(ua, &rep.ma.apply(&e, f), f);
        let pb = project(ua, &rep.mb.apply(&e, f), f);
        for i in 0..qa {
            ma[(i, j)] = pa[i];
            mb[(i, j)] = pb[i];
        }
    }
    Rep::new(ma, mb)
}

/// Reduce modulo the subspace and read off the non-pivot coordinates.
fn project(u: &Subspace, v: &[u8], f: &Fp) -> Vec<u8> {
    let mut rem = v.to_vec();
    for (i, &p) in u.pivots.iter().enumerate() {
        let c = rem[p];
        if c != 0 {
            for j in 0..rem.len() {
                rem[j] = f.sub(rem[j], f.mul(c, u.basis[(i, j)]));
            }
        }
    }
    (0..v.len())
        .filter(|c| !u.pivots.contains(c))
        .map(|c| rem[c])
        .collect()
}
