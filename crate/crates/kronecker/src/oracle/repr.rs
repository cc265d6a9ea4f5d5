//! Explicit Kronecker representations over F_q.
//!
//! A representation is a pair of a x b matrices (A, B), both mapping the
//! b-coordinate space to the a-coordinate space. A morphism (M -> N) is a
//! pair (F, G) with F A_M = A_N G and F B_M = B_N G; Hom dimensions are
//! nullspace dimensions of that linear system, and Ext dimensions follow
//! from the Euler form since the algebra is hereditary.

use super::matrix::{Fp, Mat};
use super::poly::{poly_pow, Point};
use crate::error::OracleError;
use crate::symbol::DimVector;

/// What to build: an indecomposable with its placement data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IndecSpec {
    Proj(u32),
    Inj(u32),
    Reg { point: Point, len: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rep {
    pub a: usize,
    pub b: usize,
    pub ma: Mat,
    pub mb: Mat,
}

impl Rep {
    pub fn new(ma: Mat, mb: Mat) -> Rep {
        assert_eq!(ma.rows, mb.rows);
        assert_eq!(ma.cols, mb.cols);
        Rep {
            a: ma.rows,
            b: ma.cols,
            ma,
            mb,
        }
    }

    pub fn zero_rep() -> Rep {
        Rep::new(Mat::zeros(0, 0), Mat::zeros(0, 0))
    }

    pub fn dim_vector(&self) -> DimVector {
        DimVector::new(self.a as u32, self.b as u32)
    }

    pub fn direct_sum(&self, other: &Rep) -> Rep {
        Rep::new(self.ma.block_diag(&other.ma), self.mb.block_diag(&other.mb))
    }
}

/// Canonical matrices for one indecomposable.
pub fn build_indec(spec: &IndecSpec, f: &Fp) -> Result<Rep, OracleError> {
    match spec {
        IndecSpec::Proj(n) => {
            let n = *n as usize;
            let mut ma = Mat::zeros(n + 1, n);
            let mut mb = Mat::zeros(n + 1, n);
            for j in 0..n {
                ma[(j, j)] = 1;
                mb[(j + 1, j)] = 1;
            }
            Ok(Rep::new(ma, mb))
        }
        IndecSpec::Inj(n) => {
            let n = *n as usize;
            let mut ma = Mat::zeros(n, n + 1);
            let mut mb = Mat::zeros(n, n + 1);
            for i in 0..n {
                ma[(i, i)] = 1;
                mb[(i, i + 1)] = 1;
            }
            Ok(Rep::new(ma, mb))
        }
        IndecSpec::Reg { point, len } => {
            assert!(*len >= 1);
            match point {
                Point::Infinity => {
                    let t = *len as usize;
                    let mut ma = Mat::zeros(t, t);
                    for j in 1..t {
                        ma[(j - 1, j)] = 1;
                    }
                    Ok(Rep::new(ma, Mat::identity(t)))
                }
                Point::Monic(p) => {
                    if p.last() != Some(&1) {
                        return Err(OracleError::InvalidInput("point polynomial is not monic".into()));
                    }
                    let pt = poly_pow(p, *len, f);
                    let m = pt.len() - 1;
                    let mut mb = Mat::zeros(m, m);
                    for j in 0..m - 1 {
                        mb[(j + 1, j)] = 1;
                    }
                    for i in 0..m {
                        mb[(i, m - 1)] = f.neg(pt[i]);
                    }
                    Ok(Rep::new(Mat::identity(m), mb))
                }
            }
        }
    }
}

/// dim Hom(M, N): the nullspace dimension of the intertwiner system in the
/// unknowns (F, G).
pub fn hom_dim_repr(m: &Rep, n: &Rep, f: &Fp) -> usize {
    let unknowns = n.a * m.a + n.b * m.b;
    let equations = 2 * n.a * m.b;
    if unknowns == 0 {
        return 0;
    }
    if equations == 0 {
        return unknowns;
    }
    let mut sys = Mat::zeros(equations, unknowns);
    // F is n.a x m.a at offset 0 (row-major), G is n.b x m.b after it.
    let fvar = |r: usize, c: usize| r * m.a + c;
    let gvar = |r: usize, c: usize| n.a * m.a + r * m.b + c;
    let mut eq = 0;
    for (mm, nn) in [(&m.ma, &n.ma), (&m.mb, &n.mb)] {
        // (F * mm - nn * G)[i][j] = 0, i < n.a, j < m.b
        for i in 0..n.a {
            for j in 0..m.b {
                for k in 0..m.a {
                    let c = mm[(k, j)];
                    if c != 0 {
                        let v = fvar(i, k);
                        sys[(eq, v)] = f.add(sys[(eq, v)], c);
                    }
                }
                for k in 0..n.b {
                    let c = nn[(i, k)];
                    if c != 0 {
                        let v = gvar(k, j);
                        sys[(eq, v)] = f.sub(sys[(eq, v)], c);
                    }
                }
                eq += 1;
            }
        }
    }
    unknowns - sys.rank(f)
}

/// Euler form <(a1,b1), (a2,b2)> = a1 a2 + b1 b2 - 2 b1 a2; equals
/// dim Hom - dim Ext for any pair of modules.
pub fn euler_form(d1: DimVector, d2: DimVector) -> i64 {
    d1.a as i64 * d2.a as i64 + d1.b as i64 * d2.b as i64 - 2 * d1.b as i64 * d2.a as i64
}

/// dim Ext^1(M, N) through the Euler form.
pub fn ext_dim_repr(m: &Rep, n: &Rep, f: &Fp) -> usize {
    let hom = hom_dim_repr(m, n, f) as i64;
    let e = hom - euler_form(m.dim_vector(), n.dim_vector());
    debug_assert!(e >= 0, "Ext dimension must be >= 0");
    e as usize
}
