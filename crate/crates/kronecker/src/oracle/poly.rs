//! Closed points of the projective line over F_q: the point at infinity plus
//! monic irreducible polynomials, used as tube labels.

use super::matrix::Fp;

/// A closed point: infinity, or a monic irreducible polynomial given by its
/// coefficients in ascending order (the leading 1 included).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point {
    Infinity,
    Monic(Vec<u8>),
}

impl Point {
    pub fn degree(&self) -> u32 {
        match self {
            Point::Infinity => 1,
            Point::Monic(c) => (c.len() - 1) as u32,
        }
    }
}

impl std::fmt::Display for Point {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Point::Infinity => write!(f, "inf"),
            Point::Monic(c) => {
                let terms: Vec<String> = c
                    .iter()
                    .enumerate()
                    .rev()
                    .filter(|&(i, &v)| v != 0 || i == c.len() - 1)
                    .map(|(i, &v)| match i {
                        0 => format!("{v}"),
                        1 => format!("{v}t"),
                        _ => format!("{v}t^{i}"),
                    })
                    .collect();
                write!(f, "{}", terms.join("+"))
            }
        }
    }
}

/// Product of polynomials in ascending-coefficient form.
pub fn poly_mul(a: &[u8], b: &[u8], f: &Fp) -> Vec<u8> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u8; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    out
}

pub fn poly_pow(p: &[u8], t: u32, f: &Fp) -> Vec<u8> {
    let mut out = vec![1u8];
    for _ in 0..t {
        out = poly_mul(&out, p, f);
    }
    out
}

/// Remainder of a by monic b.
fn poly_rem(a: &[u8], b: &[u8], f: &Fp) -> Vec<u8> {
    debug_assert_eq!(*b.last().unwrap(), 1);
    let deg_b = b.len() - 1;
    let mut r = a.to_vec();
    while r.len() > deg_b {
        let lead = *r.last().unwrap();
        if lead != 0 {
            let shift = r.len() - b.len();
            for (i, &bc) in b.iter().enumerate() {
                r[shift + i] = f.sub(r[shift + i], f.mul(lead, bc));
            }
        }
        r.pop();
    }
    r
}

fn divides(b: &[u8], a: &[u8], f: &Fp) -> bool {
    poly_rem(a, b, f).iter().all(|&c| c == 0)
}

/// All monic irreducible polynomials of degree d over F_q, by trial division.
pub fn irreducibles(d: u32, f: &Fp) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut coeffs = vec![0u8; d as usize + 1];
    coeffs[d as usize] = 1;
    // low-degree divisors to test against
    let mut divisors: Vec<Vec<u8>> = Vec::new();
    for dd in 1..=(d / 2) {
        divisors.extend(irreducibles(dd, f));
    }
    fn rec(coeffs: &mut Vec<u8>, i: usize, d: usize, divisors: &[Vec<u8>], f: &Fp, out: &mut Vec<Vec<u8>>) {
        if i == d {
            if divisors.iter().all(|b| !divides(b, coeffs, f)) {
                out.push(coeffs.clone());
            }
            return;
        }
        for v in f.elements() {
            coeffs[i] = v;
            rec(coeffs, i + 1, d, divisors, f, out);
        }
        coeffs[i] = 0;
    }
    if d == 1 {
        for v in f.elements() {
            out.push(vec![v, 1]);
        }
    } else {
        rec(&mut coeffs, 0, d as usize, &divisors, f, &mut out);
    }
    out
}

/// All points of the given degree: degree 1 adds the point at infinity.
pub fn points_of_degree(d: u32, f: &Fp) -> Vec<Point> {
    let mut out = Vec::new();
    if d == 1 {
        out.push(Point::Infinity);
    }
    out.extend(irreducibles(d, f).into_iter().map(Point::Monic));
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreducible_counts() {
        let f2 = Fp::new(2).unwrap();
        assert_eq!(irreducibles(1, &f2).len(), 2);
        assert_eq!(irreducibles(2, &f2), vec![vec![1, 1, 1]]);
        assert_eq!(irreducibles(3, &f2).len(), 2);
        assert_eq!(irreducibles(4, &f2).len(), 3);
        let f3 = Fp::new(3).unwrap();
        assert_eq!(irreducibles(2, &f3).len(), 3);
        assert_eq!(irreducibles(3, &f3).len(), 8);
    }

    #[test]
    fn point_counts_include_infinity() {
        let f2 = Fp::new(2).unwrap();
        assert_eq!(points_of_degree(1, &f2).len(), 3);
        assert_eq!(points_of_degree(2, &f2).len(), 1);
        let f5 = Fp::new(5).unwrap();
        assert_eq!(points_of_degree(1, &f5).len(), 6);
    }

    #[test]
    fn poly_arithmetic() {
        let f = Fp::new(2).unwrap();
        // (t+1)^2 = t^2 + 1 over F_2
        assert_eq!(poly_pow(&[1, 1], 2, &f), vec![1, 0, 1]);
        let f3 = Fp::new(3).unwrap();
        assert_eq!(poly_mul(&[1, 1], &[2, 1], &f3), vec![2, 0, 1]);
        assert!(!divides(&[1, 1], &[1, 0, 1], &f3));
        assert!(divides(&[1, 1], &[2, 0, 1], &f3));
    }
}
