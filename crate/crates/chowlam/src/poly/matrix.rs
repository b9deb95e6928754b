//! Exact rational matrices and matrices of polynomials.

use super::{Polynomial, RingRef};
use crate::error::{Error, Result};
use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Dense matrix of exact rationals, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigRational>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count mismatch");
        RationalMatrix { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = BigRational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        RationalMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&v| BigRational::from_integer(BigInt::from(v)))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut BigRational {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> RationalMatrix {
        let mut out = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.get_mut(j, i) = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = a * other.get(k, j);
                    *out.get_mut(i, j) += v;
                }
            }
        }
        out
    }

    /// Vertically stacks `self` on top of `other`.
    pub fn stack(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        RationalMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Reduced row echelon form; returns pivot column indices.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    let a = self.get(pr, j).clone();
                    let b = self.get(r, j).clone();
                    *self.get_mut(pr, j) = b;
                    *self.get_mut(r, j) = a;
                }
            }
            let inv = self.get(r, c).recip();
            for j in 0..self.cols {
                let v = self.get(r, j) * &inv;
                *self.get_mut(r, j) = v;
            }
            for i in 0..self.rows {
                if i != r && !self.get(i, c).is_zero() {
                    let factor = self.get(i, c).clone();
                    for j in 0..self.cols {
                        let v = self.get(i, j) - &factor * self.get(r, j);
                        *self.get_mut(i, j) = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right kernel {x : M x = 0}, returned as rows.
    pub fn right_kernel(&self) -> RationalMatrix {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut rows = Vec::new();
        for &fc in &free {
            let mut v = vec![BigRational::zero(); self.cols];
            v[fc] = BigRational::one();
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = -m.get(ri, fc).clone();
            }
            rows.push(v);
        }
        if rows.is_empty() {
            RationalMatrix::zero(0, self.cols)
        } else {
            RationalMatrix::from_rows(rows)
        }
    }

    pub fn det(&self) -> BigRational {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = BigRational::one();
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return BigRational::zero();
            };
            if pr != c {
                det = -det;
                for j in 0..n {
                    let a = m.get(pr, j).clone();
                    let b = m.get(c, j).clone();
                    *m.get_mut(pr, j) = b;
                    *m.get_mut(c, j) = a;
                }
            }
            det *= m.get(c, c).clone();
            let inv = m.get(c, c).recip();
            for i in c + 1..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c) * &inv;
                for j in c..n {
                    let v = m.get(i, j) - &factor * m.get(c, j);
                    *m.get_mut(i, j) = v;
                }
            }
        }
        det
    }

    /// Minor on the given row and column subsets (ascending indices).
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> BigRational {
        assert_eq!(rows.len(), cols.len());
        let k = rows.len();
        let mut sub = RationalMatrix::zero(k, k);
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                *sub.get_mut(a, b) = self.get(i, j).clone();
            }
        }
        sub.det()
    }

    /// All size×size minors in lexicographic order of (row set, column set).
    pub fn minors(&self, size: usize) -> Result<Vec<BigRational>> {
        if size > self.rows.min(self.cols) {
            return Err(Error::SizeTooLarge);
        }
        let mut out = Vec::new();
        for rows in (0..self.rows).combinations(size) {
            for cols in (0..self.cols).combinations(size) {
                out.push(self.minor(&rows, &cols));
            }
        }
        Ok(out)
    }
}

/// Dense matrix of polynomials over one shared ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    pub rows: usize,
    pub cols: usize,
    ring: RingRef,
    data: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(ring: &RingRef, rows: usize, cols: usize, data: Vec<Polynomial>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count mismatch");
        assert!(data.iter().all(|p| super::same_ring(p.ring(), ring)));
        PolyMatrix {
            rows,
            cols,
            ring: ring.clone(),
            data,
        }
    }

    pub fn from_rows(ring: &RingRef, rows: Vec<Vec<Polynomial>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Self::new(ring, r, c, rows.into_iter().flatten().collect())
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.data[i * self.cols + j]
    }

    pub fn stack(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        PolyMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            ring: self.ring.clone(),
            data,
        }
    }

    /// Determinant by Laplace expansion along the first row.
    pub fn det(&self) -> Polynomial {
        assert_eq!(self.rows, self.cols);
        let all: Vec<usize> = (0..self.rows).collect();
        self.det_rec(&all, &all)
    }

    fn det_rec(&self, rows: &[usize], cols: &[usize]) -> Polynomial {
        let n = rows.len();
        if n == 0 {
            return Polynomial::one(&self.ring);
        }
        if n == 1 {
            return self.get(rows[0], cols[0]).clone();
        }
        let mut acc = Polynomial::zero(&self.ring);
        let sub_rows = &rows[1..];
        for (j, &c) in cols.iter().enumerate() {
            let e = self.get(rows[0], c);
            if e.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols
                .iter()
                .enumerate()
                .filter(|&(jj, _)| jj != j)
                .map(|(_, &cc)| cc)
                .collect();
            let cofactor = self.det_rec(sub_rows, &rest);
            let term = e.mul(&cofactor);
            if j % 2 == 0 {
                acc = acc.add(&term);
            } else {
                acc = acc.sub(&term);
            }
        }
        acc
    }

    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Polynomial {
        assert_eq!(rows.len(), cols.len());
        self.det_rec(rows, cols)
    }

    /// All size×size minors in lexicographic order of (row set, column set).
    pub fn minors(&self, size: usize) -> Result<Vec<Polynomial>> {
        if size > self.rows.min(self.cols) {
            return Err(Error::SizeTooLarge);
        }
        let mut out = Vec::new();
        for rows in (0..self.rows).combinations(size) {
            for cols in (0..self.cols).combinations(size) {
                out.push(self.minor(&rows, &cols));
            }
        }
        Ok(out)
    }
}

/// matrix_minors over a polynomial matrix (the spec operation).
pub fn matrix_minors(m: &PolyMatrix, size: usize) -> Result<Vec<Polynomial>> {
    m.minors(size)
}

/// Jacobian matrix: entry (i, j) is d fs[i] / d vars[j].
pub fn jacobian(fs: &[Polynomial], vars: &[&str]) -> Result<PolyMatrix> {
    let ring = fs
        .first()
        .map(|f| f.ring().clone())
        .ok_or_else(|| Error::InvalidInput("jacobian of empty list".into()))?;
    let mut idx = Vec::with_capacity(vars.len());
    for v in vars {
        idx.push(
            ring.var_index(v)
                .ok_or_else(|| Error::UndeclaredVariable(v.to_string()))?,
        );
    }
    let mut data = Vec::with_capacity(fs.len() * vars.len());
    for f in fs {
        assert!(super::same_ring(f.ring(), &ring));
        for &j in &idx {
            data.push(f.derivative(j));
        }
    }
    Ok(PolyMatrix::new(&ring, fs.len(), vars.len(), data))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, PolyRing};
    use rand::{Rng, SeedableRng};

    #[test]
    fn identity_determinant() {
        let m = RationalMatrix::identity(3);
        assert_eq!(m.det(), BigRational::one());
        assert_eq!(m.minors(3).unwrap(), vec![BigRational::one()]);
    }

    #[test]
    fn random_minors_match_cofactor_expansion() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let rows: Vec<Vec<i64>> = (0..2)
                .map(|_| (0..4).map(|_| rng.gen_range(-9..=9)).collect())
                .collect();
            let m = RationalMatrix::from_i64_rows(&rows);
            let minors = m.minors(2).unwrap();
            assert_eq!(minors.len(), 6);
            // cofactor oracle: q_{ij} = a_i b_j - a_j b_i
            let mut k = 0;
            for i in 0..4 {
                for j in (i + 1)..4 {
                    let direct = m.get(0, i) * m.get(1, j) - m.get(0, j) * m.get(1, i);
                    assert_eq!(minors[k], direct);
                    k += 1;
                }
            }
        }
    }

    #[test]
    fn det_multiplicative_on_random_3x3() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..30 {
            let a = RationalMatrix::from_i64_rows(
                &(0..3)
                    .map(|_| (0..3).map(|_| rng.gen_range(-5..=5)).collect())
                    .collect::<Vec<_>>(),
            );
            let b = RationalMatrix::from_i64_rows(
                &(0..3)
                    .map(|_| (0..3).map(|_| rng.gen_range(-5..=5)).collect())
                    .collect::<Vec<_>>(),
            );
            assert_eq!(a.mul(&b).det(), a.det() * b.det());
        }
    }

    #[test]
    fn kernel_is_exact() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for _ in 0..20 {
            let m = RationalMatrix::from_i64_rows(
                &(0..3)
                    .map(|_| (0..5).map(|_| rng.gen_range(-7..=7)).collect())
                    .collect::<Vec<_>>(),
            );
            let k = m.right_kernel();
            assert_eq!(k.rows + m.rank(), 5);
            for i in 0..k.rows {
                for r in 0..m.rows {
                    let dot: BigRational = (0..5).map(|j| m.get(r, j) * k.get(i, j)).sum();
                    assert!(dot.is_zero());
                }
            }
        }
    }

    #[test]
    fn poly_jacobian_matches_spec_examples() {
        let r = PolyRing::new(["x0", "x1", "x2", "x3"]).unwrap();
        let f = parse_polynomial("x0*x3 - x1*x2", &r).unwrap();
        let j = jacobian(&[f], &["x0", "x1", "x2", "x3"]).unwrap();
        assert_eq!(j.get(0, 0), &parse_polynomial("x3", &r).unwrap());
        assert_eq!(j.get(0, 1), &parse_polynomial("-x2", &r).unwrap());
        assert_eq!(j.get(0, 2), &parse_polynomial("-x1", &r).unwrap());
        assert_eq!(j.get(0, 3), &parse_polynomial("x0", &r).unwrap());
    }

    #[test]
    fn poly_det_three_by_three() {
        let r = PolyRing::new(["x", "y"]).unwrap();
        let p = |s: &str| parse_polynomial(s, &r).unwrap();
        let m = PolyMatrix::from_rows(
            &r,
            vec![
                vec![p("x"), p("y"), p("0")],
                vec![p("0"), p("x"), p("y")],
                vec![p("y"), p("0"), p("x")],
            ],
        );
        assert_eq!(m.det(), p("x^3 + y^3"));
    }
}
