//! Exact linear algebra over a prime field: dense matrices, sparse column
//! operators, an incremental echelon basis and univariate polynomials.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalars::PrimeField;

/// Dense row-major matrix with entries in `0..p`.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    f: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(fm, "Matrix {}x{} over F_{}", self.rows, self.cols, self.f.p())?;
        for r in 0..self.rows {
            writeln!(fm, "  {:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(f: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix { f, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(f: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(f, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn scalar(f: PrimeField, n: usize, c: u64) -> Self {
        let mut m = Self::zeros(f, n, n);
        for i in 0..n {
            m.data[i * n + i] = c % f.p();
        }
        m
    }

    pub fn from_columns(f: PrimeField, rows: usize, columns: &[Vec<u64>]) -> Self {
        let mut m = Self::zeros(f, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, &v) in col.iter().enumerate() {
                m.data[i * m.cols + j] = v;
            }
        }
        m
    }

    pub fn field(&self) -> PrimeField {
        self.f
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.f.p();
    }

    pub fn column(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u64::from(i == j)))
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| self.f.add(a, b)).collect();
        Matrix { data, ..*self }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| self.f.sub(a, b)).collect();
        Matrix { data, ..*self }
    }

    pub fn scale(&self, c: u64) -> Matrix {
        let data = self.data.iter().map(|&a| self.f.mul(a, c)).collect();
        Matrix { data, ..*self }
    }

    /// `self + c * I`.
    pub fn add_identity(&self, c: u64) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        for i in 0..self.rows {
            let k = i * self.cols + i;
            m.data[k] = self.f.add(m.data[k], c % self.f.p());
        }
        m
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let p = self.f.p();
        let mut out = Matrix::zeros(self.f, self.rows, other.cols);
        for i in 0..self.rows {
            let row = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                let orow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, &b) in row.iter_mut().zip(orow) {
                    *o = (*o + a * b) % p;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(self.cols, v.len());
        let p = self.f.p();
        (0..self.rows)
            .map(|i| {
                self.data[i * self.cols..(i + 1) * self.cols]
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| (acc + a * b) % p)
            })
            .collect()
    }

    pub fn pow(&self, k: usize) -> Matrix {
        let mut acc = Matrix::identity(self.f, self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new(self.f, self.rows);
        for j in 0..self.cols {
            ech.insert(&self.column(j));
        }
        ech.rank()
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::Arithmetic("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let f = self.f;
        let mut a = self.clone();
        let mut inv = Matrix::identity(f, n);
        for c in 0..n {
            let piv = (c..n)
                .find(|&r| a.get(r, c) != 0)
                .ok_or_else(|| Error::Arithmetic("singular matrix".into()))?;
            if piv != c {
                for j in 0..n {
                    a.data.swap(piv * n + j, c * n + j);
                    inv.data.swap(piv * n + j, c * n + j);
                }
            }
            let s = f.inv(a.get(c, c))?;
            for j in 0..n {
                a.data[c * n + j] = f.mul(a.data[c * n + j], s);
                inv.data[c * n + j] = f.mul(inv.data[c * n + j], s);
            }
            for r in 0..n {
                let t = a.get(r, c);
                if r == c || t == 0 {
                    continue;
                }
                for j in 0..n {
                    a.data[r * n + j] = f.sub(a.data[r * n + j], f.mul(t, a.data[c * n + j]));
                    inv.data[r * n + j] = f.sub(inv.data[r * n + j], f.mul(t, inv.data[c * n + j]));
                }
            }
        }
        Ok(inv)
    }

    /// Entries flattened row by row; used to treat matrices as vectors.
    pub fn flatten(&self) -> &[u64] {
        &self.data
    }
}

/// Sparse operator stored by columns: column `j` lists `(row, value)` pairs
/// with strictly increasing rows and nonzero values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    f: PrimeField,
    dim: usize,
    cols: Vec<Vec<(usize, u64)>>,
}

/// Sorts, merges duplicates and drops zeros.
pub fn normalize_sparse(f: PrimeField, mut entries: Vec<(usize, u64)>) -> Vec<(usize, u64)> {
    entries.sort_unstable_by_key(|e| e.0);
    let mut out: Vec<(usize, u64)> = Vec::with_capacity(entries.len());
    for (i, v) in entries {
        match out.last_mut() {
            Some(last) if last.0 == i => last.1 = f.add(last.1, v),
            _ => out.push((i, v % f.p())),
        }
    }
    out.retain(|e| e.1 != 0);
    out
}

impl SparseMatrix {
    /// Square operator on a space of dimension `dim`.
    pub fn from_columns(f: PrimeField, dim: usize, cols: Vec<Vec<(usize, u64)>>) -> Self {
        assert_eq!(cols.len(), dim);
        let cols = cols.into_iter().map(|c| normalize_sparse(f, c)).collect();
        SparseMatrix { f, dim, cols }
    }

    pub fn identity(f: PrimeField, dim: usize) -> Self {
        SparseMatrix { f, dim, cols: (0..dim).map(|j| vec![(j, 1)]).collect() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn column(&self, j: usize) -> &[(usize, u64)] {
        &self.cols[j]
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.dim);
        let p = self.f.p();
        let mut out = vec![0u64; self.dim];
        for (j, &x) in v.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for &(i, a) in &self.cols[j] {
                out[i] = (out[i] + a * x) % p;
            }
        }
        out
    }

    /// Applies the operator to a sparse vector; output is normalized.
    pub fn apply_sparse(&self, v: &[(usize, u64)]) -> Vec<(usize, u64)> {
        let mut acc = Vec::new();
        for &(j, x) in v {
            for &(i, a) in &self.cols[j] {
                acc.push((i, self.f.mul(a, x)));
            }
        }
        normalize_sparse(self.f, acc)
    }

    /// `self * other`.
    pub fn compose(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.dim, other.dim);
        let f = self.f;
        let cols = other
            .cols
            .iter()
            .map(|col| {
                let mut acc = Vec::new();
                for &(k, b) in col {
                    for &(i, a) in &self.cols[k] {
                        acc.push((i, f.mul(a, b)));
                    }
                }
                normalize_sparse(f, acc)
            })
            .collect();
        SparseMatrix { f, dim: self.dim, cols }
    }

    pub fn linear_combination(terms: &[(u64, &SparseMatrix)]) -> SparseMatrix {
        let first = terms[0].1;
        let f = first.f;
        let cols = (0..first.dim)
            .map(|j| {
                let mut acc = Vec::new();
                for &(c, m) in terms {
                    for &(i, a) in &m.cols[j] {
                        acc.push((i, f.mul(a, c)));
                    }
                }
                normalize_sparse(f, acc)
            })
            .collect();
        SparseMatrix { f, dim: first.dim, cols }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    /// Number of columns where the two operators differ.
    pub fn diff_columns(&self, other: &SparseMatrix) -> usize {
        self.cols.iter().zip(&other.cols).filter(|(a, b)| a != b).count()
    }
}

#[derive(Clone, Debug)]
struct EchelonRow {
    pivot: usize,
    vec: Vec<u64>,
    coords: Vec<u64>,
}

/// Incrementally built echelon basis of a subspace of `F_p^dim`.
///
/// Rows are kept sorted by pivot with pivot entry 1 and zeros before the
/// pivot, so reduction in pivot order yields a remainder that vanishes on
/// every pivot column. That remainder depends only on the coset.
#[derive(Clone, Debug)]
pub struct Echelon {
    f: PrimeField,
    dim: usize,
    rows: Vec<EchelonRow>,
    inserted: usize,
}

impl Echelon {
    pub fn new(f: PrimeField, dim: usize) -> Self {
        Echelon { f, dim, rows: Vec::new(), inserted: 0 }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.pivot).collect()
    }

    pub fn basis(&self) -> impl Iterator<Item = &[u64]> {
        self.rows.iter().map(|r| r.vec.as_slice())
    }

    /// Reduces `v` and returns the remainder together with the coefficients
    /// `c` such that `v = remainder + sum_k c_k * inserted_k`.
    fn reduce_tracked(&self, v: &[u64]) -> (Vec<u64>, Vec<u64>) {
        assert_eq!(v.len(), self.dim);
        let f = self.f;
        let p = f.p();
        let mut rem = v.to_vec();
        let mut coeffs = vec![0u64; self.inserted];
        for row in &self.rows {
            let c = rem[row.pivot];
            if c == 0 {
                continue;
            }
            let neg = f.neg(c);
            for (r, &x) in rem[row.pivot..].iter_mut().zip(&row.vec[row.pivot..]) {
                *r = (*r + neg * x) % p;
            }
            for (k, &x) in row.coords.iter().enumerate() {
                coeffs[k] = (coeffs[k] + c * x) % p;
            }
        }
        (rem, coeffs)
    }

    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.dim);
        let f = self.f;
        let p = f.p();
        let mut rem = v.to_vec();
        for row in &self.rows {
            let c = rem[row.pivot];
            if c == 0 {
                continue;
            }
            let neg = f.neg(c);
            for (r, &x) in rem[row.pivot..].iter_mut().zip(&row.vec[row.pivot..]) {
                *r = (*r + neg * x) % p;
            }
        }
        rem
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Inserts `v` as the next original vector. Returns false when `v` was
    /// already in the span; the original counter advances either way.
    pub fn insert(&mut self, v: &[u64]) -> bool {
        let f = self.f;
        let (mut rem, coeffs) = self.reduce_tracked(v);
        let idx = self.inserted;
        self.inserted += 1;
        let Some(pivot) = rem.iter().position(|&x| x != 0) else {
            return false;
        };
        let mut coords: Vec<u64> = coeffs.iter().map(|&c| f.neg(c)).collect();
        coords.push(1);
        debug_assert_eq!(coords.len(), idx + 1);
        let s = f.inv(rem[pivot]).expect("pivot is nonzero");
        for x in rem.iter_mut() {
            *x = f.mul(*x, s);
        }
        for x in coords.iter_mut() {
            *x = f.mul(*x, s);
        }
        let pos = self.rows.partition_point(|r| r.pivot < pivot);
        self.rows.insert(pos, EchelonRow { pivot, vec: rem, coords });
        // Older rows keep shorter coordinate vectors; pad lazily in solve.
        for row in self.rows.iter_mut() {
            row.coords.resize(self.inserted, 0);
        }
        true
    }

    /// Coordinates of `v` with respect to the inserted vectors, if `v` lies
    /// in their span. Dependent inserted vectors receive coefficient zero.
    pub fn solve(&self, v: &[u64]) -> Option<Vec<u64>> {
        let (rem, coeffs) = self.reduce_tracked(v);
        rem.iter().all(|&x| x == 0).then_some(coeffs)
    }
}

/// Polynomial over `F_p`, coefficients from degree 0 upward, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    f: PrimeField,
    coeffs: Vec<u64>,
}

impl Poly {
    pub fn new(f: PrimeField, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= f.p();
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { f, coeffs }
    }

    pub fn one(f: PrimeField) -> Self {
        Poly::new(f, vec![1])
    }

    /// `x - root`.
    pub fn linear(f: PrimeField, root: u64) -> Self {
        Poly::new(f, vec![f.neg(root % f.p()), 1])
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| self.f.add(self.f.mul(acc, x), c))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::new(self.f, vec![]);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = self.f.add(out[i + j], self.f.mul(a, b));
            }
        }
        Poly::new(self.f, out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let out = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                self.f.sub(a, b)
            })
            .collect();
        Poly::new(self.f, out)
    }

    pub fn pow(&self, k: usize) -> Poly {
        (0..k).fold(Poly::one(self.f), |acc, _| acc.mul(self))
    }

    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let dd = divisor
            .degree()
            .ok_or_else(|| Error::Arithmetic("polynomial division by zero".into()))?;
        let f = self.f;
        let lead_inv = f.inv(divisor.coeffs[dd])?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len().saturating_sub(dd).max(1)];
        while rem.len() > dd {
            let k = rem.len() - 1;
            let c = f.mul(rem[k], lead_inv);
            if c != 0 {
                quot[k - dd] = c;
                for (i, &b) in divisor.coeffs.iter().enumerate() {
                    rem[k - dd + i] = f.sub(rem[k - dd + i], f.mul(c, b));
                }
            }
            rem.pop();
        }
        Ok((Poly::new(f, quot), Poly::new(f, rem)))
    }

    /// `(g, s, t)` with `s*self + t*other = g` and `g` monic.
    pub fn ext_gcd(&self, other: &Poly) -> Result<(Poly, Poly, Poly)> {
        let f = self.f;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::new(f, vec![]));
        let (mut t0, mut t1) = (Poly::new(f, vec![]), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let lead = *r0
            .coeffs
            .last()
            .ok_or_else(|| Error::Arithmetic("gcd of two zero polynomials".into()))?;
        let inv = f.inv(lead)?;
        let sc = |p: &Poly| Poly::new(f, p.coeffs.iter().map(|&c| f.mul(c, inv)).collect());
        Ok((sc(&r0), sc(&s0), sc(&t0)))
    }

    /// Evaluates at a square matrix by Horner's rule.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let n = m.rows();
        let mut acc = Matrix::zeros(self.f, n, n);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(m).add_identity(c);
        }
        acc
    }
}

/// Minimal polynomial (monic) of a square matrix, found as the first linear
/// dependency among `I, M, M^2, ...`.
pub fn minimal_polynomial(m: &Matrix) -> Poly {
    let f = m.field();
    let n = m.rows();
    let mut ech = Echelon::new(f, n * n);
    let mut power = Matrix::identity(f, n);
    loop {
        if let Some(c) = ech.solve(power.flatten()) {
            let mut coeffs: Vec<u64> = c.iter().map(|&x| f.neg(x)).collect();
            coeffs.push(1);
            return Poly::new(f, coeffs);
        }
        ech.insert(power.flatten());
        power = power.mul(m);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    fn mat(f: PrimeField, rows: &[&[u64]]) -> Matrix {
        let cols = rows[0].len();
        let mut m = Matrix::zeros(f, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    #[test]
    fn inverse_roundtrip() {
        let f = f7();
        let a = mat(f, &[&[1, 2, 0], &[0, 1, 3], &[4, 0, 1]]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        let singular = mat(f, &[&[1, 2], &[2, 4]]);
        assert!(singular.inverse().is_err());
        assert_eq!(singular.rank(), 1);
    }

    #[test]
    fn echelon_reduction_is_canonical() {
        let f = f7();
        let mut e = Echelon::new(f, 3);
        assert!(e.insert(&[1, 1, 0]));
        assert!(e.insert(&[0, 1, 1]));
        assert!(!e.insert(&[1, 2, 1]));
        // [1,0,0] and [0,6,0] differ by [1,1,0], so they share a remainder.
        assert_eq!(e.reduce(&[1, 0, 0]), e.reduce(&[0, 6, 0]));
        let c = e.solve(&[2, 3, 1]).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(c[2], 0);
        assert_eq!((c[0], c[1]), (2, 1));
    }

    #[test]
    fn minimal_polynomial_of_jordan_block() {
        let f = f7();
        // Jordan block with eigenvalue 2 of size 2 plus a 1x1 block with eigenvalue 3.
        let m = mat(f, &[&[2, 1, 0], &[0, 2, 0], &[0, 0, 3]]);
        let mp = minimal_polynomial(&m);
        let expect = Poly::linear(f, 2).pow(2).mul(&Poly::linear(f, 3));
        assert_eq!(mp, expect);
        assert!(mp.eval_matrix(&m).is_zero());
    }

    #[test]
    fn ext_gcd_bezout() {
        let f = f7();
        let a = Poly::linear(f, 1).pow(2);
        let b = Poly::linear(f, 4).mul(&Poly::linear(f, 5));
        let (g, s, t) = a.ext_gcd(&b).unwrap();
        assert_eq!(g, Poly::one(f));
        assert_eq!(s.mul(&a).sub(&t.mul(&b).mul(&Poly::new(f, vec![6]))), Poly::one(f));
    }

    #[test]
    fn sparse_compose_matches_dense() {
        let f = f7();
        let a = SparseMatrix::from_columns(f, 2, vec![vec![(0, 1), (1, 2)], vec![(1, 3)]]);
        let b = SparseMatrix::from_columns(f, 2, vec![vec![(1, 1)], vec![(0, 5), (1, 1)]]);
        let ab = a.compose(&b);
        for v in [[1u64, 0], [0, 1], [3, 4]] {
            assert_eq!(ab.apply(&v), a.apply(&b.apply(&v)));
        }
    }

    proptest::proptest! {
        #[test]
        fn random_invertible_products(entries in proptest::collection::vec(0u64..7, 9)) {
            let f = f7();
            let mut m = Matrix::zeros(f, 3, 3);
            for (k, &v) in entries.iter().enumerate() {
                m.set(k / 3, k % 3, v);
            }
            match m.inverse() {
                Ok(inv) => {
                    proptest::prop_assert!(inv.mul(&m).is_identity());
                    proptest::prop_assert_eq!(m.rank(), 3);
                }
                Err(_) => proptest::prop_assert!(m.rank() < 3),
            }
            proptest::prop_assert!(minimal_polynomial(&m).eval_matrix(&m).is_zero());
        }
    }
}
