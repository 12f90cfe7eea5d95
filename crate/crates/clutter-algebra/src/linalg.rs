//! Exact integer linear algebra.

use crate::error::{Error, Result};
use crate::int::{Int, IntVec, dot, is_zero_vec, make_primitive};
use num_traits::{One, Zero};
use serde::Serialize;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Int>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix { rows, cols, data: vec![Int::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Int::one());
        }
        m
    }

    pub fn from_rows(rows: &[IntVec]) -> IntMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        IntMatrix { rows: r, cols: c, data: rows.iter().flatten().cloned().collect() }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> IntMatrix {
        let rows: Vec<IntVec> = rows.iter().map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect();
        IntMatrix::from_rows(&rows)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[IntVec]) -> IntMatrix {
        let c = cols.len();
        let r = cols.first().map_or(0, |x| x.len());
        let mut m = IntMatrix::zeros(r, c);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), r, "ragged columns");
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &Int {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Int) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> IntVec {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> IntVec {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<IntVec> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn columns(&self) -> Vec<IntVec> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut p = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Int::zero();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if !a.is_zero() {
                        acc += a * other.get(k, j);
                    }
                }
                p.set(i, j, acc);
            }
        }
        p
    }

    pub fn mul_vec(&self, v: &[Int]) -> IntVec {
        assert_eq!(self.cols, v.len(), "dimension mismatch in product");
        (0..self.rows).map(|i| dot(&self.data[i * self.cols..(i + 1) * self.cols], v)).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn is_binary(&self) -> bool {
        self.data.iter().all(|x| x.is_zero() || x.is_one())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|x| !x.is_negative())
    }

    /// Appends a row at the bottom.
    pub fn with_row(&self, row: &[Int]) -> IntMatrix {
        assert_eq!(row.len(), self.cols);
        let mut data = self.data.clone();
        data.extend(row.iter().cloned());
        IntMatrix { rows: self.rows + 1, cols: self.cols, data }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> IntMatrix {
        let mut m = IntMatrix::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.set(a, b, self.get(i, j).clone());
            }
        }
        m
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[a] += q * row[b]
    fn add_row(&mut self, a: usize, b: usize, q: &Int) {
        for j in 0..self.cols {
            let v = self.get(b, j);
            if !v.is_zero() {
                let nv = self.get(a, j) + q * v;
                self.set(a, j, nv);
            }
        }
    }

    /// col[a] += q * col[b]
    fn add_col(&mut self, a: usize, b: usize, q: &Int) {
        for i in 0..self.rows {
            let v = self.get(i, b);
            if !v.is_zero() {
                let nv = self.get(i, a) + q * v;
                self.set(i, a, nv);
            }
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let v = -self.get(a, j);
            self.set(a, j, v);
        }
    }

    fn negate_col(&mut self, a: usize) {
        for i in 0..self.rows {
            let v = -self.get(i, a);
            self.set(i, a, v);
        }
    }

    /// Rank by fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.row_vecs();
        let mut rank = 0;
        let mut prev = Int::one();
        for c in 0..self.cols {
            let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
            m.swap(rank, p);
            for i in rank + 1..m.len() {
                for j in c + 1..self.cols {
                    let v = &(&m[rank][c] * &m[i][j]) - &(&m[i][c] * &m[rank][j]);
                    m[i][j] = &v / &prev;
                }
                m[i][c] = Int::zero();
            }
            prev = m[rank][c].clone();
            rank += 1;
            if rank == m.len() {
                break;
            }
        }
        rank
    }

    /// Determinant by Bareiss elimination.
    pub fn det(&self) -> Int {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Int::one();
        }
        let mut m = self.row_vecs();
        let mut sign = false;
        let mut prev = Int::one();
        for k in 0..n {
            if m[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else { return Int::zero() };
                m.swap(k, p);
                sign = !sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = &v / &prev;
                }
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        if sign { -d } else { d }
    }

    /// Adjugate of a square matrix, with `adj * M = det * I`.
    pub fn adjugate(&self) -> IntMatrix {
        let n = self.rows;
        assert_eq!(n, self.cols);
        let mut adj = IntMatrix::zeros(n, n);
        if n == 1 {
            adj.set(0, 0, Int::one());
            return adj;
        }
        for i in 0..n {
            for j in 0..n {
                let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
                let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
                let minor = self.submatrix(&rows, &cols).det();
                adj.set(i, j, if (i + j) % 2 == 0 { minor } else { -minor });
            }
        }
        adj
    }

    /// Parses the matrix text format: `rows cols` then one row per line.
    pub fn parse(text: &str) -> Result<IntMatrix> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty matrix file".into()))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad header '{header}'"))))
            .collect::<Result<_>>()?;
        if dims.len() != 2 {
            return Err(Error::Parse(format!("header must be 'rows cols', got '{header}'")));
        }
        let (r, c) = (dims[0], dims[1]);
        let mut rows = Vec::with_capacity(r);
        for line in lines {
            let row: IntVec = line
                .split_whitespace()
                .map(|t| t.parse::<Int>().map_err(|_| Error::Parse(format!("bad entry '{t}'"))))
                .collect::<Result<_>>()?;
            if row.len() != c {
                return Err(Error::Parse(format!("expected {c} entries, got {}", row.len())));
            }
            rows.push(row);
        }
        if rows.len() != r {
            return Err(Error::Parse(format!("expected {r} rows, got {}", rows.len())));
        }
        if r == 0 || c == 0 {
            return Err(Error::Parse("matrix dimensions must be positive".into()));
        }
        Ok(IntMatrix::from_rows(&rows))
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SnfResult {
    pub diag: Vec<Int>,
    pub left: IntMatrix,
    pub right: IntMatrix,
    pub rank: usize,
    /// Inverse of `left`.
    #[serde(skip)]
    pub left_inverse: IntMatrix,
}

impl SnfResult {
    /// The diagonal matrix `left * M * right`.
    pub fn diagonal_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.left.rows, self.right.rows);
        for (i, x) in self.diag.iter().enumerate() {
            d.set(i, i, x.clone());
        }
        d
    }
}

fn min_abs_entry(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, Int)> = None;
    for i in t..d.rows {
        for j in t..d.cols {
            let v = d.get(i, j);
            if !v.is_zero() {
                let a = v.abs();
                if best.as_ref().is_none_or(|b| a < b.2) {
                    let one = a.is_one();
                    best = Some((i, j, a));
                    if one {
                        return best.map(|b| (b.0, b.1));
                    }
                }
            }
        }
    }
    best.map(|b| (b.0, b.1))
}

/// Smith normal form with unimodular transforms.
pub fn snf(m: &IntMatrix) -> Result<SnfResult> {
    if m.is_zero() {
        return Err(Error::ZeroMatrix);
    }
    let (rows, cols) = (m.rows, m.cols);
    let mut d = m.clone();
    let mut left = IntMatrix::identity(rows);
    let mut linv = IntMatrix::identity(rows);
    let mut right = IntMatrix::identity(cols);
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = min_abs_entry(&d, t) else { break };
        d.swap_rows(t, pi);
        left.swap_rows(t, pi);
        linv.swap_cols(t, pi);
        d.swap_cols(t, pj);
        right.swap_cols(t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if !d.get(i, t).is_zero() {
                    let q = -(d.get(i, t) / d.get(t, t));
                    d.add_row(i, t, &q);
                    left.add_row(i, t, &q);
                    linv.add_col(t, i, &-&q);
                    if !d.get(i, t).is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..cols {
                if !d.get(t, j).is_zero() {
                    let q = -(d.get(t, j) / d.get(t, t));
                    d.add_col(j, t, &q);
                    right.add_col(j, t, &q);
                    if !d.get(t, j).is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                let mut best = (t, t, d.get(t, t).abs());
                for i in t + 1..rows {
                    let a = d.get(i, t).abs();
                    if !a.is_zero() && a < best.2 {
                        best = (i, t, a);
                    }
                }
                for j in t + 1..cols {
                    let a = d.get(t, j).abs();
                    if !a.is_zero() && a < best.2 {
                        best = (t, j, a);
                    }
                }
                d.swap_rows(t, best.0);
                left.swap_rows(t, best.0);
                linv.swap_cols(t, best.0);
                d.swap_cols(t, best.1);
                right.swap_cols(t, best.1);
                continue;
            }
            let p = d.get(t, t).clone();
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !p.divides(d.get(i, j))));
            match bad {
                Some(i) => {
                    let one = Int::one();
                    d.add_row(t, i, &one);
                    left.add_row(t, i, &one);
                    linv.add_col(i, t, &-&one);
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            left.negate_row(t);
            linv.negate_col(t);
        }
        t += 1;
    }
    let diag: Vec<Int> = (0..t).map(|i| d.get(i, i).clone()).collect();
    Ok(SnfResult { rank: diag.len(), diag, left, right, left_inverse: linv })
}

/// Product of the first `r` invariant factors, i.e. the gcd of the nonzero r×r minors.
pub fn delta_r(m: &IntMatrix, r: usize) -> Result<Int> {
    let s = snf(m)?;
    if r == 0 || r > s.rank {
        return Err(Error::RankExceeded { r, rank: s.rank });
    }
    Ok(s.diag[..r].iter().fold(Int::one(), |a, b| a * b))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeQuotient {
    pub free_rank: usize,
    pub torsion: Vec<Int>,
}

impl LatticeQuotient {
    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }
}

/// Z^rows modulo the lattice spanned by the columns.
pub fn lattice_quotient(m: &IntMatrix) -> Result<LatticeQuotient> {
    let s = snf(m)?;
    Ok(LatticeQuotient {
        free_rank: m.rows - s.rank,
        torsion: s.diag.iter().filter(|d| !d.is_one()).cloned().collect(),
    })
}

/// Integral solution of `M x = b`, if one exists.
pub fn solve_integral(m: &IntMatrix, b: &[Int]) -> Result<Option<IntVec>> {
    if b.len() != m.rows {
        return Err(Error::Dimension(format!("matrix has {} rows, vector has {}", m.rows, b.len())));
    }
    if m.is_zero() {
        return Ok(if is_zero_vec(b) { Some(vec![Int::zero(); m.cols]) } else { None });
    }
    let s = snf(m)?;
    let c = s.left.mul_vec(b);
    let mut y = vec![Int::zero(); m.cols];
    for i in 0..m.rows {
        if i < s.rank {
            if !s.diag[i].divides(&c[i]) {
                return Ok(None);
            }
            y[i] = &c[i] / &s.diag[i];
        } else if !c[i].is_zero() {
            return Ok(None);
        }
    }
    let x = s.right.mul_vec(&y);
    debug_assert_eq!(m.mul_vec(&x), b);
    Ok(Some(x))
}

/// Divides by the gcd of the entries; the first nonzero entry is made positive.
pub fn primitive(v: &[Int]) -> Result<IntVec> {
    if is_zero_vec(v) {
        return Err(Error::ZeroVector);
    }
    let mut out = v.to_vec();
    make_primitive(&mut out);
    if out.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in out.iter_mut() {
            *x = -&*x;
        }
    }
    Ok(out)
}

/// The saturated lattice `Z^d ∩ span(gens)` with coordinates.
#[derive(Clone, Debug)]
pub struct Sublattice {
    pub ambient: usize,
    pub rank: usize,
    to: Vec<IntVec>,
    tail: Vec<IntVec>,
    from: Vec<IntVec>,
}

impl Sublattice {
    pub fn of(gens: &[IntVec], ambient: usize) -> Sublattice {
        let nonzero: Vec<IntVec> = gens.iter().filter(|g| !is_zero_vec(g)).cloned().collect();
        if nonzero.is_empty() {
            return Sublattice { ambient, rank: 0, to: vec![], tail: IntMatrix::identity(ambient).row_vecs(), from: vec![] };
        }
        let m = IntMatrix::from_columns(&nonzero);
        let s = snf(&m).expect("nonzero matrix");
        let r = s.rank;
        let rows = s.left.row_vecs();
        let from = (0..r).map(|j| s.left_inverse.column(j)).collect();
        Sublattice { ambient, rank: r, to: rows[..r].to_vec(), tail: rows[r..].to_vec(), from }
    }

    pub fn is_full(&self) -> bool {
        self.rank == self.ambient
    }

    pub fn contains(&self, x: &[Int]) -> bool {
        self.tail.iter().all(|row| dot(row, x).is_zero())
    }

    /// Coordinates of a lattice point, or `None` outside the span.
    pub fn coords(&self, x: &[Int]) -> Option<IntVec> {
        if !self.contains(x) {
            return None;
        }
        Some(self.to.iter().map(|row| dot(row, x)).collect())
    }

    /// Coordinates of a vector already known to lie in the span.
    pub fn coords_unchecked(&self, x: &[Int]) -> IntVec {
        self.to.iter().map(|row| dot(row, x)).collect()
    }

    pub fn lift(&self, y: &[Int]) -> IntVec {
        let mut out = vec![Int::zero(); self.ambient];
        for (col, c) in self.from.iter().zip(y) {
            if !c.is_zero() {
                for (o, v) in out.iter_mut().zip(col) {
                    *o += v * c;
                }
            }
        }
        out
    }

    /// Linear functionals on the span expressed in coordinates: `f(lift(y)) = <g, y>`.
    pub fn pull_functional(&self, f: &[Int]) -> IntVec {
        self.from.iter().map(|col| dot(col, f)).collect()
    }

    /// Extends a functional `g` on coordinates to the ambient space (zero on a complement).
    pub fn push_functional(&self, g: &[Int]) -> IntVec {
        let mut out = vec![Int::zero(); self.ambient];
        for (row, c) in self.to.iter().zip(g) {
            if !c.is_zero() {
                for (o, v) in out.iter_mut().zip(row) {
                    *o += v * c;
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int::ivec;

    #[test]
    fn snf_small() {
        let m = IntMatrix::from_i64_rows(&[vec![2, 4], vec![6, 8]]);
        let s = snf(&m).unwrap();
        assert_eq!(s.diag, ivec(&[2, 4]));
        assert_eq!(s.left.mul(&m).mul(&s.right), s.diagonal_matrix());
        assert_eq!(s.left.mul(&s.left_inverse), IntMatrix::identity(2));
    }

    #[test]
    fn zero_matrix_rejected() {
        assert_eq!(snf(&IntMatrix::zeros(2, 2)).unwrap_err(), Error::ZeroMatrix);
    }

    #[test]
    fn primitive_sign() {
        assert_eq!(primitive(&ivec(&[-3, -6])).unwrap(), ivec(&[1, 2]));
        assert_eq!(primitive(&ivec(&[2, 4, -6])).unwrap(), ivec(&[1, 2, -3]));
        assert!(primitive(&ivec(&[0, 0])).is_err());
    }

    #[test]
    fn sublattice_roundtrip() {
        let g = vec![ivec(&[1, 1, 0]), ivec(&[0, 1, 1])];
        let l = Sublattice::of(&g, 3);
        assert_eq!(l.rank, 2);
        let x = ivec(&[1, 0, -1]);
        let y = l.coords(&x).unwrap();
        assert_eq!(l.lift(&y), x);
        assert!(l.coords(&ivec(&[1, 0, 0])).is_none());
    }

    #[test]
    fn det_and_adjugate() {
        let m = IntMatrix::from_i64_rows(&[vec![2, 1, 0], vec![1, 3, 1], vec![0, 1, 4]]);
        let d = m.det();
        assert_eq!(d, Int::from(18));
        let a = m.adjugate();
        let p = a.mul(&m);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(*p.get(i, j), if i == j { d.clone() } else { Int::zero() });
            }
        }
    }
}
