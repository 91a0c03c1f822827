//! Dense exact vectors, matrices and Gauss-Jordan elimination.

use std::fmt;
use std::ops::Index;

use crate::scalar::Scalar;

/// A dense vector of exact scalars. Ordering is lexicographic, which gives
/// every generator list in the crate a canonical sort.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector<S> {
    entries: Vec<S>,
}

impl<S: Scalar> Vector<S> {
    pub fn new(entries: Vec<S>) -> Self {
        Vector { entries }
    }

    pub fn zero(dim: usize) -> Self {
        Vector {
            entries: vec![S::zero(); dim],
        }
    }

    /// Standard basis vector `e_i`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.entries[i] = S::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, S> {
        self.entries.iter()
    }

    pub fn as_slice(&self) -> &[S] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<S> {
        self.entries
    }

    pub fn dot(&self, other: &Self) -> S {
        assert_eq!(self.dim(), other.dim(), "dot of mismatched dims");
        self.entries
            .iter()
            .zip(&other.entries)
            .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        Vector::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        Vector::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Vector::new(self.entries.iter().map(|a| -a.clone()).collect())
    }

    pub fn scale(&self, k: &S) -> Self {
        Vector::new(self.entries.iter().map(|a| a.clone() * k.clone()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|a| a.is_zero())
    }

    /// Concatenates two vectors (used by product sets).
    pub fn concat(&self, other: &Self) -> Self {
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Vector::new(entries)
    }

    /// Scales so the first nonzero entry has absolute value one, preserving
    /// sign. Canonical form for rays.
    pub fn normalized_ray(&self) -> Self {
        match self.entries.iter().find(|e| !e.is_zero()) {
            None => self.clone(),
            Some(first) => {
                let k = S::one() / first.abs();
                self.scale(&k)
            }
        }
    }
}

impl<S: Scalar> Index<usize> for Vector<S> {
    type Output = S;
    fn index(&self, i: usize) -> &S {
        &self.entries[i]
    }
}

impl<S: Scalar> fmt::Debug for Vector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl<S: Scalar> fmt::Display for Vector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A rectangular matrix stored as rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<S> {
    rows: Vec<Vector<S>>,
    cols: usize,
}

impl<S: Scalar> Matrix<S> {
    pub fn from_rows(rows: Vec<Vector<S>>) -> Self {
        let cols = rows.first().map_or(0, Vector::dim);
        assert!(
            rows.iter().all(|r| r.dim() == cols),
            "matrix rows must share a dimension"
        );
        Matrix { rows, cols }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_rows((0..n).map(|i| Vector::unit(n, i)).collect())
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &Vector<S> {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[Vector<S>] {
        &self.rows
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &Vector<S>) -> Vector<S> {
        Vector::new(self.rows.iter().map(|r| r.dot(v)).collect())
    }
}

impl<S: Scalar> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for r in &self.rows {
            writeln!(f, "  {r:?}")?;
        }
        write!(f, "]")
    }
}

/// Result of Gauss-Jordan elimination.
pub struct Rref<S> {
    pub matrix: Matrix<S>,
    pub pivot_cols: Vec<usize>,
    pub rank: usize,
}

/// Reduced row echelon form over the scalar field.
///
/// Deterministic: the pivot in each column is the first row (lowest index)
/// with a nonzero entry.
pub fn rref<S: Scalar>(m: &Matrix<S>) -> Rref<S> {
    let mut rows: Vec<Vec<S>> = m.rows.iter().map(|r| r.as_slice().to_vec()).collect();
    let n_rows = rows.len();
    let n_cols = m.cols;
    let mut pivot_cols = Vec::new();
    let mut pivot_row = 0usize;

    for col in 0..n_cols {
        if pivot_row >= n_rows {
            break;
        }
        let Some(src) = (pivot_row..n_rows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, src);
        let inv = S::one() / rows[pivot_row][col].clone();
        for e in rows[pivot_row][col..].iter_mut() {
            *e = e.clone() * inv.clone();
        }
        let pivot = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != pivot_row && !row[col].is_zero() {
                let factor = row[col].clone();
                for (e, p) in row[col..].iter_mut().zip(&pivot[col..]) {
                    *e = e.clone() - factor.clone() * p.clone();
                }
            }
        }
        pivot_cols.push(col);
        pivot_row += 1;
    }

    let rank = pivot_cols.len();
    Rref {
        matrix: Matrix::from_rows(rows.into_iter().map(Vector::new).collect()),
        pivot_cols,
        rank,
    }
}

/// Basis of the kernel `{x : Mx = 0}`, one vector per free column,
/// in increasing free-column order.
pub fn nullspace<S: Scalar>(m: &Matrix<S>) -> Vec<Vector<S>> {
    let n_cols = m.n_cols();
    if m.n_rows() == 0 {
        return (0..n_cols).map(|i| Vector::unit(n_cols, i)).collect();
    }
    let red = rref(m);
    let pivot_set: Vec<Option<usize>> = {
        let mut v = vec![None; n_cols];
        for (r, &c) in red.pivot_cols.iter().enumerate() {
            v[c] = Some(r);
        }
        v
    };
    let mut basis = Vec::new();
    for free in 0..n_cols {
        if pivot_set[free].is_some() {
            continue;
        }
        let mut x = vec![S::zero(); n_cols];
        x[free] = S::one();
        for (r, &pc) in red.pivot_cols.iter().enumerate() {
            x[pc] = -red.matrix.row(r)[free].clone();
        }
        basis.push(Vector::new(x));
    }
    basis
}

/// Exact arithmetic mean of a nonempty family of points.
pub fn barycenter<S: Scalar>(points: &[Vector<S>]) -> Vector<S> {
    assert!(!points.is_empty(), "barycenter of nothing");
    let k = S::from_usize(points.len()).expect("count fits the scalar");
    let sum = points
        .iter()
        .skip(1)
        .fold(points[0].clone(), |acc, p| acc.add(p));
    sum.scale(&(S::one() / k))
}

/// Rank of the row space spanned by `vectors`.
pub fn rank_of<S: Scalar>(vectors: &[Vector<S>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    rref(&Matrix::from_rows(vectors.to_vec())).rank
}

/// Reduces `vectors` to a deterministic basis of their span
/// (the nonzero rows of the reduced echelon form).
pub fn span_basis<S: Scalar>(vectors: &[Vector<S>]) -> Vec<Vector<S>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let red = rref(&Matrix::from_rows(vectors.to_vec()));
    red.matrix.rows().iter().take(red.rank).cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};
    use crate::Rat;

    fn vec_i(entries: &[i64]) -> Vector<Rat> {
        Vector::new(entries.iter().map(|&e| int(e)).collect())
    }

    #[test]
    fn rref_identity_is_fixed() {
        let m = Matrix::<Rat>::identity(2);
        let red = rref(&m);
        assert_eq!(red.matrix, m);
        assert_eq!(red.pivot_cols, vec![0, 1]);
        assert_eq!(red.rank, 2);
    }

    #[test]
    fn rref_dependent_rows() {
        let m = Matrix::from_rows(vec![vec_i(&[1, 2]), vec_i(&[2, 4])]);
        let red = rref(&m);
        assert_eq!(red.rank, 1);
        assert_eq!(red.matrix.row(0), &vec_i(&[1, 2]));
        assert!(red.matrix.row(1).is_zero());
    }

    #[test]
    fn rref_swaps_rows() {
        let m = Matrix::from_rows(vec![vec_i(&[0, 1]), vec_i(&[1, 0])]);
        let red = rref(&m);
        assert_eq!(red.matrix, Matrix::<Rat>::identity(2));
        assert_eq!(red.rank, 2);
    }

    #[test]
    fn nullspace_of_plane_normal() {
        let m = Matrix::from_rows(vec![vec_i(&[1, 1, 0])]);
        let basis = nullspace(&m);
        assert_eq!(basis.len(), 2);
        for b in &basis {
            assert!(m.apply(b).is_zero());
        }
    }

    #[test]
    fn rational_elimination_stays_exact() {
        let m = Matrix::from_rows(vec![
            Vector::new(vec![ratio(1, 3), ratio(1, 7)]),
            Vector::new(vec![ratio(2, 3), ratio(5, 7)]),
        ]);
        let red = rref(&m);
        assert_eq!(red.rank, 2);
        assert_eq!(red.matrix, Matrix::<Rat>::identity(2));
    }
}
