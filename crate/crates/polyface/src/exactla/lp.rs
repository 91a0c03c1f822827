//! Exact linear programming: two-phase dense simplex with Bland's rule.
//!
//! Variables are free (unrestricted in sign); internally each is split into
//! a nonnegative pair. Ties in entering and leaving choices are broken by
//! lowest variable index, which both prevents cycling and makes every
//! answer deterministic.

use crate::error::{Error, Result};
use crate::exactla::linalg::{nullspace, Matrix, Vector};
use crate::scalar::Scalar;

/// One linear row `coeffs · x (≤ | < | =) rhs`; the relation is implied by
/// which [`LinearSystem`] bucket holds the row.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinRow<S> {
    pub coeffs: Vector<S>,
    pub rhs: S,
}

impl<S: Scalar> std::fmt::Debug for LinRow<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?} ∘ {}", self.coeffs, self.rhs)
    }
}

impl<S: Scalar> LinRow<S> {
    pub fn new(coeffs: Vector<S>, rhs: S) -> Self {
        LinRow { coeffs, rhs }
    }

    /// Value of `rhs − coeffs·x`, nonnegative exactly when a `≤` row holds.
    pub fn slack(&self, x: &Vector<S>) -> S {
        self.rhs.clone() - self.coeffs.dot(x)
    }
}

/// A finite system of weak inequalities, strict inequalities and equations
/// over a common variable space.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearSystem<S> {
    pub dim: usize,
    /// `a·x ≤ b`
    pub weak: Vec<LinRow<S>>,
    /// `c·x < d`
    pub strict: Vec<LinRow<S>>,
    /// `e·x = f`
    pub eqs: Vec<LinRow<S>>,
}

impl<S: Scalar> LinearSystem<S> {
    pub fn new(dim: usize) -> Self {
        LinearSystem {
            dim,
            weak: Vec::new(),
            strict: Vec::new(),
            eqs: Vec::new(),
        }
    }

    pub fn weak_row(mut self, coeffs: Vec<S>, rhs: S) -> Self {
        self.push_weak(Vector::new(coeffs), rhs);
        self
    }

    pub fn strict_row(mut self, coeffs: Vec<S>, rhs: S) -> Self {
        self.push_strict(Vector::new(coeffs), rhs);
        self
    }

    pub fn eq_row(mut self, coeffs: Vec<S>, rhs: S) -> Self {
        self.push_eq(Vector::new(coeffs), rhs);
        self
    }

    pub fn push_weak(&mut self, coeffs: Vector<S>, rhs: S) {
        assert_eq!(coeffs.dim(), self.dim);
        self.weak.push(LinRow::new(coeffs, rhs));
    }

    pub fn push_strict(&mut self, coeffs: Vector<S>, rhs: S) {
        assert_eq!(coeffs.dim(), self.dim);
        self.strict.push(LinRow::new(coeffs, rhs));
    }

    pub fn push_eq(&mut self, coeffs: Vector<S>, rhs: S) {
        assert_eq!(coeffs.dim(), self.dim);
        self.eqs.push(LinRow::new(coeffs, rhs));
    }

    /// True when `x` satisfies every row with its own relation, exactly.
    pub fn satisfied_by(&self, x: &Vector<S>) -> bool {
        self.weak.iter().all(|r| !r.slack(x).is_negative())
            && self.strict.iter().all(|r| r.slack(x).is_positive())
            && self.eqs.iter().all(|r| r.slack(x).is_zero())
    }

    /// All right-hand sides zero.
    pub fn is_homogeneous(&self) -> bool {
        self.weak
            .iter()
            .chain(&self.strict)
            .chain(&self.eqs)
            .all(|r| r.rhs.is_zero())
    }
}

impl<S: Scalar> std::fmt::Debug for LinearSystem<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "system dim={} {{", self.dim)?;
        for r in &self.weak {
            writeln!(f, "  {:?} · x ≤ {}", r.coeffs, r.rhs)?;
        }
        for r in &self.strict {
            writeln!(f, "  {:?} · x < {}", r.coeffs, r.rhs)?;
        }
        for r in &self.eqs {
            writeln!(f, "  {:?} · x = {}", r.coeffs, r.rhs)?;
        }
        write!(f, "}}")
    }
}

/// Exact outcome of a maximisation.
#[derive(Clone, PartialEq, Eq)]
pub enum LpOutcome<S> {
    Optimal { value: S, point: Vector<S> },
    Infeasible,
    Unbounded { ray: Vector<S> },
}

impl<S: Scalar> std::fmt::Debug for LpOutcome<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LpOutcome::Optimal { value, point } => write!(f, "Optimal({value}, {point:?})"),
            LpOutcome::Infeasible => write!(f, "Infeasible"),
            LpOutcome::Unbounded { ray } => write!(f, "Unbounded({ray:?})"),
        }
    }
}

impl<S: Scalar> LpOutcome<S> {
    pub fn optimal(self) -> Option<(S, Vector<S>)> {
        match self {
            LpOutcome::Optimal { value, point } => Some((value, point)),
            _ => None,
        }
    }
}

/// Maximises `objective · x` over the weak rows and equations of `system`.
///
/// Strict rows are rejected: callers decide strict systems through
/// [`strict_feasible`]. The returned point and value re-verify exactly
/// against the system.
pub fn lp_solve<S: Scalar>(
    objective: &Vector<S>,
    system: &LinearSystem<S>,
) -> Result<LpOutcome<S>> {
    if objective.dim() != system.dim {
        return Err(Error::DimensionMismatch {
            expected: system.dim,
            got: objective.dim(),
        });
    }
    if !system.strict.is_empty() {
        return Err(Error::UnsupportedStrict);
    }
    for row in system.weak.iter().chain(&system.eqs) {
        if row.coeffs.dim() != system.dim {
            return Err(Error::DimensionMismatch {
                expected: system.dim,
                got: row.coeffs.dim(),
            });
        }
    }
    Ok(Tableau::solve(objective, system))
}

/// Finds a point satisfying weak rows weakly, strict rows strictly and
/// equations exactly, or `None` when no such point exists.
///
/// Each strict row `c·x < d` is augmented to `c·x + ε ≤ d`; with the bound
/// `ε ≤ 1` the system is strictly feasible exactly when the maximal ε is
/// positive.
pub fn strict_feasible<S: Scalar>(system: &LinearSystem<S>) -> Result<Option<Vector<S>>> {
    let n = system.dim;
    let mut aug = LinearSystem::new(n + 1);
    for row in &system.weak {
        let mut c = row.coeffs.as_slice().to_vec();
        c.push(S::zero());
        aug.push_weak(Vector::new(c), row.rhs.clone());
    }
    for row in &system.strict {
        let mut c = row.coeffs.as_slice().to_vec();
        c.push(S::one());
        aug.push_weak(Vector::new(c), row.rhs.clone());
    }
    for row in &system.eqs {
        let mut c = row.coeffs.as_slice().to_vec();
        c.push(S::zero());
        aug.push_eq(Vector::new(c), row.rhs.clone());
    }
    // ε ≤ 1
    aug.push_weak(Vector::unit(n + 1, n), S::one());

    let objective = Vector::unit(n + 1, n);
    match lp_solve(&objective, &aug)? {
        LpOutcome::Infeasible => Ok(None),
        LpOutcome::Unbounded { .. } => unreachable!("objective is bounded by ε ≤ 1"),
        LpOutcome::Optimal { value, point } => {
            if value.is_positive() {
                let x = Vector::new(point.as_slice()[..n].to_vec());
                debug_assert!(system.satisfied_by(&x));
                Ok(Some(x))
            } else {
                Ok(None)
            }
        }
    }
}

/// Basis of the lineality space of the homogeneous cone
/// `{d : G·d ≤ 0, H·d = 0}`, namely `{d : G·d = 0, H·d = 0}`: a direction
/// lies in the cone together with its negative exactly when every row
/// vanishes on it.
pub fn lineality_space<S: Scalar>(cone: &LinearSystem<S>) -> Vec<Vector<S>> {
    debug_assert!(
        cone.is_homogeneous(),
        "lineality_space needs a homogeneous system"
    );
    let normals: Vec<Vector<S>> = cone
        .weak
        .iter()
        .chain(&cone.strict)
        .chain(&cone.eqs)
        .map(|r| r.coeffs.clone())
        .collect();
    if normals.is_empty() {
        return (0..cone.dim).map(|i| Vector::unit(cone.dim, i)).collect();
    }
    nullspace(&Matrix::from_rows(normals))
}

// ---------------------------------------------------------------------------
// simplex internals
// ---------------------------------------------------------------------------

struct Tableau<S> {
    // rows[r] has ncols coefficient entries plus the rhs at index ncols
    rows: Vec<Vec<S>>,
    obj: Vec<S>,
    basis: Vec<usize>,
    ncols: usize,
}

impl<S: Scalar> Tableau<S> {
    /// Two-phase simplex, maximising.
    fn solve(objective: &Vector<S>, system: &LinearSystem<S>) -> LpOutcome<S> {
        let n = system.dim;
        let m_weak = system.weak.len();
        let m = m_weak + system.eqs.len();
        // columns: x⁺ (n) | x⁻ (n) | slack (m_weak) | artificials (appended)
        let base_cols = 2 * n + m_weak;

        let mut rows: Vec<Vec<S>> = Vec::with_capacity(m);
        let mut needs_artificial: Vec<bool> = Vec::with_capacity(m);
        for (i, row) in system.weak.iter().chain(&system.eqs).enumerate() {
            let is_eq = i >= m_weak;
            let negate = row.rhs.is_negative();
            let sign = if negate { -S::one() } else { S::one() };
            let mut r = vec![S::zero(); base_cols + 1];
            for (j, a) in row.coeffs.iter().enumerate() {
                let v = sign.clone() * a.clone();
                r[j] = v.clone();
                r[n + j] = -v;
            }
            if !is_eq {
                r[2 * n + i] = if negate { -S::one() } else { S::one() };
            }
            r[base_cols] = sign * row.rhs.clone();
            needs_artificial.push(is_eq || negate);
            rows.push(r);
        }

        let n_artificial = needs_artificial.iter().filter(|&&b| b).count();
        let ncols = base_cols + n_artificial;
        let mut basis = vec![0usize; m];
        let mut next_art = base_cols;
        for (i, row) in rows.iter_mut().enumerate() {
            // widen every row to make room for artificial columns
            let rhs = row.pop().expect("rhs present");
            row.resize(ncols, S::zero());
            row.push(rhs);
            if needs_artificial[i] {
                row[next_art] = S::one();
                basis[i] = next_art;
                next_art += 1;
            } else {
                basis[i] = 2 * n + i;
            }
        }

        let mut tab = Tableau {
            rows,
            obj: vec![S::zero(); ncols + 1],
            basis,
            ncols,
        };

        if n_artificial > 0 {
            // phase 1: maximise −Σ artificials
            let mut c1 = vec![S::zero(); ncols];
            for cost in c1.iter_mut().skip(base_cols) {
                *cost = -S::one();
            }
            tab.load_objective(&c1);
            tab.pivot_to_optimum();
            // the rhs cell of the objective row holds the negated value
            if tab.obj[ncols].is_positive() {
                return LpOutcome::Infeasible;
            }
            tab.evict_artificials(base_cols);
        }

        // phase 2
        let mut c2 = vec![S::zero(); tab.ncols];
        for (j, c) in objective.iter().enumerate() {
            c2[j] = c.clone();
            c2[n + j] = -c.clone();
        }
        tab.load_objective(&c2);
        if let Some(entering) = tab.pivot_to_optimum() {
            // reconstruct the improving ray in original coordinates
            let mut d = vec![S::zero(); tab.ncols];
            d[entering] = S::one();
            for (r, &b) in tab.basis.iter().enumerate() {
                d[b] = -tab.rows[r][entering].clone();
            }
            let ray = Vector::new((0..n).map(|j| d[j].clone() - d[n + j].clone()).collect());
            return LpOutcome::Unbounded { ray };
        }

        let mut x = vec![S::zero(); tab.ncols];
        for (r, &b) in tab.basis.iter().enumerate() {
            x[b] = tab.rows[r][tab.ncols].clone();
        }
        let point = Vector::new((0..n).map(|j| x[j].clone() - x[n + j].clone()).collect());
        let value = objective.dot(&point);
        LpOutcome::Optimal { value, point }
    }

    /// Installs an objective row and prices out the current basis.
    fn load_objective(&mut self, costs: &[S]) {
        let ncols = self.ncols;
        self.obj = costs.to_vec();
        self.obj.push(S::zero());
        for (r, &b) in self.basis.iter().enumerate() {
            if !self.obj[b].is_zero() {
                let factor = self.obj[b].clone();
                for c in 0..=ncols {
                    let v = self.obj[c].clone() - factor.clone() * self.rows[r][c].clone();
                    self.obj[c] = v;
                }
            }
        }
    }

    /// Bland pivoting until no entering column remains. Returns the
    /// entering column on unboundedness, `None` at an optimum.
    fn pivot_to_optimum(&mut self) -> Option<usize> {
        loop {
            let entering = (0..self.ncols).find(|&j| self.obj[j].is_positive())?;
            let mut leaving: Option<usize> = None;
            for r in 0..self.rows.len() {
                if !self.rows[r][entering].is_positive() {
                    continue;
                }
                let better = match leaving {
                    None => true,
                    Some(cur) => {
                        let lhs =
                            self.rows[r][self.ncols].clone() * self.rows[cur][entering].clone();
                        let rhs =
                            self.rows[cur][self.ncols].clone() * self.rows[r][entering].clone();
                        match lhs.cmp(&rhs) {
                            std::cmp::Ordering::Less => true,
                            std::cmp::Ordering::Greater => false,
                            std::cmp::Ordering::Equal => self.basis[r] < self.basis[cur],
                        }
                    }
                };
                if better {
                    leaving = Some(r);
                }
            }
            match leaving {
                None => return Some(entering),
                Some(row) => self.pivot(row, entering),
            }
        }
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let inv = S::one() / self.rows[row][col].clone();
        for c in 0..=self.ncols {
            let v = self.rows[row][c].clone() * inv.clone();
            self.rows[row][c] = v;
        }
        for r in 0..self.rows.len() {
            if r != row && !self.rows[r][col].is_zero() {
                let factor = self.rows[r][col].clone();
                for c in 0..=self.ncols {
                    let v = self.rows[r][c].clone() - factor.clone() * self.rows[row][c].clone();
                    self.rows[r][c] = v;
                }
            }
        }
        if !self.obj[col].is_zero() {
            let factor = self.obj[col].clone();
            for c in 0..=self.ncols {
                let v = self.obj[c].clone() - factor.clone() * self.rows[row][c].clone();
                self.obj[c] = v;
            }
        }
        self.basis[row] = col;
    }

    /// After a zero-value phase 1, pivots basic artificials out or drops
    /// their (redundant) rows, then truncates artificial columns.
    fn evict_artificials(&mut self, base_cols: usize) {
        let mut r = 0;
        while r < self.rows.len() {
            if self.basis[r] >= base_cols {
                match (0..base_cols).find(|&c| !self.rows[r][c].is_zero()) {
                    Some(c) => self.pivot(r, c),
                    None => {
                        self.rows.remove(r);
                        self.basis.remove(r);
                        continue;
                    }
                }
            }
            r += 1;
        }
        let ncols = self.ncols;
        for row in &mut self.rows {
            let rhs = row[ncols].clone();
            row.truncate(base_cols);
            row.push(rhs);
        }
        self.ncols = base_cols;
    }
}
