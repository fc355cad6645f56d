//! Dense complex linear algebra for matrices up to 16x16.
//!
//! Provides exactly what the reduced-state pipeline needs: a row-major
//! complex matrix, a cyclic-Jacobi Hermitian eigensolver, the PSD matrix
//! square root, the partial trace over qubit factors, and singular values
//! of small real matrices via one-sided Jacobi orthogonalization. No
//! sparse formats, no generalized problems, no dimensions beyond 16.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tolerances as tol;

/// Dense complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Complex64>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                actual: entries.len(),
            });
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim, dim);
        for i in 0..dim {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Complex64) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    /// Real matrix lift: imaginary parts zero.
    pub fn from_real(rows: usize, cols: usize, entries: &[f64]) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                actual: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries: entries.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.cols + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.entries[row * self.cols + col] = value;
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.get(i, k);
                if aik == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + aik * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    /// Entrywise complex conjugate (no transpose).
    pub fn conjugate(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j).conj())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - other.get(i, j))
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * factor)
    }

    pub fn kron(&self, other: &Self) -> Self {
        Self::from_fn(
            self.rows * other.rows,
            self.cols * other.cols,
            |i, j| {
                self.get(i / other.rows, j / other.cols)
                    * other.get(i % other.rows, j % other.cols)
            },
        )
    }

    pub fn trace(&self) -> Complex64 {
        assert_eq!(self.rows, self.cols, "trace needs a square matrix");
        (0..self.rows).map(|i| self.get(i, i)).sum()
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Equality under an explicit absolute tolerance; never exact floats.
    pub fn approx_eq(&self, other: &Self, tolerance: f64) -> bool {
        (self.rows, self.cols) == (other.rows, other.cols)
            && self.max_abs_diff(other) <= tolerance
    }

    /// Worst Hermiticity violation: (row, col, |A[i][j] - conj(A[j][i])|).
    pub fn hermiticity_defect(&self) -> (usize, usize, f64) {
        let mut worst = (0, 0, 0.0f64);
        for i in 0..self.rows {
            for j in i..self.cols {
                let dev = (self.get(i, j) - self.get(j, i).conj()).norm();
                if dev > worst.2 {
                    worst = (i, j, dev);
                }
            }
        }
        worst
    }

    fn require_hermitian(&self) -> Result<()> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                actual: self.cols,
            });
        }
        let (row, col, deviation) = self.hermiticity_defect();
        if deviation > tol::HERMITICITY {
            return Err(Error::NonHermitian {
                row,
                col,
                deviation,
                tolerance: tol::HERMITICITY,
            });
        }
        Ok(())
    }
}

/// The Pauli matrices (sigma_1, sigma_2, sigma_3).
pub fn pauli_matrices() -> [ComplexMatrix; 3] {
    let z = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    [
        ComplexMatrix::new(2, 2, vec![z, one, one, z]).unwrap(),
        ComplexMatrix::new(2, 2, vec![z, -i, i, z]).unwrap(),
        ComplexMatrix::new(2, 2, vec![one, z, z, -one]).unwrap(),
    ]
}

/// Eigendecomposition of a Hermitian matrix: A = V diag(values) V^dag.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    /// Ascending real eigenvalues.
    pub values: Vec<f64>,
    /// Unitary matrix whose columns are the matching eigenvectors.
    pub vectors: ComplexMatrix,
}

impl HermitianEigen {
    /// V diag(values) V^dag, for residual checks.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.values.len();
        ComplexMatrix::from_fn(n, n, |i, j| {
            (0..n)
                .map(|k| {
                    self.vectors.get(i, k)
                        * Complex64::new(self.values[k], 0.0)
                        * self.vectors.get(j, k).conj()
                })
                .sum()
        })
    }
}

/// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
///
/// Rejects inputs whose Hermiticity defect exceeds the pinned tolerance,
/// naming the offending entry. Converges when the off-diagonal Frobenius
/// mass drops below [`tol::JACOBI_OFF_DIAGONAL`] or after
/// [`tol::MAX_JACOBI_SWEEPS`] sweeps, whichever comes first.
pub fn hermitian_eig(matrix: &ComplexMatrix) -> Result<HermitianEigen> {
    matrix.require_hermitian()?;
    let n = matrix.rows();

    let mut a = matrix.clone();
    // The diagonal is real up to the admitted defect; pin it exactly.
    for i in 0..n {
        let d = a.get(i, i);
        a.set(i, i, Complex64::new(d.re, 0.0));
    }
    let mut v = ComplexMatrix::identity(n);

    for _sweep in 0..tol::MAX_JACOBI_SWEEPS {
        let mut off_sq = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                off_sq += 2.0 * a.get(i, j).norm_sqr();
            }
        }
        if off_sq.sqrt() <= tol::JACOBI_OFF_DIAGONAL {
            break;
        }

        for p in 0..n {
            for q in (p + 1)..n {
                let z = a.get(p, q);
                let zn = z.norm();
                if zn == 0.0 {
                    continue;
                }
                let u = z / zn; // phase of the pivot entry
                let app = a.get(p, p).re;
                let aqq = a.get(q, q).re;
                let tau = (app - aqq) / (2.0 * zn);
                let t = if tau == 0.0 {
                    1.0
                } else {
                    tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                // Rows/columns outside the pivot pair.
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a.get(k, p);
                    let akq = a.get(k, q);
                    let new_kp = akp * c + akq * s * u.conj();
                    let new_kq = akq * c - akp * s * u;
                    a.set(k, p, new_kp);
                    a.set(p, k, new_kp.conj());
                    a.set(k, q, new_kq);
                    a.set(q, k, new_kq.conj());
                }

                let new_pp = app * c * c + 2.0 * zn * s * c + aqq * s * s;
                let new_qq = app * s * s - 2.0 * zn * s * c + aqq * c * c;
                a.set(p, p, Complex64::new(new_pp, 0.0));
                a.set(q, q, Complex64::new(new_qq, 0.0));
                a.set(p, q, Complex64::new(0.0, 0.0));
                a.set(q, p, Complex64::new(0.0, 0.0));

                for k in 0..n {
                    let vkp = v.get(k, p);
                    let vkq = v.get(k, q);
                    v.set(k, p, vkp * c + vkq * s * u.conj());
                    v.set(k, q, vkq * c - vkp * s * u);
                }
            }
        }
    }

    // Sort ascending, carrying eigenvector columns along.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a.get(i, i).re.total_cmp(&a.get(j, j).re));
    let values: Vec<f64> = order.iter().map(|&i| a.get(i, i).re).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |i, j| v.get(i, order[j]));

    Ok(HermitianEigen { values, vectors })
}

/// Hermitian PSD square root: S with S*S = A.
///
/// Eigenvalues in [-PSD_CLAMP, 0) are clamped to zero; anything below
/// that rejects the input as not PSD.
pub fn psd_sqrt(matrix: &ComplexMatrix) -> Result<ComplexMatrix> {
    let eig = hermitian_eig(matrix)?;
    let n = eig.values.len();
    let mut roots = Vec::with_capacity(n);
    for &lambda in &eig.values {
        if lambda < -tol::PSD_CLAMP {
            return Err(Error::NotPositiveSemidefinite {
                eigenvalue: lambda,
                clamp: tol::PSD_CLAMP,
            });
        }
        roots.push(lambda.max(0.0).sqrt());
    }
    let v = &eig.vectors;
    Ok(ComplexMatrix::from_fn(n, n, |i, j| {
        (0..n)
            .map(|k| v.get(i, k) * Complex64::new(roots[k], 0.0) * v.get(j, k).conj())
            .sum()
    }))
}

/// Partial trace of a 2^n-dimensional operator over qubit factors.
///
/// Qubit 0 is the leftmost ket slot and the most significant bit of the
/// basis-state integer. The output factor order follows `keep`.
pub fn partial_trace(matrix: &ComplexMatrix, keep: &[usize]) -> Result<ComplexMatrix> {
    if matrix.rows() != matrix.cols() {
        return Err(Error::DimensionMismatch {
            expected: matrix.rows(),
            actual: matrix.cols(),
        });
    }
    let dim = matrix.rows();
    if !dim.is_power_of_two() {
        return Err(Error::NotQubitSized { dim });
    }
    let n = dim.trailing_zeros() as usize;
    for (pos, &k) in keep.iter().enumerate() {
        if k >= n {
            return Err(Error::QubitIndexOutOfRange { index: k, qubits: n });
        }
        if keep[..pos].contains(&k) {
            return Err(Error::DuplicateQubitIndex { index: k });
        }
    }

    let kept = keep.len();
    let out_dim = 1usize << kept;
    // Bit of qubit i inside a basis integer (MSB-first slot order).
    let bit = |index: usize, qubit: usize| (index >> (n - 1 - qubit)) & 1;
    let traced: Vec<usize> = (0..n).filter(|q| !keep.contains(q)).collect();

    let mut out = ComplexMatrix::zeros(out_dim, out_dim);
    for row in 0..dim {
        for col in 0..dim {
            if traced.iter().any(|&q| bit(row, q) != bit(col, q)) {
                continue;
            }
            let mut out_row = 0usize;
            let mut out_col = 0usize;
            for (j, &q) in keep.iter().enumerate() {
                out_row |= bit(row, q) << (kept - 1 - j);
                out_col |= bit(col, q) << (kept - 1 - j);
            }
            let v = out.get(out_row, out_col) + matrix.get(row, col);
            out.set(out_row, out_col, v);
        }
    }
    Ok(out)
}

/// Singular values of a small real matrix, descending.
///
/// One-sided Jacobi orthogonalization of the columns of the transposed
/// (tall) matrix; the singular values are the final column norms. Kept
/// independent of [`hermitian_eig`] so the two geometric-discord routes
/// exercise genuinely different solvers.
pub fn singular_values(rows: usize, cols: usize, entries: &[f64]) -> Result<Vec<f64>> {
    if entries.len() != rows * cols {
        return Err(Error::DimensionMismatch {
            expected: rows * cols,
            actual: entries.len(),
        });
    }
    for &x in entries {
        if !x.is_finite() {
            return Err(Error::NonFinite {
                name: "matrix entry",
                value: x,
            });
        }
    }

    // Columns of the tall orientation: min(rows, cols) vectors.
    let (n_vecs, vec_len, fetch): (usize, usize, Box<dyn Fn(usize, usize) -> f64>) =
        if rows <= cols {
            (rows, cols, Box::new(move |v, k| entries[v * cols + k]))
        } else {
            (cols, rows, Box::new(move |v, k| entries[k * cols + v]))
        };
    let mut columns: Vec<Vec<f64>> = (0..n_vecs)
        .map(|v| (0..vec_len).map(|k| fetch(v, k)).collect())
        .collect();

    const MAX_SWEEPS: usize = 60;
    const ORTHO_EPS: f64 = 1e-15;
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for i in 0..n_vecs {
            for j in (i + 1)..n_vecs {
                let a: f64 = columns[i].iter().map(|x| x * x).sum();
                let b: f64 = columns[j].iter().map(|x| x * x).sum();
                let d: f64 = columns[i]
                    .iter()
                    .zip(columns[j].iter())
                    .map(|(x, y)| x * y)
                    .sum();
                if d.abs() <= ORTHO_EPS * (a * b).sqrt().max(f64::MIN_POSITIVE) {
                    continue;
                }
                rotated = true;
                let tau = (b - a) / (2.0 * d);
                let t = if tau == 0.0 {
                    1.0
                } else {
                    tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..vec_len {
                    let x = columns[i][k];
                    let y = columns[j][k];
                    columns[i][k] = c * x - s * y;
                    columns[j][k] = s * x + c * y;
                }
            }
        }
        if !rotated {
            break;
        }
    }

    let mut sigma: Vec<f64> = columns
        .iter()
        .map(|col| col.iter().map(|x| x * x).sum::<f64>().sqrt())
        .collect();
    sigma.sort_by(|x, y| y.total_cmp(x));
    Ok(sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn eig_of_diagonal_matrix() {
        let m = ComplexMatrix::new(2, 2, vec![c(0.25, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.75, 0.0)])
            .unwrap();
        let eig = hermitian_eig(&m).unwrap();
        assert!((eig.values[0] - 0.25).abs() < 1e-15);
        assert!((eig.values[1] - 0.75).abs() < 1e-15);
        assert!(eig.vectors.approx_eq(&ComplexMatrix::identity(2), 1e-15));
    }

    #[test]
    fn eig_of_pauli_x() {
        let [sx, _, _] = pauli_matrices();
        let eig = hermitian_eig(&sx).unwrap();
        assert!((eig.values[0] + 1.0).abs() < 1e-14);
        assert!((eig.values[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn eig_reconstruction_over_seeded_samples() {
        // 1000 random 4x4 Hermitian matrices with max|A| <= 1.
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..1000 {
            let a = random::hermitian(&mut rng, 4);
            let eig = hermitian_eig(&a).unwrap();
            assert!(eig.reconstruct().max_abs_diff(&a) <= tol::EIG_RECONSTRUCTION);
            let vhv = eig.vectors.adjoint().mul(&eig.vectors);
            assert!(vhv.max_abs_diff(&ComplexMatrix::identity(4)) <= tol::EIG_RECONSTRUCTION);
            for w in eig.values.windows(2) {
                assert!(w[0] <= w[1]);
            }
        }
    }

    #[test]
    fn eig_rejects_non_hermitian() {
        let m = ComplexMatrix::new(2, 2, vec![c(1.0, 0.0), c(0.5, 0.0), c(0.1, 0.0), c(1.0, 0.0)])
            .unwrap();
        match hermitian_eig(&m) {
            Err(Error::NonHermitian { row, col, .. }) => {
                assert_eq!((row, col), (0, 1));
            }
            other => panic!("expected NonHermitian, got {other:?}"),
        }
    }

    #[test]
    fn psd_sqrt_of_identity_and_diagonal() {
        let id = ComplexMatrix::identity(3);
        assert!(psd_sqrt(&id).unwrap().approx_eq(&id, 1e-14));

        let m = ComplexMatrix::new(2, 2, vec![c(4.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(9.0, 0.0)])
            .unwrap();
        let s = psd_sqrt(&m).unwrap();
        let expect =
            ComplexMatrix::new(2, 2, vec![c(2.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(3.0, 0.0)])
                .unwrap();
        assert!(s.approx_eq(&expect, 1e-13));
    }

    #[test]
    fn psd_sqrt_squares_back_on_random_psd() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..200 {
            let a = random::psd(&mut rng, 4);
            let s = psd_sqrt(&a).unwrap();
            assert!(s.mul(&s).max_abs_diff(&a) <= tol::PSD_SQRT);
            let (_, _, herm) = s.hermiticity_defect();
            assert!(herm <= tol::HERMITICITY);
        }
    }

    #[test]
    fn psd_sqrt_rejects_indefinite() {
        let m = ComplexMatrix::new(2, 2, vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-0.5, 0.0)])
            .unwrap();
        assert!(matches!(
            psd_sqrt(&m),
            Err(Error::NotPositiveSemidefinite { .. })
        ));
    }

    #[test]
    fn partial_trace_of_bell_state_is_maximally_mixed() {
        let inv = 1.0 / 2.0f64.sqrt();
        let mut psi = vec![c(0.0, 0.0); 4];
        psi[0] = c(inv, 0.0);
        psi[3] = c(inv, 0.0);
        let rho = ComplexMatrix::from_fn(4, 4, |i, j| psi[i] * psi[j].conj());
        let reduced = partial_trace(&rho, &[0]).unwrap();
        let half = ComplexMatrix::identity(2).scale(c(0.5, 0.0));
        assert!(reduced.approx_eq(&half, 1e-15));
    }

    #[test]
    fn partial_trace_of_product_state() {
        // |0><0| (x) |1><1|, keep the second factor.
        let mut rho = ComplexMatrix::zeros(4, 4);
        rho.set(1, 1, c(1.0, 0.0));
        let reduced = partial_trace(&rho, &[1]).unwrap();
        let mut expect = ComplexMatrix::zeros(2, 2);
        expect.set(1, 1, c(1.0, 0.0));
        assert!(reduced.approx_eq(&expect, 1e-15));
    }

    #[test]
    fn partial_trace_rejects_bad_indices() {
        let rho = ComplexMatrix::identity(4).scale(c(0.25, 0.0));
        assert!(matches!(
            partial_trace(&rho, &[2]),
            Err(Error::QubitIndexOutOfRange { .. })
        ));
        assert!(matches!(
            partial_trace(&rho, &[0, 0]),
            Err(Error::DuplicateQubitIndex { .. })
        ));
    }

    #[test]
    fn partial_trace_composes_over_disjoint_factors() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let rho = random::psd_unit_trace(&mut rng, 8);
            // Trace out qubit 1 then qubit 1-of-the-rest (originally 2)
            // versus tracing both at once.
            let once = partial_trace(&rho, &[0]).unwrap();
            let step = partial_trace(&partial_trace(&rho, &[0, 2]).unwrap(), &[0]).unwrap();
            let direct = partial_trace(&once, &[0]).unwrap();
            assert!(step.approx_eq(&direct, 1e-12));
        }
    }

    #[test]
    fn partial_trace_preserves_trace_and_positivity() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let rho = random::psd_unit_trace(&mut rng, 16);
            let reduced = partial_trace(&rho, &[0, 2]).unwrap();
            assert!((reduced.trace().re - 1.0).abs() <= 1e-12);
            let eig = hermitian_eig(&reduced).unwrap();
            assert!(eig.values[0] >= -1e-12);
        }
    }

    #[test]
    fn singular_values_of_zero_matrix() {
        let sv = singular_values(3, 4, &[0.0; 12]).unwrap();
        assert_eq!(sv, vec![0.0, 0.0, 0.0]);
    }

    #[test]
    fn singular_values_of_orthogonal_rows() {
        // (x | T) with x = 0 and T = diag(1, -1, 1): unit-norm rows.
        #[rustfmt::skip]
        let t = [
            0.0, 1.0, 0.0, 0.0,
            0.0, 0.0, -1.0, 0.0,
            0.0, 0.0, 0.0, 1.0,
        ];
        let sv = singular_values(3, 4, &t).unwrap();
        for s in sv {
            assert!((s - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn singular_values_match_gram_eigenvalues() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..200 {
            let entries: Vec<f64> = (0..12).map(|_| random::normal(&mut rng)).collect();
            let sv = singular_values(3, 4, &entries).unwrap();
            // Cross-solver oracle: eigenvalues of T T^t via hermitian_eig.
            let gram_entries: Vec<f64> = (0..9)
                .map(|idx| {
                    let (i, j) = (idx / 3, idx % 3);
                    (0..4).map(|k| entries[i * 4 + k] * entries[j * 4 + k]).sum()
                })
                .collect();
            let gram = ComplexMatrix::from_real(3, 3, &gram_entries).unwrap();
            let mut expect: Vec<f64> = hermitian_eig(&gram)
                .unwrap()
                .values
                .iter()
                .map(|&l| l.max(0.0).sqrt())
                .collect();
            expect.reverse();
            for (s, e) in sv.iter().zip(expect.iter()) {
                assert!((s - e).abs() <= tol::SVD_CROSS, "{s} vs {e}");
            }
        }
    }

    #[test]
    fn singular_values_reject_non_finite() {
        let mut entries = [0.0; 12];
        entries[5] = f64::NAN;
        assert!(matches!(
            singular_values(3, 4, &entries),
            Err(Error::NonFinite { .. })
        ));
    }
}
