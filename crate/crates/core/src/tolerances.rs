//! Pinned numeric tolerances.
//!
//! Every threshold used by validation, cross-checks and the acceptance
//! suite lives here, so no module carries its own ad-hoc magic numbers.

/// Hermiticity: max |A[i][j] - conj(A[j][i])| accepted before an input is
/// rejected, and the bound density-matrix constructors enforce.
pub const HERMITICITY: f64 = 1e-12;

/// Trace defect |Tr(rho) - 1| accepted by the density-matrix constructor.
pub const TRACE: f64 = 1e-12;

/// Eigenvalues in [-PSD_CLAMP, 0) are treated as zero; anything below
/// -PSD_CLAMP rejects the matrix as not positive semidefinite. Partial
/// traces of analytically pure states produce O(ulp) negatives.
pub const PSD_CLAMP: f64 = 1e-10;

/// Jacobi eigensolver stops once the off-diagonal Frobenius mass falls
/// below this, or after [`MAX_JACOBI_SWEEPS`] full sweeps.
pub const JACOBI_OFF_DIAGONAL: f64 = 1e-14;

/// Hard cap on cyclic Jacobi sweeps.
pub const MAX_JACOBI_SWEEPS: usize = 100;

/// Eigendecomposition reconstruction residual max|V L V^dag - A| for
/// inputs with max|A| <= 1, and the eigenvector unitarity residual.
pub const EIG_RECONSTRUCTION: f64 = 1e-12;

/// Squaring residual max|S*S - A| for the PSD square root.
pub const PSD_SQRT: f64 = 1e-10;

/// Singular values vs. sqrt-eigenvalues of T T^t cross-check.
pub const SVD_CROSS: f64 = 1e-11;

/// Unit-norm defect accepted for pure-state amplitudes.
pub const STATE_NORM: f64 = 1e-12;

/// q_L^2 + q_R^2 = 1 defect accepted by the parameter constructor.
pub const WEIGHT_NORM: f64 = 1e-15;

/// Pipeline-vs-closed-form agreement for reduced matrices and for the
/// l1-coherence formulas.
pub const CLOSED_FORM: f64 = 1e-12;

/// Affine Bloch model must reproduce the isometry route this tightly.
pub const BLOCH_AFFINE: f64 = 1e-11;

/// Definition-based decohering power vs. the printed closed forms.
pub const POWER_CLOSED: f64 = 1e-9;

/// Cohering power of every Unruh channel.
pub const COHERING_ZERO: f64 = 1e-12;

/// Central-difference step for freezing-condition certification.
pub const FD_STEP: f64 = 1e-5;

/// |dC/dr| accepted as "frozen" under a substituted freezing condition.
pub const FD_FREEZE: f64 = 1e-10;

/// Geometric discord: eigenvalue route vs. singular-value route.
pub const GQD_CROSS: f64 = 1e-11;

/// Concurrence Hermitian route vs. independent oracles.
pub const CONCURRENCE_CROSS: f64 = 1e-9;

/// Region-I vs region-II measure agreement at the infinite-acceleration
/// limit r = pi/4.
pub const REGION_CONVERGENCE: f64 = 1e-11;

/// Slack for monotone-trend comparisons between adjacent grid points.
pub const TREND_SLACK: f64 = 1e-12;

/// Bisection / golden-section refinement width.
pub const ROOT_REFINE: f64 = 1e-10;

/// Golden-section angular refinement width for the equatorial minimum.
pub const GOLDEN_PHI: f64 = 1e-12;

/// Bloch vectors are accepted as unit within this.
pub const UNIT_VECTOR: f64 = 1e-10;

/// Channel outputs may exceed the Bloch ball by at most this before the
/// channel is rejected as invalid.
pub const BLOCH_BALL_EXCESS: f64 = 1e-10;
