//! The Unruh channel per sector and its basis-dependent powers.
//!
//! A channel is an isometry from a qubit into the 16-dimensional Fock
//! space (|0> goes to the Unruh vacuum, |1> to the family's excitation)
//! followed by the partial trace onto one detector sector. The isometry
//! route is authoritative; an affine Bloch model (M, c) is extracted from
//! it and cached as the fast path for the power formulas. A cache that
//! disagrees with the isometry beyond tolerance fails construction.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coherence::l1_coherence;
use crate::error::{Error, Result};
use crate::random;
use crate::reductions::{DensityMatrix, Sector};
use crate::smallmat::{partial_trace, pauli_matrices, ComplexMatrix};
use crate::states::{unruh_one_antiparticle, unruh_one_particle, unruh_vacuum, Convention, Family};
use crate::tolerances as tol;

/// Reference basis direction on the Bloch sphere; defaults to z.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BasisVector([f64; 3]);

impl BasisVector {
    /// The computational (z) basis, k = (0, 0, 1).
    pub fn z() -> Self {
        Self([0.0, 0.0, 1.0])
    }

    pub fn new(v: [f64; 3]) -> Result<Self> {
        let norm = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if (norm - 1.0).abs() > tol::UNIT_VECTOR {
            return Err(Error::NotUnitVector { norm });
        }
        Ok(Self(v))
    }

    pub fn components(&self) -> [f64; 3] {
        self.0
    }
}

impl Default for BasisVector {
    fn default() -> Self {
        Self::z()
    }
}

/// Affine action on Bloch vectors: m' = M m + c.
#[derive(Debug, Clone, PartialEq)]
pub struct BlochAffine {
    pub matrix: [[f64; 3]; 3],
    pub shift: [f64; 3],
}

impl BlochAffine {
    pub fn identity() -> Self {
        Self {
            matrix: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
            shift: [0.0; 3],
        }
    }

    pub fn apply(&self, m: [f64; 3]) -> [f64; 3] {
        let mut out = self.shift;
        for (i, row) in self.matrix.iter().enumerate() {
            out[i] += row[0] * m[0] + row[1] * m[1] + row[2] * m[2];
        }
        out
    }

    /// Coherence figure of a pure input with Bloch vector `m` against the
    /// basis `k`: (1 - sqrt(1 - |m'|^2)) * (1 - (m'/|m'| . k)^2).
    ///
    /// The m' = 0 singularity is defined as 0, the limit of the formula.
    /// Outputs outside the Bloch ball beyond tolerance reject the channel.
    pub fn f_measure(&self, m: [f64; 3], k: &BasisVector) -> Result<f64> {
        let m_norm = (m[0] * m[0] + m[1] * m[1] + m[2] * m[2]).sqrt();
        if (m_norm - 1.0).abs() > tol::UNIT_VECTOR {
            return Err(Error::NotUnitVector { norm: m_norm });
        }
        let out = self.apply(m);
        let len_sq = out[0] * out[0] + out[1] * out[1] + out[2] * out[2];
        let len = len_sq.sqrt();
        if len > 1.0 + tol::BLOCH_BALL_EXCESS {
            return Err(Error::InvalidChannel(format!(
                "output Bloch vector has length {len:.12}, outside the ball"
            )));
        }
        if len < 1e-15 {
            return Ok(0.0);
        }
        let kv = k.components();
        let aligned = (out[0] * kv[0] + out[1] * kv[1] + out[2] * kv[2]) / len;
        let radial = 1.0 - (1.0 - len_sq.min(1.0)).sqrt();
        Ok(radial * (1.0 - aligned * aligned).max(0.0))
    }

    /// Cohering power: max of F over the two incoherent pure inputs +-k.
    pub fn cohering_power(&self, k: &BasisVector) -> Result<f64> {
        let kv = k.components();
        let f_plus = self.f_measure(kv, k)?;
        let f_minus = self.f_measure([-kv[0], -kv[1], -kv[2]], k)?;
        Ok(f_plus.max(f_minus))
    }

    /// Decohering power: 1 - min of F over equatorial pure inputs.
    ///
    /// The equator relative to k is scanned on a 1024-point grid and the
    /// bracketing interval refined by golden section to the pinned width.
    /// Kept generic even though F is flat in the angle for the Unruh
    /// channels, so the engine stays correct for arbitrary qubit channels.
    pub fn decohering_power(&self, k: &BasisVector) -> Result<f64> {
        let (e1, e2) = equatorial_frame(k);
        let input = |phi: f64| {
            let (s, c) = phi.sin_cos();
            [
                c * e1[0] + s * e2[0],
                c * e1[1] + s * e2[1],
                c * e1[2] + s * e2[2],
            ]
        };

        const GRID: usize = 1024;
        let mut best_idx = 0;
        let mut best = f64::INFINITY;
        for i in 0..GRID {
            let phi = std::f64::consts::TAU * i as f64 / GRID as f64;
            let f = self.f_measure(input(phi), k)?;
            if f < best {
                best = f;
                best_idx = i;
            }
        }

        let step = std::f64::consts::TAU / GRID as f64;
        let mut lo = (best_idx as f64 - 1.0) * step;
        let mut hi = (best_idx as f64 + 1.0) * step;
        const INV_PHI: f64 = 0.618_033_988_749_894_9;
        let mut x1 = hi - INV_PHI * (hi - lo);
        let mut x2 = lo + INV_PHI * (hi - lo);
        let mut f1 = self.f_measure(input(x1), k)?;
        let mut f2 = self.f_measure(input(x2), k)?;
        while hi - lo > tol::GOLDEN_PHI {
            if f1 < f2 {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - INV_PHI * (hi - lo);
                f1 = self.f_measure(input(x1), k)?;
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + INV_PHI * (hi - lo);
                f2 = self.f_measure(input(x2), k)?;
            }
        }
        Ok(1.0 - best.min(f1).min(f2))
    }
}

/// Two unit vectors spanning the plane orthogonal to k.
fn equatorial_frame(k: &BasisVector) -> ([f64; 3], [f64; 3]) {
    let kv = k.components();
    let seed = if kv[0].abs() < 0.9 {
        [1.0, 0.0, 0.0]
    } else {
        [0.0, 1.0, 0.0]
    };
    let dot = seed[0] * kv[0] + seed[1] * kv[1] + seed[2] * kv[2];
    let mut e1 = [seed[0] - dot * kv[0], seed[1] - dot * kv[1], seed[2] - dot * kv[2]];
    let n1 = (e1[0] * e1[0] + e1[1] * e1[1] + e1[2] * e1[2]).sqrt();
    for x in &mut e1 {
        *x /= n1;
    }
    let e2 = [
        kv[1] * e1[2] - kv[2] * e1[1],
        kv[2] * e1[0] - kv[0] * e1[2],
        kv[0] * e1[1] - kv[1] * e1[0],
    ];
    (e1, e2)
}

/// Bloch vector of a qubit density matrix.
pub fn bloch_vector(rho: &DensityMatrix) -> [f64; 3] {
    let off = rho.get(0, 1);
    [
        2.0 * off.re,
        -2.0 * off.im,
        rho.get(0, 0).re - rho.get(1, 1).re,
    ]
}

/// Qubit density matrix from a Bloch vector inside the closed ball.
pub fn density_from_bloch(m: [f64; 3]) -> Result<DensityMatrix> {
    let entries = ComplexMatrix::new(
        2,
        2,
        vec![
            Complex64::new(0.5 * (1.0 + m[2]), 0.0),
            Complex64::new(0.5 * m[0], -0.5 * m[1]),
            Complex64::new(0.5 * m[0], 0.5 * m[1]),
            Complex64::new(0.5 * (1.0 - m[2]), 0.0),
        ],
    )?;
    DensityMatrix::try_new(entries)
}

/// One detector sector of the Unruh channel.
#[derive(Debug, Clone)]
pub struct QubitChannel {
    /// 16x2 isometry; columns are the images of |0> and |1>.
    isometry: ComplexMatrix,
    sector: Sector,
    affine: BlochAffine,
}

impl QubitChannel {
    pub fn sector(&self) -> Sector {
        self.sector
    }

    pub fn isometry(&self) -> &ComplexMatrix {
        &self.isometry
    }

    pub fn affine(&self) -> &BlochAffine {
        &self.affine
    }

    /// Exact channel action: partial trace of V rho V^dag onto the sector.
    pub fn apply(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        if rho.dim() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                actual: rho.dim(),
            });
        }
        let lifted = self.isometry.mul(rho.matrix()).mul(&self.isometry.adjoint());
        DensityMatrix::try_new(partial_trace(&lifted, self.sector.kept_slots())?)
    }

    pub fn f_measure(&self, m: [f64; 3], k: &BasisVector) -> Result<f64> {
        self.affine.f_measure(m, k)
    }

    /// Cohering power with respect to k, from the F formula.
    pub fn cohering_power(&self, k: &BasisVector) -> Result<f64> {
        self.affine.cohering_power(k)
    }

    /// Cohering power from the raw definition: the worst l1 coherence the
    /// channel creates out of the two incoherent pure inputs. Mixed
    /// incoherent inputs cannot do better, by convexity of the l1 norm.
    /// The two routes vanish together; this one is the bookkeeping check.
    pub fn cohering_power_l1_z(&self) -> Result<f64> {
        let mut worst = 0.0f64;
        for z in [1.0, -1.0] {
            let rho = density_from_bloch([0.0, 0.0, z])?;
            worst = worst.max(l1_coherence(&self.apply(&rho)?));
        }
        Ok(worst)
    }

    pub fn decohering_power(&self, k: &BasisVector) -> Result<f64> {
        self.affine.decohering_power(k)
    }
}

/// Build the Unruh channel for one sector at (r, q_R).
///
/// |0> maps to the Unruh vacuum, |1> to the one-particle (plus family) or
/// one-antiparticle (minus family, under the given reading) excitation.
pub fn unruh_channel(
    r: f64,
    q_r: f64,
    sector: Sector,
    family: Family,
    convention: Convention,
) -> Result<QubitChannel> {
    if sector.is_region() {
        return Err(Error::UnsupportedClosedForm(format!(
            "the Unruh channel is a qubit channel; sector `{sector}` keeps two qubits"
        )));
    }
    let vacuum = unruh_vacuum(r)?;
    let excited = match family {
        Family::Plus => unruh_one_particle(r, q_r)?,
        Family::Minus => unruh_one_antiparticle(r, q_r, convention)?,
    };
    let isometry = ComplexMatrix::from_fn(16, 2, |i, j| {
        if j == 0 {
            vacuum.amplitudes()[i]
        } else {
            excited.amplitudes()[i]
        }
    });
    let gram = isometry.adjoint().mul(&isometry);
    if !gram.approx_eq(&ComplexMatrix::identity(2), tol::HERMITICITY) {
        return Err(Error::InvalidChannel(
            "isometry columns are not orthonormal".into(),
        ));
    }

    let mut channel = QubitChannel {
        isometry,
        sector,
        affine: BlochAffine::identity(),
    };

    // Extract the affine model from the isometry route.
    let shift = bloch_vector(&channel.apply(&density_from_bloch([0.0; 3])?)?);
    let mut matrix = [[0.0f64; 3]; 3];
    let paulis = pauli_matrices();
    for (axis, _) in paulis.iter().enumerate() {
        let mut unit = [0.0f64; 3];
        unit[axis] = 1.0;
        let out = bloch_vector(&channel.apply(&density_from_bloch(unit)?)?);
        for row in 0..3 {
            matrix[row][axis] = out[row] - shift[row];
        }
    }
    channel.affine = BlochAffine { matrix, shift };

    // The cached model must reproduce the isometry route; probe it on a
    // seeded batch of ball points and fail loudly on disagreement.
    let mut rng = ChaCha8Rng::seed_from_u64(0x0b10c4);
    for _ in 0..8 {
        let m = random::bloch_in_ball(&mut rng);
        let exact = bloch_vector(&channel.apply(&density_from_bloch(m)?)?);
        let modeled = channel.affine.apply(m);
        let dev = exact
            .iter()
            .zip(modeled.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        if dev > tol::BLOCH_AFFINE {
            return Err(Error::InvalidChannel(format!(
                "affine Bloch cache deviates from the isometry route by {dev:.3e}"
            )));
        }
    }

    Ok(channel)
}

/// The printed closed form of the decohering power with respect to z.
///
/// mv is the squared output length for an equatorial input and the z-term
/// its component along k:
///   plus/particle:      mv = q_R^2 cos^2 r + (q_L^2 cos^2 r - sin^2 r)^2
///   plus/antiparticle:  mv = q_L^2 sin^2 r + (q_L^2 sin^2 r + cos 2r)^2
///   minus/particle:     mv = q_R^2 sin^2 r + (cos^2 r - q_L^2 sin^2 r)^2
///   minus/antiparticle: mv = q_L^2 cos^2 r + (cos 2r - q_L^2 cos^2 r)^2
/// The minus-family forms correspond to the swapped reading of the
/// one-antiparticle excitation.
pub fn decohering_power_closed(
    r: f64,
    q_r: f64,
    sector: Sector,
    family: Family,
) -> Result<f64> {
    if !(0.0..=std::f64::consts::FRAC_PI_4).contains(&r) {
        return Err(Error::ParameterOutOfRange {
            name: "r",
            value: r,
            min: 0.0,
            max: std::f64::consts::FRAC_PI_4,
        });
    }
    if !(0.0..=1.0).contains(&q_r) {
        return Err(Error::ParameterOutOfRange {
            name: "q_R",
            value: q_r,
            min: 0.0,
            max: 1.0,
        });
    }
    let q_l_sq = 1.0 - q_r * q_r;
    let (s2, c2) = (r.sin().powi(2), r.cos().powi(2));
    let cos2r = (2.0 * r).cos();
    let (planar_sq, z_term) = match (family, sector) {
        (Family::Plus, Sector::ParticleI) => (q_r * q_r * c2, q_l_sq * c2 - s2),
        (Family::Plus, Sector::AntiparticleI) => (q_l_sq * s2, q_l_sq * s2 + cos2r),
        (Family::Minus, Sector::ParticleI) => (q_r * q_r * s2, c2 - q_l_sq * s2),
        (Family::Minus, Sector::AntiparticleI) => (q_l_sq * c2, cos2r - q_l_sq * c2),
        (_, other) => {
            return Err(Error::UnsupportedClosedForm(format!(
                "decohering-power closed forms cover single-qubit sectors, not `{other}`"
            )))
        }
    };
    let mv = planar_sq + z_term * z_term;
    if mv < 1e-15 {
        // Output at the ball center: no coherence survives.
        return Ok(1.0);
    }
    let f = (1.0 - (1.0 - mv).max(0.0).sqrt()) * (1.0 - z_term * z_term / mv);
    Ok(1.0 - f)
}
