//! Unruh-mode pure states for a single Grassmann-scalar frequency.
//!
//! States live in the 16-dimensional Fock space spanned by |p q m n> where
//! slot p is the region-I particle, q the region-II antiparticle, m the
//! region-I antiparticle and n the region-II particle. Slot 0 (p) is the
//! leftmost ket and the most significant bit of the basis index.
//!
//! The acceleration enters through r in [0, pi/4], with r = pi/4 the
//! infinite-acceleration limit, and the Unruh mode weights satisfy
//! q_L^2 + q_R^2 = 1 with q_L taken as the nonnegative root. Everything
//! beyond the single-mode approximation (q_R = 1) is reachable.

use std::f64::consts::FRAC_PI_4;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::smallmat::ComplexMatrix;
use crate::tolerances as tol;

/// Which excitation the prepared superposition carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Vacuum + one-particle excitation.
    Plus,
    /// Vacuum + one-antiparticle excitation.
    Minus,
}

impl Family {
    pub fn token(self) -> &'static str {
        match self {
            Family::Plus => "plus",
            Family::Minus => "minus",
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.token())
    }
}

/// Reading of the one-antiparticle excitation.
///
/// The two readings differ by interchanging the q_L and q_R weights.
/// `Swapped` is the default: it is the reading consistent with the
/// minus-family reduced states and coherence formulas this crate checks
/// against; `Printed` is retained for auditability.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Convention {
    Printed,
    Swapped,
}

impl Convention {
    pub fn token(self) -> &'static str {
        match self {
            Convention::Printed => "printed",
            Convention::Swapped => "swapped",
        }
    }
}

impl Default for Convention {
    fn default() -> Self {
        Convention::Swapped
    }
}

impl std::fmt::Display for Convention {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.token())
    }
}

/// One point of the parameter space every quantity is evaluated at.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnruhParams {
    r: f64,
    q_r: f64,
    theta: f64,
    pub family: Family,
    pub convention: Convention,
}

impl UnruhParams {
    /// Validates r in [0, pi/4], q_R in [0, 1], theta in [0, pi/4].
    pub fn new(r: f64, q_r: f64, theta: f64, family: Family, convention: Convention) -> Result<Self> {
        check_range("r", r, 0.0, FRAC_PI_4)?;
        check_range("q_R", q_r, 0.0, 1.0)?;
        check_range("theta", theta, 0.0, FRAC_PI_4)?;
        let params = Self {
            r,
            q_r,
            theta,
            family,
            convention,
        };
        let defect = (params.q_l().powi(2) + q_r * q_r - 1.0).abs();
        debug_assert!(defect <= tol::WEIGHT_NORM);
        Ok(params)
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn q_r(&self) -> f64 {
        self.q_r
    }

    /// The left weight, always the nonnegative root of 1 - q_R^2.
    pub fn q_l(&self) -> f64 {
        (1.0 - self.q_r * self.q_r).max(0.0).sqrt()
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn with_r(&self, r: f64) -> Result<Self> {
        Self::new(r, self.q_r, self.theta, self.family, self.convention)
    }
}

fn check_range(name: &'static str, value: f64, min: f64, max: f64) -> Result<()> {
    if !value.is_finite() {
        return Err(Error::NonFinite { name, value });
    }
    if value < min || value > max {
        return Err(Error::ParameterOutOfRange {
            name,
            value,
            min,
            max,
        });
    }
    Ok(())
}

/// Normalized 16-amplitude pure state over |p q m n>.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amplitudes: [Complex64; 16],
}

/// Basis index of |p q m n> (slot p is the most significant bit).
#[inline]
pub fn basis_index(p: usize, q: usize, m: usize, n: usize) -> usize {
    debug_assert!(p < 2 && q < 2 && m < 2 && n < 2);
    (p << 3) | (q << 2) | (m << 1) | n
}

impl PureState {
    /// Validates unit norm within the pinned tolerance.
    pub fn new(amplitudes: [Complex64; 16]) -> Result<Self> {
        let norm_sq: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        let defect = (norm_sq.sqrt() - 1.0).abs();
        if defect > tol::STATE_NORM {
            return Err(Error::ParameterOutOfRange {
                name: "state norm",
                value: norm_sq.sqrt(),
                min: 1.0 - tol::STATE_NORM,
                max: 1.0 + tol::STATE_NORM,
            });
        }
        Ok(Self { amplitudes })
    }

    pub fn amplitudes(&self) -> &[Complex64; 16] {
        &self.amplitudes
    }

    #[inline]
    pub fn amplitude(&self, p: usize, q: usize, m: usize, n: usize) -> Complex64 {
        self.amplitudes[basis_index(p, q, m, n)]
    }

    pub fn inner(&self, other: &Self) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(other.amplitudes.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// The projector |psi><psi| as a 16x16 matrix.
    pub fn density(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(16, 16, |i, j| {
            self.amplitudes[i] * self.amplitudes[j].conj()
        })
    }
}

/// Acceleration parameter from the frequency ratio Omega*c/a:
/// r = arccos((e^(-2*pi*ratio) + 1)^(-1/2)), in (0, pi/4).
pub fn rindler_r(omega_ratio: f64) -> Result<f64> {
    if !omega_ratio.is_finite() {
        return Err(Error::NonFinite {
            name: "omega_ratio",
            value: omega_ratio,
        });
    }
    if omega_ratio <= 0.0 {
        return Err(Error::ParameterOutOfRange {
            name: "omega_ratio",
            value: omega_ratio,
            min: f64::MIN_POSITIVE,
            max: f64::INFINITY,
        });
    }
    let cos_r = ((-2.0 * std::f64::consts::PI * omega_ratio).exp() + 1.0).powf(-0.5);
    Ok(cos_r.min(1.0).acos())
}

/// The Unruh vacuum:
/// cos^2 r |0000> - sin r cos r |0011> + sin r cos r |1100> - sin^2 r |1111>.
pub fn unruh_vacuum(r: f64) -> Result<PureState> {
    check_range("r", r, 0.0, FRAC_PI_4)?;
    let (s, c) = r.sin_cos();
    let mut amp = [Complex64::new(0.0, 0.0); 16];
    amp[basis_index(0, 0, 0, 0)] = (c * c).into();
    amp[basis_index(0, 0, 1, 1)] = (-s * c).into();
    amp[basis_index(1, 1, 0, 0)] = (s * c).into();
    amp[basis_index(1, 1, 1, 1)] = (-s * s).into();
    PureState::new(amp)
}

/// The one-particle excitation:
/// q_R (cos r |1000> - sin r |1011>) + q_L (sin r |1101> + cos r |0001>).
pub fn unruh_one_particle(r: f64, q_r: f64) -> Result<PureState> {
    check_range("r", r, 0.0, FRAC_PI_4)?;
    check_range("q_R", q_r, 0.0, 1.0)?;
    let q_l = (1.0 - q_r * q_r).max(0.0).sqrt();
    let (s, c) = r.sin_cos();
    let mut amp = [Complex64::new(0.0, 0.0); 16];
    amp[basis_index(1, 0, 0, 0)] = (q_r * c).into();
    amp[basis_index(1, 0, 1, 1)] = (-q_r * s).into();
    amp[basis_index(1, 1, 0, 1)] = (q_l * s).into();
    amp[basis_index(0, 0, 0, 1)] = (q_l * c).into();
    PureState::new(amp)
}

/// The one-antiparticle excitation.
///
/// `Printed`: q_L (cos r |0100> - sin r |0111>) + q_R (sin r |1110> + cos r |0010>).
/// `Swapped`: the same expression with the q_L and q_R weights interchanged,
/// the reading consistent with the minus-family reduced states downstream.
pub fn unruh_one_antiparticle(r: f64, q_r: f64, convention: Convention) -> Result<PureState> {
    check_range("r", r, 0.0, FRAC_PI_4)?;
    check_range("q_R", q_r, 0.0, 1.0)?;
    let q_l = (1.0 - q_r * q_r).max(0.0).sqrt();
    let (weight_region_ii, weight_region_i) = match convention {
        Convention::Printed => (q_l, q_r),
        Convention::Swapped => (q_r, q_l),
    };
    let (s, c) = r.sin_cos();
    let mut amp = [Complex64::new(0.0, 0.0); 16];
    amp[basis_index(0, 1, 0, 0)] = (weight_region_ii * c).into();
    amp[basis_index(0, 1, 1, 1)] = (-weight_region_ii * s).into();
    amp[basis_index(1, 1, 1, 0)] = (weight_region_i * s).into();
    amp[basis_index(0, 0, 1, 0)] = (weight_region_i * c).into();
    PureState::new(amp)
}

/// The prepared superposition cos(theta) |0_U> + sin(theta) |1+-_U>.
///
/// The cross terms vanish because the vacuum and the excitation occupy
/// disjoint basis kets, so the sum is exactly normalized.
pub fn initial_state(params: &UnruhParams) -> Result<PureState> {
    let vacuum = unruh_vacuum(params.r())?;
    let excited = match params.family {
        Family::Plus => unruh_one_particle(params.r(), params.q_r())?,
        Family::Minus => unruh_one_antiparticle(params.r(), params.q_r(), params.convention)?,
    };
    let (st, ct) = params.theta().sin_cos();
    let mut amp = [Complex64::new(0.0, 0.0); 16];
    for (i, slot) in amp.iter_mut().enumerate() {
        *slot = vacuum.amplitudes[i] * ct + excited.amplitudes[i] * st;
    }
    PureState::new(amp)
}
