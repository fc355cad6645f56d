//! l1-norm coherence and its closed forms for the Unruh reductions.
//!
//! Includes the freezing-condition certifier (central finite differences
//! on the pipeline coherence), the sector crossing point, and the seeded
//! probes for the resource-theoretic coherence axioms.

use std::f64::consts::FRAC_PI_4;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::random;
use crate::reductions::{reduce_at, DensityMatrix, Sector};
use crate::states::{Convention, Family, UnruhParams};
use crate::tolerances as tol;

/// Sum of moduli of the off-diagonal entries.
///
/// Zero exactly when the state is diagonal in the computational basis.
pub fn l1_coherence(rho: &DensityMatrix) -> f64 {
    let dim = rho.dim();
    let mut sum = 0.0;
    for i in 0..dim {
        for j in 0..dim {
            if i != j {
                sum += rho.get(i, j).norm();
            }
        }
    }
    sum
}

/// Pipeline coherence of a sector reduction at a parameter point.
pub fn pipeline_coherence(params: &UnruhParams, sector: Sector) -> Result<f64> {
    Ok(l1_coherence(&reduce_at(params, sector)?))
}

/// Closed-form sector coherence.
///
/// Plus family: q_R sin(2 theta) cos r (particle), q_L sin(2 theta) sin r
/// (antiparticle). Minus family under the swapped reading: q_R sin(2 theta)
/// sin r and q_L sin(2 theta) cos r; the printed reading interchanges the
/// weights. Always agrees with the pipeline for its own convention.
pub fn sector_coherence_closed(params: &UnruhParams, sector: Sector) -> Result<f64> {
    let sin2t = (2.0 * params.theta()).sin();
    let (s, c) = params.r().sin_cos();
    let (q_r, q_l) = (params.q_r(), params.q_l());
    let value = match (params.family, sector) {
        (Family::Plus, Sector::ParticleI) => q_r * sin2t * c,
        (Family::Plus, Sector::AntiparticleI) => q_l * sin2t * s,
        (Family::Minus, Sector::ParticleI) => match params.convention {
            Convention::Swapped => q_r * sin2t * s,
            Convention::Printed => q_l * sin2t * s,
        },
        (Family::Minus, Sector::AntiparticleI) => match params.convention {
            Convention::Swapped => q_l * sin2t * c,
            Convention::Printed => q_r * sin2t * c,
        },
        (_, other) => {
            return Err(Error::UnsupportedClosedForm(format!(
                "sector coherence formulas cover single-qubit sectors, not `{other}`"
            )))
        }
    };
    Ok(value)
}

/// Closed-form two-qubit coherence at the maximally coherent preparation.
///
/// Region I: q_L q_R cos r sin r + q_L sin r + q_R cos r.
/// Region II: q_L q_R cos r sin r + q_L cos r + q_R sin r.
/// Only stated for the plus family at theta = pi/4.
pub fn region_coherence_closed(params: &UnruhParams, region: Sector) -> Result<f64> {
    if params.family != Family::Plus {
        return Err(Error::UnsupportedClosedForm(
            "region coherence formulas exist only for the plus family".into(),
        ));
    }
    if (params.theta() - FRAC_PI_4).abs() > tol::CLOSED_FORM {
        return Err(Error::UnsupportedClosedForm(format!(
            "region coherence formulas are stated at theta = pi/4 only, got theta = {}",
            params.theta()
        )));
    }
    let (s, c) = params.r().sin_cos();
    let (q_r, q_l) = (params.q_r(), params.q_l());
    match region {
        Sector::RegionI => Ok(q_l * q_r * c * s + q_l * s + q_r * c),
        Sector::RegionII => Ok(q_l * q_r * c * s + q_l * c + q_r * s),
        other => Err(Error::UnsupportedClosedForm(format!(
            "region coherence formulas cover two-qubit regions, not `{other}`"
        ))),
    }
}

/// A parameter condition that freezes the sector coherence in r.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FreezingCondition {
    /// sin(2 theta) = 0: the preparation is incoherent.
    Sin2ThetaZero,
    /// q_R = 0.
    QrZero,
    /// q_L = 0 (q_R = 1, the single-mode approximation).
    QlZero,
}

impl std::fmt::Display for FreezingCondition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FreezingCondition::Sin2ThetaZero => "sin2theta=0",
            FreezingCondition::QrZero => "q_R=0",
            FreezingCondition::QlZero => "q_L=0",
        })
    }
}

/// A condition together with the worst numeric |dC/dr| observed under it.
#[derive(Debug, Clone, Copy)]
pub struct CertifiedCondition {
    pub condition: FreezingCondition,
    pub max_abs_derivative: f64,
}

/// Freezing conditions of one sector, certified on the pipeline.
#[derive(Debug, Clone)]
pub struct FreezingReport {
    pub family: Family,
    pub convention: Convention,
    pub sector: Sector,
    /// Documentation-only symbolic form of dC/dr.
    pub derivative_expression: &'static str,
    pub conditions: Vec<CertifiedCondition>,
}

impl FreezingReport {
    /// True when every condition pins |dC/dr| below the freeze tolerance.
    pub fn certified(&self) -> bool {
        self.conditions
            .iter()
            .all(|c| c.max_abs_derivative <= tol::FD_FREEZE)
    }
}

/// Central difference of the pipeline coherence in r.
fn coherence_derivative(params: &UnruhParams, sector: Sector) -> Result<f64> {
    let h = tol::FD_STEP;
    let up = pipeline_coherence(&params.with_r(params.r() + h)?, sector)?;
    let down = pipeline_coherence(&params.with_r(params.r() - h)?, sector)?;
    Ok((up - down) / (2.0 * h))
}

/// Identify and numerically certify the freezing conditions of a sector.
///
/// Each condition is substituted and the pipeline derivative dC/dr is
/// sampled at 16 interior r values for several values of the remaining
/// free parameter; the report carries the worst magnitude seen.
pub fn freezing_analysis(
    family: Family,
    sector: Sector,
    convention: Convention,
) -> Result<FreezingReport> {
    if !matches!(sector, Sector::ParticleI | Sector::AntiparticleI) {
        return Err(Error::UnsupportedClosedForm(format!(
            "freezing analysis covers single-qubit sectors, not `{sector}`"
        )));
    }

    let (derivative_expression, weight_condition) = match (family, sector, convention) {
        (Family::Plus, Sector::ParticleI, _) => {
            ("-q_R*sin(2*theta)*sin(r)", FreezingCondition::QrZero)
        }
        (Family::Plus, Sector::AntiparticleI, _) => {
            ("q_L*sin(2*theta)*cos(r)", FreezingCondition::QlZero)
        }
        (Family::Minus, Sector::ParticleI, Convention::Swapped) => {
            ("q_R*sin(2*theta)*cos(r)", FreezingCondition::QrZero)
        }
        (Family::Minus, Sector::AntiparticleI, Convention::Swapped) => {
            ("-q_L*sin(2*theta)*sin(r)", FreezingCondition::QlZero)
        }
        (Family::Minus, Sector::ParticleI, Convention::Printed) => {
            ("q_L*sin(2*theta)*cos(r)", FreezingCondition::QlZero)
        }
        (Family::Minus, Sector::AntiparticleI, Convention::Printed) => {
            ("-q_R*sin(2*theta)*sin(r)", FreezingCondition::QrZero)
        }
        _ => unreachable!("sector restricted above"),
    };

    let r_samples: Vec<f64> = (0..16)
        .map(|i| 0.02 + (FRAC_PI_4 - 0.04) * i as f64 / 15.0)
        .collect();
    let mut conditions = Vec::new();
    for condition in [FreezingCondition::Sin2ThetaZero, weight_condition] {
        let mut worst = 0.0f64;
        for free in 0..5 {
            let t = free as f64 / 4.0;
            let (q_r, theta) = match condition {
                FreezingCondition::Sin2ThetaZero => (t, 0.0),
                FreezingCondition::QrZero => (0.0, FRAC_PI_4 * t),
                FreezingCondition::QlZero => (1.0, FRAC_PI_4 * t),
            };
            for &r in &r_samples {
                let params = UnruhParams::new(r, q_r, theta, family, convention)?;
                worst = worst.max(coherence_derivative(&params, sector)?.abs());
            }
        }
        conditions.push(CertifiedCondition {
            condition,
            max_abs_derivative: worst,
        });
    }

    Ok(FreezingReport {
        family,
        convention,
        sector,
        derivative_expression,
        conditions,
    })
}

/// Acceleration at which the particle and antiparticle coherences cross.
///
/// Plus family: tan r* = q_R / q_L; minus family (swapped reading):
/// tan r* = q_L / q_R; the printed reading interchanges the weights.
/// Returns `None` when the root leaves [0, pi/4] - the crossing is then
/// outside the physical domain and is not fabricated by clamping.
pub fn crossing_r(q_r: f64, family: Family, convention: Convention) -> Result<Option<f64>> {
    if !(0.0..=1.0).contains(&q_r) || !q_r.is_finite() {
        return Err(Error::ParameterOutOfRange {
            name: "q_R",
            value: q_r,
            min: 0.0,
            max: 1.0,
        });
    }
    let q_l = (1.0 - q_r * q_r).max(0.0).sqrt();
    let r_star = match (family, convention) {
        (Family::Plus, _) => q_r.atan2(q_l),
        (Family::Minus, Convention::Swapped) => q_l.atan2(q_r),
        (Family::Minus, Convention::Printed) => q_r.atan2(q_l),
    };
    Ok((r_star <= FRAC_PI_4 + 1e-15).then_some(r_star.min(FRAC_PI_4)))
}

/// Outcome of the coherence-axiom probes over seeded random states.
#[derive(Debug, Clone)]
pub struct AxiomReport {
    pub samples: usize,
    /// Worst C(sum p_i rho_i) - sum p_i C(rho_i); must stay <= tolerance.
    pub max_convexity_excess: f64,
    /// Worst |C(U rho U^dag) - C(rho)| over diagonal unitaries U.
    pub max_phase_invariance_deviation: f64,
    /// Worst C over exactly diagonalized states; must be exactly 0.
    pub max_coherence_of_diagonal: f64,
}

impl AxiomReport {
    pub fn pass(&self) -> bool {
        self.max_convexity_excess <= tol::CLOSED_FORM
            && self.max_phase_invariance_deviation <= tol::CLOSED_FORM
            && self.max_coherence_of_diagonal == 0.0
    }
}

fn diagonal_part(rho: &DensityMatrix) -> DensityMatrix {
    let dim = rho.dim();
    let diag = crate::smallmat::ComplexMatrix::from_fn(dim, dim, |i, j| {
        if i == j {
            Complex64::new(rho.get(i, i).re, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    DensityMatrix::try_new(diag).expect("diagonal part keeps trace and positivity")
}

fn random_density(rng: &mut impl Rng, dim: usize) -> DensityMatrix {
    DensityMatrix::try_new(random::psd_unit_trace(rng, dim))
        .expect("Ginibre construction yields a valid density operator")
}

/// Probe the coherence axioms on seeded random 2x2 and 4x4 states:
/// zero-iff-diagonal, convexity, and invariance under diagonal unitaries.
pub fn coherence_axiom_probes(seed: u64, samples: usize) -> AxiomReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = AxiomReport {
        samples,
        max_convexity_excess: f64::NEG_INFINITY,
        max_phase_invariance_deviation: 0.0,
        max_coherence_of_diagonal: 0.0,
    };

    for k in 0..samples {
        let dim = if k % 2 == 0 { 2 } else { 4 };

        let a = random_density(&mut rng, dim);
        let b = random_density(&mut rng, dim);
        let p: f64 = rng.gen();
        let mixed = DensityMatrix::convex_mix(&a, &b, p).expect("mixture stays valid");
        let excess = l1_coherence(&mixed) - (p * l1_coherence(&a) + (1.0 - p) * l1_coherence(&b));
        report.max_convexity_excess = report.max_convexity_excess.max(excess);

        let phases: Vec<Complex64> = (0..dim)
            .map(|_| Complex64::from_polar(1.0, rng.gen::<f64>() * std::f64::consts::TAU))
            .collect();
        let unitary = crate::smallmat::ComplexMatrix::from_fn(dim, dim, |i, j| {
            if i == j {
                phases[i]
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        let rotated = a.conjugate_by(&unitary).expect("diagonal unitary conjugation");
        let dev = (l1_coherence(&rotated) - l1_coherence(&a)).abs();
        report.max_phase_invariance_deviation = report.max_phase_invariance_deviation.max(dev);

        report.max_coherence_of_diagonal = report
            .max_coherence_of_diagonal
            .max(l1_coherence(&diagonal_part(&a)));
    }

    report
}
