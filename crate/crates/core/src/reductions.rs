//! Reduced density matrices of the prepared Unruh states.
//!
//! Four reductions matter: the region-I particle and antiparticle qubits
//! (2x2) and the full region-I and region-II pairs (4x4). All of them are
//! produced by one generic partial trace over the 16-dimensional pure
//! state, with the factor orderings pinned below.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::smallmat::{hermitian_eig, partial_trace, ComplexMatrix};
use crate::states::{initial_state, Family, PureState, UnruhParams};
use crate::tolerances as tol;

/// Which degrees of freedom the detector keeps.
///
/// Region-I factor order is (particle-I, antiparticle-I); region-II order
/// is (antiparticle-II, particle-II). These orderings are what make the
/// reduced matrices below come out entry-for-entry in their standard form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sector {
    ParticleI,
    AntiparticleI,
    RegionI,
    RegionII,
}

impl Sector {
    /// Kept slots of |p q m n>, in output order.
    pub fn kept_slots(self) -> &'static [usize] {
        match self {
            Sector::ParticleI => &[0],
            Sector::AntiparticleI => &[2],
            Sector::RegionI => &[0, 2],
            Sector::RegionII => &[1, 3],
        }
    }

    pub fn dim(self) -> usize {
        1 << self.kept_slots().len()
    }

    pub fn is_region(self) -> bool {
        matches!(self, Sector::RegionI | Sector::RegionII)
    }

    pub fn token(self) -> &'static str {
        match self {
            Sector::ParticleI => "particle",
            Sector::AntiparticleI => "antiparticle",
            Sector::RegionI => "region1",
            Sector::RegionII => "region2",
        }
    }
}

impl std::fmt::Display for Sector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.token())
    }
}

/// Validated density operator of dimension 2 or 4: Hermitian, unit trace,
/// positive semidefinite up to the pinned clamp.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    entries: ComplexMatrix,
}

impl DensityMatrix {
    pub fn try_new(entries: ComplexMatrix) -> Result<Self> {
        let dim = entries.rows();
        if dim != entries.cols() || (dim != 2 && dim != 4) {
            return Err(Error::DimensionMismatch {
                expected: 2,
                actual: dim,
            });
        }
        let trace = entries.trace();
        if (trace.re - 1.0).abs() > tol::TRACE || trace.im.abs() > tol::TRACE {
            return Err(Error::TraceNotOne { trace: trace.re });
        }
        let (row, col, deviation) = entries.hermiticity_defect();
        if deviation > tol::HERMITICITY {
            return Err(Error::NonHermitian {
                row,
                col,
                deviation,
                tolerance: tol::HERMITICITY,
            });
        }
        let eig = hermitian_eig(&entries)?;
        if eig.values[0] < -tol::PSD_CLAMP {
            return Err(Error::NotPositiveSemidefinite {
                eigenvalue: eig.values[0],
                clamp: tol::PSD_CLAMP,
            });
        }
        Ok(Self { entries })
    }

    pub fn dim(&self) -> usize {
        self.entries.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.entries
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries.get(row, col)
    }

    /// Tr(rho^2), in [1/dim, 1].
    pub fn purity(&self) -> f64 {
        self.entries.mul(&self.entries).trace().re
    }

    /// Ascending eigenvalues.
    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eig(&self.entries)
            .expect("density matrices are Hermitian by construction")
            .values
    }

    /// p * a + (1 - p) * b.
    pub fn convex_mix(a: &Self, b: &Self, p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::ParameterOutOfRange {
                name: "mixing weight",
                value: p,
                min: 0.0,
                max: 1.0,
            });
        }
        let mixed = a
            .entries
            .scale(Complex64::new(p, 0.0))
            .add(&b.entries.scale(Complex64::new(1.0 - p, 0.0)));
        Self::try_new(mixed)
    }

    /// Conjugation by a unitary of the same dimension.
    pub fn conjugate_by(&self, unitary: &ComplexMatrix) -> Result<Self> {
        Self::try_new(unitary.mul(&self.entries).mul(&unitary.adjoint()))
    }
}

/// Reduce a pure state to the given sector through the partial trace.
pub fn reduce(state: &PureState, sector: Sector) -> Result<DensityMatrix> {
    let kept = partial_trace(&state.density(), sector.kept_slots())?;
    DensityMatrix::try_new(kept)
}

/// Reduce the prepared state at a parameter point.
pub fn reduce_at(params: &UnruhParams, sector: Sector) -> Result<DensityMatrix> {
    reduce(&initial_state(params)?, sector)
}

/// Closed-form single-qubit reductions of the plus-family state.
///
/// Populations carry sin^2(theta) on the excitation weight (the
/// superposition enters with sin(theta), so at theta = 0 these reduce to
/// the vacuum's populations); the off-diagonals are (q/2) sin(2 theta)
/// times cos r or sin r. Only the plus family has a trustworthy closed
/// form; the minus family flows through the partial-trace pipeline.
pub fn closed_form_sector(params: &UnruhParams, sector: Sector) -> Result<DensityMatrix> {
    if params.family != Family::Plus {
        return Err(Error::UnsupportedClosedForm(
            "closed-form sector matrices exist only for the plus family; \
             use reduce_at(..) for the minus family"
                .into(),
        ));
    }
    let (s, c) = params.r().sin_cos();
    let (s2, c2) = (s * s, c * c);
    let sin2t = (2.0 * params.theta()).sin();
    let sin_sq_t = params.theta().sin().powi(2);
    let (q_r, q_l) = (params.q_r(), params.q_l());

    let (p00, off, p11) = match sector {
        Sector::ParticleI => (
            c2 - q_r * q_r * sin_sq_t * c2,
            0.5 * q_r * sin2t * c,
            q_r * q_r * sin_sq_t * c2 + s2,
        ),
        Sector::AntiparticleI => (
            q_l * q_l * sin_sq_t * s2 + c2,
            -0.5 * q_l * sin2t * s,
            -q_l * q_l * sin_sq_t * s2 + s2,
        ),
        other => {
            return Err(Error::UnsupportedClosedForm(format!(
                "no closed-form matrix for sector `{other}`; use reduce_at(..)"
            )))
        }
    };

    let entries = ComplexMatrix::from_real(2, 2, &[p00, off, off, p11])?;
    DensityMatrix::try_new(entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::Convention;
    use std::f64::consts::FRAC_PI_4;

    fn params(r: f64, q_r: f64, theta: f64, family: Family) -> UnruhParams {
        UnruhParams::new(r, q_r, theta, family, Convention::Swapped).unwrap()
    }

    /// The plus-family region-I matrix at theta = pi/4, evaluated entry by
    /// entry as the oracle for the pipeline.
    fn region_i_oracle(r: f64, q_r: f64) -> ComplexMatrix {
        let q_l = (1.0f64 - q_r * q_r).sqrt();
        let (s, c) = r.sin_cos();
        let mut m = [0.0f64; 16];
        m[0] = 0.5 * c * c * (q_l * q_l + c * c);
        m[1] = -0.5 * q_l * c * c * s;
        m[2] = 0.5 * q_r * c * c * c;
        m[3] = -0.25 * q_l * q_r * (2.0 * r).sin();
        m[5] = 0.5 * c * c * s * s;
        m[7] = 0.5 * q_r * c * s * s;
        m[10] = -(0.5 * q_l * q_l * (2.0 * r).cos() + 0.5 * c.powi(4) - c * c);
        m[11] = -0.5 * q_l * s * s * s;
        m[15] = 0.5 * s * s * (s * s + q_r * q_r);
        for (i, j) in [(1, 4), (2, 8), (3, 12), (7, 13), (11, 14)] {
            m[j] = m[i];
        }
        ComplexMatrix::from_real(4, 4, &m).unwrap()
    }

    /// The plus-family region-II matrix at theta = pi/4.
    fn region_ii_oracle(r: f64, q_r: f64) -> ComplexMatrix {
        let q_l = (1.0f64 - q_r * q_r).sqrt();
        let (s, c) = r.sin_cos();
        let mut m = [0.0f64; 16];
        m[0] = 0.5 * c * c * (q_r * q_r + c * c);
        m[1] = 0.5 * q_l * c * c * c;
        m[2] = 0.5 * q_r * c * c * s;
        m[3] = 0.25 * q_l * q_r * (2.0 * r).sin();
        m[5] = 0.5 * q_l * q_l * (2.0 * r).cos() - 0.5 * c.powi(4) + 0.5;
        m[7] = 0.5 * q_r * s * s * s;
        m[10] = 0.5 * c * c * s * s;
        m[11] = 0.5 * q_l * c * s * s;
        m[15] = 0.5 * s * s * (s * s + q_l * q_l);
        for (i, j) in [(1, 4), (2, 8), (3, 12), (7, 13), (11, 14)] {
            m[j] = m[i];
        }
        ComplexMatrix::from_real(4, 4, &m).unwrap()
    }

    #[test]
    fn region_i_at_zero_acceleration_single_mode() {
        let rho = reduce_at(&params(0.0, 1.0, FRAC_PI_4, Family::Plus), Sector::RegionI).unwrap();
        // Pure projector onto (|00> + |10>)/sqrt(2).
        let mut expect = ComplexMatrix::zeros(4, 4);
        for (i, j) in [(0, 0), (0, 2), (2, 0), (2, 2)] {
            expect.set(i, j, Complex64::new(0.5, 0.0));
        }
        assert!(rho.matrix().approx_eq(&expect, 1e-15));
        assert!((rho.purity() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn every_sector_reduction_has_unit_trace() {
        let p = params(0.37, 0.81, 0.22, Family::Minus);
        for sector in [
            Sector::ParticleI,
            Sector::AntiparticleI,
            Sector::RegionI,
            Sector::RegionII,
        ] {
            let rho = reduce_at(&p, sector).unwrap();
            assert!((rho.matrix().trace().re - 1.0).abs() <= 1e-12);
            assert_eq!(rho.dim(), sector.dim());
        }
    }

    #[test]
    fn region_matrices_match_their_printed_oracles() {
        for &(r, q_r) in &[(0.4, 0.3), (0.1, 0.9), (FRAC_PI_4, 0.5), (0.0, 0.0)] {
            let p = params(r, q_r, FRAC_PI_4, Family::Plus);
            let rho_i = reduce_at(&p, Sector::RegionI).unwrap();
            assert!(
                rho_i.matrix().max_abs_diff(&region_i_oracle(r, q_r)) <= 1e-12,
                "region I mismatch at r={r}, q_R={q_r}"
            );
            let rho_ii = reduce_at(&p, Sector::RegionII).unwrap();
            assert!(
                rho_ii.matrix().max_abs_diff(&region_ii_oracle(r, q_r)) <= 1e-12,
                "region II mismatch at r={r}, q_R={q_r}"
            );
        }
    }

    #[test]
    fn closed_form_matches_pipeline_on_a_grid() {
        // 32^3 grid over (r, q_R, theta), both single-qubit sectors.
        for i in 0..32 {
            for j in 0..32 {
                for k in 0..32 {
                    let r = FRAC_PI_4 * i as f64 / 31.0;
                    let q_r = j as f64 / 31.0;
                    let theta = FRAC_PI_4 * k as f64 / 31.0;
                    let p = params(r, q_r, theta, Family::Plus);
                    for sector in [Sector::ParticleI, Sector::AntiparticleI] {
                        let pipeline = reduce_at(&p, sector).unwrap();
                        let closed = closed_form_sector(&p, sector).unwrap();
                        let dev = pipeline.matrix().max_abs_diff(closed.matrix());
                        assert!(
                            dev <= tol::CLOSED_FORM,
                            "sector {sector} deviates {dev:.3e} at r={r}, q_R={q_r}, theta={theta}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        // Particle sector at (theta, r, q_R) = (pi/4, 0, 1): the |+> projector.
        let rho =
            closed_form_sector(&params(0.0, 1.0, FRAC_PI_4, Family::Plus), Sector::ParticleI)
                .unwrap();
        for (i, j) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            assert!((rho.get(i, j).re - 0.5).abs() < 1e-15);
        }

        // Antiparticle sector at q_R = 1: diag(cos^2 r, sin^2 r) for all r, theta.
        for &r in &[0.0, 0.3, FRAC_PI_4] {
            for &theta in &[0.0, 0.4, FRAC_PI_4] {
                let rho = closed_form_sector(
                    &params(r, 1.0, theta, Family::Plus),
                    Sector::AntiparticleI,
                )
                .unwrap();
                assert!((rho.get(0, 0).re - r.cos().powi(2)).abs() < 1e-15);
                assert!((rho.get(1, 1).re - r.sin().powi(2)).abs() < 1e-15);
                assert!(rho.get(0, 1).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn closed_form_refuses_minus_family_and_regions() {
        let err = closed_form_sector(&params(0.1, 0.5, 0.2, Family::Minus), Sector::ParticleI)
            .unwrap_err();
        assert!(err.to_string().contains("reduce_at"));
        assert!(matches!(
            closed_form_sector(&params(0.1, 0.5, 0.2, Family::Plus), Sector::RegionI),
            Err(Error::UnsupportedClosedForm(_))
        ));
    }

    #[test]
    fn hygiene_and_purity_across_a_grid() {
        for family in [Family::Plus, Family::Minus] {
            for i in 0..12 {
                for j in 0..12 {
                    for k in 0..4 {
                        let r = FRAC_PI_4 * i as f64 / 11.0;
                        let q_r = j as f64 / 11.0;
                        let theta = FRAC_PI_4 * k as f64 / 3.0;
                        let p = params(r, q_r, theta, family);
                        for sector in [
                            Sector::ParticleI,
                            Sector::AntiparticleI,
                            Sector::RegionI,
                            Sector::RegionII,
                        ] {
                            let rho = reduce_at(&p, sector).unwrap();
                            let purity = rho.purity();
                            let dim = rho.dim() as f64;
                            assert!(purity >= 1.0 / dim - 1e-12 && purity <= 1.0 + 1e-12);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn particle_populations_are_complementary() {
        let p = params(0.52, 0.64, 0.31, Family::Plus);
        let rho = reduce_at(&p, Sector::ParticleI).unwrap();
        assert!((rho.get(0, 0).re + rho.get(1, 1).re - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn density_matrix_rejects_defects() {
        let bad_trace = ComplexMatrix::from_real(2, 2, &[0.7, 0.0, 0.0, 0.7]).unwrap();
        assert!(matches!(
            DensityMatrix::try_new(bad_trace),
            Err(Error::TraceNotOne { .. })
        ));
        let not_psd = ComplexMatrix::from_real(2, 2, &[1.2, 0.0, 0.0, -0.2]).unwrap();
        assert!(matches!(
            DensityMatrix::try_new(not_psd),
            Err(Error::NotPositiveSemidefinite { .. })
        ));
        let not_hermitian = ComplexMatrix::from_real(2, 2, &[0.5, 0.3, 0.1, 0.5]).unwrap();
        assert!(matches!(
            DensityMatrix::try_new(not_hermitian),
            Err(Error::NonHermitian { .. })
        ));
    }
}
