//! Deterministic sampling helpers for probes, self-checks and tests.
//!
//! All callers seed their own [`rand_chacha::ChaCha8Rng`] so every
//! sampled suite is reproducible bit-for-bit.

use num_complex::Complex64;
use rand::Rng;

use crate::smallmat::ComplexMatrix;

/// Standard normal via Box-Muller.
pub fn normal(rng: &mut impl Rng) -> f64 {
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

fn complex_normal(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(normal(rng), normal(rng))
}

/// Ginibre matrix: independent standard complex normal entries.
pub fn ginibre(rng: &mut impl Rng, dim: usize) -> ComplexMatrix {
    let entries = (0..dim * dim).map(|_| complex_normal(rng)).collect();
    ComplexMatrix::new(dim, dim, entries).expect("entry count matches")
}

/// Random Hermitian matrix scaled to max|A| <= 1.
pub fn hermitian(rng: &mut impl Rng, dim: usize) -> ComplexMatrix {
    let g = ginibre(rng, dim);
    let h = g.add(&g.adjoint()).scale(Complex64::new(0.5, 0.0));
    let norm = h.max_abs();
    if norm > 0.0 {
        h.scale(Complex64::new(1.0 / norm, 0.0))
    } else {
        h
    }
}

/// Random PSD matrix with spectrum in [0, 1]: G G^dag / max|.|-ish scale.
pub fn psd(rng: &mut impl Rng, dim: usize) -> ComplexMatrix {
    let g = ginibre(rng, dim);
    let p = g.mul(&g.adjoint());
    let bound = p.trace().re; // trace bounds every eigenvalue
    if bound > 0.0 {
        p.scale(Complex64::new(1.0 / bound, 0.0))
    } else {
        p
    }
}

/// Random density operator as a raw matrix: Ginibre G G^dag, unit trace.
pub fn psd_unit_trace(rng: &mut impl Rng, dim: usize) -> ComplexMatrix {
    let g = ginibre(rng, dim);
    let p = g.mul(&g.adjoint());
    let trace = p.trace().re;
    p.scale(Complex64::new(1.0 / trace, 0.0))
}

/// Haar-ish random 2x2 unitary from an SU(2) parametrization.
pub fn unitary_2(rng: &mut impl Rng) -> ComplexMatrix {
    let alpha = rng.gen::<f64>() * std::f64::consts::TAU;
    let gamma = rng.gen::<f64>() * std::f64::consts::TAU;
    let beta = (rng.gen::<f64>()).sqrt().asin();
    let (cb, sb) = (beta.cos(), beta.sin());
    let ea = Complex64::from_polar(1.0, alpha);
    let eg = Complex64::from_polar(1.0, gamma);
    ComplexMatrix::new(
        2,
        2,
        vec![ea * cb, eg * sb, -eg.conj() * sb, ea.conj() * cb],
    )
    .expect("entry count matches")
}

/// Uniform point inside the closed Bloch ball.
pub fn bloch_in_ball(rng: &mut impl Rng) -> [f64; 3] {
    loop {
        let v = [
            rng.gen::<f64>() * 2.0 - 1.0,
            rng.gen::<f64>() * 2.0 - 1.0,
            rng.gen::<f64>() * 2.0 - 1.0,
        ];
        if v[0] * v[0] + v[1] * v[1] + v[2] * v[2] <= 1.0 {
            return v;
        }
    }
}

/// Uniform point on the Bloch sphere.
pub fn bloch_on_sphere(rng: &mut impl Rng) -> [f64; 3] {
    let z = rng.gen::<f64>() * 2.0 - 1.0;
    let phi = rng.gen::<f64>() * std::f64::consts::TAU;
    let s = (1.0 - z * z).sqrt();
    [s * phi.cos(), s * phi.sin(), z]
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn unitary_is_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let u = unitary_2(&mut rng);
            let uhu = u.adjoint().mul(&u);
            assert!(uhu.approx_eq(&ComplexMatrix::identity(2), 1e-14));
        }
    }

    #[test]
    fn psd_unit_trace_has_unit_trace() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let rho = psd_unit_trace(&mut rng, 4);
        assert!((rho.trace().re - 1.0).abs() < 1e-14);
    }

    #[test]
    fn seeded_streams_are_reproducible() {
        let a = hermitian(&mut ChaCha8Rng::seed_from_u64(9), 4);
        let b = hermitian(&mut ChaCha8Rng::seed_from_u64(9), 4);
        assert!(a.approx_eq(&b, 0.0));
    }
}
