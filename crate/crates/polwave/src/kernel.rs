//! The scattering kernel Q(kappa), loss matrix S(kappa), scattering mean
//! free paths and the coherent-field propagator exp(Q z).
//!
//! Q is assembled by quadrature of the mode-coupling integral over the
//! propagating disk. The spectral density restricts the integrand to the
//! ball |kappa' - kappa| <= support * gamma / k, so the quadrature uses a
//! local polar window of that radius around each node: Gauss-Legendre in
//! the local radius, uniform (trapezoid) in the local angle. The window is
//! clipped to |kappa'| <= kappa_max, which caps the 1/beta singularity;
//! the spectral mass lost to the clip is tracked and reported.

use crate::error::{Error, Result};
use crate::geometry::{beta, gamma_block, GammaKind};
use crate::grid::DirectionGrid;
use crate::mat2::{CMat2, CVec2, Mat2, Vec2, Vec3};
use crate::medium::SpectralMedium;
use crate::quad::gauss_legendre_on;
use num_complex::Complex64 as C64;
use rayon::prelude::*;
use std::f64::consts::PI;
use std::sync::Arc;

/// Quadrature controls for the kernel assembly.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureSpec {
    /// Radial Gauss-Legendre nodes across the spectral support window.
    pub n_radial: usize,
    /// Uniform angular nodes around the window.
    pub n_angular: usize,
    /// Integration domain cap: kappa' is restricted to |kappa'| <= kappa_max.
    pub kappa_max: f64,
    /// Optional override of the spectral support radius (in units of
    /// gamma / k); `None` takes the medium's own estimate.
    pub support_factor: Option<f64>,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            n_radial: 96,
            n_angular: 256,
            kappa_max: 0.95,
            support_factor: None,
        }
    }
}

impl QuadratureSpec {
    pub fn with_resolution(self, n_radial: usize, n_angular: usize) -> Self {
        QuadratureSpec {
            n_radial,
            n_angular,
            ..self
        }
    }

    fn window_radius(&self, medium: &SpectralMedium) -> f64 {
        let s = self
            .support_factor
            .unwrap_or_else(|| medium.psd_support_radius());
        s * medium.gamma / medium.k
    }
}

/// Gain-term prefactor (k^2 alpha^2 / (4 gamma^3)) (k^2 / (2 pi)^2); the
/// plain-d(kappa) quadrature weight multiplies this.
pub fn gain_prefactor(medium: &SpectralMedium) -> f64 {
    let k2 = medium.k * medium.k;
    k2 * medium.alpha * medium.alpha / (4.0 * medium.gamma.powi(3)) * k2 / (4.0 * PI * PI)
}

struct QAccumulation {
    q: CMat2,
    clipped_fraction: f64,
}

fn accumulate_q(medium: &SpectralMedium, kappa: Vec2, quad: &QuadratureSpec) -> Result<QAccumulation> {
    let n = kappa.norm();
    if n == 0.0 {
        return Err(Error::domain("q_matrix undefined at kappa = 0"));
    }
    if n > quad.kappa_max {
        return Err(Error::domain(format!(
            "q_matrix: |kappa| = {n} exceeds the integration cap {}",
            quad.kappa_max
        )));
    }
    let b0 = beta(kappa)?;
    let rw = quad.window_radius(medium);
    let (radii, wr) = gauss_legendre_on(quad.n_radial, 0.0, rw);
    let dphi = 2.0 * PI / quad.n_angular as f64;
    let kg = medium.k / medium.gamma;
    let mut acc = CMat2::zero();
    let mut kept = 0.0;
    let mut clipped = 0.0;
    for (&s, &ws) in radii.iter().zip(&wr) {
        for j in 0..quad.n_angular {
            let phi = dphi * j as f64;
            let kp = kappa + Vec2::new(s * phi.cos(), s * phi.sin());
            let np = kp.norm();
            let weight = ws * s * dphi;
            // spectral magnitude used for the truncation report
            let qt = (kappa - kp).scale(kg);
            if np >= quad.kappa_max || np < 1e-14 {
                let bp_est = if np < 1.0 { (1.0 - np * np).sqrt() } else { 0.0 };
                let spectral =
                    medium.psd3(Vec3::new(qt.x, qt.y, kg * (b0 - bp_est))).max(0.0);
                clipped += weight * spectral;
                continue;
            }
            let bp = beta(kp)?;
            let bb = kg * (b0 - bp);
            let g = gamma_block(GammaKind::Aa, kappa, kp)?;
            // Gamma(k, k') Gamma(k', k) = Gamma Gamma^T, symmetric
            let prod = g * g.transpose();
            let disp = medium.dispersion_integral(qt, bb);
            kept += weight * 2.0 * disp.re.max(0.0);
            acc += prod.to_complex().scale(disp * weight);
        }
    }
    let mut q = acc.scale_re(-gain_prefactor(medium));
    // homogenization term: different TM/TE phase velocities
    let homog = -medium.k * medium.alpha * medium.alpha / 2.0 * medium.variance() * n * n / b0;
    q.a += C64::new(0.0, homog);
    let total = kept + clipped;
    Ok(QAccumulation {
        q,
        clipped_fraction: if total > 0.0 { clipped / total } else { 0.0 },
    })
}

/// The complex symmetric scattering kernel Q(kappa).
pub fn q_matrix(medium: &SpectralMedium, kappa: Vec2, quad: &QuadratureSpec) -> Result<CMat2> {
    Ok(accumulate_q(medium, kappa, quad)?.q)
}

/// Independent assembly of Re Q through the power spectral density alone
/// (no lag integral); used to cross-check the dispersion-integral route.
pub fn re_q_direct(medium: &SpectralMedium, kappa: Vec2, quad: &QuadratureSpec) -> Result<Mat2> {
    let n = kappa.norm();
    if n == 0.0 || n > quad.kappa_max {
        return Err(Error::domain("re_q_direct: kappa outside (0, kappa_max]"));
    }
    let b0 = beta(kappa)?;
    let rw = quad.window_radius(medium);
    let (radii, wr) = gauss_legendre_on(quad.n_radial, 0.0, rw);
    let dphi = 2.0 * PI / quad.n_angular as f64;
    let kg = medium.k / medium.gamma;
    let mut acc = Mat2::default();
    for (&s, &ws) in radii.iter().zip(&wr) {
        for j in 0..quad.n_angular {
            let phi = dphi * j as f64;
            let kp = kappa + Vec2::new(s * phi.cos(), s * phi.sin());
            let np = kp.norm();
            if np >= quad.kappa_max || np < 1e-14 {
                continue;
            }
            let bp = beta(kp)?;
            let qt = (kappa - kp).scale(kg);
            let psd = medium.psd3(Vec3::new(qt.x, qt.y, kg * (b0 - bp)));
            let g = gamma_block(GammaKind::Aa, kappa, kp)?;
            acc = acc + (g * g.transpose()).scale(psd * ws * s * dphi);
        }
    }
    Ok(acc.scale(-0.5 * gain_prefactor(medium)))
}

/// Loss matrix S(kappa) = -Q - Q^dagger; real symmetric positive definite.
pub fn s_matrix(medium: &SpectralMedium, kappa: Vec2, quad: &QuadratureSpec) -> Result<Mat2> {
    let q = q_matrix(medium, kappa, quad)?;
    s_from_q(&q)
}

pub(crate) fn s_from_q(q: &CMat2) -> Result<Mat2> {
    let s = (*q + q.dagger()).scale_re(-1.0).real();
    let (l1, l2) = s.sym_eigenvalues();
    if l2 <= -1e-12 * s.trace().abs() {
        return Err(Error::NonScalar {
            what: format!("loss matrix not positive definite (eigenvalues {l1:.3e}, {l2:.3e})"),
            deviation: -l2,
        });
    }
    Ok(s)
}

/// Scattering mean free paths (TM, TE) = (-1/Re Q11, -1/Re Q22).
///
/// Valid only when Q is diagonal (transverse-isotropic media); an
/// isotropy-violation error is returned otherwise.
pub fn mean_free_paths(
    medium: &SpectralMedium,
    kappa: Vec2,
    quad: &QuadratureSpec,
) -> Result<(f64, f64)> {
    let q = q_matrix(medium, kappa, quad)?;
    mfp_from_q(&q)
}

pub(crate) fn mfp_from_q(q: &CMat2) -> Result<(f64, f64)> {
    let off = q.b.norm().max(q.c.norm());
    let scale = q.norm();
    if off > 1e-8 * scale {
        return Err(Error::Isotropy {
            what: "mean free paths need diagonal Q (transverse-isotropic medium)".into(),
            deviation: off / scale,
        });
    }
    if q.a.re >= 0.0 || q.d.re >= 0.0 {
        return Err(Error::domain("Re Q must be negative for mean free paths"));
    }
    Ok((-1.0 / q.a.re, -1.0 / q.d.re))
}

/// Scattering kernel sampled on a direction grid, with derived spectra.
#[derive(Debug, Clone)]
pub struct ScatteringKernelField {
    pub grid: Arc<DirectionGrid>,
    pub q: Vec<CMat2>,
    pub s: Vec<Mat2>,
    /// Eigenvalues of S, descending (lambda1 >= lambda2 > 0).
    pub lambda1: Vec<f64>,
    pub lambda2: Vec<f64>,
    pub mfp_tm: Vec<f64>,
    pub mfp_te: Vec<f64>,
    /// Largest spectral mass fraction lost to the |kappa'| <= kappa_max
    /// clip over all nodes.
    pub max_clipped_fraction: f64,
}

impl ScatteringKernelField {
    /// Assembles Q on every grid node (parallel over nodes) and derives
    /// S, its eigenvalues and the mean free paths.
    pub fn assemble(
        medium: &SpectralMedium,
        grid: Arc<DirectionGrid>,
        quad: &QuadratureSpec,
    ) -> Result<Self> {
        let results: Vec<Result<QAccumulation>> = grid
            .nodes
            .par_iter()
            .map(|&k| accumulate_q(medium, k, quad))
            .collect();
        let mut q = Vec::with_capacity(grid.len());
        let mut max_clip: f64 = 0.0;
        for r in results {
            let acc = r?;
            max_clip = max_clip.max(acc.clipped_fraction);
            q.push(acc.q);
        }
        let mut s = Vec::with_capacity(q.len());
        let mut lambda1 = Vec::with_capacity(q.len());
        let mut lambda2 = Vec::with_capacity(q.len());
        let mut mfp_tm = Vec::with_capacity(q.len());
        let mut mfp_te = Vec::with_capacity(q.len());
        let isotropic_q = q.iter().all(|m| {
            m.b.norm().max(m.c.norm()) <= 1e-8 * m.norm()
        });
        for m in &q {
            let sm = s_from_q(m)?;
            let (l1, l2) = sm.sym_eigenvalues();
            s.push(sm);
            lambda1.push(l1);
            lambda2.push(l2);
            if isotropic_q {
                let (tm, te) = mfp_from_q(m)?;
                mfp_tm.push(tm);
                mfp_te.push(te);
            } else {
                mfp_tm.push(f64::NAN);
                mfp_te.push(f64::NAN);
            }
        }
        Ok(ScatteringKernelField {
            grid,
            q,
            s,
            lambda1,
            lambda2,
            mfp_tm,
            mfp_te,
            max_clipped_fraction: max_clip,
        })
    }

    /// Smallest TM mean free path on the grid (sets evolution step scales).
    pub fn min_mfp(&self) -> f64 {
        self.mfp_tm
            .iter()
            .chain(self.mfp_te.iter())
            .copied()
            .filter(|m| m.is_finite())
            .fold(f64::INFINITY, f64::min)
    }

    /// TM mean free path at the innermost grid radius (the "kappa = 0"
    /// value quoted through the radial limit).
    pub fn innermost_mfp_tm(&self) -> f64 {
        let mut best = (f64::INFINITY, f64::NAN);
        for (k, &m) in self.grid.nodes.iter().zip(&self.mfp_tm) {
            let r = k.norm();
            if r < best.0 {
                best = (r, m);
            }
        }
        best.1
    }
}

/// Coherent propagator: A(kappa, z) = exp(Q(kappa) z) A_o(kappa) per node.
pub fn mean_amplitude(field: &ScatteringKernelField, a0: &[CVec2], z: f64) -> Result<Vec<CVec2>> {
    if a0.len() != field.q.len() {
        return Err(Error::GridMismatch(format!(
            "amplitude vector has {} entries for a {}-node kernel field",
            a0.len(),
            field.q.len()
        )));
    }
    if z < 0.0 {
        return Err(Error::domain("mean_amplitude needs z >= 0"));
    }
    Ok(field
        .q
        .iter()
        .zip(a0)
        .map(|(q, a)| q.scale_re(z).expm().mul_vec(*a))
        .collect())
}
