//! Random-medium statistics: autocorrelation, spectral densities and the
//! one-sided lag integral that enters the scattering kernel.
//!
//! All quantities are in scaled (dimensionless) units. The autocorrelation
//! `R` of the permittivity fluctuations is normalized so that R(0) = O(1);
//! its 3D Fourier transform (the power spectral density) is nonnegative.

use crate::error::{Error, Result};
use crate::mat2::{Vec2, Vec3};
use crate::special::{bessel_j0, dawson};
use num_complex::Complex64 as C64;
use std::f64::consts::PI;

const SQRT_HALF_PI: f64 = 1.2533141373155003; // sqrt(pi/2)

/// Correlation model of the medium fluctuations.
#[derive(Debug, Clone)]
pub enum CorrelationModel {
    /// R(x) = exp(-|x|^2 / 2), with an optional stretch of the longitudinal
    /// axis: R(x, z) = exp(-|x|^2/2 - z^2/(2 c^2)). `axial_stretch = 1`
    /// recovers the fully isotropic Gaussian; other values keep transverse
    /// isotropy only. All transforms are analytic.
    GaussianIsotropic { axial_stretch: f64 },
    /// R(|r_t|, r_z) sampled on a product grid, cubic interpolation in
    /// between, zero outside the table.
    TabulatedTransverseIsotropic(Tabulated),
}

/// Medium statistics plus the scaled parameters of the propagation regime.
#[derive(Debug, Clone)]
pub struct SpectralMedium {
    pub model: CorrelationModel,
    /// Standard deviation of the scaled permittivity fluctuations.
    pub alpha: f64,
    /// Wavelength-to-correlation-length ratio, in (0, 1).
    pub gamma: f64,
    /// Source-aperture parameter; the emitted amplitudes are supported at
    /// |kappa| <= gamma_j / k up to Gaussian tails.
    pub gamma_j: f64,
    /// Scaled wavenumber (2 pi by construction of the scaling).
    pub k: f64,
}

impl SpectralMedium {
    pub fn gaussian(alpha: f64, gamma: f64, gamma_j: f64) -> Result<Self> {
        Self::new(
            CorrelationModel::GaussianIsotropic { axial_stretch: 1.0 },
            alpha,
            gamma,
            gamma_j,
            2.0 * PI,
        )
    }

    pub fn new(
        model: CorrelationModel,
        alpha: f64,
        gamma: f64,
        gamma_j: f64,
        k: f64,
    ) -> Result<Self> {
        if !(alpha > 0.0) {
            return Err(Error::domain(format!("alpha must be positive, got {alpha}")));
        }
        if !(gamma > 0.0 && gamma < 1.0) {
            return Err(Error::domain(format!("gamma must lie in (0, 1), got {gamma}")));
        }
        if !(gamma_j > 0.0) {
            return Err(Error::domain(format!("gamma_j must be positive, got {gamma_j}")));
        }
        if !(k > 0.0) {
            return Err(Error::domain(format!("k must be positive, got {k}")));
        }
        if let CorrelationModel::GaussianIsotropic { axial_stretch } = model {
            if !(axial_stretch > 0.0) {
                return Err(Error::domain("axial_stretch must be positive"));
            }
        }
        Ok(SpectralMedium {
            model,
            alpha,
            gamma,
            gamma_j,
            k,
        })
    }

    /// True when R depends on |r| alone (not just transverse-isotropic).
    pub fn is_fully_isotropic(&self) -> bool {
        matches!(
            self.model,
            CorrelationModel::GaussianIsotropic { axial_stretch } if axial_stretch == 1.0
        )
    }

    /// Autocorrelation R(r) of the fluctuations.
    pub fn autocorr(&self, r: Vec3) -> f64 {
        match &self.model {
            CorrelationModel::GaussianIsotropic { axial_stretch } => {
                let rt2 = r.x * r.x + r.y * r.y;
                let rz = r.z / axial_stretch;
                (-0.5 * (rt2 + rz * rz)).exp()
            }
            CorrelationModel::TabulatedTransverseIsotropic(t) => {
                t.eval((r.x * r.x + r.y * r.y).sqrt(), r.z)
            }
        }
    }

    /// 3D power spectral density, the Fourier transform of R.
    pub fn psd3(&self, q: Vec3) -> f64 {
        match &self.model {
            CorrelationModel::GaussianIsotropic { axial_stretch } => {
                let c = *axial_stretch;
                let qt2 = q.x * q.x + q.y * q.y;
                (2.0 * PI).powf(1.5) * c * (-0.5 * (qt2 + c * c * q.z * q.z)).exp()
            }
            CorrelationModel::TabulatedTransverseIsotropic(t) => {
                // cosine transform of the transverse Hankel transform
                let qt = (q.x * q.x + q.y * q.y).sqrt();
                2.0 * t.integrate_zeta(|zeta| (q.z * zeta).cos() * t.hankel0(qt, zeta))
            }
        }
    }

    /// Transverse Fourier transform of R at longitudinal lag zeta.
    pub fn psd_partial(&self, q_t: Vec2, zeta: f64) -> f64 {
        match &self.model {
            CorrelationModel::GaussianIsotropic { axial_stretch } => {
                let z = zeta / axial_stretch;
                2.0 * PI * (-0.5 * (q_t.norm_sq() + z * z)).exp()
            }
            CorrelationModel::TabulatedTransverseIsotropic(t) => t.hankel0(q_t.norm(), zeta),
        }
    }

    /// One-sided lag integral int_0^inf Rhat(q_t, zeta) e^{-i b zeta} dzeta.
    ///
    /// Its real part is psd3(q_t, b)/2 by evenness of R. For the Gaussian
    /// model both parts are closed forms (the imaginary one via the Dawson
    /// function); tabulated models integrate adaptively.
    pub fn dispersion_integral(&self, q_t: Vec2, b: f64) -> C64 {
        match &self.model {
            CorrelationModel::GaussianIsotropic { axial_stretch } => {
                let c = *axial_stretch;
                // int_0^inf e^{-z^2/(2c^2)} e^{-ibz} dz
                //   = c sqrt(pi/2) e^{-c^2 b^2/2} - i c sqrt(2) F(c b / sqrt(2))
                let g = 2.0 * PI * (-0.5 * q_t.norm_sq()).exp();
                let re = c * SQRT_HALF_PI * (-0.5 * c * c * b * b).exp();
                let im = -c * std::f64::consts::SQRT_2 * dawson(c * b / std::f64::consts::SQRT_2);
                C64::new(g * re, g * im)
            }
            CorrelationModel::TabulatedTransverseIsotropic(t) => {
                let qt = q_t.norm();
                let re = t.integrate_zeta(|z| (b * z).cos() * t.hankel0(qt, z));
                let im = -t.integrate_zeta(|z| (b * z).sin() * t.hankel0(qt, z));
                C64::new(re, im)
            }
        }
    }

    /// R(0), the variance normalization of the fluctuations.
    pub fn variance(&self) -> f64 {
        self.autocorr(Vec3::new(0.0, 0.0, 0.0))
    }

    /// int_{-inf}^{inf} R(0, zeta) d zeta, the axial correlation integral
    /// entering the paraxial mean free path.
    pub fn axial_correlation_integral(&self) -> f64 {
        match &self.model {
            CorrelationModel::GaussianIsotropic { axial_stretch } => {
                axial_stretch * (2.0 * PI).sqrt()
            }
            CorrelationModel::TabulatedTransverseIsotropic(t) => {
                2.0 * t.integrate_zeta(|z| t.eval(0.0, z))
            }
        }
    }

    /// Effective radius of the support of psd3 in |q|; integrands involving
    /// psd3(k (kappa - kappa') / gamma) are negligible beyond
    /// |kappa - kappa'| > support * gamma / k.
    pub fn psd_support_radius(&self) -> f64 {
        match &self.model {
            // exp(-q^2/2) < 1e-16 of peak beyond q ~ 8.6
            CorrelationModel::GaussianIsotropic { axial_stretch } => {
                8.6 * axial_stretch.max(1.0)
            }
            CorrelationModel::TabulatedTransverseIsotropic(t) => t.psd_support,
        }
    }
}

/// Tabulated transverse-isotropic autocorrelation R(|r_t|, r_z) on a product
/// grid. Values outside the table are zero.
///
/// Spectral quantities are evaluated in two stages: the transverse Hankel
/// transform Rhat(q, zeta) is precomputed on a (q, zeta) product grid by
/// cell-aligned composite Gauss-Legendre quadrature (the interpolant is a
/// polynomial inside each table cell, so per-cell rules converge fast), and
/// lag integrals over zeta then use the interpolated Rhat with the same
/// cell-aligned rule.
#[derive(Debug, Clone)]
pub struct Tabulated {
    rt: Vec<f64>,
    rz: Vec<f64>,
    /// values[i + j * rt.len()] = R(rt[i], rz[j]) for z >= 0; negative
    /// arguments are covered by evenness.
    values: Vec<f64>,
    /// Precomputed Rhat(q_i, rz_j), q grid uniform over [0, q_max].
    hankel_q: Vec<f64>,
    hankel_values: Vec<f64>,
    /// Cell-aligned composite Gauss-Legendre rule over [0, zeta_max].
    zeta_nodes: Vec<f64>,
    zeta_weights: Vec<f64>,
    zeta_max: f64,
    psd_support: f64,
}

impl Tabulated {
    /// Builds the table from samples of R on a rectangular product grid.
    /// `rt` must start at 0 and be strictly increasing; `rz` likewise
    /// (negative lags follow by evenness).
    pub fn from_samples(rt: Vec<f64>, rz: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if rt.len() < 4 || rz.len() < 4 {
            return Err(Error::domain("tabulated medium needs at least a 4x4 grid"));
        }
        if values.len() != rt.len() * rz.len() {
            return Err(Error::domain(format!(
                "tabulated medium: {} values for a {}x{} grid",
                values.len(),
                rt.len(),
                rz.len()
            )));
        }
        if rt[0] != 0.0 || rz[0] != 0.0 {
            return Err(Error::domain("tabulated grids must start at 0"));
        }
        if rt.windows(2).any(|w| w[1] <= w[0]) || rz.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::domain("tabulated grids must be strictly increasing"));
        }
        let zeta_max = *rz.last().unwrap();
        let psd_support = 12.0;

        // per-cell rules: exact for the cubic interpolant times smooth factors
        let (gl_nodes, gl_weights) = crate::quad::gauss_legendre(8);
        let cell_rule = |grid: &[f64]| {
            let mut nodes = Vec::with_capacity((grid.len() - 1) * gl_nodes.len());
            let mut weights = Vec::with_capacity(nodes.capacity());
            for cell in grid.windows(2) {
                let c = 0.5 * (cell[0] + cell[1]);
                let h = 0.5 * (cell[1] - cell[0]);
                for (&x, &w) in gl_nodes.iter().zip(&gl_weights) {
                    nodes.push(c + h * x);
                    weights.push(w * h);
                }
            }
            (nodes, weights)
        };
        let (rho_nodes, rho_weights) = cell_rule(&rt);
        let (zeta_nodes, zeta_weights) = cell_rule(&rz);

        let mut tab = Tabulated {
            rt,
            rz,
            values,
            hankel_q: Vec::new(),
            hankel_values: Vec::new(),
            zeta_nodes,
            zeta_weights,
            zeta_max,
            psd_support,
        };

        // precompute Rhat(q, zeta_j) = 2 pi int rho R(rho, zeta_j) J0(q rho)
        let n_q = 160;
        let q_max = psd_support * 1.05;
        let hankel_q: Vec<f64> = (0..n_q)
            .map(|i| q_max * i as f64 / (n_q - 1) as f64)
            .collect();
        let mut hankel_values = vec![0.0; n_q * tab.rz.len()];
        for (j, &zeta) in tab.rz.clone().iter().enumerate() {
            // sample R along the rho rule once per zeta row
            let row: Vec<f64> = rho_nodes.iter().map(|&rho| tab.eval(rho, zeta)).collect();
            for (iq, &q) in hankel_q.iter().enumerate() {
                let mut acc = 0.0;
                for ((&rho, &w), &r) in rho_nodes.iter().zip(&rho_weights).zip(&row) {
                    acc += w * rho * r * bessel_j0(q * rho);
                }
                hankel_values[iq + j * n_q] = 2.0 * PI * acc;
            }
        }
        tab.hankel_q = hankel_q;
        tab.hankel_values = hankel_values;
        Ok(tab)
    }

    /// Samples an analytic transverse-isotropic autocorrelation onto a
    /// uniform table; used mainly by tests and config-driven setups.
    pub fn from_function<F: Fn(f64, f64) -> f64>(
        f: F,
        rt_max: f64,
        rz_max: f64,
        n_rt: usize,
        n_rz: usize,
    ) -> Result<Self> {
        let rt: Vec<f64> = (0..n_rt)
            .map(|i| rt_max * i as f64 / (n_rt - 1) as f64)
            .collect();
        let rz: Vec<f64> = (0..n_rz)
            .map(|j| rz_max * j as f64 / (n_rz - 1) as f64)
            .collect();
        let mut values = vec![0.0; n_rt * n_rz];
        for j in 0..n_rz {
            for i in 0..n_rt {
                values[i + j * n_rt] = f(rt[i], rz[j]);
            }
        }
        Self::from_samples(rt, rz, values)
    }

    /// R(rho, z) by bicubic (Catmull-Rom) interpolation, 0 outside.
    pub fn eval(&self, rho: f64, z: f64) -> f64 {
        let rho = rho.abs();
        let z = z.abs();
        if rho > *self.rt.last().unwrap() || z > *self.rz.last().unwrap() {
            return 0.0;
        }
        let (i, u) = locate(&self.rt, rho);
        let (j, v) = locate(&self.rz, z);
        let n = self.rt.len();
        let mut rows = [0.0; 4];
        for (dj, row) in rows.iter_mut().enumerate() {
            // even extension across both axes: reflect indices below zero
            let jj = reflect_index(j as isize + dj as isize - 1, self.rz.len());
            let sample = |di: isize| self.values[reflect_index(i as isize + di, n) + jj * n];
            *row = catmull_rom(sample(-1), sample(0), sample(1), sample(2), u);
        }
        catmull_rom(rows[0], rows[1], rows[2], rows[3], v)
    }

    /// 2D transverse Fourier transform at |q_t| = q, longitudinal lag zeta,
    /// interpolated from the precomputed Hankel table (even in both
    /// arguments, zero beyond the table).
    fn hankel0(&self, q: f64, zeta: f64) -> f64 {
        let q = q.abs();
        let zeta = zeta.abs();
        if zeta > self.zeta_max || q > *self.hankel_q.last().unwrap() {
            return 0.0;
        }
        let (iq, u) = locate(&self.hankel_q, q);
        let (j, v) = locate(&self.rz, zeta);
        let n = self.hankel_q.len();
        let mut rows = [0.0; 4];
        for (dj, row) in rows.iter_mut().enumerate() {
            let jj = reflect_index(j as isize + dj as isize - 1, self.rz.len());
            let sample = |di: isize| self.hankel_values[reflect_index(iq as isize + di, n) + jj * n];
            *row = catmull_rom(sample(-1), sample(0), sample(1), sample(2), u);
        }
        catmull_rom(rows[0], rows[1], rows[2], rows[3], v)
    }

    /// Integral of f over [0, zeta_max] with the cell-aligned rule.
    fn integrate_zeta<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.zeta_nodes
            .iter()
            .zip(&self.zeta_weights)
            .map(|(&z, &w)| w * f(z))
            .sum()
    }
}

fn locate(grid: &[f64], x: f64) -> (usize, f64) {
    // index i with grid[i] <= x < grid[i+1], plus the fractional offset
    let i = match grid.binary_search_by(|g| g.partial_cmp(&x).unwrap()) {
        Ok(i) => i.min(grid.len() - 2),
        Err(i) => i.saturating_sub(1).min(grid.len() - 2),
    };
    let u = (x - grid[i]) / (grid[i + 1] - grid[i]);
    (i, u)
}

fn reflect_index(i: isize, len: usize) -> usize {
    let i = i.unsigned_abs();
    i.min(len - 1)
}

fn catmull_rom(p0: f64, p1: f64, p2: f64, p3: f64, t: f64) -> f64 {
    let a = -0.5 * p0 + 1.5 * p1 - 1.5 * p2 + 0.5 * p3;
    let b = p0 - 2.5 * p1 + 2.0 * p2 - 0.5 * p3;
    let c = -0.5 * p0 + 0.5 * p2;
    ((a * t + b) * t + c) * t + p1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::adaptive_simpson;
    use approx::assert_relative_eq;

    fn gaussian() -> SpectralMedium {
        SpectralMedium::gaussian(1.0, 2.0 * PI / 50.0, 2.0 * PI / 50.0).unwrap()
    }

    #[test]
    fn invalid_parameters_rejected() {
        assert!(SpectralMedium::gaussian(0.0, 0.1, 0.1).is_err());
        assert!(SpectralMedium::gaussian(1.0, 1.5, 0.1).is_err());
        assert!(SpectralMedium::gaussian(1.0, 0.1, -0.1).is_err());
    }

    #[test]
    fn gaussian_autocorr_values() {
        let m = gaussian();
        assert_relative_eq!(m.autocorr(Vec3::new(0.0, 0.0, 0.0)), 1.0, epsilon = 1e-15);
        // e^{-1/2}
        assert_relative_eq!(
            m.autocorr(Vec3::new(1.0, 0.0, 0.0)),
            0.6065306597126334,
            epsilon = 1e-15
        );
    }

    #[test]
    fn autocorr_evenness() {
        let m = gaussian();
        let s = SpectralMedium::new(
            CorrelationModel::GaussianIsotropic { axial_stretch: 1.7 },
            1.0,
            0.1,
            0.1,
            2.0 * PI,
        )
        .unwrap();
        for &r in &[
            Vec3::new(0.3, -0.7, 1.1),
            Vec3::new(-1.2, 0.4, -0.2),
            Vec3::new(0.0, 2.0, -1.5),
        ] {
            for medium in [&m, &s] {
                assert_relative_eq!(
                    medium.autocorr(r),
                    medium.autocorr(r.scale(-1.0)),
                    epsilon = 1e-15
                );
            }
        }
    }

    #[test]
    fn gaussian_psd3_values() {
        let m = gaussian();
        // (2 pi)^{3/2}
        assert_relative_eq!(
            m.psd3(Vec3::new(0.0, 0.0, 0.0)),
            15.749609945722419,
            epsilon = 1e-14
        );
        // effectively supported in an O(1) ball
        assert!(m.psd3(Vec3::new(10.0, 0.0, 0.0)) < 1e-20);
    }

    #[test]
    fn gaussian_psd_partial_values() {
        let m = gaussian();
        assert_relative_eq!(
            m.psd_partial(Vec2::new(0.0, 0.0), 0.0),
            2.0 * PI,
            epsilon = 1e-14
        );
        // 2 pi e^{-1/2}
        assert_relative_eq!(
            m.psd_partial(Vec2::new(1.0, 0.0), 0.0),
            3.8109445294603597,
            epsilon = 1e-14
        );
    }

    #[test]
    fn fourier_slice_consistency() {
        // int Rhat(q_t, zeta) e^{-i q_z zeta} dzeta = psd3(q_t, q_z)
        let m = gaussian();
        for &(qx, qy, qz) in &[(0.0, 0.0, 0.0), (0.7, -0.3, 0.5), (1.2, 0.1, -0.9)] {
            let qt = Vec2::new(qx, qy);
            let by_quad = 2.0
                * adaptive_simpson(
                    &|z: f64| m.psd_partial(qt, z) * (qz * z).cos(),
                    0.0,
                    12.0,
                    1e-12,
                );
            assert_relative_eq!(by_quad, m.psd3(Vec3::new(qx, qy, qz)), epsilon = 1e-8);
        }
    }

    #[test]
    fn dispersion_integral_gaussian_values() {
        let m = gaussian();
        // 2 pi sqrt(pi/2)
        let d0 = m.dispersion_integral(Vec2::new(0.0, 0.0), 0.0);
        assert_relative_eq!(d0.re, 7.874804972861209, epsilon = 1e-13);
        assert_relative_eq!(d0.im, 0.0, epsilon = 1e-15);
        // decay as b -> infinity (Riemann-Lebesgue)
        let mags: Vec<f64> = [2.0, 5.0, 10.0, 30.0]
            .iter()
            .map(|&b| m.dispersion_integral(Vec2::new(0.0, 0.0), b).norm())
            .collect();
        assert!(mags.windows(2).all(|w| w[1] < w[0]));
        assert!(mags[3] < 1e-1 * mags[0]);
    }

    #[test]
    fn dispersion_integral_real_part_is_half_psd3() {
        let m = gaussian();
        let s = SpectralMedium::new(
            CorrelationModel::GaussianIsotropic { axial_stretch: 1.4 },
            1.0,
            0.1,
            0.1,
            2.0 * PI,
        )
        .unwrap();
        for medium in [&m, &s] {
            for &(qx, qy, b) in &[(0.0, 0.0, 0.0), (0.5, 0.2, 1.3), (1.1, -0.4, -0.8)] {
                let d = medium.dispersion_integral(Vec2::new(qx, qy), b);
                assert_relative_eq!(
                    d.re,
                    0.5 * medium.psd3(Vec3::new(qx, qy, b)),
                    epsilon = 1e-8
                );
            }
        }
    }

    #[test]
    fn dispersion_integral_matches_quadrature() {
        // oracle: direct numerical integration of the one-sided lag integral
        let m = gaussian();
        for &(qx, b) in &[(0.3, 0.9), (0.0, 2.7), (0.8, 0.0)] {
            let qt = Vec2::new(qx, 0.0);
            let re = adaptive_simpson(&|z: f64| m.psd_partial(qt, z) * (b * z).cos(), 0.0, 12.0, 1e-12);
            let im = -adaptive_simpson(&|z: f64| m.psd_partial(qt, z) * (b * z).sin(), 0.0, 12.0, 1e-12);
            let d = m.dispersion_integral(qt, b);
            assert_relative_eq!(d.re, re, epsilon = 1e-10);
            assert_relative_eq!(d.im, im, epsilon = 1e-10);
        }
    }

    fn tabulated_gaussian(stretch: f64) -> SpectralMedium {
        let tab = Tabulated::from_function(
            |rho, z| (-0.5 * (rho * rho + z * z / (stretch * stretch))).exp(),
            9.0,
            9.0 * stretch,
            181,
            181,
        )
        .unwrap();
        SpectralMedium::new(
            CorrelationModel::TabulatedTransverseIsotropic(tab),
            1.0,
            0.1,
            0.1,
            2.0 * PI,
        )
        .unwrap()
    }

    #[test]
    fn tabulated_matches_analytic_gaussian() {
        let tab = tabulated_gaussian(1.0);
        let exact = gaussian();
        // autocorrelation interpolation
        for &(x, z) in &[(0.0, 0.0), (0.53, 0.21), (1.7, -0.9), (3.1, 2.2)] {
            assert_relative_eq!(
                tab.autocorr(Vec3::new(x, 0.0, z)),
                exact.autocorr(Vec3::new(x, 0.0, z)),
                epsilon = 1e-6
            );
        }
        // extrapolation beyond the table returns 0
        assert_eq!(tab.autocorr(Vec3::new(10.0, 0.0, 0.0)), 0.0);
        // spectral quantities against the closed forms
        for &(q, b) in &[(0.0, 0.0), (0.6, 0.4), (1.3, 1.1)] {
            let qt = Vec2::new(q, 0.0);
            let dt = tab.dispersion_integral(qt, b);
            let de = exact.dispersion_integral(qt, b);
            assert_relative_eq!(dt.re, de.re, max_relative = 2e-5, epsilon = 1e-6);
            assert_relative_eq!(dt.im, de.im, max_relative = 2e-5, epsilon = 1e-6);
            assert_relative_eq!(
                tab.psd3(Vec3::new(q, 0.0, b)),
                exact.psd3(Vec3::new(q, 0.0, b)),
                max_relative = 2e-5,
                epsilon = 1e-6
            );
        }
    }

    #[test]
    fn tabulated_stretched_matches_analytic() {
        let tab = tabulated_gaussian(1.5);
        let exact = SpectralMedium::new(
            CorrelationModel::GaussianIsotropic { axial_stretch: 1.5 },
            1.0,
            0.1,
            0.1,
            2.0 * PI,
        )
        .unwrap();
        for &(q, b) in &[(0.2, 0.7), (0.9, 0.0)] {
            let qt = Vec2::new(0.0, q);
            let dt = tab.dispersion_integral(qt, b);
            let de = exact.dispersion_integral(qt, b);
            assert_relative_eq!(dt.re, de.re, max_relative = 5e-5, epsilon = 1e-6);
            assert_relative_eq!(dt.im, de.im, max_relative = 5e-5, epsilon = 1e-6);
        }
        assert_relative_eq!(
            tab.axial_correlation_integral(),
            exact.axial_correlation_integral(),
            max_relative = 1e-5
        );
    }
}
