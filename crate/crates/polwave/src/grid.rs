//! Direction grids: quadrature node sets on the propagating disk.
//!
//! A grid discretizes integrals over the transverse slowness disk
//! |kappa| <= kappa_max < 1 with positive weights. The polar layout pairs
//! Gauss-Legendre radial nodes with a uniform (trapezoid) angular rule and
//! is the natural choice for transverse-isotropic problems; the Cartesian
//! layout handles anisotropic initial data. Neither layout places a node
//! at the origin (the TM/TE frame is discontinuous there) or at |kappa| = 1.

use crate::error::{Error, Result};
use crate::mat2::Vec2;
use crate::quad::gauss_legendre_on;
use std::sync::atomic::{AtomicU64, Ordering};

static GRID_IDS: AtomicU64 = AtomicU64::new(0);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridLayout {
    PolarIsotropic,
    Cartesian,
    /// Explicit node list (used by the Monte Carlo lattice and tests).
    Explicit,
}

/// Quadrature grid over the propagating disk. Weights are plain d(kappa)
/// area weights; spectral measure factors (k^2 / (2 pi)^2) are applied by
/// the consumers.
#[derive(Debug, Clone)]
pub struct DirectionGrid {
    id: u64,
    pub layout: GridLayout,
    pub nodes: Vec<Vec2>,
    pub weights: Vec<f64>,
    pub kappa_max: f64,
    /// Polar layout only: radial nodes and their quadrature weights
    /// (Gauss-Legendre weight times radius), plus the angular count.
    pub radii: Vec<f64>,
    pub radial_weights: Vec<f64>,
    pub n_angular: usize,
}

impl DirectionGrid {
    /// Polar grid: `n_radial` Gauss-Legendre nodes on (0, kappa_max] times
    /// `n_angular` uniform angles.
    pub fn polar(n_radial: usize, n_angular: usize, kappa_max: f64) -> Result<Self> {
        if n_radial == 0 || n_angular == 0 {
            return Err(Error::domain("grid sizes must be positive"));
        }
        check_kappa_max(kappa_max)?;
        let (radii, wr) = gauss_legendre_on(n_radial, 0.0, kappa_max);
        let radial_weights: Vec<f64> = radii.iter().zip(&wr).map(|(&r, &w)| r * w).collect();
        let dtheta = 2.0 * std::f64::consts::PI / n_angular as f64;
        let mut nodes = Vec::with_capacity(n_radial * n_angular);
        let mut weights = Vec::with_capacity(n_radial * n_angular);
        for (i, &r) in radii.iter().enumerate() {
            for j in 0..n_angular {
                let th = dtheta * j as f64;
                nodes.push(Vec2::new(r * th.cos(), r * th.sin()));
                weights.push(radial_weights[i] * dtheta);
            }
        }
        Ok(DirectionGrid {
            id: GRID_IDS.fetch_add(1, Ordering::Relaxed),
            layout: GridLayout::PolarIsotropic,
            nodes,
            weights,
            kappa_max,
            radii,
            radial_weights,
            n_angular,
        })
    }

    /// Cartesian grid: uniform lattice of the given spacing, offset by half
    /// a cell so the origin is never a node, clipped to |kappa| <= kappa_max.
    pub fn cartesian(spacing: f64, kappa_max: f64) -> Result<Self> {
        if !(spacing > 0.0) {
            return Err(Error::domain("spacing must be positive"));
        }
        check_kappa_max(kappa_max)?;
        let n = (kappa_max / spacing).ceil() as i64 + 1;
        let mut nodes = Vec::new();
        for ix in -n..n {
            for iy in -n..n {
                let k = Vec2::new((ix as f64 + 0.5) * spacing, (iy as f64 + 0.5) * spacing);
                if k.norm() <= kappa_max {
                    nodes.push(k);
                }
            }
        }
        if nodes.is_empty() {
            return Err(Error::domain("cartesian grid is empty; reduce spacing"));
        }
        let w = spacing * spacing;
        let weights = vec![w; nodes.len()];
        Ok(DirectionGrid {
            id: GRID_IDS.fetch_add(1, Ordering::Relaxed),
            layout: GridLayout::Cartesian,
            nodes,
            weights,
            kappa_max,
            radii: Vec::new(),
            radial_weights: Vec::new(),
            n_angular: 0,
        })
    }

    /// Grid from an explicit node/weight list.
    pub fn from_nodes(nodes: Vec<Vec2>, weights: Vec<f64>) -> Result<Self> {
        if nodes.is_empty() || nodes.len() != weights.len() {
            return Err(Error::domain(
                "node and weight lists must match and be nonempty",
            ));
        }
        let mut kappa_max: f64 = 0.0;
        for k in &nodes {
            let n = k.norm();
            if n == 0.0 || n >= 1.0 {
                return Err(Error::domain(format!(
                    "node at |kappa| = {n} is outside the open propagating annulus"
                )));
            }
            kappa_max = kappa_max.max(n);
        }
        if weights.iter().any(|&w| w <= 0.0) {
            return Err(Error::domain("quadrature weights must be positive"));
        }
        Ok(DirectionGrid {
            id: GRID_IDS.fetch_add(1, Ordering::Relaxed),
            layout: GridLayout::Explicit,
            nodes,
            weights,
            kappa_max,
            radii: Vec::new(),
            radial_weights: Vec::new(),
            n_angular: 0,
        })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Node index of the polar node at radial index i, angular index j.
    pub fn polar_index(&self, i: usize, j: usize) -> usize {
        i * self.n_angular + j
    }

    /// Stable identity used to detect grid mismatches between fields.
    pub fn id(&self) -> u64 {
        self.id
    }

    /// Innermost radius present on the grid (the radial limit used when
    /// diagnostics are quoted "at kappa = 0").
    pub fn innermost_radius(&self) -> f64 {
        self.nodes
            .iter()
            .map(|k| k.norm())
            .fold(f64::INFINITY, f64::min)
    }
}

fn check_kappa_max(kappa_max: f64) -> Result<()> {
    if !(kappa_max > 0.0 && kappa_max < 1.0) {
        return Err(Error::domain(format!(
            "kappa_max must lie in (0, 1), got {kappa_max}"
        )));
    }
    Ok(())
}
