//! Wave-vector kinematics and the TE/TM coupling matrices.
//!
//! A propagating plane wave is labeled by its transverse slowness vector
//! `kappa` with |kappa| < 1; the longitudinal component of the unit wave
//! vector is beta(kappa) = sqrt(1 - |kappa|^2). The TM/TE frame vectors,
//! the eigenvectors of the 4x4 first-order symbol, and the four 2x2
//! coupling blocks between forward (`a`) and backward (`b`) amplitudes
//! all live here.

use crate::error::{Error, Result};
use crate::mat2::{Mat2, Vec2, Vec3};

/// Transverse slowness vector of a propagating wave, |kappa| < 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransverseWaveVector(pub Vec2);

impl TransverseWaveVector {
    pub fn new(kappa1: f64, kappa2: f64) -> Result<Self> {
        let v = Vec2::new(kappa1, kappa2);
        if v.norm_sq() >= 1.0 {
            return Err(Error::domain(format!(
                "|kappa| = {} is not propagating (need |kappa| < 1)",
                v.norm()
            )));
        }
        Ok(TransverseWaveVector(v))
    }

    pub fn vec(self) -> Vec2 {
        self.0
    }

    pub fn norm(self) -> f64 {
        self.0.norm()
    }
}

/// beta(kappa) = sqrt(1 - |kappa|^2), the longitudinal slowness.
pub fn beta(kappa: Vec2) -> Result<f64> {
    let n2 = kappa.norm_sq();
    if n2 >= 1.0 {
        return Err(Error::domain(format!(
            "beta undefined: |kappa| = {} >= 1",
            n2.sqrt()
        )));
    }
    Ok((1.0 - n2).sqrt())
}

/// Gradient of beta: -kappa / beta(kappa).
pub fn grad_beta(kappa: Vec2) -> Result<Vec2> {
    let b = beta(kappa)?;
    Ok(kappa.scale(-1.0 / b))
}

fn require_nonzero(kappa: Vec2, what: &str) -> Result<f64> {
    let n = kappa.norm();
    if n == 0.0 {
        return Err(Error::domain(format!(
            "{what} undefined at kappa = 0 (direction kappa/|kappa| has no limit)"
        )));
    }
    Ok(n)
}

/// Orthonormal right-handed frame attached to the forward wave vector:
/// returns (u, u_perp, kvec) with u x u_perp = kvec.
pub fn frame_vectors(kappa: Vec2) -> Result<(Vec3, Vec3, Vec3)> {
    let n = require_nonzero(kappa, "frame vectors")?;
    let b = beta(kappa)?;
    let khat = kappa.scale(1.0 / n);
    let khat_perp = khat.perp();
    let u = Vec3::new(b * khat.x, b * khat.y, -n);
    let u_perp = Vec3::new(khat_perp.x, khat_perp.y, 0.0);
    let kvec = Vec3::new(kappa.x, kappa.y, b);
    Ok((u, u_perp, kvec))
}

/// The four eigenvectors of the 4x4 propagation symbol M(kappa), paired
/// with the eigenvalue magnitude beta. Component order is
/// (E along khat or khat_perp, U along the same), i.e. the vectors act on
/// (E1, E2, U1, U2) stacked fields.
#[derive(Debug, Clone, Copy)]
pub struct EigenSystem {
    pub psi_plus: [f64; 4],
    pub psi_plus_perp: [f64; 4],
    pub psi_minus: [f64; 4],
    pub psi_minus_perp: [f64; 4],
    pub beta: f64,
}

/// Eigenvectors of M(kappa) (eigenvalues +-beta), in closed form.
pub fn eigensystem(kappa: Vec2) -> Result<EigenSystem> {
    let n = require_nonzero(kappa, "eigensystem")?;
    let b = beta(kappa)?;
    let sb = b.sqrt();
    let khat = kappa.scale(1.0 / n);
    let khat_perp = khat.perp();
    let mk = |sign: f64| {
        [
            sign * sb * khat.x,
            sign * sb * khat.y,
            khat.x / sb,
            khat.y / sb,
        ]
    };
    let mk_perp = |sign: f64| {
        [
            khat_perp.x / sb,
            khat_perp.y / sb,
            sign * sb * khat_perp.x,
            sign * sb * khat_perp.y,
        ]
    };
    Ok(EigenSystem {
        psi_plus: mk(1.0),
        psi_plus_perp: mk_perp(1.0),
        psi_minus: mk(-1.0),
        psi_minus_perp: mk_perp(-1.0),
        beta: b,
    })
}

/// The 4x4 symbol M(kappa) = [[0, I - kappa kappa^T], [I - perp perp^T, 0]]
/// as a dense array (row major); used by tests and the eigen-residual check.
pub fn symbol_matrix(kappa: Vec2) -> [[f64; 4]; 4] {
    let kp = kappa.perp();
    let mut m = [[0.0; 4]; 4];
    // top-right block: I - kappa (x) kappa
    m[0][2] = 1.0 - kappa.x * kappa.x;
    m[0][3] = -kappa.x * kappa.y;
    m[1][2] = -kappa.y * kappa.x;
    m[1][3] = 1.0 - kappa.y * kappa.y;
    // bottom-left block: I - kappa_perp (x) kappa_perp
    m[2][0] = 1.0 - kp.x * kp.x;
    m[2][1] = -kp.x * kp.y;
    m[3][0] = -kp.y * kp.x;
    m[3][1] = 1.0 - kp.y * kp.y;
    m
}

/// Which 2x2 block of the full 4x4 coupling matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaKind {
    /// forward -> forward (this is the transport coupling matrix)
    Aa,
    /// backward -> backward
    Bb,
    /// forward -> backward
    Ab,
    /// backward -> forward
    Ba,
}

/// Coupling block Gamma^{kind}(kappa, kappa') between mode pairs.
///
/// The `aa` block drives all moment equations; the others exist for the
/// symmetry checks of the forward-scattering approximation.
pub fn gamma_block(kind: GammaKind, kappa: Vec2, kappa_prime: Vec2) -> Result<Mat2> {
    let n = require_nonzero(kappa, "gamma_block")?;
    let np = require_nonzero(kappa_prime, "gamma_block")?;
    let b = beta(kappa)?;
    let bp = beta(kappa_prime)?;
    let khat = kappa.scale(1.0 / n);
    let khat_p = kappa_prime.scale(1.0 / np);
    let sqrt_bbp = (b * bp).sqrt();
    let a = n * np / sqrt_bbp; // |k||k'| / sqrt(beta beta')
    let bb = khat.dot(khat_p) * sqrt_bbp; // khat . khat' sqrt(beta beta')
    let c = khat.dot(khat_p.perp()) * (b / bp).sqrt();
    let d = khat.perp().dot(khat_p) * (bp / b).sqrt();
    let e = khat.dot(khat_p) / sqrt_bbp;
    Ok(match kind {
        GammaKind::Aa => Mat2::new(a + bb, c, d, e),
        GammaKind::Bb => Mat2::new(-a - bb, c, d, -e),
        GammaKind::Ab => Mat2::new(a - bb, c, -d, e),
        GammaKind::Ba => Mat2::new(-a + bb, c, -d, -e),
    })
}

/// High-frequency limit of the `aa` coupling block: the rotation-like
/// matrix [[k.k', -k_perp.k'], [k_perp.k', k.k']] / (|k||k'|). The inputs
/// are rescaled wave vectors of unconstrained magnitude.
pub fn gamma_hf(kappa: Vec2, kappa_prime: Vec2) -> Result<Mat2> {
    let n = require_nonzero(kappa, "gamma_hf")?;
    let np = require_nonzero(kappa_prime, "gamma_hf")?;
    let dot = kappa.dot(kappa_prime) / (n * np);
    let cross = kappa.perp().dot(kappa_prime) / (n * np);
    Ok(Mat2::new(dot, -cross, cross, dot))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn beta_values() {
        assert_relative_eq!(beta(Vec2::new(0.0, 0.0)).unwrap(), 1.0);
        // 3-4-5 triangle
        assert_relative_eq!(beta(Vec2::new(0.6, 0.0)).unwrap(), 0.8, epsilon = 1e-15);
        assert_relative_eq!(
            beta(Vec2::new(0.0, 0.99)).unwrap(),
            0.14106735979665894,
            epsilon = 1e-15
        );
        assert!(beta(Vec2::new(1.0, 0.0)).is_err());
        assert!(beta(Vec2::new(0.8, 0.8)).is_err());
    }

    #[test]
    fn grad_beta_values() {
        let g0 = grad_beta(Vec2::new(0.0, 0.0)).unwrap();
        assert_eq!((g0.x, g0.y), (0.0, 0.0));
        let g = grad_beta(Vec2::new(0.6, 0.0)).unwrap();
        assert_relative_eq!(g.x, -0.75, epsilon = 1e-15);
        assert_relative_eq!(g.y, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn grad_beta_finite_difference() {
        let mut rng = 81u64;
        let mut next = move || {
            rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (rng >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..20 {
            let r = 0.9 * next().sqrt();
            let th = 2.0 * std::f64::consts::PI * next();
            let k = Vec2::new(r * th.cos(), r * th.sin());
            let g = grad_beta(k).unwrap();
            let h = 1e-6;
            let fd_x = (beta(k + Vec2::new(h, 0.0)).unwrap()
                - beta(k - Vec2::new(h, 0.0)).unwrap())
                / (2.0 * h);
            let fd_y = (beta(k + Vec2::new(0.0, h)).unwrap()
                - beta(k - Vec2::new(0.0, h)).unwrap())
                / (2.0 * h);
            assert_relative_eq!(g.x, fd_x, max_relative = 1e-6, epsilon = 1e-9);
            assert_relative_eq!(g.y, fd_y, max_relative = 1e-6, epsilon = 1e-9);
        }
    }

    #[test]
    fn frame_vectors_example() {
        let (u, up, kv) = frame_vectors(Vec2::new(0.6, 0.0)).unwrap();
        assert_relative_eq!(u.x, 0.8, epsilon = 1e-15);
        assert_relative_eq!(u.y, 0.0, epsilon = 1e-15);
        assert_relative_eq!(u.z, -0.6, epsilon = 1e-15);
        assert_relative_eq!(up.y, 1.0, epsilon = 1e-15);
        assert_relative_eq!(kv.x, 0.6, epsilon = 1e-15);
        assert_relative_eq!(kv.z, 0.8, epsilon = 1e-15);
        assert!(frame_vectors(Vec2::new(0.0, 0.0)).is_err());
    }

    #[test]
    fn frame_orthonormal_right_handed() {
        for i in 0..50 {
            let r = 0.02 + 0.96 * (i as f64 + 0.5) / 50.0;
            let th = 2.399963229728653 * i as f64; // golden-angle sweep
            let k = Vec2::new(r * th.cos(), r * th.sin());
            let (u, up, kv) = frame_vectors(k).unwrap();
            assert_relative_eq!(u.norm(), 1.0, epsilon = 1e-14);
            assert_relative_eq!(up.norm(), 1.0, epsilon = 1e-14);
            assert_relative_eq!(kv.norm(), 1.0, epsilon = 1e-14);
            assert!(u.dot(up).abs() < 1e-14);
            assert!(u.dot(kv).abs() < 1e-14);
            assert!(up.dot(kv).abs() < 1e-14);
            // u x u_perp = kvec (right-handed), and the cyclic identities
            let c = u.cross(up);
            assert!((c - kv).norm() < 1e-14);
            assert!((kv.cross(u) - up).norm() < 1e-14);
            assert!((up.cross(kv) - u).norm() < 1e-14);
        }
    }

    #[test]
    fn eigensystem_example() {
        // kappa = (0.6, 0): psi_plus = (sqrt(0.8), 0, 1/sqrt(0.8), 0)
        let es = eigensystem(Vec2::new(0.6, 0.0)).unwrap();
        assert_relative_eq!(es.psi_plus[0], 0.8_f64.sqrt(), epsilon = 1e-15);
        assert_relative_eq!(es.psi_plus[1], 0.0, epsilon = 1e-15);
        assert_relative_eq!(es.psi_plus[2], 1.0 / 0.8_f64.sqrt(), epsilon = 1e-15);
        assert_relative_eq!(es.psi_plus[3], 0.0, epsilon = 1e-15);
    }

    fn mat_vec4(m: &[[f64; 4]; 4], v: &[f64; 4]) -> [f64; 4] {
        let mut out = [0.0; 4];
        for (i, row) in m.iter().enumerate() {
            out[i] = row.iter().zip(v).map(|(a, b)| a * b).sum();
        }
        out
    }

    #[test]
    fn eigen_residuals() {
        for i in 0..50 {
            let r = 0.02 + 0.95 * (i as f64 + 0.5) / 50.0;
            let th = 2.399963229728653 * i as f64 + 0.31;
            let k = Vec2::new(r * th.cos(), r * th.sin());
            let es = eigensystem(k).unwrap();
            let m = symbol_matrix(k);
            for (psi, sign) in [
                (es.psi_plus, 1.0),
                (es.psi_plus_perp, 1.0),
                (es.psi_minus, -1.0),
                (es.psi_minus_perp, -1.0),
            ] {
                let mv = mat_vec4(&m, &psi);
                let res: f64 = mv
                    .iter()
                    .zip(&psi)
                    .map(|(a, b)| (a - sign * es.beta * b).powi(2))
                    .sum::<f64>()
                    .sqrt();
                assert!(res < 1e-12, "eigen residual {res} at kappa {k:?}");
            }
        }
    }

    fn det4(m: [[f64; 4]; 4]) -> f64 {
        // cofactor expansion; fine for 4x4 tests
        let mut det = 0.0;
        for j in 0..4 {
            let mut sub = [[0.0; 3]; 3];
            for (r, row) in m.iter().skip(1).enumerate() {
                let mut cc = 0;
                for (c, &v) in row.iter().enumerate() {
                    if c != j {
                        sub[r][cc] = v;
                        cc += 1;
                    }
                }
            }
            let d3 = sub[0][0] * (sub[1][1] * sub[2][2] - sub[1][2] * sub[2][1])
                - sub[0][1] * (sub[1][0] * sub[2][2] - sub[1][2] * sub[2][0])
                + sub[0][2] * (sub[1][0] * sub[2][1] - sub[1][1] * sub[2][0]);
            det += if j % 2 == 0 { 1.0 } else { -1.0 } * m[0][j] * d3;
        }
        det
    }

    #[test]
    fn eigenvectors_linearly_independent() {
        for i in 0..20 {
            let r = 0.05 + 0.94 * i as f64 / 19.0;
            let k = Vec2::new(r, 0.3 * r);
            if k.norm() > 0.99 {
                continue;
            }
            let es = eigensystem(k).unwrap();
            let m = [
                es.psi_plus,
                es.psi_plus_perp,
                es.psi_minus,
                es.psi_minus_perp,
            ];
            assert!(det4(m).abs() > 1e-3, "near-singular eigenbasis at {k:?}");
        }
    }

    #[test]
    fn gamma_aa_examples() {
        // coincident: diagonal with |k|^2/beta + beta and 1/beta
        let k = Vec2::new(0.6, 0.0);
        let g = gamma_block(GammaKind::Aa, k, k).unwrap();
        assert_relative_eq!(g.a, 1.25, epsilon = 1e-14);
        assert_relative_eq!(g.b, 0.0, epsilon = 1e-15);
        assert_relative_eq!(g.c, 0.0, epsilon = 1e-15);
        assert_relative_eq!(g.d, 1.25, epsilon = 1e-14);
        // orthogonal pair
        let g2 = gamma_block(GammaKind::Aa, Vec2::new(0.6, 0.0), Vec2::new(0.0, 0.6)).unwrap();
        assert_relative_eq!(g2.a, 0.45, epsilon = 1e-14);
        assert_relative_eq!(g2.b, -1.0, epsilon = 1e-14);
        assert_relative_eq!(g2.c, 1.0, epsilon = 1e-14);
        assert_relative_eq!(g2.d, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn gamma_aa_transpose_symmetry() {
        for i in 0..100 {
            let t = i as f64;
            let k = Vec2::new(
                0.45 * (1.0 + (0.7 * t).sin()) * (1.3 * t).cos(),
                0.45 * (1.0 + (0.9 * t).cos()) * (0.4 * t).sin(),
            );
            let kp = Vec2::new(
                0.45 * (1.0 + (0.3 * t).cos()) * (0.8 * t).sin(),
                0.45 * (1.0 + (0.5 * t).sin()) * (1.1 * t).cos(),
            );
            if k.norm() < 1e-3 || kp.norm() < 1e-3 || k.norm() >= 0.99 || kp.norm() >= 0.99 {
                continue;
            }
            let g = gamma_block(GammaKind::Aa, k, kp).unwrap();
            let gt = gamma_block(GammaKind::Aa, kp, k).unwrap();
            assert!((g - gt.transpose()).norm() < 1e-13 * (1.0 + g.norm()));
        }
    }

    #[test]
    fn gamma_blocks_match_eigenvector_projection() {
        // Oracle: the coupling blocks arise from sandwiching the medium
        // perturbation symbol N(k, k') = [[0, k (x) k'], [I, 0]] between the
        // eigenbasis at k (inverted) and at k'. The 2x2 blocks of
        // Psi(k)^{-1} N(k,k') Psi(k') must equal Gamma^{xy}(k, k') / 2.
        let pairs = [
            (Vec2::new(0.6, 0.0), Vec2::new(0.0, 0.6)),
            (Vec2::new(0.3, 0.2), Vec2::new(-0.4, 0.5)),
            (Vec2::new(0.1, -0.7), Vec2::new(0.55, 0.25)),
            (Vec2::new(-0.2, -0.3), Vec2::new(-0.2, -0.3)),
        ];
        for (k, kp) in pairs {
            let es = eigensystem(k).unwrap();
            let esp = eigensystem(kp).unwrap();
            // Psi columns ordered (a, a_perp, b, b_perp)
            let psi = [es.psi_plus, es.psi_plus_perp, es.psi_minus, es.psi_minus_perp];
            let psip = [
                esp.psi_plus,
                esp.psi_plus_perp,
                esp.psi_minus,
                esp.psi_minus_perp,
            ];
            // N(k, k') acting on column vectors
            let n_apply = |v: [f64; 4]| {
                let s = kp.x * v[2] + kp.y * v[3];
                [k.x * s, k.y * s, v[0], v[1]]
            };
            // solve Psi x = N psi'_j for each j (Gaussian elimination)
            let mut a = [[0.0f64; 4]; 4];
            for (c, col) in psi.iter().enumerate() {
                for r in 0..4 {
                    a[r][c] = col[r];
                }
            }
            for (j, &pj) in psip.iter().enumerate() {
                let rhs = n_apply(pj);
                let x = solve4(a, rhs);
                for (i, xi) in x.iter().enumerate() {
                    // row block = target amplitude family, column block = source
                    let kind = match (i / 2, j / 2) {
                        (0, 0) => GammaKind::Aa,
                        (0, 1) => GammaKind::Ab,
                        (1, 0) => GammaKind::Ba,
                        _ => GammaKind::Bb,
                    };
                    let g = gamma_block(kind, k, kp).unwrap();
                    let entry = match (i % 2, j % 2) {
                        (0, 0) => g.a,
                        (0, 1) => g.b,
                        (1, 0) => g.c,
                        _ => g.d,
                    };
                    assert_relative_eq!(*xi, 0.5 * entry, epsilon = 1e-12, max_relative = 1e-10);
                }
            }
        }
    }

    fn solve4(mut a: [[f64; 4]; 4], mut b: [f64; 4]) -> [f64; 4] {
        for col in 0..4 {
            let piv = (col..4)
                .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
                .unwrap();
            a.swap(col, piv);
            b.swap(col, piv);
            for row in col + 1..4 {
                let f = a[row][col] / a[col][col];
                for c in col..4 {
                    a[row][c] -= f * a[col][c];
                }
                b[row] -= f * b[col];
            }
        }
        let mut x = [0.0; 4];
        for row in (0..4).rev() {
            let mut s = b[row];
            for c in row + 1..4 {
                s -= a[row][c] * x[c];
            }
            x[row] = s / a[row][row];
        }
        x
    }

    #[test]
    fn gamma_hf_examples() {
        let k = Vec2::new(0.37, -0.11);
        let g = gamma_hf(k, k).unwrap();
        assert!((g - Mat2::identity()).norm() < 1e-14);
        let g2 = gamma_hf(Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.0)).unwrap();
        assert_relative_eq!(g2.a, 0.0, epsilon = 1e-15);
        assert_relative_eq!(g2.b, -1.0, epsilon = 1e-15);
        assert_relative_eq!(g2.c, 1.0, epsilon = 1e-15);
        assert_relative_eq!(g2.d, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn gamma_hf_is_small_gamma_limit() {
        let k = Vec2::new(0.8, 0.3);
        let kp = Vec2::new(-0.2, 0.9);
        let ghf = gamma_hf(k, kp).unwrap();
        let mut prev = f64::INFINITY;
        for &g in &[1e-1, 1e-2, 1e-3] {
            let gg = gamma_block(GammaKind::Aa, k.scale(g), kp.scale(g)).unwrap();
            let err = (gg - ghf).norm();
            // first-order convergence: the gap shrinks roughly like gamma
            assert!(err < prev * 0.2, "gap {err} did not shrink at gamma {g}");
            prev = err;
        }
        assert!(prev < 1e-5);
    }

    #[test]
    fn beta_monotone_decreasing_in_radius() {
        let mut prev = beta(Vec2::new(0.0, 0.0)).unwrap();
        for i in 1..40 {
            let r = i as f64 * 0.0245;
            let b = beta(Vec2::new(r, 0.0)).unwrap();
            assert!(b < prev);
            prev = b;
        }
    }
}
