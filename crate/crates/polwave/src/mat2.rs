//! Small fixed-size vectors and 2x2 matrices used throughout the crate.
//!
//! The mode space is two-dimensional (TM, TE), so almost all linear algebra
//! here is on 2x2 real or complex matrices with closed-form eigenvalues and
//! matrix exponentials.

use num_complex::Complex64 as C64;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Real 2-vector in the transverse plane.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    pub fn dot(self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// Counterclockwise rotation by 90 degrees: (x, y) -> (-y, x).
    pub fn perp(self) -> Vec2 {
        Vec2::new(-self.y, self.x)
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn scale(self, s: f64) -> Vec2 {
        Vec2::new(self.x * s, self.y * s)
    }

    pub fn unit(self) -> Vec2 {
        self.scale(1.0 / self.norm())
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

/// Real 3-vector; used for wave vectors and field polarizations.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Vec3 { x, y, z }
    }

    pub fn dot(self, o: Vec3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: Vec3) -> Vec3 {
        Vec3::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn scale(self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

/// Complex 2-vector holding a (TM, TE) amplitude pair.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct CVec2 {
    pub a: C64,
    pub b: C64,
}

impl CVec2 {
    pub const fn new(a: C64, b: C64) -> Self {
        CVec2 { a, b }
    }

    pub fn zero() -> Self {
        CVec2::new(C64::new(0.0, 0.0), C64::new(0.0, 0.0))
    }

    pub fn norm_sq(self) -> f64 {
        self.a.norm_sqr() + self.b.norm_sqr()
    }

    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn scale(self, s: C64) -> CVec2 {
        CVec2::new(self.a * s, self.b * s)
    }

    /// Outer product v v^dagger (Hermitian, rank one).
    pub fn outer(self) -> CMat2 {
        CMat2::new(
            self.a * self.a.conj(),
            self.a * self.b.conj(),
            self.b * self.a.conj(),
            self.b * self.b.conj(),
        )
    }
}

impl Add for CVec2 {
    type Output = CVec2;
    fn add(self, o: CVec2) -> CVec2 {
        CVec2::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for CVec2 {
    type Output = CVec2;
    fn sub(self, o: CVec2) -> CVec2 {
        CVec2::new(self.a - o.a, self.b - o.b)
    }
}

/// Real 2x2 matrix, row-major: [[a, b], [c, d]].
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Mat2 {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl Mat2 {
    pub const fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        Mat2::new(1.0, 0.0, 0.0, 1.0)
    }

    pub fn transpose(self) -> Mat2 {
        Mat2::new(self.a, self.c, self.b, self.d)
    }

    pub fn trace(self) -> f64 {
        self.a + self.d
    }

    pub fn det(self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    pub fn scale(self, s: f64) -> Mat2 {
        Mat2::new(self.a * s, self.b * s, self.c * s, self.d * s)
    }

    /// Eigenvalues of a symmetric matrix, descending.
    pub fn sym_eigenvalues(self) -> (f64, f64) {
        let m = 0.5 * (self.a + self.d);
        let h = 0.5 * (self.a - self.d);
        let r = (h * h + self.b * self.c).max(0.0).sqrt();
        (m + r, m - r)
    }

    /// Frobenius norm.
    pub fn norm(self) -> f64 {
        (self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d).sqrt()
    }

    pub fn to_complex(self) -> CMat2 {
        CMat2::new(
            C64::new(self.a, 0.0),
            C64::new(self.b, 0.0),
            C64::new(self.c, 0.0),
            C64::new(self.d, 0.0),
        )
    }

    pub fn mul_vec(self, v: Vec2) -> Vec2 {
        Vec2::new(self.a * v.x + self.b * v.y, self.c * v.x + self.d * v.y)
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, o: Mat2) -> Mat2 {
        Mat2::new(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )
    }
}

impl Add for Mat2 {
    type Output = Mat2;
    fn add(self, o: Mat2) -> Mat2 {
        Mat2::new(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, o: Mat2) -> Mat2 {
        Mat2::new(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)
    }
}

/// Complex 2x2 matrix, row-major: [[a, b], [c, d]].
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct CMat2 {
    pub a: C64,
    pub b: C64,
    pub c: C64,
    pub d: C64,
}

impl CMat2 {
    pub const fn new(a: C64, b: C64, c: C64, d: C64) -> Self {
        CMat2 { a, b, c, d }
    }

    pub fn zero() -> Self {
        CMat2::from_real(0.0, 0.0, 0.0, 0.0)
    }

    pub fn identity() -> Self {
        CMat2::from_real(1.0, 0.0, 0.0, 1.0)
    }

    pub fn from_real(a: f64, b: f64, c: f64, d: f64) -> Self {
        CMat2::new(
            C64::new(a, 0.0),
            C64::new(b, 0.0),
            C64::new(c, 0.0),
            C64::new(d, 0.0),
        )
    }

    pub fn diag(a: C64, d: C64) -> Self {
        CMat2::new(a, C64::new(0.0, 0.0), C64::new(0.0, 0.0), d)
    }

    pub fn transpose(self) -> CMat2 {
        CMat2::new(self.a, self.c, self.b, self.d)
    }

    pub fn dagger(self) -> CMat2 {
        CMat2::new(self.a.conj(), self.c.conj(), self.b.conj(), self.d.conj())
    }

    pub fn trace(self) -> C64 {
        self.a + self.d
    }

    pub fn det(self) -> C64 {
        self.a * self.d - self.b * self.c
    }

    pub fn scale(self, s: C64) -> CMat2 {
        CMat2::new(self.a * s, self.b * s, self.c * s, self.d * s)
    }

    pub fn scale_re(self, s: f64) -> CMat2 {
        self.scale(C64::new(s, 0.0))
    }

    pub fn real(self) -> Mat2 {
        Mat2::new(self.a.re, self.b.re, self.c.re, self.d.re)
    }

    pub fn imag(self) -> Mat2 {
        Mat2::new(self.a.im, self.b.im, self.c.im, self.d.im)
    }

    pub fn mul_vec(self, v: CVec2) -> CVec2 {
        CVec2::new(self.a * v.a + self.b * v.b, self.c * v.a + self.d * v.b)
    }

    /// Frobenius norm.
    pub fn norm(self) -> f64 {
        (self.a.norm_sqr() + self.b.norm_sqr() + self.c.norm_sqr() + self.d.norm_sqr()).sqrt()
    }

    /// (M + M^dagger)/2.
    pub fn hermitian_part(self) -> CMat2 {
        (self + self.dagger()).scale_re(0.5)
    }

    /// Residual of Hermitian symmetry, ||M - M^dagger||.
    pub fn hermiticity_residual(self) -> f64 {
        (self - self.dagger()).norm()
    }

    /// Eigenvalues of a Hermitian matrix, descending. The imaginary parts
    /// of the diagonal are ignored.
    pub fn herm_eigenvalues(self) -> (f64, f64) {
        let m = 0.5 * (self.a.re + self.d.re);
        let h = 0.5 * (self.a.re - self.d.re);
        let r = (h * h + self.b.norm_sqr()).sqrt();
        (m + r, m - r)
    }

    /// Matrix exponential of a general complex 2x2 matrix, closed form.
    ///
    /// Uses exp(M) = e^mu [cosh(delta) I + sinh(delta)/delta (M - mu I)]
    /// with mu = tr M / 2 and delta^2 = mu^2 - det M. The sinh(delta)/delta
    /// factor is even in delta so the square-root branch does not matter;
    /// a short series covers the delta -> 0 limit.
    pub fn expm(self) -> CMat2 {
        let mu = self.trace() * 0.5;
        let delta2 = mu * mu - self.det();
        let delta = delta2.sqrt();
        let (ch, shc) = if delta.norm() < 1e-6 {
            // cosh and sinh(x)/x via series: accurate to ~1e-25 here
            let d2 = delta2;
            (
                C64::new(1.0, 0.0) + d2 * 0.5 + d2 * d2 / 24.0,
                C64::new(1.0, 0.0) + d2 / 6.0 + d2 * d2 / 120.0,
            )
        } else {
            (delta.cosh(), delta.sinh() / delta)
        };
        let em = mu.exp();
        let dev = self - CMat2::diag(mu, mu);
        (CMat2::diag(ch, ch) + dev.scale(shc)).scale(em)
    }
}

impl Mul for CMat2 {
    type Output = CMat2;
    fn mul(self, o: CMat2) -> CMat2 {
        CMat2::new(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )
    }
}

impl Add for CMat2 {
    type Output = CMat2;
    fn add(self, o: CMat2) -> CMat2 {
        CMat2::new(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)
    }
}

impl AddAssign for CMat2 {
    fn add_assign(&mut self, o: CMat2) {
        self.a += o.a;
        self.b += o.b;
        self.c += o.c;
        self.d += o.d;
    }
}

impl Sub for CMat2 {
    type Output = CMat2;
    fn sub(self, o: CMat2) -> CMat2 {
        CMat2::new(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)
    }
}
