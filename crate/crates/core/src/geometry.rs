//! Planar primitives and the two focal formulas shared by every base curve.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A point in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Distance to another point.
    pub fn distance(&self, other: Point2) -> f64 {
        (*self - other).norm()
    }

    pub fn midpoint(&self, other: Point2) -> Point2 {
        Point2::new(0.5 * (self.x + other.x), 0.5 * (self.y + other.y))
    }
}

/// A displacement in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec2 {
    pub dx: f64,
    pub dy: f64,
}

impl Vec2 {
    pub const fn new(dx: f64, dy: f64) -> Self {
        Vec2 { dx, dy }
    }

    pub fn norm(&self) -> f64 {
        self.dx.hypot(self.dy)
    }

    pub fn norm_squared(&self) -> f64 {
        self.dx * self.dx + self.dy * self.dy
    }

    pub fn dot(&self, other: Vec2) -> f64 {
        self.dx * other.dx + self.dy * other.dy
    }

    /// z-component of the 3D cross product; zero iff the vectors are parallel.
    pub fn cross(&self, other: Vec2) -> f64 {
        self.dx * other.dy - self.dy * other.dx
    }

    pub fn is_finite(&self) -> bool {
        self.dx.is_finite() && self.dy.is_finite()
    }
}

impl Sub for Point2 {
    type Output = Vec2;
    fn sub(self, rhs: Point2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Add<Vec2> for Point2 {
    type Output = Point2;
    fn add(self, rhs: Vec2) -> Point2 {
        Point2::new(self.x + rhs.dx, self.y + rhs.dy)
    }
}

impl Sub<Vec2> for Point2 {
    type Output = Point2;
    fn sub(self, rhs: Vec2) -> Point2 {
        Point2::new(self.x - rhs.dx, self.y - rhs.dy)
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.dx + rhs.dx, self.dy + rhs.dy)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    fn mul(self, rhs: f64) -> Vec2 {
        Vec2::new(self.dx * rhs, self.dy * rhs)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.dx, -self.dy)
    }
}

/// Relative tolerance below which a curve point is considered to sit on the
/// focus itself.
pub const DEGENERACY_TOLERANCE: f64 = 1e-12;

/// Unit direction of the ray from the focus `o` through the curve point `p`.
///
/// Fails with [`Error::DegenerateRay`] when `p` coincides with `o` under a
/// relative tolerance of `1e-12 · max(1, |p|, |o|)`.
pub fn unit_from_focus(o: Point2, p: Point2) -> Result<Vec2> {
    let delta = p - o;
    let dist = delta.norm();
    let scale = 1f64
        .max((p - Point2::default()).norm())
        .max((o - Point2::default()).norm());
    if dist <= DEGENERACY_TOLERANCE * scale {
        return Err(Error::DegenerateRay { x: p.x, y: p.y });
    }
    Ok(delta * (1.0 / dist))
}

/// Both branch points at distance `d` from `p` along the unit ray `u`:
/// the inner branch `p − d·u` and the outer branch `p + d·u`.
///
/// `d` of any sign is accepted (a negative `d` swaps the branches); a
/// non-finite `d` is rejected with [`Error::NonFiniteOffset`].
pub fn branch_points(p: Point2, u: Vec2, d: f64) -> Result<(Point2, Point2)> {
    debug_assert!((u.norm() - 1.0).abs() <= 1e-9, "u must be a unit vector");
    if !d.is_finite() {
        return Err(Error::NonFiniteOffset { value: d });
    }
    Ok((p - u * d, p + u * d))
}
