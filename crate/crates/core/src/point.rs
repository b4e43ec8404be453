//! Points of the lattice `Z^3` and the small amount of exact linear algebra
//! the rest of the crate needs.
//!
//! All arithmetic is exact. Products are taken in `i128` and narrowed back
//! with a hard failure on overflow; hull construction bounds the input
//! coordinates so that every downstream product provably fits.

use std::fmt;
use std::ops::{Add, Neg, Sub};

/// A point of `Z^3`. Ordering is lexicographic in `(x, y, z)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

/// The origin of the lattice.
pub const ORIGIN: LatticePoint = LatticePoint { x: 0, y: 0, z: 0 };

impl LatticePoint {
    pub const fn new(x: i64, y: i64, z: i64) -> Self {
        Self { x, y, z }
    }

    pub fn is_zero(self) -> bool {
        self == ORIGIN
    }

    /// Standard inner product, exact.
    pub fn dot(self, other: Self) -> i64 {
        narrow(self.dot_wide(other))
    }

    pub(crate) fn dot_wide(self, other: Self) -> i128 {
        self.x as i128 * other.x as i128
            + self.y as i128 * other.y as i128
            + self.z as i128 * other.z as i128
    }

    /// Cross product, exact.
    pub fn cross(self, other: Self) -> Self {
        let (a, b) = (self, other);
        Self::new(
            narrow(a.y as i128 * b.z as i128 - a.z as i128 * b.y as i128),
            narrow(a.z as i128 * b.x as i128 - a.x as i128 * b.z as i128),
            narrow(a.x as i128 * b.y as i128 - a.y as i128 * b.x as i128),
        )
    }

    /// gcd of the absolute values of the coordinates; 0 for the origin.
    pub fn content(self) -> i64 {
        gcd(gcd(self.x.abs(), self.y.abs()), self.z.abs())
    }

    /// Divides out the content, keeping the direction. Panics on the origin.
    pub fn primitive(self) -> Self {
        let g = self.content();
        assert!(g > 0, "primitive direction of the zero vector");
        Self::new(self.x / g, self.y / g, self.z / g)
    }

    pub fn is_primitive(self) -> bool {
        self.content() == 1
    }
}

impl Add for LatticePoint {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(
            self.x.checked_add(o.x).expect("overflow in point addition"),
            self.y.checked_add(o.y).expect("overflow in point addition"),
            self.z.checked_add(o.z).expect("overflow in point addition"),
        )
    }
}

impl Sub for LatticePoint {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(
            self.x
                .checked_sub(o.x)
                .expect("overflow in point subtraction"),
            self.y
                .checked_sub(o.y)
                .expect("overflow in point subtraction"),
            self.z
                .checked_sub(o.z)
                .expect("overflow in point subtraction"),
        )
    }
}

impl Neg for LatticePoint {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y, -self.z)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// Determinant of the 3x3 matrix with columns `a`, `b`, `c` (the scalar
/// triple product `a · (b × c)`), exact.
pub fn det3(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> i64 {
    narrow(det3_wide(a, b, c))
}

pub(crate) fn det3_wide(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> i128 {
    let bx = b.x as i128;
    let by = b.y as i128;
    let bz = b.z as i128;
    let cx = c.x as i128;
    let cy = c.y as i128;
    let cz = c.z as i128;
    a.x as i128 * (by * cz - bz * cy)
        + a.y as i128 * (bz * cx - bx * cz)
        + a.z as i128 * (bx * cy - by * cx)
}

pub(crate) fn narrow(v: i128) -> i64 {
    i64::try_from(v).expect("integer overflow in exact lattice arithmetic")
}

/// Nonnegative gcd; `gcd(0, 0) = 0`.
pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64, z: i64) -> LatticePoint {
        LatticePoint::new(x, y, z)
    }

    #[test]
    fn gcd_basics() {
        assert_eq!(gcd(0, 0), 0);
        assert_eq!(gcd(-4, 6), 2);
        assert_eq!(gcd(35, 0), 35);
    }

    #[test]
    fn cross_is_orthogonal() {
        let a = pt(2, -1, 3);
        let b = pt(4, 0, -5);
        let c = a.cross(b);
        assert_eq!(a.dot(c), 0);
        assert_eq!(b.dot(c), 0);
    }

    #[test]
    fn det_of_identity() {
        assert_eq!(det3(pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)), 1);
        assert_eq!(det3(pt(0, 1, 0), pt(1, 0, 0), pt(0, 0, 1)), -1);
    }

    #[test]
    fn primitive_direction() {
        assert_eq!(pt(4, -4, 8).primitive(), pt(1, -1, 2));
        assert!(pt(3, 5, 7).is_primitive());
        assert!(!pt(2, 4, 6).is_primitive());
    }

    #[test]
    fn lexicographic_order() {
        assert!(pt(-1, 5, 5) < pt(0, -9, -9));
        assert!(pt(0, 1, 0) < pt(0, 1, 1));
    }
}
