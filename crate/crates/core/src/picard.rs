//! Picard-lattice arithmetic on `F_e`.
//!
//! `Pic(F_e) ≅ Z²` with basis the negative section `h` and a fiber `f`, where
//! `h² = −e`, `h·f = 1`, `f² = 0`. All arithmetic is on `i64`; the workspace
//! builds with overflow checks enabled in every profile, so an overflow aborts
//! instead of wrapping.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The Hirzebruch surface `F_e`, `e ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceGeometry {
    e: i64,
}

/// The class `a·h + b·f`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DivisorClass {
    pub a: i64,
    pub b: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositivityReport {
    pub effective: bool,
    pub spanned: bool,
    pub ample: bool,
}

impl DivisorClass {
    pub const ZERO: DivisorClass = DivisorClass { a: 0, b: 0 };
    /// The negative section `h`.
    pub const H: DivisorClass = DivisorClass { a: 1, b: 0 };
    /// A fiber `f` of the ruling.
    pub const F: DivisorClass = DivisorClass { a: 0, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        DivisorClass { a, b }
    }

    /// `self + t·by`, i.e. the class of `L ⊗ B^{⊗t}`.
    pub fn twist(self, t: i64, by: DivisorClass) -> DivisorClass {
        self + by * t
    }

    /// Effective classes are exactly the nonnegative cone `a ≥ 0, b ≥ 0`.
    pub fn is_effective(self) -> bool {
        self.a >= 0 && self.b >= 0
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl Add for DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: DivisorClass) -> DivisorClass {
        DivisorClass::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: DivisorClass) -> DivisorClass {
        DivisorClass::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        DivisorClass::new(-self.a, -self.b)
    }
}

impl Mul<i64> for DivisorClass {
    type Output = DivisorClass;
    fn mul(self, t: i64) -> DivisorClass {
        DivisorClass::new(self.a * t, self.b * t)
    }
}

impl SurfaceGeometry {
    pub fn new(e: i64) -> Result<Self> {
        if e < 1 {
            return Err(Error::Domain(format!(
                "F_e requires e >= 1, got e = {e}"
            )));
        }
        Ok(SurfaceGeometry { e })
    }

    pub fn e(&self) -> i64 {
        self.e
    }

    /// Intersection pairing `−e·a1·a2 + a1·b2 + a2·b1`.
    pub fn intersect(&self, c1: DivisorClass, c2: DivisorClass) -> i64 {
        -self.e * c1.a * c2.a + c1.a * c2.b + c2.a * c1.b
    }

    /// `K = −2h − (e+2)f`.
    pub fn canonical_class(&self) -> DivisorClass {
        DivisorClass::new(-2, -(self.e + 2))
    }

    pub fn positivity(&self, c: DivisorClass) -> PositivityReport {
        PositivityReport {
            effective: c.is_effective(),
            spanned: self.is_spanned(c),
            ample: self.is_ample(c),
        }
    }

    pub fn is_spanned(&self, c: DivisorClass) -> bool {
        c.a >= 0 && c.b >= c.a * self.e
    }

    pub fn is_ample(&self, c: DivisorClass) -> bool {
        c.a > 0 && c.b > c.a * self.e
    }

    /// `M = h + ef`: spanned, not ample.
    pub fn m_class(&self) -> DivisorClass {
        DivisorClass::new(1, self.e)
    }

    /// `R = h + (e+1)f`: ample.
    pub fn r_class(&self) -> DivisorClass {
        DivisorClass::new(1, self.e + 1)
    }

    /// `b − e·a`, the degree of the class restricted to `h`.
    pub fn slack(&self, c: DivisorClass) -> i64 {
        c.b - self.e * c.a
    }
}

/// `⌈n / d⌉` for `d > 0`.
pub(crate) fn div_ceil(n: i64, d: i64) -> i64 {
    debug_assert!(d > 0);
    -((-n).div_euclid(d))
}

/// `⌊n / d⌋` for `d > 0`.
pub(crate) fn div_floor(n: i64, d: i64) -> i64 {
    debug_assert!(d > 0);
    n.div_euclid(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(e: i64) -> SurfaceGeometry {
        SurfaceGeometry::new(e).unwrap()
    }

    #[test]
    fn make_surface() {
        assert_eq!(s(1).e(), 1);
        assert_eq!(s(3).e(), 3);
        assert!(matches!(SurfaceGeometry::new(0), Err(Error::Domain(_))));
        assert!(SurfaceGeometry::new(-4).is_err());
    }

    #[test]
    fn intersection_examples() {
        assert_eq!(s(2).intersect(DivisorClass::H, DivisorClass::H), -2);
        for e in 1..6 {
            assert_eq!(s(e).intersect(DivisorClass::H, DivisorClass::F), 1);
            assert_eq!(s(e).intersect(DivisorClass::F, DivisorClass::F), 0);
        }
        assert_eq!(
            s(1).intersect(DivisorClass::new(1, 2), DivisorClass::new(3, 4)),
            7
        );
    }

    #[test]
    fn canonical_class() {
        assert_eq!(s(1).canonical_class(), DivisorClass::new(-2, -3));
        assert_eq!(s(3).canonical_class(), DivisorClass::new(-2, -5));
        for e in 1..8 {
            let g = s(e);
            let k = g.canonical_class();
            assert_eq!(g.intersect(k, DivisorClass::F), -2);
            assert_eq!(g.intersect(k, g.m_class()), -e - 2);
            // adjunction on h ≅ P¹: h² + K·h = −2
            assert_eq!(g.intersect(DivisorClass::H, DivisorClass::H) + g.intersect(k, DivisorClass::H), -2);
        }
    }

    #[test]
    fn positivity_examples() {
        for e in 1..5 {
            let g = s(e);
            let m = g.positivity(g.m_class());
            assert!(m.effective && m.spanned && !m.ample);
            let o = g.positivity(DivisorClass::ZERO);
            assert!(o.effective && o.spanned && !o.ample);
            assert!(g.positivity(g.r_class()).ample);
        }
        assert!(s(2).positivity(DivisorClass::new(1, 3)).ample);
        assert!(!s(2).positivity(DivisorClass::H).spanned);
    }

    #[test]
    fn distinguished_classes() {
        assert_eq!(s(1).m_class(), DivisorClass::new(1, 1));
        assert_eq!(s(2).r_class(), DivisorClass::new(1, 3));
        for e in 1..6 {
            let g = s(e);
            assert_eq!(g.intersect(g.m_class(), g.m_class()), e);
        }
    }

    #[test]
    fn twist_examples() {
        let g = s(2);
        assert_eq!(DivisorClass::H.twist(-1, g.m_class()), DivisorClass::new(0, -2));
        let c = DivisorClass::new(4, -7);
        assert_eq!(c.twist(0, g.m_class()), c);
        assert_eq!(c.twist(3, g.m_class()), DivisorClass::new(7, -1));
    }

    #[test]
    fn rounding_helpers() {
        assert_eq!(div_ceil(-3, 2), -1);
        assert_eq!(div_ceil(4, 3), 2);
        assert_eq!(div_ceil(6, 3), 2);
        assert_eq!(div_floor(-3, 2), -2);
        assert_eq!(div_floor(7, 3), 2);
    }
}
