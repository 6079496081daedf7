//! Twisted ideal sheaves `I_Z(ah+bf)` of finite point sets `Z`.
//!
//! Only the numerics of general configurations are modeled. `z` general points
//! of `F_e` impose `min(z, h^0(L))` conditions on `H^0(L)`; `z` general points
//! of a curve `C ≅ P¹` (the section `h` or a fiber) impose `min(z, r)`
//! conditions, where `r = h^0(L) − h^0(L − C)` is the rank of the restriction
//! `H^0(L) → H^0(L|_C)`. Since `Z` is zero-dimensional,
//! `χ(I_Z ⊗ L) = χ(L) − z` and `h^2(I_Z ⊗ L) = h^2(L)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cohomology::{self, CohomologyTriple};
use crate::error::{Error, Result};
use crate::picard::{DivisorClass, SurfaceGeometry};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Locus {
    GeneralPosition,
    OnSectionH,
    OnFiber,
}

/// A curve of `F_e` on which points may be constrained to lie.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Curve {
    SectionH,
    Fiber,
}

impl Curve {
    pub fn class(self) -> DivisorClass {
        match self {
            Curve::SectionH => DivisorClass::H,
            Curve::Fiber => DivisorClass::F,
        }
    }
}

impl Locus {
    pub fn curve(self) -> Option<Curve> {
        match self {
            Locus::GeneralPosition => None,
            Locus::OnSectionH => Some(Curve::SectionH),
            Locus::OnFiber => Some(Curve::Fiber),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Locus::GeneralPosition => "general",
            Locus::OnSectionH => "section",
            Locus::OnFiber => "fiber",
        }
    }
}

impl fmt::Display for Locus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Locus {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "general" | "g" => Ok(Locus::GeneralPosition),
            "section" | "h" => Ok(Locus::OnSectionH),
            "fiber" | "f" => Ok(Locus::OnFiber),
            other => Err(format!(
                "unknown locus '{other}' (expected general, section or fiber)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PointConfig {
    z: i64,
    pub locus: Locus,
}

impl PointConfig {
    pub fn new(z: i64, locus: Locus) -> Result<Self> {
        if z < 0 {
            return Err(Error::Domain(format!(
                "point scheme length must be nonnegative, got {z}"
            )));
        }
        Ok(PointConfig { z, locus })
    }

    pub fn general(z: i64) -> Result<Self> {
        Self::new(z, Locus::GeneralPosition)
    }

    pub fn z(&self) -> i64 {
        self.z
    }
}

/// `I_Z ⊗ O(class)` with `Z` described by `config`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IdealSheafModel {
    pub config: PointConfig,
    pub class: DivisorClass,
}

impl IdealSheafModel {
    pub fn new(config: PointConfig, class: DivisorClass) -> Self {
        IdealSheafModel { config, class }
    }

    pub fn twist(&self, t: i64, by: DivisorClass) -> Self {
        IdealSheafModel {
            config: self.config,
            class: self.class.twist(t, by),
        }
    }
}

pub fn restriction_degree(s: &SurfaceGeometry, c: DivisorClass, curve: Curve) -> i64 {
    s.intersect(c, curve.class())
}

/// Rank of `H^0(L) → H^0(L|_C)`.
pub fn restricted_rank(s: &SurfaceGeometry, c: DivisorClass, curve: Curve) -> i64 {
    cohomology::h0(s, c) - cohomology::h0(s, c - curve.class())
}

pub fn h0_ideal(s: &SurfaceGeometry, m: &IdealSheafModel) -> i64 {
    let z = m.config.z;
    let c = m.class;
    match m.config.locus.curve() {
        None => (cohomology::h0(s, c) - z).max(0),
        Some(curve) => {
            let below = c - curve.class();
            let r = cohomology::h0(s, c) - cohomology::h0(s, below);
            cohomology::h0(s, below) + (r - z).max(0)
        }
    }
}

pub fn h2_ideal(s: &SurfaceGeometry, m: &IdealSheafModel) -> i64 {
    cohomology::h2(s, m.class)
}

pub fn chi_ideal(s: &SurfaceGeometry, m: &IdealSheafModel) -> i64 {
    cohomology::chi(s, m.class) - m.config.z
}

pub fn h1_ideal(s: &SurfaceGeometry, m: &IdealSheafModel) -> Result<i64> {
    let v = h0_ideal(s, m) - chi_ideal(s, m) + h2_ideal(s, m);
    if v < 0 {
        return Err(Error::Inconsistent(format!(
            "negative h1 = {v} for ideal model {:?} on F_{}",
            m,
            s.e()
        )));
    }
    Ok(v)
}

pub fn triple_ideal(s: &SurfaceGeometry, m: &IdealSheafModel) -> Result<CohomologyTriple> {
    Ok(CohomologyTriple {
        h0: h0_ideal(s, m),
        h1: h1_ideal(s, m)?,
        h2: h2_ideal(s, m),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(e: i64) -> SurfaceGeometry {
        SurfaceGeometry::new(e).unwrap()
    }
    fn d(a: i64, b: i64) -> DivisorClass {
        DivisorClass::new(a, b)
    }
    fn model(z: i64, locus: Locus, a: i64, b: i64) -> IdealSheafModel {
        IdealSheafModel::new(PointConfig::new(z, locus).unwrap(), d(a, b))
    }

    #[test]
    fn rejects_negative_length() {
        assert!(PointConfig::new(-1, Locus::OnFiber).is_err());
    }

    #[test]
    fn restriction_degrees() {
        for e in 1..5 {
            let g = s(e);
            assert_eq!(restriction_degree(&g, g.m_class(), Curve::SectionH), 0);
            assert_eq!(restriction_degree(&g, d(7, -3), Curve::Fiber), 7);
        }
        assert_eq!(restriction_degree(&s(2), d(1, 1), Curve::SectionH), -1);
    }

    #[test]
    fn h0_examples() {
        assert_eq!(h0_ideal(&s(1), &model(2, Locus::GeneralPosition, 1, 1)), 1);
        assert_eq!(h0_ideal(&s(2), &model(1, Locus::OnSectionH, 1, 1)), 2);
        for locus in [Locus::GeneralPosition, Locus::OnSectionH, Locus::OnFiber] {
            assert_eq!(h0_ideal(&s(3), &model(0, locus, 2, 5)), cohomology::h0(&s(3), d(2, 5)));
        }
    }

    #[test]
    fn h1_examples() {
        assert_eq!(h1_ideal(&s(2), &model(1, Locus::OnSectionH, 1, 1)).unwrap(), 1);
        assert_eq!(h1_ideal(&s(1), &model(2, Locus::GeneralPosition, 1, 1)).unwrap(), 0);
        for locus in [Locus::GeneralPosition, Locus::OnSectionH, Locus::OnFiber] {
            let m = model(0, locus, 1, 0);
            assert_eq!(h1_ideal(&s(2), &m).unwrap(), cohomology::h1(&s(2), d(1, 0)).unwrap());
            assert_eq!(h2_ideal(&s(2), &model(4, locus, -5, -9)), cohomology::h2(&s(2), d(-5, -9)));
        }
    }

    #[test]
    fn fiber_points_impose_at_most_restricted_rank() {
        // on a fiber a class (0, b) restricts to O_{P¹}, a single condition
        let g = s(1);
        let m = model(2, Locus::OnFiber, 0, 2);
        assert_eq!(restricted_rank(&g, m.class, Curve::Fiber), 1);
        assert_eq!(h0_ideal(&g, &m), 2);
        assert_eq!(h1_ideal(&g, &m).unwrap(), 1);
    }
}
