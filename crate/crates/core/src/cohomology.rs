//! Line-bundle cohomology on `F_e`.
//!
//! `h^0` comes from pushing forward to `P¹`: `π_* O(ah+bf) = ⊕_{i=0..a} O(b − ie)`.
//! `h^2` is Serre dual to `h^0(K − c)`, `χ` is Riemann–Roch, and `h^1` is
//! recovered as `h^0 + h^2 − χ`. The `h^1`-vanishing trichotomy is kept as a
//! separate predicate so it can be tested against that value.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::picard::{DivisorClass, SurfaceGeometry};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CohomologyTriple {
    pub h0: i64,
    pub h1: i64,
    pub h2: i64,
}

impl CohomologyTriple {
    pub fn euler(&self) -> i64 {
        self.h0 - self.h1 + self.h2
    }
}

/// Closed-form `h^0(F_e, O(ah+bf)) = Σ_{i=0..a} max(0, b − ie + 1)`.
pub fn h0(s: &SurfaceGeometry, c: DivisorClass) -> i64 {
    if c.a < 0 || c.b < 0 {
        return 0;
    }
    let e = s.e();
    // terms with i ≤ k are positive
    let k = c.a.min(c.b / e);
    (k + 1) * (c.b + 1) - e * k * (k + 1) / 2
}

pub fn h2(s: &SurfaceGeometry, c: DivisorClass) -> i64 {
    h0(s, s.canonical_class() - c)
}

/// Riemann–Roch: `1 + ab + a + b − e·a(a+1)/2`.
pub fn chi(s: &SurfaceGeometry, c: DivisorClass) -> i64 {
    let (a, b) = (c.a, c.b);
    let twice = s.e() * a * (a + 1);
    assert!(twice % 2 == 0, "e·a(a+1) is always even");
    1 + a * b + a + b - twice / 2
}

pub fn h1(s: &SurfaceGeometry, c: DivisorClass) -> Result<i64> {
    let v = h0(s, c) + h2(s, c) - chi(s, c);
    if v < 0 {
        return Err(Error::Inconsistent(format!(
            "negative h1 = {v} for class {c} on F_{}",
            s.e()
        )));
    }
    Ok(v)
}

pub fn triple(s: &SurfaceGeometry, c: DivisorClass) -> Result<CohomologyTriple> {
    Ok(CohomologyTriple {
        h0: h0(s, c),
        h1: h1(s, c)?,
        h2: h2(s, c),
    })
}

/// `h^1 = 0` iff `a ≥ 0, b ≥ ea − 1`, or `a = −1`, or `a ≤ −2, b ≤ ea + e − 1`.
pub fn h1_vanishes(s: &SurfaceGeometry, c: DivisorClass) -> bool {
    let e = s.e();
    match c.a {
        a if a >= 0 => c.b >= e * a - 1,
        -1 => true,
        a => c.b <= e * a + e - 1,
    }
}

/// Brute-force lattice count `#{(i, j) : 0 ≤ i ≤ a, 0 ≤ j ≤ b − ie}`.
///
/// Deliberately shares nothing with [`h0`]; it is the reference the closed
/// forms are checked against.
pub fn oracle_h0(s: &SurfaceGeometry, c: DivisorClass) -> i64 {
    let mut count = 0;
    let mut i = 0;
    while i <= c.a {
        let top = c.b - i * s.e();
        let mut j = 0;
        while j <= top {
            count += 1;
            j += 1;
        }
        i += 1;
    }
    count
}

/// `h^1` by pushing forward to `P¹`: `Σ_i h^1(P¹, O(b − ie))` for `a ≥ 0`,
/// zero for `a = −1`, and Serre duality for `a ≤ −2`. Loop-based like
/// [`oracle_h0`].
pub fn oracle_h1(s: &SurfaceGeometry, c: DivisorClass) -> i64 {
    if c.a <= -2 {
        return oracle_h1(s, s.canonical_class() - c);
    }
    let mut count = 0;
    let mut i = 0;
    while i <= c.a {
        // h^1(P¹, O(d)) = −d − 1 for d ≤ −2
        let mut d = c.b - i * s.e();
        while d <= -2 {
            count += 1;
            d += 1;
        }
        i += 1;
    }
    count
}

/// Triples of `c + t·by` for every `t` in `t_from..=t_to`.
pub fn cohomology_profile(
    s: &SurfaceGeometry,
    c: DivisorClass,
    by: DivisorClass,
    t_from: i64,
    t_to: i64,
) -> Result<Vec<(i64, CohomologyTriple)>> {
    if t_from > t_to {
        return Err(Error::InvalidRange {
            from: t_from,
            to: t_to,
        });
    }
    (t_from..=t_to)
        .map(|t| Ok((t, triple(s, c.twist(t, by))?)))
        .collect()
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

    #[test]
    fn h0_examples() {
        assert_eq!(h0(&s(1), d(1, 1)), 3);
        assert_eq!(h0(&s(2), d(2, 4)), 9);
        for e in 1..5 {
            assert_eq!(h0(&s(e), d(-1, 100)), 0);
            // h0(M) = e + 2: |M| maps to P^{e+1}
            assert_eq!(h0(&s(e), s(e).m_class()), e + 2);
        }
    }

    #[test]
    fn h2_examples() {
        for e in 1..5 {
            let g = s(e);
            assert_eq!(h2(&g, g.canonical_class()), 1);
            assert_eq!(h2(&g, DivisorClass::ZERO), 0);
        }
        assert_eq!(h2(&s(1), d(-3, -4)), 3);
    }

    #[test]
    fn chi_examples() {
        for e in 1..5 {
            assert_eq!(chi(&s(e), DivisorClass::ZERO), 1);
        }
        assert_eq!(chi(&s(2), d(1, 0)), 0);
        assert_eq!(chi(&s(1), d(1, 1)), 3);
    }

    #[test]
    fn chi_matches_intersection_form() {
        for e in 1..5 {
            let g = s(e);
            let k = g.canonical_class();
            for a in -6..7 {
                for b in -9..10 {
                    let c = d(a, b);
                    let twice = g.intersect(c, c - k);
                    assert_eq!(chi(&g, c), 1 + twice / 2);
                }
            }
        }
    }

    #[test]
    fn h1_examples() {
        for e in 1..6 {
            assert_eq!(h1(&s(e), d(0, -2)).unwrap(), 1);
            assert_eq!(h1(&s(e), DivisorClass::ZERO).unwrap(), 0);
        }
        assert_eq!(h1(&s(2), d(1, 0)).unwrap(), 1);
    }

    #[test]
    fn trichotomy_examples() {
        assert!(h1_vanishes(&s(2), d(3, 5)));
        assert!(h1_vanishes(&s(3), d(-1, 1000)));
        assert!(!h1_vanishes(&s(2), d(-2, 0)));
        assert!(h1_vanishes(&s(2), d(-2, -3)));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(oracle_h0(&s(1), d(1, 1)), 3);
        assert_eq!(oracle_h0(&s(2), d(2, 4)), 9);
        for e in 1..4 {
            assert_eq!(oracle_h0(&s(e), d(5, -1)), 0);
            assert_eq!(oracle_h1(&s(e), d(0, -2)), 1);
            assert_eq!(oracle_h1(&s(e), d(-1, 7)), 0);
        }
        assert_eq!(oracle_h1(&s(2), d(1, 0)), 1);
    }

    #[test]
    fn profile_examples() {
        let g = s(1);
        let rows = cohomology_profile(&g, DivisorClass::ZERO, g.m_class(), 0, 2).unwrap();
        let expect = [(0, (1, 0, 0)), (1, (3, 0, 0)), (2, (6, 0, 0))];
        for ((t, tr), (et, (a, b, c))) in rows.iter().zip(expect) {
            assert_eq!(*t, et);
            assert_eq!((tr.h0, tr.h1, tr.h2), (a, b, c));
        }

        let g = s(2);
        let rows = cohomology_profile(&g, d(1, 0), g.m_class(), 0, 0).unwrap();
        assert_eq!(rows, vec![(0, CohomologyTriple { h0: 1, h1: 1, h2: 0 })]);

        let rows = cohomology_profile(&g, d(-3, 2), DivisorClass::ZERO, -4, 4).unwrap();
        assert!(rows.windows(2).all(|w| w[0].1 == w[1].1));

        assert!(matches!(
            cohomology_profile(&g, d(0, 0), g.m_class(), 3, 2),
            Err(Error::InvalidRange { from: 3, to: 2 })
        ));
    }
}
