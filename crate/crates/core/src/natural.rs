//! Natural cohomology with respect to a twisting class.
//!
//! For a sheaf `E` and a spanned class `B`:
//! - `E` has property `£` w.r.t. `B` if `h^1(E(tB)) = 0` whenever `h^0(E(tB)) > 0`;
//! - `E` has property `££` w.r.t. `B` if `h^1(E(tB)) = 0` for every `t ∈ Z`.
//!
//! Two independent routes are provided. The closed-form checkers decide from
//! inequalities on the coefficients (or from the vanishing trichotomy plus
//! effectivity). [`scan_verdict`] and [`scan_all_twists`] evaluate numeric
//! `h^0`/`h^1` over a finite window whose end points are chosen so that every
//! summand's `h^1`-status is monotone beyond them; they act as the referee.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cohomology;
use crate::error::{Error, Result};
use crate::picard::{div_ceil, div_floor, DivisorClass, SurfaceGeometry};
use crate::sheaves::{self, IdealSheafModel, Locus};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum SheafModel {
    Line(DivisorClass),
    DirectSum(Vec<DivisorClass>),
    Ideal(IdealSheafModel),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Property {
    /// `£`: `h^0 > 0 ⇒ h^1 = 0` at every twist.
    Pounds,
    /// `££`: `h^1 = 0` at every twist.
    PoundsPounds,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub t: i64,
    pub h0: i64,
    pub h1: i64,
}

/// A twist at which the property is violated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub t: i64,
    pub h0: i64,
    pub h1: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Holds,
    Fails(Witness),
    /// Cohomology at twist `t` is only known up to an interval that does not
    /// settle the question.
    Indeterminate { t: i64 },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<Witness> {
        match self {
            Verdict::Fails(w) => Some(*w),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Holds => "HOLDS",
            Verdict::Fails(_) => "FAILS",
            Verdict::Indeterminate { .. } => "INDET",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanEvidence {
    pub rows: Vec<ScanRow>,
    pub verdict: Verdict,
    /// `m0`: first twist with sections, `None` when no twist has any.
    pub first_section: Option<i64>,
    /// Last twist the analytic tail argument needs; `None` for vacuous scans.
    pub stabilization_bound: Option<i64>,
}

impl SheafModel {
    pub fn direct_sum(classes: Vec<DivisorClass>) -> Result<Self> {
        if classes.is_empty() {
            return Err(Error::Domain("direct sum needs at least one summand".into()));
        }
        Ok(SheafModel::DirectSum(classes))
    }

    fn validate(&self) -> Result<()> {
        match self {
            SheafModel::DirectSum(v) if v.is_empty() => {
                Err(Error::Domain("direct sum needs at least one summand".into()))
            }
            _ => Ok(()),
        }
    }

    /// Underlying line-bundle classes and the point count (0 unless ideal).
    fn classes(&self) -> (Vec<DivisorClass>, i64) {
        match self {
            SheafModel::Line(c) => (vec![*c], 0),
            SheafModel::DirectSum(v) => (v.clone(), 0),
            SheafModel::Ideal(m) => (vec![m.class], m.config.z()),
        }
    }

    /// `(h^0, h^1)` of the model twisted by `t·by`.
    pub fn h0_h1(&self, s: &SurfaceGeometry, by: DivisorClass, t: i64) -> Result<(i64, i64)> {
        match self {
            SheafModel::Line(c) => {
                let c = c.twist(t, by);
                Ok((cohomology::h0(s, c), cohomology::h1(s, c)?))
            }
            SheafModel::DirectSum(v) => v.iter().try_fold((0, 0), |(h0, h1), c| {
                let c = c.twist(t, by);
                Ok((h0 + cohomology::h0(s, c), h1 + cohomology::h1(s, c)?))
            }),
            SheafModel::Ideal(m) => {
                let m = m.twist(t, by);
                Ok((sheaves::h0_ideal(s, &m), sheaves::h1_ideal(s, &m)?))
            }
        }
    }
}

fn require_spanned(s: &SurfaceGeometry, by: DivisorClass) -> Result<()> {
    if by == DivisorClass::ZERO || !s.is_spanned(by) {
        return Err(Error::NotSpanned(by));
    }
    Ok(())
}

/// First twist of a line bundle with sections; closed form.
fn line_m0(c: DivisorClass, by: DivisorClass) -> Option<i64> {
    // by spanned and nonzero ⇒ by.b ≥ 1
    let from_b = div_ceil(-c.b, by.b);
    if by.a > 0 {
        Some(from_b.max(div_ceil(-c.a, by.a)))
    } else if c.a >= 0 {
        Some(from_b)
    } else {
        None
    }
}

/// Minimal `t` with `h^0(model ⊗ by^t) > 0`, or `None` if there is none.
///
/// A spanned, nonzero `by` is effective, so `h^0` is nondecreasing in `t`
/// and the minimum is well defined.
pub fn m0(s: &SurfaceGeometry, model: &SheafModel, by: DivisorClass) -> Result<Option<i64>> {
    require_spanned(s, by)?;
    model.validate()?;
    match model {
        SheafModel::Line(c) => Ok(line_m0(*c, by)),
        SheafModel::DirectSum(v) => Ok(v.iter().filter_map(|c| line_m0(*c, by)).min()),
        SheafModel::Ideal(m) => {
            let Some(start) = line_m0(m.class, by) else {
                return Ok(None);
            };
            // sections of L(tB) grow by at least one per step once they exist,
            // so this terminates after O(z) steps
            let cap = start + 4 * (m.config.z() + 2) + 64;
            for t in start..=cap {
                if sheaves::h0_ideal(s, &m.twist(t, by)) > 0 {
                    return Ok(Some(t));
                }
            }
            Err(Error::Inconsistent(format!(
                "no sections of {m:?} up to twist {cap}"
            )))
        }
    }
}

/// Twist beyond which every summand's `h^1`-status is monotone (fail → hold).
///
/// For `by.a ≥ 1` this is the first twist where every h-coefficient is ≥ 1;
/// for `by` a multiple of the fiber it is where every `b − ea` exceeds `z + e`.
fn upper_bound(s: &SurfaceGeometry, classes: &[DivisorClass], z: i64, by: DivisorClass, m0: i64) -> i64 {
    let e = s.e();
    let reach = if by.a >= 1 {
        1 + classes.iter().map(|c| div_ceil(-c.a, by.a)).max().unwrap_or(0)
    } else {
        classes
            .iter()
            .map(|c| div_ceil(e * c.a + z + e - c.b, by.b))
            .max()
            .unwrap_or(0)
    };
    m0.max(reach) + 1
}

/// Twist below which every summand's `h^1`-status is constant.
fn lower_bound(s: &SurfaceGeometry, classes: &[DivisorClass], z: i64, by: DivisorClass, start: i64) -> i64 {
    let e = s.e();
    let reach = if by.a >= 1 {
        classes.iter().map(|c| div_floor(-2 - c.a, by.a)).min().unwrap_or(0)
    } else {
        classes
            .iter()
            .map(|c| div_floor(e * c.a - e - z - 2 - c.b, by.b))
            .min()
            .unwrap_or(0)
    };
    start.min(reach) - 1
}

/// Numeric referee for `£`: scans `[m0, T* + extra_window]`.
pub fn scan_verdict(
    s: &SurfaceGeometry,
    model: &SheafModel,
    by: DivisorClass,
    extra_window: i64,
) -> Result<ScanEvidence> {
    if extra_window < 0 {
        return Err(Error::Domain(format!("extra window must be >= 0, got {extra_window}")));
    }
    let Some(first) = m0(s, model, by)? else {
        return Ok(ScanEvidence {
            rows: Vec::new(),
            verdict: Verdict::Holds,
            first_section: None,
            stabilization_bound: None,
        });
    };
    let (classes, z) = model.classes();
    let bound = upper_bound(s, &classes, z, by, first);
    let mut rows = Vec::new();
    let mut verdict = None;
    for t in first..=bound + extra_window {
        let (h0, h1) = model.h0_h1(s, by, t)?;
        rows.push(ScanRow { t, h0, h1 });
        if verdict.is_none() && h0 > 0 && h1 > 0 {
            verdict = Some(Verdict::Fails(Witness { t, h0, h1 }));
        }
    }
    let verdict = verdict.unwrap_or_else(|| match rows.last() {
        Some(last) if last.h1 > 0 => Verdict::Indeterminate { t: last.t },
        _ => Verdict::Holds,
    });
    Ok(ScanEvidence {
        rows,
        verdict,
        first_section: Some(first),
        stabilization_bound: Some(bound),
    })
}

/// Numeric referee for `££`: two-sided scan, fails at the first `h^1 > 0`.
pub fn scan_all_twists(
    s: &SurfaceGeometry,
    model: &SheafModel,
    by: DivisorClass,
    extra_window: i64,
) -> Result<ScanEvidence> {
    if extra_window < 0 {
        return Err(Error::Domain(format!("extra window must be >= 0, got {extra_window}")));
    }
    let first = m0(s, model, by)?;
    let (classes, z) = model.classes();
    let start = first.unwrap_or(0);
    let hi = upper_bound(s, &classes, z, by, start);
    let lo = lower_bound(s, &classes, z, by, start);
    let mut rows = Vec::new();
    let mut verdict = Verdict::Holds;
    for t in lo - extra_window..=hi + extra_window {
        let (h0, h1) = model.h0_h1(s, by, t)?;
        rows.push(ScanRow { t, h0, h1 });
        if verdict.holds() && h1 > 0 {
            verdict = Verdict::Fails(Witness { t, h0, h1 });
        }
    }
    Ok(ScanEvidence {
        rows,
        verdict,
        first_section: first,
        stabilization_bound: Some(hi),
    })
}

pub fn check_pounds_line_m(s: &SurfaceGeometry, l: DivisorClass) -> bool {
    l.b >= s.e() * l.a - 1
}

pub fn check_poundspounds_line_m(s: &SurfaceGeometry, l: DivisorClass) -> bool {
    let e = s.e();
    e * l.a - 1 <= l.b && l.b <= e * l.a + e - 1
}

/// `£` with respect to `R = h + (e+1)f`.
///
/// Either `v ≥ (e+1)u`, or the first twist with sections, `y = ⌈−v/(e+1)⌉`,
/// already has `b − ea ≥ −1`, i.e. `v + y ≥ eu − 1`.
pub fn check_pounds_line_r(s: &SurfaceGeometry, l: DivisorClass) -> bool {
    let e = s.e();
    if l.b >= (e + 1) * l.a {
        return true;
    }
    let y = div_ceil(-l.b, e + 1);
    l.b + y >= e * l.a - 1
}

/// `£` for a line bundle and any spanned nonzero `by`, decided from
/// effectivity and the vanishing trichotomy alone.
pub fn check_pounds_line_general(s: &SurfaceGeometry, l: DivisorClass, by: DivisorClass) -> Result<bool> {
    require_spanned(s, by)?;
    let Some(first) = line_m0(l, by) else {
        return Ok(true);
    };
    let bound = upper_bound(s, &[l], 0, by, first);
    Ok((first..=bound).all(|t| {
        let c = l.twist(t, by);
        !c.is_effective() || cohomology::h1_vanishes(s, c)
    }))
}

pub fn check_poundspounds_line_general(s: &SurfaceGeometry, l: DivisorClass, by: DivisorClass) -> Result<bool> {
    require_spanned(s, by)?;
    let start = line_m0(l, by).unwrap_or(0);
    let lo = lower_bound(s, &[l], 0, by, start);
    let hi = upper_bound(s, &[l], 0, by, start);
    Ok((lo..=hi).all(|t| cohomology::h1_vanishes(s, l.twist(t, by))))
}

/// Orders summands by decreasing `u`, ties by decreasing `v`.
pub fn sort_summands(classes: &[DivisorClass]) -> Vec<DivisorClass> {
    let mut sorted = classes.to_vec();
    sorted.sort_by(|x, y| y.a.cmp(&x.a).then(y.b.cmp(&x.b)));
    sorted
}

/// `£` w.r.t. `M` for `L_1 ⊕ … ⊕ L_r`.
///
/// Every summand needs `v_i ≥ eu_i − 1`; with summands sorted, `m = −u_1` if
/// `v_1 ≥ eu_1` and `m = −u_1 + 1` if `v_1 = eu_1 − 1`. `m` is the first twist
/// with sections, where summand `i` has h-coefficient `u_i + m`; each later
/// summand needs `u_i + m ≥ −1` or `−1 ≤ v_i − eu_i ≤ e − 1`.
pub fn check_pounds_sum(s: &SurfaceGeometry, classes: &[DivisorClass]) -> Result<bool> {
    if classes.is_empty() {
        return Err(Error::Domain("direct sum needs at least one summand".into()));
    }
    let e = s.e();
    if !classes.iter().all(|c| check_pounds_line_m(s, *c)) {
        return Ok(false);
    }
    let sorted = sort_summands(classes);
    let lead = sorted[0];
    let m = if lead.b >= e * lead.a { -lead.a } else { -lead.a + 1 };
    debug_assert_eq!(
        Some(m),
        m0(s, &SheafModel::DirectSum(classes.to_vec()), s.m_class()).ok().flatten()
    );
    Ok(sorted[1..].iter().all(|c| {
        let sigma = c.b - e * c.a;
        c.a + m >= -1 || (-1..=e - 1).contains(&sigma)
    }))
}

/// `££` of a direct sum: every summand must have it.
pub fn check_poundspounds_sum(s: &SurfaceGeometry, classes: &[DivisorClass], by: DivisorClass) -> Result<bool> {
    if classes.is_empty() {
        return Err(Error::Domain("direct sum needs at least one summand".into()));
    }
    for c in classes {
        if !check_poundspounds_line_general(s, *c, by)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `£` w.r.t. `M` for `I_Z(uh+vf)`, via the twist-invariant `σ = v − eu`.
///
/// Twisting by `M` keeps `σ` fixed, so once sections exist `h^1(L)` vanishes
/// iff `σ ≥ −1`. The extra `h^1` coming from the points is `max(0, z − r)`
/// with `r` the number of conditions they can impose:
/// - general points: `r = h^0(L)`, unbounded, so nothing more is needed;
/// - points on `h`: `r = σ + 1` at every twist, so `z ≤ σ + 1`;
/// - points on a fiber: `r` grows with the h-coefficient `a`; it suffices to
///   check the first `a` at which `I_Z(L)` has sections.
pub fn check_pounds_ideal(s: &SurfaceGeometry, m: &IdealSheafModel) -> bool {
    let e = s.e();
    let z = m.config.z();
    let sigma = s.slack(m.class);
    if sigma < -1 {
        return false;
    }
    if z == 0 {
        return true;
    }
    match m.config.locus {
        Locus::GeneralPosition => true,
        Locus::OnSectionH => z <= sigma + 1,
        Locus::OnFiber => {
            let rank = |a: i64| if sigma >= 0 { a + 1 } else { a };
            let sections = |a: i64| {
                let below = DivisorClass::new(a, e * a + sigma - 1);
                cohomology::h0(s, below) + (rank(a) - z).max(0)
            };
            // h0(a, ea + σ − 1) > 0 as soon as a ≥ 2
            let first = (0..=2).find(|&a| sections(a) > 0).unwrap_or(2);
            rank(first) >= z
        }
    }
}

/// `££` for ideal models: points force `h^1 ≥ z` at every twist without
/// sections, so only `z = 0` can have it.
pub fn check_poundspounds_ideal(s: &SurfaceGeometry, m: &IdealSheafModel, by: DivisorClass) -> Result<bool> {
    if m.config.z() > 0 {
        require_spanned(s, by)?;
        return Ok(false);
    }
    check_poundspounds_line_general(s, m.class, by)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sheaves::PointConfig;

    fn s(e: i64) -> SurfaceGeometry {
        SurfaceGeometry::new(e).unwrap()
    }
    fn d(a: i64, b: i64) -> DivisorClass {
        DivisorClass::new(a, b)
    }
    fn ideal(z: i64, locus: Locus, a: i64, b: i64) -> IdealSheafModel {
        IdealSheafModel::new(PointConfig::new(z, locus).unwrap(), d(a, b))
    }

    #[test]
    fn m0_examples() {
        let g = s(2);
        assert_eq!(m0(&g, &SheafModel::Line(d(-1, 3)), g.m_class()).unwrap(), Some(1));
        for e in 1..5 {
            let g = s(e);
            assert_eq!(m0(&g, &SheafModel::Line(DivisorClass::ZERO), g.m_class()).unwrap(), Some(0));
        }
        let g = s(3);
        assert_eq!(m0(&g, &SheafModel::Line(d(2, -4)), g.m_class()).unwrap(), Some(2));
    }

    #[test]
    fn m0_rejects_bad_twisting_class() {
        let g = s(2);
        let line = SheafModel::Line(DivisorClass::ZERO);
        assert!(matches!(m0(&g, &line, DivisorClass::ZERO), Err(Error::NotSpanned(_))));
        assert!(matches!(m0(&g, &line, DivisorClass::H), Err(Error::NotSpanned(_))));
        assert!(m0(&g, &SheafModel::DirectSum(vec![]), g.m_class()).is_err());
    }

    #[test]
    fn m0_absent_for_fiber_twists_of_negative_classes() {
        let g = s(2);
        assert_eq!(m0(&g, &SheafModel::Line(d(-1, 0)), DivisorClass::F).unwrap(), None);
        let ev = scan_verdict(&g, &SheafModel::Line(d(-3, 0)), DivisorClass::F, 0).unwrap();
        assert!(ev.verdict.holds() && ev.rows.is_empty());
    }

    #[test]
    fn line_m_examples() {
        assert!(check_pounds_line_m(&s(2), d(1, 1)));
        assert!(!check_pounds_line_m(&s(2), d(1, 0)));
        assert!(check_pounds_line_m(&s(1), d(-2, 3)));
        assert!(check_poundspounds_line_m(&s(1), d(0, 0)));
        assert!(check_poundspounds_line_m(&s(2), d(1, 3)));
        assert!(!check_poundspounds_line_m(&s(2), d(1, 4)));
    }

    #[test]
    fn line_r_examples() {
        assert!(check_pounds_line_r(&s(1), d(2, 1)));
        assert!(!check_pounds_line_r(&s(1), d(3, 0)));
        assert!(check_pounds_line_r(&s(1), d(-1, 5)));
        // y = 1 on F_2: (1, 0) at the first twist with sections
        assert!(!check_pounds_line_r(&s(2), d(0, -3)));
    }

    #[test]
    fn line_general_examples() {
        let g = s(2);
        assert!(check_pounds_line_general(&g, d(1, 1), g.m_class()).unwrap());
        let g = s(1);
        assert!(check_pounds_line_general(&g, d(2, 1), g.r_class()).unwrap());
        assert!(check_pounds_line_general(&g, d(1, 2), d(1, 2)).unwrap());
        assert!(check_poundspounds_line_general(&g, d(1, 2), d(1, 2)).unwrap());
        assert!(!check_poundspounds_line_general(&g, d(1, 2), d(1, 4)).unwrap());
        let g = s(2);
        assert!(check_poundspounds_line_general(&g, d(1, 3), g.m_class()).unwrap());
        assert!(check_pounds_line_general(&g, d(1, 1), d(1, 1)).is_err());
    }

    #[test]
    fn sum_examples() {
        assert!(!check_pounds_sum(&s(3), &[d(0, 0), d(-2, 1)]).unwrap());
        assert!(check_pounds_sum(&s(2), &[d(1, 1), d(0, 0)]).unwrap());
        for e in 1..5 {
            assert!(check_pounds_sum(&s(e), &[d(0, 0), d(0, 0)]).unwrap());
        }
        assert!(check_pounds_sum(&s(1), &[]).is_err());
    }

    #[test]
    fn ideal_examples() {
        assert!(check_pounds_ideal(&s(1), &ideal(5, Locus::GeneralPosition, 2, 1)));
        assert!(!check_pounds_ideal(&s(2), &ideal(1, Locus::OnSectionH, 1, 1)));
        assert!(!check_pounds_ideal(&s(1), &ideal(2, Locus::OnFiber, 1, 3)));
    }

    #[test]
    fn scan_examples() {
        let g = s(2);
        let ev = scan_verdict(&g, &SheafModel::DirectSum(vec![d(0, 0), d(-2, 2)]), g.m_class(), 0).unwrap();
        let w = ev.verdict.witness().unwrap();
        assert_eq!(w.t, 0);
        assert!(w.h0 > 0 && w.h1 > 0);

        let ev = scan_verdict(&g, &SheafModel::Line(d(1, 1)), g.m_class(), 0).unwrap();
        assert_eq!(ev.verdict, Verdict::Holds);
        assert_eq!(ev.first_section, Some(0));
        assert_eq!(ev.rows.first().unwrap().t, 0);
        assert_eq!(ev.rows.last().unwrap().t, ev.stabilization_bound.unwrap());

        for e in 1..5 {
            let g = s(e);
            let ev = scan_verdict(&g, &SheafModel::Line(DivisorClass::ZERO), g.m_class(), 3).unwrap();
            assert!(ev.verdict.holds());
        }

        let g = s(2);
        let ev = scan_verdict(&g, &SheafModel::Line(d(1, 0)), g.m_class(), 0).unwrap();
        assert_eq!(ev.verdict, Verdict::Fails(Witness { t: 0, h0: 1, h1: 1 }));
    }

    #[test]
    fn bound_matches_documented_form_for_m() {
        // T* = max(m0, 1 + max(−u_i)) + 1 for twists by M
        let g = s(3);
        let classes = [d(-4, 1), d(2, 9), d(0, -5)];
        let first = m0(&g, &SheafModel::DirectSum(classes.to_vec()), g.m_class()).unwrap().unwrap();
        assert_eq!(upper_bound(&g, &classes, 0, g.m_class(), first), first.max(1 + 4) + 1);
    }
}
