//! Rank-2 bundles given as extensions `0 → O(A) → E → I_Z(Q) → 0`.
//!
//! Extension bundles are never materialized. Their cohomology is bounded by
//! the long exact sequence of the extension; a point estimate assuming
//! maximal-rank connecting maps is reported alongside, and exact values are
//! claimed only when the extension is forced to split.

use serde::{Deserialize, Serialize};

use crate::cohomology::{self, CohomologyTriple};
use crate::error::{Error, Result};
use crate::natural::{Verdict, Witness};
use crate::picard::{div_ceil, DivisorClass, SurfaceGeometry};
use crate::sheaves::{self, IdealSheafModel, PointConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChernData {
    pub rank: i64,
    pub c1: DivisorClass,
    pub c2: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtensionKind {
    /// `0 → O(D − mM) → E → I_Z(c1 + mM − D) → 0` for a minimal section
    /// of `E(mM)` vanishing on the divisor `D`.
    MinimalSection,
    /// `0 → O((1−m)h − emf) → E → I_S((u+m−1)h + (v+em)f) → 0` with `S`
    /// general of length `s`.
    Construction,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificates {
    /// `h^0(I_S(Q + (m−1)M)) = 0`, so `m` is the first twist with sections.
    pub section_min: bool,
    /// Cayley–Bacharach in the stated form `h^0((u+2m−5)h + (v+2em−2e−2)f) ≤ s − 1`.
    pub cayley_bacharach: bool,
    /// Cayley–Bacharach for the class `Q − A + K` itself.
    pub cayley_bacharach_exact: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionDatum {
    pub surface: SurfaceGeometry,
    pub kind: ExtensionKind,
    pub u: i64,
    pub v: i64,
    pub m: i64,
    pub s: i64,
    /// Class of the line subbundle `A` of the untwisted `E`.
    pub sub: DivisorClass,
    /// `I_Z(Q)`; `sub + quotient.class = c1(E)`.
    pub quotient: IdealSheafModel,
    pub certificates: Certificates,
    /// `s = 0` and `Ext^1(O(Q), O(A)) = H^1(A − Q) = 0`: only the split bundle exists.
    pub ext_forced_split: bool,
    /// Geometric side conditions taken on trust rather than verified.
    pub assumptions: Vec<String>,
}

impl ExtensionDatum {
    pub fn c1(&self) -> DivisorClass {
        DivisorClass::new(self.u, self.v)
    }

    pub fn chern(&self) -> ChernData {
        let g = &self.surface;
        ChernData {
            rank: 2,
            c1: self.c1(),
            c2: g.intersect(self.sub, self.quotient.class) + self.s,
        }
    }

    /// Builds the extension attached to a minimal section of `E(mM)`
    /// vanishing on a divisor of class `d`.
    pub fn minimal_section(
        g: &SurfaceGeometry,
        d: DivisorClass,
        m: i64,
        c1: DivisorClass,
        s: i64,
    ) -> Result<Self> {
        if s < 0 {
            return Err(Error::hypothesis("s_out_of_range", format!("length s = {s} < 0")));
        }
        let mm = g.m_class();
        let sub = d - mm * m;
        let quotient_class = c1 + mm * m - d;
        Ok(Self::assemble(*g, ExtensionKind::MinimalSection, c1, m, s, sub, quotient_class))
    }

    fn assemble(
        g: SurfaceGeometry,
        kind: ExtensionKind,
        c1: DivisorClass,
        m: i64,
        s: i64,
        sub: DivisorClass,
        quotient_class: DivisorClass,
    ) -> Self {
        let e = g.e();
        let mm = g.m_class();
        let quotient = IdealSheafModel::new(
            PointConfig::general(s).expect("s checked nonnegative"),
            quotient_class,
        );
        let section_min = cohomology::h0(&g, quotient_class + mm * (m - 1)) <= s;
        let cb_class = quotient_class - sub + g.canonical_class();
        let cayley_bacharach_exact = s == 0 || cohomology::h0(&g, cb_class) <= s - 1;
        let cayley_bacharach = match kind {
            ExtensionKind::Construction => {
                let stated = DivisorClass::new(c1.a + 2 * m - 5, c1.b + 2 * e * m - 2 * e - 2);
                s == 0 || cohomology::h0(&g, stated) <= s - 1
            }
            ExtensionKind::MinimalSection => cayley_bacharach_exact,
        };
        let ext_forced_split = s == 0
            && cohomology::h1(&g, sub - quotient_class).expect("line-bundle h1 is consistent") == 0;
        ExtensionDatum {
            surface: g,
            kind,
            u: c1.a,
            v: c1.b,
            m,
            s,
            sub,
            quotient,
            certificates: Certificates {
                section_min,
                cayley_bacharach,
                cayley_bacharach_exact,
            },
            ext_forced_split,
            assumptions: vec![
                "points of Z avoid the negative section h".into(),
                "no connected component of Z is tangent to a fiber".into(),
            ],
        }
    }
}

/// The `2e + 1` classes a minimal section of `E(mM)` can vanish on:
/// `0`, `h`, `yf` (`1 ≤ y ≤ e`), `h + wf` (`1 ≤ w ≤ e − 1`).
pub fn allowed_min_section_divisors(g: &SurfaceGeometry) -> Vec<DivisorClass> {
    let e = g.e();
    let mut out = vec![DivisorClass::ZERO, DivisorClass::H];
    out.extend((1..=e).map(|y| DivisorClass::new(0, y)));
    out.extend((1..e).map(|w| DivisorClass::new(1, w)));
    out
}

/// `c2(E(mM)) = s + D·c1 + 2m M·D − D²` for the twisted bundle.
pub fn c2_eqo1_twisted(g: &SurfaceGeometry, d: DivisorClass, m: i64, c1: DivisorClass, s: i64) -> Result<i64> {
    if s < 0 {
        return Err(Error::Domain(format!("length s = {s} < 0")));
    }
    Ok(s + g.intersect(d, c1) + 2 * m * g.intersect(g.m_class(), d) - g.intersect(d, d))
}

/// Chern data of the untwisted `E`: `c2(E) = c2(E(mM)) − m c1·M − m² M²`.
pub fn chern_eqo1(g: &SurfaceGeometry, d: DivisorClass, m: i64, c1: DivisorClass, s: i64) -> Result<ChernData> {
    let twisted = c2_eqo1_twisted(g, d, m, c1, s)?;
    let mm = g.m_class();
    let c2 = twisted - m * g.intersect(c1, mm) - m * m * g.intersect(mm, mm);
    Ok(ChernData { rank: 2, c1, c2 })
}

/// `(ã, b̃) = (h^0((u+2m−2)h + (v+2em−e)f), h^0((u+2m−1)h + (v+2em)f))`.
pub fn ab_tilde(g: &SurfaceGeometry, u: i64, v: i64, m: i64) -> Result<(i64, i64)> {
    if m < 0 {
        return Err(Error::hypothesis("hypothesis_m", format!("m = {m} < 0")));
    }
    let e = g.e();
    let a = cohomology::h0(g, DivisorClass::new(u + 2 * m - 2, v + 2 * e * m - e));
    let b = cohomology::h0(g, DivisorClass::new(u + 2 * m - 1, v + 2 * e * m));
    Ok((a, b))
}

/// `c2 = s − e(u+m−1) + (1−m)(v+em)`.
pub fn c2_eqo9(g: &SurfaceGeometry, u: i64, v: i64, m: i64, s: i64) -> i64 {
    let e = g.e();
    s - e * (u + m - 1) + (1 - m) * (v + e * m)
}

/// No rank-`r` bundle with `£` w.r.t. `M` has `c1 = uh + vf` once
/// `v ≤ e(u − r + 1) − 2`. `false` means "not excluded".
pub fn thm_o4_nonexistent(g: &SurfaceGeometry, r: i64, u: i64, v: i64) -> Result<bool> {
    if r < 1 {
        return Err(Error::Domain(format!("rank must be >= 1, got {r}")));
    }
    Ok(v <= g.e() * (u - r + 1) - 2)
}

/// Datum of the construction extension with `c1 = uh + vf`, twist `m` and `s` general points.
pub fn thm_o2_construct(g: &SurfaceGeometry, u: i64, v: i64, m: i64, s: i64) -> Result<ExtensionDatum> {
    let e = g.e();
    if v < e * (u - 1) - 1 {
        return Err(Error::hypothesis(
            "hypothesis_v",
            format!("v = {v} < e(u-1)-1 = {}", e * (u - 1) - 1),
        ));
    }
    let (a, b) = ab_tilde(g, u, v, m)?;
    if s < a || s > b {
        return Err(Error::hypothesis(
            "s_out_of_range",
            format!("s = {s} outside [{a}, {b}]"),
        ));
    }
    let c1 = DivisorClass::new(u, v);
    let sub = DivisorClass::new(1 - m, -e * m);
    let quotient_class = DivisorClass::new(u + m - 1, v + e * m);
    let datum = ExtensionDatum::assemble(*g, ExtensionKind::Construction, c1, m, s, sub, quotient_class);
    if !datum.certificates.section_min {
        return Err(Error::Inconsistent(format!(
            "section certificate failed although s = {s} >= {a}"
        )));
    }
    Ok(datum)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyInterval {
    pub h0_min: i64,
    pub h0_max: i64,
    pub h1_min: i64,
    pub h1_max: i64,
    pub h2_min: i64,
    pub h2_max: i64,
    pub chi: i64,
    /// Values when both connecting maps have maximal rank.
    pub expected: CohomologyTriple,
}

impl CohomologyInterval {
    pub fn contains(&self, t: &CohomologyTriple) -> bool {
        (self.h0_min..=self.h0_max).contains(&t.h0)
            && (self.h1_min..=self.h1_max).contains(&t.h1)
            && (self.h2_min..=self.h2_max).contains(&t.h2)
    }

    /// The split values `A ⊕ I_Z(Q)`.
    pub fn split(&self) -> CohomologyTriple {
        CohomologyTriple {
            h0: self.h0_max,
            h1: self.h1_max,
            h2: self.h2_max,
        }
    }

    fn collapse_to_split(&mut self) {
        let split = self.split();
        self.h0_min = split.h0;
        self.h1_min = split.h1;
        self.h2_min = split.h2;
        self.expected = split;
    }
}

/// Bounds on `h^i(E(tM))` from the long exact sequence
/// `0 → H0(A) → H0(E) → H0(Q) →δ0 H1(A) → H1(E) → H1(Q) →δ1 H2(A) → H2(E) → H2(Q) → 0`.
pub fn les_interval(d: &ExtensionDatum, t: i64) -> Result<CohomologyInterval> {
    let g = &d.surface;
    let mm = g.m_class();
    let a = cohomology::triple(g, d.sub.twist(t, mm))?;
    let q_model = d.quotient.twist(t, mm);
    let q = sheaves::triple_ideal(g, &q_model)?;
    let chi = a.euler() + sheaves::chi_ideal(g, &q_model);

    let rank0 = q.h0.min(a.h1);
    let rank1 = q.h1.min(a.h2);
    let expected = CohomologyTriple {
        h0: a.h0 + q.h0 - rank0,
        h1: a.h1 + q.h1 - rank0 - rank1,
        h2: a.h2 + q.h2 - rank1,
    };
    let mut iv = CohomologyInterval {
        h0_min: a.h0 + (q.h0 - a.h1).max(0),
        h0_max: a.h0 + q.h0,
        h1_min: (a.h1 - q.h0).max(0) + (q.h1 - a.h2).max(0),
        h1_max: a.h1 + q.h1,
        h2_min: (a.h2 - q.h1).max(0) + q.h2,
        h2_max: a.h2 + q.h2,
        chi,
        expected,
    };
    if d.ext_forced_split {
        iv.collapse_to_split();
    }
    if expected.euler() != chi {
        return Err(Error::Inconsistent(format!(
            "expected triple {expected:?} violates chi = {chi}"
        )));
    }
    Ok(iv)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditRow {
    pub t: i64,
    pub interval: CohomologyInterval,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionAudit {
    pub verdict: Verdict,
    pub rows: Vec<AuditRow>,
}

fn row_verdict(t: i64, iv: &CohomologyInterval) -> Verdict {
    if iv.h0_min > 0 && iv.h1_min > 0 {
        Verdict::Fails(Witness {
            t,
            h0: iv.h0_min,
            h1: iv.h1_min,
        })
    } else if iv.h1_max == 0 || iv.h0_max == 0 {
        Verdict::Holds
    } else {
        Verdict::Indeterminate { t }
    }
}

/// `a` from which `h^1` of a class with slack `σ` stays constant along `M`-twists.
fn settled_h_coefficient(g: &SurfaceGeometry, c: DivisorClass) -> i64 {
    let sigma = g.slack(c);
    2 + div_ceil((-sigma - 1).max(0), g.e())
}

/// Whether every quantity entering a row verdict has stopped changing at `t`.
fn audit_settled(d: &ExtensionDatum, t: i64, iv: &CohomologyInterval) -> Result<bool> {
    let g = &d.surface;
    let mm = g.m_class();
    let a = d.sub.twist(t, mm);
    let q = d.quotient.twist(t, mm);
    if a.a < settled_h_coefficient(g, a) || q.class.a < settled_h_coefficient(g, q.class) {
        return Ok(false);
    }
    let z = q.config.z();
    let points_settled = match q.config.locus.curve() {
        None => cohomology::h0(g, q.class) >= z,
        Some(curve) => {
            curve == sheaves::Curve::SectionH || sheaves::restricted_rank(g, q.class, curve) >= z
        }
    };
    let q_h0 = sheaves::h0_ideal(g, &q);
    Ok(points_settled && iv.h0_min > 0 && q_h0 >= cohomology::h1(g, a)?)
}

/// Checks `£` w.r.t. `M` for every bundle in the extension family, twist by twist.
pub fn audit_extension_pounds(d: &ExtensionDatum, extra_window: i64) -> Result<ExtensionAudit> {
    if extra_window < 0 {
        return Err(Error::Domain(format!("extra window must be >= 0, got {extra_window}")));
    }
    const CAP: i64 = 100_000;
    // below the first twist without sections nothing can fail: h0 only shrinks
    let mut lo = d.m - 1;
    while les_interval(d, lo)?.h0_max > 0 {
        lo -= 1;
        if lo < d.m - CAP {
            return Err(Error::Inconsistent("sections at every negative twist".into()));
        }
    }
    let mut rows = Vec::new();
    let mut t = lo;
    let mut settled_at = None;
    loop {
        let iv = les_interval(d, t)?;
        rows.push(AuditRow {
            t,
            interval: iv,
            verdict: row_verdict(t, &iv),
        });
        if settled_at.is_none() && t >= d.m && audit_settled(d, t, &iv)? {
            settled_at = Some(t);
        }
        if settled_at.is_some_and(|s| t >= s + extra_window) {
            break;
        }
        if t > d.m + CAP {
            return Err(Error::Inconsistent("audit scan did not settle".into()));
        }
        t += 1;
    }
    let verdict = rows
        .iter()
        .find(|r| matches!(r.verdict, Verdict::Fails(_)))
        .or_else(|| rows.iter().find(|r| matches!(r.verdict, Verdict::Indeterminate { .. })))
        .map_or(Verdict::Holds, |r| r.verdict);
    Ok(ExtensionAudit { verdict, rows })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Polarization {
    R,
    M,
}

impl Polarization {
    pub fn class(self, g: &SurfaceGeometry) -> DivisorClass {
        match self {
            Polarization::R => g.r_class(),
            Polarization::M => g.m_class(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Exclusion {
    /// `Δ` is effective but `h^0(Δ) ≤ s`, so `I_S(Δ)` has no sections for general `S`.
    Genericity { h0_delta: i64, s: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    /// The line subsheaf `N = γh + δf`.
    pub n: DivisorClass,
    /// Stands for every `(γ', δ)` with `γ' ≤ γ`; they all behave identically.
    pub extends_below: bool,
    /// `A − N` is effective, so `N` maps into `E` through the subbundle.
    pub maps_to_sub: bool,
    /// `Δ = Q − N`.
    pub delta: DivisorClass,
    pub h0_delta: i64,
    pub exclusion: Option<Exclusion>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityReport {
    pub polarization: Polarization,
    pub certified: bool,
    pub candidates: Vec<Candidate>,
    pub warnings: Vec<String>,
    /// Every candidate with a map into `I_S(Δ)` allowed by `h^0(Δ) ≥ s`
    /// has `γ ≤ 0` or `δ ≤ 0`.
    pub dichotomy_holds: bool,
}

/// Slope inequality `N·H ≥ c1·H / 2` for the chosen polarization.
pub fn destabilizes(g: &SurfaceGeometry, pol: Polarization, c1: DivisorClass, n: DivisorClass) -> bool {
    let h = pol.class(g);
    2 * g.intersect(n, h) >= g.intersect(c1, h)
}

fn classify_candidate(g: &SurfaceGeometry, d: &ExtensionDatum, n: DivisorClass, extends_below: bool) -> Candidate {
    let delta = d.quotient.class - n;
    let maps_to_sub = (d.sub - n).is_effective();
    let h0_delta = cohomology::h0(g, delta);
    let exclusion = if maps_to_sub || h0_delta > d.s {
        None
    } else {
        Some(Exclusion::Genericity { h0_delta, s: d.s })
    };
    Candidate {
        n,
        extends_below,
        maps_to_sub,
        delta,
        h0_delta,
        exclusion,
    }
}

/// Slope-stability certificate for a construction datum with `m = 0`.
///
/// A rank-1 subsheaf `N` of `E` maps either into `A` (needs `A − N`
/// effective) or nontrivially into `I_S(Q)` (needs a section of `I_S(Q − N)`,
/// impossible for general `S` when `h^0(Q − N) ≤ s`). Only `N` satisfying
/// the slope inequality and one of the two effectivity conditions are listed.
pub fn stability_certificate(d: &ExtensionDatum, pol: Polarization) -> Result<StabilityReport> {
    if d.kind != ExtensionKind::Construction {
        return Err(Error::Domain("stability certificates need a construction datum".into()));
    }
    if d.m != 0 {
        return Err(Error::hypothesis("hypothesis_m", format!("stability needs m = 0, got {}", d.m)));
    }
    let g = &d.surface;
    let e = g.e();
    let (u, v) = (d.u, d.v);
    let mut warnings = Vec::new();
    if u < 3 {
        warnings.push(format!("u = {u} < 3"));
    }
    if v >= 2 * e * u {
        warnings.push(format!("v = {v} >= 2eu = {}", 2 * e * u));
    }
    if pol == Polarization::M && v > 2 * e * u - 3 {
        warnings.push(format!("v = {v} > 2eu - 3 = {}", 2 * e * u - 3));
    }

    let c1 = d.c1();
    let q = d.quotient.class;
    let gamma_max = d.sub.a.max(q.a);
    let delta_max = d.sub.b.max(q.b);
    let maps_somewhere = |n: DivisorClass| (d.sub - n).is_effective() || (q - n).is_effective();
    let mut candidates = Vec::new();
    match pol {
        Polarization::R => {
            // N·R = γ + δ, and γ ≤ gamma_max, δ ≤ delta_max bound the other coordinate
            let need = div_ceil(g.intersect(c1, g.r_class()), 2);
            for gamma in (need - delta_max)..=gamma_max {
                for delta in (need - gamma_max)..=delta_max {
                    let n = DivisorClass::new(gamma, delta);
                    if destabilizes(g, pol, c1, n) && maps_somewhere(n) {
                        candidates.push(classify_candidate(g, d, n, false));
                    }
                }
            }
        }
        Polarization::M => {
            // N·M = δ does not bound γ from below; below `tail` every
            // property of (γ, δ) is constant, so one representative suffices.
            for delta in div_ceil(v, 2)..=delta_max {
                let flat = (q.b - delta).max(0) / e;
                let tail = (q.a - flat).min(d.sub.a).min(gamma_max);
                for gamma in (tail..=gamma_max).rev() {
                    let n = DivisorClass::new(gamma, delta);
                    if destabilizes(g, pol, c1, n) && maps_somewhere(n) {
                        candidates.push(classify_candidate(g, d, n, gamma == tail));
                    }
                }
            }
            candidates.sort_by_key(|c| (c.n.a, c.n.b));
        }
    }
    let certified = candidates.iter().all(|c| c.exclusion.is_some());
    let dichotomy_holds = candidates
        .iter()
        .filter(|c| c.delta.is_effective() && c.h0_delta >= d.s)
        .all(|c| c.n.a <= 0 || c.n.b <= 0);
    Ok(StabilityReport {
        polarization: pol,
        certified,
        candidates,
        warnings,
        dichotomy_holds,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RegionLabel {
    Nonexistent,
    Existent,
    Unknown,
}

impl RegionLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            RegionLabel::Nonexistent => "NONEXISTENT",
            RegionLabel::Existent => "EXISTENT",
            RegionLabel::Unknown => "UNKNOWN",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionCell {
    pub u: i64,
    pub v: i64,
    pub label: RegionLabel,
    /// Disjoint sorted inclusive intervals of realized `c2` values.
    pub witness: Vec<(i64, i64)>,
}

/// Merges inclusive integer intervals into sorted, disjoint, non-adjacent ones.
pub fn merge_intervals(mut spans: Vec<(i64, i64)>) -> Vec<(i64, i64)> {
    spans.sort_unstable();
    let mut out: Vec<(i64, i64)> = Vec::new();
    for (lo, hi) in spans {
        match out.last_mut() {
            Some(last) if lo <= last.1 + 1 => last.1 = last.1.max(hi),
            _ => out.push((lo, hi)),
        }
    }
    out
}

/// `c2` values realized by the construction for `m = 0..=m_max`.
pub fn c2_witness(g: &SurfaceGeometry, u: i64, v: i64, m_max: i64) -> Result<Vec<(i64, i64)>> {
    let mut spans = Vec::new();
    for m in 0..=m_max {
        let (a, b) = ab_tilde(g, u, v, m)?;
        if a <= b {
            spans.push((c2_eqo9(g, u, v, m, a), c2_eqo9(g, u, v, m, b)));
        }
    }
    Ok(merge_intervals(spans))
}

/// Labels each `(u, v)` for rank `r ∈ {1, 2}` bundles with `£` w.r.t. `M`.
pub fn classify_region(
    g: &SurfaceGeometry,
    r: i64,
    u_range: (i64, i64),
    v_range: (i64, i64),
    m_max: i64,
) -> Result<Vec<RegionCell>> {
    if !(1..=2).contains(&r) {
        return Err(Error::Domain(format!("classification supports rank 1 or 2, got {r}")));
    }
    for (from, to) in [u_range, v_range] {
        if from > to {
            return Err(Error::InvalidRange { from, to });
        }
    }
    if m_max < 0 {
        return Err(Error::Domain(format!("m_max must be >= 0, got {m_max}")));
    }
    let e = g.e();
    let mut cells = Vec::new();
    for u in u_range.0..=u_range.1 {
        for v in v_range.0..=v_range.1 {
            let cell = if thm_o4_nonexistent(g, r, u, v)? {
                RegionCell { u, v, label: RegionLabel::Nonexistent, witness: Vec::new() }
            } else if r == 1 && v >= e * u - 1 {
                RegionCell { u, v, label: RegionLabel::Existent, witness: vec![(0, 0)] }
            } else if r == 2 && v >= e * (u - 1) - 1 {
                RegionCell { u, v, label: RegionLabel::Existent, witness: c2_witness(g, u, v, m_max)? }
            } else {
                RegionCell { u, v, label: RegionLabel::Unknown, witness: Vec::new() }
            };
            cells.push(cell);
        }
    }
    Ok(cells)
}
