//! The identity catalog: every counting formula evaluated exactly, with both
//! sides drawn from enumeration-backed tables where the range permits and
//! from the memoized recurrences everywhere.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::codec;
use crate::counting::{count_leaves, EnumTables, Recurrences};
use crate::enumerate::{visit_maps, EnumError, EnumFilter, Family};
use crate::map::DegreeProfile;
use crate::twofaces;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error(transparent)]
    Budget(#[from] EnumError),
    #[error(transparent)]
    TwoFace(#[from] twofaces::TwoFaceError),
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyParams {
    /// Bound on the edge count of the identity's natural family.
    pub max_edges: usize,
    pub max_genus: usize,
    pub budget: Option<u64>,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams {
            max_edges: 5,
            max_genus: 2,
            budget: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TermValue {
    pub name: String,
    pub value: String,
}

/// Outcome of one identity at one parameter point. `ok` means exact integer
/// equality; there is no tolerance.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub point: String,
    pub lhs: String,
    pub rhs: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub terms: Vec<TermValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl IdentityReport {
    fn new(identity: &str, point: String, lhs: BigInt, rhs: BigInt) -> Self {
        IdentityReport {
            identity: identity.to_string(),
            point,
            ok: lhs == rhs,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            terms: Vec::new(),
            counterexample: None,
        }
    }

    fn with_terms(mut self, terms: Vec<(String, BigInt)>) -> Self {
        self.terms = terms
            .into_iter()
            .map(|(name, value)| TermValue {
                name,
                value: value.to_string(),
            })
            .collect();
        self
    }
}

/// Attaches the smallest enumerated witness of the failing class.
fn attach_counterexample(report: &mut IdentityReport, filter: &EnumFilter, n: usize) {
    if report.ok {
        return;
    }
    let mut found = None;
    let _ = visit_maps(n, filter, None, |map| {
        if found.is_none() {
            found = Some(codec::encode(map, &[]));
        }
    });
    report.counterexample = found;
}

/// Planar `Q(n, f)` provider: enumeration tables or the recurrence.
pub trait PlanarQ {
    fn q(&self, n: i64, f: i64) -> BigInt;
    fn label(&self) -> &'static str;
}

impl PlanarQ for Recurrences {
    fn q(&self, n: i64, f: i64) -> BigInt {
        self.q_planar(n, f)
    }
    fn label(&self) -> &'static str {
        "recurrence"
    }
}

impl PlanarQ for EnumTables {
    fn q(&self, n: i64, f: i64) -> BigInt {
        EnumTables::q(self, n, f)
    }
    fn label(&self) -> &'static str {
        "enumeration"
    }
}

pub const CATALOG: &[&str] = &[
    "cut-slide",
    "remy",
    "cc-planar",
    "dual",
    "cc-planar-step1",
    "cc-planar-step2",
    "cc-planar-step3",
    "cc-planar-s",
    "precubic",
    "gj-planar",
    "gj",
    "cc",
    "harer-zagier",
    "planar-counts",
    "genus-counts",
    "degree-cut-slide",
    "degree-remy",
    "degree-precubic",
    "twoface-special",
    "trisections",
    "gluing-balance",
    "eq8",
];

/// Runs one identity (or `all`) over the requested range.
pub struct Verifier {
    pub params: VerifyParams,
    pub rec: Recurrences,
    pub tables: EnumTables,
}

/// General enumeration stays tractable well past the verified range; this is
/// the ceiling for the enumeration-backed side of the planar identities.
const ENUM_GENERAL_CAP: usize = 6;
const ENUM_PRECUBIC_CAP: usize = 10;
const ENUM_CUBIC_EDGE_CAP: usize = 12;

impl Verifier {
    pub fn new(params: VerifyParams) -> Result<Self, VerifyError> {
        let tables = EnumTables::build(
            params.max_edges.min(ENUM_GENERAL_CAP),
            params.max_edges.min(ENUM_PRECUBIC_CAP),
            params.max_edges.min(ENUM_CUBIC_EDGE_CAP),
            params.budget,
        )?;
        Ok(Verifier {
            params,
            rec: Recurrences::new(),
            tables,
        })
    }

    pub fn verify(&self, id: &str) -> Result<Vec<IdentityReport>, VerifyError> {
        let n = self.params.max_edges as i64;
        let reports = match id {
            "cut-slide" => self.on_both_sources(|q, label| check_cut_slide(q, label, n)),
            "remy" => self.on_both_sources(|q, label| check_remy(q, label, n)),
            "cc-planar" => self.on_both_sources(|q, label| check_cc_planar(q, label, n)),
            "dual" => self.on_both_sources(|q, label| check_dual(q, label, n)),
            "cc-planar-step1" => self.on_both_sources(|q, label| check_step1(q, label, n)),
            "cc-planar-step2" => self.on_both_sources(|q, label| check_step2(q, label, n)),
            "cc-planar-step3" => self.on_both_sources(|q, label| check_step3(q, label, n)),
            "cc-planar-s" => self.on_both_sources(|q, label| check_s_reduction(q, label, n)),
            "precubic" => check_precubic(&self.tables, self.tables.max_precubic as i64),
            "gj-planar" => self.check_gj_planar(),
            "gj" => check_gj_full(&self.tables, self.params.max_genus),
            "cc" => check_cc_full(&self.tables, self.params.max_genus),
            "harer-zagier" => self.check_harer_zagier(),
            "planar-counts" => self.check_planar_counts(),
            "genus-counts" => self.check_genus_counts(),
            "degree-cut-slide" => check_degree_cut_slide(&self.tables),
            "degree-remy" => check_degree_remy(&self.tables),
            "degree-precubic" => check_degree_precubic(&self.tables),
            "twoface-special" => check_twoface_special(self.params, self.tables.max_precubic)?,
            "trisections" => check_trisections(self.params)?,
            "gluing-balance" => check_gluing_balance(self.params, self.tables.max_precubic)?,
            "eq8" => check_eq8(&self.tables, self.params)?,
            other => return Err(VerifyError::UnknownIdentity(other.to_string())),
        };
        Ok(reports)
    }

    pub fn verify_all(&self) -> Result<Vec<IdentityReport>, VerifyError> {
        let mut out = Vec::new();
        for id in CATALOG {
            out.extend(self.verify(id)?);
        }
        Ok(out)
    }

    /// Evaluates a planar identity with the enumeration tables (within their
    /// range) and with the recurrence.
    fn on_both_sources(
        &self,
        run: impl Fn(&dyn PlanarQ, &'static str) -> Vec<IdentityReport>,
    ) -> Vec<IdentityReport> {
        let mut out = Vec::new();
        if self.params.max_edges <= self.tables.max_general {
            out.extend(run(&self.tables, "enumeration"));
        }
        out.extend(run(&self.rec, "recurrence"));
        for report in &mut out {
            if !report.ok {
                if let Some((n, f)) = parse_point_nf(&report.point) {
                    attach_counterexample(
                        report,
                        &EnumFilter {
                            faces: Some(f),
                            genus: Some(0),
                            ..Default::default()
                        },
                        n,
                    );
                }
            }
        }
        out
    }

    fn check_gj_planar(&self) -> Vec<IdentityReport> {
        let mut out = Vec::new();
        let max_m = (self.params.max_edges / 3).max(4) as i64;
        for m in 1..=max_m {
            let lhs = BigInt::from(m + 1) * self.rec.t_planar(m);
            let mut rhs = BigInt::from(4 * (3 * m - 1)) * self.rec.t_planar(m - 1);
            let mut quad = BigInt::zero();
            for i in 0..=(m - 2) {
                let j = m - 2 - i;
                quad += BigInt::from((3 * i + 2) * (3 * j + 2))
                    * self.rec.t_planar(i)
                    * self.rec.t_planar(j);
            }
            rhs += BigInt::from(4) * quad;
            let mut report = IdentityReport::new("gj-planar", format!("n={m} [recurrence]"), lhs, rhs);
            // enumeration confirms the small values
            if 3 * m as usize <= self.tables.max_cubic_edges {
                let by_enum = self.tables.t(m);
                report = report.with_terms(vec![
                    ("T(n) by recurrence".into(), self.rec.t_planar(m)),
                    ("T(n) by enumeration".into(), by_enum.clone()),
                ]);
                report.ok &= by_enum == self.rec.t_planar(m);
            }
            out.push(report);
        }
        out
    }

    fn check_harer_zagier(&self) -> Vec<IdentityReport> {
        let mut out = Vec::new();
        for g in 0..=self.params.max_genus as i64 {
            for n in 1..=self.params.max_edges as i64 {
                let lhs = BigInt::from(n + 1) * self.rec.q_full(n, 1, g);
                let rhs = BigInt::from(2 * (2 * n - 1)) * self.rec.q_full(n - 1, 1, g)
                    + BigInt::from((2 * n - 3) * (n - 1) * (2 * n - 1))
                        * self.rec.q_full(n - 2, 1, g - 1);
                let mut report =
                    IdentityReport::new("harer-zagier", format!("n={n},g={g} [recurrence]"), lhs, rhs);
                if n as usize <= self.tables.max_general {
                    let by_enum = self.tables.q_g(n, 1, g);
                    report.ok &= by_enum == self.rec.q_full(n, 1, g);
                    report = report.with_terms(vec![(
                        "unicellular count by enumeration".into(),
                        by_enum,
                    )]);
                }
                out.push(report);
            }
        }
        out
    }

    fn check_planar_counts(&self) -> Vec<IdentityReport> {
        let mut out = Vec::new();
        for n in 0..=self.tables.max_general.min(self.params.max_edges) as i64 {
            let by_enum: BigInt = (1..=n + 1).map(|f| self.tables.q(n, f)).sum();
            let by_rec: BigInt = (1..=n + 1).map(|f| self.rec.q_planar(n, f)).sum();
            let mut report = IdentityReport::new("planar-counts", format!("n={n}"), by_enum, by_rec);
            attach_counterexample(&mut report, &EnumFilter::planar(), n as usize);
            out.push(report);
        }
        out
    }

    fn check_genus_counts(&self) -> Vec<IdentityReport> {
        let mut out = Vec::new();
        for n in 0..=self.tables.max_general.min(self.params.max_edges) as i64 {
            let mut by_enum = BigInt::zero();
            let mut by_rec = BigInt::zero();
            for f in 1..=n + 1 {
                for g in 0..=(n / 2) + 1 {
                    by_enum += self.tables.q_g(n, f, g);
                    by_rec += self.rec.q_full(n, f, g);
                }
            }
            let mut report = IdentityReport::new("genus-counts", format!("n={n}"), by_enum, by_rec);
            attach_counterexample(&mut report, &EnumFilter::default(), n as usize);
            out.push(report);
        }
        out
    }
}

fn parse_point_nf(point: &str) -> Option<(usize, usize)> {
    let head = point.split(' ').next()?;
    let mut n = None;
    let mut f = None;
    for part in head.split(',') {
        if let Some(v) = part.strip_prefix("n=") {
            n = v.parse().ok();
        }
        if let Some(v) = part.strip_prefix("f=") {
            f = v.parse().ok();
        }
    }
    Some((n?, f?))
}

fn v_of(n: i64, f: i64) -> i64 {
    2 + n - f
}

// --- planar identities ------------------------------------------------------

/// `(f-1) Q(n,f) = sum v1 Q(i,f1) (2j+1) Q(j,f2)` over `i+j = n-1`.
fn check_cut_slide(q: &dyn PlanarQ, label: &str, max_n: i64) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        for f in 1..=n + 1 {
            let lhs = BigInt::from(f - 1) * q.q(n, f);
            let mut rhs = BigInt::zero();
            for i in 0..n {
                let j = n - 1 - i;
                for f1 in 1..f {
                    let f2 = f - f1;
                    rhs += BigInt::from(v_of(i, f1))
                        * q.q(i, f1)
                        * BigInt::from(2 * j + 1)
                        * q.q(j, f2);
                }
            }
            out.push(IdentityReport::new(
                "cut-slide",
                format!("n={n},f={f} [{label}]"),
                lhs,
                rhs,
            ));
        }
    }
    out
}

/// `v Q(n,f) = 2(2n-1) Q(n-1,f) + sum v1 Q(i,f1) v2 Q(j,f2)`, `n > 0`.
fn check_remy(q: &dyn PlanarQ, label: &str, max_n: i64) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for f in 1..=n + 1 {
            let lhs = BigInt::from(v_of(n, f)) * q.q(n, f);
            let mut rhs = BigInt::from(2 * (2 * n - 1)) * q.q(n - 1, f);
            for i in 0..n {
                let j = n - 1 - i;
                for f1 in 1..f {
                    let f2 = f - f1;
                    rhs += BigInt::from(v_of(i, f1))
                        * q.q(i, f1)
                        * BigInt::from(v_of(j, f2))
                        * q.q(j, f2);
                }
            }
            out.push(IdentityReport::new(
                "remy",
                format!("n={n},f={f} [{label}]"),
                lhs,
                rhs,
            ));
        }
    }
    out
}

/// The planar Carrell-Chapuy recurrence itself.
fn check_cc_planar(q: &dyn PlanarQ, label: &str, max_n: i64) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for f in 1..=n + 1 {
            let lhs = BigInt::from(n + 1) * q.q(n, f);
            let mut rhs = BigInt::from(2 * (2 * n - 1)) * (q.q(n - 1, f) + q.q(n - 1, f - 1));
            let mut quad = BigInt::zero();
            for i in 0..=(n - 2) {
                let j = n - 2 - i;
                for f1 in 1..f {
                    let f2 = f - f1;
                    quad += BigInt::from((2 * i + 1) * (2 * j + 1)) * q.q(i, f1) * q.q(j, f2);
                }
            }
            rhs += BigInt::from(3) * quad;
            out.push(IdentityReport::new(
                "cc-planar",
                format!("n={n},f={f} [{label}]"),
                lhs,
                rhs,
            ));
        }
    }
    out
}

/// The dual form: `(v-1) Q(n,f) = sum (2i+1) Q(i,f1) f2 Q(j,f2)` with
/// `f1 + f2 = f + 1`.
fn check_dual(q: &dyn PlanarQ, label: &str, max_n: i64) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        for f in 1..=n + 1 {
            let lhs = BigInt::from(v_of(n, f) - 1) * q.q(n, f);
            let mut rhs = BigInt::zero();
            for i in 0..n {
                let j = n - 1 - i;
                for f1 in 1..=f {
                    let f2 = f + 1 - f1;
                    rhs += BigInt::from(2 * i + 1)
                        * q.q(i, f1)
                        * BigInt::from(f2)
                        * q.q(j, f2);
                }
            }
            out.push(IdentityReport::new(
                "dual",
                format!("n={n},f={f} [{label}]"),
                lhs,
                rhs,
            ));
        }
    }
    out
}

/// First intermediate display of the planar Carrell-Chapuy proof: expand the
/// marked-vertex factor of the cut-slide identity once.
fn check_step1(q: &dyn PlanarQ, label: &str, max_n: i64) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for f in 1..=n + 1 {
            let lhs = BigInt::from(f - 1) * q.q(n, f);
            let mut rhs = BigInt::from(2 * n - 1) * q.q(n - 1, f - 1);
            for i in 0..=(n - 2) {
                let j = n - 2 - i;
                for f1 in 1..f {
                    let f2 = f - f1;
                    rhs += BigInt::from(2)
                        * BigInt::from((2 * i + 1) * (2 * j + 1))
                        * q.q(i, f1)
                        * q.q(j, f2);
                }
            }
            for i in 0..=(n - 2) {
                for j in 0..=(n - 2 - i) {
                    let k = n - 2 - i - j;
                    for f1 in 1..f {
                        for f2 in 1..(f - f1) {
                            let f3 = f - f1 - f2;
                            rhs += BigInt::from(v_of(i, f1))
                                * q.q(i, f1)
                                * BigInt::from(v_of(j, f2))
                                * q.q(j, f2)
                                * BigInt::from(2 * k + 1)
                                * q.q(k, f3);
                        }
                    }
                }
            }
            out.push(IdentityReport::new(
                "cc-planar-step1",
                format!("n={n},f={f} [{label}]"),
                lhs,
                rhs,
            ));
        }
    }
    out
}

/// Second intermediate display: fold the triple sum back through the
/// cut-slide identity.
fn check_step2(q: &dyn PlanarQ, label: &str, max_n: i64) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for f in 1..=n + 1 {
            let lhs = BigInt::from(f - 1) * q.q(n, f);
            let mut rhs = BigInt::from(2 * n - 1) * q.q(n - 1, f - 1);
            for i in 0..=(n - 2) {
                let j = n - 2 - i;
                for f1 in 1..f {
                    let f2 = f - f1;
                    rhs += BigInt::from(2)
                        * BigInt::from((2 * i + 1) * (2 * j + 1))
                        * q.q(i, f1)
                        * q.q(j, f2);
                }
            }
            for i in 0..n {
                let j = n - 1 - i;
                for f1 in 1..f {
                    let f2 = f - f1;
                    rhs += BigInt::from(f1 - 1)
                        * q.q(i, f1)
                        * BigInt::from(v_of(j, f2))
                        * q.q(j, f2);
                }
            }
            out.push(IdentityReport::new(
                "cc-planar-step2",
                format!("n={n},f={f} [{label}]"),
                lhs,
                rhs,
            ));
        }
    }
    out
}

/// Third display: the sum of the previous one with the Rémy identity.
fn check_step3(q: &dyn PlanarQ, label: &str, max_n: i64) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for f in 1..=n + 1 {
            let lhs = BigInt::from(n + 1) * q.q(n, f);
            let mut rhs = BigInt::from(2 * (2 * n - 1)) * q.q(n - 1, f)
                + BigInt::from(2 * n - 1) * q.q(n - 1, f - 1);
            for i in 0..=(n - 2) {
                let j = n - 2 - i;
                for f1 in 1..f {
                    let f2 = f - f1;
                    rhs += BigInt::from(2)
                        * BigInt::from((2 * i + 1) * (2 * j + 1))
                        * q.q(i, f1)
                        * q.q(j, f2);
                }
            }
            for i in 0..n {
                let j = n - 1 - i;
                for f1 in 1..f {
                    let f2 = f - f1;
                    rhs += BigInt::from(i + 1)
                        * q.q(i, f1)
                        * BigInt::from(v_of(j, f2))
                        * q.q(j, f2);
                }
            }
            out.push(IdentityReport::new(
                "cc-planar-step3",
                format!("n={n},f={f} [{label}]"),
                lhs,
                rhs,
            ));
        }
    }
    out
}

/// The reduction of `S = sum (i+1) Q(i,f1) v2 Q(j,f2)` that finishes the
/// planar Carrell-Chapuy proof.
fn check_s_reduction(q: &dyn PlanarQ, label: &str, max_n: i64) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for f in 1..=n + 1 {
            let mut lhs = BigInt::zero();
            for i in 0..n {
                let j = n - 1 - i;
                for f1 in 1..f {
                    let f2 = f - f1;
                    lhs += BigInt::from(i + 1)
                        * q.q(i, f1)
                        * BigInt::from(v_of(j, f2))
                        * q.q(j, f2);
                }
            }
            let mut rhs = BigInt::from(2 * n - 1) * q.q(n - 1, f - 1);
            for i in 0..=(n - 2) {
                let j = n - 2 - i;
                for f1 in 1..f {
                    let f2 = f - f1;
                    rhs += BigInt::from((2 * i + 1) * (2 * j + 1)) * q.q(i, f1) * q.q(j, f2);
                }
            }
            out.push(IdentityReport::new(
                "cc-planar-s",
                format!("n={n},f={f} [{label}]"),
                lhs,
                rhs,
            ));
        }
    }
    out
}

/// The precubic cut-slide identity
/// `(f-1) alpha(n,f) = sum alpha1(i,f1) alpha1(j,f2)` over `i+j = n`.
fn check_precubic(tables: &EnumTables, max_n: i64) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for f in 1..=n + 1 {
            let lhs = BigInt::from(f - 1) * tables.alpha_planar(n, f);
            let mut rhs = BigInt::zero();
            for i in 0..=n {
                let j = n - i;
                for f1 in 1..f {
                    let f2 = f - f1;
                    rhs += tables.alpha_marked_g(i, f1, 0) * tables.alpha_marked_g(j, f2, 0);
                }
            }
            let mut report = IdentityReport::new(
                "precubic",
                format!("n={n},f={f} [enumeration]"),
                lhs,
                rhs,
            );
            attach_counterexample(
                &mut report,
                &EnumFilter {
                    faces: Some(f as usize),
                    genus: Some(0),
                    family: Family::Precubic,
                    ..Default::default()
                },
                n as usize,
            );
            out.push(report);
        }
    }
    out
}

/// Full Goulden-Jackson against cubic enumeration.
fn check_gj_full(tables: &EnumTables, max_genus: usize) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    let max_m = (tables.max_cubic_edges / 3) as i64;
    for m in 1..=max_m {
        for g in 0..=max_genus as i64 {
            let lhs = BigInt::from(m + 1) * tables.t_g(m, g);
            let mut rhs = BigInt::from(4 * m)
                * BigInt::from((3 * m - 2) * (3 * m - 4))
                * tables.t_g(m - 2, g - 1);
            rhs += BigInt::from(4 * (3 * m - 1)) * tables.t_g(m - 1, g);
            let mut quad = BigInt::zero();
            for i in 0..=(m - 2) {
                let j = m - 2 - i;
                for g1 in 0..=g {
                    quad += BigInt::from((3 * i + 2) * (3 * j + 2))
                        * tables.t_g(i, g1)
                        * tables.t_g(j, g - g1);
                }
            }
            rhs += BigInt::from(4) * quad;
            if m == 1 && g == 1 {
                rhs += BigInt::from(2);
            }
            let mut report =
                IdentityReport::new("gj", format!("n={m},g={g} [enumeration]"), lhs, rhs);
            attach_counterexample(
                &mut report,
                &EnumFilter {
                    genus: Some(g as usize),
                    family: Family::Cubic,
                    ..Default::default()
                },
                3 * m as usize,
            );
            out.push(report);
        }
    }
    out
}

/// Full Carrell-Chapuy against all-genus enumeration.
fn check_cc_full(tables: &EnumTables, max_genus: usize) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    let max_n = tables.max_general as i64;
    for n in 1..=max_n {
        for f in 1..=n + 1 {
            for g in 0..=max_genus as i64 {
                let lhs = BigInt::from(n + 1) * tables.q_g(n, f, g);
                let mut rhs = BigInt::from(2 * (2 * n - 1))
                    * (tables.q_g(n - 1, f, g) + tables.q_g(n - 1, f - 1, g));
                rhs += BigInt::from((2 * n - 3) * (n - 1) * (2 * n - 1))
                    * tables.q_g(n - 2, f, g - 1);
                let mut quad = BigInt::zero();
                for i in 0..=(n - 2) {
                    let j = n - 2 - i;
                    for f1 in 1..f {
                        let f2 = f - f1;
                        for g1 in 0..=g {
                            quad += BigInt::from((2 * i + 1) * (2 * j + 1))
                                * tables.q_g(i, f1, g1)
                                * tables.q_g(j, f2, g - g1);
                        }
                    }
                }
                rhs += BigInt::from(3) * quad;
                let mut report =
                    IdentityReport::new("cc", format!("n={n},f={f},g={g} [enumeration]"), lhs, rhs);
                attach_counterexample(
                    &mut report,
                    &EnumFilter {
                        faces: Some(f as usize),
                        genus: Some(g as usize),
                        ..Default::default()
                    },
                    n as usize,
                );
                out.push(report);
            }
        }
    }
    out
}

// --- degree-refined identities ----------------------------------------------

type MPoint = (usize, usize, DegreeProfile);

fn edge_count(profile: &DegreeProfile) -> usize {
    (profile.total_degree() / 2) as usize
}

/// Explicit add/remove form of the delta operators; unlike a signed list it
/// can remove a degree-0 vertex (the vertex map as a split piece).
fn adjust_profile(
    base: &DegreeProfile,
    add: &[usize],
    remove: &[usize],
) -> Option<DegreeProfile> {
    let mut out = base.clone();
    for &d in add {
        *out.counts.entry(d).or_insert(0) += 1;
    }
    for &d in remove {
        let slot = out.counts.get_mut(&d)?;
        *slot -= 1;
        if *slot == 0 {
            out.counts.remove(&d);
        }
    }
    Some(out)
}

/// Degree-refined cut-slide: accumulates every table pair into the predicted
/// left-hand points and compares bucket by bucket.
fn check_degree_cut_slide(tables: &EnumTables) -> Vec<IdentityReport> {
    let max_n = tables.max_general;
    let mut rhs: BTreeMap<MPoint, BigInt> = BTreeMap::new();
    let entries: Vec<(&(usize, usize, DegreeProfile), &BigInt)> = tables.m_planar.iter().collect();
    for &(&(r1, f1, ref u), c1) in &entries {
        for &(&(r2, f2, ref w), c2) in &entries {
            if edge_count(u) + edge_count(w) > max_n {
                continue;
            }
            let k = r2;
            let w1_coeff = w.multiplicity(1) as i64 - i64::from(k == 1);
            if w1_coeff <= 0 {
                continue;
            }
            let sum = u.plus(w);
            let f = f1 + f2;
            // the discovery vertex was not the root
            for (&j, &uj) in &u.counts {
                let coeff = uj as i64 - i64::from(j == r1);
                if coeff <= 0 || j == 0 || k == 0 {
                    continue;
                }
                if let Some(v) = adjust_profile(&sum, &[j + k + 1], &[1, j, k]) {
                    *rhs.entry((r1, f, v)).or_default() +=
                        BigInt::from(coeff * w1_coeff) * c1 * c2;
                }
            }
            // the discovery vertex was the root: j is the new root degree
            let (j, k) = (r1, r2);
            if let Some(v) = adjust_profile(&sum, &[j + k + 1], &[1, j, k]) {
                *rhs.entry((j + k + 1, f, v)).or_default() +=
                    BigInt::from(w1_coeff) * c1 * c2;
            }
        }
    }
    collect_degree_reports("degree-cut-slide", tables, rhs, |f, m| {
        BigInt::from(f as i64 - 1) * m
    })
}

/// Degree-refined Rémy identity for a marked non-root node of degree `p`;
/// the left points are `(p, r, f, v)`.
///
/// Three amendments to the display as printed are needed for exactness, all
/// confirmed against the bijection images on exhaustive enumeration: the
/// marked image vertices are never roots (their choice coefficients exclude
/// the root), and the case where the marked vertex is itself the vertex that
/// splits carries its own term, with the second map marked at its root.
fn check_degree_remy(tables: &EnumTables) -> Vec<IdentityReport> {
    type Point = (usize, usize, usize, DegreeProfile);
    let max_n = tables.max_general;
    let mut rhs: BTreeMap<Point, BigInt> = BTreeMap::new();
    let entries: Vec<(&(usize, usize, DegreeProfile), &BigInt)> = tables.m_planar.iter().collect();
    // contraction term: one map, merged vertex of degree p + j - 2, never
    // the root (a contraction of a root-marked map marks the root again)
    for &(&(r1, f1, ref u), c1) in &entries {
        if edge_count(u) + 1 > max_n {
            continue;
        }
        for (&m, &um) in &u.counts {
            let coeff = um as i64 - i64::from(m == r1);
            if coeff <= 0 {
                continue;
            }
            for p in 2..=m + 1 {
                let j = m + 2 - p;
                if let Some(v) = adjust_profile(u, &[j, p], &[m]) {
                    *rhs.entry((p, r1, f1, v)).or_default() += BigInt::from(coeff) * c1;
                }
            }
        }
    }
    for &(&(r1, f1, ref u), c1) in &entries {
        for &(&(r2, f2, ref w), c2) in &entries {
            if edge_count(u) + edge_count(w) + 1 > max_n {
                continue;
            }
            let k = r2;
            let f = f1 + f2;
            let sum = u.plus(w);
            for (&pm1, &wp) in &w.counts {
                let p = pm1 + 1;
                if p < 2 {
                    continue;
                }
                // the marked vertex of the second map keeps degree p - 1 and
                // is never that map's root
                let w_coeff = wp as i64 - i64::from(pm1 == k);
                if w_coeff <= 0 {
                    continue;
                }
                // split vertex distinct from the mark and not the root
                for (&j, &uj) in &u.counts {
                    let coeff = uj as i64 - i64::from(j == r1);
                    if coeff <= 0 || j == 0 {
                        continue;
                    }
                    if let Some(v) = adjust_profile(&sum, &[p, j + k + 1], &[pm1, j, k]) {
                        *rhs.entry((p, r1, f, v)).or_default() +=
                            BigInt::from(coeff * w_coeff) * c1 * c2;
                    }
                }
                // split vertex was the root: new root degree r = r1 + k + 1
                let r = r1 + k + 1;
                if let Some(v) = adjust_profile(&sum, &[p, r], &[pm1, k, r1]) {
                    *rhs.entry((p, r, f, v)).or_default() += BigInt::from(w_coeff) * c1 * c2;
                }
            }
            // the marked vertex is itself the split vertex (its last edge's
            // chain ends at it): the second map is marked at its root of
            // degree k, and p = j + k + 2
            for (&j, &uj) in &u.counts {
                let coeff = uj as i64 - i64::from(j == r1);
                if coeff <= 0 || j == 0 {
                    continue;
                }
                let p = j + k + 2;
                if let Some(v) = adjust_profile(&sum, &[p], &[j, k]) {
                    *rhs.entry((p, r1, f, v)).or_default() += BigInt::from(coeff) * c1 * c2;
                }
            }
        }
    }
    // compare against the left-hand side over the union of points
    let mut lhs: BTreeMap<Point, BigInt> = BTreeMap::new();
    for (&(r, f, ref v), m) in &tables.m_planar {
        for (&p, &vp) in &v.counts {
            if p < 2 {
                continue;
            }
            let coeff = vp as i64 - i64::from(p == r);
            if coeff > 0 {
                lhs.insert((p, r, f, v.clone()), BigInt::from(coeff) * m);
            }
        }
    }
    let mut out = Vec::new();
    let mut points: Vec<Point> = lhs.keys().cloned().collect();
    points.extend(rhs.keys().cloned());
    points.sort();
    points.dedup();
    for point in points {
        let (p, r, f, v) = &point;
        if edge_count(v) > max_n {
            continue;
        }
        let l = lhs.get(&point).cloned().unwrap_or_default();
        let r_val = rhs.get(&point).cloned().unwrap_or_default();
        out.push(IdentityReport::new(
            "degree-remy",
            format!("p={p},r={r},f={f},v={v:?} [enumeration]", v = v.counts),
            l,
            r_val,
        ));
    }
    out
}

fn collect_degree_reports(
    identity: &str,
    tables: &EnumTables,
    rhs: BTreeMap<MPoint, BigInt>,
    lhs_of: impl Fn(usize, &BigInt) -> BigInt,
) -> Vec<IdentityReport> {
    let max_n = tables.max_general;
    let mut points: Vec<MPoint> = tables.m_planar.keys().cloned().collect();
    points.extend(rhs.keys().cloned());
    points.sort();
    points.dedup();
    let mut out = Vec::new();
    for point in points {
        let (r, f, v) = &point;
        if edge_count(v) > max_n {
            continue;
        }
        let m = tables.m_planar.get(&point).cloned().unwrap_or_default();
        let l = lhs_of(*f, &m);
        let r_val = rhs.get(&point).cloned().unwrap_or_default();
        out.push(IdentityReport::new(
            identity,
            format!("r={r},f={f},v={v:?} [enumeration]", v = v.counts),
            l,
            r_val,
        ));
    }
    out
}

/// Bit-for-bit agreement between the max-degree-3 specialization of the
/// degree-refined cut-slide identity and the precubic identity.
fn check_degree_precubic(tables: &EnumTables) -> Vec<IdentityReport> {
    let max_n = tables.max_general.min(tables.max_precubic);
    let precubic = |profile: &DegreeProfile| profile.counts.keys().all(|&d| d == 1 || d == 3);
    // alpha1 assembled from the M table: marked leaves are degree-1 non-root
    let alpha1 = |i: usize, f1: usize| -> BigInt {
        let mut total = BigInt::zero();
        for (&(r, f, ref u), m) in &tables.m_planar {
            if r == 1 && f == f1 && edge_count(u) == i && precubic(u) {
                total += BigInt::from(u.multiplicity(1) as i64 - 1) * m;
            }
        }
        total
    };
    let mut out = Vec::new();
    for n in 1..=max_n {
        for f in 1..=n + 1 {
            // both sides of the precubic identity, assembled from degree data
            let mut lhs = BigInt::zero();
            for (&(r, ff, ref v), m) in &tables.m_planar {
                if r == 1 && ff == f && edge_count(v) == n && precubic(v) {
                    lhs += BigInt::from(f as i64 - 1) * m;
                }
            }
            let mut rhs = BigInt::zero();
            for i in 0..=n {
                let j = n - i;
                for f1 in 1..f {
                    let f2 = f - f1;
                    rhs += alpha1(i, f1) * alpha1(j, f2);
                }
            }
            // and bit-for-bit against the alpha tables
            let alpha_lhs =
                BigInt::from(f as i64 - 1) * tables.alpha_planar(n as i64, f as i64);
            let mut report = IdentityReport::new(
                "degree-precubic",
                format!("n={n},f={f} [enumeration]"),
                lhs.clone(),
                rhs.clone(),
            );
            report.ok &= lhs == alpha_lhs;
            report = report.with_terms(vec![
                ("(f-1) alpha(n,f) from the alpha table".into(), alpha_lhs),
                ("degree-refined right side".into(), rhs),
            ]);
            out.push(report);
        }
    }
    out
}

// --- two-faced identities -----------------------------------------------

fn two_faced_maps(
    n: usize,
    genus: usize,
    budget: Option<u64>,
) -> Result<Vec<crate::map::RootedMap>, EnumError> {
    let filter = EnumFilter {
        faces: Some(2),
        genus: Some(genus),
        family: Family::Precubic,
        ..Default::default()
    };
    let mut out = Vec::new();
    visit_maps(n, &filter, budget, |m| out.push(m.clone()))?;
    Ok(out)
}

/// `2g + 1` special vertices on every two-faced precubic map in range.
fn check_twoface_special(
    params: VerifyParams,
    max_n: usize,
) -> Result<Vec<IdentityReport>, VerifyError> {
    let mut out = Vec::new();
    for g in 0..=params.max_genus {
        for n in 1..=max_n {
            let maps = two_faced_maps(n, g, params.budget)?;
            if maps.is_empty() {
                continue;
            }
            let mut observed = BigInt::zero();
            let mut witness = None;
            for map in &maps {
                let specials = twofaces::special_vertices(map)?;
                observed += BigInt::from(specials.len());
                if specials.len() != 2 * g + 1 && witness.is_none() {
                    witness = Some(codec::encode(map, &[]));
                }
            }
            let expected = BigInt::from((2 * g + 1) * maps.len());
            let mut report = IdentityReport::new(
                "twoface-special",
                format!("n={n},g={g} ({} maps)", maps.len()),
                expected,
                observed,
            );
            report.counterexample = witness;
            out.push(report);
        }
    }
    Ok(out)
}

/// `2g` trisections on every unicellular map in range.
fn check_trisections(params: VerifyParams) -> Result<Vec<IdentityReport>, VerifyError> {
    let mut out = Vec::new();
    for n in 1..=params.max_edges {
        let filter = EnumFilter::with_faces(1);
        let mut maps = Vec::new();
        visit_maps(n, &filter, params.budget, |m| maps.push(m.clone()))?;
        let mut observed = BigInt::zero();
        let mut expected = BigInt::zero();
        let mut witness = None;
        for map in &maps {
            let trisections = twofaces::find_trisections(map)?;
            observed += BigInt::from(trisections.len());
            expected += BigInt::from(2 * map.genus());
            if trisections.len() != 2 * map.genus() && witness.is_none() {
                witness = Some(codec::encode(map, &[]));
            }
        }
        let mut report = IdentityReport::new(
            "trisections",
            format!("n={n} ({} unicellular maps)", maps.len()),
            expected,
            observed,
        );
        report.counterexample = witness;
        out.push(report);
    }
    Ok(out)
}

/// Tripods with zero valid gluings are exactly as numerous as tripods with
/// two, and the classifier agrees with brute force on every tripod.
fn check_gluing_balance(
    params: VerifyParams,
    max_n: usize,
) -> Result<Vec<IdentityReport>, VerifyError> {
    let mut out = Vec::new();
    let max_tripod_genus = params.max_genus.saturating_sub(1);
    for g in 0..=max_tripod_genus {
        for n in 1..=max_n {
            let maps = two_faced_maps(n, g, params.budget)?;
            if maps.is_empty() {
                continue;
            }
            let census = twofaces::census_tripods(&maps)?;
            let tripods: usize = census.by_gluings.values().sum();
            if tripods == 0 {
                continue;
            }
            let zeros = census.by_gluings.get(&0).copied().unwrap_or(0);
            let twos = census.by_gluings.get(&2).copied().unwrap_or(0);
            let mut report = IdentityReport::new(
                "gluing-balance",
                format!("n={n},tripod genus {g} ({tripods} tripods)"),
                BigInt::from(zeros),
                BigInt::from(twos),
            );
            report.ok &= census.classifier_mismatches == 0;
            report = report.with_terms(vec![
                ("tripods".into(), BigInt::from(tripods)),
                (
                    "valid gluing pairs".into(),
                    BigInt::from(census.valid_gluing_pairs),
                ),
                (
                    "classifier mismatches".into(),
                    BigInt::from(census.classifier_mismatches),
                ),
            ]);
            out.push(report);
        }
    }
    Ok(out)
}

/// The two-faced precubic identity, with the tripod term evaluated under all
/// four readings of the printed formula: marked-leaf triples ordered or not,
/// tripod edge index `n` or `n - 6`. Each point reports which readings
/// balance; it passes if at least one does (none are needed at genus 0).
fn check_eq8(tables: &EnumTables, params: VerifyParams) -> Result<Vec<IdentityReport>, VerifyError> {
    let max_n = tables.max_precubic;
    let tripod_triples = |n: i64, g: i64| -> Result<BigInt, VerifyError> {
        if n < 0 || g < 0 {
            return Ok(BigInt::zero());
        }
        let maps = two_faced_maps(n as usize, g as usize, params.budget)?;
        let mut total = BigInt::zero();
        for map in &maps {
            let l = count_leaves(map) as i64;
            total += BigInt::from(l * (l - 1) * (l - 2) / 6);
        }
        Ok(total)
    };
    let mut out = Vec::new();
    for g in 0..=params.max_genus as i64 {
        for n in 1..=max_n as i64 {
            let lhs = BigInt::from(2 * g + 1) * tables.alpha_g(n, 2, g);
            if lhs.is_zero() && tables.alpha_g(n, 2, g).is_zero() {
                continue;
            }
            let mut pair_term = BigInt::zero();
            for g1 in 0..=g {
                let g2 = g - g1;
                for i in 0..=n {
                    let j = n - i;
                    pair_term +=
                        tables.alpha_marked_g(i, 1, g1) * tables.alpha_marked_g(j, 1, g2);
                }
            }
            let unordered_n = tripod_triples(n, g - 1)?;
            let unordered_shifted = tripod_triples(n - 6, g - 1)?;
            let ordered_n = BigInt::from(6) * &unordered_n;
            let ordered_shifted = BigInt::from(6) * &unordered_shifted;
            let readings = [
                ("unordered triples, tripods with n edges", &unordered_n),
                ("unordered triples, tripods with n-6 edges", &unordered_shifted),
                ("ordered triples, tripods with n edges", &ordered_n),
                ("ordered triples, tripods with n-6 edges", &ordered_shifted),
            ];
            let mut terms = vec![("pair term".to_string(), pair_term.clone())];
            let mut balanced = None;
            for (name, value) in readings {
                let total = &pair_term + value;
                let ok = total == lhs;
                if ok && balanced.is_none() {
                    balanced = Some(name);
                }
                terms.push((format!("tripod term [{name}]"), value.clone()));
                terms.push((
                    format!("balances [{name}]"),
                    BigInt::from(i64::from(ok)),
                ));
            }
            let rhs = match balanced {
                Some(_) => lhs.clone(),
                None => &pair_term + &unordered_n,
            };
            terms.push((
                format!("verdict: {}", balanced.unwrap_or("no reading balances")),
                BigInt::zero(),
            ));
            out.push(IdentityReport::new("eq8", format!("n={n},g={g}"), lhs, rhs).with_terms(terms));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_verifier() -> Verifier {
        Verifier::new(VerifyParams {
            max_edges: 4,
            max_genus: 1,
            budget: None,
        })
        .unwrap()
    }

    #[test]
    fn planar_identities_hold_small() {
        let v = small_verifier();
        for id in ["cut-slide", "remy", "cc-planar", "dual"] {
            let reports = v.verify(id).unwrap();
            assert!(!reports.is_empty());
            for r in &reports {
                assert!(r.ok, "{id} failed at {}: {} vs {}", r.point, r.lhs, r.rhs);
            }
        }
    }

    #[test]
    fn dual_identity_spot_value() {
        // (v-1) Q(2,2) = 5 with v = 2
        let v = small_verifier();
        let reports = v.verify("dual").unwrap();
        let r = reports
            .iter()
            .find(|r| r.point.starts_with("n=2,f=2 [enumeration]"))
            .unwrap();
        assert_eq!(r.lhs, "5");
        assert_eq!(r.rhs, "5");
    }

    #[test]
    fn intermediate_displays_hold_small() {
        let v = small_verifier();
        for id in [
            "cc-planar-step1",
            "cc-planar-step2",
            "cc-planar-step3",
            "cc-planar-s",
        ] {
            for r in v.verify(id).unwrap() {
                assert!(r.ok, "{id} failed at {}: {} vs {}", r.point, r.lhs, r.rhs);
            }
        }
    }

    #[test]
    fn full_genus_identities_hold_small() {
        let v = small_verifier();
        for id in ["gj", "cc", "harer-zagier", "gj-planar"] {
            for r in v.verify(id).unwrap() {
                assert!(r.ok, "{id} failed at {}: {} vs {}", r.point, r.lhs, r.rhs);
            }
        }
    }

    #[test]
    fn degree_refined_identities_hold_small() {
        let v = small_verifier();
        for id in ["degree-cut-slide", "degree-remy", "degree-precubic"] {
            for r in v.verify(id).unwrap() {
                assert!(r.ok, "{id} failed at {}: {} vs {}", r.point, r.lhs, r.rhs);
            }
        }
    }

    #[test]
    fn unknown_identity_is_rejected() {
        let v = small_verifier();
        assert!(matches!(
            v.verify("nope"),
            Err(VerifyError::UnknownIdentity(_))
        ));
    }
}
