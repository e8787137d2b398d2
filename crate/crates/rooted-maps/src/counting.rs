//! Big-integer count tables: memoized recurrences on one side, exhaustive
//! enumeration on the other, with provenance-tagged merging so the two can
//! never silently disagree.

use std::cell::RefCell;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::enumerate::{visit_maps, EnumError, EnumFilter, Family};
use crate::map::{DegreeProfile, RootedMap};

#[derive(Debug, Error)]
pub enum CountError {
    #[error(transparent)]
    Enumeration(#[from] EnumError),
    #[error("table entry {key} disagrees between provenances: {left} vs {right}")]
    OracleMismatch {
        key: String,
        left: BigInt,
        right: BigInt,
    },
}

/// Memoized evaluation of the counting recurrences. All divisions must be
/// exact; a remainder aborts, since it can only mean corrupted data.
#[derive(Default)]
pub struct Recurrences {
    q_planar: RefCell<BTreeMap<(i64, i64), BigInt>>,
    q_full: RefCell<BTreeMap<(i64, i64, i64), BigInt>>,
    t_planar: RefCell<BTreeMap<i64, BigInt>>,
    t_full: RefCell<BTreeMap<(i64, i64), BigInt>>,
}

fn exact_div(value: BigInt, by: i64, what: &str) -> BigInt {
    let (q, r) = num_integer::Integer::div_rem(&value, &BigInt::from(by));
    assert!(r.is_zero(), "{what}: division by {by} left remainder {r}");
    q
}

impl Recurrences {
    pub fn new() -> Self {
        Self::default()
    }

    /// Planar maps with `n` edges and `f` faces, from the planar
    /// Carrell-Chapuy recurrence with base `Q(0, f) = [f = 1]`.
    pub fn q_planar(&self, n: i64, f: i64) -> BigInt {
        if n < 0 || f < 1 {
            return BigInt::zero();
        }
        if n == 0 {
            return if f == 1 { BigInt::one() } else { BigInt::zero() };
        }
        if let Some(v) = self.q_planar.borrow().get(&(n, f)) {
            return v.clone();
        }
        let mut rhs =
            BigInt::from(2 * (2 * n - 1)) * (self.q_planar(n - 1, f) + self.q_planar(n - 1, f - 1));
        let mut quad = BigInt::zero();
        for i in 0..=(n - 2) {
            let j = n - 2 - i;
            for f1 in 1..f {
                let f2 = f - f1;
                quad += BigInt::from((2 * i + 1) * (2 * j + 1))
                    * self.q_planar(i, f1)
                    * self.q_planar(j, f2);
            }
        }
        rhs += BigInt::from(3) * quad;
        let value = exact_div(rhs, n + 1, "Q(n,f)");
        self.q_planar.borrow_mut().insert((n, f), value.clone());
        value
    }

    /// Maps of genus `g` with `n` edges and `f` faces (full Carrell-Chapuy).
    pub fn q_full(&self, n: i64, f: i64, g: i64) -> BigInt {
        if n < 0 || f < 1 || g < 0 {
            return BigInt::zero();
        }
        if n == 0 {
            return if f == 1 && g == 0 {
                BigInt::one()
            } else {
                BigInt::zero()
            };
        }
        if let Some(v) = self.q_full.borrow().get(&(n, f, g)) {
            return v.clone();
        }
        let mut rhs = BigInt::from(2 * (2 * n - 1))
            * (self.q_full(n - 1, f, g) + self.q_full(n - 1, f - 1, g));
        rhs += BigInt::from((2 * n - 3) * (n - 1) * (2 * n - 1)) * self.q_full(n - 2, f, g - 1);
        let mut quad = BigInt::zero();
        for i in 0..=(n - 2) {
            let j = n - 2 - i;
            for f1 in 1..f {
                let f2 = f - f1;
                for g1 in 0..=g {
                    let g2 = g - g1;
                    quad += BigInt::from((2 * i + 1) * (2 * j + 1))
                        * self.q_full(i, f1, g1)
                        * self.q_full(j, f2, g2);
                }
            }
        }
        rhs += BigInt::from(3) * quad;
        let value = exact_div(rhs, n + 1, "Q_g(n,f)");
        self.q_full.borrow_mut().insert((n, f, g), value.clone());
        value
    }

    /// Planar cubic maps with `3n` edges (Goulden-Jackson, planar case).
    pub fn t_planar(&self, n: i64) -> BigInt {
        if n < 0 {
            return BigInt::zero();
        }
        if n == 0 {
            return BigInt::one();
        }
        if let Some(v) = self.t_planar.borrow().get(&n) {
            return v.clone();
        }
        let mut rhs = BigInt::from(4 * (3 * n - 1)) * self.t_planar(n - 1);
        let mut quad = BigInt::zero();
        for i in 0..=(n - 2) {
            let j = n - 2 - i;
            quad += BigInt::from((3 * i + 2) * (3 * j + 2)) * self.t_planar(i) * self.t_planar(j);
        }
        rhs += BigInt::from(4) * quad;
        let value = exact_div(rhs, n + 1, "T(n)");
        self.t_planar.borrow_mut().insert(n, value.clone());
        value
    }

    /// Cubic maps of genus `g` with `3n` edges (full Goulden-Jackson).
    pub fn t_full(&self, n: i64, g: i64) -> BigInt {
        if n < 0 || g < 0 {
            return BigInt::zero();
        }
        if n == 0 {
            return if g == 0 { BigInt::one() } else { BigInt::zero() };
        }
        if let Some(v) = self.t_full.borrow().get(&(n, g)) {
            return v.clone();
        }
        let mut rhs = BigInt::from(4 * n)
            * BigInt::from((3 * n - 2) * (3 * n - 4))
            * self.t_full(n - 2, g - 1);
        rhs += BigInt::from(4 * (3 * n - 1)) * self.t_full(n - 1, g);
        let mut quad = BigInt::zero();
        for i in 0..=(n - 2) {
            let j = n - 2 - i;
            for g1 in 0..=g {
                let g2 = g - g1;
                quad += BigInt::from((3 * i + 2) * (3 * j + 2))
                    * self.t_full(i, g1)
                    * self.t_full(j, g2);
            }
        }
        rhs += BigInt::from(4) * quad;
        if n == 1 && g == 1 {
            rhs += BigInt::from(2);
        }
        let value = exact_div(rhs, n + 1, "T(n,g)");
        self.t_full.borrow_mut().insert((n, g), value.clone());
        value
    }
}

/// Count tables filled by exhaustive enumeration. Lookups outside the built
/// range abort rather than returning a silent zero.
pub struct EnumTables {
    /// Planar `Q(n, f)` for `n <= max_general`.
    pub q_planar: BTreeMap<(usize, usize), BigInt>,
    /// All-genus `Q_g(n, f)` for `n <= max_general`, keyed `(n, f, g)`.
    pub q_full: BTreeMap<(usize, usize, usize), BigInt>,
    /// Precubic `alpha_g(n, f)` for `n <= max_precubic`, keyed `(n, f, g)`.
    pub alpha: BTreeMap<(usize, usize, usize), BigInt>,
    /// Precubic maps with one marked leaf, same keys.
    pub alpha_marked: BTreeMap<(usize, usize, usize), BigInt>,
    /// Cubic `T(m, g)` for `3m <= max_cubic_edges`, keyed `(m, g)`.
    pub t_full: BTreeMap<(usize, usize), BigInt>,
    /// Planar degree-refined `M(r, f, v)` for `n <= max_general`.
    pub m_planar: BTreeMap<(usize, usize, DegreeProfile), BigInt>,
    pub max_general: usize,
    pub max_precubic: usize,
    pub max_cubic_edges: usize,
}

impl EnumTables {
    pub fn build(
        max_general: usize,
        max_precubic: usize,
        max_cubic_edges: usize,
        budget: Option<u64>,
    ) -> Result<Self, EnumError> {
        let mut tables = EnumTables {
            q_planar: BTreeMap::new(),
            q_full: BTreeMap::new(),
            alpha: BTreeMap::new(),
            alpha_marked: BTreeMap::new(),
            t_full: BTreeMap::new(),
            m_planar: BTreeMap::new(),
            max_general,
            max_precubic,
            max_cubic_edges,
        };
        for n in 0..=max_general {
            visit_maps(n, &EnumFilter::default(), budget, |map| {
                tables.record_general(map);
            })?;
        }
        let precubic = EnumFilter {
            family: Family::Precubic,
            ..Default::default()
        };
        for n in 0..=max_precubic {
            visit_maps(n, &precubic, budget, |map| {
                tables.record_precubic(map);
            })?;
        }
        let cubic = EnumFilter {
            family: Family::Cubic,
            ..Default::default()
        };
        for n in (3..=max_cubic_edges).step_by(3) {
            visit_maps(n, &cubic, budget, |map| {
                let key = (map.n_edges() / 3, map.genus());
                *tables.t_full.entry(key).or_default() += 1;
            })?;
        }
        // T(0) = 1 by convention; the vertex map itself is not cubic
        tables.t_full.insert((0, 0), BigInt::one());
        Ok(tables)
    }

    fn record_general(&mut self, map: &RootedMap) {
        let (n, f, g) = (map.n_edges(), map.n_faces(), map.genus());
        *self.q_full.entry((n, f, g)).or_default() += 1;
        if g == 0 {
            *self.q_planar.entry((n, f)).or_default() += 1;
            let (profile, r) = map.degree_profile();
            *self.m_planar.entry((r, f, profile)).or_default() += 1;
        }
    }

    fn record_precubic(&mut self, map: &RootedMap) {
        let (n, f, g) = (map.n_edges(), map.n_faces(), map.genus());
        *self.alpha.entry((n, f, g)).or_default() += 1;
        let leaves = count_leaves(map);
        if leaves > 0 {
            *self.alpha_marked.entry((n, f, g)).or_default() += BigInt::from(leaves);
        }
    }

    pub fn q(&self, n: i64, f: i64) -> BigInt {
        if n < 0 || f < 1 {
            return BigInt::zero();
        }
        assert!(
            n as usize <= self.max_general,
            "Q({n},{f}) outside enumerated range"
        );
        self.q_planar
            .get(&(n as usize, f as usize))
            .cloned()
            .unwrap_or_default()
    }

    pub fn q_g(&self, n: i64, f: i64, g: i64) -> BigInt {
        if n < 0 || f < 1 || g < 0 {
            return BigInt::zero();
        }
        assert!(
            n as usize <= self.max_general,
            "Q_{g}({n},{f}) outside enumerated range"
        );
        self.q_full
            .get(&(n as usize, f as usize, g as usize))
            .cloned()
            .unwrap_or_default()
    }

    pub fn alpha_planar(&self, n: i64, f: i64) -> BigInt {
        self.alpha_g(n, f, 0)
    }

    pub fn alpha_g(&self, n: i64, f: i64, g: i64) -> BigInt {
        if n < 0 || f < 1 || g < 0 {
            return BigInt::zero();
        }
        assert!(
            n as usize <= self.max_precubic,
            "alpha_{g}({n},{f}) outside enumerated range"
        );
        self.alpha
            .get(&(n as usize, f as usize, g as usize))
            .cloned()
            .unwrap_or_default()
    }

    /// Precubic maps with one marked leaf.
    pub fn alpha_marked_g(&self, n: i64, f: i64, g: i64) -> BigInt {
        if n < 0 || f < 1 || g < 0 {
            return BigInt::zero();
        }
        assert!(
            n as usize <= self.max_precubic,
            "alpha^(1)_{g}({n},{f}) outside enumerated range"
        );
        self.alpha_marked
            .get(&(n as usize, f as usize, g as usize))
            .cloned()
            .unwrap_or_default()
    }

    pub fn t_g(&self, m: i64, g: i64) -> BigInt {
        if m < 0 || g < 0 {
            return BigInt::zero();
        }
        assert!(
            m == 0 || 3 * m as usize <= self.max_cubic_edges,
            "T({m},{g}) outside enumerated range"
        );
        self.t_full
            .get(&(m as usize, g as usize))
            .cloned()
            .unwrap_or_default()
    }

    pub fn t(&self, m: i64) -> BigInt {
        self.t_g(m, 0)
    }

    pub fn m(&self, r: usize, f: usize, profile: &DegreeProfile) -> BigInt {
        self.m_planar
            .get(&(r, f, profile.clone()))
            .cloned()
            .unwrap_or_default()
    }
}

/// Non-root vertices of degree one.
pub fn count_leaves(map: &RootedMap) -> u64 {
    let root = map.root_vertex();
    map.vertices()
        .iter()
        .filter(|cycle| cycle.len() == 1 && map.vertex_of(cycle[0]) != root)
        .count() as u64
}

// --- provenance-tagged persistent table ----------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Provenance {
    Recurrence,
    Enumeration,
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum TableKey {
    QPlanar { n: usize, f: usize },
    QFull { n: usize, f: usize, g: usize },
    TPlanar { n: usize },
    TFull { n: usize, g: usize },
    Alpha { n: usize, f: usize, g: usize },
    AlphaMarked { n: usize, f: usize, g: usize, k: usize },
    MProfile { r: usize, f: usize, profile: Vec<(usize, u64)> },
}

impl std::fmt::Display for TableKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Serialize, Deserialize)]
pub struct TableEntry {
    /// Decimal digits; the values outgrow machine integers.
    pub value: String,
    pub recurrence: bool,
    pub enumeration: bool,
}

/// Append-only store with idempotent writes. An entry written by both
/// provenances must agree exactly.
#[derive(Default, Serialize, Deserialize)]
pub struct CountTable {
    pub entries: BTreeMap<String, TableEntry>,
}

impl CountTable {
    pub fn insert(
        &mut self,
        key: TableKey,
        value: &BigInt,
        provenance: Provenance,
    ) -> Result<(), CountError> {
        let key_str = key.to_string();
        let decimal = value.to_string();
        match self.entries.get_mut(&key_str) {
            Some(entry) => {
                if entry.value != decimal {
                    return Err(CountError::OracleMismatch {
                        key: key_str,
                        left: entry.value.parse().unwrap_or_default(),
                        right: value.clone(),
                    });
                }
                match provenance {
                    Provenance::Recurrence => entry.recurrence = true,
                    Provenance::Enumeration => entry.enumeration = true,
                }
            }
            None => {
                self.entries.insert(
                    key_str,
                    TableEntry {
                        value: decimal,
                        recurrence: provenance == Provenance::Recurrence,
                        enumeration: provenance == Provenance::Enumeration,
                    },
                );
            }
        }
        Ok(())
    }

    pub fn load(path: &std::path::Path) -> std::io::Result<Self> {
        let text = std::fs::read_to_string(path)?;
        serde_json::from_str(&text).map_err(std::io::Error::other)
    }

    pub fn save(&self, path: &std::path::Path) -> std::io::Result<()> {
        std::fs::write(path, serde_json::to_string_pretty(self).unwrap_or_default())
    }
}

/// Cross-checks every entry computable by both recurrence and enumeration,
/// recording everything in the returned table.
pub fn merge_provenances(
    tables: &EnumTables,
    rec: &Recurrences,
) -> Result<CountTable, CountError> {
    let mut out = CountTable::default();
    for (&(n, f), value) in &tables.q_planar {
        out.insert(TableKey::QPlanar { n, f }, value, Provenance::Enumeration)?;
        out.insert(
            TableKey::QPlanar { n, f },
            &rec.q_planar(n as i64, f as i64),
            Provenance::Recurrence,
        )?;
    }
    for (&(n, f, g), value) in &tables.q_full {
        out.insert(TableKey::QFull { n, f, g }, value, Provenance::Enumeration)?;
        out.insert(
            TableKey::QFull { n, f, g },
            &rec.q_full(n as i64, f as i64, g as i64),
            Provenance::Recurrence,
        )?;
    }
    for (&(m, g), value) in &tables.t_full {
        out.insert(TableKey::TFull { n: m, g }, value, Provenance::Enumeration)?;
        out.insert(
            TableKey::TFull { n: m, g },
            &rec.t_full(m as i64, g as i64),
            Provenance::Recurrence,
        )?;
        if g == 0 {
            out.insert(TableKey::TPlanar { n: m }, value, Provenance::Enumeration)?;
            out.insert(
                TableKey::TPlanar { n: m },
                &rec.t_planar(m as i64),
                Provenance::Recurrence,
            )?;
        }
    }
    for (&(n, f, g), value) in &tables.alpha {
        out.insert(TableKey::Alpha { n, f, g }, value, Provenance::Enumeration)?;
    }
    for ((r, f, profile), value) in &tables.m_planar {
        out.insert(
            TableKey::MProfile {
                r: *r,
                f: *f,
                profile: profile.counts.iter().map(|(&d, &m)| (d, m)).collect(),
            },
            value,
            Provenance::Enumeration,
        )?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn planar_q_base_and_small_values() {
        let rec = Recurrences::new();
        assert_eq!(rec.q_planar(0, 1), BigInt::one());
        assert_eq!(rec.q_planar(0, 2), BigInt::zero());
        assert_eq!(rec.q_planar(2, 2), BigInt::from(5));
        let row: Vec<BigInt> = (1..=4).map(|f| rec.q_planar(3, f)).collect();
        assert_eq!(
            row,
            vec![5, 22, 22, 5]
                .into_iter()
                .map(BigInt::from)
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn planar_totals_match_known_sequence() {
        let rec = Recurrences::new();
        let totals: Vec<BigInt> = (0..=5)
            .map(|n| (1..=n + 1).map(|f| rec.q_planar(n, f)).sum())
            .collect();
        assert_eq!(
            totals,
            vec![1, 2, 9, 54, 378, 2916]
                .into_iter()
                .map(BigInt::from)
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn cubic_t_values() {
        let rec = Recurrences::new();
        let t: Vec<BigInt> = (0..=4).map(|n| rec.t_planar(n)).collect();
        assert_eq!(
            t,
            vec![1, 4, 32, 336, 4096]
                .into_iter()
                .map(BigInt::from)
                .collect::<Vec<_>>()
        );
        // the full recurrence specializes to the planar one at g = 0
        for n in 0..=4 {
            assert_eq!(rec.t_full(n, 0), rec.t_planar(n));
        }
    }

    #[test]
    fn full_genus_q_values() {
        let rec = Recurrences::new();
        // the torus two-loop map is the unique genus-1 map with 2 edges
        assert_eq!(rec.q_full(2, 1, 1), BigInt::one());
        // all-genus totals 1, 2, 10, 74
        let totals: Vec<BigInt> = (0..=3)
            .map(|n| {
                let mut s = BigInt::zero();
                for f in 1..=n + 1 {
                    for g in 0..=n {
                        s += rec.q_full(n, f, g);
                    }
                }
                s
            })
            .collect();
        assert_eq!(
            totals,
            vec![1, 2, 10, 74]
                .into_iter()
                .map(BigInt::from)
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn q_full_specializes_to_planar() {
        let rec = Recurrences::new();
        for n in 0..=6 {
            for f in 1..=n + 1 {
                assert_eq!(rec.q_full(n, f, 0), rec.q_planar(n, f));
            }
        }
    }

    #[test]
    fn enumeration_agrees_with_recurrences_small() {
        let tables = EnumTables::build(3, 3, 3, None).unwrap();
        let rec = Recurrences::new();
        let merged = merge_provenances(&tables, &rec).unwrap();
        assert!(merged
            .entries
            .values()
            .any(|e| e.recurrence && e.enumeration));
    }

    #[test]
    fn planar_self_duality_of_counts() {
        let rec = Recurrences::new();
        for n in 0..=6i64 {
            for f in 1..=n + 1 {
                assert_eq!(rec.q_planar(n, f), rec.q_planar(n, n + 2 - f));
            }
        }
    }

    #[test]
    fn count_table_rejects_conflicting_values() {
        let mut table = CountTable::default();
        let key = TableKey::QPlanar { n: 2, f: 2 };
        table
            .insert(key.clone(), &BigInt::from(5), Provenance::Recurrence)
            .unwrap();
        table
            .insert(key.clone(), &BigInt::from(5), Provenance::Enumeration)
            .unwrap();
        assert!(table
            .insert(key, &BigInt::from(6), Provenance::Enumeration)
            .is_err());
    }
}
