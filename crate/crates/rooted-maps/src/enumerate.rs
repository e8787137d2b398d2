//! Exhaustive generation of rooted maps with `n` edges, up to rooted
//! isomorphism.
//!
//! The default generator builds maps directly in canonical form: darts are
//! allocated in the first-visit order of the canonical traversal, so every
//! isomorphism class is produced exactly once and no dedup set is needed.
//! The naive generator (all rotation permutations, dedup by canonical code)
//! stays around as the oracle of record for small `n`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;
use thiserror::Error;

use crate::map::{DegreeProfile, Dart, RootedMap};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumError {
    #[error("enumeration budget of {0} search nodes exceeded")]
    BudgetExceeded(u64),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Family {
    #[default]
    All,
    Precubic,
    Cubic,
}

/// Conjunctive filters; the empty filter selects every rooted map.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct EnumFilter {
    pub faces: Option<usize>,
    pub genus: Option<usize>,
    pub family: Family,
    pub max_degree: Option<usize>,
}

impl EnumFilter {
    pub fn planar() -> Self {
        EnumFilter {
            genus: Some(0),
            ..Self::default()
        }
    }

    pub fn with_faces(faces: usize) -> Self {
        EnumFilter {
            faces: Some(faces),
            ..Self::default()
        }
    }

    fn admits(&self, map: &RootedMap) -> bool {
        if let Some(f) = self.faces {
            if map.n_faces() != f {
                return false;
            }
        }
        if let Some(g) = self.genus {
            if map.genus() != g {
                return false;
            }
        }
        if let Some(d) = self.max_degree {
            let (profile, _) = map.degree_profile();
            if profile.max_degree() > d {
                return false;
            }
        }
        match self.family {
            Family::All => true,
            Family::Precubic => map.family().is_precubic,
            Family::Cubic => map.family().is_cubic,
        }
    }

    /// Largest vertex degree the structural search may build.
    fn degree_cap(&self) -> usize {
        let family_cap = match self.family {
            Family::All => usize::MAX,
            Family::Precubic | Family::Cubic => 3,
        };
        family_cap.min(self.max_degree.unwrap_or(usize::MAX))
    }

    /// Whether a closed vertex cycle of this length can survive the filter.
    fn cycle_ok(&self, len: usize, contains_root: bool) -> bool {
        if len > self.degree_cap() {
            return false;
        }
        match self.family {
            Family::All => true,
            Family::Precubic => {
                if contains_root {
                    len == 1
                } else {
                    len == 1 || len == 3
                }
            }
            Family::Cubic => len == 3,
        }
    }
}

/// Undo record for one `try_assign`.
struct Undo {
    fresh: bool,
    /// `(chain_start, joined_target, old_root_flag)` when the assignment
    /// joined two chains rather than closing a cycle.
    join: Option<(Dart, Dart, bool)>,
}

struct Search<'a, F: FnMut(&RootedMap)> {
    n_darts: usize,
    filter: &'a EnumFilter,
    sigma: Vec<usize>,
    is_image: Vec<bool>,
    allocated: usize,
    // partial sigma = disjoint chains and closed cycles. `start[e]` is valid
    // while `e` has no sigma image; `end[s]`, `len[s]` and `has_root[s]`
    // while `s` has no preimage.
    start: Vec<Dart>,
    end: Vec<Dart>,
    len: Vec<usize>,
    has_root: Vec<bool>,
    nodes: u64,
    budget: Option<u64>,
    emit: F,
}

impl<'a, F: FnMut(&RootedMap)> Search<'a, F> {
    fn new(n_edges: usize, filter: &'a EnumFilter, budget: Option<u64>, emit: F) -> Self {
        let n_darts = 2 * n_edges;
        let mut has_root = vec![false; n_darts];
        if n_darts > 0 {
            has_root[0] = true;
        }
        Search {
            n_darts,
            filter,
            sigma: vec![usize::MAX; n_darts],
            is_image: vec![false; n_darts],
            allocated: 2.min(n_darts),
            start: (0..n_darts).collect(),
            end: (0..n_darts).collect(),
            len: vec![1; n_darts],
            has_root,
            nodes: 0,
            budget,
            emit,
        }
    }

    /// Possible images for `sigma[pos]`: any allocated dart without a
    /// preimage, plus the next fresh dart (which allocates a new edge).
    fn candidates(&self) -> Vec<Dart> {
        let mut out: Vec<Dart> = (0..self.allocated).filter(|&d| !self.is_image[d]).collect();
        if self.allocated < self.n_darts {
            out.push(self.allocated);
        }
        out
    }

    fn try_assign(&mut self, pos: usize, target: Dart) -> Option<Undo> {
        let s = self.start[pos];
        let fresh = target == self.allocated;
        if !fresh && target == s {
            // closing the vertex cycle through `pos`
            if !self.filter.cycle_ok(self.len[s], self.has_root[s]) {
                return None;
            }
            self.sigma[pos] = target;
            self.is_image[target] = true;
            return Some(Undo { fresh, join: None });
        }
        // joining two chains; the merged chain must still fit under the cap
        if self.len[s] + self.len[target] > self.filter.degree_cap() {
            return None;
        }
        if fresh {
            self.allocated += 2;
        }
        let t_end = self.end[target];
        let old_root = self.has_root[s];
        self.sigma[pos] = target;
        self.is_image[target] = true;
        self.end[s] = t_end;
        self.start[t_end] = s;
        self.len[s] += self.len[target];
        self.has_root[s] = old_root || self.has_root[target];
        Some(Undo {
            fresh,
            join: Some((s, target, old_root)),
        })
    }

    fn undo(&mut self, pos: usize, target: Dart, undo: Undo) {
        self.sigma[pos] = usize::MAX;
        self.is_image[target] = false;
        if let Some((s, t, old_root)) = undo.join {
            let t_end = self.end[s];
            self.start[t_end] = t;
            self.end[s] = pos;
            self.len[s] -= self.len[t];
            self.has_root[s] = old_root;
        }
        if undo.fresh {
            self.allocated -= 2;
        }
    }

    fn run(&mut self, pos: usize) -> Result<(), EnumError> {
        self.nodes += 1;
        if let Some(cap) = self.budget {
            if self.nodes > cap {
                return Err(EnumError::BudgetExceeded(cap));
            }
        }
        if pos == self.allocated {
            if pos == self.n_darts {
                let map = RootedMap::from_parts(self.sigma.clone(), Some(0));
                if self.filter.admits(&map) {
                    (self.emit)(&map);
                }
            }
            // otherwise sigma closed with fewer edges than requested
            return Ok(());
        }
        for target in self.candidates() {
            if let Some(undo) = self.try_assign(pos, target) {
                self.run(pos + 1)?;
                self.undo(pos, target, undo);
            }
        }
        Ok(())
    }
}

/// Visits every rooted map with `n_edges` edges passing the filter, in
/// canonical-code order, calling `emit` once per isomorphism class.
pub fn visit_maps(
    n_edges: usize,
    filter: &EnumFilter,
    budget: Option<u64>,
    mut emit: impl FnMut(&RootedMap),
) -> Result<(), EnumError> {
    if n_edges == 0 {
        let m = RootedMap::vertex_map();
        if filter.admits(&m) {
            emit(&m);
        }
        return Ok(());
    }
    let mut search = Search::new(n_edges, filter, budget, &mut emit);
    search.run(0)
}

/// Collects the stream of [`visit_maps`], fanning the first sigma choice out
/// to parallel workers for larger instances.
pub fn enumerate_maps(
    n_edges: usize,
    filter: &EnumFilter,
    budget: Option<u64>,
) -> Result<Vec<RootedMap>, EnumError> {
    if n_edges <= 3 {
        let mut out = Vec::new();
        visit_maps(n_edges, filter, budget, |m| out.push(m.clone()))?;
        return Ok(out);
    }
    // top-level choices for sigma(0): darts 0, 1 or the fresh dart 2
    let results: Vec<Result<Vec<RootedMap>, EnumError>> = [0usize, 1, 2]
        .par_iter()
        .map(|&first| {
            let mut out = Vec::new();
            let mut search = Search::new(n_edges, filter, budget, |m: &RootedMap| {
                out.push(m.clone());
            });
            if let Some(undo) = search.try_assign(0, first) {
                search.run(1)?;
                search.undo(0, first, undo);
            }
            drop(search);
            Ok(out)
        })
        .collect();
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

/// Reference generator: every rotation permutation with root dart 0, kept if
/// transitive, deduplicated by canonical code. Exponential; the oracle of
/// record for `n <= 4`.
pub fn enumerate_naive(n_edges: usize, filter: &EnumFilter) -> Vec<RootedMap> {
    if n_edges == 0 {
        let m = RootedMap::vertex_map();
        return if filter.admits(&m) { vec![m] } else { vec![] };
    }
    let n_darts = 2 * n_edges;
    let mut seen = std::collections::BTreeMap::new();
    let mut perm: Vec<usize> = (0..n_darts).collect();
    permute(&mut perm, 0, &mut |sigma| {
        if let Ok(map) = RootedMap::build(n_edges, sigma.to_vec(), Some(0)) {
            if filter.admits(&map) {
                seen.entry(map.canonical_code()).or_insert(map);
            }
        }
    });
    seen.into_values().collect()
}

fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GroupBy {
    None,
    Faces,
    Genus,
    FacesGenus,
    DegreeProfile,
}

/// Grouping key for [`count_maps`] tables.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum CountKey {
    Total,
    Faces(usize),
    Genus(usize),
    FacesGenus(usize, usize),
    Profile(usize, DegreeProfile),
}

impl std::fmt::Display for CountKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CountKey::Total => write!(f, "total"),
            CountKey::Faces(n) => write!(f, "f={n}"),
            CountKey::Genus(g) => write!(f, "g={g}"),
            CountKey::FacesGenus(n, g) => write!(f, "f={n},g={g}"),
            CountKey::Profile(r, p) => {
                write!(f, "r={r},v=")?;
                let mut first = true;
                for (d, m) in &p.counts {
                    if !first {
                        write!(f, "+")?;
                    }
                    write!(f, "{d}^{m}")?;
                    first = false;
                }
                Ok(())
            }
        }
    }
}

/// Counts maps grouped by the requested statistic. Counts agree with the
/// cardinalities of [`enumerate_maps`] and are deterministic.
pub fn count_maps(
    n_edges: usize,
    filter: &EnumFilter,
    group_by: GroupBy,
    budget: Option<u64>,
) -> Result<BTreeMap<CountKey, BigUint>, EnumError> {
    let mut table: BTreeMap<CountKey, BigUint> = BTreeMap::new();
    visit_maps(n_edges, filter, budget, |map| {
        let key = match group_by {
            GroupBy::None => CountKey::Total,
            GroupBy::Faces => CountKey::Faces(map.n_faces()),
            GroupBy::Genus => CountKey::Genus(map.genus()),
            GroupBy::FacesGenus => CountKey::FacesGenus(map.n_faces(), map.genus()),
            GroupBy::DegreeProfile => {
                let (profile, r) = map.degree_profile();
                CountKey::Profile(r, profile)
            }
        };
        *table.entry(key).or_default() += BigUint::one();
    })?;
    Ok(table)
}
