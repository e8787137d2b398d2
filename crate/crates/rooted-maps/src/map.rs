//! Rooted combinatorial maps encoded as a rotation permutation over darts.
//!
//! A map with `n` edges has darts `0..2n`. The edge involution is implicit:
//! dart `d` is mated with `d ^ 1`, so edge `e` owns darts `2e` and `2e + 1`.
//! `sigma` sends each dart to its clockwise successor around its vertex.
//! Vertices are the cycles of `sigma`, faces are the cycles of
//! `d -> sigma[d ^ 1]`, and the genus follows from Euler's relation.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Index of a half-edge. Dart `d` and `d ^ 1` form one edge.
pub type Dart = usize;

/// A vertex, identified by the smallest dart on its `sigma`-cycle.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct VertexId(pub Dart);

/// A face, identified by the smallest dart on its face cycle.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct FaceId(pub Dart);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MapError {
    #[error("sigma is not a permutation of 0..{expected} (problem near index {index})")]
    NotAPermutation { expected: usize, index: usize },
    #[error("darts do not form a single orbit under sigma and alpha")]
    Disconnected,
    #[error("bad root dart {0:?} for a map with {1} edges")]
    BadRoot(Option<Dart>, usize),
    #[error("derived genus is not an integer; map data is corrupted")]
    InternalInconsistency,
}

/// A rooted map. Immutable after construction; all operations are pure.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RootedMap {
    sigma: Vec<Dart>,
    root: Option<Dart>,
    // caches, filled at construction
    vertex_rep: Vec<Dart>,
    face_rep: Vec<Dart>,
    n_vertices: usize,
    n_faces: usize,
}

fn orbit_reps(next: impl Fn(Dart) -> Dart, len: usize) -> (Vec<Dart>, usize) {
    let mut rep = vec![usize::MAX; len];
    let mut count = 0;
    for start in 0..len {
        if rep[start] != usize::MAX {
            continue;
        }
        count += 1;
        let mut d = start;
        loop {
            rep[d] = start;
            d = next(d);
            if d == start {
                break;
            }
        }
    }
    (rep, count)
}

impl RootedMap {
    /// The unique map with no edges: one vertex, one face, implicit root corner.
    pub fn vertex_map() -> Self {
        RootedMap {
            sigma: Vec::new(),
            root: None,
            vertex_rep: Vec::new(),
            face_rep: Vec::new(),
            n_vertices: 1,
            n_faces: 1,
        }
    }

    /// Validates and builds a map from rotation data.
    pub fn build(n_edges: usize, sigma: Vec<Dart>, root: Option<Dart>) -> Result<Self, MapError> {
        let n_darts = 2 * n_edges;
        if sigma.len() != n_darts {
            return Err(MapError::NotAPermutation {
                expected: n_darts,
                index: sigma.len().min(n_darts),
            });
        }
        let mut seen = vec![false; n_darts];
        for (i, &img) in sigma.iter().enumerate() {
            if img >= n_darts || seen[img] {
                return Err(MapError::NotAPermutation {
                    expected: n_darts,
                    index: i,
                });
            }
            seen[img] = true;
        }
        match (n_edges, root) {
            (0, None) => return Ok(Self::vertex_map()),
            (0, Some(r)) => return Err(MapError::BadRoot(Some(r), 0)),
            (_, None) => return Err(MapError::BadRoot(None, n_edges)),
            (_, Some(r)) if r >= n_darts => return Err(MapError::BadRoot(Some(r), n_edges)),
            _ => {}
        }
        // connectivity: one orbit under the group generated by sigma and alpha
        let mut stack = vec![0];
        let mut reached = vec![false; n_darts];
        reached[0] = true;
        let mut n_reached = 1;
        while let Some(d) = stack.pop() {
            for next in [sigma[d], d ^ 1] {
                if !reached[next] {
                    reached[next] = true;
                    n_reached += 1;
                    stack.push(next);
                }
            }
        }
        if n_reached != n_darts {
            return Err(MapError::Disconnected);
        }
        Ok(Self::from_parts(sigma, root))
    }

    /// Internal constructor for callers that guarantee validity.
    pub(crate) fn from_parts(sigma: Vec<Dart>, root: Option<Dart>) -> Self {
        if sigma.is_empty() {
            return Self::vertex_map();
        }
        let n = sigma.len();
        let (vertex_rep, n_vertices) = orbit_reps(|d| sigma[d], n);
        let (face_rep, n_faces) = orbit_reps(|d| sigma[d ^ 1], n);
        RootedMap {
            sigma,
            root,
            vertex_rep,
            face_rep,
            n_vertices,
            n_faces,
        }
    }

    pub fn n_edges(&self) -> usize {
        self.sigma.len() / 2
    }

    pub fn n_darts(&self) -> usize {
        self.sigma.len()
    }

    /// Root dart; `None` exactly for the vertex map.
    pub fn root_dart(&self) -> Option<Dart> {
        self.root
    }

    pub fn sigma(&self, d: Dart) -> Dart {
        self.sigma[d]
    }

    pub fn sigma_inv(&self, d: Dart) -> Dart {
        // degrees are small; walking the cycle avoids storing the inverse
        let mut x = d;
        while self.sigma[x] != d {
            x = self.sigma[x];
        }
        x
    }

    /// The edge involution: `d` and `alpha(d)` are the two sides of one edge.
    pub fn alpha(&self, d: Dart) -> Dart {
        d ^ 1
    }

    /// Face successor: the next dart along the face containing `d`.
    pub fn face_next(&self, d: Dart) -> Dart {
        self.sigma[d ^ 1]
    }

    pub fn vertex_of(&self, d: Dart) -> VertexId {
        VertexId(self.vertex_rep[d])
    }

    pub fn face_of(&self, d: Dart) -> FaceId {
        FaceId(self.face_rep[d])
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_faces(&self) -> usize {
        self.n_faces
    }

    /// Face containing the root corner.
    pub fn root_face(&self) -> FaceId {
        match self.root {
            Some(r) => self.face_of(r),
            None => FaceId(0),
        }
    }

    pub fn root_vertex(&self) -> VertexId {
        match self.root {
            Some(r) => self.vertex_of(r),
            None => VertexId(0),
        }
    }

    /// Darts around the vertex of `start` in clockwise order, beginning at `start`.
    pub fn vertex_cycle(&self, start: Dart) -> Vec<Dart> {
        let mut out = vec![start];
        let mut d = self.sigma[start];
        while d != start {
            out.push(d);
            d = self.sigma[d];
        }
        out
    }

    pub fn degree_of(&self, v: VertexId) -> usize {
        self.vertex_cycle(v.0).len()
    }

    /// All vertices as clockwise dart cycles, keyed by smallest dart.
    pub fn vertices(&self) -> Vec<Vec<Dart>> {
        let mut out = Vec::with_capacity(self.n_vertices);
        for d in 0..self.n_darts() {
            if self.vertex_rep[d] == d {
                out.push(self.vertex_cycle(d));
            }
        }
        out
    }

    /// All face cycles (orbits of the face successor), keyed by smallest dart.
    pub fn faces(&self) -> Vec<Vec<Dart>> {
        let mut out = Vec::with_capacity(self.n_faces);
        for start in 0..self.n_darts() {
            if self.face_rep[start] == start {
                let mut cycle = vec![start];
                let mut d = self.face_next(start);
                while d != start {
                    cycle.push(d);
                    d = self.face_next(d);
                }
                out.push(cycle);
            }
        }
        out
    }

    /// Genus from Euler's relation `v - n + f = 2 - 2g`.
    pub fn genus(&self) -> usize {
        self.try_genus().expect("validated map has integer genus")
    }

    pub fn try_genus(&self) -> Result<usize, MapError> {
        let euler = 2 + self.n_edges() as i64 - self.n_vertices as i64 - self.n_faces as i64;
        if euler % 2 != 0 || euler < 0 {
            return Err(MapError::InternalInconsistency);
        }
        Ok((euler / 2) as usize)
    }

    /// Vertex-degree multiplicities together with the root degree.
    pub fn degree_profile(&self) -> (DegreeProfile, usize) {
        let mut counts = BTreeMap::new();
        for v in self.vertices() {
            *counts.entry(v.len()).or_insert(0u64) += 1;
        }
        if self.n_darts() == 0 {
            counts.insert(0, 1);
        }
        let root_degree = match self.root {
            Some(r) => self.degree_of(self.vertex_of(r)),
            None => 0,
        };
        (DegreeProfile { counts }, root_degree)
    }

    pub fn family(&self) -> FamilyFlags {
        let (profile, root_degree) = self.degree_profile();
        let degrees: Vec<usize> = profile.counts.keys().copied().collect();
        FamilyFlags {
            is_precubic: root_degree == 1 && degrees.iter().all(|&d| d == 1 || d == 3),
            is_cubic: degrees == [3],
            is_unicellular: self.n_faces == 1,
        }
    }

    /// The dual map: faces and vertices exchange, edges and genus are kept.
    ///
    /// The dual keeps the dart labels, takes the face successor as its
    /// rotation, and keeps the root dart. Applying `dual` twice returns the
    /// original map on the nose.
    pub fn dual(&self) -> RootedMap {
        if self.n_darts() == 0 {
            return Self::vertex_map();
        }
        let sigma: Vec<Dart> = (0..self.n_darts()).map(|d| self.face_next(d)).collect();
        Self::from_parts(sigma, self.root)
    }

    /// First-visit relabelling (old dart -> new label) of the deterministic
    /// traversal from the root: processing labels in order, the edge of each
    /// dart's sigma-image is allocated when first seen. Mates get paired
    /// labels `2e`, `2e + 1`.
    fn canonical_labelling(&self) -> Vec<Dart> {
        let n_darts = self.n_darts();
        let mut label = vec![usize::MAX; n_darts];
        let mut old_of = vec![usize::MAX; n_darts];
        let mut next_edge = 0;
        let assign = |d: Dart, label: &mut Vec<usize>, old_of: &mut Vec<usize>, next: &mut usize| {
            if label[d] == usize::MAX {
                label[d] = 2 * *next;
                label[d ^ 1] = 2 * *next + 1;
                old_of[2 * *next] = d;
                old_of[2 * *next + 1] = d ^ 1;
                *next += 1;
            }
        };
        if let Some(root) = self.root {
            assign(root, &mut label, &mut old_of, &mut next_edge);
            for l in 0..n_darts {
                assign(self.sigma[old_of[l]], &mut label, &mut old_of, &mut next_edge);
            }
        }
        label
    }

    /// Complete invariant for rooted isomorphism.
    ///
    /// Rooted maps have no nontrivial automorphism fixing the root, so two
    /// maps get equal codes iff they are isomorphic as rooted maps.
    pub fn canonical_code(&self) -> Vec<u8> {
        let label = self.canonical_labelling();
        let mut code = Vec::with_capacity(2 + 2 * self.n_darts());
        code.extend_from_slice(&(self.n_edges() as u16).to_le_bytes());
        let mut old_of = vec![0; self.n_darts()];
        for (old, &new) in label.iter().enumerate() {
            old_of[new] = old;
        }
        for l in 0..self.n_darts() {
            let image = label[self.sigma[old_of[l]]];
            code.extend_from_slice(&(image as u16).to_le_bytes());
        }
        code
    }

    /// Relabels the map into its canonical form (root dart 0).
    pub fn canonicalize(&self) -> RootedMap {
        self.canonicalize_with_mapping().0
    }

    /// Canonical form plus the dart relabelling (old -> new) that produced it.
    pub fn canonicalize_with_mapping(&self) -> (RootedMap, Vec<Dart>) {
        if self.n_darts() == 0 {
            return (Self::vertex_map(), Vec::new());
        }
        let label = self.canonical_labelling();
        let mut sigma = vec![0; self.n_darts()];
        for old in 0..self.n_darts() {
            sigma[label[old]] = label[self.sigma[old]];
        }
        (Self::from_parts(sigma, Some(0)), label)
    }

}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FamilyFlags {
    pub is_precubic: bool,
    pub is_cubic: bool,
    pub is_unicellular: bool,
}

/// One of the `2n + 1` corner positions of a rooted map.
///
/// `Before(d)` is the corner immediately preceding dart `d` clockwise. The
/// root corner is split in two by the root arrow: `Before(root)` is the half
/// after the arrow, `RootLeft` the half before it. Inserting a dart at
/// `Before(root)` therefore makes the new dart the root.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum CornerSlot {
    Before(Dart),
    RootLeft,
}

/// A typed marker carried alongside a map.
///
/// `Vertex(None)` and `Corner(None)` address the vertex map's unique vertex
/// and implicit corner.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Mark {
    Discovery(usize),
    Vertex(Option<Dart>),
    Leaf(Dart),
    Corner(Option<CornerSlot>),
    SideEdge(Dart),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MarkError {
    #[error("dart {0} out of range")]
    DartOutOfRange(Dart),
    #[error("discovery rank {rank} not below the discovery count {count}")]
    BadDiscoveryRank { rank: usize, count: usize },
    #[error("leaf mark must reference a non-root vertex of degree 1")]
    NotALeaf,
    #[error("`-` marks are only valid on the vertex map")]
    ImplicitOnNonEmpty,
}

impl Mark {
    /// Checks a mark against the map it annotates.
    pub fn validate(&self, map: &RootedMap) -> Result<(), MarkError> {
        let n_darts = map.n_darts();
        let check_dart = |d: Dart| {
            if d < n_darts {
                Ok(())
            } else {
                Err(MarkError::DartOutOfRange(d))
            }
        };
        match *self {
            Mark::Discovery(rank) => {
                let count = map.n_faces().saturating_sub(1);
                if rank >= count {
                    return Err(MarkError::BadDiscoveryRank { rank, count });
                }
                Ok(())
            }
            Mark::Vertex(Some(d)) => check_dart(d),
            Mark::Vertex(None) | Mark::Corner(None) => {
                if n_darts == 0 {
                    Ok(())
                } else {
                    Err(MarkError::ImplicitOnNonEmpty)
                }
            }
            Mark::Leaf(d) => {
                check_dart(d)?;
                let v = map.vertex_of(d);
                if map.degree_of(v) == 1 && v != map.root_vertex() {
                    Ok(())
                } else {
                    Err(MarkError::NotALeaf)
                }
            }
            Mark::Corner(Some(CornerSlot::Before(d))) => check_dart(d),
            Mark::Corner(Some(CornerSlot::RootLeft)) => {
                if n_darts == 0 {
                    Err(MarkError::ImplicitOnNonEmpty)
                } else {
                    Ok(())
                }
            }
            Mark::SideEdge(d) => check_dart(d),
        }
    }
}

/// The vector `(v_i)` of vertex-degree multiplicities, root included.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub counts: BTreeMap<usize, u64>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ProfileError {
    #[error("delta would drive the multiplicity of degree {0} negative")]
    NegativeMultiplicity(usize),
}

impl DegreeProfile {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: &[(usize, u64)]) -> Self {
        DegreeProfile {
            counts: pairs.iter().copied().collect(),
        }
    }

    pub fn multiplicity(&self, degree: usize) -> u64 {
        self.counts.get(&degree).copied().unwrap_or(0)
    }

    pub fn total_vertices(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn total_degree(&self) -> u64 {
        self.counts.iter().map(|(&d, &m)| d as u64 * m).sum()
    }

    /// Applies the composite operator `delta(v, j1, ..., jk)`: positive entries
    /// add a vertex of that degree, negative entries remove one.
    pub fn delta(&self, deltas: &[i64]) -> Result<DegreeProfile, ProfileError> {
        let mut out = self.clone();
        for &j in deltas {
            let degree = j.unsigned_abs() as usize;
            if j >= 0 {
                *out.counts.entry(degree).or_insert(0) += 1;
            } else {
                let slot = out.counts.entry(degree).or_insert(0);
                if *slot == 0 {
                    return Err(ProfileError::NegativeMultiplicity(degree));
                }
                *slot -= 1;
                if *slot == 0 {
                    out.counts.remove(&degree);
                }
            }
        }
        Ok(out)
    }

    /// Componentwise sum.
    pub fn plus(&self, other: &DegreeProfile) -> DegreeProfile {
        let mut out = self.clone();
        for (&d, &m) in &other.counts {
            *out.counts.entry(d).or_insert(0) += m;
        }
        out
    }

    /// Componentwise difference, if non-negative.
    pub fn minus(&self, other: &DegreeProfile) -> Option<DegreeProfile> {
        let mut out = self.clone();
        for (&d, &m) in &other.counts {
            let slot = out.counts.entry(d).or_insert(0);
            if *slot < m {
                return None;
            }
            *slot -= m;
            if *slot == 0 {
                out.counts.remove(&d);
            }
        }
        Some(out)
    }

    pub fn max_degree(&self) -> usize {
        self.counts.keys().next_back().copied().unwrap_or(0)
    }
}
