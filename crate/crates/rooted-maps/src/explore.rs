//! The clockwise exploration of a planar map.
//!
//! Starting at the root corner the tour follows the current face, keeping
//! edges on the right. When it meets an edge whose far side lies in an
//! unvisited face it records a discovery, opens that edge and crosses. The
//! tour touches every corner exactly once and induces the corner labelling,
//! the ordered list of discoveries and a spanning tree of the faces (a DFS
//! tree of the dual with right-first priority).

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::map::{Dart, FaceId, RootedMap, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExploreError {
    #[error("exploration requires a planar map, got genus {0}")]
    GenusNotZero(usize),
    #[error("discovery rank {rank} out of range (map has {count} discoveries)")]
    BadRank { rank: usize, count: usize },
}

/// One opened edge: the dart sits in the face the tour leaves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Discovery {
    pub dart: Dart,
    pub vertex: VertexId,
    pub left_face: FaceId,
    pub entered_face: FaceId,
}

#[derive(Clone, Debug)]
pub struct ExplorationData {
    /// Label of the corner immediately preceding each dart; a bijection onto `0..2n`.
    pub corner_label: Vec<usize>,
    /// Discoveries in tour order; there are `f - 1` of them.
    pub discoveries: Vec<Discovery>,
    /// Parent of each non-root face in the dual DFS tree.
    pub face_parent: BTreeMap<FaceId, FaceId>,
    /// First-visited corner of each vertex, as the dart it precedes.
    pub vertex_first_corner: BTreeMap<VertexId, Dart>,
    /// Last corner of each vertex. For the root vertex this is the terminal
    /// half of the root corner, reported as the root dart.
    pub vertex_last_corner: BTreeMap<VertexId, Dart>,
    entered_by: BTreeMap<FaceId, usize>,
    root_face: FaceId,
}

impl ExplorationData {
    pub fn discovery_count(&self) -> usize {
        self.discoveries.len()
    }

    /// Rank of the discovery that entered the given face.
    pub fn entering_discovery(&self, face: FaceId) -> Option<usize> {
        self.entered_by.get(&face).copied()
    }

    pub fn root_face(&self) -> FaceId {
        self.root_face
    }

    /// Time (corner label) of the first visit to a vertex.
    pub fn first_label(&self, v: VertexId) -> usize {
        self.corner_label[self.vertex_first_corner[&v]]
    }

    /// The dart whose preceding corner is the last corner of `v`.
    pub fn last_corner_dart(&self, v: VertexId) -> Dart {
        self.vertex_last_corner[&v]
    }
}

/// Runs the exploration. Fails on positive genus; the two-faced variant in
/// [`crate::twofaces`] handles higher genus.
pub fn explore(map: &RootedMap) -> Result<ExplorationData, ExploreError> {
    let genus = map.genus();
    if genus != 0 {
        return Err(ExploreError::GenusNotZero(genus));
    }
    let n_darts = map.n_darts();
    let root_face = map.root_face();
    let mut data = ExplorationData {
        corner_label: vec![usize::MAX; n_darts],
        discoveries: Vec::with_capacity(map.n_faces() - usize::from(n_darts > 0)),
        face_parent: BTreeMap::new(),
        vertex_first_corner: BTreeMap::new(),
        vertex_last_corner: BTreeMap::new(),
        entered_by: BTreeMap::new(),
        root_face,
    };
    let root = match map.root_dart() {
        Some(r) => r,
        None => return Ok(data),
    };

    let mut face_visited: BTreeMap<FaceId, ()> = BTreeMap::new();
    face_visited.insert(root_face, ());
    let mut opened = vec![false; map.n_edges()];
    let mut x = root;
    for label in 0..n_darts {
        debug_assert_eq!(data.corner_label[x], usize::MAX, "dart visited twice");
        data.corner_label[x] = label;
        let v = map.vertex_of(x);
        data.vertex_first_corner.entry(v).or_insert(x);
        data.vertex_last_corner.insert(v, x);

        let across = map.face_of(map.alpha(x));
        let next = if opened[x >> 1] {
            // return crossing of an opened edge
            map.sigma(x)
        } else if !face_visited.contains_key(&across) {
            let rank = data.discoveries.len();
            data.discoveries.push(Discovery {
                dart: x,
                vertex: v,
                left_face: map.face_of(x),
                entered_face: across,
            });
            data.face_parent.insert(across, map.face_of(x));
            data.entered_by.insert(across, rank);
            face_visited.insert(across, ());
            opened[x >> 1] = true;
            map.sigma(x)
        } else {
            map.face_next(x)
        };
        if label + 1 < n_darts {
            debug_assert_ne!(next, root, "tour closed early");
        }
        x = next;
    }
    assert_eq!(x, root, "tour must end at the root dart");
    assert_eq!(data.discoveries.len() + 1, map.n_faces());
    // terminal half of the root corner: last corner of the root vertex
    data.vertex_last_corner.insert(map.vertex_of(root), root);
    Ok(data)
}

/// The discovery entering the face that the given discovery leaves, or `None`
/// if it leaves the root face.
pub fn previous_discovery(
    expl: &ExplorationData,
    rank: usize,
) -> Result<Option<usize>, ExploreError> {
    let disc = expl.discoveries.get(rank).ok_or(ExploreError::BadRank {
        rank,
        count: expl.discoveries.len(),
    })?;
    if disc.left_face == expl.root_face {
        return Ok(None);
    }
    Ok(Some(expl.entered_by[&disc.left_face]))
}

/// A discovery is disconnecting when the corner preceding it and the last
/// corner around its vertex lie in the same face. Splitting the map there
/// separates it in two.
pub fn is_disconnecting(
    map: &RootedMap,
    expl: &ExplorationData,
    rank: usize,
) -> Result<bool, ExploreError> {
    let disc = expl.discoveries.get(rank).ok_or(ExploreError::BadRank {
        rank,
        count: expl.discoveries.len(),
    })?;
    let last = expl.last_corner_dart(disc.vertex);
    Ok(map.face_of(disc.dart) == map.face_of(last))
}

/// Serializable view of an exploration, for the `apply --op explore` output.
#[derive(Serialize)]
pub struct ExplorationReport {
    pub corner_labels: Vec<usize>,
    pub discoveries: Vec<DiscoveryReport>,
    pub face_parent: BTreeMap<usize, usize>,
}

#[derive(Serialize)]
pub struct DiscoveryReport {
    pub rank: usize,
    pub dart: Dart,
    pub vertex: usize,
    pub left_face: usize,
    pub entered_face: usize,
}

impl ExplorationData {
    pub fn report(&self) -> ExplorationReport {
        ExplorationReport {
            corner_labels: self.corner_label.clone(),
            discoveries: self
                .discoveries
                .iter()
                .enumerate()
                .map(|(rank, d)| DiscoveryReport {
                    rank,
                    dart: d.dart,
                    vertex: d.vertex.0,
                    left_face: d.left_face.0,
                    entered_face: d.entered_face.0,
                })
                .collect(),
            face_parent: self
                .face_parent
                .iter()
                .map(|(k, v)| (k.0, v.0))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn loop_map() -> RootedMap {
        RootedMap::build(1, vec![1, 0], Some(0)).unwrap()
    }

    /// One vertex, two nested loops: sigma = (0 1 2 3), planar with 3 faces.
    fn double_loop() -> RootedMap {
        RootedMap::build(2, vec![1, 2, 3, 0], Some(0)).unwrap()
    }

    #[test]
    fn tree_has_no_discoveries() {
        let e = RootedMap::build(1, vec![0, 1], Some(0)).unwrap();
        let expl = explore(&e).unwrap();
        assert!(expl.discoveries.is_empty());
        assert_eq!(expl.corner_label, vec![0, 1]);
    }

    #[test]
    fn loop_map_tour() {
        let m = loop_map();
        let expl = explore(&m).unwrap();
        assert_eq!(expl.corner_label, vec![0, 1]);
        assert_eq!(expl.discoveries.len(), 1);
        let d = expl.discoveries[0];
        assert_eq!(d.dart, 0);
        assert_eq!(d.vertex, m.root_vertex());
        assert_eq!(d.left_face, m.root_face());
        // discovery leaves the root face, hence disconnecting
        assert!(is_disconnecting(&m, &expl, 0).unwrap());
        assert_eq!(previous_discovery(&expl, 0).unwrap(), None);
    }

    #[test]
    fn double_loop_tour() {
        let m = double_loop();
        assert_eq!((m.n_vertices(), m.n_faces(), m.genus()), (1, 3, 0));
        let expl = explore(&m).unwrap();
        assert_eq!(expl.discoveries.len(), 2);
        assert_eq!(expl.corner_label, vec![0, 1, 2, 3]);
        assert_eq!(expl.discoveries[0].dart, 0);
        assert_eq!(expl.discoveries[1].dart, 2);
        // both leave the root face
        for rank in 0..2 {
            assert_eq!(previous_discovery(&expl, rank).unwrap(), None);
            assert!(is_disconnecting(&m, &expl, rank).unwrap());
        }
    }

    #[test]
    fn nested_loops_chain_previous_discovery() {
        // loop inside a loop: vertex cycle (0 2 3 1); edge 0 outer, edge 1 inner
        let m = RootedMap::build(2, vec![2, 0, 3, 1], Some(0)).unwrap();
        assert_eq!((m.n_vertices(), m.n_faces(), m.genus()), (1, 3, 0));
        let expl = explore(&m).unwrap();
        assert_eq!(expl.discoveries.len(), 2);
        let inner = 1;
        let prev = previous_discovery(&expl, inner).unwrap();
        assert_eq!(prev, Some(0));
        // a previous discovery enters the face the query leaves
        assert_eq!(
            expl.discoveries[0].entered_face,
            expl.discoveries[inner].left_face
        );
    }

    #[test]
    fn genus_one_is_rejected() {
        let torus = RootedMap::build(2, vec![2, 3, 1, 0], Some(0)).unwrap();
        assert_eq!(explore(&torus).unwrap_err(), ExploreError::GenusNotZero(1));
    }

    #[test]
    fn bad_rank_is_reported() {
        let expl = explore(&loop_map()).unwrap();
        assert!(matches!(
            previous_discovery(&expl, 5),
            Err(ExploreError::BadRank { rank: 5, count: 1 })
        ));
    }
}
