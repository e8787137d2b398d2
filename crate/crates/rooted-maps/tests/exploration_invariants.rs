//! Exploration invariants on every planar map with up to five edges:
//! discovery count, the clockwise corner order, the outer-face property of
//! last corners, and equality with an independently computed dual DFS tree.

use std::collections::BTreeMap;

use rooted_maps::enumerate::{enumerate_maps, EnumFilter};
use rooted_maps::explore::{explore, is_disconnecting, previous_discovery};
use rooted_maps::map::{FaceId, RootedMap};

fn planar_maps(n: usize) -> Vec<RootedMap> {
    enumerate_maps(n, &EnumFilter::planar(), None).unwrap()
}

#[test]
fn discovery_count_is_faces_minus_one() {
    for n in 0..=5 {
        for map in planar_maps(n) {
            let expl = explore(&map).unwrap();
            assert_eq!(expl.discovery_count() + 1, map.n_faces());
        }
    }
}

#[test]
fn corner_labels_are_a_bijection() {
    for n in 0..=5 {
        for map in planar_maps(n) {
            let expl = explore(&map).unwrap();
            let mut seen = vec![false; map.n_darts()];
            for &label in &expl.corner_label {
                assert!(label < map.n_darts());
                assert!(!seen[label]);
                seen[label] = true;
            }
        }
    }
}

/// Around each vertex, reading the corners clockwise from the first-visited
/// one yields strictly increasing labels.
#[test]
fn corner_order_agrees_with_clockwise_order() {
    for n in 1..=5 {
        for map in planar_maps(n) {
            let expl = explore(&map).unwrap();
            for cycle in map.vertices() {
                let labels: Vec<usize> = cycle.iter().map(|&d| expl.corner_label[d]).collect();
                let min_at = labels
                    .iter()
                    .enumerate()
                    .min_by_key(|(_, &l)| l)
                    .map(|(i, _)| i)
                    .unwrap();
                let rotated: Vec<usize> = (0..labels.len())
                    .map(|i| labels[(min_at + i) % labels.len()])
                    .collect();
                assert!(
                    rotated.windows(2).all(|w| w[0] < w[1]),
                    "labels {labels:?} out of clockwise order"
                );
            }
        }
    }
}

/// If a vertex has any corner in the root face, its last corner lies in the
/// root face.
#[test]
fn last_corners_of_outer_vertices_lie_in_the_outer_face() {
    for n in 1..=5 {
        for map in planar_maps(n) {
            let expl = explore(&map).unwrap();
            let outer = map.root_face();
            for cycle in map.vertices() {
                if cycle.iter().any(|&d| map.face_of(d) == outer) {
                    let v = map.vertex_of(cycle[0]);
                    let last = expl.last_corner_dart(v);
                    assert_eq!(map.face_of(last), outer);
                }
            }
        }
    }
}

/// Every discovery that leaves the root face is disconnecting.
#[test]
fn discoveries_leaving_the_outer_face_are_disconnecting() {
    for n in 1..=4 {
        for map in planar_maps(n) {
            let expl = explore(&map).unwrap();
            for rank in 0..expl.discovery_count() {
                if expl.discoveries[rank].left_face == map.root_face() {
                    assert!(is_disconnecting(&map, &expl, rank).unwrap());
                    assert_eq!(previous_discovery(&expl, rank).unwrap(), None);
                }
            }
        }
    }
}

/// Recursive right-first DFS of the dual graph, written independently of the
/// dart-level tour.
fn dual_dfs(map: &RootedMap) -> BTreeMap<FaceId, FaceId> {
    fn visit(
        map: &RootedMap,
        face: FaceId,
        entry: usize,
        parent: &mut BTreeMap<FaceId, FaceId>,
        visited: &mut Vec<FaceId>,
    ) {
        let mut d = entry;
        loop {
            let neighbor = map.face_of(map.alpha(d));
            if !visited.contains(&neighbor) {
                visited.push(neighbor);
                parent.insert(neighbor, face);
                visit(map, neighbor, map.sigma(d), parent, visited);
            }
            d = map.face_next(d);
            if d == entry {
                break;
            }
        }
    }
    let mut parent = BTreeMap::new();
    if let Some(root) = map.root_dart() {
        let root_face = map.root_face();
        let mut visited = vec![root_face];
        visit(map, root_face, root, &mut parent, &mut visited);
    }
    parent
}

#[test]
fn face_parent_equals_the_dual_dfs_tree() {
    for n in 0..=5 {
        for map in planar_maps(n) {
            let expl = explore(&map).unwrap();
            assert_eq!(expl.face_parent, dual_dfs(&map));
        }
    }
}

/// The previous discovery enters the face the given one leaves.
#[test]
fn previous_discovery_matches_the_face_tree() {
    for n in 1..=4 {
        for map in planar_maps(n) {
            let expl = explore(&map).unwrap();
            for rank in 0..expl.discovery_count() {
                match previous_discovery(&expl, rank).unwrap() {
                    None => assert_eq!(expl.discoveries[rank].left_face, map.root_face()),
                    Some(prev) => assert_eq!(
                        expl.discoveries[prev].entered_face,
                        expl.discoveries[rank].left_face
                    ),
                }
            }
        }
    }
}

/// Applying the dual twice gives back the original map, on every rooted map
/// with up to four edges, and the dual swaps face and vertex counts.
#[test]
fn dual_is_involutive_on_all_small_maps() {
    for n in 0..=4 {
        for map in enumerate_maps(n, &EnumFilter::default(), None).unwrap() {
            let dual = map.dual();
            assert_eq!(dual.n_vertices(), map.n_faces());
            assert_eq!(dual.n_faces(), map.n_vertices());
            assert_eq!(dual.genus(), map.genus());
            assert_eq!(
                dual.dual().canonical_code(),
                map.canonical_code(),
                "dual of dual at n = {n}"
            );
        }
    }
}

/// Planar counts are self-dual: as many maps with f faces as with
/// n + 2 - f faces, for every n <= 5, straight from enumeration.
#[test]
fn planar_counts_are_self_dual() {
    for n in 0..=5usize {
        let mut by_faces = std::collections::BTreeMap::new();
        for map in planar_maps(n) {
            *by_faces.entry(map.n_faces()).or_insert(0usize) += 1;
        }
        for (&f, &count) in &by_faces {
            assert_eq!(
                by_faces.get(&(n + 2 - f)),
                Some(&count),
                "n = {n}, f = {f}"
            );
        }
    }
}
