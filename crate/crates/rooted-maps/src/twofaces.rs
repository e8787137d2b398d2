//! Two-faced precubic maps of arbitrary genus: the canonical corner
//! labelling, trisections and special vertices, splitting at a special
//! vertex, tripods and their gluings.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::loose::Loose;
use crate::map::{Dart, FaceId, MarkError, RootedMap, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TwoFaceError {
    #[error("map has {0} faces, expected exactly 2")]
    NotTwoFaced(usize),
    #[error("map is not precubic")]
    NotPrecubic,
    #[error("no canonical labelling: map is neither unicellular nor two-faced precubic")]
    NoLabeling,
    #[error("vertex is not special")]
    NotSpecial,
    #[error("the root-face decomposition is unavailable")]
    DecompositionUnavailable,
    #[error(transparent)]
    BadMark(#[from] MarkError),
}

type Result<T> = std::result::Result<T, TwoFaceError>;

/// Corner labelling of a two-faced precubic map of any genus, obtained by
/// opening the unique discovery and touring the resulting one-faced
/// blossoming map.
#[derive(Clone, Debug)]
pub struct TwoFaceExploration {
    /// Label of the corner preceding each dart.
    pub corner_label: Vec<usize>,
    /// The unique edge adjacent to both faces that the root-face tour meets
    /// first, recorded by its dart in the root face.
    pub discovery_dart: Dart,
    pub discovery_vertex: VertexId,
    root_dart: Dart,
}

impl TwoFaceExploration {
    /// Clockwise corner labels around a vertex, starting at its smallest
    /// dart. For the root vertex the terminal corner label `2n` is included
    /// in its slot before the root arrow.
    pub fn corner_cycle(&self, map: &RootedMap, v: VertexId) -> Vec<usize> {
        corner_cycle(map, &self.corner_label, self.root_dart, v)
    }
}

fn corner_cycle(map: &RootedMap, labels: &[usize], root: Dart, v: VertexId) -> Vec<usize> {
    if v == map.vertex_of(root) {
        let mut out: Vec<usize> = map.vertex_cycle(root).iter().map(|&d| labels[d]).collect();
        out.push(map.n_darts());
        out
    } else {
        map.vertex_cycle(v.0).iter().map(|&d| labels[d]).collect()
    }
}

/// Runs the two-faced exploration: finds the discovery on a clockwise tour of
/// the root face and labels every corner along the opened (unicellular) map.
pub fn explore_two_faced(map: &RootedMap) -> Result<TwoFaceExploration> {
    if !map.family().is_precubic {
        return Err(TwoFaceError::NotPrecubic);
    }
    if map.n_faces() != 2 {
        return Err(TwoFaceError::NotTwoFaced(map.n_faces()));
    }
    let root = map.root_dart().expect("two faces need edges");
    let root_face = map.root_face();
    // first edge adjacent to both faces on the root-face tour
    let mut delta = root;
    loop {
        if map.face_of(map.alpha(delta)) != root_face {
            break;
        }
        delta = map.face_next(delta);
        assert_ne!(delta, root, "a two-faced map has an interface edge");
    }
    let corner_label = blossom_labels(map, Some(delta));
    let discovery_vertex = map.vertex_of(delta);
    assert_eq!(
        map.degree_of(discovery_vertex),
        3,
        "the discovery vertex of a precubic map has degree 3"
    );
    Ok(TwoFaceExploration {
        corner_label,
        discovery_dart: delta,
        discovery_vertex,
        root_dart: root,
    })
}

/// Tour of the single face of the map opened at `delta` (or of the map
/// itself when it is already unicellular). At the two sides of the opened
/// edge the tour walks around the dangling half-edge instead of crossing.
fn blossom_labels(map: &RootedMap, delta: Option<Dart>) -> Vec<usize> {
    let root = map.root_dart().expect("nonempty map");
    let mut labels = vec![usize::MAX; map.n_darts()];
    let mut x = root;
    for label in 0..map.n_darts() {
        assert_eq!(labels[x], usize::MAX, "tour closed early");
        labels[x] = label;
        x = match delta {
            Some(d) if x == d || x == map.alpha(d) => map.sigma(x),
            _ => map.face_next(x),
        };
    }
    assert_eq!(x, root);
    labels
}

/// Corner labelling of a unicellular map of any genus: the tour of its
/// single face.
pub fn unicellular_labels(map: &RootedMap) -> Result<Vec<usize>> {
    if map.n_faces() != 1 || map.n_darts() == 0 {
        return Err(TwoFaceError::NoLabeling);
    }
    Ok(blossom_labels(map, None))
}

/// Vertices whose corner labels run counterclockwise, one entry per
/// offending corner: corners whose clockwise successor has a smaller label,
/// the maximal corner of each vertex excepted. Leaves never qualify.
///
/// Works on unicellular maps of any genus and on two-faced precubic maps
/// (through their opened labelling).
pub fn find_trisections(map: &RootedMap) -> Result<Vec<VertexId>> {
    let labels = if map.n_faces() == 1 && map.n_darts() > 0 {
        unicellular_labels(map)?
    } else if map.n_faces() == 2 && map.family().is_precubic {
        explore_two_faced(map)?.corner_label
    } else {
        return Err(TwoFaceError::NoLabeling);
    };
    let root = map.root_dart().expect("nonempty map");
    let mut out = Vec::new();
    for cycle in map.vertices() {
        let v = map.vertex_of(cycle[0]);
        let seq = corner_cycle(map, &labels, root, v);
        let max_at = seq
            .iter()
            .enumerate()
            .max_by_key(|(_, &l)| l)
            .map(|(i, _)| i)
            .unwrap();
        for i in 0..seq.len() {
            if i != max_at && seq[i] > seq[(i + 1) % seq.len()] {
                out.push(v);
            }
        }
    }
    Ok(out)
}

/// The trisections together with the discovery vertex; a two-faced precubic
/// map of genus `g` has exactly `2g + 1` of them.
pub fn special_vertices(map: &RootedMap) -> Result<Vec<VertexId>> {
    let expl = explore_two_faced(map)?;
    let trisections = find_trisections(map)?;
    assert!(
        !trisections.contains(&expl.discovery_vertex),
        "the discovery vertex is never a trisection"
    );
    let mut out = vec![expl.discovery_vertex];
    out.extend(trisections);
    Ok(out)
}

/// Result of splitting a special vertex into three leaves.
#[derive(Clone, Debug)]
pub enum SplitSpecial {
    /// The split disconnected the map (only at the discovery vertex): two
    /// unicellular precubic maps, each carrying a marked leaf; `m1` keeps
    /// the original root, `m2` is rooted at the severed dart that followed
    /// the discovery dart.
    Pair {
        m1: RootedMap,
        m1_leaf: Dart,
        m2: RootedMap,
        m2_leaf: Dart,
    },
    /// The map stayed connected: genus dropped by one and the three severed
    /// darts are marked leaves.
    Tripod(Tripod),
}

/// A two-faced precubic map with three marked leaves, remembering which of
/// the two gluings restores the map it was split from.
#[derive(Clone, Debug)]
pub struct Tripod {
    pub map: RootedMap,
    /// The three leaf darts, sorted.
    pub leaves: [Dart; 3],
    /// Gluing index that re-creates the split vertex.
    pub restoring_gluing: usize,
}

/// Splits a two-faced precubic map at a special vertex: each of its three
/// darts becomes a leaf.
pub fn split_at_special(map: &RootedMap, v: VertexId) -> Result<SplitSpecial> {
    let expl = explore_two_faced(map)?;
    let specials = special_vertices(map)?;
    if !specials.contains(&v) {
        return Err(TwoFaceError::NotSpecial);
    }
    let cycle = map.vertex_cycle(v.0);
    assert_eq!(cycle.len(), 3);
    let mut loose = Loose::of(map);
    for &d in &cycle {
        loose.set_cycle(&[d]);
    }
    let root = map.root_dart().expect("nonempty");
    let root_component = loose.component(root);
    if root_component.len() == map.n_darts() {
        // still connected: a tripod of genus g - 1
        let (packed, mapping) = loose.pack(root);
        assert_eq!(packed.genus() + 1, map.genus(), "genus drops by one");
        assert_eq!(packed.n_faces(), 2, "still two-faced");
        assert!(packed.family().is_precubic);
        let glued_cycle: Vec<Dart> = cycle.iter().map(|&d| mapping[&d]).collect();
        let mut leaves = [glued_cycle[0], glued_cycle[1], glued_cycle[2]];
        leaves.sort_unstable();
        let restoring_gluing = usize::from(!cyclic_eq(&gluing_cycle(&leaves, 0), &glued_cycle));
        debug_assert!(cyclic_eq(
            &gluing_cycle(&leaves, restoring_gluing),
            &glued_cycle
        ));
        return Ok(SplitSpecial::Tripod(Tripod {
            map: packed,
            leaves,
            restoring_gluing,
        }));
    }
    // disconnected: the planar-style split at the discovery vertex
    assert_eq!(
        v, expl.discovery_vertex,
        "only the discovery vertex disconnects"
    );
    let delta = expl.discovery_dart;
    let in_root: Vec<Dart> = cycle
        .iter()
        .copied()
        .filter(|d| root_component.contains(d))
        .collect();
    assert_eq!(in_root.len(), 1, "the root side keeps one severed leaf");
    let (m1, map1) = loose.pack(root);
    let m1_leaf = map1[&in_root[0]];
    assert!(
        !root_component.contains(&delta),
        "the discovery dart goes to m2"
    );
    // m2 is rooted at the severed dart that is not the discovery dart
    let m2_root = cycle
        .iter()
        .copied()
        .find(|&d| d != delta && !root_component.contains(&d))
        .expect("the remaining severed dart");
    let (m2, map2) = loose.pack(m2_root);
    let m2_leaf = map2[&delta];
    for m in [&m1, &m2] {
        assert!(m.family().is_precubic);
        assert_eq!(m.n_faces(), 1, "the pieces are unicellular");
    }
    assert_eq!(m1.genus() + m2.genus(), map.genus());
    assert_eq!(m1.n_edges() + m2.n_edges(), map.n_edges());
    Ok(SplitSpecial::Pair {
        m1,
        m1_leaf,
        m2,
        m2_leaf,
    })
}

/// Inverse of the disconnecting case of [`split_at_special`]: glues two
/// unicellular precubic maps, each with a marked leaf, into a two-faced
/// precubic map whose discovery vertex is the glued degree-3 vertex.
///
/// The three darts merge clockwise as (m2's leaf dart, m2's root dart, m1's
/// leaf dart), undoing the split partition; the result keeps m1's root.
pub fn glue_pair(
    m1: &RootedMap,
    m1_leaf: Dart,
    m2: &RootedMap,
    m2_leaf: Dart,
) -> Result<RootedMap> {
    crate::map::Mark::Leaf(m1_leaf).validate(m1)?;
    crate::map::Mark::Leaf(m2_leaf).validate(m2)?;
    let offset = m1.n_darts();
    let mut loose = Loose::of(m1);
    loose.absorb(Loose::of_shifted(m2, offset));
    let r2 = m2.root_dart().expect("m2 has its leaf edge") + offset;
    loose.set_cycle(&[m2_leaf + offset, r2, m1_leaf]);
    let root = m1.root_dart().expect("m1 has its leaf edge");
    let (packed, mapping) = loose.pack(root);
    assert_eq!(packed.n_faces(), 2, "gluing merges the pieces' faces into two");
    assert_eq!(packed.genus(), m1.genus() + m2.genus());
    assert!(packed.family().is_precubic);
    let expl = explore_two_faced(&packed)?;
    assert_eq!(
        expl.discovery_vertex,
        packed.vertex_of(mapping[&(m2_leaf + offset)]),
        "the glued vertex is the discovery vertex"
    );
    Ok(packed)
}

fn gluing_cycle(leaves: &[Dart; 3], gluing: usize) -> Vec<Dart> {
    match gluing {
        0 => vec![leaves[0], leaves[1], leaves[2]],
        _ => vec![leaves[0], leaves[2], leaves[1]],
    }
}

fn cyclic_eq(a: &[Dart], b: &[Dart]) -> bool {
    a.len() == b.len()
        && (0..a.len()).any(|shift| (0..a.len()).all(|i| a[(i + shift) % a.len()] == b[i]))
}

/// Glues the three marked leaves of a tripod into one degree-3 vertex, in one
/// of the two cyclic orders. The gluing is valid when the genus rises by one
/// and the new vertex is special in the result.
pub fn glue_tripod(
    tripod: &RootedMap,
    leaves: &[Dart; 3],
    gluing: usize,
) -> Result<(RootedMap, bool, VertexId)> {
    for &leaf in leaves {
        crate::map::Mark::Leaf(leaf).validate(tripod)?;
    }
    let mut loose = Loose::of(tripod);
    loose.set_cycle(&gluing_cycle(leaves, gluing));
    let root = tripod.root_dart().expect("nonempty");
    let (packed, mapping) = loose.pack(root);
    let glued = packed.vertex_of(mapping[&leaves[0]]);
    let valid = packed.genus() == tripod.genus() + 1
        && packed.n_faces() == 2
        && special_vertices(&packed)
            .map(|s| s.contains(&glued))
            .unwrap_or(false);
    Ok((packed, valid, glued))
}

/// Number of valid gluings of a tripod, by trying both.
pub fn valid_gluing_count(tripod: &RootedMap, leaves: &[Dart; 3]) -> Result<usize> {
    let mut count = 0;
    for gluing in 0..2 {
        let (_, valid, _) = glue_tripod(tripod, leaves, gluing)?;
        count += usize::from(valid);
    }
    Ok(count)
}

/// Where a leaf corner sits in the decomposition `F = T v O v T-bar` of the
/// tripod's root face around its own discovery vertex.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RootFaceRegion {
    OtherFace,
    T,
    O,
    TBar,
}

/// Predicted number of valid gluings of a tripod.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TripodClass {
    /// All leaves in one face, two leaves in `O`, or the special case.
    OneGluing,
    /// Exactly one leaf in the root face.
    TwoGluings,
    /// Two leaves in the root face touching `T` or `T-bar`, special case
    /// excepted.
    ZeroGluings,
}

impl TripodClass {
    pub fn count(self) -> usize {
        match self {
            TripodClass::OneGluing => 1,
            TripodClass::TwoGluings => 2,
            TripodClass::ZeroGluings => 0,
        }
    }
}

/// The tripod's root face as a word of side-edges starting at the root corner.
fn root_face_word(map: &RootedMap) -> Vec<Dart> {
    let root = map.root_dart().expect("nonempty");
    let mut word = vec![root];
    let mut d = map.face_next(root);
    while d != root {
        word.push(d);
        d = map.face_next(d);
    }
    word
}

/// Splits the tripod's root face word at the two corners of its discovery
/// vertex and locates each leaf.
pub fn leaf_regions(tripod: &RootedMap, leaves: &[Dart; 3]) -> Result<Vec<RootFaceRegion>> {
    let expl = explore_two_faced(tripod)?;
    let root_face = tripod.root_face();
    let word = root_face_word(tripod);
    let v_positions: Vec<usize> = word
        .iter()
        .enumerate()
        .filter(|(_, &s)| tripod.vertex_of(s) == expl.discovery_vertex)
        .map(|(i, _)| i)
        .collect();
    if v_positions.len() != 2 {
        return Err(TwoFaceError::DecompositionUnavailable);
    }
    let (i1, i2) = (v_positions[0], v_positions[1]);
    let region_of = |leaf: Dart| {
        if tripod.face_of(leaf) != root_face {
            return RootFaceRegion::OtherFace;
        }
        let p = word
            .iter()
            .position(|&s| s == leaf)
            .expect("leaf side in face");
        if p < i1 {
            RootFaceRegion::T
        } else if p < i2 {
            RootFaceRegion::O
        } else {
            RootFaceRegion::TBar
        }
    };
    Ok(leaves.iter().map(|&b| region_of(b)).collect())
}

/// Special-case predicate for a tripod whose two root-face leaves lie in
/// `T-bar`: gluing those two leaves splits the root face; the tripod is in
/// the special case when no side-edge of the face so obtained has its
/// opposite side in `T`.
fn is_special_case(tripod: &RootedMap, pair: [Dart; 2]) -> bool {
    let expl = match explore_two_faced(tripod) {
        Ok(e) => e,
        Err(_) => return false,
    };
    let root = tripod.root_dart().expect("nonempty");
    let root_face = tripod.root_face();
    let word = root_face_word(tripod);
    let first_v = word
        .iter()
        .position(|&s| tripod.vertex_of(s) == expl.discovery_vertex)
        .expect("discovery vertex on the root face");
    let t_segment: Vec<Dart> = word[..first_v].to_vec();
    // glue the two leaves into a degree-2 vertex; this splits the root face
    let mut loose = Loose::of(tripod);
    loose.set_cycle(&pair);
    let (glued, mapping) = loose.pack(root);
    if glued.n_faces() != 3 {
        return false;
    }
    let new_root_face = glued.root_face();
    let old_other: FaceId = {
        // the untouched face keeps its darts; identify it through any of them
        let other_dart = (0..tripod.n_darts())
            .find(|&s| tripod.face_of(s) != root_face)
            .expect("two faces");
        glued.face_of(mapping[&other_dart])
    };
    let f_prime = glued
        .faces()
        .into_iter()
        .find(|cycle| {
            let id = glued.face_of(cycle[0]);
            id != new_root_face && id != old_other
        })
        .expect("the root face split in two");
    let t_new: Vec<Dart> = t_segment.iter().map(|s| mapping[s]).collect();
    f_prime.iter().all(|&s| !t_new.contains(&glued.alpha(s)))
}

/// Predicts the number of valid gluings from the leaf placement alone.
pub fn classify_tripod(tripod: &RootedMap, leaves: &[Dart; 3]) -> Result<TripodClass> {
    let regions = leaf_regions(tripod, leaves)?;
    let in_root: Vec<(Dart, RootFaceRegion)> = leaves
        .iter()
        .zip(&regions)
        .filter(|(_, &r)| r != RootFaceRegion::OtherFace)
        .map(|(&b, &r)| (b, r))
        .collect();
    Ok(match in_root.len() {
        0 | 3 => TripodClass::OneGluing,
        1 => TripodClass::TwoGluings,
        2 => {
            let (a, b) = (in_root[0], in_root[1]);
            if a.1 == RootFaceRegion::O && b.1 == RootFaceRegion::O {
                TripodClass::OneGluing
            } else if a.1 == RootFaceRegion::TBar
                && b.1 == RootFaceRegion::TBar
                && is_special_case(tripod, [a.0, b.0])
            {
                TripodClass::OneGluing
            } else {
                TripodClass::ZeroGluings
            }
        }
        _ => unreachable!(),
    })
}

/// All 3-subsets of the leaves of a map, as sorted dart triples.
pub fn leaf_triples(map: &RootedMap) -> Vec<[Dart; 3]> {
    let root = map.root_vertex();
    let leaves: Vec<Dart> = map
        .vertices()
        .iter()
        .filter(|c| c.len() == 1 && map.vertex_of(c[0]) != root)
        .map(|c| c[0])
        .collect();
    let mut out = Vec::new();
    for i in 0..leaves.len() {
        for j in i + 1..leaves.len() {
            for k in j + 1..leaves.len() {
                out.push([leaves[i], leaves[j], leaves[k]]);
            }
        }
    }
    out
}

/// Aggregates over all tripods drawn from a family of maps.
#[derive(Clone, Debug, Default)]
pub struct TripodCensus {
    /// Histogram of valid-gluing counts.
    pub by_gluings: BTreeMap<usize, usize>,
    pub classifier_agreements: usize,
    pub classifier_mismatches: usize,
    /// Total number of (tripod, valid gluing) pairs.
    pub valid_gluing_pairs: usize,
}

/// Classifies and brute-forces every tripod drawn from the given maps.
pub fn census_tripods(maps: &[RootedMap]) -> Result<TripodCensus> {
    let mut census = TripodCensus::default();
    for map in maps {
        for leaves in leaf_triples(map) {
            let count = valid_gluing_count(map, &leaves)?;
            *census.by_gluings.entry(count).or_default() += 1;
            census.valid_gluing_pairs += count;
            match classify_tripod(map, &leaves) {
                Ok(class) if class.count() == count => census.classifier_agreements += 1,
                Ok(_) | Err(_) => census.classifier_mismatches += 1,
            }
        }
    }
    Ok(census)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{enumerate_maps, EnumFilter, Family};

    fn two_faced_precubic(n: usize, genus: Option<usize>) -> Vec<RootedMap> {
        let filter = EnumFilter {
            faces: Some(2),
            genus,
            family: Family::Precubic,
            ..Default::default()
        };
        enumerate_maps(n, &filter, None).unwrap()
    }

    /// Root vertex joined to a degree-3 vertex carrying a loop.
    fn lollipop() -> RootedMap {
        RootedMap::build(2, vec![0, 2, 3, 1], Some(0)).unwrap()
    }

    #[test]
    fn lollipop_exploration() {
        let m = lollipop();
        assert!(m.family().is_precubic);
        assert_eq!(m.n_faces(), 2);
        let expl = explore_two_faced(&m).unwrap();
        assert_eq!(expl.discovery_dart, 2);
        assert_eq!(expl.discovery_vertex, m.vertex_of(1));
        assert_eq!(expl.corner_label, vec![0, 3, 1, 2]);
    }

    #[test]
    fn planar_two_faced_has_one_special_vertex() {
        for n in [2usize, 4, 6] {
            for map in two_faced_precubic(n, Some(0)) {
                let specials = special_vertices(&map).unwrap();
                assert_eq!(specials.len(), 1, "2g + 1 at genus 0");
                assert_eq!(find_trisections(&map).unwrap().len(), 0);
            }
        }
    }

    #[test]
    fn unicellular_trisection_count_is_twice_the_genus() {
        for n in 1..=6usize {
            for map in enumerate_maps(n, &EnumFilter::with_faces(1), None).unwrap() {
                let trisections = find_trisections(&map).unwrap();
                assert_eq!(trisections.len(), 2 * map.genus(), "n={n}");
            }
        }
    }

    #[test]
    fn splitting_the_lollipop_discovery_vertex_disconnects() {
        let m = lollipop();
        let v = special_vertices(&m).unwrap()[0];
        match split_at_special(&m, v).unwrap() {
            SplitSpecial::Pair { m1, m2, .. } => {
                assert_eq!(m1.n_faces(), 1);
                assert_eq!(m2.n_faces(), 1);
                assert_eq!(m1.n_edges() + m2.n_edges(), 2);
            }
            SplitSpecial::Tripod(_) => panic!("genus 0 split cannot keep the map connected"),
        }
    }

    #[test]
    fn non_special_vertices_are_rejected() {
        let m = lollipop();
        let root = m.root_vertex();
        assert_eq!(
            split_at_special(&m, root).unwrap_err(),
            TwoFaceError::NotSpecial
        );
    }

    #[test]
    fn smallest_genus_one_two_faced_instances() {
        let maps = two_faced_precubic(8, Some(1));
        assert!(
            !maps.is_empty(),
            "genus-1 two-faced precubic maps exist at n = 8"
        );
        for map in &maps {
            let specials = special_vertices(map).unwrap();
            assert_eq!(specials.len(), 3, "2g + 1 = 3");
            assert_eq!(find_trisections(map).unwrap().len(), 2);
        }
    }

    #[test]
    fn split_then_glue_restores_genus_one_maps() {
        for map in two_faced_precubic(8, Some(1)) {
            for v in special_vertices(&map).unwrap() {
                match split_at_special(&map, v).unwrap() {
                    SplitSpecial::Tripod(tripod) => {
                        let (glued, valid, _) =
                            glue_tripod(&tripod.map, &tripod.leaves, tripod.restoring_gluing)
                                .unwrap();
                        assert!(valid, "the restoring gluing is valid");
                        assert_eq!(glued.canonical_code(), map.canonical_code());
                    }
                    SplitSpecial::Pair { m1, m2, .. } => {
                        assert_eq!(v, explore_two_faced(&map).unwrap().discovery_vertex);
                        assert_eq!(m1.genus() + m2.genus(), 1);
                    }
                }
            }
        }
    }

    #[test]
    fn pair_split_and_glue_are_inverse() {
        for n in [2usize, 4, 6] {
            for map in two_faced_precubic(n, Some(0)) {
                let v = special_vertices(&map).unwrap()[0];
                if let SplitSpecial::Pair {
                    m1,
                    m1_leaf,
                    m2,
                    m2_leaf,
                } = split_at_special(&map, v).unwrap()
                {
                    let glued = glue_pair(&m1, m1_leaf, &m2, m2_leaf).unwrap();
                    assert_eq!(glued.canonical_code(), map.canonical_code());
                }
            }
        }
    }

    #[test]
    fn each_tripod_has_at_most_two_valid_gluings() {
        for map in two_faced_precubic(6, Some(0)) {
            for leaves in leaf_triples(&map) {
                let count = valid_gluing_count(&map, &leaves).unwrap();
                assert!(count <= 2);
            }
        }
    }

    #[test]
    fn classifier_matches_brute_force_on_small_tripods() {
        for n in [4usize, 6] {
            let maps = two_faced_precubic(n, Some(0));
            let census = census_tripods(&maps).unwrap();
            assert_eq!(census.classifier_mismatches, 0, "n={n}");
        }
    }
}
