//! The cut-and-slide bijection, leaf retraction, edge contraction and the
//! generalized Rémy bijection, each paired with its exact inverse.
//!
//! All operations are pure: they take maps with marks and produce fresh maps
//! with marks. Internally they work on a loose representation whose darts
//! keep their parent labels while vertices are cut apart and edges re-paired;
//! the result is packed back into a dense [`RootedMap`].

use std::collections::BTreeMap;

use thiserror::Error;

use crate::explore::{explore, is_disconnecting, previous_discovery, ExplorationData, ExploreError};
use crate::loose::{map_slot, Loose};
use crate::map::{CornerSlot, Dart, MarkError, RootedMap, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BijectionError {
    #[error(transparent)]
    Explore(#[from] ExploreError),
    #[error(transparent)]
    BadMark(#[from] MarkError),
    #[error("the discovery at this rank is not disconnecting")]
    NotDisconnecting,
    #[error("the marked leaf does not lie in the outer face")]
    LeafNotInOuterFace,
    #[error("mark does not reference a leaf")]
    MarkNotLeaf,
    #[error("map is not precubic")]
    NotPrecubic,
    #[error("the leaf's neighbor cannot be retracted")]
    DegenerateNeighbor,
    #[error("the last son precedes the marked vertex; the last edge is a discovery")]
    LastSonPrecedes,
    #[error("the marked vertex is a leaf")]
    MarkIsLeaf,
    #[error("operation requires at least one edge")]
    EmptyMap,
}

type Result<T> = std::result::Result<T, BijectionError>;

// --- splitting at a disconnecting discovery -------------------------------

/// Output of the splitting operation and of cut-and-slide: `m1` keeps the
/// original root and carries a marked vertex (`None` for the vertex map),
/// `m2` carries a marked leaf.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutSlideResult {
    pub m1: RootedMap,
    pub m1_vertex: Option<Dart>,
    pub m2: RootedMap,
    pub m2_leaf: Dart,
}

struct SplitPieces {
    loose: Loose,
    /// The severed discovery dart, now a degree-1 vertex.
    leaf: Dart,
    /// Root dart for `m2`: the first dart of the `v2` arc.
    m2_root: Dart,
    /// First dart of the `v1` arc (`None` when the marked vertex is empty).
    v1_first: Option<Dart>,
}

/// Cuts the discovery vertex into the three pieces `v1`, `v2`, `v3`.
///
/// Around the vertex clockwise: the discovery dart `d` becomes the lone dart
/// of `v3`; the darts strictly between `d` and the last-corner dart `l` form
/// `v2`; the rest, beginning at `l`, forms `v1`.
fn split_vertex(map: &RootedMap, expl: &ExplorationData, rank: usize) -> Result<SplitPieces> {
    if !is_disconnecting(map, expl, rank)? {
        return Err(BijectionError::NotDisconnecting);
    }
    let disc = expl.discoveries[rank];
    let d = disc.dart;
    let l = expl.last_corner_dart(disc.vertex);
    let cycle = map.vertex_cycle(d);
    let mut loose = Loose::of(map);
    let (v2_arc, v1_arc): (&[Dart], &[Dart]) = if l == d {
        // only for a discovery at the root dart itself; the marked vertex is empty
        debug_assert_eq!(map.root_dart(), Some(d));
        (&cycle[1..], &[])
    } else {
        let pos = cycle.iter().position(|&x| x == l).expect("l on the cycle");
        (&cycle[1..pos], &cycle[pos..])
    };
    assert!(
        !v2_arc.is_empty(),
        "a disconnecting discovery always leaves a nonempty root piece for m2"
    );
    loose.set_cycle(&[d]);
    loose.set_cycle(v2_arc);
    loose.set_cycle(v1_arc);
    Ok(SplitPieces {
        loose,
        leaf: d,
        m2_root: v2_arc[0],
        v1_first: v1_arc.first().copied(),
    })
}

fn assemble_cut_slide(map: &RootedMap, pieces: SplitPieces) -> (CutSlideResult, BTreeMap<Dart, Dart>) {
    let m2_component = pieces.loose.component(pieces.leaf);
    assert!(m2_component.contains(&pieces.m2_root));
    let (m2, map2) = pieces.loose.pack(pieces.m2_root);
    let (m1, m1_vertex) = match pieces.v1_first {
        None => {
            assert_eq!(m2_component.len(), map.n_darts(), "empty marked vertex");
            (Loose::pack_empty(), None)
        }
        Some(v1) => {
            assert!(!m2_component.contains(&v1), "split did not disconnect");
            let root = map.root_dart().expect("nonempty map");
            assert!(
                !m2_component.contains(&root),
                "the original root must stay in m1"
            );
            let (m1, map1) = pieces.loose.pack(root);
            assert_eq!(m1.n_darts() + m2.n_darts(), map.n_darts());
            (m1, Some(map1[&v1]))
        }
    };
    let result = CutSlideResult {
        m1,
        m1_vertex,
        m2_leaf: map2[&pieces.leaf],
        m2,
    };
    assert_eq!(
        result.m1.n_edges() + result.m2.n_edges(),
        map.n_edges(),
        "edge conservation"
    );
    assert_eq!(
        result.m1.n_faces() + result.m2.n_faces(),
        map.n_faces(),
        "face conservation"
    );
    (result, map2)
}

/// Splits a map at a disconnecting discovery into a map with a marked vertex
/// and a map with a marked leaf in its outer face.
pub fn split_at_disconnecting(map: &RootedMap, rank: usize) -> Result<CutSlideResult> {
    let expl = explore(map)?;
    let pieces = split_vertex(map, &expl, rank)?;
    let (result, _) = assemble_cut_slide(map, pieces);
    debug_assert_eq!(
        result.m2.face_of(result.m2_leaf),
        result.m2.root_face(),
        "the marked leaf of a plain split lies in the outer face"
    );
    Ok(result)
}

/// Inverse of [`split_at_disconnecting`]: glues the leaf map back into the
/// marked vertex. Returns the rebuilt map and the rank of the re-created
/// (disconnecting) discovery.
pub fn unsplit(
    m1: &RootedMap,
    m1_vertex: Option<Dart>,
    m2: &RootedMap,
    m2_leaf: Dart,
) -> Result<(RootedMap, usize)> {
    let (map, rank, _) = unsplit_with_mapping(m1, m1_vertex, m2, m2_leaf)?;
    Ok((map, rank))
}

fn unsplit_with_mapping(
    m1: &RootedMap,
    m1_vertex: Option<Dart>,
    m2: &RootedMap,
    m2_leaf: Dart,
) -> Result<(RootedMap, usize, BTreeMap<Dart, Dart>)> {
    crate::map::Mark::Leaf(m2_leaf).validate(m2)?;
    if m2.face_of(m2_leaf) != m2.root_face() {
        return Err(BijectionError::LeafNotInOuterFace);
    }
    let offset = m1.n_darts();
    let mut loose = Loose::of(m1);
    loose.absorb(Loose::of_shifted(m2, offset));
    let b = m2_leaf + offset;
    let r2 = m2.root_dart().expect("m2 has the leaf edge") + offset;
    // arc of m2's root vertex opened at its first corner (the root corner)
    let w2_arc: Vec<Dart> = m2.vertex_cycle(r2 - offset).iter().map(|d| d + offset).collect();
    // arc of the marked vertex opened at its last corner
    let (w1_arc, root): (Vec<Dart>, Dart) = match m1_vertex {
        None => {
            if m1.n_darts() > 0 {
                return Err(MarkError::ImplicitOnNonEmpty.into());
            }
            (Vec::new(), b)
        }
        Some(v_dart) => {
            let expl1 = explore(m1)?;
            let lw = expl1.last_corner_dart(m1.vertex_of(v_dart));
            (m1.vertex_cycle(lw), m1.root_dart().expect("nonempty m1"))
        }
    };
    let mut merged = vec![b];
    merged.extend(&w2_arc);
    merged.extend(&w1_arc);
    loose.set_cycle(&merged);
    let component = loose.component(root);
    assert_eq!(component.len(), loose.succ.len(), "gluing must connect everything");
    let (map, mapping) = loose.pack(root);
    let expl = explore(&map)?;
    let packed_b = mapping[&b];
    let rank = expl
        .discoveries
        .iter()
        .position(|disc| disc.dart == packed_b)
        .expect("the glued edge is a discovery at its leaf-side dart");
    assert!(is_disconnecting(&map, &expl, rank)?);
    Ok((map, rank, mapping))
}

// --- cut and slide ---------------------------------------------------------

/// The cut-and-slide bijection at a marked discovery.
///
/// Walks the previous-discovery chain until a disconnecting discovery, splits
/// there, and slides: the opened edges are re-matched one step along the
/// chain and the freed dart becomes the marked leaf.
pub fn cut_and_slide(map: &RootedMap, rank: usize) -> Result<CutSlideResult> {
    let expl = explore(map)?;
    if rank >= expl.discovery_count() {
        return Err(ExploreError::BadRank {
            rank,
            count: expl.discovery_count(),
        }
        .into());
    }
    let mut chain = vec![rank];
    while !is_disconnecting(map, &expl, *chain.last().unwrap())? {
        let prev = previous_discovery(&expl, *chain.last().unwrap())?
            .expect("a non-disconnecting discovery never leaves the root face");
        chain.push(prev);
    }
    let darts: Vec<Dart> = chain.iter().map(|&r| expl.discoveries[r].dart).collect();
    let k = darts.len() - 1;
    let mut pieces = split_vertex(map, &expl, chain[k])?;
    // slide: bud i is matched with stem i+1, the freed dart hangs off stem 0
    for i in 0..=k {
        pieces.loose.pair(darts[i], map.alpha(darts[(i + 1) % (k + 1)]));
    }
    let (result, map2) = assemble_cut_slide(map, pieces);
    check_closure_chain(&result.m2, &darts, &map2, map);
    Ok(result)
}

/// Post-condition from the slide: the re-closed edges are discoveries of
/// `m2`, each the previous discovery of the one before, the last leaving the
/// outer face.
fn check_closure_chain(
    m2: &RootedMap,
    chain_darts: &[Dart],
    map2: &BTreeMap<Dart, Dart>,
    original: &RootedMap,
) {
    let k = chain_darts.len() - 1;
    if k == 0 {
        return;
    }
    let _ = original;
    let expl2 = explore(m2).expect("m2 is planar");
    let mut ranks = Vec::with_capacity(k);
    for &bud in &chain_darts[..k] {
        let packed = map2[&bud];
        let rank = expl2
            .discoveries
            .iter()
            .position(|disc| disc.dart == packed)
            .expect("every re-closed edge is a discovery, bud side");
        ranks.push(rank);
    }
    for i in 0..k {
        let prev = previous_discovery(&expl2, ranks[i]).expect("valid rank");
        if i + 1 < k {
            assert_eq!(prev, Some(ranks[i + 1]), "closure chain must link up");
        } else {
            assert_eq!(prev, None, "last closure leaves the outer face");
        }
    }
}

/// Inverse of [`cut_and_slide`].
pub fn cut_and_slide_inverse(
    m1: &RootedMap,
    m1_vertex: Option<Dart>,
    m2: &RootedMap,
    m2_leaf: Dart,
) -> Result<(RootedMap, usize)> {
    crate::map::Mark::Leaf(m2_leaf).validate(m2)?;
    let expl2 = explore(m2)?;
    let leaf_face = m2.face_of(m2_leaf);
    if leaf_face == m2.root_face() {
        let (map, rank, _) = unsplit_with_mapping(m1, m1_vertex, m2, m2_leaf)?;
        return Ok((map, rank));
    }
    // open the discovery entering the leaf's face, then its previous
    // discovery, and so on up to the root face
    let mut chain = vec![expl2
        .entering_discovery(leaf_face)
        .expect("non-root face has an entering discovery")];
    while let Some(prev) = previous_discovery(&expl2, *chain.last().unwrap())? {
        chain.push(prev);
    }
    let deltas: Vec<Dart> = chain.iter().map(|&r| expl2.discoveries[r].dart).collect();
    let m = deltas.len() - 1;
    // re-match one step backwards along the chain; the old leaf dart becomes
    // the new stem tip and the last stem becomes the marked leaf
    let mut loose = Loose::of(m2);
    loose.pair(deltas[0], m2.alpha(m2_leaf));
    for i in 1..=m {
        loose.pair(deltas[i], m2.alpha(deltas[i - 1]));
    }
    loose.pair(m2_leaf, m2.alpha(deltas[m]));
    let r2 = m2.root_dart().expect("m2 has edges");
    assert_eq!(loose.component(r2).len(), m2.n_darts());
    let (m2_star, map_star) = loose.pack(r2);
    let leaf_star = map_star[&m2_leaf];
    assert_eq!(
        m2_star.face_of(leaf_star),
        m2_star.root_face(),
        "after re-closure the marked leaf lies in the outer face"
    );
    let (map, rank, mapping) = unsplit_with_mapping(m1, m1_vertex, &m2_star, leaf_star)?;
    // the marked edge comes from the closure of the old leaf's stem
    let expl = explore(&map)?;
    let offset = m1.n_darts();
    let marked_dart = mapping[&(map_star[&deltas[0]] + offset)];
    let final_rank = expl
        .discoveries
        .iter()
        .position(|disc| disc.dart >> 1 == marked_dart >> 1)
        .expect("the marked edge is a discovery of the rebuilt map");
    // the chain of re-closed edges ends at the disconnecting discovery `rank`
    let mut r = final_rank;
    let mut walked = vec![r];
    while let Some(prev) = previous_discovery(&expl, r)? {
        if is_disconnecting(&map, &expl, r)? {
            break;
        }
        r = prev;
        walked.push(r);
    }
    assert!(walked.contains(&rank));
    Ok((map, final_rank))
}

// --- leaf retraction and expansion ----------------------------------------

/// Removes a marked leaf, marking the corner where its edge was attached.
pub fn leaf_retract(map: &RootedMap, leaf: Dart) -> Result<(RootedMap, Option<CornerSlot>)> {
    crate::map::Mark::Leaf(leaf).validate(map).map_err(|_| BijectionError::MarkNotLeaf)?;
    let a = map.alpha(leaf);
    let root = map.root_dart().expect("map with a leaf has edges");
    if map.degree_of(map.vertex_of(a)) == 1 {
        // the neighbor is a degree-1 vertex, so this is the edge map
        assert_eq!(a, root);
        return Ok((RootedMap::vertex_map(), None));
    }
    let q = map.sigma(a);
    let (new_root, slot) = if a == root {
        (q, CornerSlot::Before(q))
    } else if q == root {
        (root, CornerSlot::RootLeft)
    } else {
        (root, CornerSlot::Before(q))
    };
    let mut loose = Loose::of(map);
    let mut cycle = map.vertex_cycle(a);
    cycle.retain(|&d| d != a);
    loose.set_cycle(&cycle);
    loose.remove_dart(a);
    loose.remove_dart(leaf);
    let (packed, mapping) = loose.pack(new_root);
    assert_eq!(packed.n_edges() + 1, map.n_edges());
    assert_eq!(packed.n_faces(), map.n_faces());
    Ok((packed, Some(map_slot(slot, &mapping))))
}

/// Grows a pendant edge at a corner slot; the new vertex is the marked leaf.
/// Expanding at `Before(root)` puts the new dart after the root arrow, so it
/// becomes the root.
pub fn leaf_expand(map: &RootedMap, slot: Option<CornerSlot>) -> Result<(RootedMap, Dart)> {
    match (map.n_darts(), slot) {
        (0, None) => {
            let edge = RootedMap::build(1, vec![0, 1], Some(0)).expect("edge map");
            Ok((edge, 1))
        }
        (0, Some(_)) | (_, None) => Err(MarkError::ImplicitOnNonEmpty.into()),
        (_, Some(slot)) => {
            let root = map.root_dart().expect("nonempty");
            let (x, y) = (map.n_darts(), map.n_darts() + 1);
            let mut loose = Loose::of(map);
            let before = match slot {
                CornerSlot::Before(q) => q,
                CornerSlot::RootLeft => root,
            };
            if before >= map.n_darts() {
                return Err(MarkError::DartOutOfRange(before).into());
            }
            let p = map.sigma_inv(before);
            loose.succ.insert(p, x);
            loose.succ.insert(x, before);
            loose.set_cycle(&[y]);
            loose.pair(x, y);
            let new_root = if slot == CornerSlot::Before(root) { x } else { root };
            let (packed, mapping) = loose.pack(new_root);
            Ok((packed, mapping[&y]))
        }
    }
}

// --- precubic leaf retraction ----------------------------------------------

/// Retracts a marked leaf of a precubic map, losing two edges: the leaf and
/// its degree-3 neighbor disappear and the neighbor's two remaining edges
/// merge into one, whose side toward the former leaf is marked.
pub fn precubic_leaf_retract(map: &RootedMap, leaf: Dart) -> Result<(RootedMap, Dart)> {
    if !map.family().is_precubic {
        return Err(BijectionError::NotPrecubic);
    }
    crate::map::Mark::Leaf(leaf).validate(map).map_err(|_| BijectionError::MarkNotLeaf)?;
    let a = map.alpha(leaf);
    if map.degree_of(map.vertex_of(a)) != 3 {
        return Err(BijectionError::DegenerateNeighbor);
    }
    let x = map.sigma(a);
    let y = map.sigma(x);
    if map.alpha(x) == y {
        // the two surviving edges are one loop; no merge target exists
        return Err(BijectionError::DegenerateNeighbor);
    }
    let mut loose = Loose::of(map);
    let toward_leaf = map.alpha(y);
    loose.pair(map.alpha(x), toward_leaf);
    for d in [leaf, a, x, y] {
        loose.remove_dart(d);
    }
    let root = map.root_dart().expect("precubic maps have edges");
    let (packed, mapping) = loose.pack(root);
    if !packed.family().is_precubic {
        return Err(BijectionError::DegenerateNeighbor);
    }
    assert_eq!(packed.n_edges() + 2, map.n_edges());
    Ok((packed, mapping[&toward_leaf]))
}

/// Inverse of [`precubic_leaf_retract`]: cuts the marked side's edge in two,
/// inserts a degree-3 vertex and hangs a new leaf on the marked side.
pub fn precubic_leaf_expand(map: &RootedMap, side: Dart) -> Result<(RootedMap, Dart)> {
    if !map.family().is_precubic {
        return Err(BijectionError::NotPrecubic);
    }
    if side >= map.n_darts() {
        return Err(MarkError::DartOutOfRange(side).into());
    }
    let m = map.alpha(side);
    let base = map.n_darts();
    let (p1, p3, p2, b) = (base, base + 1, base + 2, base + 3);
    let mut loose = Loose::of(map);
    loose.set_cycle(&[p1, p3, p2]);
    loose.set_cycle(&[b]);
    loose.pair(side, p1);
    loose.pair(m, p2);
    loose.pair(p3, b);
    let root = map.root_dart().expect("precubic maps have edges");
    let (packed, mapping) = loose.pack(root);
    debug_assert!(packed.family().is_precubic);
    Ok((packed, mapping[&b]))
}

// --- contraction and growing ----------------------------------------------

fn marked_vertex(map: &RootedMap, mark: Option<Dart>) -> Result<VertexId> {
    match mark {
        Some(d) if d < map.n_darts() => Ok(map.vertex_of(d)),
        Some(d) => Err(MarkError::DartOutOfRange(d).into()),
        None if map.n_darts() == 0 => Err(BijectionError::EmptyMap),
        None => Err(MarkError::ImplicitOnNonEmpty.into()),
    }
}

fn is_leaf(map: &RootedMap, v: VertexId) -> bool {
    map.degree_of(v) == 1 && v != map.root_vertex()
}

/// The dart of the last edge around `v`: the edge just before the last
/// corner in clockwise order.
fn last_edge_dart(map: &RootedMap, expl: &ExplorationData, v: VertexId) -> Dart {
    map.sigma_inv(expl.last_corner_dart(v))
}

/// Contracts the last edge around the marked non-leaf vertex, merging it with
/// its last son. Only valid when the last son is a distinct vertex seen after
/// the marked one; otherwise the last edge is a discovery and cut-and-slide
/// applies instead.
pub fn contract_last_edge(
    map: &RootedMap,
    mark: Option<Dart>,
) -> Result<(RootedMap, Option<CornerSlot>)> {
    let v = marked_vertex(map, mark)?;
    if is_leaf(map, v) {
        return Err(BijectionError::MarkIsLeaf);
    }
    let expl = explore(map)?;
    let d_e = last_edge_dart(map, &expl, v);
    let a = map.alpha(d_e);
    let son = map.vertex_of(a);
    if son == v || expl.first_label(son) < expl.first_label(v) {
        return Err(BijectionError::LastSonPrecedes);
    }
    // c'' (the corner before `a`) is the last corner around the son
    debug_assert_eq!(expl.last_corner_dart(son), a);
    let root = map.root_dart().expect("nonempty");
    let son_arc: Vec<Dart> = map.vertex_cycle(a)[1..].to_vec();
    let mut v_rest: Vec<Dart> = map.vertex_cycle(d_e)[1..].to_vec();
    let mut merged = son_arc.clone();
    merged.append(&mut v_rest);
    let mut loose = Loose::of(map);
    loose.set_cycle(&merged);
    loose.remove_dart(d_e);
    loose.remove_dart(a);
    if merged.is_empty() {
        // contracting the edge map: both endpoints vanish
        assert_eq!(map.n_edges(), 1);
        return Ok((RootedMap::vertex_map(), None));
    }
    let slot = match son_arc.first() {
        Some(&w1) => CornerSlot::Before(w1),
        // empty son arc at the root vertex: the merged corner sits just
        // before the arrow
        None if v == map.root_vertex() => CornerSlot::RootLeft,
        None => CornerSlot::Before(expl.last_corner_dart(v)),
    };
    let new_root = if d_e == root {
        // degree-1 root vertex: the dart after the arrow is now the son's first
        son_arc[0]
    } else {
        root
    };
    let (packed, mapping) = loose.pack(new_root);
    assert_eq!(packed.n_edges() + 1, map.n_edges());
    assert_eq!(packed.n_faces(), map.n_faces());
    Ok((packed, Some(map_slot(slot, &mapping))))
}

/// Inverse of [`contract_last_edge`]: grows an edge at the marked corner,
/// splitting the vertex there. The piece keeping the corner side becomes the
/// marked vertex; the darts from the slot to the last corner become its last
/// son.
pub fn grow_edge(map: &RootedMap, slot: Option<CornerSlot>) -> Result<(RootedMap, Option<Dart>)> {
    let slot = match (map.n_darts(), slot) {
        (0, None) => {
            let edge = RootedMap::build(1, vec![0, 1], Some(0)).expect("edge map");
            return Ok((edge, Some(0)));
        }
        (0, Some(_)) | (_, None) => return Err(MarkError::ImplicitOnNonEmpty.into()),
        (_, Some(slot)) => slot,
    };
    let expl = explore(map)?;
    let root = map.root_dart().expect("nonempty");
    let v_star = match slot {
        CornerSlot::Before(d) if d < map.n_darts() => map.vertex_of(d),
        CornerSlot::Before(d) => return Err(MarkError::DartOutOfRange(d).into()),
        CornerSlot::RootLeft => map.root_vertex(),
    };
    let last_slot = if v_star == map.root_vertex() {
        CornerSlot::RootLeft
    } else {
        CornerSlot::Before(expl.last_corner_dart(v_star))
    };
    let (x, y) = (map.n_darts(), map.n_darts() + 1);
    let mut loose = Loose::of(map);
    loose.pair(x, y);
    let (marked_dart, new_root);
    if slot == last_slot {
        // the grown son is a leaf hanging at the last corner
        let before = match slot {
            CornerSlot::Before(q) => q,
            CornerSlot::RootLeft => root,
        };
        let p = map.sigma_inv(before);
        loose.succ.insert(p, x);
        loose.succ.insert(x, before);
        loose.set_cycle(&[y]);
        marked_dart = x;
        new_root = if slot == CornerSlot::Before(root) { x } else { root };
    } else {
        // darts from the marked slot up to the last corner become the son
        let seq_start = match slot {
            CornerSlot::Before(q) => q,
            CornerSlot::RootLeft => root,
        };
        let after_c = match last_slot {
            CornerSlot::Before(q) => q,
            CornerSlot::RootLeft => root,
        };
        let seq = map.vertex_cycle(seq_start);
        let cut = if slot == CornerSlot::Before(root) && last_slot == CornerSlot::RootLeft {
            // from the right half of the root corner all the way round
            seq.len()
        } else {
            seq.iter().position(|&t| t == after_c).expect("same vertex")
        };
        let (arc, rest) = seq.split_at(cut);
        let mut son = vec![y];
        son.extend_from_slice(arc);
        let mut kept = vec![x];
        kept.extend_from_slice(rest);
        loose.set_cycle(&son);
        loose.set_cycle(&kept);
        marked_dart = x;
        new_root = if v_star == map.root_vertex() {
            if rest.contains(&root) {
                root
            } else {
                x
            }
        } else {
            root
        };
    }
    let (packed, mapping) = loose.pack(new_root);
    assert_eq!(packed.n_edges(), map.n_edges() + 1);
    assert_eq!(packed.n_faces(), map.n_faces());
    let packed_mark = mapping[&marked_dart];
    // after growing, the marked vertex is seen before its last son
    let expl_new = explore(&packed)?;
    let v = packed.vertex_of(packed_mark);
    let son_dart = packed.alpha(last_edge_dart(&packed, &expl_new, v));
    let son = packed.vertex_of(son_dart);
    debug_assert!(son == v || expl_new.first_label(v) < expl_new.first_label(son));
    Ok((packed, Some(packed_mark)))
}

// --- the generalized Rémy bijection ----------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RemyTag {
    LeafRetraction,
    NodeContraction,
}

/// Image of the generalized Rémy bijection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RemyResult {
    /// One edge fewer, faces preserved, a marked corner. The tag remembers
    /// which of the two retractions produced it.
    Corner {
        map: RootedMap,
        slot: Option<CornerSlot>,
        tag: RemyTag,
    },
    /// Two maps with a marked vertex each; edges sum to `n - 1`.
    Pair {
        m1: RootedMap,
        m1_vertex: Option<Dart>,
        m2: RootedMap,
        m2_vertex: Option<Dart>,
    },
}

/// Removes a marked leaf and marks the neighbor vertex it hung from.
fn retract_leaf_to_vertex(map: &RootedMap, leaf: Dart) -> Result<(RootedMap, Option<Dart>)> {
    crate::map::Mark::Leaf(leaf).validate(map).map_err(|_| BijectionError::MarkNotLeaf)?;
    let a = map.alpha(leaf);
    if map.degree_of(map.vertex_of(a)) == 1 {
        assert_eq!(map.n_edges(), 1);
        return Ok((RootedMap::vertex_map(), None));
    }
    let root = map.root_dart().expect("nonempty");
    let new_root = if a == root { map.sigma(a) } else { root };
    let keep = map.sigma(a); // a surviving dart of the neighbor
    let mut cycle = map.vertex_cycle(a);
    cycle.retain(|&d| d != a);
    let mut loose = Loose::of(map);
    loose.set_cycle(&cycle);
    loose.remove_dart(a);
    loose.remove_dart(leaf);
    let (packed, mapping) = loose.pack(new_root);
    Ok((packed, Some(mapping[&keep])))
}

/// The generalized Rémy bijection at a marked non-leaf vertex.
///
/// If the last son is seen after the marked vertex, the last edge is
/// contracted (corner case). Otherwise that edge is a discovery and the
/// cut-and-slide applies; the marked leaf of the second map is then retracted
/// onto its neighbor, leaving a pair of vertex-marked maps.
pub fn remy_forward(map: &RootedMap, mark: Option<Dart>) -> Result<RemyResult> {
    let v = marked_vertex(map, mark)?;
    if is_leaf(map, v) {
        return Err(BijectionError::MarkIsLeaf);
    }
    let expl = explore(map)?;
    let d_e = last_edge_dart(map, &expl, v);
    let son = map.vertex_of(map.alpha(d_e));
    if son != v && expl.first_label(son) > expl.first_label(v) {
        let (packed, slot) = contract_last_edge(map, mark)?;
        return Ok(RemyResult::Corner {
            map: packed,
            slot,
            tag: RemyTag::NodeContraction,
        });
    }
    // the last edge is a discovery
    let rank = expl
        .discoveries
        .iter()
        .position(|disc| disc.dart >> 1 == d_e >> 1)
        .expect("a preceding or equal last son makes the last edge a discovery");
    let cs = cut_and_slide(map, rank)?;
    // the marked leaf of m2 is the last son of its neighbor; retract it
    let expl2 = explore(&cs.m2)?;
    let neighbor = cs.m2.vertex_of(cs.m2.alpha(cs.m2_leaf));
    debug_assert_eq!(
        last_edge_dart(&cs.m2, &expl2, neighbor) >> 1,
        cs.m2.alpha(cs.m2_leaf) >> 1,
        "the slid leaf is the last son of its neighbor"
    );
    let (m2r, m2_vertex) = retract_leaf_to_vertex(&cs.m2, cs.m2_leaf)?;
    Ok(RemyResult::Pair {
        m1: cs.m1,
        m1_vertex: cs.m1_vertex,
        m2: m2r,
        m2_vertex,
    })
}

/// Exact inverse of [`remy_forward`] (for the `LeafRetraction` tag, of the
/// composed leaf bijection).
pub fn remy_inverse(result: &RemyResult) -> Result<(RootedMap, Option<Dart>)> {
    match result {
        RemyResult::Corner { map, slot, tag } => match tag {
            RemyTag::LeafRetraction => {
                let (packed, leaf) = leaf_expand(map, *slot)?;
                Ok((packed, Some(leaf)))
            }
            RemyTag::NodeContraction => grow_edge(map, *slot),
        },
        RemyResult::Pair {
            m1,
            m1_vertex,
            m2,
            m2_vertex,
        } => {
            // grow the leaf back at the last corner of the marked vertex
            let slot = match m2_vertex {
                None => None,
                Some(d) => {
                    let expl2 = explore(m2)?;
                    let w = m2.vertex_of(*d);
                    Some(if w == m2.root_vertex() {
                        CornerSlot::RootLeft
                    } else {
                        CornerSlot::Before(expl2.last_corner_dart(w))
                    })
                }
            };
            let (m2e, leaf) = leaf_expand(m2, slot)?;
            let (map, rank) = cut_and_slide_inverse(m1, *m1_vertex, &m2e, leaf)?;
            let expl = explore(&map)?;
            let disc_dart = expl.discoveries[rank].dart;
            // the marked vertex is the endpoint whose last edge this is,
            // with its last son not after it in the exploration
            let mut candidates = Vec::new();
            for d in [disc_dart, map.alpha(disc_dart)] {
                let u = map.vertex_of(d);
                if is_leaf(&map, u) {
                    continue;
                }
                if last_edge_dart(&map, &expl, u) >> 1 != d >> 1 {
                    continue;
                }
                let other = map.vertex_of(map.alpha(last_edge_dart(&map, &expl, u)));
                if other == u || expl.first_label(other) < expl.first_label(u) {
                    candidates.push(u);
                }
            }
            candidates.dedup();
            assert_eq!(candidates.len(), 1, "the marked endpoint is unique");
            Ok((map, Some(candidates[0].0)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn loop_map() -> RootedMap {
        RootedMap::build(1, vec![1, 0], Some(0)).unwrap()
    }

    fn edge_map() -> RootedMap {
        RootedMap::build(1, vec![0, 1], Some(0)).unwrap()
    }

    #[test]
    fn splitting_the_loop() {
        let result = split_at_disconnecting(&loop_map(), 0).unwrap();
        assert_eq!(result.m1, RootedMap::vertex_map());
        assert_eq!(result.m1_vertex, None);
        assert_eq!(result.m2.canonical_code(), edge_map().canonical_code());
        assert!(result.m2.degree_of(result.m2.vertex_of(result.m2_leaf)) == 1);
    }

    #[test]
    fn unsplitting_rebuilds_the_loop() {
        let result = split_at_disconnecting(&loop_map(), 0).unwrap();
        let (map, rank) = unsplit(&result.m1, result.m1_vertex, &result.m2, result.m2_leaf).unwrap();
        assert_eq!(map.canonical_code(), loop_map().canonical_code());
        assert_eq!(rank, 0);
    }

    #[test]
    fn cut_and_slide_on_the_loop_equals_split() {
        let a = split_at_disconnecting(&loop_map(), 0).unwrap();
        let b = cut_and_slide(&loop_map(), 0).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn cut_and_slide_round_trip_nested_loops() {
        // nested loops: the inner discovery is not disconnecting
        let m = RootedMap::build(2, vec![2, 0, 3, 1], Some(0)).unwrap();
        let expl = explore(&m).unwrap();
        assert!(!is_disconnecting(&m, &expl, 1).unwrap());
        let cs = cut_and_slide(&m, 1).unwrap();
        assert_eq!(cs.m1.n_edges() + cs.m2.n_edges(), 2);
        let (back, rank) = cut_and_slide_inverse(&cs.m1, cs.m1_vertex, &cs.m2, cs.m2_leaf).unwrap();
        assert_eq!(back.canonical_code(), m.canonical_code());
        assert_eq!(rank, 1);
    }

    #[test]
    fn leaf_retract_edge_map() {
        let (m, slot) = leaf_retract(&edge_map(), 1).unwrap();
        assert_eq!(m, RootedMap::vertex_map());
        assert_eq!(slot, None);
        let (back, leaf) = leaf_expand(&m, slot).unwrap();
        assert_eq!(back.canonical_code(), edge_map().canonical_code());
        assert_eq!(leaf, 1);
    }

    #[test]
    fn leaf_expand_slots_of_the_edge_map_are_distinct() {
        // 2n + 1 = 3 corners: behind the far end, both halves of the root corner
        let e = edge_map();
        let slots = [
            Some(CornerSlot::Before(1)),
            Some(CornerSlot::Before(0)),
            Some(CornerSlot::RootLeft),
        ];
        let mut seen = Vec::new();
        for slot in slots {
            let (m, leaf) = leaf_expand(&e, slot).unwrap();
            assert_eq!(m.n_edges(), 2);
            let (back, slot_back) = leaf_retract(&m, leaf).unwrap();
            assert_eq!(back.canonical_code(), e.canonical_code());
            assert_eq!(slot_back, slot);
            seen.push((m.canonical_code(), leaf));
        }
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 3);
    }

    #[test]
    fn contract_edge_map_root_vertex() {
        let (m, slot) = contract_last_edge(&edge_map(), Some(0)).unwrap();
        assert_eq!(m, RootedMap::vertex_map());
        assert_eq!(slot, None);
        let (back, mark) = grow_edge(&m, slot).unwrap();
        assert_eq!(back.canonical_code(), edge_map().canonical_code());
        assert_eq!(mark, Some(0));
    }

    #[test]
    fn contract_rejects_discovery_case() {
        // marked root vertex of the loop: the last edge is the loop itself
        assert_eq!(
            contract_last_edge(&loop_map(), Some(0)).unwrap_err(),
            BijectionError::LastSonPrecedes
        );
    }

    #[test]
    fn remy_on_the_loop_gives_two_vertex_maps() {
        let result = remy_forward(&loop_map(), Some(0)).unwrap();
        match result {
            RemyResult::Pair {
                m1,
                m1_vertex,
                m2,
                m2_vertex,
            } => {
                assert_eq!(m1, RootedMap::vertex_map());
                assert_eq!(m2, RootedMap::vertex_map());
                assert_eq!(m1_vertex, None);
                assert_eq!(m2_vertex, None);
            }
            other => panic!("expected a pair, got {other:?}"),
        }
    }

    #[test]
    fn remy_on_the_edge_map_contracts() {
        let result = remy_forward(&edge_map(), Some(0)).unwrap();
        match &result {
            RemyResult::Corner { map, slot, tag } => {
                assert_eq!(map, &RootedMap::vertex_map());
                assert_eq!(*slot, None);
                assert_eq!(*tag, RemyTag::NodeContraction);
            }
            other => panic!("expected a corner case, got {other:?}"),
        }
        let (back, mark) = remy_inverse(&result).unwrap();
        assert_eq!(back.canonical_code(), edge_map().canonical_code());
        assert_eq!(back.vertex_of(mark.unwrap()), back.root_vertex());
    }

    #[test]
    fn remy_round_trip_on_the_loop() {
        let result = remy_forward(&loop_map(), Some(0)).unwrap();
        let (back, mark) = remy_inverse(&result).unwrap();
        assert_eq!(back.canonical_code(), loop_map().canonical_code());
        assert_eq!(mark, Some(0));
    }

    #[test]
    fn remy_rejects_marked_leaves() {
        assert_eq!(
            remy_forward(&edge_map(), Some(1)).unwrap_err(),
            BijectionError::MarkIsLeaf
        );
    }
}
