//! The generalized Rémy bijection: a marked vertex either contracts its last
//! edge (corner case) or cuts and slides at it (pair case), with exact
//! inverses.
//!
//! ```bash
//! cargo run --example remy_bijection
//! ```

use rooted_maps::bijections::{remy_forward, remy_inverse, RemyResult};
use rooted_maps::codec;
use rooted_maps::enumerate::{enumerate_maps, EnumFilter};
use rooted_maps::map::Mark;

fn main() {
    let mut corner_cases = 0;
    let mut pair_cases = 0;
    for map in enumerate_maps(3, &EnumFilter::planar(), None).unwrap() {
        for cycle in map.vertices() {
            let mark = Some(cycle[0]);
            let v = map.vertex_of(cycle[0]);
            if map.degree_of(v) == 1 && v != map.root_vertex() {
                continue; // leaves retract separately
            }
            let result = remy_forward(&map, mark).unwrap();
            match &result {
                RemyResult::Corner { .. } => corner_cases += 1,
                RemyResult::Pair { .. } => pair_cases += 1,
            }
            let (back, mark_back) = remy_inverse(&result).unwrap();
            assert_eq!(back.canonical_code(), map.canonical_code());
            assert_eq!(
                back.vertex_of(mark_back.unwrap()),
                map.vertex_of(cycle[0]),
                "the inverse restores the marked vertex"
            );
        }
    }
    println!(
        "marked non-leaf vertices of the 3-edge planar maps: \
         {corner_cases} contract, {pair_cases} cut and slide; all round trips exact"
    );

    // one pair case in detail: the loop map with its vertex marked
    let map = codec::decode("map v1\nedges 1\nroot 0\nsigma 1 0\n").unwrap().0;
    match remy_forward(&map, Some(0)).unwrap() {
        RemyResult::Pair {
            m1,
            m1_vertex,
            m2,
            m2_vertex,
        } => {
            println!(
                "\nloop map with marked vertex splits into:\n{}\nand:\n{}",
                codec::encode(&m1, &[Mark::Vertex(m1_vertex)]),
                codec::encode(&m2, &[Mark::Vertex(m2_vertex)])
            );
        }
        other => panic!("the loop's last edge is a discovery, got {other:?}"),
    }
}
