//! The cut-and-slide bijection and its inverse, on a discovery that is not
//! disconnecting (so the slide actually re-matches opened edges).
//!
//! ```bash
//! cargo run --example cut_and_slide
//! ```

use rooted_maps::bijections::{cut_and_slide, cut_and_slide_inverse};
use rooted_maps::codec;
use rooted_maps::explore::{explore, is_disconnecting};
use rooted_maps::map::{Mark, RootedMap};

fn main() {
    // nested loops: the inner discovery does not disconnect, so the cut
    // walks the previous-discovery chain before splitting
    let map = RootedMap::build(2, vec![2, 0, 3, 1], Some(0)).unwrap();
    let expl = explore(&map).unwrap();
    let rank = 1;
    assert!(!is_disconnecting(&map, &expl, rank).unwrap());
    println!(
        "input map with marked discovery {rank}:\n{}",
        codec::encode(&map, &[Mark::Discovery(rank)])
    );

    let result = cut_and_slide(&map, rank).unwrap();
    println!(
        "first piece (keeps the root, marked vertex):\n{}",
        codec::encode(&result.m1, &[Mark::Vertex(result.m1_vertex)])
    );
    println!(
        "second piece (marked leaf):\n{}",
        codec::encode(&result.m2, &[Mark::Leaf(result.m2_leaf)])
    );
    println!(
        "edges {} + {} = {}, faces {} + {} = {}",
        result.m1.n_edges(),
        result.m2.n_edges(),
        map.n_edges(),
        result.m1.n_faces(),
        result.m2.n_faces(),
        map.n_faces()
    );

    let (rebuilt, back_rank) =
        cut_and_slide_inverse(&result.m1, result.m1_vertex, &result.m2, result.m2_leaf).unwrap();
    assert_eq!(rebuilt.canonical_code(), map.canonical_code());
    assert_eq!(back_rank, rank);
    println!("inverse rebuilds the original map with the same marked discovery");
}
