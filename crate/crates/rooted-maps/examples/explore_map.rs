//! The clockwise exploration of a planar map: corner labels, discoveries,
//! the previous-discovery relation and the disconnecting test.
//!
//! ```bash
//! cargo run --example explore_map
//! ```

use rooted_maps::codec;
use rooted_maps::explore::{explore, is_disconnecting, previous_discovery};
use rooted_maps::map::RootedMap;

fn main() {
    // one vertex carrying two nested loops: three faces, two discoveries
    let map = RootedMap::build(2, vec![2, 0, 3, 1], Some(0)).unwrap();
    println!("{}", codec::encode(&map, &[]));
    println!(
        "v = {}, f = {}, genus = {}",
        map.n_vertices(),
        map.n_faces(),
        map.genus()
    );

    let expl = explore(&map).unwrap();
    println!("corner labels (corner preceding each dart): {:?}", expl.corner_label);
    for (rank, disc) in expl.discoveries.iter().enumerate() {
        println!(
            "discovery {rank}: dart {} at vertex {:?}, leaves face {:?}, enters face {:?}",
            disc.dart, disc.vertex, disc.left_face, disc.entered_face
        );
        match previous_discovery(&expl, rank).unwrap() {
            Some(prev) => println!("  previous discovery: {prev}"),
            None => println!("  leaves the outer face, no previous discovery"),
        }
        println!(
            "  disconnecting: {}",
            is_disconnecting(&map, &expl, rank).unwrap()
        );
    }

    // the face tree is the DFS tree of the dual with right-first priority
    println!("face parents: {:?}", expl.face_parent);
}
