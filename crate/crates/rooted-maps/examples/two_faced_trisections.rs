//! Two-faced precubic maps beyond the plane: trisections, special vertices,
//! splitting into tripods and gluing back.
//!
//! ```bash
//! cargo run --example two_faced_trisections
//! ```

use rooted_maps::enumerate::{enumerate_maps, EnumFilter, Family};
use rooted_maps::twofaces::{
    classify_tripod, explore_two_faced, find_trisections, glue_tripod, special_vertices,
    split_at_special, valid_gluing_count, SplitSpecial,
};

fn main() {
    // the smallest genus-1 two-faced precubic maps have 8 edges
    let filter = EnumFilter {
        faces: Some(2),
        genus: Some(1),
        family: Family::Precubic,
        ..Default::default()
    };
    let maps = enumerate_maps(8, &filter, None).unwrap();
    println!("genus-1 two-faced precubic maps with 8 edges: {}", maps.len());

    let map = &maps[0];
    let expl = explore_two_faced(map).unwrap();
    let trisections = find_trisections(map).unwrap();
    let specials = special_vertices(map).unwrap();
    println!(
        "first instance: discovery vertex {:?}, trisections {:?} (2g = 2), \
         special vertices {} (2g + 1 = 3)",
        expl.discovery_vertex,
        trisections,
        specials.len()
    );

    for v in specials {
        match split_at_special(map, v).unwrap() {
            SplitSpecial::Tripod(tripod) => {
                let class = classify_tripod(&tripod.map, &tripod.leaves).unwrap();
                let count = valid_gluing_count(&tripod.map, &tripod.leaves).unwrap();
                println!(
                    "split at {v:?}: a genus-{} tripod, classified {class:?}, \
                     {count} valid gluings by brute force",
                    tripod.map.genus()
                );
                let (glued, valid, _) =
                    glue_tripod(&tripod.map, &tripod.leaves, tripod.restoring_gluing).unwrap();
                assert!(valid);
                assert_eq!(glued.canonical_code(), map.canonical_code());
            }
            SplitSpecial::Pair { m1, m2, .. } => {
                println!(
                    "split at {v:?}: disconnects into unicellular pieces of genus {} and {}",
                    m1.genus(),
                    m2.genus()
                );
            }
        }
    }
    println!("every split glues back to the original map");
}
