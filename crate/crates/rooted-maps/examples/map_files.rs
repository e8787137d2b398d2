//! The map file format: a line-oriented text codec for maps with marks.
//!
//! ```bash
//! cargo run --example map_files
//! ```

use rooted_maps::codec::{decode, encode};
use rooted_maps::map::{CornerSlot, Mark, RootedMap};

fn main() {
    let text = "\
# a pendant edge plus a loop on its far vertex
map v1
edges 2
root 0
sigma 0 2 3 1
mark discovery 0
";
    let (map, marks) = decode(text).unwrap();
    println!(
        "decoded: {} edges, {} vertices, {} faces, genus {}, marks {marks:?}",
        map.n_edges(),
        map.n_vertices(),
        map.n_faces(),
        map.genus()
    );

    // corner marks address the 2n + 1 corner positions; the value 2n names
    // the half of the root corner before the arrow
    let edge = RootedMap::build(1, vec![0, 1], Some(0)).unwrap();
    for slot in [
        Mark::Corner(Some(CornerSlot::Before(1))),
        Mark::Corner(Some(CornerSlot::Before(0))),
        Mark::Corner(Some(CornerSlot::RootLeft)),
    ] {
        print!("{}", encode(&edge, &[slot]));
    }

    // parse errors carry line and column
    let err = decode("map v1\nedges 1\nroot 0\nsigma 1 oops\n").unwrap_err();
    println!("\nparse error demo: line {}, column {}: {}", err.line, err.col, err.msg);
}
