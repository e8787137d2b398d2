//! Exhaustive generation of rooted maps, with filters and grouped counts.
//!
//! ```bash
//! cargo run --example enumerate_maps
//! ```

use rooted_maps::enumerate::{count_maps, enumerate_maps, EnumFilter, Family, GroupBy};

fn main() {
    // every rooted map with up to 3 edges, split planar / higher genus
    for n in 0..=3 {
        let all = enumerate_maps(n, &EnumFilter::default(), None).unwrap();
        let planar = enumerate_maps(n, &EnumFilter::planar(), None).unwrap();
        println!(
            "n = {n}: {} rooted maps, {} of them planar",
            all.len(),
            planar.len()
        );
    }

    // the planar maps with 2 edges, by face count: 2 + 5 + 2 = 9
    println!("\nplanar maps with 2 edges, by number of faces:");
    let by_faces = count_maps(2, &EnumFilter::planar(), GroupBy::Faces, None).unwrap();
    for (key, count) in &by_faces {
        println!("  {key}: {count}");
    }

    // precubic maps (vertex degrees 1 or 3, root on a degree-1 vertex)
    println!("\nprecubic maps by edge count and genus:");
    let precubic = EnumFilter {
        family: Family::Precubic,
        ..Default::default()
    };
    for n in 1..=8 {
        let table = count_maps(n, &precubic, GroupBy::Genus, None).unwrap();
        if table.is_empty() {
            continue;
        }
        let row: Vec<String> = table.iter().map(|(k, v)| format!("{k}: {v}")).collect();
        println!("  n = {n}: {}", row.join(", "));
    }

    // each emitted map is already in canonical form
    let maps = enumerate_maps(2, &EnumFilter::planar(), None).unwrap();
    assert!(maps.iter().all(|m| m == &m.canonicalize()));
    println!("\nall maps are emitted in canonical form, in canonical-code order");
}
