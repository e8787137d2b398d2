//! The memoized big-integer recurrence tables, well past enumeration range.
//!
//! ```bash
//! cargo run --example recurrence_tables
//! ```

use rooted_maps::counting::Recurrences;

fn main() {
    let rec = Recurrences::new();

    println!("planar maps Q(n, f) for n <= 8:");
    for n in 0..=8i64 {
        let row: Vec<String> = (1..=n + 1).map(|f| rec.q_planar(n, f).to_string()).collect();
        println!("  n = {n}: {}", row.join(" "));
    }

    println!("\nplanar cubic maps T(n) with 3n edges:");
    let t_row: Vec<String> = (0..=10).map(|n| rec.t_planar(n).to_string()).collect();
    println!("  {}", t_row.join(", "));

    println!("\nunicellular maps of genus g with n edges (the one-faced column):");
    for g in 0..=3i64 {
        let row: Vec<String> = (2 * g..=2 * g + 5)
            .map(|n| rec.q_full(n, 1, g).to_string())
            .collect();
        println!("  g = {g}, n = {}..: {}", 2 * g, row.join(", "));
    }

    // the counts grow fast; everything stays exact
    println!("\nQ(25, 13) = {}", rec.q_planar(25, 13));
    println!("T(20)     = {}", rec.t_planar(20));
}
