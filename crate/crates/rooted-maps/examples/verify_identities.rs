//! The identity catalog: every counting formula evaluated exactly, with one
//! report per parameter point.
//!
//! ```bash
//! cargo run --example verify_identities
//! ```

use rooted_maps::identities::{Verifier, VerifyParams, CATALOG};

fn main() {
    let verifier = Verifier::new(VerifyParams {
        max_edges: 4,
        max_genus: 1,
        budget: None,
    })
    .unwrap();

    println!("catalog: {}\n", CATALOG.join(", "));

    for id in ["cut-slide", "dual", "gj", "eq8"] {
        let reports = verifier.verify(id).unwrap();
        let ok = reports.iter().filter(|r| r.ok).count();
        println!("{id}: {ok}/{} points exact", reports.len());
        for report in reports.iter().take(3) {
            println!("  {} -> {} = {}", report.point, report.lhs, report.rhs);
        }
        if reports.len() > 3 {
            println!("  ...");
        }
    }

    // the whole catalog at this range
    let all = verifier.verify_all().unwrap();
    let failures = all.iter().filter(|r| !r.ok).count();
    println!(
        "\nfull catalog: {} reports, {failures} failures",
        all.len()
    );
    assert_eq!(failures, 0);
}
