//! Hunt for point sets that force a high optimal 2-coloring threshold.
//!
//! Structured families (grids, staircases, collinear runs) plus a random
//! budget, each solved exactly. Any instance whose optimum exceeds 3 is a
//! lower-bound witness worth keeping.

use polychrome::experiment::search_p2_lower_bound;
use polychrome::io::write_instance;

fn main() {
    let search = search_p2_lower_bound(10, 300, 0).unwrap();
    println!(
        "tried {} instances; best optimal threshold: {}",
        search.instances_tried, search.best_threshold
    );
    if let Some(instance) = &search.best_instance {
        println!("\nwitness instance:\n{}", write_instance(instance));
    }
}
