//! Every formalism rewritten as mesh patterns.

use permpat::{translate, Pattern};

fn main() {
    for text in [
        "bv:31524;x={2};y={3}",
        "bar:123;bars={2}",
        "bar:634125;bars={3,5}",
        "brt:31524;t={(1,5),(2,3)}",
        "iv:41523|31524",
        "iv:53241|32154",
    ] {
        let pattern: Pattern = text.parse().unwrap();
        println!("{text}");
        match translate::to_meshes(&pattern) {
            Ok(meshes) => meshes.into_iter().for_each(|m| println!("  {}", Pattern::from(m))),
            Err(e) => println!("  error: {e}"),
        }
    }
}
