//! Classifying permutations, optionally comparing characterizations.

use permpat::report::{self, Classifier, Property};
use permpat::Permutation;

fn main() {
    for w in ["31524", "4257613", "426153", "2143"] {
        let pi: Permutation = w.parse().unwrap();
        println!("{}", serde_json::to_string(&report::classify(&pi)).unwrap());
    }

    let pi: Permutation = "53281764".parse().unwrap();
    for property in [Property::Gorenstein, Property::Hexagon123Avoiding] {
        for method in property.methods() {
            let c = Classifier::new(property, Some(method)).unwrap();
            println!("{pi} {property} via {method}: {}", c.holds(&pi));
        }
    }
}
