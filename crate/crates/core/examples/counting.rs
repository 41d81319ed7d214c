//! Counting sequences of avoidance classes.

use permpat::report::{self, Classifier, Property, Target};

fn main() {
    for (property, n) in [(Property::Baxter, 7), (Property::Smooth, 8), (Property::Gorenstein, 7), (Property::Simsun, 7)] {
        let target = Target::Property(Classifier::new(property, None).unwrap());
        println!("{property}: {:?}", report::count_sequence(&target, n).unwrap());
    }
    let target = Target::Avoiders("bv:2143;x={2};y={}".parse().unwrap());
    println!("avoiders of 2-14-3: {:?}", report::count_sequence(&target, 7).unwrap());
}
