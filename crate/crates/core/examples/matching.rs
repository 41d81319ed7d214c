//! Occurrences of patterns from several formalisms in one permutation.

use permpat::{matcher, Pattern, Permutation};

fn main() {
    let perm: Permutation = "32415".parse().unwrap();
    for text in ["cl:123", "cl:132", "bv:123;x={1};y={}", "bv:123;x={};y={2}", "m:12;r={(0,0),(2,2)}"] {
        let pattern: Pattern = text.parse().unwrap();
        let found: Vec<String> = matcher::occurrences(&pattern, &perm)
            .iter()
            .map(|o| format!("{:?}", o.positions()))
            .collect();
        println!("{text:<24} in {perm}: {}", if found.is_empty() { "none".into() } else { found.join(" ") });
    }

    // A barred pattern is avoided when every reduced occurrence extends.
    let barred: Pattern = "bar:21354;bars={3}".parse().unwrap();
    for w in ["4257613", "2143"] {
        let w: Permutation = w.parse().unwrap();
        println!("{w} avoids {barred}: {}", matcher::avoids(&barred, &w));
    }
}
