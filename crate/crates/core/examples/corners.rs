//! Partitions, corners and balance of Grassmannian permutations.

use permpat::grassmann::{self, Family};
use permpat::Permutation;

fn main() {
    for w in ["14235", "13425", "1,3,4,8,9,2,5,6,7,10", "13672458"] {
        let rho: Permutation = w.parse().unwrap();
        let report = grassmann::corner_report(&rho).unwrap();
        let tags: Vec<String> = report.outer_corners.iter().map(|c| format!("{:?}", c.tag)).collect();
        println!(
            "{rho}: partition {:?} in {}x{}, outer corners [{}], balanced {}",
            report.partition,
            report.box_rows,
            report.box_cols,
            tags.join(", "),
            report.is_balanced()
        );
    }

    let pi: Permutation = "11,6,12,9,4,1,5,3,7,2,8,10".parse().unwrap();
    println!("gamma_4({pi}) flattens to {}", grassmann::associated_grassmannian(&pi, 4).unwrap());

    for i in 1..=2 {
        let f = grassmann::family_member(Family::F, i).unwrap();
        let g = grassmann::family_member(Family::G, i).unwrap();
        println!("F({i}) = {}   G({i}) = {}", permpat::Pattern::from(f), permpat::Pattern::from(g));
    }
}
