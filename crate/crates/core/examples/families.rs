//! Statistics and classes encoded by marked mesh patterns.

use permpat::families::{self, DumontMethod};
use permpat::Permutation;

fn main() {
    for w in ["452613", "3142", "2143", "4321", "351624"] {
        let pi: Permutation = w.parse().unwrap();
        let stats = families::special_statistics(&pi, 2);
        println!(
            "{pi}: simsun {} dumont1 {} dumont2 {} freely braided {} | {}",
            families::is_simsun(&pi, families::SimsunMethod::Mesh),
            families::is_dumont_first(&pi, DumontMethod::MarkedMesh),
            families::is_dumont_second(&pi, DumontMethod::MarkedMesh),
            families::is_freely_braided(&pi, families::FreelyBraidedMethod::MarkedMesh),
            serde_json::to_string(&stats).unwrap()
        );
        let fixed: Vec<usize> =
            (1..=pi.rank()).filter(|&i| families::fixed_point_marked_mesh(&pi, i).unwrap()).collect();
        println!("  fixed points via marked mesh: {fixed:?}, cycles: {:?}", pi.cycles());
    }
}
