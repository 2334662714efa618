//! Weight multiplicities by Freudenthal's formula, checked against Weyl's
//! dimension formula.
//!
//!     cargo run --example characters -- 1 1 1
use charrig::oracle::orbit_dimension;
use charrig::weight::orbit_size;
use charrig::{weyl_dim, CharacterTable, DominantWeight, Rank};

fn main() {
    let coords: Vec<i64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer coordinate"))
        .collect();
    let coords = if coords.is_empty() {
        vec![2, 1]
    } else {
        coords
    };
    let rank = Rank::new(coords.len()).unwrap();
    let la = DominantWeight::from_fundamental(rank, &coords).unwrap();
    let chars = CharacterTable::new(rank);
    let ch = chars.character(&la);

    println!("{:<12}{:>8}{:>8}", "mu", "mult", "orbit");
    for (mu, m) in ch.terms().iter().rev() {
        println!("{:<12}{:>8}{:>8}", mu.to_string(), m, orbit_size(mu));
    }
    println!(
        "Σ m·|orbit| = {}, weyl_dim = {}",
        orbit_dimension(&ch),
        weyl_dim(&la)
    );
}
