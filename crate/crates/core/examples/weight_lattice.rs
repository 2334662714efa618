//! Weights of A_l: ε-coordinates, orbits, dominance and saturated sets.
//!
//!     cargo run --example weight_lattice -- 2 1
use charrig::weight::{neg_w0, orbit, orbit_size, root_coordinates, saturated_dominants};
use charrig::{DominantWeight, Rank};

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

    println!("λ = {la}  ε = {:?}  level {}", la.eps(), la.level());
    println!("-w0 λ = {}", neg_w0(&la));
    println!("orbit size {}", orbit_size(&la));
    for w in orbit(&la).iter().take(8) {
        println!("  {:?}", w.eps());
    }
    println!("Π+(λ):");
    for mu in saturated_dominants(&la) {
        let beta = root_coordinates(la.weight(), mu.weight()).unwrap();
        println!(
            "  {:<10} λ-μ = {:?}  |Supp| = {}",
            mu.to_string(),
            beta.coeffs,
            beta.support_size()
        );
    }
}
