//! Littlewood-Richardson coefficients by peeling characters off a product.
//!
//!     cargo run --example tensor_products -- 1,1 1,1
use charrig::format::parse_coords;
use charrig::weight::neg_w0;
use charrig::{weyl_dim, CharacterTable, Coeff, DominantWeight, Rank};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (a, b) = match args.as_slice() {
        [a, b] => (parse_coords(a).unwrap(), parse_coords(b).unwrap()),
        _ => (vec![1, 1], vec![1, 1]),
    };
    let rank = Rank::new(a.len()).unwrap();
    let mu = DominantWeight::from_fundamental(rank, &a).unwrap();
    let nu = DominantWeight::from_fundamental(rank, &b).unwrap();
    let chars = CharacterTable::new(rank);

    let row = chars.tensor_decompose(&mu, &nu).unwrap();
    println!("V{mu} ⊗ V{nu}:");
    for (la, c) in row.iter().rev() {
        println!("  {c} × V{la}  (dim {})", weyl_dim(la));
    }
    let total: Coeff = row.iter().map(|(la, c)| c * weyl_dim(la)).sum();
    println!("{} × {} = {total}", weyl_dim(&mu), weyl_dim(&nu));

    // c_{μ,ν}^λ = c_{λ,-w0 ν}^μ
    for (la, c) in &row {
        let dual = chars.tensor_decompose(la, &neg_w0(&nu)).unwrap();
        assert_eq!(dual.get(&mu), Some(c));
    }
    println!("duality holds on every component");
}
