//! Rebuild every character up to a bound from Littlewood-Richardson
//! coefficients alone, then compare with Freudenthal.
//!
//!     cargo run --example reconstruct_from_lr -- 3 10
use charrig::rigidity::{reconstruct_family, reconstruct_family_with, LrOracle, SplitRule};
use charrig::{CharacterFamily, CharacterTable, Rank};

fn main() {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer"))
        .collect();
    let (l, bound) = match args.as_slice() {
        [l, b] => (*l as usize, *b),
        _ => (2, 12),
    };
    let rank = Rank::new(l).unwrap();
    let chars = CharacterTable::new(rank);
    let lr = LrOracle::new(&chars);

    let fam = reconstruct_family(&lr, rank, bound).unwrap();
    let expected = CharacterFamily::weyl(&chars, bound);
    println!(
        "A_{l}, bound {bound}: {} members, {} differ",
        fam.members().len(),
        fam.diff(&expected).len()
    );

    let seeded = reconstruct_family_with(&lr, rank, bound, SplitRule::Seeded(7)).unwrap();
    println!("random splits give the same family: {}", seeded == fam);

    if let Some((la, f)) = fam.members().iter().next_back() {
        println!("f{la}:");
        for (mu, c) in f.terms().iter().rev() {
            println!("  {c} h{mu}");
        }
    }
}
