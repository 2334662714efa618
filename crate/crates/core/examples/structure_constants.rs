//! Structure constants of a character family, the multiplicity formula that
//! inverts them, and how the two are tied together.
use charrig::rigidity::{eq3_consistency, extract_structure_constants, multiplicity_via_eq1};
use charrig::weight::saturated_dominants;
use charrig::{CharacterFamily, CharacterTable, DominantWeight, Rank};

fn main() {
    let rank = Rank::new(2).unwrap();
    let dw = |c: &[i64]| DominantWeight::from_fundamental(rank, c).unwrap();
    let chars = CharacterTable::new(rank);
    let fam = CharacterFamily::weyl(&chars, 10);

    let (mu, nu) = (dw(&[2, 0]), dw(&[1, 1]));
    let la = mu.add(&nu).unwrap();
    let row = extract_structure_constants(&fam, &mu, &nu).unwrap();
    println!("f{mu} · f{nu} = Σ n^t f_t:");
    for (t, n) in row.iter().rev() {
        println!("  n^{t} = {n}");
    }

    println!("n_{la}(t) from lower members only:");
    for t in saturated_dominants(&la) {
        let n = multiplicity_via_eq1(fam.members(), &mu, &nu, &t, &row).unwrap();
        let ok = eq3_consistency(&fam, &mu, &nu, &t).unwrap();
        println!(
            "  t = {:<8} n = {n}  stored {}  consistent {ok}",
            t.to_string(),
            fam.n(&la, &t)
        );
    }
}
