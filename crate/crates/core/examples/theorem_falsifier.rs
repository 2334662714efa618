//! Perturb one multiplicity of the true family and watch which condition
//! notices.
use charrig::rigidity::{perturb_family, perturbation_sites, verify_theorem, SiteStratum};
use charrig::{CharacterFamily, CharacterTable, Rank};

fn main() {
    let rank = Rank::new(2).unwrap();
    let chars = CharacterTable::new(rank);
    let fam = CharacterFamily::weyl(&chars, 10);

    let report = verify_theorem(&fam, &chars).unwrap();
    println!(
        "true family: condition 1 {}, condition 2 {} ({} checked, {} skipped at the bound)",
        report.condition1_passed(),
        report.condition2_passed(),
        report.condition2.checked,
        report.condition2.skipped.len()
    );

    let mut missed = 0;
    for (la, mu) in perturbation_sites(&fam) {
        let p = perturb_family(&fam, (&la, &mu), 1).unwrap();
        let r = verify_theorem(&p, &chars).unwrap();
        let stratum = SiteStratum::of(&la, &mu).unwrap();
        println!(
            "  ({la}, {mu}) {stratum:?}: c1 {:>2} violations, c2 {:>3}",
            r.condition1_violations.len(),
            r.condition2.violations.len()
        );
        missed += usize::from(r.passed());
    }
    println!("undetected perturbations: {missed}");
}
