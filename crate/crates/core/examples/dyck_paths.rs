//! Dyck paths, their tableaux, and the statistics that give C_n(q).

use qcatalan::combinatorics::{
    area, area_polynomial, bounce_table, coarea, enumerate_paths, maj, maj_table, path_to_syt, statistic_polynomial,
    Statistic,
};
use qcatalan::qseries::q_catalan;

fn main() -> qcatalan::Result<()> {
    let n: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    for d in enumerate_paths(n, n)?.iter().take(6) {
        let t = path_to_syt(d)?;
        println!(
            "{d}  rows {:?} / {:?}  area {}  coarea {}  maj {}",
            t.row1(),
            t.row2(),
            area(d),
            coarea(&t),
            maj(&t)
        );
    }
    let by_maj = statistic_polynomial(n, Statistic::Maj)?;
    let by_bounce = statistic_polynomial(n, Statistic::CoareaPlusBounce)?;
    println!("sum q^maj             = {by_maj}");
    println!("sum q^(coarea+bounce) = {by_bounce}");
    println!("C_{n}(q)               = {}", q_catalan(n));

    println!("\narea over the 5x3 rectangle: {}", area_polynomial(5, 3)?);

    println!("\n{}", bounce_table(3)?);
    print!("{}", maj_table(3)?);
    Ok(())
}
