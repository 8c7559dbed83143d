//! Parity-unimodality of C̄_{m,n} for all 1 <= m, n <= N (default 40).

use qcatalan::qseries::sweep;

fn main() -> qcatalan::Result<()> {
    let n_max = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(40);
    let t = std::time::Instant::now();
    let reports = sweep(n_max, n_max)?;
    let bad: Vec<_> = reports.iter().filter(|r| !r.parity_unimodal).collect();
    println!(
        "{} pairs, {} parity-unimodal, {:.2?}",
        reports.len(),
        reports.len() - bad.len(),
        t.elapsed()
    );
    for r in bad {
        println!("  {:?} first violation at q^{:?}", r.pair(), r.first_violation);
    }
    let widest = reports.iter().filter_map(|r| r.degree).max().unwrap_or(0);
    println!("largest degree: {widest}");
    Ok(())
}
