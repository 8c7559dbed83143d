//! Prints q-Catalan polynomials and whether they are parity-unimodal.
//!
//! `cargo run --example q_catalan -- 7 4` shows C̄_{7,4}, C_{7,4} (coprime),
//! C_7 and K_7.

use qcatalan::qseries::{cbar, check_pair, k_poly, q_catalan, rational_q_catalan};

fn main() -> qcatalan::Result<()> {
    let args: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (m, n) = match args[..] {
        [m, n, ..] => (m, n),
        _ => (6, 4),
    };

    let fam = cbar(m, n)?;
    println!("gcd({m}, {n}) = {}", fam.gcd);
    println!("Cbar_{{{m},{n}}} = {}", fam.polynomial);
    match rational_q_catalan(m, n) {
        Ok(p) => println!("C_{{{m},{n}}}    = {p}"),
        Err(e) => println!("C_{{{m},{n}}}: {e}"),
    }
    let report = check_pair(m, n)?;
    println!(
        "degree {:?}, symmetric {}, parity-unimodal {}",
        report.degree, report.symmetric, report.parity_unimodal
    );

    println!("C_{n}(q) = {}", q_catalan(n));
    let k = k_poly(n)?;
    println!("K_{n}(q) = {k}  (unimodal: {})", k.is_unimodal()?.holds);
    Ok(())
}
