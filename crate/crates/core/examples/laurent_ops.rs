//! Normalization, the positive/constant/negative parts, and the two
//! witnesses whose nonnegativity is equivalent to parity-unimodality.

use qcatalan::{LaurentPoly, Region};

fn main() -> qcatalan::Result<()> {
    // 1 + 2q + q^2 + 3q^3 + q^4 + 2q^5 + q^6: symmetric, parity-unimodal
    let p = LaurentPoly::from_coeffs(&[1, 2, 1, 3, 1, 2, 1]);
    let n = p.normalize()?;
    println!("P       = {p}");
    println!("N(P)    = {n}");
    println!("PT N(P) = {}", n.extract(Region::Positive));
    println!("CT N(P) = {}", n.extract(Region::Zero));
    println!("NT N(P) = {}", n.extract(Region::Negative));

    let (w1, w2) = p.lemma5_witnesses()?;
    println!("PT N((q-1)P)        = {w1}");
    println!("PT (q^2-q^-2) N(P)  = {w2}");
    println!("parity-unimodal: {:?}", p.is_parity_unimodal()?);

    let q = LaurentPoly::from_coeffs(&[1, 0, 2, 3, 1, 3, 2, 0, 1]);
    println!("\nQ = {q}");
    println!("parity-unimodal: {:?}", q.is_parity_unimodal()?);
    println!("witness: {}", q.lemma5_witnesses()?.1);
    Ok(())
}
