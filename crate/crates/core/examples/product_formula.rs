//! Builds F_m two ways (coefficient by coefficient, and from the product
//! formula), checks they agree, then applies PT' and a section.

use qcatalan::genfun::{f_direct, f_product, nonneg_check, pt_prime, series_equal, x_section, Window};

fn main() -> qcatalan::Result<()> {
    let m: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let order = 16;
    let w = Window::for_m(m, order);
    let direct = f_direct(m, w)?;
    let product = f_product(m, w)?;
    let cmp = series_equal(&direct, &product, 1..=order, None)?;
    println!("F_{m}: direct and product agree on x^1..x^{order}: {}", cmp.equal);
    for n in 0..=4 {
        println!("  [x^{n}] {}", product.coeff(n).truncate(16));
    }

    let g = pt_prime(&product)?;
    println!("G_{m} = PT'(F_{m}):");
    for n in 0..=6 {
        println!("  [x^{n}] {}", g.coeff(n));
    }
    let (ok, neg) = nonneg_check(&g, order);
    println!("G_{m} nonnegative through x^{order}: {ok} {neg:?}");
    for r in 0..m {
        let s = x_section(m, r, &g)?;
        println!("  X_{{{m},{r}}} G_{m} nonnegative: {}", nonneg_check(&s, s.order()).0);
    }
    Ok(())
}
