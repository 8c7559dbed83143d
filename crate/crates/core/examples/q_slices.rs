//! Coefficients of q^i in G_m as series in x. The q^1 slice is the only one
//! with negative terms.

use qcatalan::genfun::operators::negative_terms;
use qcatalan::genfun::{g_series, q_slice, Window};

fn main() -> qcatalan::Result<()> {
    let order = 40;
    for m in 3..=10 {
        let g = g_series(m, Window::for_m(m, order))?;
        let s1 = q_slice(&g, 1)?;
        let neg = negative_terms(&s1);
        println!(
            "m={m:>2}  [q^0] = {}  negative part of [q^1]: {}",
            q_slice(&g, 0)?,
            neg.display_in("x")
        );
    }
    let g = g_series(6, Window::for_m(6, 24))?;
    for i in 1..=4 {
        println!("[q^{i}]G_6 = {}", q_slice(&g, i)?.display_in("x"));
    }
    Ok(())
}
