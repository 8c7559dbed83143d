//! Compares every shipped closed form with the series computed from the
//! product formula, and prints a line per form.

use qcatalan::genfun::golden::{builtin_library, check_library};

fn main() {
    let x_order = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(30);
    let lib = builtin_library();
    for (name, outcome) in check_library(&lib, x_order) {
        match outcome {
            Ok(o) if o.equal => println!("{name:<22} equal through x^{x_order}"),
            Ok(o) => {
                let m = o.first_mismatch.expect("unequal outcome carries a mismatch");
                println!(
                    "{name:<22} differs at x^{} q^{}: computed {}, closed form {}",
                    m.x, m.q, m.left, m.right
                );
            }
            Err(e) => println!("{name:<22} error: {e}"),
        }
    }
}
