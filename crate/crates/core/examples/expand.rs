//! Expands a closed form given on the command line in the working field
//! where x is infinitesimally smaller than any power of q.
//!
//! ```text
//! cargo run --example expand -- "q^2" "(q^3 - x)*(x - 1)" 6
//! ```

use qcatalan::genfun::parse::{parse_denominator, parse_expression};
use qcatalan::genfun::ClosedForm;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let num = args.first().map_or("q*(1 - q)*(1 + q)*(x + q + q^2*x)", String::as_str);
    let den = args.get(1).map_or("(1 - x)*(x - q^3)*(1 - q^3*x)", String::as_str);
    let order: usize = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(5);

    let form = match (parse_expression(num), parse_denominator(den)) {
        (Ok(n), Ok(d)) => ClosedForm::new(n, d),
        (Err(e), _) | (_, Err(e)) => {
            eprintln!("cannot parse: {e}");
            std::process::exit(2);
        }
    };
    println!("{form}");
    match form.expand(order, 40) {
        Ok(s) => {
            for (n, c) in s.coeffs().iter().enumerate() {
                println!("[x^{n}] {c}");
            }
        }
        Err(e) => eprintln!("cannot expand: {e}"),
    }
}
