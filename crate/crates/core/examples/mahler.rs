//! Logarithmic Mahler measure of a few classical polynomials, by isolated roots and by
//! tanh-sinh quadrature over the unit circle.
//!
//!     cargo run --release --example mahler -- "x^4-x-1"

use heightlab::arith::parse_univariate;
use heightlab::heights::{mahler_integral_height, mahler_measure_log};

fn main() -> heightlab::Result<()> {
    let mut polys: Vec<String> = std::env::args().skip(1).collect();
    if polys.is_empty() {
        polys = ["x^2-x-1", "2*x-1", "x^3-x-1", "x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1", "x^6+x^3+1"]
            .map(String::from)
            .to_vec();
    }
    println!("{:<36} {:>20} {:>20} {:>9}", "f", "roots", "integral", "diff");
    for text in &polys {
        let f = parse_univariate(text, "x")?.primitive_part();
        let (lo, hi) = mahler_measure_log(&f, 1e-12)?;
        let roots = (lo.to_f64() + hi.to_f64()) / 2.0;
        // the integral route returns m(f)/deg f
        let integral = mahler_integral_height(&f, 1e-12)?.value * f.degree() as f64;
        println!("{:<36} {:>20.15} {:>20.15} {:>9.1e}", text, roots, integral, (roots - integral).abs());
    }
    Ok(())
}
