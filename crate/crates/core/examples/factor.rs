//! Exact arithmetic underneath everything: factoring over Q, resultants, discriminants and
//! certified root isolation.
//!
//!     cargo run --release --example factor -- "x^6-1"

use heightlab::arith::{discriminant, factor_rationals, isolate_roots, parse_univariate, resultant, RootOptions};

fn main() -> heightlab::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "x^8-x^4-2*x^2+2".into());
    let f = parse_univariate(&text, "x")?;
    let fz = factor_rationals(&f)?;
    println!("f = {f}");
    println!("unit {}", fz.unit);
    for (g, e) in &fz.factors {
        println!("  ({g})^{e}");
    }
    println!("disc f = {}", discriminant(&f)?);
    let g = parse_univariate("x^2-2", "x")?;
    println!("res(f, x^2-2) = {}", resultant(&f, &g)?);
    // roots are isolated per irreducible factor, since isolation wants squarefree input
    for (g, _) in &fz.factors {
        let iso = isolate_roots(g, &RootOptions::default())?;
        println!("{g}: {} roots, {} real", iso.roots.len(), iso.real_count());
        for r in &iso.roots {
            println!("  {r}");
        }
    }
    Ok(())
}
