//! Small primitive generators of rings of integers: the search walks integer shells in
//! the given basis until the height drops below (1/d) log|disc|.
//!
//!     cargo run --release --example generator

use heightlab::arith::{parse_univariate, UniPoly};
use heightlab::generators::{search_small_generator, NumberFieldSpec, SearchOptions};
use rug::Integer;

fn field(poly: &str, disc: i64, basis: Option<&[&str]>) -> heightlab::Result<NumberFieldSpec> {
    let g = parse_univariate(poly, "x")?.primitive_part();
    let d = Integer::from(disc.abs());
    match basis {
        None => NumberFieldSpec::with_disc(g, d),
        Some(b) => {
            let rows = b.iter().map(|s| parse_univariate(s, "x")).collect::<heightlab::Result<Vec<UniPoly>>>()?;
            NumberFieldSpec::new(g, rows, d)
        }
    }
}

fn main() -> heightlab::Result<()> {
    let cases = [
        field("x^2+1", -4, None)?,
        field("x^2-2", 8, None)?,
        field("x^2-5", 5, Some(&["1", "(1+x)/2"]))?,
        field("x^3-x-1", -23, None)?,
        field("x^4+x^3+x^2+x+1", 125, None)?,
        field("x^3-2", -108, None)?,
    ];
    for f in &cases {
        let r = search_small_generator(f, &SearchOptions::default())?;
        println!(
            "{:<20} |D|={:<5} alpha={:?}  min poly {:<22} h={:.10} <= {:.6}  ({} candidates)",
            f.defining_poly().to_string(),
            f.abs_disc().to_string(),
            r.element.coords,
            r.min_poly.to_string(),
            r.height.value,
            r.bound,
            r.candidates
        );
    }
    Ok(())
}
