//! Smooth hyperplane sections of surfaces in P^3 with coefficients drawn from {0, 1, -1, i}
//! and the resulting genus, degree and height bounds for the section curve.
//!
//!     cargo run --release --example bertini

use heightlab::bertini::{parse_gauss, section_search, section_bound_check};
use heightlab::chow::Hypersurface;

fn main() -> heightlab::Result<()> {
    let sample = ["0", "1", "-1", "i"].iter().map(|s| parse_gauss(s)).collect::<heightlab::Result<Vec<_>>>()?;
    for form in ["x0^2+x1^2+x2^2+x3^2", "x0^3+x1^3+x2^3+x3^3", "x0^4+x1^4+x2^4+x3^4", "x0*x1-x2*x3"] {
        let x = Hypersurface::parse(form, Some(3))?;
        let c = section_search(&x, &sample, 2000)?;
        let h = x.chow_height(100_000, 3)?;
        let b = section_bound_check(&x, &c, 0.0, Some(h));
        println!("{form}");
        println!("  after {} hyperplanes: {}  (x{} eliminated)", c.tried, c.section_text, c.eliminated);
        println!(
            "  genus {} <= {}, degree {} <= {}, h_P(C) <= {:.4}",
            b.genus,
            b.genus_bound,
            b.degree_c,
            b.degree_x,
            b.height_rhs.unwrap_or(f64::NAN)
        );
    }
    Ok(())
}
