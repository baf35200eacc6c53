//! Monte-Carlo Chow heights of hypersurfaces from the sphere integral of log|f|, with the
//! closed-form correction term.
//!
//!     cargo run --release --example chow -- 1000000

use heightlab::chow::Hypersurface;

fn main() -> heightlab::Result<()> {
    let samples: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(200_000);
    for form in ["x0+x1", "x0^2+x1^2-x2^2", "x0*x1-x2^2", "x0^3+x1^3+x2^3+x3^3", "x0^4+x1^4+x2^4+x3^4"] {
        let x = Hypersurface::parse(form, None)?;
        let h = x.chow_height(samples, 1)?;
        println!(
            "{:<22} N={} deg={}  h_P={:>10.6} +/- {:.1e}  (correction {:.6})",
            form,
            x.ambient_dim(),
            x.degree(),
            h.value,
            h.std_error,
            h.correction
        );
    }
    Ok(())
}
