//! A conic cut by random lines: the intersection is a zero-cycle of degree 2 whose Chow
//! height must stay under the explicit bound in h(X), deg X and the line height.
//!
//!     cargo run --release --example remond

use heightlab::chow::{random_lines, remond_check, Hypersurface};
use heightlab::heights::{height_poly, Norm};
use rug::Rational;

fn main() -> heightlab::Result<()> {
    let x = Hypersurface::parse("x0^2+x1^2-x2^2", Some(2))?;
    let lines = random_lines(&x, 8, 4, 11);
    let mut big_h: f64 = 0.0;
    for l in &lines {
        let c: Vec<Rational> = l.form().terms().values().map(Rational::from).collect();
        big_h = big_h.max(height_poly(&c, Norm::L2)?.value);
    }
    let r = remond_check(&x, &lines, big_h, 300_000, 5)?;
    println!("h_P(X) = {:.6} +/- {:.1e}, H = {:.4}", r.height_x.value, r.height_x.std_error, big_h);
    for i in &r.instances {
        println!("  {:<18} deg {}  h = {:.5} +/- {:.1e}  rhs {:.5}  ok {}", i.line, i.degree_y, i.height_y.value, i.sigma, i.rhs, i.holds && i.degree_ok);
    }
    Ok(())
}
