//! Heights of rational points: h_inf, h_2 and the Monte-Carlo Chow height of the point,
//! which estimates h_2.
//!
//!     cargo run --release --example points

use heightlab::chow::chow_height_point;
use heightlab::heights::{height_point, sandwich_check, Norm, ProjectivePoint};

fn main() -> heightlab::Result<()> {
    let points: [&[i64]; 5] = [&[1, 0], &[3, 4, 0], &[1, 1, 1], &[6, -10, 15], &[2, 3, 5, 7]];
    println!("{:<16} {:>10} {:>10} {:>10} {:>9} sandwich", "point", "h_inf", "h_2", "h_P", "sigma");
    for (k, c) in points.iter().enumerate() {
        let p = ProjectivePoint::from_i64s(c)?;
        let hi = height_point(&p, Norm::Inf).value;
        let h2 = height_point(&p, Norm::L2).value;
        let hp = chow_height_point(&p, 200_000, k as u64);
        println!(
            "{:<16} {:>10.6} {:>10.6} {:>10.6} {:>9.1e} {}",
            format!("{c:?}"),
            hi,
            h2,
            hp.value,
            hp.std_error,
            sandwich_check(&p, p.dim())
        );
    }
    Ok(())
}
