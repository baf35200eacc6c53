//! Smyth's sequence x_0 = 1, x_{i+1}^2 - x_i x_{i+1} - 1 = 0: degrees, heights and the
//! Habegger bound, with the conjugate-tracking check alongside.
//!
//!     cargo run --release --example smyth -- 8

use heightlab::arith::sturm::real_root_count_int;
use heightlab::northcott::{conjugate_tracking_heights, habegger_bound, iterate_sequence, recurrence_check, Mode, SequenceSpec};
use std::time::Instant;

fn main() -> heightlab::Result<()> {
    let max_i: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let t = Instant::now();
    let spec = SequenceSpec::smyth(max_i, Mode::AssumeIrreducible);
    let prof = iterate_sequence(&spec)?;
    let oracle = conjugate_tracking_heights(&spec.p, &spec.x0, max_i)?;
    println!(" i  deg   h(x_i)             oracle diff  real roots");
    for (e, o) in prof.entries.iter().zip(&oracle) {
        let real = if e.index <= 5 { real_root_count_int(&e.element.min_poly).to_string() } else { "-".into() };
        println!("{:>2} {:>4}   {:.15}  {:.1e}      {}", e.index, e.degree, e.height.value, (e.height.value - o).abs(), real);
    }
    let b = habegger_bound(&spec.p)?;
    let rec = recurrence_check(&prof, &spec.p)?;
    println!("gamma_P = {:.10}, bound = {:.6}, recurrence holds: {}", b.gamma, b.bound, rec.all_hold);
    println!("elapsed {:.2?}", t.elapsed());
    Ok(())
}
