//! The explicit constants as interval big-float expressions: values in log10, the
//! expression traces, and the Bost-David gap sweep.
//!
//!     cargo run --release --example constants -- 2

use heightlab::constants::{self, ReportKind};

fn main() -> heightlab::Result<()> {
    let g: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    for r in constants::report(g, ReportKind::All, 0.274, 256)? {
        let v = match (&r.exact, &r.log10) {
            (Some(e), _) if e.len() <= 30 => e.clone(),
            (_, Some(l)) => format!("10^{l}"),
            (Some(e), None) => format!("{} digits", e.len()),
            (None, None) => "overflow".into(),
        };
        println!("{:<34} {:<32} {}", r.name, v, r.trace);
    }
    let s = constants::c31_sweep(g, 1e12, 10)?;
    println!("2B - h <= c31 over {} points up to h = {:e}: {}, worst ratio {:.6}", s.points, s.max_h, s.all_hold, s.worst_ratio);
    println!("c31({g}) DAG: {}", constants::c31(g).to_json());
    Ok(())
}
