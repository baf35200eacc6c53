//! Sets with a finite Northcott number: Selmer trinomials, polynomials with prime constant
//! term and small length, and the radical tower of 2.
//!
//!     cargo run --release --example northcott_families

use heightlab::arith::{parse_univariate, FactorOptions};
use heightlab::northcott::{prime_constant_family, radical_tower, selmer_family};

fn main() -> heightlab::Result<()> {
    let selmer = selmer_family(20, &FactorOptions::default())?;
    println!("Selmer x^i - x - 1");
    for e in &selmer.entries {
        println!("  i={:>2}  h={:.12}  i*h={:.6}  certified={}", e.i, e.height.value, e.i as f64 * e.height.value, e.certified);
    }
    println!("  upper bound {:?}", selmer.estimate.certified_upper_bound);

    let fam = [("x^2+x+3", 3), ("x^3-x^2+x+5", 5), ("x^4+x+7", 7), ("x^3+x+2", 2)];
    let pairs = fam.iter().map(|&(f, p)| Ok((parse_univariate(f, "x")?.primitive_part(), p))).collect::<heightlab::Result<Vec<_>>>()?;
    println!("constant term +-p, length < 2p");
    for ((f, p), r) in pairs.iter().zip(prime_constant_family(&pairs)) {
        match r {
            Ok(c) => println!("  {f:<16} p={p}  length={}  irreducible={}  h >= {:.6}", c.length, c.irreducible, c.length_bound),
            Err(e) => println!("  {f:<16} p={p}  rejected: {e}"),
        }
    }

    let tower = radical_tower(2, 6)?;
    println!("2^(1/2^i)");
    for o in &tower.empirical {
        println!("  {:<14} h={:.12}", o.label, o.height.value);
    }
    Ok(())
}
