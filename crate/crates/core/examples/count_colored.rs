// Count compositions colored by simplicial polytopic numbers, by closed
// form and by partial Bell polynomials.
//
// `cargo run --example count_colored`

use std::error::Error;

use polycomp::bellcore::weighted_count_by_parts;
use polycomp::closedform::{count_pd, count_pd_by_parts};
use polycomp::WeightSeq;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    println!("P_nu(d), colors C(n+d-1, d) per part of size n");
    print!("{:>4}", "nu");
    for d in 1..=4 {
        print!("{:>14}", format!("d={d}"));
    }
    println!();
    for nu in 1..=10 {
        print!("{nu:>4}");
        for d in 1..=4 {
            print!("{:>14}", count_pd(nu, d)?);
        }
        println!();
    }

    // per number of parts, both routes
    let (nu, d) = (6, 2);
    let closed = count_pd_by_parts(nu, d)?;
    let bell = weighted_count_by_parts(&WeightSeq::polytopic(d, nu)?, nu)?;
    println!("\nnu={nu}, d={d} by number of parts:");
    for (k, (a, b)) in closed.iter().zip(&bell).enumerate() {
        println!("  k={}: closed form {a:>5}   Bell {b:>5}", k + 1);
        assert_eq!(a, b);
    }

    let big = count_pd(300, 4)?;
    println!("\nP_300(4) has {} decimal digits", big.to_string().len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
