// Run every cross-check on a small grid and print the report.
//
// `cargo run --release --example verify_identities [nu_max] [d_max]`

use std::error::Error;

use polycomp::verify::verify_all;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    run(5, 3)
}

fn run(nu_max: usize, d_max: usize) -> Result<(), Box<dyn Error>> {
    let report = verify_all(nu_max, d_max);
    println!("{report}");
    if !report.passed() {
        return Err("some checks failed".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    let mut args = std::env::args().skip(1);
    let nu_max = args.next().and_then(|a| a.parse().ok()).unwrap_or(5);
    let d_max = args.next().and_then(|a| a.parse().ok()).unwrap_or(3);
    run(nu_max, d_max)
}
