// Colored compositions as binary words and back.
//
// `cargo run --example binary_map`

use std::error::Error;

use polycomp::codec::{from_binary, to_binary};
use polycomp::compgen::enum_colored;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let d = 2;
    for nu in 1..=3 {
        println!("nu={nu}, d={d}");
        for alpha in enum_colored(nu, d, None)? {
            let beta = to_binary(&alpha)?;
            println!("  {:<14} {beta}", alpha.to_string());
            assert_eq!(from_binary(&beta, d)?, alpha);
        }
    }

    let decoded = from_binary(&"0111011011".parse()?, 3)?;
    println!("\n0111011011 at d=3 decodes to {decoded}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
