// The three maps into restricted compositions, printed as tables.
//
// `cargo run --example family_bijections [nu] [d]`

use std::error::Error;

use polycomp::codec::{ones_as_parts, to_binary, zeros_as_parts};
use polycomp::compgen::enum_colored;
use polycomp::FamilyMap;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    tables(3, 2)
}

fn tables(nu: usize, d: usize) -> Result<(), Box<dyn Error>> {
    for map in FamilyMap::ALL {
        let total = map.target_total(nu, d);
        println!("{} -> {}({total})", map.tag(), map.family(d));
        for alpha in enum_colored(nu, d, None)? {
            let beta = to_binary(&alpha)?;
            let runs = match map {
                FamilyMap::Ones => String::new(),
                FamilyMap::Mod => zeros_as_parts(&beta, d),
                FamilyMap::Ge => ones_as_parts(&beta, d),
            };
            let image = map.apply(&alpha)?;
            println!(
                "  {:<14} {:<10} {:<20} ({image})",
                alpha.to_string(),
                beta.to_string(),
                runs
            );
            assert_eq!(map.invert(&image, d)?, alpha);
        }
        println!();
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    let mut args = std::env::args().skip(1);
    let nu = args.next().and_then(|a| a.parse().ok()).unwrap_or(3);
    let d = args.next().and_then(|a| a.parse().ok()).unwrap_or(2);
    tables(nu, d)
}
