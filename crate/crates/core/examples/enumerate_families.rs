// Enumerate restricted compositions and compare with the closed forms.
//
// `cargo run --example enumerate_families`

use std::error::Error;

use polycomp::closedform::count_family;
use polycomp::compgen::enum_family;
use polycomp::{Count, FamilyId, FamilyKind};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let f = FamilyId::ones_and(3)?;
    println!("{f}(6):");
    for c in enum_family(f, 6)? {
        println!("  {c}");
    }

    println!("\nsizes for m=3, listed vs closed form:");
    println!("{:>3} {:>12} {:>12} {:>12}", "n", "ones", "mod", "ge");
    for n in 1..=15 {
        print!("{n:>3}");
        for kind in FamilyKind::ALL {
            let f = FamilyId::new(kind, 3)?;
            let listed = Count::from(enum_family(f, n)?.count());
            assert_eq!(listed, count_family(f, n)?);
            print!(" {listed:>12}");
        }
        println!();
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
