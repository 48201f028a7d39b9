// General w-color compositions: the same counts from the Bell recurrence,
// the partition sum, the invert-transform convolution and enumeration.
//
// `cargo run --example weighted_compositions`

use std::error::Error;

use polycomp::bellcore::{hoggatt_lind_count, invert_transform, weighted_count, weighted_count_k};
use polycomp::compgen::enum_weighted;
use polycomp::WeightSeq;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // parts 1 and 2 only, one color each: Fibonacci
    let one_two = WeightSeq::indicator(10, |n| n <= 2)?;
    println!(
        "1-2 compositions: {:?}",
        strings(&invert_transform(&one_two, 10)?)
    );

    // two colors for 1, none for 2, one for 3, ...
    let w: WeightSeq = "2,0,1,3,1,0,2".parse()?;
    println!("\nw = ({w})");
    println!(
        "{:>3} {:>10} {:>10} {:>10} {:>10}",
        "n", "Bell", "invert", "listed", "k-split"
    );
    let inverted = invert_transform(&w, w.len())?;
    for n in 1..=w.len() {
        let bell = weighted_count(&w, n)?;
        let listed = enum_weighted(&w, n)?.count();
        let split: Vec<String> = (1..=n)
            .map(|k| {
                let a = weighted_count_k(&w, n, k).unwrap();
                assert_eq!(a, hoggatt_lind_count(&w, n, k).unwrap());
                a.to_string()
            })
            .collect();
        println!(
            "{n:>3} {bell:>10} {:>10} {listed:>10} {:>10}",
            inverted[n - 1],
            split.join("+")
        );
        assert_eq!(bell, inverted[n - 1]);
    }
    Ok(())
}

fn strings(v: &[polycomp::Count]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
