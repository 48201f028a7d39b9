// Rank and unrank binary words with a fixed number of ones.
//
// `cargo run --example rank_unrank`

use std::error::Error;

use polycomp::arith::binomial_u64;
use polycomp::codec::{rank_word, unrank_word};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let (n, d) = (5, 2);
    let total = binomial_u64(n as u64, d as u64).ok_or("overflow")?;
    println!("all {total} words of length {n} with {d} ones, by rank:");
    for m in 1..=total {
        let w = unrank_word(m, n, d)?;
        println!(
            "  {m:>2} -> {w} (value {:>2})",
            w.value().unwrap_or_default()
        );
        assert_eq!(rank_word(&w, d)?, m);
    }

    let w = "01001001".parse()?;
    println!(
        "\nrank of {w} among length-8 words with 3 ones: {}",
        rank_word(&w, 3)?
    );

    let big = unrank_word(1_000_000_000_000, 60, 20)?;
    println!("rank 10^12 at n=60, d=20: {big}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
