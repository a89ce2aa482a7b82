// Theoretical capacity of both methods.

use colorstego::stego::{
    round_half_up, stirling_capacity_perm, theoretical_capacity_perm, theoretical_capacity_radix,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("n\tM\tP\texact%\trounded%\tstirling%");
    for n in [10, 16, 20, 32, 60, 64] {
        let row = theoretical_capacity_perm(n)?;
        println!(
            "{n}\t{}\t{:.1}\t{:.2}\t{:.2}\t{:.2}",
            row.bits,
            row.bytes(),
            row.percent_exact,
            row.percent_rounded,
            stirling_capacity_perm(n)?
        );
    }
    println!();
    println!("B\tcapacity%");
    for b in [2, 4, 8, 10, 16, 32, 64] {
        println!(
            "{b}\t{:.1}",
            round_half_up(theoretical_capacity_radix(b)?, 1)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
