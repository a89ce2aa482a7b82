// Rank and unrank permutations of up to 64 symbols.

use colorstego::permcode::{block_budget, factorial, rank, unrank};
use num_bigint::BigUint;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for value in [961_996u32, 1_152_457] {
        let perm = unrank(10, &BigUint::from(value))?;
        println!("unrank(10, {value}) = {perm}");
        assert_eq!(rank(&perm), BigUint::from(value));
    }

    let budget = block_budget(64)?;
    println!("64! = {}", factorial(64)?);
    println!("64 colors carry {} bits per group", budget.bits);

    let big = (BigUint::from(1u8) << budget.bits) - 1u8;
    let perm = unrank(64, &big)?;
    assert_eq!(rank(&perm), big);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
