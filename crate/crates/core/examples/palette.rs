// Print a generated palette.

use colorstego::stego::make_palette;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let palette = make_palette(10)?;
    for (i, color) in palette.colors().iter().enumerate() {
        println!("{i:>2}  {color}");
    }
    println!("terminator  {}", palette.terminator());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
