// Hide a secret as base-B digits, one colored character per digit.

use colorstego::radixcode::{bits_to_digits, BitString, Sentinel};
use colorstego::stego::{
    embed, extract, make_palette, measured_capacity, CoverText, EmbedParams, Method, Mode,
};

const COVER: &str = include_str!("../data/cover_long.txt");
const SECRET: &[u8] = include_bytes!("../data/secret_long.txt");

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let bits = BitString::from_bytes(SECRET);
    for base in [10, 16, 32] {
        let digits = bits_to_digits(&bits, base, Sentinel::Off)?;
        let params =
            EmbedParams::new(Method::Radix, make_palette(base as usize)?).with_mode(Mode::Paper);
        let doc = embed(&CoverText::new(COVER), SECRET, &params)?;
        let fig = measured_capacity(&doc, bits.len() as u64, params.palette.terminator())?;
        println!(
            "base {base}: {} digits, capacity {:.2}%",
            digits.len(),
            fig.percent
        );
        assert_eq!(extract(&doc, &params, Some(bits.len()))?, SECRET);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
