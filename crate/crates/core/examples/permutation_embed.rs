// Hide a secret with the permutation method and read it back.

use colorstego::doc::{from_markup, to_markup};
use colorstego::stego::{
    embed, extract, make_palette, measured_capacity, CoverText, EmbedParams, Method, Mode,
};

const COVER: &str = include_str!("../data/cover_short.txt");
const SECRET: &[u8] = include_bytes!("../data/secret_short.txt");

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cover = CoverText::new(COVER);

    // framed: the reader needs nothing but the palette
    let params = EmbedParams::new(Method::Permutation, make_palette(16)?).with_seed(7);
    let doc = embed(&cover, SECRET, &params)?;
    let text = to_markup(&doc);
    println!("{}...", text.chars().take(120).collect::<String>());
    assert_eq!(extract(&from_markup(&text)?, &params, None)?, SECRET);

    // paper mode: no header, the bit count travels separately
    let params = params.with_mode(Mode::Paper);
    let doc = embed(&cover, SECRET, &params)?;
    let fig = measured_capacity(&doc, 8 * SECRET.len() as u64, params.palette.terminator())?;
    println!(
        "{} bits over {} characters: {:.2}%",
        fig.secret_bits, fig.consumed_chars, fig.percent
    );
    assert_eq!(extract(&doc, &params, Some(8 * SECRET.len()))?, SECRET);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
