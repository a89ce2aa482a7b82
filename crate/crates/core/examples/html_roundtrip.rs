// Write a stego text as an HTML page and parse it back.

use colorstego::doc::{from_html, to_html};
use colorstego::stego::{embed, extract, make_palette, CoverText, EmbedParams, Method};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cover = CoverText::new("Colors <survive> & so do\nline breaks in the page body.");
    let params = EmbedParams::new(Method::Radix, make_palette(64)?);
    let doc = embed(&cover, b"hi", &params)?;

    let page = to_html(&doc);
    println!("{page}");
    let back = from_html(&page)?;
    assert_eq!(back, doc);
    assert_eq!(extract(&back, &params, None)?, b"hi");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
