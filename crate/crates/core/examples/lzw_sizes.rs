// Compare the three LZW variants on a short secret.

use colorstego::lzw::{
    lzw_compress_decode, lzw_compress_encode, lzw_fixed_encode, lzw_shared_decode,
    lzw_shared_encode, size_report,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let secret = b"underlying physiological mechanisms";
    print!("{}", size_report(secret)?.to_table());

    let fixed = lzw_fixed_encode(secret)?;
    println!("fixed codes: {:?}", fixed.codes);

    let (dict, shared) = lzw_shared_encode(secret)?;
    println!(
        "shared dictionary: {:?}",
        String::from_utf8_lossy(dict.entries())
    );
    assert_eq!(lzw_shared_decode(&dict, &shared)?, secret);

    let z = lzw_compress_encode(secret)?;
    println!(".Z stream: {} bytes", z.as_bytes().len());
    assert_eq!(lzw_compress_decode(&z)?, secret);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
