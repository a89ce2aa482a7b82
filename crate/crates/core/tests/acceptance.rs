//! Acceptance checks, one line per criterion. Run with
//! `cargo test --test acceptance`; exits nonzero if any check fails.

use std::fs;
use std::process::Command;
use std::time::{Duration, Instant};

use colorstego::doc::{from_html, from_markup, to_html, to_markup};
use colorstego::lzw::{lzw_compress_encode, lzw_fixed_encode, lzw_shared_encode, size_report};
use colorstego::permcode::{factorial, rank, unrank};
use colorstego::stego::{
    embed, extract, extract_perm, make_palette, measured_capacity, round_half_up,
    stirling_capacity_perm, theoretical_capacity_perm, theoretical_capacity_radix, CoverText,
    EmbedParams, Method, Mode,
};
use colorstego::Error;
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

const SECRET_SHORT: &[u8] = include_bytes!("../data/secret_short.txt");
const COVER_SHORT: &str = include_str!("../data/cover_short.txt");
const SECRET_LONG: &[u8] = include_bytes!("../data/secret_long.txt");
const COVER_LONG: &str = include_str!("../data/cover_long.txt");

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c1_vectors() -> Check {
    let cases: [(u32, [usize; 10]); 2] = [
        (961_996, [3, 8, 5, 2, 1, 4, 9, 0, 7, 6]),
        (1_152_457, [2, 9, 1, 6, 3, 8, 4, 5, 0, 7]),
    ];
    let mut slowest = Duration::ZERO;
    for (r, want) in cases {
        let r = BigUint::from(r);
        unrank(10, &r).map_err(|e| e.to_string())?;
        let start = Instant::now();
        let perm = unrank(10, &r).map_err(|e| e.to_string())?;
        let took = start.elapsed();
        slowest = slowest.max(took);
        ensure(perm.as_slice() == want, || {
            format!("unrank(10, {r}) = {perm}")
        })?;
        ensure(took < Duration::from_millis(1), || {
            format!("unrank(10, {r}) took {took:?}")
        })?;
    }
    Ok(format!("both vectors exact, slowest {slowest:?}"))
}

fn c2_bijective() -> Check {
    let start = Instant::now();
    let mut total = 0u64;
    for n in 1..=8usize {
        let count: u64 = (1..=n as u64).product();
        for r in 0..count {
            let r = BigUint::from(r);
            let perm = unrank(n, &r).map_err(|e| e.to_string())?;
            ensure(rank(&perm) == r, || {
                format!("n={n}: rank(unrank({r})) differs")
            })?;
        }
        total += count;
    }
    let exhaustive = start.elapsed();
    ensure(exhaustive < Duration::from_secs(5), || {
        format!("exhaustive pass took {exhaustive:?}")
    })?;

    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for n in [32usize, 64] {
        let limit = factorial(n).map_err(|e| e.to_string())?;
        let width = (limit.bits() as usize).div_ceil(8) + 8;
        for _ in 0..1000 {
            let bytes: Vec<u8> = (0..width).map(|_| rng.gen()).collect();
            let r = BigUint::from_bytes_be(&bytes) % &limit;
            let perm = unrank(n, &r).map_err(|e| e.to_string())?;
            ensure(rank(&perm) == r, || {
                format!("n={n}: rank(unrank({r})) differs")
            })?;
        }
    }
    Ok(format!(
        "{total} ranks for n<=8 in {exhaustive:?}, 1000 random ranks each for n=32,64"
    ))
}

fn independent_uncompress(z: &[u8]) -> Result<Vec<u8>, String> {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("secret.Z");
    fs::write(&path, z).map_err(|e| e.to_string())?;
    let out = Command::new("gzip")
        .arg("-dc")
        .arg(&path)
        .output()
        .map_err(|e| format!("gzip unavailable: {e}"))?;
    ensure(out.status.success(), || {
        format!(
            "gzip -dc failed: {}",
            String::from_utf8_lossy(&out.stderr).trim()
        )
    })?;
    Ok(out.stdout)
}

fn c3_sizes() -> Check {
    let r = size_report(SECRET_SHORT).map_err(|e| e.to_string())?;
    ensure(r.raw_bits == 280, || format!("raw {}", r.raw_bits))?;
    ensure(r.fixed_bits == 315, || format!("fixed {}", r.fixed_bits))?;
    ensure(r.shared_bits == Some(416), || {
        format!("shared {:?}", r.shared_bits)
    })?;
    ensure(r.compress_bits.abs_diff(352) <= 8, || {
        format!("compress {} not within 352 +/- 8", r.compress_bits)
    })?;
    let z = lzw_compress_encode(SECRET_SHORT).map_err(|e| e.to_string())?;
    let plain = independent_uncompress(z.as_bytes())?;
    ensure(plain == SECRET_SHORT, || {
        "gzip -dc output differs from the secret".into()
    })?;
    Ok(format!(
        "raw 280, fixed 315, shared 416, compress {} (gzip -dc decodes it)",
        r.compress_bits
    ))
}

fn c4_code_streams() -> Check {
    const FIXED: [u32; 35] = [
        117, 110, 100, 101, 114, 108, 121, 105, 110, 103, 32, 112, 104, 121, 115, 105, 111, 108,
        111, 103, 105, 99, 97, 108, 32, 109, 101, 99, 104, 97, 110, 105, 115, 109, 115,
    ];
    const SHARED: [u32; 35] = [
        1, 2, 3, 4, 5, 6, 7, 8, 2, 9, 10, 11, 12, 7, 13, 8, 14, 6, 14, 9, 8, 15, 16, 6, 10, 17, 4,
        15, 12, 16, 2, 8, 13, 17, 13,
    ];
    let fixed = lzw_fixed_encode(SECRET_SHORT).map_err(|e| e.to_string())?;
    ensure(fixed.codes == FIXED, || {
        format!("fixed codes {:?}", fixed.codes)
    })?;
    let (dict, shared) = lzw_shared_encode(SECRET_SHORT).map_err(|e| e.to_string())?;
    ensure(dict.entries() == b"underlyig phsocam", || {
        format!("dictionary {:?}", String::from_utf8_lossy(dict.entries()))
    })?;
    ensure(shared.codes == SHARED, || {
        format!("shared codes {:?}", shared.codes)
    })?;
    Ok("35 fixed codes and 35 shared codes with a 17-entry dictionary".into())
}

fn c5_perm_table() -> Check {
    let rows = [
        (10, 21, 26.25),
        (16, 44, 34.37),
        (20, 61, 38.0),
        (32, 117, 45.63),
        (60, 272, 56.67),
        (64, 295, 57.66),
    ];
    let mut bad = Vec::new();
    let mut got = Vec::new();
    for (n, m, pct) in rows {
        let row = theoretical_capacity_perm(n).map_err(|e| e.to_string())?;
        got.push(format!("{n}:{}/{:.2}", row.bits, row.percent_rounded));
        if row.bits != m {
            bad.push(format!("n={n}: M={} expected {m}", row.bits));
        }
        if (row.percent_rounded - pct).abs() > 0.01 + 1e-9 {
            bad.push(format!(
                "n={n}: {:.2}% expected {pct}%",
                row.percent_rounded
            ));
        }
    }
    let summary = got.join(" ");
    if bad.is_empty() {
        Ok(summary)
    } else {
        Err(format!("{} [{summary}]", bad.join("; ")))
    }
}

fn c6_radix_table() -> Check {
    let rows = [
        (2, 12.5),
        (4, 25.0),
        (8, 37.5),
        (10, 41.5),
        (16, 50.0),
        (32, 62.5),
        (64, 75.0),
    ];
    for (b, want) in rows {
        let got = round_half_up(theoretical_capacity_radix(b).map_err(|e| e.to_string())?, 1);
        ensure(got == want, || format!("B={b}: {got}% expected {want}%"))?;
    }
    Ok("all seven bases match".into())
}

fn c7_stirling() -> Check {
    let mut worst = (0usize, 0f64);
    let mut bad = Vec::new();
    for n in 10..=64 {
        let exact = theoretical_capacity_perm(n)
            .map_err(|e| e.to_string())?
            .percent_exact;
        let diff = (stirling_capacity_perm(n).map_err(|e| e.to_string())? - exact).abs();
        if diff > worst.1 {
            worst = (n, diff);
        }
        if diff > 0.7 {
            bad.push(format!("n={n}: {diff:.3}"));
        }
    }
    if bad.is_empty() {
        Ok(format!("largest gap {:.3} at n={}", worst.1, worst.0))
    } else {
        Err(format!("gap above 0.7 points: {}", bad.join(", ")))
    }
}

fn c8_experiments() -> Check {
    let cases: [(&str, &[u8], Method, usize, f64); 14] = [
        (COVER_SHORT, SECRET_SHORT, Method::Permutation, 10, 20.58),
        (COVER_SHORT, SECRET_SHORT, Method::Permutation, 16, 25.5),
        (COVER_SHORT, SECRET_SHORT, Method::Permutation, 32, 29.5),
        (COVER_SHORT, SECRET_SHORT, Method::Permutation, 64, 45.45),
        (COVER_SHORT, SECRET_SHORT, Method::Radix, 10, 34.31),
        (COVER_SHORT, SECRET_SHORT, Method::Radix, 16, 41.17),
        (COVER_SHORT, SECRET_SHORT, Method::Radix, 32, 52.23),
        (COVER_LONG, SECRET_LONG, Method::Permutation, 10, 22.32),
        (COVER_LONG, SECRET_LONG, Method::Permutation, 16, 29.64),
        (COVER_LONG, SECRET_LONG, Method::Permutation, 32, 38.0),
        (COVER_LONG, SECRET_LONG, Method::Permutation, 64, 44.0),
        (COVER_LONG, SECRET_LONG, Method::Radix, 10, 35.29),
        (COVER_LONG, SECRET_LONG, Method::Radix, 16, 42.85),
        (COVER_LONG, SECRET_LONG, Method::Radix, 32, 53.22),
    ];
    let mut got = Vec::new();
    for (cover, secret, method, n, want) in cases {
        let palette = make_palette(n).map_err(|e| e.to_string())?;
        let params = EmbedParams::new(method, palette).with_mode(Mode::Paper);
        let doc = embed(&CoverText::new(cover), secret, &params).map_err(|e| e.to_string())?;
        let bits = 8 * secret.len();
        let fig = measured_capacity(&doc, bits as u64, params.palette.terminator())
            .map_err(|e| e.to_string())?;
        ensure((fig.percent - want).abs() <= 1.5, || {
            format!(
                "{method} n={n}: {:.2}% expected {want}% +/- 1.5",
                fig.percent
            )
        })?;
        let back = extract(&doc, &params, Some(bits)).map_err(|e| e.to_string())?;
        ensure(back == secret, || {
            format!("{method} n={n}: extraction differs")
        })?;
        got.push(format!("{:.2}", fig.percent));
    }
    Ok(format!("14 figures within 1.5 points [{}]", got.join(" ")))
}

fn random_cover(rng: &mut ChaCha8Rng, eligible: usize) -> String {
    const ALPHABET: &[char] = &[
        'a', 'e', 'i', 'o', 'n', 's', 't', 'r', 'l', 'T', '.', ',', '{', '}', '|', '\\', '<', '>',
        '&', 'é', '9',
    ];
    let mut out = String::new();
    let mut count = 0;
    while count < eligible {
        match rng.gen_range(0..10) {
            0 => out.push(' '),
            1 if rng.gen_bool(0.2) => out.push('\n'),
            1 if rng.gen_bool(0.1) => out.push('\t'),
            _ => {
                out.push(ALPHABET[rng.gen_range(0..ALPHABET.len())]);
                count += 1;
            }
        }
    }
    out
}

fn c9_roundtrip() -> Check {
    let start = Instant::now();
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut trials = 0;
    for method in [Method::Permutation, Method::Radix] {
        for n in [10usize, 16, 32, 64] {
            let palette = make_palette(n).map_err(|e| e.to_string())?;
            for i in 0..500 {
                let secret: Vec<u8> = (0..rng.gen_range(0..64)).map(|_| rng.gen()).collect();
                // every size used here carries more than 2 bits per character
                let needed = (32 + 8 * secret.len()) / 2 + n;
                let extra = rng.gen_range(0..100);
                let cover = random_cover(&mut rng, needed + extra);
                let params = EmbedParams::new(method, palette.clone()).with_seed(rng.gen());

                let cover_path = dir.path().join("cover.txt");
                fs::write(&cover_path, &cover).map_err(|e| e.to_string())?;
                let cover = fs::read_to_string(&cover_path).map_err(|e| e.to_string())?;
                let doc = embed(&CoverText::new(&cover), &secret, &params)
                    .map_err(|e| format!("{method} n={n} trial {i}: {e}"))?;

                let markup_path = dir.path().join("stego.txt");
                let html_path = dir.path().join("stego.html");
                fs::write(&markup_path, to_markup(&doc)).map_err(|e| e.to_string())?;
                fs::write(&html_path, to_html(&doc)).map_err(|e| e.to_string())?;
                let parsed = [
                    from_markup(&fs::read_to_string(&markup_path).map_err(|e| e.to_string())?),
                    from_html(&fs::read_to_string(&html_path).map_err(|e| e.to_string())?),
                ];
                for (form, parsed) in ["markup", "html"].iter().zip(parsed) {
                    let parsed = parsed.map_err(|e| format!("{form} trial {i}: {e}"))?;
                    let back = extract(&parsed, &params, None)
                        .map_err(|e| format!("{method} n={n} {form} trial {i}: {e}"))?;
                    ensure(back == secret, || {
                        format!("{method} n={n} {form} trial {i}: secret differs")
                    })?;
                }
                trials += 1;
            }
        }
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(60), || {
        format!("{trials} trials took {took:?}")
    })?;
    Ok(format!("{trials} trials, markup and HTML, in {took:?}"))
}

fn c10_corruption() -> Check {
    let mut flips = 0;
    for (n, mode, hint) in [(10usize, Mode::Paper, Some(280)), (16, Mode::Framed, None)] {
        let palette = make_palette(n).map_err(|e| e.to_string())?;
        let params = EmbedParams::new(Method::Permutation, palette.clone()).with_mode(mode);
        let doc = embed(&CoverText::new(COVER_SHORT), SECRET_SHORT, &params)
            .map_err(|e| e.to_string())?;
        let clean = extract_perm(&doc, &params, hint).map_err(|e| e.to_string())?;
        let payload: Vec<(usize, usize)> = doc
            .chars()
            .enumerate()
            .filter_map(|(i, (_, c))| Some((i, palette.index_of(c?)?)))
            .collect();
        let terminator_at = doc
            .chars()
            .position(|(_, c)| c == Some(palette.terminator()))
            .unwrap_or(usize::MAX);
        for &(pos, index) in payload.iter().filter(|(p, _)| *p < terminator_at) {
            for other in (0..n).filter(|&k| k != index) {
                let tampered = doc.recolor(pos, Some(palette.color(other)));
                match extract_perm(&tampered, &params, hint) {
                    Err(Error::CorruptStego(_)) => {}
                    Ok(bits) if bits != clean => {}
                    Ok(_) => return Err(format!("n={n}: recoloring {pos} went unnoticed")),
                    Err(e) => return Err(format!("n={n}: unexpected error {e}")),
                }
                flips += 1;
            }
            let tampered = doc.recolor(pos, Some("#010101".parse().unwrap()));
            match extract_perm(&tampered, &params, hint) {
                Err(Error::CorruptStego(_)) => {}
                other => return Err(format!("n={n}: off-palette color at {pos} gave {other:?}")),
            }
            flips += 1;
        }
    }
    Ok(format!("{flips} single-character recolorings detected"))
}

fn main() {
    let checks: [Criterion; 10] = [
        ("C1 rank/unrank vectors", c1_vectors),
        ("C2 bijectivity", c2_bijective),
        ("C3 LZW sizes", c3_sizes),
        ("C4 LZW code streams", c4_code_streams),
        ("C5 permutation capacity table", c5_perm_table),
        ("C6 base-B capacity table", c6_radix_table),
        ("C7 Stirling estimate", c7_stirling),
        ("C8 experiment capacities", c8_experiments),
        ("C9 file-level roundtrip", c9_roundtrip),
        ("C10 corruption detection", c10_corruption),
    ];
    let mut failed = 0;
    for (name, check) in checks {
        match check() {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {name}: {detail}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        checks.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
