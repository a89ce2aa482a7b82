//! The `colorstego` command line.
//!
//! Every failure prints one line `colorstego: error[<code>]: <message>` to
//! stderr. Exit codes: 0 success, 2 bad arguments or an input the operation
//! cannot take (including a cover that is too small), 3 I/O, 4 corrupt stego
//! text or code stream, 5 a bit length is needed to extract.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::doc::{from_html, from_markup, to_html, to_markup, ColoredDoc};
use crate::error::Error;
use crate::lzw::{
    lzw_compress_decode, lzw_compress_encode, lzw_fixed_decode, lzw_fixed_encode,
    lzw_shared_decode, lzw_shared_encode, read_compress_stream, read_fixed_stream,
    read_shared_stream, size_report, SharedDictionary,
};
use crate::stego::{
    embed, extract, make_palette, measured_capacity, round_half_up, stirling_capacity_perm,
    theoretical_capacity_perm, theoretical_capacity_radix, CoverText, EmbedParams, Method, Mode,
    MAX_COLORS, MIN_COLORS, TERMINATOR,
};

#[derive(Debug, Parser)]
#[command(
    name = "colorstego",
    version,
    about = "Hide secrets in the colors of a text"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Color a cover text so that it carries a secret file.
    Embed(EmbedArgs),
    /// Recover the secret from a colored text.
    Extract(ExtractArgs),
    /// Theoretical or measured embedding capacity.
    #[command(subcommand)]
    Capacity(CapacityCommand),
    /// LZW size comparison and codecs.
    #[command(subcommand)]
    Lzw(LzwCommand),
    /// Print the palette for a number of colors.
    Palette(PaletteArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Perm,
    Radix,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Perm => Method::Permutation,
            MethodArg::Radix => Method::Radix,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Paper,
    Framed,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Paper => Mode::Paper,
            ModeArg::Framed => Mode::Framed,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DocFormat {
    Markup,
    Html,
}

#[derive(Debug, Args)]
struct EmbedArgs {
    #[arg(long, value_enum)]
    method: MethodArg,
    #[arg(long)]
    colors: usize,
    #[arg(long)]
    cover: PathBuf,
    #[arg(long)]
    secret: PathBuf,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, value_enum, default_value = "markup")]
    format: DocFormat,
    #[arg(long, value_enum, default_value = "framed")]
    mode: ModeArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct ExtractArgs {
    #[arg(long, value_enum)]
    method: MethodArg,
    #[arg(long)]
    colors: usize,
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, value_enum, default_value = "framed")]
    mode: ModeArg,
    /// Secret length in bits (paper mode).
    #[arg(long)]
    bits: Option<usize>,
    /// Input format; detected from the content when omitted.
    #[arg(long, value_enum)]
    format: Option<DocFormat>,
}

#[derive(Debug, Subcommand)]
enum CapacityCommand {
    /// Capacity from the coding scheme alone.
    Theoretical {
        #[arg(long, value_enum)]
        method: MethodArg,
        /// A palette size, or `all` for the whole table.
        #[arg(long)]
        colors: String,
        /// Add the Stirling estimate (perm only).
        #[arg(long)]
        stirling: bool,
    },
    /// Capacity achieved by a stego text.
    Measure {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        secret_bits: u64,
        #[arg(long, value_enum)]
        format: Option<DocFormat>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VariantArg {
    Fixed,
    Shared,
    Compress,
}

#[derive(Debug, Args)]
struct CodecArgs {
    #[arg(long, value_enum)]
    variant: VariantArg,
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    out: PathBuf,
    /// Dictionary file of the shared variant: written by encode, read by decode.
    #[arg(long)]
    dict: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum LzwCommand {
    /// Sizes in bits of the source under each variant.
    Report {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        csv: bool,
    },
    Encode(CodecArgs),
    Decode(CodecArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PaletteFormat {
    Text,
    Html,
}

#[derive(Debug, Args)]
struct PaletteArgs {
    #[arg(long)]
    colors: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: PaletteFormat,
}

#[derive(Debug)]
enum Failure {
    Lib(Error),
    Io { path: PathBuf, err: std::io::Error },
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Io { .. } => 3,
            Failure::Lib(e) => match e {
                Error::Domain(_)
                | Error::RankOutOfRange { .. }
                | Error::Capacity(_)
                | Error::CoverTooSmall { .. } => 2,
                Error::CorruptPayload(_)
                | Error::CorruptStream(_)
                | Error::CorruptStego(_)
                | Error::Parse { .. } => 4,
                Error::MissingBitLength(_) => 5,
            },
        }
    }

    fn line(&self) -> String {
        match self {
            Failure::Usage(msg) => format!("error[usage]: {msg}"),
            Failure::Io { path, err } => format!("error[io]: {}: {err}", path.display()),
            Failure::Lib(e) => format!("error[{}]: {e}", e.code()),
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

fn read(path: &Path) -> std::result::Result<Vec<u8>, Failure> {
    fs::read(path).map_err(|err| Failure::Io {
        path: path.to_owned(),
        err,
    })
}

fn read_text(path: &Path) -> std::result::Result<String, Failure> {
    let bytes = read(path)?;
    String::from_utf8(bytes).map_err(|_| Failure::Io {
        path: path.to_owned(),
        err: std::io::Error::new(std::io::ErrorKind::InvalidData, "not valid UTF-8"),
    })
}

fn write(path: &Path, data: &[u8]) -> Outcome {
    fs::write(path, data).map_err(|err| Failure::Io {
        path: path.to_owned(),
        err,
    })
}

fn parse_doc(text: &str, format: Option<DocFormat>) -> crate::Result<ColoredDoc> {
    let format = format.unwrap_or_else(|| {
        let head: String = text
            .trim_start()
            .chars()
            .take(14)
            .collect::<String>()
            .to_ascii_lowercase();
        if head.starts_with("<!doctype html") || head.starts_with("<html") {
            DocFormat::Html
        } else {
            DocFormat::Markup
        }
    });
    match format {
        DocFormat::Markup => from_markup(text),
        DocFormat::Html => from_html(text),
    }
}

fn cmd_embed(a: EmbedArgs) -> Outcome {
    let params = EmbedParams::new(a.method.into(), make_palette(a.colors)?)
        .with_mode(a.mode.into())
        .with_seed(a.seed);
    let cover = read_text(&a.cover)?;
    let secret = read(&a.secret)?;
    let doc = embed(&CoverText::new(&cover), &secret, &params)?;
    let rendered = match a.format {
        DocFormat::Markup => to_markup(&doc),
        DocFormat::Html => to_html(&doc),
    };
    write(&a.out, rendered.as_bytes())?;
    let secret_bits = 8 * secret.len() as u64;
    match measured_capacity(&doc, secret_bits, params.palette.terminator()) {
        Ok(fig) => println!(
            "secret bits {}, consumed characters {}, capacity {:.2}%",
            fig.secret_bits, fig.consumed_chars, fig.percent
        ),
        Err(_) => println!("secret bits {secret_bits}, no capacity figure"),
    }
    Ok(())
}

fn cmd_extract(a: ExtractArgs) -> Outcome {
    let params =
        EmbedParams::new(a.method.into(), make_palette(a.colors)?).with_mode(a.mode.into());
    let doc = parse_doc(&read_text(&a.input)?, a.format)?;
    let secret = extract(&doc, &params, a.bits)?;
    write(&a.out, &secret)
}

fn perm_table(sizes: &[usize], stirling: bool) -> crate::Result<String> {
    let mut out = String::from("n\tM\tP\texact%\trounded%");
    if stirling {
        out.push_str("\tstirling%");
    }
    out.push('\n');
    for &n in sizes {
        let row = theoretical_capacity_perm(n)?;
        let _ = write!(
            out,
            "{}\t{}\t{:.1}\t{:.2}\t{:.2}",
            n,
            row.bits,
            row.bytes(),
            row.percent_exact,
            row.percent_rounded
        );
        if stirling {
            let _ = write!(out, "\t{:.2}", stirling_capacity_perm(n)?);
        }
        out.push('\n');
    }
    Ok(out)
}

fn radix_table(sizes: &[usize]) -> crate::Result<String> {
    let mut out = String::from("B\texact%\trounded%\n");
    for &b in sizes {
        let c = theoretical_capacity_radix(b)?;
        let _ = writeln!(out, "{b}\t{c:.2}\t{:.1}", round_half_up(c, 1));
    }
    Ok(out)
}

fn cmd_capacity(c: CapacityCommand) -> Outcome {
    match c {
        CapacityCommand::Theoretical {
            method,
            colors,
            stirling,
        } => {
            let method: Method = method.into();
            let sizes: Vec<usize> = if colors == "all" {
                match method {
                    Method::Permutation => vec![10, 16, 20, 32, 60, 64],
                    Method::Radix => vec![2, 4, 8, 10, 16, 32, 64],
                }
            } else {
                let n = colors.parse().map_err(|_| {
                    Failure::Usage(format!(
                        "--colors expects a number or `all`, got {colors:?}"
                    ))
                })?;
                if !(MIN_COLORS..=MAX_COLORS).contains(&n) {
                    return Err(Error::domain(format!(
                        "palette size {n} outside {MIN_COLORS}..={MAX_COLORS}"
                    ))
                    .into());
                }
                vec![n]
            };
            let table = match method {
                Method::Permutation => perm_table(&sizes, stirling)?,
                Method::Radix if stirling => {
                    return Err(Failure::Usage(
                        "--stirling applies to the perm method".into(),
                    ))
                }
                Method::Radix => radix_table(&sizes)?,
            };
            print!("{table}");
        }
        CapacityCommand::Measure {
            input,
            secret_bits,
            format,
        } => {
            let doc = parse_doc(&read_text(&input)?, format)?;
            let fig = measured_capacity(&doc, secret_bits, TERMINATOR)?;
            println!(
                "secret bits {}, consumed characters {}, capacity {:.2}%",
                fig.secret_bits, fig.consumed_chars, fig.percent
            );
        }
    }
    Ok(())
}

fn require_dict(a: &CodecArgs) -> std::result::Result<&Path, Failure> {
    a.dict
        .as_deref()
        .ok_or_else(|| Failure::Usage("the shared variant needs --dict".into()))
}

fn cmd_lzw(c: LzwCommand) -> Outcome {
    match c {
        LzwCommand::Report { input, csv } => {
            let report = size_report(&read(&input)?)?;
            print!(
                "{}",
                if csv {
                    report.to_csv()
                } else {
                    report.to_table()
                }
            );
        }
        LzwCommand::Encode(a) => {
            if matches!(a.variant, VariantArg::Shared) {
                require_dict(&a)?;
            }
            let src = read(&a.input)?;
            match a.variant {
                VariantArg::Fixed => write(&a.out, lzw_fixed_encode(&src)?.as_bytes())?,
                VariantArg::Compress => write(&a.out, lzw_compress_encode(&src)?.as_bytes())?,
                VariantArg::Shared => {
                    let (dict, stream) = lzw_shared_encode(&src)?;
                    write(require_dict(&a)?, dict.entries())?;
                    write(&a.out, stream.as_bytes())?;
                }
            }
        }
        LzwCommand::Decode(a) => {
            if matches!(a.variant, VariantArg::Shared) {
                require_dict(&a)?;
            }
            let bytes = read(&a.input)?;
            let out = match a.variant {
                VariantArg::Fixed => lzw_fixed_decode(&read_fixed_stream(&bytes)?)?,
                VariantArg::Compress => lzw_compress_decode(&read_compress_stream(&bytes)?)?,
                VariantArg::Shared => {
                    let dict = SharedDictionary::new(read(require_dict(&a)?)?)?;
                    lzw_shared_decode(&dict, &read_shared_stream(&dict, &bytes))?
                }
            };
            write(&a.out, &out)?;
        }
    }
    Ok(())
}

fn cmd_palette(a: PaletteArgs) -> Outcome {
    let palette = make_palette(a.colors)?;
    let rows: Vec<(String, _)> = palette
        .colors()
        .iter()
        .enumerate()
        .map(|(i, &c)| (i.to_string(), c))
        .chain(std::iter::once((
            "terminator".to_string(),
            palette.terminator(),
        )))
        .collect();
    match a.format {
        PaletteFormat::Text => {
            for (label, color) in rows {
                println!("{label:>10}  {color}");
            }
        }
        PaletteFormat::Html => {
            let mut doc = ColoredDoc::new();
            for (label, color) in rows {
                doc.push_str(&format!("{label} {color}"), Some(color));
                doc.push('\n', None);
            }
            print!("{}", to_html(&doc));
        }
    }
    Ok(())
}

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let outcome = match cli.command {
        Command::Embed(a) => cmd_embed(a),
        Command::Extract(a) => cmd_extract(a),
        Command::Capacity(c) => cmd_capacity(c),
        Command::Lzw(c) => cmd_lzw(c),
        Command::Palette(a) => cmd_palette(a),
    };
    match outcome {
        Ok(()) => 0,
        Err(f) => {
            eprintln!("colorstego: {}", f.line());
            f.exit_code()
        }
    }
}
