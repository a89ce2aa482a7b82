use crate::doc::Rgb;
use crate::error::{Error, Result};

pub const MIN_COLORS: usize = 2;
pub const MAX_COLORS: usize = 64;

/// Terminator of every generated palette. Gray cannot be produced at the
/// saturation the generator uses.
pub const TERMINATOR: Rgb = Rgb::new(0x77, 0x77, 0x77);

const SATURATION: f64 = 0.75;
const VALUE: f64 = 0.90;

/// An ordered color table shared by sender and receiver, plus one reserved
/// color marking the end of the payload.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Palette {
    colors: Vec<Rgb>,
    terminator: Rgb,
}

fn hsv_to_rgb(hue: f64, s: f64, v: f64) -> Rgb {
    let c = v * s;
    let h = hue / 60.0;
    let x = c * (1.0 - (h % 2.0 - 1.0).abs());
    let m = v - c;
    let (r, g, b) = match h as u32 {
        0 => (c, x, 0.0),
        1 => (x, c, 0.0),
        2 => (0.0, c, x),
        3 => (0.0, x, c),
        4 => (x, 0.0, c),
        _ => (c, 0.0, x),
    };
    let channel = |u: f64| (255.0 * (u + m) + 0.5).floor() as u8;
    Rgb::new(channel(r), channel(g), channel(b))
}

impl Palette {
    /// `size` evenly spaced hues at saturation 0.75 and value 0.90, with the
    /// terminator [`TERMINATOR`].
    pub fn generate(size: usize) -> Result<Self> {
        check_size(size)?;
        let colors = (0..size)
            .map(|k| hsv_to_rgb(360.0 * k as f64 / size as f64, SATURATION, VALUE))
            .collect();
        Palette::new(colors, TERMINATOR)
    }

    pub fn new(colors: Vec<Rgb>, terminator: Rgb) -> Result<Self> {
        check_size(colors.len())?;
        for (i, c) in colors.iter().enumerate() {
            if *c == terminator {
                return Err(Error::domain(format!("color {i} equals the terminator")));
            }
            if colors[..i].contains(c) {
                return Err(Error::domain(format!("color {c} appears twice")));
            }
        }
        Ok(Palette { colors, terminator })
    }

    pub fn size(&self) -> usize {
        self.colors.len()
    }

    pub fn colors(&self) -> &[Rgb] {
        &self.colors
    }

    pub fn color(&self, index: usize) -> Rgb {
        self.colors[index]
    }

    pub fn terminator(&self) -> Rgb {
        self.terminator
    }

    pub fn index_of(&self, color: Rgb) -> Option<usize> {
        self.colors.iter().position(|&c| c == color)
    }
}

fn check_size(size: usize) -> Result<()> {
    if !(MIN_COLORS..=MAX_COLORS).contains(&size) {
        return Err(Error::domain(format!(
            "palette size {size} outside {MIN_COLORS}..={MAX_COLORS}"
        )));
    }
    Ok(())
}

/// Same as [`Palette::generate`].
pub fn make_palette(size: usize) -> Result<Palette> {
    Palette::generate(size)
}
