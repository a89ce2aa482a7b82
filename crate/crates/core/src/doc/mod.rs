//! Colored documents: text split into runs that share one optional color.
//!
//! Two serializations are provided. The inline markup form is the exact,
//! diff-friendly one:
//!
//! ```text
//! document := item*
//! item     := plain-char | escape | run
//! run      := "{" "#" hex6 "|" (plain-char | escape)* "}"
//! escape   := "\{" | "\}" | "\|" | "\\"
//! ```
//!
//! where `plain-char` is any character other than `{ } | \`. Hex digits are
//! written in lowercase and read in either case. The HTML form is meant for
//! viewing; see [`to_html`] for its exact skeleton.

mod html;
mod markup;

use std::fmt;
use std::str::FromStr;

pub use html::{from_html, to_html, HTML_FOOTER, HTML_HEADER};
pub use markup::{from_markup, to_markup};

use crate::error::{Error, Result};

/// A 24-bit color.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rgb(pub [u8; 3]);

impl Rgb {
    pub const fn new(r: u8, g: u8, b: u8) -> Self {
        Rgb([r, g, b])
    }

    pub fn hex(&self) -> String {
        format!("#{:02x}{:02x}{:02x}", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Display for Rgb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.hex())
    }
}

impl fmt::Debug for Rgb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rgb({})", self.hex())
    }
}

impl FromStr for Rgb {
    type Err = Error;

    /// Parses `#rrggbb`, case-insensitive.
    fn from_str(s: &str) -> Result<Self> {
        let digits = s
            .strip_prefix('#')
            .filter(|d| d.len() == 6 && d.bytes().all(|b| b.is_ascii_hexdigit()))
            .ok_or_else(|| Error::parse(0, format!("invalid color {s:?}")))?;
        let channel = |i: usize| u8::from_str_radix(&digits[i..i + 2], 16).unwrap_or_default();
        Ok(Rgb([channel(0), channel(2), channel(4)]))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Run {
    pub text: String,
    pub color: Option<Rgb>,
}

/// A sequence of runs in canonical form: no run is empty and adjacent runs
/// never share a color.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ColoredDoc {
    runs: Vec<Run>,
}

impl ColoredDoc {
    pub fn new() -> Self {
        Self::default()
    }

    /// An uncolored document.
    pub fn plain(text: &str) -> Self {
        let mut doc = Self::new();
        doc.push_str(text, None);
        doc
    }

    pub fn push(&mut self, ch: char, color: Option<Rgb>) {
        match self.runs.last_mut() {
            Some(last) if last.color == color => last.text.push(ch),
            _ => self.runs.push(Run {
                text: ch.to_string(),
                color,
            }),
        }
    }

    pub fn push_str(&mut self, text: &str, color: Option<Rgb>) {
        if text.is_empty() {
            return;
        }
        match self.runs.last_mut() {
            Some(last) if last.color == color => last.text.push_str(text),
            _ => self.runs.push(Run {
                text: text.to_string(),
                color,
            }),
        }
    }

    pub fn runs(&self) -> &[Run] {
        &self.runs
    }

    /// Every character with its color, in reading order.
    pub fn chars(&self) -> impl Iterator<Item = (char, Option<Rgb>)> + '_ {
        self.runs
            .iter()
            .flat_map(|run| run.text.chars().map(move |c| (c, run.color)))
    }

    /// The text with colors removed.
    pub fn plain_text(&self) -> String {
        self.runs.iter().map(|r| r.text.as_str()).collect()
    }

    pub fn char_count(&self) -> usize {
        self.runs.iter().map(|r| r.text.chars().count()).sum()
    }

    /// Replaces the color of the character at `index`.
    pub fn recolor(&self, index: usize, color: Option<Rgb>) -> ColoredDoc {
        self.chars()
            .enumerate()
            .map(|(i, (c, old))| (c, if i == index { color } else { old }))
            .collect()
    }
}

impl FromIterator<(char, Option<Rgb>)> for ColoredDoc {
    fn from_iter<I: IntoIterator<Item = (char, Option<Rgb>)>>(iter: I) -> Self {
        let mut doc = ColoredDoc::new();
        for (c, color) in iter {
            doc.push(c, color);
        }
        doc
    }
}

#[cfg(test)]
pub(crate) mod testing {
    use super::*;
    use proptest::prelude::*;

    pub fn arb_doc() -> impl Strategy<Value = ColoredDoc> {
        let color = prop_oneof![
            Just(None),
            prop::sample::select(vec![
                Rgb::new(0xe6, 0x39, 0x39),
                Rgb::new(0x11, 0x22, 0x33),
                Rgb::new(0xff, 0xff, 0xff),
            ])
            .prop_map(Some),
            any::<[u8; 3]>().prop_map(|c| Some(Rgb(c))),
        ];
        let ch = prop_oneof![
            4 => prop::char::range('a', 'z'),
            1 => prop::sample::select(vec![
                ' ', '\n', '\t', '\r', '{', '}', '|', '\\', '<', '>', '&', '"', '\'', ';', '#', 'é', '€', '😀',
            ]),
        ];
        prop::collection::vec((ch, color), 0..80).prop_map(|items| items.into_iter().collect())
    }
}
