use super::{ColoredDoc, Rgb};
use crate::error::{Error, Result};

fn escape_into(out: &mut String, text: &str) {
    for c in text.chars() {
        if matches!(c, '{' | '}' | '|' | '\\') {
            out.push('\\');
        }
        out.push(c);
    }
}

pub fn to_markup(doc: &ColoredDoc) -> String {
    let mut out = String::new();
    for run in doc.runs() {
        match run.color {
            None => escape_into(&mut out, &run.text),
            Some(color) => {
                out.push('{');
                out.push_str(&color.hex());
                out.push('|');
                escape_into(&mut out, &run.text);
                out.push('}');
            }
        }
    }
    out
}

/// Parses the inline markup, merging adjacent runs of the same color.
/// Error positions count characters from the start of `s`.
pub fn from_markup(s: &str) -> Result<ColoredDoc> {
    let chars: Vec<char> = s.chars().collect();
    let mut doc = ColoredDoc::new();
    let mut color: Option<Rgb> = None;
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            '\\' => {
                match chars.get(i + 1) {
                    Some(&e @ ('{' | '}' | '|' | '\\')) => doc.push(e, color),
                    Some(other) => {
                        return Err(Error::parse(i, format!("invalid escape \\{other}")))
                    }
                    None => return Err(Error::parse(i, "dangling backslash")),
                }
                i += 2;
            }
            '{' => {
                if color.is_some() {
                    return Err(Error::parse(i, "nested run"));
                }
                let hex: String = chars
                    .get(i + 1..i + 8)
                    .map(|cs| cs.iter().collect())
                    .unwrap_or_default();
                match hex.parse::<Rgb>() {
                    Ok(rgb) if chars.get(i + 8) == Some(&'|') => color = Some(rgb),
                    _ => return Err(Error::parse(i, "run must start with {#rrggbb|")),
                }
                i += 9;
            }
            '}' => {
                if color.take().is_none() {
                    return Err(Error::parse(i, "unmatched }"));
                }
                i += 1;
            }
            '|' => return Err(Error::parse(i, "unescaped |")),
            _ => {
                doc.push(c, color);
                i += 1;
            }
        }
    }
    if color.is_some() {
        return Err(Error::parse(chars.len(), "unterminated run"));
    }
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doc::testing::arb_doc;
    use proptest::prelude::*;

    #[test]
    fn rendering() {
        assert_eq!(to_markup(&ColoredDoc::plain("hi")), "hi");
        let mut d = ColoredDoc::new();
        d.push('O', Some(Rgb::new(0xe6, 0x39, 0x39)));
        assert_eq!(to_markup(&d), "{#e63939|O}");
        let mut d = ColoredDoc::plain("a{b}");
        d.push_str("|\\", Some(Rgb::new(1, 2, 3)));
        assert_eq!(to_markup(&d), "a\\{b\\}{#010203|\\|\\\\}");
    }

    #[test]
    fn parsing() {
        let d = from_markup("{#ff0000|a}{#ff0000|b}").unwrap();
        assert_eq!(d.runs().len(), 1);
        assert_eq!(d.runs()[0].text, "ab");
        assert_eq!(d.runs()[0].color, Some(Rgb::new(255, 0, 0)));

        assert_eq!(from_markup("\\{x\\}").unwrap(), ColoredDoc::plain("{x}"));
        assert_eq!(
            from_markup("{#AABBCC|x}").unwrap().runs()[0].color,
            Some(Rgb::new(0xaa, 0xbb, 0xcc))
        );
        assert_eq!(from_markup("{#aabbcc|}").unwrap(), ColoredDoc::new());
    }

    #[test]
    fn malformed() {
        let err = from_markup("{#ff0000|a").unwrap_err();
        assert_eq!(err, Error::parse(10, "unterminated run"));
        for bad in [
            "\\x",
            "\\",
            "}",
            "|",
            "{#ff00|a}",
            "{ff0000|a}",
            "{#ff0000a}",
            "{#ff0000|{#00ff00|a}}",
            "{#ff0000",
        ] {
            assert!(
                matches!(from_markup(bad), Err(Error::Parse { .. })),
                "{bad}"
            );
        }
    }

    proptest! {
        #[test]
        fn roundtrip(doc in arb_doc()) {
            let text = to_markup(&doc);
            prop_assert_eq!(from_markup(&text).unwrap(), doc);
        }
    }
}
