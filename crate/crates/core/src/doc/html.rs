use super::{ColoredDoc, Rgb};
use crate::error::{Error, Result};

/// Everything [`to_html`] writes before the body content.
pub const HTML_HEADER: &str = "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\"/>\n<title>colored text</title>\n</head>\n<body>\n";
/// Everything [`to_html`] writes after the body content.
pub const HTML_FOOTER: &str = "\n</body>\n</html>\n";

fn escape_into(out: &mut String, text: &str) {
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '\n' => out.push_str("<br/>"),
            _ => out.push(c),
        }
    }
}

/// Renders a standalone page: [`HTML_HEADER`], the body, [`HTML_FOOTER`].
///
/// Each colored run becomes `<span style="color:#rrggbb">…</span>`, text
/// escapes `&`, `<` and `>`, and newlines become `<br/>`. The body is written
/// on a single line.
pub fn to_html(doc: &ColoredDoc) -> String {
    let mut out = String::from(HTML_HEADER);
    for run in doc.runs() {
        match run.color {
            None => escape_into(&mut out, &run.text),
            Some(color) => {
                out.push_str("<span style=\"color:");
                out.push_str(&color.hex());
                out.push_str("\">");
                escape_into(&mut out, &run.text);
                out.push_str("</span>");
            }
        }
    }
    out.push_str(HTML_FOOTER);
    out
}

/// The slice of `s` holding body content, and its character offset.
fn body(s: &str) -> (&str, usize) {
    let Some(open) = s.find("<body>") else {
        return (s, 0);
    };
    let mut start = open + "<body>".len();
    if s[start..].starts_with('\n') {
        start += 1;
    }
    let mut end = s
        .rfind("</body>")
        .filter(|&e| e >= start)
        .unwrap_or(s.len());
    if s[start..end].ends_with('\n') {
        end -= 1;
    }
    (&s[start..end], s[..start].chars().count())
}

fn span_color(tag: &str) -> Option<Rgb> {
    let rest = tag.strip_prefix("span")?;
    let rest = rest.trim_start();
    let rest = rest.strip_prefix("style")?.trim_start();
    let rest = rest.strip_prefix('=')?.trim();
    let quote = rest.chars().next().filter(|q| *q == '"' || *q == '\'')?;
    let value = rest[1..].strip_suffix(quote)?;
    let value = value.trim().trim_end_matches(';').trim_end();
    let (name, color) = value.split_once(':')?;
    if !name.trim().eq_ignore_ascii_case("color") {
        return None;
    }
    color.trim().parse().ok()
}

fn entity(name: &str) -> Option<char> {
    match name {
        "amp" => Some('&'),
        "lt" => Some('<'),
        "gt" => Some('>'),
        "quot" => Some('"'),
        "apos" => Some('\''),
        _ => {
            let num = name.strip_prefix('#')?;
            let code = match num.strip_prefix(['x', 'X']) {
                Some(hex) => u32::from_str_radix(hex, 16).ok()?,
                None => num.parse().ok()?,
            };
            char::from_u32(code)
        }
    }
}

/// Parses the dialect written by [`to_html`]. Attribute spacing, quote style,
/// a trailing `;` and uppercase hex are tolerated; any other tag, a span
/// without a color style, or nested spans are errors. Without a `<body>`
/// element the whole input is read as a fragment.
pub fn from_html(s: &str) -> Result<ColoredDoc> {
    let (content, offset) = body(s);
    let chars: Vec<char> = content.chars().collect();
    let mut doc = ColoredDoc::new();
    let mut color: Option<Rgb> = None;
    let mut i = 0;
    while i < chars.len() {
        let pos = offset + i;
        match chars[i] {
            '<' => {
                let close = chars[i..]
                    .iter()
                    .position(|&c| c == '>')
                    .ok_or_else(|| Error::parse(pos, "unterminated tag"))?;
                let tag: String = chars[i + 1..i + close].iter().collect();
                let tag = tag.trim();
                let lower = tag.to_ascii_lowercase();
                match lower.as_str() {
                    "br" | "br/" | "br /" => doc.push('\n', color),
                    "/span" => {
                        if color.take().is_none() {
                            return Err(Error::parse(pos, "</span> without an open span"));
                        }
                    }
                    t if t == "span" || t.starts_with("span ") => {
                        if color.is_some() {
                            return Err(Error::parse(pos, "nested span"));
                        }
                        let rgb = span_color(&lower).ok_or_else(|| {
                            Error::parse(pos, format!("span without a color style: <{tag}>"))
                        })?;
                        color = Some(rgb);
                    }
                    _ => return Err(Error::parse(pos, format!("unsupported tag <{tag}>"))),
                }
                i += close + 1;
            }
            '&' => {
                let semi = chars[i..]
                    .iter()
                    .take(12)
                    .position(|&c| c == ';')
                    .ok_or_else(|| Error::parse(pos, "unterminated entity"))?;
                let name: String = chars[i + 1..i + semi].iter().collect();
                let c = entity(&name)
                    .ok_or_else(|| Error::parse(pos, format!("unknown entity &{name};")))?;
                doc.push(c, color);
                i += semi + 1;
            }
            c => {
                doc.push(c, color);
                i += 1;
            }
        }
    }
    if color.is_some() {
        return Err(Error::parse(offset + chars.len(), "unclosed span"));
    }
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doc::testing::arb_doc;
    use proptest::prelude::*;

    #[test]
    fn skeleton() {
        let mut d = ColoredDoc::new();
        d.push('a', Some(Rgb::new(0x11, 0x22, 0x33)));
        let html = to_html(&d);
        assert_eq!(
            html,
            format!("{HTML_HEADER}<span style=\"color:#112233\">a</span>{HTML_FOOTER}")
        );
        assert!(to_html(&ColoredDoc::plain("a<b")).contains("a&lt;b"));
        assert!(to_html(&ColoredDoc::plain("x\ny")).contains("x<br/>y"));
    }

    #[test]
    fn tolerant_fragments() {
        let d = from_html("<span style=\"color:#AABBCC\">x</span>").unwrap();
        assert_eq!(d.runs()[0].color, Some(Rgb::new(0xaa, 0xbb, 0xcc)));
        assert_eq!(d.plain_text(), "x");
        let d = from_html("<SPAN  style = 'color: #aabbcc;' >x</SPAN>y<br>").unwrap();
        assert_eq!(d.runs()[0].color, Some(Rgb::new(0xaa, 0xbb, 0xcc)));
        assert_eq!(d.plain_text(), "xy\n");
        assert_eq!(from_html("&#65;&#x42;&quot;").unwrap().plain_text(), "AB\"");
    }

    #[test]
    fn rejects() {
        for bad in [
            "<span><span>",
            "<span style=\"color:#010203\"><span style=\"color:#010203\">a</span></span>",
            "<span style=\"font-weight:bold\">a</span>",
            "<b>a</b>",
            "</span>",
            "<span style=\"color:#010203\">a",
            "&nope;",
            "a &amp",
            "<span",
        ] {
            assert!(matches!(from_html(bad), Err(Error::Parse { .. })), "{bad}");
        }
    }

    proptest! {
        #[test]
        fn roundtrip(doc in arb_doc()) {
            let html = to_html(&doc);
            prop_assert_eq!(from_html(&html).unwrap(), doc);
        }
    }
}
