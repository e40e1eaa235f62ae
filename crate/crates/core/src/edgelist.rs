//! Plain-text edge-list format.
//!
//! ```text
//! # optional comments
//! 3        <- vertex count
//! 0 1      <- one arc per line, 0 <= u, v < n
//! 1 1
//! ```
//!
//! `#` starts a comment, blank lines are ignored and repeated arcs are
//! rejected. [`format_digraph`] writes arcs in row-major order, which is the
//! canonical form.

use std::fmt::Write;

use crate::digraph::Digraph;
use crate::error::{Error, Result};

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let mut digraph: Option<Digraph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let number = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::parse(line_no, format!("expected a nonnegative integer, got `{s}`")))
        };
        match (&mut digraph, fields.as_slice()) {
            (None, [n]) => {
                let n = number(n)?;
                if n > Digraph::MAX_VERTICES {
                    return Err(Error::parse(
                        line_no,
                        format!("at most {} vertices supported, got {n}", Digraph::MAX_VERTICES),
                    ));
                }
                digraph = Some(Digraph::empty(n));
            }
            (None, _) => {
                return Err(Error::parse(line_no, "expected the vertex count before any arc"));
            }
            (Some(_), [_]) => return Err(Error::parse(line_no, "duplicate header")),
            (Some(d), [u, v]) => {
                let (u, v) = (number(u)?, number(v)?);
                for w in [u, v] {
                    if w >= d.n() {
                        return Err(Error::parse(
                            line_no,
                            format!("vertex {w} out of range for {} vertices", d.n()),
                        ));
                    }
                }
                if d.has_arc(u, v) {
                    return Err(Error::parse(line_no, format!("duplicate arc {u} {v}")));
                }
                d.add_arc(u, v);
            }
            (Some(_), _) => {
                return Err(Error::parse(line_no, format!("malformed arc line `{line}`")));
            }
        }
    }
    digraph.ok_or_else(|| Error::parse(text.lines().count().max(1), "missing vertex count"))
}

/// Parses the inline form `n;u v;u v;...` (semicolons stand for newlines).
pub fn parse_inline(inline: &str) -> Result<Digraph> {
    parse_digraph(&inline.replace(';', "\n"))
}

pub fn format_digraph(d: &Digraph) -> String {
    let mut out = format!("{}\n", d.n());
    for (u, v) in d.arcs() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_examples() {
        let d = parse_digraph("3\n0 1\n1 1\n2 2\n").unwrap();
        assert_eq!(d, Digraph::from_one_based(3, &[(1, 2), (2, 2), (3, 3)]).unwrap());
        assert_eq!(parse_digraph("0\n").unwrap(), Digraph::empty(0));
        let single = parse_digraph("2\n0 1\n").unwrap();
        assert_eq!(single.arc_count(), 1);
        assert_eq!(format_digraph(&single), "2\n0 1\n");
    }

    #[test]
    fn comments_and_blank_lines() {
        let d = parse_digraph("# header\n\n  3 # three vertices\n0 2 # arc\n\n").unwrap();
        assert_eq!(d, Digraph::from_arcs(3, [(0, 2)]).unwrap());
        assert_eq!(
            parse_inline("3;0 1;1 1;2 2").unwrap(),
            parse_digraph("3\n0 1\n1 1\n2 2").unwrap()
        );
    }

    #[test]
    fn errors_carry_line_numbers() {
        let line_of = |text: &str| match parse_digraph(text) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(line_of("2\n0 x\n"), 2);
        assert_eq!(line_of("2\n0 1\n0 2\n"), 3);
        assert_eq!(line_of("2\n0 1\n3\n"), 3);
        assert_eq!(line_of("2\n0 1\n0 1\n"), 3);
        assert_eq!(line_of("0 1\n"), 1);
        assert_eq!(line_of("2\n0 1 1\n"), 2);
        assert_eq!(line_of("# only a comment\n"), 1);
        assert_eq!(line_of("65\n"), 1);
    }

    proptest! {
        #[test]
        fn format_parse_roundtrip(n in 0usize..7, seed in any::<u64>()) {
            let d = crate::digraph::random_digraph(n, 0.4, seed).unwrap();
            let text = format_digraph(&d);
            prop_assert_eq!(parse_digraph(&text).unwrap(), d);
        }
    }
}
