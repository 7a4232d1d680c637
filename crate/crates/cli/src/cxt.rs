//! Burmeister `.cxt`: `B`, an optional name line, object and attribute counts,
//! the names, then one row of `X`/`.` per object.

use crate::error::{CliError, Result};
use galois_factor_core::bitset::BitSet;
use galois_factor_core::boolean::BooleanContext;
use std::collections::HashSet;

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn next(&mut self, what: &str) -> Result<(usize, &'a str)> {
        match self.inner.next() {
            Some((i, l)) => {
                self.last = i + 1;
                Ok((i + 1, l.trim_end_matches('\r')))
            }
            None => Err(CliError::format(
                self.last + 1,
                format!("unexpected end of file, expected {what}"),
            )),
        }
    }

    fn next_non_blank(&mut self, what: &str) -> Result<(usize, &'a str)> {
        loop {
            let (n, l) = self.next(what)?;
            if !l.trim().is_empty() {
                return Ok((n, l));
            }
        }
    }
}

fn count(line: usize, text: &str, what: &str) -> Result<usize> {
    text.trim().parse().map_err(|_| {
        CliError::format(
            line,
            format!("expected the number of {what}, found `{text}`"),
        )
    })
}

pub fn parse_cxt(text: &str) -> Result<BooleanContext> {
    let text = text.strip_prefix('\u{feff}').unwrap_or(text);
    let mut lines = Lines {
        inner: text.lines().enumerate(),
        last: 0,
    };
    let (n, header) = lines.next_non_blank("the header `B`")?;
    if header.trim() != "B" {
        return Err(CliError::format(
            n,
            format!("malformed header: expected `B`, found `{}`", header.trim()),
        ));
    }
    // the name line is optional and may be blank
    let (mut n, mut l) = lines.next("the object count")?;
    if l.trim().is_empty() || l.trim().parse::<usize>().is_err() {
        (n, l) = lines.next_non_blank("the object count")?;
    }
    let objects = count(n, l, "objects")?;
    if objects == 0 {
        return Err(CliError::format(n, "empty object set"));
    }
    let (n, l) = lines.next_non_blank("the attribute count")?;
    let attributes = count(n, l, "attributes")?;
    if attributes == 0 {
        return Err(CliError::format(n, "empty attribute set"));
    }

    let mut read_names = |k: usize, what: &str| -> Result<Vec<String>> {
        let mut names = Vec::with_capacity(k);
        let mut seen = HashSet::new();
        for i in 0..k {
            let (n, l) = if i == 0 {
                lines.next_non_blank(what)?
            } else {
                lines.next(what)?
            };
            let name = l.trim().to_string();
            if name.is_empty() {
                return Err(CliError::format(n, format!("empty {what}")));
            }
            if !seen.insert(name.clone()) {
                return Err(CliError::format(n, format!("duplicate {what} `{name}`")));
            }
            names.push(name);
        }
        Ok(names)
    };
    let object_names = read_names(objects, "object name")?;
    let attribute_names = read_names(attributes, "attribute name")?;

    let mut rows = vec![BitSet::empty(objects); attributes];
    for (b, object) in object_names.iter().enumerate() {
        let (n, l) = if b == 0 {
            lines.next_non_blank("an incidence row")?
        } else {
            lines.next("an incidence row")?
        };
        let cells = l.trim_end();
        if cells.chars().count() != attributes {
            return Err(CliError::format(
                n,
                format!(
                    "row for object `{}` has {} cells, expected {attributes}",
                    object,
                    cells.chars().count()
                ),
            ));
        }
        for (a, c) in cells.chars().enumerate() {
            match c {
                'X' | 'x' => rows[a].insert(b),
                '.' => {}
                other => {
                    return Err(CliError::format(
                        n,
                        format!("column {}: expected `X` or `.`, found `{other}`", a + 1),
                    ))
                }
            }
        }
    }
    for (i, l) in lines.inner.by_ref() {
        if !l.trim().is_empty() {
            return Err(CliError::format(
                i + 1,
                "unexpected content after the incidence rows",
            ));
        }
    }
    Ok(BooleanContext::from_rows(
        attribute_names,
        object_names,
        rows,
    )?)
}

pub fn emit_cxt(ctx: &BooleanContext) -> String {
    let mut out = format!("B\n\n{}\n{}\n\n", ctx.object_count(), ctx.attribute_count());
    for name in ctx.objects().iter().chain(ctx.attributes()) {
        out.push_str(name);
        out.push('\n');
    }
    for b in 0..ctx.object_count() {
        for a in 0..ctx.attribute_count() {
            out.push(if ctx.incidence(a, b) { 'X' } else { '.' });
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = "B\n\n2\n3\n\nb1\nb2\na1\na2\na3\nX.X\n.X.\n";

    fn line_of(e: CliError) -> (usize, String) {
        match e {
            CliError::Format { line, message } => (line, message),
            other => panic!("expected a format error, got {other}"),
        }
    }

    #[test]
    fn parses_and_round_trips() {
        let ctx = parse_cxt(SMALL).unwrap();
        assert_eq!(ctx.attribute_count(), 3);
        assert_eq!(ctx.object_count(), 2);
        assert!(ctx.incidence(0, 0) && ctx.incidence(2, 0) && ctx.incidence(1, 1));
        assert_eq!(ctx.incidence_count(), 3);
        assert_eq!(emit_cxt(&ctx), SMALL);
        assert_eq!(parse_cxt(&emit_cxt(&ctx)).unwrap(), ctx);
    }

    #[test]
    fn name_line_is_optional() {
        let named = SMALL.replacen("\n\n2", "\nexample\n2", 1);
        let bare = SMALL.replacen("\n\n2", "\n2", 1);
        let base = parse_cxt(SMALL).unwrap();
        assert_eq!(parse_cxt(&named).unwrap(), base);
        assert_eq!(parse_cxt(&bare).unwrap(), base);
        assert_eq!(parse_cxt(&SMALL.replace('\n', "\r\n")).unwrap(), base);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let (line, msg) = line_of(parse_cxt("C\n").unwrap_err());
        assert_eq!(line, 1);
        assert!(msg.contains("malformed header"));

        let (line, msg) = line_of(parse_cxt("B\n\n0\n3\n").unwrap_err());
        assert_eq!((line, msg.as_str()), (3, "empty object set"));

        let (line, msg) = line_of(parse_cxt(&SMALL.replace(".X.", ".X")).unwrap_err());
        assert_eq!(line, 12);
        assert!(msg.contains("2 cells, expected 3"), "{msg}");

        let (line, msg) = line_of(parse_cxt(&SMALL.replace("a3", "a1")).unwrap_err());
        assert_eq!(line, 10);
        assert!(msg.contains("duplicate attribute name `a1`"));

        let (line, msg) = line_of(parse_cxt(&SMALL.replace("X.X", "X?X")).unwrap_err());
        assert_eq!(line, 11);
        assert!(msg.contains("column 2"));

        let (line, _) = line_of(parse_cxt("B\n\n2\n3\n\nb1\n").unwrap_err());
        assert_eq!(line, 7);
    }
}
