//! The `.sr` text format for defining finite semirings by tables.
//!
//! The format is line oriented and trivially diffable:
//!
//! ```text
//! semiring boolean
//! elements 0 1
//! zero 0
//! one 1
//! add:
//! 0 1
//! 1 1
//! mul:
//! 0 0
//! 0 1
//! ```
//!
//! Row `i`, column `j` of a table gives `op(elem_i, elem_j)`. Tokens are
//! runs of non-whitespace characters excluding `#` (so names like `1+x`
//! work). `#` starts a comment to end of line. Blank lines are skipped,
//! whitespace within lines is free, and both LF and CRLF line endings are
//! accepted. Sections must appear in the order shown.

use crate::semiring::SemiringTable;
use thiserror::Error;

/// A parsed `.sr` document. Structurally checked (every table token names
/// an element, rows have the right length), but the semiring axioms are
/// not implied; run [`SemiringTable::validate`] on [`to_table`]'s result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiringDocument {
    pub name: String,
    pub element_names: Vec<String>,
    pub zero_name: String,
    pub one_name: String,
    pub add_rows: Vec<Vec<String>>,
    pub mul_rows: Vec<Vec<String>>,
}

/// Parse errors with 1-based line numbers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: expected `{expected}`, found {found:?}")]
    UnexpectedLine {
        line: usize,
        expected: &'static str,
        found: String,
    },
    #[error("line {line}: token {token:?} is not a declared element")]
    UnknownToken { line: usize, token: String },
    #[error("line {line}: duplicate element name {name:?}")]
    DuplicateElement { line: usize, name: String },
    #[error("missing section `{section}` (input ended early)")]
    MissingSection { section: &'static str },
    #[error("line {line}: row has {got} tokens, expected {expected}")]
    RowLength {
        line: usize,
        expected: usize,
        got: usize,
    },
    #[error("line {line}: trailing content {found:?} after the tables")]
    TrailingContent { line: usize, found: String },
}

/// Comment-stripped, tokenized lines with their original line numbers.
struct Lines<'a> {
    items: Vec<(usize, Vec<&'a str>)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let mut items = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.strip_suffix('\r').unwrap_or(raw);
            let line = line.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if !tokens.is_empty() {
                items.push((idx + 1, tokens));
            }
        }
        Lines { items, pos: 0 }
    }

    fn next(&mut self, section: &'static str) -> Result<(usize, Vec<&'a str>), ParseError> {
        if self.pos >= self.items.len() {
            return Err(ParseError::MissingSection { section });
        }
        let item = self.items[self.pos].clone();
        self.pos += 1;
        Ok(item)
    }
}

/// Parses `.sr` text into a document.
pub fn parse(text: &str) -> Result<SemiringDocument, ParseError> {
    let mut lines = Lines::new(text);

    let (lno, toks) = lines.next("semiring")?;
    if toks.len() != 2 || toks[0] != "semiring" {
        return Err(ParseError::UnexpectedLine {
            line: lno,
            expected: "semiring <name>",
            found: toks.join(" "),
        });
    }
    let name = toks[1].to_string();

    let (lno, toks) = lines.next("elements")?;
    if toks.len() < 2 || toks[0] != "elements" {
        return Err(ParseError::UnexpectedLine {
            line: lno,
            expected: "elements <tok> ...",
            found: toks.join(" "),
        });
    }
    let mut element_names: Vec<String> = Vec::with_capacity(toks.len() - 1);
    for t in &toks[1..] {
        if element_names.iter().any(|e| e == t) {
            return Err(ParseError::DuplicateElement {
                line: lno,
                name: t.to_string(),
            });
        }
        element_names.push(t.to_string());
    }
    let n = element_names.len();

    let mut named = |keyword: &'static str,
                     lines: &mut Lines|
     -> Result<String, ParseError> {
        let (lno, toks) = lines.next(keyword)?;
        if toks.len() != 2 || toks[0] != keyword {
            return Err(ParseError::UnexpectedLine {
                line: lno,
                expected: match keyword {
                    "zero" => "zero <tok>",
                    _ => "one <tok>",
                },
                found: toks.join(" "),
            });
        }
        if !element_names.iter().any(|e| e == toks[1]) {
            return Err(ParseError::UnknownToken {
                line: lno,
                token: toks[1].to_string(),
            });
        }
        Ok(toks[1].to_string())
    };
    let zero_name = named("zero", &mut lines)?;
    let one_name = named("one", &mut lines)?;

    let mut section = |header: &'static str,
                       lines: &mut Lines|
     -> Result<Vec<Vec<String>>, ParseError> {
        let (lno, toks) = lines.next(header)?;
        if toks.len() != 1 || toks[0] != header {
            return Err(ParseError::UnexpectedLine {
                line: lno,
                expected: header,
                found: toks.join(" "),
            });
        }
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            let (lno, toks) = lines.next(header)?;
            if toks.len() != n {
                return Err(ParseError::RowLength {
                    line: lno,
                    expected: n,
                    got: toks.len(),
                });
            }
            let mut row = Vec::with_capacity(n);
            for t in toks {
                if !element_names.iter().any(|e| e == t) {
                    return Err(ParseError::UnknownToken {
                        line: lno,
                        token: t.to_string(),
                    });
                }
                row.push(t.to_string());
            }
            rows.push(row);
        }
        Ok(rows)
    };
    let add_rows = section("add:", &mut lines)?;
    let mul_rows = section("mul:", &mut lines)?;

    if lines.pos < lines.items.len() {
        let (lno, toks) = lines.items[lines.pos].clone();
        return Err(ParseError::TrailingContent {
            line: lno,
            found: toks.join(" "),
        });
    }

    Ok(SemiringDocument {
        name,
        element_names,
        zero_name,
        one_name,
        add_rows,
        mul_rows,
    })
}

/// Serializes a table back to `.sr` text. `parse(serialize(s))` followed by
/// [`to_table`] reproduces `s` exactly, including index order.
pub fn serialize(s: &SemiringTable) -> String {
    let n = s.order();
    let mut out = String::new();
    out.push_str(&format!("semiring {}\n", s.name()));
    out.push_str(&format!("elements {}\n", s.elem_names().join(" ")));
    out.push_str(&format!("zero {}\n", s.elem_name(s.zero())));
    out.push_str(&format!("one {}\n", s.elem_name(s.one())));
    out.push_str("add:\n");
    for i in 0..n {
        let row: Vec<&str> = (0..n).map(|j| s.elem_name(s.add(i, j))).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out.push_str("mul:\n");
    for i in 0..n {
        let row: Vec<&str> = (0..n).map(|j| s.elem_name(s.mul(i, j))).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Builds a table from a parsed document, assigning indices in
/// `element_names` order. Does not validate the semiring axioms.
pub fn to_table(doc: &SemiringDocument) -> SemiringTable {
    let n = doc.element_names.len();
    let index = |name: &str| -> usize {
        doc.element_names
            .iter()
            .position(|e| e == name)
            .expect("document invariant: every token is a declared element")
    };
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for row in &doc.add_rows {
        add.extend(row.iter().map(|t| index(t)));
    }
    for row in &doc.mul_rows {
        mul.extend(row.iter().map(|t| index(t)));
    }
    SemiringTable::new(
        doc.name.clone(),
        doc.element_names.clone(),
        index(&doc.zero_name),
        index(&doc.one_name),
        add,
        mul,
    )
    .expect("document invariants imply structural soundness")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;

    #[test]
    fn boolean_round_trip() {
        let b = builtins::boolean();
        let text = serialize(&b);
        assert!(text.starts_with("semiring boolean\n"));
        let doc = parse(&text).unwrap();
        assert_eq!(doc.element_names, vec!["0", "1"]);
        assert_eq!(doc.add_rows[1], vec!["1", "1"]);
        assert_eq!(to_table(&doc), b);
    }

    #[test]
    fn bounds_one_serializes_three_elements() {
        let s = builtins::bounds(1).unwrap();
        let text = serialize(&s);
        assert!(text.contains("zero 0\n"));
        assert!(text.contains("one 1\n"));
        let doc = parse(&text).unwrap();
        assert_eq!(doc.element_names.len(), 3);
        assert_eq!(to_table(&doc), s);
    }

    #[test]
    fn round_trip_every_builtin() {
        for s in builtins::roster() {
            let back = to_table(&parse(&serialize(&s)).unwrap());
            assert_eq!(back, s, "{}", s.name());
        }
    }

    #[test]
    fn parse_serialize_parse_fixpoint() {
        for s in builtins::roster() {
            let doc1 = parse(&serialize(&s)).unwrap();
            let doc2 = parse(&serialize(&to_table(&doc1))).unwrap();
            assert_eq!(doc1, doc2, "{}", s.name());
        }
    }

    #[test]
    fn row_length_error_names_the_line() {
        let text = "semiring t\nelements 0 1\nzero 0\none 1\nadd:\n0 1\n1 1 1\nmul:\n0 0\n0 1\n";
        match parse(text) {
            Err(ParseError::RowLength {
                line,
                expected,
                got,
            }) => {
                assert_eq!(line, 7);
                assert_eq!(expected, 2);
                assert_eq!(got, 3);
            }
            other => panic!("expected row-length error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_token_error() {
        let text = "semiring t\nelements 0 1\nzero 0\none 1\nadd:\n0 1\n1 y\nmul:\n0 0\n0 1\n";
        match parse(text) {
            Err(ParseError::UnknownToken { line, token }) => {
                assert_eq!(line, 7);
                assert_eq!(token, "y");
            }
            other => panic!("expected unknown-token error, got {other:?}"),
        }
    }

    #[test]
    fn duplicate_element_error() {
        let text = "semiring t\nelements 0 0\nzero 0\none 0\n";
        assert!(matches!(
            parse(text),
            Err(ParseError::DuplicateElement { line: 2, .. })
        ));
    }

    #[test]
    fn missing_section_error() {
        let text = "semiring t\nelements 0 1\nzero 0\none 1\nadd:\n0 1\n1 1\n";
        assert!(matches!(
            parse(text),
            Err(ParseError::MissingSection { section: "mul:" })
        ));
    }

    #[test]
    fn comments_blanks_and_crlf_are_accepted() {
        let text = "# header comment\r\nsemiring t # trailing\r\n\r\nelements 0 1\r\nzero 0\r\none 1\r\nadd:\r\n0 1\r\n1 1\r\nmul:\r\n0 0\r\n0 1\r\n";
        let doc = parse(text).unwrap();
        assert_eq!(doc.name, "t");
        assert_eq!(to_table(&doc).add(1, 1), 1);
    }

    #[test]
    fn trailing_content_rejected() {
        let text = "semiring t\nelements 0 1\nzero 0\none 1\nadd:\n0 1\n1 1\nmul:\n0 0\n0 1\nextra\n";
        assert!(matches!(
            parse(text),
            Err(ParseError::TrailingContent { line: 11, .. })
        ));
    }

    #[test]
    fn unexpected_line_is_reported() {
        let text = "ring t\n";
        assert!(matches!(
            parse(text),
            Err(ParseError::UnexpectedLine { line: 1, .. })
        ));
    }
}
