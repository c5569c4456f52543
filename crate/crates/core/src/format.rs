//! Text and JSON forms of tableaux.
//!
//! Text form: the family tag, the row lengths, then one line per nonempty
//! row using `0`/`1` (or `.`/`*` for TREE):
//!
//! ```text
//! EW
//! 2 2
//! 11
//! 00
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shape::{Family, FerrersShape};
use crate::tableau::{Filling, Tableau};

fn cell_chars(family: Family) -> (char, char) {
    match family {
        Family::Tree => ('*', '.'),
        _ => ('1', '0'),
    }
}

pub fn serialize(t: &Tableau) -> String {
    let (one, zero) = cell_chars(t.family());
    let mut lines = vec![t.family().tag().to_string(), t.shape().to_string()];
    lines.extend(
        t.filling()
            .row_strings(one, zero)
            .into_iter()
            .filter(|row| !row.is_empty()),
    );
    lines.join("\n")
}

/// Single-line form used by the enumeration stream: lines joined by `/`.
pub fn serialize_line(t: &Tableau) -> String {
    serialize(t).replace('\n', "/")
}

pub fn parse(text: &str) -> Result<Tableau> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (_, tag) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "empty input".into(),
    })?;
    let family: Family = tag.parse()?;
    let (shape_line, lens) = lines.next().ok_or(Error::Parse {
        line: 2,
        message: "missing row lengths".into(),
    })?;
    let shape: FerrersShape = lens.parse().map_err(|e: Error| Error::Parse {
        line: shape_line,
        message: e.to_string(),
    })?;
    let (one, zero) = cell_chars(family);
    let mut bits = vec![0u64; shape.num_rows()];
    for (r, &len) in shape.rows().iter().enumerate() {
        if len == 0 {
            continue;
        }
        let (line_no, row) = lines.next().ok_or(Error::Parse {
            line: shape_line + r + 1,
            message: format!("missing row {}", r + 1),
        })?;
        let count = row.chars().count();
        if count != len {
            return Err(Error::ShapeMismatch(format!(
                "row {} has {count} cells, shape says {len} (line {line_no})",
                r + 1
            )));
        }
        for (c, ch) in row.chars().enumerate() {
            if ch == one {
                bits[r] |= 1 << c;
            } else if ch != zero {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("unexpected cell character {ch:?} for {family}"),
                });
            }
        }
    }
    if let Some((line_no, extra)) = lines.next() {
        return Err(Error::Parse {
            line: line_no,
            message: format!("unexpected trailing line {extra:?}"),
        });
    }
    Tableau::new(family, Filling::new(shape, bits)?)
}

/// Accepts both the multi-line form and the `/`-joined single-line form.
pub fn parse_any(text: &str) -> Result<Tableau> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        from_json(trimmed)
    } else if !trimmed.contains('\n') && trimmed.contains('/') {
        parse(&trimmed.replace('/', "\n"))
    } else {
        parse(trimmed)
    }
}

/// Aligned grid with border labels: row labels to the right, column labels
/// underneath, positions outside the shape shown as `·`.
pub fn render(t: &Tableau) -> String {
    let (one, zero) = cell_chars(t.family());
    let shape = t.shape();
    let labels = t.labeling();
    let width = labels.max_label().to_string().len();
    let m = shape.num_cols();
    let mut out = String::new();
    for r in 0..shape.num_rows() {
        let cells: Vec<String> = (0..m)
            .map(|c| {
                let ch = match (shape.contains(r, c), t.get(r, c)) {
                    (false, _) => '·',
                    (true, true) => one,
                    (true, false) => zero,
                };
                format!("{ch:>width$}")
            })
            .collect();
        let mut line = cells.join(" ");
        if m > 0 {
            line.push(' ');
        }
        out.push_str(&format!("{line}| {}\n", labels.row_label(r)));
    }
    if m > 0 {
        out.push_str(&"-".repeat(m * (width + 1) - 1));
        out.push('\n');
        let cols: Vec<String> = labels
            .col_labels()
            .iter()
            .map(|l| format!("{l:>width$}"))
            .collect();
        out.push_str(&cols.join(" "));
        out.push('\n');
    }
    out
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonTableau {
    kind: Family,
    rows: Vec<Vec<u8>>,
}

pub fn to_json(t: &Tableau) -> String {
    let shape = t.shape();
    let rows = (0..shape.num_rows())
        .map(|r| (0..shape.row_len(r)).map(|c| t.get(r, c) as u8).collect())
        .collect();
    serde_json::to_string(&JsonTableau {
        kind: t.family(),
        rows,
    })
    .expect("plain data serializes")
}

pub fn from_json(text: &str) -> Result<Tableau> {
    let raw: JsonTableau = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    let shape = FerrersShape::new(raw.rows.iter().map(Vec::len).collect())?;
    let mut bits = vec![0u64; raw.rows.len()];
    for (r, row) in raw.rows.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            match v {
                0 => {}
                1 => bits[r] |= 1 << c,
                other => {
                    return Err(Error::Parse {
                        line: 1,
                        message: format!("cell value {other} at row {} column {}", r + 1, c + 1),
                    })
                }
            }
        }
    }
    Tableau::new(raw.kind, Filling::new(shape, bits)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ew_text() {
        let t = Tableau::from_strs(Family::Ew, &["11", "00"]).unwrap();
        assert_eq!(serialize(&t), "EW\n2 2\n11\n00");
        assert_eq!(parse(&serialize(&t)).unwrap(), t);
        assert_eq!(serialize_line(&t), "EW/2 2/11/00");
        assert_eq!(parse_any("EW/2 2/11/00").unwrap(), t);
    }

    #[test]
    fn tree_text() {
        let t = parse("TREE\n2 1\n**\n*").unwrap();
        assert_eq!(t.family(), Family::Tree);
        assert!(t.get(0, 0) && t.get(1, 0) && t.get(0, 1));
        // The second column has no dot.
        let err = parse("TREE\n2 1\n*.\n*").unwrap_err();
        assert!(
            matches!(
                err,
                Error::Violation {
                    rule: "column without dot",
                    ..
                }
            ),
            "{err}"
        );
    }

    #[test]
    fn rejects_ew_row_without_zero() {
        let err = parse("EW\n2 2\n11\n11").unwrap_err();
        assert!(
            matches!(
                err,
                Error::Violation {
                    rule: "row without 0",
                    ..
                }
            ),
            "{err}"
        );
    }

    #[test]
    fn empty_rows_emit_no_line() {
        let text = "LE\n4 3 3 0\n0101\n001\n111";
        let t = parse(text).unwrap();
        assert_eq!(t.shape().rows(), &[4, 3, 3, 0]);
        assert_eq!(serialize(&t), text);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse(""), Err(Error::Parse { .. })));
        assert!(matches!(parse("XY\n1\n1"), Err(Error::Parse { .. })));
        assert!(matches!(parse("EW\n2\n1"), Err(Error::ShapeMismatch(_))));
        assert!(matches!(
            parse("EW\n1\n1\n1"),
            Err(Error::Parse { line: 4, .. })
        ));
        assert!(matches!(
            parse("EW\n1\n2"),
            Err(Error::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn json_form() {
        let t = parse("TREE\n3 2\n*.*\n**").unwrap();
        let json = to_json(&t);
        assert_eq!(json, r#"{"kind":"TREE","rows":[[1,0,1],[1,1]]}"#);
        assert_eq!(from_json(&json).unwrap(), t);
        let le = parse("NEW\n1 0\n1").unwrap();
        assert_eq!(to_json(&le), r#"{"kind":"NEW","rows":[[1],[]]}"#);
        assert_eq!(parse_any(&to_json(&le)).unwrap(), le);
    }

    #[test]
    fn rendered_grid() {
        let t = Tableau::from_strs(Family::Ew, &["11111", "0100", "0101", "0"]).unwrap();
        let expected = "\
1 1 1 1 1 | 0
0 1 0 0 · | 2
0 1 0 1 · | 3
0 · · · · | 7
---------
8 6 5 4 1
";
        assert_eq!(render(&t), expected);
        let n = Tableau::new(
            Family::New,
            Filling::new("0 0".parse().unwrap(), vec![0, 0]).unwrap(),
        )
        .unwrap();
        assert_eq!(render(&n), "| 1\n| 2\n");
    }
}
