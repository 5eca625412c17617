//! The `.cayley` text format: first line `n`, then `n` rows of `n`
//! space-separated 0-based element indices; `row i, col j` holds `i*j`.
//! Parsing is strict and the table is fully validated.

use super::{Group, GroupError};

pub fn parse_cayley(text: &str) -> Result<Group, GroupError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line_no, first) = lines.next().ok_or(GroupError::Parse {
        line: 0,
        message: "empty input".into(),
    })?;
    let n: usize = first.parse().map_err(|_| GroupError::Parse {
        line: line_no,
        message: format!("expected group order, got {first:?}"),
    })?;
    if n == 0 {
        return Err(GroupError::Parse {
            line: line_no,
            message: "group order must be positive".into(),
        });
    }
    let mut table = Vec::with_capacity(n);
    for i in 0..n {
        let (line_no, row_text) = lines.next().ok_or(GroupError::Parse {
            line: line_no + i,
            message: format!("expected {n} rows, found {i}"),
        })?;
        let row: Vec<u32> = row_text
            .split_whitespace()
            .map(|t| {
                t.parse::<u32>().map_err(|_| GroupError::Parse {
                    line: line_no,
                    message: format!("bad entry {t:?}"),
                })
            })
            .collect::<Result<_, _>>()?;
        if row.len() != n {
            return Err(GroupError::Parse {
                line: line_no,
                message: format!("ragged row: {} entries, expected {n}", row.len()),
            });
        }
        table.push(row);
    }
    if let Some((line_no, extra)) = lines.next() {
        return Err(GroupError::Parse {
            line: line_no,
            message: format!("trailing content: {extra:?}"),
        });
    }
    Group::validate(table)
}

pub fn to_cayley_string(g: &Group) -> String {
    let mut out = String::new();
    out.push_str(&g.n().to_string());
    out.push('\n');
    for i in 0..g.n() {
        for j in 0..g.n() {
            if j > 0 {
                out.push(' ');
            }
            out.push_str(&g.mul(i, j).to_string());
        }
        out.push('\n');
    }
    out
}

pub fn read_cayley_file(path: &std::path::Path) -> Result<Group, GroupError> {
    let text = std::fs::read_to_string(path).map_err(|e| GroupError::Parse {
        line: 0,
        message: format!("{}: {e}", path.display()),
    })?;
    parse_cayley(&text)
}
