//! Shared helpers for the line-oriented text formats.
//!
//! Every format is ASCII, one record per line, 0-based indices. Lines whose
//! first non-blank character is `#` and blank lines are ignored.

use crate::error::{Error, Result};

/// A cursor over the meaningful lines of a text document.
pub struct Lines<'a> {
    inner: std::iter::Peekable<std::iter::Enumerate<std::str::Lines<'a>>>,
}

impl<'a> Lines<'a> {
    pub fn new(text: &'a str) -> Self {
        Self {
            inner: text.lines().enumerate().peekable(),
        }
    }

    fn skip_ignored(&mut self) {
        while let Some((_, line)) = self.inner.peek() {
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                self.inner.next();
            } else {
                break;
            }
        }
    }

    /// Next meaningful line with its 1-based line number.
    pub fn next_line(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ignored();
        self.inner.next().map(|(i, l)| (i + 1, l.trim()))
    }

    pub fn peek_line(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ignored();
        self.inner.peek().map(|&(i, l)| (i + 1, l.trim()))
    }

    pub fn expect_line(&mut self, what: &str) -> Result<(usize, &'a str)> {
        self.next_line().ok_or_else(|| Error::Parse {
            line: 0,
            msg: format!("unexpected end of input, expected {what}"),
        })
    }

    /// Consume a header line `keyword a b ...` and return the numeric fields.
    pub fn header(&mut self, keyword: &str, arity: usize) -> Result<Vec<usize>> {
        let (line, text) = self.expect_line(keyword)?;
        let mut fields = text.split_whitespace();
        if fields.next() != Some(keyword) {
            return Err(parse_err(line, format!("expected `{keyword}` header")));
        }
        let nums = fields
            .map(|f| parse_num(line, f))
            .collect::<Result<Vec<usize>>>()?;
        if nums.len() != arity {
            return Err(parse_err(
                line,
                format!("`{keyword}` header takes {arity} fields"),
            ));
        }
        Ok(nums)
    }

    pub fn is_done(&mut self) -> bool {
        self.peek_line().is_none()
    }
}

pub fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn parse_num<T: std::str::FromStr>(line: usize, field: &str) -> Result<T> {
    field
        .parse()
        .map_err(|_| parse_err(line, format!("bad number {field:?}")))
}

/// Parse a comma-separated list of integers; the empty string is the empty list.
pub fn parse_csv<T: std::str::FromStr>(field: &str) -> Result<Vec<T>> {
    let field = field.trim();
    if field.is_empty() || field == "-" {
        return Ok(Vec::new());
    }
    field.split(',').map(|f| parse_num(0, f.trim())).collect()
}

pub fn join_csv<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    if parts.is_empty() {
        "-".to_string()
    } else {
        parts.join(",")
    }
}
