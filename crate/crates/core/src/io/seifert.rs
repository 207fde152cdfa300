use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

/// Parses a square integer matrix, either as whitespace-separated rows (one
/// row per line, blank lines and `#` comments ignored) or in the bracketed
/// form `[[a,b],[c,d]]`. An empty input is the 0×0 matrix.
pub fn parse_seifert_text(input: &str) -> Result<IntMatrix> {
    let m = if input.trim_start().starts_with('[') { parse_bracketed(input)? } else { parse_rows(input)? };
    if !m.is_square() {
        return Err(parse_error(1, 1, format!("Seifert matrix must be square, got {}x{}", m.rows(), m.cols())));
    }
    Ok(m)
}

fn parse_rows(input: &str) -> Result<IntMatrix> {
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for (ln, line) in input.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("");
        let mut row = Vec::new();
        let mut offset = 0;
        for token in body.split_whitespace() {
            let col = body[offset..].find(token).unwrap() + offset;
            offset = col + token.len();
            let v: BigInt =
                token.parse().map_err(|_| parse_error(ln + 1, col + 1, format!("not an integer: {token:?}")))?;
            row.push(v);
        }
        if row.is_empty() {
            continue;
        }
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(parse_error(
                    ln + 1,
                    1,
                    format!("ragged row: {} entries, expected {}", row.len(), first.len()),
                ));
            }
        }
        rows.push(row);
    }
    let n = rows.len();
    let m = rows.first().map_or(0, Vec::len);
    IntMatrix::from_vec(n, m, rows.into_iter().flatten().collect())
}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while let Some(&c) = self.chars.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.bump();
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.peek().copied()
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected {want:?}, found {c:?}"))),
            None => Err(self.error(format!("expected {want:?}, found end of input"))),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let (line, column) = (self.line, self.column);
        let mut token = String::new();
        while let Some(&c) = self.chars.peek() {
            if c.is_ascii_digit() || (token.is_empty() && (c == '-' || c == '+')) {
                token.push(c);
                self.bump();
            } else {
                break;
            }
        }
        token.parse().map_err(|_| {
            let found = self.chars.peek().map_or("end of input".to_string(), |c| format!("{c:?}"));
            parse_error(line, column, format!("expected an integer, found {found}"))
        })
    }

    fn error(&self, message: String) -> Error {
        parse_error(self.line, self.column, message)
    }
}

fn parse_bracketed(input: &str) -> Result<IntMatrix> {
    let mut cur = Cursor { chars: input.chars().peekable(), line: 1, column: 1 };
    cur.expect('[')?;
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    if cur.peek() != Some(']') {
        loop {
            cur.skip_ws();
            let (line, column) = (cur.line, cur.column);
            cur.expect('[')?;
            let mut row = Vec::new();
            if cur.peek() != Some(']') {
                loop {
                    row.push(cur.integer()?);
                    if cur.peek() == Some(',') {
                        cur.bump();
                    } else {
                        break;
                    }
                }
            }
            cur.expect(']')?;
            if let Some(first) = rows.first() {
                if first.len() != row.len() {
                    return Err(parse_error(
                        line,
                        column,
                        format!("ragged row: {} entries, expected {}", row.len(), first.len()),
                    ));
                }
            }
            rows.push(row);
            if cur.peek() == Some(',') {
                cur.bump();
            } else {
                break;
            }
        }
    }
    cur.expect(']')?;
    if let Some(c) = cur.peek() {
        return Err(cur.error(format!("trailing input starting with {c:?}")));
    }
    let n = rows.len();
    let m = rows.first().map_or(0, Vec::len);
    IntMatrix::from_vec(n, m, rows.into_iter().flatten().collect())
}

/// Whitespace-separated rows, the inverse of [`parse_seifert_text`].
pub fn render_seifert_text(m: &IntMatrix) -> String {
    let mut out = String::new();
    for row in m.row_iter() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// Parses an ascending coefficient list such as `"2,-5,2"`.
pub fn parse_coefficients(input: &str) -> Result<Vec<BigInt>> {
    let mut out = Vec::new();
    let mut column = 1;
    for token in input.split(',') {
        let t = token.trim();
        let v = t.parse().map_err(|_| parse_error(1, column, format!("not an integer coefficient: {t:?}")))?;
        out.push(v);
        column += token.len() + 1;
    }
    Ok(out)
}
