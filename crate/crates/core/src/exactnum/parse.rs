//! Reading scalars in the notation produced by `Display`, e.g. `-1/2 + 3*w - w^2`.

use num_bigint::BigInt;

use super::{CycloField, CycloScalar, Rational};

/// Longest accepted run of digits in one numeral.
pub const MAX_DIGITS: usize = 1000;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
#[error("column {col}: {message}")]
pub struct ScalarParseError {
    /// 1-based character column.
    pub col: usize,
    pub message: String,
}

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    text: &'a str,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn col(&self) -> usize {
        self.pos + 1
    }

    fn err(&self, message: impl Into<String>) -> ScalarParseError {
        ScalarParseError { col: self.col(), message: message.into() }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<Option<String>, ScalarParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Ok(None);
        }
        if self.pos - start > MAX_DIGITS {
            return Err(ScalarParseError { col: start + 1, message: format!("numeral longer than {MAX_DIGITS} digits") });
        }
        let from = self.chars[start].0;
        let to = self.chars.get(self.pos).map_or(self.text.len(), |&(i, _)| i);
        Ok(Some(self.text[from..to].to_string()))
    }
}

impl CycloField {
    /// Parses a sum of terms `c`, `c*w^k`, `w^k` or `w`, with rational coefficients `a/b` and
    /// any nonnegative exponent.
    pub fn parse(&'static self, text: &str) -> Result<CycloScalar, ScalarParseError> {
        let mut cur = Cursor { chars: text.char_indices().collect(), pos: 0, text };
        let mut total = self.zero();
        let mut first = true;
        loop {
            cur.skip_ws();
            if cur.peek().is_none() {
                if first {
                    return Err(cur.err("empty scalar"));
                }
                return Ok(total);
            }
            let negative = if cur.eat('-') {
                true
            } else if cur.eat('+') {
                if first {
                    return Err(cur.err("leading '+'"));
                }
                false
            } else if first {
                false
            } else {
                return Err(cur.err("expected '+' or '-'"));
            };
            let term = self.parse_term(&mut cur)?;
            total = if negative { &total - &term } else { &total + &term };
            first = false;
        }
    }

    fn parse_term(&'static self, cur: &mut Cursor) -> Result<CycloScalar, ScalarParseError> {
        let coefficient = match cur.digits()? {
            Some(num) => {
                let num: BigInt = num.parse().expect("digits");
                let den: BigInt = if cur.eat('/') {
                    let col = cur.col();
                    let d = cur.digits()?;
                    let d: BigInt = d.ok_or_else(|| cur.err("expected a denominator"))?.parse().expect("digits");
                    if d == BigInt::from(0) {
                        return Err(ScalarParseError { col, message: "zero denominator".into() });
                    }
                    d
                } else {
                    BigInt::from(1)
                };
                Some(self.rational(Rational::new(num, den)))
            }
            None => None,
        };
        let has_mono = match coefficient {
            Some(_) => cur.eat('*'),
            None => true,
        };
        if !has_mono {
            return Ok(coefficient.expect("numeral read"));
        }
        if !cur.eat('w') {
            return Err(cur.err("expected a number or 'w'"));
        }
        let power = if cur.eat('^') {
            let e = cur.digits()?;
            let e = e.ok_or_else(|| cur.err("expected an exponent"))?;
            // reduce the decimal exponent modulo the field order digit by digit
            let n = self.order() as u64;
            e.bytes().fold(0u64, |acc, b| (acc * 10 + (b - b'0') as u64) % n) as i64
        } else {
            1
        };
        let mono = self.omega_pow(power);
        Ok(match coefficient {
            Some(c) => &c * &mono,
            None => mono,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_display_output() {
        let q = CycloField::get(5);
        for text in ["0", "1", "-1 - w", "1/2*w^2", "-3/4 + w - 7*w^3"] {
            let x = q.parse(text).unwrap();
            assert_eq!(x.to_string(), text);
        }
        assert_eq!(q.parse("w^5").unwrap(), q.one());
        assert_eq!(q.parse(" 2 *w ^ 12 ").unwrap(), q.int(2) * q.omega_pow(2));
    }

    #[test]
    fn errors_have_columns() {
        let q = CycloField::get(3);
        for (text, col) in [("", 1), ("1 +", 4), ("1/0", 3), ("2 w", 3), ("x", 1), ("+1", 2), ("w^", 3), ("1*", 3)] {
            assert_eq!(q.parse(text).unwrap_err().col, col, "{text:?}");
        }
    }
}
