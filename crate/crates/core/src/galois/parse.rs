//! Text format for Gamma-groups.
//!
//! ```text
//! # one group directive
//! cyclic 4                 # Z/4
//! symmetric 3              # S_3 on 0, 1, 2
//! permutation 1 0 2        # one line per generator of a permutation group
//! table                    # Cayley table, one row per line
//! 0 1
//! 1 0
//! # optional twist, default trivial
//! twist inversion          # x -> x^-1, abelian groups only
//! twist conjugation 3      # x -> c x c^-1 for element c
//! twist map 0 2 1          # explicit permutation of the elements
//! ```

use super::{GaloisError, GammaGroup};

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
#[error("line {line}, column {col}: {message}")]
pub struct GammaParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

struct Token<'a> {
    text: &'a str,
    line: usize,
    col: usize,
}

fn err(t: &Token, message: impl Into<String>) -> GammaParseError {
    GammaParseError { line: t.line, col: t.col, message: message.into() }
}

fn tokens(line_no: usize, line: &str) -> Vec<Token<'_>> {
    let body = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in body.char_indices().chain(std::iter::once((body.len(), ' '))) {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Token { text: &body[s..i], line: line_no, col: body[..s].chars().count() + 1 });
                start = None;
            }
            _ => {}
        }
    }
    out
}

fn number(t: &Token, limit: usize) -> Result<usize, GammaParseError> {
    let v: usize = t.text.parse().map_err(|_| err(t, format!("expected a nonnegative integer, found '{}'", t.text)))?;
    if v > limit {
        return Err(err(t, format!("{v} exceeds the limit {limit}")));
    }
    Ok(v)
}

fn numbers(ts: &[Token], limit: usize) -> Result<Vec<usize>, GammaParseError> {
    ts.iter().map(|t| number(t, limit)).collect()
}

enum Twist {
    Trivial,
    Inversion,
    Conjugation(usize),
    Map(Vec<usize>),
}

/// Largest permutation degree accepted for `symmetric` and `permutation`.
const MAX_DEGREE: usize = 8;

pub fn parse_gamma_group(text: &str) -> Result<GammaGroup, GammaParseError> {
    let lines: Vec<Vec<Token>> = text.lines().enumerate().map(|(i, l)| tokens(i + 1, l)).filter(|t| !t.is_empty()).collect();
    let end = Token { text: "", line: text.lines().count().max(1), col: 1 };
    let mut group: Option<GammaGroup> = None;
    let mut twist = Twist::Trivial;
    let mut twist_at: Option<Token> = None;
    let mut i = 0;
    while i < lines.len() {
        let line = &lines[i];
        let head = &line[0];
        let args = &line[1..];
        let start_group = |group: &Option<GammaGroup>| -> Result<(), GammaParseError> {
            if group.is_some() {
                Err(err(head, "a second group directive"))
            } else {
                Ok(())
            }
        };
        match head.text {
            "cyclic" => {
                start_group(&group)?;
                let n = match args {
                    [t] => number(t, super::TABLE_CAP)?,
                    _ => return Err(err(head, "expected 'cyclic N'")),
                };
                if n == 0 {
                    return Err(err(&args[0], "order must be positive"));
                }
                let g = GammaGroup::cyclic(n, false).map_err(|e| err(head, e.to_string()))?;
                group = Some(g);
            }
            "symmetric" => {
                start_group(&group)?;
                let k = match args {
                    [t] => number(t, 5)?,
                    _ => return Err(err(head, "expected 'symmetric K'")),
                };
                let g = GammaGroup::symmetric(k).map_err(|e| err(head, e.to_string()))?;
                group = Some(g);
            }
            "permutation" => {
                start_group(&group)?;
                let mut gens = Vec::new();
                let first = Token { ..*head };
                while i < lines.len() && lines[i][0].text == "permutation" {
                    let l = &lines[i];
                    if l.len() < 2 || l.len() > MAX_DEGREE + 1 {
                        return Err(err(&l[0], format!("expected between 1 and {MAX_DEGREE} images")));
                    }
                    gens.push(numbers(&l[1..], MAX_DEGREE)?);
                    i += 1;
                }
                let g = GammaGroup::from_permutations(&gens).map_err(|e| err(&first, e.to_string()))?;
                group = Some(g);
                continue;
            }
            "table" => {
                start_group(&group)?;
                if !args.is_empty() {
                    return Err(err(&args[0], "rows go on the following lines"));
                }
                let mut rows = Vec::new();
                i += 1;
                while i < lines.len() && lines[i][0].text.chars().all(|c| c.is_ascii_digit()) {
                    if lines[i].len() > super::TABLE_CAP {
                        return Err(err(&lines[i][0], format!("rows are limited to {} entries", super::TABLE_CAP)));
                    }
                    rows.push(numbers(&lines[i], super::TABLE_CAP)?);
                    i += 1;
                }
                let g = GammaGroup::from_table(rows, None).map_err(|e| err(head, e.to_string()))?;
                group = Some(g);
                continue;
            }
            "twist" => {
                if twist_at.is_some() {
                    return Err(err(head, "a second twist"));
                }
                twist_at = Some(Token { ..*head });
                twist = match args.first().map(|t| t.text) {
                    Some("trivial") if args.len() == 1 => Twist::Trivial,
                    Some("inversion") if args.len() == 1 => Twist::Inversion,
                    Some("conjugation") if args.len() == 2 => Twist::Conjugation(number(&args[1], super::TABLE_CAP)?),
                    Some("map") => Twist::Map(numbers(&args[1..], super::TABLE_CAP)?),
                    _ => return Err(err(head, "expected 'twist trivial|inversion|conjugation C|map ...'")),
                };
            }
            other => return Err(err(head, format!("unknown directive '{other}'"))),
        }
        i += 1;
    }
    let g = group.ok_or_else(|| err(&end, "no group directive"))?;
    let at = twist_at.unwrap_or(end);
    let fail = |e: GaloisError| err(&at, e.to_string());
    match twist {
        Twist::Trivial => Ok(g),
        Twist::Inversion => {
            let t = (0..g.order()).map(|x| g.inv(x)).collect();
            g.with_twist(t).map_err(fail)
        }
        Twist::Conjugation(c) => g.conjugation_twist(c).map_err(fail),
        Twist::Map(t) => g.with_twist(t).map_err(fail),
    }
}
