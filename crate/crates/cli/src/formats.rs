//! Plain-text composition and code files, and exact rational parsing.
//!
//! Composition file: first meaningful line is the alphabet size `D`, every
//! following nonempty line holds `D` whitespace-separated counts. Repeated
//! lines add multiplicity. Code file: one codeword per line, one decimal digit
//! per symbol. In both, lines starting with `#` are ignored.

use std::fmt::Write as _;

use affix_core::{Code, Codeword, Composition, CompositionMultiset, Rational};
use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError { line, column, message: message.into() }
    }
}

/// Nonempty, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim_start();
            !t.is_empty() && !t.starts_with('#')
        })
}

/// Whitespace-separated tokens with their 1-based starting columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.char_indices()
        .filter(|&(i, c)| !c.is_whitespace() && line[..i].chars().last().is_none_or(char::is_whitespace))
        .map(move |(i, _)| {
            let rest = &line[i..];
            let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
            (line[..i].chars().count() + 1, &rest[..end])
        })
}

pub fn parse_compositions(text: &str) -> Result<CompositionMultiset, ParseError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines.next().ok_or_else(|| ParseError::new(1, 1, "missing alphabet size"))?;
    let mut header_tokens = tokens(header);
    let (col, tok) = header_tokens.next().expect("content lines are nonempty");
    let d: usize = tok
        .parse()
        .map_err(|_| ParseError::new(header_line, col, format!("expected alphabet size, found '{tok}'")))?;
    if d < 2 {
        return Err(ParseError::new(header_line, col, format!("alphabet size must be at least 2, got {d}")));
    }
    if let Some((col, tok)) = header_tokens.next() {
        return Err(ParseError::new(header_line, col, format!("unexpected '{tok}' after alphabet size")));
    }

    let mut comps = Vec::new();
    for (line_no, line) in lines {
        let mut counts = Vec::with_capacity(d);
        for (col, tok) in tokens(line) {
            if counts.len() == d {
                return Err(ParseError::new(line_no, col, format!("more than {d} counts")));
            }
            let c: usize = tok
                .parse()
                .map_err(|_| ParseError::new(line_no, col, format!("expected a nonnegative integer, found '{tok}'")))?;
            counts.push(c);
        }
        if counts.len() != d {
            let col = line.chars().count() + 1;
            return Err(ParseError::new(line_no, col, format!("expected {d} counts, found {}", counts.len())));
        }
        if counts.iter().all(|&c| c == 0) {
            return Err(ParseError::new(line_no, 1, "empty composition"));
        }
        comps.push(Composition::new(counts));
    }
    if comps.is_empty() {
        return Err(ParseError::new(header_line + 1, 1, "no compositions"));
    }
    CompositionMultiset::new(d, comps).map_err(|e| ParseError::new(header_line, 1, e.to_string()))
}

/// Parses a code file. The alphabet size is `alphabet` when given, otherwise
/// one more than the largest digit present (at least 2).
pub fn parse_code(text: &str, alphabet: Option<usize>) -> Result<Code, ParseError> {
    let mut words = Vec::new();
    for (line_no, line) in content_lines(text) {
        let indent = line.len() - line.trim_start().len();
        let word = line.trim();
        let mut symbols = Vec::with_capacity(word.len());
        for (i, ch) in word.chars().enumerate() {
            let digit = ch.to_digit(10).ok_or_else(|| {
                ParseError::new(line_no, indent + i + 1, format!("expected a digit, found '{ch}'"))
            })?;
            if let Some(d) = alphabet {
                if digit as usize >= d {
                    return Err(ParseError::new(
                        line_no,
                        indent + i + 1,
                        format!("symbol {digit} outside alphabet of size {d}"),
                    ));
                }
            }
            symbols.push(digit);
        }
        words.push((line_no, Codeword::new(symbols).expect("trimmed content lines are nonempty")));
    }
    if words.is_empty() {
        return Err(ParseError::new(1, 1, "no codewords"));
    }
    let inferred = words
        .iter()
        .flat_map(|(_, w)| w.symbols().iter().copied())
        .max()
        .map_or(2, |m| (m as usize + 1).max(2));
    let d = alphabet.unwrap_or(inferred);
    Code::new(d, words.into_iter().map(|(_, w)| w).collect()).map_err(|e| ParseError::new(1, 1, e.to_string()))
}

/// One codeword per line.
pub fn render_code(code: &Code) -> String {
    let mut out = String::new();
    for w in code.words() {
        writeln!(out, "{w}").expect("writing to a String");
    }
    out
}

/// A composition file listing the multiset, one line per codeword.
pub fn render_compositions(ms: &CompositionMultiset) -> String {
    let mut out = format!("{}\n", ms.alphabet_size());
    for (comp, mult) in ms.entries() {
        for _ in 0..mult {
            writeln!(out, "{comp}").expect("writing to a String");
        }
    }
    out
}

/// Parses `"p/q"`, an integer, or a decimal such as `"2.75"` or `"-0.5"`, exactly.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let bad = || format!("'{s}' is not a rational number");
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(format!("'{s}' has a zero denominator"));
        }
        return Ok(Rational::new(num, den));
    }
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let num: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().map_err(|_| bad())? };
    let den = BigInt::from(10u32).pow(frac_part.len() as u32);
    let value = Rational::new(num, den);
    Ok(if negative { -value } else { value })
}

pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>, String> {
    s.split(',').map(parse_rational).collect()
}

/// Always `p/q`, with `q = 1` for integers.
pub fn format_fraction(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Decimal rendering truncated towards zero at `places` digits. Display only.
pub fn format_decimal(q: &Rational, places: usize) -> String {
    let sign = if q.is_negative() { "-" } else { "" };
    let num: BigUint = q.numer().magnitude().clone();
    let den: BigUint = q.denom().magnitude().clone();
    let int = &num / &den;
    let mut rem = &num % &den;
    let mut frac = String::with_capacity(places);
    for _ in 0..places {
        rem *= 10u32;
        let digit = &rem / &den;
        rem %= &den;
        frac.push_str(&digit.to_string());
    }
    if places == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}
