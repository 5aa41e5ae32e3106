//! Text notation for scaled f-quotients, e.g. `3*q*f2^6*f12^6/(f1^3*f4^11)`.
//!
//! Grammar (whitespace is ignored):
//!
//! ```text
//! quotient := product [ '/' ( factor | '(' product ')' ) ]
//! product  := factor { '*' factor }
//! factor   := INT | 'f' INT [ '^' power ] | 'q' [ '^' power ]
//! power    := [ '-' ] INT | '(' [ '-' ] INT ')'
//! ```
//!
//! Integer scalars may only appear in the numerator.

use std::fmt;

use crate::special::FQuotientSpec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    /// The input followed by a caret line under the offending position.
    pub fn render(&self, input: &str) -> String {
        format!("{input}\n{}^ {}", " ".repeat(self.position), self.message)
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at position {}: {}",
            self.position, self.message
        )
    }
}

impl std::error::Error for ParseError {}

/// An integer multiple of an f-quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaledQuotient {
    pub scalar: i64,
    pub quotient: FQuotientSpec,
}

impl fmt::Display for ScaledQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_quotient(self.scalar, &self.quotient))
    }
}

impl std::str::FromStr for ScaledQuotient {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_quotient(s)
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

enum Factor {
    Scalar(i64),
    F(u32, i64),
    Q(i64),
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.pos,
            message: message.into(),
        })
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        text.parse().or_else(|_| {
            self.pos = start;
            self.err("integer out of range")
        })
    }

    fn signed_integer(&mut self) -> Result<i64, ParseError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            Ok(-self.integer()?)
        } else {
            self.integer()
        }
    }

    fn power(&mut self) -> Result<i64, ParseError> {
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        if self.peek() == Some(b'(') {
            self.pos += 1;
            let e = self.signed_integer()?;
            self.expect(b')')?;
            Ok(e)
        } else {
            self.signed_integer()
        }
    }

    fn factor(&mut self) -> Result<Factor, ParseError> {
        match self.peek() {
            Some(b'f') => {
                self.pos += 1;
                let at = self.pos;
                let d = self.integer()?;
                if d == 0 || d > u32::MAX as i64 {
                    self.pos = at;
                    return self.err("f index must be a positive integer");
                }
                Ok(Factor::F(d as u32, self.power()?))
            }
            Some(b'q') => {
                self.pos += 1;
                Ok(Factor::Q(self.power()?))
            }
            Some(c) if c.is_ascii_digit() => Ok(Factor::Scalar(self.integer()?)),
            Some(_) => self.err("expected f<d>, q or an integer"),
            None => self.err("unexpected end of input"),
        }
    }

    fn product(&mut self) -> Result<Vec<(usize, Factor)>, ParseError> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            let at = self.pos;
            out.push((at, self.factor()?));
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok(out);
            }
        }
    }
}

pub fn parse_quotient(input: &str) -> Result<ScaledQuotient, ParseError> {
    let mut p = Parser {
        bytes: input.as_bytes(),
        pos: 0,
    };
    let mut spec = FQuotientSpec::one();
    let mut scalar: i64 = 1;
    for (_, f) in p.product()? {
        match f {
            Factor::Scalar(c) => {
                scalar = scalar.checked_mul(c).ok_or(ParseError {
                    position: 0,
                    message: "scalar overflows".into(),
                })?
            }
            Factor::F(d, e) => spec.push_factor(d, e),
            Factor::Q(e) => spec = spec.times(&FQuotientSpec::new(&[], e)),
        }
    }
    if p.peek() == Some(b'/') {
        p.pos += 1;
        let denom = if p.peek() == Some(b'(') {
            p.pos += 1;
            let d = p.product()?;
            p.expect(b')')?;
            d
        } else {
            let at = p.pos;
            vec![(at, p.factor()?)]
        };
        for (at, f) in denom {
            match f {
                Factor::Scalar(1) => {}
                Factor::Scalar(_) => {
                    return Err(ParseError {
                        position: at,
                        message: "scalars are not allowed in the denominator".into(),
                    })
                }
                Factor::F(d, e) => spec.push_factor(d, -e),
                Factor::Q(e) => spec = spec.times(&FQuotientSpec::new(&[], -e)),
            }
        }
    }
    if p.peek().is_some() {
        return p.err("unexpected trailing input");
    }
    Ok(ScaledQuotient {
        scalar,
        quotient: spec,
    })
}

fn atom(name: &str, e: i64) -> String {
    if e == 1 {
        name.to_string()
    } else {
        format!("{name}^{e}")
    }
}

/// Canonical text for `scalar * spec`; parses back to the same value.
pub fn format_quotient(scalar: i64, spec: &FQuotientSpec) -> String {
    let mut num: Vec<String> = Vec::new();
    let mut den: Vec<String> = Vec::new();
    if scalar != 1 {
        num.push(scalar.to_string());
    }
    if spec.qshift() > 0 {
        num.push(atom("q", spec.qshift()));
    } else if spec.qshift() < 0 {
        den.push(atom("q", -spec.qshift()));
    }
    for (&d, &r) in spec.factors() {
        let name = format!("f{d}");
        if r > 0 {
            num.push(atom(&name, r));
        } else {
            den.push(atom(&name, -r));
        }
    }
    let mut out = if num.is_empty() {
        "1".to_string()
    } else {
        num.join("*")
    };
    match den.len() {
        0 => {}
        1 => out = format!("{out}/{}", den[0]),
        _ => out = format!("{out}/({})", den.join("*")),
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_b_generating_function() {
        let s = parse_quotient("f2^4/(f1^2*f4^3)").unwrap();
        assert_eq!(s.scalar, 1);
        assert_eq!(
            s.quotient,
            FQuotientSpec::new(&[(2, 4), (1, -2), (4, -3)], 0)
        );
    }

    #[test]
    fn parses_scalars_and_shifts() {
        let s = parse_quotient("3 * q * f2^6*f12^6 / (f1^3*f4^11)").unwrap();
        assert_eq!(s.scalar, 3);
        assert_eq!(s.quotient.qshift(), 1);
        let t = parse_quotient("f4^4*f14^2/(q^3*f2^2*f28^4)").unwrap();
        assert_eq!(t.quotient.qshift(), -3);
        let u = parse_quotient("q^(-3)*f1^(-2)").unwrap();
        assert_eq!(u.quotient, FQuotientSpec::new(&[(1, -2)], -3));
        assert_eq!(
            parse_quotient("1/f1").unwrap().quotient,
            FQuotientSpec::new(&[(1, -1)], 0)
        );
    }

    #[test]
    fn caret_points_at_error() {
        let e = parse_quotient("f1^(").unwrap_err();
        assert_eq!(e.position, 4);
        assert_eq!(e.render("f1^("), "f1^(\n    ^ expected integer");
        let e = parse_quotient("f0").unwrap_err();
        assert_eq!(e.position, 1);
        let e = parse_quotient("f1/(3*f2)").unwrap_err();
        assert_eq!(e.position, 4);
        assert!(parse_quotient("f1 f2").is_err());
        assert!(parse_quotient("").is_err());
    }

    #[test]
    fn formats_canonically() {
        let s = parse_quotient("5*f5^5/f1^6").unwrap();
        assert_eq!(s.to_string(), "5*f5^5/f1^6");
        let t = FQuotientSpec::new(&[(1, -1)], 0);
        assert_eq!(t.to_string(), "1/f1");
        assert_eq!(
            FQuotientSpec::new(&[(4, 4), (14, 2), (2, -2), (28, -4)], -3).to_string(),
            "f4^4*f14^2/(q^3*f2^2*f28^4)"
        );
    }

    proptest! {
        #[test]
        fn format_parse_round_trip(
            factors in proptest::collection::vec((1u32..50, -12i64..12), 0..6),
            shift in -30i64..30,
            scalar in 1i64..50,
        ) {
            let spec = FQuotientSpec::new(&factors, shift);
            let text = format_quotient(scalar, &spec);
            let back = parse_quotient(&text).unwrap();
            prop_assert_eq!(back.quotient, spec);
            prop_assert_eq!(back.scalar, scalar);
        }
    }
}
