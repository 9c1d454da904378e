//! Multivector literal grammar.
//!
//! A literal is a signed sum of terms `[coeff] blade` where `coeff` is a
//! real number or `(re,im)`, and `blade` is `1` or `e<digits>` with digits
//! strictly ascending in {0,1,2,3}; `^` may separate blade factors
//! (`e0^e1` means `e01`). Numbers are integers, decimals or fractions
//! `p/q`; exponent notation is not part of the grammar, so `2e23` is the
//! coefficient 2 on the blade e23. Whitespace is insignificant.

use crate::blade::BladeIndex;
use crate::error::ParseError;
use crate::multivector::MultiVector;
use crate::scalar::Scalar;

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek();
        if b.is_some() {
            self.pos += 1;
        }
        b
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos,
            msg: msg.into(),
        })
    }
}

/// Unsigned number: digits, optional `.digits` or `/digits`.
fn parse_number<S: Scalar>(c: &mut Cursor, negative: bool) -> Result<S, ParseError> {
    let start = c.pos;
    let mut int_part = String::new();
    while let Some(b) = c.peek() {
        if b.is_ascii_digit() {
            int_part.push(b as char);
            c.pos += 1;
        } else {
            break;
        }
    }
    if int_part.is_empty() {
        return c.err("expected a number");
    }
    let mut value = if c.eat(b'.') {
        let mut frac = String::new();
        while let Some(b) = c.peek() {
            if b.is_ascii_digit() {
                frac.push(b as char);
                c.pos += 1;
            } else {
                break;
            }
        }
        if frac.is_empty() {
            return c.err("expected digits after '.'");
        }
        let digits = format!("{}{}", int_part, frac);
        let num: i64 = digits.parse().map_err(|_| ParseError {
            pos: start,
            msg: "number too large".into(),
        })?;
        let den = 10i64
            .checked_pow(frac.len() as u32)
            .ok_or_else(|| ParseError {
                pos: start,
                msg: "number too precise".into(),
            })?;
        S::from_ratio(num, den)
    } else if c.eat(b'/') {
        let mut den = String::new();
        while let Some(b) = c.peek() {
            if b.is_ascii_digit() {
                den.push(b as char);
                c.pos += 1;
            } else {
                break;
            }
        }
        if den.is_empty() {
            return c.err("expected digits after '/'");
        }
        let p: i64 = int_part.parse().map_err(|_| ParseError {
            pos: start,
            msg: "numerator too large".into(),
        })?;
        let q: i64 = den.parse().map_err(|_| ParseError {
            pos: start,
            msg: "denominator too large".into(),
        })?;
        if q == 0 {
            return Err(ParseError {
                pos: start,
                msg: "zero denominator".into(),
            });
        }
        S::from_ratio(p, q)
    } else {
        let n: i64 = int_part.parse().map_err(|_| ParseError {
            pos: start,
            msg: "number too large".into(),
        })?;
        S::from_int(n)
    };
    if negative {
        value = value.neg();
    }
    Ok(value)
}

/// Signed number (used inside `(re,im)`).
fn parse_signed_number<S: Scalar>(c: &mut Cursor) -> Result<S, ParseError> {
    c.skip_ws();
    let negative = if c.eat(b'-') {
        true
    } else {
        c.eat(b'+');
        false
    };
    c.skip_ws();
    parse_number::<S>(c, negative)
}

/// Blade token: `1` or `e<digits>` with `^` separators; digits must ascend.
fn parse_blade(c: &mut Cursor) -> Result<BladeIndex, ParseError> {
    if c.eat(b'1') {
        return Ok(BladeIndex::SCALAR);
    }
    let mut indices = Vec::new();
    loop {
        if !c.eat(b'e') {
            return c.err("expected blade 'e<digits>'");
        }
        let mut any = false;
        while let Some(b) = c.peek() {
            if b.is_ascii_digit() {
                let d = (b - b'0') as usize;
                if d > 3 {
                    return c.err("blade index must be in 0..=3");
                }
                if indices.last().is_some_and(|&l| d <= l) {
                    return c.err("blade indices must be strictly ascending");
                }
                indices.push(d);
                any = true;
                c.pos += 1;
            } else {
                break;
            }
        }
        if !any {
            return c.err("expected digits after 'e'");
        }
        c.skip_ws();
        if !c.eat(b'^') {
            break;
        }
        c.skip_ws();
    }
    BladeIndex::from_indices(&indices).ok_or_else(|| ParseError {
        pos: c.pos,
        msg: "invalid blade".into(),
    })
}

fn starts_blade(c: &Cursor) -> bool {
    c.peek() == Some(b'e')
}

/// One term: `[coeff] blade`, `coeff`, or `coeff blade`.
fn parse_term<S: Scalar>(c: &mut Cursor, negative: bool) -> Result<(BladeIndex, S), ParseError> {
    c.skip_ws();
    let coeff: S = if c.eat(b'(') {
        let re = parse_signed_number::<S>(c)?;
        c.skip_ws();
        if !c.eat(b',') {
            return c.err("expected ',' in complex coefficient");
        }
        let im = parse_signed_number::<S>(c)?;
        c.skip_ws();
        if !c.eat(b')') {
            return c.err("expected ')' after complex coefficient");
        }
        re.add(&S::i().mul(&im))
    } else if starts_blade(c) {
        S::one()
    } else {
        parse_number::<S>(c, false)?
    };
    let coeff = if negative { coeff.neg() } else { coeff };
    c.skip_ws();
    if starts_blade(c) {
        let blade = parse_blade(c)?;
        Ok((blade, coeff))
    } else {
        // A bare number is a scalar term; note "1" parses as the number 1,
        // which is the same thing as the scalar blade.
        Ok((BladeIndex::SCALAR, coeff))
    }
}

/// Parse a multivector literal.
pub fn parse_multivector<S: Scalar>(text: &str) -> Result<MultiVector<S>, ParseError> {
    let mut c = Cursor::new(text);
    let mut mv = MultiVector::<S>::zero();
    c.skip_ws();
    if c.peek().is_none() {
        return c.err("empty literal");
    }
    let mut negative = c.eat(b'-');
    if !negative {
        c.eat(b'+');
    }
    loop {
        let (blade, coeff) = parse_term::<S>(&mut c, negative)?;
        let acc = mv.coeff(blade).add(&coeff);
        mv.set(blade, acc);
        c.skip_ws();
        match c.bump() {
            None => break,
            Some(b'+') => negative = false,
            Some(b'-') => negative = true,
            Some(_) => {
                c.pos -= 1;
                return c.err("expected '+', '-' or end of input");
            }
        }
    }
    Ok(mv)
}

fn blade_text(b: BladeIndex) -> String {
    if b == BladeIndex::SCALAR {
        "1".to_string()
    } else {
        let digits: String = b.indices().iter().map(|d| d.to_string()).collect();
        format!("e{}", digits)
    }
}

/// Canonical rendering: terms in blade-mask order, zero terms omitted.
/// `parse(format(U)) == U` on both backends.
pub fn format_multivector<S: Scalar>(mv: &MultiVector<S>) -> String {
    let mut out = String::new();
    for b in BladeIndex::all() {
        let c = mv.coeff(b);
        if c.is_zero() {
            continue;
        }
        let coeff_txt = c.format_coeff();
        let (sign_negative, body) = match coeff_txt.strip_prefix('-') {
            // complex "(re,im)" keeps its signs inside the parens
            Some(rest) if !coeff_txt.starts_with('(') => (true, rest.to_string()),
            _ => (false, coeff_txt),
        };
        if out.is_empty() {
            if sign_negative {
                out.push('-');
            }
        } else if sign_negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if b == BladeIndex::SCALAR {
            out.push_str(&body);
        } else if body == "1" {
            out.push_str(&blade_text(b));
        } else {
            out.push_str(&body);
            out.push(' ');
            out.push_str(&blade_text(b));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{CRat, Cf64};

    type Mq = MultiVector<CRat>;
    type Mf = MultiVector<Cf64>;

    #[test]
    fn grammar_examples() {
        let u: Mq = parse_multivector("1 + e0").unwrap();
        assert_eq!(u, Mq::one().add_mv(&Mq::e(0)));

        let v: Mq = parse_multivector("(0,1) e12").unwrap();
        let e12 = Mq::basis(BladeIndex::from_indices(&[1, 2]).unwrap());
        assert_eq!(v, e12.mul_i());

        let w: Mq = parse_multivector("e0^e1 + 2 e23").unwrap();
        let e01 = Mq::basis(BladeIndex::from_indices(&[0, 1]).unwrap());
        let e23 = Mq::basis(BladeIndex::from_indices(&[2, 3]).unwrap());
        assert_eq!(w, e01.add_mv(&e23.scale(&CRat::from_int(2))));
    }

    #[test]
    fn no_exponent_ambiguity() {
        // "2e23" is coefficient 2 on blade e23, not 2*10^23.
        let u: Mf = parse_multivector("2e23").unwrap();
        let e23 = Mf::basis(BladeIndex::from_indices(&[2, 3]).unwrap());
        assert_eq!(u, e23.scale(&Cf64::from_int(2)));
    }

    #[test]
    fn fractions_and_decimals_are_exact() {
        let u: Mq = parse_multivector("1/4 + 0.25 e1").unwrap();
        assert_eq!(*u.coeff(BladeIndex::SCALAR), CRat::from_ratio(1, 4));
        assert_eq!(*u.coeff(BladeIndex::covector(1)), CRat::from_ratio(1, 4));
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_multivector::<CRat>("e1^e0").unwrap_err();
        assert_eq!(e.pos, 4);
        let e = parse_multivector::<CRat>("2 +").unwrap_err();
        assert_eq!(e.pos, 3);
        let e = parse_multivector::<CRat>("e5").unwrap_err();
        assert_eq!(e.pos, 1);
        assert!(parse_multivector::<CRat>("").is_err());
        assert!(parse_multivector::<CRat>("1 ? e2").is_err());
    }

    #[test]
    fn format_is_canonical() {
        let u: Mq = parse_multivector("e23 + 1 - e0^e1").unwrap();
        assert_eq!(format_multivector(&u), "1 - e01 + e23");
        assert_eq!(format_multivector(&Mq::zero()), "0");
        let neg: Mq = parse_multivector("-2 e1").unwrap();
        assert_eq!(format_multivector(&neg), "-2 e1");
    }

    #[test]
    fn format_parse_roundtrip_exact() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        use rand::SeedableRng;
        for _ in 0..50 {
            let u = Mq::random_complex(&mut rng);
            let s = format_multivector(&u);
            let back: Mq = parse_multivector(&s).unwrap();
            assert_eq!(back, u, "roundtrip failed for {}", s);
        }
    }

    #[test]
    fn format_parse_roundtrip_float() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(12);
        for _ in 0..50 {
            let u = Mf::random_complex(&mut rng);
            let s = format_multivector(&u);
            let back: Mf = parse_multivector(&s).unwrap();
            assert_eq!(back, u, "roundtrip failed for {}", s);
        }
    }
}
