use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::cyclotomic::CycloValue;
use super::{FieldCtx, FieldElement, Repr, Value};
use crate::error::{Error, Result};

/// Recursive-descent parser for `+ - * / ^ ( )`, integers, `zeta` and `t`.
struct Parser<'a> {
    ctx: &'a FieldCtx,
    input: &'a str,
    chars: Vec<char>,
    pos: usize,
}

fn integer(ctx: &FieldCtx, n: &BigInt) -> FieldElement {
    match &ctx.inner.repr {
        Repr::Cyclo(d) => {
            let mut coords = vec![BigRational::from_integer(0.into()); d.phi];
            coords[0] = BigRational::from_integer(n.clone());
            ctx.wrap(Value::Cyclo(CycloValue::from_rationals(&coords)))
        }
        Repr::Finite(f) => {
            let r = (n % BigInt::from(f.p)).to_i64().expect("residue fits");
            ctx.from_i64(r)
        }
    }
}

impl<'a> Parser<'a> {
    fn err(&self, reason: impl Into<String>) -> Error {
        Error::ScalarParse { input: self.input.to_string(), reason: reason.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<FieldElement> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                '-' => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<FieldElement> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                '*' => {
                    self.pos += 1;
                    acc = acc * self.unary()?;
                }
                '/' => {
                    self.pos += 1;
                    let d = self.unary()?;
                    acc = acc.checked_div(&d).map_err(|_| self.err("division by zero"))?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<FieldElement> {
        if self.peek() == Some('-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<FieldElement> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let negative = if self.peek() == Some('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let e = self.digits()?.to_i64().ok_or_else(|| self.err("exponent too large"))?;
        if negative && base.is_zero() {
            return Err(self.err("division by zero"));
        }
        Ok(base.pow(if negative { -e } else { e }))
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err(format!("expected a number at offset {start}")));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("ascii digits"))
    }

    fn atom(&mut self) -> Result<FieldElement> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("unbalanced parenthesis"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.digits()?;
                Ok(integer(self.ctx, &n))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let word: String = self.chars[start..self.pos].iter().collect();
                match word.as_str() {
                    "zeta" => Ok(self.ctx.zeta()),
                    "t" => self.ctx.poly_var().ok_or_else(|| self.err("`t` is only available in finite fields")),
                    other => Err(self.err(format!("unknown symbol `{other}`"))),
                }
            }
            Some(c) => Err(self.err(format!("unexpected character `{c}`"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

pub(super) fn parse_scalar(ctx: &FieldCtx, s: &str) -> Result<FieldElement> {
    let mut p = Parser { ctx, input: s, chars: s.chars().collect(), pos: 0 };
    let v = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err(format!("trailing input at offset {}", p.pos)));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use crate::field::FieldCtx;

    #[test]
    fn parses_rationals_and_roots() {
        let k = FieldCtx::cyclotomic(12).unwrap();
        let half = k.parse("1/2").unwrap();
        assert_eq!(&half + &half, k.one());
        assert_eq!(k.parse("zeta^12").unwrap(), k.one());
        assert_eq!(k.parse("zeta^-1").unwrap() * k.zeta(), k.one());
        assert_eq!(k.parse("-(2 + zeta)*3").unwrap(), k.from_i64(-6) - k.from_i64(3) * k.zeta());
    }

    #[test]
    fn display_round_trips() {
        let k = FieldCtx::cyclotomic(12).unwrap();
        let x = k.parse("3/2*zeta^3 - zeta + 7").unwrap();
        assert_eq!(k.parse(&x.to_string()).unwrap(), x);
        let f = FieldCtx::extension(3, 2).unwrap();
        for e in f.elements().unwrap() {
            assert_eq!(f.parse(&e.to_string()).unwrap(), e);
        }
    }

    #[test]
    fn rejects_bad_input() {
        let k = FieldCtx::rationals();
        assert!(k.parse("1/0").is_err());
        assert!(k.parse("t").is_err());
        assert!(k.parse("2 +").is_err());
        assert!(k.parse("foo").is_err());
        assert!(k.parse("(1").is_err());
    }
}
