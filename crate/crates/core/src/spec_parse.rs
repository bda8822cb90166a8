//! Parser for family specs: `A(m,n)`, `B(m,n)`, `B(0,n)`, `C(n)`, `D(m,n)`,
//! `D(2,1;p/q)`, `F(4)`, `G(3)`.

use crate::error::{Error, Result};
use crate::family::FamilyId;
use crate::rational::Q;

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::ParseError { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            self.err(format!("expected `{c}`"))
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some('-') {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let text = &self.src[start..self.pos];
        text.parse().or_else(|_| {
            self.pos = start;
            self.err("expected an integer")
        })
    }

    fn uint(&mut self) -> Result<u32> {
        let start = self.pos;
        let v = self.int()?;
        u32::try_from(v).or_else(|_| {
            self.pos = start;
            self.err("expected a nonnegative integer")
        })
    }

    fn rational(&mut self) -> Result<Q> {
        let num = self.int()?;
        self.skip_ws();
        if self.peek() == Some('/') {
            self.pos += 1;
            let at = self.pos;
            let den = self.int()?;
            if den == 0 {
                self.pos = at;
                return self.err("zero denominator");
            }
            Ok(Q::new(num, den))
        } else {
            Ok(Q::from_integer(num))
        }
    }

    fn end(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos == self.src.len() {
            Ok(())
        } else {
            self.err("trailing input")
        }
    }
}

pub fn parse_rational(s: &str) -> Result<Q> {
    let mut c = Cursor { src: s, pos: 0 };
    let v = c.rational()?;
    c.end()?;
    Ok(v)
}

/// Parses a family spec. Constraint violations surface as `InvalidFamily`.
pub fn parse_family(s: &str) -> Result<FamilyId> {
    let mut c = Cursor { src: s, pos: 0 };
    c.skip_ws();
    let letter = match c.peek() {
        Some(ch) if ch.is_ascii_alphabetic() => ch.to_ascii_uppercase(),
        _ => return c.err("expected a family letter"),
    };
    c.pos += 1;
    c.expect('(')?;
    let fam = match letter {
        'A' | 'B' => {
            let m = c.uint()?;
            c.expect(',')?;
            let n = c.uint()?;
            c.expect(')')?;
            if letter == 'A' {
                FamilyId::a(m, n)?
            } else {
                FamilyId::b(m, n)?
            }
        }
        'C' => {
            let k = c.uint()?;
            c.expect(')')?;
            if k < 2 {
                return Err(Error::InvalidFamily(format!("C({k}) needs k >= 2")));
            }
            FamilyId::c(k - 1)?
        }
        'D' => {
            let m = c.uint()?;
            c.expect(',')?;
            let n = c.uint()?;
            c.skip_ws();
            if c.peek() == Some(';') {
                c.pos += 1;
                if (m, n) != (2, 1) {
                    return c.err("only D(2,1;alpha) takes a parameter");
                }
                let alpha = c.rational()?;
                c.expect(')')?;
                FamilyId::d21(alpha)?
            } else {
                c.expect(')')?;
                FamilyId::d(m, n)?
            }
        }
        'F' | 'G' => {
            let at = c.pos;
            let k = c.uint()?;
            c.expect(')')?;
            match (letter, k) {
                ('F', 4) => FamilyId::f4(),
                ('G', 3) => FamilyId::g3(),
                _ => {
                    c.pos = at;
                    return c.err(format!("{letter}({k}) is not a family"));
                }
            }
        }
        _ => {
            c.pos = 0;
            return c.err(format!("unknown family letter `{letter}`"));
        }
    };
    c.end()?;
    Ok(fam)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilyKind;
    use crate::rational::frac;

    #[test]
    fn parses_all_forms() {
        assert_eq!(parse_family("A(1,1)").unwrap(), FamilyId::a(1, 1).unwrap());
        assert_eq!(parse_family(" B( 0 , 2 ) ").unwrap().kind, FamilyKind::B0);
        assert_eq!(parse_family("C(3)").unwrap(), FamilyId::c(2).unwrap());
        assert_eq!(parse_family("D(3,2)").unwrap(), FamilyId::d(3, 2).unwrap());
        assert_eq!(parse_family("D(2,1;-1/2)").unwrap().alpha, Some(frac(-1, 2)));
        assert_eq!(parse_family("F(4)").unwrap(), FamilyId::f4());
        assert_eq!(parse_family("G(3)").unwrap(), FamilyId::g3());
    }

    #[test]
    fn rejects() {
        assert!(matches!(parse_family("D(2,1;0)"), Err(Error::InvalidFamily(_))));
        assert!(matches!(parse_family("D(2,1;-1)"), Err(Error::InvalidFamily(_))));
        assert_eq!(parse_family("A(1,x)"), Err(Error::ParseError { pos: 4, msg: "expected an integer".into() }));
        assert!(matches!(parse_family("E(6)"), Err(Error::ParseError { pos: 0, .. })));
        assert!(matches!(parse_family("F(5)"), Err(Error::ParseError { pos: 2, .. })));
        assert!(matches!(parse_family("A(1,1) x"), Err(Error::ParseError { pos: 7, .. })));
        assert!(matches!(parse_family("D(2,1;1/0)"), Err(Error::ParseError { .. })));
    }
}
