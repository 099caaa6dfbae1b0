//! Text format: `-1/2*x1^3*xi2 + x2 - (1/2+1*sqrt(-1))*xi1`.

use super::{Ambient, Gen, SuperPoly, EXACT};
use crate::error::{Error, Result};
use crate::scalar::{parse_rational, ExactScalar};

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in {:?}", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn index(&mut self) -> Result<usize> {
        let d = self.digits().ok_or_else(|| self.err("expected variable index"))?;
        let i: usize = d.parse().map_err(|_| self.err("bad variable index"))?;
        if i == 0 {
            return Err(self.err("variable indices start at 1"));
        }
        Ok(i - 1)
    }

    fn power(&mut self) -> Result<u32> {
        if self.eat('^') {
            self.skip_ws();
            let d = self.digits().ok_or_else(|| self.err("expected exponent"))?;
            d.parse().map_err(|_| self.err("bad exponent"))
        } else {
            Ok(1)
        }
    }
}

fn factor(cur: &mut Cursor<'_>, amb: Ambient) -> Result<SuperPoly> {
    cur.skip_ws();
    match cur.peek() {
        Some('(') => {
            let start = cur.pos + 1;
            let mut depth = 0;
            for (off, c) in cur.src[cur.pos..].char_indices() {
                match c {
                    '(' => depth += 1,
                    ')' => {
                        depth -= 1;
                        if depth == 0 {
                            let inner = &cur.src[start..cur.pos + off];
                            cur.pos += off + 1;
                            let s: ExactScalar = inner.parse()?;
                            return Ok(SuperPoly::constant(amb, EXACT, s));
                        }
                    }
                    _ => {}
                }
            }
            Err(cur.err("unbalanced parenthesis"))
        }
        Some(c) if c.is_ascii_digit() => {
            let start = cur.pos;
            cur.digits();
            if cur.peek() == Some('/') {
                cur.pos += 1;
                cur.digits().ok_or_else(|| cur.err("expected denominator"))?;
            }
            let r = parse_rational(&cur.src[start..cur.pos])?;
            Ok(SuperPoly::constant(amb, EXACT, ExactScalar::from_rational(r)))
        }
        Some('x') => {
            cur.pos += 1;
            let gen = if cur.peek() == Some('i') {
                cur.pos += 1;
                let j = cur.index()?;
                if j >= amb.n {
                    return Err(cur.err("odd variable out of range"));
                }
                Gen::Odd(j)
            } else {
                let i = cur.index()?;
                if i >= amb.m {
                    return Err(cur.err("even variable out of range"));
                }
                Gen::Even(i)
            };
            let e = cur.power()?;
            let g = SuperPoly::gen(amb, EXACT, gen);
            let mut acc = SuperPoly::one(amb, EXACT);
            for _ in 0..e {
                acc = &acc * &g;
            }
            Ok(acc)
        }
        _ => Err(cur.err("expected a factor")),
    }
}

/// Parses a polynomial over the given ambient; the result is exact.
pub fn parse_poly(src: &str, amb: Ambient) -> Result<SuperPoly> {
    let mut cur = Cursor { src, pos: 0 };
    let mut total = SuperPoly::zero(amb, EXACT);
    let mut first = true;
    loop {
        cur.skip_ws();
        if cur.peek().is_none() {
            if first {
                return Err(cur.err("empty input"));
            }
            return Ok(total);
        }
        let negative = if cur.eat('-') {
            true
        } else if cur.eat('+') {
            false
        } else if first {
            false
        } else {
            return Err(cur.err("expected + or -"));
        };
        first = false;
        let mut term = factor(&mut cur, amb)?;
        while cur.eat('*') {
            term = &term * &factor(&mut cur, amb)?;
        }
        total = if negative { &total - &term } else { &total + &term };
    }
}
