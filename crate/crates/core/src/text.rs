//! The text grammar for polynomials, used by golden files, JSON ideals and
//! the CLI:
//!
//! ```text
//! polynomial := [sign] term (("+"|"-") term)*
//! term       := [rational "*"] factor ("*" factor)* | rational
//! factor     := ("z[i,j]" | "t" | "s" | "w") ["^" k]
//! ```
//!
//! Printing is canonical: terms in descending stamped order, factors in the
//! fixed sequence `w, s, t, z[1,1], z[1,2], ...`, e.g. `t*z[1,1]+z[4,1]`.

use num_traits::{One, Signed};

use crate::error::Error;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::polynomial::{Polynomial, Rational};
use crate::variable::{Ring, Variable};

pub fn format_polynomial(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (m, c)) in p.terms().iter().enumerate() {
        let neg = c.is_negative();
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let mag = c.abs();
        if m.is_one() {
            out.push_str(&mag.to_string());
        } else {
            if !mag.is_one() {
                out.push_str(&mag.to_string());
                out.push('*');
            }
            let factors: Vec<String> = m
                .exponents()
                .iter()
                .map(|&(v, e)| {
                    if e == 1 {
                        v.to_string()
                    } else {
                        format!("{}^{}", v, e)
                    }
                })
                .collect();
            out.push_str(&factors.join("*"));
        }
    }
    out
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&format_polynomial(self))
    }
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
}

impl<'a> Lexer<'a> {
    fn new(s: &'a str) -> Lexer<'a> {
        Lexer {
            chars: s.chars().peekable(),
        }
    }

    fn skip_ws(&mut self) {
        while matches!(self.chars.peek(), Some(c) if c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.next()
    }

    fn expect(&mut self, c: char) -> Result<(), Error> {
        match self.bump() {
            Some(x) if x == c => Ok(()),
            other => Err(Error::Parse(format!("expected '{c}', found {other:?}"))),
        }
    }

    fn integer(&mut self) -> Result<u64, Error> {
        self.skip_ws();
        let mut digits = String::new();
        while matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
            digits.push(self.chars.next().unwrap());
        }
        if digits.is_empty() {
            return Err(Error::Parse("expected an integer".into()));
        }
        digits
            .parse()
            .map_err(|e| Error::Parse(format!("bad integer: {e}")))
    }

    fn rational(&mut self) -> Result<Rational, Error> {
        let num = self.integer()?;
        let mut r = Rational::from_integer(num.into());
        if self.peek() == Some('/') {
            self.bump();
            let den = self.integer()?;
            if den == 0 {
                return Err(Error::Parse("zero denominator".into()));
            }
            r /= Rational::from_integer(den.into());
        }
        Ok(r)
    }
}

pub fn parse_polynomial(
    input: &str,
    ring: Ring,
    order: &MonomialOrder,
) -> Result<Polynomial, Error> {
    let mut lx = Lexer::new(input);
    let mut terms: Vec<(Monomial, Rational)> = Vec::new();
    let mut sign = match lx.peek() {
        Some('-') => {
            lx.bump();
            -Rational::one()
        }
        Some('+') => {
            lx.bump();
            Rational::one()
        }
        _ => Rational::one(),
    };
    loop {
        let (m, c) = parse_term(&mut lx, ring)?;
        terms.push((m, c * &sign));
        match lx.peek() {
            Some('+') => {
                lx.bump();
                sign = Rational::one();
            }
            Some('-') => {
                lx.bump();
                sign = -Rational::one();
            }
            None => break,
            Some(c) => return Err(Error::Parse(format!("unexpected character '{c}'"))),
        }
    }
    Ok(Polynomial::from_terms(ring, order, terms))
}

fn parse_term(lx: &mut Lexer<'_>, ring: Ring) -> Result<(Monomial, Rational), Error> {
    let mut coef = Rational::one();
    let mut pairs: Vec<(Variable, u32)> = Vec::new();
    loop {
        match lx.peek() {
            Some(c) if c.is_ascii_digit() => {
                coef *= lx.rational()?;
            }
            Some('z') | Some('t') | Some('s') | Some('w') => {
                let v = parse_variable(lx)?;
                ring.check_contains(v)?;
                let e = if lx.peek() == Some('^') {
                    lx.bump();
                    lx.integer()? as u32
                } else {
                    1
                };
                pairs.push((v, e));
            }
            other => {
                return Err(Error::Parse(format!(
                    "expected a factor, found {other:?}"
                )))
            }
        }
        if lx.peek() == Some('*') {
            lx.bump();
        } else {
            break;
        }
    }
    Ok((Monomial::from_pairs(pairs), coef))
}

fn parse_variable(lx: &mut Lexer<'_>) -> Result<Variable, Error> {
    match lx.bump() {
        Some('t') => Ok(Variable::T),
        Some('s') => Ok(Variable::S),
        Some('w') => Ok(Variable::Aux),
        Some('z') => {
            lx.expect('[')?;
            let row = lx.integer()?;
            lx.expect(',')?;
            let col = lx.integer()?;
            lx.expect(']')?;
            Ok(Variable::Z {
                row: row as u8,
                col: col as u8,
            })
        }
        other => Err(Error::Parse(format!("expected a variable, found {other:?}"))),
    }
}
