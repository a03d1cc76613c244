//! Textual polynomial grammar.
//!
//! ```text
//! expr        := ['+' | '-'] term (('+' | '-') term)*
//! term        := factor ('*' factor)*
//! factor      := coefficient | variable ('^' uint)? | '(' expr ')' ('^' uint)?
//! coefficient := int ('/' uint)?
//! ```
//!
//! Whitespace is insignificant and variables must match declared names
//! exactly. The optional leading sign is what lets printed polynomials with
//! a negative leading coefficient parse back.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::arith::{Field, Rational};

use super::{Monomial, PolyError, Polynomial, Ring};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, PolyError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push((start, Tok::Num(chars[start..i].iter().collect())));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((start, Tok::Ident(chars[start..i].iter().collect())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(PolyError::Syntax {
                pos: i,
                msg: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

struct Parser<'a, F: Field> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    ring: &'a Arc<Ring<F>>,
}

impl<'a, F: Field> Parser<'a, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Syntax {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn eat_op(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn uint(&mut self) -> Result<BigInt, PolyError> {
        match self.peek() {
            Some(Tok::Num(s)) => {
                let v = s.parse::<BigInt>().expect("digits");
                self.pos += 1;
                Ok(v)
            }
            _ => self.err("expected an unsigned integer"),
        }
    }

    fn small_exponent(&mut self) -> Result<u32, PolyError> {
        let at = self.offset();
        let v = self.uint()?;
        u32::try_from(v).ok().filter(|&e| e <= u16::MAX as u32).ok_or(PolyError::Syntax {
            pos: at,
            msg: "exponent too large".into(),
        })
    }

    fn expr(&mut self) -> Result<Polynomial<F>, PolyError> {
        let negate_first = if self.eat_op('-') {
            true
        } else {
            self.eat_op('+');
            false
        };
        let mut acc = self.term()?;
        if negate_first {
            acc = -&acc;
        }
        loop {
            if self.eat_op('+') {
                acc = &acc + &self.term()?;
            } else if self.eat_op('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<F>, PolyError> {
        let mut acc = self.factor()?;
        while self.eat_op('*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial<F>, PolyError> {
        let at = self.offset();
        match self.peek().cloned() {
            Some(Tok::Num(_)) => {
                let num = self.uint()?;
                let den = if self.eat_op('/') {
                    self.uint()?
                } else {
                    BigInt::from(1)
                };
                let r = Rational::new(num, den).map_err(|e| PolyError::Syntax {
                    pos: at,
                    msg: e.to_string(),
                })?;
                let c = F::from_rational(&r, self.ring.ctx()).map_err(|e| PolyError::Syntax {
                    pos: at,
                    msg: e.to_string(),
                })?;
                Ok(Polynomial::constant(self.ring, c))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let idx = self
                    .ring
                    .var_index(&name)
                    .ok_or(PolyError::UnknownVariable { name, pos: at })?;
                let e = if self.eat_op('^') { self.small_exponent()? } else { 1 };
                Ok(Polynomial::monomial(
                    self.ring,
                    self.ring.one(),
                    Monomial::var(self.ring.nvars(), idx, e as u16),
                ))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat_op(')') {
                    return self.err("expected `)`");
                }
                if self.eat_op('^') {
                    let e = self.small_exponent()?;
                    Ok(inner.pow(e))
                } else {
                    Ok(inner)
                }
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses `text` as a polynomial of `ring`.
pub fn parse_poly<F: Field>(text: &str, ring: &Arc<Ring<F>>) -> Result<Polynomial<F>, PolyError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.chars().count(),
        ring,
    };
    let f = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(f)
}

/// Prints terms in descending order with integer or `a/b` coefficients.
pub fn print_poly<F: Field>(f: &Polynomial<F>) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let vars = f.ring().vars();
    let mut out = String::new();
    for (k, t) in f.terms().iter().enumerate() {
        let (neg, mag) = t.coeff.signed_repr();
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mut factors: Vec<String> = Vec::new();
        if mag != "1" || t.mono.is_one() {
            factors.push(mag);
        }
        for (i, &e) in t.mono.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(vars[i].clone()),
                _ => factors.push(format!("{}^{}", vars[i], e)),
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

/// Rewrites TeX-style input such as `2x_0x_2 + x_1^2` into the explicit
/// grammar (`2*x0*x2 + x1^2`). Identifier runs are split greedily into the
/// longest declared variable names.
pub fn normalize_juxtaposed(text: &str, vars: &[String]) -> Result<String, PolyError> {
    let cleaned: String = {
        // drop underscores that separate a letter from a subscript
        let chars: Vec<char> = text.chars().collect();
        let mut s = String::with_capacity(chars.len());
        for (i, &c) in chars.iter().enumerate() {
            let subscript = c == '_'
                && i > 0
                && chars[i - 1].is_ascii_alphabetic()
                && chars.get(i + 1).is_some_and(|n| n.is_ascii_digit() || *n == '{');
            if subscript || c == '{' || c == '}' {
                continue;
            }
            s.push(c);
        }
        s
    };
    let chars: Vec<char> = cleaned.chars().collect();
    // (is_operand, text)
    let mut pieces: Vec<(bool, String)> = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let mut num: String = chars[start..i].iter().collect();
            // keep fractions together
            if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                let s2 = i + 1;
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                num.push('/');
                num.extend(&chars[s2..i]);
            }
            pieces.push((true, num));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            let run: String = chars[start..i].iter().collect();
            let mut rest = run.as_str();
            while !rest.is_empty() {
                let best = vars
                    .iter()
                    .filter(|v| rest.starts_with(v.as_str()))
                    .max_by_key(|v| v.len())
                    .ok_or_else(|| PolyError::UnknownVariable {
                        name: rest.to_string(),
                        pos: start + (run.len() - rest.len()),
                    })?;
                let mut piece = best.clone();
                rest = &rest[best.len()..];
                // allow `x0^2` to stay attached
                if rest.is_empty() && i < chars.len() && chars[i] == '^' {
                    let s2 = i;
                    i += 1;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    piece.extend(&chars[s2..i]);
                }
                pieces.push((true, piece));
            }
        } else if c == '(' {
            pieces.push((false, "(".into()));
            i += 1;
        } else if c == ')' {
            let mut p = ")".to_string();
            i += 1;
            if i < chars.len() && chars[i] == '^' {
                let s2 = i;
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                p.extend(&chars[s2..i]);
            }
            pieces.push((true, p));
        } else {
            pieces.push((false, c.to_string()));
            i += 1;
        }
    }
    let mut out = String::new();
    for (k, (operand, s)) in pieces.iter().enumerate() {
        if k > 0 {
            let (prev_operand, prev) = &pieces[k - 1];
            let opens = s == "(";
            if (*prev_operand && (*operand && !s.starts_with(')') || opens)) && !prev.is_empty() {
                out.push('*');
            }
        }
        if !operand && (s == "+" || s == "-") && !out.is_empty() {
            out.push(' ');
            out.push_str(s);
            out.push(' ');
        } else {
            out.push_str(s);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;

    fn ring(n: usize) -> Arc<Ring<Rational>> {
        Ring::indexed("x", n, ()).unwrap()
    }

    #[test]
    fn parses_binomial() {
        let r = ring(2);
        let f = parse_poly("x0 - x1", &r).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(print_poly(&f), "x0 - x1");
    }

    #[test]
    fn parses_quadric() {
        let r = ring(2);
        let f = parse_poly("x0^2 + 2*x0*x1", &r).unwrap();
        assert_eq!(f.degree(), Some(2));
        assert_eq!(f.len(), 2);
    }

    #[test]
    fn unknown_variable() {
        let r = ring(6);
        let err = parse_poly("x0 + w", &r).unwrap_err();
        assert_eq!(err, PolyError::UnknownVariable { name: "w".into(), pos: 5 });
    }

    #[test]
    fn syntax_error_has_position() {
        let r = ring(2);
        match parse_poly("x0 + * x1", &r) {
            Err(PolyError::Syntax { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_poly("(x0 + x1", &r).is_err());
        assert!(parse_poly("x0 x1", &r).is_err());
    }

    #[test]
    fn fractions_and_negatives_print_back() {
        let r = ring(3);
        let f = parse_poly("-3/2*x2^2 + x0*x1 - 7", &r).unwrap();
        assert_eq!(print_poly(&f), "x0*x1 - 3/2*x2^2 - 7");
        let g = parse_poly("-x0 + x1", &r).unwrap();
        assert_eq!(print_poly(&g), "-x0 + x1");
        assert_eq!(parse_poly(&print_poly(&g), &r).unwrap(), g);
    }

    #[test]
    fn normalizer_inserts_products() {
        let vars: Vec<String> = (0..6).map(|i| format!("x{i}")).collect();
        let s = normalize_juxtaposed("x_0^2+2x_0x_2-3x_1x_5+10x_0x_4", &vars).unwrap();
        assert_eq!(s, "x0^2 + 2*x0*x2 - 3*x1*x5 + 10*x0*x4");
        let r = ring(6);
        assert!(parse_poly(&s, &r).is_ok());
        let t = normalize_juxtaposed("2(x0+x1)x2", &vars).unwrap();
        assert_eq!(t, "2*(x0 + x1)*x2");
    }
}
