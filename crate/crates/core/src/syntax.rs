//! Text syntax for ordinals.
//!
//! ```text
//! expr   := term { "+" term }
//! term   := factor { "*" factor }
//! factor := atom [ "^" factor ]
//! atom   := NAT | "w" | "e" NAT | "(" expr ")"
//! ```
//!
//! `+` and `*` associate to the left, `^` to the right. Only `w` and `e<k>`
//! may be raised to a power. The unicode forms `ω`, `ε`, `·` and subscript
//! digits are accepted as well.

use crate::error::{Error, Result};
use crate::ordinal::Ordinal;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    Ascii,
    Unicode,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Nat(u64),
    Omega,
    Eps(u32),
    Add(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn eval(&self) -> Ordinal {
        match self {
            Expr::Nat(n) => Ordinal::nat(*n),
            Expr::Omega => Ordinal::omega(),
            Expr::Eps(k) => Ordinal::eps(*k as i32),
            Expr::Add(a, b) => a.eval().add(&b.eval()),
            Expr::Mul(a, b) => a.eval().mul(&b.eval()),
            Expr::Pow(base, e) => match **base {
                Expr::Omega => Ordinal::omega_pow(&e.eval()),
                Expr::Eps(k) => Ordinal::eps_pow(k as i32, &e.eval()),
                _ => unreachable!("parser only builds powers of w and e<k>"),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Nat(u64),
    Omega,
    Eps(u32),
    Plus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn subscript_digit(c: char) -> Option<u32> {
    let d = c as u32;
    (0x2080..=0x2089).contains(&d).then(|| d - 0x2080)
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some((pos, c)) = chars.next() {
        let tok = match c {
            c if c.is_whitespace() => continue,
            '+' => Tok::Plus,
            '*' | '·' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            'w' | 'ω' => Tok::Omega,
            'e' | 'ε' => {
                let mut idx: Option<u64> = None;
                while let Some(&(_, d)) = chars.peek() {
                    let digit = d.to_digit(10).or_else(|| subscript_digit(d));
                    match digit {
                        Some(v) => {
                            let cur = idx.unwrap_or(0);
                            idx = Some(cur.checked_mul(10).and_then(|x| x.checked_add(u64::from(v))).ok_or(
                                Error::Syntax { pos, msg: "epsilon index too large".into() },
                            )?);
                            chars.next();
                        }
                        None => break,
                    }
                }
                let k = idx.ok_or(Error::Syntax {
                    pos,
                    msg: "expected an index after `e`".into(),
                })?;
                Tok::Eps(u32::try_from(k).map_err(|_| Error::Syntax {
                    pos,
                    msg: "epsilon index too large".into(),
                })?)
            }
            c if c.is_ascii_digit() => {
                let mut n = u64::from(c.to_digit(10).unwrap());
                while let Some(&(_, d)) = chars.peek() {
                    let Some(v) = d.to_digit(10) else { break };
                    n = n
                        .checked_mul(10)
                        .and_then(|x| x.checked_add(u64::from(v)))
                        .ok_or(Error::Syntax { pos, msg: "number too large".into() })?;
                    chars.next();
                }
                Tok::Nat(n)
            }
            other => {
                return Err(Error::Syntax {
                    pos,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((pos, tok));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        while self.peek() == Some(&Tok::Plus) {
            self.at += 1;
            lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.at += 1;
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr> {
        let base_pos = self.pos();
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        if !matches!(base, Expr::Omega | Expr::Eps(_)) {
            return Err(Error::Syntax {
                pos: base_pos,
                msg: "only w^ and e<k>^ are ordinal powers".into(),
            });
        }
        self.at += 1;
        let exp = self.factor()?;
        Ok(Expr::Pow(Box::new(base), Box::new(exp)))
    }

    fn atom(&mut self) -> Result<Expr> {
        let tok = match self.peek() {
            Some(t) => t.clone(),
            None => return self.err("unexpected end of input"),
        };
        self.at += 1;
        match tok {
            Tok::Nat(n) => Ok(Expr::Nat(n)),
            Tok::Omega => Ok(Expr::Omega),
            Tok::Eps(k) => Ok(Expr::Eps(k)),
            Tok::LParen => {
                let e = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                self.at += 1;
                Ok(e)
            }
            _ => {
                self.at -= 1;
                self.err("expected a number, `w`, `e<k>` or `(`")
            }
        }
    }
}

pub fn parse_expr(text: &str) -> Result<Expr> {
    let mut p = Parser { toks: lex(text)?, at: 0, end: text.len() };
    let e = p.expr()?;
    if p.at != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

pub fn parse_ordinal(text: &str) -> Result<Ordinal> {
    Ok(parse_expr(text)?.eval())
}

/// Canonical leveled normal-form string; `parse_ordinal(render(a)) == a`.
pub fn render(a: &Ordinal, style: Style) -> String {
    let mut out = String::new();
    write_sum(a, style, &mut out);
    out
}

fn base_name(level: i32, style: Style) -> String {
    match (level, style) {
        (-1, Style::Ascii) => "w".into(),
        (-1, Style::Unicode) => "ω".into(),
        (m, Style::Ascii) => format!("e{m}"),
        (m, Style::Unicode) => {
            let sub: String = m
                .to_string()
                .chars()
                .map(|c| char::from_u32(0x2080 + c.to_digit(10).unwrap()).unwrap())
                .collect();
            format!("ε{sub}")
        }
    }
}

/// Renders without surrounding parentheses; returns true if the string is a
/// single power or atom (safe as an exponent or factor).
fn is_atomic(a: &Ordinal) -> bool {
    match a.leveled_terms() {
        None => true,
        Some((_, [t])) => t.coef == Ordinal::ONE,
        Some(_) => false,
    }
}

fn write_sum(a: &Ordinal, style: Style, out: &mut String) {
    let Some((level, terms)) = a.leveled_terms() else {
        out.push_str(&a.as_finite().unwrap().to_string());
        return;
    };
    let (plus, star) = match style {
        Style::Ascii => (" + ", "*"),
        Style::Unicode => (" + ", "·"),
    };
    for (i, t) in terms.iter().enumerate() {
        if i > 0 {
            out.push_str(plus);
        }
        if t.exp.is_zero() {
            write_sum(&t.coef, style, out);
            continue;
        }
        out.push_str(&base_name(level, style));
        if t.exp != Ordinal::ONE {
            out.push('^');
            write_wrapped(&t.exp, style, out);
        }
        if t.coef != Ordinal::ONE {
            out.push_str(star);
            write_wrapped(&t.coef, style, out);
        }
    }
}

fn write_wrapped(a: &Ordinal, style: Style, out: &mut String) {
    if is_atomic(a) {
        write_sum(a, style, out);
    } else {
        out.push('(');
        write_sum(a, style, out);
        out.push(')');
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Ordinal {
        parse_ordinal(s).unwrap()
    }

    #[test]
    fn parse_examples() {
        let w = Ordinal::omega();
        let expect = Ordinal::omega_pow(&Ordinal::nat(2))
            .mul(&Ordinal::nat(3))
            .add(&w)
            .add(&Ordinal::nat(5));
        assert_eq!(p("w^2*3 + w + 5"), expect);
        assert_eq!(p("e0^e0"), Ordinal::tower(2, 0).unwrap());
        match parse_ordinal("2^w") {
            Err(Error::Syntax { pos: 0, msg }) => assert!(msg.contains("only w^")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn render_examples() {
        assert_eq!(render(&p("w*3+2"), Style::Ascii), "w*3 + 2");
        assert_eq!(render(&Ordinal::eps(1), Style::Ascii), "e1");
        assert_eq!(render(&Ordinal::ZERO, Style::Ascii), "0");
        assert_eq!(render(&p("e0^2*3 + e0*(w+1) + w"), Style::Ascii), "e0^2*3 + e0*(w + 1) + w");
        assert_eq!(render(&p("w^w^2"), Style::Ascii), "w^w^2");
        assert_eq!(render(&p("w^(w+1)"), Style::Ascii), "w^(w + 1)");
        assert_eq!(render(&p("e12*w"), Style::Unicode), "ε₁₂·ω");
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert_eq!(
            parse_ordinal("w + "),
            Err(Error::Syntax { pos: 4, msg: "unexpected end of input".into() })
        );
        assert!(matches!(parse_ordinal("(w"), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_ordinal("w $"), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_ordinal("e"), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(parse_ordinal("(w+1)^2"), Err(Error::Syntax { pos: 0, .. })));
    }

    #[test]
    fn unicode_round_trip() {
        for s in ["ε₀^ε₀ + ω·2", "w^(w + 1)*3 + e1*e0"] {
            let a = p(s);
            assert_eq!(p(&render(&a, Style::Unicode)), a);
            assert_eq!(p(&render(&a, Style::Ascii)), a);
        }
    }
}
