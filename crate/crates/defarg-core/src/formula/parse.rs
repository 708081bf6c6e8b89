//! Recursive-descent parser for the formula text form.
//!
//! ```text
//! formula := iff
//! iff     := impl ("<->" impl)*
//! impl    := or ("->" or)*          (right-assoc)
//! or      := and ("|" and)*
//! and     := unary ("&" unary)*
//! unary   := "!" unary | "(" formula ")" | "true" | "false" | atom
//! atom    := ident [ "(" ident ("," ident)* ")" ]
//! ```
//!
//! Identifiers starting with an uppercase letter are variables. They are
//! legal only as atom arguments inside rule schemas; in ground context an
//! uppercase argument is read as a constant (`bird(Tweety)`), while a bare
//! uppercase identifier is rejected.

use super::{Atom, Formula, Term};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character `{ch}` at position {pos}")]
    UnexpectedChar { pos: usize, ch: char },
    #[error("expected {expected} at position {pos}, found `{found}`")]
    UnexpectedToken {
        pos: usize,
        found: String,
        expected: &'static str,
    },
    #[error("unexpected end of input, expected {expected}")]
    UnexpectedEnd { expected: &'static str },
    #[error("unbound variable `{name}` at position {pos}: uppercase identifiers are only valid inside rule schemas")]
    UnboundVariable { pos: usize, name: String },
    #[error("variable `{name}` at position {pos} cannot be used in predicate position")]
    VariablePredicate { pos: usize, name: String },
    #[error("trailing input at position {pos}")]
    TrailingInput { pos: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    True,
    False,
    Bang,
    Amp,
    Pipe,
    Arrow,
    DArrow,
    LParen,
    RParen,
    Comma,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => s.clone(),
            Tok::True => "true".into(),
            Tok::False => "false".into(),
            Tok::Bang => "!".into(),
            Tok::Amp => "&".into(),
            Tok::Pipe => "|".into(),
            Tok::Arrow => "->".into(),
            Tok::DArrow => "<->".into(),
            Tok::LParen => "(".into(),
            Tok::RParen => ")".into(),
            Tok::Comma => ",".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '!' => {
                out.push((i, Tok::Bang));
                i += 1;
            }
            '&' => {
                out.push((i, Tok::Amp));
                i += 1;
            }
            '|' => {
                out.push((i, Tok::Pipe));
                i += 1;
            }
            '(' => {
                out.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                out.push((i, Tok::RParen));
                i += 1;
            }
            ',' => {
                out.push((i, Tok::Comma));
                i += 1;
            }
            '-' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    out.push((i, Tok::Arrow));
                    i += 2;
                } else {
                    return Err(ParseError::UnexpectedChar { pos: i, ch: '-' });
                }
            }
            '<' => {
                if bytes.get(i + 1) == Some(&b'-') && bytes.get(i + 2) == Some(&b'>') {
                    out.push((i, Tok::DArrow));
                    i += 3;
                } else {
                    return Err(ParseError::UnexpectedChar { pos: i, ch: '<' });
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() {
                    let c = bytes[i] as char;
                    if c.is_ascii_alphanumeric() || c == '_' {
                        i += 1;
                    } else {
                        break;
                    }
                }
                let word = &text[start..i];
                let tok = match word {
                    "true" => Tok::True,
                    "false" => Tok::False,
                    _ => Tok::Ident(word.to_string()),
                };
                out.push((start, tok));
            }
            other => return Err(ParseError::UnexpectedChar { pos: i, ch: other }),
        }
    }
    Ok(out)
}

fn is_variable_ident(name: &str) -> bool {
    name.chars().next().is_some_and(|c| c.is_ascii_uppercase())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Mode {
    Ground,
    Schema,
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    mode: Mode,
}

impl Parser {
    fn peek(&self) -> Option<&(usize, Tok)> {
        self.toks.get(self.pos)
    }

    fn next_is(&mut self, tok: &Tok) -> bool {
        if self.peek().map(|(_, t)| t) == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok, expected: &'static str) -> Result<usize, ParseError> {
        match self.peek() {
            Some((at, t)) if *t == tok => {
                let at = *at;
                self.pos += 1;
                Ok(at)
            }
            Some((at, t)) => Err(ParseError::UnexpectedToken {
                pos: *at,
                found: t.describe(),
                expected,
            }),
            None => Err(ParseError::UnexpectedEnd { expected }),
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.implication()?;
        while self.next_is(&Tok::DArrow) {
            let rhs = self.implication()?;
            lhs = Formula::iff(lhs, rhs);
        }
        Ok(lhs)
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        if self.next_is(&Tok::Arrow) {
            let rhs = self.implication()?;
            Ok(Formula::implies(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.conjunction()?;
        while self.next_is(&Tok::Pipe) {
            let rhs = self.conjunction()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while self.next_is(&Tok::Amp) {
            let rhs = self.unary()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().cloned() {
            Some((_, Tok::Bang)) => {
                self.pos += 1;
                Ok(Formula::not(self.unary()?))
            }
            Some((_, Tok::LParen)) => {
                self.pos += 1;
                let inner = self.formula()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Some((_, Tok::True)) => {
                self.pos += 1;
                Ok(Formula::Verum)
            }
            Some((_, Tok::False)) => {
                self.pos += 1;
                Ok(Formula::Falsum)
            }
            Some((at, Tok::Ident(name))) => {
                self.pos += 1;
                self.atom(at, name)
            }
            Some((at, other)) => Err(ParseError::UnexpectedToken {
                pos: at,
                found: other.describe(),
                expected: "a formula",
            }),
            None => Err(ParseError::UnexpectedEnd {
                expected: "a formula",
            }),
        }
    }

    fn atom(&mut self, at: usize, pred: String) -> Result<Formula, ParseError> {
        if self.peek().map(|(_, t)| t) != Some(&Tok::LParen) {
            // Bare identifier: a propositional atom in predicate position.
            if is_variable_ident(&pred) {
                return Err(match self.mode {
                    Mode::Ground => ParseError::UnboundVariable {
                        pos: at,
                        name: pred,
                    },
                    Mode::Schema => ParseError::VariablePredicate {
                        pos: at,
                        name: pred,
                    },
                });
            }
            return Ok(Formula::Atom(Atom::new(pred)));
        }
        if is_variable_ident(&pred) {
            return Err(ParseError::VariablePredicate {
                pos: at,
                name: pred,
            });
        }
        self.pos += 1; // consume `(`
        let mut args = Vec::new();
        loop {
            match self.peek().cloned() {
                Some((_, Tok::Ident(arg))) => {
                    self.pos += 1;
                    let term = if is_variable_ident(&arg) && self.mode == Mode::Schema {
                        Term::Var(arg)
                    } else {
                        Term::Const(arg)
                    };
                    args.push(term);
                }
                Some((at, other)) => {
                    return Err(ParseError::UnexpectedToken {
                        pos: at,
                        found: other.describe(),
                        expected: "an argument identifier",
                    })
                }
                None => {
                    return Err(ParseError::UnexpectedEnd {
                        expected: "an argument identifier",
                    })
                }
            }
            if self.next_is(&Tok::Comma) {
                continue;
            }
            self.expect(Tok::RParen, "`,` or `)`")?;
            break;
        }
        Ok(Formula::Atom(Atom::with_args(pred, args)))
    }
}

pub(crate) fn parse_with_mode(text: &str, mode: Mode) -> Result<Formula, ParseError> {
    let toks = lex(text)?;
    let mut parser = Parser { toks, pos: 0, mode };
    let formula = parser.formula()?;
    if let Some((at, _)) = parser.peek() {
        return Err(ParseError::TrailingInput { pos: *at });
    }
    Ok(formula)
}

/// Parse a ground formula. Uppercase identifiers in argument position are
/// constants; a bare uppercase identifier is an error.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    parse_with_mode(text, Mode::Ground)
}

/// Parse a formula in schema context: uppercase identifiers in argument
/// position become schema variables.
pub fn parse_schema_formula(text: &str) -> Result<Formula, ParseError> {
    parse_with_mode(text, Mode::Schema)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reports_positions() {
        match parse_formula("a & ") {
            Err(ParseError::UnexpectedEnd { .. }) => {}
            other => panic!("expected end-of-input error, got {other:?}"),
        }
        match parse_formula("a @ b") {
            Err(ParseError::UnexpectedChar { pos: 2, ch: '@' }) => {}
            other => panic!("expected char error at 2, got {other:?}"),
        }
        match parse_formula("a b") {
            Err(ParseError::TrailingInput { pos: 2 }) => {}
            other => panic!("expected trailing input at 2, got {other:?}"),
        }
    }

    #[test]
    fn schema_mode_reads_uppercase_args_as_variables() {
        let f = parse_schema_formula("bird(X)").unwrap();
        assert_eq!(
            f,
            Formula::Atom(Atom::with_args("bird", vec![Term::Var("X".into())]))
        );
        let g = parse_formula("bird(X)").unwrap();
        assert_eq!(
            g,
            Formula::Atom(Atom::with_args("bird", vec![Term::Const("X".into())]))
        );
    }

    #[test]
    fn variables_never_valid_as_predicates() {
        assert!(matches!(
            parse_schema_formula("X & a"),
            Err(ParseError::VariablePredicate { .. })
        ));
        assert!(matches!(
            parse_formula("Fly"),
            Err(ParseError::UnboundVariable { .. })
        ));
    }

    #[test]
    fn implication_is_right_associative() {
        let f = parse_formula("a -> b -> c").unwrap();
        assert_eq!(
            f,
            Formula::implies(
                Formula::atom("a"),
                Formula::implies(Formula::atom("b"), Formula::atom("c"))
            )
        );
    }
}
