//! Recursive-descent parser for terms and statements.
//!
//! Binding strength, tightest first: `^n` (postfix power), `~`, `*`, `/\`,
//! `\/`, then `->` / `<->` (right-associative). Statements are
//! `s = t`, `s <= t`, and `a1 & ... & ak => a`.
//! Unicode forms `· ∧ ∨ ¬ → ↔ ≤ ⇒` are accepted alongside the ASCII ones.

use super::ast::{Atom, Parsed, Relation, Statement, Term};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(u32),
    Star,
    Meet,
    Join,
    Tilde,
    Arrow,
    BiArrow,
    Caret,
    Eq,
    Leq,
    Amp,
    Implies,
    LParen,
    RParen,
    End,
}

fn syntax(position: usize, expected: &[&str]) -> Error {
    let mut expected: Vec<String> = expected.iter().map(|s| s.to_string()).collect();
    expected.sort();
    expected.dedup();
    Error::Syntax { position, expected }
}

/// Splits input into tokens tagged with their character offset.
fn lex(input: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let at = |k: usize| chars.get(k).copied();
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let (tok, len) = match c {
            '*' | '·' | '⋅' => (Tok::Star, 1),
            '∧' => (Tok::Meet, 1),
            '∨' => (Tok::Join, 1),
            '~' | '¬' => (Tok::Tilde, 1),
            '→' => (Tok::Arrow, 1),
            '↔' => (Tok::BiArrow, 1),
            '≤' | '⩽' => (Tok::Leq, 1),
            '⇒' => (Tok::Implies, 1),
            '^' => (Tok::Caret, 1),
            '&' => (Tok::Amp, 1),
            '(' => (Tok::LParen, 1),
            ')' => (Tok::RParen, 1),
            '/' if at(i + 1) == Some('\\') => (Tok::Meet, 2),
            '\\' if at(i + 1) == Some('/') => (Tok::Join, 2),
            '-' if at(i + 1) == Some('>') => (Tok::Arrow, 2),
            '<' if at(i + 1) == Some('-') && at(i + 2) == Some('>') => (Tok::BiArrow, 3),
            '<' if at(i + 1) == Some('=') => (Tok::Leq, 2),
            '=' if at(i + 1) == Some('>') => (Tok::Implies, 2),
            '=' => (Tok::Eq, 1),
            c if c.is_ascii_digit() => {
                let mut j = i;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                let text: String = chars[i..j].iter().collect();
                let n = text.parse::<u32>().map_err(|_| syntax(start, &["number"]))?;
                (Tok::Num(n), j - i)
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut j = i;
                while j < chars.len() && (chars[j].is_alphanumeric() || chars[j] == '_') {
                    j += 1;
                }
                (Tok::Ident(chars[i..j].iter().collect()), j - i)
            }
            _ => {
                return Err(syntax(
                    start,
                    &["identifier", "`(`", "`~`", "`*`", "`/\\`", "`\\/`", "`->`", "`=`", "`<=`"],
                ))
            }
        };
        out.push((start, tok));
        i += len;
    }
    out.push((chars.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

const TERM_START: &[&str] = &["identifier", "`e`", "`f`", "`(`", "`~`"];

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == t {
            self.bump();
            true
        } else {
            false
        }
    }

    fn term(&mut self) -> Result<Term> {
        let lhs = self.join()?;
        if self.eat(&Tok::Arrow) {
            Ok(Term::arrow(lhs, self.term()?))
        } else if self.eat(&Tok::BiArrow) {
            Ok(Term::biarrow(lhs, self.term()?))
        } else {
            Ok(lhs)
        }
    }

    fn join(&mut self) -> Result<Term> {
        let mut t = self.meet()?;
        while self.eat(&Tok::Join) {
            t = Term::join(t, self.meet()?);
        }
        Ok(t)
    }

    fn meet(&mut self) -> Result<Term> {
        let mut t = self.fusion()?;
        while self.eat(&Tok::Meet) {
            t = Term::meet(t, self.fusion()?);
        }
        Ok(t)
    }

    fn fusion(&mut self) -> Result<Term> {
        let mut t = self.unary()?;
        while self.eat(&Tok::Star) {
            t = Term::fusion(t, self.unary()?);
        }
        Ok(t)
    }

    fn unary(&mut self) -> Result<Term> {
        if self.eat(&Tok::Tilde) {
            return Ok(Term::neg(self.unary()?));
        }
        self.postfix()
    }

    fn postfix(&mut self) -> Result<Term> {
        let mut t = self.primary()?;
        while self.eat(&Tok::Caret) {
            let at = self.offset();
            match self.bump() {
                Tok::Num(n) => t = Term::power(t, n),
                _ => return Err(syntax(at, &["number"])),
            }
        }
        Ok(t)
    }

    fn primary(&mut self) -> Result<Term> {
        let at = self.offset();
        match self.bump() {
            Tok::Ident(name) => Ok(match name.as_str() {
                "e" => Term::e(),
                "f" => Term::f(),
                _ => Term::Var(name),
            }),
            Tok::LParen => {
                let t = self.term()?;
                let close = self.offset();
                if !self.eat(&Tok::RParen) {
                    return Err(syntax(close, &["`)`", "`*`", "`/\\`", "`\\/`", "`->`", "`<->`", "`^`"]));
                }
                Ok(t)
            }
            _ => Err(syntax(at, TERM_START)),
        }
    }

    fn atom(&mut self) -> Result<Atom> {
        let lhs = self.term()?;
        let at = self.offset();
        let relation = match self.bump() {
            Tok::Eq => Relation::Eq,
            Tok::Leq => Relation::Leq,
            _ => return Err(self.after_term(at, &["`=`", "`<=`"])),
        };
        let rhs = self.term()?;
        Ok(Atom { lhs, relation, rhs })
    }

    /// Error at a token that cannot continue a complete term.
    fn after_term(&self, at: usize, extra: &[&str]) -> Error {
        let mut exp = vec!["`*`", "`/\\`", "`\\/`", "`->`", "`<->`", "`^`"];
        exp.extend_from_slice(extra);
        syntax(at, &exp)
    }

    fn statement(&mut self) -> Result<Statement> {
        if self.eat(&Tok::Implies) {
            let conclusion = self.atom()?;
            self.end(&[])?;
            return Ok(Statement::QuasiEquation { premises: Vec::new(), conclusion });
        }
        let first = self.atom()?;
        let mut premises = vec![first];
        while self.eat(&Tok::Amp) {
            premises.push(self.atom()?);
        }
        if self.eat(&Tok::Implies) {
            let conclusion = self.atom()?;
            self.end(&[])?;
            Ok(Statement::QuasiEquation { premises, conclusion })
        } else if premises.len() == 1 {
            self.end(&["`&`", "`=>`"])?;
            Ok(Statement::Atom(premises.pop().expect("one atom")))
        } else {
            Err(syntax(self.offset(), &["`&`", "`=>`"]))
        }
    }

    fn end(&self, extra: &[&str]) -> Result<()> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            let mut exp = vec!["end of input"];
            exp.extend_from_slice(extra);
            Err(self.after_term(self.offset(), &exp))
        }
    }
}

pub fn parse_term(input: &str) -> Result<Term> {
    let mut p = Parser { toks: lex(input)?, pos: 0 };
    let t = p.term()?;
    if *p.peek() != Tok::End {
        return Err(p.after_term(p.offset(), &["end of input"]));
    }
    Ok(t)
}

pub fn parse_statement(input: &str) -> Result<Statement> {
    let mut p = Parser { toks: lex(input)?, pos: 0 };
    p.statement()
}

/// Parses a statement if the input contains a relation symbol, a term otherwise.
pub fn parse(input: &str) -> Result<Parsed> {
    let toks = lex(input)?;
    let is_statement = toks.iter().any(|(_, t)| matches!(t, Tok::Eq | Tok::Leq | Tok::Implies | Tok::Amp));
    let mut p = Parser { toks, pos: 0 };
    if is_statement {
        Ok(Parsed::Statement(p.statement()?))
    } else {
        let t = p.term()?;
        p.end(&["`=`", "`<=`"])?;
        Ok(Parsed::Term(t))
    }
}

/// Parses a statement file: one statement per line, `#` starts a comment.
/// Error positions are relative to the offending line.
pub fn parse_statement_lines(text: &str) -> Result<Vec<Statement>> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = match line.find('#') {
            Some(i) => &line[..i],
            None => line,
        };
        if line.trim().is_empty() {
            continue;
        }
        out.push(parse_statement(line)?);
    }
    Ok(out)
}
