//! Minimal-parenthesis rendering. `parse(print(t)) == t` for every term.

use std::fmt;

use super::ast::{Atom, Constant, Relation, Statement, Term};

const ARROW: u8 = 1;
const JOIN: u8 = 2;
const MEET: u8 = 3;
const FUSION: u8 = 4;
const NEG: u8 = 5;
const ATOM: u8 = 6;

fn prec(t: &Term) -> u8 {
    match t {
        Term::Arrow(..) => ARROW,
        Term::Join(..) => JOIN,
        Term::Meet(..) => MEET,
        Term::Fusion(..) => FUSION,
        Term::Neg(_) => NEG,
        Term::Var(_) | Term::Const(_) => ATOM,
    }
}

fn write_child(f: &mut fmt::Formatter<'_>, t: &Term, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({t})")
    } else {
        write!(f, "{t}")
    }
}

fn write_binary(f: &mut fmt::Formatter<'_>, op: &str, p: u8, a: &Term, b: &Term) -> fmt::Result {
    // -> is right-associative, the others left-associative
    let (left_parens, right_parens) =
        if p == ARROW { (prec(a) <= p, prec(b) < p) } else { (prec(a) < p, prec(b) <= p) };
    write_child(f, a, left_parens)?;
    write!(f, " {op} ")?;
    write_child(f, b, right_parens)
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => f.write_str(v),
            Term::Const(Constant::E) => f.write_str("e"),
            Term::Const(Constant::F) => f.write_str("f"),
            Term::Neg(a) => {
                f.write_str("~")?;
                write_child(f, a, prec(a) < NEG)
            }
            Term::Fusion(a, b) => write_binary(f, "*", FUSION, a, b),
            Term::Meet(a, b) => write_binary(f, "/\\", MEET, a, b),
            Term::Join(a, b) => write_binary(f, "\\/", JOIN, a, b),
            Term::Arrow(a, b) => write_binary(f, "->", ARROW, a, b),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = match self.relation {
            Relation::Eq => "=",
            Relation::Leq => "<=",
        };
        write!(f, "{} {rel} {}", self.lhs, self.rhs)
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statement::Atom(a) => a.fmt(f),
            Statement::QuasiEquation { premises, conclusion } => {
                for (i, p) in premises.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" & ")?;
                    }
                    p.fmt(f)?;
                }
                if !premises.is_empty() {
                    f.write_str(" ")?;
                }
                write!(f, "=> {conclusion}")
            }
        }
    }
}
