use std::fmt;

/// A nullary symbol of the signature. `f` is derived as `~e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Constant {
    E,
    F,
}

/// Terms over `*, /\, \/, ~, ->, e, f`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Const(Constant),
    Neg(Box<Term>),
    Fusion(Box<Term>, Box<Term>),
    Meet(Box<Term>, Box<Term>),
    Join(Box<Term>, Box<Term>),
    Arrow(Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn e() -> Term {
        Term::Const(Constant::E)
    }

    pub fn f() -> Term {
        Term::Const(Constant::F)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(t: Term) -> Term {
        Term::Neg(Box::new(t))
    }

    pub fn fusion(a: Term, b: Term) -> Term {
        Term::Fusion(Box::new(a), Box::new(b))
    }

    pub fn meet(a: Term, b: Term) -> Term {
        Term::Meet(Box::new(a), Box::new(b))
    }

    pub fn join(a: Term, b: Term) -> Term {
        Term::Join(Box::new(a), Box::new(b))
    }

    pub fn arrow(a: Term, b: Term) -> Term {
        Term::Arrow(Box::new(a), Box::new(b))
    }

    /// `(a -> b) /\ (b -> a)`.
    pub fn biarrow(a: Term, b: Term) -> Term {
        Term::meet(Term::arrow(a.clone(), b.clone()), Term::arrow(b, a))
    }

    /// `t^n` as left-nested fusion; `t^0 = e`.
    pub fn power(t: Term, n: u32) -> Term {
        if n == 0 {
            return Term::e();
        }
        let mut out = t.clone();
        for _ in 1..n {
            out = Term::fusion(out, t.clone());
        }
        out
    }

    pub fn depth(&self) -> usize {
        match self {
            Term::Var(_) | Term::Const(_) => 0,
            Term::Neg(a) => 1 + a.depth(),
            Term::Fusion(a, b) | Term::Meet(a, b) | Term::Join(a, b) | Term::Arrow(a, b) => {
                1 + a.depth().max(b.depth())
            }
        }
    }

    /// Variable names in order of first occurrence (left to right).
    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Term::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            Term::Const(_) => {}
            Term::Neg(a) => a.collect_vars(out),
            Term::Fusion(a, b) | Term::Meet(a, b) | Term::Join(a, b) | Term::Arrow(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Eq,
    Leq,
}

/// `lhs = rhs` or `lhs <= rhs`. An inequation `s <= t` means `s /\ t = s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Atom {
    pub lhs: Term,
    pub relation: Relation,
    pub rhs: Term,
}

impl Atom {
    pub fn eq(lhs: Term, rhs: Term) -> Atom {
        Atom { lhs, relation: Relation::Eq, rhs }
    }

    pub fn leq(lhs: Term, rhs: Term) -> Atom {
        Atom { lhs, relation: Relation::Leq, rhs }
    }

    /// The equation this atom stands for.
    pub fn as_equation(&self) -> (Term, Term) {
        match self.relation {
            Relation::Eq => (self.lhs.clone(), self.rhs.clone()),
            Relation::Leq => (Term::meet(self.lhs.clone(), self.rhs.clone()), self.lhs.clone()),
        }
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        self.lhs.collect_vars(out);
        self.rhs.collect_vars(out);
    }
}

/// An equation, inequation or quasi-equation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Statement {
    Atom(Atom),
    QuasiEquation { premises: Vec<Atom>, conclusion: Atom },
}

impl Statement {
    pub fn premises(&self) -> &[Atom] {
        match self {
            Statement::Atom(_) => &[],
            Statement::QuasiEquation { premises, .. } => premises,
        }
    }

    pub fn conclusion(&self) -> &Atom {
        match self {
            Statement::Atom(a) => a,
            Statement::QuasiEquation { conclusion, .. } => conclusion,
        }
    }

    /// Variables in order of first occurrence, premises first.
    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        for p in self.premises() {
            p.collect_vars(&mut out);
        }
        self.conclusion().collect_vars(&mut out);
        out
    }
}

/// Result of parsing input that may be either a bare term or a statement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parsed {
    Term(Term),
    Statement(Statement),
}

impl fmt::Display for Parsed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parsed::Term(t) => t.fmt(f),
            Parsed::Statement(s) => s.fmt(f),
        }
    }
}
