use std::collections::BTreeMap;

use serde::Serialize;

use super::ast::{Atom, Constant, Statement, Term};
use crate::algebra::{Element, FiniteIrl};
use crate::error::{Error, Result};

/// Default bound on the number of distinct variables accepted by
/// [`satisfies_capped`].
pub const DEFAULT_VARIABLE_LIMIT: usize = 4;

/// Evaluates `t` in `a` under `assignment`.
pub fn evaluate(t: &Term, a: &FiniteIrl, assignment: &BTreeMap<String, Element>) -> Result<Element> {
    Ok(match t {
        Term::Var(v) => match assignment.get(v) {
            Some(&x) if x < a.size() => x,
            Some(&x) => {
                return Err(Error::MalformedTable(format!("{v} = {x} is outside the carrier of size {}", a.size())))
            }
            None => return Err(Error::UnboundVariable(v.clone())),
        },
        Term::Const(Constant::E) => a.e(),
        Term::Const(Constant::F) => a.f(),
        Term::Neg(x) => a.neg(evaluate(x, a, assignment)?),
        Term::Fusion(x, y) => a.fusion(evaluate(x, a, assignment)?, evaluate(y, a, assignment)?),
        Term::Meet(x, y) => a.meet(evaluate(x, a, assignment)?, evaluate(y, a, assignment)?),
        Term::Join(x, y) => a.join(evaluate(x, a, assignment)?, evaluate(y, a, assignment)?),
        Term::Arrow(x, y) => a.residual(evaluate(x, a, assignment)?, evaluate(y, a, assignment)?),
    })
}

/// A term with variables resolved to slots, for the brute-force loop.
enum Compiled {
    Var(usize),
    E,
    F,
    Neg(Box<Compiled>),
    Fusion(Box<Compiled>, Box<Compiled>),
    Meet(Box<Compiled>, Box<Compiled>),
    Join(Box<Compiled>, Box<Compiled>),
    Arrow(Box<Compiled>, Box<Compiled>),
}

impl Compiled {
    fn new(t: &Term, vars: &[String]) -> Compiled {
        let c = |x: &Term| Box::new(Compiled::new(x, vars));
        match t {
            Term::Var(v) => Compiled::Var(vars.iter().position(|w| w == v).expect("collected variable")),
            Term::Const(Constant::E) => Compiled::E,
            Term::Const(Constant::F) => Compiled::F,
            Term::Neg(x) => Compiled::Neg(c(x)),
            Term::Fusion(x, y) => Compiled::Fusion(c(x), c(y)),
            Term::Meet(x, y) => Compiled::Meet(c(x), c(y)),
            Term::Join(x, y) => Compiled::Join(c(x), c(y)),
            Term::Arrow(x, y) => Compiled::Arrow(c(x), c(y)),
        }
    }

    fn eval(&self, a: &FiniteIrl, env: &[Element]) -> Element {
        match self {
            Compiled::Var(i) => env[*i],
            Compiled::E => a.e(),
            Compiled::F => a.f(),
            Compiled::Neg(x) => a.neg(x.eval(a, env)),
            Compiled::Fusion(x, y) => a.fusion(x.eval(a, env), y.eval(a, env)),
            Compiled::Meet(x, y) => a.meet(x.eval(a, env), y.eval(a, env)),
            Compiled::Join(x, y) => a.join(x.eval(a, env), y.eval(a, env)),
            Compiled::Arrow(x, y) => a.residual(x.eval(a, env), y.eval(a, env)),
        }
    }
}

/// An atom as the equation `lhs = rhs` it abbreviates.
struct CompiledAtom {
    lhs: Compiled,
    rhs: Compiled,
}

impl CompiledAtom {
    fn new(atom: &Atom, vars: &[String]) -> Self {
        let (l, r) = atom.as_equation();
        CompiledAtom { lhs: Compiled::new(&l, vars), rhs: Compiled::new(&r, vars) }
    }

    fn holds(&self, a: &FiniteIrl, env: &[Element]) -> bool {
        self.lhs.eval(a, env) == self.rhs.eval(a, env)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Satisfaction {
    pub holds: bool,
    /// First failing assignment in lexicographic order, variables listed in
    /// order of first occurrence.
    pub counterexample: Option<Vec<(String, Element)>>,
    /// Assignments at which the conclusion was evaluated.
    pub conclusion_evaluations: u64,
}

impl Satisfaction {
    pub fn counterexample_map(&self) -> Option<BTreeMap<String, Element>> {
        self.counterexample.as_ref().map(|c| c.iter().cloned().collect())
    }
}

/// Decides `a |= s` by checking every assignment of the variables of `s`.
/// For a quasi-equation the conclusion is evaluated only where all premises hold.
pub fn satisfies(a: &FiniteIrl, s: &Statement) -> Satisfaction {
    let vars = s.variables();
    let premises: Vec<CompiledAtom> = s.premises().iter().map(|p| CompiledAtom::new(p, &vars)).collect();
    let conclusion = CompiledAtom::new(s.conclusion(), &vars);
    let n = a.size();
    let k = vars.len();
    let mut env = vec![0; k];
    let mut evaluations = 0u64;
    loop {
        if premises.iter().all(|p| p.holds(a, &env)) {
            evaluations += 1;
            if !conclusion.holds(a, &env) {
                return Satisfaction {
                    holds: false,
                    counterexample: Some(vars.iter().cloned().zip(env.iter().copied()).collect()),
                    conclusion_evaluations: evaluations,
                };
            }
        }
        // advance the odometer, last variable fastest
        let mut i = k;
        loop {
            if i == 0 {
                return Satisfaction { holds: true, counterexample: None, conclusion_evaluations: evaluations };
            }
            i -= 1;
            env[i] += 1;
            if env[i] < n {
                break;
            }
            env[i] = 0;
        }
    }
}

/// [`satisfies`] with a bound on the number of variables.
pub fn satisfies_capped(a: &FiniteIrl, s: &Statement, limit: usize) -> Result<Satisfaction> {
    let found = s.variables().len();
    if found > limit {
        return Err(Error::TooManyVariables { found, limit });
    }
    Ok(satisfies(a, s))
}

/// Does `a` satisfy every statement in the list?
pub fn satisfies_all<'s>(a: &FiniteIrl, statements: impl IntoIterator<Item = &'s Statement>) -> bool {
    statements.into_iter().all(|s| satisfies(a, s).holds)
}
