use rand::Rng;

use super::ast::Term;

/// A random term of depth at most `max_depth` over the given variable names.
pub fn random_term<R: Rng + ?Sized>(rng: &mut R, max_depth: usize, vars: &[&str]) -> Term {
    let leaf = max_depth == 0 || rng.gen_ratio(1, 4);
    if leaf {
        return match rng.gen_range(0..vars.len() + 2) {
            0 => Term::e(),
            1 => Term::f(),
            i => Term::var(vars[i - 2]),
        };
    }
    let d = max_depth - 1;
    match rng.gen_range(0..5) {
        0 => Term::neg(random_term(rng, d, vars)),
        1 => Term::fusion(random_term(rng, d, vars), random_term(rng, d, vars)),
        2 => Term::meet(random_term(rng, d, vars), random_term(rng, d, vars)),
        3 => Term::join(random_term(rng, d, vars), random_term(rng, d, vars)),
        _ => Term::arrow(random_term(rng, d, vars), random_term(rng, d, vars)),
    }
}
