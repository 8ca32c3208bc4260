use std::fmt::Write;
use std::path::PathBuf;

use dmm_core::algebra::{predicates, validate_dmm, validate_irl, ValidationReport};
use dmm_core::constructions::{canonicalize, direct_product, find_isomorphism, homs, rigorous_extensions, sg};
use dmm_core::enumeration::{
    axiomatization_check, enumerate_with, theorem_harness, Catalog, ClassFlags, EnumerateOptions, SearchSpec,
};
use dmm_core::filters::{classify, dfg, quotient};
use dmm_core::relevant::{dfg_ra_set, ra_classify, validate_ra};
use dmm_core::structure::{
    bounds_of_generated, embed_c4_if_e_below_f, fusion_pattern_check, idempotent_order_facts, lollipop,
    odd_sugihara_quotient, onto_zero_generated_check, render_lollipop, splitting_check, Check,
};
use dmm_core::term::{library, parse_statement_lines, parse_term, random_term, satisfies_capped};
use dmm_core::{ElementSet, Error, FiniteIrl, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::load;
use crate::output::Report;
use crate::Class;

fn to_value(v: &impl serde::Serialize) -> Result<Value> {
    Ok(serde_json::to_value(v)?)
}

fn set_labels(labels: impl Fn(usize) -> String, s: ElementSet) -> String {
    let names: Vec<String> = s.iter().map(labels).collect();
    format!("{{{}}}", names.join(", "))
}

fn validation_text(what: &str, name: &str, r: &ValidationReport) -> String {
    if r.passed() {
        format!("{name}: valid {what}\n")
    } else {
        format!("{name}: not a valid {what}\n{}\n", r.summary())
    }
}

pub fn validate(spec: &str, class: Class) -> Result<Report> {
    if class == Class::Ra {
        let a = load::relevant(spec)?;
        let r = validate_ra(&a);
        return Ok(Report::new(validation_text("relevant algebra", a.name(), &r), to_value(&r)?).passed(r.passed()));
    }
    let a = load::algebra(spec)?;
    let irl = validate_irl(&a);
    let (what, r) = match class {
        Class::Dmm if irl.passed() => ("De Morgan monoid", validate_dmm(&a)?),
        Class::Dmm => ("De Morgan monoid", irl),
        _ => ("involutive residuated lattice", irl),
    };
    Ok(Report::new(validation_text(what, a.name(), &r), to_value(&r)?).passed(r.passed()).draw(&a))
}

fn flags(trivial: bool, fsi: bool, si: bool, simple: bool) -> String {
    let mut s: Vec<&str> = Vec::new();
    for (on, name) in [(trivial, "trivial"), (fsi, "FSI"), (si, "SI"), (simple, "simple")] {
        if on {
            s.push(name);
        }
    }
    if s.is_empty() {
        "not FSI".into()
    } else {
        s.join(", ")
    }
}

pub fn classify_cmd(spec: &str, class: Class) -> Result<Report> {
    if class == Class::Ra {
        let a = load::relevant(spec)?;
        let c = ra_classify(&a)?;
        let agree = c.agrees_with_dmm != Some(false);
        let mut text = format!("{}: {}\n", a.name(), flags(c.trivial, c.fsi, c.si, c.simple));
        match c.neutral {
            Some(m) => writeln!(text, "neutral element: {}", a.label(m)),
            None => writeln!(text, "no neutral element"),
        }
        .expect("write to string");
        writeln!(text, "congruences: {}", c.congruences).expect("write to string");
        if !agree {
            text.push_str("disagrees with the classification of the monoid expansion\n");
        }
        return Ok(Report::new(text, to_value(&c)?).passed(agree));
    }
    let a = load::algebra(spec)?;
    let c = classify(&a);
    let mut text = format!("{}: {}\n", a.name(), flags(c.trivial, c.fsi, c.si, c.simple));
    if let Some(s) = c.subcover {
        writeln!(text, "subcover of e: {}", a.label(s)).expect("write to string");
    }
    let ok = c.criteria_agree && c.cross_check_ok;
    if !ok {
        text.push_str("internal cross-checks disagree\n");
    }
    Ok(Report::new(text, to_value(&c)?).passed(ok).draw(&a))
}

fn check_line(text: &mut String, name: &str, r: &Result<Check>, a: &FiniteIrl) -> (Value, bool) {
    match r {
        Ok(c) if c.passed => {
            writeln!(text, "  {name}: holds ({} cases)", c.checked).expect("write to string");
            (json!({"status": "pass", "checked": c.checked}), true)
        }
        Ok(c) => {
            let w: Vec<String> = c.witness.iter().flatten().map(|&x| a.label(x)).collect();
            writeln!(text, "  {name}: FAILS at [{}] {}", w.join(", "), c.detail.clone().unwrap_or_default())
                .expect("write to string");
            (json!({"status": "fail", "witness": c.witness, "detail": c.detail}), false)
        }
        Err(e) => {
            writeln!(text, "  {name}: n/a ({e})").expect("write to string");
            (json!({"status": "n/a", "reason": e.to_string()}), true)
        }
    }
}

pub fn analyze(spec: &str) -> Result<Report> {
    let a = load::algebra(spec)?;
    let p = predicates(&a);
    let c = classify(&a);
    let dmm_ok = validate_dmm(&a).map(|r| r.passed()).unwrap_or(false);
    let mut text = format!("{} ({} elements)\n", a.name(), a.size());
    writeln!(text, "De Morgan monoid: {}", if dmm_ok { "yes" } else { "no" }).expect("write to string");
    writeln!(text, "classification: {}", flags(c.trivial, c.fsi, c.si, c.simple)).expect("write to string");
    let props: Vec<&str> = [
        (p.idempotent, "idempotent"),
        (p.odd, "odd"),
        (p.anti_idempotent, "anti-idempotent"),
        (p.integral, "integral"),
        (p.bounded, "bounded"),
        (p.rigorously_compact, "rigorously compact"),
        (p.distributive, "distributive"),
        (p.square_increasing, "square-increasing"),
        (p.semilinear, "semilinear"),
        (a.is_chain(), "chain"),
    ]
    .into_iter()
    .filter_map(|(on, n)| on.then_some(n))
    .collect();
    writeln!(text, "properties: {}", if props.is_empty() { "-".into() } else { props.join(", ") })
        .expect("write to string");

    let mut checks = serde_json::Map::new();
    let mut passed = true;
    if !(dmm_ok && c.fsi) {
        text.push_str("structure checks: skipped (needs an FSI De Morgan monoid)\n");
    } else {
        text.push_str("structure checks:\n");
        for (name, r) in [
            ("splitting", splitting_check(&a)),
            ("fusion pattern", fusion_pattern_check(&a)),
            ("idempotent order", idempotent_order_facts(&a)),
            ("0-generated images", onto_zero_generated_check(&a)),
        ] {
            let (v, ok) = check_line(&mut text, name, &r, &a);
            passed &= ok;
            checks.insert(name.replace(' ', "-"), v);
        }
        let b = bounds_of_generated(&a, ElementSet::empty())?;
        writeln!(
            text,
            "  0-generated bounds: c = {}, b = {}, subalgebra inside [{}, {}]: {}",
            a.label(b.c),
            a.label(b.b),
            a.label(b.lower),
            a.label(b.upper),
            if b.holds { "yes" } else { "NO" }
        )
        .expect("write to string");
        passed &= b.holds;
        checks.insert("generated-bounds".into(), to_value(&b)?);
        match embed_c4_if_e_below_f(&a)? {
            Some(h) => {
                let img: Vec<String> = h.map.iter().map(|&x| a.label(x)).collect();
                writeln!(text, "  C4 embedding: onto {{{}}}", img.join(", ")).expect("write to string");
                checks.insert("c4-embedding".into(), to_value(&h)?);
            }
            None => {
                text.push_str("  C4 embedding: n/a (e is not below f)\n");
                checks.insert("c4-embedding".into(), Value::Null);
            }
        }
        match odd_sugihara_quotient(&a) {
            Ok(r) => {
                writeln!(
                    text,
                    "  odd Sugihara quotient by {}: {} element(s), {}",
                    set_labels(|x| a.label(x), r.filter.members),
                    r.quotient.algebra.size(),
                    if r.passed() { "holds" } else { "FAILS" }
                )
                .expect("write to string");
                passed &= r.passed();
                checks.insert(
                    "odd-sugihara-quotient".into(),
                    json!({
                        "filter": r.filter,
                        "size": r.quotient.algebra.size(),
                        "odd_sugihara": r.odd_sugihara,
                        "e_class_is_interval": r.e_class_is_interval,
                        "other_classes_singletons": r.other_classes_singletons,
                    }),
                );
            }
            Err(e) => {
                writeln!(text, "  odd Sugihara quotient: n/a ({e})").expect("write to string");
            }
        }
        let l = lollipop(&a)?;
        text.push_str("lollipop:\n");
        if l.idempotent_case {
            writeln!(text, "  idempotent: totally ordered {}", l.totally_ordered).expect("write to string");
        } else {
            let lab = |x| a.label(x);
            writeln!(text, "  interval {}", set_labels(lab, l.interval)).expect("write to string");
            writeln!(text, "  lower chain {}", set_labels(lab, l.lower_chain)).expect("write to string");
            writeln!(text, "  upper chain {}", set_labels(lab, l.upper_chain)).expect("write to string");
        }
        for v in &l.violations {
            writeln!(text, "  violation: {v}").expect("write to string");
        }
        writeln!(text, "  {}", if l.passed() { "holds" } else { "FAILS" }).expect("write to string");
        text.push_str(&render_lollipop(&a, &l));
        passed &= l.passed();
        checks.insert("lollipop".into(), to_value(&l)?);
    }
    let json = json!({
        "algebra": a.name(),
        "size": a.size(),
        "dmm": dmm_ok,
        "classification": c,
        "predicates": p,
        "checks": checks,
    });
    Ok(Report::new(text, json).passed(passed))
}

pub fn satisfies(spec: &str, statement: &str, max_vars: usize) -> Result<Report> {
    let a = load::algebra(spec)?;
    let source = match statement.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)?,
        None => statement.to_string(),
    };
    let statements = parse_statement_lines(&source)?;
    if statements.is_empty() {
        return Err(Error::MalformedTable("no statement given".into()));
    }
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut all = true;
    for s in &statements {
        let r = satisfies_capped(&a, s, max_vars)?;
        all &= r.holds;
        if r.holds {
            writeln!(text, "holds: {s}").expect("write to string");
        } else {
            let cx: Vec<String> =
                r.counterexample.iter().flatten().map(|(v, x)| format!("{v} = {}", a.label(*x))).collect();
            writeln!(text, "FAILS: {s}\n  counterexample: {}", cx.join(", ")).expect("write to string");
        }
        rows.push(json!({
            "statement": s.to_string(),
            "holds": r.holds,
            "counterexample": r.counterexample_map(),
        }));
    }
    Ok(Report::new(text, json!({"algebra": a.name(), "results": rows})).passed(all))
}

pub fn construct(
    spec: &str,
    products: &[String],
    extend: usize,
    generate: Option<&str>,
    canonical: bool,
) -> Result<Report> {
    let mut a = load::algebra(spec)?;
    for p in products {
        a = direct_product(&a, &load::algebra(p)?)?;
    }
    if extend > 0 {
        a = rigorous_extensions(&a, extend)?;
    }
    if let Some(list) = generate {
        let gens = load::elements(|l| a.element_by_label(l), a.size(), list)?;
        a = sg(&a, gens).algebra;
    }
    if canonical {
        a = canonicalize(&a);
    }
    let body = serde_json::to_string_pretty(&a)?;
    let labels: Vec<String> = a.elements().map(|x| a.label(x)).collect();
    let text = format!("{} ({} elements): {}\n", a.name(), a.size(), labels.join(", "));
    Ok(Report::new(text, to_value(&a)?).draw(&a).with_artifact(body))
}

pub struct EnumerateArgs {
    pub class: Class,
    pub size: usize,
    pub predicate: Vec<String>,
    pub limit: Option<usize>,
    pub jobs: Option<usize>,
    pub unsafe_size: bool,
    pub checkpoint: Option<PathBuf>,
}

fn class_flags(class: Class) -> Result<ClassFlags> {
    match class {
        Class::Dmm => Ok(ClassFlags::DMM),
        Class::Irl => Ok(ClassFlags::IRL),
        Class::Ra => Err(Error::NotApplicable("enumeration covers the irl and dmm classes".into())),
    }
}

fn run_enumeration(
    class: Class,
    size: usize,
    jobs: Option<usize>,
    unsafe_size: bool,
    preds: &[&str],
    limit: Option<usize>,
    checkpoint: Option<PathBuf>,
) -> Result<Catalog> {
    let mut spec = SearchSpec::new(size, class_flags(class)?).with_predicates(preds);
    if let Some(k) = limit {
        spec = spec.with_limit(k);
    }
    let opts = EnumerateOptions { jobs, unsafe_size, checkpoint, ..EnumerateOptions::default() };
    Ok(enumerate_with(&spec, &opts)?.0)
}

pub fn enumerate(args: &EnumerateArgs) -> Result<Report> {
    let preds: Vec<&str> = args.predicate.iter().map(String::as_str).collect();
    let cat = run_enumeration(
        args.class,
        args.size,
        args.jobs,
        args.unsafe_size,
        &preds,
        args.limit,
        args.checkpoint.clone(),
    )?;
    let json: Value = serde_json::from_str(&cat.to_json()?)?;
    let mut text = format!(
        "{} algebra(s) of class {} and size {}{}\n",
        cat.algebras.len(),
        cat.spec.class.name(),
        args.size,
        if cat.complete { "" } else { " (incomplete)" }
    );
    for a in &cat.algebras {
        writeln!(text, "  {}", a.name()).expect("write to string");
    }
    let mut r = Report::new(text, json).with_artifact(cat.to_json()?);
    for a in &cat.algebras {
        r = r.draw(a);
    }
    Ok(r)
}

fn map_text(a: &FiniteIrl, b: &FiniteIrl, map: &[usize]) -> String {
    let pairs: Vec<String> =
        map.iter().enumerate().map(|(x, &y)| format!("{} -> {}", a.label(x), b.label(y))).collect();
    pairs.join(", ")
}

pub fn homs_cmd(spec: &str, target: &str) -> Result<Report> {
    let (a, b) = (load::algebra(spec)?, load::algebra(target)?);
    let hs = homs(&a, &b);
    let mut text = format!("{} homomorphisms {} -> {}\n", hs.len(), a.name(), b.name());
    for h in &hs {
        let kind = match (h.injective, h.surjective) {
            (true, true) => "iso",
            (true, false) => "embedding",
            (false, true) => "onto",
            _ => "",
        };
        writeln!(text, "  {} {kind}", map_text(&a, &b, &h.map)).expect("write to string");
    }
    Ok(Report::new(text, to_value(&hs)?))
}

pub fn iso(spec: &str, target: &str) -> Result<Report> {
    let (a, b) = (load::algebra(spec)?, load::algebra(target)?);
    let h = find_isomorphism(&a, &b);
    let text = match &h {
        Some(h) => format!("{} is isomorphic to {}\n  {}\n", a.name(), b.name(), map_text(&a, &b, &h.map)),
        None => format!("{} is not isomorphic to {}\n", a.name(), b.name()),
    };
    let json = json!({"isomorphic": h.is_some(), "map": h.as_ref().map(|h| &h.map)});
    Ok(Report::new(text, json).passed(h.is_some()))
}

pub fn quotient_cmd(spec: &str, filter: &str) -> Result<Report> {
    let a = load::algebra(spec)?;
    let gens = load::elements(|l| a.element_by_label(l), a.size(), filter)?;
    let g = dfg(&a, gens);
    let q = quotient(&a, &g)?;
    let text = format!(
        "filter {}\nquotient {} ({} elements)\nprojection: {}\n",
        set_labels(|x| a.label(x), g.members),
        q.algebra.name(),
        q.algebra.size(),
        map_text(&a, &q.algebra, &q.projection)
    );
    let json = json!({"filter": g, "projection": q.projection, "algebra": q.algebra});
    let artifact = serde_json::to_string_pretty(&q.algebra)?;
    Ok(Report::new(text, json).draw(&q.algebra).with_artifact(artifact))
}

pub fn reduct(spec: &str) -> Result<Report> {
    let r = load::relevant(spec)?;
    let body = serde_json::to_string_pretty(&r)?;
    let text = format!("{} ({} elements)\n{body}\n", r.name(), r.size());
    Ok(Report::new(text, to_value(&r)?).with_artifact(body))
}

pub fn dfg_cmd(spec: &str, elements: &str, class: Class) -> Result<Report> {
    if class == Class::Ra {
        let a = load::relevant(spec)?;
        let x = load::elements(|l| a.element_by_label(l), a.size(), elements)?;
        let g = dfg_ra_set(&a, x);
        let text = format!("{}\n", set_labels(|y| a.label(y), g.members));
        return Ok(Report::new(text, to_value(&g)?));
    }
    let a = load::algebra(spec)?;
    let x = load::elements(|l| a.element_by_label(l), a.size(), elements)?;
    let g = dfg(&a, x);
    let text = format!("{}\n", set_labels(|y| a.label(y), g.members));
    Ok(Report::new(text, to_value(&g)?))
}

/// Random terms printed and parsed back; returns (checked, failures).
fn round_trip(seed: u64, count: usize) -> (usize, Vec<String>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for entry in library().entries() {
        for s in &entry.statements {
            let printed = s.to_string();
            if parse_statement_lines(&printed).ok().as_deref() != Some(std::slice::from_ref(s)) {
                failures.push(printed);
            }
        }
    }
    for _ in 0..count {
        let t = random_term(&mut rng, 5, &["x", "y", "z"]);
        let printed = t.to_string();
        if parse_term(&printed).ok().as_ref() != Some(&t) {
            failures.push(printed);
        }
    }
    (count + library().entries().iter().map(|e| e.statements.len()).sum::<usize>(), failures)
}

pub fn suite(size: usize, jobs: Option<usize>, seed: u64, unsafe_size: bool) -> Result<Report> {
    let mut parts = Vec::new();
    let mut text = String::from("catalog\n");
    for n in 1..=size {
        let c = run_enumeration(Class::Dmm, n, jobs, unsafe_size, &[], None, None)?;
        writeln!(text, "  size {n:>2}: {:>5} De Morgan monoids", c.algebras.len()).expect("write to string");
        parts.push(c);
    }
    let catalog = Catalog::merge(parts)?;
    let harness = theorem_harness(&catalog)?;
    let axioms = axiomatization_check(&catalog);
    let (terms, failures) = round_trip(seed, 1000);

    text.push_str("\ncheck                        applies  result\n");
    for r in &harness.results {
        let status = if r.passed() {
            "pass".to_string()
        } else {
            format!("FAIL at {}", r.counterexample.as_ref().map_or("?", |a| a.name()))
        };
        writeln!(text, "{:<28} {:>7}  {status}", r.theorem, r.checked).expect("write to string");
    }
    for row in &axioms.rows {
        let status = if row.satisfies_own && row.only_itself {
            "pass".to_string()
        } else {
            format!("FAIL (matches {})", row.matches.join(", "))
        };
        writeln!(text, "{:<28} {:>7}  {status}", format!("axioms of {}", row.algebra), axioms.si_entries)
            .expect("write to string");
    }
    let rt = if failures.is_empty() { "pass".to_string() } else { format!("FAIL on {}", failures[0]) };
    writeln!(text, "{:<28} {:>7}  {rt}", "term round-trip", terms).expect("write to string");
    let passed = harness.passed() && axioms.passed() && failures.is_empty();
    writeln!(text, "\n{}", if passed { "all checks passed" } else { "some checks FAILED" }).expect("write to string");
    let json = json!({
        "size": size,
        "seed": seed,
        "entries": catalog.algebras.len(),
        "harness": harness,
        "axiomatization": axioms,
        "round_trip": {"checked": terms, "failures": failures},
        "passed": passed,
    });
    Ok(Report::new(text, json).passed(passed))
}
