//! Shared helpers for the integration suites: parsing shorthands,
//! seeded random generators, and the independent oracles the
//! implementation is checked against.

#![allow(dead_code)]

use defarg_core::argument::DefaultArgument;
use defarg_core::defaults::{all_extensions, DefaultRule, DefaultTheory};
use defarg_core::formula::{is_consistent, is_tautology, Atom, Formula, TheoryBase};
use rand::rngs::StdRng;
use rand::Rng;
use std::path::PathBuf;

pub fn f(s: &str) -> Formula {
    s.parse().unwrap()
}

pub fn base(parts: &[&str]) -> TheoryBase {
    parts.iter().map(|s| f(s)).collect()
}

pub fn rule(s: &str) -> DefaultRule {
    s.parse().unwrap()
}

pub fn theory(rules: &[&str], facts: &[&str]) -> DefaultTheory {
    DefaultTheory::new(rules.iter().map(|s| rule(s)).collect(), base(facts))
}

pub fn arg(wp: &[&str], dp: &[&str], wc: &[&str], dc: &[&str]) -> DefaultArgument {
    DefaultArgument::new(
        base(wp),
        dp.iter().map(|s| rule(s)).collect(),
        base(wc),
        dc.iter().map(|s| rule(s)).collect(),
    )
    .unwrap()
}

pub fn fixture(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(rel)
}

pub fn load_fixture<T: serde::de::DeserializeOwned>(rel: &str) -> T {
    let path = fixture(rel);
    let text = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("reading {}: {e}", path.display()));
    serde_json::from_str(&text).unwrap_or_else(|e| panic!("parsing {}: {e}", path.display()))
}

pub const ATOM_POOL: [&str; 4] = ["a", "b", "c", "d"];

pub fn pool_atom(i: usize) -> Atom {
    Atom::new(ATOM_POOL[i])
}

/// Random formula over the first `atoms` pool entries, with the given
/// connective depth budget.
pub fn random_formula(rng: &mut StdRng, atoms: usize, depth: u32) -> Formula {
    if depth == 0 || rng.gen_bool(0.4) {
        let atom = Formula::Atom(pool_atom(rng.gen_range(0..atoms)));
        return if rng.gen_bool(0.3) {
            atom.negated()
        } else {
            atom
        };
    }
    let a = random_formula(rng, atoms, depth - 1);
    let b = random_formula(rng, atoms, depth - 1);
    match rng.gen_range(0..4) {
        0 => Formula::not(a),
        1 => Formula::and(a, b),
        2 => Formula::or(a, b),
        _ => Formula::implies(a, b),
    }
}

pub fn random_nontaut_formula(rng: &mut StdRng, atoms: usize, depth: u32) -> Formula {
    loop {
        let candidate = random_formula(rng, atoms, depth);
        if !is_tautology(&candidate) {
            return candidate;
        }
    }
}

/// Arbitrary small default theory; rules need not fire and facts may
/// be inconsistent.
pub fn random_theory(rng: &mut StdRng, max_rules: usize, atoms: usize) -> DefaultTheory {
    let rules = (0..rng.gen_range(0..=max_rules))
        .map(|_| {
            DefaultRule::new(
                random_formula(rng, atoms, 1),
                random_formula(rng, atoms, 1),
                random_formula(rng, atoms, 1),
            )
        })
        .collect();
    let facts = (0..rng.gen_range(0..=2))
        .map(|_| random_formula(rng, atoms, 1))
        .collect();
    DefaultTheory::new(rules, facts)
}

/// One argument component (explicit set plus implicit rules) built so
/// that the theory is singular, consistent, and every rule fires; the
/// explicit members are non-tautological. When `normal_rules` is set,
/// every rule has its consequent as justification.
pub fn random_component(
    rng: &mut StdRng,
    atoms: usize,
    max_rules: usize,
    normal_rules: bool,
) -> (TheoryBase, Vec<DefaultRule>) {
    'attempt: loop {
        let mut explicit = TheoryBase::new();
        for _ in 0..rng.gen_range(0..=2) {
            explicit.push(random_nontaut_formula(rng, atoms, 1));
        }
        if !is_consistent(&explicit) {
            continue 'attempt;
        }
        let mut rules: Vec<DefaultRule> = Vec::new();
        let mut derivable: Vec<Formula> = explicit.iter().cloned().collect();
        let want = rng.gen_range(0..=max_rules);
        'rules: for _ in 0..want {
            for _ in 0..8 {
                let pre = if derivable.is_empty() || rng.gen_bool(0.3) {
                    Formula::Verum
                } else {
                    derivable[rng.gen_range(0..derivable.len())].clone()
                };
                let cons = random_nontaut_formula(rng, atoms, 1);
                let just = if normal_rules {
                    cons.clone()
                } else if rng.gen_bool(0.4) {
                    Formula::and(random_formula(rng, atoms, 1), cons.clone())
                } else {
                    random_formula(rng, atoms, 1)
                };
                let mut candidate = rules.clone();
                candidate.push(DefaultRule::new(pre, just, cons.clone()));
                let theory = DefaultTheory::new(candidate.clone(), explicit.clone());
                let extensions = all_extensions(&theory);
                if extensions.len() == 1
                    && extensions[0].generating().len() == candidate.len()
                    && !extensions[0].is_inconsistent()
                    && is_consistent(extensions[0].base())
                {
                    rules = candidate;
                    derivable.push(cons);
                    continue 'rules;
                }
            }
            // Could not extend with another firing rule; keep what we
            // have.
            break;
        }
        return (explicit, rules);
    }
}

/// Random argument whose components are singular with all rules fired.
pub fn random_fired_argument(
    rng: &mut StdRng,
    atoms: usize,
    max_rules: usize,
    normal_rules: bool,
) -> DefaultArgument {
    let (wp, dp) = random_component(rng, atoms, max_rules, normal_rules);
    let (wc, dc) = random_component(rng, atoms, max_rules, normal_rules);
    DefaultArgument::new(wp, dp, wc, dc).expect("generated components are singular")
}

/// Truth-table entailment over the atoms of `base ∪ {goal}`; the
/// independent oracle for the DPLL route.
pub fn entails_oracle(base: &TheoryBase, goal: &Formula) -> bool {
    let mut atoms = base.atoms();
    goal.collect_atoms(&mut atoms);
    let atoms: Vec<Atom> = atoms.into_iter().collect();
    assert!(atoms.len() <= 16, "oracle is exhaustive; too many atoms");
    for mask in 0u32..(1 << atoms.len()) {
        let valuation = |atom: &Atom| {
            atoms
                .iter()
                .position(|a| a == atom)
                .map(|i| mask & (1 << i) != 0)
                .unwrap_or(false)
        };
        if base.iter().all(|f| f.eval(&valuation)) && !goal.eval(&valuation) {
            return false;
        }
    }
    true
}

/// Bitmask of the 8 assignments over the 3-atom pool satisfying every
/// member of the theory.
fn models3(theory: &TheoryBase) -> u8 {
    let mut out = 0u8;
    for mask in 0u8..8 {
        let valuation = |atom: &Atom| {
            ATOM_POOL[..3]
                .iter()
                .position(|name| atom == &Atom::new(*name))
                .map(|i| mask & (1 << i) != 0)
                .unwrap_or(false)
        };
        if theory.iter().all(|f| f.eval(&valuation)) {
            out |= 1 << mask;
        }
    }
    out
}

/// Exhaustive oracle over all 256 Boolean functions of three atoms:
/// some non-constant-true function follows from both theories.
pub fn shared_consequence_oracle(x: &TheoryBase, y: &TheoryBase) -> bool {
    let mx = models3(x);
    let my = models3(y);
    for table in 0u8..=255 {
        if table == 0xff {
            continue; // the constant-true function is trivial support
        }
        let covers = |models: u8| models & !table == 0;
        if covers(mx) && covers(my) {
            return true;
        }
    }
    false
}

/// Extension test straight from the fixed-point definition: `E` is an
/// extension iff `E = Pe(E)`, where `Pe(E)` is the smallest deductively
/// closed superset of `W` closed under the rules whose justification is
/// not contradicted by `E` itself. Independent of the subset
/// enumeration in the library.
pub fn is_extension_fixed_point(theory: &DefaultTheory, candidate: &TheoryBase) -> bool {
    use defarg_core::formula::{entails, theories_equivalent};
    let mut pe = theory.facts.clone();
    loop {
        let mut changed = false;
        for rule in &theory.defaults {
            if !pe.contains(&rule.cons)
                && entails(&pe, &rule.pre)
                && !entails(candidate, &rule.just.negated())
            {
                pe.push(rule.cons.clone());
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    theories_equivalent(&pe, candidate)
}

/// Brute-force extension enumeration via the fixed-point test over
/// every candidate base `W ∪ S` for `S` a subset of the consequents.
pub fn fixed_point_extensions(theory: &DefaultTheory) -> Vec<TheoryBase> {
    use defarg_core::formula::theories_equivalent;
    let n = theory.defaults.len();
    assert!(n <= 12);
    let mut found: Vec<TheoryBase> = Vec::new();
    for mask in 0u32..(1 << n) {
        let mut candidate = theory.facts.clone();
        for (i, rule) in theory.defaults.iter().enumerate() {
            if mask & (1 << i) != 0 {
                candidate.push(rule.cons.clone());
            }
        }
        if is_extension_fixed_point(theory, &candidate)
            && !found
                .iter()
                .any(|seen| theories_equivalent(seen, &candidate))
        {
            found.push(candidate);
        }
    }
    found
}
