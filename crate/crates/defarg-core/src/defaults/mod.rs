//! Default rules, default theories, and Reiter extensions.
//!
//! A default rule `pre : just / cons` licenses the consequent whenever
//! the pre-condition is derivable and the negation of the justification
//! is not. A default theory `(D, W)` pairs a rule list with a set of
//! facts; its extensions are the grounded fixed points of the usual
//! operator.
//!
//! Enumeration is by generate-and-test over subsets of `D`, which is
//! exponential in `|D|` and intended for desk scale (up to roughly a
//! dozen rules). Subsets are visited smaller-first, then in
//! lexicographic order over index sets, and equivalent extension bases
//! are deduplicated keeping the first representative; this fixes the
//! output order regardless of execution mode.

pub mod kb;
mod schema;

pub use schema::{GroundingError, RuleSchema};

use crate::exec::{self, ExecMode};
use crate::formula::{
    entails, is_consistent, is_tautology, parse_formula, theories_equivalent, Formula, ParseError,
    TheoryBase,
};
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

/// A default rule `pre : just / cons`. Pre-condition-free rules carry
/// `verum` as pre-condition, justification-free rules `verum` as
/// justification. Equality is structural on the triple.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DefaultRule {
    pub pre: Formula,
    pub just: Formula,
    pub cons: Formula,
}

impl DefaultRule {
    pub fn new(pre: Formula, just: Formula, cons: Formula) -> Self {
        DefaultRule { pre, just, cons }
    }

    /// A normal rule `pre : cons / cons`.
    pub fn normal(pre: Formula, cons: Formula) -> Self {
        DefaultRule {
            pre,
            just: cons.clone(),
            cons,
        }
    }

    /// Parses the text form `pre : just / cons`. An omitted pre-condition
    /// (`: just / cons`) means `verum`, as does an omitted justification
    /// (`pre : / cons`).
    pub fn parse(text: &str) -> Result<Self, RuleParseError> {
        let (pre, just, cons) = split_rule(text)?;
        Ok(DefaultRule {
            pre: parse_part(pre)?,
            just: parse_part(just)?,
            cons: parse_formula(cons).map_err(RuleParseError::Formula)?,
        })
    }

    pub fn classify(&self) -> BTreeSet<RuleClass> {
        let mut out = BTreeSet::new();
        if is_tautology(&self.pre) {
            out.insert(RuleClass::PreconditionFree);
        }
        if is_tautology(&self.just) {
            out.insert(RuleClass::JustificationFree);
        }
        if self.just == self.cons {
            out.insert(RuleClass::Normal);
        } else if conjuncts(&self.just).contains(&&self.cons) {
            out.insert(RuleClass::SemiNormal);
        }
        out
    }
}

impl fmt::Display for DefaultRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} : {} / {}", self.pre, self.just, self.cons)
    }
}

impl std::str::FromStr for DefaultRule {
    type Err = RuleParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        DefaultRule::parse(s)
    }
}

/// Splits rule text on the first `:` and the first `/` after it.
/// Neither character occurs in formulae.
fn split_rule(text: &str) -> Result<(&str, &str, &str), RuleParseError> {
    let (pre, rest) = text.split_once(':').ok_or(RuleParseError::MissingColon)?;
    let (just, cons) = rest.split_once('/').ok_or(RuleParseError::MissingSlash)?;
    if cons.trim().is_empty() {
        return Err(RuleParseError::EmptyConsequent);
    }
    Ok((pre, just, cons))
}

fn parse_part(text: &str) -> Result<Formula, RuleParseError> {
    if text.trim().is_empty() {
        Ok(Formula::Verum)
    } else {
        parse_formula(text).map_err(RuleParseError::Formula)
    }
}

/// Flattens the top-level conjunction spine of a formula.
fn conjuncts(f: &Formula) -> Vec<&Formula> {
    match f {
        Formula::And(a, b) => {
            let mut out = conjuncts(a);
            out.extend(conjuncts(b));
            out
        }
        other => vec![other],
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum RuleClass {
    PreconditionFree,
    JustificationFree,
    Normal,
    SemiNormal,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleParseError {
    #[error("default rule must contain `:` between pre-condition and justification")]
    MissingColon,
    #[error("default rule must contain `/` between justification and consequent")]
    MissingSlash,
    #[error("default rule has an empty consequent")]
    EmptyConsequent,
    #[error(transparent)]
    Formula(ParseError),
}

/// A default theory `(D, W)`. The rule list order is the deterministic
/// iteration order for enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DefaultTheory {
    pub defaults: Vec<DefaultRule>,
    pub facts: TheoryBase,
}

impl DefaultTheory {
    pub fn new(defaults: Vec<DefaultRule>, facts: TheoryBase) -> Self {
        DefaultTheory { defaults, facts }
    }
}

/// An extension of a default theory, represented by a finite base
/// (`W` plus the consequents of the applied defaults) together with the
/// indices of the generating defaults.
///
/// The inconsistent extension (arising exactly when `W` is
/// inconsistent) keeps `base = W`, an empty generating set, and answers
/// every membership query positively.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extension {
    base: TheoryBase,
    generating: BTreeSet<usize>,
    inconsistent: bool,
}

impl Extension {
    pub fn base(&self) -> &TheoryBase {
        &self.base
    }

    pub fn generating(&self) -> &BTreeSet<usize> {
        &self.generating
    }

    pub fn is_inconsistent(&self) -> bool {
        self.inconsistent
    }

    /// Membership in the deductively closed extension; everything is a
    /// member of the inconsistent extension.
    pub fn contains(&self, f: &Formula) -> bool {
        self.inconsistent || entails(&self.base, f)
    }

    /// Same closed set as another extension.
    pub fn equivalent(&self, other: &Extension) -> bool {
        theories_equivalent(&self.base, &other.base)
    }
}

impl fmt::Display for Extension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inconsistent {
            write!(f, "Cn({}) [inconsistent]", self.base)
        } else {
            write!(f, "Cn({})", self.base)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SingularityError {
    #[error("default theory is not singular: {extensions} extensions")]
    NotSingular { extensions: usize },
    #[error("the supplied base is not an extension of the theory")]
    NotAnExtension,
}

/// Hard cap on enumerable rule sets; beyond this the subset space is
/// not worth attempting.
pub const MAX_ENUMERABLE_DEFAULTS: usize = 24;

/// Enumerates every extension of `(D, W)` exactly once up to theory
/// equivalence of bases.
pub fn all_extensions(theory: &DefaultTheory) -> Vec<Extension> {
    all_extensions_with(theory, ExecMode::default())
}

/// [`all_extensions`] under an explicit execution mode. The result is
/// identical for every mode.
pub fn all_extensions_with(theory: &DefaultTheory, mode: ExecMode) -> Vec<Extension> {
    let n = theory.defaults.len();
    assert!(
        n <= MAX_ENUMERABLE_DEFAULTS,
        "extension enumeration is exponential in the number of defaults ({n} > {MAX_ENUMERABLE_DEFAULTS})"
    );
    if !is_consistent(&theory.facts) {
        return vec![Extension {
            base: theory.facts.clone(),
            generating: BTreeSet::new(),
            inconsistent: true,
        }];
    }
    // Subsets ordered smaller-first, then lexicographically over index
    // sets (numeric mask order coincides with it for equal popcount).
    let mut masks: Vec<u32> = (0..(1u32 << n)).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    let candidates = exec::ordered_map(mode, masks, |mask| evaluate_subset(theory, mask));
    let mut out: Vec<Extension> = Vec::new();
    for ext in candidates.into_iter().flatten() {
        if !out.iter().any(|seen| seen.equivalent(&ext)) {
            out.push(ext);
        }
    }
    out
}

/// Tests one candidate generating set: saturate by firing its rules
/// whenever their pre-conditions follow, then check groundedness, the
/// justifications of applied rules, and that no outside rule is
/// applicable.
fn evaluate_subset(theory: &DefaultTheory, mask: u32) -> Option<Extension> {
    let rules = &theory.defaults;
    let n = rules.len();
    let chosen = |i: usize| mask & (1 << i) != 0;
    let mut base = theory.facts.clone();
    let mut fired = vec![false; n];
    loop {
        let mut progress = false;
        for i in 0..n {
            if chosen(i) && !fired[i] && entails(&base, &rules[i].pre) {
                base.push(rules[i].cons.clone());
                fired[i] = true;
                progress = true;
            }
        }
        if !progress {
            break;
        }
    }
    // (a) groundedness: every chosen rule was reachable.
    if (0..n).any(|i| chosen(i) && !fired[i]) {
        return None;
    }
    // (b) no applied rule has its justification contradicted.
    if (0..n).any(|i| chosen(i) && entails(&base, &rules[i].just.negated())) {
        return None;
    }
    // (c) maximality: every outside rule is blocked.
    if (0..n).any(|i| {
        !chosen(i) && entails(&base, &rules[i].pre) && !entails(&base, &rules[i].just.negated())
    }) {
        return None;
    }
    Some(Extension {
        base,
        generating: (0..n).filter(|&i| chosen(i)).collect(),
        inconsistent: false,
    })
}

/// Whether `candidate` is (theory-equivalent to the base of) an
/// extension of the theory.
pub fn is_extension(theory: &DefaultTheory, candidate: &TheoryBase) -> bool {
    all_extensions(theory)
        .iter()
        .any(|e| theories_equivalent(&e.base, candidate))
}

/// A theory is singular iff it has exactly one extension.
pub fn is_singular(theory: &DefaultTheory) -> bool {
    all_extensions(theory).len() == 1
}

/// The unique extension of a singular theory.
pub fn ex(theory: &DefaultTheory) -> Result<Extension, SingularityError> {
    let mut extensions = all_extensions(theory);
    if extensions.len() == 1 {
        Ok(extensions.pop().unwrap())
    } else {
        Err(SingularityError::NotSingular {
            extensions: extensions.len(),
        })
    }
}

/// Sufficient (not necessary) condition for singularity: `W` is
/// consistent with the justification-and-consequent conjunctions of all
/// rules.
pub fn justification_consistency_condition(theory: &DefaultTheory) -> bool {
    let mut base = theory.facts.clone();
    for rule in &theory.defaults {
        base.push(Formula::and(rule.just.clone(), rule.cons.clone()));
    }
    is_consistent(&base)
}

/// For an extension `e` of the theory, returns the subtheory `(D', W)`
/// over the generating defaults of `e`; it is singular and `e` is its
/// unique extension.
pub fn singular_subtheory(
    theory: &DefaultTheory,
    e: &Extension,
) -> Result<DefaultTheory, SingularityError> {
    let matched = all_extensions(theory)
        .into_iter()
        .find(|candidate| candidate.inconsistent == e.inconsistent && candidate.equivalent(e))
        .ok_or(SingularityError::NotAnExtension)?;
    let defaults = matched
        .generating
        .iter()
        .map(|&i| theory.defaults[i].clone())
        .collect();
    Ok(DefaultTheory {
        defaults,
        facts: theory.facts.clone(),
    })
}

/// The smallest `D' ⊆ D` whose unique extension equals the unique
/// extension of the singular input theory. Searched smallest-first, so
/// the result is cardinality-minimal (hence ⊆-minimal).
pub fn minimal_generating_defaults(
    theory: &DefaultTheory,
) -> Result<Vec<DefaultRule>, SingularityError> {
    let target = ex(theory)?;
    let n = theory.defaults.len();
    let mut masks: Vec<u32> = (0..(1u32 << n)).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    for mask in masks {
        let defaults: Vec<DefaultRule> = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| theory.defaults[i].clone())
            .collect();
        let sub = DefaultTheory {
            defaults,
            facts: theory.facts.clone(),
        };
        let extensions = all_extensions(&sub);
        if extensions.len() == 1
            && extensions[0].inconsistent == target.inconsistent
            && extensions[0].equivalent(&target)
        {
            return Ok(sub.defaults);
        }
    }
    unreachable!("the full rule set reproduces its own extension");
}
