//! Propositional language core.
//!
//! Formulae are finite trees over named ground atoms. Ground first-order
//! atoms such as `bird(Tweety)` are treated as opaque propositional
//! atoms: the canonical atom string is `predicate(const,...,const)` and
//! two atoms are equal iff their canonical strings are equal.
//!
//! Deductively closed sets are always represented by a finite
//! [`TheoryBase`]; membership in the closure is decided by [`entails`],
//! never syntactically.

mod parse;
mod sat;

pub use parse::{parse_formula, parse_schema_formula, ParseError};

use std::collections::BTreeSet;
use std::fmt;

/// Argument of a first-order style atom. Variables (leading-uppercase
/// identifiers) only arise inside rule schemas; everything that reaches
/// the semantic layer is ground.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Const(String),
    Var(String),
}

impl Term {
    pub fn name(&self) -> &str {
        match self {
            Term::Const(s) | Term::Var(s) => s,
        }
    }

    pub fn is_var(&self) -> bool {
        matches!(self, Term::Var(_))
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A named atom, possibly with constant arguments: `a`, `s3`,
/// `bird(Tweety)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom {
    pub pred: String,
    pub args: Vec<Term>,
}

impl Atom {
    pub fn new(pred: impl Into<String>) -> Self {
        Atom {
            pred: pred.into(),
            args: Vec::new(),
        }
    }

    pub fn with_args(pred: impl Into<String>, args: Vec<Term>) -> Self {
        Atom {
            pred: pred.into(),
            args,
        }
    }

    /// Canonical string form, `predicate(const,...,const)`.
    pub fn name(&self) -> String {
        self.to_string()
    }

    pub fn is_ground(&self) -> bool {
        self.args.iter().all(|t| !t.is_var())
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pred)?;
        if !self.args.is_empty() {
            write!(f, "(")?;
            for (i, arg) in self.args.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{arg}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Propositional formula tree. Implication and biconditional are
/// definable sugar: their semantics equal the `¬/∧/∨` expansion.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Verum,
    Falsum,
    Atom(Atom),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Self {
        Formula::Atom(Atom::new(name))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Self {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Self {
        Formula::Iff(Box::new(a), Box::new(b))
    }

    /// Syntactic negation with double-negation collapse.
    pub fn negated(&self) -> Formula {
        match self {
            Formula::Not(inner) => (**inner).clone(),
            Formula::Verum => Formula::Falsum,
            Formula::Falsum => Formula::Verum,
            other => Formula::not(other.clone()),
        }
    }

    /// Conjunction of a sequence, `verum` for the empty one.
    pub fn conj_of<'a>(parts: impl IntoIterator<Item = &'a Formula>) -> Formula {
        let mut iter = parts.into_iter();
        match iter.next() {
            None => Formula::Verum,
            Some(first) => iter.fold(first.clone(), |acc, f| Formula::and(acc, f.clone())),
        }
    }

    pub fn collect_atoms(&self, out: &mut BTreeSet<Atom>) {
        match self {
            Formula::Verum | Formula::Falsum => {}
            Formula::Atom(a) => {
                out.insert(a.clone());
            }
            Formula::Not(f) => f.collect_atoms(out),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    /// The finite set of atom leaves.
    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    pub fn is_ground(&self) -> bool {
        match self {
            Formula::Verum | Formula::Falsum => true,
            Formula::Atom(a) => a.is_ground(),
            Formula::Not(f) => f.is_ground(),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => a.is_ground() && b.is_ground(),
        }
    }

    /// Truth-table evaluation under the given atom valuation.
    pub fn eval(&self, valuation: &dyn Fn(&Atom) -> bool) -> bool {
        match self {
            Formula::Verum => true,
            Formula::Falsum => false,
            Formula::Atom(a) => valuation(a),
            Formula::Not(f) => !f.eval(valuation),
            Formula::And(a, b) => a.eval(valuation) && b.eval(valuation),
            Formula::Or(a, b) => a.eval(valuation) || b.eval(valuation),
            Formula::Implies(a, b) => !a.eval(valuation) || b.eval(valuation),
            Formula::Iff(a, b) => a.eval(valuation) == b.eval(valuation),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Iff(..) => 1,
            Formula::Implies(..) => 2,
            Formula::Or(..) => 3,
            Formula::And(..) => 4,
            Formula::Verum | Formula::Falsum | Formula::Atom(_) | Formula::Not(_) => 5,
        }
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, min_prec: u8) -> fmt::Result {
        let prec = self.precedence();
        let parens = prec < min_prec;
        if parens {
            write!(f, "(")?;
        }
        match self {
            Formula::Verum => write!(f, "true")?,
            Formula::Falsum => write!(f, "false")?,
            Formula::Atom(a) => write!(f, "{a}")?,
            Formula::Not(inner) => {
                write!(f, "!")?;
                inner.fmt_with(f, 5)?;
            }
            // Left-associative connectives: a same-level right child
            // needs parentheses to round-trip structurally.
            Formula::And(a, b) => {
                a.fmt_with(f, prec)?;
                write!(f, " & ")?;
                b.fmt_with(f, prec + 1)?;
            }
            Formula::Or(a, b) => {
                a.fmt_with(f, prec)?;
                write!(f, " | ")?;
                b.fmt_with(f, prec + 1)?;
            }
            Formula::Iff(a, b) => {
                a.fmt_with(f, prec)?;
                write!(f, " <-> ")?;
                b.fmt_with(f, prec + 1)?;
            }
            // Implication is right-associative.
            Formula::Implies(a, b) => {
                a.fmt_with(f, prec + 1)?;
                write!(f, " -> ")?;
                b.fmt_with(f, prec)?;
            }
        }
        if parens {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, 0)
    }
}

impl std::str::FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_formula(s)
    }
}

/// A finite base whose deductive closure represents a deductively
/// closed set. Keeps insertion order and drops structural duplicates,
/// so iteration is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct TheoryBase {
    formulae: Vec<Formula>,
}

impl TheoryBase {
    pub fn new() -> Self {
        TheoryBase::default()
    }

    pub fn push(&mut self, f: Formula) {
        if !self.formulae.contains(&f) {
            self.formulae.push(f);
        }
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Formula> {
        self.formulae.iter()
    }

    pub fn len(&self) -> usize {
        self.formulae.len()
    }

    pub fn is_empty(&self) -> bool {
        self.formulae.is_empty()
    }

    pub fn contains(&self, f: &Formula) -> bool {
        self.formulae.contains(f)
    }

    /// Conjunction of all members; `verum` for the empty base.
    pub fn conjunction(&self) -> Formula {
        Formula::conj_of(&self.formulae)
    }

    pub fn union(&self, other: &TheoryBase) -> TheoryBase {
        let mut out = self.clone();
        for f in other.iter() {
            out.push(f.clone());
        }
        out
    }

    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        for f in self.iter() {
            f.collect_atoms(&mut out);
        }
        out
    }
}

impl FromIterator<Formula> for TheoryBase {
    fn from_iter<I: IntoIterator<Item = Formula>>(iter: I) -> Self {
        let mut base = TheoryBase::new();
        for f in iter {
            base.push(f);
        }
        base
    }
}

impl<'a> IntoIterator for &'a TheoryBase {
    type Item = &'a Formula;
    type IntoIter = std::slice::Iter<'a, Formula>;

    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}

impl fmt::Display for TheoryBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, formula) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{formula}")?;
        }
        write!(f, "}}")
    }
}

/// Classical consequence: `base ⊨ goal`, decided by refutation with a
/// DPLL search over the atoms of `base ∪ {goal}`.
pub fn entails(base: &TheoryBase, goal: &Formula) -> bool {
    let negated = goal.negated();
    let mut formulas: Vec<&Formula> = base.iter().collect();
    formulas.push(&negated);
    !sat::satisfiable(&formulas)
}

/// `Cn(x) ⊇ Cn(y)`: every member of `y` follows from `x`.
pub fn entails_theory(x: &TheoryBase, y: &TheoryBase) -> bool {
    y.iter().all(|f| entails(x, f))
}

pub fn is_consistent(base: &TheoryBase) -> bool {
    let formulas: Vec<&Formula> = base.iter().collect();
    sat::satisfiable(&formulas)
}

pub fn is_tautology(f: &Formula) -> bool {
    let negated = f.negated();
    !sat::satisfiable(&[&negated])
}

/// Two bases represent the same deductively closed set iff they are
/// mutually entailing.
pub fn theories_equivalent(x: &TheoryBase, y: &TheoryBase) -> bool {
    entails_theory(x, y) && entails_theory(y, x)
}

/// Whether `Cn(x) ∩ Cn(y)` contains a non-tautological member, via the
/// identity `Cn(x) ∩ Cn(y) = Cn({conj(x) ∨ conj(y)})`: the closed sets
/// share a non-trivial consequence iff `conj(x) ∨ conj(y)` is not a
/// tautology.
pub fn shared_nontrivial_consequence(x: &TheoryBase, y: &TheoryBase) -> bool {
    !is_tautology(&Formula::or(x.conjunction(), y.conjunction()))
}

/// Whether the closure of `base` contains anything beyond tautologies.
pub fn has_nontrivial_member(base: &TheoryBase) -> bool {
    !is_tautology(&base.conjunction())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn base(parts: &[&str]) -> TheoryBase {
        parts.iter().map(|s| f(s)).collect()
    }

    #[test]
    fn parse_builds_expected_trees() {
        assert_eq!(
            f("a & b"),
            Formula::and(Formula::atom("a"), Formula::atom("b"))
        );
        assert_eq!(
            f("bird(Tweety)"),
            Formula::Atom(Atom::with_args("bird", vec![Term::Const("Tweety".into())]))
        );
        let premise = f("(quantitative_easing -> inflation) & !inflation");
        assert_eq!(
            premise,
            Formula::and(
                Formula::implies(
                    Formula::atom("quantitative_easing"),
                    Formula::atom("inflation")
                ),
                Formula::not(Formula::atom("inflation")),
            )
        );
    }

    #[test]
    fn parse_rejects_variables_outside_schemas() {
        assert!(parse_formula("X").is_err());
        assert!(parse_formula("X & b").is_err());
        // Uppercase arguments in ground context are constants.
        assert!(parse_formula("bird(Tweety)").is_ok());
    }

    #[test]
    fn printer_round_trips() {
        for s in [
            "a",
            "!a",
            "a & b & c",
            "a | b & c",
            "(a | b) & c",
            "a -> b -> c",
            "(a -> b) -> c",
            "a <-> b | !c",
            "bird(Tweety) & !penguin(Tweety)",
            "true | false",
            "!(a & b)",
        ] {
            let parsed = f(s);
            let printed = parsed.to_string();
            assert_eq!(
                f(&printed),
                parsed,
                "round-trip failed for {s} -> {printed}"
            );
        }
    }

    #[test]
    fn entails_modus_ponens() {
        assert!(entails(&base(&["a", "a -> b"]), &f("b")));
    }

    #[test]
    fn entails_excluded_middle_from_empty() {
        assert!(entails(&TheoryBase::new(), &f("b | !b")));
    }

    #[test]
    fn entails_rejects_non_consequence() {
        // Truth-table over {a, b, d}: a∨b with d does not fix a.
        assert!(!entails(&base(&["a | b", "d"]), &f("a")));
    }

    #[test]
    fn consistency_checks() {
        assert!(!is_consistent(&base(&["a", "!a"])));
        assert!(!is_consistent(&base(&["a & !a"])));
        assert!(is_consistent(&TheoryBase::new()));
    }

    #[test]
    fn tautology_checks() {
        assert!(is_tautology(&f("b | !b")));
        assert!(!is_tautology(&f("a")));
        assert!(is_tautology(&f("(a & b) | !a | !b")));
    }

    #[test]
    fn theory_equivalence() {
        assert!(theories_equivalent(&base(&["a", "b"]), &base(&["a & b"])));
        assert!(theories_equivalent(
            &base(&["f & !b"]),
            &base(&["!(!f | b)"])
        ));
        assert!(!theories_equivalent(&base(&["a"]), &base(&["a", "b"])));
    }

    #[test]
    fn shared_consequence_examples() {
        assert!(!shared_nontrivial_consequence(
            &base(&["a"]),
            &base(&["!a"])
        ));
        assert!(shared_nontrivial_consequence(
            &base(&["a"]),
            &base(&["a", "b"])
        ));
        assert!(shared_nontrivial_consequence(
            &base(&["a", "b"]),
            &base(&["c"])
        ));
    }

    #[test]
    fn inconsistent_base_entails_everything() {
        let b = base(&["p", "!p"]);
        assert!(entails(&b, &f("q & !q")));
        assert!(entails(&b, &f("false")));
    }
}
