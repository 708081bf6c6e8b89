//! Rule schemas with variable arguments, grounded before use.

use super::{DefaultRule, RuleParseError};
use crate::formula::{parse_schema_formula, Atom, Formula, Term};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

/// A default rule whose atoms may carry variable arguments
/// (leading-uppercase identifiers). Grounding substitutes constants for
/// every variable, one rule per assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleSchema {
    pub pre: Formula,
    pub just: Formula,
    pub cons: Formula,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroundingError {
    #[error("schema has free variables {variables:?} but no constants were supplied")]
    FreeVariables { variables: Vec<String> },
}

impl RuleSchema {
    /// Parses `pre : just / cons` in schema context.
    pub fn parse(text: &str) -> Result<Self, RuleParseError> {
        let (pre, just, cons) = super::split_rule(text)?;
        Ok(RuleSchema {
            pre: schema_part(pre)?,
            just: schema_part(just)?,
            cons: parse_schema_formula(cons).map_err(RuleParseError::Formula)?,
        })
    }

    /// All variable names, sorted.
    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for f in [&self.pre, &self.just, &self.cons] {
            collect_variables(f, &mut out);
        }
        out
    }

    /// Re-reads variables whose names match a declared constant as that
    /// constant. Lets `bird(Tweety)` appear inside a schema alongside
    /// genuine variables when `Tweety` is declared.
    pub fn bind_constants(&self, constants: &BTreeSet<String>) -> RuleSchema {
        let fix = |f: &Formula| {
            map_atoms(f, &|atom| Atom {
                pred: atom.pred.clone(),
                args: atom
                    .args
                    .iter()
                    .map(|t| match t {
                        Term::Var(v) if constants.contains(v) => Term::Const(v.clone()),
                        other => other.clone(),
                    })
                    .collect(),
            })
        };
        RuleSchema {
            pre: fix(&self.pre),
            just: fix(&self.just),
            cons: fix(&self.cons),
        }
    }

    /// One ground rule per assignment of constants to variables, in
    /// lexicographic order over constant tuples (variables taken in
    /// sorted name order). A variable-free schema grounds to itself.
    pub fn ground(&self, constants: &BTreeSet<String>) -> Result<Vec<DefaultRule>, GroundingError> {
        let variables: Vec<String> = self.variables().into_iter().collect();
        if variables.is_empty() {
            return Ok(vec![DefaultRule {
                pre: self.pre.clone(),
                just: self.just.clone(),
                cons: self.cons.clone(),
            }]);
        }
        if constants.is_empty() {
            return Err(GroundingError::FreeVariables { variables });
        }
        let consts: Vec<&String> = constants.iter().collect();
        let mut rules = Vec::new();
        let mut odometer = vec![0usize; variables.len()];
        loop {
            let binding: BTreeMap<&str, &str> = variables
                .iter()
                .zip(&odometer)
                .map(|(v, &i)| (v.as_str(), consts[i].as_str()))
                .collect();
            rules.push(DefaultRule {
                pre: substitute(&self.pre, &binding),
                just: substitute(&self.just, &binding),
                cons: substitute(&self.cons, &binding),
            });
            // Advance the rightmost position: lexicographic tuple order.
            let mut pos = odometer.len();
            loop {
                if pos == 0 {
                    return Ok(rules);
                }
                pos -= 1;
                odometer[pos] += 1;
                if odometer[pos] < consts.len() {
                    break;
                }
                odometer[pos] = 0;
            }
        }
    }
}

impl fmt::Display for RuleSchema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} : {} / {}", self.pre, self.just, self.cons)
    }
}

fn schema_part(text: &str) -> Result<Formula, RuleParseError> {
    if text.trim().is_empty() {
        Ok(Formula::Verum)
    } else {
        parse_schema_formula(text).map_err(RuleParseError::Formula)
    }
}

fn collect_variables(f: &Formula, out: &mut BTreeSet<String>) {
    match f {
        Formula::Atom(atom) => {
            for term in &atom.args {
                if let Term::Var(v) = term {
                    out.insert(v.clone());
                }
            }
        }
        Formula::Not(inner) => collect_variables(inner, out),
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
            collect_variables(a, out);
            collect_variables(b, out);
        }
        Formula::Verum | Formula::Falsum => {}
    }
}

fn map_atoms(f: &Formula, map: &dyn Fn(&Atom) -> Atom) -> Formula {
    match f {
        Formula::Verum => Formula::Verum,
        Formula::Falsum => Formula::Falsum,
        Formula::Atom(a) => Formula::Atom(map(a)),
        Formula::Not(inner) => Formula::not(map_atoms(inner, map)),
        Formula::And(a, b) => Formula::and(map_atoms(a, map), map_atoms(b, map)),
        Formula::Or(a, b) => Formula::or(map_atoms(a, map), map_atoms(b, map)),
        Formula::Implies(a, b) => Formula::implies(map_atoms(a, map), map_atoms(b, map)),
        Formula::Iff(a, b) => Formula::iff(map_atoms(a, map), map_atoms(b, map)),
    }
}

fn substitute(f: &Formula, binding: &BTreeMap<&str, &str>) -> Formula {
    map_atoms(f, &|atom| Atom {
        pred: atom.pred.clone(),
        args: atom
            .args
            .iter()
            .map(|t| match t {
                Term::Var(v) => match binding.get(v.as_str()) {
                    Some(c) => Term::Const((*c).to_string()),
                    None => t.clone(),
                },
                c => c.clone(),
            })
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn consts(names: &[&str]) -> BTreeSet<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn grounds_tweety_schema() {
        let s = RuleSchema::parse("bird(X) : fly(X) / fly(X)").unwrap();
        let rules = s.ground(&consts(&["Tweety"])).unwrap();
        assert_eq!(
            rules,
            vec![DefaultRule::parse("bird(Tweety) : fly(Tweety) / fly(Tweety)").unwrap()]
        );
    }

    #[test]
    fn variable_free_schema_grounds_to_itself() {
        let s = RuleSchema::parse("a : b / b").unwrap();
        let rules = s.ground(&BTreeSet::new()).unwrap();
        assert_eq!(rules, vec![DefaultRule::parse("a : b / b").unwrap()]);
    }

    #[test]
    fn two_variables_over_two_constants_give_four_rules() {
        let s = RuleSchema::parse("p(X,Y) : q(X) / q(X)").unwrap();
        let rules = s.ground(&consts(&["a", "b"])).unwrap();
        assert_eq!(rules.len(), 4);
        // Lexicographic over (X, Y) tuples.
        assert_eq!(
            rules[0],
            DefaultRule::parse("p(a,a) : q(a) / q(a)").unwrap()
        );
        assert_eq!(
            rules[1],
            DefaultRule::parse("p(a,b) : q(a) / q(a)").unwrap()
        );
        assert_eq!(
            rules[2],
            DefaultRule::parse("p(b,a) : q(b) / q(b)").unwrap()
        );
        assert_eq!(
            rules[3],
            DefaultRule::parse("p(b,b) : q(b) / q(b)").unwrap()
        );
    }

    #[test]
    fn free_variables_need_constants() {
        let s = RuleSchema::parse("bird(X) : fly(X) / fly(X)").unwrap();
        assert!(matches!(
            s.ground(&BTreeSet::new()),
            Err(GroundingError::FreeVariables { .. })
        ));
    }

    #[test]
    fn bind_constants_pins_declared_names() {
        let s = RuleSchema::parse("knows(X,Tweety) : p(X) / p(X)").unwrap();
        let bound = s.bind_constants(&consts(&["Tweety"]));
        assert_eq!(bound.variables(), consts(&["X"]));
        let rules = bound.ground(&consts(&["Tweety"])).unwrap();
        assert_eq!(rules.len(), 1);
    }
}
