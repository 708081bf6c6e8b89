//! Default arguments: explicit/implicit premises and claims.
//!
//! A default argument is a tuple `⟨Wp, Dp, Wc, Dc⟩` where `Wp`/`Wc` are
//! sets of formulae (explicit premises/claims) and `Dp`/`Dc` are lists
//! of default rules (implicit premises/claims), such that both
//! component theories `(Dp, Wp)` and `(Dc, Wc)` are singular. The
//! support of an argument is the unique extension of its premise pair,
//! the consequence the unique extension of its claim pair; both bases
//! are computed at construction and cached (the caches are a pure
//! function of the tuple, so equality and hashing stay structural).

use crate::defaults::{all_extensions, DefaultRule, DefaultTheory, RuleParseError};
use crate::formula::{
    entails, entails_theory, is_consistent, is_tautology, theories_equivalent, Formula, ParseError,
    TheoryBase,
};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArgumentError {
    #[error("premise theory is not singular: {extensions} extensions")]
    PremiseNotSingular { extensions: usize },
    #[error("claim theory is not singular: {extensions} extensions")]
    ClaimNotSingular { extensions: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefaultArgument {
    explicit_premises: TheoryBase,
    implicit_premises: Vec<DefaultRule>,
    explicit_claims: TheoryBase,
    implicit_claims: Vec<DefaultRule>,
    support: TheoryBase,
    consequence: TheoryBase,
}

impl DefaultArgument {
    /// Builds the tuple, checking that both component theories are
    /// singular.
    pub fn new(
        explicit_premises: TheoryBase,
        implicit_premises: Vec<DefaultRule>,
        explicit_claims: TheoryBase,
        implicit_claims: Vec<DefaultRule>,
    ) -> Result<Self, ArgumentError> {
        let premise_theory =
            DefaultTheory::new(implicit_premises.clone(), explicit_premises.clone());
        let mut premise_exts = all_extensions(&premise_theory);
        if premise_exts.len() != 1 {
            return Err(ArgumentError::PremiseNotSingular {
                extensions: premise_exts.len(),
            });
        }
        let claim_theory = DefaultTheory::new(implicit_claims.clone(), explicit_claims.clone());
        let mut claim_exts = all_extensions(&claim_theory);
        if claim_exts.len() != 1 {
            return Err(ArgumentError::ClaimNotSingular {
                extensions: claim_exts.len(),
            });
        }
        Ok(DefaultArgument {
            explicit_premises,
            implicit_premises,
            explicit_claims,
            implicit_claims,
            support: premise_exts.pop().unwrap().base().clone(),
            consequence: claim_exts.pop().unwrap().base().clone(),
        })
    }

    /// The vacuous argument `⟨∅, ∅, ∅, ∅⟩`.
    pub fn vacuous() -> Self {
        DefaultArgument::new(TheoryBase::new(), Vec::new(), TheoryBase::new(), Vec::new())
            .expect("empty theories are singular")
    }

    pub fn explicit_premises(&self) -> &TheoryBase {
        &self.explicit_premises
    }

    pub fn implicit_premises(&self) -> &[DefaultRule] {
        &self.implicit_premises
    }

    pub fn explicit_claims(&self) -> &TheoryBase {
        &self.explicit_claims
    }

    pub fn implicit_claims(&self) -> &[DefaultRule] {
        &self.implicit_claims
    }

    /// Base of `S(A)`, the unique extension of `(Dp, Wp)`.
    pub fn support(&self) -> &TheoryBase {
        &self.support
    }

    /// Base of `C(A)`, the unique extension of `(Dc, Wc)`.
    pub fn consequence(&self) -> &TheoryBase {
        &self.consequence
    }

    /// Justifications of the implicit premises.
    pub fn premise_justifications(&self) -> TheoryBase {
        self.implicit_premises
            .iter()
            .map(|r| r.just.clone())
            .collect()
    }

    /// Justifications of the implicit claims.
    pub fn claim_justifications(&self) -> TheoryBase {
        self.implicit_claims
            .iter()
            .map(|r| r.just.clone())
            .collect()
    }

    /// Every member of the explicit claim follows from the support.
    pub fn is_valid(&self) -> bool {
        self.explicit_claims
            .iter()
            .all(|beta| entails(&self.support, beta))
    }

    /// Valid, and no proper subset of the implicit premises already
    /// yields the whole explicit claim. A non-singular subset theory
    /// cannot witness non-minimality.
    pub fn is_implicitly_minimal(&self) -> bool {
        self.is_valid()
            && !proper_subsets(self.implicit_premises.len()).any(|keep| {
                let rules: Vec<DefaultRule> = keep
                    .iter()
                    .map(|&i| self.implicit_premises[i].clone())
                    .collect();
                self.claim_reachable_from(rules, self.explicit_premises.clone())
            })
    }

    /// Valid, and no proper subset of the explicit premises already
    /// yields the whole explicit claim.
    pub fn is_explicitly_minimal(&self) -> bool {
        self.is_valid()
            && !proper_subsets(self.explicit_premises.len()).any(|keep| {
                let facts: TheoryBase = keep
                    .iter()
                    .map(|&i| self.explicit_premises.iter().nth(i).unwrap().clone())
                    .collect();
                self.claim_reachable_from(self.implicit_premises.clone(), facts)
            })
    }

    fn claim_reachable_from(&self, rules: Vec<DefaultRule>, facts: TheoryBase) -> bool {
        let mut exts = all_extensions(&DefaultTheory::new(rules, facts));
        if exts.len() != 1 {
            return false;
        }
        let ext = exts.pop().unwrap();
        self.explicit_claims.iter().all(|beta| ext.contains(beta))
    }

    pub fn is_support_consistent(&self) -> bool {
        is_consistent(&self.support)
    }

    pub fn is_consequence_consistent(&self) -> bool {
        is_consistent(&self.consequence)
    }

    /// Support and consequence are consistent together.
    pub fn is_fully_consistent(&self) -> bool {
        is_consistent(&self.support.union(&self.consequence))
    }

    /// No implicit premises and no implicit claims.
    pub fn is_explicit(&self) -> bool {
        self.implicit_premises.is_empty() && self.implicit_claims.is_empty()
    }

    pub fn is_classical(&self) -> bool {
        self.is_explicit()
            && self.is_valid()
            && self.is_explicitly_minimal()
            && self.is_support_consistent()
    }

    /// Support and consequence are both the closure of the empty set.
    /// Decided semantically, so `⟨∅,∅,{b ∨ ¬b},∅⟩` counts as vacuous.
    pub fn is_vacuous(&self) -> bool {
        is_tautology(&self.support.conjunction()) && is_tautology(&self.consequence.conjunction())
    }

    pub fn has_completely_implicit_premises(&self) -> bool {
        self.explicit_premises.is_empty() && !self.implicit_premises.is_empty()
    }

    pub fn has_completely_implicit_claims(&self) -> bool {
        self.explicit_claims.is_empty() && !self.implicit_claims.is_empty()
    }

    pub fn profile(&self) -> ArgumentProfile {
        ArgumentProfile {
            valid: self.is_valid(),
            implicitly_minimal: self.is_implicitly_minimal(),
            explicitly_minimal: self.is_explicitly_minimal(),
            support_consistent: self.is_support_consistent(),
            consequence_consistent: self.is_consequence_consistent(),
            fully_consistent: self.is_fully_consistent(),
            explicit: self.is_explicit(),
            classical: self.is_classical(),
            vacuous: self.is_vacuous(),
            completely_implicit_premises: self.has_completely_implicit_premises(),
            completely_implicit_claims: self.has_completely_implicit_claims(),
        }
    }

    /// Equivalent explicit premises and equivalent explicit claims.
    pub fn explicitly_equivalent(&self, other: &Self) -> bool {
        theories_equivalent(&self.explicit_premises, &other.explicit_premises)
            && theories_equivalent(&self.explicit_claims, &other.explicit_claims)
    }

    /// Same support.
    pub fn support_equivalent(&self, other: &Self) -> bool {
        theories_equivalent(&self.support, &other.support)
    }

    /// Same consequence.
    pub fn consequence_equivalent(&self, other: &Self) -> bool {
        theories_equivalent(&self.consequence, &other.consequence)
    }

    /// Support and consequence equivalent.
    pub fn implicitly_equivalent(&self, other: &Self) -> bool {
        self.support_equivalent(other) && self.consequence_equivalent(other)
    }

    /// Support equivalent and explicit claims equivalent.
    pub fn intrinsically_equivalent(&self, other: &Self) -> bool {
        self.support_equivalent(other)
            && theories_equivalent(&self.explicit_claims, &other.explicit_claims)
    }

    /// Implicitly equivalent, with the explicit premises and claims of
    /// `self` no stronger than those of `other`.
    pub fn more_implicit_than(&self, other: &Self) -> bool {
        self.implicitly_equivalent(other)
            && entails_theory(&other.explicit_premises, &self.explicit_premises)
            && entails_theory(&other.explicit_claims, &self.explicit_claims)
    }
}

impl fmt::Display for DefaultArgument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, [", self.explicit_premises)?;
        for (i, r) in self.implicit_premises.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({r})")?;
        }
        write!(f, "], {}, [", self.explicit_claims)?;
        for (i, r) in self.implicit_claims.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({r})")?;
        }
        write!(f, "]>")
    }
}

/// Index subsets of `{0..n}` other than the full set, smaller first.
fn proper_subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    assert!(
        n <= 16,
        "minimality check enumerates subsets; component too large ({n} > 16)"
    );
    let mut masks: Vec<u32> = (0..(1u32 << n).saturating_sub(1)).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    masks
        .into_iter()
        .map(move |mask| (0..n).filter(move |&i| mask & (1 << i) != 0).collect())
}

/// Classification bits of a single argument, in stable field order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ArgumentProfile {
    pub valid: bool,
    pub implicitly_minimal: bool,
    pub explicitly_minimal: bool,
    pub support_consistent: bool,
    pub consequence_consistent: bool,
    pub fully_consistent: bool,
    pub explicit: bool,
    pub classical: bool,
    pub vacuous: bool,
    pub completely_implicit_premises: bool,
    pub completely_implicit_claims: bool,
}

/// JSON shape of an argument file: four lists of formula/rule strings.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct ArgumentSpec {
    #[serde(default)]
    pub explicit_premises: Vec<String>,
    #[serde(default)]
    pub implicit_premises: Vec<String>,
    #[serde(default)]
    pub explicit_claims: Vec<String>,
    #[serde(default)]
    pub implicit_claims: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArgumentSpecError {
    #[error("invalid formula in {field}: {source}")]
    Formula {
        field: &'static str,
        source: ParseError,
    },
    #[error("invalid rule in {field}: {source}")]
    Rule {
        field: &'static str,
        source: RuleParseError,
    },
    #[error(transparent)]
    Argument(#[from] ArgumentError),
}

impl ArgumentSpec {
    pub fn build(&self) -> Result<DefaultArgument, ArgumentSpecError> {
        let formulas = |items: &[String], field: &'static str| {
            items
                .iter()
                .map(|s| {
                    s.parse::<Formula>()
                        .map_err(|source| ArgumentSpecError::Formula { field, source })
                })
                .collect::<Result<TheoryBase, _>>()
        };
        let rules = |items: &[String], field: &'static str| {
            items
                .iter()
                .map(|s| {
                    s.parse::<DefaultRule>()
                        .map_err(|source| ArgumentSpecError::Rule { field, source })
                })
                .collect::<Result<Vec<DefaultRule>, _>>()
        };
        Ok(DefaultArgument::new(
            formulas(&self.explicit_premises, "explicit_premises")?,
            rules(&self.implicit_premises, "implicit_premises")?,
            formulas(&self.explicit_claims, "explicit_claims")?,
            rules(&self.implicit_claims, "implicit_claims")?,
        )?)
    }

    pub fn from_argument(argument: &DefaultArgument) -> Self {
        ArgumentSpec {
            explicit_premises: argument
                .explicit_premises()
                .iter()
                .map(|f| f.to_string())
                .collect(),
            implicit_premises: argument
                .implicit_premises()
                .iter()
                .map(|r| r.to_string())
                .collect(),
            explicit_claims: argument
                .explicit_claims()
                .iter()
                .map(|f| f.to_string())
                .collect(),
            implicit_claims: argument
                .implicit_claims()
                .iter()
                .map(|r| r.to_string())
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_formula;

    pub(crate) fn arg(
        wp: &[&str],
        dp: &[&str],
        wc: &[&str],
        dc: &[&str],
    ) -> Result<DefaultArgument, ArgumentError> {
        DefaultArgument::new(
            wp.iter().map(|s| parse_formula(s).unwrap()).collect(),
            dp.iter().map(|s| DefaultRule::parse(s).unwrap()).collect(),
            wc.iter().map(|s| parse_formula(s).unwrap()).collect(),
            dc.iter().map(|s| DefaultRule::parse(s).unwrap()).collect(),
        )
    }

    fn base(parts: &[&str]) -> TheoryBase {
        parts.iter().map(|s| parse_formula(s).unwrap()).collect()
    }

    #[test]
    fn construction_checks_singularity() {
        assert!(arg(&["a | b"], &["a | b | c : d / d"], &["d"], &["d : !e / !e"]).is_ok());
        assert!(arg(&[], &[], &[], &[]).is_ok());
        assert!(matches!(
            arg(&["a"], &["a : b / b", "a : !b / !b"], &["x"], &[]),
            Err(ArgumentError::PremiseNotSingular { extensions: 2 })
        ));
        assert!(matches!(
            arg(&["a"], &[], &["x"], &["x : y / y", "x : !y / !y"]),
            Err(ArgumentError::ClaimNotSingular { extensions: 2 })
        ));
    }

    #[test]
    fn support_and_consequence_bases() {
        let a = arg(&["a | b"], &["a | b | c : d / d"], &["d"], &["d : !e / !e"]).unwrap();
        assert!(theories_equivalent(a.support(), &base(&["a | b", "d"])));
        assert!(theories_equivalent(a.consequence(), &base(&["d", "!e"])));

        let b = arg(&[], &[], &["b | !b"], &[]).unwrap();
        assert!(theories_equivalent(b.support(), &TheoryBase::new()));
        assert!(theories_equivalent(b.consequence(), &TheoryBase::new()));

        let c = arg(&[], &[" : e / e", "f : g & h / h"], &["h"], &["h : f / f"]).unwrap();
        assert!(theories_equivalent(c.support(), &base(&["e"])));
        assert!(theories_equivalent(c.consequence(), &base(&["f", "h"])));
    }

    #[test]
    fn premise_justifications_come_from_implicit_premises_only() {
        let a = arg(
            &["e"],
            &["e : f & a / f"],
            &["f"],
            &["f : !b & (a | c) / !b"],
        )
        .unwrap();
        assert_eq!(a.premise_justifications(), base(&["f & a"]));
        assert_eq!(a.claim_justifications(), base(&["!b & (a | c)"]));
        let explicit = arg(&["a"], &[], &["a"], &[]).unwrap();
        assert!(explicit.premise_justifications().is_empty());
    }

    #[test]
    fn profile_flags_on_running_examples() {
        // Valid, fully consistent and minimal.
        let a = arg(&["a | b"], &["a | b | c : d / d"], &["d"], &["d : !e / !e"]).unwrap();
        let pa = a.profile();
        assert!(pa.valid && pa.fully_consistent && pa.implicitly_minimal && pa.explicitly_minimal);
        assert!(!pa.explicit && !pa.vacuous);

        let b = arg(&[], &[], &["b | !b"], &[]).unwrap();
        let pb = b.profile();
        assert!(pb.valid && pb.fully_consistent && pb.vacuous && pb.classical);

        let c = arg(&[], &[" : e / e"], &["e"], &["e : f / f", "f : g & h / h"]).unwrap();
        let pc = c.profile();
        assert!(pc.valid && pc.fully_consistent && pc.implicitly_minimal && pc.explicitly_minimal);
        assert!(pc.completely_implicit_premises && !pc.completely_implicit_claims);

        // Dropping the explicit claim makes the premise rule redundant.
        let d = arg(&[], &[" : e / e"], &[], &["e : f / f", "f : g & h / h"]).unwrap();
        let pd = d.profile();
        assert!(pd.valid && pd.fully_consistent);
        assert!(!pd.implicitly_minimal);
        assert!(pd.completely_implicit_premises && pd.completely_implicit_claims);
    }

    #[test]
    fn classical_versus_nonclassical() {
        let with_rule = arg(&["a | b"], &["a | b | c : d / d"], &["a | b | e"], &[]).unwrap();
        let p = with_rule.profile();
        assert!(p.valid && p.explicitly_minimal && p.fully_consistent);
        assert!(!p.explicit && !p.implicitly_minimal && !p.classical);

        let plain = arg(&["a | b"], &[], &["a | b | e"], &[]).unwrap();
        let q = plain.profile();
        assert!(q.explicit && q.valid && q.explicitly_minimal && q.fully_consistent && q.classical);

        for bad in [
            arg(&["a"], &["a : b / c"], &["c"], &[]).unwrap(),
            arg(&["a"], &["a : b / c"], &["d"], &[]).unwrap(),
            arg(&["a"], &[], &["d"], &[]).unwrap(),
            arg(&["a & !a"], &[], &["d"], &[]).unwrap(),
        ] {
            assert!(!bad.profile().classical);
        }
    }

    #[test]
    fn consistency_split() {
        let a = arg(&["a"], &["a : b / b"], &["b"], &["b : !a / !a"]).unwrap();
        let p = a.profile();
        assert!(p.support_consistent && p.consequence_consistent && !p.fully_consistent);

        let b = arg(&["a"], &[], &["!a"], &[]).unwrap();
        let q = b.profile();
        assert!(q.support_consistent && q.consequence_consistent && !q.fully_consistent);
        assert!(!q.valid);
    }

    #[test]
    fn inconsistent_components() {
        let a = arg(&["a & !a"], &[], &["d"], &["d : e / e"]).unwrap();
        assert!(!a.is_support_consistent());
        assert!(a.is_consequence_consistent());
        let b = arg(&["a"], &["a : b / b"], &["d & !d"], &[]).unwrap();
        assert!(b.is_support_consistent());
        assert!(!b.is_consequence_consistent());
    }

    #[test]
    fn equivalence_trio() {
        let a = arg(&["e"], &["e : f / f"], &["f"], &["f : !b / !b"]).unwrap();
        let b = arg(&["e"], &["e : f / f"], &["f & !b"], &[]).unwrap();
        let c = arg(&[], &[" : e / e", "e : f / f"], &["!(!f | b)"], &[]).unwrap();
        for (x, y) in [(&a, &b), (&a, &c), (&b, &c)] {
            assert!(x.implicitly_equivalent(y), "{x} vs {y}");
            assert!(y.implicitly_equivalent(x));
        }
        // Explicit premises differ ({e} versus the empty set), so B and
        // C are not explicitly equivalent even though their explicit
        // claims are.
        assert!(!a.explicitly_equivalent(&c));
        assert!(!b.explicitly_equivalent(&c));
        assert!(theories_equivalent(
            &base(&["f & !b"]),
            &base(&["!(!f | b)"])
        ));

        // Reflexivity of all five notions.
        assert!(a.explicitly_equivalent(&a));
        assert!(a.support_equivalent(&a));
        assert!(a.consequence_equivalent(&a));
        assert!(a.implicitly_equivalent(&a));
        assert!(a.intrinsically_equivalent(&a));

        let vacuous = DefaultArgument::vacuous();
        assert!(!a.implicitly_equivalent(&vacuous));
        assert!(!a.explicitly_equivalent(&vacuous));
    }

    #[test]
    fn more_implicit_ordering() {
        let b = arg(&["e"], &["e : f / f"], &["f & !b"], &[]).unwrap();
        let c = arg(&[], &[" : e / e", "e : f / f"], &["!(!f | b)"], &[]).unwrap();
        assert!(c.more_implicit_than(&b));
        assert!(!b.more_implicit_than(&c));
        assert!(b.more_implicit_than(&b));
        let unrelated = arg(&["z"], &[], &["z"], &[]).unwrap();
        assert!(!unrelated.more_implicit_than(&b));
    }

    #[test]
    fn argument_spec_round_trip() {
        let spec = ArgumentSpec {
            explicit_premises: vec!["a | b".into()],
            implicit_premises: vec!["a | b | c : d / d".into()],
            explicit_claims: vec!["d".into()],
            implicit_claims: vec!["d : !e / !e".into()],
        };
        let built = spec.build().unwrap();
        let back = ArgumentSpec::from_argument(&built);
        assert_eq!(back.build().unwrap(), built);

        let bad = ArgumentSpec {
            implicit_premises: vec!["nonsense".into()],
            ..Default::default()
        };
        assert!(matches!(bad.build(), Err(ArgumentSpecError::Rule { .. })));
    }
}
