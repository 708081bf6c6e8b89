//! Support and attack relations between two default arguments.
//!
//! Support compares the consequence of the supporting argument with the
//! support, explicit premises, or rule justifications of the supported
//! one; attack is inconsistency between the attacker's consequence and
//! the corresponding aspect of the attackee. Tautologies never carry
//! support on their own, and the membership tests range over the finite
//! extension bases (with the inconsistent closure understood as
//! containing everything), decided by entailment rather than syntactic
//! lookup.

use crate::argument::DefaultArgument;
use crate::formula::{
    entails, has_nontrivial_member, is_consistent, is_tautology, Formula, TheoryBase,
};
use serde::{Deserialize, Serialize};

/// The plain support relations from `a` to `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Supports {
    /// Some non-tautological member of the support of `b` is a
    /// consequence of `a`.
    pub inferential: bool,
    /// Some non-tautological explicit premise of `b` is a consequence
    /// of `a`.
    pub direct: bool,
    /// Some explicit premise of `b` follows from the explicit claims of
    /// `a`.
    pub explicit: bool,
    /// Some non-tautological premise justification of `b` is a
    /// consequence of `a`.
    pub justification: bool,
}

/// The strong support relations: the plain relation plus the subset
/// condition on the compared sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StrongSupports {
    pub inferential: bool,
    pub direct: bool,
    pub explicit: bool,
    pub justification: bool,
}

/// The unfocused attack relations from `a` to `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AttacksFamily {
    /// `C(a) ∪ S(b)` is inconsistent.
    pub support_attack: bool,
    /// `C(a) ∪ C(b)` is inconsistent.
    pub consequence_attack: bool,
    /// `C(a)` is inconsistent with the justifications of `b`'s implicit
    /// rules (premise- and claim-side).
    pub justification_attack: bool,
    /// The umbrella relation: `C(a) ∪ S(b)` plus those justifications
    /// is inconsistent.
    pub attacks: bool,
}

/// Focused attacks target one aspect of the attackee: explicit premise
/// (undermine), explicit claim (rebut), a premise-rule justification
/// (undercut) or a claim-rule justification (overcut).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FocusedAttacks {
    pub undermines: bool,
    pub rebuts: bool,
    pub undercuts: bool,
    pub overcuts: bool,
    pub explicitly_undermines: bool,
    pub explicitly_rebuts: bool,
    pub implicitly_undermines: bool,
    pub implicitly_rebuts: bool,
}

/// Flat aggregate of every relation from `a` to `b`. Field names are
/// stable: they double as the vocabulary for arc-label policies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationProfile {
    pub inferential_support: bool,
    pub direct_support: bool,
    pub explicit_support: bool,
    pub justification_support: bool,
    pub strong_inferential_support: bool,
    pub strong_direct_support: bool,
    pub strong_explicit_support: bool,
    pub strong_justification_support: bool,
    pub support_attack: bool,
    pub consequence_attack: bool,
    pub justification_attack: bool,
    pub attacks: bool,
    pub undermines: bool,
    pub rebuts: bool,
    pub undercuts: bool,
    pub overcuts: bool,
    pub explicitly_undermines: bool,
    pub explicitly_rebuts: bool,
    pub implicitly_undermines: bool,
    pub implicitly_rebuts: bool,
}

impl RelationProfile {
    pub const FIELD_NAMES: [&'static str; 20] = [
        "inferential_support",
        "direct_support",
        "explicit_support",
        "justification_support",
        "strong_inferential_support",
        "strong_direct_support",
        "strong_explicit_support",
        "strong_justification_support",
        "support_attack",
        "consequence_attack",
        "justification_attack",
        "attacks",
        "undermines",
        "rebuts",
        "undercuts",
        "overcuts",
        "explicitly_undermines",
        "explicitly_rebuts",
        "implicitly_undermines",
        "implicitly_rebuts",
    ];

    /// Looks a relation up by its stable field name.
    pub fn get(&self, name: &str) -> Option<bool> {
        let value = match name {
            "inferential_support" => self.inferential_support,
            "direct_support" => self.direct_support,
            "explicit_support" => self.explicit_support,
            "justification_support" => self.justification_support,
            "strong_inferential_support" => self.strong_inferential_support,
            "strong_direct_support" => self.strong_direct_support,
            "strong_explicit_support" => self.strong_explicit_support,
            "strong_justification_support" => self.strong_justification_support,
            "support_attack" => self.support_attack,
            "consequence_attack" => self.consequence_attack,
            "justification_attack" => self.justification_attack,
            "attacks" => self.attacks,
            "undermines" => self.undermines,
            "rebuts" => self.rebuts,
            "undercuts" => self.undercuts,
            "overcuts" => self.overcuts,
            "explicitly_undermines" => self.explicitly_undermines,
            "explicitly_rebuts" => self.explicitly_rebuts,
            "implicitly_undermines" => self.implicitly_undermines,
            "implicitly_rebuts" => self.implicitly_rebuts,
            _ => return None,
        };
        Some(value)
    }
}

/// Non-tautological membership of `phi` in the closed set represented
/// by `closed`.
fn member_nontrivial(closed: &TheoryBase, phi: &Formula) -> bool {
    !is_tautology(phi) && entails(closed, phi)
}

pub fn supports(a: &DefaultArgument, b: &DefaultArgument) -> Supports {
    let consequence = a.consequence();
    let support = b.support();
    let inferential = if !is_consistent(consequence) {
        // The inconsistent closure contains every stripped member of
        // the other side.
        has_nontrivial_member(support)
    } else if !is_consistent(support) {
        has_nontrivial_member(consequence)
    } else {
        support
            .iter()
            .any(|phi| member_nontrivial(consequence, phi))
    };
    Supports {
        inferential,
        direct: b
            .explicit_premises()
            .iter()
            .any(|beta| member_nontrivial(consequence, beta)),
        explicit: b
            .explicit_premises()
            .iter()
            .any(|beta| entails(a.explicit_claims(), beta)),
        justification: b
            .premise_justifications()
            .iter()
            .any(|beta| member_nontrivial(consequence, beta)),
    }
}

pub fn strong_supports(a: &DefaultArgument, b: &DefaultArgument) -> StrongSupports {
    let plain = supports(a, b);
    let consequence = a.consequence();
    StrongSupports {
        inferential: plain.inferential && entails(consequence, &b.support().conjunction()),
        direct: plain.direct
            && b.explicit_premises()
                .iter()
                .all(|beta| entails(consequence, beta)),
        explicit: plain.explicit
            && b.explicit_premises()
                .iter()
                .all(|beta| entails(a.explicit_claims(), beta)),
        justification: plain.justification
            && b.premise_justifications()
                .iter()
                .all(|beta| entails(consequence, beta)),
    }
}

pub fn attacks_family(a: &DefaultArgument, b: &DefaultArgument) -> AttacksFamily {
    let consequence = a.consequence();
    let justifications = b.premise_justifications().union(&b.claim_justifications());
    AttacksFamily {
        support_attack: !is_consistent(&consequence.union(b.support())),
        consequence_attack: !is_consistent(&consequence.union(b.consequence())),
        justification_attack: !is_consistent(&consequence.union(&justifications)),
        attacks: !is_consistent(&consequence.union(b.support()).union(&justifications)),
    }
}

pub fn focused_attacks(a: &DefaultArgument, b: &DefaultArgument) -> FocusedAttacks {
    let consequence = a.consequence();
    let explicit_claims = a.explicit_claims();
    let negates = |closed: &TheoryBase, beta: &Formula| entails(closed, &beta.negated());
    let undermines = b
        .explicit_premises()
        .iter()
        .any(|beta| negates(consequence, beta));
    let rebuts = b
        .explicit_claims()
        .iter()
        .any(|beta| negates(consequence, beta));
    let explicitly_undermines = b
        .explicit_premises()
        .iter()
        .any(|beta| negates(explicit_claims, beta));
    let explicitly_rebuts = b
        .explicit_claims()
        .iter()
        .any(|beta| negates(explicit_claims, beta));
    FocusedAttacks {
        undermines,
        rebuts,
        undercuts: b
            .implicit_premises()
            .iter()
            .any(|r| negates(consequence, &r.just)),
        overcuts: b
            .implicit_claims()
            .iter()
            .any(|r| negates(consequence, &r.just)),
        explicitly_undermines,
        explicitly_rebuts,
        implicitly_undermines: undermines && !explicitly_undermines,
        implicitly_rebuts: rebuts && !explicitly_rebuts,
    }
}

/// Every relation from `a` to `b` in one pass.
pub fn relation_profile(a: &DefaultArgument, b: &DefaultArgument) -> RelationProfile {
    let plain = supports(a, b);
    let strong = strong_supports(a, b);
    let family = attacks_family(a, b);
    let focused = focused_attacks(a, b);
    RelationProfile {
        inferential_support: plain.inferential,
        direct_support: plain.direct,
        explicit_support: plain.explicit,
        justification_support: plain.justification,
        strong_inferential_support: strong.inferential,
        strong_direct_support: strong.direct,
        strong_explicit_support: strong.explicit,
        strong_justification_support: strong.justification,
        support_attack: family.support_attack,
        consequence_attack: family.consequence_attack,
        justification_attack: family.justification_attack,
        attacks: family.attacks,
        undermines: focused.undermines,
        rebuts: focused.rebuts,
        undercuts: focused.undercuts,
        overcuts: focused.overcuts,
        explicitly_undermines: focused.explicitly_undermines,
        explicitly_rebuts: focused.explicitly_rebuts,
        implicitly_undermines: focused.implicitly_undermines,
        implicitly_rebuts: focused.implicitly_rebuts,
    }
}
