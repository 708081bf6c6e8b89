//! Argument maps and their logical instantiation.
//!
//! An argument map is a node/arc graph produced by argument mining:
//! each node carries optional premise and claim text, each arc a `+`
//! (support) or `-` (attack) label; an absent arc means no
//! relationship. A translation table maps the text strings to formula
//! sets, an instantiation assigns a default argument to every node, and
//! validation checks each arc label against the relations that actually
//! hold between the assigned arguments.

pub mod io;

use crate::argument::{ArgumentError, ArgumentProfile, DefaultArgument};
use crate::defaults::DefaultRule;
use crate::exec::{self, ExecMode};
use crate::formula::{Atom, Formula, TheoryBase};
use crate::relations::{relation_profile, RelationProfile};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ArcLabel {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl fmt::Display for ArcLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArcLabel::Plus => write!(f, "+"),
            ArcLabel::Minus => write!(f, "-"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapNode {
    pub id: String,
    pub premise_text: Option<String>,
    pub claim_text: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapArc {
    pub from: String,
    pub to: String,
    pub label: ArcLabel,
}

/// Nodes with premise/claim text and labelled arcs. Node ids are
/// unique, arc endpoints resolve, and there is at most one arc per
/// ordered pair; self-arcs are permitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArgumentMap {
    nodes: Vec<MapNode>,
    arcs: Vec<MapArc>,
}

impl ArgumentMap {
    pub fn new(nodes: Vec<MapNode>, arcs: Vec<MapArc>) -> Result<Self, ArgmapError> {
        let mut ids = BTreeSet::new();
        for node in &nodes {
            if !ids.insert(node.id.clone()) {
                return Err(ArgmapError::DuplicateNodeId {
                    id: node.id.clone(),
                });
            }
        }
        let mut pairs = BTreeSet::new();
        for arc in &arcs {
            for endpoint in [&arc.from, &arc.to] {
                if !ids.contains(endpoint) {
                    return Err(ArgmapError::UnknownNode {
                        id: endpoint.clone(),
                    });
                }
            }
            if !pairs.insert((arc.from.clone(), arc.to.clone())) {
                return Err(ArgmapError::DuplicateArc {
                    from: arc.from.clone(),
                    to: arc.to.clone(),
                });
            }
        }
        Ok(ArgumentMap { nodes, arcs })
    }

    pub fn nodes(&self) -> &[MapNode] {
        &self.nodes
    }

    pub fn arcs(&self) -> &[MapArc] {
        &self.arcs
    }

    pub fn node(&self, id: &str) -> Option<&MapNode> {
        self.nodes.iter().find(|n| n.id == id)
    }
}

/// Text-to-formula translation. The null text always maps to the empty
/// set; looking up an unknown string is an error, not a silent empty
/// set, so table gaps surface immediately.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TranslationTable {
    entries: BTreeMap<String, TheoryBase>,
}

impl TranslationTable {
    pub fn new() -> Self {
        TranslationTable::default()
    }

    pub fn insert(&mut self, text: impl Into<String>, formulae: TheoryBase) {
        self.entries.insert(text.into(), formulae);
    }

    pub fn lookup(&self, text: Option<&str>) -> Result<TheoryBase, ArgmapError> {
        match text {
            None => Ok(TheoryBase::new()),
            Some(t) => {
                self.entries
                    .get(t)
                    .cloned()
                    .ok_or_else(|| ArgmapError::MissingTranslation {
                        text: t.to_string(),
                    })
            }
        }
    }
}

/// Per-node formula sets produced by [`translate_map`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeTranslation {
    pub premise: TheoryBase,
    pub claim: TheoryBase,
}

/// Applies the table to every node of the map.
pub fn translate_map(
    map: &ArgumentMap,
    table: &TranslationTable,
) -> Result<BTreeMap<String, NodeTranslation>, ArgmapError> {
    let mut out = BTreeMap::new();
    for node in map.nodes() {
        out.insert(
            node.id.clone(),
            NodeTranslation {
                premise: table.lookup(node.premise_text.as_deref())?,
                claim: table.lookup(node.claim_text.as_deref())?,
            },
        );
    }
    Ok(out)
}

/// A map together with one default argument per node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstantiatedMap {
    map: ArgumentMap,
    assignment: BTreeMap<String, DefaultArgument>,
}

impl InstantiatedMap {
    pub fn new(
        map: ArgumentMap,
        assignment: BTreeMap<String, DefaultArgument>,
    ) -> Result<Self, ArgmapError> {
        for node in map.nodes() {
            if !assignment.contains_key(&node.id) {
                return Err(ArgmapError::UnassignedNode {
                    id: node.id.clone(),
                });
            }
        }
        for id in assignment.keys() {
            if map.node(id).is_none() {
                return Err(ArgmapError::UnknownNode { id: id.clone() });
            }
        }
        Ok(InstantiatedMap { map, assignment })
    }

    pub fn map(&self) -> &ArgumentMap {
        &self.map
    }

    pub fn assignment(&self) -> &BTreeMap<String, DefaultArgument> {
        &self.assignment
    }

    pub fn argument(&self, id: &str) -> Option<&DefaultArgument> {
        self.assignment.get(id)
    }
}

/// Which relations realize a `+` or `-` arc during validation. The
/// vocabulary is the field names of [`RelationProfile`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelPolicy {
    plus_accepts: BTreeSet<String>,
    minus_accepts: BTreeSet<String>,
}

impl LabelPolicy {
    /// `+` is realized by any plain support relation, `-` by the
    /// umbrella attacks relation.
    pub fn standard() -> Self {
        LabelPolicy {
            plus_accepts: [
                "inferential_support",
                "direct_support",
                "explicit_support",
                "justification_support",
            ]
            .into_iter()
            .map(String::from)
            .collect(),
            minus_accepts: ["attacks"].into_iter().map(String::from).collect(),
        }
    }

    pub fn new(
        plus_accepts: impl IntoIterator<Item = String>,
        minus_accepts: impl IntoIterator<Item = String>,
    ) -> Result<Self, ArgmapError> {
        let plus: BTreeSet<String> = plus_accepts.into_iter().collect();
        let minus: BTreeSet<String> = minus_accepts.into_iter().collect();
        for name in plus.iter().chain(minus.iter()) {
            if !RelationProfile::FIELD_NAMES.contains(&name.as_str()) {
                return Err(ArgmapError::UnknownRelation { name: name.clone() });
            }
        }
        if plus.is_empty() || minus.is_empty() {
            return Err(ArgmapError::EmptyPolicy);
        }
        Ok(LabelPolicy {
            plus_accepts: plus,
            minus_accepts: minus,
        })
    }

    pub fn plus_accepts(&self) -> &BTreeSet<String> {
        &self.plus_accepts
    }

    pub fn minus_accepts(&self) -> &BTreeSet<String> {
        &self.minus_accepts
    }

    fn satisfied(&self, label: ArcLabel, profile: &RelationProfile) -> bool {
        let accepted = match label {
            ArcLabel::Plus => &self.plus_accepts,
            ArcLabel::Minus => &self.minus_accepts,
        };
        accepted.iter().any(|name| profile.get(name) == Some(true))
    }
}

impl Default for LabelPolicy {
    fn default() -> Self {
        LabelPolicy::standard()
    }
}

/// Builds the premise-atomic assignment: each node `n_i` whose premise
/// and claim translate to single atoms `a_i`/`b_i` receives
/// `⟨{a_i}, {(a_i : b_i / b_i)}, {b_i}, Dc⟩`, where `Dc` holds one
/// normal rule per outgoing arc — `(b_i : ¬t_j / ¬t_j)` for a `-` arc
/// and `(b_i : t_j / t_j)` for a `+` arc, with `t_j` the target node's
/// premise atom. A node with null premise text gets `Wp = ∅` and the
/// rule `(⊤ : b_i / b_i)`; arcs into such a node target its claim atom
/// instead.
pub fn premise_atomic_assignment(
    map: &ArgumentMap,
    table: &TranslationTable,
) -> Result<InstantiatedMap, ArgmapError> {
    let translated = translate_map(map, table)?;
    let mut premise_atoms: BTreeMap<&str, Option<Atom>> = BTreeMap::new();
    let mut claim_atoms: BTreeMap<&str, Atom> = BTreeMap::new();
    for node in map.nodes() {
        let translation = &translated[&node.id];
        premise_atoms.insert(
            &node.id,
            single_atom_or_empty(&translation.premise, &node.id)?,
        );
        claim_atoms.insert(&node.id, single_atom(&translation.claim, &node.id)?);
    }
    let mut assignment = BTreeMap::new();
    for node in map.nodes() {
        let premise_atom = premise_atoms[node.id.as_str()].clone();
        let claim_atom = claim_atoms[node.id.as_str()].clone();
        let claim_formula = Formula::Atom(claim_atom);
        let pre = premise_atom
            .clone()
            .map(Formula::Atom)
            .unwrap_or(Formula::Verum);
        let explicit_premises: TheoryBase = premise_atom.map(Formula::Atom).into_iter().collect();
        let implicit_premises = vec![DefaultRule::normal(pre, claim_formula.clone())];
        let explicit_claims: TheoryBase = [claim_formula.clone()].into_iter().collect();
        let mut implicit_claims = Vec::new();
        for arc in map.arcs().iter().filter(|arc| arc.from == node.id) {
            let target = match &premise_atoms[arc.to.as_str()] {
                Some(atom) => Formula::Atom(atom.clone()),
                None => Formula::Atom(claim_atoms[arc.to.as_str()].clone()),
            };
            let consequent = match arc.label {
                ArcLabel::Plus => target,
                ArcLabel::Minus => target.negated(),
            };
            implicit_claims.push(DefaultRule::normal(claim_formula.clone(), consequent));
        }
        let argument = DefaultArgument::new(
            explicit_premises,
            implicit_premises,
            explicit_claims,
            implicit_claims,
        )?;
        assignment.insert(node.id.clone(), argument);
    }
    InstantiatedMap::new(map.clone(), assignment)
}

fn single_atom_or_empty(set: &TheoryBase, node: &str) -> Result<Option<Atom>, ArgmapError> {
    if set.is_empty() {
        return Ok(None);
    }
    single_atom(set, node).map(Some)
}

fn single_atom(set: &TheoryBase, node: &str) -> Result<Atom, ArgmapError> {
    let mut iter = set.iter();
    match (iter.next(), iter.next()) {
        (Some(Formula::Atom(atom)), None) => Ok(atom.clone()),
        _ => Err(ArgmapError::NonAtomicTranslation {
            node: node.to_string(),
        }),
    }
}

/// One validated arc: the full relation profile from source to target
/// and whether any policy-accepted relation realizes the label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArcRecord {
    pub from: String,
    pub to: String,
    pub label: ArcLabel,
    pub profile: RelationProfile,
    pub satisfied: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NodeRecord {
    pub id: String,
    pub profile: ArgumentProfile,
}

/// Validation outcome: per-arc records ordered by `(from, to)`,
/// per-node argument profiles, and overall validity (all arcs
/// satisfied). Violations are data, not errors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MapReport {
    pub arcs: Vec<ArcRecord>,
    pub nodes: Vec<NodeRecord>,
    pub valid: bool,
}

pub fn validate_labels(instantiated: &InstantiatedMap, policy: &LabelPolicy) -> MapReport {
    validate_labels_with(instantiated, policy, ExecMode::default())
}

/// [`validate_labels`] under an explicit execution mode; arcs are
/// independent, so they are profiled in parallel when available.
pub fn validate_labels_with(
    instantiated: &InstantiatedMap,
    policy: &LabelPolicy,
    mode: ExecMode,
) -> MapReport {
    let mut arcs: Vec<&MapArc> = instantiated.map().arcs().iter().collect();
    arcs.sort_by(|x, y| (&x.from, &x.to).cmp(&(&y.from, &y.to)));
    let arc_records = exec::ordered_map(mode, arcs, |arc| {
        let source = &instantiated.assignment()[&arc.from];
        let target = &instantiated.assignment()[&arc.to];
        let profile = relation_profile(source, target);
        ArcRecord {
            from: arc.from.clone(),
            to: arc.to.clone(),
            label: arc.label,
            profile,
            satisfied: policy.satisfied(arc.label, &profile),
        }
    });
    let nodes = instantiated
        .map()
        .nodes()
        .iter()
        .map(|node| NodeRecord {
            id: node.id.clone(),
            profile: instantiated.assignment()[&node.id].profile(),
        })
        .collect();
    let valid = arc_records.iter().all(|record| record.satisfied);
    MapReport {
        arcs: arc_records,
        nodes,
        valid,
    }
}

/// A knowledge base `(Π, Γ)` restricting which arguments may be used
/// for instantiation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct KnowledgeBase {
    pub defaults: Vec<DefaultRule>,
    pub formulae: Vec<Formula>,
}

/// Syntactic membership of every component of the argument in the
/// knowledge base.
pub fn args_membership(argument: &DefaultArgument, kb: &KnowledgeBase) -> bool {
    argument
        .explicit_premises()
        .iter()
        .all(|f| kb.formulae.contains(f))
        && argument
            .explicit_claims()
            .iter()
            .all(|f| kb.formulae.contains(f))
        && argument
            .implicit_premises()
            .iter()
            .all(|r| kb.defaults.contains(r))
        && argument
            .implicit_claims()
            .iter()
            .all(|r| kb.defaults.contains(r))
}

/// The normal-exhaustive rule set over `gamma`: one normal rule
/// `(α : β / β)` for every `α, β` drawn from `gamma ∪ {verum}`, so
/// `(|gamma| + 1)²` rules when the members are pairwise distinct.
pub fn normal_exhaustive(gamma: &TheoryBase) -> Vec<DefaultRule> {
    let mut pool: Vec<Formula> = vec![Formula::Verum];
    for f in gamma.iter() {
        if !pool.contains(f) {
            pool.push(f.clone());
        }
    }
    let mut rules = Vec::new();
    for alpha in &pool {
        for beta in &pool {
            let rule = DefaultRule::normal(alpha.clone(), beta.clone());
            if !rules.contains(&rule) {
                rules.push(rule);
            }
        }
    }
    rules
}

/// Number of instantiation functions for `node_count` nodes drawing
/// from `argument_count` arguments: `argument_count ^ node_count`
/// (one independent choice per node). Saturates at `u128::MAX`.
pub fn instantiation_space_size(node_count: u32, argument_count: u128) -> u128 {
    if node_count == 0 {
        return 1;
    }
    argument_count.checked_pow(node_count).unwrap_or(u128::MAX)
}

/// Per-node verdicts when comparing two instantiations of one map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NodeComparison {
    pub id: String,
    pub explicitly_equivalent: bool,
    pub support_equivalent: bool,
    pub consequence_equivalent: bool,
    pub implicitly_equivalent: bool,
    pub intrinsically_equivalent: bool,
    pub first_more_implicit: bool,
    pub second_more_implicit: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComparisonReport {
    pub nodes: Vec<NodeComparison>,
    pub summary: Vec<String>,
}

/// Compares two instantiations of the same underlying map node by
/// node.
pub fn compare_instantiations(
    first: &InstantiatedMap,
    second: &InstantiatedMap,
) -> Result<ComparisonReport, ArgmapError> {
    if first.map() != second.map() {
        return Err(ArgmapError::MapMismatch);
    }
    let nodes: Vec<NodeComparison> = first
        .map()
        .nodes()
        .iter()
        .map(|node| {
            let x = &first.assignment()[&node.id];
            let y = &second.assignment()[&node.id];
            NodeComparison {
                id: node.id.clone(),
                explicitly_equivalent: x.explicitly_equivalent(y),
                support_equivalent: x.support_equivalent(y),
                consequence_equivalent: x.consequence_equivalent(y),
                implicitly_equivalent: x.implicitly_equivalent(y),
                intrinsically_equivalent: x.intrinsically_equivalent(y),
                first_more_implicit: x.more_implicit_than(y),
                second_more_implicit: y.more_implicit_than(x),
            }
        })
        .collect();
    let mut summary = Vec::new();
    let not_equivalent: Vec<&str> = nodes
        .iter()
        .filter(|n| !n.implicitly_equivalent)
        .map(|n| n.id.as_str())
        .collect();
    if not_equivalent.is_empty() {
        summary.push("instantiations are implicitly equivalent at every node".to_string());
    } else {
        summary.push(format!(
            "instantiations differ (not implicitly equivalent) at nodes: {}",
            not_equivalent.join(", ")
        ));
    }
    let first_finer: Vec<&str> = nodes
        .iter()
        .filter(|n| n.first_more_implicit && !n.second_more_implicit)
        .map(|n| n.id.as_str())
        .collect();
    if !first_finer.is_empty() {
        summary.push(format!(
            "first instantiation strictly more implicit at nodes: {}",
            first_finer.join(", ")
        ));
    }
    let second_finer: Vec<&str> = nodes
        .iter()
        .filter(|n| n.second_more_implicit && !n.first_more_implicit)
        .map(|n| n.id.as_str())
        .collect();
    if !second_finer.is_empty() {
        summary.push(format!(
            "second instantiation strictly more implicit at nodes: {}",
            second_finer.join(", ")
        ));
    }
    Ok(ComparisonReport { nodes, summary })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArgmapError {
    #[error("duplicate node id `{id}`")]
    DuplicateNodeId { id: String },
    #[error("arc endpoint `{id}` does not name a node")]
    UnknownNode { id: String },
    #[error("more than one arc from `{from}` to `{to}`")]
    DuplicateArc { from: String, to: String },
    #[error("node `{id}` has no assigned argument")]
    UnassignedNode { id: String },
    #[error("no translation for text: {text:?}")]
    MissingTranslation { text: String },
    #[error("node `{node}`: premise/claim does not translate to a single atom")]
    NonAtomicTranslation { node: String },
    #[error("instantiations are over different maps")]
    MapMismatch,
    #[error("unknown relation name `{name}` in label policy")]
    UnknownRelation { name: String },
    #[error("label policy must accept at least one relation per label")]
    EmptyPolicy,
    #[error(transparent)]
    Argument(#[from] ArgumentError),
}
