//! JSON file formats for maps, translation tables, instantiated maps
//! and label policies.
//!
//! Arc absence encodes "no relationship": the map format never writes
//! an explicit null label.

use super::{
    ArcLabel, ArgmapError, ArgumentMap, InstantiatedMap, LabelPolicy, MapArc, MapNode,
    TranslationTable,
};
use crate::argument::{ArgumentSpec, ArgumentSpecError};
use crate::formula::{parse_formula, ParseError, TheoryBase};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArgmapIoError {
    #[error("in translation entry {text:?}: {source}")]
    Translation { text: String, source: ParseError },
    #[error("in argument for node `{node}`: {source}")]
    NodeArgument {
        node: String,
        source: ArgumentSpecError,
    },
    #[error(transparent)]
    Map(#[from] ArgmapError),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NodeSpec {
    pub id: String,
    #[serde(default)]
    pub premise: Option<String>,
    #[serde(default)]
    pub claim: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EdgeSpec {
    pub from: String,
    pub to: String,
    pub label: ArcLabel,
}

/// `{"nodes":[{"id":"n0","premise":null,"claim":"..."}],
///   "edges":[{"from":"n1","to":"n0","label":"+"}]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MapFile {
    pub nodes: Vec<NodeSpec>,
    #[serde(default)]
    pub edges: Vec<EdgeSpec>,
}

impl MapFile {
    pub fn build(&self) -> Result<ArgumentMap, ArgmapError> {
        ArgumentMap::new(
            self.nodes
                .iter()
                .map(|n| MapNode {
                    id: n.id.clone(),
                    premise_text: n.premise.clone(),
                    claim_text: n.claim.clone(),
                })
                .collect(),
            self.edges
                .iter()
                .map(|e| MapArc {
                    from: e.from.clone(),
                    to: e.to.clone(),
                    label: e.label,
                })
                .collect(),
        )
    }

    pub fn from_map(map: &ArgumentMap) -> Self {
        MapFile {
            nodes: map
                .nodes()
                .iter()
                .map(|n| NodeSpec {
                    id: n.id.clone(),
                    premise: n.premise_text.clone(),
                    claim: n.claim_text.clone(),
                })
                .collect(),
            edges: map
                .arcs()
                .iter()
                .map(|a| EdgeSpec {
                    from: a.from.clone(),
                    to: a.to.clone(),
                    label: a.label,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TranslationEntry {
    pub text: String,
    pub formulae: Vec<String>,
}

/// `{"entries":[{"text":"Cars are polluting","formulae":["s3"]}]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TranslationFile {
    pub entries: Vec<TranslationEntry>,
}

impl TranslationFile {
    pub fn build(&self) -> Result<TranslationTable, ArgmapIoError> {
        let mut table = TranslationTable::new();
        for entry in &self.entries {
            let formulae = entry
                .formulae
                .iter()
                .map(|s| {
                    parse_formula(s).map_err(|source| ArgmapIoError::Translation {
                        text: entry.text.clone(),
                        source,
                    })
                })
                .collect::<Result<TheoryBase, _>>()?;
            table.insert(entry.text.clone(), formulae);
        }
        Ok(table)
    }
}

/// An instantiated map embeds the map plus per-node argument JSON.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InstantiatedMapFile {
    pub map: MapFile,
    pub assignment: BTreeMap<String, ArgumentSpec>,
}

impl InstantiatedMapFile {
    pub fn build(&self) -> Result<InstantiatedMap, ArgmapIoError> {
        let map = self.map.build()?;
        let mut assignment = BTreeMap::new();
        for (node, spec) in &self.assignment {
            let argument = spec.build().map_err(|source| ArgmapIoError::NodeArgument {
                node: node.clone(),
                source,
            })?;
            assignment.insert(node.clone(), argument);
        }
        Ok(InstantiatedMap::new(map, assignment)?)
    }

    pub fn from_instantiated(instantiated: &InstantiatedMap) -> Self {
        InstantiatedMapFile {
            map: MapFile::from_map(instantiated.map()),
            assignment: instantiated
                .assignment()
                .iter()
                .map(|(id, argument)| (id.clone(), ArgumentSpec::from_argument(argument)))
                .collect(),
        }
    }
}

/// `{"plus_accepts":[...],"minus_accepts":[...]}` over relation names.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolicyFile {
    pub plus_accepts: Vec<String>,
    pub minus_accepts: Vec<String>,
}

impl PolicyFile {
    pub fn build(&self) -> Result<LabelPolicy, ArgmapError> {
        LabelPolicy::new(
            self.plus_accepts.iter().cloned(),
            self.minus_accepts.iter().cloned(),
        )
    }

    pub fn from_policy(policy: &LabelPolicy) -> Self {
        PolicyFile {
            plus_accepts: policy.plus_accepts().iter().cloned().collect(),
            minus_accepts: policy.minus_accepts().iter().cloned().collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_file_round_trip() {
        let raw = r#"{
            "nodes": [
                {"id": "n0", "premise": null, "claim": "Cars should be banned from cities"},
                {"id": "n1", "premise": "Cars are polluting", "claim": "Cars are bad for the health"}
            ],
            "edges": [
                {"from": "n1", "to": "n0", "label": "+"}
            ]
        }"#;
        let file: MapFile = serde_json::from_str(raw).unwrap();
        let map = file.build().unwrap();
        assert_eq!(map.nodes().len(), 2);
        assert_eq!(map.arcs()[0].label, ArcLabel::Plus);
        let back = MapFile::from_map(&map);
        assert_eq!(back.build().unwrap(), map);
    }

    #[test]
    fn bad_label_is_rejected_by_serde() {
        let raw =
            r#"{"nodes":[{"id":"a"},{"id":"b"}],"edges":[{"from":"a","to":"b","label":"?"}]}"#;
        assert!(serde_json::from_str::<MapFile>(raw).is_err());
    }

    #[test]
    fn translation_file_build() {
        let raw = r#"{"entries":[{"text":"Cars are polluting","formulae":["s3"]}]}"#;
        let table = serde_json::from_str::<TranslationFile>(raw)
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(
            table.lookup(Some("Cars are polluting")).unwrap(),
            [parse_formula("s3").unwrap()].into_iter().collect()
        );
        let bad = r#"{"entries":[{"text":"x","formulae":["( broken"]}]}"#;
        assert!(serde_json::from_str::<TranslationFile>(bad)
            .unwrap()
            .build()
            .is_err());
    }

    #[test]
    fn instantiated_map_file_round_trip() {
        let raw = r#"{
            "map": {"nodes": [{"id": "n", "premise": "p", "claim": "c"}], "edges": []},
            "assignment": {
                "n": {
                    "explicit_premises": ["a"],
                    "implicit_premises": ["a : b / b"],
                    "explicit_claims": ["b"],
                    "implicit_claims": []
                }
            }
        }"#;
        let file: InstantiatedMapFile = serde_json::from_str(raw).unwrap();
        let instantiated = file.build().unwrap();
        let back = InstantiatedMapFile::from_instantiated(&instantiated);
        assert_eq!(back.build().unwrap(), instantiated);
    }

    #[test]
    fn policy_file_build() {
        let raw = r#"{"plus_accepts":["direct_support"],"minus_accepts":["rebuts","undermines"]}"#;
        let policy = serde_json::from_str::<PolicyFile>(raw)
            .unwrap()
            .build()
            .unwrap();
        assert!(policy.minus_accepts().contains("rebuts"));
        let bad = r#"{"plus_accepts":["sideways_support"],"minus_accepts":["attacks"]}"#;
        assert!(serde_json::from_str::<PolicyFile>(bad)
            .unwrap()
            .build()
            .is_err());
    }
}
