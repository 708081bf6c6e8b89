//! Knowledge-base JSON: declared constants, facts, ground defaults and
//! rule schemas.

use super::{DefaultRule, DefaultTheory, GroundingError, RuleParseError, RuleSchema};
use crate::formula::{parse_formula, ParseError, TheoryBase};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

/// `{"constants":[...], "facts":["..."], "defaults":["..."],
///   "schemas":["..."]}`. Uppercase identifiers listed under
/// `constants` stay constants inside schemas; the remaining uppercase
/// arguments are schema variables, grounded over the declared
/// constants.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct KnowledgeBaseFile {
    #[serde(default)]
    pub constants: Vec<String>,
    #[serde(default)]
    pub facts: Vec<String>,
    #[serde(default)]
    pub defaults: Vec<String>,
    #[serde(default)]
    pub schemas: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KbError {
    #[error("in fact {text:?}: {source}")]
    Fact { text: String, source: ParseError },
    #[error("in default {text:?}: {source}")]
    Default {
        text: String,
        source: RuleParseError,
    },
    #[error("in schema {text:?}: {source}")]
    Schema {
        text: String,
        source: RuleParseError,
    },
    #[error("in schema {text:?}: {source}")]
    Grounding {
        text: String,
        source: GroundingError,
    },
}

impl KnowledgeBaseFile {
    /// Builds the default theory: facts and ground defaults as written,
    /// then every schema grounded over the declared constants
    /// (lexicographic constant tuples), appended in schema order.
    pub fn build(&self) -> Result<DefaultTheory, KbError> {
        let constants: BTreeSet<String> = self.constants.iter().cloned().collect();
        let facts = self
            .facts
            .iter()
            .map(|text| {
                parse_formula(text).map_err(|source| KbError::Fact {
                    text: text.clone(),
                    source,
                })
            })
            .collect::<Result<TheoryBase, _>>()?;
        let mut defaults = self
            .defaults
            .iter()
            .map(|text| {
                DefaultRule::parse(text).map_err(|source| KbError::Default {
                    text: text.clone(),
                    source,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        for text in &self.schemas {
            let schema = RuleSchema::parse(text)
                .map_err(|source| KbError::Schema {
                    text: text.clone(),
                    source,
                })?
                .bind_constants(&constants);
            let grounded = schema
                .ground(&constants)
                .map_err(|source| KbError::Grounding {
                    text: text.clone(),
                    source,
                })?;
            defaults.extend(grounded);
        }
        Ok(DefaultTheory::new(defaults, facts))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::defaults::{all_extensions, is_singular};
    use crate::formula::theories_equivalent;

    #[test]
    fn builds_tweety_theory() {
        let raw = r#"{
            "constants": ["Tweety"],
            "facts": ["bird(Tweety)"],
            "schemas": [
                "bird(X) : !penguin(X) & fly(X) / fly(X)",
                "penguin(X) : bird(X) / bird(X)",
                "penguin(X) : !fly(X) / !fly(X)"
            ]
        }"#;
        let kb: KnowledgeBaseFile = serde_json::from_str(raw).unwrap();
        let theory = kb.build().unwrap();
        assert_eq!(theory.defaults.len(), 3);
        assert!(is_singular(&theory));
        let exts = all_extensions(&theory);
        let expected: TheoryBase = ["bird(Tweety)", "fly(Tweety)"]
            .iter()
            .map(|s| parse_formula(s).unwrap())
            .collect();
        assert!(theories_equivalent(exts[0].base(), &expected));
    }

    #[test]
    fn schema_errors_carry_context() {
        let kb = KnowledgeBaseFile {
            schemas: vec!["p(X) : q(X) / q(X)".into()],
            ..Default::default()
        };
        assert!(matches!(kb.build(), Err(KbError::Grounding { .. })));
        let kb = KnowledgeBaseFile {
            facts: vec!["(".into()],
            ..Default::default()
        };
        assert!(matches!(kb.build(), Err(KbError::Fact { .. })));
    }
}
