//! Feature schema and class labels for behavior-log datasets.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Broad grouping of a behavioral feature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FeatureCategory {
    PlayerInformation,
    PlayerAction,
    SocialActivity,
}

/// Player class. `HeavyUser` only appears after refinement relabeling;
/// binary-mode datasets carry `Human` and `Bot` alone.
///
/// Declaration order fixes the canonical class index (`Human` = 0,
/// `Bot` = 1, `HeavyUser` = 2) used by confusion matrices and by the
/// lowest-index tie break in prediction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassLabel {
    Human,
    Bot,
    HeavyUser,
}

impl ClassLabel {
    pub const ALL: [ClassLabel; 3] = [ClassLabel::Human, ClassLabel::Bot, ClassLabel::HeavyUser];

    /// Canonical class index.
    pub fn index(self) -> usize {
        match self {
            ClassLabel::Human => 0,
            ClassLabel::Bot => 1,
            ClassLabel::HeavyUser => 2,
        }
    }

    pub fn from_index(index: usize) -> Option<ClassLabel> {
        Self::ALL.get(index).copied()
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ClassLabel::Human => "human",
            ClassLabel::Bot => "bot",
            ClassLabel::HeavyUser => "heavy_user",
        }
    }

    /// Case-insensitive parse of `human` / `bot` / `heavy_user`.
    pub fn parse(text: &str) -> Result<ClassLabel> {
        let lower = text.trim().to_lowercase();
        match lower.as_str() {
            "human" => Ok(ClassLabel::Human),
            "bot" => Ok(ClassLabel::Bot),
            "heavy_user" => Ok(ClassLabel::HeavyUser),
            _ => Err(Error::InvalidInput(alloc::format!(
                "unknown class label `{text}`"
            ))),
        }
    }
}

impl core::fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The 40 standard behavioral features, in column order.
const STANDARD_FEATURES: [(&str, FeatureCategory); 40] = {
    use FeatureCategory::*;
    [
        ("login_count", PlayerInformation),
        ("logout_count", PlayerInformation),
        ("playtime_total", PlayerInformation),
        ("playtime_per_day", PlayerInformation),
        ("avg_money", PlayerInformation),
        ("login_day_count", PlayerInformation),
        ("ip_count", PlayerInformation),
        ("max_level", PlayerInformation),
        ("collect_max_count", PlayerAction),
        ("sit_count", PlayerAction),
        ("sit_count_per_day", PlayerAction),
        ("sit_ratio", PlayerAction),
        ("exp_get_count", PlayerAction),
        ("exp_get_count_per_day", PlayerAction),
        ("exp_get_ratio", PlayerAction),
        ("item_get_count", PlayerAction),
        ("item_get_count_per_day", PlayerAction),
        ("item_get_ratio", PlayerAction),
        ("money_get_count", PlayerAction),
        ("money_get_count_per_day", PlayerAction),
        ("money_get_ratio", PlayerAction),
        ("abyss_get_count", PlayerAction),
        ("abyss_get_count_per_day", PlayerAction),
        ("abyss_get_ratio", PlayerAction),
        ("exp_repair_count", PlayerAction),
        ("exp_repair_count_per_day", PlayerAction),
        ("portal_usage_count", PlayerAction),
        ("portal_usage_count_per_day", PlayerAction),
        ("killed_count", PlayerAction),
        ("killed_count_per_day", PlayerAction),
        ("killed_by_player_count", PlayerAction),
        ("killed_by_monster_count", PlayerAction),
        ("teleport_count", PlayerAction),
        ("teleport_count_per_day", PlayerAction),
        ("reborn_count", PlayerAction),
        ("reborn_count_per_day", PlayerAction),
        ("party_time_ratio", SocialActivity),
        ("guild_act_count", SocialActivity),
        ("guild_join_count", SocialActivity),
        ("social_diversity", SocialActivity),
    ]
};

/// Ordered feature names plus their category tags.
///
/// Features whose name ends in `_ratio` are ratio-typed and constrained to
/// `[0, 1]`; every other feature is a non-negative count or rate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureSchema {
    names: Vec<String>,
    categories: Vec<FeatureCategory>,
}

impl FeatureSchema {
    /// Builds a schema, rejecting empty or duplicate names.
    pub fn new(names: Vec<String>, categories: Vec<FeatureCategory>) -> Result<FeatureSchema> {
        if names.is_empty() {
            return Err(Error::SchemaMismatch("schema has no features".to_string()));
        }
        if names.len() != categories.len() {
            return Err(Error::SchemaMismatch(alloc::format!(
                "{} names but {} categories",
                names.len(),
                categories.len()
            )));
        }
        let mut seen = BTreeSet::new();
        for name in &names {
            if name.is_empty() {
                return Err(Error::SchemaMismatch("empty feature name".to_string()));
            }
            if !seen.insert(name.clone()) {
                return Err(Error::SchemaMismatch(alloc::format!(
                    "duplicate feature name `{name}`"
                )));
            }
        }
        Ok(FeatureSchema { names, categories })
    }

    /// The standard 40-feature behavior-log schema.
    pub fn standard() -> FeatureSchema {
        FeatureSchema {
            names: STANDARD_FEATURES
                .iter()
                .map(|(n, _)| n.to_string())
                .collect(),
            categories: STANDARD_FEATURES.iter().map(|(_, c)| *c).collect(),
        }
    }

    /// Category for a standard feature name, if it is one of the 40.
    pub fn standard_category(name: &str) -> Option<FeatureCategory> {
        STANDARD_FEATURES
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, c)| *c)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn category(&self, index: usize) -> FeatureCategory {
        self.categories[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Ratio-typed features are constrained to `[0, 1]`.
    pub fn is_ratio(&self, index: usize) -> bool {
        self.names[index].ends_with("_ratio")
    }

    /// Returns the schema without `remove`, plus the kept column indices
    /// (in original order). Rejects unknown names and refuses to empty the
    /// schema.
    pub fn drop_features<S: AsRef<str>>(
        &self,
        remove: &[S],
    ) -> Result<(FeatureSchema, Vec<usize>)> {
        let mut drop = BTreeSet::new();
        for name in remove {
            let name = name.as_ref();
            let idx = self
                .index_of(name)
                .ok_or_else(|| Error::MissingFeature(name.to_string()))?;
            drop.insert(idx);
        }
        if drop.len() == self.len() {
            return Err(Error::InvalidConfig(
                "removing these features would empty the schema".to_string(),
            ));
        }
        let kept: Vec<usize> = (0..self.len()).filter(|i| !drop.contains(i)).collect();
        let schema = FeatureSchema {
            names: kept.iter().map(|&i| self.names[i].clone()).collect(),
            categories: kept.iter().map(|&i| self.categories[i]).collect(),
        };
        Ok((schema, kept))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn standard_schema_has_forty_features() {
        let schema = FeatureSchema::standard();
        assert_eq!(schema.len(), 40);
    }

    #[test]
    fn standard_schema_names_are_unique() {
        let schema = FeatureSchema::standard();
        let set: BTreeSet<_> = schema.names().iter().collect();
        assert_eq!(set.len(), 40);
    }

    #[test]
    fn standard_schema_contains_result_features() {
        // Names that the downstream analyses refer to by string.
        let schema = FeatureSchema::standard();
        for name in [
            "playtime_per_day",
            "item_get_count_per_day",
            "exp_get_count_per_day",
            "avg_money",
            "exp_get_ratio",
            "login_day_count",
            "login_count",
            "exp_get_count",
            "item_get_ratio",
            "teleport_count_per_day",
            "sit_count",
            "collect_max_count",
            "max_level",
        ] {
            assert!(schema.index_of(name).is_some(), "missing {name}");
        }
    }

    #[test]
    fn standard_schema_category_ranges() {
        let schema = FeatureSchema::standard();
        for i in 0..8 {
            assert_eq!(schema.category(i), FeatureCategory::PlayerInformation);
        }
        for i in 8..36 {
            assert_eq!(schema.category(i), FeatureCategory::PlayerAction);
        }
        for i in 36..40 {
            assert_eq!(schema.category(i), FeatureCategory::SocialActivity);
        }
    }

    #[test]
    fn ratio_detection_by_suffix() {
        let schema = FeatureSchema::standard();
        let ratio_names: Vec<&str> = (0..schema.len())
            .filter(|&i| schema.is_ratio(i))
            .map(|i| schema.name(i))
            .collect();
        assert_eq!(
            ratio_names,
            vec![
                "sit_ratio",
                "exp_get_ratio",
                "item_get_ratio",
                "money_get_ratio",
                "abyss_get_ratio",
                "party_time_ratio"
            ]
        );
    }

    #[test]
    fn rejects_duplicate_names() {
        let err = FeatureSchema::new(
            vec!["a".to_string(), "a".to_string()],
            vec![FeatureCategory::PlayerAction; 2],
        )
        .unwrap_err();
        assert!(matches!(err, Error::SchemaMismatch(_)));
    }

    #[test]
    fn drop_features_keeps_order_and_rejects_unknown() {
        let schema = FeatureSchema::standard();
        let (reduced, kept) = schema
            .drop_features(&["playtime_per_day", "sit_count"])
            .unwrap();
        assert_eq!(reduced.len(), 38);
        assert_eq!(kept.len(), 38);
        assert!(reduced.index_of("playtime_per_day").is_none());
        assert!(reduced.index_of("login_count").is_some());
        assert!(matches!(
            schema.drop_features(&["not_a_feature"]),
            Err(Error::MissingFeature(_))
        ));
    }

    #[test]
    fn label_parsing_is_case_insensitive() {
        assert_eq!(ClassLabel::parse("Human").unwrap(), ClassLabel::Human);
        assert_eq!(ClassLabel::parse("BOT").unwrap(), ClassLabel::Bot);
        assert_eq!(
            ClassLabel::parse("Heavy_User").unwrap(),
            ClassLabel::HeavyUser
        );
        assert!(ClassLabel::parse("wizard").is_err());
    }

    #[test]
    fn class_index_round_trip() {
        for label in ClassLabel::ALL {
            assert_eq!(ClassLabel::from_index(label.index()), Some(label));
        }
    }
}
