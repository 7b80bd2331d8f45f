//! Labeled dataset model: validation, filtering, splitting, rebalancing.
//!
//! Datasets are immutable values. Every operation returns a new dataset and
//! leaves its input untouched, so datasets can be shared freely across
//! concurrent readers.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::schema::{ClassLabel, FeatureSchema};

/// How `rebalance` equalizes class counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RebalanceMode {
    /// Duplicate minority records (with replacement) up to the majority count.
    Oversample,
    /// Subsample majority classes down to the minority count.
    Undersample,
}

/// One player's feature vector, aligned to a schema, with an optional label.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlayerRecord {
    pub player_id: String,
    pub features: Vec<f64>,
    pub label: Option<ClassLabel>,
}

impl PlayerRecord {
    pub fn new(
        player_id: impl Into<String>,
        features: Vec<f64>,
        label: Option<ClassLabel>,
    ) -> PlayerRecord {
        PlayerRecord {
            player_id: player_id.into(),
            features,
            label,
        }
    }
}

/// An ordered collection of validated records sharing one schema.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabeledDataset {
    schema: FeatureSchema,
    records: Vec<PlayerRecord>,
}

impl LabeledDataset {
    /// Validates and assembles a dataset: vector lengths must match the
    /// schema, ids must be unique, values must be finite and non-negative,
    /// and ratio-typed features must lie in `[0, 1]`.
    pub fn new(schema: FeatureSchema, records: Vec<PlayerRecord>) -> Result<LabeledDataset> {
        let mut seen = BTreeSet::new();
        for record in &records {
            if record.features.len() != schema.len() {
                return Err(Error::SchemaMismatch(alloc::format!(
                    "record `{}` has {} features, schema has {}",
                    record.player_id,
                    record.features.len(),
                    schema.len()
                )));
            }
            if !seen.insert(record.player_id.clone()) {
                return Err(Error::DuplicatePlayerId(record.player_id.clone()));
            }
            for (i, &value) in record.features.iter().enumerate() {
                if !value.is_finite() {
                    return Err(Error::InvalidValue {
                        id: record.player_id.clone(),
                        detail: alloc::format!("feature `{}` is not finite", schema.name(i)),
                    });
                }
                if value < 0.0 {
                    return Err(Error::InvalidValue {
                        id: record.player_id.clone(),
                        detail: alloc::format!(
                            "feature `{}` is negative ({value})",
                            schema.name(i)
                        ),
                    });
                }
                if schema.is_ratio(i) && value > 1.0 {
                    return Err(Error::InvalidValue {
                        id: record.player_id.clone(),
                        detail: alloc::format!(
                            "ratio feature `{}` out of range ({value})",
                            schema.name(i)
                        ),
                    });
                }
            }
        }
        Ok(LabeledDataset { schema, records })
    }

    pub fn schema(&self) -> &FeatureSchema {
        &self.schema
    }

    pub fn records(&self) -> &[PlayerRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// One feature column as a vector.
    pub fn feature_column(&self, index: usize) -> Vec<f64> {
        self.records.iter().map(|r| r.features[index]).collect()
    }

    /// Per-class record counts. Fails on the first unlabeled record.
    pub fn class_counts(&self) -> Result<BTreeMap<ClassLabel, usize>> {
        let mut counts = BTreeMap::new();
        for record in &self.records {
            let label = record
                .label
                .ok_or_else(|| Error::UnlabeledRecord(record.player_id.clone()))?;
            *counts.entry(label).or_insert(0) += 1;
        }
        Ok(counts)
    }

    /// Keeps records whose `max_level` is at least `min_level`.
    pub fn filter_min_level(&self, min_level: u32) -> Result<LabeledDataset> {
        let level_idx = self
            .schema
            .index_of("max_level")
            .ok_or_else(|| Error::MissingFeature("max_level".to_string()))?;
        let records = self
            .records
            .iter()
            .filter(|r| r.features[level_idx] >= f64::from(min_level))
            .cloned()
            .collect();
        Ok(LabeledDataset {
            schema: self.schema.clone(),
            records,
        })
    }

    /// Splits into train/validation parts, preserving per-class proportions
    /// within rounding. The partition is exact (no overlap, no loss) and
    /// deterministic per seed. Each class keeps at least one record on each
    /// side, so every class needs two or more records.
    pub fn stratified_split(
        &self,
        train_fraction: f64,
        seed: u64,
    ) -> Result<(LabeledDataset, LabeledDataset)> {
        if !(train_fraction > 0.0 && train_fraction < 1.0) {
            return Err(Error::InvalidConfig(alloc::format!(
                "train_fraction must be in (0, 1), got {train_fraction}"
            )));
        }
        let mut by_class: BTreeMap<ClassLabel, Vec<usize>> = BTreeMap::new();
        for (i, record) in self.records.iter().enumerate() {
            let label = record
                .label
                .ok_or_else(|| Error::UnlabeledRecord(record.player_id.clone()))?;
            by_class.entry(label).or_default().push(i);
        }
        for (&label, members) in &by_class {
            if members.len() < 2 {
                return Err(Error::ClassTooSmall {
                    label,
                    count: members.len(),
                    required: 2,
                });
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut train_idx = Vec::new();
        let mut val_idx = Vec::new();
        for members in by_class.values() {
            let mut shuffled = members.clone();
            shuffled.shuffle(&mut rng);
            let n = shuffled.len();
            let want = (train_fraction * n as f64 + 0.5).floor() as usize;
            let n_train = want.clamp(1, n - 1);
            train_idx.extend_from_slice(&shuffled[..n_train]);
            val_idx.extend_from_slice(&shuffled[n_train..]);
        }
        train_idx.sort_unstable();
        val_idx.sort_unstable();
        let pick = |idx: &[usize]| LabeledDataset {
            schema: self.schema.clone(),
            records: idx.iter().map(|&i| self.records[i].clone()).collect(),
        };
        Ok((pick(&train_idx), pick(&val_idx)))
    }

    /// Equalizes class counts by duplicating minority records (oversample)
    /// or subsampling majority records (undersample). Deterministic per
    /// seed. Oversampled duplicates get a `__dup<n>` id suffix to keep ids
    /// unique.
    pub fn rebalance(&self, mode: RebalanceMode, seed: u64) -> Result<LabeledDataset> {
        let counts = self.class_counts()?;
        if counts.len() < 2 {
            return Err(Error::InvalidInput(
                "rebalance requires at least two non-empty classes".to_string(),
            ));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut by_class: BTreeMap<ClassLabel, Vec<usize>> = BTreeMap::new();
        for (i, record) in self.records.iter().enumerate() {
            by_class.entry(record.label.unwrap()).or_default().push(i);
        }
        match mode {
            RebalanceMode::Oversample => {
                let target = *counts.values().max().unwrap();
                let mut records = self.records.clone();
                for members in by_class.values() {
                    let mut dup_serial = 0usize;
                    for _ in members.len()..target {
                        let pick = members[rng.random_range(0..members.len())];
                        let mut dup = self.records[pick].clone();
                        dup_serial += 1;
                        dup.player_id =
                            alloc::format!("{}__dup{}", dup.player_id, dup_serial);
                        records.push(dup);
                    }
                }
                LabeledDataset::new(self.schema.clone(), records)
            }
            RebalanceMode::Undersample => {
                let target = *counts.values().min().unwrap();
                let mut kept = Vec::new();
                for members in by_class.values() {
                    if members.len() == target {
                        kept.extend_from_slice(members);
                    } else {
                        let chosen =
                            rand::seq::index::sample(&mut rng, members.len(), target);
                        kept.extend(chosen.iter().map(|j| members[j]));
                    }
                }
                kept.sort_unstable();
                let records = kept.iter().map(|&i| self.records[i].clone()).collect();
                Ok(LabeledDataset {
                    schema: self.schema.clone(),
                    records,
                })
            }
        }
    }

    /// Rewrites `HeavyUser` labels to `Human` for binary-mode experiments.
    pub fn collapse_heavy_users(&self) -> LabeledDataset {
        let records = self
            .records
            .iter()
            .map(|r| {
                let mut r = r.clone();
                if r.label == Some(ClassLabel::HeavyUser) {
                    r.label = Some(ClassLabel::Human);
                }
                r
            })
            .collect();
        LabeledDataset {
            schema: self.schema.clone(),
            records,
        }
    }

    /// Projects away the named features, keeping everything else in order.
    pub fn drop_features<S: AsRef<str>>(&self, remove: &[S]) -> Result<LabeledDataset> {
        let (schema, kept) = self.schema.drop_features(remove)?;
        let records = self
            .records
            .iter()
            .map(|r| PlayerRecord {
                player_id: r.player_id.clone(),
                features: kept.iter().map(|&i| r.features[i]).collect(),
                label: r.label,
            })
            .collect();
        Ok(LabeledDataset { schema, records })
    }

    /// Subset by record indices (clones the selected records).
    pub fn subset(&self, indices: &[usize]) -> LabeledDataset {
        LabeledDataset {
            schema: self.schema.clone(),
            records: indices.iter().map(|&i| self.records[i].clone()).collect(),
        }
    }
}
