//! Bot detection on tabular behavior logs, with explanations.
//!
//! This crate holds the algorithmic half of the `botlens` toolkit:
//!
//! - a 40-feature behavioral [`FeatureSchema`] and the [`LabeledDataset`]
//!   model with filtering, stratified splitting, and class rebalancing;
//! - a seeded synthetic data generator ([`synth`]) with known ground-truth
//!   informative features, standing in for proprietary game logs;
//! - from-scratch classifiers: a random forest ([`forest`]) and a
//!   three-hidden-layer perceptron ([`mlp`]), both exposing calibrated
//!   class probabilities through the [`Classifier`] trait;
//! - four explanation methods ([`explain`]): impurity feature importance,
//!   permutation importance, LIME with submodular-pick instance selection,
//!   and kernel-based Shapley value estimation;
//! - faithfulness and refinement experiments ([`refine`]): feature-deletion
//!   retraining, false-positive mining, and heavy-user class splitting.
//!
//! Everything is deterministic per seed. No IO lives here; CSV, JSON, and
//! SVG handling belong to the companion `botlens` CLI crate. The crate is
//! `no_std`-compatible (with `alloc`) when built without the default `std`
//! feature.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod dataset;
pub mod error;
pub mod explain;
pub mod forest;
pub mod linalg;
pub mod metrics;
pub mod mlp;
pub mod model;
pub mod refine;
pub mod schema;
pub mod synth;
pub mod tree;

pub use dataset::{LabeledDataset, PlayerRecord, RebalanceMode};
pub use error::{Error, Result};
pub use explain::{FeatureAttribution, GlobalImportance};
pub use forest::{ForestHyperparams, RandomForestModel};
pub use metrics::EvalMetrics;
pub use mlp::{MlpConfig, MlpModel};
pub use model::{Classifier, ModelSetup, TrainedModel};
pub use schema::{ClassLabel, FeatureCategory, FeatureSchema};
pub use synth::{ArchetypeParams, GeneratorConfig};
