//! Core library for metaphor-aware language-game self-play.
//!
//! Provides deterministic engines for the *Undercover* and *Adversarial
//! Taboo* games, a hypothesis-based metaphor reasoner, the per-turn agent
//! pipeline with Naive/CoT/CoMet policies, a self-improving metaphor
//! experience pool, a provider-agnostic LLM gateway with record/replay,
//! and the evaluation metric suite.

pub mod agent;
pub mod engine;
pub mod gateway;
pub mod metrics;
pub mod pool;
pub mod prompts;
pub mod reasoner;
pub mod runner;

pub use agent::PolicyKind;
pub use engine::{GamePhase, Observation, PlayerId, Role, UndercoverConfig, WordPair};
pub use gateway::{Backend, CompletionRequest, Purpose};
pub use metrics::{GameKind, RoleSide, Winner};
pub use pool::{ExperiencePool, ExperienceRecord, PoolConfig};
pub use reasoner::{Hypothesis, HypothesisParams, MetaphorCategory, SemanticJudge};
