//! Default-logic structured argumentation engine.
//!
//! The crate is organised around five layers, each building on the one
//! below it:
//!
//! * [`formula`] — propositional language over named ground atoms:
//!   parsing, printing, semantic entailment, consistency and
//!   theory-equivalence queries.
//! * [`defaults`] — default rules `pre : just / cons`, default theories
//!   `(D, W)`, enumeration of Reiter extensions, singularity checks and
//!   the unique-extension function.
//! * [`argument`] — default arguments `⟨Wp, Dp, Wc, Dc⟩` with
//!   explicit/implicit premises and claims, their profiles (validity,
//!   minimality, consistency, ...) and equivalence notions.
//! * [`relations`] — the support and attack relations that can hold
//!   between two default arguments, aggregated into a
//!   [`relations::RelationProfile`].
//! * [`argmap`] — argument maps, text-to-formula translation tables,
//!   premise-atomic instantiation, arc-label validation and
//!   knowledge-base-restricted argument spaces.
//!
//! All values are immutable after construction and all operations are
//! pure, so everything here is safe to share across threads. With the
//! `parallel` feature (on by default) the expensive enumerations run on
//! rayon; disabling it yields a fully sequential build with identical
//! results.

pub mod argmap;
pub mod argument;
pub mod defaults;
pub mod exec;
pub mod formula;
pub mod relations;

pub use argument::{ArgumentError, ArgumentProfile, DefaultArgument};
pub use defaults::{DefaultRule, DefaultTheory, Extension, RuleSchema, SingularityError};
pub use formula::{Atom, Formula, ParseError, TheoryBase};
pub use relations::RelationProfile;
