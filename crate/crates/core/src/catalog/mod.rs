//! Named graphs, expected invariant values and the realizability builder.

pub mod expected;
pub mod families;
pub mod realize;
pub mod verify;

pub use expected::{catalog_expected, ExpectedTriple};
pub use realize::{realize, realize_spec};
pub use verify::{verify_catalog, verify_entries, Scope, Status, VerifyReport};
