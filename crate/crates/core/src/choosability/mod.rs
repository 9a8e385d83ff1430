//! List coloring tools: blocks and Gallai trees, the degree-list theorem as
//! a checked guarantee, exhaustive list coloring, and distinct
//! representatives (Hall's theorem).
//!
//! Lists are [`ColorSet`](crate::facial_coloring::ColorSet)s, so colors are
//! limited to `1..=127`.

mod blocks;
mod hall;
mod list;

use thiserror::Error;

pub use blocks::{blocks, is_gallai_tree, Block, BlockDecomposition};
pub use hall::{hall_by_bounds, sdr, Sdr};
pub use list::{degree_feasible_colorable, list_color, DegreeChoice, Guarantee, ListOutcome};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChoosabilityError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("expected {expected} lists, found {found}")]
    ListCount { expected: usize, found: usize },
    #[error("list of vertex {vertex} has {size} colors but its degree is {degree}")]
    ListTooShort { vertex: usize, size: usize, degree: usize },
    #[error("the degree-list theorem promises a coloring but the search found none")]
    GuaranteeViolated,
}
