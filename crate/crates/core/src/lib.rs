//! Minimal feedback vertex sets in tournaments.
//!
//! * [`Tournament`] with structural queries: acyclicity of vertex sets,
//!   topological order, strong factorisation, Hamiltonian paths.
//! * [`ScoreSequence`] with Landau's conditions and realisation.
//! * [`generators`] for every named family (`ST_7`, `RT_5`, `pq(T)`, the
//!   three-FVS family `U_n`, sums, seeded random tournaments).
//! * [`enumerate`]: a polynomial-delay, polynomial-space enumerator of
//!   maximal acyclic vertex sets, and on top of it counting, a
//!   minimum-FVS solver and Banks winners.
//! * [`bounds`]: exhaustive and constructive checks of the extremal bounds.
//!
//! Vertices are 0-based indices in the API; all text I/O uses 1-based labels.
//!
//! ```
//! use tourfvs_core::{enumerate, generators};
//!
//! let t = generators::st7();
//! assert_eq!(enumerate::enumerate_minimal_fvs(&t).count(), 21);
//! assert_eq!(enumerate::min_fvs(&t).len(), 4);
//! ```

pub mod bounds;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod generators;
pub mod oracle;
pub mod score;
pub mod tournament;
pub mod vertex_set;

pub use enumerate::{
    banks_winners, count_minimal_fvs, delay_profile, enumerate_maximal_acyclic, enumerate_minimal_fvs, min_fvs,
    DelayProfile, EnumNode, EnumOptions, LexOrder, MaximalAcyclicSets, TraversalStats,
};
pub use error::{Error, Result};
pub use format::{parse_tourn, to_tourn, ParseError};
pub use generators::GeneratorSpec;
pub use score::ScoreSequence;
pub use tournament::{Factorization, Tournament};
pub use vertex_set::VertexSet;
