//! Super edge-magic labelings of small graphs.
//!
//! A graph with `p` vertices and `q` edges is super edge-magic when its
//! vertices and edges can be labelled bijectively with `1..=p+q`, vertices
//! taking `1..=p`, so that every edge's label plus its endpoint labels add up
//! to the same constant, the valence.
//!
//! The crate provides
//!
//! * [`graph`]: graphs, degree sequences and generators for cycles, two
//!   cycles sharing a vertex, and general cacti of cycles;
//! * [`format`]: edge-list and graph6 readers and writers;
//! * [`labeling`]: the extension of a vertex labeling with consecutive edge
//!   sums to a full labeling, certificate verification and valence arithmetic;
//! * [`obstruction`]: analytic non-existence rules;
//! * [`interval`] and [`solver`]: the valence interval, a pruned exhaustive
//!   search with a brute-force oracle, achieved valence sets and the
//!   perfectness test;
//! * [`corpus`]: seeded random graphs for property tests.

pub mod corpus;
pub mod error;
pub mod format;
pub mod graph;
pub mod interval;
pub mod labeling;
pub mod obstruction;
pub mod solver;

pub use error::{GraphError, LabelingError, ObstructionError, SolverError};
pub use format::{parse_graph, write_graph, GraphFormat};
pub use graph::{
    degseq_4_2_realizations, make_cactus, make_cycle, make_two_cycle, make_two_cycle_with_cycles, Attachment,
    CactusSpec, DegreeSequence, Graph,
};
pub use interval::{rearrangement_extremes, sem_interval, ValenceInterval};
pub use labeling::{
    edge_sums, extend_to_sem, is_extendable, valence_of, verify_sem, EdgeLabel, EdgeSumSet, SemLabeling,
    VerifyFailure, VertexLabeling,
};
pub use obstruction::{
    all_obstructions, check_degseq_4_2_even_order, check_even_degree_parity, check_valence_integrality,
    first_obstruction, theorem_valence_gap, ObstructionVerdict, Rule,
};
pub use solver::{
    is_perfect_sem, oracle_search, oracle_search_pinned, oracle_sem_set, oracle_sem_set_pinned, search_sem, sem_set,
    Perfection, Pin, SearchConfig, SearchOutcome, SearchPlan, SearchStats, SearchStatus, ValenceSet,
};
