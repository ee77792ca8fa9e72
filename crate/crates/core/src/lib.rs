//! Exact computation of independent coalition partitions of small graphs.
//!
//! * [`graph`]: bit-mask graphs on at most 64 vertices.
//! * [`graph6`]: the graph6 interchange format.
//! * [`invariants`]: α, γᵢ, χ and the idomatic number.
//! * [`coalition`]: ic-partition verification and the exact IC(G) and C(G) solvers.
//! * [`families`]: named graph families, closed-form values, witness partitions,
//!   structural classifiers, and small-graph and tree enumeration.
//! * [`theorems`]: executable checks of the structural results over enumerated graphs.

pub mod coalition;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod par;
pub mod theorems;

pub use coalition::{
    coalition_number, forms_ic, ic_number, partner_counts, verify_c_partition, verify_ic_partition,
    ClassVerdict, CoalitionError, IcResult, Partition, PartitionError, VerifyReport,
    ViolationReason,
};
pub use families::FamilySpec;
pub use graph::{are_isomorphic, EdgeSetKind, Graph, GraphError, VertexSet, MAX_ORDER};
pub use graph6::{encode_graph6, parse_graph6, Graph6Error};
pub use invariants::InvariantReport;
pub use par::Parallelism;
